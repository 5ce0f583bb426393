//! Reduced fractions of multivariate polynomials.
//!
//! Canonical form: numerator and denominator coprime, denominator monic in
//! graded-lex order, zero stored as 0/1.

use std::fmt;

use num::{BigRational, One, Zero};

use crate::poly::{gcd, Poly};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Frac {
    num: Poly,
    den: Poly,
}

impl Frac {
    pub fn new(num: Poly, den: Poly) -> Frac {
        assert!(!den.is_zero(), "zero denominator");
        let mut f = Frac { num, den };
        f.reduce();
        f
    }

    pub fn from_poly(num: Poly) -> Frac {
        let n = num.nvars();
        Frac {
            num,
            den: Poly::one(n),
        }
    }

    pub fn zero(nvars: usize) -> Frac {
        Frac::from_poly(Poly::zero(nvars))
    }

    pub fn one(nvars: usize) -> Frac {
        Frac::from_poly(Poly::one(nvars))
    }

    pub fn constant(nvars: usize, c: BigRational) -> Frac {
        Frac::from_poly(Poly::constant(nvars, c))
    }

    pub fn var(i: usize, nvars: usize) -> Frac {
        Frac::from_poly(Poly::var(i, nvars))
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn nvars(&self) -> usize {
        self.num.nvars()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.den.as_constant().map(|c| c.is_one()).unwrap_or(false)
            && self.num.as_constant().map(|c| c.is_one()).unwrap_or(false)
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.as_constant().map(|c| c.is_one()).unwrap_or(false)
    }

    fn reduce(&mut self) {
        if self.num.is_zero() {
            self.den = Poly::one(self.num.nvars());
            return;
        }
        let g = gcd(&self.num, &self.den);
        if !g.is_constant() {
            self.num = self.num.exact_div(&g).expect("gcd divides num");
            self.den = self.den.exact_div(&g).expect("gcd divides den");
        }
        // normalize: monic denominator
        let lc = self.den.leading().unwrap().1.clone();
        if !lc.is_one() {
            let inv = BigRational::one() / lc;
            self.num = self.num.mul_coeff(&inv);
            self.den = self.den.mul_coeff(&inv);
        }
    }

    pub fn add(&self, other: &Frac) -> Frac {
        // a/b + c/d = (ad + cb)/(bd), with a gcd(b, d) shortcut
        let g = gcd(&self.den, &other.den);
        let (b1, d1) = if g.is_constant() {
            (self.den.clone(), other.den.clone())
        } else {
            (
                self.den.exact_div(&g).unwrap(),
                other.den.exact_div(&g).unwrap(),
            )
        };
        let num = self.num.mul(&d1).add(&other.num.mul(&b1));
        let den = self.den.mul(&d1);
        Frac::new(num, den)
    }

    pub fn neg(&self) -> Frac {
        Frac {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn sub(&self, other: &Frac) -> Frac {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Frac) -> Frac {
        // cross-reduce before multiplying
        let g1 = gcd(&self.num, &other.den);
        let g2 = gcd(&other.num, &self.den);
        let n1 = self.num.exact_div(&g1).unwrap();
        let d2 = other.den.exact_div(&g1).unwrap();
        let n2 = other.num.exact_div(&g2).unwrap();
        let d1 = self.den.exact_div(&g2).unwrap();
        Frac::new(n1.mul(&n2), d1.mul(&d2))
    }

    pub fn inv(&self) -> Option<Frac> {
        if self.is_zero() {
            return None;
        }
        Some(Frac::new(self.den.clone(), self.num.clone()))
    }

    pub fn div(&self, other: &Frac) -> Option<Frac> {
        Some(self.mul(&other.inv()?))
    }

    pub fn pow(&self, e: i64) -> Option<Frac> {
        if e == 0 {
            return Some(Frac::one(self.nvars()));
        }
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut acc = Frac::one(self.nvars());
        let mut b = base;
        let mut k = e.unsigned_abs();
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&b);
            }
            k >>= 1;
            if k > 0 {
                b = b.mul(&b);
            }
        }
        Some(acc)
    }

    pub fn eval_point(&self, point: &[BigRational]) -> Option<BigRational> {
        let d = self.den.eval_point(point);
        if d.is_zero() {
            return None;
        }
        Some(self.num.eval_point(point) / d)
    }
}

/// Substitutes fraction values for the variables of a polynomial.
///
/// Uses one common denominator so only a single final reduction is needed.
pub fn subst_poly(p: &Poly, vals: &[Frac]) -> Frac {
    let nvars = vals
        .first()
        .map(|f| f.nvars())
        .unwrap_or_else(|| p.nvars());
    if p.is_zero() {
        return Frac::zero(nvars);
    }
    let mut maxdeg = vec![0u16; p.nvars()];
    for (m, _) in p.terms() {
        for (i, &e) in m.0.iter().enumerate() {
            if e > maxdeg[i] {
                maxdeg[i] = e;
            }
        }
    }
    // power tables for numerators and denominators
    let mut num_pows: Vec<Vec<Poly>> = Vec::with_capacity(vals.len());
    let mut den_pows: Vec<Vec<Poly>> = Vec::with_capacity(vals.len());
    for (i, v) in vals.iter().enumerate() {
        let d = maxdeg.get(i).copied().unwrap_or(0) as usize;
        let mut np = Vec::with_capacity(d + 1);
        let mut dp = Vec::with_capacity(d + 1);
        np.push(Poly::one(nvars));
        dp.push(Poly::one(nvars));
        for k in 1..=d {
            np.push(np[k - 1].mul(v.num()));
            dp.push(dp[k - 1].mul(v.den()));
        }
        num_pows.push(np);
        den_pows.push(dp);
    }
    let full_den: Poly = (0..vals.len()).fold(Poly::one(nvars), |acc, i| {
        acc.mul(&den_pows[i][maxdeg.get(i).copied().unwrap_or(0) as usize])
    });
    let mut num_acc = Poly::zero(nvars);
    for (m, c) in p.terms() {
        let mut t = Poly::constant(nvars, c.clone());
        for (i, &e) in m.0.iter().enumerate() {
            t = t.mul(&num_pows[i][e as usize]);
            // multiply by the denominators *not* used by this term
            let rest = maxdeg[i] - e;
            t = t.mul(&den_pows[i][rest as usize]);
        }
        num_acc = num_acc.add(&t);
    }
    Frac::new(num_acc, full_den)
}

impl fmt::Display for Frac {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_polynomial() {
            return write!(f, "{}", self.num);
        }
        let num_s = self.num.to_string();
        let den_s = self.den.to_string();
        let wrap = |s: &str| {
            if s.contains(' ') {
                format!("({})", s)
            } else {
                s.to_string()
            }
        };
        write!(f, "{}/{}", wrap(&num_s), wrap(&den_s))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::FromPrimitive;

    fn q(n: i64) -> BigRational {
        BigRational::from_i64(n).unwrap()
    }

    fn x() -> Frac {
        Frac::var(0, 2)
    }
    fn y() -> Frac {
        Frac::var(1, 2)
    }

    #[test]
    fn field_identities() {
        let a = x().add(&y()); // x+y
        let b = x().sub(&y());
        let prod = a.mul(&b); // x^2-y^2
        let back = prod.div(&a).unwrap();
        assert_eq!(back, b);
        assert!(a.sub(&a).is_zero());
    }

    #[test]
    fn reduction_is_canonical() {
        // (x^2-y^2)/(x+y) reduces to x-y with monic denominator 1
        let num = Frac::from_poly(x().num().mul(x().num()).sub(&y().num().mul(y().num())));
        let den = x().add(&y());
        let r = num.div(&den).unwrap();
        assert!(r.is_polynomial());
        assert_eq!(r, x().sub(&y()));
    }

    #[test]
    fn denominator_monic() {
        // 1/(2x) has denominator x with adjusted numerator 1/2
        let r = Frac::one(2).div(&x().mul(&Frac::constant(2, q(2)))).unwrap();
        assert_eq!(r.den(), x().num());
        assert_eq!(r.num().as_constant().unwrap(), BigRational::new(1.into(), 2.into()));
    }

    #[test]
    fn substitution_common_denominator() {
        // p(x, y) = x*y + 1, substitute x -> 1/y keeps exactness
        let p = Poly::var(0, 2).mul(&Poly::var(1, 2)).add(&Poly::one(2));
        let vals = vec![Frac::one(2).div(&y()).unwrap(), y()];
        let r = subst_poly(&p, &vals);
        assert_eq!(r, Frac::constant(2, q(2)));
    }

    #[test]
    fn pow_negative() {
        let r = x().pow(-2).unwrap();
        assert_eq!(r.mul(&x()).mul(&x()), Frac::one(2));
    }
}
