//! Dense-exponent sparse multivariate polynomials over the rationals.
//!
//! Monomials are ordered graded-lexicographically (total degree first, then
//! the exponent of the earliest variable). The leading term of a nonzero
//! polynomial is the graded-lex maximal one.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num::{BigRational, One, Signed, Zero};

/// Exponent vector of a monomial. All monomials of one polynomial share the
/// same length.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Mono(pub Vec<u16>);

impl Mono {
    pub fn unit(nvars: usize) -> Self {
        Mono(vec![0; nvars])
    }

    pub fn var(i: usize, nvars: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Mono(e)
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn mul(&self, other: &Mono) -> Mono {
        Mono(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a.checked_add(*b).expect("exponent overflow"))
                .collect(),
        )
    }

    /// Componentwise quotient, `None` if any exponent would go negative.
    pub fn try_div(&self, other: &Mono) -> Option<Mono> {
        let mut out = Vec::with_capacity(self.0.len());
        for (a, b) in self.0.iter().zip(&other.0) {
            if a < b {
                return None;
            }
            out.push(a - b);
        }
        Some(Mono(out))
    }

    pub fn is_unit(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Mono {
    fn cmp(&self, other: &Self) -> Ordering {
        match self.total_degree().cmp(&other.total_degree()) {
            Ordering::Equal => self.0.cmp(&other.0),
            ord => ord,
        }
    }
}

/// Sparse multivariate polynomial with `BigRational` coefficients.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Poly {
    nvars: usize,
    terms: BTreeMap<Mono, BigRational>,
}

impl Poly {
    pub fn zero(nvars: usize) -> Self {
        Poly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: BigRational) -> Self {
        let mut p = Poly::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(Mono::unit(nvars), c);
        }
        p
    }

    pub fn one(nvars: usize) -> Self {
        Poly::constant(nvars, BigRational::one())
    }

    pub fn var(i: usize, nvars: usize) -> Self {
        assert!(i < nvars, "variable index out of range");
        let mut p = Poly::zero(nvars);
        p.terms.insert(Mono::var(i, nvars), BigRational::one());
        p
    }

    pub fn monomial(nvars: usize, mono: Mono, c: BigRational) -> Self {
        assert_eq!(mono.0.len(), nvars);
        let mut p = Poly::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(mono, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms.keys().next().unwrap().is_unit())
    }

    pub fn as_constant(&self) -> Option<BigRational> {
        if self.is_zero() {
            return Some(BigRational::zero());
        }
        if self.is_constant() {
            return Some(self.terms.values().next().unwrap().clone());
        }
        None
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &BigRational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Total degree; -1 for the zero polynomial.
    pub fn total_degree(&self) -> i64 {
        self.terms
            .keys()
            .map(|m| m.total_degree() as i64)
            .max()
            .unwrap_or(-1)
    }

    pub fn degree_in(&self, v: usize) -> i64 {
        self.terms
            .keys()
            .map(|m| m.0[v] as i64)
            .max()
            .unwrap_or(-1)
    }

    /// Graded-lex leading (monomial, coefficient).
    pub fn leading(&self) -> Option<(&Mono, &BigRational)> {
        self.terms.iter().next_back()
    }

    fn insert_add(&mut self, mono: Mono, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(mono) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        assert_eq!(self.nvars, other.nvars);
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.insert_add(m.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Poly {
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = -c.clone();
        }
        out
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        assert_eq!(self.nvars, other.nvars);
        let mut out = Poly::zero(self.nvars);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.insert_add(ma.mul(mb), ca * cb);
            }
        }
        out
    }

    pub fn mul_coeff(&self, c: &BigRational) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.nvars);
        }
        let mut out = self.clone();
        for v in out.terms.values_mut() {
            *v = &*v * c;
        }
        out
    }

    pub fn mul_mono(&self, m: &Mono) -> Poly {
        let mut out = Poly::zero(self.nvars);
        for (ma, ca) in &self.terms {
            out.terms.insert(ma.mul(m), ca.clone());
        }
        out
    }

    pub fn pow(&self, mut e: u32) -> Poly {
        let mut base = self.clone();
        let mut acc = Poly::one(self.nvars);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Exact division; `None` if `d` does not divide `self`.
    pub fn exact_div(&self, d: &Poly) -> Option<Poly> {
        assert_eq!(self.nvars, d.nvars);
        assert!(!d.is_zero(), "division by zero polynomial");
        if self.is_zero() {
            return Some(Poly::zero(self.nvars));
        }
        if let Some(c) = d.as_constant() {
            return Some(self.mul_coeff(&(BigRational::one() / c)));
        }
        let (dm, dc) = d.leading().unwrap();
        let dm = dm.clone();
        let dc = dc.clone();
        let mut rem = self.clone();
        let mut quot = Poly::zero(self.nvars);
        while !rem.is_zero() {
            let (rm, rc) = rem.leading().unwrap();
            let qm = rm.try_div(&dm)?;
            let qc = rc / &dc;
            let t = Poly::monomial(self.nvars, qm, qc);
            rem = rem.sub(&t.mul(d));
            quot = quot.add(&t);
        }
        Some(quot)
    }

    /// Divides out the largest common monomial factor, returning it.
    pub fn extract_monomial_content(&mut self) -> Mono {
        if self.is_zero() {
            return Mono::unit(self.nvars);
        }
        let mut min = self.terms.keys().next().unwrap().0.clone();
        for m in self.terms.keys() {
            for (a, b) in min.iter_mut().zip(&m.0) {
                if *b < *a {
                    *a = *b;
                }
            }
        }
        let content = Mono(min);
        if !content.is_unit() {
            let old = std::mem::take(&mut self.terms);
            for (m, c) in old {
                self.terms.insert(m.try_div(&content).unwrap(), c);
            }
        }
        content
    }

    /// Scales so the graded-lex leading coefficient is one.
    pub fn monic(&self) -> Poly {
        match self.leading() {
            None => self.clone(),
            Some((_, c)) => {
                let inv = BigRational::one() / c.clone();
                self.mul_coeff(&inv)
            }
        }
    }

    /// Substitutes `value` for variable `v`, keeping the ambient variable set.
    pub fn eval_var(&self, v: usize, value: &BigRational) -> Poly {
        let mut out = Poly::zero(self.nvars);
        for (m, c) in &self.terms {
            let e = m.0[v];
            let mut m2 = m.clone();
            m2.0[v] = 0;
            let mut coeff = c.clone();
            for _ in 0..e {
                coeff = &coeff * value;
            }
            out.insert_add(m2, coeff);
        }
        out
    }

    /// Full evaluation at a rational point.
    pub fn eval_point(&self, point: &[BigRational]) -> BigRational {
        assert_eq!(point.len(), self.nvars);
        let mut acc = BigRational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.0.iter().enumerate() {
                for _ in 0..e {
                    t = &t * &point[i];
                }
            }
            acc += t;
        }
        acc
    }

    /// View as univariate in `v` with polynomial coefficients (degree -> coeff).
    fn coeffs_in(&self, v: usize) -> BTreeMap<u16, Poly> {
        let mut out: BTreeMap<u16, Poly> = BTreeMap::new();
        for (m, c) in &self.terms {
            let e = m.0[v];
            let mut m2 = m.clone();
            m2.0[v] = 0;
            out.entry(e)
                .or_insert_with(|| Poly::zero(self.nvars))
                .insert_add(m2, c.clone());
        }
        out
    }

    fn from_coeffs_in(nvars: usize, v: usize, coeffs: &BTreeMap<u16, Poly>) -> Poly {
        let mut out = Poly::zero(nvars);
        for (e, p) in coeffs {
            for (m, c) in &p.terms {
                let mut m2 = m.clone();
                m2.0[v] += e;
                out.insert_add(m2, c.clone());
            }
        }
        out
    }

    fn vars_present(&self) -> Vec<usize> {
        let mut present = vec![false; self.nvars];
        for m in self.terms.keys() {
            for (i, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    present[i] = true;
                }
            }
        }
        (0..self.nvars).filter(|&i| present[i]).collect()
    }
}

/// Pseudo-remainder of `f` by `g` in variable `v` (both nonzero in `v`).
fn pseudo_rem(f: &Poly, g: &Poly, v: usize) -> Poly {
    let nvars = f.nvars;
    let mut fc = f.coeffs_in(v);
    let gc = g.coeffs_in(v);
    let dg = *gc.keys().next_back().unwrap();
    let lg = gc[&dg].clone();
    loop {
        let df = match fc.keys().next_back() {
            None => break,
            Some(&d) => d,
        };
        if df < dg {
            break;
        }
        let lf = fc[&df].clone();
        // f := lg*f - lf * x^(df-dg) * g
        let mut next: BTreeMap<u16, Poly> = BTreeMap::new();
        for (&e, p) in &fc {
            if e == df {
                continue;
            }
            next.insert(e, p.mul(&lg));
        }
        for (&e, p) in &gc {
            if e == dg {
                continue;
            }
            let shifted = e + (df - dg);
            let t = p.mul(&lf);
            match next.entry(shifted) {
                std::collections::btree_map::Entry::Vacant(en) => {
                    en.insert(t.neg());
                }
                std::collections::btree_map::Entry::Occupied(mut en) => {
                    let s = en.get().sub(&t);
                    if s.is_zero() {
                        en.remove();
                    } else {
                        *en.get_mut() = s;
                    }
                }
            }
        }
        next.retain(|_, p| !p.is_zero());
        fc = next;
    }
    Poly::from_coeffs_in(nvars, v, &fc)
}

/// GCD, normalized so the leading coefficient is one.
pub fn gcd(a: &Poly, b: &Poly) -> Poly {
    assert_eq!(a.nvars, b.nvars);
    if a.is_zero() {
        return b.monic();
    }
    if b.is_zero() {
        return a.monic();
    }
    let mut pa = a.clone();
    let mut pb = b.clone();
    let ma = pa.extract_monomial_content();
    let mb = pb.extract_monomial_content();
    let mg = Mono(ma.0.iter().zip(&mb.0).map(|(x, y)| *x.min(y)).collect());
    let core = gcd_content_prs(&pa, &pb);
    core.mul_mono(&mg).monic()
}

fn gcd_content_prs(a: &Poly, b: &Poly) -> Poly {
    if a.is_constant() || b.is_constant() {
        return Poly::one(a.nvars);
    }
    // pick the variable minimizing the larger of the two degrees
    let vars_a = a.vars_present();
    let vars_b = b.vars_present();
    let common: Vec<usize> = vars_a.iter().copied().filter(|v| vars_b.contains(v)).collect();
    if common.is_empty() {
        // no shared variable: gcd is the gcd of the contents, which divides
        // constants in the PRS sense only through coefficient contents
        return Poly::one(a.nvars);
    }
    let v = *common
        .iter()
        .min_by_key(|&&v| a.degree_in(v).max(b.degree_in(v)))
        .unwrap();

    let ac = a.coeffs_in(v);
    let bc = b.coeffs_in(v);
    let cont_a = poly_list_gcd(ac.values());
    let cont_b = poly_list_gcd(bc.values());
    let prim_a = a.exact_div(&cont_a).expect("content divides");
    let prim_b = b.exact_div(&cont_b).expect("content divides");
    let cont_g = gcd(&cont_a, &cont_b);

    let (mut f, mut g) = if prim_a.degree_in(v) >= prim_b.degree_in(v) {
        (prim_a, prim_b)
    } else {
        (prim_b, prim_a)
    };
    loop {
        let r = pseudo_rem(&f, &g, v);
        if r.is_zero() {
            break;
        }
        let rc = poly_list_gcd(r.coeffs_in(v).values());
        let rp = r.exact_div(&rc).expect("content divides");
        f = g;
        g = rp;
        if g.degree_in(v) <= 0 {
            // primitive and degree 0 in v: coprime in v
            return cont_g;
        }
    }
    // g is the primitive gcd of the primitive parts
    let gc = poly_list_gcd(g.coeffs_in(v).values());
    let gp = g.exact_div(&gc).expect("content divides");
    cont_g.mul(&gp)
}

fn poly_list_gcd<'a>(mut it: impl Iterator<Item = &'a Poly>) -> Poly {
    let first = it.next().expect("nonempty").clone();
    let mut acc = first;
    for p in it {
        if acc.is_constant() && !acc.is_zero() {
            break;
        }
        acc = gcd(&acc, p);
    }
    acc.monic()
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let names = super::scalar::var_names(self.nvars);
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mut factors: Vec<String> = Vec::new();
            if !abs.is_one() || m.is_unit() {
                factors.push(abs.to_string());
            }
            for (i, &e) in m.0.iter().enumerate() {
                if e == 1 {
                    factors.push(names[i].clone());
                } else if e > 1 {
                    factors.push(format!("{}^{}", names[i], e));
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::FromPrimitive;

    fn q(n: i64) -> BigRational {
        BigRational::from_i64(n).unwrap()
    }

    fn x() -> Poly {
        Poly::var(0, 2)
    }
    fn y() -> Poly {
        Poly::var(1, 2)
    }

    #[test]
    fn graded_lex_order() {
        let m1 = Mono(vec![1, 0]); // x
        let m2 = Mono(vec![0, 1]); // y
        let m3 = Mono(vec![0, 2]); // y^2
        assert!(m1 > m2);
        assert!(m3 > m1);
    }

    #[test]
    fn arithmetic_basics() {
        let p = x().add(&y()); // x + y
        let q2 = p.mul(&p); // x^2 + 2xy + y^2
        assert_eq!(q2.num_terms(), 3);
        assert_eq!(q2.total_degree(), 2);
        let d = q2.exact_div(&p).unwrap();
        assert_eq!(d, p);
        assert!(q2.exact_div(&x().add(&Poly::one(2))).is_none());
    }

    #[test]
    fn exact_division_by_constant() {
        let p = x().mul_coeff(&q(6));
        let d = p.exact_div(&Poly::constant(2, q(3))).unwrap();
        assert_eq!(d, x().mul_coeff(&q(2)));
    }

    #[test]
    fn gcd_of_products() {
        let g = x().add(&y()); // x+y
        let a = g.mul(&x().sub(&y()));
        let b = g.mul(&g).mul(&y());
        let got = gcd(&a, &b);
        assert_eq!(got, g.monic());
    }

    #[test]
    fn gcd_coprime_is_one() {
        let a = x().add(&Poly::one(2));
        let b = y().add(&Poly::one(2));
        assert_eq!(gcd(&a, &b), Poly::one(2));
    }

    #[test]
    fn gcd_with_monomial_content() {
        let a = x().mul(&x()).mul(&y()); // x^2 y
        let b = x().mul(&y()).mul(&y()); // x y^2
        assert_eq!(gcd(&a, &b), x().mul(&y()));
    }

    #[test]
    fn eval_point_matches_structure() {
        let p = x().mul(&y()).add(&Poly::one(2)); // xy + 1
        let v = p.eval_point(&[q(2), q(3)]);
        assert_eq!(v, q(7));
    }

    #[test]
    fn pseudo_remainder_univariate() {
        // (x^2 - 1) vs (x - 1): remainder 0 after dividing
        let p = x().mul(&x()).sub(&Poly::one(2));
        let d = x().sub(&Poly::one(2));
        let r = pseudo_rem(&p, &d, 0);
        assert!(r.is_zero());
    }
}
