//! Truncated multivariate power series and formal group law tables.
//!
//! A series keeps every term of total degree <= trunc. How far the terms are
//! actually trusted is tracked separately by the scalar layer.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num::{BigRational, One, Zero};

use crate::error::Error;
use crate::poly::Mono;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Series {
    nvars: usize,
    trunc: u32,
    terms: BTreeMap<Mono, BigRational>,
}

impl Series {
    pub fn zero(nvars: usize, trunc: u32) -> Series {
        Series {
            nvars,
            trunc,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, trunc: u32, c: BigRational) -> Series {
        let mut s = Series::zero(nvars, trunc);
        if !c.is_zero() {
            s.terms.insert(Mono::unit(nvars), c);
        }
        s
    }

    pub fn one(nvars: usize, trunc: u32) -> Series {
        Series::constant(nvars, trunc, BigRational::one())
    }

    pub fn var(i: usize, nvars: usize, trunc: u32) -> Series {
        let mut s = Series::zero(nvars, trunc);
        if trunc >= 1 {
            s.terms.insert(Mono::var(i, nvars), BigRational::one());
        }
        s
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn trunc(&self) -> u32 {
        self.trunc
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &BigRational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Mono) -> BigRational {
        self.terms.get(m).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn constant_term(&self) -> BigRational {
        self.coeff(&Mono::unit(self.nvars))
    }

    /// Lowest total degree of a nonzero term; `None` for the zero series.
    pub fn valuation(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.total_degree()).min()
    }

    fn insert_add(&mut self, m: Mono, c: BigRational) {
        if c.is_zero() || m.total_degree() > self.trunc {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get() + c;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn add(&self, other: &Series) -> Series {
        assert_eq!(self.nvars, other.nvars);
        let trunc = self.trunc.min(other.trunc);
        let mut out = Series::zero(self.nvars, trunc);
        for (m, c) in self.terms.iter().chain(other.terms.iter()) {
            out.insert_add(m.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Series {
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = -c.clone();
        }
        out
    }

    pub fn sub(&self, other: &Series) -> Series {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Series) -> Series {
        assert_eq!(self.nvars, other.nvars);
        let trunc = self.trunc.min(other.trunc);
        let mut out = Series::zero(self.nvars, trunc);
        for (ma, ca) in &self.terms {
            let da = ma.total_degree();
            if da > trunc {
                continue;
            }
            for (mb, cb) in &other.terms {
                if da + mb.total_degree() > trunc {
                    continue;
                }
                out.insert_add(ma.mul(mb), ca * cb);
            }
        }
        out
    }

    pub fn mul_coeff(&self, c: &BigRational) -> Series {
        if c.is_zero() {
            return Series::zero(self.nvars, self.trunc);
        }
        let mut out = self.clone();
        for v in out.terms.values_mut() {
            *v = &*v * c;
        }
        out
    }

    pub fn pow(&self, e: u32) -> Series {
        let mut acc = Series::one(self.nvars, self.trunc);
        let mut base = self.clone();
        let mut k = e;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn truncate(&self, d: u32) -> Series {
        let mut out = self.clone();
        out.trunc = out.trunc.min(d);
        out.terms.retain(|m, _| m.total_degree() <= d);
        out
    }

    /// Substitutes one series per variable (all with zero constant term).
    pub fn subst(&self, vals: &[Series]) -> Series {
        let nvars = vals.first().map(|s| s.nvars).unwrap_or(self.nvars);
        let trunc = vals
            .iter()
            .map(|s| s.trunc)
            .chain(std::iter::once(self.trunc))
            .min()
            .unwrap();
        for v in vals {
            assert!(v.constant_term().is_zero(), "substitution needs valuation >= 1");
        }
        // cache powers per variable
        let mut pows: Vec<Vec<Series>> = Vec::with_capacity(vals.len());
        let maxdeg: Vec<u32> = (0..self.nvars)
            .map(|i| {
                self.terms
                    .keys()
                    .map(|m| m.0[i] as u32)
                    .max()
                    .unwrap_or(0)
            })
            .collect();
        for (i, v) in vals.iter().enumerate() {
            let d = maxdeg.get(i).copied().unwrap_or(0);
            let mut ps = Vec::with_capacity(d as usize + 1);
            ps.push(Series::one(nvars, trunc));
            for k in 1..=d {
                ps.push(ps[k as usize - 1].mul(v));
            }
            pows.push(ps);
        }
        let mut out = Series::zero(nvars, trunc);
        for (m, c) in &self.terms {
            let mut t = Series::constant(nvars, trunc, c.clone());
            for (i, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    t = t.mul(&pows[i][e as usize]);
                }
            }
            out = out.add(&t);
        }
        out
    }

    /// Quotient by a series of valuation one, correct through `through`.
    /// Works layer by layer on homogeneous parts; fails if some layer is not
    /// divisible by the linear part.
    pub fn div_by_valuation_one(&self, v: &Series, through: u32) -> Option<Series> {
        assert_eq!(self.nvars, v.nvars);
        if self.is_zero() {
            return Some(Series::zero(self.nvars, through));
        }
        if v.valuation() != Some(1) {
            return None;
        }
        let homog = |s: &Series, d: u32| -> BTreeMap<Mono, BigRational> {
            s.terms
                .iter()
                .filter(|(m, _)| m.total_degree() == d)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect()
        };
        let v1 = homog(v, 1);
        let mut quot = Series::zero(self.nvars, through);
        // u_d = sum_{j} w_j * v_{d-j}; solve for w_{d-1} layer by layer
        for d in 1..=(through + 1) {
            let mut rhs: BTreeMap<Mono, BigRational> = homog(self, d);
            // subtract contributions of known w_j (j <= d-2) times v_{d-j}
            for (wm, wc) in quot.terms.iter() {
                let j = wm.total_degree();
                if j + 1 > d {
                    continue;
                }
                for (vm, vc) in v.terms.iter().filter(|(m, _)| m.total_degree() == d - j) {
                    let m = wm.mul(vm);
                    let c = wc * vc;
                    let e = rhs.entry(m).or_insert_with(BigRational::zero);
                    *e -= c;
                }
            }
            rhs.retain(|_, c| !c.is_zero());
            // divide the homogeneous remainder by the linear form v1
            let w = divide_homogeneous_by_linear(&rhs, &v1, self.nvars)?;
            for (m, c) in w {
                if m.total_degree() <= through {
                    quot.insert_add(m, c);
                }
            }
            if d > through {
                break;
            }
        }
        quot.trunc = through;
        quot.terms.retain(|m, _| m.total_degree() <= through);
        Some(quot)
    }

    pub fn render(&self, names: &[String]) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        let mut first = true;
        for (m, c) in &self.terms {
            let neg = c < &BigRational::zero();
            let abs = if neg { -c.clone() } else { c.clone() };
            if first {
                if neg {
                    out.push('-');
                }
                first = false;
            } else {
                out.push_str(if neg { " - " } else { " + " });
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
            let _ = write!(out, "{}", factors.join("*"));
        }
        out
    }
}

/// Exact division of a homogeneous polynomial by a linear form; None if not
/// divisible.
fn divide_homogeneous_by_linear(
    p: &BTreeMap<Mono, BigRational>,
    lin: &BTreeMap<Mono, BigRational>,
    nvars: usize,
) -> Option<BTreeMap<Mono, BigRational>> {
    if p.is_empty() {
        return Some(BTreeMap::new());
    }
    let (lm, lc) = lin.iter().next_back()?;
    let mut rem = p.clone();
    let mut quot: BTreeMap<Mono, BigRational> = BTreeMap::new();
    while let Some((rm, rc)) = rem.iter().next_back().map(|(m, c)| (m.clone(), c.clone())) {
        let qm = rm.try_div(lm)?;
        let qc = &rc / lc;
        // rem -= (qm, qc) * lin
        for (m, c) in lin {
            let mm = qm.mul(m);
            let e = rem.entry(mm).or_insert_with(BigRational::zero);
            *e -= &qc * c;
        }
        rem.retain(|_, c| !c.is_zero());
        quot.insert(qm, qc);
    }
    Some(quot)
}

/// Commutative one-dimensional formal group law given by a coefficient table:
/// F(x, y) = x + y + sum over i,j >= 1 of a\[i)(j\] x^i y^j, truncated in total
/// degree.
#[derive(Clone, Debug)]
pub struct FglTable {
    trunc: u32,
    coeffs: BTreeMap<(u32, u32), BigRational>,
}

impl FglTable {
    pub fn new(trunc: u32, coeffs: BTreeMap<(u32, u32), BigRational>) -> Result<FglTable, Error> {
        if trunc < 2 {
            return Err(Error::Truncation(
                "table laws need truncation degree >= 2".into(),
            ));
        }
        let mut full: BTreeMap<(u32, u32), BigRational> = BTreeMap::new();
        for (&(i, j), c) in &coeffs {
            if i < 1 || j < 1 {
                return Err(Error::InvalidTable(
                    "coefficients are indexed by i, j >= 1".into(),
                ));
            }
            if i + j > trunc {
                continue;
            }
            if c.is_zero() {
                continue;
            }
            full.insert((i, j), c.clone());
            match coeffs.get(&(j, i)) {
                None => {
                    full.insert((j, i), c.clone());
                }
                Some(c2) if c2 == c => {}
                Some(_) => {
                    return Err(Error::InvalidTable(format!(
                        "asymmetric coefficients at ({}, {})",
                        i, j
                    )));
                }
            }
        }
        let t = FglTable {
            trunc,
            coeffs: full,
        };
        t.check_associativity()?;
        Ok(t)
    }

    /// The hyperbolic family x + y - b*x*y at a fixed rational b.
    pub fn beta_table(b: BigRational, trunc: u32) -> FglTable {
        let mut coeffs = BTreeMap::new();
        if !b.is_zero() {
            coeffs.insert((1, 1), -b);
        }
        FglTable::new(trunc, coeffs).expect("hyperbolic table is valid")
    }

    /// Parses lines of the form `i j p/q`; `#` starts a comment.
    pub fn parse(text: &str, trunc: u32) -> Result<FglTable, Error> {
        let mut coeffs = BTreeMap::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap().trim();
            if line.is_empty() {
                continue;
            }
            let parts: Vec<&str> = line.split_whitespace().collect();
            if parts.len() != 3 {
                return Err(Error::InvalidTable(format!(
                    "line {}: expected `i j p/q`",
                    lineno + 1
                )));
            }
            let i: u32 = parts[0]
                .parse()
                .map_err(|_| Error::InvalidTable(format!("line {}: bad index", lineno + 1)))?;
            let j: u32 = parts[1]
                .parse()
                .map_err(|_| Error::InvalidTable(format!("line {}: bad index", lineno + 1)))?;
            let c = parse_rational(parts[2])
                .ok_or_else(|| Error::InvalidTable(format!("line {}: bad rational", lineno + 1)))?;
            if coeffs.insert((i, j), c).is_some() {
                return Err(Error::InvalidTable(format!(
                    "line {}: duplicate entry ({}, {})",
                    lineno + 1,
                    i,
                    j
                )));
            }
        }
        FglTable::new(trunc, coeffs)
    }

    pub fn trunc(&self) -> u32 {
        self.trunc
    }

    /// F(a, b) for series with zero constant term.
    pub fn formal_sum(&self, a: &Series, b: &Series) -> Series {
        assert!(a.constant_term().is_zero() && b.constant_term().is_zero());
        let trunc = a.trunc().min(b.trunc());
        let mut out = a.add(b);
        let max_i = self.coeffs.keys().map(|&(i, _)| i).max().unwrap_or(0);
        let max_j = self.coeffs.keys().map(|&(_, j)| j).max().unwrap_or(0);
        let mut pa = vec![Series::one(a.nvars(), trunc)];
        for i in 1..=max_i {
            pa.push(pa[i as usize - 1].mul(a));
        }
        let mut pb = vec![Series::one(a.nvars(), trunc)];
        for j in 1..=max_j {
            pb.push(pb[j as usize - 1].mul(b));
        }
        for (&(i, j), c) in &self.coeffs {
            out = out.add(&pa[i as usize].mul(&pb[j as usize]).mul_coeff(c));
        }
        out
    }

    /// The formal inverse: the unique series u with F(a, u) = 0.
    pub fn formal_inverse(&self, a: &Series) -> Series {
        assert!(a.constant_term().is_zero());
        let trunc = a.trunc();
        // iterate u := -a - sum a_ij a^i u^j; gains one correct degree per pass
        let mut u = a.neg();
        for _ in 0..trunc {
            let mut next = a.neg();
            let max_i = self.coeffs.keys().map(|&(i, _)| i).max().unwrap_or(0);
            let max_j = self.coeffs.keys().map(|&(_, j)| j).max().unwrap_or(0);
            let mut pa = vec![Series::one(a.nvars(), trunc)];
            for i in 1..=max_i {
                pa.push(pa[i as usize - 1].mul(a));
            }
            let mut pu = vec![Series::one(a.nvars(), trunc)];
            for j in 1..=max_j {
                pu.push(pu[j as usize - 1].mul(&u));
            }
            for (&(i, j), c) in &self.coeffs {
                next = next.sub(&pa[i as usize].mul(&pu[j as usize]).mul_coeff(c));
            }
            if next == u {
                break;
            }
            u = next;
        }
        u
    }

    fn check_associativity(&self) -> Result<(), Error> {
        // work in three formal variables through the table truncation
        let n = self.trunc;
        let x = Series::var(0, 3, n);
        let y = Series::var(1, 3, n);
        let z = Series::var(2, 3, n);
        let left = self.formal_sum(&self.formal_sum(&x, &y), &z);
        let right = self.formal_sum(&x, &self.formal_sum(&y, &z));
        if left != right {
            return Err(Error::InvalidTable(
                "associativity fails within the truncation".into(),
            ));
        }
        Ok(())
    }
}

pub fn parse_rational(s: &str) -> Option<BigRational> {
    let s = s.trim();
    if let Some((p, q)) = s.split_once('/') {
        let p: num::BigInt = p.trim().parse().ok()?;
        let q: num::BigInt = q.trim().parse().ok()?;
        if q.is_zero() {
            return None;
        }
        Some(BigRational::new(p, q))
    } else {
        let p: num::BigInt = s.parse().ok()?;
        Some(BigRational::from_integer(p))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::FromPrimitive;

    fn q(n: i64) -> BigRational {
        BigRational::from_i64(n).unwrap()
    }

    #[test]
    fn mul_truncates() {
        let x = Series::var(0, 1, 3);
        let p = x.add(&x.mul(&x)); // x + x^2
        let sq = p.mul(&p); // x^2 + 2x^3 (+ x^4 dropped)
        assert_eq!(sq.coeff(&Mono(vec![2])), q(1));
        assert_eq!(sq.coeff(&Mono(vec![3])), q(2));
        assert_eq!(sq.coeff(&Mono(vec![4])), q(0));
    }

    #[test]
    fn beta_table_inverse_matches_closed_form() {
        // inverse of x for x + y - xy is x/(x-1) = -x - x^2 - x^3 - ...
        let law = FglTable::beta_table(q(1), 6);
        let x = Series::var(0, 1, 6);
        let inv = law.formal_inverse(&x);
        for d in 1..=6u16 {
            assert_eq!(inv.coeff(&Mono(vec![d])), q(-1), "degree {}", d);
        }
        assert!(law.formal_sum(&x, &inv).is_zero());
    }

    #[test]
    fn additive_law_inverse() {
        let law = FglTable::beta_table(q(0), 5);
        let x = Series::var(0, 2, 5);
        assert_eq!(law.formal_inverse(&x), x.neg());
    }

    #[test]
    fn associativity_check_rejects_bad_table() {
        let mut coeffs = BTreeMap::new();
        coeffs.insert((1, 2), q(1));
        // a_{12} = a_{21} = 1 with nothing else is not associative
        assert!(FglTable::new(6, coeffs).is_err());
    }

    #[test]
    fn parse_table_text() {
        let t = FglTable::parse("# hyperbolic with b = 2\n1 1 -2\n", 8).unwrap();
        let x = Series::var(0, 2, 8);
        let y = Series::var(1, 2, 8);
        let s = t.formal_sum(&x, &y);
        assert_eq!(s.coeff(&Mono(vec![1, 1])), q(-2));
    }

    #[test]
    fn division_by_valuation_one() {
        let n = 6;
        let x = Series::var(0, 2, n);
        let y = Series::var(1, 2, n);
        let v = x.add(&y).add(&x.mul(&y)); // x + y + xy
        let u = v.mul(&v);
        let w = u.div_by_valuation_one(&v, n - 1).unwrap();
        // w should agree with v through degree n-1
        for (m, c) in w.terms() {
            assert_eq!(*c, v.coeff(m), "at {:?}", m);
        }
        assert!(x.div_by_valuation_one(&y, 4).is_none());
    }
}
