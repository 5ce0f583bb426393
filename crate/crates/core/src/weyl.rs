//! Root data and the affine Weyl group Q∨ ⋊ W.
//!
//! Roots live in the root lattice with coordinates in the simple-root basis;
//! coroots use the simple-coroot basis. The Cartan pairing is
//! `cartan[i][j] = <alpha_i^vee, alpha_j>`. The finite Weyl group is fully
//! enumerated; affine elements are pairs (lambda, w) in canonical form for
//! t_lambda * w.

use std::collections::{BTreeMap, HashMap, VecDeque};
use std::fmt;
use std::sync::Mutex;

use crate::error::Error;

pub type Coords = Vec<i64>;

#[derive(Clone, Debug)]
pub struct RootEntry {
    pub root: Coords,
    pub coroot: Coords,
}

#[derive(Debug)]
struct WElem {
    /// action on root coordinates, row-major n x n
    mat_q: Vec<i64>,
    /// action on coroot coordinates
    mat_qv: Vec<i64>,
    word: Vec<u8>,
    inv: u16,
}

#[derive(Debug, Default)]
struct BallCache {
    info: HashMap<AffineElt, (u32, Vec<u8>)>,
    levels: Vec<Vec<AffineElt>>,
}

/// A finite irreducible root system together with its affine extension.
pub struct RootDatum {
    pub label: String,
    rank: usize,
    cartan: Vec<Vec<i64>>,
    positive: Vec<RootEntry>,
    /// index of the highest root in `positive`
    theta_idx: usize,
    elems: Vec<WElem>,
    /// product table, `mult[u * |W| + v] = uv`
    mult: Vec<u16>,
    simple_refl: Vec<u16>,
    s_theta: u16,
    /// lookup from root coordinates to (positive index, sign)
    root_lookup: HashMap<Coords, (usize, i8)>,
    ball: Mutex<BallCache>,
}

impl fmt::Debug for RootDatum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RootDatum({}, |W|={})", self.label, self.elems.len())
    }
}

fn mat_mul(a: &[i64], b: &[i64], n: usize) -> Vec<i64> {
    let mut out = vec![0i64; n * n];
    for i in 0..n {
        for k in 0..n {
            let aik = a[i * n + k];
            if aik == 0 {
                continue;
            }
            for j in 0..n {
                out[i * n + j] += aik * b[k * n + j];
            }
        }
    }
    out
}

fn mat_apply(m: &[i64], v: &[i64]) -> Vec<i64> {
    let n = v.len();
    (0..n)
        .map(|i| (0..n).map(|j| m[i * n + j] * v[j]).sum())
        .collect()
}

fn identity_mat(n: usize) -> Vec<i64> {
    let mut m = vec![0i64; n * n];
    for i in 0..n {
        m[i * n + i] = 1;
    }
    m
}

const MAX_W: usize = 40320; // refuse anything bigger than S_8 scale

impl RootDatum {
    pub fn a1() -> RootDatum {
        Self::from_cartan("A1".into(), vec![vec![2]]).expect("A1 is valid")
    }

    pub fn a2() -> RootDatum {
        Self::from_cartan("A2".into(), vec![vec![2, -1], vec![-1, 2]]).expect("A2 is valid")
    }

    /// Builds the datum from a Cartan matrix `cartan[i][j] = <alpha_i^vee, alpha_j>`.
    pub fn from_cartan(label: String, cartan: Vec<Vec<i64>>) -> Result<RootDatum, Error> {
        let n = cartan.len();
        for (i, row) in cartan.iter().enumerate() {
            if row.len() != n {
                return Err(Error::InvalidDatum("Cartan matrix is not square".into()));
            }
            if row[i] != 2 {
                return Err(Error::InvalidDatum("Cartan diagonal must be 2".into()));
            }
            for (j, &a) in row.iter().enumerate() {
                if i != j {
                    if a > 0 {
                        return Err(Error::InvalidDatum(
                            "off-diagonal Cartan entries must be <= 0".into(),
                        ));
                    }
                    if (a == 0) != (cartan[j][i] == 0) {
                        return Err(Error::InvalidDatum("Cartan zero pattern not symmetric".into()));
                    }
                }
            }
        }

        // simple reflection matrices
        let mut refl_q = Vec::with_capacity(n);
        let mut refl_qv = Vec::with_capacity(n);
        for i in 0..n {
            let mut mq = identity_mat(n);
            let mut mqv = identity_mat(n);
            for j in 0..n {
                // s_i(alpha_j) = alpha_j - cartan[i][j] alpha_i
                mq[i * n + j] -= cartan[i][j];
                // s_i(alpha_j^vee) = alpha_j^vee - cartan[j][i] alpha_i^vee
                mqv[i * n + j] -= cartan[j][i];
            }
            refl_q.push(mq);
            refl_qv.push(mqv);
        }

        // enumerate W by BFS with lexicographically smallest reduced words
        let mut elems: Vec<WElem> = vec![WElem {
            mat_q: identity_mat(n),
            mat_qv: identity_mat(n),
            word: vec![],
            inv: 0,
        }];
        let mut index: HashMap<Vec<i64>, u16> = HashMap::new();
        index.insert(elems[0].mat_q.clone(), 0);
        let mut frontier: Vec<u16> = vec![0];
        while !frontier.is_empty() {
            let mut next_new: BTreeMap<Vec<i64>, (Vec<i64>, Vec<u8>)> = BTreeMap::new();
            for &u in &frontier {
                for i in 0..n {
                    let mq = mat_mul(&elems[u as usize].mat_q, &refl_q[i], n);
                    if index.contains_key(&mq) {
                        continue;
                    }
                    let mut w = elems[u as usize].word.clone();
                    w.push(i as u8 + 1);
                    match next_new.entry(mq.clone()) {
                        std::collections::btree_map::Entry::Vacant(e) => {
                            let mqv = mat_mul(&elems[u as usize].mat_qv, &refl_qv[i], n);
                            e.insert((mqv, w));
                        }
                        std::collections::btree_map::Entry::Occupied(mut e) => {
                            if w < e.get().1 {
                                e.get_mut().1 = w;
                            }
                        }
                    }
                }
            }
            frontier.clear();
            for (mq, (mqv, word)) in next_new {
                let id = elems.len() as u16;
                index.insert(mq.clone(), id);
                elems.push(WElem {
                    mat_q: mq,
                    mat_qv: mqv,
                    word,
                    inv: 0,
                });
                frontier.push(id);
            }
            if elems.len() > MAX_W {
                return Err(Error::InvalidDatum(
                    "Weyl group too large or not finite".into(),
                ));
            }
        }

        let order = elems.len();
        let mut mult = vec![0u16; order * order];
        for u in 0..order {
            for v in 0..order {
                let m = mat_mul(&elems[u].mat_q, &elems[v].mat_q, n);
                mult[u * order + v] = *index.get(&m).expect("product in W");
            }
        }
        for u in 0..order {
            let inv = (0..order)
                .find(|&v| mult[u * order + v] == 0)
                .expect("inverse exists");
            elems[u].inv = inv as u16;
        }
        let simple_refl: Vec<u16> = (0..n)
            .map(|i| *index.get(&refl_q[i]).expect("simple reflection in W"))
            .collect();

        // positive roots: W-orbit of the simple (root, coroot) pairs
        let mut positive: Vec<RootEntry> = Vec::new();
        let mut root_lookup: HashMap<Coords, (usize, i8)> = HashMap::new();
        for i in 0..n {
            let mut root = vec![0i64; n];
            root[i] = 1;
            let mut seen: Option<usize> = None;
            for e in &elems {
                let r = mat_apply(&e.mat_q, &root);
                let pos = r.iter().all(|&c| c >= 0) && r.iter().any(|&c| c > 0);
                if pos && !root_lookup.contains_key(&r) {
                    let mut cr = vec![0i64; n];
                    cr[i] = 1;
                    let coroot = mat_apply(&e.mat_qv, &cr);
                    let idx = positive.len();
                    root_lookup.insert(r.clone(), (idx, 1));
                    let mut neg = r.clone();
                    for c in neg.iter_mut() {
                        *c = -*c;
                    }
                    root_lookup.insert(neg, (idx, -1));
                    positive.push(RootEntry { root: r, coroot });
                    seen = Some(idx);
                }
            }
            let _ = seen;
        }
        positive.sort_by_key(|e| (e.root.iter().sum::<i64>(), e.root.clone()));
        root_lookup.clear();
        for (idx, e) in positive.iter().enumerate() {
            root_lookup.insert(e.root.clone(), (idx, 1));
            let neg: Coords = e.root.iter().map(|&c| -c).collect();
            root_lookup.insert(neg, (idx, -1));
        }

        // highest root: maximal height, must be unique
        let theta_idx = if n == 0 {
            0
        } else {
            let max_h = positive
                .iter()
                .map(|e| e.root.iter().sum::<i64>())
                .max()
                .unwrap();
            let cands: Vec<usize> = positive
                .iter()
                .enumerate()
                .filter(|(_, e)| e.root.iter().sum::<i64>() == max_h)
                .map(|(i, _)| i)
                .collect();
            if cands.len() != 1 {
                return Err(Error::InvalidDatum(
                    "highest root is not unique (system not irreducible?)".into(),
                ));
            }
            cands[0]
        };

        // sanity: <gamma^vee, gamma> = 2 for every positive root
        for e in &positive {
            let p: i64 = (0..n)
                .map(|i| {
                    (0..n)
                        .map(|j| e.coroot[i] * cartan[i][j] * e.root[j])
                        .sum::<i64>()
                })
                .sum();
            if p != 2 {
                return Err(Error::InvalidDatum("pairing <a^vee, a> != 2".into()));
            }
        }

        let s_theta = if n == 0 {
            0
        } else {
            let th = &positive[theta_idx];
            // s_theta(mu) = mu - <theta^vee, mu> theta
            let mut m = identity_mat(n);
            for j in 0..n {
                let pair_j: i64 = (0..n).map(|i| th.coroot[i] * cartan[i][j]).sum();
                for i in 0..n {
                    m[i * n + j] -= pair_j * th.root[i];
                }
            }
            *index.get(&m).expect("s_theta in W")
        };

        Ok(RootDatum {
            label,
            rank: n,
            cartan,
            positive,
            theta_idx,
            elems,
            mult,
            simple_refl,
            s_theta,
            root_lookup,
            ball: Mutex::new(BallCache::default()),
        })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn weyl_order(&self) -> usize {
        self.elems.len()
    }

    pub fn positive_roots(&self) -> &[RootEntry] {
        &self.positive
    }

    pub fn theta(&self) -> &RootEntry {
        &self.positive[self.theta_idx]
    }

    pub fn theta_index(&self) -> usize {
        self.theta_idx
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// Looks a root up by coordinates, returning (positive index, sign).
    pub fn root_index(&self, coords: &[i64]) -> Option<(usize, i8)> {
        self.root_lookup.get(coords).copied()
    }

    pub fn is_root(&self, coords: &[i64]) -> bool {
        self.root_lookup.contains_key(coords)
    }

    /// Pairing of a coroot-lattice vector with a root-lattice vector.
    pub fn pairing(&self, lambda: &[i64], mu: &[i64]) -> i64 {
        let n = self.rank;
        let mut acc = 0;
        for i in 0..n {
            if lambda[i] == 0 {
                continue;
            }
            for j in 0..n {
                acc += lambda[i] * self.cartan[i][j] * mu[j];
            }
        }
        acc
    }

    pub fn simple_reflection(&self, i: usize) -> u16 {
        self.simple_refl[i]
    }

    pub fn s_theta(&self) -> u16 {
        self.s_theta
    }

    pub fn w_mul(&self, u: u16, v: u16) -> u16 {
        self.mult[u as usize * self.elems.len() + v as usize]
    }

    pub fn w_inv(&self, u: u16) -> u16 {
        self.elems[u as usize].inv
    }

    pub fn w_apply_root(&self, u: u16, mu: &[i64]) -> Coords {
        mat_apply(&self.elems[u as usize].mat_q, mu)
    }

    pub fn w_apply_coroot(&self, u: u16, lambda: &[i64]) -> Coords {
        mat_apply(&self.elems[u as usize].mat_qv, lambda)
    }

    /// Canonical (lex-smallest) reduced word of a finite element, letters 1..=n.
    pub fn w_word(&self, u: u16) -> &[u8] {
        &self.elems[u as usize].word
    }

    pub fn w_length(&self, u: u16) -> u32 {
        self.elems[u as usize].word.len() as u32
    }

    pub fn finite_elements(&self) -> impl Iterator<Item = u16> {
        0..self.elems.len() as u16
    }

    /// True if `mu` is a negative root (all coordinates <= 0, some < 0).
    pub fn root_is_negative(&self, mu: &[i64]) -> bool {
        debug_assert!(self.is_root(mu));
        mu.iter().all(|&c| c <= 0)
    }

    pub fn identity(&self) -> AffineElt {
        AffineElt {
            lambda: vec![0; self.rank],
            w: 0,
        }
    }

    pub fn translation(&self, lambda: Coords) -> AffineElt {
        assert_eq!(lambda.len(), self.rank);
        AffineElt { lambda, w: 0 }
    }

    pub fn finite(&self, w: u16) -> AffineElt {
        AffineElt {
            lambda: vec![0; self.rank],
            w,
        }
    }

    /// The affine simple reflection for index `i` in 0..=n. Index 0 is the
    /// extra node, t_{theta^vee} s_theta.
    pub fn affine_simple(&self, i: usize) -> AffineElt {
        if i == 0 {
            AffineElt {
                lambda: self.theta().coroot.clone(),
                w: self.s_theta,
            }
        } else {
            self.finite(self.simple_refl[i - 1])
        }
    }

    /// t_lambda v * t_mu u = t_{lambda + v(mu)} (vu)
    pub fn aw_mul(&self, a: &AffineElt, b: &AffineElt) -> AffineElt {
        let vm = self.w_apply_coroot(a.w, &b.lambda);
        let lambda = a
            .lambda
            .iter()
            .zip(&vm)
            .map(|(x, y)| x + y)
            .collect();
        AffineElt {
            lambda,
            w: self.w_mul(a.w, b.w),
        }
    }

    pub fn aw_inv(&self, a: &AffineElt) -> AffineElt {
        let wi = self.w_inv(a.w);
        let neg: Coords = a.lambda.iter().map(|&c| -c).collect();
        AffineElt {
            lambda: self.w_apply_coroot(wi, &neg),
            w: wi,
        }
    }

    /// Number of affine inversions of `u` lying over +-alpha, closed form.
    pub fn ell_alpha(&self, u: &AffineElt, alpha_idx: usize) -> u32 {
        let alpha = &self.positive[alpha_idx].root;
        let pair = self.pairing(&u.lambda, alpha);
        let vi = self.w_inv(u.w);
        let pre = self.w_apply_root(vi, alpha);
        let neg = if self.root_is_negative(&pre) { 1 } else { 0 };
        if pair <= 0 {
            (-pair) as u32 + neg
        } else {
            (pair - neg as i64) as u32
        }
    }

    pub fn length(&self, u: &AffineElt) -> u32 {
        (0..self.positive.len())
            .map(|a| self.ell_alpha(u, a))
            .sum()
    }

    /// Brute-force inversion count over beta = +-alpha + k delta, 0 <= k <= bound.
    pub fn ell_alpha_bruteforce(&self, u: &AffineElt, alpha_idx: usize, bound: i64) -> u32 {
        let alpha = &self.positive[alpha_idx].root;
        let vi = self.w_inv(u.w);
        let pair = self.pairing(&u.lambda, alpha);
        let mut count = 0;
        for sign in [1i64, -1] {
            let fin = self.w_apply_root(vi, alpha);
            let fin_neg = if sign > 0 {
                self.root_is_negative(&fin)
            } else {
                !self.root_is_negative(&fin)
            };
            let k0 = if sign > 0 { 0 } else { 1 };
            for k in k0..=bound {
                // u^{-1}(sign*alpha + k delta) = sign*v^{-1}(alpha) + (k + sign*pair) delta
                let kk = k + sign * pair;
                let negative = kk < 0 || (kk == 0 && fin_neg);
                if negative {
                    count += 1;
                }
            }
        }
        count
    }

    fn ensure_ball(&self, level: u32) {
        let mut cache = self.ball.lock().unwrap();
        if cache.levels.is_empty() {
            let e = self.identity();
            cache.info.insert(e.clone(), (0, vec![]));
            cache.levels.push(vec![e]);
        }
        while (cache.levels.len() as u32) <= level {
            let last = cache.levels.last().unwrap().clone();
            let cur_len = cache.levels.len() as u32;
            let mut fresh: BTreeMap<AffineElt, Vec<u8>> = BTreeMap::new();
            for u in &last {
                let word_u = cache.info[u].1.clone();
                for i in 0..=self.rank {
                    let v = self.aw_mul(u, &self.affine_simple(i));
                    if cache.info.contains_key(&v) {
                        continue;
                    }
                    let mut w = word_u.clone();
                    w.push(i as u8);
                    match fresh.entry(v) {
                        std::collections::btree_map::Entry::Vacant(e) => {
                            e.insert(w);
                        }
                        std::collections::btree_map::Entry::Occupied(mut e) => {
                            if w < *e.get() {
                                *e.get_mut() = w;
                            }
                        }
                    }
                }
            }
            let mut lvl = Vec::with_capacity(fresh.len());
            for (v, w) in fresh {
                debug_assert_eq!(self.length(&v), cur_len);
                cache.info.insert(v.clone(), (cur_len, w));
                lvl.push(v);
            }
            cache.levels.push(lvl);
        }
    }

    /// All elements of length <= l, sorted by (length, lambda, w).
    pub fn enumerate_ball(&self, l: u32) -> Vec<AffineElt> {
        self.ensure_ball(l);
        let cache = self.ball.lock().unwrap();
        let mut out = Vec::new();
        for lvl in cache.levels.iter().take(l as usize + 1) {
            out.extend(lvl.iter().cloned());
        }
        out
    }

    /// Canonical (lex-smallest) reduced word in the affine generators 0..=n.
    pub fn reduced_word(&self, u: &AffineElt) -> Vec<u8> {
        let l = self.length(u);
        self.ensure_ball(l);
        let cache = self.ball.lock().unwrap();
        cache.info[u].1.clone()
    }

    pub fn word_to_element(&self, word: &[u8]) -> AffineElt {
        let mut acc = self.identity();
        for &i in word {
            acc = self.aw_mul(&acc, &self.affine_simple(i as usize));
        }
        acc
    }

    /// Minimal-length representative of the coset t_lambda W.
    pub fn w_min_coset(&self, lambda: &[i64]) -> AffineElt {
        let t = self.translation(lambda.to_vec());
        let mut best: Option<(u32, AffineElt)> = None;
        for w in self.finite_elements() {
            let cand = self.aw_mul(&t, &self.finite(w));
            let l = self.length(&cand);
            match &best {
                None => best = Some((l, cand)),
                Some((bl, _)) if l < *bl => best = Some((l, cand)),
                _ => {}
            }
        }
        best.unwrap().1
    }

    /// Bruhat order via the subword property on a reduced word of `v`.
    pub fn bruhat_leq(&self, u: &AffineElt, v: &AffineElt) -> bool {
        if self.length(u) > self.length(v) {
            return false;
        }
        let word_v = self.reduced_word(v);
        let mut cur = u.clone();
        let mut cur_len = self.length(&cur);
        for (pos, &i) in word_v.iter().enumerate() {
            if cur_len == 0 {
                return true;
            }
            let s = self.affine_simple(i as usize);
            let su = self.aw_mul(&s, &cur);
            let su_len = self.length(&su);
            if su_len < cur_len {
                cur = su;
                cur_len = su_len;
            }
            // remaining letters must still be able to absorb cur
            if cur_len > (word_v.len() - pos - 1) as u32 {
                return false;
            }
        }
        cur_len == 0
    }

    /// sigma_i elements for rank-one data (infinite dihedral combinatorics).
    pub fn sigma(&self, i: i64) -> Result<AffineElt, Error> {
        if self.rank != 1 {
            return Err(Error::RequiresRankOne);
        }
        let s0 = self.affine_simple(0);
        let s1 = self.affine_simple(1);
        let s1s0 = self.aw_mul(&s1, &s0);
        let s0s1 = self.aw_mul(&s0, &s1);
        let elem = if i == 0 {
            self.identity()
        } else if i > 0 {
            let k = (i / 2) as u32;
            let mut acc = self.identity();
            for _ in 0..k {
                acc = self.aw_mul(&s1s0, &acc);
            }
            if i % 2 == 1 {
                acc = self.aw_mul(&s0, &acc);
            }
            acc
        } else {
            let j = -i;
            let k = (j / 2) as u32;
            let mut acc = self.identity();
            for _ in 0..k {
                acc = self.aw_mul(&s0s1, &acc);
            }
            if j % 2 == 1 {
                acc = self.aw_mul(&s1, &acc);
            }
            acc
        };
        Ok(elem)
    }
}

/// Affine Weyl group element t_lambda * w in canonical form.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct AffineElt {
    pub lambda: Coords,
    pub w: u16,
}

impl AffineElt {
    pub fn is_identity(&self) -> bool {
        self.w == 0 && self.lambda.iter().all(|&c| c == 0)
    }

    pub fn is_translation(&self) -> bool {
        self.w == 0
    }
}

/// Renders in the CLI notation `t[l1,...,ln]*s...` / `t[...]` / `s...` / `e`.
pub fn format_element(datum: &RootDatum, u: &AffineElt) -> String {
    let has_t = u.lambda.iter().any(|&c| c != 0);
    let t_part = if has_t {
        let inner: Vec<String> = u.lambda.iter().map(|c| c.to_string()).collect();
        format!("t[{}]", inner.join(","))
    } else {
        String::new()
    };
    let w_part = if u.w != 0 {
        datum
            .w_word(u.w)
            .iter()
            .map(|i| format!("s{}", i))
            .collect::<String>()
    } else {
        String::new()
    };
    match (has_t, u.w != 0) {
        (false, false) => "e".into(),
        (true, false) => t_part,
        (false, true) => w_part,
        (true, true) => format!("{}*{}", t_part, w_part),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn a1_and_a2_shapes() {
        let a1 = RootDatum::a1();
        assert_eq!(a1.weyl_order(), 2);
        assert_eq!(a1.positive_roots().len(), 1);
        let a2 = RootDatum::a2();
        assert_eq!(a2.weyl_order(), 6);
        assert_eq!(a2.positive_roots().len(), 3);
        assert_eq!(a2.theta().root, vec![1, 1]);
        assert_eq!(a2.theta().coroot, vec![1, 1]);
    }

    #[test]
    fn affine_simple_zero_is_translation_times_s_theta() {
        let a1 = RootDatum::a1();
        let s0 = a1.affine_simple(0);
        assert_eq!(s0.lambda, vec![1]);
        assert_eq!(s0.w, a1.s_theta());
        // s0^2 = e
        assert!(a1.aw_mul(&s0, &s0).is_identity());
    }

    #[test]
    fn s1_s0_is_negative_translation() {
        let a1 = RootDatum::a1();
        let s0 = a1.affine_simple(0);
        let s1 = a1.affine_simple(1);
        let p = a1.aw_mul(&s1, &s0);
        assert_eq!(p, a1.translation(vec![-1]));
        assert_eq!(p, a1.sigma(2).unwrap());
    }

    #[test]
    fn inverse_and_associativity() {
        let a2 = RootDatum::a2();
        let ball = a2.enumerate_ball(3);
        for u in ball.iter().take(12) {
            let ui = a2.aw_inv(u);
            assert!(a2.aw_mul(u, &ui).is_identity());
            for v in ball.iter().take(8) {
                for w in ball.iter().take(5) {
                    let left = a2.aw_mul(&a2.aw_mul(u, v), w);
                    let right = a2.aw_mul(u, &a2.aw_mul(v, w));
                    assert_eq!(left, right);
                }
            }
        }
    }

    #[test]
    fn ell_alpha_examples() {
        let a1 = RootDatum::a1();
        // u = t_lambda with <lambda, alpha> = -2 gives 2
        let u = a1.translation(vec![-1]);
        assert_eq!(a1.pairing(&[-1], &[1]), -2);
        assert_eq!(a1.ell_alpha(&u, 0), 2);
        assert_eq!(a1.ell_alpha(&a1.identity(), 0), 0);
        // sigma_3 has ell_alpha = 3, matching brute force
        let s3 = a1.sigma(3).unwrap();
        assert_eq!(a1.ell_alpha(&s3, 0), 3);
        assert_eq!(a1.ell_alpha_bruteforce(&s3, 0, 10), 3);
    }

    #[test]
    fn length_examples() {
        let a1 = RootDatum::a1();
        for i in 0..5i64 {
            assert_eq!(a1.length(&a1.sigma(2 * i).unwrap()), 2 * i as u32);
        }
        assert_eq!(a1.length(&a1.identity()), 0);
        let a2 = RootDatum::a2();
        let t_theta = a2.translation(a2.theta().coroot.clone());
        assert_eq!(a2.length(&t_theta), 4);
    }

    #[test]
    fn reduced_words_canonical() {
        let a1 = RootDatum::a1();
        assert_eq!(a1.reduced_word(&a1.sigma(3).unwrap()), vec![0, 1, 0]);
        assert_eq!(a1.reduced_word(&a1.identity()), Vec::<u8>::new());
        assert_eq!(a1.reduced_word(&a1.translation(vec![1])), vec![0, 1]);
    }

    #[test]
    fn min_coset_representatives() {
        let a1 = RootDatum::a1();
        for i in 0..4i64 {
            assert_eq!(a1.w_min_coset(&[-i]), a1.sigma(2 * i).unwrap());
        }
        assert_eq!(a1.w_min_coset(&[0]), a1.identity());
        for i in 1..4i64 {
            assert_eq!(a1.w_min_coset(&[i]), a1.sigma(2 * i - 1).unwrap());
        }
    }

    #[test]
    fn ball_sizes() {
        let a1 = RootDatum::a1();
        assert_eq!(a1.enumerate_ball(0).len(), 1);
        assert_eq!(a1.enumerate_ball(2).len(), 5);
        let a2 = RootDatum::a2();
        assert_eq!(a2.enumerate_ball(1).len(), 4);
    }

    #[test]
    fn bruhat_examples() {
        let a1 = RootDatum::a1();
        let ball = a1.enumerate_ball(4);
        for u in &ball {
            assert!(a1.bruhat_leq(&a1.identity(), u));
        }
        let s2 = a1.sigma(2).unwrap();
        let s3 = a1.sigma(3).unwrap();
        assert!(a1.bruhat_leq(&s2, &s3));
        assert!(!a1.bruhat_leq(&s3, &s2));
    }

    #[test]
    fn bruhat_matches_exhaustive_subword_oracle() {
        let a1 = RootDatum::a1();
        let ball = a1.enumerate_ball(5);
        for u in &ball {
            for v in &ball {
                let expected = subword_oracle(&a1, u, v);
                assert_eq!(a1.bruhat_leq(u, v), expected, "u={:?} v={:?}", u, v);
            }
        }
        let a2 = RootDatum::a2();
        let ball = a2.enumerate_ball(3);
        for u in &ball {
            for v in &ball {
                assert_eq!(a2.bruhat_leq(u, v), subword_oracle(&a2, u, v));
            }
        }
    }

    fn subword_oracle(d: &RootDatum, u: &AffineElt, v: &AffineElt) -> bool {
        // enumerate all subwords of the canonical word of v, compare elements
        let lu = d.length(u);
        let word = d.reduced_word(v);
        let n = word.len();
        for mask in 0u32..(1 << n) {
            if mask.count_ones() != lu {
                continue;
            }
            let sub: Vec<u8> = (0..n).filter(|&k| mask >> k & 1 == 1).map(|k| word[k]).collect();
            if d.word_to_element(&sub) == *u {
                return true;
            }
        }
        false
    }

    #[test]
    fn rejects_bad_cartan() {
        assert!(RootDatum::from_cartan("bad".into(), vec![vec![2, -1], vec![0, 2]]).is_err());
        assert!(RootDatum::from_cartan("bad".into(), vec![vec![1]]).is_err());
        // affine-type Cartan matrix is not finite
        assert!(RootDatum::from_cartan("bad".into(), vec![vec![2, -2], vec![-2, 2]]).is_err());
    }

    #[test]
    fn word_roundtrip_through_ball() {
        let a2 = RootDatum::a2();
        for u in a2.enumerate_ball(4) {
            let w = a2.reduced_word(&u);
            assert_eq!(w.len() as u32, a2.length(&u));
            assert_eq!(a2.word_to_element(&w), u);
        }
    }
}
