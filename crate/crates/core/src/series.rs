//! Truncated multivariate Laurent series in ε-coordinates.
//!
//! A series is graded by an integer linear functional on exponents and stores
//! only terms of grade `≤ D`; all stored coefficients are exact. The default
//! grading is the height of the negated exponent in simple-root coordinates,
//! `grade(ξ) = −Σ_i (N−1−i)·ξ_i`, under which `e^{−α}` has grade `ht(α)`.
//!
//! Products track how far they stay exact: if `A` is exact to `D_A` with
//! lowest grade `a`, and `B` likewise, then `AB` is exact to
//! `min(D_A + b, D_B + a)`.

use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lr::schur_polynomial;
use crate::partitions::Partition;
use crate::rootsys::{BlockStructure, Level, Root, Weight};

/// Default truncation depth.
pub const DEFAULT_DEPTH: i64 = 30;

/// An integer linear functional on exponent vectors.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Grading {
    coeffs: Vec<i64>,
}

impl Grading {
    pub fn new(coeffs: Vec<i64>) -> Self {
        Grading { coeffs }
    }

    /// `height(−ξ)`: the sum of the simple-root coordinates of `−ξ`.
    pub fn height(n: usize) -> Self {
        Grading { coeffs: (0..n).map(|i| -((n - 1 - i) as i64)).collect() }
    }

    /// Polynomial degree in `x_i = e^{−ε_i}` (first block) and
    /// `y_j = e^{ε_j}` (last block); middle blocks are ungraded.
    pub fn degree(bs: &BlockStructure) -> Self {
        let last = bs.blocks().len() - 1;
        let coeffs = (0..bs.rank())
            .map(|c| match bs.block_of(c) {
                0 => -1,
                b if b == last => 1,
                _ => 0,
            })
            .collect();
        Grading { coeffs }
    }

    pub fn rank(&self) -> usize {
        self.coeffs.len()
    }

    pub fn grade(&self, e: &[i32]) -> i64 {
        self.coeffs.iter().zip(e).map(|(g, &x)| g * x as i64).sum()
    }
}

/// One `(exponent, coefficient)` pair, as emitted in JSON.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesTerm {
    pub exponent: Vec<i32>,
    pub coeff: i64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentSeries {
    grading: Grading,
    /// `None`: exact (a Laurent polynomial).
    depth: Option<i64>,
    terms: HashMap<Vec<i32>, i64>,
}

impl LaurentSeries {
    pub fn zero(grading: Grading, depth: Option<i64>) -> Self {
        LaurentSeries { grading, depth, terms: HashMap::new() }
    }

    pub fn one(grading: Grading, depth: Option<i64>) -> Self {
        let n = grading.rank();
        Self::monomial(grading, depth, vec![0; n], 1)
    }

    pub fn monomial(grading: Grading, depth: Option<i64>, exponent: Vec<i32>, coeff: i64) -> Self {
        Self::from_terms(grading, depth, [(exponent, coeff)])
    }

    /// Sum up the given terms, dropping zeros and anything beyond the depth.
    pub fn from_terms(grading: Grading, depth: Option<i64>, terms: impl IntoIterator<Item = (Vec<i32>, i64)>) -> Self {
        let mut s = Self::zero(grading, depth);
        for (e, c) in terms {
            assert_eq!(e.len(), s.rank(), "exponent rank mismatch");
            s.add_term(e, c);
        }
        s.terms.retain(|_, c| *c != 0);
        s
    }

    fn add_term(&mut self, e: Vec<i32>, c: i64) {
        if c != 0 && self.in_window(&e) {
            *self.terms.entry(e).or_insert(0) += c;
        }
    }

    fn in_window(&self, e: &[i32]) -> bool {
        self.depth.is_none_or(|d| self.grading.grade(e) <= d)
    }

    pub fn rank(&self) -> usize {
        self.grading.rank()
    }

    pub fn grading(&self) -> &Grading {
        &self.grading
    }

    pub fn depth(&self) -> Option<i64> {
        self.depth
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i32>, &i64)> {
        self.terms.iter()
    }

    /// Terms sorted by grade, then lexicographically by exponent.
    pub fn sorted_terms(&self) -> Vec<SeriesTerm> {
        let mut v: Vec<SeriesTerm> =
            self.terms.iter().map(|(e, &c)| SeriesTerm { exponent: e.clone(), coeff: c }).collect();
        v.sort_by_cached_key(|t| (self.grading.grade(&t.exponent), t.exponent.clone()));
        v
    }

    fn min_grade(&self) -> Option<i64> {
        self.terms.keys().map(|e| self.grading.grade(e)).min()
    }

    /// Coefficient of `e^ξ`; querying outside the window is an error.
    pub fn coefficient(&self, xi: &[i32]) -> Result<i64> {
        if xi.len() != self.rank() {
            return Err(Error::Invalid(format!("exponent has rank {}, expected {}", xi.len(), self.rank())));
        }
        let grade = self.grading.grade(xi);
        if let Some(depth) = self.depth {
            if grade > depth {
                return Err(Error::Truncation { exponent: xi.to_vec(), grade, depth });
            }
        }
        Ok(self.terms.get(xi).copied().unwrap_or(0))
    }

    /// Drop everything above `depth`.
    pub fn truncate(&self, depth: i64) -> Self {
        let depth = self.depth.map_or(depth, |d| d.min(depth));
        let terms = self.terms.iter().filter(|(e, _)| self.grading.grade(e) <= depth).map(|(e, c)| (e.clone(), *c));
        Self::from_terms(self.grading.clone(), Some(depth), terms)
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.grading != other.grading {
            return Err(Error::Invalid("series have different gradings".into()));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let depth = min_depth(self.depth, other.depth);
        let terms = self.terms.iter().chain(other.terms.iter()).map(|(e, c)| (e.clone(), *c));
        Ok(Self::from_terms(self.grading.clone(), depth, terms))
    }

    pub fn neg(&self) -> Self {
        LaurentSeries {
            grading: self.grading.clone(),
            depth: self.depth,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn scale(&self, k: i64) -> Self {
        let terms = self.terms.iter().map(|(e, c)| (e.clone(), c * k));
        Self::from_terms(self.grading.clone(), self.depth, terms)
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let depth = match (self.min_grade(), other.min_grade()) {
            (Some(a), Some(b)) => min_depth(self.depth.map(|d| d + b), other.depth.map(|d| d + a)),
            _ => min_depth(self.depth, other.depth),
        };
        let mut out = Self::zero(self.grading.clone(), depth);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e: Vec<i32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                out.add_term(e, ca * cb);
            }
        }
        out.terms.retain(|_, c| *c != 0);
        Ok(out)
    }

    /// Multiply by `(1 − e^v)` for a `v` of positive grade.
    pub fn mul_one_minus(&self, v: &[i32]) -> Self {
        let mut out = self.clone();
        for (e, c) in &self.terms {
            let shifted: Vec<i32> = e.iter().zip(v).map(|(x, y)| x + y).collect();
            out.add_term(shifted, -c);
        }
        out.terms.retain(|_, c| *c != 0);
        out
    }

    /// Multiply by `Σ_{k≥0} e^{kv}`; needs a finite depth and `grade(v) > 0`.
    pub fn div_one_minus(&self, v: &[i32]) -> Result<Self> {
        let h = self.grading.grade(v);
        let depth = self
            .depth
            .ok_or_else(|| Error::Unsupported("geometric series need a finite truncation depth".into()))?;
        if h <= 0 {
            return Err(Error::Unsupported(format!("exponent {v:?} has grade {h} ≤ 0, series would not truncate")));
        }
        let mut buckets: BTreeMap<i64, HashMap<Vec<i32>, i64>> = BTreeMap::new();
        for (e, &c) in &self.terms {
            buckets.entry(self.grading.grade(e)).or_default().insert(e.clone(), c);
        }
        let mut out = Self::zero(self.grading.clone(), Some(depth));
        while let Some((g, bucket)) = buckets.pop_first() {
            for (e, c) in bucket {
                if c == 0 {
                    continue;
                }
                if g + h <= depth {
                    let next: Vec<i32> = e.iter().zip(v).map(|(x, y)| x + y).collect();
                    *buckets.entry(g + h).or_default().entry(next).or_insert(0) += c;
                }
                out.terms.insert(e, c);
            }
        }
        Ok(out)
    }

    /// Keep only the terms whose exponent satisfies `keep`.
    pub fn filter(&self, keep: impl Fn(&[i32]) -> bool) -> Self {
        LaurentSeries {
            grading: self.grading.clone(),
            depth: self.depth,
            terms: self.terms.iter().filter(|(e, _)| keep(e)).map(|(e, c)| (e.clone(), *c)).collect(),
        }
    }

    /// Same terms and depth as `other` once both are cut to the smaller depth.
    pub fn agrees_with(&self, other: &Self) -> bool {
        let d = match min_depth(self.depth, other.depth) {
            Some(d) => d,
            None => return self.terms == other.terms,
        };
        self.truncate(d).terms == other.truncate(d).terms
    }
}

fn min_depth(a: Option<i64>, b: Option<i64>) -> Option<i64> {
    match (a, b) {
        (Some(x), Some(y)) => Some(x.min(y)),
        (x, None) => x,
        (None, y) => y,
    }
}

fn neg_root(root: &Root, n: usize) -> Vec<i32> {
    root.to_weight(n).scaled(-1).0
}

/// `Π_α (1 − e^{−α})`, truncated at `depth`.
pub fn delta_product(roots: &[Root], grading: &Grading, depth: i64) -> LaurentSeries {
    let n = grading.rank();
    roots
        .iter()
        .fold(LaurentSeries::one(grading.clone(), Some(depth)), |s, r| s.mul_one_minus(&neg_root(r, n)))
}

/// `Π_α 1/(1 − e^{−α})`, truncated at `depth`.
pub fn geometric_inverse(roots: &[Root], grading: &Grading, depth: i64) -> Result<LaurentSeries> {
    let n = grading.rank();
    roots
        .iter()
        .try_fold(LaurentSeries::one(grading.clone(), Some(depth)), |s, r| s.div_one_minus(&neg_root(r, n)))
}

/// `𝔟(0) = Π_{α∈Φ⁺_c} (1 − e^{−α}) / Π_{α∈Φ⁺_nc} (1 − e^{−α})` under the
/// height grading. For blocks `(p,n,q)` the compact roots are `Φ_{𝔪′} ∪ Φ̄_{𝔪′}`,
/// so this is `Δ_{𝔪′} · Δ̄_{𝔪′} / Δ_{𝔲′⁺}`.
pub fn b0_series(bs: &BlockStructure, depth: i64) -> Result<LaurentSeries> {
    b0_series_graded(bs, &Grading::height(bs.rank()), depth)
}

pub fn b0_series_graded(bs: &BlockStructure, grading: &Grading, depth: i64) -> Result<LaurentSeries> {
    let n = bs.rank();
    let (compact, noncompact) = bs.positive_roots();
    let mut s = geometric_inverse(&noncompact, grading, depth)?;
    for r in &compact {
        s = s.mul_one_minus(&neg_root(r, n));
    }
    Ok(s)
}

/// `ch L_{𝔨′}(δ)`: per compactness class, `det^{δ_last} · s_{δ − δ_last}` in
/// the class variables.
pub fn k_character(bs: &BlockStructure, delta: &Weight, grading: &Grading) -> Result<LaurentSeries> {
    if delta.rank() != bs.rank() {
        return Err(Error::Invalid(format!("delta has rank {}, expected {}", delta.rank(), bs.rank())));
    }
    if !bs.is_dominant(delta, Level::K, false) {
        return Err(Error::Invalid(format!("delta {delta} is not k'-dominant")));
    }
    let n = bs.rank();
    let mut acc: Vec<(Vec<i32>, i64)> = vec![(vec![0; n], 1)];
    for class in bs.classes() {
        let vals: Vec<i32> = class.iter().map(|&c| delta.0[c]).collect();
        let last = *vals.last().expect("classes are nonempty");
        let base = Partition::new(vals.iter().map(|&x| (x - last) as u32).collect())?;
        let poly = schur_polynomial(&base, class.len());
        let mut next = Vec::with_capacity(acc.len() * poly.len());
        for (e, c) in &acc {
            for (pe, pc) in poly.iter() {
                let mut e = e.clone();
                for (k, &coord) in class.iter().enumerate() {
                    e[coord] = pe[k] as i32 + last;
                }
                next.push((e, c * pc));
            }
        }
        acc = next;
    }
    Ok(LaurentSeries::from_terms(grading.clone(), None, acc))
}

/// `𝔟(δ) = ch L_{𝔨′}(δ) · 𝔟(0)`, exact up to `depth`.
pub fn b_delta_series(bs: &BlockStructure, delta: &Weight, depth: i64) -> Result<LaurentSeries> {
    let grading = Grading::height(bs.rank());
    let ch = k_character(bs, delta, &grading)?;
    let lowest = ch.min_grade().unwrap_or(0);
    let b0 = b0_series_graded(bs, &grading, depth - lowest)?;
    Ok(ch.mul(&b0)?.truncate(depth))
}

/// Terms whose exponents are dominant at `level`.
pub fn dominant_filter(s: &LaurentSeries, bs: &BlockStructure, level: Level) -> LaurentSeries {
    s.filter(|e| bs.is_dominant(&Weight(e.to_vec()), level, false))
}

/// Coefficient of `e^ξ`, or a truncation error outside the window.
pub fn coefficient(s: &LaurentSeries, xi: &Weight) -> Result<i64> {
    s.coefficient(xi.coords())
}

/// Graded character of the polynomial ring whose variables have the given
/// weights, by enumerating monomials up to `depth`.
pub fn monomial_character(variables: &[Vec<i32>], grading: &Grading, depth: i64) -> Result<LaurentSeries> {
    let grades: Vec<i64> = variables.iter().map(|v| grading.grade(v)).collect();
    if let Some(g) = grades.iter().find(|&&g| g <= 0) {
        return Err(Error::Unsupported(format!("variable of grade {g} makes the ring character infinite in the window")));
    }
    fn rec(
        k: usize,
        vars: &[Vec<i32>],
        grades: &[i64],
        left: i64,
        cur: &mut Vec<i32>,
        out: &mut Vec<(Vec<i32>, i64)>,
    ) {
        if k == vars.len() {
            out.push((cur.clone(), 1));
            return;
        }
        let mut used = 0;
        loop {
            rec(k + 1, vars, grades, left - used * grades[k], cur, out);
            used += 1;
            if used * grades[k] > left {
                break;
            }
            for (c, v) in cur.iter_mut().zip(&vars[k]) {
                *c += v;
            }
        }
        for (c, v) in cur.iter_mut().zip(&vars[k]) {
            *c -= v * (used - 1) as i32;
        }
    }
    let mut out = Vec::new();
    if depth >= 0 {
        rec(0, variables, &grades, depth, &mut vec![0; grading.rank()], &mut out);
    }
    Ok(LaurentSeries::from_terms(grading.clone(), Some(depth), out))
}

/// Torus weights of the coordinates `x_{ai}`, `y_{aj}` of `V = M_{n,p} ⊕ M_{n,q}`.
pub fn cv_variable_weights(bs: &BlockStructure) -> Result<Vec<Vec<i32>>> {
    let (p, n, q) = bs.as_pnq()?;
    let dim = p + n + q;
    let mut vars = Vec::new();
    for a in 0..n {
        for i in 0..p {
            let mut v = vec![0; dim];
            v[p + a] += 1;
            v[p - 1 - i] -= 1;
            vars.push(v);
        }
        for j in 0..q {
            let mut v = vec![0; dim];
            v[p + a] -= 1;
            v[p + n + j] += 1;
            vars.push(v);
        }
    }
    Ok(vars)
}

/// Torus weights of the coordinates `z_{ij}` of `M_{p,q}`.
pub fn mpq_variable_weights(bs: &BlockStructure) -> Result<Vec<Vec<i32>>> {
    let (p, n, q) = bs.as_pnq()?;
    let dim = p + n + q;
    let mut vars = Vec::new();
    for i in 0..p {
        for j in 0..q {
            let mut v = vec![0; dim];
            v[p - 1 - i] -= 1;
            v[p + n + j] += 1;
            vars.push(v);
        }
    }
    Ok(vars)
}

/// `ch ℂ[V]` up to `depth`.
pub fn ch_cv(bs: &BlockStructure, grading: &Grading, depth: i64) -> Result<LaurentSeries> {
    monomial_character(&cv_variable_weights(bs)?, grading, depth)
}

/// `ch ℂ[M_{p,q}]` up to `depth`.
pub fn ch_mpq(bs: &BlockStructure, grading: &Grading, depth: i64) -> Result<LaurentSeries> {
    monomial_character(&mpq_variable_weights(bs)?, grading, depth)
}
