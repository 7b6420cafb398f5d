//! Signed generalized Verma coefficients `ε^λ_{μ,ν}` read off `𝔟(0)`, and the
//! Enright resolutions they encode.
//!
//! At blocks `(p,n,q)`, `ε^λ_{μ,ν}` is the coefficient of `e^{⟦λ,μ,ν⟧}` in
//! `𝔟(0)`. For fixed `λ` the nonzero coefficients, sorted by `|μ|+|ν|`, give
//! the terms of the resolution of `F̃^λ_{p,q}`: successive size classes sit in
//! successive homological degrees and the sign of each coefficient must be
//! `(−1)^{degree}`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lr::schur_polynomial;
use crate::partitions::{split, Partition, RationalWeight};
use crate::rootsys::{next_permutation, BlockStructure, Level, Weight};
use crate::series::{b0_series, ch_cv, ch_mpq, Grading, LaurentSeries};

/// Largest depth tried by [`resolution_auto`] unless told otherwise.
pub const DEFAULT_DEPTH_CEILING: i64 = 40;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct EpsilonEntry {
    pub lambda: RationalWeight,
    pub mu: Partition,
    pub nu: Partition,
    pub coeff: i64,
}

/// Why an `𝔪′`-dominant term of `𝔟(0)` was left out of the table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum ExclusionReason {
    /// The outer blocks do not decode to partitions `μ`, `ν`.
    NotPartitions,
    /// `ℓ(λ⁺) > p` or `ℓ(λ⁻) > q`.
    LengthBound,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Excluded {
    pub exponent: Vec<i32>,
    pub coeff: i64,
    pub reason: ExclusionReason,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EpsilonTable {
    pub p: usize,
    pub n: usize,
    pub q: usize,
    pub depth: i64,
    /// Every λ-slice present at `depth` is unchanged at `depth + 2`.
    pub stabilized: bool,
    pub entries: Vec<EpsilonEntry>,
    pub excluded: Vec<Excluded>,
}

impl EpsilonTable {
    pub fn get(&self, lambda: &RationalWeight, mu: &Partition, nu: &Partition) -> i64 {
        self.entries
            .iter()
            .find(|e| &e.lambda == lambda && &e.mu == mu && &e.nu == nu)
            .map_or(0, |e| e.coeff)
    }

    pub fn slice(&self, lambda: &RationalWeight) -> Vec<EpsilonEntry> {
        self.entries.iter().filter(|e| &e.lambda == lambda).cloned().collect()
    }
}

fn howe_conditions(bs: &BlockStructure, lambda: &RationalWeight) -> Result<()> {
    let (p, n, q) = bs.as_pnq()?;
    let (plus, minus) = split(lambda);
    if lambda.rank() != n || plus.len() > p || minus.len() > q {
        return Err(Error::Invalid(format!(
            "lambda {lambda} needs rank {n}, ℓ(λ+) ≤ {p}, ℓ(λ−) ≤ {q} at blocks ({p},{n},{q})"
        )));
    }
    Ok(())
}

/// Sort the `𝔪′`-dominant terms of `s` into table entries and exclusions.
fn extract_from(bs: &BlockStructure, s: &LaurentSeries) -> Result<(Vec<EpsilonEntry>, Vec<Excluded>)> {
    let (p, _, q) = bs.as_pnq()?;
    let mut entries = Vec::new();
    let mut excluded = Vec::new();
    for (e, &c) in s.terms() {
        let w = Weight(e.clone());
        if !bs.is_dominant(&w, Level::M, false) {
            continue;
        }
        match bs.triple_decode(&w) {
            Ok((lambda, mu, nu)) => {
                let (plus, minus) = split(&lambda);
                if plus.len() > p || minus.len() > q {
                    excluded.push(Excluded { exponent: e.clone(), coeff: c, reason: ExclusionReason::LengthBound });
                } else {
                    entries.push(EpsilonEntry { lambda, mu, nu, coeff: c });
                }
            }
            Err(_) => excluded.push(Excluded { exponent: e.clone(), coeff: c, reason: ExclusionReason::NotPartitions }),
        }
    }
    entries.sort();
    excluded.sort_by(|a, b| a.exponent.cmp(&b.exponent));
    Ok((entries, excluded))
}

fn group_by_lambda(entries: &[EpsilonEntry]) -> BTreeMap<Vec<i32>, Vec<EpsilonEntry>> {
    let mut out: BTreeMap<Vec<i32>, Vec<EpsilonEntry>> = BTreeMap::new();
    for e in entries {
        out.entry(e.lambda.entries().to_vec()).or_default().push(e.clone());
    }
    out
}

/// The table of `ε^λ_{μ,ν}` visible in `𝔟(0)` up to height `depth`.
pub fn epsilon_extract(bs: &BlockStructure, depth: i64) -> Result<EpsilonTable> {
    let (p, n, q) = bs.as_pnq()?;
    if depth < 2 {
        return Err(Error::Invalid(format!("depth must be at least 2, got {depth}")));
    }
    let deeper = b0_series(bs, depth + 2)?;
    let (entries, excluded) = extract_from(bs, &deeper.truncate(depth))?;
    let (more, _) = extract_from(bs, &deeper)?;
    let now = group_by_lambda(&entries);
    let later = group_by_lambda(&more);
    let stabilized = now.iter().all(|(l, slice)| later.get(l) == Some(slice));
    Ok(EpsilonTable { p, n, q, depth, stabilized, entries, excluded })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResolutionTerm {
    pub mu: Partition,
    pub nu: Partition,
    pub degree: u32,
    /// `±1`, always `(−1)^{degree}`.
    pub sign: i8,
    #[serde(default = "one", skip_serializing_if = "is_one")]
    pub multiplicity: u64,
}

fn one() -> u64 {
    1
}

fn is_one(m: &u64) -> bool {
    *m == 1
}

/// The terms `M_{μ,ν}` of a resolution of `F̃^λ_{p,q}`, by degree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Resolution {
    pub lambda: RationalWeight,
    pub terms: Vec<ResolutionTerm>,
    pub depth_used: i64,
    pub stabilized: bool,
}

impl Resolution {
    /// Largest homological degree, i.e. the length of the resolution.
    pub fn length(&self) -> u32 {
        self.terms.iter().map(|t| t.degree).max().unwrap_or(0)
    }

    /// Any coefficient other than `±1`.
    pub fn has_higher_multiplicity(&self) -> bool {
        self.terms.iter().any(|t| t.multiplicity != 1)
    }
}

/// Assign degrees by size class and verify the signs.
fn order_slice(lambda: &RationalWeight, slice: &[EpsilonEntry], depth: i64) -> Result<Vec<ResolutionTerm>> {
    if slice.is_empty() {
        return Err(Error::TruncationInsufficient { lambda: lambda.entries().to_vec(), depth });
    }
    let mut by_size: BTreeMap<u32, Vec<&EpsilonEntry>> = BTreeMap::new();
    for e in slice {
        by_size.entry(e.mu.size() + e.nu.size()).or_default().push(e);
    }
    let mut terms = Vec::new();
    for (degree, (size, group)) in by_size.into_iter().enumerate() {
        let degree = degree as u32;
        let expected = if degree.is_multiple_of(2) { 1 } else { -1 };
        if group.iter().any(|e| e.coeff.signum() != group[0].coeff.signum()) {
            return Err(Error::OrderingViolated(format!(
                "lambda {lambda}: terms of size {size} carry opposite signs, degree assignment is ambiguous"
            )));
        }
        let mut group = group;
        group.sort_by(|a, b| (a.mu.parts(), a.nu.parts()).cmp(&(b.mu.parts(), b.nu.parts())));
        for e in group {
            if e.coeff.signum() != expected {
                return Err(Error::OrderingViolated(format!(
                    "lambda {lambda}: M_({},{}) has coefficient {} at degree {degree}",
                    e.mu, e.nu, e.coeff
                )));
            }
            terms.push(ResolutionTerm {
                mu: e.mu.clone(),
                nu: e.nu.clone(),
                degree,
                sign: expected as i8,
                multiplicity: e.coeff.unsigned_abs(),
            });
        }
    }
    Ok(terms)
}

fn slices_at(bs: &BlockStructure, lambda: &RationalWeight, depth: i64) -> Result<(Vec<EpsilonEntry>, Vec<EpsilonEntry>)> {
    let deeper = b0_series(bs, depth + 2)?;
    let pick = |s: &LaurentSeries| -> Result<Vec<EpsilonEntry>> {
        Ok(extract_from(bs, s)?.0.into_iter().filter(|e| &e.lambda == lambda).collect())
    };
    Ok((pick(&deeper.truncate(depth))?, pick(&deeper)?))
}

/// The resolution of `F̃^λ_{p,q}` read off `𝔟(0)` at the given height.
pub fn resolution_of(bs: &BlockStructure, lambda: &RationalWeight, depth: i64) -> Result<Resolution> {
    howe_conditions(bs, lambda)?;
    let (now, later) = slices_at(bs, lambda, depth)?;
    let terms = order_slice(lambda, &now, depth)?;
    Ok(Resolution { lambda: lambda.clone(), terms, depth_used: depth, stabilized: now == later })
}

/// Whether the λ-slice is the same at `depth` and `depth + 2`.
pub fn stabilization_check(bs: &BlockStructure, lambda: &RationalWeight, depth: i64) -> Result<bool> {
    howe_conditions(bs, lambda)?;
    let (now, later) = slices_at(bs, lambda, depth)?;
    Ok(!now.is_empty() && now == later)
}

/// Pairs `(μ, ν)` whose `𝔤𝔩_{p+q}` weight `(μ* − n/2, ν + n/2) + ρ` is a
/// permutation of the one for `(λ⁺, λ⁻)`: the only labels that can share an
/// infinitesimal character with `F̃^λ`.
pub fn linked_labels(bs: &BlockStructure, lambda: &RationalWeight) -> Result<Vec<(Partition, Partition)>> {
    howe_conditions(bs, lambda)?;
    let (p, n, q) = bs.as_pnq()?;
    let m = p + q;
    let n = n as i32;
    // Doubled coordinates throughout.
    let rho: Vec<i32> = (0..m as i32).map(|i| m as i32 - 1 - 2 * i).collect();
    let shifted = |mu: &[i32], nu: &[i32]| -> Vec<i32> {
        // mu holds (μ_1..μ_p); μ* = (−μ_p..−μ_1).
        let mut v: Vec<i32> = mu.iter().rev().map(|x| -2 * x - n).collect();
        v.extend(nu.iter().map(|x| 2 * x + n));
        v.iter().zip(&rho).map(|(a, b)| a + b).collect()
    };
    let (plus, minus) = split(lambda);
    let to_i = |v: Vec<u32>| v.into_iter().map(|x| x as i32).collect::<Vec<_>>();
    let mut target = shifted(&to_i(plus.padded(p)), &to_i(minus.padded(q)));
    target.sort_unstable();
    let mut out = Vec::new();
    let mut perm = target;
    loop {
        let raw: Vec<i32> = perm.iter().zip(&rho).map(|(a, b)| a - b).collect();
        let mu: Option<Vec<u32>> = raw[..p]
            .iter()
            .rev()
            .map(|&x| {
                let y = -x - n;
                (y >= 0 && y % 2 == 0).then_some((y / 2) as u32)
            })
            .collect();
        let nu: Option<Vec<u32>> = raw[p..]
            .iter()
            .map(|&x| {
                let y = x - n;
                (y >= 0 && y % 2 == 0).then_some((y / 2) as u32)
            })
            .collect();
        if let (Some(mu), Some(nu)) = (mu, nu) {
            if let (Ok(mu), Ok(nu)) = (Partition::new(mu), Partition::new(nu)) {
                out.push((mu, nu));
            }
        }
        if !next_permutation(&mut perm) {
            break;
        }
    }
    out.sort_by(|a, b| (a.0.size() + a.1.size(), a.0.parts(), a.1.parts()).cmp(&(b.0.size() + b.1.size(), b.0.parts(), b.1.parts())));
    Ok(out)
}

/// Height at which every linked label of `λ` is inside the window.
pub fn linked_depth(bs: &BlockStructure, lambda: &RationalWeight) -> Result<i64> {
    let grading = Grading::height(bs.rank());
    let mut depth = 0;
    for (mu, nu) in linked_labels(bs, lambda)? {
        let w = bs.triple_encode(lambda, &mu, &nu)?;
        depth = depth.max(grading.grade(w.coords()));
    }
    Ok(depth)
}

/// Pick the depth automatically: start where all linked labels are visible,
/// then double until the slice is stable or `ceiling` is reached.
pub fn resolution_auto(bs: &BlockStructure, lambda: &RationalWeight, ceiling: i64) -> Result<Resolution> {
    howe_conditions(bs, lambda)?;
    let linked = linked_depth(bs, lambda)?;
    let mut depth = linked.max(2).min(ceiling.max(2));
    loop {
        let (now, later) = slices_at(bs, lambda, depth)?;
        // Below the linked depth a stable-looking slice can still be missing terms.
        let stable = !now.is_empty() && now == later && depth >= linked;
        if stable || depth >= ceiling {
            let terms = order_slice(lambda, &now, depth)?;
            return Ok(Resolution { lambda: lambda.clone(), terms, depth_used: depth, stabilized: stable });
        }
        depth = (depth * 2).min(ceiling);
    }
}

/// `Σ_{μ,ν} ε^λ_{μ,ν} ch(F^{μ*}_p ⊗ F^ν_q)`, graded by polynomial degree.
fn signed_k_characters(bs: &BlockStructure, res: &Resolution, grading: &Grading) -> Result<LaurentSeries> {
    let (p, n, q) = bs.as_pnq()?;
    let dim = p + n + q;
    let mut terms = Vec::new();
    for t in &res.terms {
        let coeff = t.sign as i64 * t.multiplicity as i64;
        let sp = schur_polynomial(&t.mu, p);
        let sq = schur_polynomial(&t.nu, q);
        for (ep, cp) in sp.iter() {
            for (eq, cq) in sq.iter() {
                let mut e = vec![0; dim];
                for i in 0..p {
                    e[i] = -(ep[i] as i32);
                }
                for j in 0..q {
                    e[p + n + j] = eq[j] as i32;
                }
                terms.push((e, coeff * cp * cq));
            }
        }
    }
    Ok(LaurentSeries::from_terms(grading.clone(), None, terms))
}

/// Check the resolution at the level of `𝔨`-characters up to polynomial
/// degree `depth`: `ch ℂ[M_{p,q}] · Σ ε ch(F^{μ*} ⊗ F^ν)` must have no negative
/// coefficients, and for `n = 1` it must equal the character of the
/// `λ`-isotypic part of `ℂ[V]`, counted monomial by monomial.
pub fn euler_character_check(bs: &BlockStructure, res: &Resolution, depth: i64) -> Result<bool> {
    howe_conditions(bs, &res.lambda)?;
    let (p, n, _) = bs.as_pnq()?;
    let grading = Grading::degree(bs);
    let euler = ch_mpq(bs, &grading, depth)?.mul(&signed_k_characters(bs, res, &grading)?)?;
    if euler.terms().any(|(_, &c)| c < 0) {
        return Ok(false);
    }
    if n == 1 {
        let lam = res.lambda.entries()[0];
        let isotypic = ch_cv(bs, &grading, depth)?.filter(|e| e[p] == lam);
        let mut shifted = vec![0; bs.rank()];
        shifted[p] = lam;
        let euler = euler.mul(&LaurentSeries::monomial(grading.clone(), None, shifted, 1))?;
        return Ok(euler.agrees_with(&isotypic));
    }
    Ok(true)
}
