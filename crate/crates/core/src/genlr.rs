//! Tensor product multiplicities for rational `GL_n` representations.
//!
//! In the stable range (`n ≥ ℓ(α⁺)+ℓ(α⁻)+ℓ(β⁺)+ℓ(β⁻)`) the coefficient
//! `c̄^γ_{α,β}` is a sum over hollow contingency tables of products of six
//! classical LR coefficients. Below that range no table rule is used: a
//! determinant twist turns the product into a polynomial one, which is exact
//! at every rank.

use std::collections::{BTreeMap, HashMap};

use crate::error::{Error, Result};
use crate::lr::{coproduct, lr_coeff, poly_mul, schur_polynomial, tensor_decompose};
use crate::partitions::{join, split, Partition, RationalWeight};

/// The six off-diagonal cells of a 3×3 table with zero diagonal.
///
/// Rows are indexed by `α⁺, β⁺, γ⁻` and columns by `α⁻, β⁻, γ⁺`; `t_rc` sits
/// in row `r`, column `c`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HollowTable {
    pub t12: Partition,
    pub t13: Partition,
    pub t21: Partition,
    pub t23: Partition,
    pub t31: Partition,
    pub t32: Partition,
}

impl HollowTable {
    /// Product of the six LR coefficients attached to the rows and columns.
    pub fn weight(&self, alpha: &RationalWeight, beta: &RationalWeight, gamma: &RationalWeight) -> u64 {
        let (ap, am) = split(alpha);
        let (bp, bm) = split(beta);
        let (gp, gm) = split(gamma);
        [
            (&ap, &self.t12, &self.t13),
            (&bp, &self.t21, &self.t23),
            (&gm, &self.t31, &self.t32),
            (&am, &self.t21, &self.t31),
            (&bm, &self.t12, &self.t32),
            (&gp, &self.t13, &self.t23),
        ]
        .iter()
        .map(|(outer, x, y)| lr_coeff(x, y, outer))
        .product()
    }
}

fn check_rank(w: &RationalWeight, n: usize, what: &str) -> Result<()> {
    if w.rank() != n {
        return Err(Error::Invalid(format!("{what} has rank {}, expected {n}", w.rank())));
    }
    Ok(())
}

/// Whether the hollow-table sum is exact for `α ⊗ β` at rank `n`.
pub fn in_stable_range(alpha: &RationalWeight, beta: &RationalWeight, n: usize) -> bool {
    let (ap, am) = split(alpha);
    let (bp, bm) = split(beta);
    ap.len() + am.len() + bp.len() + bm.len() <= n
}

/// Every table with nonzero weight for `α ⊗ β`, together with the partial
/// product of the four LR coefficients fixed by `α` and `β`. The `γ` rows and
/// columns are left open.
fn tables_for(alpha: &RationalWeight, beta: &RationalWeight) -> Vec<(HollowTable, u64)> {
    let (ap, am) = split(alpha);
    let (bp, bm) = split(beta);
    let cop_ap = coproduct(&ap);
    let cop_bp = coproduct(&bp);
    let cop_am = coproduct(&am);
    let cop_bm = coproduct(&bm);
    let mut out = Vec::new();
    for (t12, t13, c1) in cop_ap.iter() {
        for (t21, t23, c2) in cop_bp.iter() {
            for (a, t31, c4) in cop_am.iter() {
                if a != t21 {
                    continue;
                }
                for (b, t32, c5) in cop_bm.iter() {
                    if b != t12 {
                        continue;
                    }
                    let table = HollowTable {
                        t12: t12.clone(),
                        t13: t13.clone(),
                        t21: t21.clone(),
                        t23: t23.clone(),
                        t31: t31.clone(),
                        t32: t32.clone(),
                    };
                    out.push((table, c1 * c2 * c4 * c5));
                }
            }
        }
    }
    out
}

/// Hollow-table sum for `c̄^γ_{α,β}`, without any rank check.
pub fn hollow_table_sum(alpha: &RationalWeight, beta: &RationalWeight, gamma: &RationalWeight) -> u64 {
    let (gp, gm) = split(gamma);
    tables_for(alpha, beta)
        .into_iter()
        .map(|(t, c)| c * lr_coeff(&t.t13, &t.t23, &gp) * lr_coeff(&t.t31, &t.t32, &gm))
        .sum()
}

/// Shift a rank-`n` weight so its last entry is zero.
fn untwist(w: &RationalWeight) -> (Partition, i32) {
    let last = *w.entries().last().expect("rank ≥ 1");
    let shifted = w.shifted(-last);
    (shifted.to_partition().expect("shifted weight is polynomial"), last)
}

fn twisted_coeff(alpha: &RationalWeight, beta: &RationalWeight, gamma: &RationalWeight) -> u64 {
    let (a, sa) = untwist(alpha);
    let (b, sb) = untwist(beta);
    match gamma.shifted(-(sa + sb)).to_partition() {
        Some(g) => lr_coeff(&a, &b, &g),
        None => 0,
    }
}

/// `c̄^γ_{α,β}`: the multiplicity of `F^γ_n` in `F^α_n ⊗ F^β_n`.
pub fn gen_lr_coeff(alpha: &RationalWeight, beta: &RationalWeight, gamma: &RationalWeight, n: usize) -> Result<u64> {
    check_rank(alpha, n, "alpha")?;
    check_rank(beta, n, "beta")?;
    check_rank(gamma, n, "gamma")?;
    if n == 0 {
        return Ok(1);
    }
    if alpha.degree() + beta.degree() != gamma.degree() {
        return Ok(0);
    }
    if in_stable_range(alpha, beta, n) {
        Ok(hollow_table_sum(alpha, beta, gamma))
    } else {
        Ok(twisted_coeff(alpha, beta, gamma))
    }
}

/// Full decomposition of `F^α_n ⊗ F^β_n`, sorted by `γ` (descending).
pub fn gen_tensor_decompose(alpha: &RationalWeight, beta: &RationalWeight, n: usize) -> Result<Vec<(RationalWeight, u64)>> {
    check_rank(alpha, n, "alpha")?;
    check_rank(beta, n, "beta")?;
    let mut acc: BTreeMap<Vec<i32>, u64> = BTreeMap::new();
    if in_stable_range(alpha, beta, n) {
        for (t, c) in tables_for(alpha, beta) {
            for (gp, c6) in tensor_decompose(&t.t13, &t.t23, n) {
                for (gm, c3) in tensor_decompose(&t.t31, &t.t32, n) {
                    if let Ok(g) = join(&gp, &gm, n) {
                        *acc.entry(g.entries().to_vec()).or_insert(0) += c * c3 * c6;
                    }
                }
            }
        }
    } else {
        let (a, sa) = untwist(alpha);
        let (b, sb) = untwist(beta);
        for (g, c) in tensor_decompose(&a, &b, n) {
            let g: Vec<i32> = g.padded(n).iter().map(|&x| x as i32 + sa + sb).collect();
            *acc.entry(g).or_insert(0) += c;
        }
    }
    let mut out: Vec<(RationalWeight, u64)> = acc
        .into_iter()
        .filter(|(_, c)| *c > 0)
        .map(|(g, c)| (RationalWeight::new(g).expect("decreasing by construction"), c))
        .collect();
    out.reverse();
    Ok(out)
}

/// Blattner's multiplicity for one noncompact simple root, as the single
/// coefficient `c̄^{[η^p,η^q]}_{δ^p,[0,δ^q]}` at rank `p+q`.
pub fn hermitian_blattner_as_genlr(
    delta_p: &Partition,
    delta_q: &Partition,
    eta_p: &Partition,
    eta_q: &Partition,
    p: usize,
    q: usize,
) -> Result<u64> {
    if delta_p.len() > p || eta_p.len() > p || delta_q.len() > q || eta_q.len() > q {
        return Err(Error::Invalid(format!("partition lengths exceed (p,q)=({p},{q})")));
    }
    let n = p + q;
    let empty = Partition::empty();
    let alpha = join(delta_p, &empty, n)?;
    let beta = join(&empty, delta_q, n)?;
    let gamma = join(eta_p, eta_q, n)?;
    gen_lr_coeff(&alpha, &beta, &gamma, n)
}

/// Restriction `GL_{p+q} ↓ GL_p × GL_q`: every `(a, b, mult)` with `F^a_p ⊗ F^b_q`
/// occurring `mult` times in `F^γ_{p+q}`.
pub fn branch(gamma: &RationalWeight, p: usize, q: usize) -> Result<Vec<(RationalWeight, RationalWeight, u64)>> {
    check_rank(gamma, p + q, "gamma")?;
    let shift = (-gamma.entries().iter().copied().min().unwrap_or(0)).max(0);
    let g = gamma.shifted(shift).to_partition().expect("shifted to polynomial");
    let mut out = Vec::new();
    for (a, b, c) in coproduct(&g).iter() {
        if a.len() > p || b.len() > q {
            continue;
        }
        let a = a.to_weight(p)?.shifted(-shift);
        let b = b.to_weight(q)?.shifted(-shift);
        out.push((a, b, *c));
    }
    Ok(out)
}

/// Multiplicity of `F^a_p ⊗ F^b_q` in `F^γ_{p+q}`.
pub fn branching_coeff(gamma: &RationalWeight, a: &RationalWeight, b: &RationalWeight) -> Result<u64> {
    let (p, q) = (a.rank(), b.rank());
    check_rank(gamma, p + q, "gamma")?;
    let shift = (-gamma.entries().iter().copied().min().unwrap_or(0)).max(0);
    let g = gamma.shifted(shift).to_partition().expect("shifted to polynomial");
    match (a.shifted(shift).to_partition(), b.shifted(shift).to_partition()) {
        (Some(a), Some(b)) => Ok(lr_coeff(&a, &b, &g)),
        _ => Ok(0),
    }
}

/// `dim F^λ_n = Π_{i<j} (λ_i − λ_j + j − i) / (j − i)`.
pub fn weyl_dimension(lambda: &RationalWeight) -> u128 {
    let v = lambda.entries();
    let n = v.len();
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    for i in 0..n {
        for j in i + 1..n {
            num *= (v[i] - v[j]) as u128 + (j - i) as u128;
            den *= (j - i) as u128;
        }
    }
    num / den
}

/// A Laurent polynomial in `n` variables.
pub type LaurentPolynomial = HashMap<Vec<i32>, i64>;

/// Character of `F^λ_n`: `det^{λ_n} · s_{λ − λ_n}(x_1, …, x_n)`.
pub fn rational_character(lambda: &RationalWeight) -> LaurentPolynomial {
    let (base, shift) = untwist(lambda);
    schur_polynomial(&base, lambda.rank())
        .iter()
        .map(|(e, c)| (e.iter().map(|&x| x as i32 + shift).collect(), *c))
        .collect()
}

/// Decompose `F^α_n ⊗ F^β_n` by multiplying characters and peeling off the
/// lexicographically largest term. Independent of both LR-based routes.
pub fn laurent_schur_oracle(alpha: &RationalWeight, beta: &RationalWeight) -> Vec<(RationalWeight, u64)> {
    let n = alpha.rank();
    let (a, sa) = untwist(alpha);
    let (b, sb) = untwist(beta);
    let mut rest = poly_mul(&schur_polynomial(&a, n), &schur_polynomial(&b, n));
    let mut out = Vec::new();
    while let Some(lead) = rest.keys().max().cloned() {
        let c = rest[&lead];
        assert!(c > 0, "character peeling produced a negative multiplicity");
        let g = Partition::new(lead).expect("leading exponent is dominant");
        for (e, v) in schur_polynomial(&g, n).iter() {
            let entry = rest.entry(e.clone()).or_insert(0);
            *entry -= c * v;
            if *entry == 0 {
                rest.remove(e);
            }
        }
        let w = g.to_weight(n).expect("length ≤ n").shifted(sa + sb);
        out.push((w, c as u64));
    }
    out.sort_by(|x, y| y.0.entries().cmp(x.0.entries()));
    out
}
