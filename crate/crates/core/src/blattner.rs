//! Blattner's multiplicity `B(δ, η)` and the noncompact partition function `Q`.
//!
//! Three routes are provided:
//!
//! * [`blattner_direct`]: the alternating sum over the compact Weyl group,
//!   `B(δ,η) = Σ_w (−1)^{ℓ(w)} Q(w(δ+ρ_c) − ρ_c − η)`;
//! * [`blattner_hermitian`]: for one noncompact simple root (blocks `(p,q)`),
//!   `Σ_ξ c^{δ^p}_{ξ,η^p} c^{δ^q}_{ξ,η^q}`;
//! * [`blattner_two_nc_stable`]: for blocks `(p,n,q)` with `n ≥ p+q`, a sum of
//!   products of four tensor/branching multiplicities.
//!
//! In the one-root case a `K`-weight `(δ^p, δ^q)` is the ε-vector
//! `[δ^p, δ^q]` of rank `p+q`. In the two-root case a `K′`-weight is read
//! as `(dual of the first block, middle block, last block)`.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use crate::error::{Error, Result};
use crate::genlr::{branch, gen_lr_coeff};
use crate::lr::lr_coeff;
use crate::partitions::{join, partitions_of, Partition, RationalWeight};
use crate::rootsys::{BlockStructure, CompactWeylElement, HalfWeight, Level, RootKind, Weight, DEFAULT_WEYL_CAP};

/// `Q(ξ)`: the number of ways to write `ξ` as a sum of noncompact positive
/// roots, with a shared memo table.
pub struct PartitionFunction {
    n: usize,
    /// `partners[i]`: the `j > i` with `ε_i − ε_j` noncompact.
    partners: Vec<Vec<usize>>,
    memo: Mutex<HashMap<(usize, Vec<i32>), u64>>,
}

impl PartitionFunction {
    pub fn new(bs: &BlockStructure) -> Self {
        let n = bs.rank();
        let mut partners = vec![Vec::new(); n];
        for r in bs.noncompact_positive_roots() {
            partners[r.i].push(r.j);
        }
        PartitionFunction { n, partners, memo: Mutex::new(HashMap::new()) }
    }

    pub fn count(&self, xi: &[i32]) -> u64 {
        assert_eq!(xi.len(), self.n, "weight rank mismatch");
        if xi.iter().sum::<i32>() != 0 {
            return 0;
        }
        // ξ must lie in the cone of positive roots: every prefix sum is ≥ 0.
        let mut prefix = 0;
        for &x in xi {
            prefix += x;
            if prefix < 0 {
                return 0;
            }
        }
        self.count_from(0, xi.to_vec())
    }

    /// Roots with tail index `< i` have been used up; `rem` is what is left,
    /// and its entries before `i` are already zero.
    fn count_from(&self, i: usize, rem: Vec<i32>) -> u64 {
        if i == self.n {
            return 1;
        }
        let r = rem[i];
        if r < 0 {
            return 0;
        }
        if r > 0 && self.partners[i].is_empty() {
            return 0;
        }
        let key = (i, rem[i..].to_vec());
        if let Some(&v) = self.memo.lock().unwrap().get(&key) {
            return v;
        }
        let mut rem = rem;
        rem[i] = 0;
        let v = self.distribute(i, 0, r, &mut rem);
        rem[i] = r;
        self.memo.lock().unwrap().insert(key, v);
        v
    }

    /// Split `left` copies of `ε_i` among the partners of `i` from index `k` on.
    fn distribute(&self, i: usize, k: usize, left: i32, rem: &mut Vec<i32>) -> u64 {
        let partners = &self.partners[i];
        if k + 1 == partners.len() {
            let j = partners[k];
            rem[j] += left;
            let v = self.count_from(i + 1, rem.clone());
            rem[j] -= left;
            return v;
        }
        if partners.is_empty() {
            return if left == 0 { self.count_from(i + 1, rem.clone()) } else { 0 };
        }
        let j = partners[k];
        let mut total = 0;
        for c in 0..=left {
            rem[j] += c;
            total += self.distribute(i, k + 1, left - c, rem);
            rem[j] -= c;
        }
        total
    }
}

/// Everything `B(δ, ·)` needs for one block structure.
pub struct BlattnerContext {
    bs: BlockStructure,
    q: PartitionFunction,
    weyl: Vec<CompactWeylElement>,
    rho_c: HalfWeight,
}

impl BlattnerContext {
    pub fn new(bs: &BlockStructure, weyl_cap: u64) -> Result<Self> {
        let weyl = bs.compact_weyl_group_capped(weyl_cap)?.collect();
        Ok(BlattnerContext {
            bs: bs.clone(),
            q: PartitionFunction::new(bs),
            weyl,
            rho_c: bs.rho(RootKind::Compact),
        })
    }

    pub fn block_structure(&self) -> &BlockStructure {
        &self.bs
    }

    pub fn q_count(&self, xi: &Weight) -> u64 {
        self.q.count(xi.coords())
    }

    /// The alternating Weyl sum; `δ` is assumed `𝔨′`-dominant.
    pub fn direct(&self, delta: &Weight, eta: &Weight) -> i64 {
        let shifted = HalfWeight::from_weight(delta).add(&self.rho_c);
        let target = HalfWeight::from_weight(eta).add(&self.rho_c);
        let mut total = 0i64;
        for w in &self.weyl {
            let moved = HalfWeight { doubled: w.act(&shifted.doubled) };
            let xi = moved.sub(&target).to_weight().expect("w(δ+ρ_c) − ρ_c is integral");
            let q = self.q.count(xi.coords()) as i64;
            total += w.sign() * q;
        }
        total
    }
}

fn context_registry() -> &'static Mutex<HashMap<Vec<usize>, Arc<BlattnerContext>>> {
    static REG: OnceLock<Mutex<HashMap<Vec<usize>, Arc<BlattnerContext>>>> = OnceLock::new();
    REG.get_or_init(Default::default)
}

/// Shared context for `bs` (memo tables survive across calls).
pub fn context(bs: &BlockStructure) -> Result<Arc<BlattnerContext>> {
    if let Some(c) = context_registry().lock().unwrap().get(bs.blocks()) {
        return Ok(c.clone());
    }
    let ctx = Arc::new(BlattnerContext::new(bs, DEFAULT_WEYL_CAP)?);
    let mut reg = context_registry().lock().unwrap();
    Ok(reg.entry(bs.blocks().to_vec()).or_insert(ctx).clone())
}

/// `Q(ξ)` for the noncompact positive roots of `bs`.
pub fn q_count(xi: &Weight, bs: &BlockStructure) -> Result<u64> {
    check_rank(bs, xi, "xi")?;
    Ok(context(bs)?.q_count(xi))
}

fn check_rank(bs: &BlockStructure, w: &Weight, what: &str) -> Result<()> {
    if w.rank() != bs.rank() {
        return Err(Error::Invalid(format!("{what} has rank {}, expected {}", w.rank(), bs.rank())));
    }
    Ok(())
}

/// A validated `(bs, δ, η)` with `δ` `𝔨′`-dominant.
#[derive(Clone, Debug)]
pub struct BlattnerQuery {
    pub bs: BlockStructure,
    pub delta: Weight,
    pub eta: Weight,
}

impl BlattnerQuery {
    pub fn new(bs: BlockStructure, delta: Weight, eta: Weight) -> Result<Self> {
        check_rank(&bs, &delta, "delta")?;
        check_rank(&bs, &eta, "eta")?;
        if !bs.is_dominant(&delta, Level::K, false) {
            return Err(Error::Invalid(format!("delta {delta} is not k'-dominant")));
        }
        Ok(BlattnerQuery { bs, delta, eta })
    }
}

/// `B(δ,η) = Σ_{w ∈ W_𝔨} (−1)^{ℓ(w)} Q(w(δ+ρ_c) − ρ_c − η)`. Raw value; it
/// may be negative when `η` is not a genuine lowest `K`-type.
pub fn blattner_direct(q: &BlattnerQuery) -> Result<i64> {
    Ok(context(&q.bs)?.direct(&q.delta, &q.eta))
}

/// `η + ρ_c − ρ_nc` is `𝔤`-dominant regular (strictly decreasing).
pub fn check_hs_hypothesis(bs: &BlockStructure, eta: &Weight) -> Result<bool> {
    check_rank(bs, eta, "eta")?;
    let v = HalfWeight::from_weight(eta).add(&bs.rho(RootKind::Compact)).sub(&bs.rho(RootKind::Noncompact));
    Ok(v.doubled.windows(2).all(|x| x[0] > x[1]))
}

/// `Σ_ξ c^{δ^p}_{ξ,η^p} c^{δ^q}_{ξ,η^q}` over `ξ` with `ℓ(ξ) ≤ min(p,q)`.
pub fn blattner_hermitian(
    p: usize,
    q: usize,
    delta_p: &Partition,
    delta_q: &Partition,
    eta_p: &Partition,
    eta_q: &Partition,
) -> Result<u64> {
    if delta_p.len() > p || eta_p.len() > p || delta_q.len() > q || eta_q.len() > q {
        return Err(Error::Invalid(format!("partition lengths exceed (p,q)=({p},{q})")));
    }
    let (dp, ep) = (delta_p.size() as i64, eta_p.size() as i64);
    let (dq, eq) = (delta_q.size() as i64, eta_q.size() as i64);
    if dp - ep != dq - eq || dp < ep {
        return Ok(0);
    }
    let size = (dp - ep) as u32;
    Ok(partitions_of(size, p.min(q), u32::MAX)
        .iter()
        .map(|xi| lr_coeff(xi, eta_p, delta_p) * lr_coeff(xi, eta_q, delta_q))
        .sum())
}

/// The ε-vector `[δ^p, δ^q]` of a `GL_p × GL_q` weight given by two partitions.
pub fn hermitian_weight(p: usize, q: usize, plus: &Partition, minus: &Partition) -> Result<Weight> {
    if plus.len() > p || minus.len() > q {
        return Err(Error::Invalid(format!("partition lengths exceed (p,q)=({p},{q})")));
    }
    Ok(Weight(join(plus, minus, p + q)?.entries().to_vec()))
}

/// `(δ^p, δ^n, δ^q)` read off a `𝔨′`-weight at blocks `(p,n,q)`: the first
/// block dualized, the middle and last blocks as they stand.
pub fn decode_k_weight(bs: &BlockStructure, w: &Weight) -> Result<(RationalWeight, RationalWeight, RationalWeight)> {
    let (mu, lambda, nu) = bs.triple_split(w)?;
    Ok((RationalWeight::new(mu)?, RationalWeight::new(lambda)?, RationalWeight::new(nu)?))
}

/// Stable two-root formula, valid for blocks `(p,n,q)` with `n ≥ p+q`:
///
/// `B(δ,η) = Σ_{λ,μ,ν} m(⟦δ^p,δ^q⟧; μ*, ν) · c̄^{η^n}_{δ^n,λ} · c̄^{η^p}_{μ,λ⁺} · c̄^{η^q}_{ν,λ⁻}`
///
/// where `m` is the `GL_{p+q} ↓ GL_p × GL_q` branching multiplicity, `μ*` the
/// dual of `μ`, and `λ = [λ⁺, λ⁻]` runs over rank-`n` weights with
/// `ℓ(λ⁺) ≤ p`, `ℓ(λ⁻) ≤ q`.
pub fn blattner_two_nc_stable(bs: &BlockStructure, delta: &Weight, eta: &Weight) -> Result<u64> {
    let (p, n, q) = bs.as_pnq()?;
    if n < p + q {
        return Err(Error::Unsupported(format!("stable formula needs n ≥ p+q, got (p,n,q)=({p},{n},{q})")));
    }
    check_rank(bs, delta, "delta")?;
    check_rank(bs, eta, "eta")?;
    for (what, w) in [("delta", delta), ("eta", eta)] {
        if !bs.is_dominant(w, Level::K, false) {
            return Err(Error::Invalid(format!("{what} {w} is not k'-dominant")));
        }
    }
    let (_, delta_n, _) = decode_k_weight(bs, delta)?;
    let (eta_p, eta_n, eta_q) = decode_k_weight(bs, eta)?;
    let outer: Vec<i32> = delta.0[..p].iter().chain(&delta.0[p + n..]).copied().collect();
    let gamma = RationalWeight::new(outer)?;
    let mut total = 0u64;
    for (a, nu, mult) in branch(&gamma, p, q)? {
        let mu = a.dual();
        let plus_size = eta_p.degree() - mu.degree();
        let minus_size = eta_q.degree() - nu.degree();
        if plus_size < 0 || minus_size < 0 {
            continue;
        }
        for lp in partitions_of(plus_size as u32, p, u32::MAX) {
            let lp_w = lp.to_weight(p)?;
            let c_p = gen_lr_coeff(&mu, &lp_w, &eta_p, p)?;
            if c_p == 0 {
                continue;
            }
            for lm in partitions_of(minus_size as u32, q, u32::MAX) {
                let c_q = gen_lr_coeff(&nu, &lm.to_weight(q)?, &eta_q, q)?;
                if c_q == 0 {
                    continue;
                }
                let lambda = join(&lp, &lm, n)?;
                let c_n = gen_lr_coeff(&delta_n, &lambda, &eta_n, n)?;
                total += mult * c_n * c_p * c_q;
            }
        }
    }
    Ok(total)
}
