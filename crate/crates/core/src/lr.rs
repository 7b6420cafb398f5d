//! Classical Littlewood–Richardson coefficients.
//!
//! [`lr_coeff`] counts LR skew tableaux by backtracking over row contents.
//! [`schur_oracle`] is an unrelated second route (expand Schur polynomials
//! into monomials, multiply, peel off leading terms) used to cross-check it.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use crate::partitions::{partitions_of, partitions_up_to, subpartitions, Partition};

type LrKey = (Vec<u32>, Vec<u32>, Vec<u32>);

fn lr_cache() -> &'static Mutex<HashMap<LrKey, u64>> {
    static CACHE: OnceLock<Mutex<HashMap<LrKey, u64>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// `c^γ_{α,β}`: the multiplicity of `s_γ` in `s_α·s_β`.
pub fn lr_coeff(alpha: &Partition, beta: &Partition, gamma: &Partition) -> u64 {
    if alpha.size() + beta.size() != gamma.size() || !gamma.contains(alpha) || !gamma.contains(beta) {
        return 0;
    }
    if alpha.is_empty() || beta.is_empty() {
        return 1;
    }
    // Count tableaux of shape γ/α with content β, putting the longer partition inside
    // (fewer skew rows to fill is not guaranteed, but it keeps the key canonical).
    let (inner, content) = if alpha.parts() >= beta.parts() { (alpha, beta) } else { (beta, alpha) };
    let key = (inner.parts().to_vec(), content.parts().to_vec(), gamma.parts().to_vec());
    if let Some(&v) = lr_cache().lock().unwrap().get(&key) {
        return v;
    }
    let v = count_lr_tableaux(inner, content, gamma);
    lr_cache().lock().unwrap().insert(key, v);
    v
}

/// Row-content backtracking. `m[r][i]` is the number of entries `i+1` in
/// skew row `r`; rows are filled top to bottom.
fn count_lr_tableaux(alpha: &Partition, beta: &Partition, gamma: &Partition) -> u64 {
    let rows = gamma.len();
    let k = beta.len();
    let st = LrState {
        alpha: alpha.padded(rows),
        gamma: gamma.padded(rows),
        beta: beta.padded(k),
        k,
    };
    let mut m = vec![vec![0u32; k]; rows];
    let mut used = vec![0u32; k];
    st.fill_row(0, &mut m, &mut used)
}

struct LrState {
    alpha: Vec<u32>,
    gamma: Vec<u32>,
    beta: Vec<u32>,
    k: usize,
}

impl LrState {
    fn fill_row(&self, r: usize, m: &mut [Vec<u32>], used: &mut [u32]) -> u64 {
        if r == self.gamma.len() {
            return u64::from(used.iter().zip(&self.beta).all(|(u, b)| u == b));
        }
        let len = self.gamma[r] - self.alpha[r];
        self.fill_entry(r, 0, len, m, used)
    }

    /// Choose `m[r][i]` given `m[r][..i]`; `left` cells of row `r` remain.
    fn fill_entry(&self, r: usize, i: usize, left: u32, m: &mut [Vec<u32>], used: &mut [u32]) -> u64 {
        if i == self.k || i > r {
            if left != 0 {
                return 0;
            }
            return self.fill_row(r + 1, m, used);
        }
        let mut hi = left.min(self.beta[i] - used[i]);
        if i > 0 {
            // Lattice condition: #(i+1) through row r ≤ #i through row r−1.
            let prev_i = used[i - 1] - m[r][i - 1];
            hi = hi.min(prev_i.saturating_sub(used[i]));
            if used[i] > prev_i {
                return 0;
            }
        }
        let filled_before: u32 = m[r][..i].iter().sum();
        if r > 0 {
            // Column strictness: entries ≤ i+1 in row r end strictly left of
            // where entries ≥ i+1 begin in row r−1.
            let above: u32 = self.alpha[r - 1] + m[r - 1][..i].iter().sum::<u32>();
            let start = self.alpha[r] + filled_before;
            if start > above {
                // Only reachable with zero more cells of value ≤ i+1.
                hi = 0;
            } else {
                hi = hi.min(above - start);
            }
        }
        let remaining_after: u32 = (i + 1..self.k.min(r + 1)).map(|j| self.beta[j] - used[j]).sum();
        let lo = left.saturating_sub(remaining_after);
        if lo > hi {
            return 0;
        }
        let mut total = 0;
        for c in lo..=hi {
            m[r][i] = c;
            used[i] += c;
            total += self.fill_entry(r, i + 1, left - c, m, used);
            used[i] -= c;
        }
        m[r][i] = 0;
        total
    }
}

/// Decomposition of `F^α_k ⊗ F^β_k`: every `γ` with `ℓ(γ) ≤ k` and `c^γ_{α,β} > 0`.
pub fn tensor_decompose(alpha: &Partition, beta: &Partition, k: usize) -> Vec<(Partition, u64)> {
    if alpha.len() > k || beta.len() > k {
        return Vec::new();
    }
    let max_part = alpha.part(0) + beta.part(0);
    partitions_of(alpha.size() + beta.size(), k, max_part)
        .into_iter()
        .filter(|g| g.contains(alpha) && g.contains(beta))
        .filter_map(|g| {
            let c = lr_coeff(alpha, beta, &g);
            (c > 0).then_some((g, c))
        })
        .collect()
}

/// Nonzero `(A, B, c^γ_{A,B})` triples of one `γ`.
pub type Coproduct = Vec<(Partition, Partition, u64)>;

type Cache<K, V> = Mutex<HashMap<K, Arc<V>>>;

fn coproduct_cache() -> &'static Cache<Vec<u32>, Coproduct> {
    static CACHE: OnceLock<Cache<Vec<u32>, Coproduct>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// All `(A, B, c^γ_{A,B})` with a nonzero coefficient.
pub fn coproduct(gamma: &Partition) -> Arc<Coproduct> {
    if let Some(v) = coproduct_cache().lock().unwrap().get(gamma.parts()) {
        return v.clone();
    }
    let mut out = Vec::new();
    for a in subpartitions(gamma) {
        let rest = gamma.size() - a.size();
        for b in partitions_of(rest, gamma.len(), gamma.part(0)) {
            if !gamma.contains(&b) {
                continue;
            }
            let c = lr_coeff(&a, &b, gamma);
            if c > 0 {
                out.push((a.clone(), b, c));
            }
        }
    }
    let out = Arc::new(out);
    coproduct_cache().lock().unwrap().insert(gamma.parts().to_vec(), out.clone());
    out
}

/// A polynomial in `k` variables as a map from exponent vectors to coefficients.
pub type Polynomial = HashMap<Vec<u32>, i64>;

fn schur_cache() -> &'static Cache<(Vec<u32>, usize), Polynomial> {
    static CACHE: OnceLock<Cache<(Vec<u32>, usize), Polynomial>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// `s_λ(x_1, …, x_k)` expanded by enumerating semistandard tableaux.
pub fn schur_polynomial(lambda: &Partition, k: usize) -> Arc<Polynomial> {
    let key = (lambda.parts().to_vec(), k);
    if let Some(p) = schur_cache().lock().unwrap().get(&key) {
        return p.clone();
    }
    let mut poly = Polynomial::new();
    if lambda.len() <= k {
        let shape = lambda.parts().to_vec();
        let mut rows: Vec<Vec<u32>> = shape.iter().map(|&len| vec![0; len as usize]).collect();
        let mut exp = vec![0u32; k];
        fill_ssyt(&shape, k as u32, 0, 0, &mut rows, &mut exp, &mut poly);
    }
    let poly = Arc::new(poly);
    schur_cache().lock().unwrap().insert(key, poly.clone());
    poly
}

fn fill_ssyt(
    shape: &[u32],
    k: u32,
    r: usize,
    c: usize,
    rows: &mut [Vec<u32>],
    exp: &mut [u32],
    out: &mut Polynomial,
) {
    if r == shape.len() {
        *out.entry(exp.to_vec()).or_insert(0) += 1;
        return;
    }
    if c == shape[r] as usize {
        fill_ssyt(shape, k, r + 1, 0, rows, exp, out);
        return;
    }
    let left = if c > 0 { rows[r][c - 1] } else { 1 };
    let up = if r > 0 { rows[r - 1][c] + 1 } else { 1 };
    // Entry in row r is at least r+1; leave room for the rows below in this column.
    let below = shape[r + 1..].iter().take_while(|&&len| len as usize > c).count() as u32;
    let lo = left.max(up);
    for v in lo..=k.saturating_sub(below) {
        rows[r][c] = v;
        exp[v as usize - 1] += 1;
        fill_ssyt(shape, k, r, c + 1, rows, exp, out);
        exp[v as usize - 1] -= 1;
    }
}

pub fn poly_mul(a: &Polynomial, b: &Polynomial) -> Polynomial {
    let mut out = Polynomial::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            let e: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
            *out.entry(e).or_insert(0) += ca * cb;
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

/// Expand a symmetric polynomial in Schur functions by repeatedly removing the
/// lexicographically largest monomial, which is always the leading term of
/// some `s_γ`.
pub fn schur_expand(poly: &Polynomial, k: usize) -> Vec<(Partition, i64)> {
    let mut rest = poly.clone();
    rest.retain(|_, c| *c != 0);
    let mut out = Vec::new();
    while let Some(lead) = rest.keys().max().cloned() {
        let c = rest[&lead];
        let gamma = Partition::new(lead).expect("leading exponent of a symmetric polynomial is a partition");
        for (e, v) in schur_polynomial(&gamma, k).iter() {
            let entry = rest.entry(e.clone()).or_insert(0);
            *entry -= c * v;
            if *entry == 0 {
                rest.remove(e);
            }
        }
        out.push((gamma, c));
    }
    out.sort_by(|a, b| b.0.parts().cmp(a.0.parts()));
    out
}

/// Decompose `s_α·s_β` in `k` variables without using the LR rule.
pub fn schur_oracle(alpha: &Partition, beta: &Partition, k: usize) -> Vec<(Partition, u64)> {
    let prod = poly_mul(&schur_polynomial(alpha, k), &schur_polynomial(beta, k));
    schur_expand(&prod, k)
        .into_iter()
        .map(|(g, c)| {
            assert!(c > 0, "Schur expansion of a product of Schur polynomials has a negative coefficient");
            (g, c as u64)
        })
        .collect()
}

/// The `K`-types of `ℂ[M_{p,q}]` up to the given degree: every `ξ` with
/// `ℓ(ξ) ≤ min(p, q)` and `|ξ| ≤ degree_bound`, each once.
pub fn cauchy_side(p: usize, q: usize, degree_bound: u32) -> Vec<Partition> {
    partitions_up_to(degree_bound, p.min(q)).collect()
}
