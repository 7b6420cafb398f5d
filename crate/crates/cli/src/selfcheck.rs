//! Built-in consistency checks: golden values (`quick`) plus exhaustive
//! cross-route sweeps on small ranges (`full`).

use std::fmt;
use std::time::Instant;

use enright_core::blattner::{
    blattner_direct, blattner_hermitian, blattner_two_nc_stable, hermitian_weight, BlattnerQuery,
};
use enright_core::enright::{epsilon_extract, resolution_of};
use enright_core::genlr::{gen_tensor_decompose, hermitian_blattner_as_genlr, laurent_schur_oracle};
use enright_core::lr::{lr_coeff, schur_oracle, schur_polynomial, tensor_decompose};
use enright_core::partitions::{dominant_weights_in_range, partitions_in_box, partitions_up_to, split, Partition, RationalWeight};
use enright_core::rootsys::{BlockStructure, Level, Weight};
use enright_core::series::{b0_series, ch_cv, ch_mpq, delta_product, geometric_inverse, Grading, LaurentSeries};

use crate::CheckLevel;

pub struct Report {
    lines: Vec<(String, Result<(), String>, f64)>,
}

impl Report {
    pub fn failed(&self) -> usize {
        self.lines.iter().filter(|(_, r, _)| r.is_err()).count()
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (name, result, secs) in &self.lines {
            match result {
                Ok(()) => writeln!(f, "PASS {name} ({secs:.2}s)")?,
                Err(why) => writeln!(f, "FAIL {name} ({secs:.2}s): {why}")?,
            }
        }
        write!(f, "{} passed, {} failed", self.lines.len() - self.failed(), self.failed())
    }
}

type Check = fn() -> Result<(), String>;

fn ensure(cond: bool, why: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(why())
    }
}

fn bs(v: &[usize]) -> BlockStructure {
    BlockStructure::new(v.to_vec()).expect("valid blocks")
}

fn part(v: &[u32]) -> Partition {
    Partition::new(v.to_vec()).expect("valid partition")
}

fn lr_examples() -> Result<(), String> {
    ensure(lr_coeff(&part(&[1]), &part(&[1]), &part(&[2])) == 1, || "c^(2)_(1),(1) ≠ 1".into())?;
    ensure(lr_coeff(&part(&[2, 1]), &part(&[2, 1]), &part(&[3, 2, 1])) == 2, || "c^(3,2,1)_(2,1),(2,1) ≠ 2".into())
}

fn adjoint_example() -> Result<(), String> {
    for n in 3..=4 {
        let mut a = vec![0; n];
        a[0] = 1;
        let mut b = vec![0; n];
        b[n - 1] = -1;
        let mut adj = a.clone();
        adj[n - 1] = -1;
        let w = |v: Vec<i32>| RationalWeight::new(v).expect("decreasing");
        let got = gen_tensor_decompose(&w(a), &w(b), n).map_err(|e| e.to_string())?;
        ensure(got == vec![(w(adj), 1), (RationalWeight::zero(n), 1)], || format!("n={n}: {got:?}"))?;
    }
    Ok(())
}

fn blattner_golden() -> Result<(), String> {
    let b = bs(&[1, 1, 1]);
    let value = |eta: Vec<i32>| {
        blattner_direct(&BlattnerQuery::new(b.clone(), Weight::zero(3), Weight(eta)).expect("valid query")).expect("small group")
    };
    ensure(value(vec![0, 0, 0]) == 1, || "B(0,0) ≠ 1".into())?;
    ensure(value(vec![1, 0, 0]) == 0, || "B(0,(1,0,0)) ≠ 0".into())?;
    for k in 0..=6 {
        ensure(value(vec![-k, k, 0]) == 1, || format!("B(0,{k}(-1,1,0)) ≠ 1"))?;
    }
    Ok(())
}

fn series_golden() -> Result<(), String> {
    let s = b0_series(&bs(&[1, 1, 1]), 12).map_err(|e| e.to_string())?;
    let mut got: Vec<(Vec<i32>, i64)> = s.terms().map(|(e, c)| (e.clone(), *c)).collect();
    got.sort();
    let mut expected: Vec<(Vec<i32>, i64)> = (0..=12).map(|k| (vec![-k, k, 0], 1)).collect();
    expected.extend((1..=12).map(|k| (vec![0, -k, k], 1)));
    expected.sort();
    ensure(got == expected, || format!("unexpected terms {got:?}"))
}

fn resolution_golden() -> Result<(), String> {
    let r = resolution_of(&bs(&[3, 1, 3]), &RationalWeight::zero(1), 26).map_err(|e| e.to_string())?;
    let got: Vec<(Partition, Partition, u32, i8)> = r.terms.iter().map(|t| (t.mu.clone(), t.nu.clone(), t.degree, t.sign)).collect();
    let expected = vec![
        (part(&[]), part(&[]), 0, 1),
        (part(&[1, 1]), part(&[1, 1]), 1, -1),
        (part(&[1, 1, 1]), part(&[2, 1]), 2, 1),
        (part(&[2, 1]), part(&[1, 1, 1]), 2, 1),
        (part(&[2, 1, 1]), part(&[2, 1, 1]), 3, -1),
        (part(&[2, 2, 2]), part(&[2, 2, 2]), 4, 1),
    ];
    ensure(got == expected && r.stabilized, || format!("got {got:?}, stabilized={}", r.stabilized))
}

fn kronecker_stable() -> Result<(), String> {
    for blocks in [[1, 2, 1], [1, 3, 2]] {
        let t = epsilon_extract(&bs(&blocks), 12).map_err(|e| e.to_string())?;
        for e in &t.entries {
            let (plus, minus) = split(&e.lambda);
            ensure(e.mu == plus && e.nu == minus && e.coeff == 1, || format!("{blocks:?}: {e:?}"))?;
        }
    }
    Ok(())
}

fn three_way() -> Result<(), String> {
    for p in 1..=3 {
        for q in 1..=3 {
            let b = bs(&[p, q]);
            for dp in partitions_in_box(p, 3) {
                for dq in partitions_in_box(q, 3) {
                    let delta = hermitian_weight(p, q, &dp, &dq).map_err(|e| e.to_string())?;
                    for ep in partitions_in_box(p, 3) {
                        for eq in partitions_in_box(q, 3) {
                            let eta = hermitian_weight(p, q, &ep, &eq).map_err(|e| e.to_string())?;
                            let d = blattner_direct(&BlattnerQuery::new(b.clone(), delta.clone(), eta).map_err(|e| e.to_string())?)
                                .map_err(|e| e.to_string())?;
                            let h = blattner_hermitian(p, q, &dp, &dq, &ep, &eq).map_err(|e| e.to_string())? as i64;
                            let g = hermitian_blattner_as_genlr(&dp, &dq, &ep, &eq, p, q).map_err(|e| e.to_string())? as i64;
                            ensure(d == h && h == g, || format!("p={p} q={q} δ=({dp};{dq}) η=({ep};{eq}): {d},{h},{g}"))?;
                        }
                    }
                }
            }
        }
    }
    Ok(())
}

fn lr_oracle() -> Result<(), String> {
    let ps: Vec<Partition> = partitions_up_to(5, 6).collect();
    for a in &ps {
        for b in &ps {
            let x = tensor_decompose(a, b, 6);
            let y = schur_oracle(a, b, 6);
            let sort = |mut v: Vec<(Partition, u64)>| {
                v.sort();
                v
            };
            ensure(sort(x) == sort(y), || format!("α={a} β={b}"))?;
        }
    }
    Ok(())
}

fn genlr_oracle() -> Result<(), String> {
    for n in 1..=3 {
        let ws = dominant_weights_in_range(n, -2, 2);
        for a in &ws {
            for b in &ws {
                let got = gen_tensor_decompose(a, b, n).map_err(|e| e.to_string())?;
                ensure(got == laurent_schur_oracle(a, b), || format!("{a} ⊗ {b} at n={n}"))?;
            }
        }
    }
    Ok(())
}

fn lemmas() -> Result<(), String> {
    let b = bs(&[2, 2, 2]);
    let g = Grading::height(6);
    let (_, phi_m_bar) = b.phi_m_split().map_err(|e| e.to_string())?;
    let cancel = delta_product(&phi_m_bar, &g, 8).mul(&ch_mpq(&b, &g, 8).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
    ensure(cancel.agrees_with(&LaurentSeries::one(g.clone(), Some(8))), || "Δ̄·ch C[M] ≠ 1".into())?;
    let inv = geometric_inverse(&b.noncompact_positive_roots(), &g, 8).map_err(|e| e.to_string())?;
    ensure(inv == ch_cv(&b, &g, 8).map_err(|e| e.to_string())?, || "1/Δ_u ≠ ch C[V]".into())
}

fn stable_two_root() -> Result<(), String> {
    for blocks in [[1, 2, 1], [1, 3, 1], [1, 3, 2], [2, 4, 1]] {
        let b = bs(&blocks);
        let ws = k_dominant_weights(&b, 4);
        for d in &ws {
            for e in &ws {
                let direct = blattner_direct(&BlattnerQuery::new(b.clone(), d.clone(), e.clone()).map_err(|e| e.to_string())?)
                    .map_err(|e| e.to_string())?;
                let stable = blattner_two_nc_stable(&b, d, e).map_err(|e| e.to_string())? as i64;
                ensure(direct == stable, || format!("{blocks:?} δ={d} η={e}: {direct} vs {stable}"))?;
            }
        }
    }
    Ok(())
}

/// `𝔨′`-dominant integer weights with `Σ|x_i| ≤ bound`.
pub fn k_dominant_weights(b: &BlockStructure, bound: i32) -> Vec<Weight> {
    fn rec(n: usize, left: i32, cur: &mut Vec<i32>, out: &mut Vec<Vec<i32>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for x in -left..=left {
            cur.push(x);
            rec(n, left - x.abs(), cur, out);
            cur.pop();
        }
    }
    let mut all = Vec::new();
    rec(b.rank(), bound, &mut Vec::new(), &mut all);
    all.into_iter().map(Weight).filter(|w| b.is_dominant(w, Level::K, false)).collect()
}

fn cauchy() -> Result<(), String> {
    for p in 1..=3 {
        for q in 1..=3 {
            let b = bs(&[p, q]);
            let g = Grading::degree(&b);
            let lhs = geometric_inverse(&b.noncompact_positive_roots(), &g, 8).map_err(|e| e.to_string())?;
            let mut terms = Vec::new();
            for xi in partitions_up_to(4, p.min(q)) {
                for (ex, cx) in schur_polynomial(&xi, p).iter() {
                    for (ey, cy) in schur_polynomial(&xi, q).iter() {
                        let e: Vec<i32> = ex.iter().map(|&x| -(x as i32)).chain(ey.iter().map(|&y| y as i32)).collect();
                        terms.push((e, cx * cy));
                    }
                }
            }
            let rhs = LaurentSeries::from_terms(g.clone(), Some(8), terms);
            ensure(lhs == rhs, || format!("p={p} q={q}"))?;
        }
    }
    Ok(())
}

fn b0_matches_direct() -> Result<(), String> {
    for blocks in [[1, 1, 1], [1, 2, 1], [2, 1, 2]] {
        let b = bs(&blocks);
        let s = b0_series(&b, 8).map_err(|e| e.to_string())?;
        for (e, c) in s.terms() {
            let q = BlattnerQuery::new(b.clone(), Weight::zero(b.rank()), Weight(e.clone())).map_err(|e| e.to_string())?;
            let d = blattner_direct(&q).map_err(|e| e.to_string())?;
            ensure(d == *c, || format!("{blocks:?} η={e:?}: series {c}, direct {d}"))?;
        }
    }
    Ok(())
}

pub fn run(level: CheckLevel) -> Report {
    let mut checks: Vec<(&str, Check)> = vec![
        ("lr golden coefficients", lr_examples),
        ("genlr adjoint decomposition n=3,4", adjoint_example),
        ("blattner (1,1,1) golden values", blattner_golden),
        ("series b0 (1,1,1) depth 12 is two rays", series_golden),
        ("resolution (3,1,3) lambda=0 six terms", resolution_golden),
        ("stable range epsilon is a Kronecker delta", kronecker_stable),
    ];
    if level == CheckLevel::Full {
        checks.extend([
            ("blattner direct = hermitian = genlr, p,q<=3", three_way as Check),
            ("lr = schur oracle, |a|,|b|<=5, k=6", lr_oracle),
            ("genlr = laurent-schur oracle, n<=3", genlr_oracle),
            ("lemma identities at (2,2,2), depth 8", lemmas),
            ("stable two-root formula = direct", stable_two_root),
            ("cauchy identity through degree 4, p,q<=3", cauchy),
            ("b0 coefficients = direct blattner", b0_matches_direct),
        ]);
    }
    let lines = checks
        .into_iter()
        .map(|(name, f)| {
            let t = Instant::now();
            let r = f();
            (name.to_string(), r, t.elapsed().as_secs_f64())
        })
        .collect();
    Report { lines }
}
