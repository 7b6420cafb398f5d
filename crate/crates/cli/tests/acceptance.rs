//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.
//!
//! Criteria 1 and 2 go through the `enright` binary; the rest call the library.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use enright_core::blattner::{
    blattner_direct, blattner_hermitian, blattner_two_nc_stable, hermitian_weight, BlattnerContext, BlattnerQuery,
};
use enright_core::enright::epsilon_extract;
use enright_core::genlr::{gen_tensor_decompose, hermitian_blattner_as_genlr};
use enright_core::lr::{lr_coeff, schur_oracle, schur_polynomial, tensor_decompose};
use enright_core::partitions::{partitions_in_box, partitions_up_to, split, Partition, RationalWeight};
use enright_core::rootsys::{BlockStructure, Level, Weight, DEFAULT_WEYL_CAP};
use enright_core::series::{ch_cv, ch_mpq, delta_product, geometric_inverse, Grading, LaurentSeries};
use serde_json::{json, Value};

type Outcome = Result<String, String>;

type Criterion = (&'static str, fn() -> Outcome);

fn bs(v: &[usize]) -> BlockStructure {
    BlockStructure::new(v.to_vec()).expect("valid blocks")
}

fn ensure(cond: bool, why: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(why())
    }
}

fn err(e: impl ToString) -> String {
    e.to_string()
}

fn enright(args: &[&str]) -> Result<(Value, Duration), String> {
    let t = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_enright")).args(args).output().map_err(err)?;
    let elapsed = t.elapsed();
    ensure(out.status.success(), || format!("exit {:?}: {}", out.status.code(), String::from_utf8_lossy(&out.stderr)))?;
    Ok((serde_json::from_slice(&out.stdout).map_err(err)?, elapsed))
}

/// Every integer vector with entries in `[lo, hi]`.
fn cube(n: usize, lo: i32, hi: i32) -> Vec<Vec<i32>> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|v| {
                (lo..=hi).map(move |x| {
                    let mut v = v.clone();
                    v.push(x);
                    v
                })
            })
            .collect();
    }
    out
}

fn golden_series() -> Outcome {
    let (value, elapsed) = enright(&["series", "b0", "--blocks", "1,1,1", "--depth", "12", "--format", "json"])?;
    let mut got: Vec<(Vec<i32>, i64)> = serde_json::from_value::<Vec<Value>>(value)
        .map_err(err)?
        .into_iter()
        .map(|t| (serde_json::from_value(t["exponent"].clone()).unwrap(), t["coeff"].as_i64().unwrap()))
        .collect();
    got.sort();
    let mut rays: Vec<(Vec<i32>, i64)> = (0..=12).map(|k| (vec![-k, k, 0], 1)).collect();
    rays.extend((1..=12).map(|k| (vec![0, -k, k], 1)));
    rays.sort();
    ensure(got == rays, || format!("terms {got:?}"))?;
    for k in 0..=6 {
        ensure(got.contains(&(vec![-k, k, 0], 1)), || format!("missing k={k} on the first ray"))?;
    }
    ensure(elapsed < Duration::from_secs(1), || format!("took {elapsed:?}"))?;
    Ok(format!(
        "{} terms, all on the two rays with coefficient 1 (height window 12 holds k=0..12), {:.3}s",
        got.len(),
        elapsed.as_secs_f64()
    ))
}

fn golden_resolution() -> Outcome {
    let (value, elapsed) = enright(&["resolution", "--blocks", "3,1,3", "--lambda", "0", "--depth", "26", "--format", "json"])?;
    let expected = json!([
        {"mu": [], "nu": [], "degree": 0, "sign": 1},
        {"mu": [1, 1], "nu": [1, 1], "degree": 1, "sign": -1},
        {"mu": [1, 1, 1], "nu": [2, 1], "degree": 2, "sign": 1},
        {"mu": [2, 1], "nu": [1, 1, 1], "degree": 2, "sign": 1},
        {"mu": [2, 1, 1], "nu": [2, 1, 1], "degree": 3, "sign": -1},
        {"mu": [2, 2, 2], "nu": [2, 2, 2], "degree": 4, "sign": 1},
    ]);
    ensure(value["terms"] == expected, || format!("terms {}", value["terms"]))?;
    ensure(elapsed < Duration::from_secs(300), || format!("took {elapsed:?}"))?;
    Ok(format!("six terms, degrees 0,1,2,2,3,4, signs +,-,+,+,-,+, {:.2}s", elapsed.as_secs_f64()))
}

fn support_figure() -> Outcome {
    let b = bs(&[1, 1, 1]);
    let ctx = BlattnerContext::new(&b, DEFAULT_WEYL_CAP).map_err(err)?;
    let zero = Weight::zero(3);
    let mut ones = 0;
    for eta in cube(3, -6, 6) {
        let on_ray = (eta[0] <= 0 && eta[1] == -eta[0] && eta[2] == 0) || (eta[0] == 0 && eta[1] < 0 && eta[2] == -eta[1]);
        let v = ctx.direct(&zero, &Weight(eta.clone()));
        ensure(v == i64::from(on_ray), || format!("B(0,{eta:?}) = {v}"))?;
        ones += usize::from(on_ray);
    }
    Ok(format!("2197 weights, value 1 on exactly the {ones} ray points"))
}

fn three_way() -> Outcome {
    let mut count = 0u64;
    for p in 1..=3 {
        for q in 1..=3 {
            let b = bs(&[p, q]);
            let ctx = BlattnerContext::new(&b, DEFAULT_WEYL_CAP).map_err(err)?;
            for dp in partitions_in_box(p, 3) {
                for dq in partitions_in_box(q, 3) {
                    let delta = hermitian_weight(p, q, &dp, &dq).map_err(err)?;
                    for ep in partitions_in_box(p, 3) {
                        for eq in partitions_in_box(q, 3) {
                            let eta = hermitian_weight(p, q, &ep, &eq).map_err(err)?;
                            let d = ctx.direct(&delta, &eta);
                            let h = blattner_hermitian(p, q, &dp, &dq, &ep, &eq).map_err(err)? as i64;
                            let g = hermitian_blattner_as_genlr(&dp, &dq, &ep, &eq, p, q).map_err(err)? as i64;
                            ensure(d == h && h == g, || format!("p={p} q={q} δ=({dp};{dq}) η=({ep};{eq}): {d},{h},{g}"))?;
                            count += 1;
                        }
                    }
                }
            }
        }
    }
    Ok(format!("{count} (δ,η) pairs agree across direct, hermitian and generalized LR"))
}

fn stable_two_root() -> Outcome {
    let mut count = 0u64;
    for blocks in [[1, 2, 1], [1, 3, 1], [1, 3, 2], [2, 4, 1]] {
        let b = bs(&blocks);
        let weights: Vec<Weight> = cube(b.rank(), -4, 4)
            .into_iter()
            .map(Weight)
            .filter(|w| w.l1_norm() <= 4 && b.is_dominant(w, Level::K, false))
            .collect();
        for d in &weights {
            for e in &weights {
                let direct = blattner_direct(&BlattnerQuery::new(b.clone(), d.clone(), e.clone()).map_err(err)?).map_err(err)?;
                let stable = blattner_two_nc_stable(&b, d, e).map_err(err)? as i64;
                ensure(direct == stable, || format!("{blocks:?} δ={d} η={e}: {direct} vs {stable}"))?;
                count += 1;
            }
        }
    }
    Ok(format!("{count} (δ,η) pairs agree"))
}

fn kronecker() -> Outcome {
    let mut count = 0;
    for blocks in [[1, 2, 1], [1, 3, 2]] {
        let t = epsilon_extract(&bs(&blocks), 12).map_err(err)?;
        ensure(!t.entries.is_empty(), || format!("{blocks:?}: empty table"))?;
        for e in &t.entries {
            let (plus, minus) = split(&e.lambda);
            ensure(e.mu == plus && e.nu == minus && e.coeff == 1, || format!("{blocks:?}: {e:?}"))?;
        }
        let mut lambdas: Vec<_> = t.entries.iter().map(|e| e.lambda.clone()).collect();
        lambdas.dedup();
        ensure(lambdas.len() == t.entries.len(), || format!("{blocks:?}: repeated λ"))?;
        count += t.entries.len();
    }
    Ok(format!("{count} entries, each (λ,λ+,λ-) with coefficient 1"))
}

fn lemmas() -> Outcome {
    let b = bs(&[2, 2, 2]);
    let g = Grading::height(6);
    let (_, phi_m_bar) = b.phi_m_split().map_err(err)?;
    let cancel = delta_product(&phi_m_bar, &g, 8).mul(&ch_mpq(&b, &g, 8).map_err(err)?).map_err(err)?;
    ensure(cancel.agrees_with(&LaurentSeries::one(g.clone(), Some(8))), || "Δ̄·ch C[M] ≠ 1".into())?;
    let inv = geometric_inverse(&b.noncompact_positive_roots(), &g, 8).map_err(err)?;
    let cv = ch_cv(&b, &g, 8).map_err(err)?;
    ensure(inv == cv, || "1/Δ_u ≠ ch C[V]".into())?;
    Ok(format!("both identities hold through height 8 ({} terms in ch C[V])", cv.len()))
}

fn lr_oracle() -> Outcome {
    let ps: Vec<Partition> = partitions_up_to(5, 5).collect();
    let mut count = 0u64;
    for a in &ps {
        for b in &ps {
            // ℓ(γ) ≤ ℓ(α)+ℓ(β), so this many variables loses no γ.
            let k = (a.len() + b.len()).max(1);
            let oracle = schur_oracle(a, b, k);
            let mut fast = tensor_decompose(a, b, k);
            fast.sort();
            let mut sorted = oracle.clone();
            sorted.sort();
            ensure(fast == sorted, || format!("α={a} β={b}"))?;
            for (g, c) in &oracle {
                ensure(lr_coeff(a, b, g) == *c, || format!("c^{g}_{a},{b}"))?;
                count += 1;
            }
        }
    }
    for n in 3..=4 {
        let w = |v: Vec<i32>| RationalWeight::new(v).expect("decreasing");
        let mut a = vec![0; n];
        a[0] = 1;
        let mut b = vec![0; n];
        b[n - 1] = -1;
        let mut adj = a.clone();
        adj[n - 1] = -1;
        let got = gen_tensor_decompose(&w(a), &w(b), n).map_err(err)?;
        ensure(got == vec![(w(adj), 1), (RationalWeight::zero(n), 1)], || format!("n={n}: {got:?}"))?;
    }
    Ok(format!("{} pairs, {count} nonzero coefficients; adjoint = sl_n + C at n=3,4", ps.len() * ps.len()))
}

fn cauchy() -> Outcome {
    for p in 1..=3 {
        for q in 1..=3 {
            let b = bs(&[p, q]);
            let g = Grading::degree(&b);
            let lhs = geometric_inverse(&b.noncompact_positive_roots(), &g, 8).map_err(err)?;
            let mut terms = Vec::new();
            for xi in partitions_up_to(4, p.min(q)) {
                let sx = schur_polynomial(&xi, p);
                let sy = schur_polynomial(&xi, q);
                for (ex, cx) in sx.iter() {
                    for (ey, cy) in sy.iter() {
                        let e: Vec<i32> = ex.iter().map(|&x| -(x as i32)).chain(ey.iter().map(|&y| y as i32)).collect();
                        terms.push((e, cx * cy));
                    }
                }
            }
            let rhs = LaurentSeries::from_terms(g, Some(8), terms);
            ensure(lhs == rhs, || format!("p={p} q={q}"))?;
        }
    }
    Ok("∏(1-x_i y_j)^-1 = Σ s_ξ(x)s_ξ(y) through degree 4 for p,q ≤ 3".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("golden series b0 at (1,1,1)", golden_series),
        ("golden resolution at (3,1,3), lambda=0", golden_resolution),
        ("blattner support over ||eta|| <= 6 at (1,1,1)", support_figure),
        ("three-way agreement, one noncompact root", three_way),
        ("stable two-root formula", stable_two_root),
        ("stable-range kronecker delta", kronecker),
        ("lemma identities at (2,2,2), depth 8", lemmas),
        ("lr oracle equivalence", lr_oracle),
        ("cauchy identity", cauchy),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let t = Instant::now();
        match f() {
            Ok(note) => println!("PASS {} {name}: {note} [{:.2}s]", i + 1, t.elapsed().as_secs_f64()),
            Err(why) => {
                failed += 1;
                println!("FAIL {} {name}: {why} [{:.2}s]", i + 1, t.elapsed().as_secs_f64());
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
