//! Cross-module identities: independent routes to the same numbers must agree.

use enright_core::blattner::{blattner_direct, blattner_hermitian, blattner_two_nc_stable, hermitian_weight, BlattnerQuery};
use enright_core::enright::epsilon_extract;
use enright_core::genlr::hermitian_blattner_as_genlr;
use enright_core::partitions::{partitions_in_box, split};
use enright_core::rootsys::{BlockStructure, Level, Weight};
use enright_core::series::{b0_series, ch_cv, ch_mpq, delta_product, geometric_inverse, Grading, LaurentSeries};

fn bs(v: &[usize]) -> BlockStructure {
    BlockStructure::new(v.to_vec()).unwrap()
}

/// Every integer vector with entries in `[lo, hi]`.
fn cube(n: usize, lo: i32, hi: i32) -> Vec<Vec<i32>> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|v| (lo..=hi).map(move |x| {
                let mut v = v.clone();
                v.push(x);
                v
            }))
            .collect();
    }
    out
}

#[test]
fn three_routes_one_noncompact_root() {
    for p in 1..=2 {
        for q in 1..=2 {
            let b = bs(&[p, q]);
            for dp in partitions_in_box(p, 2) {
                for dq in partitions_in_box(q, 2) {
                    let delta = hermitian_weight(p, q, &dp, &dq).unwrap();
                    for ep in partitions_in_box(p, 2) {
                        for eq in partitions_in_box(q, 2) {
                            let eta = hermitian_weight(p, q, &ep, &eq).unwrap();
                            let d = blattner_direct(&BlattnerQuery::new(b.clone(), delta.clone(), eta).unwrap()).unwrap();
                            let h = blattner_hermitian(p, q, &dp, &dq, &ep, &eq).unwrap();
                            let g = hermitian_blattner_as_genlr(&dp, &dq, &ep, &eq, p, q).unwrap();
                            assert_eq!((d, h), (g as i64, g), "p={p} q={q} δ=({dp};{dq}) η=({ep};{eq})");
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn stable_formula_matches_direct() {
    for blocks in [[1, 2, 1], [1, 3, 1], [1, 4, 1], [1, 3, 2], [2, 3, 1]] {
        let b = bs(&blocks);
        let n = b.rank();
        let weights: Vec<Weight> = cube(n, -2, 2)
            .into_iter()
            .map(Weight)
            .filter(|w| w.l1_norm() <= 2 && b.is_dominant(w, Level::K, false))
            .collect();
        for d in &weights {
            for e in &weights {
                let direct = blattner_direct(&BlattnerQuery::new(b.clone(), d.clone(), e.clone()).unwrap()).unwrap();
                let stable = blattner_two_nc_stable(&b, d, e).unwrap();
                assert_eq!(direct, stable as i64, "{blocks:?} δ={d} η={e}");
            }
        }
    }
}

#[test]
fn b0_is_the_generating_function_of_direct_values() {
    for blocks in [[1, 1, 1], [2, 1, 1], [1, 2, 2], [2, 1, 2]] {
        let b = bs(&blocks);
        let n = b.rank();
        let depth = 7;
        let s = b0_series(&b, depth).unwrap();
        let g = Grading::height(n);
        for eta in cube(n, -3, 3) {
            if eta.iter().sum::<i32>() != 0 || g.grade(&eta) > depth {
                continue;
            }
            let q = BlattnerQuery::new(b.clone(), Weight::zero(n), Weight(eta.clone())).unwrap();
            assert_eq!(s.coefficient(&eta).unwrap(), blattner_direct(&q).unwrap(), "{blocks:?} η={eta:?}");
        }
    }
}

#[test]
fn stable_range_kronecker_delta() {
    for blocks in [[1, 2, 1], [1, 3, 1]] {
        let b = bs(&blocks);
        let table = epsilon_extract(&b, 10).unwrap();
        assert!(table.stabilized);
        for e in &table.entries {
            let (plus, minus) = split(&e.lambda);
            assert_eq!((e.mu.clone(), e.nu.clone(), e.coeff), (plus, minus, 1));
        }
    }
}

#[test]
fn lemma_identities() {
    for blocks in [[1, 1, 1], [2, 1, 2], [1, 2, 3]] {
        let b = bs(&blocks);
        let g = Grading::height(b.rank());
        let (_, phi_m_bar) = b.phi_m_split().unwrap();
        let cancel = delta_product(&phi_m_bar, &g, 8).mul(&ch_mpq(&b, &g, 8).unwrap()).unwrap();
        assert!(cancel.agrees_with(&LaurentSeries::one(g.clone(), Some(8))));
        let inv = geometric_inverse(&b.noncompact_positive_roots(), &g, 8).unwrap();
        assert_eq!(inv, ch_cv(&b, &g, 8).unwrap());
    }
}
