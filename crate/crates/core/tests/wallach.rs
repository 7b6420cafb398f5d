//! The first Wallach representation at blocks (3,1,3): its resolution has
//! six terms in degrees 0..4.

use enright_core::enright::{euler_character_check, resolution_auto, resolution_of, stabilization_check, DEFAULT_DEPTH_CEILING};
use enright_core::partitions::{Partition, RationalWeight};
use enright_core::rootsys::BlockStructure;
use enright_core::series::{b0_series, coefficient};
use enright_core::rootsys::Weight;

fn part(v: &[u32]) -> Partition {
    Partition::new(v.to_vec()).unwrap()
}

fn expected() -> Vec<(Partition, Partition, u32, i8)> {
    vec![
        (part(&[]), part(&[]), 0, 1),
        (part(&[1, 1]), part(&[1, 1]), 1, -1),
        (part(&[1, 1, 1]), part(&[2, 1]), 2, 1),
        (part(&[2, 1]), part(&[1, 1, 1]), 2, 1),
        (part(&[2, 1, 1]), part(&[2, 1, 1]), 3, -1),
        (part(&[2, 2, 2]), part(&[2, 2, 2]), 4, 1),
    ]
}

#[test]
fn golden_resolution_at_depth_26() {
    let bs = BlockStructure::pnq(3, 1, 3).unwrap();
    let lambda = RationalWeight::zero(1);
    let res = resolution_of(&bs, &lambda, 26).unwrap();
    let got: Vec<_> = res.terms.iter().map(|t| (t.mu.clone(), t.nu.clone(), t.degree, t.sign)).collect();
    assert_eq!(got, expected());
    assert!(res.stabilized);
    assert!(stabilization_check(&bs, &lambda, 26).unwrap());
    assert!(euler_character_check(&bs, &res, 10).unwrap());
}

#[test]
fn golden_resolution_auto() {
    let bs = BlockStructure::pnq(3, 1, 3).unwrap();
    let res = resolution_auto(&bs, &RationalWeight::zero(1), DEFAULT_DEPTH_CEILING).unwrap();
    assert_eq!(res.terms.len(), 6);
    assert_eq!(res.depth_used, 24);
    assert!(res.stabilized);
}

#[test]
fn wallach_top_coefficient() {
    let bs = BlockStructure::pnq(3, 1, 3).unwrap();
    let s = b0_series(&bs, 24).unwrap();
    assert_eq!(coefficient(&s, &Weight(vec![-2, -2, -2, 0, 2, 2, 2])).unwrap(), 1);
}
