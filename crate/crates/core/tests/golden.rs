//! Structure-constant dumps pinned against hand-computed brackets.

use lielab::liealg::structure::{dump_structure_constants, parse_structure_constants};
use lielab::liealg::{heis_c, o1k, su1k};

#[test]
fn o12_dump() {
    // [A, U1] = U1, [A, V1] = −V1, [U1, V1] = −A
    let want = "dim 3\nlabels A U1 V1\n0 1 1 1\n0 2 2 -1\n1 0 1 -1\n1 2 0 -1\n2 0 2 1\n2 1 0 1\n";
    assert_eq!(dump_structure_constants(&o1k(2).unwrap()), want);
}

#[test]
fn heisc3_dump() {
    // [x1, y1] = 2Z
    let want = "dim 3\nlabels x1 y1 Z\n0 1 2 2\n1 0 2 -2\n";
    assert_eq!(dump_structure_constants(&heis_c(3).unwrap()), want);
}

#[test]
fn dumps_round_trip() {
    for g in [o1k(4).unwrap(), su1k(2).unwrap(), heis_c(5).unwrap()] {
        let text = dump_structure_constants(&g);
        let back = parse_structure_constants(g.name(), &text).unwrap();
        assert_eq!(dump_structure_constants(&back), text);
        assert!(num_traits::Zero::is_zero(&back.jacobi_defect()));
    }
}

#[test]
fn malformed_dumps_are_rejected() {
    assert!(parse_structure_constants("x", "labels a").is_err());
    assert!(parse_structure_constants("x", "dim 2\nlabels a").is_err());
    assert!(parse_structure_constants("x", "dim 2\nlabels a b\n0 1 5 1").is_err());
    // not antisymmetric
    assert!(parse_structure_constants("x", "dim 2\nlabels a b\n0 1 0 1").is_err());
}
