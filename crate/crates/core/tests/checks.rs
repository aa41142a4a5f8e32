use lielab::checks::{run_check, CheckParams, LEMMA_IDS};
use lielab::liealg::o1k;
use lielab::report::Status;
use lielab::rootspace::meataxe::{adjoint_module, h0_on_h_alpha};
use lielab::rootspace::{decompose, irreducible, CartanData, Irreducibility};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[test]
fn every_lemma_but_sl2_passes_at_small_size() {
    let p = CheckParams::new(4, 3).unwrap();
    for id in LEMMA_IDS {
        let r = run_check(id, &p).unwrap();
        assert_eq!(r.lemma_id, id);
        assert_eq!(r.status == Status::Fail, !r.counterexamples.is_empty());
        if id == "sl2-identity" {
            continue;
        }
        assert_eq!(r.status, Status::Pass, "{id}: {:#?}", r.counterexamples);
        assert!(!r.witnesses.is_empty(), "{id}: no witnesses");
    }
}

#[test]
fn sl2_fails_only_for_the_literal_unitary_identity() {
    let r = run_check("sl2-identity", &CheckParams::new(4, 1).unwrap()).unwrap();
    assert_eq!(r.status, Status::Fail);
    for c in &r.counterexamples {
        assert!(c["algebra"].as_str().unwrap().starts_with("su("), "{c}");
        assert_eq!(c["variant"], "literal");
    }
    let hermitian = r.witnesses.iter().filter(|w| w["variant"] == "hermitian").count();
    assert_eq!(hermitian, 3);
}

#[test]
fn reports_are_seed_deterministic() {
    let p = CheckParams::new(4, 11).unwrap();
    for id in ["heis7-obstruction", "h0-irreducibility", "engel-isotropic"] {
        assert_eq!(run_check(id, &p), run_check(id, &p), "{id}");
    }
}

fn h0_report(k: usize) -> lielab::rootspace::IrreducibilityReport {
    let g = o1k(k).unwrap();
    let cd = CartanData::rank_one(&g).unwrap();
    let rd = decompose(&g, &cd);
    let m = h0_on_h_alpha(&g, &rd).unwrap();
    irreducible(&m, &mut ChaCha8Rng::seed_from_u64(5), 64).unwrap()
}

#[test]
fn h0_module_commutants() {
    // o(1,3): h_0 = a + o(2), rotations on a plane: commutant C, real-irreducible
    let r = h0_report(3);
    assert_eq!(r.status, Irreducibility::Irreducible);
    assert_eq!(r.commutant_dim, 2);
    assert_eq!(r.real_irreducible, Some(true));
    for k in 4..=6 {
        let r = h0_report(k);
        assert_eq!(r.status, Irreducibility::Irreducible, "k={k}");
        assert_eq!(r.commutant_dim, 1, "k={k}");
    }
}

#[test]
fn the_split_torus_alone_is_reducible() {
    let g = o1k(4).unwrap();
    let cd = CartanData::rank_one(&g).unwrap();
    let rd = decompose(&g, &cd);
    let m = adjoint_module(&g, std::slice::from_ref(&cd.a), rd.space(1).unwrap()).unwrap();
    let r = irreducible(&m, &mut ChaCha8Rng::seed_from_u64(1), 16).unwrap();
    assert_eq!(r.status, Irreducibility::Reducible);
    assert!(r.invariant_subspace.is_some());
}
