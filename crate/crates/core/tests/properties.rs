use lielab::conformal::{build_model, classify_subspace, SubspaceClass};
use lielab::exactmath::form::SymmetricForm;
use lielab::exactmath::linalg;
use lielab::exactmath::matrix::QMatrix;
use lielab::exactmath::rational::{int, Rational};
use lielab::exactmath::scalar::{from_ints, Gaussian, Octonion, Quaternion, Ring};
use lielab::liealg::structure::morphism_defects;
use lielab::liealg::{heis_c, LinearMap, RankOne, Subspace};
use lielab::morphisms::is_lie_morphism;
use lielab::nilpotent::{
    conjugate_into_umax, isotropic_fixed_vector, random_lorentz_unipotent, random_parabolic_unipotent,
};
use lielab::rootspace::{decompose, CartanData, TraceForm};
use lielab::rootsys::{embeds, make_root_system, min_faithful_dim, Containment};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn coeffs(n: usize) -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-6i64..=6, n)
}

fn matrix(rows: usize, cols: usize, v: &[i64]) -> QMatrix {
    QMatrix::from_rows(
        v.chunks(cols)
            .take(rows)
            .map(|r| r.iter().map(|&x| int(x)).collect())
            .collect(),
    )
}

fn any_matrix() -> impl Strategy<Value = QMatrix> {
    (1usize..6, 1usize..6).prop_flat_map(|(r, c)| coeffs(r * c).prop_map(move |v| matrix(r, c, &v)))
}

/// Unit lower times unit upper triangular: determinant 1.
fn unimodular(n: usize, v: &[i64]) -> QMatrix {
    let mut l = QMatrix::identity(n);
    let mut u = QMatrix::identity(n);
    let mut it = v.iter().cycle();
    for i in 0..n {
        for j in 0..i {
            l.set(i, j, int(*it.next().unwrap() % 3));
            u.set(j, i, int(*it.next().unwrap() % 3));
        }
    }
    l.mul(&u)
}

fn composition_laws<T: Ring>(a: &[i64], b: &[i64]) {
    let (x, y): (T, T) = (from_ints(a), from_ints(b));
    assert_eq!(x.conj().conj(), x);
    assert_eq!(x.mul(&y).conj(), y.conj().mul(&x.conj()));
    assert_eq!(x.mul(&y).norm(), x.norm() * y.norm());
    assert!(x.norm() >= int(0));
    assert_eq!(x.norm() == int(0), x.is_zero());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn gaussian_laws(a in coeffs(2), b in coeffs(2)) {
        composition_laws::<Gaussian>(&a, &b);
    }

    #[test]
    fn quaternion_laws(a in coeffs(4), b in coeffs(4)) {
        composition_laws::<Quaternion>(&a, &b);
    }

    #[test]
    fn octonion_laws(a in coeffs(8), b in coeffs(8)) {
        composition_laws::<Octonion>(&a, &b);
        let (x, y): (Octonion, Octonion) = (from_ints(&a), from_ints(&b));
        prop_assert_eq!(x.mul(&x.mul(&y)), x.mul(&x).mul(&y));
        prop_assert_eq!(y.mul(&x).mul(&x), y.mul(&x.mul(&x)));
    }

    #[test]
    fn rank_nullity_and_transpose(m in any_matrix()) {
        let r = linalg::rank(&m);
        prop_assert_eq!(r + linalg::nullity(&m), m.cols());
        prop_assert_eq!(r, linalg::rank(&m.transpose()));
        let k = linalg::kernel(&m);
        prop_assert!(m.mul(&k).is_zero());
    }

    #[test]
    fn rank_under_products(n in 1usize..5, a in coeffs(25), b in coeffs(25), p in coeffs(40), q in coeffs(40)) {
        let (x, y) = (matrix(n, n, &a), matrix(n, n, &b));
        let rxy = linalg::rank(&x.mul(&y));
        prop_assert!(rxy <= linalg::rank(&x).min(linalg::rank(&y)));
        let (l, r) = (unimodular(n, &p), unimodular(n, &q));
        prop_assert_eq!(linalg::rank(&l.mul(&x).mul(&r)), linalg::rank(&x));
    }

    #[test]
    fn signature_is_a_congruence_invariant(n in 1usize..6, a in coeffs(25), p in coeffs(40)) {
        let m = matrix(n, n, &a);
        let s = m.add(&m.transpose());
        let form = SymmetricForm::new(s.clone()).unwrap();
        let sig = form.signature();
        prop_assert_eq!(sig.dim(), n);
        prop_assert_eq!(sig.null, linalg::nullity(&s));
        prop_assert_eq!(form.congruent(&unimodular(n, &p)).signature(), sig);
    }

    #[test]
    fn composition_of_heisenberg_morphisms(x in coeffs(5), y in coeffs(5), s in 1i64..4, t in -3i64..=3) {
        let h = heis_c(5).unwrap();
        // I + ad X is an automorphism of a 2-step nilpotent algebra; so is the dilation
        let inner = |v: &[i64]| {
            let xv: Vec<Rational> = v.iter().map(|&c| int(c)).collect();
            QMatrix::identity(5).add(&h.ad(&xv))
        };
        let dilation = |s: i64| {
            let mut d = QMatrix::identity(5).scale(&int(s));
            d.set(4, 4, int(s * s));
            d
        };
        let f = LinearMap::new(&h, &h, inner(&x).mul(&dilation(s))).unwrap();
        let g = LinearMap::new(&h, &h, dilation(t).mul(&inner(&y))).unwrap();
        prop_assert!(is_lie_morphism(&f));
        prop_assert!(is_lie_morphism(&g));
        let fg = f.compose(&g).unwrap();
        prop_assert!(morphism_defects(&fg).is_empty());
    }

    #[test]
    fn embeds_is_reflexive_and_sees_summands(i in 0usize..5, j in 0usize..4) {
        let tags = ["A1", "A2", "B2", "BC1", "A1+A1"];
        let r1 = make_root_system(tags[i]).unwrap();
        prop_assert!(embeds(&r1, &r1, Containment::Set).embeds);
        prop_assert!(embeds(&r1, &r1, Containment::Closed).embeds);
        let sum = make_root_system(&format!("{}+{}", tags[i], tags[j])).unwrap();
        prop_assert!(embeds(&r1, &sum, Containment::Set).embeds);
        prop_assert!(embeds(&r1, &sum, Containment::Closed).embeds);
    }

    #[test]
    fn classification_is_conformally_invariant(n in 3usize..6, vs in prop::collection::vec(coeffs(8), 1..4)) {
        let model = build_model(n).unwrap();
        let d = model.quotient_dim();
        let vecs: Vec<Vec<Rational>> = vs.iter().map(|v| v.iter().take(d).map(|&c| int(c)).collect()).collect();
        let w = Subspace::span(d, &vecs);
        prop_assume!(!w.is_zero());
        // a Lorentz form restricts inside the trichotomy, so this never errors
        let (class, sig) = classify_subspace(&model.q, &w).unwrap();
        let (class3, sig3) = classify_subspace(&model.q.scaled(&int(3)), &w).unwrap();
        prop_assert_eq!(class, class3);
        prop_assert_eq!(sig, sig3);
        if class == SubspaceClass::DegeneratePositive {
            prop_assert_eq!(sig.null, 1);
        }
        if class == SubspaceClass::Riemannian {
            for v in w.basis() {
                let line = Subspace::span(d, std::slice::from_ref(v));
                prop_assert_eq!(classify_subspace(&model.q, &line).unwrap().0, SubspaceClass::Riemannian);
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn engel_round_trip(n in 3usize..7, seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let alg = random_lorentz_unipotent(n - 1, &mut rng).unwrap();
        let v = isotropic_fixed_vector(&alg).unwrap();
        prop_assert!(!linalg::is_zero_vec(&v.exact));
        let form = alg.form.as_ref().unwrap();
        prop_assert_eq!(form.quadratic(&v.exact), int(0));
        for g in &alg.generators {
            prop_assert!(linalg::is_zero_vec(&g.mul_vec(&v.exact)));
        }
        let gens = random_parabolic_unipotent(n, &mut rng).unwrap();
        prop_assert!(conjugate_into_umax(n, &gens).unwrap().in_umax);
    }
}

#[test]
fn rank_one_families_are_sound() {
    for k in 2..=5 {
        for f in RankOne::ALL {
            let g = f.build(k).unwrap();
            let cd = CartanData::rank_one(&g).unwrap();
            assert!(cd.theta_is_involution(), "{}", g.name());
            assert_eq!(cd.theta_automorphism_defects(&g), 0, "{}", g.name());
            assert!(TraceForm::new(&g).unwrap().is_negative_definite(), "{}", g.name());
            let rd = decompose(&g, &cd);
            let total: usize = rd.spaces.values().map(Subspace::dim).sum();
            assert_eq!(total, g.dim(), "{}: root spaces do not fill the algebra", g.name());
        }
    }
}

#[test]
fn bc1_misses_b2_by_direct_scan() {
    // oracle independent of the search: no root of B2 has its double in B2
    let b2 = make_root_system("B2").unwrap();
    let doubled = b2.roots.iter().any(|r| b2.contains(&linalg::vec_scale(r, &int(2))));
    assert!(!doubled);
    assert!(!embeds(&make_root_system("BC1").unwrap(), &b2, Containment::Set).embeds);
    assert!(embeds(&make_root_system("A1").unwrap(), &b2, Containment::Set).embeds);
}

#[test]
fn faithful_dims() {
    let d: Vec<usize> = (4..=30).map(|n| min_faithful_dim(n).unwrap()).collect();
    assert!(d.windows(2).all(|w| w[0] <= w[1]));
    assert!((7..=30).all(|n| min_faithful_dim(n).unwrap() == n));
}
