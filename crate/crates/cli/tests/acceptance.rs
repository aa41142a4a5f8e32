//! Acceptance criteria, run in sequence so wall-clock budgets are measured
//! without competing test threads. One PASS/FAIL line per criterion; the
//! process exits nonzero if any criterion fails.

use std::process::Command;
use std::time::{Duration, Instant};

use lielab::checks::{run_check, CheckParams};
use lielab::conformal::{ad_conformal_factor, build_model, isotropic_search};
use lielab::exactmath::linalg;
use lielab::liealg::embeddings::{f4_quaternionic_heisenberg, sp_heisenberg, su_heisenberg};
use lielab::liealg::semidirect::umax_semidirect;
use lielab::liealg::{f4_nilradical, heis_c, heis_h, o2n_coords, parabolic_p, u_max, LieAlgebra, RankOne};
use lielab::morphisms::{heis7_bracket_table, obstruction_identities, random_morphism_falsifier};
use lielab::nilpotent::{
    conjugate_into_umax, isotropic_fixed_vector, random_lorentz_unipotent, random_parabolic_unipotent,
};
use lielab::rootspace::meataxe::h0_on_h_alpha;
use lielab::rootspace::{
    ad_diagonal_profile, decompose, irreducible, su_complex_structure, CartanData, Irreducibility, Sl2Check, Sl2Variant,
};
use lielab::rootsys::{annotated_scan, dim_inequality_scan, embeds, make_root_system, Containment};
use num_traits::Zero;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

type Outcome = Result<(), String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Outcome {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, budget: Duration) -> Outcome {
    let t = start.elapsed();
    ensure(t < budget, || {
        format!("took {:.2}s, budget {:.0}s", t.as_secs_f64(), budget.as_secs_f64())
    })
}

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

fn sound(g: &LieAlgebra) -> Outcome {
    ensure(g.jacobi_defect().is_zero(), || {
        format!("{}: nonzero Jacobi defect", g.name())
    })?;
    match g.realization_mismatches() {
        None | Some(Ok(0)) => Ok(()),
        Some(Ok(k)) => Err(format!("{}: {k} brackets differ from the matrix commutators", g.name())),
        Some(Err(e)) => Err(err(e)),
    }
}

fn c1_construction_soundness() -> Outcome {
    let start = Instant::now();
    for n in 3..=8 {
        for f in RankOne::ALL {
            sound(&f.build(n).map_err(err)?)?;
        }
        for g in [
            heis_c(2 * n - 3),
            heis_h(4 * n - 5),
            u_max(n),
            parabolic_p(n),
            o2n_coords(n),
        ] {
            sound(&g.map_err(err)?)?;
        }
    }
    sound(&f4_nilradical().map_err(err)?)?;
    within(start, Duration::from_secs(10))
}

fn c2_root_decompositions() -> Outcome {
    for k in 2..=8 {
        for (f, alpha, two_alpha) in [
            (RankOne::Orthogonal, k - 1, 0),
            (RankOne::Unitary, 2 * k - 2, 1),
            (RankOne::Symplectic, 4 * k - 4, 3),
        ] {
            let g = f.build(k).map_err(err)?;
            let cd = CartanData::rank_one(&g).map_err(err)?;
            let rd = decompose(&g, &cd);
            ensure(rd.is_complete(), || {
                format!("{}: ad(A) not diagonal over roots", g.name())
            })?;
            ensure(rd.dim(1) == alpha && rd.dim(-1) == alpha, || {
                format!("{}: dim h_alpha = {}, want {alpha}", g.name(), rd.dim(1))
            })?;
            ensure(rd.dim(2) == two_alpha && rd.dim(-2) == two_alpha, || {
                format!("{}: dim h_2alpha = {}, want {two_alpha}", g.name(), rd.dim(2))
            })?;
            ensure(rd.grading_defects == 0, || {
                format!("{}: grading defects {}", g.name(), rd.grading_defects)
            })?;
        }
    }
    Ok(())
}

fn c3_heisenberg_embeddings() -> Outcome {
    let mut certs = Vec::new();
    for n in 3..=8 {
        certs.push(su_heisenberg(n).map_err(err)?);
        certs.push(sp_heisenberg(n).map_err(err)?);
    }
    certs.push(f4_quaternionic_heisenberg().map_err(err)?);
    for c in &certs {
        ensure(c.closed_under_bracket && c.isomorphism, || {
            format!("{} -> {}: certificate fails", c.ambient, c.target)
        })?;
    }
    let t = heis7_bracket_table().map_err(err)?;
    let expected = [
        ["0", "Z_i", "Z_j", "Z_k"],
        ["-Z_i", "0", "Z_k", "-Z_j"],
        ["-Z_j", "-Z_k", "0", "Z_i"],
        ["-Z_k", "Z_j", "-Z_i", "0"],
    ];
    for (a, row) in expected.iter().enumerate() {
        for (b, e) in row.iter().enumerate() {
            ensure(t.entries[a][b] == *e, || {
                format!("table [{a}][{b}] = {}, want {e}", t.entries[a][b])
            })?;
        }
    }
    Ok(())
}

fn c4_umax_structure() -> Outcome {
    for n in 3..=8 {
        let r = umax_semidirect(n).map_err(err)?;
        ensure(r.pass(), || format!("n={n}: {r:?}"))?;
    }
    Ok(())
}

fn c5_obstruction() -> Outcome {
    let start = Instant::now();
    for n in 3..=5 {
        let r = obstruction_identities(n).map_err(err)?;
        for c in &r.identity_checks {
            ensure(c.pass, || {
                format!("n={n}: identity {} fails at {:?}", c.id, c.failing_point)
            })?;
            if c.id.starts_with("image") {
                ensure(c.points == 81 && c.grid == [-1, 0, 1], || {
                    format!("{}: grid {:?}", c.id, c.grid)
                })?;
            }
        }
        ensure(r.minor_forces_t1_zero, || {
            format!("n={n}: minor factorization not confirmed")
        })?;
        ensure(r.dim_d_contradiction, || {
            format!("n={n}: dim D contradiction not confirmed")
        })?;
    }
    let mut seeds = vec![0, 1, 2, 0xdead_beef];
    if let Some(s) = std::env::var("LIELAB_SEED").ok().and_then(|s| s.parse().ok()) {
        seeds.push(s);
    }
    for seed in seeds {
        for n in 3..=5 {
            let f = random_morphism_falsifier(n, 1000, seed).map_err(err)?;
            ensure(f.trials == 1000 && f.counterexamples.is_empty(), || {
                format!("n={n} seed={seed}: {} counterexamples", f.counterexamples.len())
            })?;
        }
    }
    within(start, Duration::from_secs(20))
}

fn c6_sl2_and_irreducibility() -> Outcome {
    let mut problems = Vec::new();
    for k in 2..=6 {
        for f in [RankOne::Orthogonal, RankOne::Unitary] {
            let g = f.build(k).map_err(err)?;
            let cd = CartanData::rank_one(&g).map_err(err)?;
            let rd = decompose(&g, &cd);
            let cert = Sl2Check::new(&g, &cd, &rd).map_err(err)?.certify(Sl2Variant::Literal);
            if !cert.holds() {
                problems.push(format!("{}: {}/{} points fail", g.name(), cert.failures, cert.points));
            }
            if f == RankOne::Unitary {
                // reported alongside, not part of the criterion
                let c = su_complex_structure(&g).map_err(err)?;
                let h = Sl2Check::new(&g, &cd, &rd).map_err(err)?.with_complex_structure(&c);
                eprintln!(
                    "    {} hermitian variant holds: {}",
                    g.name(),
                    h.certify(Sl2Variant::Hermitian).holds()
                );
            }
        }
    }
    for k in 2..=8 {
        let g = RankOne::Orthogonal.build(k).map_err(err)?;
        let cd = CartanData::rank_one(&g).map_err(err)?;
        let rd = decompose(&g, &cd);
        let m = h0_on_h_alpha(&g, &rd).map_err(err)?;
        let r = irreducible(&m, &mut ChaCha8Rng::seed_from_u64(k as u64), 64).map_err(err)?;
        if k >= 4 && (r.status != Irreducibility::Irreducible || r.commutant_dim != 1) {
            problems.push(format!(
                "{}: {:?} with commutant dim {}",
                g.name(),
                r.status,
                r.commutant_dim
            ));
        }
        if k <= 3 {
            eprintln!("    {} commutant dim {} ({:?})", g.name(), r.commutant_dim, r.status);
        }
    }
    ensure(problems.is_empty(), || problems.join("; "))
}

fn c7_discompact_profiles() -> Outcome {
    for k in 2..=8 {
        for f in RankOne::ALL {
            let g = f.build(k).map_err(err)?;
            let cd = CartanData::rank_one(&g).map_err(err)?;
            let rd = decompose(&g, &cd);
            let prof = ad_diagonal_profile(&g, &cd, &rd, std::slice::from_ref(&cd.a));
            let want: Vec<i64> = if f == RankOne::Orthogonal {
                vec![-1, 0, 1]
            } else {
                vec![-2, -1, 0, 1, 2]
            };
            ensure(prof.pass() && prof.eigenvalues() == want, || {
                format!("{}: eigenvalues {:?}", g.name(), prof.eigenvalues())
            })?;
        }
    }
    Ok(())
}

fn c8_root_systems() -> Outcome {
    let start = Instant::now();
    for (src, dst, mode, want) in [
        ("A1+A1", "B2", Containment::Set, true),
        ("A1+BC1", "B2", Containment::Set, false),
        ("BC1+BC1", "B2", Containment::Set, false),
        ("A3+A1", "D4", Containment::Closed, false),
    ] {
        let r = embeds(
            &make_root_system(src).map_err(err)?,
            &make_root_system(dst).map_err(err)?,
            mode,
        );
        ensure(r.embeds == want, || format!("embeds({src}, {dst}) = {}", r.embeds))?;
        if want {
            ensure(r.witness.is_some(), || format!("{src} -> {dst}: no witness"))?;
        } else {
            ensure(r.exhaustive(), || {
                format!(
                    "{src} -> {dst}: {} + {} != {}",
                    r.examined_tuples, r.pruned_tuples, r.predicted_tuples
                )
            })?;
        }
    }
    within(start, Duration::from_secs(5))
}

fn c9_dimension_scan() -> Outcome {
    let pairs = dim_inequality_scan(30).map_err(err)?;
    ensure(pairs == [(3, 3), (6, 3)], || format!("scan = {pairs:?}"))?;
    let notes = annotated_scan(30).map_err(err)?;
    ensure(notes[0].note.contains("o(2,2)"), || {
        format!("(3,3) note: {}", notes[0].note)
    })?;
    ensure(
        notes[1].note.contains("D4") && notes[1].note.ends_with("embeds = false"),
        || format!("(6,3) note: {}", notes[1].note),
    )
}

fn c10_conformal_quotient() -> Outcome {
    for n in 3..=8 {
        let m = build_model(n).map_err(err)?;
        ensure(m.solution_dim == 1, || {
            format!("n={n}: solution dim {}", m.solution_dim)
        })?;
        let s = m.q.signature();
        ensure(s.neg == 1 && s.null == 0 && s.pos == n - 1, || {
            format!("n={n}: signature {s:?}")
        })?;
        for v in m.p.basis() {
            ad_conformal_factor(&m, v).map_err(|e| format!("n={n}: {e}"))?;
        }
        let a = ad_conformal_factor(&m, &m.grading_element()).map_err(err)?;
        ensure(a.lambda == "2" || a.lambda == "-2", || {
            format!("n={n}: lambda(a) = {}", a.lambda)
        })?;
        let iso = isotropic_search(&m.q);
        ensure(iso.max_dim() <= 1, || {
            format!("n={n}: isotropic subspace of dim {}", iso.max_dim())
        })?;
    }
    Ok(())
}

fn c11_engel() -> Outcome {
    for n in 4..=6 {
        let mut rng = ChaCha8Rng::seed_from_u64(1000 + n as u64);
        for t in 0..100 {
            let alg = random_lorentz_unipotent(n - 1, &mut rng).map_err(err)?;
            let v = isotropic_fixed_vector(&alg).map_err(|e| format!("n={n} trial {t}: {e}"))?;
            ensure(!linalg::is_zero_vec(&v.exact) && v.isotropic && v.annihilated, || {
                format!("n={n} trial {t}: bad vector {:?}", v.vector)
            })?;
            let gens = random_parabolic_unipotent(n, &mut rng).map_err(err)?;
            let c = conjugate_into_umax(n, &gens).map_err(|e| format!("n={n} trial {t}: {e}"))?;
            ensure(c.in_umax, || {
                format!("n={n} trial {t}: leaves u_max at {:?}", c.offending)
            })?;
        }
    }
    Ok(())
}

fn verify_all_json() -> (std::process::Output, Duration) {
    let start = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_lielab"))
        .args(["verify", "all", "--max-n", "8", "--seed", "7", "--format", "json"])
        .env_remove("LIELAB_SEED")
        .output()
        .expect("run lielab");
    (out, start.elapsed())
}

fn c12_end_to_end() -> Outcome {
    let (first, t) = verify_all_json();
    let (second, _) = verify_all_json();
    ensure(first.stdout == second.stdout, || {
        "JSON differs between runs with the same seed".into()
    })?;
    let doc: serde_json::Value = serde_json::from_slice(&first.stdout).map_err(err)?;
    let schema: serde_json::Value =
        serde_json::from_str(include_str!("../schema/verification-run.schema.json")).map_err(err)?;
    let validator = jsonschema::validator_for(&schema).map_err(err)?;
    let violations: Vec<String> = validator.iter_errors(&doc).map(|e| e.to_string()).collect();
    ensure(violations.is_empty(), || {
        format!("schema violations: {}", violations.join("; "))
    })?;
    ensure(t < Duration::from_secs(60), || format!("took {:.1}s", t.as_secs_f64()))?;
    ensure(first.status.code() == Some(0), || {
        let failing: Vec<String> = doc["reports"]
            .as_array()
            .into_iter()
            .flatten()
            .filter(|r| r["status"] != "pass")
            .map(|r| r["lemma_id"].as_str().unwrap_or("?").to_string())
            .collect();
        format!("exit {:?}, not passing: {}", first.status.code(), failing.join(", "))
    })
}

fn main() {
    // keep the dispatch table in sync with the library's own runner
    assert!(run_check("dim-scan", &CheckParams::new(3, 1).unwrap()).is_some());
    let criteria: [(&str, fn() -> Outcome); 12] = [
        ("construction soundness", c1_construction_soundness),
        ("root decompositions", c2_root_decompositions),
        ("heisenberg embeddings", c3_heisenberg_embeddings),
        ("u_max structure", c4_umax_structure),
        ("heisH(7) obstruction", c5_obstruction),
        ("sl2 identity and h0 irreducibility", c6_sl2_and_irreducibility),
        ("discompactness eigenvalue profiles", c7_discompact_profiles),
        ("root-system embeddings", c8_root_systems),
        ("dimension scan", c9_dimension_scan),
        ("conformal quotient", c10_conformal_quotient),
        ("engel machinery", c11_engel),
        ("end-to-end verify all", c12_end_to_end),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(()) => eprintln!("criterion {:>2} {name}: PASS ({secs:.2}s)", i + 1),
            Err(why) => {
                failed += 1;
                eprintln!("criterion {:>2} {name}: FAIL ({secs:.2}s): {why}", i + 1);
            }
        }
    }
    eprintln!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
