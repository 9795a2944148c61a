//! Acceptance suite: one test per criterion, each printing a pass/fail
//! line. Every check is exact — the tolerance everywhere is zero.

use std::time::Instant;

use qconformal::algebra::Gen;
use qconformal::equations::{
    build_current_conservation_mutated, build_qdalembert_mutated, build_qmaxwell_mutated, Mutator,
    Sign,
};
use qconformal::gravity::{crat, index_vs_indexless, random_traceless_symmetric, SymTensor2};
use qconformal::verify::{run_suite, BasisSel, Status, Suite, SuiteConfig, VerifyReport};
use qconformal::waves::{current_state, maxwell_homogeneous, maxwell_inhomogeneous, Gammas, SolutionConstants};
use qconformal::Basis;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn criterion(n: u32, desc: &str, pass: bool) {
    println!(
        "criterion {n}: {} — {desc}",
        if pass { "PASS" } else { "FAIL" }
    );
    assert!(pass, "criterion {n} failed: {desc}");
}

fn all_pass(reports: &[VerifyReport]) -> bool {
    reports.iter().all(|r| r.status != Status::Fail)
}

fn cases<'a>(reports: &'a [VerifyReport], prefix: &str) -> Vec<&'a VerifyReport> {
    reports
        .iter()
        .filter(|r| r.case.starts_with(prefix))
        .collect()
}

#[test]
fn criterion_01_dalembert_annihilation() {
    let start = Instant::now();
    let mut cfg = SuiteConfig::new(Suite::Dalembert);
    cfg.s_max = 5;
    cfg.basis = BasisSel::Both;
    cfg.seed = 1;
    let reports = run_suite(&cfg).unwrap();
    let elapsed = start.elapsed();
    // s = 0..5, both bases, zero plus three random degree-<=2 polynomials
    assert_eq!(reports.len(), 2 * 6 * 4);
    let ok = all_pass(&reports) && elapsed.as_secs() < 60;
    criterion(
        1,
        &format!(
            "q-d'Alembert annihilation on the cone, s <= 5, both bases, 4 exponent polynomials ({} cases in {:.1?})",
            reports.len(),
            elapsed
        ),
        ok,
    );
}

#[test]
fn criterion_02_classical_plane_wave_oracle() {
    let mut cfg = SuiteConfig::new(Suite::Classical);
    cfg.seed = 2;
    let reports = run_suite(&cfg).unwrap();
    let oracle = cases(&reports, "classical-planewave");
    assert_eq!(oracle.len(), 7); // s = 0..6
    let ok = oracle.iter().all(|r| r.status == Status::Pass);
    criterion(
        2,
        "evaluated f_s equals the classical pairing power for 20 random on-cone rational assignments, s <= 6",
        ok,
    );
}

#[test]
fn criterion_03_homogeneous_maxwell() {
    let mut cfg = SuiteConfig::new(Suite::Maxwell);
    cfg.s_max = 3;
    cfg.m_max = 3;
    let reports = run_suite(&cfg).unwrap();
    let hom = cases(&reports, "maxwell-hom");
    // per basis/sign: Σ_m constants(m) × 4 values of s
    let per = 4 * (3 + 8 + 15 + 24);
    assert_eq!(hom.len(), 4 * per);
    let ok = hom.iter().all(|r| r.status == Status::Pass);
    criterion(
        3,
        &format!(
            "homogeneous q-Maxwell solutions annihilated on the cone ({} one-hot cases)",
            hom.len()
        ),
        ok,
    );
}

#[test]
fn criterion_04_inhomogeneous_maxwell() {
    let mut cfg = SuiteConfig::new(Suite::Maxwell);
    cfg.s_max = 3;
    cfg.m_max = 3;
    let reports = run_suite(&cfg).unwrap();
    let inhom = cases(&reports, "maxwell-inhom");
    assert_eq!(inhom.len(), 2 * 2 * 4 * 3 * 4);
    let ok = inhom.iter().all(|r| r.status == Status::Pass);
    criterion(
        4,
        &format!(
            "operator image of each inhomogeneous field equals the printed current on the cone ({} cases)",
            inhom.len()
        ),
        ok,
    );
}

#[test]
fn criterion_05_current_conservation() {
    let mut cfg = SuiteConfig::new(Suite::Current);
    cfg.s_max = 3;
    cfg.m_max = 3;
    let reports = run_suite(&cfg).unwrap();
    let splittings = cases(&reports, "current-splittings");
    let i13 = cases(&reports, "current-i13");
    assert_eq!(splittings.len(), 2 * 4 * 3 * 4);
    assert_eq!(i13.len(), 2 * 4 * 3 * 4);
    let ok = all_pass(&reports);
    criterion(
        5,
        "I13 annihilates the assembled currents and all nine contraction identities hold per basis",
        ok,
    );
}

#[test]
fn criterion_06_classical_coincidences() {
    let mut cfg = SuiteConfig::new(Suite::Classical);
    cfg.seed = 6;
    let reports = run_suite(&cfg).unwrap();
    let coincide = cases(&reports, "classical-maxwell-coincide");
    let boxes = cases(&reports, "classical-dalembert-limit");
    assert_eq!(coincide.len(), 2);
    assert_eq!(boxes.len(), 2);
    let ok = coincide.iter().chain(boxes.iter()).all(|r| r.status == Status::Pass);
    criterion(
        6,
        "hat and tilde operators coincide at q = 1 (sign-wise), and both wave operators limit to the classical one",
        ok,
    );
}

#[test]
fn criterion_07_weyl_operator_identity() {
    let cfg = SuiteConfig::new(Suite::Weyl);
    let reports = run_suite(&cfg).unwrap();
    let rel = cases(&reports, "weyl-rel");
    let lims = cases(&reports, "weyl-qlimit");
    assert_eq!(rel.len(), 2);
    assert_eq!(lims.len(), 6); // n in {0,2,4} x two signs
    let ok = rel.iter().chain(lims.iter()).all(|r| r.status == Status::Pass);
    criterion(
        7,
        "parameter value 4 reproduces the long Weyl operators extensionally, and the deformed family limits to the classical one for n in {0,2,4}",
        ok,
    );
}

#[test]
fn criterion_08_index_vs_indexless_calibration() {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let seeds: Vec<SymTensor2> = (0..10)
        .map(|_| random_traceless_symmetric(&mut rng, 2))
        .collect();
    let cal = index_vs_indexless(&seeds, 2).unwrap();
    let consistent = cal[0].consistent && cal[1].consistent;
    let fmt = |c: &qconformal::gravity::Calibration| {
        c.constants
            .iter()
            .map(|x| x.as_ref().map(|v| v.to_string()).unwrap_or("-".into()))
            .collect::<Vec<_>>()
            .join(", ")
    };
    println!("  plus-route constants:  [{}]", fmt(&cal[0]));
    println!("  minus-route constants: [{}]", fmt(&cal[1]));
    // The printed 8-vs-2 asymmetry must surface: the plus k=3 constant is
    // a quarter of its siblings, the minus row is uniform.
    let asymmetry_surfaces = match (&cal[0].constants[3], &cal[0].constants[2]) {
        (Some(c3), Some(c2)) => c3 * &crat(4, 0) == *c2,
        _ => false,
    };
    let minus_uniform = cal[1]
        .constants
        .windows(2)
        .all(|w| w[0] == w[1]);
    criterion(
        8,
        "a single per-component constant vector reconciles the dictionary and operator routes, and the 8-vs-2 asymmetry surfaces in the plus row",
        consistent && asymmetry_surfaces && minus_uniform,
    );
}

#[test]
fn criterion_09_algebra_foundations() {
    let mut cfg = SuiteConfig::new(Suite::Algebra);
    cfg.seed = 9;
    let reports = run_suite(&cfg).unwrap();
    assert!(cases(&reports, "algebra-pbw").len() == 7);
    assert!(cases(&reports, "algebra-confluence").len() == 1);
    assert!(cases(&reports, "algebra-centrality").len() == 2);
    assert!(cases(&reports, "algebra-cone-ideal").len() == 2);
    let omega_cfg = SuiteConfig::new(Suite::Omega);
    let omega_reports = run_suite(&omega_cfg).unwrap();
    let omega_ok = omega_reports
        .iter()
        .filter(|r| !r.case.starts_with("omega-planewave"))
        .all(|r| r.status == Status::Pass);
    criterion(
        9,
        "PBW degree counts, rewrite confluence (500 words), cone-element centrality and the anti-involution, all exact",
        all_pass(&reports) && omega_ok,
    );
}

#[test]
fn criterion_10_s_independence() {
    let mut cfg = SuiteConfig::new(Suite::Maxwell);
    cfg.s_max = 2;
    cfg.m_max = 2;
    let reports = run_suite(&cfg).unwrap();
    let field = cases(&reports, "maxwell-sindep-field");
    let current = cases(&reports, "maxwell-sindep-current");
    assert_eq!(field.len(), 6); // hat-minus and tilde-plus, m <= 2
    assert_eq!(current.len(), 6);
    let ok = field.iter().chain(current.iter()).all(|r| r.status == Status::Pass);
    criterion(
        10,
        "the stated γ-scalings make the hat-minus and tilde-plus field coefficients s-independent, and no uniform scaling exists for the currents",
        ok,
    );
}

#[test]
fn criterion_11_mutation_sensitivity() {
    // Ten single-exponent mutations across the transcribed operators; each
    // must break at least one identity of the small battery below.
    let battery_dalembert = |basis: Basis, site: usize| -> bool {
        let op = build_qdalembert_mutated(basis, &mut Mutator::site(site));
        let h = qconformal::waves::plane_component(2, basis, &qconformal::waves::ExpPoly::zero())
            .unwrap();
        !op.apply(&h).unwrap().cone_reduce().unwrap().is_zero()
    };
    let battery_maxwell = |sign: Sign, basis: Basis, site: usize| -> bool {
        let op = build_qmaxwell_mutated(sign, 0, basis, &mut Mutator::site(site));
        // homogeneous and inhomogeneous probes; a mutation must break one
        let mut broken = false;
        for m in 0..=1u32 {
            for s in 0..=1i64 {
                for (f, i, j) in SolutionConstants::index_grid(m) {
                    let sol =
                        maxwell_homogeneous(sign, basis, m, s, &SolutionConstants::one_hot(f, i, j))
                            .unwrap();
                    if !op.apply(&sol).unwrap().cone_reduce().unwrap().is_zero() {
                        broken = true;
                    }
                }
            }
        }
        // s = 2 activates the λ-terms (they need x₋ and x₊ together)
        for s in 1..=2i64 {
            for g in Gen::ALL {
                let (field, current) =
                    maxwell_inhomogeneous(sign, basis, 1, s, &Gammas::one_hot(g)).unwrap();
                let r = op
                    .apply(&field)
                    .unwrap()
                    .sub(&current)
                    .cone_reduce()
                    .unwrap();
                if !r.is_zero() {
                    broken = true;
                }
            }
        }
        broken
    };
    let battery_current = |basis: Basis, site: usize| -> bool {
        let op = build_current_conservation_mutated(basis, &mut Mutator::site(site));
        let mut broken = false;
        for s in 1..=3i64 {
            for g in Gen::ALL {
                let cur = current_state(basis, 0, s, &Gammas::one_hot(g)).unwrap();
                if !op.apply(&cur).unwrap().cone_reduce().unwrap().is_zero() {
                    broken = true;
                }
            }
        }
        broken
    };

    let mutations: Vec<(String, bool)> = vec![
        ("dalembert/hat/site0".into(), battery_dalembert(Basis::Hat, 0)),
        ("dalembert/tilde/site0".into(), battery_dalembert(Basis::Tilde, 0)),
        ("maxwell+/hat/site0".into(), battery_maxwell(Sign::Plus, Basis::Hat, 0)),
        ("maxwell+/hat/site1".into(), battery_maxwell(Sign::Plus, Basis::Hat, 1)),
        ("maxwell-/hat/site0".into(), battery_maxwell(Sign::Minus, Basis::Hat, 0)),
        ("maxwell+/tilde/site1".into(), battery_maxwell(Sign::Plus, Basis::Tilde, 1)),
        ("maxwell-/tilde/site0".into(), battery_maxwell(Sign::Minus, Basis::Tilde, 0)),
        ("current/hat/site0".into(), battery_current(Basis::Hat, 0)),
        ("current/hat/site2".into(), battery_current(Basis::Hat, 2)),
        ("current/tilde/site3".into(), battery_current(Basis::Tilde, 3)),
    ];
    assert_eq!(mutations.len(), 10);
    for (name, caught) in &mutations {
        println!("  mutation {name}: {}", if *caught { "caught" } else { "NOT CAUGHT" });
    }
    let ok = mutations.iter().all(|(_, caught)| *caught);
    criterion(
        11,
        "each of ten single-exponent operator mutations breaks at least one suite identity",
        ok,
    );
}
