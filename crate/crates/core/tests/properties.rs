//! Cross-module invariants: join/meet algebra on every library model, table
//! agreement, duality, generator soundness and report determinism.

use planelab_core::models::moulton::{self, MoultonLine, MoultonPoint};
use planelab_core::rational::{rat, Rat};
use planelab_core::*;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};

fn small_planes() -> Vec<PlaneHandle> {
    vec![
        build_pg(2).unwrap(),
        build_pg(3).unwrap(),
        build_pg(4).unwrap(),
        build_pg(5).unwrap(),
    ]
}

#[test]
fn join_meet_round_trips_on_finite_planes() {
    for plane in small_planes() {
        let s = plane.structure().unwrap();
        for p in 0..s.n_points() {
            for q in 0..s.n_points() {
                if p == q {
                    continue;
                }
                let (rp, rq) = (plane.point(p).unwrap(), plane.point(q).unwrap());
                let line = plane.join(&rp, &rq).unwrap();
                assert!(plane.incident(&rp, &line).unwrap());
                assert!(plane.incident(&rq, &line).unwrap());
                // Any other line through p meets join(p,q) back in p.
                for &l in s.lines_through_point(p) {
                    let lr = plane.line(l).unwrap();
                    if lr == line {
                        continue;
                    }
                    assert_eq!(plane.meet(&lr, &line).unwrap(), rp);
                }
            }
        }
        for l in 0..s.n_lines() {
            for m in 0..s.n_lines() {
                if l == m {
                    continue;
                }
                let (rl, rm) = (plane.line(l).unwrap(), plane.line(m).unwrap());
                let p = plane.meet(&rl, &rm).unwrap();
                assert!(plane.incident(&p, &rl).unwrap());
                assert!(plane.incident(&p, &rm).unwrap());
            }
        }
    }
}

#[test]
fn tables_agree_with_scans_on_planes_up_to_100_points() {
    let mut planes = vec![build_pg(7).unwrap(), build_pg(8).unwrap(), build_pg(9).unwrap()];
    planes.extend(small_planes());
    planes.push(build_hall9().unwrap());
    for plane in planes {
        let s = plane.structure().unwrap();
        assert!(s.n_points() <= 100);
        for p in 0..s.n_points() {
            for q in 0..s.n_points() {
                assert_eq!(s.join(p, q), s.join_by_scan(p, q));
            }
        }
        for l in 0..s.n_lines() {
            for m in 0..s.n_lines() {
                assert_eq!(s.meet(l, m), s.meet_by_scan(l, m));
            }
        }
    }
}

#[test]
fn dual_of_a_validated_plane_passes_axioms_both_ways() {
    for plane in [build_pg(3).unwrap(), build_hall9().unwrap()] {
        let s = plane.structure().unwrap();
        let dual = s.dualize().unwrap();
        assert!(dual.validate_axioms().all_ok());
        assert_eq!(&dual.dualize().unwrap(), s);
    }
}

/// Every pair of distinct rational points admits exactly one consistent join
/// case: vertical, ordinary, one-sided bent, or the straddling two-piece
/// solve. Checked on a seeded grid of rational pairs.
#[test]
fn moulton_join_case_analysis_is_exclusive() {
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(20_240_817);
    let mut pairs = 0usize;
    while pairs < 10_000 {
        let coord = |rng: &mut rand_chacha::ChaCha8Rng| {
            rat(rng.gen_range(-64i64..=64), rng.gen_range(1i64..=64))
        };
        let p = MoultonPoint::Affine(coord(&mut rng), coord(&mut rng));
        let q = MoultonPoint::Affine(coord(&mut rng), coord(&mut rng));
        if p == q {
            continue;
        }
        pairs += 1;

        // Candidate lines from each case analysis; count the consistent ones.
        let (x1, y1, x2, y2) = match (&p, &q) {
            (MoultonPoint::Affine(x1, y1), MoultonPoint::Affine(x2, y2)) => (x1, y1, x2, y2),
            _ => unreachable!(),
        };
        let mut consistent = Vec::new();
        // Vertical.
        if x1 == x2 {
            consistent.push(MoultonLine::Vertical(x1.clone()));
        }
        if x1 != x2 {
            // Orient so sx1 < sx2; the original points are what incidence is
            // checked against.
            let (sx1, sy1, sx2, sy2) = if x1 < x2 {
                (x1, y1, x2, y2)
            } else {
                (x2, y2, x1, y1)
            };
            let naive = (sy2 - sy1) / (sx2 - sx1);
            let two = Rat::from_integer(2.into());
            if naive >= Rat::from_integer(0.into()) {
                consistent.push(MoultonLine::Ordinary {
                    m: naive.clone(),
                    b: sy1 - &naive * sx1,
                });
            } else {
                // Left-piece fit, right-piece fit, straddling solve: keep
                // those whose line actually contains both points.
                let candidates = [
                    MoultonLine::Bent {
                        m: naive.clone(),
                        b: sy1 - &naive * sx1,
                    },
                    MoultonLine::Bent {
                        m: &naive / &two,
                        b: sy1 - &naive * sx1,
                    },
                    {
                        let m = (sy1 - sy2) / (sx1 - &two * sx2);
                        let b = sy1 - &m * sx1;
                        if m < Rat::from_integer(0.into()) {
                            MoultonLine::Bent { m, b }
                        } else {
                            MoultonLine::Ordinary { m, b }
                        }
                    },
                ];
                for cand in candidates {
                    if moulton::incident(&p, &cand)
                        && moulton::incident(&q, &cand)
                        && !consistent.contains(&cand)
                    {
                        consistent.push(cand);
                    }
                }
            }
        }
        assert_eq!(
            consistent.len(),
            1,
            "points {p} and {q} admit {} consistent joins",
            consistent.len()
        );
        assert_eq!(&moulton::join(&p, &q).unwrap(), &consistent[0]);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    /// join/meet consistency on the Moulton plane with bounded rationals.
    #[test]
    fn moulton_join_then_meet_recovers_the_point(
        nx1 in -64i64..=64, dx1 in 1i64..=16,
        ny1 in -64i64..=64, dy1 in 1i64..=16,
        nx2 in -64i64..=64, dx2 in 1i64..=16,
        ny2 in -64i64..=64, dy2 in 1i64..=16,
        nx3 in -64i64..=64, dx3 in 1i64..=16,
        ny3 in -64i64..=64, dy3 in 1i64..=16,
    ) {
        let p = MoultonPoint::Affine(rat(nx1, dx1), rat(ny1, dy1));
        let q = MoultonPoint::Affine(rat(nx2, dx2), rat(ny2, dy2));
        let r = MoultonPoint::Affine(rat(nx3, dx3), rat(ny3, dy3));
        prop_assume!(p != q && q != r && p != r);
        let pq = moulton::join(&p, &q).unwrap();
        prop_assert!(moulton::incident(&p, &pq));
        prop_assert!(moulton::incident(&q, &pq));
        let qr = moulton::join(&q, &r).unwrap();
        if pq != qr {
            // Two distinct joins through q meet exactly in q.
            prop_assert_eq!(moulton::meet(&pq, &qr).unwrap(), q);
        }
    }

    /// Distinct Moulton lines always meet in exactly one point of the
    /// completed plane, and the meet is incident with both.
    #[test]
    fn moulton_lines_meet_once(
        m1 in -32i64..=32, b1 in -32i64..=32,
        m2 in -32i64..=32, b2 in -32i64..=32,
        vx in -8i64..=8,
        pick in 0usize..4,
    ) {
        let mk = |m: i64, b: i64| -> MoultonLine {
            if m >= 0 {
                MoultonLine::Ordinary { m: rat(m, 3), b: rat(b, 2) }
            } else {
                MoultonLine::Bent { m: rat(m, 3), b: rat(b, 2) }
            }
        };
        let l1 = mk(m1, b1);
        let l2 = match pick {
            0 => mk(m2, b2),
            1 => MoultonLine::Vertical(rat(vx, 1)),
            2 => MoultonLine::AtInfinity,
            _ => mk(-m2.abs() - 1, b2),
        };
        prop_assume!(l1 != l2);
        let p = moulton::meet(&l1, &l2).unwrap();
        prop_assert!(moulton::incident(&p, &l1));
        prop_assert!(moulton::incident(&p, &l2));
    }
}

#[test]
fn exhaustive_wld_instances_satisfy_their_hypotheses() {
    let plane = build_pg(3).unwrap();
    let instances = collect_instances(
        &plane,
        Statement::WeakLittleDesargues,
        CheckMode::Exhaustive,
        None,
    )
    .unwrap();
    assert!(!instances.is_empty());
    for inst in &instances {
        let pt = |name: &str| match inst.bound.iter().find(|(n, _)| *n == name).unwrap() {
            (_, Slot::Point(p)) => p.clone(),
            _ => panic!("point slot"),
        };
        let (s, a, b, c) = (pt("S"), pt("A"), pt("B"), pt("C"));
        let (a1, b1, c1) = (pt("A'"), pt("B'"), pt("C'"));
        // Perspective from S.
        for (p, p1) in [(&a, &a1), (&b, &b1), (&c, &c1)] {
            assert!(plane.collinear(&s, p, p1).unwrap());
        }
        // The extra collinearity A', B, C.
        assert!(plane.collinear(&a1, &b, &c).unwrap());
        // S, X, Y collinear, recomputed independently.
        let x = plane
            .meet(&plane.join(&a, &b).unwrap(), &plane.join(&a1, &b1).unwrap())
            .unwrap();
        let y = plane
            .meet(&plane.join(&a, &c).unwrap(), &plane.join(&a1, &c1).unwrap())
            .unwrap();
        assert!(plane.collinear(&s, &x, &y).unwrap());
    }
}

/// Sampled generator contract on the generative model: the requested number
/// of hypothesis-valid instances arrives and every hypothesis re-checks.
#[test]
fn sampled_spp_instances_on_moulton_recheck_clean() {
    let plane = build_moulton();
    let budget = 10_000u64;
    let instances = collect_instances(
        &plane,
        Statement::StrongPerspectivePappus,
        CheckMode::Sampled { seed: 1, budget },
        None,
    )
    .unwrap();
    assert_eq!(instances.len() as u64, budget);
    for inst in instances.iter().step_by(7) {
        let pt = |name: &str| match inst.bound.iter().find(|(n, _)| *n == name).unwrap() {
            (_, Slot::Point(p)) => p.clone(),
            _ => panic!("point slot"),
        };
        let (s, a, b, c) = (pt("S"), pt("A"), pt("B"), pt("C"));
        let (a1, b1, c1) = (pt("A'"), pt("B'"), pt("C'"));
        assert!(plane.collinear(&a, &b, &c).unwrap());
        assert!(plane.collinear(&a1, &b1, &c1).unwrap());
        for (p, p1) in [(&a, &a1), (&b, &b1), (&c, &c1)] {
            assert!(plane.collinear(&s, p, p1).unwrap());
        }
        let carrier = plane.join(&a, &b).unwrap();
        let carrier1 = plane.join(&a1, &b1).unwrap();
        assert!(!plane.incident(&s, &carrier).unwrap());
        assert!(!plane.incident(&s, &carrier1).unwrap());
    }
}

/// Hypothesis nesting realized on instances: every wLD instance evaluates as
/// a valid LD instance, and every LD instance as a valid D instance.
#[test]
fn wld_instances_are_ld_instances_are_d_instances() {
    let plane = build_pg(3).unwrap();
    let wld = collect_instances(
        &plane,
        Statement::WeakLittleDesargues,
        CheckMode::Exhaustive,
        Some(200),
    )
    .unwrap();
    for inst in &wld {
        let points: Vec<PointRef> = inst
            .bound
            .iter()
            .map(|(_, slot)| match slot {
                Slot::Point(p) => p.clone(),
                _ => panic!("point slot"),
            })
            .collect();
        for weaker in [Statement::LittleDesargues, Statement::Desargues] {
            let cast = make_point_instance(&plane, weaker, &points).unwrap();
            match evaluate_instance(&plane, weaker, &cast).unwrap() {
                EvalOutcome::Holds(_) => {}
                other => panic!("expected a valid {} instance, got {:?}", weaker.tag(), other),
            }
        }
    }
}

/// The strong perspective form is strictly stronger than the perspective
/// form on the Moulton plane: some instance satisfies the pP conclusion while
/// M, C'', A'' fail to be collinear.
#[test]
fn spp_is_strictly_stronger_than_pp_on_moulton() {
    let plane = build_moulton();
    let mut found = false;
    let mut scanned = 0u64;
    for_each_instance(
        &plane,
        Statement::StrongPerspectivePappus,
        CheckMode::Sampled {
            seed: 5,
            budget: 2_000,
        },
        &mut |inst| {
            scanned += 1;
            let points: Vec<PointRef> = inst
                .bound
                .iter()
                .map(|(_, slot)| match slot {
                    Slot::Point(p) => p.clone(),
                    _ => unreachable!(),
                })
                .collect();
            let spp = evaluate_instance(&plane, Statement::StrongPerspectivePappus, &inst).unwrap();
            let as_pp =
                make_point_instance(&plane, Statement::PerspectivePappus, &points).unwrap();
            let pp = evaluate_instance(&plane, Statement::PerspectivePappus, &as_pp).unwrap();
            if matches!(spp, EvalOutcome::Fails(_)) && matches!(pp, EvalOutcome::Holds(_)) {
                found = true;
            }
            !found
        },
    )
    .unwrap();
    assert!(
        found,
        "no instance separating sPP from pP in {scanned} draws"
    );
}

#[test]
fn reports_are_deterministic_for_fixed_seed() {
    let moulton = build_moulton();
    let mode = CheckMode::Sampled {
        seed: 11,
        budget: 300,
    };
    let r1 = check_statement(&moulton, Statement::LittlePappus, mode).unwrap();
    let r2 = check_statement(&moulton, Statement::LittlePappus, mode).unwrap();
    assert_eq!(r1.to_kv(&moulton), r2.to_kv(&moulton));

    let hall = build_hall9().unwrap();
    let mode = CheckMode::Sampled {
        seed: 3,
        budget: 4_000,
    };
    let opts_serial = CheckOptions {
        jobs: 1,
        ..Default::default()
    };
    let opts_parallel = CheckOptions {
        jobs: 8,
        ..Default::default()
    };
    let r1 =
        check_statement_opts(&hall, Statement::CollapsingDesargues, mode, &opts_serial).unwrap();
    let r2 =
        check_statement_opts(&hall, Statement::CollapsingDesargues, mode, &opts_parallel).unwrap();
    assert_eq!(r1.to_kv(&hall), r2.to_kv(&hall));
}

#[test]
fn witnesses_survive_serialization_and_re_evaluate() {
    let moulton = build_moulton();
    let witness = find_counterexample(&moulton, Statement::Desargues, 1_000_000, 1)
        .unwrap()
        .expect("the model is non-Desarguesian");
    let kv = witness.to_kv(&moulton);
    let parsed = Witness::parse_kv(&moulton, &kv).unwrap();
    match evaluate_instance(&moulton, Statement::Desargues, &parsed.instance).unwrap() {
        EvalOutcome::Fails(again) => {
            assert_eq!(again.failed_conclusion, witness.failed_conclusion);
            assert_eq!(again.to_kv(&moulton), kv);
        }
        other => panic!("expected the witness to fail again, got {:?}", other),
    }
}

#[test]
fn budget_zero_and_exhaustive_on_generative_are_errors() {
    let moulton = build_moulton();
    assert_eq!(
        check_statement(
            &moulton,
            Statement::LittlePappus,
            CheckMode::Sampled { seed: 1, budget: 0 }
        )
        .unwrap_err(),
        Error::BudgetZero
    );
    assert_eq!(
        check_statement(&moulton, Statement::Desargues, CheckMode::Exhaustive).unwrap_err(),
        Error::ExhaustiveOnInfinitePlane
    );
    let hall = build_hall9().unwrap();
    assert!(matches!(
        brute_force_enumerate(&hall, Statement::Desargues).unwrap_err(),
        Error::PlaneTooLarge(91, _)
    ));
}

#[test]
fn degenerate_triangle_is_classified_not_failed() {
    let plane = build_pg(3).unwrap();
    let s = plane.structure().unwrap();
    // Pick S and a line through it, collapse C onto the line AB.
    let sp = plane.point(0).unwrap();
    let lines = s.lines_through_point(0);
    let l1 = lines[0];
    let l2 = lines[1];
    let on = |l: u32, skip: u32| -> Vec<u32> {
        s.points_on_line(l)
            .iter()
            .copied()
            .filter(|&p| p != skip)
            .collect()
    };
    let p1 = on(l1, 0);
    let p2 = on(l2, 0);
    let (a, a1) = (p1[0], p1[1]);
    let (b, b1) = (p2[0], p2[1]);
    // C on the line AB makes the triangle collapse; pair it with any C'
    // collinear with S.
    let ab = s.join(a, b).unwrap();
    let c = s
        .points_on_line(ab)
        .iter()
        .copied()
        .find(|&p| p != a && p != b && p != 0)
        .unwrap();
    let sc = s.join(0, c).unwrap();
    let c1 = s
        .points_on_line(sc)
        .iter()
        .copied()
        .find(|&p| ![0, a, b, c, a1, b1].contains(&p))
        .unwrap();
    let _ = sp;
    let refs: Vec<PointRef> = [0, a, b, c, a1, b1, c1]
        .iter()
        .map(|&i| plane.point(i).unwrap())
        .collect();
    let inst = make_point_instance(&plane, Statement::Desargues, &refs).unwrap();
    match evaluate_instance(&plane, Statement::Desargues, &inst).unwrap() {
        EvalOutcome::Degenerate(reason) => assert_eq!(reason, "triangle ABC collinear"),
        other => panic!("expected degenerate, got {:?}", other),
    }
}

#[test]
fn meet_of_two_lines_through_a_point_is_that_point() {
    let plane = build_pg(3).unwrap();
    let p = plane.point_by_label("(1:0:0)").unwrap();
    let s = plane.structure().unwrap();
    let through = s.lines_through_point(p.index().unwrap());
    let l = plane.line(through[0]).unwrap();
    let m = plane.line(through[1]).unwrap();
    assert_eq!(plane.meet(&l, &m).unwrap(), p);
}

#[test]
fn fano_line_rows_are_collinear_triples() {
    let s = load_incidence_matrix(&planelab_core::models::matrix_io::fano_matrix_text()).unwrap();
    let plane = PlaneHandle::from_structure(s, "fano").unwrap();
    let s = plane.structure().unwrap();
    for l in 0..s.n_lines() {
        let pts = s.points_on_line(l);
        let (a, b, c) = (
            plane.point(pts[0]).unwrap(),
            plane.point(pts[1]).unwrap(),
            plane.point(pts[2]).unwrap(),
        );
        assert!(plane.collinear(&a, &b, &c).unwrap());
    }
}

#[test]
fn foreign_refs_are_rejected_between_planes() {
    let a = build_pg(3).unwrap();
    let b = build_pg(3).unwrap();
    let pts_a: Vec<PointRef> = (0..7).map(|i| a.point(i).unwrap()).collect();
    let inst = make_point_instance(&a, Statement::Desargues, &pts_a).unwrap();
    assert_eq!(
        evaluate_instance(&b, Statement::Desargues, &inst).unwrap_err(),
        Error::ForeignRef
    );
}
