//! Solver soundness on structured and adversarial boards: extremal colorings
//! extended by one vertex, clique-heavy colorings, noisy near-extremal
//! boards, and strict-scale structured targets. Every certificate is checked
//! by the independent verifier.

use fangood::bounds::build_extremal_coloring;
use fangood::coloring::{EdgeColor, TwoColoring};
use fangood::embed::{
    partition_state, solve_fan, solve_star_vs_tfan, solve_tfan, solve_weak, verify_certificate,
    Certificate, SolveError, SolveMode,
};
use fangood::graph::{build_named, random_sparse_connected, Graph, GraphFamily};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn check(c: &TwoColoring, g: &Graph, k: usize, t: usize, cert: &Certificate) {
    if let Err(e) = verify_certificate(c, g, k, t, cert) {
        panic!("invalid certificate: {e}\ncert = {cert:?}");
    }
}

/// The extremal coloring of K_{2n+t-3} with one extra vertex appended,
/// joined by `join` to everything else.
fn extremal_plus_vertex(n: usize, k: usize, t: usize, join: impl Fn(usize) -> EdgeColor) -> TwoColoring {
    let base = build_extremal_coloring(n, k, t).unwrap();
    let order = base.order() + 1;
    let z = order - 1;
    TwoColoring::from_fn(order, |u, v| {
        if v == z {
            join(u)
        } else {
            base.color(u, v)
        }
    })
}

#[test]
fn star_solver_on_extended_extremal_boards() {
    // At order 2n+t-2 every coloring must yield a certificate; these boards
    // sit one vertex past the extremal witness, with the new vertex joined
    // all-red (instant hub), all-blue (fan machinery), or mixed.
    for (n, k, t) in [(26, 1, 1), (26, 1, 2), (28, 2, 1), (52, 2, 2)] {
        let star = build_named(GraphFamily::Star(n)).unwrap();
        type Join = Box<dyn Fn(usize) -> EdgeColor>;
        let joins: Vec<(&str, Join)> = vec![
            ("all-red", Box::new(|_| EdgeColor::Red)),
            ("all-blue", Box::new(|_| EdgeColor::Blue)),
            (
                "alternating",
                Box::new(|u| if u % 2 == 0 { EdgeColor::Red } else { EdgeColor::Blue }),
            ),
        ];
        for (name, join) in joins {
            let c = extremal_plus_vertex(n, k, t, join);
            assert_eq!(c.order(), 2 * n + t - 2);
            let cert = solve_star_vs_tfan(&c, n, k, t, SolveMode::Strict)
                .unwrap_or_else(|e| panic!("(n={n},k={k},t={t},{name}): {e}"));
            check(&c, &star, k, t, &cert);
        }
    }
}

#[test]
fn fan_solver_on_extended_extremal_board() {
    // Extremal board plus an all-red vertex: the red side must win (the new
    // vertex completes a red clique of order n), and blue fans stay absent.
    let n = 36;
    for seed in 0..5 {
        let g = random_sparse_connected(n, if seed % 2 == 0 { -1 } else { 0 }, seed).unwrap();
        let c = extremal_plus_vertex(n, 1, 1, |_| EdgeColor::Red);
        assert_eq!(c.order(), 2 * n - 1);
        let cert = solve_fan(&c, &g, 1, SolveMode::Strict).unwrap();
        assert!(matches!(cert, Certificate::RedEmbedding(_)));
        check(&c, &g, 1, 1, &cert);
    }
}

#[test]
fn tfan_solver_on_extended_extremal_board() {
    // k=1, t=2 at the strict threshold n = 161 * 4 = 644.
    let n = 644;
    let g = random_sparse_connected(n, 0, 7).unwrap();
    let c = extremal_plus_vertex(n, 1, 2, |_| EdgeColor::Red);
    assert_eq!(c.order(), 2 * n);
    let cert = solve_tfan(&c, &g, 1, 2, SolveMode::Strict).unwrap();
    assert!(matches!(cert, Certificate::RedEmbedding(_)));
    check(&c, &g, 1, 2, &cert);

    // All-blue join instead: two disjoint fans exist (through the extra
    // vertex and the blue rest), no red copy of g does.
    let c = extremal_plus_vertex(n, 1, 2, |_| EdgeColor::Blue);
    let cert = solve_tfan(&c, &g, 1, 2, SolveMode::Strict).unwrap();
    assert!(matches!(cert, Certificate::BlueFans(_)));
    check(&c, &g, 1, 2, &cert);
}

#[test]
fn tfan_strict_random_boards() {
    let n = 644;
    let mut rng = ChaCha8Rng::seed_from_u64(71);
    for seed in 0..4 {
        let g = random_sparse_connected(n, seed % 2 - 1, 600 + seed as u64).unwrap();
        let c = TwoColoring::random(2 * n, &mut rng);
        let cert = solve_tfan(&c, &g, 1, 2, SolveMode::Strict).unwrap();
        check(&c, &g, 1, 2, &cert);
    }
}

#[test]
fn fan_k2_strict_structured_targets() {
    // n = 576 = 36 * 2^4 meets the strict k=2 threshold. A broom (long path
    // plus a leaf cluster) exercises the suspended-path case; a double broom
    // with many leaves exercises the end-edge matching case.
    let n = 576;
    let broom = {
        let mut g = Graph::new(n);
        for v in 1..400 {
            g.add_edge(v - 1, v);
        }
        for v in 400..n {
            g.add_edge(399, v);
        }
        g
    };
    let spider = {
        // Hub with legs of length 2: no long suspended path, many end-edges.
        let mut g = Graph::new(n);
        let legs = (n - 1) / 2;
        for i in 0..legs {
            g.add_edge(0, 1 + 2 * i);
            g.add_edge(1 + 2 * i, 2 + 2 * i);
        }
        if (n - 1) % 2 == 1 {
            g.add_edge(0, n - 1);
        }
        g
    };
    let mut rng = ChaCha8Rng::seed_from_u64(72);
    for g in [&broom, &spider] {
        assert!(g.is_connected());
        for _ in 0..2 {
            let c = TwoColoring::random(2 * n - 1, &mut rng);
            let cert = solve_fan(&c, g, 2, SolveMode::Strict).unwrap();
            check(&c, g, 2, 1, &cert);
        }
        let blue = TwoColoring::all_blue(2 * n - 1);
        let cert = solve_fan(&blue, g, 2, SolveMode::Strict).unwrap();
        assert!(matches!(cert, Certificate::BlueFans(_)));
        check(&blue, g, 2, 1, &cert);

        // Two red cliques: the n-clique side carries the target.
        let cliques = TwoColoring::from_fn(2 * n - 1, |u, v| {
            if (u < n) == (v < n) {
                EdgeColor::Red
            } else {
                EdgeColor::Blue
            }
        });
        let cert = solve_fan(&cliques, g, 2, SolveMode::Strict).unwrap();
        assert!(matches!(cert, Certificate::RedEmbedding(_)));
        check(&cliques, g, 2, 1, &cert);
    }
}

#[test]
fn noisy_near_extremal_star_boards() {
    // Two red cliques with blue noise sprinkled in and a mixed extra vertex:
    // red hubs are scarce, which pushes the hub solver through its
    // neighborhood analysis rather than the opening scan.
    let n = 28;
    let k = 2;
    let mut rng = ChaCha8Rng::seed_from_u64(73);
    let star = build_named(GraphFamily::Star(n)).unwrap();
    let mut partitions_built = 0;
    for trial in 0..150 {
        let board = 2 * n - 1;
        let mut c = TwoColoring::from_fn(board, |u, v| {
            let side = |x: usize| x < n - 1;
            if v == board - 1 || u == board - 1 {
                EdgeColor::Blue
            } else if side(u) == side(v) {
                EdgeColor::Red
            } else {
                EdgeColor::Blue
            }
        });
        // Blue noise inside the cliques; occasional red noise across.
        for _ in 0..rng.random_range(0..6) {
            let u = rng.random_range(0..board);
            let v = rng.random_range(0..board);
            if u != v {
                c.set_color(u, v, EdgeColor::Blue);
            }
        }
        for _ in 0..rng.random_range(0..4) {
            let u = rng.random_range(0..n - 1);
            let v = rng.random_range(n - 1..board);
            c.set_color(u, v, EdgeColor::Red);
        }
        let (cert, partition) = partition_state(&c, n, k, 1, SolveMode::Strict)
            .unwrap_or_else(|e| panic!("trial {trial}: {e}"));
        check(&c, &star, k, 1, &cert);
        if let Some(p) = partition {
            partitions_built += 1;
            // The partition's size claims under the theorem hypotheses.
            assert!(p.z1.iter().all(|v| p.s_set.contains(v)));
            assert!(p.z2.iter().all(|v| p.s_set.contains(v)));
            assert!(p.z1.iter().all(|v| !p.z2.contains(v)));
            assert!(p.z1.len() <= n + k - 2);
            assert!(p.z2.len() <= n + k - 2);
            assert!(p.w.len() <= 2 * k - 3 + 2 * (k - 1));
        }
    }
    // The machinery itself runs rarely; the certificates matter regardless.
    eprintln!("partitions built: {partitions_built}/150");
}

#[test]
fn weak_solver_opportunistic_never_defects() {
    // Outside the guaranteed range failures must surface as Exhausted.
    let mut rng = ChaCha8Rng::seed_from_u64(74);
    for trial in 0..100 {
        let n = rng.random_range(4..12usize);
        let max_extra = (n * (n - 1) / 2) as i64 - n as i64;
        let g = random_sparse_connected(n, rng.random_range(-1..=max_extra.min(4)), trial).unwrap();
        let board = rng.random_range(n..2 * n + 2);
        let c = TwoColoring::random(board, &mut rng);
        match solve_weak(&c, &g, 2, SolveMode::Opportunistic) {
            Ok(cert) => check(&c, &g, 2, 1, &cert),
            Err(SolveError::Defect(e)) => panic!("defect outside the range: {e}"),
            Err(_) => {}
        }
    }
}

/// Two red cliques sized so the kernel embedding exactly fills one side:
/// the support matching into the rest is forced blue, and the solver must
/// assemble the target inside the quiet part of the biclique's Y side.
#[test]
fn fan_matching_case_quiet_region_repair() {
    let n = 576;
    let k = 2;
    // Spider: hub plus legs of length 2 — no long suspended path, plenty of
    // disjoint end-edges, so the matching case runs.
    let spider = {
        let mut g = Graph::new(n);
        let legs = (n - 1) / 2;
        for i in 0..legs {
            g.add_edge(0, 1 + 2 * i);
            g.add_edge(1 + 2 * i, 2 + 2 * i);
        }
        if (n - 1) % 2 == 1 {
            g.add_edge(0, n - 1);
        }
        g
    };
    // |A| = n - 2 = |H| exactly: the kernel fills A, supports have no red
    // neighbors left outside.
    let a_size = n - 2;
    for blue_pair_in_b in [false, true] {
        let c = TwoColoring::from_fn(2 * n - 1, |u, v| {
            if blue_pair_in_b && (u, v) == (a_size, a_size + 1) {
                // One blue edge inside the rest: the repair must route two
                // end-edges through the matched pair.
                EdgeColor::Blue
            } else if (u < a_size) == (v < a_size) {
                EdgeColor::Red
            } else {
                EdgeColor::Blue
            }
        });
        let cert = solve_fan(&c, &spider, k, SolveMode::Strict)
            .unwrap_or_else(|e| panic!("blue_pair={blue_pair_in_b}: {e}"));
        assert!(matches!(cert, Certificate::RedEmbedding(_)));
        check(&c, &spider, k, 1, &cert);
    }
}

/// Two red cliques sized so the shortened path fills one side and no blue
/// star exists outside: the lengthening must fall into the star-free branch
/// and embed the whole target in the other clique.
#[test]
fn fan_path_case_star_free_fallback() {
    let n = 576;
    let k = 2;
    let path_graph = build_named(GraphFamily::Path(n)).unwrap();
    // |A| = n - 1 = |H| after shortening by k - 1 = 1.
    let a_size = n - 1;
    let c = TwoColoring::from_fn(2 * n - 1, |u, v| {
        if (u < a_size) == (v < a_size) {
            EdgeColor::Red
        } else {
            EdgeColor::Blue
        }
    });
    let cert = solve_fan(&c, &path_graph, k, SolveMode::Strict).unwrap();
    assert!(matches!(cert, Certificate::RedEmbedding(_)));
    check(&c, &path_graph, k, 1, &cert);
}

/// A hub-heavy unicyclic target (star plus one edge between two leaves) is
/// not a star, has no long suspended path and no 2-end-edge matching, so
/// the fan solver's hub case runs end to end.
#[test]
fn fan_star_case_on_hub_heavy_target() {
    let n = 576;
    let k = 2;
    let mut g = Graph::new(n);
    for v in 1..n {
        g.add_edge(0, v);
    }
    g.add_edge(1, 2);
    assert_eq!(g.size(), n);

    let mut rng = ChaCha8Rng::seed_from_u64(76);
    for _ in 0..3 {
        let c = TwoColoring::random(2 * n - 1, &mut rng);
        let cert = solve_fan(&c, &g, k, SolveMode::Strict).unwrap();
        check(&c, &g, k, 1, &cert);
    }
    // Two red cliques: only the larger side has a hub of degree n - 1.
    let c = TwoColoring::from_fn(2 * n - 1, |u, v| {
        if (u < n - 1) == (v < n - 1) {
            EdgeColor::Red
        } else {
            EdgeColor::Blue
        }
    });
    let cert = solve_fan(&c, &g, k, SolveMode::Strict).unwrap();
    assert!(matches!(cert, Certificate::RedEmbedding(_)));
    check(&c, &g, k, 1, &cert);

    let blue = TwoColoring::all_blue(2 * n - 1);
    let cert = solve_fan(&blue, &g, k, SolveMode::Strict).unwrap();
    assert!(matches!(cert, Certificate::BlueFans(_)));
    check(&blue, &g, k, 1, &cert);
}

/// Two red cliques that are each too small for the target, plus a handful
/// of blue-universal vertices, pushed through the union solver. The greedy
/// fan pass, the induction, and the per-clique embeddings each claim some
/// of these boards; whichever branch wins must certify.
#[test]
fn tfan_matching_case_on_clique_partitioned_boards() {
    let n = 644;
    // Spider target: no long suspended path, at least 3 disjoint end-edges.
    let spider = {
        let mut g = Graph::new(n);
        let legs = (n - 1) / 2;
        for i in 0..legs {
            g.add_edge(0, 1 + 2 * i);
            g.add_edge(1 + 2 * i, 2 + 2 * i);
        }
        if (n - 1) % 2 == 1 {
            g.add_edge(0, n - 1);
        }
        g
    };
    for extra_blue in [3usize, 6] {
        let board = 2 * n;
        // Both cliques strictly below the target order.
        let a_size = n - 1;
        let b_size = board - extra_blue - a_size;
        assert!(a_size < n && b_size < n, "no clique may swallow the target");
        let c = TwoColoring::from_fn(board, |u, v| {
            let zone = |x: usize| {
                if x < a_size {
                    0
                } else if x < a_size + b_size {
                    1
                } else {
                    2
                }
            };
            if zone(u) == zone(v) && zone(u) != 2 {
                EdgeColor::Red
            } else {
                EdgeColor::Blue
            }
        });
        let cert = solve_tfan(&c, &spider, 1, 2, SolveMode::Strict)
            .unwrap_or_else(|e| panic!("extra_blue={extra_blue}: {e}"));
        check(&c, &spider, 1, 2, &cert);
    }
}

/// Volume soundness: ten thousand verified trials per lightweight solver.
#[test]
fn solver_soundness_volume() {
    let mut rng = ChaCha8Rng::seed_from_u64(78);
    // Hub solver, k=1, t in {1, 2}.
    let star26 = build_named(GraphFamily::Star(26)).unwrap();
    for trial in 0..10_000u64 {
        let t = 1 + (trial % 2) as usize;
        let c = TwoColoring::random(2 * 26 + t - 2, &mut rng);
        let cert = solve_star_vs_tfan(&c, 26, 1, t, SolveMode::Strict)
            .unwrap_or_else(|e| panic!("trial {trial}: {e}"));
        verify_certificate(&c, &star26, 1, t, &cert).unwrap();
    }
    // Relaxed-bound solver at small orders.
    for trial in 0..10_000u64 {
        let n = 8 + (trial % 12) as usize;
        let g = random_sparse_connected(n, (trial % 2) as i64 - 1, 90_000 + trial).unwrap();
        let c = TwoColoring::random(2 * n - 1, &mut rng);
        let cert = solve_weak(&c, &g, 1, SolveMode::Strict)
            .unwrap_or_else(|e| panic!("trial {trial}: {e}"));
        verify_certificate(&c, &g, 1, 1, &cert).unwrap();
    }
    // Union solver, opportunistic below the guaranteed range: certificates
    // must verify and defects must not appear.
    let mut certified = 0u64;
    for trial in 0..10_000u64 {
        let n = 30 + (trial % 10) as usize;
        let g = random_sparse_connected(n, -1, 95_000 + trial).unwrap();
        let c = TwoColoring::random(2 * n, &mut rng);
        match solve_tfan(&c, &g, 1, 2, SolveMode::Opportunistic) {
            Ok(cert) => {
                verify_certificate(&c, &g, 1, 2, &cert).unwrap();
                certified += 1;
            }
            Err(SolveError::Defect(e)) => panic!("trial {trial}: defect below range: {e}"),
            Err(_) => {}
        }
    }
    assert!(certified > 9_000, "below-range union runs should still mostly certify");
}

/// The same hub-heavy shape through the union solver at t = 2.
#[test]
fn tfan_star_case_on_hub_heavy_target() {
    let n = 644;
    let mut g = Graph::new(n);
    for v in 1..n {
        g.add_edge(0, v);
    }
    g.add_edge(1, 2);

    let mut rng = ChaCha8Rng::seed_from_u64(77);
    for _ in 0..3 {
        let c = TwoColoring::random(2 * n, &mut rng);
        let cert = solve_tfan(&c, &g, 1, 2, SolveMode::Strict).unwrap();
        check(&c, &g, 1, 2, &cert);
    }
}

#[test]
fn opportunistic_mode_survives_mismatched_parameters() {
    // Random boards of arbitrary size against arbitrary (k, t): solvers may
    // refuse or exhaust but must never panic, defect, or emit a bad
    // certificate.
    let mut rng = ChaCha8Rng::seed_from_u64(75);
    for trial in 0..400u64 {
        let n = rng.random_range(1..16usize);
        let max_extra = (n * (n - 1) / 2) as i64 - n as i64;
        let extra = rng.random_range(-1..=max_extra.clamp(-1, 5));
        let g = random_sparse_connected(n, extra, trial).unwrap();
        let board = rng.random_range(1..40usize);
        let c = TwoColoring::random(board, &mut rng);
        let k = rng.random_range(1..4usize);
        let t = rng.random_range(1..4usize);
        for result in [
            solve_weak(&c, &g, k, SolveMode::Opportunistic),
            solve_fan(&c, &g, k, SolveMode::Opportunistic),
            solve_tfan(&c, &g, k, t, SolveMode::Opportunistic),
            solve_star_vs_tfan(&c, n, k, t, SolveMode::Opportunistic),
        ] {
            match result {
                Ok(cert) => {
                    // The hub solver certifies the star target, not g.
                    match &cert {
                        Certificate::RedEmbedding(map) => {
                            let mut seen = std::collections::HashSet::new();
                            assert!(map.iter().all(|&v| v < board && seen.insert(v)));
                        }
                        Certificate::BlueFans(fans) => {
                            let star = build_named(GraphFamily::Star(n.max(2))).unwrap();
                            verify_certificate(&c, &star, k, fans.len(), &cert).unwrap();
                        }
                    }
                }
                Err(SolveError::Defect(e)) => {
                    panic!("defect on out-of-range instance (trial {trial}): {e}")
                }
                Err(_) => {}
            }
        }
    }
}

#[test]
fn strict_mode_refusals_are_hypothesis_errors() {
    let g = random_sparse_connected(20, 0, 1).unwrap();
    let c = TwoColoring::all_red(39);
    for result in [
        solve_fan(&c, &g, 1, SolveMode::Strict).err().map(|e| matches!(e, SolveError::Hypothesis(_))),
        solve_tfan(&c, &g, 1, 2, SolveMode::Strict).err().map(|e| matches!(e, SolveError::Hypothesis(_))),
    ] {
        assert_eq!(result, Some(true));
    }
    // n = 20 < 36: strict fan refuses even though the board is big enough.
    assert!(solve_star_vs_tfan(&c, 10, 3, 1, SolveMode::Strict).is_err());
}
