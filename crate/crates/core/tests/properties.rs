use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use hyperpart::degeneracy::{coloring_number, is_strictly_degenerate, peel, peel_randomized};
use hyperpart::hardpair::check_certificate;
use hyperpart::solver::{solve, verify_partition, SolveOptions, Verdict};
use hyperpart::{DegreeBudget, Hypergraph, VectorFunction};

fn hypergraph() -> impl Strategy<Value = Hypergraph> {
    (2usize..8).prop_flat_map(|n| {
        let edge = prop::collection::btree_set(0..n, 2..=3.min(n));
        prop::collection::vec(edge, 0..12).prop_map(move |edges| Hypergraph::new(n, edges).unwrap())
    })
}

fn with_budget(max_extra: usize) -> impl Strategy<Value = (Hypergraph, Vec<usize>)> {
    hypergraph().prop_flat_map(move |g| {
        let h: Vec<_> = g.vertices().map(|v| 0..=g.degree(v) + max_extra).collect();
        (Just(g), h)
    })
}

fn with_vector_function() -> impl Strategy<Value = (Hypergraph, VectorFunction)> {
    (hypergraph(), 2usize..=3, any::<u64>()).prop_map(|(g, p, seed)| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let f = hyperpart::harness::random_budgets(&mut rng, &g, p, 1);
        (g, f)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn degree_sum_counts_incidences(g in hypergraph()) {
        let total: usize = g.edges().iter().map(Vec::len).sum();
        prop_assert_eq!(g.degrees().iter().sum::<usize>(), total);
    }

    #[test]
    fn text_round_trip(g in hypergraph()) {
        prop_assert_eq!(Hypergraph::parse(&g.to_text()).unwrap(), g);
    }

    #[test]
    fn components_partition_the_vertices(g in hypergraph()) {
        let comps = g.components();
        let mut seen = vec![0; g.vertex_count()];
        for c in &comps {
            for v in c {
                seen[v] += 1;
            }
            prop_assert!(g.induced(c).unwrap().graph.is_connected());
        }
        prop_assert!(seen.iter().all(|&k| k == 1));
    }

    #[test]
    fn blocks_partition_the_edges(g in hypergraph()) {
        for comp in g.components() {
            let local = g.induced(&comp).unwrap().graph;
            let dec = local.blocks().unwrap();
            for e in local.edges() {
                let holders = dec.blocks.iter().filter(|b| e.iter().all(|&v| b.contains(v))).count();
                prop_assert_eq!(holders, 1);
            }
            for b in &dec.blocks {
                let block = local.induced(b).unwrap().graph;
                prop_assert!(block.is_block());
            }
            for (i, a) in dec.blocks.iter().enumerate() {
                for b in &dec.blocks[i + 1..] {
                    prop_assert!(a.intersection_len(b) <= 1);
                }
            }
        }
    }

    #[test]
    fn distance_is_a_metric(g in hypergraph()) {
        let n = g.vertex_count();
        let d = |a: usize, b: usize| if a == b { Some(0) } else { g.distance(a, b).unwrap() };
        for a in 0..n {
            for b in 0..n {
                prop_assert_eq!(d(a, b), d(b, a));
                for c in 0..n {
                    if let (Some(x), Some(y)) = (d(a, b), d(b, c)) {
                        prop_assert!(d(a, c).is_some_and(|z| z <= x + y));
                    }
                }
            }
        }
    }

    #[test]
    fn stuck_core_ignores_the_order((g, h) in with_budget(1), seed in any::<u64>()) {
        let h = DegreeBudget::new(h);
        let core = peel(&g, &h).core();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..20 {
            prop_assert_eq!(peel_randomized(&g, &h, &mut rng).core(), core.clone());
        }
    }

    #[test]
    fn degeneracy_is_monotone_in_h((g, h) in with_budget(1)) {
        if is_strictly_degenerate(&g, &DegreeBudget::new(h.clone())) {
            let raised: Vec<usize> = h.iter().map(|x| x + 1).collect();
            prop_assert!(is_strictly_degenerate(&g, &DegreeBudget::new(raised)));
        }
    }

    #[test]
    fn coloring_number_is_the_least_degenerate_constant(g in hypergraph()) {
        let n = g.vertex_count();
        let col = coloring_number(&g);
        prop_assert!(is_strictly_degenerate(&g, &DegreeBudget::constant(n, col)));
        prop_assert!(!is_strictly_degenerate(&g, &DegreeBudget::constant(n, col - 1)));
    }

    #[test]
    fn solve_returns_verified_answers((g, f) in with_vector_function()) {
        let outcome = solve(&g, &f, SolveOptions::default()).unwrap();
        if let Some(partition) = outcome.partition() {
            prop_assert!(verify_partition(&g, &f, &partition));
        }
        for comp in &outcome.components {
            if let Verdict::Obstruction(cert) = &comp.verdict {
                let local = g.induced(&comp.vertices).unwrap();
                let map: Vec<usize> = {
                    let mut back = vec![0; g.vertex_count()];
                    for (i, &v) in local.ids.iter().enumerate() {
                        back[v] = i;
                    }
                    back
                };
                let fl = f.restrict(&local.ids);
                prop_assert!(check_certificate(&local.graph, &fl, &cert.relabel(&map)).is_ok());
            }
        }
    }
}
