//! Property tests for the structural invariants that hold on every input.

use cfcn_core::{
    cfcn_color, color_count, decompose_layers, exact_chi_cn, generate, greedy_cfcn_baseline,
    maximal_distance3_set, parse_edge_list, partition_abc, verify_cfcn, ExactCount, GraphKind,
    StopReason, Vertex, VertexSet, DEFAULT_C1,
};
use proptest::prelude::*;

fn gnp(n: usize, p: f64, seed: u64) -> cfcn_core::Graph {
    generate(&GraphKind::Gnp { n, p, seed })
}

proptest! {
    #[test]
    fn adjacency_is_symmetric_sorted_and_loopless(
        n in 1usize..60,
        p in 0.0f64..0.4,
        seed in any::<u64>(),
    ) {
        let g = gnp(n, p, seed);
        for v in g.vertices() {
            let row = g.neighbors(v);
            prop_assert!(row.windows(2).all(|w| w[0] < w[1]));
            prop_assert!(!row.contains(&v));
            for &u in row {
                prop_assert!(g.has_edge(u, v));
            }
        }
    }

    #[test]
    fn balls_nest_by_radius(
        n in 1usize..50,
        p in 0.0f64..0.3,
        seed in any::<u64>(),
        v_pick in any::<u32>(),
        r in 0usize..4,
    ) {
        let g = gnp(n, p, seed);
        let v = v_pick % n as u32;
        let inner = g.ball(v, r).unwrap();
        let outer = g.ball(v, r + 1).unwrap();
        prop_assert!(inner.iter().all(|u| outer.contains(u)));
        prop_assert!(inner.contains(v));
    }

    #[test]
    fn inducing_on_all_vertices_is_identity(
        n in 0usize..40,
        p in 0.0f64..0.4,
        seed in any::<u64>(),
    ) {
        let g = gnp(n, p, seed);
        let all: VertexSet = g.vertices().collect();
        let (h, map) = g.induced_subgraph(&all).unwrap();
        prop_assert_eq!(&h, &g);
        prop_assert_eq!(map, g.vertices().collect::<Vec<Vertex>>());
    }

    #[test]
    fn edge_list_round_trips(
        n in 0usize..40,
        p in 0.0f64..0.4,
        seed in any::<u64>(),
    ) {
        let g = gnp(n, p, seed);
        prop_assert_eq!(parse_edge_list(&g.to_edge_list()).unwrap(), g);
    }

    #[test]
    fn greedy_set_partitions_every_graph(
        n in 0usize..80,
        p in 0.0f64..0.3,
        seed in any::<u64>(),
    ) {
        let g = gnp(n, p, seed);
        let a = maximal_distance3_set(&g);
        let part = partition_abc(&g, &a).unwrap();
        prop_assert_eq!(part.a.len() + part.b.len() + part.c.len(), n);
        // roles are disjoint
        for v in part.a.iter() {
            prop_assert!(!part.b.contains(v) && !part.c.contains(v));
        }
        for v in part.b.iter() {
            prop_assert!(!part.c.contains(v));
        }
    }

    #[test]
    fn layers_shrink_strictly(
        n in 1usize..70,
        p in 0.0f64..0.3,
        seed in any::<u64>(),
    ) {
        let g = gnp(n, p, seed);
        let d = decompose_layers(&g);
        let mut previous = n;
        for layer in &d.layers {
            let residual = layer.c.len();
            prop_assert!(residual < previous);
            previous = residual;
        }
        if d.stop_reason == StopReason::GraphEmpty {
            prop_assert!(d.layers.last().is_none_or(|l| l.c.is_empty()));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(60))]

    #[test]
    fn pipeline_output_always_verifies(
        n in 0usize..120,
        p in 0.0f64..0.15,
        seed in any::<u64>(),
        run_seed in any::<u64>(),
    ) {
        let g = gnp(n, p, seed);
        let (coloring, stats) = cfcn_color(&g, DEFAULT_C1, run_seed).unwrap();
        prop_assert!(verify_cfcn(&g, &coloring.colors).unwrap().valid());
        prop_assert_eq!(coloring.total_colors, stats.total_colors);
        prop_assert!(stats.total_colors <= stats.k_target + 1 + stats.palette + 1);
        // Ledger segments tile the color axis in order.
        let l = &coloring.ledger;
        prop_assert_eq!(l.layer_colors.start, 0);
        prop_assert_eq!(l.layer_colors.end, l.hypergraph_colors.start);
        if let Some(fresh) = l.fresh_color {
            prop_assert_eq!(fresh, l.hypergraph_colors.end);
        }
        for &c in &coloring.colors {
            prop_assert!(c < coloring.total_colors);
        }
    }

    #[test]
    fn exact_optimum_never_beats_verified_upper_bounds(
        n in 1usize..8,
        p in 0.0f64..0.6,
        seed in any::<u64>(),
    ) {
        let g = gnp(n, p, seed);
        let baseline = greedy_cfcn_baseline(&g);
        let upper = color_count(&baseline);
        match exact_chi_cn(&g, upper).unwrap() {
            ExactCount::Colors(k) => prop_assert!(k <= upper),
            ExactCount::ExceedsMax => prop_assert!(false, "baseline is an upper bound"),
        }
    }
}
