mod common;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use stk_core::closure::{closure, is_l_closed};
use stk_core::graph::{
    clique_number, graph_from_pair_mask, independence_number, is_connected, parse_graph6, to_graph6,
    vertex_connectivity, Graph,
};
use stk_core::spectral::{hsf_nikiforov_bound, spectral_radius};
use stk_core::trees::{
    build_path_system, check_path_system, hall_matching_in_graph, hamilton_path, min_leaf_spanning_tree,
    HallOutcome, MatchingInstance,
};
use stk_core::verify::{check_lemma4, check_lemma5_edge, CheckConfig, Verdict};

use common::*;

const TOL: f64 = 1e-10;

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        prop::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut g = Graph::empty(n);
            let mut it = bits.into_iter();
            for v in 1..n {
                for u in 0..v {
                    if it.next() == Some(true) {
                        g = g.with_edge(u, v).unwrap();
                    }
                }
            }
            g
        })
    })
}

fn connected(max_n: usize) -> impl Strategy<Value = Graph> {
    graph(max_n).prop_filter("connected", |g| g.n() >= 2 && is_connected(g))
}

fn perm(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn handshake(g in graph(11)) {
        prop_assert_eq!(g.degrees().iter().sum::<usize>(), 2 * g.edge_count());
        prop_assert_eq!(g.edge_count() + g.complement().edge_count(), g.n() * (g.n() - 1) / 2);
    }

    #[test]
    fn join_and_union_counts(a in graph(6), b in graph(6)) {
        let j = Graph::join(&a, &b);
        let u = Graph::disjoint_union(&a, &b);
        prop_assert_eq!(u.edge_count(), a.edge_count() + b.edge_count());
        prop_assert_eq!(j.edge_count(), u.edge_count() + a.n() * b.n());
    }

    #[test]
    fn pair_mask_ignores_high_bits(n in 12usize..20, mask in any::<u64>()) {
        let g = graph_from_pair_mask(n, mask);
        prop_assert_eq!(g.edge_count(), mask.count_ones() as usize);
    }

    #[test]
    fn graph6_round_trip(g in graph(20)) {
        prop_assert_eq!(parse_graph6(to_graph6(&g).as_bytes()).unwrap(), g);
    }

    #[test]
    fn connectivity_matches_brute_force(g in graph(8)) {
        let k = vertex_connectivity(&g);
        prop_assert_eq!(k, brute_kappa(&g));
        prop_assert!(g.n() == 0 || k <= g.min_degree());
    }

    #[test]
    fn clique_and_independence(g in graph(10)) {
        let w = clique_number(&g, u64::MAX).unwrap();
        prop_assert_eq!(w.omega, brute_omega(&g));
        prop_assert_eq!(independence_number(&g, u64::MAX).unwrap().alpha, brute_omega(&g.complement()));
        for (i, &a) in w.witness.iter().enumerate() {
            for &b in &w.witness[i + 1..] {
                prop_assert!(g.has_edge(a, b));
            }
        }
    }

    #[test]
    fn closure_is_order_independent(g in graph(8), l in 0usize..16, seed in any::<u64>()) {
        let (c, trace) = closure(&g, l);
        prop_assert!(is_l_closed(&c, l));
        prop_assert_eq!(&closure(&c, l).0, &c);
        prop_assert_eq!(&shuffled_closure(&g, l, &mut ChaCha8Rng::seed_from_u64(seed)), &c);
        prop_assert_eq!(trace.replay(&g), Some(c));
    }

    #[test]
    fn rho_relabel_invariant(g in graph(12), seed in any::<u64>()) {
        let p: Vec<usize> = {
            use rand::seq::SliceRandom;
            let mut p: Vec<usize> = (0..g.n()).collect();
            p.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
            p
        };
        let a = spectral_radius::<f64>(&g, TOL).unwrap().rho;
        let b = spectral_radius::<f64>(&g.permuted(&p), TOL).unwrap().rho;
        prop_assert!((a - b).abs() < 1e-8);
    }

    #[test]
    fn rho_matches_dense_solver(g in graph(16)) {
        let rho = spectral_radius::<f64>(&g, TOL).unwrap().rho;
        prop_assert!((rho - dense_rho(&g)).abs() < 1e-8, "{} vs {}", rho, dense_rho(&g));
        let avg = if g.n() == 0 { 0.0 } else { 2.0 * g.edge_count() as f64 / g.n() as f64 };
        prop_assert!(rho + 1e-9 >= avg);
        prop_assert!(rho <= g.max_degree() as f64 + 1e-9);
    }

    #[test]
    fn rho_f32_tracks_f64(g in graph(12)) {
        let a = spectral_radius::<f64>(&g, TOL).unwrap().rho;
        let b = spectral_radius::<f32>(&g, 1e-5).unwrap().rho;
        prop_assert!((a - b as f64).abs() < 1e-3);
    }

    #[test]
    fn min_degree_bound(g in connected(14)) {
        let r = check_lemma4(&g, &CheckConfig::default());
        prop_assert_eq!(r.verdict, Verdict::Verified);
        let bound: f64 = hsf_nikiforov_bound(g.n(), g.edge_count(), g.min_degree()).unwrap();
        prop_assert!(dense_rho(&g) <= bound + 1e-9);
    }

    #[test]
    fn deleting_an_edge_lowers_rho(g in connected(12), pick in any::<prop::sample::Index>()) {
        let edges = g.edges();
        let e = edges[pick.index(edges.len())];
        let r = check_lemma5_edge(&g, e, &CheckConfig::default());
        prop_assert_eq!(r.verdict, Verdict::Verified);
        let h = g.without_edge(e.0, e.1).unwrap();
        prop_assert!(dense_rho(&h) < dense_rho(&g) - 1e-9);
    }

    #[test]
    fn hall_matches_subset_condition(g in graph(9), split in 1usize..5) {
        let n = g.n();
        let split = split.min(n);
        let x: Vec<usize> = (0..split).collect();
        let ground: Vec<usize> = (split..n).collect();
        let nb = |s: u32| {
            let mut m = 0u64;
            for (i, &v) in x.iter().enumerate() {
                if s >> i & 1 == 1 {
                    for &u in &ground {
                        if g.has_edge(v, u) {
                            m |= 1 << u;
                        }
                    }
                }
            }
            m.count_ones() as usize
        };
        let hall = (1u32..1 << x.len()).all(|s| nb(s) >= s.count_ones() as usize);
        match hall_matching_in_graph(&g, &x, &ground) {
            HallOutcome::Matching(m) => {
                prop_assert!(hall);
                prop_assert_eq!(m.len(), x.len());
                for &(v, u) in &m {
                    prop_assert!(g.has_edge(v, u) && ground.contains(&u));
                }
            }
            HallOutcome::Violator(s) => {
                prop_assert!(!hall);
                let mask: u32 = s.iter().map(|v| 1u32 << x.iter().position(|w| w == v).unwrap()).sum();
                prop_assert!(nb(mask) < s.len());
            }
        }
    }

    #[test]
    fn path_system_invariants(t in 1usize..6, blocks in 1usize..5, extra in any::<bool>(), seed in any::<u64>()) {
        let blocks = blocks.min(t + 1);
        let pl = planted_instance(t, blocks, extra, &mut ChaCha8Rng::seed_from_u64(seed));
        let mi = MatchingInstance::new(pl.x.clone(), pl.n_x.clone(), pl.pairs.clone(), pl.h_edges.clone()).unwrap();
        let ps = build_path_system(&mi).unwrap();
        check_path_system(&mi, &ps).unwrap();
        let covered: usize = ps.paths.iter().map(Vec::len).sum();
        prop_assert_eq!(covered, 2 * (t + 1));
        for p in &ps.paths {
            prop_assert!(p.windows(2).all(|w| pl.g.has_edge(w[0], w[1])));
            prop_assert!(pl.clique.contains(&p[0]) && pl.x.contains(p.last().unwrap()));
        }
        prop_assert!(ps.s() >= 1 && ps.s() <= blocks);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(60))]

    #[test]
    fn min_leaf_is_exact(g in connected(6)) {
        let m = min_leaf_spanning_tree(&g, u64::MAX).unwrap();
        prop_assert!(m.exact);
        prop_assert_eq!(Some(m.witness.leaf_count), brute_min_leaves(&g));
        prop_assert_eq!(tree_leaves(&g, &m.witness.edges), Some(m.witness.leaf_count));
    }

    #[test]
    fn hamilton_iff_two_leaves(g in connected(7), p in perm(7)) {
        let h = hamilton_path(&g).unwrap();
        prop_assert_eq!(h.is_some(), brute_hamilton(&g));
        if let Some(path) = &h {
            prop_assert!(is_hamilton_path(&g, &(0..g.n()).collect::<Vec<_>>(), path));
        }
        let m = min_leaf_spanning_tree(&g, u64::MAX).unwrap();
        prop_assert_eq!(m.witness.leaf_count <= 2, h.is_some());
        let q: Vec<usize> = p.into_iter().filter(|&v| v < g.n()).collect();
        prop_assert_eq!(hamilton_path(&g.permuted(&q)).unwrap().is_some(), h.is_some());
    }
}
