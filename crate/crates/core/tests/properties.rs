use proptest::prelude::*;

use simplext::closure::{closure_set, cn_step, is_closed, is_isolated, pair_closure_sweep};
use simplext::construct::{
    cone_simplicity, disjunctive_extension, disjunctive_simplicity, homogenize, product_cone, reflection_simplicity,
    ConeSimplicity, Halfspace,
};
use simplext::io::{from_json, matching_from_json, matching_to_json, to_json, FamilyDescriptor, GraphJson};
use simplext::matching::{is_adjacent, three_common_neighbor, CommonNeighborOutcome, Matching};
use simplext::polytope::{enumerate_vertices, is_simple, HPolytope, Inequality, VPolytope};
use simplext::rational::{rat, rvec};
use simplext::{Budget, SkeletonGraph};

fn graph_strategy(max_nodes: usize) -> impl Strategy<Value = SkeletonGraph> {
    (2..=max_nodes).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
            SkeletonGraph::new(n, pairs.zip(bits).filter(|(_, b)| *b).map(|(e, _)| e)).unwrap()
        })
    })
}

fn subset(n: usize, mask: u32) -> Vec<usize> {
    (0..n).filter(|&v| mask >> v & 1 == 1).collect()
}

fn matching_strategy(nodes: usize) -> impl Strategy<Value = Matching> {
    Just((0..nodes).collect::<Vec<_>>())
        .prop_shuffle()
        .prop_map(move |p| Matching::from_edges(nodes, &p.chunks(2).map(|c| (c[0], c[1])).collect::<Vec<_>>()).unwrap())
}

fn points_strategy(dim: usize) -> impl Strategy<Value = VPolytope> {
    proptest::collection::vec(proptest::collection::vec(0i64..=3, dim), 1..=4)
        .prop_map(move |pts| VPolytope::hull_of(dim, pts.iter().map(|p| rvec(p)).collect()).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn closure_is_a_closure_operator(g in graph_strategy(9), a in any::<u32>(), b in any::<u32>()) {
        let n = g.node_count();
        let full = (1u32 << n) - 1;
        let (a, b) = (a & full, b & full);
        let (sa, sab) = (subset(n, a), subset(n, a | b));
        let ca = closure_set(&g, &sa);
        let cab = closure_set(&g, &sab);
        prop_assert!(sa.iter().all(|v| ca.contains(v)));
        prop_assert_eq!(closure_set(&g, &ca), ca.clone());
        prop_assert!(ca.iter().all(|v| cab.contains(v)));
        prop_assert!(is_closed(&g, &ca));
        prop_assert_eq!(cn_step(&g, &ca), ca.clone());
        if is_isolated(&g, &sa) {
            prop_assert!(is_closed(&g, &sa));
        }
    }

    #[test]
    fn full_pair_sweep_leaves_only_singletons(g in graph_strategy(8)) {
        let n = g.node_count();
        let sweep = pair_closure_sweep(&g, None, &Budget::default()).unwrap();
        let near = pair_closure_sweep(&g, Some(2), &Budget::default()).unwrap();
        for mask in 0..(1u32 << n) {
            let w = subset(n, mask);
            if w.len() == n || !is_closed(&g, &w) {
                continue;
            }
            if sweep.all_full() {
                prop_assert!(w.len() <= 1, "closed set {:?}", w);
            }
            if near.all_full() {
                prop_assert!(is_isolated(&g, &w), "closed set {:?} not isolated", w);
            }
        }
    }

    #[test]
    fn reflection_prediction_matches_enumeration(
        cut in proptest::collection::vec(-1i64..=1, 3),
        cut_rhs in 1i64..=4,
        normal in proptest::collection::vec(-2i64..=2, 3),
        rhs in -2i64..=4,
    ) {
        prop_assume!(normal.iter().any(|&x| x != 0));
        let mut p = HPolytope::cube(3, rat(0), rat(2));
        if cut.iter().any(|&x| x != 0) {
            p = p.with_inequality(Inequality::new(rvec(&cut), rat(cut_rhs)));
        }
        let h = Halfspace::new(rvec(&normal), rat(rhs)).unwrap();
        if let Ok(r) = reflection_simplicity(&p, &h, true, &Budget::default()) {
            prop_assert_eq!(r.enumerated, Some(r.simple));
        }
    }

    #[test]
    fn disjunctive_prediction_matches_enumeration(p1 in points_strategy(2), p2 in points_strategy(2)) {
        let b = Budget::default();
        let ext = disjunctive_extension(&p1, &p2, &b).unwrap();
        let (_, inc) = enumerate_vertices(&ext.q, &b).unwrap();
        prop_assert_eq!(disjunctive_simplicity(&p1, &p2).unwrap(), is_simple(&inc));
    }

    #[test]
    fn product_cones_are_weakly_simple_iff_both_strong(p1 in points_strategy(2), p2 in points_strategy(1)) {
        let b = Budget::default();
        let (c1, c2) = (homogenize(&p1, &b).unwrap(), homogenize(&p2, &b).unwrap());
        let (_, check) = product_cone(&c1, &c2, &b).unwrap();
        let strong = cone_simplicity(&c1) == ConeSimplicity::Strong && cone_simplicity(&c2) == ConeSimplicity::Strong;
        prop_assert!(check.passes());
        prop_assert_eq!(check.weakly_simple, strong);
    }

    #[test]
    fn common_neighbor_is_adjacent_to_all_three(
        m1 in matching_strategy(10),
        m2 in matching_strategy(10),
        m3 in matching_strategy(10),
    ) {
        prop_assume!(is_adjacent(&m1, &m2));
        let trace = three_common_neighbor(&m1, &m2, &m3).unwrap();
        match trace.outcome {
            CommonNeighborOutcome::PairwiseAdjacent => {
                prop_assert!(is_adjacent(&m1, &m3) && is_adjacent(&m2, &m3));
            }
            CommonNeighborOutcome::CommonNeighbor(m) => {
                prop_assert!(is_adjacent(&m, &m1) && is_adjacent(&m, &m2) && is_adjacent(&m, &m3));
            }
        }
    }

    #[test]
    fn graph_json_round_trip(g in graph_strategy(12)) {
        let json = to_json(&GraphJson::from(&g));
        let back = from_json::<GraphJson>(&json).unwrap().to_graph().unwrap();
        prop_assert_eq!(back.edges(), g.edges());
        prop_assert_eq!(back.fingerprint(), g.fingerprint());
    }

    #[test]
    fn matching_json_round_trip(m in matching_strategy(12)) {
        let json = to_json(&matching_to_json(&m));
        let back = matching_from_json(&from_json::<Vec<[usize; 2]>>(&json).unwrap()).unwrap();
        prop_assert_eq!(back, m);
    }

    #[test]
    fn descriptor_round_trip(n in 0usize..20, k in 0usize..20) {
        for d in [
            FamilyDescriptor::Hypersimplex { n, k },
            FamilyDescriptor::SpanningTree { n },
            FamilyDescriptor::PerfectMatching { nodes: n },
        ] {
            prop_assert_eq!(from_json::<FamilyDescriptor>(&to_json(&d)).unwrap(), d);
        }
    }
}
