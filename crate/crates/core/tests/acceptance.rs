//! Acceptance gate. Runs every criterion against oracles written here and
//! prints one PASS/FAIL line per criterion. Exits nonzero on any failure.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use itertools::Itertools;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use simplext::biclique::{extension_report, ExtensionVerdict, ExtensionWitness};
use simplext::closure::{closure_set, cover_lower_bound, is_closed, is_isolated, pair_closure_sweep, CoverMode};
use simplext::construct::{
    build_gon_extension, cone_simplicity, disjunctive_extension, disjunctive_simplicity, homogenize, product_cone,
    reflection_simplicity, ConeSimplicity, Halfspace, Projection,
};
use simplext::family::{
    build_tw, hypersimplex_skeleton, is_decomposable, matching_skeleton, path_skeleton, perfect_matchings,
    spanning_trees, subtour_facet_check, tree_skeleton, tw_exchange, w_sets, DagDesc, FamilyVertex, SubtourStatus,
};
use simplext::matching::{adjacent_cycle_matching, component_count, three_common_neighbor, CommonNeighborOutcome, Matching};
use simplext::polytope::{convex_hull_facets, enumerate_vertices, is_simple, skeleton, HPolytope, Inequality, VPolytope};
use simplext::rational::{rat, rvec};
use simplext::{Budget, SkeletonGraph};

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn budget() -> Budget {
    Budget::default()
}

// Oracles.

/// Edges of `a Δ b` form exactly one cycle.
fn single_cycle(a: &Matching, b: &Matching) -> bool {
    let n = a.node_count();
    let touched: Vec<usize> = (0..n).filter(|&u| a.mate(u) != b.mate(u)).collect();
    if touched.is_empty() {
        return false;
    }
    // Walk alternately along a and b from the first touched node.
    let start = touched[0];
    let (mut u, mut len, mut use_a) = (start, 0, true);
    loop {
        u = if use_a { a.mate(u) } else { b.mate(u) };
        use_a = !use_a;
        len += 1;
        if u == start && use_a {
            break;
        }
    }
    len == touched.len()
}

fn sym_diff_nodes(a: &Matching, b: &Matching) -> BTreeSet<usize> {
    (0..a.node_count()).filter(|&u| a.mate(u) != b.mate(u)).collect()
}

fn edge_set(m: &Matching) -> BTreeSet<(usize, usize)> {
    m.edges().into_iter().collect()
}

/// Fixpoint of adding nodes with two neighbors inside, on bitmasks.
fn naive_closure(adj: &[u64], mut set: u64) -> u64 {
    loop {
        let mut next = set;
        for (v, &nb) in adj.iter().enumerate() {
            if set >> v & 1 == 0 && (nb & set).count_ones() >= 2 {
                next |= 1 << v;
            }
        }
        if next == set {
            return set;
        }
        set = next;
    }
}

fn masks(g: &SkeletonGraph) -> Vec<u64> {
    (0..g.node_count()).map(|u| g.neighbors(u).iter().fold(0u64, |m, &v| m | 1 << v)).collect()
}

fn to_mask(set: &[usize]) -> u64 {
    set.iter().fold(0, |m, &v| m | 1 << v)
}

fn from_mask(m: u64, n: usize) -> Vec<usize> {
    (0..n).filter(|&v| m >> v & 1 == 1).collect()
}

// Criteria.

fn criterion_1() -> Outcome {
    let (mut cases, mut failures) = (0, Vec::new());
    for n in 4..=6usize {
        for k in 2..=n - 2 {
            let sk = hypersimplex_skeleton(n, k, &budget()).map_err(|e| e.to_string())?;
            let g = &sk.graph;
            let expected = binomial(n as u64, k as u64) as usize;
            ensure!(g.node_count() == expected, "n={n} k={k}: {} vertices", g.node_count());
            // Oracle: 0/1 vectors are adjacent iff they differ in two places.
            for (i, j) in (0..g.node_count()).tuple_combinations() {
                let (FamilyVertex::BitVector(a), FamilyVertex::BitVector(b)) = (&sk.vertices[i], &sk.vertices[j]) else {
                    return Err("unexpected vertex type".into());
                };
                let diff = a.iter().zip(b).filter(|(x, y)| x != y).count();
                ensure!(g.has_edge(i, j) == (diff == 2), "n={n} k={k}: wrong edge {i}-{j}");
            }
            let sweep = pair_closure_sweep(g, None, &budget()).map_err(|e| e.to_string())?;
            if !sweep.all_full() {
                // Record what the stuck pairs are instead of stopping here.
                let antipodal = sweep.counterexamples.iter().all(|c| {
                    let (FamilyVertex::BitVector(a), FamilyVertex::BitVector(b)) =
                        (&sk.vertices[c.pair.0], &sk.vertices[c.pair.1])
                    else {
                        return false;
                    };
                    a.iter().zip(b).all(|(x, y)| x != y) && c.closure.len() == 2 && is_isolated(g, &c.closure)
                });
                let kind = if antipodal { "complementary isolated pairs" } else { "pairs" };
                failures.push(format!("n={n} k={k}: {} {kind} do not close", sweep.counterexamples.len()));
                continue;
            }
            match cover_lower_bound(g, CoverMode::SingletonShortcut, &budget()) {
                Ok(lb) if lb.bound == expected => cases += 1,
                Ok(lb) => failures.push(format!("n={n} k={k}: bound {} != {expected}", lb.bound)),
                Err(e) => failures.push(format!("n={n} k={k}: {e}")),
            }
        }
    }
    ensure!(failures.is_empty(), "{cases} cases pass; {}", failures.join("; "));
    Ok(format!("{cases} (n,k) cases, every pair closes, bound = C(n,k)"))
}

fn criterion_2() -> Outcome {
    let k6 = matching_skeleton(6, &budget()).map_err(|e| e.to_string())?.graph;
    ensure!(k6.node_count() == 15 && k6.edge_count() == 105 && k6.is_complete(), "K6 skeleton not complete K15");
    let k8 = matching_skeleton(8, &budget()).map_err(|e| e.to_string())?.graph;
    ensure!(k8.node_count() == 105, "K8 has {} matchings", k8.node_count());
    let sweep = pair_closure_sweep(&k8, None, &budget()).map_err(|e| e.to_string())?;
    ensure!(sweep.pairs_checked == 105 * 104 / 2, "checked {} pairs", sweep.pairs_checked);
    ensure!(sweep.all_full(), "{} K8 pairs do not close", sweep.counterexamples.len());
    let lb = cover_lower_bound(&k8, CoverMode::SingletonShortcut, &budget()).map_err(|e| e.to_string())?;
    ensure!(lb.bound == 105, "bound {}", lb.bound);
    Ok(format!("K6 skeleton complete on 15 vertices; K8 all 5460 pairs full, bound {}", lb.bound))
}

fn replay(start: &Matching, removed: [(usize, usize); 2], added: [(usize, usize); 2]) -> Option<Matching> {
    let mut edges = edge_set(start);
    for e in removed {
        if !edges.remove(&e) {
            return None;
        }
    }
    edges.extend(added.iter().map(|&(u, v)| (u.min(v), u.max(v))));
    Matching::from_edges(start.node_count(), &edges.into_iter().collect::<Vec<_>>()).ok()
}

fn criterion_3() -> Outcome {
    let all = perfect_matchings(8).map_err(|e| e.to_string())?;
    let n = all.len();
    let adj: Vec<Vec<bool>> = (0..n).map(|i| (0..n).map(|j| single_cycle(&all[i], &all[j])).collect()).collect();
    let index = |m: &Matching| all.iter().position(|x| x == m);
    let results: Vec<Result<(usize, usize, usize), String>> = (0..n)
        .into_par_iter()
        .map(|i1| {
            let (mut triples, mut pairwise, mut iterations) = (0, 0, 0);
            for i2 in (0..n).filter(|&i2| adj[i1][i2]) {
                for i3 in 0..n {
                    let (m1, m2, m3) = (&all[i1], &all[i2], &all[i3]);
                    let trace = three_common_neighbor(m1, m2, m3).map_err(|e| format!("({i1},{i2},{i3}): {e}"))?;
                    let all_adjacent = adj[i1][i3] && adj[i2][i3];
                    match &trace.outcome {
                        CommonNeighborOutcome::PairwiseAdjacent => {
                            ensure!(all_adjacent, "({i1},{i2},{i3}): PairwiseAdjacent for a non-adjacent triple");
                            pairwise += 1;
                        }
                        CommonNeighborOutcome::CommonNeighbor(m) => {
                            ensure!(!all_adjacent, "({i1},{i2},{i3}): searched a pairwise adjacent triple");
                            let k = index(m).ok_or("result is not a perfect matching of K8")?;
                            ensure!(adj[k][i1] && adj[k][i2] && adj[k][i3], "({i1},{i2},{i3}): result not adjacent");
                            let mut cur = trace.initial.clone().ok_or("missing initial matching")?;
                            let mut c = component_count(m3, &cur);
                            for step in &trace.steps {
                                let next = replay(&cur, step.removed, step.added)
                                    .ok_or_else(|| format!("({i1},{i2},{i3}): step does not apply"))?;
                                let c_next = component_count(m3, &next);
                                ensure!(c_next + 1 == c, "({i1},{i2},{i3}): c went from {c} to {c_next}");
                                cur = next;
                                c = c_next;
                                iterations += 1;
                            }
                            ensure!(&cur == m, "({i1},{i2},{i3}): replayed trace ends elsewhere");
                        }
                    }
                    // Cross-check: a common neighbor exists by brute force.
                    ensure!(
                        all_adjacent || (0..n).any(|k| adj[k][i1] && adj[k][i2] && adj[k][i3]),
                        "({i1},{i2},{i3}): brute force finds no common neighbor"
                    );
                    triples += 1;
                }
            }
            Ok((triples, pairwise, iterations))
        })
        .collect();
    let (mut triples, mut pairwise, mut iterations) = (0, 0, 0);
    for r in results {
        let (t, p, it) = r?;
        triples += t;
        pairwise += p;
        iterations += it;
    }
    Ok(format!("{triples} ordered triples ({pairwise} pairwise adjacent), {iterations} exchanges each lowering c by 1"))
}

fn criterion_4() -> Outcome {
    let mut summary = Vec::new();
    for nodes in [6, 8, 10] {
        let all = perfect_matchings(nodes).map_err(|e| e.to_string())?;
        let checked: Result<Vec<usize>, String> = (0..all.len())
            .into_par_iter()
            .map(|i| {
                let mut count = 0;
                for j in 0..all.len() {
                    let (m1, m2) = (&all[i], &all[j]);
                    if !single_cycle(m1, m2) {
                        continue;
                    }
                    let mp = adjacent_cycle_matching(m1, m2).map_err(|e| format!("K{nodes} ({i},{j}): {e}"))?.matching;
                    let star = sym_diff_nodes(m1, m2);
                    ensure!(
                        sym_diff_nodes(m1, &mp) == star && sym_diff_nodes(m2, &mp) == star,
                        "K{nodes} ({i},{j}): node sets differ"
                    );
                    let cycle_edges: BTreeSet<_> = edge_set(m1).symmetric_difference(&edge_set(m2)).copied().collect();
                    ensure!(edge_set(&mp).is_disjoint(&cycle_edges), "K{nodes} ({i},{j}): M' meets M1 Δ M2");
                    ensure!(single_cycle(m1, &mp) && single_cycle(m2, &mp), "K{nodes} ({i},{j}): M' not adjacent");
                    count += 1;
                }
                Ok(count)
            })
            .collect();
        summary.push(format!("K{nodes}: {} pairs", checked?.iter().sum::<usize>()));
    }
    Ok(summary.join(", "))
}

fn criterion_5() -> Outcome {
    let sk = tree_skeleton(5, &budget()).map_err(|e| e.to_string())?;
    let g = &sk.graph;
    ensure!(g.node_count() == 125, "{} trees", g.node_count());
    // Oracle degree: trees differing in exactly one edge.
    let trees = spanning_trees(5).map_err(|e| e.to_string())?;
    let oracle_max = trees
        .iter()
        .map(|a| trees.iter().filter(|b| a.iter().filter(|e| !b.contains(e)).count() == 1).count())
        .max()
        .unwrap_or(0);
    ensure!(g.max_degree() == oracle_max, "skeleton max degree {} vs oracle {oracle_max}", g.max_degree());
    let sweep = pair_closure_sweep(g, Some(2), &budget()).map_err(|e| e.to_string())?;
    ensure!(sweep.all_full(), "{} pairs at distance <= 2 do not close", sweep.counterexamples.len());
    let lb = cover_lower_bound(g, CoverMode::DegreeBound, &budget()).map_err(|e| e.to_string())?;
    ensure!(lb.bound == oracle_max + 1 && lb.bound >= g.max_degree(), "bound {}", lb.bound);
    Ok(format!("{} close pairs full, all proper closed sets isolated, bound {} = max degree {} + 1", sweep.pairs_checked, lb.bound, oracle_max))
}

fn criterion_6() -> Outcome {
    let n = 6;
    let (s, t) = (0, 1);
    let sk = tree_skeleton(n, &budget()).map_err(|e| e.to_string())?;
    let position = |tree: &Vec<(usize, usize)>| {
        sk.vertices.iter().position(|v| matches!(v, FamilyVertex::Tree(x) if x == tree)).ok_or("tree missing")
    };
    let ws = w_sets(n, s, t);
    ensure!(ws.len() == binomial(4, 3) as usize, "{} W sets", ws.len());
    let tws: Vec<_> = ws.iter().map(|w| build_tw(n, s, t, w)).collect::<Result<_, _>>().map_err(|e| e.to_string())?;
    let ids: Vec<usize> = tws.iter().map(position).collect::<Result<_, _>>()?;
    for (a, b) in (0..ids.len()).tuple_combinations() {
        let d = sk.graph.distance(ids[a], ids[b]);
        let differing = tws[a].iter().filter(|e| !tws[b].contains(e)).count();
        ensure!(d >= 2 && differing >= 2, "T(W) {a} and {b} at distance {d}");
    }
    let mut checks = 0;
    for (w, tree) in ws.iter().zip(&tws) {
        for &y in w {
            let u: Vec<usize> = (0..n).filter(|&v| v != y).collect();
            let neighbor = tw_exchange(n, s, t, w, y).map_err(|e| e.to_string())?;
            ensure!(sk.graph.has_edge(position(tree)?, position(&neighbor)?), "exchange not adjacent for y={y}");
            ensure!(subtour_facet_check(tree, &u) == Ok(SubtourStatus::Slack), "W={w:?} y={y}: not slack at T(W)");
            ensure!(subtour_facet_check(&neighbor, &u) == Ok(SubtourStatus::Tight), "W={w:?} y={y}: not tight at neighbor");
            checks += 1;
        }
    }
    Ok(format!("4 trees T(W) pairwise at distance >= 2; {checks} (W, y) slack/tight checks"))
}

fn dag(nodes: usize, arcs: &[(usize, usize)], s: usize, t: usize) -> DagDesc {
    DagDesc::new(nodes, arcs.to_vec(), s, t).expect("valid DAG")
}

fn tournament(nodes: usize) -> DagDesc {
    dag(nodes, &(0..nodes).tuple_combinations().collect::<Vec<_>>(), 0, nodes - 1)
}

fn grid(w: usize, h: usize) -> DagDesc {
    let id = |x: usize, y: usize| y * w + x;
    let mut arcs = Vec::new();
    for y in 0..h {
        for x in 0..w {
            if x + 1 < w {
                arcs.push((id(x, y), id(x + 1, y)));
            }
            if y + 1 < h {
                arcs.push((id(x, y), id(x, y + 1)));
            }
        }
    }
    dag(w * h, &arcs, 0, w * h - 1)
}

fn criterion_7() -> Outcome {
    let non_decomposable = [
        ("diamond", dag(4, &[(0, 1), (0, 2), (1, 3), (2, 3)], 0, 3)),
        ("diamond with chord", dag(4, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)], 0, 3)),
        // Two parallel arcs into and out of a middle node, plus a bypass.
        ("spindle with bypass", dag(3, &[(0, 1), (0, 1), (1, 2), (1, 2), (0, 2)], 0, 2)),
        // Two split points whose branches cross-link past the middle.
        ("two-split spindle", dag(6, &[(0, 1), (0, 2), (1, 3), (2, 3), (1, 4), (3, 4), (3, 5), (4, 5), (2, 5)], 0, 5)),
        ("tournament on 5", tournament(5)),
        ("tournament on 7", tournament(7)),
        ("4x4 grid", grid(4, 4)),
    ];
    let mut lines = Vec::new();
    for (name, d) in &non_decomposable {
        ensure!(is_decomposable(d).is_none(), "{name} is decomposable");
        let g = path_skeleton(d, &budget()).map_err(|e| e.to_string())?.graph;
        ensure!(g.node_count() <= 200, "{name} has {} paths", g.node_count());
        let sweep = pair_closure_sweep(&g, None, &budget()).map_err(|e| e.to_string())?;
        ensure!(sweep.all_full(), "{name}: {} pairs do not close", sweep.counterexamples.len());
        lines.push(format!("{name} {}", g.node_count()));
    }
    let diamond = [(0, 1), (0, 2), (1, 3), (2, 3)];
    let decomposable = [
        ("two diamonds", dag(7, &[(0, 1), (0, 2), (1, 3), (2, 3), (3, 4), (3, 5), (4, 6), (5, 6)], 0, 6)),
        ("diamond then chorded diamond", {
            let mut arcs = diamond.to_vec();
            arcs.extend([(3, 4), (3, 5), (4, 5), (4, 6), (5, 6)]);
            dag(7, &arcs, 0, 6)
        }),
        ("tournament then diamond", {
            let mut arcs: Vec<(usize, usize)> = (0..5).tuple_combinations().collect();
            arcs.extend([(4, 5), (4, 6), (5, 7), (6, 7)]);
            dag(8, &arcs, 0, 7)
        }),
    ];
    let mut exhibited = 0;
    for (name, d) in &decomposable {
        ensure!(is_decomposable(d).is_some(), "{name} is not decomposable");
        let g = path_skeleton(d, &budget()).map_err(|e| e.to_string())?.graph;
        let sweep = pair_closure_sweep(&g, None, &budget()).map_err(|e| e.to_string())?;
        let witness = sweep.counterexamples.first().ok_or_else(|| format!("{name}: every pair closes"))?;
        let set = &witness.closure;
        ensure!(set.len() >= 2 && set.len() < g.node_count() && is_closed(&g, set), "{name}: bad witness {set:?}");
        exhibited += 1;
    }
    Ok(format!("non-decomposable full ({}); {exhibited} decomposable with proper closed sets", lines.join(", ")))
}

fn random_polytope(rng: &mut ChaCha8Rng) -> HPolytope {
    let dim = rng.random_range(2..=3);
    let mut p = HPolytope::cube(dim, rat(0), rat(2));
    for _ in 0..rng.random_range(0..=2) {
        let normal: Vec<i64> = (0..dim).map(|_| rng.random_range(-1..=1)).collect();
        if normal.iter().all(|&x| x == 0) {
            continue;
        }
        let max: i64 = normal.iter().map(|&a| a.max(0) * 2).sum();
        p = p.with_inequality(Inequality::new(rvec(&normal), rat(rng.random_range(1..=max.max(1)))));
    }
    p
}

fn random_points(rng: &mut ChaCha8Rng, dim: usize, max_points: usize) -> VPolytope {
    let count = rng.random_range(1..=max_points);
    let pts = (0..count).map(|_| rvec(&(0..dim).map(|_| rng.random_range(0..=3)).collect::<Vec<_>>())).collect();
    VPolytope::hull_of(dim, pts).expect("points")
}

fn criterion_8() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let b = budget();
    let (mut refl, mut refl_simple, mut attempts) = (0, 0, 0);
    while refl < 50 {
        attempts += 1;
        ensure!(attempts < 2000, "too few usable reflection instances");
        let p = random_polytope(&mut rng);
        let (verts, _) = enumerate_vertices(&p, &b).map_err(|e| e.to_string())?;
        let normal: Vec<i64> = (0..p.ambient_dim).map(|_| rng.random_range(-2..=2)).collect();
        if normal.iter().all(|&x| x == 0) {
            continue;
        }
        // Aim the hyperplane through a vertex half of the time.
        let rhs = if rng.random_bool(0.5) {
            let v = &verts.vertices()[rng.random_range(0..verts.len())];
            simplext::rational::dot(&rvec(&normal), v)
        } else {
            rat(rng.random_range(-2..=4))
        };
        let h = Halfspace::new(rvec(&normal), rhs).map_err(|e| e.to_string())?;
        let Ok(r) = reflection_simplicity(&p, &h, true, &b) else { continue };
        ensure!(r.enumerated == Some(r.simple), "reflection predicate {} vs enumeration {:?}", r.simple, r.enumerated);
        refl += 1;
        refl_simple += usize::from(r.simple);
    }

    let mut disj_simple = 0;
    for i in 0..30 {
        let p1 = random_points(&mut rng, 2, 4);
        let p2 = random_points(&mut rng, 2, 4);
        let ext = disjunctive_extension(&p1, &p2, &b).map_err(|e| e.to_string())?;
        let (_, inc) = enumerate_vertices(&ext.q, &b).map_err(|e| e.to_string())?;
        let predicted = disjunctive_simplicity(&p1, &p2).map_err(|e| e.to_string())?;
        ensure!(is_simple(&inc) == predicted, "disjunctive instance {i}: predicted {predicted}");
        disj_simple += usize::from(predicted);
    }

    let mut weakly = 0;
    for i in 0..30 {
        let d1 = rng.random_range(1..=2);
        let d2 = rng.random_range(1..=2);
        let c1 = homogenize(&random_points(&mut rng, d1, 4), &b).map_err(|e| e.to_string())?;
        let c2 = homogenize(&random_points(&mut rng, d2, 4), &b).map_err(|e| e.to_string())?;
        let (_, check) = product_cone(&c1, &c2, &b).map_err(|e| e.to_string())?;
        let both_strong = cone_simplicity(&c1) == ConeSimplicity::Strong && cone_simplicity(&c2) == ConeSimplicity::Strong;
        ensure!(check.passes() && check.weakly_simple == both_strong, "cone pair {i}: {check:?}");
        weakly += usize::from(check.weakly_simple);
    }

    for k in 2..=5 {
        let g = build_gon_extension(k).map_err(|e| e.to_string())?;
        let r = &g.report;
        ensure!(r.facet_count == 2 * k as usize, "k={k}: {} facets", r.facet_count);
        ensure!(r.simple, "k={k}: not simple");
        ensure!(r.vertices_match && r.max_vertex_error <= 1e-7, "k={k}: vertex error {}", r.max_vertex_error);
    }
    Ok(format!(
        "reflection 50/50 ({refl_simple} simple), disjunctive 30/30 ({disj_simple} simple), cones 30/30 ({weakly} weakly simple), polygons k=2..5"
    ))
}

fn criterion_9() -> Outcome {
    let b = budget();
    let columns: [[i64; 3]; 7] = [[1, 1, 0], [5, 0, -4], [1, -1, 0], [0, 0, 1], [-1, 1, 0], [-5, 0, -4], [-1, -1, 0]];
    let q_v = VPolytope::hull_of(3, columns.iter().map(|c| rvec(c)).collect()).map_err(|e| e.to_string())?;
    ensure!(q_v.len() == 7, "Q has {} vertices", q_v.len());
    let q_skel = skeleton(&q_v, &b).map_err(|e| e.to_string())?;
    let m4 = q_v.index_of(&rvec(&columns[3])).ok_or("m4 is not a vertex")?;
    ensure!(q_skel.degree(m4) == 4, "m4 has {} neighbors", q_skel.degree(m4));
    let (q, q_inc) = convex_hull_facets(&q_v, &b).map_err(|e| e.to_string())?;
    ensure!(!is_simple(&q_inc), "Q is simple");
    let p = VPolytope::hull_of(2, columns.iter().map(|c| rvec(&c[..2])).collect()).map_err(|e| e.to_string())?;
    let w = ExtensionWitness::new(p, q, Projection::coordinate(3, 2), &b).map_err(|e| e.to_string())?;
    let p_skel = skeleton(&w.p, &b).map_err(|e| e.to_string())?;
    ensure!(
        w.lattice.vertex_count() == 6 && w.lattice.polytope_dim() == 2 && (0..6).all(|v| p_skel.degree(v) == 2) && p_skel.is_connected(),
        "P is not a hexagon"
    );
    let report = extension_report(&w, None, &b).map_err(|e| e.to_string())?;
    ensure!(report.covering.is_valid(), "covering invalid");
    ensure!(report.verdict == ExtensionVerdict::AllConditionsPass, "verdict {:?}", report.verdict);
    ensure!(report.facets.iter().all(|f| f.passes()), "some facet fails");
    ensure!(!report.q_simple, "report claims Q simple");
    Ok(format!("Q: 7 vertices, m4 degree 4; P hexagon; {} facets pass all checks", report.facets.len()))
}

fn petersen() -> SkeletonGraph {
    let mut edges: Vec<(usize, usize)> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
    edges.extend((0..5).map(|i| (i, i + 5)));
    edges.extend((0..5).map(|i| (5 + i, 5 + (i + 2) % 5)));
    SkeletonGraph::new(10, edges).expect("petersen")
}

fn corpus() -> Vec<(String, SkeletonGraph)> {
    let b = budget();
    let mut out: Vec<(String, SkeletonGraph)> = Vec::new();
    for n in 3..=12 {
        out.push((format!("cycle {n}"), SkeletonGraph::cycle(n)));
    }
    for n in [2, 5, 9, 12] {
        out.push((format!("path {n}"), SkeletonGraph::path(n)));
    }
    for n in [4, 7] {
        out.push((format!("complete {n}"), SkeletonGraph::complete(n)));
    }
    out.push(("petersen".into(), petersen()));
    for (n, k) in [(4, 2), (5, 2), (4, 1)] {
        out.push((format!("hypersimplex {n},{k}"), hypersimplex_skeleton(n, k, &b).expect("hypersimplex").graph));
    }
    out.push(("trees of K4".into(), tree_skeleton(3, &b).expect("trees").graph));
    out.push(("matchings of K4".into(), matching_skeleton(4, &b).expect("matchings").graph));
    out.push(("paths of two diamonds".into(), path_skeleton(&dag(7, &[(0, 1), (0, 2), (1, 3), (2, 3), (3, 4), (3, 5), (4, 6), (5, 6)], 0, 6), &b).expect("dag").graph));
    out.push(("paths of 4x3 grid".into(), path_skeleton(&grid(4, 3), &b).expect("grid").graph));
    let cube = VPolytope::new(3, (0..8).map(|i| rvec(&[i & 1, i >> 1 & 1, i >> 2 & 1])).collect()).expect("cube");
    out.push(("3-cube".into(), skeleton(&cube, &b).expect("cube skeleton")));
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    for i in 0..6 {
        let n = rng.random_range(5..=12);
        let p = rng.random_range(0.2..0.6);
        let edges: Vec<_> = (0..n).tuple_combinations().filter(|_| rng.random_bool(p)).collect();
        out.push((format!("random {i}"), SkeletonGraph::new(n, edges).expect("random")));
    }
    out
}

fn criterion_10() -> Outcome {
    let graphs = corpus();
    let results: Vec<Outcome> = graphs
        .par_iter()
        .map(|(name, g)| {
            let n = g.node_count();
            ensure!(n <= 12, "{name} too large");
            let adj = masks(g);
            let full = (1u64 << n) - 1;
            let cl: Vec<u64> = (0..=full).map(|w| naive_closure(&adj, w)).collect();
            for w in 0..=full {
                let set = from_mask(w, n);
                let lib = closure_set(g, &set);
                ensure!(to_mask(&lib) == cl[w as usize], "{name}: closure of {set:?} differs from oracle");
                ensure!(w & !cl[w as usize] == 0, "{name}: closure of {set:?} not extensive");
                ensure!(cl[cl[w as usize] as usize] == cl[w as usize], "{name}: closure of {set:?} not idempotent");
                ensure!(is_closed(g, &set) == (cl[w as usize] == w), "{name}: is_closed wrong on {set:?}");
                if is_isolated(g, &set) {
                    ensure!(cl[w as usize] == w, "{name}: isolated {set:?} not closed");
                }
                // Monotonicity over every subset of w.
                let mut sub = w;
                loop {
                    ensure!(cl[sub as usize] & !cl[w as usize] == 0, "{name}: not monotone at {sub:b} within {w:b}");
                    if sub == 0 {
                        break;
                    }
                    sub = (sub - 1) & w;
                }
            }
            Ok(name.clone())
        })
        .collect();
    let names: Vec<String> = results.into_iter().collect::<Result<_, _>>()?;
    Ok(format!("{} graphs with <= 12 nodes, all subsets and subset pairs", names.len()))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome, u64); 10] = [
        ("hypersimplex pairs close, bound C(n,k)", criterion_1, 10),
        ("perfect matchings K6 complete, K8 full", criterion_2, 60),
        ("three common neighbors on all K8 triples", criterion_3, 600),
        ("adjacent-cycle matchings in K6, K8, K10", criterion_4, 120),
        ("spanning trees of K5 close at distance <= 2", criterion_5, 120),
        ("trees T(W) for n = 6", criterion_6, 10),
        ("flow polytopes of DAGs", criterion_7, 60),
        ("randomized construction suites", criterion_8, 300),
        ("non-simple extension with passing bicliques", criterion_9, 5),
        ("closure operator properties", criterion_10, 60),
    ];
    let mut failures = 0;
    for (i, (name, run, limit)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let outcome = match outcome {
            Ok(detail) if elapsed > Duration::from_secs(*limit) => Err(format!("{detail}; over the {limit} s limit")),
            other => other,
        };
        match outcome {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail} [{:.2} s]", i + 1, elapsed.as_secs_f64()),
            Err(why) => {
                failures += 1;
                println!("criterion {:>2} FAIL  {name}: {why} [{:.2} s]", i + 1, elapsed.as_secs_f64());
            }
        }
    }
    if failures > 0 {
        println!("{failures} acceptance criteria failed");
        std::process::exit(1);
    }
    println!("all acceptance criteria passed");
}
