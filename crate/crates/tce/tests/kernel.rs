use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tce::graph::*;
use tce::kernel::*;
use tce::recognition::*;
use tce::solver::{brute_force_oracle, Instance};

fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(u, v);
            }
        }
    }
    g
}

fn star(leaves: usize) -> Graph {
    Graph::from_edges(leaves + 1, &(1..=leaves).map(|v| (0, v)).collect::<Vec<_>>())
}

fn complete(n: usize) -> Graph {
    let mut edges = vec![];
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v));
        }
    }
    Graph::from_edges(n, &edges)
}

// Threshold graph with `t` levels, each holding one clique and one
// independent vertex: clique level a = id a, independent level b = id t+b.
fn singleton_level_graph(t: usize) -> Graph {
    let mut g = Graph::new(2 * t);
    for a in 0..t {
        for b in a + 1..t {
            g.add_edge(a, b);
        }
    }
    for a in 0..t {
        for b in a..t {
            g.add_edge(a, t + b);
        }
    }
    g
}

#[test]
fn margin_values() {
    assert_eq!(margin(1, Target::Threshold), 4);
    assert_eq!(margin(1, Target::Chain), 5);
    assert_eq!(margin(0, Target::Chain), 3);
}

#[test]
fn twin_rule_trims_star() {
    // leaf class of K_{1,6} has size 6 > 2k+2 = 4; exhaustion leaves 4 leaves
    let g = apply_twin_rule(&star(6), 1, Target::Threshold);
    assert_eq!(g.n(), 5);
    let tc = twin_classes(&g);
    assert!(tc.members.iter().all(|m| m.len() <= 4));
}

#[test]
fn twin_rule_noop_when_classes_small() {
    let p4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]);
    assert_eq!(apply_twin_rule(&p4, 0, Target::Threshold), p4);
}

#[test]
fn twin_rule_trims_clique() {
    let g = apply_twin_rule(&complete(10), 1, Target::Threshold);
    assert_eq!(g, complete(4));
    // equivalence at k=1: both are yes-instances (already threshold)
    assert!(is_threshold(&complete(10)).is_ok() && is_threshold(&g).is_ok());
}

#[test]
fn chain_twin_margin_spares_triangle() {
    // A C3 is three mutual true twins; trimming it at class size > 2k+2 would
    // turn the k=0 no-instance into a yes-instance.  The chain margin 2k+3
    // leaves it alone.
    let c3 = complete(3);
    assert_eq!(apply_twin_rule(&c3, 0, Target::Chain), c3);
    let inst = Instance::new(c3.clone(), 0, Target::Chain, Variant::Delete);
    let (red, _) = twin_reduce(&inst);
    assert_eq!(red.graph, c3);
    assert!(brute_force_oracle(&inst).is_none());
}

#[test]
fn modulator_empty_on_target_graphs() {
    let g = singleton_level_graph(4);
    for k in 0..3 {
        let m = build_modulator(&g, k, Target::Threshold).unwrap();
        assert!(m.x.is_empty());
    }
    let k23 = Graph::from_edges(5, &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]);
    assert!(build_modulator(&k23, 0, Target::Chain).unwrap().x.is_empty());
}

#[test]
fn modulator_p4_examples() {
    let p4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]);
    // k=0: X would need the whole P4, 4 > 4k = 0
    let obs = build_modulator(&p4, 0, Target::Threshold).unwrap_err();
    assert_eq!(obs.kind, ObsKind::P4);
    // k=1: the four vertices fit within 4k = 4
    let m = build_modulator(&p4, 1, Target::Threshold).unwrap();
    assert_eq!(m.x, (0..4).collect::<BTreeSet<_>>());
}

// Every obstruction in g must be destroyable by edits within [X ∩ V(W)]².
fn modulator_hits_all(g: &Graph, x: &BTreeSet<usize>, family: Target) -> bool {
    let n = g.n();
    let max = if family == Target::Threshold { 4 } else { 5 };
    for size in 3..=max {
        'subsets: for subset in tce::solver::combinations(n, size) {
            if obstruction_on(g, &subset, family).is_none() {
                continue;
            }
            let xw: Vec<usize> = subset.iter().copied().filter(|v| x.contains(v)).collect();
            let mut pairs = vec![];
            for i in 0..xw.len() {
                for j in i + 1..xw.len() {
                    pairs.push((xw[i], xw[j]));
                }
            }
            for mask in 0..1usize << pairs.len() {
                let mut f = EditSet::new();
                for (idx, &(u, v)) in pairs.iter().enumerate() {
                    if mask >> idx & 1 == 1 {
                        f.insert(u, v);
                    }
                }
                let h = toggle_edits(g, &f);
                if obstruction_on(&h, &subset, family).is_none() {
                    continue 'subsets;
                }
            }
            return false;
        }
    }
    true
}

#[test]
fn modulator_validity_random() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    let mut ok_count = 0;
    for _ in 0..150 {
        let n = rng.gen_range(3..=8);
        let g = random_graph(&mut rng, n, 0.4);
        let k = rng.gen_range(0..=2);
        for family in [Target::Threshold, Target::Chain] {
            if let Ok(m) = build_modulator(&g, k, family) {
                let bound = if family == Target::Threshold { 4 * k } else { 5 * k };
                assert!(m.x.len() <= bound);
                assert!(modulator_hits_all(&g, &m.x, family), "family {family:?}, graph {g:?}");
                ok_count += 1;
            }
        }
    }
    assert!(ok_count > 30, "too few successful modulators: {ok_count}");
}

#[test]
fn nesting_downstream_of_modulator() {
    let mut rng = ChaCha8Rng::seed_from_u64(22);
    for _ in 0..150 {
        let n = rng.gen_range(3..=8);
        let g = random_graph(&mut rng, n, 0.4);
        let k = rng.gen_range(1..=2);
        if let Ok(m) = build_modulator(&g, k, Target::Threshold) {
            let rest: BTreeSet<usize> = (0..n).filter(|v| !m.x.contains(v)).collect();
            let (h, _) = g.induced_subgraph(&rest);
            for u in 0..h.n() {
                for v in u + 1..h.n() {
                    assert!(!matches!(nesting_compare(&h, u, v), Nesting::Incomparable { .. }));
                }
            }
            // realized neighborhoods in X: at most |X|+1 distinct sets
            let realized: BTreeSet<BTreeSet<usize>> = rest
                .iter()
                .map(|&v| g.neighbors(v).iter().copied().filter(|w| m.x.contains(w)).collect())
                .collect();
            assert!(realized.len() <= m.x.len() + 1);
        }
    }
}

#[test]
fn classification_of_singleton_levels() {
    let t = 20;
    let g = singleton_level_graph(t);
    let part = is_threshold(&g).unwrap();
    let m = Modulator { x: BTreeSet::new(), family: Target::Threshold, packing: vec![] };
    let classes = classify_decomposition(&g, &m, &part, 0);
    assert_eq!(classes.labels.len(), part.levels());
    // prefix/suffix accumulate 2k+2 = 2 vertices each
    assert!(classes.f < classes.r);
    assert_eq!(classes.strips.len(), 1);
    let strip = &classes.strips[0];
    assert!(strip.size >= 13, "strip of size {} should be large at k=0", strip.size);
    assert!(!strip.central.is_empty());
    // every central vertex has 2 same-side strip vertices strictly before and after
    for &v in &strip.central {
        let (lvl, side) = part.level_of(v).unwrap();
        let frags = match side {
            Side::Clique => part.clique_side(),
            Side::Independent => part.independent_side(),
        };
        let before = frags
            .iter()
            .filter(|&&u| {
                let (l, _) = part.level_of(u).unwrap();
                l < lvl && l >= strip.start
            })
            .count();
        let after = frags
            .iter()
            .filter(|&&u| {
                let (l, _) = part.level_of(u).unwrap();
                l > lvl && l <= strip.end
            })
            .count();
        assert!(before >= 2 && after >= 2);
    }
}

#[test]
fn irrelevant_rule_on_small_graph_is_noop() {
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    for _ in 0..50 {
        let k = rng.gen_range(0..=2);
        // fewer than 16k+13 vertices: no strip can be large
        let n = rng.gen_range(1..=7.min(16 * k + 12));
        let g = random_graph(&mut rng, n, 0.4);
        if let Ok(res) = apply_irrelevant_vertex_rule(&g, k, Target::Threshold) {
            assert!(res.is_none());
        }
    }
}

#[test]
fn irrelevant_rule_fires_on_long_threshold_graph() {
    let g = singleton_level_graph(30);
    let h = apply_irrelevant_vertex_rule(&g, 0, Target::Threshold).unwrap().unwrap();
    assert_eq!(h.n(), g.n() - 1);
    assert!(is_threshold(&h).is_ok());
}

// Threshold graph from a random creation sequence, optionally perturbed.
fn perturbed_threshold(rng: &mut ChaCha8Rng, len: usize, flips: usize) -> Graph {
    let mut g = Graph::new(0);
    for _ in 0..len {
        let n = g.n();
        let mut h = Graph::new(n + 1);
        for (u, v) in g.edges() {
            h.add_edge(u, v);
        }
        if rng.gen_bool(0.5) {
            for v in 0..n {
                h.add_edge(n, v);
            }
        }
        g = h;
    }
    for _ in 0..flips {
        let u = rng.gen_range(0..g.n());
        let v = rng.gen_range(0..g.n());
        if u != v {
            if g.has_edge(u, v) {
                g.remove_edge(u, v);
            } else {
                g.add_edge(u, v);
            }
        }
    }
    g
}

#[test]
fn irrelevant_rule_preserves_decision() {
    let mut rng = ChaCha8Rng::seed_from_u64(24);
    let mut fired = 0;
    while fired < 100 {
        let flips = rng.gen_range(0..=1);
        let len = rng.gen_range(20..=30);
        let g = perturbed_threshold(&mut rng, len, flips);
        let k = rng.gen_range(flips..=flips + 1);
        if let Ok(Some(h)) = apply_irrelevant_vertex_rule(&g, k, Target::Threshold) {
            for variant in [Variant::Edit, Variant::Complete, Variant::Delete] {
                let before = Instance::new(g.clone(), k, Target::Threshold, variant);
                let after = Instance::new(h.clone(), k, Target::Threshold, variant);
                assert_eq!(
                    brute_force_oracle(&before).is_some(),
                    brute_force_oracle(&after).is_some(),
                    "k={k}, variant {variant:?}"
                );
            }
            fired += 1;
        }
    }
}

#[test]
fn kernel_bound_values() {
    assert_eq!(threshold_kernel_bound(0), 92);
    assert_eq!(threshold_kernel_bound(1), 816);
    assert_eq!(chain_kernel_bound(0), 267);
    assert_eq!(chain_kernel_bound(1), 826 + 1286 + 267);
}

#[test]
fn kernelize_fixes_target_graphs() {
    let g = singleton_level_graph(5);
    let inst = Instance::new(g.clone(), 2, Target::Threshold, Variant::Edit);
    let (out, map) = kernelize(&inst);
    assert_eq!(out.k, 2);
    assert_eq!(out.graph, g);
    assert_eq!(map, (0..g.n()).collect::<Vec<_>>());
}

#[test]
fn kernelize_no_instance_keeps_obstruction() {
    let p4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]);
    let inst = Instance::new(p4, 0, Target::Threshold, Variant::Edit);
    let (out, map) = kernelize(&inst);
    assert_eq!(out.k, 0);
    assert_eq!(out.graph.n(), 4);
    assert_eq!(map.len(), 4);
    assert!(find_obstruction(&out.graph, Target::Threshold).is_some());
    assert!(brute_force_oracle(&out).is_none());
}

#[test]
fn kernelize_preserves_decision_all_variants() {
    let mut rng = ChaCha8Rng::seed_from_u64(25);
    let combos = [
        (Target::Threshold, Variant::Edit),
        (Target::Threshold, Variant::Complete),
        (Target::Threshold, Variant::Delete),
        (Target::Chain, Variant::Edit),
        (Target::Chain, Variant::Complete),
        (Target::Chain, Variant::Delete),
    ];
    for trial in 0..100 {
        let n = rng.gen_range(2..=10);
        let g = random_graph(&mut rng, n, 0.4);
        let k = rng.gen_range(0..=3);
        let (target, variant) = combos[trial % combos.len()];
        let inst = Instance::new(g.clone(), k, target, variant);
        let (out, map) = kernelize(&inst);
        // proper kernel: induced subgraph, parameter never raised
        assert!(out.k <= k);
        assert_eq!(map.len(), out.graph.n());
        for u in 0..out.graph.n() {
            for v in u + 1..out.graph.n() {
                assert_eq!(out.graph.has_edge(u, v), g.has_edge(map[u], map[v]));
            }
        }
        let bound = match target {
            Target::Threshold => threshold_kernel_bound(k),
            _ => chain_kernel_bound(k),
        };
        assert!(out.graph.n() <= bound);
        assert_eq!(
            brute_force_oracle(&inst).is_some(),
            brute_force_oracle(&out).is_some(),
            "trial {trial}: {target:?} {variant:?} k={k} graph {g:?}"
        );
    }
}

#[test]
fn kernelize_shrinks_large_twin_classes() {
    let inst = Instance::new(complete(10), 1, Target::Threshold, Variant::Edit);
    let (out, _) = kernelize(&inst);
    assert!(out.graph.n() <= 4);
}
