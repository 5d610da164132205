//! Correctness of the hardness-instance constructors at desk scale.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeSet;
use tce::graph::{apply_edits, Graph, Variant};
use tce::recognition::{compute_split_partition, find_obstruction, is_chordal, Target};
use tce::reductions::{
    assignment_to_solution, bipartite_chain_to_chain, bipartite_chain_to_cobipartite_chordal,
    cobipartite_to_chordal, extract_assignment, sat_to_threshold_editing,
    split_te_to_bipartite_chain, CnfFormula,
};
use tce::solver::{all_pairs, brute_force_oracle, exhaustive_min_edits, solve};

fn is_threshold_graph(g: &Graph) -> bool {
    find_obstruction(g, Target::Threshold).is_none()
}

#[test]
fn cnf_validation() {
    assert!(CnfFormula::new(1, vec![vec![1]]).is_ok());
    assert!(CnfFormula::new(1, vec![vec![]]).is_err()); // empty clause
    assert!(CnfFormula::new(1, vec![vec![2]]).is_err()); // out of range
    assert!(CnfFormula::new(1, vec![vec![1, -1]]).is_err()); // tautology
    assert!(CnfFormula::new(4, vec![vec![1, 2, 3, 4]]).is_err()); // too wide
}

#[test]
fn gadget_budget_single_positive_clause() {
    let phi = CnfFormula::new(1, vec![vec![1]]).unwrap();
    let (inst, layout) = sat_to_threshold_editing(&phi);
    assert_eq!(layout.k_phi, 2); // 1 clause · (3·1 − 1)
    assert_eq!(inst.k, 2);
}

#[test]
fn gadget_counts_two_vars_one_clause() {
    let phi = CnfFormula::new(2, vec![vec![1, 2]]).unwrap();
    let (inst, layout) = sat_to_threshold_editing(&phi);
    assert_eq!(layout.k_phi, 5);
    assert_eq!(layout.clique_vertices().len(), 12);
    assert_eq!(layout.clause_verts.len(), 1);
    let guards: usize = layout.enforcement.iter().map(|(_, g)| g.len()).sum();
    assert_eq!(guards, 60); // 5 prefixes per variable × (k+1)=6
    assert_eq!(layout.isolated.len(), 24); // 4(k+1)
    assert_eq!(inst.graph.n(), 97);
}

#[test]
fn gadget_clause_adjacency_negative_occurrence() {
    // (¬x ∨ y): in the x-gadget the clause vertex sees {b, bot, d}.
    let phi = CnfFormula::new(2, vec![vec![-1, 2]]).unwrap();
    let (inst, layout) = sat_to_threshold_editing(&phi);
    let cv = layout.clause_verts[0];
    let x = &layout.vars[0];
    for w in [x.b, x.bot, x.d] {
        assert!(inst.graph.has_edge(cv, w));
    }
    for w in [x.a, x.top, x.c] {
        assert!(!inst.graph.has_edge(cv, w));
    }
    // y occurs positively: {b, top, d}.
    let y = &layout.vars[1];
    for w in [y.b, y.top, y.d] {
        assert!(inst.graph.has_edge(cv, w));
    }
}

#[test]
fn gadget_is_split() {
    let phi = CnfFormula::new(2, vec![vec![1, -2]]).unwrap();
    let (inst, layout) = sat_to_threshold_editing(&phi);
    let sp = compute_split_partition(&inst.graph).expect("gadget graph is split");
    // The inclusion-maximal clique side holds the gadget clique (a guard
    // adjacent to the full clique may join it).
    for v in layout.clique_vertices() {
        assert!(sp.c.contains(&v));
    }
}

#[test]
fn empty_formula_is_trivial() {
    let phi = CnfFormula::new(0, vec![]).unwrap();
    let (inst, layout) = sat_to_threshold_editing(&phi);
    assert_eq!(inst.graph.n(), 0);
    assert_eq!(inst.k, 0);
    assert_eq!(layout.k_phi, 0);
}

#[test]
fn assignment_to_solution_single_var() {
    let phi = CnfFormula::new(1, vec![vec![1]]).unwrap();
    let (inst, layout) = sat_to_threshold_editing(&phi);
    let f = assignment_to_solution(&layout, &[true]).unwrap();
    assert_eq!(f.len(), 2);
    let h = apply_edits(&inst.graph, &f).unwrap();
    assert!(is_threshold_graph(&h));
    // An unsatisfying assignment is a contract error.
    assert!(assignment_to_solution(&layout, &[false]).is_err());
}

#[test]
fn assignment_to_solution_two_vars() {
    let phi = CnfFormula::new(2, vec![vec![1, 2]]).unwrap();
    let (inst, layout) = sat_to_threshold_editing(&phi);
    let f = assignment_to_solution(&layout, &[true, false]).unwrap();
    assert_eq!(f.len(), 5);
    let h = apply_edits(&inst.graph, &f).unwrap();
    assert!(is_threshold_graph(&h));
}

fn random_satisfiable_formula(rng: &mut ChaCha8Rng) -> (CnfFormula, Vec<bool>) {
    loop {
        let nv = rng.gen_range(1..=3usize);
        let nc = rng.gen_range(1..=3usize);
        let mut clauses = Vec::new();
        for _ in 0..nc {
            let width = rng.gen_range(1..=3.min(nv));
            let mut vars: Vec<usize> = (1..=nv).collect();
            for i in (1..vars.len()).rev() {
                vars.swap(i, rng.gen_range(0..=i));
            }
            let clause: Vec<i32> = vars[..width]
                .iter()
                .map(|&v| if rng.gen_bool(0.5) { v as i32 } else { -(v as i32) })
                .collect();
            clauses.push(clause);
        }
        let phi = CnfFormula::new(nv, clauses).unwrap();
        // Find a satisfying assignment by exhaustion; retry on unsatisfiable.
        for mask in 0u32..(1 << nv) {
            let alpha: Vec<bool> = (0..nv).map(|i| mask >> i & 1 == 1).collect();
            if phi.satisfied_by(&alpha) {
                return (phi, alpha);
            }
        }
    }
}

#[test]
fn forward_reduction_exact_budget_random() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    for _ in 0..20 {
        let (phi, alpha) = random_satisfiable_formula(&mut rng);
        let (inst, layout) = sat_to_threshold_editing(&phi);
        let f = assignment_to_solution(&layout, &alpha).unwrap();
        assert_eq!(f.len(), layout.k_phi, "phi={:?}", phi);
        let h = apply_edits(&inst.graph, &f).unwrap();
        assert!(is_threshold_graph(&h), "phi={:?}", phi);
    }
}

#[test]
fn round_trip_assignment_extraction() {
    let mut rng = ChaCha8Rng::seed_from_u64(22);
    for _ in 0..20 {
        let (phi, alpha) = random_satisfiable_formula(&mut rng);
        let (_, layout) = sat_to_threshold_editing(&phi);
        let f = assignment_to_solution(&layout, &alpha).unwrap();
        let back = extract_assignment(&layout, &f).unwrap();
        assert!(phi.satisfied_by(&back), "phi={:?} back={:?}", phi, back);
    }
}

#[test]
fn tiny_equivalence_one_variable() {
    // All formulas on one variable with at most two clauses: the gadget
    // instance decides exactly like satisfiability.
    let clause_opts = [vec![1], vec![-1]];
    let mut formulas: Vec<Vec<Vec<i32>>> = Vec::new();
    for c1 in &clause_opts {
        formulas.push(vec![c1.clone()]);
        for c2 in &clause_opts {
            formulas.push(vec![c1.clone(), c2.clone()]);
        }
    }
    for clauses in formulas {
        let phi = CnfFormula::new(1, clauses).unwrap();
        let satisfiable = (0..2u32).any(|m| phi.satisfied_by(&[m == 1]));
        let (inst, _) = sat_to_threshold_editing(&phi);
        let sol = brute_force_oracle(&inst);
        assert_eq!(sol.is_some(), satisfiable, "phi={:?}", phi);
    }
}

#[test]
fn oracle_solution_decodes_and_respects_budget_lower_bound() {
    let phi = CnfFormula::new(1, vec![vec![1]]).unwrap();
    let (inst, layout) = sat_to_threshold_editing(&phi);
    let f = brute_force_oracle(&inst).expect("satisfiable formula gives a yes-instance");
    // Every clause vertex carries at least 3|vars|−1 = 2 edits.
    for &cv in &layout.clause_verts {
        let incident = f.iter().filter(|&(u, v)| u == cv || v == cv).count();
        assert!(incident >= 3 * phi.num_vars - 1);
    }
    // The clique-maximizing split partition survives the solution.
    let h = apply_edits(&inst.graph, &f).unwrap();
    let before = compute_split_partition(&inst.graph).unwrap();
    let after = compute_split_partition(&h).unwrap();
    assert_eq!(before.c, after.c);
    // And the solution decodes to the (unique) satisfying assignment.
    let alpha = extract_assignment(&layout, &f).unwrap();
    assert_eq!(alpha, vec![true]);
}

#[test]
fn split_to_bipartite_drops_clique_edges() {
    let g = Graph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]);
    let sp = compute_split_partition(&g).unwrap();
    let out = split_te_to_bipartite_chain(&g, &sp, 1);
    assert_eq!(out.k, 1);
    assert_eq!(out.target, Target::Chain);
    // K3 has an all-clique partition, so everything is dropped.
    if sp.i.is_empty() {
        assert_eq!(out.graph.edge_count(), 0);
    }
}

#[test]
fn split_to_bipartite_preserves_decision() {
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    let mut done = 0;
    while done < 50 {
        let n = rng.gen_range(2..=8);
        let k = rng.gen_range(0..=2usize);
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(0.5) {
                    g.add_edge(u, v);
                }
            }
        }
        let sp = match compute_split_partition(&g) {
            Some(sp) => sp,
            None => continue,
        };
        done += 1;
        // Split threshold editing: cross pairs only, partition respected.
        let cross: Vec<(usize, usize)> = all_pairs(n)
            .into_iter()
            .filter(|&(u, v)| sp.c.contains(&u) != sp.c.contains(&v))
            .collect();
        let ste = exhaustive_min_edits(&g, k, Variant::Edit, &cross, &mut |h: &Graph| {
            find_obstruction(h, Target::Threshold).is_none()
        });
        let out = split_te_to_bipartite_chain(&g, &sp, k);
        let bce = exhaustive_min_edits(&out.graph, k, Variant::Edit, &cross, &mut |h: &Graph| {
            find_obstruction(h, Target::Chain).is_none()
        });
        assert_eq!(
            ste.map(|f| f.len()),
            bce.map(|f| f.len()),
            "g={:?} sp={:?} k={}",
            g,
            sp,
            k
        );
    }
}

#[test]
fn bipartite_to_chain_examples() {
    // 2K2 with sides {0,2},{1,3}: optimum chain-edit stays 1 after pinning.
    let g = Graph::from_edges(4, &[(0, 1), (2, 3)]);
    let a: BTreeSet<usize> = [0, 2].into_iter().collect();
    let b: BTreeSet<usize> = [1, 3].into_iter().collect();
    let out = bipartite_chain_to_chain(&g, (&a, &b), 1);
    assert_eq!(out.graph.n(), 8);
    let sol = solve(&out).expect("still a yes-instance at k=1");
    assert_eq!(sol.len(), 1);

    // A single edge at k=0 stays a chain graph after pinning.
    let g = Graph::from_edges(2, &[(0, 1)]);
    let a: BTreeSet<usize> = [0].into_iter().collect();
    let b: BTreeSet<usize> = [1].into_iter().collect();
    let out = bipartite_chain_to_chain(&g, (&a, &b), 0);
    assert!(find_obstruction(&out.graph, Target::Chain).is_none());
}

fn random_bipartite(rng: &mut ChaCha8Rng, n: usize) -> (Graph, BTreeSet<usize>, BTreeSet<usize>) {
    let a: BTreeSet<usize> = (0..n).filter(|_| rng.gen_bool(0.5)).collect();
    let b: BTreeSet<usize> = (0..n).filter(|v| !a.contains(v)).collect();
    let mut g = Graph::new(n);
    for &u in &a {
        for &v in &b {
            if rng.gen_bool(0.5) {
                g.add_edge(u, v);
            }
        }
    }
    (g, a, b)
}

#[test]
fn bipartite_to_chain_equivalence() {
    let mut rng = ChaCha8Rng::seed_from_u64(41);
    for _ in 0..30 {
        let n = rng.gen_range(1..=6);
        let k = rng.gen_range(0..=2usize);
        let (g, a, b) = random_bipartite(&mut rng, n);
        // Bipartite chain editing: cross edits only.
        let cross: Vec<(usize, usize)> = all_pairs(n)
            .into_iter()
            .filter(|&(u, v)| a.contains(&u) != a.contains(&v))
            .collect();
        let bce = exhaustive_min_edits(&g, k, Variant::Edit, &cross, &mut |h: &Graph| {
            find_obstruction(h, Target::Chain).is_none()
        });
        let out = bipartite_chain_to_chain(&g, (&a, &b), k);
        let ce = brute_force_oracle(&out);
        assert_eq!(
            bce.is_some(),
            ce.is_some(),
            "g={:?} a={:?} k={}",
            g,
            a,
            k
        );
        if let (Some(x), Some(y)) = (bce, ce) {
            assert_eq!(x.len(), y.len(), "g={:?} a={:?} k={}", g, a, k);
        }
    }
}

#[test]
fn chain_chordal_transfer() {
    let mut rng = ChaCha8Rng::seed_from_u64(51);
    for _ in 0..30 {
        let n = rng.gen_range(1..=6);
        let k = rng.gen_range(0..=2usize);
        let (g, a, b) = random_bipartite(&mut rng, n);
        let cross: Vec<(usize, usize)> = all_pairs(n)
            .into_iter()
            .filter(|&(u, v)| a.contains(&u) != a.contains(&v))
            .collect();
        let bce = exhaustive_min_edits(&g, k, Variant::Edit, &cross, &mut |h: &Graph| {
            find_obstruction(h, Target::Chain).is_none()
        });
        let out = bipartite_chain_to_cobipartite_chordal(&g, (&a, &b), k);
        let cce = exhaustive_min_edits(&out.graph, k, Variant::Edit, &cross, &mut |h: &Graph| {
            is_chordal(h).is_ok()
        });
        assert_eq!(
            bce.map(|f| f.len()),
            cce.map(|f| f.len()),
            "g={:?} a={:?} k={}",
            g,
            a,
            k
        );
    }
}

#[test]
fn chain_graph_completes_to_chordal() {
    // A chain graph's side-completion is chordal (0-instances map to 0).
    let g = Graph::from_edges(4, &[(0, 1), (0, 3), (2, 3)]);
    let a: BTreeSet<usize> = [0, 2].into_iter().collect();
    let b: BTreeSet<usize> = [1, 3].into_iter().collect();
    assert!(find_obstruction(&g, Target::Chain).is_none());
    let out = bipartite_chain_to_cobipartite_chordal(&g, (&a, &b), 0);
    assert!(is_chordal(&out.graph).is_ok());
}

#[test]
fn cobipartite_to_chordal_structure() {
    // Sides of size 2, k=1: vertex count matches the closed form and the
    // instance decides like side-respecting chordal editing of the input.
    let mut g = Graph::from_edges(4, &[(0, 1), (2, 3)]);
    g.add_edge(0, 2); // one cross edge
    let a: BTreeSet<usize> = [0, 1].into_iter().collect();
    let b: BTreeSet<usize> = [2, 3].into_iter().collect();
    for k in [0usize, 1] {
        let out = cobipartite_to_chordal(&g, (&a, &b), k);
        let frame = k + 1;
        let expect = 4 + 2 * frame + 2 * (frame * (frame - 1) / 2) * (k + 1);
        assert_eq!(out.graph.n(), expect);
        let cross: Vec<(usize, usize)> = all_pairs(4)
            .into_iter()
            .filter(|&(u, v)| a.contains(&u) != a.contains(&v))
            .collect();
        let inner = exhaustive_min_edits(&g, k, Variant::Edit, &cross, &mut |h: &Graph| {
            is_chordal(h).is_ok()
        });
        let outer = exhaustive_min_edits(
            &out.graph,
            k,
            Variant::Edit,
            &all_pairs(out.graph.n()),
            &mut |h: &Graph| is_chordal(h).is_ok(),
        );
        assert_eq!(inner.is_some(), outer.is_some(), "k={}", k);
    }
}

#[test]
fn cobipartite_to_chordal_preserves_chordality_at_k0() {
    // Chordal cobipartite input, k=0: the output stays chordal.
    let g = Graph::from_edges(3, &[(0, 1), (1, 2)]);
    let a: BTreeSet<usize> = [0, 1].into_iter().collect();
    let b: BTreeSet<usize> = [2].into_iter().collect();
    assert!(is_chordal(&g).is_ok());
    let out = cobipartite_to_chordal(&g, (&a, &b), 0);
    assert!(is_chordal(&out.graph).is_ok());
}
