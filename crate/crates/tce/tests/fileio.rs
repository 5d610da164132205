use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tce::fileio::*;
use tce::graph::{EditSet, Graph, Variant};
use tce::recognition::{is_chain, is_threshold, Target};
use tce::reductions::sat_to_threshold_editing;

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

#[test]
fn graph_round_trip() {
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    for _ in 0..100 {
        let n = rng.gen_range(0..=12);
        let g = random_graph(&mut rng, n, 0.5);
        let text = serialize_graph(&g);
        assert!(text.starts_with("# tce graph v1\n"));
        assert_eq!(parse_graph(&text).unwrap(), g);
    }
}

#[test]
fn graph_parse_errors_carry_line_numbers() {
    // serialized files put the comment on line 1 and the header on line 2
    let e = parse_graph("# c\n3 1\n1 1\n").unwrap_err();
    assert_eq!(e.line, 3);
    assert!(e.message.contains("self-loop"));

    let e = parse_graph("2 1\n0 5\n").unwrap_err();
    assert_eq!(e.line, 2);
    assert!(e.message.contains("out of range"));

    let e = parse_graph("3 2\n0 1\n0 1\n").unwrap_err();
    assert_eq!(e.line, 3);
    assert!(e.message.contains("duplicate"));

    let e = parse_graph("3\n").unwrap_err();
    assert!(e.message.contains("header"));

    // edge count mismatch is reported against the header
    let e = parse_graph("3 2\n0 1\n").unwrap_err();
    assert_eq!(e.line, 1);

    assert!(parse_graph("").is_err());
}

#[test]
fn solution_round_trip() {
    let mut rng = ChaCha8Rng::seed_from_u64(32);
    for _ in 0..100 {
        let n = rng.gen_range(2..=10);
        let g = random_graph(&mut rng, n, 0.5);
        let mut f = EditSet::new();
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(0.2) {
                    f.insert(u, v);
                }
            }
        }
        let sol = SolutionFile::from_edits(&g, &f, Variant::Edit, Target::Threshold);
        sol.consistent_with(&g).unwrap();
        let text = serialize_solution(&sol);
        let back = parse_solution(&text).unwrap();
        assert_eq!(back, sol);
        assert_eq!(back.k_used(), f.len());
        assert_eq!(back.edit_set(), {
            let mut e = EditSet::with_variant(Variant::Edit);
            for (u, v) in f.iter() {
                e.insert(u, v);
            }
            e
        });
    }
}

#[test]
fn solution_parse_errors() {
    let e = parse_solution("1 edit threshold yes\n+ 0 0\n").unwrap_err();
    assert_eq!(e.line, 2);

    let e = parse_solution("2 edit threshold yes\n+ 0 1\n").unwrap_err();
    assert!(e.message.contains("announces 2"));

    let e = parse_solution("1 prune threshold yes\n+ 0 1\n").unwrap_err();
    assert!(e.message.contains("unknown variant"));

    let e = parse_solution("1 edit threshold yes\n* 0 1\n").unwrap_err();
    assert_eq!(e.line, 2);
}

#[test]
fn solution_consistency_check() {
    let g = Graph::from_edges(3, &[(0, 1)]);
    let good = SolutionFile {
        variant: Variant::Edit,
        target: Target::Threshold,
        yes: true,
        adds: vec![(0, 2)],
        dels: vec![(0, 1)],
    };
    good.consistent_with(&g).unwrap();
    let bad = SolutionFile { adds: vec![(0, 1)], dels: vec![], ..good.clone() };
    assert!(bad.consistent_with(&g).is_err());
    let bad = SolutionFile { adds: vec![], dels: vec![(0, 2)], ..good };
    assert!(bad.consistent_with(&g).is_err());
}

#[test]
fn cnf_round_trip() {
    let mut rng = ChaCha8Rng::seed_from_u64(33);
    for _ in 0..100 {
        let nv = rng.gen_range(1..=6);
        let nc = rng.gen_range(1..=8);
        let mut clauses = Vec::new();
        for _ in 0..nc {
            let w = rng.gen_range(1..=3.min(nv));
            let mut clause = Vec::new();
            let mut used = std::collections::BTreeSet::new();
            while clause.len() < w {
                let var = rng.gen_range(1..=nv as i32);
                if used.insert(var) {
                    clause.push(if rng.gen_bool(0.5) { var } else { -var });
                }
            }
            clauses.push(clause);
        }
        let phi = tce::reductions::CnfFormula::new(nv, clauses).unwrap();
        let text = serialize_cnf(&phi);
        let back = parse_cnf(&text).unwrap();
        assert_eq!(back.num_vars, phi.num_vars);
        assert_eq!(back.clauses, phi.clauses);
    }
}

#[test]
fn cnf_parse_errors() {
    let e = parse_cnf("p cnf 4 1\n1 2 3 4 0\n").unwrap_err();
    assert_eq!(e.line, 2);
    assert!(e.message.contains("at most 3"));

    let e = parse_cnf("p cnf 2 1\n3 0\n").unwrap_err();
    assert!(e.message.contains("out of range"));

    let e = parse_cnf("1 0\n").unwrap_err();
    assert!(e.message.contains("header"));

    let e = parse_cnf("p cnf 2 1\n1 2\n").unwrap_err();
    assert!(e.message.contains("0-terminated"));

    let e = parse_cnf("p cnf 2 2\n1 0\n").unwrap_err();
    assert!(e.message.contains("announces 2"));
}

#[test]
fn layout_sidecar_lists_gadget_roles() {
    let phi = tce::reductions::CnfFormula::new(2, vec![vec![1, -2]]).unwrap();
    let (_, layout) = sat_to_threshold_editing(&phi);
    let text = serialize_layout(&layout);
    assert!(text.contains(&format!("k_phi {}", layout.k_phi)));
    assert!(text.contains("var 0 a=0 b=1 bot=2 top=3 c=4 d=5"));
    assert!(text.contains("var 1 a=6"));
    assert!(text.contains("clause 0 vertex="));
    assert!(text.contains("enforce 0 prefix="));
    assert!(text.contains("isolated "));
}

#[test]
fn gen_instance_is_deterministic() {
    for target in [Target::Threshold, Target::Chain] {
        let (g1, r1) = gen_instance(7, 20, 5, target);
        let (g2, r2) = gen_instance(7, 20, 5, target);
        assert_eq!(g1, g2);
        assert_eq!(r1, r2);
        assert_eq!(r1, 5);
        let (g3, _) = gen_instance(8, 20, 5, target);
        assert_ne!(g1, g3);
    }
}

#[test]
fn gen_instance_unperturbed_is_in_class() {
    for seed in 0..20 {
        let (g, r) = gen_instance(seed, 15, 0, Target::Threshold);
        assert_eq!(r, 0);
        assert!(is_threshold(&g).is_ok());
        let (g, _) = gen_instance(seed, 15, 0, Target::Chain);
        assert!(is_chain(&g).is_ok());
    }
}

#[test]
fn gen_instance_flip_distance_upper_bounds_optimum() {
    // r flips away from a member of the class, so the optimum is ≤ r
    use tce::solver::{brute_force_oracle, Instance};
    for seed in 0..10 {
        let (g, r) = gen_instance(seed, 8, 2, Target::Threshold);
        let inst = Instance::new(g, r, Target::Threshold, Variant::Edit);
        assert!(brute_force_oracle(&inst).is_some());
    }
}

#[test]
fn target_and_variant_names_round_trip() {
    for t in [Target::Threshold, Target::Chain, Target::Chordal] {
        assert_eq!(parse_target(t.name()), Some(t));
    }
    for v in [Variant::Edit, Variant::Complete, Variant::Delete] {
        assert_eq!(parse_variant(v.name()), Some(v));
    }
    assert_eq!(parse_target("split"), None);
    assert_eq!(parse_variant("flip"), None);
}
