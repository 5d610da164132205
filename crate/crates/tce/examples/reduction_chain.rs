//! Walk an instance through the hardness pipeline:
//! split editing -> bipartite chain -> chain -> cobipartite chordal -> chordal.

use tce::recognition::{compute_split_partition, two_coloring};
use tce::graph::Graph;
use tce::reductions::{
    bipartite_chain_to_chain, bipartite_chain_to_cobipartite_chordal, cobipartite_to_chordal,
    split_te_to_bipartite_chain,
};
use std::collections::BTreeSet;

fn main() {
    // P4 is a split graph: C = {1,2}, I = {0,3}
    let g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]);
    let sp = compute_split_partition(&g).unwrap();
    let k = 1;
    println!("split instance: {} vertices, k = {k}", g.n());

    let bce = split_te_to_bipartite_chain(&g, &sp, k);
    println!("bipartite chain editing: {} vertices, k = {}", bce.graph.n(), bce.k);

    let a: BTreeSet<usize> = sp.c.clone();
    let b: BTreeSet<usize> = sp.i.clone();
    let ce = bipartite_chain_to_chain(&bce.graph, (&a, &b), bce.k);
    println!("chain editing: {} vertices, k = {}", ce.graph.n(), ce.k);

    let cce = bipartite_chain_to_cobipartite_chordal(&bce.graph, (&a, &b), bce.k);
    println!("cobipartite chordal editing: {} vertices, k = {}", cce.graph.n(), cce.k);

    // recover the two clique sides from the complement's bipartition
    let colors = two_coloring(&cce.graph.complement()).unwrap();
    let n = cce.graph.n();
    let half: BTreeSet<usize> = (0..n).filter(|&v| colors[v] == 0).collect();
    let other: BTreeSet<usize> = (0..n).filter(|&v| colors[v] == 1).collect();
    let chordal = cobipartite_to_chordal(&cce.graph, (&half, &other), cce.k);
    println!("chordal editing: {} vertices, k = {}", chordal.graph.n(), chordal.k);
}
