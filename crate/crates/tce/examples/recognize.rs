//! Recognize threshold and chain graphs and show the witness either way.

use tce::graph::Graph;
use tce::recognition::{is_chain, is_threshold};

fn main() {
    // threshold: built by adding isolated/universal vertices
    let mut g = Graph::new(5);
    for (u, v) in [(0, 4), (1, 4), (2, 4), (3, 4), (2, 3), (3, 1)] {
        g.add_edge(u, v);
    }
    match is_threshold(&g) {
        Ok(part) => {
            println!("threshold: yes, {} levels", part.levels());
            println!("  clique side      {:?}", part.clique_side());
            println!("  independent side {:?}", part.independent_side());
        }
        Err(obs) => println!("threshold: no, induced {} on {:?}", obs.kind.name(), obs.verts),
    }

    let p4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]);
    match is_threshold(&p4) {
        Ok(_) => println!("P4: threshold (unexpected)"),
        Err(obs) => println!("P4: not threshold, witness {} on {:?}", obs.kind.name(), obs.verts),
    }
    match is_chain(&p4) {
        Ok(part) => println!("P4: chain with {} levels", part.levels()),
        Err(obs) => println!("P4: not chain, witness {} on {:?}", obs.kind.name(), obs.verts),
    }
}
