//! Solve a small editing instance exactly and verify the answer.

use tce::graph::{Graph, Variant};
use tce::recognition::Target;
use tce::solver::{solve, verify_solution, Instance};

fn main() {
    // C5 needs three edits to become threshold
    let g = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]);
    for k in 0..=3 {
        let inst = Instance::new(g.clone(), k, Target::Threshold, Variant::Edit);
        match solve(&inst) {
            Some(f) => {
                verify_solution(&inst, &f).unwrap();
                let edits: Vec<_> = f.iter().collect();
                println!("k={k}: optimum {} via {:?}", f.len(), edits);
            }
            None => println!("k={k}: no solution within budget"),
        }
    }

    // completion only: the budget buys additions exclusively
    let inst = Instance::new(g, 3, Target::Threshold, Variant::Complete);
    let f = solve(&inst).expect("C5 completes within 3 additions");
    println!("completion optimum {}", f.len());
}
