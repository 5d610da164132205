//! Turn a 3-CNF formula into an equivalent threshold-editing instance and
//! decode an optimal edit set back into a satisfying assignment.

use tce::graph::toggle_edits;
use tce::recognition::is_threshold;
use tce::reductions::{assignment_to_solution, extract_assignment, sat_to_threshold_editing, CnfFormula};

fn main() {
    // (x1 ∨ ¬x2) ∧ (x2 ∨ x3) ∧ (¬x1 ∨ ¬x3)
    let phi = CnfFormula::new(3, vec![vec![1, -2], vec![2, 3], vec![-1, -3]]).unwrap();
    let (inst, layout) = sat_to_threshold_editing(&phi);
    println!("gadget: {} vertices, budget k = {}", inst.graph.n(), inst.k);

    let alpha = vec![false, false, true];
    assert!(phi.satisfied_by(&alpha));
    let f = assignment_to_solution(&layout, &alpha).unwrap();
    println!("assignment {:?} -> exactly {} edits", alpha, f.len());
    assert_eq!(f.len(), inst.k);
    assert!(is_threshold(&toggle_edits(&inst.graph, &f)).is_ok());

    let back = extract_assignment(&layout, &f).unwrap();
    println!("decoded assignment {:?}", back);
    assert!(phi.satisfied_by(&back));
}
