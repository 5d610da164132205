//! Shrink an instance with the twin and irrelevant-vertex rules.

use tce::graph::{Graph, Variant};
use tce::kernel::{kernelize, threshold_kernel_bound};
use tce::recognition::Target;
use tce::solver::Instance;

fn main() {
    // a big clique, a big independent set, and one P4 worth of trouble
    let n = 40;
    let mut g = Graph::new(n);
    for u in 0..15 {
        for v in u + 1..15 {
            g.add_edge(u, v);
        }
    }
    for (u, v) in [(30, 31), (31, 32), (32, 33)] {
        g.add_edge(u, v);
    }
    let k = 1;
    let inst = Instance::new(g, k, Target::Threshold, Variant::Edit);
    let (kernel, map) = kernelize(&inst);
    println!("input:  {} vertices, budget {}", n, k);
    println!("kernel: {} vertices, budget {} (bound {})", kernel.graph.n(), kernel.k, threshold_kernel_bound(k));
    println!("kept original vertices {:?}", map);
}
