//! Generate seeded planted instances and time their exact recovery.

use std::time::Instant;

use tce::fileio::gen_instance;
use tce::graph::Variant;
use tce::recognition::Target;
use tce::solver::{solve, Instance};

fn main() {
    println!("{:>4} {:>4} {:>8} {:>9}", "n", "r", "optimum", "seconds");
    for r in [2, 4, 6] {
        let (g, _) = gen_instance(7, 25, r, Target::Threshold);
        let inst = Instance::new(g, r, Target::Threshold, Variant::Edit);
        let start = Instant::now();
        let opt = solve(&inst).expect("planted distance bounds the optimum").len();
        println!("{:>4} {:>4} {:>8} {:>9.2}", 25, r, opt, start.elapsed().as_secs_f64());
        assert!(opt <= r);
    }
}
