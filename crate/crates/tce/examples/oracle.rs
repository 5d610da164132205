//! Cross-check the subexponential solver against the brute-force oracle.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tce::graph::{Graph, Variant};
use tce::recognition::Target;
use tce::solver::{brute_force_oracle, solve, Instance};

fn main() {
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    let mut agreements = 0;
    for trial in 0..30 {
        let n = rng.gen_range(3..=8);
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(0.5) {
                    g.add_edge(u, v);
                }
            }
        }
        let k = rng.gen_range(0..=2);
        let inst = Instance::new(g, k, Target::Chain, Variant::Edit);
        let want = brute_force_oracle(&inst).map(|f| f.len());
        let got = solve(&inst).map(|f| f.len());
        assert_eq!(want, got, "trial {trial} disagreed");
        agreements += 1;
        println!("trial {trial:2}: n={n} k={k} optimum {want:?}");
    }
    println!("{agreements}/30 agreed");
}
