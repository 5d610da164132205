//! Command line front end: recognize, kernelize, solve, oracle, verify,
//! reduce, gen and bench subcommands over the text formats of [`crate::fileio`].

use crate::fileio::{
    gen_instance, parse_cnf, parse_graph, parse_solution, parse_target, parse_variant,
    serialize_graph, serialize_layout, serialize_solution, SolutionFile,
};
use crate::graph::{Graph, Variant};
use crate::kernel::kernelize;
use crate::recognition::{find_obstruction, is_chain, is_chordal, is_threshold, two_coloring, Target};
use crate::reductions::{
    bipartite_chain_to_chain, bipartite_chain_to_cobipartite_chordal, cobipartite_to_chordal,
    sat_to_threshold_editing, split_te_to_bipartite_chain,
};
use crate::recognition::compute_split_partition;
use crate::solver::{brute_force_oracle, solve, verify_solution, Instance};
use clap::{Parser, Subcommand};
use std::collections::BTreeSet;
use std::fs;
use std::sync::mpsc;
use std::time::{Duration, Instant};

pub const EXIT_YES: i32 = 0;
pub const EXIT_NO: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_TIMEOUT: i32 = 3;

#[derive(Parser)]
#[command(name = "tce", about = "Exact edge modification to threshold and chain graphs", disable_help_flag = false)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Class membership with a witness (partition or obstruction).
    Recognize {
        #[arg(long)]
        target: String,
        file: String,
    },
    /// Reduce to an equivalent instance of quadratic size; prints a graph file.
    Kernelize {
        #[arg(long)]
        target: String,
        #[arg(short)]
        k: usize,
        file: String,
        #[arg(short, long)]
        output: Option<String>,
    },
    /// Exact solve; prints the optimum and a solution file, or NO.
    Solve {
        #[arg(long)]
        target: String,
        #[arg(long)]
        variant: String,
        #[arg(short)]
        k: usize,
        #[arg(long, value_name = "SECONDS")]
        time_limit: Option<u64>,
        file: String,
        #[arg(short, long)]
        output: Option<String>,
    },
    /// Brute-force reference solve (small instances only).
    Oracle {
        #[arg(long)]
        target: String,
        #[arg(long)]
        variant: String,
        #[arg(short)]
        k: usize,
        file: String,
        #[arg(short, long)]
        output: Option<String>,
    },
    /// Check a solution file against a graph and budget.
    Verify {
        #[arg(long)]
        target: String,
        #[arg(long)]
        variant: String,
        #[arg(short)]
        k: usize,
        #[arg(long)]
        graph: String,
        #[arg(long)]
        solution: String,
    },
    /// Run a named instance transformation.
    Reduce {
        /// sat2te | ste2bce | bce2ce | bce2cce | cce2chordal
        name: String,
        file: String,
        #[arg(short, default_value_t = 0)]
        k: usize,
        #[arg(short, long)]
        output: Option<String>,
        /// Sidecar file for sat2te gadget roles.
        #[arg(long)]
        layout: Option<String>,
    },
    /// Seeded planted instance generator.
    Gen {
        #[arg(long)]
        target: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(short)]
        n: usize,
        #[arg(short)]
        r: usize,
        #[arg(short, long)]
        output: Option<String>,
    },
    /// Planted-recovery timing table.
    Bench {
        #[arg(long, default_value_t = 40)]
        n: usize,
        #[arg(long, value_delimiter = ',', default_values_t = vec![4usize, 8, 12, 16])]
        r: Vec<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_name = "SECONDS")]
        time_limit: Option<u64>,
    },
}

/// Run the CLI on explicit arguments (argv[0] is the program name) and
/// return the exit code: 0 yes/success, 1 no-instance, 2 usage or parse
/// error, 3 time limit hit.
pub fn run_cli<I, S>(argv: I) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            // clap help/version are successes, anything else a usage error
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_YES };
            let _ = e.print();
            return code;
        }
    };
    match dispatch(cli.command) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {}", msg);
            EXIT_USAGE
        }
    }
}

fn read_file(path: &str) -> Result<String, String> {
    fs::read_to_string(path).map_err(|e| format!("{}: {}", path, e))
}

fn write_out(path: &Option<String>, content: &str) -> Result<(), String> {
    match path {
        Some(p) => fs::write(p, content).map_err(|e| format!("{}: {}", p, e)),
        None => {
            print!("{}", content);
            Ok(())
        }
    }
}

fn load_graph(path: &str) -> Result<Graph, String> {
    parse_graph(&read_file(path)?).map_err(|e| format!("{}: {}", path, e))
}

fn need_target(s: &str) -> Result<Target, String> {
    parse_target(s).ok_or_else(|| format!("unknown target {:?} (threshold|chain|chordal)", s))
}

fn need_variant(s: &str) -> Result<Variant, String> {
    parse_variant(s).ok_or_else(|| format!("unknown variant {:?} (edit|complete|delete)", s))
}

fn dispatch(cmd: Command) -> Result<i32, String> {
    match cmd {
        Command::Recognize { target, file } => {
            let target = need_target(&target)?;
            let g = load_graph(&file)?;
            match target {
                Target::Threshold => match is_threshold(&g) {
                    Ok(part) => {
                        println!("threshold: yes ({} levels)", part.levels());
                        Ok(EXIT_YES)
                    }
                    Err(obs) => {
                        println!("threshold: no ({:?} on {:?})", obs.kind, obs.verts);
                        Ok(EXIT_NO)
                    }
                },
                Target::Chain => match is_chain(&g) {
                    Ok(part) => {
                        println!("chain: yes ({} levels)", part.levels());
                        Ok(EXIT_YES)
                    }
                    Err(obs) => {
                        println!("chain: no ({:?} on {:?})", obs.kind, obs.verts);
                        Ok(EXIT_NO)
                    }
                },
                Target::Chordal => match is_chordal(&g) {
                    Ok(order) => {
                        println!("chordal: yes (elimination order {:?})", order);
                        Ok(EXIT_YES)
                    }
                    Err(hole) => {
                        println!("chordal: no (hole {:?})", hole);
                        Ok(EXIT_NO)
                    }
                },
            }
        }
        Command::Kernelize { target, k, file, output } => {
            let target = need_target(&target)?;
            if target == Target::Chordal {
                return Err("kernelize supports threshold and chain".into());
            }
            let g = load_graph(&file)?;
            let inst = Instance::new(g, k, target, Variant::Edit);
            let (kinst, _) = kernelize(&inst);
            let mut out = format!("# k {}\n", kinst.k);
            out.push_str(&serialize_graph(&kinst.graph));
            write_out(&output, &out)?;
            Ok(EXIT_YES)
        }
        Command::Solve { target, variant, k, time_limit, file, output } => {
            let target = need_target(&target)?;
            let variant = need_variant(&variant)?;
            if target == Target::Chordal {
                return Err("solve supports threshold and chain".into());
            }
            let g = load_graph(&file)?;
            let inst = Instance::new(g.clone(), k, target, variant);
            let sol = match run_with_limit(time_limit, move || solve(&inst)) {
                Some(sol) => sol,
                None => {
                    println!("TIMEOUT after {}s (no answer within budget)", time_limit.unwrap());
                    return Ok(EXIT_TIMEOUT);
                }
            };
            emit_solution(&g, sol, variant, target, &output)
        }
        Command::Oracle { target, variant, k, file, output } => {
            let target = need_target(&target)?;
            let variant = need_variant(&variant)?;
            let g = load_graph(&file)?;
            let inst = Instance::new(g.clone(), k, target, variant);
            let sol = brute_force_oracle(&inst);
            emit_solution(&g, sol, variant, target, &output)
        }
        Command::Verify { target, variant, k, graph, solution } => {
            let target = need_target(&target)?;
            let variant = need_variant(&variant)?;
            let g = load_graph(&graph)?;
            let sol = parse_solution(&read_file(&solution)?)
                .map_err(|e| format!("{}: {}", solution, e))?;
            if sol.target != target || sol.variant != variant {
                println!("invalid: solution file is for {}/{}", sol.variant.name(), match sol.target { Target::Threshold => "threshold", Target::Chain => "chain", Target::Chordal => "chordal" });
                return Ok(EXIT_NO);
            }
            if !sol.yes {
                println!("solution file reports NO; nothing to verify");
                return Ok(EXIT_NO);
            }
            if let Err(e) = sol.consistent_with(&g) {
                println!("invalid: {}", e);
                return Ok(EXIT_NO);
            }
            let inst = Instance::new(g, k, target, variant);
            match verify_solution(&inst, &sol.edit_set()) {
                Ok(()) => {
                    println!("valid: {} edits within budget {}", sol.k_used(), k);
                    Ok(EXIT_YES)
                }
                Err(e) => {
                    println!("invalid: {}", e);
                    Ok(EXIT_NO)
                }
            }
        }
        Command::Reduce { name, file, k, output, layout } => match name.as_str() {
            "sat2te" => {
                let phi = parse_cnf(&read_file(&file)?).map_err(|e| format!("{}: {}", file, e))?;
                let (inst, lay) = sat_to_threshold_editing(&phi);
                let mut out = format!("# k {}\n", inst.k);
                out.push_str(&serialize_graph(&inst.graph));
                write_out(&output, &out)?;
                if let Some(lp) = layout {
                    fs::write(&lp, serialize_layout(&lay)).map_err(|e| format!("{}: {}", lp, e))?;
                }
                println!("k = {}", inst.k);
                Ok(EXIT_YES)
            }
            "ste2bce" => {
                let g = load_graph(&file)?;
                let sp = compute_split_partition(&g).ok_or("input graph is not split")?;
                let inst = split_te_to_bipartite_chain(&g, &sp, k);
                write_out(&output, &serialize_graph(&inst.graph))?;
                Ok(EXIT_YES)
            }
            "bce2ce" | "bce2cce" => {
                let g = load_graph(&file)?;
                let colors = two_coloring(&g).ok_or("input graph is not bipartite")?;
                let a: BTreeSet<usize> = (0..g.n()).filter(|&v| colors[v] == 0).collect();
                let b: BTreeSet<usize> = (0..g.n()).filter(|&v| colors[v] == 1).collect();
                let inst = if name == "bce2ce" {
                    bipartite_chain_to_chain(&g, (&a, &b), k)
                } else {
                    bipartite_chain_to_cobipartite_chordal(&g, (&a, &b), k)
                };
                write_out(&output, &serialize_graph(&inst.graph))?;
                Ok(EXIT_YES)
            }
            "cce2chordal" => {
                let g = load_graph(&file)?;
                let colors = two_coloring(&g.complement()).ok_or("input graph is not cobipartite")?;
                let a: BTreeSet<usize> = (0..g.n()).filter(|&v| colors[v] == 0).collect();
                let b: BTreeSet<usize> = (0..g.n()).filter(|&v| colors[v] == 1).collect();
                let inst = cobipartite_to_chordal(&g, (&a, &b), k);
                write_out(&output, &serialize_graph(&inst.graph))?;
                Ok(EXIT_YES)
            }
            other => Err(format!("unknown reduction {:?} (sat2te|ste2bce|bce2ce|bce2cce|cce2chordal)", other)),
        },
        Command::Gen { target, seed, n, r, output } => {
            let target = need_target(&target)?;
            if target == Target::Chordal {
                return Err("gen supports threshold and chain".into());
            }
            let (g, r) = gen_instance(seed, n, r, target);
            let mut out = format!("# planted distance {}\n", r);
            out.push_str(&serialize_graph(&g));
            write_out(&output, &out)?;
            Ok(EXIT_YES)
        }
        Command::Bench { n, r, seed, time_limit } => {
            println!("{:>4} {:>4} {:>10} {:>9}", "n", "r", "optimum", "seconds");
            let mut timed_out = false;
            for (i, &ri) in r.iter().enumerate() {
                let (g, _) = gen_instance(seed.wrapping_add(i as u64), n, ri, Target::Threshold);
                let inst = Instance::new(g, ri, Target::Threshold, Variant::Edit);
                let start = Instant::now();
                let sol = run_with_limit(time_limit, move || solve(&inst));
                let secs = start.elapsed().as_secs_f64();
                match sol {
                    Some(Some(f)) => println!("{:>4} {:>4} {:>10} {:>9.2}", n, ri, f.len(), secs),
                    Some(None) => println!("{:>4} {:>4} {:>10} {:>9.2}", n, ri, "NO", secs),
                    None => {
                        println!("{:>4} {:>4} {:>10} {:>9.2}", n, ri, "TIMEOUT", secs);
                        timed_out = true;
                    }
                }
            }
            Ok(if timed_out { EXIT_TIMEOUT } else { EXIT_YES })
        }
    }
}

/// Run a job with an optional wall-clock limit; None means the limit was hit
/// (the worker thread is abandoned — callers exit the process).
fn run_with_limit<T, F>(limit: Option<u64>, job: F) -> Option<T>
where
    T: Send + 'static,
    F: FnOnce() -> T + Send + 'static,
{
    match limit {
        None => Some(job()),
        Some(secs) => {
            let (tx, rx) = mpsc::channel();
            std::thread::spawn(move || {
                let _ = tx.send(job());
            });
            rx.recv_timeout(Duration::from_secs(secs)).ok()
        }
    }
}

fn emit_solution(
    g: &Graph,
    sol: Option<crate::graph::EditSet>,
    variant: Variant,
    target: Target,
    output: &Option<String>,
) -> Result<i32, String> {
    match sol {
        Some(f) => {
            println!("OPTIMUM {}", f.len());
            let file = SolutionFile::from_edits(g, &f, variant, target);
            write_out(output, &serialize_solution(&file))?;
            Ok(EXIT_YES)
        }
        None => {
            println!("NO");
            write_out(output, &serialize_solution(&SolutionFile::no_instance(variant, target)))?;
            Ok(EXIT_NO)
        }
    }
}

/// Obstruction-free check used by recognize-style helpers in examples.
pub fn in_class(g: &Graph, target: Target) -> bool {
    match target {
        Target::Chordal => is_chordal(g).is_ok(),
        t => find_obstruction(g, t).is_none(),
    }
}
