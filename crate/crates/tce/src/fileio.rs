//! Text formats (graphs, solutions, DIMACS CNF, layout sidecar) and the
//! seeded planted-instance generator.

use crate::graph::{EditSet, Graph, Variant};
use crate::recognition::Target;
use crate::reductions::{CnfFormula, GadgetLayout};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeSet;
use std::fmt::Write as _;

/// Parse error carrying the 1-based line number.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

impl std::fmt::Display for ParseError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "line {}: {}", self.line, self.message)
    }
}

impl std::error::Error for ParseError {}

fn err<T>(line: usize, message: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError { line, message: message.into() })
}

/// Content lines with their numbers; blanks and '#' comments skipped.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

/// Graph format: "n m" header, then m lines "u v" with u < v.
pub fn parse_graph(text: &str) -> Result<Graph, ParseError> {
    let mut lines = content_lines(text);
    let (hline, header) = match lines.next() {
        Some(x) => x,
        None => return err(1, "missing header line"),
    };
    let fields: Vec<&str> = header.split_whitespace().collect();
    if fields.len() != 2 {
        return err(hline, "header must be \"n m\"");
    }
    let n: usize = fields[0].parse().map_err(|_| ParseError {
        line: hline,
        message: "bad vertex count".into(),
    })?;
    let m: usize = fields[1].parse().map_err(|_| ParseError {
        line: hline,
        message: "bad edge count".into(),
    })?;
    let mut g = Graph::new(n);
    let mut count = 0;
    for (ln, line) in lines {
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.len() != 2 {
            return err(ln, "edge line must be \"u v\"");
        }
        let u: usize = fields[0].parse().map_err(|_| ParseError {
            line: ln,
            message: "bad vertex id".into(),
        })?;
        let v: usize = fields[1].parse().map_err(|_| ParseError {
            line: ln,
            message: "bad vertex id".into(),
        })?;
        if u == v {
            return err(ln, format!("self-loop at vertex {}", u));
        }
        if u >= n || v >= n {
            return err(ln, format!("vertex id out of range (n = {})", n));
        }
        if g.has_edge(u, v) {
            return err(ln, format!("duplicate edge {} {}", u, v));
        }
        g.add_edge(u, v);
        count += 1;
    }
    if count != m {
        return err(1, format!("header announces {} edges, found {}", m, count));
    }
    Ok(g)
}

pub fn serialize_graph(g: &Graph) -> String {
    let mut out = String::from("# tce graph v1\n");
    let _ = writeln!(out, "{} {}", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{} {}", u, v);
    }
    out
}

/// Solution file: header "k_used variant target status"; per edit one line
/// "+ u v" (addition) or "- u v" (deletion).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolutionFile {
    pub variant: Variant,
    pub target: Target,
    /// true = yes-instance with the listed edits, false = reported NO.
    pub yes: bool,
    pub adds: Vec<(usize, usize)>,
    pub dels: Vec<(usize, usize)>,
}

impl SolutionFile {
    pub fn k_used(&self) -> usize {
        self.adds.len() + self.dels.len()
    }

    /// Edit set over the pairs, with the variant attached.
    pub fn edit_set(&self) -> EditSet {
        let mut f = EditSet::with_variant(self.variant);
        for &(u, v) in self.adds.iter().chain(self.dels.iter()) {
            f.insert(u, v);
        }
        f
    }

    /// Build from an edit set against the graph it applies to.
    pub fn from_edits(g: &Graph, f: &EditSet, variant: Variant, target: Target) -> SolutionFile {
        let mut adds = Vec::new();
        let mut dels = Vec::new();
        for (u, v) in f.iter() {
            if g.has_edge(u, v) {
                dels.push((u, v));
            } else {
                adds.push((u, v));
            }
        }
        SolutionFile { variant, target, yes: true, adds, dels }
    }

    pub fn no_instance(variant: Variant, target: Target) -> SolutionFile {
        SolutionFile { variant, target, yes: false, adds: Vec::new(), dels: Vec::new() }
    }

    /// Signs must agree with the graph: '+' lines are non-edges, '−' lines edges.
    pub fn consistent_with(&self, g: &Graph) -> Result<(), String> {
        for &(u, v) in &self.adds {
            if u >= g.n() || v >= g.n() {
                return Err(format!("pair ({},{}) out of range", u, v));
            }
            if g.has_edge(u, v) {
                return Err(format!("({},{}) marked as addition but is an edge", u, v));
            }
        }
        for &(u, v) in &self.dels {
            if u >= g.n() || v >= g.n() {
                return Err(format!("pair ({},{}) out of range", u, v));
            }
            if !g.has_edge(u, v) {
                return Err(format!("({},{}) marked as deletion but is a non-edge", u, v));
            }
        }
        Ok(())
    }
}

fn target_name(t: Target) -> &'static str {
    match t {
        Target::Threshold => "threshold",
        Target::Chain => "chain",
        Target::Chordal => "chordal",
    }
}

pub fn parse_target(s: &str) -> Option<Target> {
    match s {
        "threshold" => Some(Target::Threshold),
        "chain" => Some(Target::Chain),
        "chordal" => Some(Target::Chordal),
        _ => None,
    }
}

pub fn parse_variant(s: &str) -> Option<Variant> {
    match s {
        "edit" => Some(Variant::Edit),
        "complete" => Some(Variant::Complete),
        "delete" => Some(Variant::Delete),
        _ => None,
    }
}

pub fn serialize_solution(sol: &SolutionFile) -> String {
    let mut out = String::from("# tce solution v1\n");
    let _ = writeln!(
        out,
        "{} {} {} {}",
        sol.k_used(),
        sol.variant.name(),
        target_name(sol.target),
        if sol.yes { "yes" } else { "no" }
    );
    for &(u, v) in &sol.adds {
        let _ = writeln!(out, "+ {} {}", u, v);
    }
    for &(u, v) in &sol.dels {
        let _ = writeln!(out, "- {} {}", u, v);
    }
    out
}

pub fn parse_solution(text: &str) -> Result<SolutionFile, ParseError> {
    let mut lines = content_lines(text);
    let (hline, header) = match lines.next() {
        Some(x) => x,
        None => return err(1, "missing header line"),
    };
    let fields: Vec<&str> = header.split_whitespace().collect();
    if fields.len() != 4 {
        return err(hline, "header must be \"k_used variant target status\"");
    }
    let k_used: usize = fields[0].parse().map_err(|_| ParseError {
        line: hline,
        message: "bad k_used".into(),
    })?;
    let variant = parse_variant(fields[1])
        .ok_or_else(|| ParseError { line: hline, message: format!("unknown variant {}", fields[1]) })?;
    let target = parse_target(fields[2])
        .ok_or_else(|| ParseError { line: hline, message: format!("unknown target {}", fields[2]) })?;
    let yes = match fields[3] {
        "yes" => true,
        "no" => false,
        other => return err(hline, format!("unknown status {}", other)),
    };
    let mut adds = Vec::new();
    let mut dels = Vec::new();
    for (ln, line) in lines {
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.len() != 3 || (fields[0] != "+" && fields[0] != "-") {
            return err(ln, "edit line must be \"+ u v\" or \"- u v\"");
        }
        let u: usize = fields[1].parse().map_err(|_| ParseError {
            line: ln,
            message: "bad vertex id".into(),
        })?;
        let v: usize = fields[2].parse().map_err(|_| ParseError {
            line: ln,
            message: "bad vertex id".into(),
        })?;
        if u == v {
            return err(ln, "self-pair");
        }
        if fields[0] == "+" {
            adds.push((u, v));
        } else {
            dels.push((u, v));
        }
    }
    let sol = SolutionFile { variant, target, yes, adds, dels };
    if sol.k_used() != k_used {
        return err(1, format!("header announces {} edits, found {}", k_used, sol.k_used()));
    }
    Ok(sol)
}

/// DIMACS CNF.  Clauses wider than three literals are rejected.
pub fn parse_cnf(text: &str) -> Result<CnfFormula, ParseError> {
    let mut num_vars = None;
    let mut num_clauses = 0usize;
    let mut clauses: Vec<Vec<i32>> = Vec::new();
    let mut current: Vec<i32> = Vec::new();
    for (ln, raw) in text.lines().enumerate() {
        let ln = ln + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        if line.starts_with('p') {
            let fields: Vec<&str> = line.split_whitespace().collect();
            if fields.len() != 4 || fields[1] != "cnf" {
                return err(ln, "header must be \"p cnf <vars> <clauses>\"");
            }
            num_vars = Some(fields[2].parse::<usize>().map_err(|_| ParseError {
                line: ln,
                message: "bad variable count".into(),
            })?);
            num_clauses = fields[3].parse().map_err(|_| ParseError {
                line: ln,
                message: "bad clause count".into(),
            })?;
            continue;
        }
        let nv = match num_vars {
            Some(nv) => nv,
            None => return err(ln, "clause before the \"p cnf\" header"),
        };
        for tok in line.split_whitespace() {
            let lit: i32 = tok.parse().map_err(|_| ParseError {
                line: ln,
                message: format!("bad literal {}", tok),
            })?;
            if lit == 0 {
                if current.is_empty() {
                    return err(ln, "empty clause");
                }
                if current.len() > 3 {
                    return err(ln, format!("clause has {} literals; at most 3 allowed", current.len()));
                }
                clauses.push(std::mem::take(&mut current));
            } else {
                if lit.unsigned_abs() as usize > nv {
                    return err(ln, format!("literal {} out of range", lit));
                }
                current.push(lit);
            }
        }
    }
    let num_vars = match num_vars {
        Some(nv) => nv,
        None => return err(1, "missing \"p cnf\" header"),
    };
    if !current.is_empty() {
        return err(1, "last clause is not 0-terminated");
    }
    if clauses.len() != num_clauses {
        return err(1, format!("header announces {} clauses, found {}", num_clauses, clauses.len()));
    }
    CnfFormula::new(num_vars, clauses).map_err(|message| ParseError { line: 1, message })
}

pub fn serialize_cnf(phi: &CnfFormula) -> String {
    let mut out = String::from("c tce cnf v1\n");
    let _ = writeln!(out, "p cnf {} {}", phi.num_vars, phi.clauses.len());
    for clause in &phi.clauses {
        for lit in clause {
            let _ = write!(out, "{} ", lit);
        }
        let _ = writeln!(out, "0");
    }
    out
}

/// Key-value sidecar mapping gadget roles to vertex ids.
pub fn serialize_layout(layout: &GadgetLayout) -> String {
    let mut out = String::from("# tce layout v1\n");
    let _ = writeln!(out, "k_phi {}", layout.k_phi);
    for (i, vg) in layout.vars.iter().enumerate() {
        let _ = writeln!(
            out,
            "var {} a={} b={} bot={} top={} c={} d={}",
            i, vg.a, vg.b, vg.bot, vg.top, vg.c, vg.d
        );
    }
    for (i, &cv) in layout.clause_verts.iter().enumerate() {
        let _ = writeln!(out, "clause {} vertex={}", i, cv);
    }
    for (i, (prefix, guards)) in layout.enforcement.iter().enumerate() {
        let join = |xs: &[usize]| xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
        let _ = writeln!(out, "enforce {} prefix={} guards={}", i, join(prefix), join(guards));
    }
    if !layout.isolated.is_empty() {
        let first = layout.isolated[0];
        let last = *layout.isolated.last().unwrap();
        let _ = writeln!(out, "isolated {}..{}", first, last);
    }
    out
}

/// Seeded planted instance: a random creation-sequence member of the target
/// class with r distinct random pair flips.  Byte-deterministic per seed.
pub fn gen_instance(seed: u64, n: usize, r: usize, target: Target) -> (Graph, usize) {
    assert!(r <= n * n.saturating_sub(1) / 2, "more flips than pairs");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = Graph::new(n);
    match target {
        Target::Threshold => {
            // Each vertex enters universal or isolated.
            for v in 1..n {
                if rng.gen_bool(0.5) {
                    for u in 0..v {
                        g.add_edge(u, v);
                    }
                }
            }
        }
        Target::Chain => {
            // Each vertex picks a side and enters universal-to-the-other-side
            // or isolated; later universal vertices keep neighborhoods nested.
            let mut side = vec![false; n];
            for v in 0..n {
                side[v] = rng.gen_bool(0.5);
                if v > 0 && rng.gen_bool(0.5) {
                    for u in 0..v {
                        if side[u] != side[v] {
                            g.add_edge(u, v);
                        }
                    }
                }
            }
        }
        Target::Chordal => panic!("generation serves the threshold and chain targets"),
    }
    let mut flipped: BTreeSet<(usize, usize)> = BTreeSet::new();
    while flipped.len() < r {
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        if u == v {
            continue;
        }
        flipped.insert((u.min(v), u.max(v)));
    }
    for &(u, v) in &flipped {
        if g.has_edge(u, v) {
            g.remove_edge(u, v);
        } else {
            g.add_edge(u, v);
        }
    }
    (g, r)
}
