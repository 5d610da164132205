//! Hardness-instance constructors: the 3-CNF → threshold-editing gadget and
//! the chain / chordal reduction chain, used as test corpora.

use crate::graph::{toggle_edits, EditSet, Graph, Variant};
use crate::recognition::{SplitPartition, Target};
use crate::solver::{verify_solution, Instance};
use std::collections::BTreeSet;

/// CNF formula with signed 1-based literals (DIMACS convention), every clause
/// holding at most three of them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CnfFormula {
    pub num_vars: usize,
    pub clauses: Vec<Vec<i32>>,
}

impl CnfFormula {
    pub fn new(num_vars: usize, clauses: Vec<Vec<i32>>) -> Result<CnfFormula, String> {
        for (ci, clause) in clauses.iter().enumerate() {
            if clause.is_empty() {
                return Err(format!("clause {} is empty", ci));
            }
            if clause.len() > 3 {
                return Err(format!("clause {} has {} literals; at most 3 allowed", ci, clause.len()));
            }
            for &lit in clause {
                let v = lit.unsigned_abs() as usize;
                if lit == 0 || v > num_vars {
                    return Err(format!("literal {} of clause {} out of range", lit, ci));
                }
                if clause.contains(&-lit) {
                    return Err(format!("clause {} is tautological on variable {}", ci, v));
                }
            }
        }
        Ok(CnfFormula { num_vars, clauses })
    }

    /// alpha[i] is the value of variable i+1.
    pub fn satisfied_by(&self, alpha: &[bool]) -> bool {
        self.clauses.iter().all(|clause| {
            clause.iter().any(|&lit| {
                let v = lit.unsigned_abs() as usize - 1;
                alpha[v] == (lit > 0)
            })
        })
    }
}

/// The six clique vertices of one variable gadget, in gadget order.
#[derive(Debug, Clone, Copy)]
pub struct VariableGadget {
    pub a: usize,
    pub b: usize,
    pub bot: usize,
    pub top: usize,
    pub c: usize,
    pub d: usize,
}

impl VariableGadget {
    pub fn all(&self) -> [usize; 6] {
        [self.a, self.b, self.bot, self.top, self.c, self.d]
    }
}

/// Vertex roles of a constructed SAT gadget instance.
#[derive(Debug, Clone)]
pub struct GadgetLayout {
    pub formula: CnfFormula,
    pub graph: Graph,
    pub vars: Vec<VariableGadget>,
    /// One vertex per clause, in formula order.
    pub clause_verts: Vec<usize>,
    /// Per enforced clique prefix: the prefix vertex ids and the k+1
    /// independent enforcement vertices adjacent to exactly that prefix.
    pub enforcement: Vec<(Vec<usize>, Vec<usize>)>,
    pub isolated: Vec<usize>,
    pub k_phi: usize,
}

impl GadgetLayout {
    pub fn clique_vertices(&self) -> Vec<usize> {
        self.vars.iter().flat_map(|vg| vg.all()).collect()
    }
}

/// Clique neighborhood of a clause vertex: per occurring variable {b, top/bot, d},
/// per non-occurring variable {b, c, d}.
fn clause_neighbors(vars: &[VariableGadget], clause: &[i32]) -> Vec<usize> {
    let mut out = Vec::new();
    for (vi, vg) in vars.iter().enumerate() {
        let lit = clause.iter().copied().find(|l| l.unsigned_abs() as usize == vi + 1);
        out.push(vg.b);
        match lit {
            Some(l) if l > 0 => out.push(vg.top),
            Some(_) => out.push(vg.bot),
            None => out.push(vg.c),
        }
        out.push(vg.d);
    }
    out
}

/// Build the threshold-editing instance encoding satisfiability of `phi`,
/// with budget k = |clauses|·(3·|vars| − 1).
pub fn sat_to_threshold_editing(phi: &CnfFormula) -> (Instance, GadgetLayout) {
    if phi.clauses.is_empty() {
        let layout = GadgetLayout {
            formula: phi.clone(),
            graph: Graph::new(0),
            vars: Vec::new(),
            clause_verts: Vec::new(),
            enforcement: Vec::new(),
            isolated: Vec::new(),
            k_phi: 0,
        };
        let inst = Instance::new(Graph::new(0), 0, Target::Threshold, Variant::Edit);
        return (inst, layout);
    }
    let nv = phi.num_vars;
    let nc = phi.clauses.len();
    let k_phi = nc * (3 * nv - 1);
    let vars: Vec<VariableGadget> = (0..nv)
        .map(|i| VariableGadget {
            a: 6 * i,
            b: 6 * i + 1,
            bot: 6 * i + 2,
            top: 6 * i + 3,
            c: 6 * i + 4,
            d: 6 * i + 5,
        })
        .collect();
    let clause_verts: Vec<usize> = (0..nc).map(|i| 6 * nv + i).collect();
    let mut next = 6 * nv + nc;
    // Five enforced prefixes per variable: ending after a, b, {bot,top}, c, d.
    let mut enforcement = Vec::new();
    for i in 0..nv {
        for cut in [1usize, 2, 4, 5, 6] {
            let prefix: Vec<usize> = (0..6 * i + cut).collect();
            let guards: Vec<usize> = (next..next + k_phi + 1).collect();
            next += k_phi + 1;
            enforcement.push((prefix, guards));
        }
    }
    let isolated: Vec<usize> = (next..next + 4 * (k_phi + 1)).collect();
    next += 4 * (k_phi + 1);

    let mut g = Graph::new(next);
    for u in 0..6 * nv {
        for v in u + 1..6 * nv {
            g.add_edge(u, v);
        }
    }
    for (ci, &cv) in clause_verts.iter().enumerate() {
        for w in clause_neighbors(&vars, &phi.clauses[ci]) {
            g.add_edge(cv, w);
        }
        assert_eq!(g.degree(cv), 3 * nv, "clause vertex degree");
    }
    for (prefix, guards) in &enforcement {
        for &e in guards {
            for &w in prefix {
                g.add_edge(e, w);
            }
        }
    }
    let inst = Instance::new(g.clone(), k_phi, Target::Threshold, Variant::Edit);
    let layout = GadgetLayout {
        formula: phi.clone(),
        graph: g,
        vars,
        clause_verts,
        enforcement,
        isolated,
        k_phi,
    };
    (inst, layout)
}

/// Positions of the clique vertices under the ordering induced by `alpha`
/// (bot before top exactly when the variable is false).
fn clique_positions(layout: &GadgetLayout, alpha: &[bool]) -> Vec<(usize, usize)> {
    let mut order = Vec::new();
    for (vi, vg) in layout.vars.iter().enumerate() {
        order.push(vg.a);
        order.push(vg.b);
        if alpha[vi] {
            order.push(vg.top);
            order.push(vg.bot);
        } else {
            order.push(vg.bot);
            order.push(vg.top);
        }
        order.push(vg.c);
        order.push(vg.d);
    }
    order.into_iter().enumerate().map(|(pos, v)| (v, pos)).collect()
}

/// Edit set of exactly k_phi edits realizing the satisfying assignment:
/// every clause vertex gets the clique prefix ending at its lexicographically
/// smallest satisfied literal as its new neighborhood.
pub fn assignment_to_solution(layout: &GadgetLayout, alpha: &[bool]) -> Result<EditSet, String> {
    if alpha.len() != layout.formula.num_vars {
        return Err("assignment length does not match the variable count".into());
    }
    if !layout.formula.satisfied_by(alpha) {
        return Err("assignment does not satisfy the formula".into());
    }
    let pos: std::collections::BTreeMap<usize, usize> =
        clique_positions(layout, alpha).into_iter().collect();
    let mut f = EditSet::new();
    for (ci, &cv) in layout.clause_verts.iter().enumerate() {
        let clause = &layout.formula.clauses[ci];
        let sat = clause
            .iter()
            .copied()
            .filter(|&l| alpha[l.unsigned_abs() as usize - 1] == (l > 0))
            .min_by_key(|l| l.unsigned_abs())
            .expect("a satisfied clause has a satisfied literal");
        let vg = &layout.vars[sat.unsigned_abs() as usize - 1];
        let target = if sat > 0 { vg.top } else { vg.bot };
        let cutoff = pos[&target];
        for &w in &layout.clique_vertices() {
            let want = pos[&w] <= cutoff;
            if layout.graph.has_edge(cv, w) != want {
                f.insert(cv, w);
            }
        }
    }
    Ok(f)
}

/// Read a satisfying assignment off a verified solution: in the edited graph
/// the clique orders by degree, and a variable is false exactly when its bot
/// vertex outranks its top vertex.  Degree ties are broken by trying both
/// readings.
pub fn extract_assignment(layout: &GadgetLayout, f: &EditSet) -> Result<Vec<bool>, String> {
    let inst = Instance::new(
        layout.graph.clone(),
        layout.k_phi,
        Target::Threshold,
        Variant::Edit,
    );
    verify_solution(&inst, f).map_err(|e| format!("not a valid solution: {}", e))?;
    let h = toggle_edits(&layout.graph, f);
    let mut base = Vec::new();
    let mut ties = Vec::new();
    for (vi, vg) in layout.vars.iter().enumerate() {
        let (db, dt) = (h.degree(vg.bot), h.degree(vg.top));
        base.push(db <= dt);
        if db == dt {
            ties.push(vi);
        }
    }
    if layout.formula.satisfied_by(&base) {
        return Ok(base);
    }
    // Tied variables have interchangeable bot/top orderings; search the 2^t
    // readings (t is tiny in practice) for a satisfying one.
    assert!(ties.len() <= 20, "too many tied variables to disambiguate");
    for mask in 1u32..(1 << ties.len()) {
        let mut alpha = base.clone();
        for (i, &vi) in ties.iter().enumerate() {
            if mask & (1 << i) != 0 {
                alpha[vi] = !alpha[vi];
            }
        }
        if layout.formula.satisfied_by(&alpha) {
            return Ok(alpha);
        }
    }
    Err("no reading of the clique order satisfies the formula".into())
}

/// Forget the clique edges of a split graph: threshold editing respecting the
/// partition becomes chain editing on the bipartite remainder, same budget.
pub fn split_te_to_bipartite_chain(g: &Graph, part: &SplitPartition, k: usize) -> Instance {
    assert!(part.realized(g), "partition is not realized");
    let mut h = Graph::new(g.n());
    for (u, v) in g.edges() {
        if !(part.c.contains(&u) && part.c.contains(&v)) {
            h.add_edge(u, v);
        }
    }
    Instance::new(h, k, Target::Chain, Variant::Edit)
}

fn assert_no_intra_edges(g: &Graph, side: &BTreeSet<usize>, name: &str) {
    let vs: Vec<usize> = side.iter().copied().collect();
    for i in 0..vs.len() {
        for j in i + 1..vs.len() {
            assert!(!g.has_edge(vs[i], vs[j]), "side {} is not independent", name);
        }
    }
}

/// Pin the bipartition with k+1 universal vertices per side: any ≤k-edit
/// chain solution of the output keeps A and B on their sides.
pub fn bipartite_chain_to_chain(
    g: &Graph,
    bipart: (&BTreeSet<usize>, &BTreeSet<usize>),
    k: usize,
) -> Instance {
    let (a, b) = bipart;
    assert_no_intra_edges(g, a, "A");
    assert_no_intra_edges(g, b, "B");
    let n = g.n();
    let mut h = Graph::new(n + 2 * (k + 1));
    for (u, v) in g.edges() {
        h.add_edge(u, v);
    }
    let new_a: Vec<usize> = (n..n + k + 1).collect();
    let new_b: Vec<usize> = (n + k + 1..n + 2 * (k + 1)).collect();
    for &ai in &new_a {
        for &w in b.iter().chain(new_b.iter()) {
            h.add_edge(ai, w);
        }
    }
    for &bi in &new_b {
        for &w in a.iter() {
            h.add_edge(bi, w);
        }
    }
    Instance::new(h, k, Target::Chain, Variant::Edit)
}

/// Complete both sides of a bipartite graph: cross-edit sets turn it into a
/// chain graph exactly when they turn the completion into a chordal graph.
pub fn bipartite_chain_to_cobipartite_chordal(
    g: &Graph,
    bipart: (&BTreeSet<usize>, &BTreeSet<usize>),
    k: usize,
) -> Instance {
    let (a, b) = bipart;
    assert_no_intra_edges(g, a, "A");
    assert_no_intra_edges(g, b, "B");
    let mut h = g.clone();
    for side in [a, b] {
        let vs: Vec<usize> = side.iter().copied().collect();
        for i in 0..vs.len() {
            for j in i + 1..vs.len() {
                h.add_edge(vs[i], vs[j]);
            }
        }
    }
    Instance::new(h, k, Target::Chordal, Variant::Edit)
}

/// From side-respecting chordal editing to unrestricted chordal editing:
/// add a (k+1)-clique frame universal to the other side and pin every frame
/// edge with k+1 pendant simplicial vertices.
pub fn cobipartite_to_chordal(
    g: &Graph,
    bipart: (&BTreeSet<usize>, &BTreeSet<usize>),
    k: usize,
) -> Instance {
    let (a, b) = bipart;
    assert!(g.is_clique(a), "side A is not a clique");
    assert!(g.is_clique(b), "side B is not a clique");
    let n = g.n();
    let frame = k + 1;
    let pendant_blocks = frame * (frame - 1) / 2; // per side
    let total = n + 2 * frame + 2 * pendant_blocks * (k + 1);
    let mut h = Graph::new(total);
    for (u, v) in g.edges() {
        h.add_edge(u, v);
    }
    let new_a: Vec<usize> = (n..n + frame).collect();
    let new_b: Vec<usize> = (n + frame..n + 2 * frame).collect();
    // Frame cliques.
    for side in [&new_a, &new_b] {
        for i in 0..side.len() {
            for j in i + 1..side.len() {
                h.add_edge(side[i], side[j]);
            }
        }
    }
    // New a-vertices are universal to B and the new b-vertices.
    for &ai in &new_a {
        for &w in b.iter().chain(new_b.iter()) {
            h.add_edge(ai, w);
        }
    }
    // Pendants pinning every frame edge.
    let mut next = n + 2 * frame;
    for side in [&new_a, &new_b] {
        for i in 0..side.len() {
            for j in i + 1..side.len() {
                for _ in 0..k + 1 {
                    h.add_edge(next, side[i]);
                    h.add_edge(next, side[j]);
                    next += 1;
                }
            }
        }
    }
    assert_eq!(next, total);
    Instance::new(h, k, Target::Chordal, Variant::Edit)
}
