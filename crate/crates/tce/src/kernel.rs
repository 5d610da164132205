//! Quadratic kernels for threshold and chain targets: the twin rule, the
//! greedy obstruction modulator, level classification and the
//! irrelevant-vertex rule.

use crate::graph::{twin_classes, Graph};
use crate::recognition::{
    is_chain, is_threshold, obstruction_on, Obstruction, Target, ThresholdPartition,
};
use crate::solver::{combinations, Instance};
use std::collections::{BTreeMap, BTreeSet};

/// Kernel size bound for the threshold family.
pub fn threshold_kernel_bound(k: usize) -> usize {
    336 * k * k + 388 * k + 92
}

/// Kernel size bound for the chain family.
///
/// Re-instantiating the threshold counting with modulator size 5k, the
/// doubled realized-neighborhood bound 2|X|+2 ≤ 10k+2, and the widened
/// safety margin m = 2k+3 (a C3 can consist of three mutual true twins, so
/// every twin/central argument needs one extra untouched witness):
/// important levels ≤ 4(10k+2) = 40k+8; important vertices
/// ≤ (40k+8)m + 4m(10k+2) = (2k+3)(80k+16) = 160k²+272k+48;
/// outlying-not-important ≤ (2m)² = (4k+6)² = 16k²+48k+36; strips ≤ 40k+9,
/// each below 8m−3 = 16k+21 vertices; isolated vertices set aside
/// ≤ (5k+1)m = 10k²+17k+3.  Total:
/// 5k + 176k²+320k+84 + (40k+9)(16k+20) + 10k²+17k+3 = 826k²+1286k+267.
pub fn chain_kernel_bound(k: usize) -> usize {
    826 * k * k + 1286 * k + 267
}

/// Vertex set X hitting every obstruction "internally": any obstruction can
/// be destroyed by edits among its X-vertices alone.
#[derive(Debug, Clone)]
pub struct Modulator {
    pub x: BTreeSet<usize>,
    pub family: Target,
    /// Obstructions whose vertex sets were consumed while building X.
    pub packing: Vec<Obstruction>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LevelLabel {
    Important,
    Outlying,
    Regular,
}

/// A maximal run of regular levels.
#[derive(Debug, Clone)]
pub struct Strip {
    pub start: usize,
    pub end: usize,
    /// Vertices over all levels of the run.
    pub size: usize,
    /// Central-vertex candidates, ascending by id.
    pub central: Vec<usize>,
}

#[derive(Debug, Clone)]
pub struct LevelClassification {
    pub labels: Vec<LevelLabel>,
    pub strips: Vec<Strip>,
    /// Prefix index f: levels ≤ f are outlying via the clique side.
    pub f: usize,
    /// Suffix index r: levels ≥ r are outlying via the independent side.
    pub r: usize,
}

/// Counting headroom per family: enough class members survive any ≤k-edit
/// solution to swap an untouched twin into every obstruction.  Chain needs
/// one more than threshold because a C3 can be three mutual true twins.
pub fn margin(k: usize, family: Target) -> usize {
    match family {
        Target::Chain => 2 * k + 3,
        _ => 2 * k + 2,
    }
}

/// Remove one vertex from any twin class larger than the margin until none remains.
pub fn apply_twin_rule(g: &Graph, k: usize, family: Target) -> Graph {
    let mut g = g.clone();
    while let Some(v) = twin_candidate(&g, k, family) {
        g = g.remove_vertex(v);
    }
    g
}

/// Lowest member of the first twin class exceeding the margin.
fn twin_candidate(g: &Graph, k: usize, family: Target) -> Option<usize> {
    let cap = margin(k, family);
    let tc = twin_classes(g);
    for members in &tc.members {
        if members.len() > cap {
            return Some(members[0]);
        }
    }
    None
}

/// Greedy modulator: walk every obstruction in deterministic order (subset
/// size, then lexicographic) and absorb those not destroyable inside X.
/// Err carries the obstruction that pushed |X| past the 4k / 5k bound.
pub fn build_modulator(g: &Graph, k: usize, family: Target) -> Result<Modulator, Obstruction> {
    let bound = match family {
        Target::Threshold => 4 * k,
        Target::Chain => 5 * k,
        Target::Chordal => panic!("modulators exist for threshold and chain"),
    };
    let sizes: &[usize] = match family {
        Target::Threshold => &[4],
        _ => &[3, 4, 5],
    };
    let mut x = BTreeSet::new();
    let mut packing = Vec::new();
    for &size in sizes {
        for subset in combinations(g.n(), size) {
            let obs = match obstruction_on(g, &subset, family) {
                Some(o) => o,
                None => continue,
            };
            let xw: Vec<usize> = subset.iter().copied().filter(|v| x.contains(v)).collect();
            if destroyable_within(g, &subset, &xw, family) {
                continue;
            }
            for &v in &subset {
                x.insert(v);
            }
            if x.len() > bound {
                return Err(obs);
            }
            packing.push(obs);
        }
    }
    Ok(Modulator { x, family, packing })
}

/// Is there an edit set inside [xw]² after which the vertex set no longer
/// induces an obstruction?  All ≤ 2^10 subsets of the internal pairs tried.
fn destroyable_within(g: &Graph, verts: &[usize], xw: &[usize], family: Target) -> bool {
    let vset: BTreeSet<usize> = verts.iter().copied().collect();
    let (small, map) = g.induced_subgraph(&vset);
    let back: BTreeMap<usize, usize> = map.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let mut pairs = Vec::new();
    for i in 0..xw.len() {
        for j in i + 1..xw.len() {
            pairs.push((back[&xw[i]], back[&xw[j]]));
        }
    }
    let local: Vec<usize> = (0..verts.len()).collect();
    for mask in 0u32..(1 << pairs.len()) {
        let mut h = small.clone();
        for (pi, &(a, b)) in pairs.iter().enumerate() {
            if mask & (1 << pi) != 0 {
                if h.has_edge(a, b) {
                    h.remove_edge(a, b);
                } else {
                    h.add_edge(a, b);
                }
            }
        }
        if obstruction_on(&h, &local, family).is_none() {
            return true;
        }
    }
    false
}

/// Decomposition of G−X with fragments translated back to the ids of g.
/// For the chain family, vertices isolated in G−X are left out (the caller
/// reintroduces them by simply not removing them from g).
pub fn decompose_minus_x(
    g: &Graph,
    x: &BTreeSet<usize>,
    family: Target,
) -> Option<ThresholdPartition> {
    let mut rest: BTreeSet<usize> = (0..g.n()).filter(|v| !x.contains(v)).collect();
    if family == Target::Chain {
        // set isolated vertices of G−X aside
        let iso: Vec<usize> = rest
            .iter()
            .copied()
            .filter(|&v| g.neighbors(v).iter().all(|w| x.contains(w)))
            .collect();
        for v in iso {
            rest.remove(&v);
        }
    }
    let (sub, map) = g.induced_subgraph(&rest);
    let part = match family {
        Target::Threshold => is_threshold(&sub).ok()?,
        Target::Chain => is_chain(&sub).ok()?,
        Target::Chordal => panic!("decomposition serves threshold and chain"),
    };
    let lift = |frags: &[Vec<usize>]| -> Vec<Vec<usize>> {
        frags.iter().map(|f| f.iter().map(|&v| map[v]).collect()).collect()
    };
    Some(ThresholdPartition {
        clique: lift(&part.clique),
        independent: lift(&part.independent),
        transfer: None,
    })
}

/// Label every level important / outlying / regular, cut out the strips and
/// collect their central-vertex candidates.
pub fn classify_decomposition(
    g: &Graph,
    modulator: &Modulator,
    part: &ThresholdPartition,
    k: usize,
) -> LevelClassification {
    let t = part.levels();
    let nx = |v: usize| -> BTreeSet<usize> {
        g.neighbors(v).iter().copied().filter(|w| modulator.x.contains(w)).collect()
    };
    // Important: levels where some realized Y ⊆ X has its first or last
    // fragment, separately per side.
    let mut important = vec![false; t];
    for side in [&part.clique, &part.independent] {
        let mut extremes: BTreeMap<BTreeSet<usize>, (usize, usize)> = BTreeMap::new();
        for (i, frag) in side.iter().enumerate() {
            for &v in frag {
                let y = nx(v);
                let e = extremes.entry(y).or_insert((i, i));
                e.0 = e.0.min(i);
                e.1 = e.1.max(i);
            }
        }
        for (_, (lo, hi)) in extremes {
            important[lo] = true;
            important[hi] = true;
        }
    }
    // Outlying: the prefix accumulating `need` clique vertices and the suffix
    // accumulating `need` independent vertices.
    let need = margin(k, modulator.family);
    let mut f = t.saturating_sub(1);
    let mut cum = 0;
    for i in 0..t {
        cum += part.clique[i].len();
        if cum >= need {
            f = i;
            break;
        }
    }
    let mut r = 0;
    let mut cum = 0;
    for i in (0..t).rev() {
        cum += part.independent[i].len();
        if cum >= need {
            r = i;
            break;
        }
    }
    let mut labels = Vec::with_capacity(t);
    for i in 0..t {
        if important[i] {
            labels.push(LevelLabel::Important);
        } else if i <= f || i >= r {
            labels.push(LevelLabel::Outlying);
        } else {
            labels.push(LevelLabel::Regular);
        }
    }
    // Strips: maximal regular runs, with central candidates needing `need`
    // same-side strip vertices strictly before and after their level.
    let mut strips = Vec::new();
    let mut i = 0;
    while i < t {
        if labels[i] != LevelLabel::Regular {
            i += 1;
            continue;
        }
        let start = i;
        while i < t && labels[i] == LevelLabel::Regular {
            i += 1;
        }
        let end = i - 1;
        let size: usize = (start..=end)
            .map(|j| part.clique[j].len() + part.independent[j].len())
            .sum();
        let mut central = Vec::new();
        for (side_frags, _) in [(&part.clique, 0), (&part.independent, 1)] {
            for lvl in start..=end {
                let before: usize = (start..lvl).map(|j| side_frags[j].len()).sum();
                let after: usize = (lvl + 1..=end).map(|j| side_frags[j].len()).sum();
                if before >= need && after >= need {
                    central.extend(side_frags[lvl].iter().copied());
                }
            }
        }
        central.sort_unstable();
        strips.push(Strip { start, end, size, central });
    }
    LevelClassification { labels, strips, f, r }
}

/// One irrelevant-vertex step: Ok(Some(v)) names a central vertex of a large
/// strip, Ok(None) means the rule cannot fire, Err propagates the modulator's
/// no-instance certificate.
fn irrelevant_step(g: &Graph, k: usize, family: Target) -> Result<Option<usize>, Obstruction> {
    let modulator = build_modulator(g, k, family)?;
    let part = decompose_minus_x(g, &modulator.x, family)
        .expect("a modulator leaves the rest obstruction-free");
    let classes = classify_decomposition(g, &modulator, &part, k);
    let large = 8 * margin(k, family) - 3;
    for strip in &classes.strips {
        if strip.size >= large {
            if let Some(&v) = strip.central.first() {
                return Ok(Some(v));
            }
        }
    }
    Ok(None)
}

/// Public wrapper of the irrelevant-vertex rule returning the reduced graph.
pub fn apply_irrelevant_vertex_rule(
    g: &Graph,
    k: usize,
    family: Target,
) -> Result<Option<Graph>, Obstruction> {
    Ok(irrelevant_step(g, k, family)?.map(|v| g.remove_vertex(v)))
}

/// Twin rule to exhaustion, tracking vertex ids: map[new] = original.
pub fn twin_reduce(inst: &Instance) -> (Instance, Vec<usize>) {
    let mut g = inst.graph.clone();
    let mut map: Vec<usize> = (0..g.n()).collect();
    while let Some(v) = twin_candidate(&g, inst.k, inst.target) {
        g = g.remove_vertex(v);
        map.remove(v);
    }
    (Instance { graph: g, ..inst.clone() }, map)
}

/// Full kernelization: twin rule and irrelevant-vertex rule exhaustively,
/// everything re-derived from scratch after each removal.  A no-instance is
/// reported as the stored obstruction with budget 0; otherwise the result is
/// an induced subgraph with the parameter unchanged.  map[new] = original id.
pub fn kernelize(inst: &Instance) -> (Instance, Vec<usize>) {
    assert!(
        inst.target != Target::Chordal,
        "kernels exist for the threshold and chain targets"
    );
    let mut g = inst.graph.clone();
    let mut map: Vec<usize> = (0..g.n()).collect();
    loop {
        while let Some(v) = twin_candidate(&g, inst.k, inst.target) {
            g = g.remove_vertex(v);
            map.remove(v);
        }
        match irrelevant_step(&g, inst.k, inst.target) {
            Err(obs) => {
                // keep only the stored obstruction, with budget 0
                let vset: BTreeSet<usize> = obs.verts.iter().copied().collect();
                let (h, sub_map) = g.induced_subgraph(&vset);
                let map: Vec<usize> = sub_map.iter().map(|&v| map[v]).collect();
                return (Instance { graph: h, k: 0, ..inst.clone() }, map);
            }
            Ok(Some(v)) => {
                g = g.remove_vertex(v);
                map.remove(v);
            }
            Ok(None) => break,
        }
    }
    (Instance { graph: g, ..inst.clone() }, map)
}
