//! Canonical forms for isomorphism rejection.
//!
//! The form is the smallest graph6 string over all labelings reachable by
//! individualization-refinement: equitable colour refinement splits cells by
//! neighbor counts, the first non-singleton cell is branched on, and a
//! discrete partition gives a labeling. Refinement and the choice of target
//! cell are isomorphism-invariant, so the minimum is too. Branching on a
//! vertex that is a twin of an already explored sibling is skipped: the
//! transposition of twins is an automorphism fixing the path, so its subtree
//! yields the same codes.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::graph6::to_graph6;

pub const MAX_CANONICAL_VERTICES: usize = 32;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct CanonicalForm(String);

impl CanonicalForm {
    pub fn as_bytes(&self) -> &[u8] {
        self.0.as_bytes()
    }

    /// The canonical representative, as graph6.
    pub fn as_graph6(&self) -> &str {
        &self.0
    }
}

/// `u` and `v` have the same neighbors apart from each other.
fn twins(g: &Graph, u: usize, v: usize) -> bool {
    g.neighbors(u).without(v) == g.neighbors(v).without(u)
}

/// Splits cells until every vertex in a cell sees the same number of
/// neighbors in every cell. Split cells keep their position, pieces ordered
/// by their count vectors.
fn refine(g: &Graph, mut cells: Vec<VertexSet>) -> Vec<VertexSet> {
    loop {
        let mut next = Vec::with_capacity(g.n());
        for &cell in &cells {
            if cell.len() == 1 {
                next.push(cell);
                continue;
            }
            let mut keyed: Vec<(Vec<usize>, usize)> = cell
                .iter()
                .map(|v| {
                    let nbrs = g.neighbors(v);
                    (cells.iter().map(|&c| (nbrs & c).len()).collect(), v)
                })
                .collect();
            keyed.sort();
            let mut start = 0;
            for i in 1..=keyed.len() {
                if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                    next.push(keyed[start..i].iter().map(|(_, v)| *v).collect());
                    start = i;
                }
            }
        }
        if next.len() == cells.len() {
            return next;
        }
        cells = next;
    }
}

struct Best {
    code: String,
    perm: Vec<usize>,
}

fn search(g: &Graph, cells: Vec<VertexSet>, best: &mut Option<Best>) {
    let cells = refine(g, cells);
    let Some(target) = cells.iter().position(|c| c.len() > 1) else {
        let mut perm = vec![0; g.n()];
        for (label, cell) in cells.iter().enumerate() {
            perm[cell.first().expect("singleton")] = label;
        }
        let code = to_graph6(&g.relabel(&perm));
        if best.as_ref().is_none_or(|b| code < b.code) {
            *best = Some(Best { code, perm });
        }
        return;
    };
    let cell = cells[target];
    let mut explored: Vec<usize> = Vec::new();
    for v in cell {
        if explored.iter().any(|&u| twins(g, u, v)) {
            continue;
        }
        let mut child = Vec::with_capacity(cells.len() + 1);
        child.extend_from_slice(&cells[..target]);
        child.push(VertexSet::singleton(v));
        child.push(cell.without(v));
        child.extend_from_slice(&cells[target + 1..]);
        search(g, child, best);
        explored.push(v);
    }
}

/// Canonical form together with the labeling that produces it:
/// vertex `v` of `g` becomes `perm[v]` in the canonical graph.
pub fn canonical_labeling(g: &Graph) -> Result<(CanonicalForm, Vec<usize>)> {
    if g.n() > MAX_CANONICAL_VERTICES {
        return Err(Error::Guard {
            what: "canonical form",
            n: g.n(),
            limit: MAX_CANONICAL_VERTICES,
        });
    }
    if g.n() == 0 {
        return Ok((CanonicalForm(to_graph6(g)), Vec::new()));
    }
    // start from the degree partition, ordered by degree
    let mut by_degree: Vec<VertexSet> = vec![VertexSet::EMPTY; g.max_degree() + 1];
    for v in 0..g.n() {
        by_degree[g.degree(v)].insert(v);
    }
    let cells: Vec<VertexSet> = by_degree.into_iter().filter(|c| !c.is_empty()).collect();
    let mut best = None;
    search(g, cells, &mut best);
    let best = best.expect("search reaches at least one leaf");
    Ok((CanonicalForm(best.code), best.perm))
}

pub fn canonical_form(g: &Graph) -> Result<CanonicalForm> {
    canonical_labeling(g).map(|(form, _)| form)
}

/// `g` relabeled canonically. Labels are dropped.
pub fn canonical_graph(g: &Graph) -> Result<Graph> {
    Graph::from_graph6(canonical_form(g)?.as_graph6())
}

pub fn is_isomorphic(a: &Graph, b: &Graph) -> Result<bool> {
    if a.n() != b.n() || a.edge_count() != b.edge_count() {
        return Ok(false);
    }
    Ok(canonical_form(a)? == canonical_form(b)?)
}
