//! Isomorph-free generation of small graphs.
//!
//! Graphs are grown one vertex at a time: every isomorphism class on `m + 1`
//! vertices arises from some class on `m` vertices by adding a vertex, so
//! extending one representative per class and keeping one canonical graph
//! per [`CanonicalForm`] is complete at every level. Properties that survive
//! vertex deletion (bounded degree, connectivity for a suitable deletion
//! order, degree feasibility for a regular target) prune intermediate levels.

use std::collections::{HashSet, VecDeque};

use itertools::Itertools;

use crate::canon::{canonical_labeling, CanonicalForm};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

pub const MAX_BOUNDED_DEGREE_VERTICES: usize = 9;

/// Largest `n` accepted by [`connected_regular_graphs`] for a given `k`.
pub fn regular_guard(k: usize) -> usize {
    match k {
        0..=2 => 32,
        3 => 12,
        4 => 11,
        _ => 10,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct DegreeFilter {
    pub isolate_free: bool,
    pub connected_only: bool,
}

type Accept = Box<dyn Fn(&Graph) -> bool + Send>;

/// Can `g` be an induced subgraph of a `k`-regular graph with `remaining`
/// further vertices?
fn regular_feasible(g: &Graph, k: usize, remaining: usize) -> bool {
    let mut deficit_sum = 0;
    let mut deficient = 0;
    for v in 0..g.n() {
        let d = g.degree(v);
        if d > k || k - d > remaining {
            return false;
        }
        deficit_sum += k - d;
        deficient += (d < k) as usize;
    }
    if remaining == 0 {
        return deficit_sum == 0;
    }
    let outside = remaining * k;
    if deficit_sum > outside || (outside - deficit_sum) % 2 == 1 {
        return false;
    }
    // edges among the remaining vertices
    if (outside - deficit_sum) / 2 > remaining * (remaining - 1) / 2 {
        return false;
    }
    // each remaining vertex needs at least k - (remaining - 1) old neighbors
    let need = (k + 1).saturating_sub(remaining);
    deficient >= need && deficit_sum >= remaining * need
}

struct Growth {
    target: usize,
    max_degree: usize,
    connected: bool,
    regular: Option<usize>,
}

impl Growth {
    /// New canonical graphs obtained by adding one vertex to `g`.
    fn extend(&self, g: &Graph, seen: &mut HashSet<CanonicalForm>, out: &mut Vec<Graph>) {
        let open: Vec<usize> = (0..g.n())
            .filter(|&v| g.degree(v) < self.max_degree)
            .collect();
        let remaining = self.target - g.n() - 1;
        let min_size = usize::from(self.connected && g.n() > 0);
        for size in min_size..=self.max_degree.min(open.len()) {
            for nbrs in open.iter().copied().combinations(size) {
                let mut h = g.clone();
                h.push_vertex(nbrs.into_iter().collect::<VertexSet>())
                    .expect("target within capacity");
                if let Some(k) = self.regular {
                    if !regular_feasible(&h, k, remaining) {
                        continue;
                    }
                }
                let (form, perm) = canonical_labeling(&h).expect("target within guard");
                if seen.insert(form) {
                    out.push(h.relabel(&perm));
                }
            }
        }
    }

    /// Representatives on `target - 1` vertices, or `None` for `target == 0`.
    fn penultimate(&self) -> Vec<Graph> {
        let mut level = vec![Graph::empty(0).expect("empty graph")];
        for _ in 0..self.target - 1 {
            let mut seen = HashSet::new();
            let mut next = Vec::new();
            for g in &level {
                self.extend(g, &mut seen, &mut next);
            }
            level = next;
        }
        level
    }
}

/// Streams one canonical representative per isomorphism class.
pub struct GraphStream {
    growth: Growth,
    parents: std::vec::IntoIter<Graph>,
    seen: HashSet<CanonicalForm>,
    pending: VecDeque<Graph>,
    accept: Accept,
}

impl GraphStream {
    fn new(growth: Growth, accept: Accept) -> Self {
        let (parents, pending) = if growth.target == 0 {
            let empty = Graph::empty(0).expect("empty graph");
            let pending = if accept(&empty) { vec![empty] } else { vec![] };
            (Vec::new(), pending.into())
        } else {
            (growth.penultimate(), VecDeque::new())
        };
        GraphStream {
            growth,
            parents: parents.into_iter(),
            seen: HashSet::new(),
            pending,
            accept,
        }
    }
}

impl Iterator for GraphStream {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        loop {
            if let Some(g) = self.pending.pop_front() {
                return Some(g);
            }
            let parent = self.parents.next()?;
            let mut fresh = Vec::new();
            self.growth.extend(&parent, &mut self.seen, &mut fresh);
            self.pending
                .extend(fresh.into_iter().filter(|g| (self.accept)(g)));
        }
    }
}

/// Connected `k`-regular graphs on `n` vertices, one per isomorphism class.
pub fn connected_regular_graphs(k: usize, n: usize) -> Result<GraphStream> {
    if k >= n || n * k % 2 == 1 {
        return Err(Error::InvalidParameters(format!(
            "no {k}-regular graph on {n} vertices"
        )));
    }
    let limit = regular_guard(k);
    if n > limit {
        return Err(Error::Guard {
            what: "regular graph enumeration",
            n,
            limit,
        });
    }
    let growth = Growth {
        target: n,
        max_degree: k,
        connected: true,
        regular: Some(k),
    };
    Ok(GraphStream::new(
        growth,
        Box::new(move |g: &Graph| g.is_regular(k) && g.is_connected()),
    ))
}

/// Graphs on `n` vertices with maximum degree at most `max_degree`,
/// optionally restricted to isolate-free and/or connected graphs.
pub fn bounded_degree_graphs(
    n: usize,
    max_degree: usize,
    filter: DegreeFilter,
) -> Result<GraphStream> {
    if n > MAX_BOUNDED_DEGREE_VERTICES {
        return Err(Error::Guard {
            what: "bounded-degree enumeration",
            n,
            limit: MAX_BOUNDED_DEGREE_VERTICES,
        });
    }
    let growth = Growth {
        target: n,
        max_degree,
        connected: filter.connected_only,
        regular: None,
    };
    Ok(GraphStream::new(
        growth,
        Box::new(move |g: &Graph| {
            (!filter.isolate_free || g.isolated_count() == 0)
                && (!filter.connected_only || g.is_connected())
        }),
    ))
}
