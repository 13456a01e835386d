//! Exact domination and independent domination.
//!
//! Both solvers are branch-and-bound over the lowest-index undominated
//! vertex `v`: some member of `N[v]` must be chosen. Sibling branches are made
//! disjoint by excluding earlier candidates from later branches, which also
//! lets [`enumerate_minimum_ids`] list each optimum exactly once.

use std::time::{Duration, Instant};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Guard for [`enumerate_minimum_ids`].
pub const MAX_ENUMERATION_VERTICES: usize = 32;

#[derive(Debug, Clone, Serialize)]
pub struct SolveResult {
    pub value: usize,
    pub witness: VertexSet,
    pub nodes_explored: u64,
    #[serde(skip)]
    pub elapsed: Duration,
}

pub fn is_independent(g: &Graph, s: VertexSet) -> bool {
    s.iter().all(|v| !g.neighbors(v).intersects(s))
}

pub fn is_dominating(g: &Graph, s: VertexSet) -> bool {
    g.closed_set_neighborhood(s) & g.vertices() == g.vertices()
}

/// Independent and dominating, i.e. a maximal independent set.
pub fn is_independent_dominating(g: &Graph, s: VertexSet) -> bool {
    is_independent(g, s) && is_dominating(g, s)
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Mode {
    Dominating,
    IndependentDominating,
}

/// What the search does with a complete set.
enum Goal {
    /// Look for anything strictly smaller than the incumbent.
    Improve,
    /// Collect every set of exactly this size.
    CollectAll(usize),
}

struct Search {
    closed: Vec<VertexSet>,
    all: VertexSet,
    mode: Mode,
    goal: Goal,
    best: usize,
    best_set: VertexSet,
    found: Vec<VertexSet>,
    nodes: u64,
}

impl Search {
    fn new(g: &Graph, mode: Mode, goal: Goal) -> Self {
        Search {
            closed: (0..g.n()).map(|v| g.closed_neighborhood(v)).collect(),
            all: g.vertices(),
            mode,
            goal,
            best: usize::MAX,
            best_set: VertexSet::EMPTY,
            found: Vec::new(),
            nodes: 0,
        }
    }

    fn limit(&self) -> usize {
        match self.goal {
            Goal::Improve => self.best,
            // sets of size target are wanted, so allow reaching target
            Goal::CollectAll(target) => target + 1,
        }
    }

    /// Vertices that may still be added.
    fn allowed(&self, chosen: VertexSet, dominated: VertexSet, excluded: VertexSet) -> VertexSet {
        match self.mode {
            Mode::Dominating => self.all - chosen - excluded,
            Mode::IndependentDominating => self.all - dominated - excluded,
        }
    }

    fn run(&mut self, chosen: VertexSet, dominated: VertexSet, excluded: VertexSet) {
        self.nodes += 1;
        let undominated = self.all - dominated;
        if undominated.is_empty() {
            match self.goal {
                Goal::Improve => {
                    if chosen.len() < self.best {
                        self.best = chosen.len();
                        self.best_set = chosen;
                    }
                }
                Goal::CollectAll(target) => {
                    if chosen.len() == target {
                        self.found.push(chosen);
                    }
                }
            }
            return;
        }

        let allowed = self.allowed(chosen, dominated, excluded);
        let mut max_gain = 0;
        for u in allowed {
            max_gain = max_gain.max((self.closed[u] & undominated).len());
        }
        if max_gain == 0 {
            return;
        }
        let lower = undominated.len().div_ceil(max_gain);
        if chosen.len() + lower >= self.limit() {
            return;
        }
        // an undominated vertex nobody allowed can reach is a dead end
        for x in undominated {
            if !self.closed[x].intersects(allowed) {
                return;
            }
        }

        let v = undominated.first().expect("nonempty");
        let mut candidates: Vec<usize> = (self.closed[v] & allowed).to_vec();
        candidates.sort_by_key(|&u| (std::cmp::Reverse((self.closed[u] & undominated).len()), u));

        let mut excluded = excluded;
        for u in candidates {
            self.run(chosen.with(u), dominated | self.closed[u], excluded);
            excluded.insert(u);
        }
    }
}

fn greedy_dominating(g: &Graph) -> VertexSet {
    let all = g.vertices();
    let mut chosen = VertexSet::EMPTY;
    let mut dominated = VertexSet::EMPTY;
    while dominated != all {
        let undominated = all - dominated;
        let u = (0..g.n())
            .max_by_key(|&u| {
                (
                    (g.closed_neighborhood(u) & undominated).len(),
                    std::cmp::Reverse(u),
                )
            })
            .expect("nonempty graph");
        chosen.insert(u);
        dominated |= g.closed_neighborhood(u);
    }
    chosen
}

fn greedy_independent_dominating(g: &Graph) -> VertexSet {
    let mut chosen = VertexSet::EMPTY;
    let mut blocked = VertexSet::EMPTY;
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.sort_by_key(|&v| (g.degree(v), v));
    for v in order {
        if !blocked.contains(v) {
            chosen.insert(v);
            blocked |= g.closed_neighborhood(v);
        }
    }
    chosen
}

fn solve(g: &Graph, mode: Mode) -> SolveResult {
    let start = Instant::now();
    let incumbent = match mode {
        Mode::Dominating => greedy_dominating(g),
        Mode::IndependentDominating => greedy_independent_dominating(g),
    };
    let mut search = Search::new(g, mode, Goal::Improve);
    search.best = incumbent.len();
    search.best_set = incumbent;
    search.run(VertexSet::EMPTY, VertexSet::EMPTY, VertexSet::EMPTY);
    SolveResult {
        value: search.best,
        witness: search.best_set,
        nodes_explored: search.nodes,
        elapsed: start.elapsed(),
    }
}

/// `γ(G)` with a minimum dominating set as witness.
pub fn exact_domination_number(g: &Graph) -> SolveResult {
    solve(g, Mode::Dominating)
}

/// `i(G)` with a minimum independent dominating set as witness.
pub fn exact_independent_domination_number(g: &Graph) -> SolveResult {
    solve(g, Mode::IndependentDominating)
}

/// Every minimum independent dominating set, in [`VertexSet`] order.
pub fn enumerate_minimum_ids(g: &Graph) -> Result<Vec<VertexSet>> {
    if g.n() > MAX_ENUMERATION_VERTICES {
        return Err(Error::Guard {
            what: "minimum IDS enumeration",
            n: g.n(),
            limit: MAX_ENUMERATION_VERTICES,
        });
    }
    let target = exact_independent_domination_number(g).value;
    let mut search = Search::new(g, Mode::IndependentDominating, Goal::CollectAll(target));
    search.run(VertexSet::EMPTY, VertexSet::EMPTY, VertexSet::EMPTY);
    let mut found = search.found;
    found.sort();
    Ok(found)
}

/// Extends `seed` greedily by ascending index to an independent set that is
/// maximal inside `universe`.
pub fn maximal_independent_completion(
    g: &Graph,
    seed: VertexSet,
    universe: VertexSet,
) -> Result<VertexSet> {
    g.check_vertex_set(universe)?;
    if !is_independent(g, seed) {
        return Err(Error::NotIndependent);
    }
    if !seed.is_subset(universe) {
        return Err(Error::InvalidParameters(
            "seed is not contained in the universe".into(),
        ));
    }
    let mut s = seed;
    for v in universe - seed {
        if !g.neighbors(v).intersects(s) {
            s.insert(v);
        }
    }
    Ok(s)
}

/// One reduction step of the dominating-to-independent conversion.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConversionStep {
    /// Vertex of maximum degree in `G[D]` (lowest index on ties).
    pub v: usize,
    /// Its degree in `G[D]`.
    pub d: usize,
    /// Vertices outside `D` whose only closed-neighborhood member in `D` is `v`.
    pub private: VertexSet,
    /// Maximal independent subset of `private` that replaces `v`.
    pub replacement: VertexSet,
    pub next: VertexSet,
    /// Neighbors of `v` that are pendant in `G[D]`.
    pub q: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConversionTrace {
    pub initial: VertexSet,
    pub steps: Vec<ConversionStep>,
    pub final_set: VertexSet,
}

impl ConversionTrace {
    /// Re-checks every recorded step against `g`, which must be `k`-regular.
    pub fn verify(&self, g: &Graph, k: usize) -> std::result::Result<(), String> {
        let mut current = self.initial;
        for (i, step) in self.steps.iter().enumerate() {
            if step.replacement.len() + step.d > k {
                return Err(format!(
                    "step {i}: |P'| = {} exceeds k - d = {}",
                    step.replacement.len(),
                    k - step.d
                ));
            }
            let before = g.non_isolated_within(current);
            let after = g.non_isolated_within(step.next);
            if after + 1 + step.q > before {
                return Err(format!(
                    "step {i}: n1 went from {before} to {after} with q = {}",
                    step.q
                ));
            }
            if step.next != (current.without(step.v) | step.replacement) {
                return Err(format!("step {i}: next set is not (D - v) + P'"));
            }
            if !is_dominating(g, step.next) {
                return Err(format!("step {i}: next set is not dominating"));
            }
            current = step.next;
        }
        if current != self.final_set {
            return Err("final set does not match the last step".into());
        }
        Ok(())
    }
}

/// Converts a dominating set `d` of a connected `k`-regular graph (`k >= 4`)
/// into an independent dominating set of size at most
/// `|d| + (k - 3) * n₁(G[d])`.
pub fn dominating_to_independent(g: &Graph, d: VertexSet) -> Result<(VertexSet, ConversionTrace)> {
    let k = g.regularity().ok_or(Error::NotRegular)?;
    if k < 4 {
        return Err(Error::DegreeTooSmall {
            what: "the dominating-set conversion",
            k,
            min: 4,
        });
    }
    if !g.is_connected() {
        return Err(Error::NotConnected);
    }
    g.check_vertex_set(d)?;
    if !is_dominating(g, d) {
        return Err(Error::NotDominating);
    }

    let mut current = d;
    let mut steps = Vec::new();
    while g.non_isolated_within(current) > 0 {
        let (v, deg) = current
            .iter()
            .map(|v| (v, g.induced_degree(v, current)))
            .fold(
                (usize::MAX, 0),
                |best, (v, dv)| if dv > best.1 { (v, dv) } else { best },
            );
        let outside = g.vertices() - current;
        let private: VertexSet = outside
            .iter()
            .filter(|&u| g.closed_neighborhood(u) & current == VertexSet::singleton(v))
            .collect();
        let replacement = maximal_independent_completion(g, VertexSet::EMPTY, private)?;
        let q = (g.neighbors(v) & current)
            .iter()
            .filter(|&u| g.induced_degree(u, current) == 1)
            .count();
        let next = current.without(v) | replacement;
        steps.push(ConversionStep {
            v,
            d: deg,
            private,
            replacement,
            next,
            q,
        });
        current = next;
    }
    let trace = ConversionTrace {
        initial: d,
        steps,
        final_set: current,
    };
    Ok((current, trace))
}
