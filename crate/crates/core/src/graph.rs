//! Fixed-capacity simple undirected graphs with bit-set adjacency rows.
//!
//! Every vertex set is a single `u128`, so neighborhood unions, domination
//! checks and independence checks are a handful of word operations. Graphs
//! larger than [`MAX_VERTICES`] are rejected at construction.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{BitAnd, BitAndAssign, BitOr, BitOrAssign, BitXor, Not, Sub, SubAssign};

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

pub const MAX_VERTICES: usize = 128;

/// A set of vertex indices below [`MAX_VERTICES`].
///
/// Ordering is lexicographic on the ascending list of members, so
/// `{0, 3} < {1, 2}` and `{0} < {0, 1}`.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct VertexSet(u128);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub const fn from_bits(bits: u128) -> Self {
        VertexSet(bits)
    }

    pub const fn bits(self) -> u128 {
        self.0
    }

    /// `{0, 1, ..., n - 1}`.
    pub fn full(n: usize) -> Self {
        assert!(n <= MAX_VERTICES);
        if n == MAX_VERTICES {
            VertexSet(u128::MAX)
        } else {
            VertexSet((1u128 << n) - 1)
        }
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet(1u128 << v)
    }

    pub fn contains(self, v: usize) -> bool {
        v < MAX_VERTICES && self.0 >> v & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        self.0 |= 1u128 << v;
    }

    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1u128 << v);
    }

    pub fn with(self, v: usize) -> Self {
        VertexSet(self.0 | 1u128 << v)
    }

    pub fn without(self, v: usize) -> Self {
        VertexSet(self.0 & !(1u128 << v))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// Smallest member.
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn intersects(self, other: VertexSet) -> bool {
        self.0 & other.0 != 0
    }

    /// Largest member plus one, or 0 for the empty set.
    pub fn bound(self) -> usize {
        MAX_VERTICES - self.0.leading_zeros() as usize
    }

    pub fn iter(self) -> Iter {
        Iter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

pub struct Iter(u128);

impl Iterator for Iter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Iter {}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = Iter;

    fn into_iter(self) -> Iter {
        self.iter()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> Ordering {
        let diff = self.0 ^ other.0;
        if diff == 0 {
            return Ordering::Equal;
        }
        // The lowest differing vertex decides: the set holding it is smaller
        // unless the other set has nothing left past that point.
        let x = diff.trailing_zeros();
        let above = if x == 127 { 0 } else { u128::MAX << (x + 1) };
        let (holder_is_self, other_rest) = if self.0 >> x & 1 == 1 {
            (true, other.0 & above)
        } else {
            (false, self.0 & above)
        };
        match (holder_is_self, other_rest == 0) {
            (true, true) => Ordering::Greater,
            (true, false) => Ordering::Less,
            (false, true) => Ordering::Less,
            (false, false) => Ordering::Greater,
        }
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

macro_rules! set_op {
    ($tr:ident, $f:ident, $op:tt) => {
        impl $tr for VertexSet {
            type Output = VertexSet;
            fn $f(self, rhs: VertexSet) -> VertexSet {
                VertexSet(self.0 $op rhs.0)
            }
        }
    };
}
set_op!(BitOr, bitor, |);
set_op!(BitAnd, bitand, &);
set_op!(BitXor, bitxor, ^);

impl Sub for VertexSet {
    type Output = VertexSet;
    fn sub(self, rhs: VertexSet) -> VertexSet {
        VertexSet(self.0 & !rhs.0)
    }
}

impl Not for VertexSet {
    type Output = VertexSet;
    fn not(self) -> VertexSet {
        VertexSet(!self.0)
    }
}

impl BitOrAssign for VertexSet {
    fn bitor_assign(&mut self, rhs: VertexSet) {
        self.0 |= rhs.0;
    }
}

impl BitAndAssign for VertexSet {
    fn bitand_assign(&mut self, rhs: VertexSet) {
        self.0 &= rhs.0;
    }
}

impl SubAssign for VertexSet {
    fn sub_assign(&mut self, rhs: VertexSet) {
        self.0 &= !rhs.0;
    }
}

/// Simple undirected graph on vertices `0..n`.
#[derive(Clone)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
    label: Option<String>,
}

impl PartialEq for Graph {
    /// Adjacency equality; labels are ignored.
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.adj == other.adj
    }
}

impl Eq for Graph {}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut d = f.debug_struct("Graph");
        d.field("n", &self.n);
        if let Some(label) = &self.label {
            d.field("label", label);
        }
        d.field("edges", &self.edges().collect::<Vec<_>>()).finish()
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::Capacity(n));
        }
        Ok(Graph {
            n,
            adj: vec![VertexSet::EMPTY; n],
            label: None,
        })
    }

    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Adds `uv`; a repeated edge is a no-op.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        for w in [u, v] {
            if w >= self.n {
                return Err(Error::VertexOutOfRange {
                    vertex: w,
                    n: self.n,
                });
            }
        }
        if u == v {
            return Err(Error::LoopEdge(u));
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(())
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].contains(v)
    }

    /// Open neighborhood `N(v)`.
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    /// Closed neighborhood `N[v]`.
    pub fn closed_neighborhood(&self, v: usize) -> VertexSet {
        self.adj[v].with(v)
    }

    /// `N(S)`, the union of the open neighborhoods of members of `s`.
    pub fn set_neighborhood(&self, s: VertexSet) -> VertexSet {
        s.iter().fold(VertexSet::EMPTY, |acc, v| acc | self.adj[v])
    }

    /// `N[S] = N(S) ∪ S`.
    pub fn closed_set_neighborhood(&self, s: VertexSet) -> VertexSet {
        self.set_neighborhood(s) | s
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn is_regular(&self, k: usize) -> bool {
        (0..self.n).all(|v| self.degree(v) == k)
    }

    /// The common degree if the graph is regular. The empty graph has none.
    pub fn regularity(&self) -> Option<usize> {
        if self.n == 0 {
            return None;
        }
        let k = self.degree(0);
        self.is_regular(k).then_some(k)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|s| s.len()).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, ordered by `v` then `u`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |v| {
            (self.adj[v] & VertexSet::full(v))
                .iter()
                .map(move |u| (u, v))
        })
    }

    /// Degree of `v` inside the induced subgraph `G[s]`.
    pub fn induced_degree(&self, v: usize, s: VertexSet) -> usize {
        (self.adj[v] & s).len()
    }

    /// Members of `s` with no neighbor in `s`.
    pub fn isolated_within(&self, s: VertexSet) -> VertexSet {
        s.iter().filter(|&v| !self.adj[v].intersects(s)).collect()
    }

    /// `n₁(G[s])`: members of `s` with at least one neighbor in `s`.
    pub fn non_isolated_within(&self, s: VertexSet) -> usize {
        s.len() - self.isolated_within(s).len()
    }

    /// `n₀(G)`.
    pub fn isolated_count(&self) -> usize {
        self.adj.iter().filter(|s| s.is_empty()).count()
    }

    /// `n₁(G) = n − n₀(G)`.
    pub fn non_isolated_count(&self) -> usize {
        self.n - self.isolated_count()
    }

    /// Vertices reachable from `start`.
    pub fn component_of(&self, start: usize) -> VertexSet {
        let mut seen = VertexSet::singleton(start);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let next = self.set_neighborhood(frontier) - seen;
            seen |= next;
            frontier = next;
        }
        seen
    }

    /// The empty graph counts as connected.
    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.component_of(0) == self.vertices()
    }

    /// Induced subgraph on `keep`, with `remap[new] = old`.
    pub fn induced_subgraph(&self, keep: VertexSet) -> (Graph, Vec<usize>) {
        let remap: Vec<usize> = keep.iter().filter(|&v| v < self.n).collect();
        let mut index = [usize::MAX; MAX_VERTICES];
        for (new, &old) in remap.iter().enumerate() {
            index[old] = new;
        }
        let adj = remap
            .iter()
            .map(|&old| (self.adj[old] & keep).iter().map(|u| index[u]).collect())
            .collect();
        let g = Graph {
            n: remap.len(),
            adj,
            label: None,
        };
        (g, remap)
    }

    /// `G − X`.
    pub fn delete_vertices(&self, x: VertexSet) -> (Graph, Vec<usize>) {
        self.induced_subgraph(self.vertices() - x)
    }

    /// Graph with vertex `v` renamed to `perm[v]`. `perm` must be a permutation of `0..n`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        debug_assert_eq!(perm.len(), self.n);
        let mut adj = vec![VertexSet::EMPTY; self.n];
        for v in 0..self.n {
            adj[perm[v]] = self.adj[v].iter().map(|u| perm[u]).collect();
        }
        Graph {
            n: self.n,
            adj,
            label: self.label.clone(),
        }
    }

    /// Disjoint union, with `other`'s vertices shifted past ours.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let mut g = Graph::empty(self.n + other.n)?;
        for (u, v) in self.edges() {
            g.add_edge(u, v)?;
        }
        for (u, v) in other.edges() {
            g.add_edge(u + self.n, v + self.n)?;
        }
        Ok(g)
    }

    /// Adds a new vertex adjacent to `nbrs`; returns its index.
    pub(crate) fn push_vertex(&mut self, nbrs: VertexSet) -> Result<usize> {
        if self.n == MAX_VERTICES {
            return Err(Error::Capacity(self.n + 1));
        }
        let v = self.n;
        self.n += 1;
        self.adj.push(nbrs);
        for u in nbrs {
            self.adj[u].insert(v);
        }
        Ok(v)
    }

    pub fn check_vertex_set(&self, s: VertexSet) -> Result<()> {
        if s.bound() > self.n {
            return Err(Error::VertexOutOfRange {
                vertex: s.bound() - 1,
                n: self.n,
            });
        }
        Ok(())
    }
}
