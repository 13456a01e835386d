//! Generators for the named graphs and for random regular test corpora.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet, MAX_VERTICES};

const RANDOM_REGULAR_ATTEMPTS: usize = 200_000;

fn capacity(n: usize) -> Result<()> {
    if n > MAX_VERTICES {
        Err(Error::Capacity(n))
    } else {
        Ok(())
    }
}

fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidParameters(msg.into())
}

/// `K_{a,b}` with parts `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph> {
    if a == 0 || b == 0 {
        return Err(invalid("complete bipartite parts must be nonempty"));
    }
    capacity(a + b)?;
    let mut g = Graph::empty(a + b)?;
    for u in 0..a {
        for v in a..a + b {
            g.add_edge(u, v)?;
        }
    }
    Ok(g.with_label(format!("K{a},{b}")))
}

pub fn complete(n: usize) -> Result<Graph> {
    capacity(n)?;
    let mut g = Graph::empty(n)?;
    for v in 1..n {
        for u in 0..v {
            g.add_edge(u, v)?;
        }
    }
    Ok(g.with_label(format!("K{n}")))
}

/// `C_n`: vertex `j` adjacent to `j ± 1 mod n`.
pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(invalid("a cycle needs at least 3 vertices"));
    }
    capacity(n)?;
    let mut g = Graph::empty(n)?;
    for j in 0..n {
        g.add_edge(j, (j + 1) % n)?;
    }
    Ok(g.with_label(format!("C{n}")))
}

/// `C_n □ K_2`: outer cycle `0..n`, inner cycle `n..2n`, spokes `j ~ n + j`.
pub fn prism(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(invalid("a prism needs a cycle of length at least 3"));
    }
    capacity(2 * n)?;
    let mut g = Graph::empty(2 * n)?;
    for j in 0..n {
        let next = (j + 1) % n;
        g.add_edge(j, next)?;
        g.add_edge(n + j, n + next)?;
        g.add_edge(j, n + j)?;
    }
    Ok(g.with_label(format!("C{n}xK2")))
}

/// `C_n[t K_1]`: class `j` is `j*t .. (j+1)*t`, independent, and fully
/// joined to classes `j ± 1 mod n`. The result is `2t`-regular.
pub fn cycle_blowup(n: usize, t: usize) -> Result<Graph> {
    if n < 3 || t == 0 {
        return Err(invalid("cycle blow-up needs n >= 3 and t >= 1"));
    }
    capacity(n * t)?;
    let mut g = Graph::empty(n * t)?;
    for j in 0..n {
        let next = (j + 1) % n;
        for a in 0..t {
            for b in 0..t {
                g.add_edge(j * t + a, next * t + b)?;
            }
        }
    }
    Ok(g.with_label(format!("C{n}[{t}K1]")))
}

/// `H(q, p)`: `K_q` on `0..q` with `p` pendant vertices on each clique
/// vertex; the pendants of clique vertex `c` are `q + c*p .. q + (c+1)*p`.
pub fn pendant_clique(q: usize, p: usize) -> Result<Graph> {
    if q == 0 {
        return Err(invalid("H(q, p) needs q >= 1"));
    }
    let n = q * (1 + p);
    capacity(n)?;
    let mut g = Graph::empty(n)?;
    for v in 1..q {
        for u in 0..v {
            g.add_edge(u, v)?;
        }
    }
    for c in 0..q {
        for j in 0..p {
            g.add_edge(c, q + c * p + j)?;
        }
    }
    Ok(g.with_label(format!("H({q},{p})")))
}

/// The member of the `H(⌊D/2⌋+1, ⌈D/2⌉)` family for maximum degree `d`.
pub fn conjectured_extremal(d: usize) -> Result<Graph> {
    pendant_clique(d / 2 + 1, d.div_ceil(2))
}

/// 4-cycle `0-1-2-3-0` with two pendants on each of `0`, `1` and `2`.
pub fn fixture_c4_three_pendant_pairs() -> Graph {
    let mut edges = vec![(0, 1), (1, 2), (2, 3), (3, 0)];
    for (c, base) in [(0, 4), (1, 6), (2, 8)] {
        edges.push((c, base));
        edges.push((c, base + 1));
    }
    Graph::from_edge_list(10, &edges)
        .expect("fixed edge list is valid")
        .with_label("C4+3x2 pendants")
}

/// Simple `k`-regular graph from the pairing model, restarting on any loop
/// or repeated edge. Not uniform; deterministic for a given seed.
pub fn random_regular(n: usize, k: usize, seed: u64) -> Result<Graph> {
    if k >= n || n * k % 2 == 1 {
        return Err(invalid(format!("no {k}-regular graph on {n} vertices")));
    }
    capacity(n)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut points: Vec<usize> = (0..n).flat_map(|v| std::iter::repeat_n(v, k)).collect();
    'attempt: for _ in 0..RANDOM_REGULAR_ATTEMPTS {
        points.shuffle(&mut rng);
        let mut adj = vec![VertexSet::EMPTY; n];
        for pair in points.chunks_exact(2) {
            let (u, v) = (pair[0], pair[1]);
            if u == v || adj[u].contains(v) {
                continue 'attempt;
            }
            adj[u].insert(v);
            adj[v].insert(u);
        }
        let mut g = Graph::empty(n)?;
        for (u, row) in adj.iter().enumerate() {
            for v in row.iter().filter(|&v| v > u) {
                g.add_edge(u, v)?;
            }
        }
        return Ok(g);
    }
    Err(Error::RejectionBudget(RANDOM_REGULAR_ATTEMPTS))
}
