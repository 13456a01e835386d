//! Discharging certificates for independent domination in regular graphs.
//!
//! For a connected `k`-regular graph `G` and an independent dominating set
//! `I`, let `J = V \ I`, `N_I(v) = N(v) ∩ I` for `v ∈ J` and
//! `J_i = { v ∈ J : |N_I(v)| = i }`. For `v ∈ J_k`,
//! `X(v) = { w ∈ J \ {v} : N_I(w) ⊆ N(v) }`, and for `v ∈ J_1 ∪ … ∪ J_{k-1}`,
//! `Y(v) = { w ∈ J_k : v ∈ X(w) }`.
//!
//! Every vertex of `I` starts with charge `k` and every vertex of `J` with
//! `1 - k`, so the total is `(2k - 1)|I| - (k - 1)n`. The rules move charge
//! without changing the total; if every final charge is non-positive then
//! `|I| <= (k - 1)n / (2k - 1)`.

use itertools::Itertools;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::rational::Rational;
use crate::solvers::{enumerate_minimum_ids, is_independent_dominating};

#[derive(Debug, Clone, Serialize)]
pub struct DischargeContext {
    #[serde(skip)]
    pub graph: Graph,
    pub k: usize,
    pub independent: VertexSet,
    pub rest: VertexSet,
    /// `|N_I(v)|` for `v ∈ J`, 0 for members of `I`.
    pub level: Vec<usize>,
    /// `N_I(v)` for `v ∈ J`, empty for members of `I`.
    pub i_neighbors: Vec<VertexSet>,
    /// `X(v)`, defined for `v ∈ J_k`.
    pub x: Vec<Option<VertexSet>>,
    /// `Y(v)`, defined for `v ∈ J_1 ∪ … ∪ J_{k-1}`.
    pub y: Vec<Option<VertexSet>>,
}

fn regular_degree(g: &Graph, min: usize, what: &'static str) -> Result<usize> {
    let k = g.regularity().ok_or(Error::NotRegular)?;
    if k < min {
        return Err(Error::DegreeTooSmall { what, k, min });
    }
    if !g.is_connected() {
        return Err(Error::NotConnected);
    }
    Ok(k)
}

/// Is `g` the balanced complete bipartite graph `K_{k,k}`?
pub fn is_balanced_complete_bipartite(g: &Graph) -> bool {
    let n = g.n();
    if n == 0 || n % 2 == 1 || !g.is_regular(n / 2) {
        return false;
    }
    let side = g.neighbors(0);
    let other = g.vertices() - side;
    other.iter().all(|v| g.neighbors(v) == side) && side.iter().all(|v| g.neighbors(v) == other)
}

impl DischargeContext {
    /// Builds the context for `(g, independent)`.
    pub fn build(g: &Graph, independent: VertexSet) -> Result<Self> {
        let k = regular_degree(g, 3, "discharging contexts")?;
        g.check_vertex_set(independent)?;
        if !is_independent_dominating(g, independent) {
            return Err(Error::NotIndependentDominating);
        }
        let n = g.n();
        let rest = g.vertices() - independent;
        let mut level = vec![0; n];
        let mut i_neighbors = vec![VertexSet::EMPTY; n];
        for v in rest {
            i_neighbors[v] = g.neighbors(v) & independent;
            level[v] = i_neighbors[v].len();
        }
        let mut x = vec![None; n];
        for v in rest.iter().filter(|&v| level[v] == k) {
            let nbrs = g.neighbors(v);
            let xv: VertexSet = rest
                .without(v)
                .iter()
                .filter(|&w| i_neighbors[w].is_subset(nbrs))
                .collect();
            x[v] = Some(xv);
        }
        let mut y = vec![None; n];
        for v in rest.iter().filter(|&v| level[v] < k) {
            let yv: VertexSet = rest
                .iter()
                .filter(|&w| x[w].is_some_and(|xw| xw.contains(v)))
                .collect();
            y[v] = Some(yv);
        }
        Ok(DischargeContext {
            graph: g.clone(),
            k,
            independent,
            rest,
            level,
            i_neighbors,
            x,
            y,
        })
    }

    /// `J_i`.
    pub fn level_set(&self, i: usize) -> VertexSet {
        self.rest.iter().filter(|&v| self.level[v] == i).collect()
    }

    /// `J_s ∪ … ∪ J_t`.
    pub fn level_range(&self, s: usize, t: usize) -> VertexSet {
        self.rest
            .iter()
            .filter(|&v| (s..=t).contains(&self.level[v]))
            .collect()
    }

    pub fn x_set(&self, v: usize) -> Option<VertexSet> {
        self.x[v]
    }

    pub fn y_set(&self, v: usize) -> Option<VertexSet> {
        self.y[v]
    }

    /// Union of `Y(u)` over `u ∈ J_{k-1} ∩ N(w)`, when that union is a single vertex.
    pub fn sole_y_target(&self, w: usize) -> Option<usize> {
        let union = (self.graph.neighbors(w) & self.level_set(self.k - 1))
            .iter()
            .fold(VertexSet::EMPTY, |acc, u| {
                acc | self.y[u].unwrap_or_default()
            });
        (union.len() == 1).then(|| union.first().expect("singleton"))
    }
}

pub fn build_context(g: &Graph, independent: VertexSet) -> Result<DischargeContext> {
    DischargeContext::build(g, independent)
}

fn binomial(n: usize, r: usize) -> usize {
    if r > n {
        return 0;
    }
    (0..r).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Number of `K_{k-1,k}` subgraphs of the bipartite graph between `I` and `J`,
/// with either part on either side.
///
/// Every vertex of `I` has exactly `k` neighbors in `J`, so a `(k-1)`-part in
/// `I` must consist of vertices with one common neighborhood, which is then
/// the whole `k`-part. A `k`-part in `I` forces each vertex of the opposite
/// part to have exactly that `N_I`. Both cases reduce to grouping by
/// neighborhood and summing `C(group, k - 1)`.
pub fn count_k_k1_k_subgraphs(ctx: &DischargeContext) -> usize {
    let k = ctx.k;
    let by_neighborhood = |sets: Vec<VertexSet>| -> usize {
        sets.into_iter()
            .sorted()
            .chunk_by(|s| *s)
            .into_iter()
            .map(|(_, group)| binomial(group.count(), k - 1))
            .sum()
    };
    let i_side = by_neighborhood(
        ctx.independent
            .iter()
            .map(|v| ctx.graph.neighbors(v))
            .collect(),
    );
    let j_side = by_neighborhood(
        ctx.level_set(k)
            .iter()
            .map(|v| ctx.i_neighbors[v])
            .collect(),
    );
    i_side + j_side
}

/// `|{ v ∈ J_1 : Y(v) ≠ ∅ }|`.
pub fn j1_with_nonempty_y_count(ctx: &DischargeContext) -> usize {
    ctx.level_set(1)
        .iter()
        .filter(|&v| ctx.y[v].is_some_and(|y| !y.is_empty()))
        .count()
}

/// Among all minimum independent dominating sets: fewest `K_{k-1,k}`
/// subgraphs, then most `J_1` vertices with nonempty `Y`, then the smallest
/// set in [`VertexSet`] order.
pub fn select_canonical_ids(g: &Graph) -> Result<DischargeContext> {
    regular_degree(g, 3, "discharging contexts")?;
    type Score = (usize, std::cmp::Reverse<usize>, VertexSet);
    let mut best: Option<(Score, DischargeContext)> = None;
    for ids in enumerate_minimum_ids(g)? {
        let ctx = DischargeContext::build(g, ids)?;
        let key = (
            count_k_k1_k_subgraphs(&ctx),
            std::cmp::Reverse(j1_with_nonempty_y_count(&ctx)),
            ids,
        );
        if best.as_ref().is_none_or(|(b, _)| key < *b) {
            best = Some((key, ctx));
        }
    }
    Ok(best
        .expect("every graph has an independent dominating set")
        .1)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Rule {
    /// `J` vertex to each `I`-neighbor.
    #[serde(rename = "R1")]
    R1,
    /// `J_i` vertex, `2 <= i <= k-2`, to each vertex of its `Y`.
    #[serde(rename = "R2")]
    R2,
    /// `J_1` vertex with `|Y| = k - 1`.
    #[serde(rename = "R3-1")]
    R3a,
    /// `J_1` vertex with `|Y| <= k - 2`.
    #[serde(rename = "R3-2")]
    R3b,
    /// `J_1` vertex with `|Y| <= k - 3` whose `J_{k-1}`-neighbors' `Y` sets cover one vertex.
    #[serde(rename = "R3-3")]
    R3c,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Transfer {
    pub from: usize,
    pub to: usize,
    /// Charge sent; the sender gains `-amount`, the receiver gains `amount`.
    pub amount: Rational,
    pub rule: Rule,
}

#[derive(Debug, Clone, Serialize)]
pub struct ChargeReport {
    pub initial: Vec<Rational>,
    #[serde(rename = "final")]
    pub final_charge: Vec<Rational>,
    pub transfers: Vec<Transfer>,
    pub sum_initial: Rational,
    pub sum_final: Rational,
    pub all_final_nonpositive: bool,
}

/// Applies every rule to every qualifying sender/receiver pair once.
pub fn apply_rules(ctx: &DischargeContext) -> Result<ChargeReport> {
    let k = ctx.k;
    if k < 4 {
        return Err(Error::DegreeTooSmall {
            what: "rules",
            k,
            min: 4,
        });
    }
    let n = ctx.graph.n();
    let initial: Vec<Rational> = (0..n)
        .map(|v| {
            if ctx.independent.contains(v) {
                Rational::from(k)
            } else {
                Rational::from(1 - k as i64)
            }
        })
        .collect();

    let mut transfers = Vec::new();
    let minus_one = -Rational::ONE;
    for v in ctx.rest {
        for u in ctx.i_neighbors[v] {
            transfers.push(Transfer {
                from: v,
                to: u,
                amount: minus_one,
                rule: Rule::R1,
            });
        }
    }
    for i in 2..=k - 2 {
        for w in ctx.level_set(i) {
            let y = ctx.y[w].expect("Y defined below level k");
            if y.is_empty() {
                continue;
            }
            let amount = -Rational::new((k - 1 - i) as i64, y.len() as i64);
            for x in y {
                transfers.push(Transfer {
                    from: w,
                    to: x,
                    amount,
                    rule: Rule::R2,
                });
            }
        }
    }
    for w in ctx.level_set(1) {
        let y = ctx.y[w].expect("Y defined below level k");
        if y.len() == k - 1 {
            let amount = -Rational::new((k - 2) as i64, (k - 1) as i64);
            for x in y {
                transfers.push(Transfer {
                    from: w,
                    to: x,
                    amount,
                    rule: Rule::R3a,
                });
            }
        }
        if y.len() <= k - 2 {
            for x in y {
                transfers.push(Transfer {
                    from: w,
                    to: x,
                    amount: minus_one,
                    rule: Rule::R3b,
                });
            }
        }
        if y.len() <= k - 3 {
            if let Some(x) = ctx.sole_y_target(w) {
                transfers.push(Transfer {
                    from: w,
                    to: x,
                    amount: minus_one,
                    rule: Rule::R3c,
                });
            }
        }
    }

    let mut final_charge = initial.clone();
    for t in &transfers {
        final_charge[t.from] -= t.amount;
        final_charge[t.to] += t.amount;
    }
    let sum_initial: Rational = initial.iter().sum();
    let sum_final: Rational = final_charge.iter().sum();
    let all_final_nonpositive = final_charge.iter().all(|c| !c.is_positive());
    Ok(ChargeReport {
        initial,
        final_charge,
        transfers,
        sum_initial,
        sum_final,
        all_final_nonpositive,
    })
}

/// `(2k - 1)|I| - (k - 1)n`.
pub fn expected_total_charge(ctx: &DischargeContext) -> Rational {
    let k = ctx.k as i64;
    Rational::from((2 * k - 1) * ctx.independent.len() as i64 - (k - 1) * ctx.graph.n() as i64)
}

#[derive(Debug, Clone, Serialize)]
pub struct Certificate {
    pub all_nonpositive: bool,
    pub offending_vertices: Vec<usize>,
    pub context: DischargeContext,
    pub report: ChargeReport,
}

/// Selects the canonical minimum IDS and checks that every final charge is
/// non-positive.
pub fn certify_nonpositive_charges(g: &Graph) -> Result<Certificate> {
    let k = regular_degree(g, 4, "rules")?;
    if is_balanced_complete_bipartite(g) {
        return Err(Error::ExcludedCompleteBipartite(k));
    }
    let context = select_canonical_ids(g)?;
    let report = apply_rules(&context)?;
    let offending_vertices = (0..g.n())
        .filter(|&v| report.final_charge[v].is_positive())
        .collect();
    Ok(Certificate {
        all_nonpositive: report.all_final_nonpositive,
        offending_vertices,
        context,
        report,
    })
}

/// Vertices `v` of `J_1 ∪ … ∪ J_{k-1}` with `|Y(v)| > k - 1`.
pub fn oversized_y_sets(ctx: &DischargeContext) -> Vec<usize> {
    ctx.level_range(1, ctx.k - 1)
        .iter()
        .filter(|&v| ctx.y[v].expect("defined").len() > ctx.k - 1)
        .collect()
}

/// Vertices `v ∈ J_i` with fewer than `i` vertices `w` satisfying `N_I(w) ⊆ N_I(v)`.
///
/// Only meaningful for minimum independent dominating sets.
pub fn containment_shortfalls(ctx: &DischargeContext) -> Vec<usize> {
    ctx.rest
        .iter()
        .filter(|&v| {
            let below = ctx
                .rest
                .iter()
                .filter(|&w| ctx.i_neighbors[w].is_subset(ctx.i_neighbors[v]))
                .count();
            below < ctx.level[v]
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum FindingKind {
    /// `k - 1` twins in `X(v) ∩ J_{k-1}` lack a suitable common `J_1`-neighbor.
    MissingCommonPendantNeighbor,
    /// `X(v)` fails to be `k - 1` vertices of `J_{k-1}` with a suitable common `J_1`-neighbor.
    UnexpectedXStructure,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Finding {
    pub kind: FindingKind,
    pub vertex: usize,
}

impl DischargeContext {
    /// A `J_1` vertex adjacent to all of `group` with `|Y(u)| <= k - 3` whose
    /// `J_{k-1}`-neighbors' `Y` sets cover exactly `{v}`.
    fn has_common_pendant_neighbor(&self, group: VertexSet, v: usize) -> bool {
        let k = self.k;
        self.level_set(1).iter().any(|u| {
            group.is_subset(self.graph.neighbors(u))
                && self.y[u].expect("defined").len() <= k - 3
                && self.sole_y_target(u) == Some(v)
        })
    }
}

/// Structural statements expected of a canonical context on a graph other
/// than `K_{k,k}`, `k >= 4`. Returns every vertex where one fails; an empty
/// list is the expected outcome.
pub fn structural_findings(ctx: &DischargeContext) -> Vec<Finding> {
    let k = ctx.k;
    let mut findings = Vec::new();
    if k < 4 {
        return findings;
    }
    let j1 = ctx.level_set(1);
    let jk1 = ctx.level_set(k - 1);
    let mid = ctx.level_range(2, k - 2);
    for v in ctx.level_set(k) {
        let xv = ctx.x[v].expect("defined on J_k");

        if (xv & j1).len() <= k - 3 {
            let twins_ok = (xv & jk1)
                .iter()
                .into_group_map_by(|&w| ctx.i_neighbors[w])
                .into_values()
                .filter(|group| group.len() >= k - 1)
                .all(|group| {
                    group
                        .into_iter()
                        .combinations(k - 1)
                        .all(|sub| ctx.has_common_pendant_neighbor(sub.into_iter().collect(), v))
                });
            if !twins_ok {
                findings.push(Finding {
                    kind: FindingKind::MissingCommonPendantNeighbor,
                    vertex: v,
                });
            }
        }

        let x1 = xv & j1;
        let hypothesis = !xv.intersects(mid)
            && (x1.is_empty()
                || (x1.len() == 1
                    && ctx.y[x1.first().expect("one")].expect("defined").len() == k - 1));
        if hypothesis {
            let remainder = xv - j1;
            let ok = remainder.len() == k - 1
                && remainder.is_subset(jk1)
                && ctx.has_common_pendant_neighbor(remainder, v);
            if !ok {
                findings.push(Finding {
                    kind: FindingKind::UnexpectedXStructure,
                    vertex: v,
                });
            }
        }
    }
    findings
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    fn set(v: &[usize]) -> VertexSet {
        v.iter().copied().collect()
    }

    /// Classes `A1..A7` of `C7[2K1]` are `{0,1}, {2,3}, ..., {12,13}`.
    fn class(j: usize) -> VertexSet {
        set(&[2 * (j - 1), 2 * (j - 1) + 1])
    }

    fn blowup_context() -> DischargeContext {
        let g = families::cycle_blowup(7, 2).unwrap();
        build_context(&g, class(1) | class(4) | class(6)).unwrap()
    }

    /// Pairs (A, B), A in I, B in J, complete between them, sizes {k-1, k}.
    fn brute_force_k_k1_k(ctx: &DischargeContext) -> usize {
        let k = ctx.k;
        let side_subsets = |side: VertexSet, size: usize| -> Vec<VertexSet> {
            side.iter()
                .combinations(size)
                .map(|c| c.into_iter().collect())
                .collect()
        };
        let mut count = 0;
        for (a_size, b_size) in [(k - 1, k), (k, k - 1)] {
            for a in side_subsets(ctx.independent, a_size) {
                for b in side_subsets(ctx.rest, b_size) {
                    if a.iter().all(|u| b.is_subset(ctx.graph.neighbors(u))) {
                        count += 1;
                    }
                }
            }
        }
        count
    }

    #[test]
    fn blowup_levels() {
        let ctx = blowup_context();
        assert_eq!(ctx.level_set(2), class(2) | class(3));
        assert_eq!(ctx.level_set(4), class(5) | class(7));
        assert!(ctx.level_set(1).is_empty());
        assert!(ctx.level_set(3).is_empty());
        for v in ctx.rest {
            assert_eq!(ctx.level[v], ctx.i_neighbors[v].len());
        }
    }

    #[test]
    fn blowup_x_and_y() {
        let ctx = blowup_context();
        for v in class(5) {
            let xv = ctx.x_set(v).unwrap();
            assert_eq!(xv, class(5).without(v) | class(3));
            assert_eq!(xv.len(), 3);
        }
        for w in class(3) {
            assert_eq!(ctx.y_set(w).unwrap(), class(5));
        }
        for w in class(2) {
            assert_eq!(ctx.y_set(w).unwrap(), class(7));
        }
        assert_eq!(ctx.x_set(0), None);
        assert_eq!(ctx.y_set(class(5).first().unwrap()), None);
    }

    #[test]
    fn x_y_duality() {
        let ctx = blowup_context();
        let k = ctx.k;
        for u in ctx.level_range(1, k - 1) {
            for v in ctx.level_set(k) {
                assert_eq!(
                    ctx.x_set(v).unwrap().contains(u),
                    ctx.y_set(u).unwrap().contains(v)
                );
            }
        }
    }

    #[test]
    fn k44_context() {
        let g = families::complete_bipartite(4, 4).unwrap();
        let ctx = build_context(&g, set(&[0, 1, 2, 3])).unwrap();
        assert_eq!(ctx.level_set(4), set(&[4, 5, 6, 7]));
        for v in 4..8 {
            assert_eq!(ctx.x_set(v).unwrap(), set(&[4, 5, 6, 7]).without(v));
        }
        assert!(ctx.y.iter().all(Option::is_none));
        assert_eq!(count_k_k1_k_subgraphs(&ctx), 8);
        assert_eq!(brute_force_k_k1_k(&ctx), 8);
        assert_eq!(j1_with_nonempty_y_count(&ctx), 0);
    }

    #[test]
    fn blowup_counts() {
        let ctx = blowup_context();
        assert_eq!(count_k_k1_k_subgraphs(&ctx), 0);
        assert_eq!(brute_force_k_k1_k(&ctx), 0);
        assert_eq!(j1_with_nonempty_y_count(&ctx), 0);
    }

    #[test]
    fn k_k1_k_count_matches_oracle_on_random_contexts() {
        for (n, k) in [(8, 3), (10, 3), (12, 3), (9, 4), (10, 4), (10, 5)] {
            for seed in 0..8 {
                let g = families::random_regular(n, k, seed).unwrap();
                if !g.is_connected() {
                    continue;
                }
                for ids in enumerate_minimum_ids(&g).unwrap() {
                    let ctx = build_context(&g, ids).unwrap();
                    assert_eq!(count_k_k1_k_subgraphs(&ctx), brute_force_k_k1_k(&ctx));
                }
            }
        }
    }

    #[test]
    fn build_errors() {
        let g = families::cycle_blowup(7, 2).unwrap();
        assert_eq!(
            build_context(&g, class(1)).unwrap_err(),
            Error::NotIndependentDominating
        );
        let h = families::pendant_clique(3, 2).unwrap();
        assert_eq!(build_context(&h, set(&[0])).unwrap_err(), Error::NotRegular);
        let c = families::cycle(7).unwrap();
        assert!(matches!(
            build_context(&c, set(&[0, 3, 5])),
            Err(Error::DegreeTooSmall { k: 2, .. })
        ));
        let two = families::complete(5)
            .unwrap()
            .disjoint_union(&families::complete(5).unwrap())
            .unwrap();
        assert_eq!(
            build_context(&two, set(&[0, 5])).unwrap_err(),
            Error::NotConnected
        );
    }

    #[test]
    fn canonical_selection() {
        let k44 = families::complete_bipartite(4, 4).unwrap();
        assert_eq!(
            select_canonical_ids(&k44).unwrap().independent,
            set(&[0, 1, 2, 3])
        );

        let g = families::cycle_blowup(7, 2).unwrap();
        let ctx = select_canonical_ids(&g).unwrap();
        assert_eq!(ctx.independent.len(), 6);
        assert_eq!(count_k_k1_k_subgraphs(&ctx), 0);
        // a rotation of A1 ∪ A4 ∪ A6: three classes, no two consecutive
        let classes: Vec<usize> = (1..=7)
            .filter(|&j| class(j).is_subset(ctx.independent))
            .collect();
        assert_eq!(classes.len(), 3);

        let prism = families::prism(5).unwrap();
        let ctx = select_canonical_ids(&prism).unwrap();
        assert_eq!(ctx.independent.len(), 4);
        let best = enumerate_minimum_ids(&prism)
            .unwrap()
            .into_iter()
            .map(|s| count_k_k1_k_subgraphs(&build_context(&prism, s).unwrap()))
            .min()
            .unwrap();
        assert_eq!(count_k_k1_k_subgraphs(&ctx), best);
    }

    #[test]
    fn blowup_charges_all_zero() {
        let ctx = blowup_context();
        let report = apply_rules(&ctx).unwrap();
        assert_eq!(report.sum_initial, Rational::ZERO);
        assert_eq!(expected_total_charge(&ctx), Rational::ZERO);
        assert!(report.final_charge.iter().all(Rational::is_zero));
        assert!(report.all_final_nonpositive);
        let r2: Vec<_> = report
            .transfers
            .iter()
            .filter(|t| t.rule == Rule::R2)
            .collect();
        assert_eq!(r2.len(), 8);
        assert!(r2.iter().all(|t| t.amount == Rational::new(-1, 2)));
    }

    #[test]
    fn k44_charges_are_positive_on_j() {
        let g = families::complete_bipartite(4, 4).unwrap();
        let ctx = build_context(&g, set(&[0, 1, 2, 3])).unwrap();
        let report = apply_rules(&ctx).unwrap();
        for v in 4..8 {
            assert_eq!(report.final_charge[v], Rational::ONE);
        }
        for v in 0..4 {
            assert_eq!(report.final_charge[v], Rational::ZERO);
        }
        assert!(!report.all_final_nonpositive);
        assert_eq!(report.sum_final, report.sum_initial);
    }

    #[test]
    fn rules_refuse_cubic() {
        let prism = families::prism(5).unwrap();
        let ctx = select_canonical_ids(&prism).unwrap();
        assert!(matches!(
            apply_rules(&ctx),
            Err(Error::DegreeTooSmall { k: 3, .. })
        ));
        assert!(matches!(
            certify_nonpositive_charges(&prism),
            Err(Error::DegreeTooSmall { k: 3, .. })
        ));
    }

    #[test]
    fn certificate_on_blowup_and_exclusion() {
        let g = families::cycle_blowup(7, 2).unwrap();
        let cert = certify_nonpositive_charges(&g).unwrap();
        assert!(cert.all_nonpositive);
        assert!(cert.offending_vertices.is_empty());
        let k44 = families::complete_bipartite(4, 4).unwrap();
        assert_eq!(
            certify_nonpositive_charges(&k44).unwrap_err(),
            Error::ExcludedCompleteBipartite(4)
        );
    }

    #[test]
    fn complete_bipartite_recognition() {
        assert!(is_balanced_complete_bipartite(
            &families::complete_bipartite(4, 4).unwrap()
        ));
        assert!(is_balanced_complete_bipartite(&families::cycle(4).unwrap()));
        assert!(!is_balanced_complete_bipartite(
            &families::prism(3).unwrap()
        ));
        assert!(!is_balanced_complete_bipartite(
            &families::complete_bipartite(3, 4).unwrap()
        ));
        assert!(!is_balanced_complete_bipartite(&Graph::empty(0).unwrap()));
        assert!(!is_balanced_complete_bipartite(
            &families::cycle_blowup(7, 2).unwrap()
        ));
    }

    #[test]
    fn conservation_on_random_quartic_and_quintic() {
        for (n, k) in [(9, 4), (11, 4), (12, 5), (14, 4)] {
            for seed in 0..5 {
                let g = families::random_regular(n, k, seed).unwrap();
                if !g.is_connected() || is_balanced_complete_bipartite(&g) {
                    continue;
                }
                let ctx = select_canonical_ids(&g).unwrap();
                let report = apply_rules(&ctx).unwrap();
                assert_eq!(report.sum_initial, expected_total_charge(&ctx));
                assert_eq!(report.sum_final, report.sum_initial);
                assert!(oversized_y_sets(&ctx).is_empty());
                assert!(containment_shortfalls(&ctx).is_empty());
            }
        }
    }

    #[test]
    fn cubic_contexts_with_pendant_levels() {
        let mut saw_j1 = false;
        for seed in 0..30 {
            let g = families::random_regular(12, 3, seed).unwrap();
            if !g.is_connected() {
                continue;
            }
            for ids in enumerate_minimum_ids(&g).unwrap() {
                let ctx = build_context(&g, ids).unwrap();
                let j1 = ctx.level_set(1);
                saw_j1 |= !j1.is_empty();
                let direct = j1
                    .iter()
                    .filter(|&v| !ctx.y_set(v).unwrap().is_empty())
                    .count();
                assert_eq!(j1_with_nonempty_y_count(&ctx), direct);
                assert!(j1_with_nonempty_y_count(&ctx) <= j1.len());
            }
        }
        assert!(saw_j1);
    }
}
