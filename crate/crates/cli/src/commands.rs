//! Subcommand bodies, independent of argument parsing.

use std::collections::HashSet;

use anyhow::{bail, Result};
use idomlab::bounds::{bound_value, BoundName, BoundParams};
use idomlab::canon::{canonical_form, MAX_CANONICAL_VERTICES};
use idomlab::discharging::{
    certify_nonpositive_charges, count_k_k1_k_subgraphs, expected_total_charge,
    is_balanced_complete_bipartite, j1_with_nonempty_y_count, structural_findings, Certificate,
    Finding,
};
use idomlab::enumerate::{connected_regular_graphs, regular_guard};
use idomlab::solvers::{
    enumerate_minimum_ids, exact_domination_number, exact_independent_domination_number,
};
use idomlab::{families, Graph, Rational, VertexSet};
use serde::Serialize;

use crate::campaign::par_map;

fn members(s: VertexSet) -> String {
    s.iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SolveRow {
    pub graph6: String,
    pub n: usize,
    pub gamma: usize,
    pub i: usize,
    pub gamma_witness: String,
    pub i_witness: String,
}

pub fn solve(graphs: &[Graph], jobs: Option<usize>) -> Result<Vec<SolveRow>> {
    par_map(graphs, jobs, |g| {
        let gamma = exact_domination_number(g);
        let i = exact_independent_domination_number(g);
        SolveRow {
            graph6: g.to_graph6(),
            n: g.n(),
            gamma: gamma.value,
            i: i.value,
            gamma_witness: members(gamma.witness),
            i_witness: members(i.witness),
        }
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdsRecord {
    pub graph6: String,
    pub i: usize,
    pub index: usize,
    pub set: String,
}

/// Every minimum independent dominating set, in [`VertexSet`] order.
pub fn ids_enum(graphs: &[Graph], jobs: Option<usize>) -> Result<Vec<IdsRecord>> {
    let per_graph = par_map(graphs, jobs, |g| -> Result<Vec<IdsRecord>> {
        let g6 = g.to_graph6();
        Ok(enumerate_minimum_ids(g)?
            .into_iter()
            .enumerate()
            .map(|(index, s)| IdsRecord {
                graph6: g6.clone(),
                i: s.len(),
                index,
                set: members(s),
            })
            .collect())
    })?;
    let mut out = Vec::new();
    for rows in per_graph {
        out.extend(rows?);
    }
    Ok(out)
}

#[derive(Debug, Clone, Serialize)]
pub struct DischargeOutput {
    pub graph6: String,
    pub n: usize,
    pub k: usize,
    pub k_k1_k_subgraphs: usize,
    pub j1_with_nonempty_y: usize,
    pub expected_total: Rational,
    #[serde(flatten)]
    pub certificate: Certificate,
    pub findings: Vec<Finding>,
}

pub fn discharge(g: &Graph) -> Result<DischargeOutput> {
    let certificate = certify_nonpositive_charges(g)?;
    let ctx = &certificate.context;
    Ok(DischargeOutput {
        graph6: g.to_graph6(),
        n: g.n(),
        k: ctx.k,
        k_k1_k_subgraphs: count_k_k1_k_subgraphs(ctx),
        j1_with_nonempty_y: j1_with_nonempty_y_count(ctx),
        expected_total: expected_total_charge(ctx),
        findings: structural_findings(ctx),
        certificate,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TightEntry {
    pub n: usize,
    /// Whether every connected `k`-regular graph on `n` vertices was examined.
    pub exhaustive: bool,
    pub examined: usize,
    pub target_i: usize,
    pub tight: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TightSearch {
    pub k: usize,
    pub entries: Vec<TightEntry>,
}

impl TightSearch {
    pub fn all_tight(&self) -> impl Iterator<Item = &str> {
        self.entries
            .iter()
            .flat_map(|e| e.tight.iter().map(String::as_str))
    }
}

/// Named family members that are connected `k`-regular on `n` vertices.
fn family_members(k: usize, n: usize) -> Vec<Graph> {
    let mut out = Vec::new();
    if k == 3 && n.is_multiple_of(2) {
        out.extend(families::prism(n / 2).ok());
    }
    if k.is_multiple_of(2) {
        let t = k / 2;
        if n.is_multiple_of(t) && n / t >= 3 {
            out.extend(families::cycle_blowup(n / t, t).ok());
        }
    }
    out
}

/// Connected `k`-regular graphs other than `K_{k,k}` with
/// `i = (k-1)n/(2k-1)`, for each `n` in range where that is an integer.
/// Exhaustive where enumeration is within its guard; otherwise named family
/// members plus `samples` seeded random graphs.
pub fn search_tight(
    k: usize,
    n_min: usize,
    n_max: usize,
    samples: usize,
    seed: u64,
    jobs: Option<usize>,
) -> Result<TightSearch> {
    if k < 3 {
        bail!("search-tight needs k >= 3");
    }
    let mut entries = Vec::new();
    for n in n_min..=n_max {
        if !((k - 1) * n).is_multiple_of(2 * k - 1) {
            continue;
        }
        // no k-regular graph exists on n vertices: an empty, complete answer
        let realizable = k < n && (n * k).is_multiple_of(2);
        let exhaustive = !realizable || n <= regular_guard(k);
        let mut candidates: Vec<Graph> = if !realizable {
            Vec::new()
        } else if exhaustive {
            connected_regular_graphs(k, n)?.collect()
        } else {
            let mut c = family_members(k, n);
            for s in 0..samples as u64 {
                let g = families::random_regular(n, k, seed.wrapping_add(s))?;
                if g.is_connected() {
                    c.push(g);
                }
            }
            c
        };
        candidates.retain(|g| !is_balanced_complete_bipartite(g));
        let mut seen = HashSet::new();
        let mut unique = Vec::new();
        for g in candidates {
            let key = if n <= MAX_CANONICAL_VERTICES {
                canonical_form(&g)?.as_graph6().to_string()
            } else {
                g.to_graph6()
            };
            if seen.insert(key) {
                unique.push(g);
            }
        }
        let target = bound_value(BoundName::ThmKreg, BoundParams::k(k).with_n(n))?;
        let target_i = target.numer() as usize;
        debug_assert!(target.is_integer());
        let values = par_map(&unique, jobs, |g| {
            exact_independent_domination_number(g).value
        })?;
        let tight = unique
            .iter()
            .zip(&values)
            .filter(|(_, &i)| Rational::from(i) == target)
            .map(|(g, _)| g.to_graph6())
            .collect();
        entries.push(TightEntry {
            n,
            exhaustive,
            examined: unique.len(),
            target_i,
            tight,
        });
    }
    Ok(TightSearch { k, entries })
}
