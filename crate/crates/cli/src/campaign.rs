//! Parallel verification campaigns with order-preserving merge.

use anyhow::{Context, Result};
use idomlab::bounds::{check_bounds, BoundKind, BoundName, BoundVerdict, Status};
use idomlab::solvers::{exact_domination_number, exact_independent_domination_number};
use idomlab::{Graph, Rational};
use rayon::prelude::*;
use serde::Serialize;

/// Process exit codes.
pub const EXIT_CLEAN: i32 = 0;
pub const EXIT_PROVEN_VIOLATION: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_DISCOVERY: i32 = 3;

/// Runs `f` over `items` on `jobs` workers (all logical cores if `None`),
/// returning results in input order.
pub fn par_map<T, R, F>(items: &[T], jobs: Option<usize>, f: F) -> Result<Vec<R>>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(j) = jobs {
        builder = builder.num_threads(j.max(1));
    }
    let pool = builder.build().context("cannot start worker pool")?;
    Ok(pool.install(|| items.par_iter().map(&f).collect()))
}

#[derive(Debug, Clone, Serialize)]
pub struct GraphRow {
    pub graph6: String,
    pub n: usize,
    pub regularity: Option<usize>,
    pub max_degree: usize,
    pub gamma: usize,
    pub i: usize,
    pub verdicts: Vec<BoundVerdict>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct BoundTally {
    pub bound: String,
    pub holds: usize,
    pub tight: usize,
    pub violated: usize,
    pub not_applicable: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub graph6: String,
    pub bound: BoundName,
    pub kind: BoundKind,
    pub lhs: Option<Rational>,
    pub rhs: Option<Rational>,
}

#[derive(Debug, Clone, Serialize)]
pub struct CampaignReport {
    pub corpus: String,
    pub bounds: Vec<BoundName>,
    pub graphs: usize,
    pub rows: Vec<GraphRow>,
    pub summary: Vec<BoundTally>,
    /// Proven-bound violations followed by candidate discoveries, in corpus order.
    pub counterexamples: Vec<Counterexample>,
}

impl CampaignReport {
    pub fn proven_violations(&self) -> impl Iterator<Item = &Counterexample> {
        self.counterexamples
            .iter()
            .filter(|c| c.kind == BoundKind::Proven)
    }

    pub fn discoveries(&self) -> impl Iterator<Item = &Counterexample> {
        self.counterexamples
            .iter()
            .filter(|c| c.kind == BoundKind::Candidate)
    }

    /// A proven violation outranks a discovery.
    pub fn exit_code(&self) -> i32 {
        if self.proven_violations().next().is_some() {
            EXIT_PROVEN_VIOLATION
        } else if self.discoveries().next().is_some() {
            EXIT_DISCOVERY
        } else {
            EXIT_CLEAN
        }
    }

    pub fn tally(&self, bound: BoundName) -> Option<&BoundTally> {
        self.summary.iter().find(|t| t.bound == bound.as_str())
    }

    /// Graph6 strings with the given status under `bound`.
    pub fn with_status(&self, bound: BoundName, status: Status) -> Vec<&str> {
        self.rows
            .iter()
            .filter(|r| {
                r.verdicts
                    .iter()
                    .any(|v| v.bound == bound && v.status == status)
            })
            .map(|r| r.graph6.as_str())
            .collect()
    }
}

pub fn evaluate(g: &Graph, bounds: &[BoundName]) -> GraphRow {
    let gamma = exact_domination_number(g).value;
    let i = exact_independent_domination_number(g).value;
    GraphRow {
        graph6: g.to_graph6(),
        n: g.n(),
        regularity: g.regularity(),
        max_degree: g.max_degree(),
        gamma,
        i,
        verdicts: check_bounds(g, i, gamma, bounds),
    }
}

pub fn run_campaign(
    corpus: impl Into<String>,
    graphs: &[Graph],
    bounds: &[BoundName],
    jobs: Option<usize>,
) -> Result<CampaignReport> {
    let rows = par_map(graphs, jobs, |g| evaluate(g, bounds))?;

    let mut summary: Vec<BoundTally> = bounds
        .iter()
        .map(|b| BoundTally {
            bound: b.as_str().to_string(),
            ..BoundTally::default()
        })
        .collect();
    let mut proven = Vec::new();
    let mut candidate = Vec::new();
    for row in &rows {
        for (v, tally) in row.verdicts.iter().zip(summary.iter_mut()) {
            match v.status {
                Status::Holds => tally.holds += 1,
                Status::Tight => tally.tight += 1,
                Status::Violated => tally.violated += 1,
                Status::NotApplicable => tally.not_applicable += 1,
            }
            if v.status == Status::Violated {
                let c = Counterexample {
                    graph6: v.graph6.clone(),
                    bound: v.bound,
                    kind: v.kind,
                    lhs: v.lhs,
                    rhs: v.rhs,
                };
                match v.kind {
                    BoundKind::Proven => proven.push(c),
                    BoundKind::Candidate => candidate.push(c),
                }
            }
        }
    }
    proven.extend(candidate);
    Ok(CampaignReport {
        corpus: corpus.into(),
        bounds: bounds.to_vec(),
        graphs: rows.len(),
        rows,
        summary,
        counterexamples: proven,
    })
}
