//! CSV and JSON writers.

use std::io::Write;

use anyhow::Result;
use serde::Serialize;

use crate::campaign::CampaignReport;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum Format {
    #[default]
    Csv,
    Json,
}

#[derive(Serialize)]
struct VerdictRecord<'a> {
    graph6: &'a str,
    n: usize,
    regularity: Option<usize>,
    gamma: usize,
    i: usize,
    bound: &'a str,
    lhs: Option<String>,
    rhs: Option<String>,
    status: &'a str,
}

/// One CSV record per (graph, bound).
pub fn write_campaign_csv(report: &CampaignReport, out: impl Write) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    for row in &report.rows {
        for v in &row.verdicts {
            w.serialize(VerdictRecord {
                graph6: &row.graph6,
                n: row.n,
                regularity: row.regularity,
                gamma: row.gamma,
                i: row.i,
                bound: v.bound.as_str(),
                lhs: v.lhs.map(|r| r.to_string()),
                rhs: v.rhs.map(|r| r.to_string()),
                status: v.status.as_str(),
            })?;
        }
    }
    w.flush()?;
    Ok(())
}

pub fn write_json<T: Serialize + ?Sized>(value: &T, mut out: impl Write) -> Result<()> {
    serde_json::to_writer_pretty(&mut out, value)?;
    writeln!(out)?;
    Ok(())
}

/// Records as CSV with a header row; nothing at all when `records` is empty.
pub fn write_csv_records<T: Serialize>(records: &[T], out: impl Write) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    for r in records {
        w.serialize(r)?;
    }
    w.flush()?;
    Ok(())
}

pub fn write_campaign(report: &CampaignReport, format: Format, out: impl Write) -> Result<()> {
    match format {
        Format::Csv => write_campaign_csv(report, out),
        Format::Json => write_json(report, out),
    }
}
