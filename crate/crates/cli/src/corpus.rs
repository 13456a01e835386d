//! Graph sources: named family members, exhaustive enumerations, seeded
//! random samples and graph6 files.

use std::fmt;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use idomlab::enumerate::{bounded_degree_graphs, connected_regular_graphs, DegreeFilter};
use idomlab::{families, Graph};

/// A single named graph, written `name:args`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilySpec {
    Prism(usize),
    Blowup(usize, usize),
    Pendant(usize, usize),
    Extremal(usize),
    CompleteBipartite(usize, usize),
    Complete(usize),
    Cycle(usize),
    Fixture,
}

fn numbers(args: &str, want: usize, text: &str) -> Result<Vec<usize>> {
    let values: Vec<usize> = args
        .split(',')
        .map(|a| a.trim().parse::<usize>())
        .collect::<std::result::Result<_, _>>()
        .with_context(|| format!("family `{text}`: arguments must be non-negative integers"))?;
    if values.len() != want {
        bail!(
            "family `{text}` takes {want} argument(s), got {}",
            values.len()
        );
    }
    Ok(values)
}

impl FamilySpec {
    pub fn parse(text: &str) -> Result<Self> {
        let (name, args) = text.split_once(':').unwrap_or((text, ""));
        Ok(match name.trim() {
            "prism" => FamilySpec::Prism(numbers(args, 1, text)?[0]),
            "blowup" => {
                let v = numbers(args, 2, text)?;
                FamilySpec::Blowup(v[0], v[1])
            }
            "pendant" => {
                let v = numbers(args, 2, text)?;
                FamilySpec::Pendant(v[0], v[1])
            }
            "extremal" => FamilySpec::Extremal(numbers(args, 1, text)?[0]),
            "kbip" => {
                let v = numbers(args, 2, text)?;
                FamilySpec::CompleteBipartite(v[0], v[1])
            }
            "complete" => FamilySpec::Complete(numbers(args, 1, text)?[0]),
            "cycle" => FamilySpec::Cycle(numbers(args, 1, text)?[0]),
            "fixture" if args.is_empty() => FamilySpec::Fixture,
            _ => bail!(
                "unknown family `{text}` (expected prism:N, blowup:N,T, pendant:Q,P, extremal:D, \
                 kbip:A,B, complete:N, cycle:N, fixture, or one of regular, maxdeg, random)"
            ),
        })
    }

    pub fn build(&self) -> Result<Graph> {
        Ok(match *self {
            FamilySpec::Prism(n) => families::prism(n)?,
            FamilySpec::Blowup(n, t) => families::cycle_blowup(n, t)?,
            FamilySpec::Pendant(q, p) => families::pendant_clique(q, p)?,
            FamilySpec::Extremal(d) => families::conjectured_extremal(d)?,
            FamilySpec::CompleteBipartite(a, b) => families::complete_bipartite(a, b)?,
            FamilySpec::Complete(n) => families::complete(n)?,
            FamilySpec::Cycle(n) => families::cycle(n)?,
            FamilySpec::Fixture => families::fixture_c4_three_pendant_pairs(),
        })
    }
}

/// Where a campaign's graphs come from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Corpus {
    Named(Vec<FamilySpec>),
    /// Connected `k`-regular graphs for every feasible `n` in range.
    Regular {
        k: usize,
        n_min: usize,
        n_max: usize,
    },
    /// Isolate-free graphs with maximum degree at most `max_degree`.
    BoundedDegree {
        max_degree: usize,
        n_min: usize,
        n_max: usize,
    },
    /// `samples` seeded `k`-regular graphs per `n`, connected ones only.
    Random {
        k: usize,
        n_min: usize,
        n_max: usize,
        samples: usize,
        seed: u64,
    },
    File(PathBuf),
}

/// Corpus-selection flags shared by several subcommands.
#[derive(Debug, Clone, Default)]
pub struct CorpusArgs {
    pub family: Option<String>,
    pub k: Option<usize>,
    pub n: Option<usize>,
    pub n_max: Option<usize>,
    pub samples: usize,
    pub seed: u64,
    pub input: Option<PathBuf>,
}

impl Corpus {
    pub fn from_args(args: &CorpusArgs) -> Result<Self> {
        match (&args.family, &args.input) {
            (Some(_), Some(_)) => bail!("--family and --input are mutually exclusive"),
            (None, None) => bail!("one of --family or --input is required"),
            (None, Some(path)) => Ok(Corpus::File(path.clone())),
            (Some(family), None) => {
                let range = || -> Result<(usize, usize)> {
                    let n_min = args.n.unwrap_or(1);
                    let n_max = args.n_max.unwrap_or(n_min);
                    if args.n.is_none() && args.n_max.is_none() {
                        bail!("family `{family}` needs --n and/or --n-max");
                    }
                    if n_min > n_max {
                        bail!("--n ({n_min}) exceeds --n-max ({n_max})");
                    }
                    Ok((n_min, n_max))
                };
                let k = || {
                    args.k
                        .with_context(|| format!("family `{family}` needs --k"))
                };
                match family.as_str() {
                    "regular" => {
                        let (n_min, n_max) = range()?;
                        Ok(Corpus::Regular {
                            k: k()?,
                            n_min,
                            n_max,
                        })
                    }
                    "maxdeg" => {
                        let (n_min, n_max) = range()?;
                        Ok(Corpus::BoundedDegree {
                            max_degree: k()?,
                            n_min,
                            n_max,
                        })
                    }
                    "random" => {
                        let (n_min, n_max) = range()?;
                        Ok(Corpus::Random {
                            k: k()?,
                            n_min,
                            n_max,
                            samples: args.samples,
                            seed: args.seed,
                        })
                    }
                    specs => Ok(Corpus::Named(
                        specs
                            .split(';')
                            .map(FamilySpec::parse)
                            .collect::<Result<_>>()?,
                    )),
                }
            }
        }
    }

    /// Materializes the corpus in a deterministic order.
    pub fn graphs(&self) -> Result<Vec<Graph>> {
        match self {
            Corpus::Named(specs) => specs.iter().map(FamilySpec::build).collect(),
            &Corpus::Regular { k, n_min, n_max } => {
                let mut out = Vec::new();
                for n in n_min..=n_max {
                    if k >= n || n * k % 2 == 1 {
                        continue;
                    }
                    out.extend(connected_regular_graphs(k, n)?);
                }
                Ok(out)
            }
            &Corpus::BoundedDegree {
                max_degree,
                n_min,
                n_max,
            } => {
                let filter = DegreeFilter {
                    isolate_free: true,
                    connected_only: false,
                };
                let mut out = Vec::new();
                for n in n_min.max(1)..=n_max {
                    out.extend(bounded_degree_graphs(n, max_degree, filter)?);
                }
                Ok(out)
            }
            &Corpus::Random {
                k,
                n_min,
                n_max,
                samples,
                seed,
            } => {
                let mut out = Vec::new();
                for n in n_min..=n_max {
                    if k >= n || n * k % 2 == 1 {
                        continue;
                    }
                    for s in 0..samples as u64 {
                        let g = families::random_regular(n, k, seed.wrapping_add(s))?;
                        if g.is_connected() {
                            out.push(g);
                        }
                    }
                }
                Ok(out)
            }
            Corpus::File(path) => read_graph6_file(path),
        }
    }
}

impl fmt::Display for Corpus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Corpus::Named(specs) => {
                let names: Vec<String> = specs
                    .iter()
                    .map(|s| s.build().ok().and_then(|g| g.label().map(str::to_string)).unwrap_or_else(|| format!("{s:?}")))
                    .collect();
                write!(f, "named: {}", names.join(", "))
            }
            Corpus::Regular { k, n_min, n_max } => {
                write!(f, "connected {k}-regular, n in {n_min}..={n_max}")
            }
            Corpus::BoundedDegree { max_degree, n_min, n_max } => {
                write!(f, "isolate-free, max degree <= {max_degree}, n in {n_min}..={n_max}")
            }
            Corpus::Random { k, n_min, n_max, samples, seed } => write!(
                f,
                "random connected {k}-regular, n in {n_min}..={n_max}, {samples} samples per n, seed {seed}"
            ),
            Corpus::File(path) => write!(f, "file: {}", path.display()),
        }
    }
}

/// Parses graph6 text, one graph per nonempty line.
pub fn parse_graph6_lines(text: &str) -> Result<Vec<Graph>> {
    text.lines()
        .enumerate()
        .filter(|(_, line)| !line.trim().is_empty())
        .map(|(i, line)| {
            Graph::from_graph6(line)
                .with_context(|| format!("line {}: invalid graph6 `{}`", i + 1, line.trim()))
        })
        .collect()
}

pub fn read_graph6_file(path: &Path) -> Result<Vec<Graph>> {
    let text =
        std::fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    parse_graph6_lines(&text).with_context(|| format!("in {}", path.display()))
}
