use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use idomlab::bounds::BoundName;
use idomlab::Graph;
use idomlab_cli::campaign::{run_campaign, EXIT_CLEAN, EXIT_USAGE};
use idomlab_cli::commands;
use idomlab_cli::corpus::{Corpus, CorpusArgs};
use idomlab_cli::output::{write_campaign, write_csv_records, write_json, Format};

#[derive(Parser)]
#[command(
    name = "idomlab",
    version,
    about = "Exact independent domination checks on small graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct CorpusOpts {
    /// Named graphs (`prism:5`, `blowup:7,2`, ... separated by `;`) or one of
    /// `regular`, `maxdeg`, `random`
    #[arg(long)]
    family: Option<String>,
    /// Regularity, or maximum degree for `maxdeg`
    #[arg(long)]
    k: Option<usize>,
    /// Smallest order
    #[arg(long)]
    n: Option<usize>,
    /// Largest order (defaults to --n)
    #[arg(long = "n-max")]
    n_max: Option<usize>,
    /// Random graphs per order for `random`
    #[arg(long, default_value_t = 10)]
    samples: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// graph6 file, one graph per line
    #[arg(long)]
    input: Option<PathBuf>,
}

impl CorpusOpts {
    fn corpus(&self) -> Result<Corpus> {
        Corpus::from_args(&CorpusArgs {
            family: self.family.clone(),
            k: self.k,
            n: self.n,
            n_max: self.n_max,
            samples: self.samples,
            seed: self.seed,
            input: self.input.clone(),
        })
    }
}

#[derive(Args, Clone)]
struct OutputOpts {
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
    /// Output file (standard output if absent)
    #[arg(long)]
    out: Option<PathBuf>,
    /// Worker threads (all logical cores if unset)
    #[arg(long, env = "IDOMLAB_JOBS")]
    jobs: Option<usize>,
}

impl OutputOpts {
    fn writer(&self) -> Result<Box<dyn Write>> {
        Ok(match &self.out {
            Some(path) => Box::new(BufWriter::new(
                File::create(path).with_context(|| format!("cannot create {}", path.display()))?,
            )),
            None => Box::new(BufWriter::new(io::stdout().lock())),
        })
    }
}

#[derive(Subcommand)]
enum Command {
    /// Print graphs as graph6, one per line
    Gen {
        #[command(flatten)]
        corpus: CorpusOpts,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Domination and independent domination numbers with witnesses
    Solve {
        #[command(flatten)]
        corpus: CorpusOpts,
        #[command(flatten)]
        output: OutputOpts,
    },
    /// Check registered bounds over a corpus
    Verify {
        #[command(flatten)]
        corpus: CorpusOpts,
        /// Comma-separated bound names, or `all` (default: proven bounds)
        #[arg(long, value_delimiter = ',')]
        bounds: Vec<String>,
        #[command(flatten)]
        output: OutputOpts,
    },
    /// Discharging certificate for a connected k-regular graph, k >= 4
    Discharge {
        /// graph6 string
        graph: Option<String>,
        #[command(flatten)]
        corpus: CorpusOpts,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Connected k-regular graphs meeting i = (k-1)n/(2k-1)
    SearchTight {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: usize,
        #[arg(long = "n-max")]
        n_max: Option<usize>,
        /// Random graphs per order beyond the enumeration guard
        #[arg(long, default_value_t = 50)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        output: OutputOpts,
    },
    /// All minimum independent dominating sets
    IdsEnum {
        #[command(flatten)]
        corpus: CorpusOpts,
        #[command(flatten)]
        output: OutputOpts,
    },
}

fn parse_bounds(names: &[String]) -> Result<Vec<BoundName>> {
    if names.is_empty() {
        return Ok(BoundName::proven());
    }
    if names.len() == 1 && names[0] == "all" {
        return Ok(BoundName::ALL.to_vec());
    }
    Ok(names.iter().map(|s| s.parse()).collect::<Result<_, _>>()?)
}

fn open(out: &Option<PathBuf>) -> Result<Box<dyn Write>> {
    OutputOpts {
        format: Format::Json,
        out: out.clone(),
        jobs: None,
    }
    .writer()
}

fn run(cli: Cli) -> Result<i32> {
    match cli.command {
        Command::Gen { corpus, out } => {
            let graphs = corpus.corpus()?.graphs()?;
            let mut w = open(&out)?;
            for g in &graphs {
                writeln!(w, "{}", g.to_graph6())?;
            }
            w.flush()?;
            Ok(EXIT_CLEAN)
        }
        Command::Solve { corpus, output } => {
            let graphs = corpus.corpus()?.graphs()?;
            let rows = commands::solve(&graphs, output.jobs)?;
            let mut w = output.writer()?;
            match output.format {
                Format::Csv => write_csv_records(&rows, &mut w)?,
                Format::Json => write_json(&rows, &mut w)?,
            }
            w.flush()?;
            Ok(EXIT_CLEAN)
        }
        Command::Verify {
            corpus,
            bounds,
            output,
        } => {
            let bounds = parse_bounds(&bounds)?;
            let corpus = corpus.corpus()?;
            let start = Instant::now();
            let graphs = corpus.graphs()?;
            let report = run_campaign(corpus.to_string(), &graphs, &bounds, output.jobs)?;
            let mut w = output.writer()?;
            write_campaign(&report, output.format, &mut w)?;
            w.flush()?;
            for t in &report.summary {
                eprintln!(
                    "{}: holds {}, tight {}, violated {}, not applicable {}",
                    t.bound, t.holds, t.tight, t.violated, t.not_applicable
                );
            }
            for c in &report.counterexamples {
                let what = match c.kind {
                    idomlab::bounds::BoundKind::Proven => "VIOLATION",
                    idomlab::bounds::BoundKind::Candidate => "DISCOVERY",
                };
                eprintln!("{what} {} {}", c.bound, c.graph6);
            }
            eprintln!("{} graphs in {:.2?}", report.graphs, start.elapsed());
            Ok(report.exit_code())
        }
        Command::Discharge { graph, corpus, out } => {
            let graphs: Vec<Graph> = match graph {
                Some(g6) => {
                    if corpus.family.is_some() || corpus.input.is_some() {
                        bail!("give either a graph6 argument or --family/--input");
                    }
                    vec![Graph::from_graph6(&g6)
                        .with_context(|| format!("invalid graph6 `{g6}`"))?]
                }
                None => corpus.corpus()?.graphs()?,
            };
            let reports = graphs
                .iter()
                .map(commands::discharge)
                .collect::<Result<Vec<_>>>()?;
            let mut w = open(&out)?;
            match reports.as_slice() {
                [single] => write_json(single, &mut w)?,
                many => write_json(many, &mut w)?,
            }
            w.flush()?;
            Ok(EXIT_CLEAN)
        }
        Command::SearchTight {
            k,
            n,
            n_max,
            samples,
            seed,
            output,
        } => {
            let search =
                commands::search_tight(k, n, n_max.unwrap_or(n), samples, seed, output.jobs)?;
            let mut w = output.writer()?;
            match output.format {
                Format::Csv => {
                    #[derive(serde::Serialize)]
                    struct Row<'a> {
                        k: usize,
                        n: usize,
                        exhaustive: bool,
                        i: usize,
                        graph6: &'a str,
                    }
                    let rows: Vec<Row> = search
                        .entries
                        .iter()
                        .flat_map(|e| {
                            e.tight.iter().map(move |g6| Row {
                                k,
                                n: e.n,
                                exhaustive: e.exhaustive,
                                i: e.target_i,
                                graph6: g6,
                            })
                        })
                        .collect();
                    write_csv_records(&rows, &mut w)?;
                }
                Format::Json => write_json(&search, &mut w)?,
            }
            w.flush()?;
            for e in &search.entries {
                eprintln!(
                    "n = {}: {} examined ({}), {} tight",
                    e.n,
                    e.examined,
                    if e.exhaustive {
                        "exhaustive"
                    } else {
                        "sampled"
                    },
                    e.tight.len()
                );
            }
            Ok(EXIT_CLEAN)
        }
        Command::IdsEnum { corpus, output } => {
            let graphs = corpus.corpus()?.graphs()?;
            let rows = commands::ids_enum(&graphs, output.jobs)?;
            let mut w = output.writer()?;
            match output.format {
                Format::Csv => write_csv_records(&rows, &mut w)?,
                Format::Json => write_json(&rows, &mut w)?,
            }
            w.flush()?;
            Ok(EXIT_CLEAN)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            EXIT_USAGE
        }
    };
    ExitCode::from(code as u8)
}
