//! `soltes`: build H-graphs, compute Wiener indices and deletion spectra,
//! reproduce the published tables and sweep for new parameter tuples.

mod output;

use std::fs;
use std::io::Write;
use std::ops::RangeInclusive;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use soltes_core::reproduce::{self, RowReport};
use soltes_core::{
    delta_spectrum, delta_spectrum_orbit, edgelist, search, Attach, Graph, HGraph, NamedFamily,
    Selector, SweepConfig, DEFAULT_CAP,
};

#[derive(Parser, Debug)]
#[command(
    name = "soltes",
    version,
    about = "Wiener index differences under vertex deletion"
)]
struct RunConfig {
    /// Worker threads for distance computations (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Write an H-graph as an edge list with `c` lines for cycle vertices.
    Construct {
        /// prop2:m=N | prop3:k=N | prop4:k=N | example497 | h:n=..,k=..,f=..
        selector: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Print the Wiener index.
    Wiener {
        #[command(flatten)]
        input: InputArgs,
    },
    /// Print the multiset of W(G) - W(G - v) as `m,count` rows.
    Spectrum {
        #[command(flatten)]
        input: InputArgs,
        /// Use the H-graph symmetry (family input only).
        #[arg(long)]
        orbit: bool,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Check closed forms and published values by brute force.
    Verify {
        /// Every fixture row plus the corollary checks.
        #[arg(long, conflicts_with = "selectors")]
        all: bool,
        selectors: Vec<String>,
        /// Expected-values CSV (defaults to the bundled one).
        #[arg(long)]
        expected: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_CAP, value_parser = clap::value_parser!(usize))]
        cap: usize,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Sweep (n, k, n0) for tuples with Delta_v = m on the cycle vertices.
    Search {
        #[arg(long, allow_hyphen_values = true)]
        m: i64,
        /// Range such as `3..=130`.
        #[arg(long, value_parser = parse_range)]
        n: RangeInclusive<usize>,
        #[arg(long, value_parser = parse_range)]
        k: RangeInclusive<usize>,
        #[arg(long, value_parser = parse_range)]
        n0: RangeInclusive<usize>,
        /// Attachment counts to try, e.g. `1,full`.
        #[arg(long, value_delimiter = ',', default_value = "1,full")]
        l: Vec<Attach>,
        /// Only print hits with a realizing gadget.
        #[arg(long)]
        realized_only: bool,
        /// Brute-force verify every realized hit.
        #[arg(long)]
        verify: bool,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct InputArgs {
    /// Named family or explicit H selector.
    #[arg(short, long)]
    family: Option<String>,
    /// Edge-list file.
    #[arg(short, long)]
    input: Option<PathBuf>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Format {
    Csv,
    Table,
}

enum Source {
    Family(HGraph),
    File(Graph),
}

impl Source {
    fn graph(&self) -> &Graph {
        match self {
            Source::Family(h) => &h.graph,
            Source::File(g) => g,
        }
    }
}

fn parse_range(s: &str) -> Result<RangeInclusive<usize>, String> {
    let num = |t: &str| {
        t.trim()
            .parse::<usize>()
            .map_err(|_| format!("bad range bound `{t}`"))
    };
    let range = if let Some((a, b)) = s.split_once("..=") {
        num(a)?..=num(b)?
    } else if let Some((a, b)) = s.split_once("..") {
        let b = num(b)?;
        if b == 0 {
            return Err(format!("empty range `{s}`"));
        }
        num(a)?..=b - 1
    } else {
        let a = num(s)?;
        a..=a
    };
    if range.is_empty() {
        return Err(format!("empty range `{s}`"));
    }
    Ok(range)
}

fn load(input: &InputArgs) -> Result<Source> {
    match (&input.family, &input.input) {
        (Some(sel), None) => {
            let selector: Selector = sel.parse()?;
            Ok(Source::Family(selector.build()?))
        }
        (None, Some(path)) => {
            let text =
                fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
            let parsed =
                edgelist::parse(&text).with_context(|| format!("parsing {}", path.display()))?;
            Ok(Source::File(parsed.graph))
        }
        _ => bail!("give exactly one of --family or --input"),
    }
}

fn emit(output: &Option<PathBuf>, text: &str) -> Result<()> {
    match output {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes())?;
            out.flush()?;
            Ok(())
        }
    }
}

fn verify_selector(text: &str, rows: &[reproduce::ExpectedRow], cap: usize) -> Result<RowReport> {
    let selector: Selector = text.parse()?;
    if let Some(row) = rows.iter().find(|r| r.selector == selector) {
        return Ok(reproduce::check_row(row, cap));
    }
    Ok(match selector {
        Selector::Named(NamedFamily::Prop2Matching { m }) => reproduce::regular_corollary(m, cap),
        Selector::Named(NamedFamily::Prop2Edges { m: 0, s }) => {
            reproduce::edge_insertion_corollary(s, cap)
        }
        other => reproduce::instance_row(&other, cap),
    })
}

fn run(config: RunConfig) -> Result<ExitCode> {
    if let Some(threads) = config.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads.max(1))
            .build_global()
            .context("configuring thread pool")?;
    }
    match config.command {
        Command::Construct { selector, output } => {
            let selector: Selector = selector.parse()?;
            let h = selector.build()?;
            let text = edgelist::write(
                &h.graph,
                &[selector.to_string(), h.describe()],
                &h.cycle_vertices().collect::<Vec<_>>(),
            );
            emit(&output, &text)?;
        }
        Command::Wiener { input } => {
            let source = load(&input)?;
            println!("{}", source.graph().wiener()?);
        }
        Command::Spectrum {
            input,
            orbit,
            format,
            output,
        } => {
            let source = load(&input)?;
            let spectrum = match (&source, orbit) {
                (Source::Family(h), true) => delta_spectrum_orbit(h)?,
                (Source::File(_), true) => {
                    bail!("--orbit needs construction metadata; use --family instead of --input")
                }
                (source, false) => delta_spectrum(source.graph())?,
            };
            let text = match format {
                Format::Csv => output::spectrum_csv(&spectrum),
                Format::Table => output::spectrum_table(&spectrum),
            };
            emit(&output, &text)?;
        }
        Command::Verify {
            all,
            selectors,
            expected,
            cap,
            format,
            output,
        } => {
            if cap == 0 {
                bail!("--cap must be at least 1");
            }
            let fixture = match &expected {
                Some(path) => fs::read_to_string(path)
                    .with_context(|| format!("reading {}", path.display()))?,
                None => reproduce::REFERENCE_VALUES.to_string(),
            };
            let rows = reproduce::parse_expected(&fixture)?;
            let reports = if all || selectors.is_empty() {
                reproduce::verify_all(&rows, cap)
            } else {
                selectors
                    .iter()
                    .map(|s| verify_selector(s, &rows, cap))
                    .collect::<Result<Vec<_>>>()?
            };
            let text = match format {
                Format::Csv => output::reports_csv(&reports),
                Format::Table => output::reports_table(&reports),
            };
            emit(&output, &text)?;
            if reports.iter().any(|r| !r.passed()) {
                return Ok(ExitCode::FAILURE);
            }
        }
        Command::Search {
            m,
            n,
            k,
            n0,
            l,
            realized_only,
            verify,
            cap,
            output,
        } => {
            let outcome = search::sweep(&SweepConfig {
                m,
                n,
                k,
                n0,
                attach: l,
            });
            let hits: Vec<_> = outcome
                .hits
                .into_iter()
                .filter(|h| !realized_only || h.realization.is_some())
                .collect();
            let reports = if verify {
                Some(
                    hits.iter()
                        .map(|h| match h.realization {
                            Some(_) if h.order() <= cap => search::verify_hit(h, cap).map(Some),
                            _ => Ok(None),
                        })
                        .collect::<Result<Vec<_>, _>>()?,
                )
            } else {
                None
            };
            emit(&output, &output::hits_csv(&hits, reports.as_deref()))?;
            if reports.is_some_and(|r| r.iter().flatten().any(|r| !r.passed())) {
                return Ok(ExitCode::FAILURE);
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let config = RunConfig::parse();
    match run(config) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges() {
        assert_eq!(parse_range("3..=130"), Ok(3..=130));
        assert_eq!(parse_range("3..10"), Ok(3..=9));
        assert_eq!(parse_range("7"), Ok(7..=7));
        assert!(parse_range("9..=3").is_err());
        assert!(parse_range("a..=3").is_err());
        assert!(parse_range("3..0").is_err());
    }

    #[test]
    fn cli_shape() {
        use clap::CommandFactory;
        RunConfig::command().debug_assert();
    }
}
