//! Command line front end.
//!
//! Exit codes: 0 on success, 1 on validation/input errors, 2 when a
//! verification check fails. Outputs are deterministic for a fixed seed.

use std::collections::BTreeSet;
use std::ffi::OsString;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use relhom::complex::PairDescription;
use relhom::error::Error;
use relhom::generators;
use relhom::geometry::build_net;
use relhom::group::{bounded_cohomology, relative_complex, FiniteGroup};
use relhom::measure::{theta, MeasureChain};
use relhom::rational::{format_rational, parse_rational, Rational};
use relhom::suite::{self, DEFAULT_SEED};
use relhom::{
    duality_certificate, norm_comparison_report, ChainComplexPair, ModelSpace, StraightChain,
};

#[derive(Parser)]
#[command(
    name = "relhom",
    about = "Exact rational seminorms on relative homology and bounded cohomology of finite models"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Torus,
    Cylinder,
    Circle,
    Interval,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Table,
}

/// Where the pair complex comes from: a JSON file or a built-in family.
#[derive(Args)]
struct PairSource {
    /// Path to a pair-complex/v1 JSON file.
    #[arg(long)]
    pair: Option<PathBuf>,
    /// Built-in family (alternative to --pair).
    #[arg(long, value_enum)]
    space: Option<Family>,
    /// Grid size for built-in families, e.g. 4x4 (circles take a single k).
    #[arg(long)]
    grid: Option<String>,
    /// Write the pair complex actually used to this path.
    #[arg(long)]
    dump_pair: Option<PathBuf>,
}

impl PairSource {
    fn load(&self) -> Result<ChainComplexPair, Error> {
        let description = self.description()?;
        if let Some(path) = &self.dump_pair {
            std::fs::write(path, description.to_json())
                .map_err(|e| Error::Input(format!("cannot write {}: {e}", path.display())))?;
        }
        ChainComplexPair::build(&description)
    }

    fn description(&self) -> Result<PairDescription, Error> {
        match (&self.pair, &self.space) {
            (Some(path), None) => {
                let text = std::fs::read_to_string(path)
                    .map_err(|e| Error::Input(format!("cannot read {}: {e}", path.display())))?;
                PairDescription::from_json(&text)
            }
            (None, Some(family)) => {
                let (m, n) = self.grid_dims()?;
                Ok(match family {
                    Family::Torus => generators::torus_grid_description(m, n),
                    Family::Cylinder => generators::cylinder_grid_description(m, n),
                    Family::Circle => generators::circle_description(m),
                    Family::Interval => generators::interval_description(),
                })
            }
            _ => Err(Error::Input("give exactly one of --pair or --space".into())),
        }
    }

    fn grid_dims(&self) -> Result<(usize, usize), Error> {
        let Some(grid) = &self.grid else {
            return match self.space {
                Some(Family::Interval) => Ok((0, 0)),
                _ => Err(Error::Input("--space needs --grid (e.g. 4x4, or k for circles)".into())),
            };
        };
        match grid.split_once('x') {
            Some((m, n)) => {
                let m = m.parse().map_err(|_| Error::Input("bad grid".into()))?;
                let n = n.parse().map_err(|_| Error::Input("bad grid".into()))?;
                Ok((m, n))
            }
            None => {
                let k = grid.parse().map_err(|_| Error::Input("bad grid".into()))?;
                Ok((k, 0))
            }
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Duality certificates for the homology classes of a degree.
    Seminorm {
        #[command(flatten)]
        source: PairSource,
        #[arg(long)]
        degree: usize,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
        /// Write the output here instead of stdout.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Mapping-cone norm comparison report for a degree.
    Cone {
        #[command(flatten)]
        source: PairSource,
        #[arg(long)]
        degree: usize,
        /// Comma-separated list of nonnegative rational weights.
        #[arg(long, default_value = "0,1,10")]
        omega: String,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Straighten a straight chain (straight-chain/v1) on a flat model.
    Straighten {
        /// Model family: torus or cylinder.
        #[arg(long, value_enum)]
        space: Family,
        /// Model size, e.g. 4x4 (torus periods) or 6x2 (circumference x height).
        #[arg(long)]
        grid: String,
        /// Input straight chain; when omitted, reads stdin.
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Discretize a measure chain (measure-chain/v1) through the net.
    Measure {
        #[arg(long, value_enum)]
        space: Family,
        #[arg(long)]
        grid: String,
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Bounded cohomology of a finite group or pair.
    Group {
        /// Built-in name (z2, z3, z2xz2, s3) or path to group/v1 JSON.
        #[arg(long)]
        group: String,
        /// Subgroup as comma-separated element indices.
        #[arg(long)]
        subgroup: Option<String>,
        /// Highest degree to report.
        #[arg(long, default_value_t = 2)]
        max_degree: usize,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// Run the exact verification suite.
    Suite {
        /// Run every check (the default; present for explicitness).
        #[arg(long)]
        all: bool,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
}

pub fn run(argv: impl IntoIterator<Item = OsString>) -> ExitCode {
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            // clap handles --help/--version with success exit codes.
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    match dispatch(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::Internal(_) => ExitCode::from(2),
                _ => ExitCode::from(1),
            }
        }
    }
}

fn emit(text: String, output: &Option<PathBuf>) -> Result<(), Error> {
    match output {
        None => {
            println!("{text}");
            Ok(())
        }
        Some(path) => std::fs::write(path, text + "\n")
            .map_err(|e| Error::Input(format!("cannot write {}: {e}", path.display()))),
    }
}

fn model_for(space: Family, grid: &str) -> Result<ModelSpace, Error> {
    let (m, n) = match grid.split_once('x') {
        Some((m, n)) => (
            m.parse::<i64>().map_err(|_| Error::Input("bad grid".into()))?,
            n.parse::<i64>().map_err(|_| Error::Input("bad grid".into()))?,
        ),
        None => {
            let k = grid.parse::<i64>().map_err(|_| Error::Input("bad grid".into()))?;
            (k, k)
        }
    };
    match space {
        Family::Torus => ModelSpace::torus_rect(vec![
            relhom::rational::rat(m),
            relhom::rational::rat(n),
        ]),
        Family::Cylinder => {
            ModelSpace::cylinder(relhom::rational::rat(m), relhom::rational::rat(n))
        }
        _ => Err(Error::Input("straightening needs a torus or cylinder model".into())),
    }
}

fn read_input(input: &Option<PathBuf>) -> Result<String, Error> {
    match input {
        Some(path) => std::fs::read_to_string(path)
            .map_err(|e| Error::Input(format!("cannot read {}: {e}", path.display()))),
        None => {
            use std::io::Read;
            let mut buf = String::new();
            std::io::stdin()
                .read_to_string(&mut buf)
                .map_err(|e| Error::Input(format!("cannot read stdin: {e}")))?;
            Ok(buf)
        }
    }
}

fn parse_omegas(text: &str) -> Result<Vec<Rational>, Error> {
    text.split(',').map(|s| parse_rational(s.trim())).collect()
}

fn dispatch(cli: Cli) -> Result<ExitCode, Error> {
    match cli.command {
        Command::Seminorm { source, degree, format, output } => {
            let pair = source.load()?;
            if degree > pair.top_degree() {
                return Err(Error::Input(format!(
                    "degree {degree} above top degree {}",
                    pair.top_degree()
                )));
            }
            let classes = pair.homology_basis(degree);
            let mut docs = Vec::new();
            let mut table = Vec::new();
            table.push(format!(
                "class  primal  dual  (degree {degree}, {} classes)",
                classes.len()
            ));
            for (i, class) in classes.iter().enumerate() {
                let cert = duality_certificate(&pair, class)?;
                table.push(format!(
                    "{i:>5}  {:>6}  {:>4}  min-chain {}",
                    format_rational(&cert.primal_value),
                    format_rational(&cert.dual_value),
                    pair.chain_to_string(&cert.optimal_chain),
                ));
                docs.push(cert.to_doc(&pair, class));
            }
            let text = match format {
                Format::Json => serde_json::to_string_pretty(
                    &docs.iter().map(|d| serde_json::to_value(d).unwrap()).collect::<Vec<_>>(),
                )
                .expect("certificates serialize"),
                Format::Table => table.join("\n"),
            };
            emit(text, &output)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Cone { source, degree, omega, format, output } => {
            let pair = source.load()?;
            let omegas = parse_omegas(&omega)?;
            let report = norm_comparison_report(&pair, degree, &omegas)?;
            let text = match format {
                Format::Json => {
                    serde_json::to_string_pretty(&report).expect("report serializes")
                }
                Format::Table => {
                    let mut lines = Vec::new();
                    lines.push(format!(
                        "class  relative  dual  {}  strict-gap",
                        report
                            .omegas
                            .iter()
                            .map(|o| format!("cone({o})"))
                            .collect::<Vec<_>>()
                            .join("  ")
                    ));
                    for row in &report.rows {
                        lines.push(format!(
                            "{:>5}  {:>8}  {:>4}  {}  {}",
                            row.class_index,
                            row.relative_seminorm,
                            row.dual_value,
                            row.cone_seminorms
                                .iter()
                                .map(|(_, v)| format!("{v:>7}"))
                                .collect::<Vec<_>>()
                                .join("  "),
                            if row.strict_gap_at_zero { "yes" } else { "no" },
                        ));
                    }
                    lines.join("\n")
                }
            };
            emit(text, &output)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Straighten { space, grid, input, output } => {
            let model = model_for(space, &grid)?;
            let net = build_net(&model)?;
            let chain = StraightChain::from_json(&model, &read_input(&input)?)?;
            let straightened = net.straighten_chain(&chain)?;
            emit(straightened.to_json(), &output)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Measure { space, grid, input, output } => {
            let model = model_for(space, &grid)?;
            let net = build_net(&model)?;
            let mu = MeasureChain::from_json(&model, &read_input(&input)?)?;
            let image = theta(&net, &mu)?;
            let mut doc = serde_json::Map::new();
            doc.insert("total_variation".into(), format_rational(&mu.total_variation()).into());
            doc.insert(
                "relative_norm".into(),
                format_rational(&mu.relative_norm(&model)).into(),
            );
            doc.insert(
                "theta_l1_norm".into(),
                format_rational(&image.l1_norm()).into(),
            );
            doc.insert(
                "theta".into(),
                serde_json::from_str(&image.to_json()).expect("chain JSON is valid"),
            );
            emit(
                serde_json::to_string_pretty(&serde_json::Value::Object(doc))
                    .expect("document serializes"),
                &output,
            )?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Group { group, subgroup, max_degree, format } => {
            let g = if ["z2", "z3", "z2xz2", "s3"].contains(&group.as_str()) {
                FiniteGroup::builtin(&group)?
            } else {
                let text = std::fs::read_to_string(&group)
                    .map_err(|e| Error::Input(format!("cannot read {group}: {e}")))?;
                FiniteGroup::from_json(&text)?.0
            };
            let sub: Option<BTreeSet<usize>> = match subgroup {
                None => None,
                Some(text) => {
                    let set: BTreeSet<usize> = text
                        .split(',')
                        .map(|s| {
                            s.trim()
                                .parse()
                                .map_err(|_| Error::Input("bad subgroup index".into()))
                        })
                        .collect::<Result<_, Error>>()?;
                    g.validate_subgroup(&set)?;
                    Some(set)
                }
            };
            let mut rows = Vec::new();
            for n in 0..=max_degree {
                let (dim, _) = bounded_cohomology(&g, sub.as_ref(), n)?;
                let proper = match &sub {
                    None => String::new(),
                    Some(a) => {
                        let data = relative_complex(&g, a, n)?;
                        format!(
                            "  restriction rank {} of {} (kernel {})",
                            data.restriction_rank, data.dim_invariants_g, data.kernel_dim
                        )
                    }
                };
                rows.push((n, dim, proper));
            }
            let text = match format {
                Format::Json => {
                    let value: Vec<serde_json::Value> = rows
                        .iter()
                        .map(|(n, dim, _)| serde_json::json!({"degree": n, "dimension": dim}))
                        .collect();
                    serde_json::to_string_pretty(&value).expect("rows serialize")
                }
                Format::Table => rows
                    .iter()
                    .map(|(n, dim, proper)| format!("H^{n}: dimension {dim}{proper}"))
                    .collect::<Vec<_>>()
                    .join("\n"),
            };
            emit(text, &None)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Suite { all: _, seed } => {
            let results = suite::run_all(seed);
            let mut failed = false;
            for r in &results {
                println!("{}  {:<26} {}", if r.passed { "PASS" } else { "FAIL" }, r.name, r.details);
                failed |= !r.passed;
            }
            if failed {
                Ok(ExitCode::from(2))
            } else {
                Ok(ExitCode::SUCCESS)
            }
        }
    }
}
