//! `aura`: inspect, construct and search finite aura spaces.
//!
//! Exit status is 0 on success (or when a search finds a witness), 1 when a
//! verification fails or a search comes back empty, and 2 on bad input.

mod analyze;

use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use aura_topology::connectivity::{components_of, SubspaceNotion};
use aura_topology::constructions::{iterated_product, subspace};
use aura_topology::fixtures::fixture_dir;
use aura_topology::laws::Ops;
use aura_topology::search::{
    aura_count, enumerate_topologies, implication_matrix, search, PredicateExpr, Sampling,
    SearchOptions, FULL_SCAN_MAX,
};
use aura_topology::sequences::{a_limits, EvPSequence};
use aura_topology::symbolic::{sym_compactness_report, SymbolicSpace};
use aura_topology::verify::verify_paper;
use aura_topology::{parse_space, AuraSpace, PointSet, SpaceDocument};

#[derive(Parser)]
#[command(name = "aura", version, about = "Finite aura topological spaces")]
struct Cli {
    /// Machine-readable JSON output.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct SetArgs {
    file: PathBuf,
    /// Comma-separated point labels, e.g. `a,b`.
    #[arg(long)]
    set: String,
}

#[derive(Subcommand)]
enum Command {
    /// Check that a space document is valid.
    Validate { file: PathBuf },
    /// Classification, τ_𝔞, components, connectedness and separation.
    Analyze { file: PathBuf },
    /// List the topology induced by the aura.
    TauA { file: PathBuf },
    /// Aura closure of a set.
    Closure(SetArgs),
    /// Aura interior of a set.
    Interior(SetArgs),
    /// Aura derived set of a set.
    Derived(SetArgs),
    /// 𝔞-components of the space or of a subset.
    Components {
        file: PathBuf,
        #[arg(long)]
        set: Option<String>,
        /// aura-subspace (default) or tau-a-subspace.
        #[arg(long, default_value = "aura-subspace")]
        notion: SubspaceNotion,
    },
    /// Subspace document on the given points.
    Subspace {
        file: PathBuf,
        #[arg(long)]
        points: String,
    },
    /// Product document of two or more spaces.
    Product {
        #[arg(num_args = 2.., required = true)]
        files: Vec<PathBuf>,
    },
    /// Limits of an eventually periodic sequence `prefix;cycle`.
    Convergence {
        file: PathBuf,
        #[arg(long)]
        seq: String,
        /// Only report whether the sequence converges to this point.
        #[arg(long)]
        limit: Option<String>,
    },
    /// Exact compactness verdicts on an infinite model.
    Symbolic {
        /// nat-successor, nat-discrete, trivial[:label] or cofinite-trivial.
        model: String,
        /// Print the full compactness report (the default).
        #[arg(long)]
        report: bool,
    },
    /// Find spaces on `size` points satisfying a predicate.
    Search {
        #[arg(long)]
        size: usize,
        #[arg(long = "where")]
        expr: String,
        #[arg(long, default_value_t = 1)]
        limit: usize,
        /// Worker threads; 0 picks the machine default.
        #[arg(long, default_value_t = 0)]
        workers: usize,
        /// Sample spaces at random instead of scanning.
        #[arg(long, requires = "samples")]
        seed: Option<u64>,
        #[arg(long, requires = "seed")]
        samples: Option<usize>,
        /// Allow an exhaustive scan at sizes that take minutes.
        #[arg(long)]
        long_running: bool,
    },
    /// Implication matrix between the search atoms.
    Matrix {
        #[arg(long)]
        size: usize,
        #[arg(long, default_value_t = 0)]
        workers: usize,
    },
    /// List the topologies on `size` points.
    Enumerate {
        #[arg(long)]
        size: usize,
        #[arg(long)]
        count_only: bool,
    },
    /// Check the catalog claims and every registered law.
    VerifyPaper {
        /// Directory holding the catalog documents.
        #[arg(long)]
        fixtures: Option<PathBuf>,
        /// Replace the closure operator with a broken one.
        #[arg(long, hide = true)]
        inject_fault: bool,
        #[arg(long, default_value_t = 0)]
        workers: usize,
    },
}

/// Input problems, reported with exit status 2.
#[derive(Debug)]
struct InputError(anyhow::Error);

impl std::fmt::Display for InputError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{:#}", self.0)
    }
}

impl std::error::Error for InputError {}

fn input<T, E: Into<anyhow::Error>>(r: std::result::Result<T, E>) -> Result<T> {
    r.map_err(|e| InputError(e.into()).into())
}

fn load(path: &Path) -> Result<AuraSpace> {
    let text = input(
        std::fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display())),
    )?;
    input(parse_space(&text).with_context(|| format!("invalid space document {}", path.display())))
}

fn parse_set(s: &AuraSpace, text: &str) -> Result<PointSet> {
    let inner = text.trim().trim_start_matches('{').trim_end_matches('}');
    let labels = inner.split(',').map(str::trim).filter(|l| !l.is_empty());
    input(s.universe().set_of(labels))
}

/// Writes to stdout, ignoring a closed pipe.
fn out(text: &str) {
    let mut stdout = std::io::stdout().lock();
    let _ = stdout
        .write_all(text.as_bytes())
        .and_then(|_| stdout.flush());
}

fn emit<T: Serialize>(json: bool, value: &T, text: impl FnOnce() -> String) {
    if json {
        out(&format!(
            "{}\n",
            serde_json::to_string_pretty(value).expect("output serializes")
        ));
    } else {
        out(&text());
    }
}

#[derive(Serialize)]
struct SetResult<'a> {
    operation: &'a str,
    input: Vec<&'a str>,
    result: Vec<&'a str>,
}

fn set_op(
    json: bool,
    args: &SetArgs,
    operation: &str,
    op: fn(&AuraSpace, PointSet) -> PointSet,
) -> Result<bool> {
    let s = load(&args.file)?;
    let a = parse_set(&s, &args.set)?;
    let r = op(&s, a);
    let u = s.universe();
    let out = SetResult {
        operation,
        input: u.labels(a),
        result: u.labels(r),
    };
    emit(json, &out, || format!("{}\n", u.format_set(r)));
    Ok(true)
}

fn document_out(s: &AuraSpace, name: Option<String>) {
    out(&format!(
        "{}\n",
        SpaceDocument::from_space(s, name).to_json()
    ));
}

fn run(cli: Cli) -> Result<bool> {
    let json = cli.json;
    match cli.command {
        Command::Validate { file } => {
            let s = load(&file)?;
            #[derive(Serialize)]
            struct Valid {
                valid: bool,
                points: usize,
                opens: usize,
            }
            let v = Valid {
                valid: true,
                points: s.len(),
                opens: s.space().topology().len(),
            };
            emit(json, &v, || {
                format!("valid: {} points, {} open sets\n", v.points, v.opens)
            });
            Ok(true)
        }
        Command::Analyze { file } => {
            let s = load(&file)?;
            let report = analyze::analyze(&s);
            emit(json, &report, || report.to_text());
            Ok(true)
        }
        Command::TauA { file } => {
            let s = load(&file)?;
            let tau = s.tau_a();
            let u = s.universe();
            let sets: Vec<Vec<&str>> = tau.opens().iter().map(|&o| u.labels(o)).collect();
            emit(json, &sets, || {
                format!("{}\n", u.format_family(tau.opens()))
            });
            Ok(true)
        }
        Command::Closure(args) => set_op(json, &args, "closure", AuraSpace::closure),
        Command::Interior(args) => set_op(json, &args, "interior", AuraSpace::interior),
        Command::Derived(args) => set_op(json, &args, "derived", AuraSpace::derived_set),
        Command::Components { file, set, notion } => {
            let s = load(&file)?;
            let a = match set {
                Some(t) => parse_set(&s, &t)?,
                None => s.full(),
            };
            let blocks = components_of(&s, a, notion);
            let u = s.universe();
            let sets: Vec<Vec<&str>> = blocks.iter().map(|&b| u.labels(b)).collect();
            emit(json, &sets, || {
                let parts: Vec<String> = blocks.iter().map(|&b| u.format_set(b)).collect();
                format!("{}\n", parts.join(" "))
            });
            Ok(true)
        }
        Command::Subspace { file, points } => {
            let s = load(&file)?;
            let y = parse_set(&s, &points)?;
            let sub = input(subspace(&s, y))?;
            document_out(&sub, None);
            Ok(true)
        }
        Command::Product { files } => {
            let spaces = files.iter().map(|f| load(f)).collect::<Result<Vec<_>>>()?;
            let p = input(iterated_product(&spaces))?;
            document_out(&p, None);
            Ok(true)
        }
        Command::Convergence { file, seq, limit } => {
            let s = load(&file)?;
            let q = input(EvPSequence::parse(&seq, s.universe()))?;
            let limits = a_limits(&s, &q);
            let u = s.universe();
            match limit {
                Some(label) => {
                    let x = input(u.index_of(&label))?;
                    #[derive(Serialize)]
                    struct Converges<'a> {
                        sequence: String,
                        point: &'a str,
                        converges: bool,
                    }
                    let c = Converges {
                        sequence: q.display(u).to_string(),
                        point: u.name(x),
                        converges: limits.contains(x),
                    };
                    emit(json, &c, || format!("{}\n", c.converges));
                }
                None => {
                    #[derive(Serialize)]
                    struct Limits<'a> {
                        sequence: String,
                        limits: Vec<&'a str>,
                    }
                    let l = Limits {
                        sequence: q.display(u).to_string(),
                        limits: u.labels(limits),
                    };
                    emit(json, &l, || format!("{}\n", u.format_set(limits)));
                }
            }
            Ok(true)
        }
        Command::Symbolic { model, report: _ } => {
            let m: SymbolicSpace = input(model.parse())?;
            let r = sym_compactness_report(&m);
            emit(json, &r, || r.to_text());
            Ok(true)
        }
        Command::Search {
            size,
            expr,
            limit,
            workers,
            seed,
            samples,
            long_running,
        } => {
            let e = input(PredicateExpr::parse(&expr))?;
            let sampling = seed
                .zip(samples)
                .map(|(seed, samples)| Sampling { seed, samples });
            let options = SearchOptions {
                limit,
                workers,
                sampling,
                long_running,
            };
            let report = input(search(size, &e, options).with_context(|| {
                format!("sizes above {FULL_SCAN_MAX} need --seed/--samples or --long-running")
            }))?;
            emit(json, &report, || report.to_text());
            Ok(!report.witnesses.is_empty())
        }
        Command::Matrix { size, workers } => {
            let report = input(implication_matrix(size, workers))?;
            emit(json, &report, || report.to_text());
            Ok(true)
        }
        Command::Enumerate { size, count_only } => {
            let tops = input(enumerate_topologies(size))?;
            #[derive(Serialize)]
            #[serde(rename_all = "camelCase")]
            struct Enumeration {
                size: usize,
                topologies: usize,
                aura_spaces: usize,
                #[serde(skip_serializing_if = "Option::is_none")]
                families: Option<Vec<Vec<Vec<String>>>>,
            }
            let families = (!count_only).then(|| {
                tops.iter()
                    .map(|t| {
                        let u = t.universe();
                        t.topology()
                            .opens()
                            .iter()
                            .map(|&o| u.labels(o).into_iter().map(String::from).collect())
                            .collect()
                    })
                    .collect()
            });
            let e = Enumeration {
                size,
                topologies: tops.len(),
                aura_spaces: tops.iter().map(aura_count).sum(),
                families,
            };
            emit(json, &e, || {
                let mut out = format!(
                    "topologies: {}\naura spaces: {}\n",
                    e.topologies, e.aura_spaces
                );
                if !count_only {
                    for t in &tops {
                        out.push_str(&t.universe().format_family(t.topology().opens()));
                        out.push('\n');
                    }
                }
                out
            });
            Ok(true)
        }
        Command::VerifyPaper {
            fixtures,
            inject_fault,
            workers,
        } => {
            let dir = fixtures.unwrap_or_else(|| PathBuf::from(fixture_dir()));
            let ops = if inject_fault {
                Ops::faulty()
            } else {
                Ops::standard()
            };
            let report = input(verify_paper(&dir, &ops, workers))?;
            if json {
                out(&format!("{}\n", report.to_json()));
            } else {
                out(&report.to_text());
            }
            Ok(report.passed)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            if e.downcast_ref::<InputError>().is_some() {
                ExitCode::from(2)
            } else {
                ExitCode::from(1)
            }
        }
    }
}
