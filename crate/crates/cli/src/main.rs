//! `cfcolor`: generate instances, color them, verify colorings, search
//! factors and compute exact conflict-free chromatic numbers.
//!
//! Exit codes: 0 success, 1 negative answer (NONE, violations, above the
//! palette limit), 2 budget or resample limit hit, 64 usage, 65 bad input
//! data, 74 I/O failure.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use cfcolor::batch::Exec;
use cfcolor::constructions::{ConstructionKind, ConstructionSpec};
use cfcolor::exact::{chi_cf_exact, ChiCfOutcome};
use cfcolor::factors::{FactorOutcome, FactorSearch, DEFAULT_BUDGET};
use cfcolor::four_uniform::{characterize_4uniform, color_4uniform_with};
use cfcolor::greedy::greedy_cf_coloring;
use cfcolor::io;
use cfcolor::lll::{color_bound, randomized_cf_coloring, LllOutcome, LllParams, DEFAULT_MAX_RESAMPLES};
use cfcolor::verify::is_conflict_free;
use cfcolor::{Coloring, Error, Hypergraph};

#[derive(Parser)]
#[command(name = "cfcolor", version, about = "Conflict-free hypergraph coloring toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a named construction
    Gen {
        #[arg(long, value_parser = parse_kind)]
        construction: ConstructionKind,
        #[arg(long)]
        t: Option<usize>,
        #[arg(long)]
        r: Option<usize>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        delta: Option<usize>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Compute a conflict-free coloring
    Color {
        #[arg(long, value_enum)]
        algo: Algo,
        /// Palette size (lll; default from the local lemma bound) or upper
        /// limit (exact)
        #[arg(long)]
        colors: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = DEFAULT_MAX_RESAMPLES)]
        max_resamples: u64,
        file: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Check a coloring; prints violated edges, one per line
    Verify { hypergraph: PathBuf, coloring: PathBuf },
    /// Write the dual hypergraph
    Dual {
        file: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Search an {a,b}-factor of a graph; prints it, NONE or BUDGET
    Factor {
        #[arg(long)]
        a: usize,
        #[arg(long)]
        b: usize,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        file: PathBuf,
    },
    /// Exact conflict-free chromatic number and an optimal coloring
    ChiCf {
        #[arg(long)]
        max_k: Option<usize>,
        #[arg(long, value_enum)]
        mode: Option<Mode>,
        file: PathBuf,
    },
    /// Print summary statistics
    Stats { file: PathBuf },
}

#[derive(Clone, Copy, ValueEnum)]
enum Algo {
    Greedy,
    Four,
    Lll,
    Exact,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    #[value(name = "characterize-4u")]
    Characterize4u,
}

fn parse_kind(s: &str) -> Result<ConstructionKind, String> {
    ConstructionKind::from_name(s).ok_or_else(|| {
        let names: Vec<&str> = ConstructionKind::ALL.iter().map(|k| k.name()).collect();
        format!("unknown construction {s:?}; expected one of {}", names.join(", "))
    })
}

/// A finished command: what to print and how to exit.
struct Done {
    stdout: String,
    code: u8,
}

impl Done {
    fn ok(stdout: String) -> Self {
        Self { stdout, code: 0 }
    }
}

enum Failure {
    Usage(String),
    Data(String),
    Io(String),
    Budget(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidParameters(_) => Failure::Usage(e.to_string()),
            Error::BudgetExceeded => Failure::Budget(e.to_string()),
            _ => Failure::Data(e.to_string()),
        }
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))
}

fn load(path: &Path) -> Result<Hypergraph, Failure> {
    io::parse_hypergraph(&read(path)?).map_err(|e| Failure::Data(format!("{}: {e}", path.display())))
}

/// Writes `text` to `output`, or returns it for stdout.
fn emit(text: String, output: Option<&Path>) -> Result<String, Failure> {
    match output {
        Some(p) => {
            std::fs::write(p, text).map_err(|e| Failure::Io(format!("{}: {e}", p.display())))?;
            Ok(String::new())
        }
        None => Ok(text),
    }
}

fn exec() -> Exec {
    if cfg!(feature = "parallel") {
        Exec::Parallel
    } else {
        Exec::Sequential
    }
}

fn color(h: &Hypergraph, algo: Algo, colors: Option<usize>, seed: u64, max_resamples: u64) -> Result<Result<Coloring, Done>, Failure> {
    Ok(Ok(match algo {
        Algo::Greedy => greedy_cf_coloring(h),
        Algo::Four => color_4uniform_with(h, exec())?,
        Algo::Lll => {
            let k = match colors {
                Some(k) => k,
                None => {
                    let r = h.uniformity().ok_or(Error::NotUniform)?;
                    // The bound is monotone in Δ, so degree-1 inputs use Δ = 2.
                    color_bound(r, h.max_degree().max(2))?
                }
            };
            let params = LllParams {
                colors: k,
                seed,
                max_resamples,
            };
            match randomized_cf_coloring(h, &params)? {
                LllOutcome::Colored { coloring, .. } => coloring,
                LllOutcome::Exhausted { resamples } => {
                    return Err(Failure::Budget(format!("no coloring with {k} colors after {resamples} resamples")));
                }
            }
        }
        Algo::Exact => match chi_cf_exact(h, colors) {
            ChiCfOutcome::Exact(r) => r.witness,
            ChiCfOutcome::AboveKMax { k_max, .. } => {
                return Ok(Err(Done {
                    stdout: format!("NONE: no conflict-free coloring with at most {k_max} colors\n"),
                    code: 1,
                }));
            }
        },
    }))
}

fn run(cmd: Command) -> Result<Done, Failure> {
    match cmd {
        Command::Gen {
            construction,
            t,
            r,
            n,
            delta,
            output,
        } => {
            let spec = ConstructionSpec {
                kind: construction,
                t,
                r,
                n,
                delta,
            };
            let c = spec.build()?;
            let text = io::write_hypergraph_with_roles(&c.hypergraph, &c.roles);
            Ok(Done::ok(emit(text, output.as_deref())?))
        }
        Command::Color {
            algo,
            colors,
            seed,
            max_resamples,
            file,
            output,
        } => {
            let h = load(&file)?;
            match color(&h, algo, colors, seed, max_resamples)? {
                Ok(c) => Ok(Done::ok(emit(io::write_coloring(&c), output.as_deref())?)),
                Err(done) => Ok(done),
            }
        }
        Command::Verify { hypergraph, coloring } => {
            let h = load(&hypergraph)?;
            let c = io::parse_coloring(&read(&coloring)?).map_err(|e| Failure::Data(format!("{}: {e}", coloring.display())))?;
            match is_conflict_free(&h, &c)? {
                Ok(()) => Ok(Done::ok("OK\n".into())),
                Err(bad) => Ok(Done {
                    stdout: bad.iter().map(|e| format!("{e}\n")).collect(),
                    code: 1,
                }),
            }
        }
        Command::Dual { file, output } => {
            let d = load(&file)?.dual()?;
            Ok(Done::ok(emit(io::write_hypergraph(&d), output.as_deref())?))
        }
        Command::Factor { a, b, budget, file } => {
            let g = load(&file)?;
            let search = FactorSearch {
                budget,
                exec: exec(),
                ..FactorSearch::default()
            };
            match search.run(&g, a, b)?.outcome {
                FactorOutcome::Found(f) => Ok(Done::ok(io::write_factor(g.m(), &f))),
                FactorOutcome::None => Ok(Done {
                    stdout: "NONE\n".into(),
                    code: 1,
                }),
                FactorOutcome::BudgetExceeded => Ok(Done {
                    stdout: "BUDGET\n".into(),
                    code: 2,
                }),
            }
        }
        Command::ChiCf { max_k, mode, file } => {
            let h = load(&file)?;
            let (chi, witness) = match mode {
                Some(Mode::Characterize4u) => {
                    let c = characterize_4uniform(&h)?;
                    if c.anomaly {
                        eprintln!("warning: non-regular instance of maximum degree 2 is not 2-colorable");
                    }
                    (c.chi_cf, c.coloring)
                }
                None => match chi_cf_exact(&h, max_k) {
                    ChiCfOutcome::Exact(r) => (r.chi_cf, r.witness),
                    ChiCfOutcome::AboveKMax { k_max, .. } => {
                        return Ok(Done {
                            stdout: format!("ABOVE {k_max}\n"),
                            code: 2,
                        });
                    }
                },
            };
            Ok(Done::ok(format!("{chi}\n{}", io::write_coloring(&witness))))
        }
        Command::Stats { file } => {
            let s = load(&file)?.stats();
            let opt = |v: Option<usize>| v.map_or_else(|| "-".to_string(), |x| x.to_string());
            let mut out = String::new();
            let _ = writeln!(out, "vertices {}", s.n);
            let _ = writeln!(out, "edges {}", s.m);
            let _ = writeln!(out, "max_degree {}", s.max_degree);
            let _ = writeln!(out, "max_edge_degree {}", s.max_edge_degree);
            let _ = writeln!(out, "uniformity {}", opt(s.uniformity));
            let _ = writeln!(out, "regularity {}", opt(s.regularity));
            let _ = writeln!(out, "connected {}", s.connected);
            Ok(Done::ok(out))
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 64 } else { 0 });
        }
    };
    match run(cli.command) {
        Ok(done) => {
            print!("{}", done.stdout);
            ExitCode::from(done.code)
        }
        Err(f) => {
            let (code, msg) = match f {
                Failure::Usage(m) => (64, m),
                Failure::Data(m) => (65, m),
                Failure::Io(m) => (74, m),
                Failure::Budget(m) => (2, m),
            };
            eprintln!("cfcolor: {msg}");
            ExitCode::from(code)
        }
    }
}
