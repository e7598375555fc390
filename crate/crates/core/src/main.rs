//! Command-line front end: profile evaluation, exponents, exhaustive
//! oracles, family generation, stability reports, boundary/compression
//! transforms, and the named verification suites.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use tensor_iso::cube::{self, Params};
use tensor_iso::io::{format_rational, grid_to_csv, parse_rational, read_set, write_set};
use tensor_iso::verify::{run_suite, SuiteOptions};
use tensor_iso::{compress, constructions, oracle, profile, stability, Error, Result};

/// Environment variable overriding the dense-representation vertex cap.
const CAP_VAR: &str = "ISO_CAP";

#[derive(Parser)]
#[command(
    name = "tensor-iso",
    version,
    about = "Vertex isoperimetry and independent-set stability on tensor powers of cliques"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Evaluate the isoperimetric profile at a rational density
    Phi {
        /// Clique size t >= 3
        #[arg(long)]
        t: u32,
        /// Density as P/Q (or a bare integer)
        #[arg(long)]
        nu: String,
        /// Enclosure width target: half-width <= 2^-BITS
        #[arg(long, default_value_t = 64)]
        bits: usize,
    },
    /// Print the isoperimetric exponent ln t / (ln t - ln(t-1))
    Eta {
        /// Clique size t >= 2
        #[arg(long)]
        t: u32,
    },
    /// Write a CSV grid of profile values against the power-law lower bound
    ProfileGrid {
        #[arg(long)]
        t: u32,
        /// Number of subintervals of [0, 1] (rows = points + 1)
        #[arg(long)]
        points: usize,
        #[arg(long, default_value_t = 64)]
        bits: usize,
        /// Output CSV path
        #[arg(long)]
        out: PathBuf,
    },
    /// Exhaustive minimum boundary size over sets of at least m vertices
    OraclePhi {
        #[arg(long)]
        t: u32,
        #[arg(long)]
        n: u32,
        /// Cardinality floor
        #[arg(long)]
        m: u64,
    },
    /// Exhaustive isoperimetric exponent over sparse downward-closed sets
    OracleEta {
        #[arg(long)]
        t: u32,
        #[arg(long)]
        n: u32,
        /// Density threshold as P/Q; only sets with density below it count
        #[arg(long)]
        eps: String,
    },
    /// Generate a named family and write it as a set file
    Construct {
        #[arg(long)]
        family: Family,
        #[arg(long)]
        t: Option<u32>,
        #[arg(long)]
        n: Option<u32>,
        /// Pinned-prefix length (dictator family)
        #[arg(long)]
        k: Option<u32>,
        /// Pinned value (max_independent family)
        #[arg(long)]
        i: Option<u32>,
        /// Pinned coordinate (max_independent family)
        #[arg(long)]
        j: Option<u32>,
        #[arg(long)]
        out: PathBuf,
    },
    /// Stability report for an independent set read from a file
    Stability {
        #[arg(long = "in")]
        input: PathBuf,
        /// Emit the report as a flat JSON object
        #[arg(long)]
        json: bool,
    },
    /// Vertex boundary of a set file
    Boundary {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Compress a set file (one coordinate, or fully to the fixed point)
    Compress {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        out: PathBuf,
        /// Compress along one coordinate only
        #[arg(long, conflicts_with = "full")]
        coord: Option<u32>,
        /// Iterate all coordinates to the fixed point (default)
        #[arg(long)]
        full: bool,
    },
    /// Run a named invariant suite
    Verify {
        /// core, compress, profile, oracle, stability, constructions, all
        #[arg(long)]
        suite: String,
        /// Override the independent-set enumeration node guard
        #[arg(long)]
        max_nodes: Option<u64>,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Family {
    #[value(name = "dictator")]
    Dictator,
    #[value(name = "max_independent", alias = "max-independent")]
    MaxIndependent,
    #[value(name = "phase_transition", alias = "phase-transition")]
    PhaseTransition,
    #[value(name = "appendix_c", alias = "appendix-c")]
    AppendixC,
    #[value(name = "remark_counterexample", alias = "remark-counterexample")]
    RemarkCounterexample,
}

fn effective_cap() -> Result<u64> {
    match std::env::var(CAP_VAR) {
        Ok(s) => s
            .trim()
            .parse::<u64>()
            .map_err(|_| Error::InvalidInput(format!("{CAP_VAR} must be an integer, got '{s}'"))),
        Err(std::env::VarError::NotPresent) => Ok(cube::DEFAULT_CAP),
        Err(e) => Err(Error::InvalidInput(format!("{CAP_VAR}: {e}"))),
    }
}

fn params(t: u32, n: u32) -> Result<Params> {
    Params::with_cap(t, n, effective_cap()?)
}

fn require<T>(opt: Option<T>, flag: &str, family: &str) -> Result<T> {
    opt.ok_or_else(|| Error::InvalidInput(format!("--{flag} is required for family {family}")))
}

fn print_report(report: &stability::StabilityReport, json: bool) {
    if json {
        let mut map = serde_json::Map::new();
        for (k, v) in report.to_pairs() {
            let value = match k {
                "t" | "n" | "size" | "best_i" | "best_j" => {
                    serde_json::Value::from(v.parse::<u64>().expect("numeric field"))
                }
                "within_regime" | "bound_holds" => {
                    serde_json::Value::from(v == "true")
                }
                "bound" => serde_json::Value::from(v.parse::<f64>().expect("float field")),
                _ => serde_json::Value::from(v),
            };
            map.insert(k.to_string(), value);
        }
        println!("{}", serde_json::Value::Object(map));
    } else {
        for (k, v) in report.to_pairs() {
            println!("{k}={v}");
        }
    }
}

fn run(cli: Cli) -> Result<u8> {
    match cli.cmd {
        Cmd::Phi { t, nu, bits } => {
            let nu = parse_rational(&nu)?;
            let out = profile::phi(t, &nu, bits)?;
            if out.exact {
                println!("{} (exact)", format_rational(&out.lo));
            } else {
                println!(
                    "[{}, {}] ({} steps)",
                    format_rational(&out.lo),
                    format_rational(&out.hi),
                    out.steps
                );
            }
        }
        Cmd::Eta { t } => {
            println!("{}", profile::eta(t, 128)?.to_f64());
        }
        Cmd::ProfileGrid {
            t,
            points,
            bits,
            out,
        } => {
            let rows = profile::profile_grid(t, points, bits)?;
            std::fs::write(&out, grid_to_csv(&rows))?;
            println!("wrote {} rows to {}", rows.len(), out.display());
        }
        Cmd::OraclePhi { t, n, m } => {
            let p = params(t, n)?;
            let got = oracle::phi_oracle(&p, m)?;
            println!("min_boundary={}", got.min_boundary);
            println!("witness_size={}", got.witness.size());
            println!("instances_scanned={}", got.instances_scanned);
        }
        Cmd::OracleEta { t, n, eps } => {
            let p = params(t, n)?;
            let eps = parse_rational(&eps)?;
            println!("{}", oracle::eta_oracle(&p, &eps)?.to_f64());
        }
        Cmd::Construct {
            family,
            t,
            n,
            k,
            i,
            j,
            out,
        } => {
            let set = match family {
                Family::Dictator => {
                    let p = params(require(t, "t", "dictator")?, require(n, "n", "dictator")?)?;
                    constructions::dictator(&p, require(k, "k", "dictator")?)?
                }
                Family::MaxIndependent => {
                    let p = params(
                        require(t, "t", "max_independent")?,
                        require(n, "n", "max_independent")?,
                    )?;
                    constructions::max_independent(
                        &p,
                        require(i, "i", "max_independent")?,
                        require(j, "j", "max_independent")?,
                    )?
                }
                Family::PhaseTransition => {
                    let p = params(
                        require(t, "t", "phase_transition")?,
                        require(n, "n", "phase_transition")?,
                    )?;
                    constructions::phase_transition_set(&p)?
                }
                Family::AppendixC => {
                    let p = params(
                        require(t, "t", "appendix_c")?,
                        require(n, "n", "appendix_c")?,
                    )?;
                    let (set, eps, delta) = constructions::appendix_c_family(&p)?;
                    println!("eps={}", format_rational(&eps));
                    println!("delta={}", format_rational(&delta));
                    set
                }
                Family::RemarkCounterexample => constructions::remark_counterexample(),
            };
            write_set(&out, &set)?;
            println!(
                "wrote {} vertices of [{}]^{} to {}",
                set.size(),
                set.params().t(),
                set.params().n(),
                out.display()
            );
        }
        Cmd::Stability { input, json } => {
            let set = read_set(&input, effective_cap()?)?;
            let report = stability::stability_report(&set)?;
            print_report(&report, json);
        }
        Cmd::Boundary { input, out } => {
            let set = read_set(&input, effective_cap()?)?;
            let boundary = cube::vertex_boundary(&set);
            write_set(&out, &boundary)?;
            println!("{} vertices", boundary.size());
        }
        Cmd::Compress {
            input,
            out,
            coord,
            full: _,
        } => {
            let set = read_set(&input, effective_cap()?)?;
            let result = match coord {
                Some(c) => compress::compress(&set, c)?,
                None => compress::compress_fully(&set),
            };
            write_set(&out, &result)?;
            println!(
                "wrote {} vertices, boundary {} -> {}",
                result.size(),
                cube::vertex_boundary(&set).size(),
                cube::vertex_boundary(&result).size()
            );
        }
        Cmd::Verify { suite, max_nodes } => {
            let opts = SuiteOptions { max_nodes };
            let results = run_suite(&suite, &opts)?;
            let mut failed = 0usize;
            for r in &results {
                let tag = if r.passed { "PASS" } else { "FAIL" };
                println!("[{tag}] {}/{}: {}", r.suite, r.name, r.detail);
                if !r.passed {
                    failed += 1;
                }
            }
            if failed > 0 {
                eprintln!("{failed} of {} checks failed", results.len());
                return Ok(1);
            }
            println!("all {} checks passed", results.len());
        }
    }
    Ok(0)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
