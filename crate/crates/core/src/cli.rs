//! Command-line front end. `main.rs` only forwards to [`run`].
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or input error,
//! 3 resource cap exceeded.

use std::ffi::OsString;
use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::Value;

use crate::bitgraph::{cyclomatic_number, BipartiteGraph};
use crate::bpm::{self, verify};
use crate::error::{Error, Result};
use crate::limits::check_cli;
use crate::matchcov::{count_mc, is_elementary, is_matching_covered};
use crate::mclattice::{build_lattice, has_incomplete_umbrella};
use crate::polyalg::{to_fourier, Basis};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_CAP: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "matchpoly", version, about = "Exact polynomials of the bipartite perfect matching function")]
pub struct Cli {
    /// Worker threads for the parallel kernels (default: all cores).
    #[arg(long, global = true, env = "MATCHPOLY_THREADS")]
    pub threads: Option<usize>,

    /// Lift the default size caps up to the hard limits (n = 5).
    #[arg(long, global = true)]
    pub allow_large: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the primal, dual or Fourier polynomial of BPM_n.
    Poly {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "primal")]
        basis: BasisArg,
        #[arg(long, value_enum, default_value = "text")]
        format: PolyFormat,
    },
    /// Export the matching-covered lattice.
    Lattice {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "json")]
        format: LatticeFormat,
    },
    /// One-line structural report on a graph (`1-1,2-2` or `0x9`).
    Classify {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        graph: String,
    },
    /// Check claims against brute-force oracles.
    Verify {
        #[arg(long)]
        n: usize,
        /// A claim id, or `all`.
        #[arg(long, default_value = "all")]
        claim: String,
    },
    /// Print one exact count.
    Count {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum)]
        what: CountWhat,
    },
    /// Decision-tree lower bounds as JSON.
    Bounds {
        #[arg(long)]
        n: usize,
    },
    /// Dual monomials grouped by coefficient, with isomorphism-class counts.
    Summary {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: PolyFormat,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum BasisArg {
    Primal,
    Dual,
    Fourier,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum PolyFormat {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum LatticeFormat {
    Dot,
    Json,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum CountWhat {
    Mc,
    PmGraphs,
    MonomialsPrimal,
    MonomialsDual,
    TotallyOrdered,
    HallViolators,
}

/// Parses `args` (including the program name), runs the command and
/// returns the exit code. Output goes to `out`, diagnostics to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    let pool = match rayon::ThreadPoolBuilder::new()
        .num_threads(cli.threads.unwrap_or(0))
        .build()
    {
        Ok(p) => p,
        Err(e) => {
            let _ = writeln!(err, "error: cannot start thread pool: {e}");
            return EXIT_USAGE;
        }
    };
    let mut buf = Vec::new();
    let result = pool.install(|| execute(&cli, &mut buf));
    if let Err(e) = out.write_all(&buf).and_then(|_| out.flush()) {
        let _ = writeln!(err, "error: {e}");
        return EXIT_USAGE;
    }
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::ResourceCap { .. } => EXIT_CAP,
        Error::Invariant { .. } => EXIT_VERIFY,
        Error::Domain(_) | Error::Parse(_) | Error::UnknownClaim(_) => EXIT_USAGE,
    }
}

fn io(e: std::io::Error) -> Error {
    Error::Domain(format!("write failed: {e}"))
}

fn check_n(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::Domain("--n must be at least 1".into()));
    }
    Ok(())
}

fn execute(cli: &Cli, out: &mut Vec<u8>) -> Result<i32> {
    let large = cli.allow_large;
    match &cli.command {
        Command::Poly { n, basis, format } => {
            let n = *n;
            check_n(n)?;
            let text = match basis {
                BasisArg::Primal => {
                    check_cli("primal_polynomial", n, large)?;
                    let p = bpm::primal_polynomial(n)?;
                    match format {
                        PolyFormat::Text => p.to_text(),
                        PolyFormat::Json => p.to_json(Basis::Primal) + "\n",
                    }
                }
                BasisArg::Dual => {
                    check_cli("dual_polynomial", n, large)?;
                    let p = bpm::dual_polynomial(n)?;
                    match format {
                        PolyFormat::Text => p.to_text(),
                        PolyFormat::Json => p.to_json(Basis::Dual) + "\n",
                    }
                }
                BasisArg::Fourier => {
                    check_cli("fourier_cli", n, large)?;
                    let f = to_fourier(&bpm::primal_polynomial(n)?)?;
                    match format {
                        PolyFormat::Text => f.to_text(),
                        PolyFormat::Json => f.to_json() + "\n",
                    }
                }
            };
            out.write_all(text.as_bytes()).map_err(io)?;
            Ok(EXIT_OK)
        }
        Command::Lattice { n, format } => {
            let n = *n;
            check_n(n)?;
            let text = match format {
                LatticeFormat::Dot => {
                    check_cli("lattice_dot", n, large)?;
                    build_lattice(n)?.to_dot()
                }
                LatticeFormat::Json => {
                    check_cli("build_lattice", n, large)?;
                    build_lattice(n)?.to_json() + "\n"
                }
            };
            out.write_all(text.as_bytes()).map_err(io)?;
            Ok(EXIT_OK)
        }
        Command::Classify { n, graph } => {
            check_n(*n)?;
            let g = BipartiteGraph::parse(*n, graph)?;
            writeln!(out, "{}", classify_line(&g, large)).map_err(io)?;
            Ok(EXIT_OK)
        }
        Command::Verify { n, claim } => {
            let n = *n;
            check_n(n)?;
            check_cli("primal_polynomial", n, large)?;
            let reports = if claim == "all" {
                verify::verify_all(n)?
            } else {
                vec![verify::verify_theorem(n, claim)?]
            };
            for r in &reports {
                writeln!(out, "{r}").map_err(io)?;
            }
            let failed = reports.iter().filter(|r| !r.passed()).count();
            if reports.len() > 1 {
                writeln!(out, "{} claims, {failed} failed", reports.len()).map_err(io)?;
            }
            Ok(if failed == 0 { EXIT_OK } else { EXIT_VERIFY })
        }
        Command::Count { n, what } => {
            let n = *n;
            check_n(n)?;
            let value = match what {
                CountWhat::Mc => {
                    check_cli("enumerate_mc", n, large)?;
                    count_mc(n)?.to_string()
                }
                CountWhat::PmGraphs => {
                    check_cli("truth_table", n, large)?;
                    bpm::bpm_truth(n)?.count_ones().to_string()
                }
                CountWhat::MonomialsPrimal => {
                    check_cli("primal_polynomial", n, large)?;
                    bpm::primal_polynomial(n)?.len().to_string()
                }
                CountWhat::MonomialsDual => {
                    check_cli("dual_polynomial", n, large)?;
                    bpm::dual_polynomial(n)?.len().to_string()
                }
                CountWhat::TotallyOrdered => bpm::totally_ordered_count(n).to_string(),
                CountWhat::HallViolators => bpm::enumerate_hall_violators(n)?.len().to_string(),
            };
            writeln!(out, "{value}").map_err(io)?;
            Ok(EXIT_OK)
        }
        Command::Bounds { n } => {
            check_n(*n)?;
            let report = bpm::bounds_report(*n)?;
            let mut v = serde_json::to_value(&report).expect("report serializes");
            round_floats(&mut v);
            writeln!(out, "{}", serde_json::to_string_pretty(&v).expect("value serializes")).map_err(io)?;
            Ok(EXIT_OK)
        }
        Command::Summary { n, format } => {
            let n = *n;
            check_n(n)?;
            check_cli("coefficient_summary", n, large)?;
            let groups = bpm::coefficient_summary(&bpm::dual_polynomial(n)?);
            match format {
                PolyFormat::Text => {
                    writeln!(out, "coeff\tmonomials\tclasses").map_err(io)?;
                    for g in &groups {
                        writeln!(out, "{}\t{}\t{}", g.coeff, g.monomials, g.classes).map_err(io)?;
                    }
                }
                PolyFormat::Json => {
                    let v = serde_json::json!({ "n": n, "groups": groups });
                    writeln!(out, "{}", serde_json::to_string_pretty(&v).expect("value serializes")).map_err(io)?;
                }
            }
            Ok(EXIT_OK)
        }
    }
}

fn classify_line(g: &BipartiteGraph, large: bool) -> String {
    let yn = |b: bool| if b { "yes" } else { "no" };
    let n = g.n();
    let dual = if g.is_empty() {
        "n/a".to_string()
    } else {
        match check_cli("dual_coefficient", n, large).and_then(|_| bpm::dual_coefficient(g)) {
            Ok(c) => c.to_string(),
            Err(_) => "n/a".to_string(),
        }
    };
    let umbrella = if g.is_empty() {
        "n/a"
    } else {
        match check_cli("umbrella", n, large).and_then(|_| has_incomplete_umbrella(g)) {
            Ok(true) => "incomplete",
            Ok(false) => "complete",
            Err(_) => "n/a",
        }
    };
    format!(
        "graph=0x{:X} class={} matching_covered={} elementary={} chi={} dual_coeff={} umbrella={}",
        g.mask(),
        bpm::classify_total_order(g),
        yn(is_matching_covered(g)),
        yn(is_elementary(g)),
        cyclomatic_number(g),
        dual,
        umbrella
    )
}

/// Rounds every float in a JSON value to 12 significant digits.
fn round_floats(v: &mut Value) {
    match v {
        Value::Number(num) if num.is_f64() => {
            let x = bpm::round12(num.as_f64().expect("checked f64"));
            if let Some(r) = serde_json::Number::from_f64(x) {
                *num = r;
            }
        }
        Value::Array(a) => a.iter_mut().for_each(round_floats),
        Value::Object(o) => o.values_mut().for_each(round_floats),
        _ => {}
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let mut full = vec!["matchpoly"];
        full.extend_from_slice(args);
        let code = run(full, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn poly_primal_n2() {
        let (code, out, _) = call(&["poly", "--n", "2", "--basis", "primal", "--format", "text"]);
        assert_eq!(code, 0);
        assert_eq!(out, "+ x_{1, 2} x_{2, 1}\n+ x_{1, 1} x_{2, 2}\n- x_{1, 1} x_{1, 2} x_{2, 1} x_{2, 2}\n");
    }

    #[test]
    fn caps_and_usage() {
        assert_eq!(call(&["poly", "--n", "9"]).0, EXIT_CAP);
        assert_eq!(call(&["poly", "--n", "5"]).0, EXIT_CAP);
        assert_eq!(call(&["lattice", "--n", "4", "--format", "dot"]).0, EXIT_CAP);
        assert_eq!(call(&["classify", "--n", "2", "--graph", "1-"]).0, EXIT_USAGE);
        assert_eq!(call(&["count", "--n", "2", "--what", "nonsense"]).0, EXIT_USAGE);
        assert_eq!(call(&["verify", "--n", "2", "--claim", "nope"]).0, EXIT_USAGE);
        assert_eq!(call(&["poly", "--n", "0"]).0, EXIT_USAGE);
        assert_eq!(call(&["--help"]).0, EXIT_OK);
    }

    #[test]
    fn classify_lines() {
        let (_, out, _) = call(&["classify", "--n", "2", "--graph", "1-1,2-2"]);
        assert_eq!(
            out.trim(),
            "graph=0x9 class=NotTotallyOrdered matching_covered=yes elementary=no chi=0 dual_coeff=0 umbrella=incomplete"
        );
        let (_, out, _) = call(&["classify", "--n", "3", "--graph", "0x1FF"]);
        assert!(out.contains("class=TotallyOrderedNonStrict matching_covered=yes elementary=yes"));
        assert!(out.contains("chi=4 dual_coeff=1 umbrella=complete"));
    }

    #[test]
    fn counts() {
        let c = |what: &str, n: &str| call(&["count", "--n", n, "--what", what]).1.trim().to_string();
        assert_eq!(c("mc", "2"), "3");
        assert_eq!(c("totally-ordered", "2"), "14");
        assert_eq!(c("hall-violators", "3"), "15");
        assert_eq!(c("pm-graphs", "2"), "7");
        assert_eq!(c("monomials-dual", "3"), "121");
        assert_eq!(c("monomials-primal", "3"), "49");
    }

    #[test]
    fn lattice_and_bounds() {
        let (code, out, _) = call(&["lattice", "--n", "2", "--format", "json"]);
        assert_eq!(code, 0);
        let v: Value = serde_json::from_str(&out).unwrap();
        let ranks: Vec<u64> = v["nodes"].as_array().unwrap().iter().map(|x| x["rank"].as_u64().unwrap()).collect();
        assert_eq!(ranks, vec![0, 1, 1, 2]);
        let (_, out, _) = call(&["lattice", "--n", "1", "--format", "json"]);
        assert_eq!(serde_json::from_str::<Value>(&out).unwrap()["nodes"].as_array().unwrap().len(), 2);

        let (_, out, _) = call(&["bounds", "--n", "2"]);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["and_lb"], 1.0);
        assert_eq!(v["or_lb_factorial"], 1.26185950714);
        let (_, out, _) = call(&["bounds", "--n", "3"]);
        assert_eq!(serde_json::from_str::<Value>(&out).unwrap()["xor_lb"], 9);
        let (code, out, _) = call(&["bounds", "--n", "5"]);
        assert_eq!(code, 0);
        assert!(serde_json::from_str::<Value>(&out).unwrap()["and_lb"].is_null());
    }

    #[test]
    fn verify_commands() {
        let (code, out, _) = call(&["verify", "--n", "2", "--claim", "parity"]);
        assert_eq!(code, 0);
        assert!(out.contains("7 graphs with PM (odd)") && out.contains("pass"));
        let (code, _, _) = call(&["verify", "--n", "3", "--claim", "all"]);
        assert_eq!(code, 0);
    }

    #[test]
    fn deterministic_output() {
        let a = call(&["poly", "--n", "3", "--basis", "fourier", "--format", "json"]);
        let b = call(&["--threads", "1", "poly", "--n", "3", "--basis", "fourier", "--format", "json"]);
        assert_eq!(a, b);
    }
}
