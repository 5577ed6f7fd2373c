//! `qmarginal` command-line interface.
//!
//! Exit codes: 0 success or compatible, 1 usage or runtime error, 2 incompatible spectra,
//! sampled violation, or a table difference.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use qmarginal::chamber::{cubicles, edge_orbit_representatives, extremal_edges, monotone_rankings, qubit_extremal_edges};
use qmarginal::inequality::{generate_system, GenerationOptions, InequalitySystem, MarginalInequality};
use qmarginal::io::{checksum_mismatches, reference_system, verify_fixture, SystemFile};
use qmarginal::polytope::{check_membership, reduce_system};
use qmarginal::quantum::necessity_trial;
use qmarginal::spectra::{parse_rational, Rational, Spectrum, SystemFormat};
use qmarginal::symmetric::{kronecker, reduced_kronecker, Partition};

#[derive(Parser)]
#[command(name = "qmarginal", version, about = "Spectral inequalities for the univariant quantum marginal problem")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct GenFlags {
    /// Keep every nonzero coefficient instead of only unit ones.
    #[arg(long)]
    all_coeffs: bool,
    /// Use the qubit fast path (qubit formats only).
    #[arg(long)]
    qubit_fast_path: bool,
}

impl GenFlags {
    fn options(&self) -> GenerationOptions {
        GenerationOptions {
            unit_coefficients_only: !self.all_coeffs,
            qubit_fast_path: self.qubit_fast_path,
            ..GenerationOptions::default()
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Extremal edges of the chamber, one per line.
    Edges {
        #[arg(long)]
        format: SystemFormat,
        /// One representative per orbit of dimension-preserving component permutations.
        #[arg(long)]
        up_to_symmetry: bool,
    },
    /// Realizable cubicles (cell rankings), one per line.
    Cubicles {
        #[arg(long)]
        format: SystemFormat,
        /// Print every monotone ranking, marking unrealizable ones.
        #[arg(long)]
        all: bool,
    },
    /// Generate candidate inequalities and write an inequality file.
    Generate {
        #[arg(long)]
        format: SystemFormat,
        #[command(flatten)]
        flags: GenFlags,
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Remove redundant inequalities; prints a JSON report.
    Reduce {
        /// Input inequality file; if absent, generate for `--format`.
        #[arg(long)]
        system: Option<PathBuf>,
        #[arg(long)]
        format: Option<SystemFormat>,
        #[command(flatten)]
        flags: GenFlags,
        /// Reduced system destination (default: stdout after the report).
        #[arg(long, short)]
        output: Option<PathBuf>,
        /// Do not use component-permutation symmetry.
        #[arg(long)]
        no_symmetry: bool,
        /// Also close the system under duality.
        #[arg(long)]
        duality: bool,
    },
    /// Test trace-one spectra against a system; exit 2 if incompatible.
    Check {
        #[arg(long)]
        system: Option<PathBuf>,
        #[arg(long)]
        format: Option<SystemFormat>,
        #[command(flatten)]
        flags: GenFlags,
        /// Composite spectrum, comma-separated rationals.
        #[arg(long)]
        composite: String,
        /// One margin per component, in order.
        #[arg(long = "margin", required = true)]
        margins: Vec<String>,
    },
    /// Kronecker coefficient g(λ, μ, ν).
    Kron {
        lambda: Partition,
        mu: Partition,
        nu: Partition,
        /// Treat the arguments as reduced diagrams and return the stable value.
        #[arg(long)]
        reduced: bool,
        /// Largest n tried when stabilizing.
        #[arg(long)]
        cap: Option<usize>,
    },
    /// Evaluate a system on seeded random states; JSON report, exit 2 on violation.
    Sample {
        #[arg(long)]
        format: Option<SystemFormat>,
        #[arg(long)]
        system: Option<PathBuf>,
        #[command(flatten)]
        flags: GenFlags,
        #[arg(long, default_value_t = 1000)]
        trials: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
    },
    /// Checksums of bundled tables and regeneration diffs; exit 2 on any difference.
    VerifyTables {
        /// Also run the slow formats (full reduction of every bundled system).
        #[arg(long)]
        extended: bool,
        #[command(flatten)]
        flags: GenFlags,
    },
}

type CliResult = Result<ExitCode, String>;

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn load_system(path: &Option<PathBuf>, format: &Option<SystemFormat>, flags: &GenFlags) -> Result<InequalitySystem, String> {
    match (path, format) {
        (Some(p), _) => {
            let text = fs::read_to_string(p).map_err(|e| format!("{}: {e}", p.display()))?;
            let file = SystemFile::parse(&text).map_err(err)?;
            if let Some(f) = format {
                if *f != file.format {
                    return Err(format!("--format {f} does not match file format {}", file.format));
                }
            }
            file.to_system().map_err(err)
        }
        (None, Some(f)) => generate_system(f, &flags.options()).map_err(err),
        (None, None) => Err("either --system or --format is required".into()),
    }
}

fn write_or_print(path: &Option<PathBuf>, text: &str) -> Result<(), String> {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| format!("{}: {e}", p.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn parse_spectrum(s: &str) -> Result<Spectrum, String> {
    let values = s.split(',').map(parse_rational).collect::<Result<Vec<Rational>, _>>().map_err(err)?;
    Ok(Spectrum::from_unsorted(values))
}

fn rationals(v: &[Rational]) -> Value {
    Value::Array(v.iter().map(|x| Value::String(x.to_string())).collect())
}

fn ineq_json(i: &MarginalInequality) -> Value {
    Value::String(i.to_row())
}

fn generation_meta(flags: &GenFlags) -> Vec<(String, String)> {
    vec![
        ("generator".into(), format!("qmarginal {}", env!("CARGO_PKG_VERSION"))),
        ("coefficients".into(), if flags.all_coeffs { "all" } else { "unit" }.into()),
        ("qubit-fast-path".into(), flags.qubit_fast_path.to_string()),
    ]
}

fn run(cli: Cli) -> CliResult {
    match cli.command {
        Command::Edges { format, up_to_symmetry } => {
            let edges =
                if format.is_qubit_array() { qubit_extremal_edges(format.components()) } else { extremal_edges(&format) };
            let edges = if up_to_symmetry { edge_orbit_representatives(&edges, &format) } else { edges };
            for e in edges {
                println!("{e}");
            }
        }
        Command::Cubicles { format, all } => {
            if all {
                let realizable = cubicles(&format);
                for r in monotone_rankings(&format) {
                    let tag = if realizable.contains(&r) { "" } else { " unrealizable" };
                    println!("{r}{tag}");
                }
            } else {
                for r in cubicles(&format) {
                    println!("{r}");
                }
            }
        }
        Command::Generate { format, flags, output } => {
            let sys = generate_system(&format, &flags.options()).map_err(err)?;
            let file = SystemFile::from_system(&sys, generation_meta(&flags));
            write_or_print(&output, &file.to_string())?;
        }
        Command::Reduce { system, format, flags, output, no_symmetry, duality } => {
            let input = load_system(&system, &format, &flags)?;
            let rep = reduce_system(&input, !no_symmetry, duality).map_err(err)?;
            let report = json!({
                "format": input.format.to_string(),
                "input_count": rep.input_count,
                "output_count": rep.system.len(),
                "removed_count": rep.removed.len(),
                "symmetry_used": rep.symmetry_used,
                "duality_used": rep.duality_used,
                "orbits": rep.orbits.iter().map(|(h, n)| json!({"representative": ineq_json(h), "size": n})).collect::<Vec<_>>(),
                "witnesses": rep.witnesses.iter().map(|(h, nu, lams)| json!({
                    "inequality": ineq_json(h),
                    "composite": rationals(nu),
                    "margins": lams.iter().map(|l| rationals(l)).collect::<Vec<_>>(),
                })).collect::<Vec<_>>(),
                "unverified": rep.unverified.iter().map(ineq_json).collect::<Vec<_>>(),
            });
            let mut meta = generation_meta(&flags);
            meta.push(("reduced".into(), "true".into()));
            let text = SystemFile::from_system(&rep.system, meta).to_string();
            println!("{}", serde_json::to_string_pretty(&report).map_err(err)?);
            write_or_print(&output, &text)?;
        }
        Command::Check { system, format, flags, composite, margins } => {
            let sys = load_system(&system, &format, &flags)?;
            let nu = parse_spectrum(&composite)?;
            let lams = margins.iter().map(|m| parse_spectrum(m)).collect::<Result<Vec<_>, _>>()?;
            let verdict = check_membership(&sys, &nu, &lams).map_err(err)?;
            let report = json!({
                "format": sys.format.to_string(),
                "compatible": verdict.compatible,
                "violated": verdict.violated.iter().map(|&k| ineq_json(&sys.inequalities[k])).collect::<Vec<_>>(),
            });
            println!("{}", serde_json::to_string_pretty(&report).map_err(err)?);
            if !verdict.compatible {
                return Ok(ExitCode::from(2));
            }
        }
        Command::Kron { lambda, mu, nu, reduced, cap } => {
            let g = if reduced { reduced_kronecker(&lambda, &mu, &nu, cap) } else { kronecker(&lambda, &mu, &nu) };
            println!("{}", g.map_err(err)?);
        }
        Command::Sample { format, system, flags, trials, seed, tol } => {
            let sys = load_system(&system, &format, &flags)?;
            let r = necessity_trial(&sys, trials, seed, tol).map_err(err)?;
            let report = json!({
                "format": sys.format.to_string(),
                "generator": r.generator,
                "seed": r.seed,
                "trials": r.trials,
                "streams": format!("0..{}", r.trials),
                "ranks": format!("cycled 1..={}", sys.format.composite_dim()),
                "tol": r.tol,
                "max_violation": r.max_violation,
                "violating_trials": r.violating_trials,
                "worst": sys.inequalities.iter().zip(&r.worst)
                    .map(|(h, w)| json!({"inequality": ineq_json(h), "min_value": w}))
                    .collect::<Vec<_>>(),
            });
            println!("{}", serde_json::to_string_pretty(&report).map_err(err)?);
            if !r.passes() {
                return Ok(ExitCode::from(2));
            }
        }
        Command::VerifyTables { extended, flags } => {
            let mut clean = true;
            let bad = checksum_mismatches();
            clean &= bad.is_empty();
            println!("{}", json!({"check": "checksums", "mismatched": bad}));
            let quick = ["2x2", "2x2x2", "2x3"];
            let slow = ["2x4", "3x3", "2x2x3", "2x2x2x2"];
            for f in quick.iter().chain(slow.iter()) {
                let format: SystemFormat = f.parse().map_err(err)?;
                let reference = reference_system(&format).ok_or_else(|| format!("no table for {f}"))?;
                let generated = generate_system(&format, &flags.options()).map_err(err)?;
                let full = extended || quick.contains(f);
                let (mode, sys) = if full {
                    ("reduced", reduce_system(&generated, true, false).map_err(err)?.system)
                } else {
                    ("containment", generated)
                };
                let diff = verify_fixture(&sys, &reference).map_err(err)?;
                let ok = if full { diff.is_exact() } else { diff.is_contained() };
                clean &= ok;
                println!(
                    "{}",
                    json!({
                        "check": f,
                        "mode": mode,
                        "ok": ok,
                        "generated": sys.len(),
                        "reference": diff.expanded_count,
                        "matched": diff.matched.len(),
                        "missing_from_generated": diff.missing_from_generated.len(),
                        "extra_in_generated": if full { diff.extra_in_generated.len() } else { 0 },
                        "annotations": diff.annotations,
                    })
                );
            }
            if !clean {
                return Ok(ExitCode::from(2));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    if let Some(n) = std::env::var("QMARGINAL_THREADS").ok().and_then(|v| v.parse::<usize>().ok()) {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build_global();
    }
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
