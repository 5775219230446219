//! `brauer`: command-line access to Brauer and BMW algebra computations and
//! the verification suites.

mod expr;

use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use brauer_core::bmw::{build_bmw, verify_cubic_monodromy};
use brauer_core::brauer::{gram_positivity, BrauerAlgebra};
use brauer_core::cells::{bratteli, CellRep};
use brauer_core::diagrams::{enumerate, BrauerDiagram};
use brauer_core::lie::certified_closure;
use brauer_core::linalg::Matrix;
use brauer_core::report::{CheckRecord, VerificationReport};
use brauer_core::specht::{Partition, SpechtRep};
use brauer_core::suites::{run_suite, SuiteOptions, SUITES};
use brauer_core::{Error, Rational, RationalFunction, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

#[derive(Parser)]
#[command(name = "brauer", version, about = "Exact computations in Brauer and BMW algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the Brauer diagrams on n strands.
    Enumerate {
        #[arg(long)]
        n: usize,
    },
    /// Stack diagram `a` on top of diagram `b` and count closed loops.
    Compose { a: BrauerDiagram, b: BrauerDiagram },
    /// Markov trace of an expression such as "p12" or "s12*p23 - 2*t13".
    Trace {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        element: String,
        /// Specialize m; without it the result is a rational function of m.
        #[arg(long)]
        m: Option<Rational>,
    },
    /// Gram matrix positivity of the trace form on Br_n(m).
    Gram {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: Rational,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Generator matrices of a Specht module or a Brauer cell module.
    Rep(RepArgs),
    /// Lie algebra generated by the traceless infinitesimal braids on a cell module.
    LieClosure {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        lambda: Partition,
        #[arg(long, default_value = "13/2")]
        m: Rational,
    },
    /// Bratteli diagram of the Brauer algebras up to rank n.
    Bratteli {
        #[arg(long)]
        n: usize,
        /// Write Graphviz output to this file.
        #[arg(long)]
        dot: Option<PathBuf>,
        /// Print a rank,label,dimension table instead of JSON.
        #[arg(long)]
        csv: bool,
    },
    /// Enumerate BMW_n(s, α) from its presentation.
    Bmw {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        s: Rational,
        #[arg(long)]
        alpha: Rational,
    },
    /// Run verification suites; exits with status 1 if any check fails.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Group {
    Sym,
}

#[derive(Clone, Copy, ValueEnum)]
enum AlgebraKind {
    Brauer,
}

#[derive(Args)]
struct RepArgs {
    #[arg(long, conflicts_with = "algebra")]
    group: Option<Group>,
    #[arg(long)]
    algebra: Option<AlgebraKind>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    lambda: Partition,
    #[arg(long, default_value = "13/2")]
    m: Rational,
}

#[derive(Args)]
struct VerifyArgs {
    /// A suite name, `all`, or `cubic` with --lambda for a single module.
    suite: String,
    #[arg(long, default_value_t = 4)]
    n: usize,
    #[arg(long, default_value = "13/2")]
    m: Rational,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    big: bool,
    #[arg(long)]
    lambda: Option<Partition>,
    #[arg(long = "K", default_value_t = 8)]
    order: usize,
    /// Print the report as JSON instead of a table.
    #[arg(long)]
    json: bool,
    /// Also write the JSON report to this file.
    #[arg(long)]
    out: Option<PathBuf>,
}

/// Writes a line to stdout, ignoring a closed pipe so `| head` stays quiet.
fn emit(text: impl std::fmt::Display) {
    let _ = writeln!(io::stdout().lock(), "{text}");
}

fn matrices_json(ms: &[Matrix<Rational>]) -> serde_json::Value {
    serde_json::to_value(ms).expect("matrices serialize")
}

fn write_or_print(path: Option<&PathBuf>, text: &str) -> Result<()> {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| Error::Parse(format!("cannot write {}: {e}", p.display()))),
        None => {
            emit(text);
            Ok(())
        }
    }
}

fn rep(args: &RepArgs) -> Result<serde_json::Value> {
    match (args.group, args.algebra) {
        (Some(Group::Sym), _) => {
            let r = SpechtRep::new(args.lambda.clone())?;
            Ok(json!({
                "group": "sym",
                "lambda": args.lambda.to_string(),
                "dim": r.dim(),
                "generators": matrices_json(&r.generators()),
            }))
        }
        (None, Some(AlgebraKind::Brauer)) => {
            let n = args.n.ok_or_else(|| Error::Domain("--algebra brauer needs --n".into()))?;
            let r = CellRep::new(n, args.lambda.clone(), args.m.clone())?;
            Ok(json!({
                "algebra": "brauer",
                "n": n,
                "lambda": args.lambda.to_string(),
                "m": args.m.to_string(),
                "dim": r.dim(),
                "basis": r.basis_labels(),
                "generators": matrices_json(&r.generators()),
            }))
        }
        (None, None) => Err(Error::Domain("rep needs --group sym or --algebra brauer".into())),
    }
}

fn verify(args: &VerifyArgs) -> Result<VerificationReport> {
    if args.suite == "cubic" {
        if let Some(lambda) = &args.lambda {
            let mut report = VerificationReport::new("cubic", args.seed);
            let rec = CheckRecord::new("cubic.single", "ρ(s_12)exp(hρ(t_12)) satisfies a cubic")
                .param("n", args.n)
                .param("lambda", lambda)
                .param("m", &args.m)
                .param("K", args.order)
                .run(|| {
                    let r = verify_cubic_monodromy(args.n, lambda, &args.m, args.order)?;
                    let roots: Vec<String> = r.vanishing_third_roots.iter().map(ToString::to_string).collect();
                    Ok((r.ok, Some(format!("quadratic: {}, third roots: [{}]", r.quadratic, roots.join(", ")))))
                });
            report.checks.push(rec);
            return Ok(report);
        }
    }
    if args.suite != "all" && !SUITES.contains(&args.suite.as_str()) {
        return Err(Error::Parse(format!("unknown suite {:?}; expected all or one of {SUITES:?}", args.suite)));
    }
    let opts = SuiteOptions { n: args.n, m: args.m.clone(), seed: args.seed, big: args.big };
    run_suite(&args.suite, &opts)
}

fn run(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Enumerate { n } => {
            let all = enumerate(n)?;
            for d in &all {
                emit(d);
            }
            eprintln!("{} diagrams", all.len());
        }
        Command::Compose { a, b } => {
            let (d, loops) = a.compose(&b)?;
            emit(json!({ "diagram": d.to_string(), "loops": loops }));
        }
        Command::Trace { n, element, m } => match m {
            None => {
                let alg = BrauerAlgebra::new(n, RationalFunction::m());
                emit(alg.markov_trace(&expr::parse_element(&alg, &element)?)?);
            }
            Some(m0) => {
                let alg = BrauerAlgebra::new(n, m0);
                emit(alg.markov_trace(&expr::parse_element(&alg, &element)?)?);
            }
        },
        Command::Gram { n, m, out } => {
            let r = gram_positivity(n, &m)?;
            let mut v = json!({ "n": n, "m": m.to_string(), "dim": r.dim, "positive_definite": r.positive_definite });
            if let Some(i) = r.failing_pivot_index {
                v["failing_pivot_index"] = json!(i);
            }
            write_or_print(out.as_ref(), &serde_json::to_string_pretty(&v).expect("json"))?;
        }
        Command::Rep(args) => emit(serde_json::to_string_pretty(&rep(&args)?).expect("json")),
        Command::LieClosure { n, lambda, m } => {
            let r = CellRep::new(n, lambda.clone(), m.clone())?;
            let c = certified_closure(&r.t_prime_all())?;
            let v = json!({
                "n": n,
                "lambda": lambda.to_string(),
                "m": m.to_string(),
                "ambient_dim": r.dim() * r.dim(),
                "closure_dim": c.dim,
                "type": c.classification.kind.to_string(),
                "center_dim": c.center_dim,
                "certificate": c.certificate,
            });
            emit(serde_json::to_string_pretty(&v).expect("json"));
        }
        Command::Bratteli { n, dot, csv } => {
            let b = bratteli(n)?;
            if let Some(path) = dot {
                write_or_print(Some(&path), &b.to_dot())?;
            }
            if csv {
                emit("rank,label,dim");
                for (k, layer) in b.layers.iter().enumerate() {
                    for (p, d) in layer {
                        emit(format!("{k},\"{p}\",{d}"));
                    }
                }
            } else {
                emit(serde_json::to_string_pretty(&b).expect("json"));
            }
        }
        Command::Bmw { n, s, alpha } => {
            let b = build_bmw(n, &s, &alpha)?;
            let v = json!({
                "n": n,
                "s": s.to_string(),
                "alpha": alpha.to_string(),
                "convention": b.convention,
                "dim": b.algebra.dim,
                "delta": b.delta.as_ref().map(ToString::to_string),
                "basis_words": b.algebra.basis_words,
                "generator_matrices": matrices_json(&b.algebra.generator_matrices),
            });
            emit(serde_json::to_string_pretty(&v).expect("json"));
        }
        Command::Verify(args) => {
            let report = verify(&args)?;
            if let Some(path) = &args.out {
                write_or_print(Some(path), &report.to_json())?;
            }
            if args.json {
                emit(report.to_json());
            } else {
                emit(report.table().trim_end());
            }
            return Ok(report.passed());
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
