//! `tau`: compute and cross-check the coefficients of the permutahedral class.

use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use tau_core::aw::{self, Expansion, Method};
use tau_core::mixed_eulerian::mixed_eulerian;
use tau_core::perm::{Permutation, WeakComposition};
use tau_core::series;
use tau_core::verify::{self, Suite};

#[derive(Parser)]
#[command(name = "tau", version, about = "Schubert coefficients of the permutahedral variety")]
struct Cli {
    /// Largest n accepted by `tau`, `verify` and `maxima`.
    #[arg(long, global = true, default_value_t = 7)]
    max_n: usize,

    /// Worker threads; defaults to the number of cores.
    #[arg(long, global = true)]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print a_w for a permutation of length n - 1.
    Aw {
        perm: Permutation,
        #[arg(long, default_value = "auto")]
        method: Method,
        /// Evaluate every general method and report whether they agree.
        #[arg(long)]
        all_methods: bool,
    },
    /// Print the expansion of tau_n.
    Tau {
        n: usize,
        #[arg(long, default_value = "auto")]
        method: Method,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Run an invariant suite exhaustively up to n.
    Verify { suite: Suite, n: usize },
    /// Print the h-vector of an indecomposable permutation.
    Hvector {
        perm: Permutation,
        /// Evaluate each shifted coefficient with this method instead of the series numerator.
        #[arg(long)]
        method: Option<Method>,
    },
    /// Print the mixed Eulerian number A_c.
    Mixed { composition: WeakComposition },
    /// Report where a_w is largest for each n up to the given bound.
    Maxima { n: usize },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Serialize)]
struct Row {
    n: usize,
    w: String,
    wo_w: String,
    a_w: u64,
    method: String,
}

fn rows(e: &Expansion) -> Vec<Row> {
    e.by_index()
        .into_iter()
        .map(|t| Row { n: e.n, w: t.w.to_string(), wo_w: t.wo_w.to_string(), a_w: t.a, method: t.route.to_string() })
        .collect()
}

enum Failure {
    Usage(String),
    Verification,
}

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    let mut out = io::stdout().lock();
    match cli.command {
        Command::Aw { perm, method, all_methods } => {
            if !all_methods {
                writeln!(out, "{}", aw::aw(&perm, method)?.value)?;
                return Ok(());
            }
            let mut values = Vec::new();
            for m in Method::GENERAL {
                let r = aw::aw(&perm, m)?;
                writeln!(out, "{m}\t{}\t{:.2?}", r.value, r.elapsed)?;
                values.push(r.value);
            }
            if let Ok((v, route)) = aw::special_aw(&perm) {
                writeln!(out, "special\t{v}\t{route}")?;
                values.push(v);
            }
            let agree = values.windows(2).all(|p| p[0] == p[1]);
            writeln!(out, "{}", if agree { "agree" } else { "DISAGREE" })?;
            if !agree {
                return Err(Failure::Verification);
            }
        }
        Command::Tau { n, method, format } => {
            let e = aw::tau_expansion(n, method, cli.max_n)?;
            match format {
                Format::Text => writeln!(out, "{}", e.to_text())?,
                Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(&rows(&e))?)?,
                Format::Csv => {
                    let mut wtr = csv::Writer::from_writer(out);
                    for row in rows(&e) {
                        wtr.serialize(row)?;
                    }
                    wtr.flush()?;
                }
            }
        }
        Command::Verify { suite, n } => {
            if n > cli.max_n {
                return Err(Failure::Usage(format!("n = {n} exceeds --max-n {}", cli.max_n)));
            }
            let reports = verify::run(suite, n)?;
            for r in &reports {
                write!(out, "{r}")?;
            }
            if !reports.iter().all(|r| r.passed()) {
                return Err(Failure::Verification);
            }
        }
        Command::Hvector { perm, method } => {
            let h = match method {
                Some(m) => aw::h_vector_direct(&perm, m)?,
                None => aw::h_vector(&perm)?,
            };
            writeln!(out, "{}", series::format_poly(&series::trim(h)))?;
        }
        Command::Mixed { composition } => {
            writeln!(out, "{}", mixed_eulerian(&composition)?)?;
        }
        Command::Maxima { n } => {
            for k in 2..=n {
                let m = aw::maximum(&aw::tau_expansion(k, Method::Auto, cli.max_n)?);
                let witnesses: Vec<String> = m
                    .witnesses
                    .iter()
                    .zip(&m.alternating_coxeter)
                    .map(|(w, &alt)| if alt { format!("{w}*") } else { w.to_string() })
                    .collect();
                writeln!(out, "n={k} max={} at {}", m.value, witnesses.join(" "))?;
            }
            writeln!(out, "* alternating Coxeter element")?;
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    if let Some(threads) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(threads).build_global() {
            eprintln!("tau: {e}");
            return ExitCode::from(2);
        }
    }
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("tau: {msg}");
            ExitCode::from(2)
        }
    }
}
