//! lamroot: batch queries and verification sweeps over least prime
//! λ-roots, Dirichlet characters, admissible multiples, Rosser weights,
//! and ψ₁ sums. Records stream to stdout in the selected format; identical
//! invocations produce byte-identical output.

mod output;

use std::io::{self, Write};
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Parser, Subcommand};
use rayon::prelude::*;

use lamroot_core::characters::CharacterGroup;
use lamroot_core::sieve::{DensityFn, SieveInstance, SieveItem};
use lamroot_core::unitgroup::{grh_denominator, UnitGroup, UnitGroupError};
use lamroot_core::{admissible, arith, psi, sieve, verify};

use output::{Cell, Emitter, Format, Record};

/// Inclusive modulus range: either a single value or `a..b`.
#[derive(Clone, Copy, Debug)]
struct RangeArg {
    start: u64,
    end: u64,
}

impl FromStr for RangeArg {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if let Some((a, b)) = s.split_once("..") {
            let start: u64 = a.trim().parse().map_err(|_| format!("malformed range `{s}`"))?;
            let end: u64 = b.trim().parse().map_err(|_| format!("malformed range `{s}`"))?;
            if start > end {
                return Err(format!("empty range `{s}`"));
            }
            Ok(RangeArg { start, end })
        } else {
            let v: u64 = s.trim().parse().map_err(|_| format!("malformed value `{s}`"))?;
            Ok(RangeArg { start: v, end: v })
        }
    }
}

#[derive(Parser)]
#[command(
    name = "lamroot",
    version,
    about = "Least prime lambda-roots, Dirichlet characters, admissible multiples, and the shifted sieve"
)]
struct Cli {
    /// Output format for records on stdout.
    #[arg(long, global = true, value_enum, default_value_t = Format::JsonLines)]
    format: Format,

    /// Worker threads (default: $LAMROOT_THREADS, else all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,

    /// Seed for randomized suites; recorded in every output header.
    #[arg(long, global = true, default_value_t = 42)]
    seed: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// g*(q), E(q), c0, and the GRH-corollary ratio for a modulus or range.
    Gstar {
        /// Modulus or inclusive range `a..b` (a >= 2).
        range: RangeArg,
        /// Search ceiling for the least prime lambda-root.
        #[arg(long, default_value_t = lamroot_core::DEFAULT_GSTAR_CEILING)]
        ceiling: u64,
        /// Skip moduli below this value (resume a split sweep).
        #[arg(long)]
        resume_from: Option<u64>,
    },
    /// The subgroup Phi*(q) with orders and conductors.
    Phistar {
        /// Modulus (q >= 2).
        q: u64,
    },
    /// Admissible multiples of q up to x, with A(x;q).
    Admissible {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        x: u64,
    },
    /// Exhaustive dichotomy verification over a base range.
    CraftylemVerify {
        /// Base moduli, inclusive range (e.g. 3..30).
        #[arg(long, default_value = "3..30")]
        q: RangeArg,
        /// Exponent-selection parameters.
        #[arg(long, value_delimiter = ',', default_values_t = vec![2u64, 3, 5])]
        y: Vec<u64>,
        /// Check multiples nq for n = 1..=N.
        #[arg(long, default_value_t = 500)]
        n: u64,
    },
    /// Shifted-sieve lower bound vs the exact sifted count of 1..=N.
    SieveDemo {
        #[arg(long)]
        n: u64,
        /// Squarefree sifting modulus.
        #[arg(long)]
        upsilon: u64,
        /// Rosser parameter (default C2*z^2 clamped to [z^2, z^4]).
        #[arg(long)]
        y: Option<f64>,
    },
    /// psi_1(x, chi) over the nonprincipal part of Phi*(q) on an x-grid.
    Psi1 {
        /// Modulus (q >= 3).
        #[arg(long)]
        q: u64,
        #[arg(long, default_value_t = 0.5)]
        sigma: f64,
        /// Comma-separated strictly increasing x values (each >= 2).
        #[arg(long, value_delimiter = ',')]
        grid: Vec<f64>,
    },
    /// Run the full verification suite; exit 1 if any check fails.
    Verify {
        /// Upper end of the GRH-corollary sweep.
        #[arg(long, default_value_t = 100_000)]
        grh_max: u64,
    },
}

enum CliError {
    /// Bad arguments: exit 2.
    Usage(String),
    /// Computation could not complete (e.g. ceiling exceeded): exit 1.
    Runtime(String),
}

fn usage<T>(msg: impl Into<String>) -> Result<T, CliError> {
    Err(CliError::Usage(msg.into()))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let threads = cli.threads.or_else(|| {
        std::env::var("LAMROOT_THREADS")
            .ok()
            .and_then(|s| s.parse().ok())
    });
    if let Some(t) = threads {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(t).build_global();
    }
    let stdout = io::stdout().lock();
    match run(&cli, stdout) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1), // verification failure
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Runtime(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

/// Returns Ok(true) on full success, Ok(false) on verification failure.
fn run<W: Write>(cli: &Cli, out: W) -> Result<bool, CliError> {
    match &cli.command {
        Command::Gstar { range, ceiling, resume_from } => {
            cmd_gstar(cli, out, *range, *ceiling, *resume_from)
        }
        Command::Phistar { q } => cmd_phistar(cli, out, *q),
        Command::Admissible { q, x } => cmd_admissible(cli, out, *q, *x),
        Command::CraftylemVerify { q, y, n } => cmd_craftylem(cli, out, *q, y, *n),
        Command::SieveDemo { n, upsilon, y } => cmd_sieve_demo(cli, out, *n, *upsilon, *y),
        Command::Psi1 { q, sigma, grid } => cmd_psi1(cli, out, *q, *sigma, grid),
        Command::Verify { grh_max } => cmd_verify(cli, out, *grh_max),
    }
}

const GSTAR_COLUMNS: &[&str] = &["q", "gstar", "E", "c0", "grh_ratio", "omega_clamped"];

fn gstar_record(q: u64, ceiling: u64) -> Result<Record, CliError> {
    let group = UnitGroup::decompose(q).expect("q >= 2");
    let gstar = group.least_prime_lambda_root(ceiling).map_err(|e| match e {
        UnitGroupError::CeilingExceeded { q, ceiling } => CliError::Runtime(format!(
            "search ceiling {ceiling} exceeded before finding a prime lambda-root for modulus {q}"
        )),
        other => CliError::Runtime(other.to_string()),
    })?;
    let clamped = arith::omega(arith::euler_phi(q)) == 0;
    let ratio = if q >= 3 {
        Cell::Float(gstar as f64 / grh_denominator(q))
    } else {
        Cell::Null
    };
    Ok(vec![
        ("q", Cell::UInt(q)),
        ("gstar", Cell::UInt(gstar)),
        ("E", Cell::UInt(group.exponent())),
        ("c0", Cell::Rational(group.lambda_density().to_string())),
        ("grh_ratio", ratio),
        ("omega_clamped", Cell::Bool(clamped)),
    ])
}

fn cmd_gstar<W: Write>(
    cli: &Cli,
    out: W,
    range: RangeArg,
    ceiling: u64,
    resume_from: Option<u64>,
) -> Result<bool, CliError> {
    if range.start < 2 {
        return usage(format!("modulus must be at least 2, got {}", range.start));
    }
    let mut em = Emitter::new(cli.format, GSTAR_COLUMNS.to_vec(), out);
    em.header(
        "gstar",
        cli.seed,
        &[
            ("range", Cell::Str(format!("{}..{}", range.start, range.end))),
            ("ceiling", Cell::UInt(ceiling)),
        ],
    );
    let start = resume_from.unwrap_or(range.start).max(range.start);
    const CHUNK: u64 = 1024;
    let mut lo = start;
    while lo <= range.end {
        let hi = (lo + CHUNK - 1).min(range.end);
        let records: Vec<Result<Record, CliError>> = (lo..=hi)
            .into_par_iter()
            .map(|q| gstar_record(q, ceiling))
            .collect();
        for r in records {
            em.emit(&r?);
        }
        lo = hi + 1;
    }
    Ok(true)
}

const PHISTAR_COLUMNS: &[&str] =
    &["q", "index", "exponents", "order", "conductor", "is_principal"];

fn cmd_phistar<W: Write>(cli: &Cli, out: W, q: u64) -> Result<bool, CliError> {
    if q < 2 {
        return usage(format!("modulus must be at least 2, got {q}"));
    }
    let mut em = Emitter::new(cli.format, PHISTAR_COLUMNS.to_vec(), out);
    em.header("phistar", cli.seed, &[("q", Cell::UInt(q))]);
    let cg = CharacterGroup::new(q).expect("q >= 2");
    let stars = cg.phi_star();
    for (index, chi) in stars.iter().enumerate() {
        em.emit(&vec![
            ("q", Cell::UInt(q)),
            ("index", Cell::UInt(index as u64)),
            ("exponents", Cell::UIntList(chi.exponents().to_vec())),
            ("order", Cell::UInt(chi.order())),
            ("conductor", Cell::UInt(chi.conductor())),
            ("is_principal", Cell::Bool(chi.is_principal())),
        ]);
    }
    em.summary(&[
        ("q", Cell::UInt(q)),
        ("phi_star_size", Cell::UInt(stars.len() as u64)),
        ("phi_star_exponent", Cell::UInt(cg.phi_star_exponent())),
    ]);
    Ok(true)
}

const ADMISSIBLE_COLUMNS: &[&str] = &["q", "multiple", "witness_conductor", "witness_exponents"];

fn cmd_admissible<W: Write>(cli: &Cli, out: W, q: u64, x: u64) -> Result<bool, CliError> {
    if q < 2 {
        return usage(format!("base modulus must be at least 2, got {q}"));
    }
    let mut em = Emitter::new(cli.format, ADMISSIBLE_COLUMNS.to_vec(), out);
    em.header(
        "admissible",
        cli.seed,
        &[("q", Cell::UInt(q)), ("x", Cell::UInt(x))],
    );
    let list = admissible::admissible_multiples(x, q)
        .map_err(|e| CliError::Runtime(e.to_string()))?;
    for report in &list {
        let w = report.witness().expect("admissible reports carry a witness");
        em.emit(&vec![
            ("q", Cell::UInt(q)),
            ("multiple", Cell::UInt(report.multiple())),
            ("witness_conductor", Cell::UInt(w.conductor())),
            ("witness_exponents", Cell::UIntList(w.exponents().to_vec())),
        ]);
    }
    em.summary(&[
        ("q", Cell::UInt(q)),
        ("x", Cell::UInt(x)),
        ("a_count", Cell::UInt(list.len() as u64)),
    ]);
    Ok(true)
}

const CRAFTY_COLUMNS: &[&str] = &["q", "n_max", "admissible", "checked", "violations"];

fn cmd_craftylem<W: Write>(
    cli: &Cli,
    out: W,
    q_range: RangeArg,
    y_set: &[u64],
    n_max: u64,
) -> Result<bool, CliError> {
    if q_range.start < 2 {
        return usage(format!("base moduli must be at least 2, got {}", q_range.start));
    }
    if y_set.is_empty() || y_set.iter().any(|&y| y < 2) {
        return usage("y-set must be nonempty with every value at least 2");
    }
    if n_max == 0 {
        return usage("n bound must be at least 1");
    }
    let mut em = Emitter::new(cli.format, CRAFTY_COLUMNS.to_vec(), out);
    em.header(
        "craftylem-verify",
        cli.seed,
        &[
            ("q_range", Cell::Str(format!("{}..{}", q_range.start, q_range.end))),
            ("y_set", Cell::UIntList(y_set.to_vec())),
            ("n_max", Cell::UInt(n_max)),
        ],
    );
    let per_q: Vec<(u64, u64, u64, u64)> = (q_range.start..=q_range.end)
        .into_par_iter()
        .map(|q| {
            let params: Vec<_> = y_set
                .iter()
                .map(|&y| admissible::choose_exponents(q, y as f64).expect("q >= 2, y >= 2"))
                .collect();
            let mut admissible_count = 0u64;
            let mut checked = 0u64;
            let mut violations = 0u64;
            for n in 1..=n_max {
                let report = admissible::is_admissible_multiple(q, q * n)
                    .expect("q >= 2 and q | qn");
                if report.is_admissible() {
                    admissible_count += 1;
                }
                for p in &params {
                    checked += 1;
                    if report.is_admissible()
                        && !admissible::dichotomy_first_arm(p, n)
                        && !admissible::dichotomy_second_arm(p, n)
                    {
                        violations += 1;
                    }
                }
            }
            (q, admissible_count, checked, violations)
        })
        .collect();
    let mut total_checked = 0u64;
    let mut total_violations = 0u64;
    for (q, adm, checked, violations) in per_q {
        total_checked += checked;
        total_violations += violations;
        em.emit(&vec![
            ("q", Cell::UInt(q)),
            ("n_max", Cell::UInt(n_max)),
            ("admissible", Cell::UInt(adm)),
            ("checked", Cell::UInt(checked)),
            ("violations", Cell::UInt(violations)),
        ]);
    }
    em.summary(&[
        ("checked", Cell::UInt(total_checked)),
        ("violations", Cell::UInt(total_violations)),
    ]);
    Ok(total_violations == 0)
}

const SIEVE_COLUMNS: &[&str] = &[
    "n", "upsilon", "z", "y", "s_exact", "bound", "main_term", "remainder_term", "t_sum",
    "abs_sum", "r_observed", "positive", "sound",
];

fn cmd_sieve_demo<W: Write>(
    cli: &Cli,
    out: W,
    n: u64,
    upsilon: u64,
    y: Option<f64>,
) -> Result<bool, CliError> {
    if n == 0 {
        return usage("n must be at least 1");
    }
    let items: Vec<SieveItem> = (1..=n).map(SieveItem::unit).collect();
    let inst = SieveInstance::new(items, upsilon, n as f64, DensityFn::Identity, 1.0)
        .map_err(|e| CliError::Usage(e.to_string()))?;
    let bound = sieve::shifted_lower_bound(&inst, y).map_err(|e| match e {
        sieve::SieveError::YOutsideWindow { .. } => CliError::Usage(e.to_string()),
        other => CliError::Runtime(other.to_string()),
    })?;
    let mut em = Emitter::new(cli.format, SIEVE_COLUMNS.to_vec(), out);
    em.header(
        "sieve-demo",
        cli.seed,
        &[("n", Cell::UInt(n)), ("upsilon", Cell::UInt(upsilon))],
    );
    let s = bound.stats.sifted_sum;
    let sound = bound.bound <= s;
    em.emit(&vec![
        ("n", Cell::UInt(n)),
        ("upsilon", Cell::UInt(upsilon)),
        ("z", Cell::UInt(bound.z)),
        ("y", Cell::Float(bound.y)),
        ("s_exact", Cell::Float(s)),
        ("bound", Cell::Float(bound.bound)),
        ("main_term", Cell::Float(bound.main_term)),
        ("remainder_term", Cell::Float(bound.remainder_term)),
        ("t_sum", Cell::Float(bound.t_sum)),
        ("abs_sum", Cell::UInt(bound.abs_sum)),
        ("r_observed", Cell::Float(bound.stats.r_observed)),
        ("positive", Cell::Bool(bound.bound > 0.0)),
        ("sound", Cell::Bool(sound)),
    ]);
    Ok(sound)
}

const PSI1_COLUMNS: &[&str] =
    &["q", "sigma", "char_index", "char_exponents", "x", "psi1", "ratio"];

fn cmd_psi1<W: Write>(
    cli: &Cli,
    out: W,
    q: u64,
    sigma: f64,
    grid: &[f64],
) -> Result<bool, CliError> {
    let report = psi::psi1_scaling_report(q, sigma, grid)
        .map_err(|e| CliError::Usage(e.to_string()))?;
    let mut em = Emitter::new(cli.format, PSI1_COLUMNS.to_vec(), out);
    em.header(
        "psi1",
        cli.seed,
        &[("q", Cell::UInt(q)), ("sigma", Cell::Float(sigma))],
    );
    for row in &report.rows {
        em.emit(&vec![
            ("q", Cell::UInt(q)),
            ("sigma", Cell::Float(sigma)),
            ("char_index", Cell::UInt(row.char_index as u64)),
            ("char_exponents", Cell::UIntList(row.char_exponents.clone())),
            ("x", Cell::Float(row.x)),
            ("psi1", Cell::Complex(row.value.re, row.value.im)),
            ("ratio", Cell::Float(row.ratio)),
        ]);
    }
    em.summary(&[
        ("q", Cell::UInt(q)),
        ("rows", Cell::UInt(report.rows.len() as u64)),
        ("max_ratio", Cell::Float(report.max_ratio)),
    ]);
    Ok(true)
}

const VERIFY_COLUMNS: &[&str] = &["check", "passed", "details"];

fn cmd_verify<W: Write>(cli: &Cli, out: W, grh_max: u64) -> Result<bool, CliError> {
    if grh_max < 3 {
        return usage("grh-max must be at least 3");
    }
    let mut em = Emitter::new(cli.format, VERIFY_COLUMNS.to_vec(), out);
    em.header("verify", cli.seed, &[("grh_max", Cell::UInt(grh_max))]);
    let seed = cli.seed;
    type Check = Box<dyn FnOnce() -> verify::CheckReport>;
    let checks: Vec<Check> = vec![
        Box::new(verify::check_arith_foundations),
        Box::new(verify::check_unitgroup_invariants),
        Box::new(verify::check_lambda_density_oracle),
        Box::new(verify::check_character_orthogonality),
        Box::new(verify::check_conductor_induce),
        Box::new(verify::check_phi_star_structure),
        Box::new(verify::check_admissible_monotonicity),
        Box::new(verify::check_craftylem),
        Box::new(verify::check_rosser_sigma),
        Box::new(move || verify::check_sieve_soundness(seed)),
        Box::new(verify::check_psi1),
        Box::new(verify::check_spot_values),
        Box::new(move || verify::check_grh_sweep(grh_max)),
    ];
    let mut all_passed = true;
    for check in checks {
        let r = check();
        // timing is wall-clock noise, so it goes to stderr only
        eprintln!(
            "[{}] {} in {:.2?}",
            r.name,
            if r.passed { "PASS" } else { "FAIL" },
            r.elapsed
        );
        all_passed &= r.passed;
        em.emit(&vec![
            ("check", Cell::Str(r.name.to_string())),
            ("passed", Cell::Bool(r.passed)),
            ("details", Cell::Str(r.details)),
        ]);
    }
    em.summary(&[("passed", Cell::Bool(all_passed))]);
    Ok(all_passed)
}
