//! Command-line interface.
//!
//! `gb` computes a reduced Gröbner basis (engine or Buchberger), with
//! optional oracle cross-checking, cofactor certification, invariant
//! checking, and stats output. `verify` checks a basis file against a
//! system file. Exit codes: 0 success, 1 parse/usage error, 2 verification
//! failure, 3 internal invariant violation.

use std::fs;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

use groebner::engine::{incremental_groebner, interreduce, EngineOptions, RunStats};
use groebner::frontend::{
    gen_benchmark, parse_system, random_system, stats_json, BenchFamily, RunReport,
    SystemDescription,
};
use groebner::oracle::{
    buchberger, buchberger_with_stats, certify_labeled, ideal_membership, is_groebner_basis,
};
use groebner::{MonomialOrder, Polynomial, Ring};

#[derive(Parser)]
#[command(name = "groebner", version, about = "Gröbner bases over prime fields")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the reduced Gröbner basis of a polynomial system
    Gb(GbArgs),
    /// Check that a basis file is a Gröbner basis of a system and spans the same ideal
    Verify(VerifyArgs),
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Algorithm {
    /// Signature-guarded incremental engine
    Ssg,
    /// Classical Buchberger oracle
    Buchberger,
}

#[derive(Args)]
struct GbArgs {
    /// System file; omit when --bench is given
    file: Option<PathBuf>,
    /// Basis algorithm
    #[arg(long, value_enum, default_value_t = Algorithm::Ssg)]
    algorithm: Algorithm,
    /// Print the engine's literal final set, including zeros and seed copies
    #[arg(long)]
    raw: bool,
    /// Track cofactor witnesses and verify them for every basis element
    #[arg(long)]
    certify: bool,
    /// Run the per-iteration invariant checks (violations exit 3)
    #[arg(long)]
    check_invariants: bool,
    /// Cross-check the result against the Buchberger oracle
    #[arg(long)]
    verify: bool,
    /// Write run counters as flat JSON to this path
    #[arg(long, value_name = "PATH")]
    stats: Option<PathBuf>,
    /// Generate a system instead of reading a file:
    /// cyclic:<n>[:p], katsura:<n>[:p], or random:<nvars>[:p]
    #[arg(long, value_name = "SPEC")]
    bench: Option<String>,
    /// Seed for random benchmark systems
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Args)]
struct VerifyArgs {
    /// System file
    system: PathBuf,
    /// Candidate basis file (same ring header as the system)
    basis: PathBuf,
}

fn main() {
    let code = std::panic::catch_unwind(run).unwrap_or(3);
    std::process::exit(code);
}

fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return code;
        }
    };
    match cli.command {
        Command::Gb(args) => run_gb(args),
        Command::Verify(args) => run_verify(args),
    }
}

fn run_gb(args: GbArgs) -> i32 {
    let desc = match load_system(&args) {
        Ok(desc) => desc,
        Err(msg) => {
            eprintln!("error: {msg}");
            return 1;
        }
    };
    let ring = match desc.ring() {
        Ok(ring) => ring,
        Err(e) => {
            eprintln!("error: {e}");
            return 1;
        }
    };
    if args.algorithm == Algorithm::Buchberger && (args.certify || args.check_invariants) {
        eprintln!("error: --certify and --check-invariants apply only to --algorithm ssg");
        return 1;
    }

    let mut gb_check = None;
    let mut ideal_equality = None;
    let mut certified = None;
    let basis: Vec<Polynomial>;
    let raw_set: Vec<Polynomial>;
    let stats: RunStats;

    match args.algorithm {
        Algorithm::Ssg => {
            let options = EngineOptions {
                certify: args.certify,
                check_invariants: args.check_invariants,
                ..EngineOptions::default()
            };
            let run = incremental_groebner(&ring, &desc.generators, &options);
            if args.certify {
                let mut ok = true;
                for inc in &run.increments {
                    for h in &inc.run.labeled {
                        if !certify_labeled(&ring, h, &inc.generator, &inc.previous_basis) {
                            ok = false;
                        }
                    }
                }
                certified = Some(ok);
            }
            eprintln!(
                "# algorithm=ssg increments={} iterations={} pairs_generated={} \
                 pairs_pruned={} zero_reductions={} reduction_steps={} \
                 signature_regressions={} wall_time={:.3}s",
                run.increments.len(),
                run.stats.iterations,
                run.stats.pairs_generated,
                run.stats.pairs_pruned,
                run.stats.zero_reductions,
                run.stats.reduction_steps,
                run.signature_regressions,
                run.stats.wall_time.as_secs_f64(),
            );
            raw_set = run
                .increments
                .last()
                .map(|inc| inc.run.raw_basis())
                .unwrap_or_else(|| run.basis.clone());
            basis = run.basis;
            stats = run.stats;
        }
        Algorithm::Buchberger => {
            let started = Instant::now();
            let (raw, bstats) = buchberger_with_stats(&ring, &desc.generators);
            basis = interreduce(&ring, &raw);
            raw_set = raw;
            stats = RunStats {
                iterations: bstats.iterations,
                pairs_generated: bstats.pairs_generated,
                pairs_pruned: bstats.pairs_pruned,
                zero_reductions: bstats.zero_reductions,
                reduction_steps: bstats.reduction_steps,
                basis_size_raw: bstats.basis_size_raw,
                basis_size_reduced: basis.len() as u64,
                wall_time: started.elapsed(),
            };
            eprintln!(
                "# algorithm=buchberger iterations={} pairs_generated={} pairs_pruned={} \
                 zero_reductions={} reduction_steps={} wall_time={:.3}s",
                stats.iterations,
                stats.pairs_generated,
                stats.pairs_pruned,
                stats.zero_reductions,
                stats.reduction_steps,
                stats.wall_time.as_secs_f64(),
            );
        }
    }

    if args.verify {
        let (gb_ok, eq_ok) = cross_check(&ring, &desc.generators, &basis);
        gb_check = Some(gb_ok);
        ideal_equality = Some(eq_ok);
    }

    if let Some(path) = &args.stats {
        if let Err(e) = fs::write(path, stats_json(&stats)) {
            eprintln!("error: cannot write stats to {}: {e}", path.display());
            return 1;
        }
    }

    let printed = if args.raw { raw_set } else { basis };
    let report = RunReport {
        basis: printed,
        stats,
        algorithm: match args.algorithm {
            Algorithm::Ssg => "ssg".into(),
            Algorithm::Buchberger => "buchberger".into(),
        },
        gb_check,
        ideal_equality,
        certified,
    };
    print!("{}", report.render(&desc));
    if report.all_verdicts_pass() {
        0
    } else {
        2
    }
}

/// GB property of `basis` plus two-sided ideal equality against an
/// independently computed Buchberger basis of the same generators.
fn cross_check(ring: &Ring, generators: &[Polynomial], basis: &[Polynomial]) -> (bool, bool) {
    let gens: Vec<Polynomial> = generators
        .iter()
        .filter(|p| !p.is_zero())
        .cloned()
        .collect();
    let gb_ok = if basis.is_empty() {
        gens.is_empty()
    } else {
        is_groebner_basis(ring, basis)
    };
    let oracle_basis = buchberger(ring, &gens);
    let mut eq_ok = gens.iter().all(|g| ideal_membership(ring, g, basis));
    eq_ok &= basis
        .iter()
        .all(|b| ideal_membership(ring, b, &oracle_basis));
    eq_ok &= interreduce(ring, &oracle_basis) == basis;
    (gb_ok, eq_ok)
}

fn run_verify(args: VerifyArgs) -> i32 {
    let (system, basis_desc) = match (read_system(&args.system), read_system(&args.basis)) {
        (Ok(s), Ok(b)) => (s, b),
        (Err(msg), _) | (_, Err(msg)) => {
            eprintln!("error: {msg}");
            return 1;
        }
    };
    if system.modulus != basis_desc.modulus
        || system.variables != basis_desc.variables
        || system.order != basis_desc.order
    {
        eprintln!("error: the basis file's ring header does not match the system's");
        return 1;
    }
    let ring = match system.ring() {
        Ok(ring) => ring,
        Err(e) => {
            eprintln!("error: {e}");
            return 1;
        }
    };
    let basis: Vec<Polynomial> = basis_desc
        .generators
        .iter()
        .filter(|p| !p.is_zero())
        .cloned()
        .collect();
    let gens: Vec<Polynomial> = system
        .generators
        .iter()
        .filter(|p| !p.is_zero())
        .cloned()
        .collect();
    let gb_ok = if basis.is_empty() {
        gens.is_empty()
    } else {
        is_groebner_basis(&ring, &basis)
    };
    let oracle_basis = buchberger(&ring, &gens);
    let mut eq_ok = gens.iter().all(|g| ideal_membership(&ring, g, &basis));
    eq_ok &= basis
        .iter()
        .all(|b| ideal_membership(&ring, b, &oracle_basis));
    println!("gb-check: {}", if gb_ok { "pass" } else { "fail" });
    println!("ideal-equality: {}", if eq_ok { "pass" } else { "fail" });
    if gb_ok && eq_ok {
        0
    } else {
        2
    }
}

fn read_system(path: &PathBuf) -> Result<SystemDescription, String> {
    let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    parse_system(&text).map_err(|e| format!("{}:{e}", path.display()))
}

fn load_system(args: &GbArgs) -> Result<SystemDescription, String> {
    match (&args.file, &args.bench) {
        (Some(_), Some(_)) => Err("give either a system file or --bench, not both".into()),
        (None, None) => Err("no input: give a system file or --bench <spec>".into()),
        (Some(path), None) => read_system(path),
        (None, Some(spec)) => bench_system(spec, args.seed),
    }
}

fn bench_system(spec: &str, seed: u64) -> Result<SystemDescription, String> {
    let parts: Vec<&str> = spec.split(':').collect();
    if parts.len() < 2 || parts.len() > 3 {
        return Err(format!(
            "bad bench spec '{spec}': expected <family>:<n>[:p]"
        ));
    }
    let n: usize = parts[1]
        .parse()
        .map_err(|_| format!("bad bench size '{}'", parts[1]))?;
    let modulus: u64 = match parts.get(2) {
        Some(p) => p.parse().map_err(|_| format!("bad bench modulus '{p}'"))?,
        None => 32003,
    };
    match parts[0] {
        "cyclic" => gen_benchmark(BenchFamily::Cyclic, n, modulus, MonomialOrder::GrevLex)
            .map_err(|e| e.to_string()),
        "katsura" => gen_benchmark(BenchFamily::Katsura, n, modulus, MonomialOrder::GrevLex)
            .map_err(|e| e.to_string()),
        "random" => {
            if !(1..=16).contains(&n) {
                return Err(format!("random systems support 1..=16 variables, got {n}"));
            }
            random_system(seed, n, modulus, MonomialOrder::GrevLex).map_err(|e| e.to_string())
        }
        other => Err(format!("unknown benchmark family '{other}'")),
    }
}
