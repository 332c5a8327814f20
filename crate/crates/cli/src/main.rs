//! Command-line front end: enumeration, statistics, the path/permutation
//! bijection, series expansion, continued fractions, and the verification
//! suites.  All integers are emitted as decimal strings; output is
//! byte-identical across runs for identical inputs.

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num::bigint::BigInt;
use serde_json::json;

use schroder_core::bijection::{path_to_perm, perm_to_path, transposition_word};
use schroder_core::formulas::{
    gf_avoid_12k, gf_avoid_12k_via_cf, gf_avoid_213k, gf_avoid_2314k, gf_avoid_3214k,
    gf_exactly_r_12k, gf_once_12k, gf_once_213k,
};
use schroder_core::path::SchroderPath;
use schroder_core::perm::{enumerate_class_with_limit, PatternSet, Permutation};
use schroder_core::series::RationalGF;
use schroder_core::{verify, DEFAULT_ENUM_LIMIT};

#[derive(Parser)]
#[command(name = "schroder", version, about = "Exact combinatorics of permutations avoiding 1243 and 2143")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List all permutations of one length avoiding the given patterns.
    Enumerate(EnumerateArgs),
    /// Count avoidance-class members by length.
    Count(CountArgs),
    /// Increasing-subsequence statistics of a permutation or path.
    Stats(StatsArgs),
    /// Map between Schröder paths and class permutations.
    Bijection(BijectionArgs),
    /// Expand a closed-form generating function.
    Series(SeriesArgs),
    /// Finite continued fraction for avoiding an increasing pattern.
    Cf(CfArgs),
    /// Run verification suites against brute-force oracles.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Bfile,
    Lines,
}

#[derive(Args)]
struct EnumerateArgs {
    /// Length of the permutations.
    #[arg(long)]
    n: usize,
    /// Comma-separated forbidden patterns, e.g. "1243,2143".
    #[arg(long, default_value = "")]
    avoid: String,
    /// Enumeration size cap.
    #[arg(long, default_value_t = DEFAULT_ENUM_LIMIT)]
    limit: usize,
    #[arg(long, value_enum, default_value_t = Format::Lines)]
    format: Format,
}

#[derive(Args)]
struct CountArgs {
    /// Comma-separated forbidden patterns.
    #[arg(long, default_value = "")]
    avoid: String,
    /// Count lengths 0..=n-max.
    #[arg(long = "n-max", conflicts_with = "n")]
    n_max: Option<usize>,
    /// Count a single length.
    #[arg(long)]
    n: Option<usize>,
    /// Enumeration size cap.
    #[arg(long, default_value_t = DEFAULT_ENUM_LIMIT)]
    limit: usize,
    /// Index offset for b-file output.
    #[arg(long, default_value_t = 0)]
    offset: i64,
    #[arg(long, value_enum, default_value_t = Format::Bfile)]
    format: Format,
}

#[derive(Args)]
struct StatsArgs {
    /// Permutation in one-line text form.
    #[arg(long, conflicts_with = "path")]
    perm: Option<String>,
    /// Schröder path as a string over N, E, D.
    #[arg(long)]
    path: Option<String>,
    /// Statistic cutoff K (defaults to size + 1).
    #[arg(long)]
    k: Option<usize>,
    #[arg(long, value_enum, default_value_t = Format::Lines)]
    format: Format,
}

#[derive(Args)]
struct BijectionArgs {
    /// Map a path to its class permutation.
    #[arg(long = "to-perm", conflicts_with = "to_path")]
    to_perm: Option<String>,
    /// Map a class permutation back to its path.
    #[arg(long = "to-path")]
    to_path: Option<String>,
    /// Also print the transposition word read off the triangle diagram.
    #[arg(long = "show-word", default_value_t = false)]
    show_word: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GfName {
    /// Avoiding 1 2 ... k.
    #[value(name = "avoid-12k")]
    Avoid12k,
    /// Avoiding 2 1 3 4 ... k.
    #[value(name = "avoid-213k")]
    Avoid213k,
    /// Avoiding 2 3 1 4 ... k.
    #[value(name = "avoid-2314k")]
    Avoid2314k,
    /// Avoiding 3 2 1 4 ... k.
    #[value(name = "avoid-3214k")]
    Avoid3214k,
    /// Containing 1 2 ... k exactly once.
    #[value(name = "once-12k")]
    Once12k,
    /// Containing 2 1 3 4 ... k exactly once.
    #[value(name = "once-213k")]
    Once213k,
    /// Containing 1 2 ... k exactly r times.
    #[value(name = "exactly-12k")]
    Exactly12k,
}

#[derive(Args)]
struct SeriesArgs {
    /// Which closed-form family to expand.
    #[arg(long, value_enum)]
    gf: GfName,
    /// Pattern-length parameter k.
    #[arg(long)]
    k: usize,
    /// Occurrence count for exactly-12k.
    #[arg(long)]
    r: Option<usize>,
    /// Expansion order (coefficients 0..=order).
    #[arg(long)]
    order: usize,
    /// Index offset for b-file output.
    #[arg(long, default_value_t = 0)]
    offset: i64,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
}

#[derive(Args)]
struct CfArgs {
    /// Number of levels is k - 1.
    #[arg(long)]
    k: usize,
    /// With an order, expand; otherwise print the rational function.
    #[arg(long)]
    order: Option<usize>,
    /// Index offset for b-file output.
    #[arg(long, default_value_t = 0)]
    offset: i64,
    #[arg(long, value_enum, default_value_t = Format::Lines)]
    format: Format,
}

#[derive(Args)]
struct VerifyArgs {
    /// Suite name or "all".
    #[arg(long, default_value = "all")]
    suite: String,
    /// Oracle sweep size.
    #[arg(long = "n-max", default_value_t = 7)]
    n_max: usize,
    /// Worker threads for the checks.
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Enumerate(a) => cmd_enumerate(a),
        Command::Count(a) => cmd_count(a),
        Command::Stats(a) => cmd_stats(a),
        Command::Bijection(a) => cmd_bijection(a),
        Command::Series(a) => cmd_series(a),
        Command::Cf(a) => cmd_cf(a),
        Command::Verify(a) => return cmd_verify(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn parse_patterns(text: &str) -> Result<PatternSet, String> {
    let mut patterns = Vec::new();
    for part in text.split(',') {
        let part = part.trim();
        if part.is_empty() {
            continue;
        }
        patterns.push(part.parse::<Permutation>().map_err(|e| e.to_string())?);
    }
    PatternSet::new(patterns).map_err(|e| e.to_string())
}

fn meta() -> serde_json::Value {
    json!({
        "version": env!("CARGO_PKG_VERSION"),
        "default_limit": DEFAULT_ENUM_LIMIT,
        "suites": verify::SUITES,
    })
}

/// Renders an indexed sequence of big integers in the chosen format.
fn print_sequence(
    values: &[BigInt],
    offset: i64,
    format: Format,
    query: serde_json::Value,
) {
    match format {
        Format::Bfile => {
            for (i, v) in values.iter().enumerate() {
                println!("{} {v}", offset + i as i64);
            }
        }
        Format::Csv => {
            let parts: Vec<String> = values.iter().map(BigInt::to_string).collect();
            println!("{}", parts.join(","));
        }
        Format::Lines => {
            for v in values {
                println!("{v}");
            }
        }
        Format::Json => {
            let rows: Vec<serde_json::Value> = values
                .iter()
                .enumerate()
                .map(|(i, v)| json!({"n": offset + i as i64, "value": v.to_string()}))
                .collect();
            let record = json!({"query": query, "values": rows, "meta": meta()});
            println!("{record}");
        }
    }
}

fn cmd_enumerate(a: EnumerateArgs) -> Result<(), String> {
    let set = parse_patterns(&a.avoid)?;
    let iter = enumerate_class_with_limit(a.n, &set, a.limit).map_err(|e| e.to_string())?;
    match a.format {
        Format::Json => {
            let perms: Vec<String> = iter.map(|p| p.to_string()).collect();
            let record = json!({
                "query": {"command": "enumerate", "n": a.n, "avoid": a.avoid},
                "permutations": perms,
                "meta": meta(),
            });
            println!("{record}");
        }
        _ => {
            for p in iter {
                println!("{p}");
            }
        }
    }
    Ok(())
}

fn cmd_count(a: CountArgs) -> Result<(), String> {
    let set = parse_patterns(&a.avoid)?;
    let (lo, hi) = match (a.n, a.n_max) {
        (Some(n), None) => (n, n),
        (None, Some(m)) => (0, m),
        (None, None) => return Err("one of --n or --n-max is required".into()),
        (Some(_), Some(_)) => unreachable!("clap conflicts_with"),
    };
    let mut values = Vec::new();
    for n in lo..=hi {
        let mut count = BigInt::from(0u32);
        for _ in enumerate_class_with_limit(n, &set, a.limit).map_err(|e| e.to_string())? {
            count += 1;
        }
        values.push(count);
    }
    let query = json!({"command": "count", "avoid": a.avoid, "n_lo": lo, "n_hi": hi});
    print_sequence(&values, a.offset + lo as i64, a.format, query);
    Ok(())
}

fn cmd_stats(a: StatsArgs) -> Result<(), String> {
    match (&a.perm, &a.path) {
        (Some(text), None) => {
            let pi: Permutation = text.parse().map_err(|e: schroder_core::Error| e.to_string())?;
            let cutoff = a.k.unwrap_or(pi.len() + 1);
            let taus = pi.stat_vector(cutoff).values;
            let m = pi.m_statistic();
            let noninv = pi.noninversions();
            match a.format {
                Format::Json => {
                    let record = json!({
                        "query": {"command": "stats", "perm": text},
                        "tau": taus.iter().map(BigInt::to_string).collect::<Vec<_>>(),
                        "m": m.to_string(),
                        "noninversions": noninv.to_string(),
                        "meta": meta(),
                    });
                    println!("{record}");
                }
                _ => {
                    let parts: Vec<String> = taus.iter().map(BigInt::to_string).collect();
                    println!("tau: {}", parts.join(" "));
                    println!("m: {m}");
                    println!("noninversions: {noninv}");
                }
            }
            Ok(())
        }
        (None, Some(text)) => {
            let path: SchroderPath = text.parse().map_err(|e: schroder_core::Error| e.to_string())?;
            let cutoff = a.k.unwrap_or(path.size() + 1);
            let taus = path.stat_vector(cutoff);
            match a.format {
                Format::Json => {
                    let record = json!({
                        "query": {"command": "stats", "path": text},
                        "size": path.size(),
                        "tau": taus.iter().map(BigInt::to_string).collect::<Vec<_>>(),
                        "meta": meta(),
                    });
                    println!("{record}");
                }
                _ => {
                    let parts: Vec<String> = taus.iter().map(BigInt::to_string).collect();
                    println!("size: {}", path.size());
                    println!("tau: {}", parts.join(" "));
                }
            }
            Ok(())
        }
        _ => Err("exactly one of --perm or --path is required".into()),
    }
}

fn cmd_bijection(a: BijectionArgs) -> Result<(), String> {
    match (&a.to_perm, &a.to_path) {
        (Some(text), None) => {
            let path: SchroderPath = text.parse().map_err(|e: schroder_core::Error| e.to_string())?;
            if a.show_word {
                println!("word: {}", transposition_word(&path));
            }
            println!("{}", path_to_perm(&path));
            Ok(())
        }
        (None, Some(text)) => {
            let pi: Permutation = text.parse().map_err(|e: schroder_core::Error| e.to_string())?;
            let path = perm_to_path(&pi).map_err(|e| e.to_string())?;
            if a.show_word {
                println!("word: {}", transposition_word(&path));
            }
            println!("{path}");
            Ok(())
        }
        _ => Err("exactly one of --to-perm or --to-path is required".into()),
    }
}

fn gf_for(a: &SeriesArgs) -> Result<RationalGF, String> {
    let k = a.k;
    match a.gf {
        GfName::Avoid12k => Ok(gf_avoid_12k(k)),
        GfName::Avoid213k => Ok(gf_avoid_213k(k)),
        GfName::Avoid2314k => gf_avoid_2314k(k).map_err(|e| e.to_string()),
        GfName::Avoid3214k => gf_avoid_3214k(k).map_err(|e| e.to_string()),
        GfName::Once12k => gf_once_12k(k).map_err(|e| e.to_string()),
        GfName::Once213k => gf_once_213k(k).map_err(|e| e.to_string()),
        GfName::Exactly12k => {
            let r = a.r.ok_or("--r is required for exactly-12k")?;
            gf_exactly_r_12k(k, r).map_err(|e| e.to_string())
        }
    }
}

fn cmd_series(a: SeriesArgs) -> Result<(), String> {
    let gf = gf_for(&a)?;
    let values = gf.expand_integer(a.order).map_err(|e| e.to_string())?;
    let query = json!({
        "command": "series",
        "k": a.k,
        "r": a.r,
        "order": a.order,
    });
    print_sequence(&values, a.offset, a.format, query);
    Ok(())
}

fn cmd_cf(a: CfArgs) -> Result<(), String> {
    if a.k < 1 {
        return Err("--k must be at least 1".into());
    }
    let gf = gf_avoid_12k_via_cf(a.k).map_err(|e| e.to_string())?;
    match a.order {
        None => {
            println!("num: {}", gf.num());
            println!("den: {}", gf.den());
            Ok(())
        }
        Some(order) => {
            let values = gf.expand_integer(order).map_err(|e| e.to_string())?;
            let query = json!({"command": "cf", "k": a.k, "order": order});
            print_sequence(&values, a.offset, a.format, query);
            Ok(())
        }
    }
}

fn cmd_verify(a: VerifyArgs) -> ExitCode {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(a.jobs.max(1))
        .build();
    let pool = match pool {
        Ok(p) => p,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let checks = pool.install(|| verify::run(&a.suite, a.n_max));
    let checks = match checks {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let failed = checks.iter().filter(|c| !c.pass).count();
    match a.format {
        Format::Json => {
            let rows: Vec<serde_json::Value> = checks
                .iter()
                .map(|c| {
                    json!({
                        "suite": c.suite,
                        "name": c.name,
                        "pass": c.pass,
                        "detail": c.detail,
                    })
                })
                .collect();
            let record = json!({
                "query": {"command": "verify", "suite": a.suite, "n_max": a.n_max},
                "checks": rows,
                "summary": {"total": checks.len(), "failed": failed},
                "meta": meta(),
            });
            println!("{record}");
        }
        _ => {
            for c in &checks {
                let status = if c.pass { "PASS" } else { "FAIL" };
                match &c.detail {
                    Some(d) => println!("{status} [{}] {} -- {d}", c.suite, c.name),
                    None => println!("{status} [{}] {}", c.suite, c.name),
                }
            }
            println!("total {} checks, {failed} failed", checks.len());
        }
    }
    if failed > 0 {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    }
}
