//! `apery` — command-line front end for the congruence checker.
//!
//! Subcommands: `list` the claim registry, `verify` claims over a prime
//! range with a worker pool, `seq` to print exact sequence values, `rep`
//! to print quadratic-form representations. Reports are written atomically
//! and are byte-identical regardless of worker count.

use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::atomic::{AtomicBool, AtomicUsize, Ordering};
use std::sync::Mutex;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use apery_core::arith::{is_prime, PrimeRange};
use apery_core::claims::{collate, pairs};
use apery_core::sequences::{seq_exact, SequenceId};
use apery_core::special::{quad_rep, QuadForm};
use apery_core::{registry, select, Claim, ClaimResult, Report, Status};

#[derive(Parser)]
#[command(
    name = "apery",
    version,
    about = "Exact verification of congruences for Apéry-like numbers"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// List every registered claim
    List,
    /// Evaluate claims over a prime range and emit a report
    Verify(VerifyArgs),
    /// Print exact sequence values
    Seq {
        /// Sequence tag: A, A', D, T, b, f, S, a, Q, W, g4
        #[arg(long)]
        id: String,
        /// Inclusive index range lo:hi
        #[arg(long)]
        n: String,
    },
    /// Print the normalized representation s*p = a*x^2 + d*y^2
    Rep {
        /// Odd prime
        #[arg(long)]
        p: u64,
        /// Catalogue form as s:a:d, e.g. 1:1:1 or 4:1:27
        #[arg(long)]
        form: String,
    },
}

#[derive(Args)]
struct VerifyArgs {
    /// Comma list of claim ids, prefixes, trailing-star globs, or the
    /// groups all / theorems / conjectures
    #[arg(long, default_value = "all")]
    claims: String,
    /// Inclusive prime range lo:hi
    #[arg(long)]
    primes: String,
    /// Worker threads
    #[arg(long, env = "APERY_JOBS", default_value_t = 1)]
    jobs: usize,
    /// Largest prime at which heavy claims (window length ~p^2..p^3) run
    #[arg(long, default_value_t = 31)]
    heavy_max: u64,
    /// Report file; the report goes to stdout when omitted
    #[arg(long)]
    output: Option<PathBuf>,
    /// Report format
    #[arg(long, value_enum, default_value_t = Format::Jsonl)]
    format: Format,
    /// Stop dispatching work after the first failed result
    #[arg(long)]
    fail_fast: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Jsonl,
    Csv,
}

fn main() -> ExitCode {
    match Cli::parse().cmd {
        Cmd::List => cmd_list(),
        Cmd::Verify(args) => cmd_verify(&args),
        Cmd::Seq { id, n } => cmd_seq(&id, &n),
        Cmd::Rep { p, form } => cmd_rep(p, &form),
    }
}

fn cmd_list() -> ExitCode {
    let mut out = String::new();
    for c in registry() {
        let heavy = if c.heavy { "heavy" } else { "" };
        out.push_str(&format!(
            "{:<12} mod p^{} {:<5} [{}] {}\n",
            c.id, c.modulus_exponent, heavy, c.applicability, c.description
        ));
    }
    print!("{}", out);
    ExitCode::SUCCESS
}

/// Parse "lo:hi" (inclusive, lo <= hi).
fn parse_span(s: &str) -> Option<(u64, u64)> {
    let (lo, hi) = s.split_once(':')?;
    let lo = lo.trim().parse().ok()?;
    let hi = hi.trim().parse().ok()?;
    (lo <= hi).then_some((lo, hi))
}

fn cmd_verify(args: &VerifyArgs) -> ExitCode {
    let Some(claims) = select(&args.claims) else {
        eprintln!("error: selector '{}' matches no registered claim", args.claims);
        return ExitCode::from(2);
    };
    let Some((lo, hi)) = parse_span(&args.primes) else {
        eprintln!("error: --primes wants lo:hi with lo <= hi, got '{}'", args.primes);
        return ExitCode::from(2);
    };
    if args.jobs == 0 {
        eprintln!("error: --jobs must be at least 1");
        return ExitCode::from(2);
    }

    let range = PrimeRange::new(lo, hi);
    let report = run_parallel(&claims, &range, args.heavy_max, args.jobs, args.fail_fast);
    let bytes = match args.format {
        Format::Jsonl => render_jsonl(&report),
        Format::Csv => render_csv(&report),
    };

    if let Some(path) = &args.output {
        if let Err(e) = write_atomic(path, &bytes) {
            eprintln!("error: cannot write {}: {}", path.display(), e);
            return ExitCode::FAILURE;
        }
        // the report went to a file, so the human summary can use stdout
        let mut stdout = io::stdout().lock();
        let _ = stdout.write_all(human_summary(&report).as_bytes());
        let _ = stdout.flush();
    } else {
        let mut stdout = io::stdout().lock();
        if stdout.write_all(&bytes).and_then(|_| stdout.flush()).is_err() {
            return ExitCode::FAILURE;
        }
        eprint!("{}", human_summary(&report));
    }

    let failed: u64 = report.tallies.iter().map(|t| t.failed).sum();
    if failed > 0 {
        ExitCode::FAILURE
    } else {
        ExitCode::SUCCESS
    }
}

/// Evaluate the (claim, prime) grid with `jobs` workers. Indices are claimed
/// in order and every claimed index completes, so the filled slots always
/// form a prefix of the grid; output is therefore independent of `jobs`.
fn run_parallel(
    claims: &[&'static Claim],
    range: &PrimeRange,
    heavy_max: u64,
    jobs: usize,
    fail_fast: bool,
) -> Report {
    let grid = pairs(claims, range, heavy_max);
    let n = grid.len();
    let slots: Vec<Mutex<Option<ClaimResult>>> = (0..n).map(|_| Mutex::new(None)).collect();
    let next = AtomicUsize::new(0);
    let stop = AtomicBool::new(false);
    let workers = jobs.min(n.max(1));
    std::thread::scope(|scope| {
        for _ in 0..workers {
            scope.spawn(|| loop {
                if fail_fast && stop.load(Ordering::Relaxed) {
                    break;
                }
                let i = next.fetch_add(1, Ordering::Relaxed);
                if i >= n {
                    break;
                }
                let (claim, p) = grid[i];
                let r = claim.run(p);
                if fail_fast && r.status == Status::Failed {
                    stop.store(true, Ordering::Relaxed);
                }
                *slots[i].lock().unwrap() = Some(r);
            });
        }
    });
    let mut results = Vec::with_capacity(n);
    for slot in slots {
        match slot.into_inner().unwrap() {
            Some(r) => results.push(r),
            None => break, // fail-fast stopped claiming work here
        }
    }
    if fail_fast {
        // cut at the first failure in canonical order so the report does
        // not depend on how far other workers had raced ahead
        if let Some(i) = results.iter().position(|r| r.status == Status::Failed) {
            results.truncate(i + 1);
        }
    }
    collate(claims, range.lo, range.hi, results)
}

#[derive(Serialize)]
struct Row<'a> {
    claim: &'a str,
    p: u64,
    status: &'a str,
    lhs: &'a str,
    rhs: &'a str,
    witness: Option<&'a str>,
    ms: u64,
}

fn row(r: &ClaimResult) -> Row<'_> {
    Row {
        claim: &r.claim_id,
        p: r.p,
        status: r.status.as_str(),
        lhs: &r.lhs,
        rhs: &r.rhs,
        witness: r.witness.as_deref(),
        ms: r.elapsed_ms,
    }
}

#[derive(Serialize)]
struct TallyRow<'a> {
    claim: &'a str,
    verified: u64,
    failed: u64,
    skipped: u64,
    indeterminate: u64,
}

#[derive(Serialize)]
struct SummaryLine<'a> {
    summary: SummaryBody<'a>,
}

#[derive(Serialize)]
struct SummaryBody<'a> {
    lo: u64,
    hi: u64,
    version: &'a str,
    claims: &'a [&'a str],
    total: u64,
    verified: u64,
    failed: u64,
    skipped: u64,
    indeterminate: u64,
    tallies: Vec<TallyRow<'a>>,
}

fn summary_line(report: &Report) -> SummaryLine<'_> {
    let sum = |f: fn(&apery_core::claims::ClaimTally) -> u64| -> u64 {
        report.tallies.iter().map(f).sum()
    };
    SummaryLine {
        summary: SummaryBody {
            lo: report.lo,
            hi: report.hi,
            version: report.version,
            claims: &report.claim_ids,
            total: report.total,
            verified: sum(|t| t.verified),
            failed: sum(|t| t.failed),
            skipped: sum(|t| t.skipped),
            indeterminate: sum(|t| t.indeterminate),
            tallies: report
                .tallies
                .iter()
                .map(|t| TallyRow {
                    claim: t.claim_id,
                    verified: t.verified,
                    failed: t.failed,
                    skipped: t.skipped,
                    indeterminate: t.indeterminate,
                })
                .collect(),
        },
    }
}

fn render_jsonl(report: &Report) -> Vec<u8> {
    let mut out = Vec::new();
    for r in &report.results {
        serde_json::to_writer(&mut out, &row(r)).expect("jsonl row");
        out.push(b'\n');
    }
    serde_json::to_writer(&mut out, &summary_line(report)).expect("jsonl summary");
    out.push(b'\n');
    out
}

/// CSV keeps the per-result rows only; the aggregate numbers live in the
/// human summary and the JSONL format.
fn render_csv(report: &Report) -> Vec<u8> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["claim", "p", "status", "lhs", "rhs", "witness", "ms"])
        .expect("csv header");
    for r in &report.results {
        w.write_record([
            r.claim_id.as_str(),
            &r.p.to_string(),
            r.status.as_str(),
            &r.lhs,
            &r.rhs,
            r.witness.as_deref().unwrap_or(""),
            &r.elapsed_ms.to_string(),
        ])
        .expect("csv row");
    }
    w.into_inner().expect("csv buffer")
}

/// Render a residue string in the canonical `val:unit (mod p^k)` form; the
/// non-numeric placeholders ("-", "ok(n)") pass through unchanged.
fn canon_residue(s: &str, p: u64, k: u32) -> String {
    let Ok(r) = s.parse::<u64>() else {
        return s.to_string();
    };
    let pk = p.pow(k);
    let mut r = r % pk;
    if r == 0 {
        return format!("{}:0 (mod {}^{})", k, p, k);
    }
    let mut v = 0;
    while r.is_multiple_of(p) {
        r /= p;
        v += 1;
    }
    format!("{}:{} (mod {}^{})", v, r, p, k)
}

fn human_summary(report: &Report) -> String {
    let mut out = String::new();
    let count = |f: fn(&apery_core::claims::ClaimTally) -> u64| -> u64 {
        report.tallies.iter().map(f).sum()
    };
    out.push_str(&format!(
        "claims: {}  primes: {}:{}  pairs: {}\n",
        report.claim_ids.len(),
        report.lo,
        report.hi,
        report.total
    ));
    out.push_str(&format!(
        "verified: {}  failed: {}  skipped: {}  indeterminate: {}\n",
        count(|t| t.verified),
        count(|t| t.failed),
        count(|t| t.skipped),
        count(|t| t.indeterminate)
    ));
    for r in &report.non_verified {
        if r.status == Status::Skipped {
            continue;
        }
        let k = apery_core::claims::find(&r.claim_id)
            .map(|c| c.modulus_exponent)
            .unwrap_or(1);
        out.push_str(&format!(
            "{} {} p={}: lhs {} vs rhs {}{}\n",
            r.status.as_str().to_uppercase(),
            r.claim_id,
            r.p,
            canon_residue(&r.lhs, r.p, k),
            canon_residue(&r.rhs, r.p, k),
            r.witness
                .as_deref()
                .map(|w| format!("  [{}]", w))
                .unwrap_or_default()
        ));
    }
    out
}

/// Write through a temp file in the destination directory and rename into
/// place, so an interrupted run never leaves a partial report at `path`.
fn write_atomic(path: &Path, bytes: &[u8]) -> io::Result<()> {
    let dir = match path.parent() {
        Some(d) if !d.as_os_str().is_empty() => d,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    tmp.write_all(bytes)?;
    tmp.flush()?;
    tmp.persist(path).map_err(|e| e.error)?;
    Ok(())
}

fn cmd_seq(id: &str, n: &str) -> ExitCode {
    let Some(sid) = SequenceId::parse(id) else {
        eprintln!("error: unknown sequence tag '{}'", id);
        return ExitCode::from(2);
    };
    let Some((lo, hi)) = parse_span(n) else {
        eprintln!("error: --n wants lo:hi with lo <= hi, got '{}'", n);
        return ExitCode::from(2);
    };
    let vals: Vec<String> = (lo..=hi).map(|i| seq_exact(&sid, i).to_string()).collect();
    println!("{}", vals.join(", "));
    ExitCode::SUCCESS
}

fn cmd_rep(p: u64, form: &str) -> ExitCode {
    if p < 3 || !is_prime(p) {
        eprintln!("error: --p wants an odd prime, got {}", p);
        return ExitCode::from(2);
    }
    let Some(f) = QuadForm::parse(form) else {
        eprintln!("error: --form wants a catalogue form s:a:d, got '{}'", form);
        return ExitCode::from(2);
    };
    let term = |c: u64, v: i64| {
        if v < 0 {
            format!("{}*({})^2", c, v)
        } else {
            format!("{}*{}^2", c, v)
        }
    };
    match quad_rep(p, &f) {
        Some(r) => {
            let norm = if r.normalized { "" } else { "  [unnormalized]" };
            println!(
                "{}*{} = {} + {}  (x, y) = ({}, {}){}",
                f.s,
                p,
                term(f.a, r.x),
                term(f.d, r.y),
                r.x,
                r.y,
                norm
            );
        }
        None => println!("no representation of {}*{} by {}*x^2 + {}*y^2", f.s, p, f.a, f.d),
    }
    ExitCode::SUCCESS
}
