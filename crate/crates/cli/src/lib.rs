//! Command-line front end for the `socksort` library.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::time::Instant;

use clap::{ArgGroup, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use socksort::enumeration::{count_sortable, find_periodic, CountTable};
use socksort::series::{
    counts, estimate_k_with_precision, p_closed_form, p_functional_eq, pq_closed_form,
    pq_functional_eq, refined_counts, BiSeries, UniSeries,
};
use socksort::sorter::{
    iterate, sort_depth, tightness_witness, unsortable_witness, Containment, StackSorter,
    Terminator,
};
use socksort::{Error, SockMultiset, SockPattern, SockSequence};

/// Largest length accepted by `count` and `verify`.
pub const MAX_ENUMERATION_LEN: usize = 14;

/// Reference value of the asymptotic constant `K`.
pub const K_REFERENCE: f64 = 0.34313;

#[derive(Debug, Parser)]
#[command(
    name = "socksort",
    version,
    about = "Pattern-avoiding stack sorting of sock sequences"
)]
pub struct Cli {
    /// Also write a JSON run report to this file.
    #[arg(long, global = true, value_name = "FILE")]
    pub report: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Csv,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Closed,
    Functional,
}

#[derive(Clone, Debug, PartialEq, Subcommand, Serialize, Deserialize)]
#[serde(tag = "command", rename_all = "lowercase")]
pub enum Command {
    /// One pass of the σ-avoiding stack machine.
    Sort {
        #[arg(long)]
        sigma: String,
        #[arg(long)]
        input: String,
        /// Only consecutive factors of the stack count as occurrences.
        #[arg(long)]
        consecutive: bool,
        /// Print the push/pop log as JSON after the output.
        #[arg(long)]
        trace: bool,
    },
    /// Number of passes until the input is sorted.
    Depth {
        #[arg(long)]
        sigma: String,
        #[arg(long)]
        input: String,
        #[arg(long, default_value_t = 64)]
        cap: usize,
    },
    /// Brute-force counts of patterns sorted within k foot-sorting passes.
    Count {
        #[arg(long)]
        max_len: usize,
        #[arg(long = "k", default_value_t = 1)]
        k: usize,
        #[arg(long)]
        refined: bool,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        #[arg(long)]
        threads: Option<usize>,
    },
    /// Coefficients of the generating function for 1-sortable patterns.
    Gf {
        #[arg(long)]
        terms: usize,
        #[arg(long)]
        bivariate: bool,
        #[arg(long, value_enum, default_value_t = Method::Closed)]
        method: Method,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Compares brute-force counts with both series expansions.
    Verify {
        #[arg(long)]
        max_len: usize,
        #[arg(long)]
        refined: bool,
        #[arg(long)]
        threads: Option<usize>,
    },
    /// Growth rate and leading constant of the 1-sortable counts.
    Asympt {
        #[arg(long)]
        terms: usize,
        #[arg(long, default_value_t = 30)]
        precision: u32,
    },
    /// All cycles of φ_σ on the arrangements of a multiset.
    Periodic {
        #[arg(long)]
        sigma: String,
        #[arg(long)]
        multiset: String,
        #[arg(long, default_value_t = 10)]
        max_period: usize,
        #[arg(long, default_value_t = 100)]
        max_transient: usize,
    },
    /// A sequence needing many passes, or one that is never sorted.
    #[command(group(ArgGroup::new("mode").required(true).args(["tight", "sigma"])))]
    Witness {
        #[arg(long, value_name = "N")]
        tight: Option<usize>,
        #[arg(long, requires = "multiset")]
        sigma: Option<String>,
        #[arg(long, requires = "sigma")]
        multiset: Option<String>,
    },
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Sort { .. } => "sort",
            Command::Depth { .. } => "depth",
            Command::Count { .. } => "count",
            Command::Gf { .. } => "gf",
            Command::Verify { .. } => "verify",
            Command::Asympt { .. } => "asympt",
            Command::Periodic { .. } => "periodic",
            Command::Witness { .. } => "witness",
        }
    }
}

/// What a command printed and how it ended.
#[derive(Clone, Debug, Default)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub exit_code: i32,
    pub results: Value,
}

impl Outcome {
    fn ok(stdout: String, results: Value) -> Self {
        Self {
            stdout,
            results,
            ..Self::default()
        }
    }
}

/// A failed invocation.
#[derive(Debug)]
pub enum Failure {
    /// Bad input or an unmet precondition (exit 2).
    Usage(String),
    /// A computed check did not hold (exit 1).
    Internal(String),
}

impl Failure {
    pub fn exit_code(&self) -> i32 {
        match self {
            Failure::Usage(_) => 2,
            Failure::Internal(_) => 1,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::Internal(m) => m,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Series(_) => Failure::Internal(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

/// JSON record of one invocation.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub command: String,
    pub parameters: Command,
    pub exit_code: i32,
    pub results: Value,
    pub wall_time_secs: f64,
}

pub fn run(command: &Command) -> Result<Outcome, Failure> {
    match command {
        Command::Sort {
            sigma,
            input,
            consecutive,
            trace,
        } => cmd_sort(sigma, input, *consecutive, *trace),
        Command::Depth { sigma, input, cap } => cmd_depth(sigma, input, *cap),
        Command::Count {
            max_len,
            k,
            refined,
            format,
            threads,
        } => with_threads(*threads, || cmd_count(*max_len, *k, *refined, *format)),
        Command::Gf {
            terms,
            bivariate,
            method,
            format,
        } => cmd_gf(*terms, *bivariate, *method, *format),
        Command::Verify {
            max_len,
            refined,
            threads,
        } => with_threads(*threads, || cmd_verify(*max_len, *refined)),
        Command::Asympt { terms, precision } => cmd_asympt(*terms, *precision),
        Command::Periodic {
            sigma,
            multiset,
            max_period,
            max_transient,
        } => cmd_periodic(sigma, multiset, *max_period, *max_transient),
        Command::Witness {
            tight,
            sigma,
            multiset,
        } => match (tight, sigma, multiset) {
            (Some(n), None, None) => cmd_witness_tight(*n),
            (None, Some(s), Some(m)) => cmd_witness_unsortable(s, m),
            _ => Err(Failure::Usage(
                "witness takes either --tight N or --sigma with --multiset".into(),
            )),
        },
    }
}

/// Runs `command` and packages the result as a report.
pub fn run_with_report(command: &Command) -> (Result<Outcome, Failure>, RunReport) {
    let start = Instant::now();
    let result = run(command);
    let (exit_code, results) = match &result {
        Ok(o) => (o.exit_code, o.results.clone()),
        Err(f) => (f.exit_code(), json!({ "error": f.message() })),
    };
    let report = RunReport {
        command: command.name().to_string(),
        parameters: command.clone(),
        exit_code,
        results,
        wall_time_secs: start.elapsed().as_secs_f64(),
    };
    (result, report)
}

fn with_threads<F>(threads: Option<usize>, f: F) -> Result<Outcome, Failure>
where
    F: FnOnce() -> Result<Outcome, Failure> + Send,
{
    let Some(t) = threads else {
        return f();
    };
    if t == 0 {
        return Err(Failure::Usage("--threads must be at least 1".into()));
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(t)
        .build()
        .map_err(|e| Failure::Internal(format!("cannot start worker pool: {e}")))?;
    pool.install(f)
}

fn parse_pattern(text: &str) -> Result<SockPattern, Failure> {
    text.parse()
        .map_err(|e: Error| Failure::Usage(format!("--sigma {text:?}: {e}")))
}

fn parse_sequence(text: &str) -> Result<SockSequence, Failure> {
    text.parse()
        .map_err(|e: Error| Failure::Usage(format!("--input {text:?}: {e}")))
}

fn parse_multiset(text: &str) -> Result<SockMultiset, Failure> {
    text.parse()
        .map_err(|e: Error| Failure::Usage(format!("--multiset {text:?}: {e}")))
}

fn check_enumeration_len(max_len: usize) -> Result<(), Failure> {
    if max_len == 0 || max_len > MAX_ENUMERATION_LEN {
        return Err(Failure::Usage(format!(
            "--max-len must be between 1 and {MAX_ENUMERATION_LEN}"
        )));
    }
    Ok(())
}

fn cmd_sort(sigma: &str, input: &str, consecutive: bool, trace: bool) -> Result<Outcome, Failure> {
    let sigma = parse_pattern(sigma)?;
    let input = parse_sequence(input)?;
    let containment = if consecutive {
        Containment::Consecutive
    } else {
        Containment::Classical
    };
    let machine = StackSorter::with_containment(sigma, containment)?;
    let log = machine.apply_traced(&input);
    let mut stdout = format!("{}\n", log.output);
    let mut results = json!({ "output": log.output.to_string() });
    if trace {
        let events = log.to_json();
        writeln!(stdout, "{events}").expect("write to String");
        results["trace"] = events;
    }
    Ok(Outcome::ok(stdout, results))
}

fn cmd_depth(sigma: &str, input: &str, cap: usize) -> Result<Outcome, Failure> {
    let sigma = parse_pattern(sigma)?;
    let input = parse_sequence(input)?;
    let depth = sort_depth(&sigma, &input, cap)?;
    let stdout = match depth {
        Some(d) => format!("{d}\n"),
        None => "none\n".to_string(),
    };
    Ok(Outcome::ok(stdout, json!({ "depth": depth, "cap": cap })))
}

fn cmd_count(max_len: usize, k: usize, refined: bool, format: Format) -> Result<Outcome, Failure> {
    check_enumeration_len(max_len)?;
    if refined {
        let table = CountTable::build(max_len, k);
        let json = table.to_json();
        let stdout = match format {
            Format::Csv => table.to_csv(),
            Format::Json => format!("{json}\n"),
        };
        return Ok(Outcome::ok(stdout, json));
    }
    let rows: Vec<(usize, u64)> = (1..=max_len).map(|n| (n, count_sortable(n, k))).collect();
    let json = json!({
        "k": k,
        "counts": rows.iter().map(|&(n, c)| json!({ "n": n, "count": c })).collect::<Vec<_>>(),
    });
    let stdout = match format {
        Format::Csv => {
            let mut out = String::from("n,count\n");
            for (n, c) in &rows {
                writeln!(out, "{n},{c}").expect("write to String");
            }
            out
        }
        Format::Json => format!("{json}\n"),
    };
    Ok(Outcome::ok(stdout, json))
}

fn univariate(terms: usize, method: Method) -> Result<UniSeries, Failure> {
    Ok(match method {
        Method::Closed => p_closed_form(terms)?,
        Method::Functional => p_functional_eq(terms)?,
    })
}

fn bivariate(terms: usize, method: Method) -> Result<BiSeries, Failure> {
    Ok(match method {
        Method::Closed => pq_closed_form(terms)?,
        Method::Functional => pq_functional_eq(terms)?,
    })
}

fn cmd_gf(terms: usize, bivar: bool, method: Method, format: Format) -> Result<Outcome, Failure> {
    if terms == 0 {
        return Err(Failure::Usage("--terms must be at least 1".into()));
    }
    let (csv, json) = if bivar {
        let p = bivariate(terms, method)?;
        let mut csv = String::from("n,coefficient\n");
        let mut rows = Vec::new();
        for n in 1..=terms {
            writeln!(csv, "{n},\"{}\"", p.coeff(n)).expect("write to String");
            let by_r: Vec<String> = refined_counts(&p, n)
                .iter()
                .map(|c| c.to_string())
                .collect();
            rows.push(json!({ "n": n, "by_r": by_r }));
        }
        (
            csv,
            json!({ "method": method, "bivariate": true, "coefficients": rows }),
        )
    } else {
        let s = counts(&univariate(terms, method)?);
        let mut csv = String::from("n,s(n)\n");
        let mut rows = Vec::new();
        for (n, c) in s.iter().enumerate().skip(1) {
            writeln!(csv, "{n},{c}").expect("write to String");
            rows.push(json!({ "n": n, "count": c.to_string() }));
        }
        (
            csv,
            json!({ "method": method, "bivariate": false, "coefficients": rows }),
        )
    };
    let stdout = match format {
        Format::Csv => csv,
        Format::Json => format!("{json}\n"),
    };
    Ok(Outcome::ok(stdout, json))
}

fn status(ok: bool) -> &'static str {
    if ok {
        "MATCH"
    } else {
        "MISMATCH"
    }
}

fn cmd_verify(max_len: usize, refined: bool) -> Result<Outcome, Failure> {
    check_enumeration_len(max_len)?;
    let mut table = String::new();
    let mut rows = Vec::new();
    let mut first_mismatch: Option<(usize, Option<usize>)> = None;
    if refined {
        let brute = CountTable::build(max_len, 1);
        let closed = pq_closed_form(max_len)?;
        let functional = pq_functional_eq(max_len)?;
        writeln!(
            table,
            "{:>3} {:>3} {:>12} {:>12} {:>12}  status",
            "n", "r", "brute", "closed", "functional"
        )
        .expect("write to String");
        for n in 1..=max_len {
            let a = refined_counts(&closed, n);
            let b = refined_counts(&functional, n);
            let width = a.len().max(b.len()).max(n + 1);
            for r in 1..width {
                let bf = brute.entry(n, r).to_string();
                let ca = a
                    .get(r)
                    .map(|c| c.to_string())
                    .unwrap_or_else(|| "0".into());
                let cb = b
                    .get(r)
                    .map(|c| c.to_string())
                    .unwrap_or_else(|| "0".into());
                let ok = bf == ca && bf == cb;
                if !ok && first_mismatch.is_none() {
                    first_mismatch = Some((n, Some(r)));
                }
                writeln!(
                    table,
                    "{n:>3} {r:>3} {bf:>12} {ca:>12} {cb:>12}  {}",
                    status(ok)
                )
                .expect("write to String");
                rows.push(json!({ "n": n, "r": r, "brute": bf, "closed": ca, "functional": cb, "match": ok }));
            }
        }
    } else {
        let closed = counts(&p_closed_form(max_len)?);
        let functional = counts(&p_functional_eq(max_len)?);
        writeln!(
            table,
            "{:>3} {:>12} {:>12} {:>12}  status",
            "n", "brute", "closed", "functional"
        )
        .expect("write to String");
        for n in 1..=max_len {
            let bf = count_sortable(n, 1).to_string();
            let (ca, cb) = (closed[n].to_string(), functional[n].to_string());
            let ok = bf == ca && bf == cb;
            if !ok && first_mismatch.is_none() {
                first_mismatch = Some((n, None));
            }
            writeln!(table, "{n:>3} {bf:>12} {ca:>12} {cb:>12}  {}", status(ok))
                .expect("write to String");
            rows.push(json!({ "n": n, "brute": bf, "closed": ca, "functional": cb, "match": ok }));
        }
    }
    let mut outcome = Outcome::ok(table, json!({ "refined": refined, "rows": rows }));
    if let Some((n, r)) = first_mismatch {
        outcome.exit_code = 1;
        outcome.stderr = match r {
            Some(r) => format!("first mismatch at n={n}, r={r}\n"),
            None => format!("first mismatch at n={n}\n"),
        };
    }
    outcome.results["all_match"] = json!(first_mismatch.is_none());
    Ok(outcome)
}

/// Rounds to six significant digits.
fn sig6(x: f64) -> f64 {
    format!("{x:.5e}").parse().expect("formatted float parses")
}

fn cmd_asympt(terms: usize, precision: u32) -> Result<Outcome, Failure> {
    let est = estimate_k_with_precision(terms, precision)?;
    let json = json!({
        "x0": sig6(est.x0),
        "c": sig6(est.c),
        "N": est.n_used,
        "K_estimate": sig6(est.k_estimate),
        "K_reference": K_REFERENCE,
    });
    Ok(Outcome::ok(format!("{json}\n"), json))
}

fn cmd_periodic(
    sigma: &str,
    multiset: &str,
    max_period: usize,
    max_transient: usize,
) -> Result<Outcome, Failure> {
    let sigma = parse_pattern(sigma)?;
    let multiset = parse_multiset(multiset)?;
    let report = find_periodic(&sigma, &multiset, max_period, max_transient)?;
    let mut stdout = String::from("period,representative,sorted,members\n");
    for c in &report.cycles {
        let members: Vec<String> = c.members.iter().map(|m| m.to_string()).collect();
        writeln!(
            stdout,
            "{},{},{},{}",
            c.period,
            c.representative,
            c.sorted,
            members.join(" ")
        )
        .expect("write to String");
    }
    let mut outcome = Outcome::ok(
        stdout,
        serde_json::to_value(&report).expect("cycle report serializes"),
    );
    if !report.is_complete() {
        outcome.stderr = format!(
            "{} starting points did not reach a cycle within the budget\n",
            report.unresolved_starts
        );
    }
    Ok(outcome)
}

fn cmd_witness_tight(n: usize) -> Result<Outcome, Failure> {
    let w = tightness_witness(n)?;
    let depth = sort_depth(&socksort::sorter::aba(), &w, w.distinct_count())?;
    let mut outcome = Outcome::ok(
        format!("{w}\n"),
        json!({ "witness": w.to_string(), "depth": depth }),
    );
    match depth {
        Some(d) => outcome.stderr = format!("certified: sorted after exactly {d} passes\n"),
        None => {
            outcome.exit_code = 1;
            outcome.stderr = format!("certificate failed: {w} is not sorted within {n} passes\n");
        }
    }
    Ok(outcome)
}

fn cmd_witness_unsortable(sigma: &str, multiset: &str) -> Result<Outcome, Failure> {
    let sigma = parse_pattern(sigma)?;
    let multiset = parse_multiset(multiset)?;
    let w = unsortable_witness(&sigma, &multiset)?;
    let avoids = w.avoids(&sigma);
    let avoids_reverse = w.avoids(&sigma.reversed());
    let trajectory = iterate(&sigma, &w, 20)?;
    let period = match trajectory.terminator {
        Terminator::Cycle { period, .. } => Some(period),
        _ => None,
    };
    let certified = avoids && avoids_reverse && !w.is_sorted() && period.is_some_and(|p| p <= 2);
    let mut outcome = Outcome::ok(
        format!("{w}\n"),
        json!({
            "witness": w.to_string(),
            "avoids_sigma": avoids,
            "avoids_reverse": avoids_reverse,
            "period": period,
            "certified": certified,
        }),
    );
    if certified {
        outcome.stderr = format!(
            "certified: avoids {sigma} and its reverse {}, never sorted, period {}\n",
            sigma.reversed(),
            period.expect("checked above")
        );
    } else {
        outcome.exit_code = 1;
        outcome.stderr = format!("certificate failed for {w}: {:?}\n", trajectory.terminator);
    }
    Ok(outcome)
}
