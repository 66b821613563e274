//! `flatpart`: enumerate partitions, tabulate avoider counts against their
//! closed forms, check identities and apply the bijections.
//!
//! Exit status is 0 on success, 1 when a verification finds a mismatch and 2
//! on usage, parse or domain errors.

use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use serde::Serialize;

use flatpart::biject::{
    compose_kl, cseq_to_partition, decompose_kl, dyck_to_u321zero, parse_triple, partition_to_cseq,
    u321zero_to_dyck,
};
use flatpart::closedform::{
    count_formula, refined_formula, u_system, verify_identity5, verify_touchard,
};
use flatpart::enumerate::{
    block_initiators, count_avoiders_all_parallel, descent_terminators, enumerate_partitions,
    refined_distribution, rl_minima, statistic_m,
};
use flatpart::partition::format_set;
use flatpart::seq::fibonacci;
use flatpart::{CSeq, DyckPath, Error, Pattern, Refinement, SetPartition};

const DEFAULT_CAP: usize = 12;
const ARITHMETIC_CAP: usize = 30;
const EXHAUSTIVE_CAP: usize = 10;

#[derive(Parser)]
#[command(
    name = "flatpart",
    version,
    about = "Pattern avoidance in flattened set partitions"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Worker threads for counting (0 = one per core).
    #[arg(long, global = true, default_value_t = 0)]
    jobs: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum PatternArg {
    #[value(name = "123")]
    P123,
    #[value(name = "132")]
    P132,
    #[value(name = "213")]
    P213,
    #[value(name = "231")]
    P231,
    #[value(name = "312")]
    P312,
    #[value(name = "321")]
    P321,
    All,
}

impl PatternArg {
    fn patterns(self) -> Vec<Pattern> {
        let one = match self {
            PatternArg::All => return Pattern::ALL.to_vec(),
            PatternArg::P123 => Pattern::P123,
            PatternArg::P132 => Pattern::P132,
            PatternArg::P213 => Pattern::P213,
            PatternArg::P231 => Pattern::P231,
            PatternArg::P312 => Pattern::P312,
            PatternArg::P321 => Pattern::P321,
        };
        vec![one]
    }

    fn single(self) -> Option<Pattern> {
        match self {
            PatternArg::All => None,
            p => Some(p.patterns()[0]),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum RefinedArg {
    MSize,
    FirstBlock,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Identity {
    Touchard,
    Identity5,
    UClosedForm,
    ChainInclusion,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Bijection {
    CseqToPartition,
    PartitionToCseq,
    KlDecompose,
    KlCompose,
    U321ToDyck,
    DyckToU321,
}

#[derive(Subcommand)]
enum Command {
    /// List every partition of [n] with its flattening and M statistic.
    Enumerate {
        #[arg(long)]
        n: usize,
        /// Keep only partitions whose flattening avoids this pattern.
        #[arg(long, value_enum, default_value_t = PatternArg::All)]
        pattern: PatternArg,
        /// Largest n accepted.
        #[arg(long, default_value_t = DEFAULT_CAP)]
        max_n: usize,
    },
    /// Count avoiders of [n] by brute force and compare with the closed form.
    Count {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = PatternArg::All)]
        pattern: PatternArg,
        /// Largest n accepted.
        #[arg(long, default_value_t = DEFAULT_CAP)]
        max_n: usize,
    },
    /// Brute-force and closed-form counts for n = 1..=max-n.
    Table {
        #[arg(long, default_value_t = 8)]
        max_n: usize,
        #[arg(long, value_enum, default_value_t = PatternArg::All)]
        pattern: PatternArg,
        /// Largest max-n accepted.
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
    },
    /// Check an identity or structural property for each n up to max-n.
    Verify {
        #[arg(value_enum)]
        identity: Identity,
        /// Defaults to 30 for arithmetic identities, 10 for exhaustive ones.
        #[arg(long)]
        max_n: Option<usize>,
    },
    /// Apply a bijection to one textual object.
    Bijection {
        #[arg(value_enum)]
        kind: Bijection,
        /// The object to map; may be empty for c-sequences and Dyck paths.
        input: String,
        /// Pattern for kl-decompose and kl-compose.
        #[arg(long, value_enum, default_value_t = PatternArg::P231)]
        pattern: PatternArg,
    },
    /// Refined counts by statistic value, brute force against formula.
    Refined {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum)]
        pattern: PatternArg,
        #[arg(long, value_enum, default_value_t = RefinedArg::MSize)]
        refined: RefinedArg,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        max_n: usize,
    },
}

/// What went wrong, mapped onto the exit code.
enum Failure {
    Usage(String),
    Mismatch,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Usage(format!("output error: {e}"))
    }
}

type Outcome = Result<(), Failure>;

#[derive(Serialize)]
struct CountRow {
    n: usize,
    pattern: String,
    brute: String,
    formula: String,
    #[serde(rename = "match")]
    matches: bool,
}

#[derive(Serialize)]
struct RefinedRow {
    n: usize,
    pattern: String,
    statistic: &'static str,
    k: usize,
    brute: String,
    formula: String,
    #[serde(rename = "match")]
    matches: bool,
}

#[derive(Serialize)]
struct PartitionRow {
    partition: String,
    flatten: String,
    m: Vec<usize>,
}

#[derive(Serialize)]
struct VerifyRow {
    identity: &'static str,
    n: usize,
    pass: bool,
}

#[derive(Serialize)]
struct BijectionRow {
    kind: &'static str,
    input: String,
    output: String,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.jobs > 0 {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(cli.jobs)
            .build_global()
        {
            eprintln!("error: cannot start {} worker threads: {e}", cli.jobs);
            return ExitCode::from(2);
        }
    }
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let result = run(&cli, &mut out).and_then(|()| out.flush().map_err(Failure::from));
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Mismatch) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            let _ = out.flush();
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli, out: &mut impl Write) -> Outcome {
    let json = cli.format == Format::Json;
    match cli.command {
        Command::Enumerate { n, pattern, max_n } => cmd_enumerate(out, json, n, pattern, max_n),
        Command::Count { n, pattern, max_n } => {
            check_n(n, max_n, "--max-n")?;
            let rows = count_rows(n, &pattern.patterns())?;
            emit_counts(out, json, &rows)
        }
        Command::Table {
            max_n,
            pattern,
            cap,
        } => {
            check_n(max_n, cap, "--cap")?;
            let mut rows = Vec::new();
            for n in 1..=max_n {
                rows.extend(count_rows(n, &pattern.patterns())?);
            }
            emit_counts(out, json, &rows)
        }
        Command::Verify { identity, max_n } => cmd_verify(out, json, identity, max_n),
        Command::Bijection {
            kind,
            ref input,
            pattern,
        } => cmd_bijection(out, json, kind, input, pattern),
        Command::Refined {
            n,
            pattern,
            refined,
            max_n,
        } => cmd_refined(out, json, n, pattern, refined, max_n),
    }
}

fn check_n(n: usize, cap: usize, flag: &str) -> Outcome {
    if n == 0 {
        return Err(Error::EmptyGroundSet.into());
    }
    if n > cap {
        return Err(Failure::Usage(format!(
            "n = {n} exceeds the cap of {cap} (Bell({n}) partitions); raise {flag} to allow it"
        )));
    }
    Ok(())
}

fn write_json(out: &mut impl Write, row: &impl Serialize) -> Outcome {
    serde_json::to_writer(&mut *out, row)
        .map_err(|e| Failure::Usage(format!("output error: {e}")))?;
    writeln!(out)?;
    Ok(())
}

fn cmd_enumerate(
    out: &mut impl Write,
    json: bool,
    n: usize,
    pattern: PatternArg,
    cap: usize,
) -> Outcome {
    check_n(n, cap, "--max-n")?;
    let filter = pattern.single();
    for q in enumerate_partitions(n)? {
        let w = q.flatten();
        if filter.is_some_and(|pat| pat.is_contained_in(w.word())) {
            continue;
        }
        let m = statistic_m(&q);
        if json {
            write_json(
                out,
                &PartitionRow {
                    partition: q.to_string(),
                    flatten: w.to_string(),
                    m: m.into_iter().collect(),
                },
            )?;
        } else {
            writeln!(out, "{q}\t{w}\tM={}", format_set(&m))?;
        }
    }
    Ok(())
}

fn count_rows(n: usize, patterns: &[Pattern]) -> Result<Vec<CountRow>, Failure> {
    let brute = count_avoiders_all_parallel(n, n.min(5))?;
    patterns
        .iter()
        .map(|&pat| {
            let idx = Pattern::ALL
                .iter()
                .position(|&p| p == pat)
                .expect("ALL lists every pattern");
            let b = BigUint::from(brute[idx]);
            let f = count_formula(n, pat)?;
            Ok(CountRow {
                n,
                pattern: pat.to_string(),
                matches: b == f,
                brute: b.to_string(),
                formula: f.to_string(),
            })
        })
        .collect()
}

fn emit_counts(out: &mut impl Write, json: bool, rows: &[CountRow]) -> Outcome {
    if !json {
        writeln!(
            out,
            "{:>3}  {:<7}  {:>12}  {:>12}  status",
            "n", "pattern", "brute", "formula"
        )?;
    }
    for row in rows {
        if json {
            write_json(out, row)?;
        } else {
            writeln!(
                out,
                "{:>3}  {:<7}  {:>12}  {:>12}  {}",
                row.n,
                row.pattern,
                row.brute,
                row.formula,
                status(row.matches)
            )?;
        }
    }
    if rows.iter().all(|r| r.matches) {
        Ok(())
    } else {
        Err(Failure::Mismatch)
    }
}

fn status(ok: bool) -> &'static str {
    if ok {
        "MATCH"
    } else {
        "MISMATCH"
    }
}

fn cmd_verify(
    out: &mut impl Write,
    json: bool,
    identity: Identity,
    max_n: Option<usize>,
) -> Outcome {
    let (name, cap, first) = match identity {
        Identity::Touchard => ("touchard", ARITHMETIC_CAP, 1),
        Identity::Identity5 => ("identity5", ARITHMETIC_CAP, 0),
        Identity::UClosedForm => ("u-closed-form", ARITHMETIC_CAP, 1),
        Identity::ChainInclusion => ("chain-inclusion", EXHAUSTIVE_CAP, 1),
    };
    let max_n = max_n.unwrap_or(cap);
    if max_n > cap {
        return Err(Failure::Usage(format!(
            "{name} is checked up to n = {cap}; got --max-n {max_n}"
        )));
    }
    if max_n < first {
        return Err(Failure::Usage(format!("{name} needs --max-n >= {first}")));
    }
    let table = match identity {
        Identity::UClosedForm => Some(u_system(max_n)?),
        _ => None,
    };
    let mut all_pass = true;
    for n in first..=max_n {
        let pass = match identity {
            Identity::Touchard => verify_touchard(n),
            Identity::Identity5 => verify_identity5(n),
            Identity::UClosedForm => {
                let t = table.as_ref().expect("built above");
                let row_ok = (1..n).all(|j| {
                    fibonacci((2 * (n - j)) as i64 - 1)
                        .is_ok_and(|f| t.get(n, j) == BigUint::from(j) * f)
                });
                row_ok && fibonacci(2 * n as i64 - 1).is_ok_and(|f| *t.total(n) == f)
            }
            Identity::ChainInclusion => chain_holds(n)?,
        };
        all_pass &= pass;
        if json {
            write_json(
                out,
                &VerifyRow {
                    identity: name,
                    n,
                    pass,
                },
            )?;
        } else {
            writeln!(out, "{name} n={n} {}", if pass { "PASS" } else { "FAIL" })?;
        }
    }
    if all_pass {
        Ok(())
    } else {
        Err(Failure::Mismatch)
    }
}

fn chain_holds(n: usize) -> Result<bool, Failure> {
    for q in enumerate_partitions(n)? {
        let w = q.flatten();
        let init = block_initiators(&q);
        if !descent_terminators(w.word()).is_subset(&init) || !init.is_subset(&rl_minima(w.word()))
        {
            return Ok(false);
        }
    }
    Ok(true)
}

fn kl_pattern(pattern: PatternArg) -> Result<Pattern, Failure> {
    match pattern.single() {
        Some(p @ (Pattern::P231 | Pattern::P321)) => Ok(p),
        _ => Err(Failure::Usage(
            "kl bijections take --pattern 231 or --pattern 321".into(),
        )),
    }
}

fn cmd_bijection(
    out: &mut impl Write,
    json: bool,
    kind: Bijection,
    input: &str,
    pattern: PatternArg,
) -> Outcome {
    let (name, output) = match kind {
        Bijection::CseqToPartition => {
            let c: CSeq = input.parse()?;
            ("cseq-to-partition", cseq_to_partition(&c)?.to_string())
        }
        Bijection::PartitionToCseq => {
            let q: SetPartition = input.parse()?;
            ("partition-to-cseq", partition_to_cseq(&q)?.to_string())
        }
        Bijection::KlDecompose => {
            let q: SetPartition = input.parse()?;
            (
                "kl-decompose",
                decompose_kl(&q, kl_pattern(pattern)?)?.to_string(),
            )
        }
        Bijection::KlCompose => {
            let t = parse_triple(input, kl_pattern(pattern)?)?;
            ("kl-compose", compose_kl(&t)?.to_string())
        }
        Bijection::U321ToDyck => {
            let q: SetPartition = input.parse()?;
            ("u321-to-dyck", u321zero_to_dyck(&q)?.to_string())
        }
        Bijection::DyckToU321 => {
            let d: DyckPath = input.parse()?;
            ("dyck-to-u321", dyck_to_u321zero(&d)?.to_string())
        }
    };
    if json {
        write_json(
            out,
            &BijectionRow {
                kind: name,
                input: input.to_string(),
                output,
            },
        )
    } else {
        writeln!(out, "{output}")?;
        Ok(())
    }
}

fn cmd_refined(
    out: &mut impl Write,
    json: bool,
    n: usize,
    pattern: PatternArg,
    refined: RefinedArg,
    cap: usize,
) -> Outcome {
    check_n(n, cap, "--max-n")?;
    let (stat, stat_name) = match refined {
        RefinedArg::MSize => (Refinement::MSize, "m-size"),
        RefinedArg::FirstBlock => (Refinement::FirstBlockLength, "first-block"),
    };
    let table = match refined {
        RefinedArg::FirstBlock => Some(u_system(n)?),
        RefinedArg::MSize => None,
    };
    let mut rows = Vec::new();
    for pat in pattern.patterns() {
        let dist = refined_distribution(n, pat, stat)?;
        for (k, &count) in dist.iter().enumerate() {
            let formula = match (refined, pat) {
                (RefinedArg::MSize, Pattern::P231 | Pattern::P321) => {
                    Some(refined_formula(n, k, pat)?)
                }
                (RefinedArg::FirstBlock, Pattern::P213 | Pattern::P312) => Some(if k == 0 {
                    BigUint::from(0u32)
                } else {
                    table.as_ref().expect("built above").get(n, k)
                }),
                _ => None,
            };
            let brute = BigUint::from(count);
            rows.push(RefinedRow {
                n,
                pattern: pat.to_string(),
                statistic: stat_name,
                k,
                matches: formula.as_ref().is_none_or(|f| *f == brute),
                brute: brute.to_string(),
                formula: formula.map_or_else(|| "-".to_string(), |f| f.to_string()),
            });
        }
    }
    if !json {
        writeln!(
            out,
            "{:>3}  {:<7}  {:>3}  {:>12}  {:>12}  status",
            "n", "pattern", "k", "brute", "formula"
        )?;
    }
    for row in &rows {
        if json {
            write_json(out, row)?;
        } else {
            let st = if row.formula == "-" {
                "-"
            } else {
                status(row.matches)
            };
            writeln!(
                out,
                "{:>3}  {:<7}  {:>3}  {:>12}  {:>12}  {st}",
                row.n, row.pattern, row.k, row.brute, row.formula
            )?;
        }
    }
    if rows.iter().all(|r| r.matches) {
        Ok(())
    } else {
        Err(Failure::Mismatch)
    }
}
