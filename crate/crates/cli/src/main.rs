//! `dissect`: count, enumerate, map, verify and render the combinatorial
//! families around polygon dissections.
//!
//! Exit codes: 0 on success, 1 when `verify` finds a failing identity,
//! 2 on usage or validation errors.

use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use dissections::bijections::{
    decode_triple, encode_triple, nested_to_partition, ordered_partition_to_parens,
    parens_to_ordered_partition, partition_to_nested,
};
use dissections::counting::{
    assoc_stirling2, distinguished_count, kirkman_cayley, type_count, DissectionType,
};
use dissections::dissect::{dissection_from_parenthesization, render_svg};
use dissections::{enumeration, InternallyOrderedPartition, NestedSet, ParenthesizedList, Triple};

use dissections_cli::{grammar, verify};

#[derive(Parser)]
#[command(name = "dissect", version, about = "Polygon dissections, nested sets and their bijections")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a counting formula.
    Count {
        #[command(subcommand)]
        formula: CountFormula,
    },
    /// Enumerate a family, one canonical JSON object per line.
    Enum {
        family: Family,
        /// List size (nested, parens, triple) or, for partition families,
        /// an alternative to --m.
        #[arg(long)]
        n: Option<usize>,
        /// Ground size for partition families (m = n+k-1).
        #[arg(long)]
        m: Option<usize>,
        #[arg(long)]
        k: usize,
        /// Emit at most this many objects.
        #[arg(long)]
        limit: Option<usize>,
        /// Leaf list for the parens family, e.g. "2,3,1" (default identity).
        #[arg(long)]
        perm: Option<String>,
    },
    /// Apply a bijection to a JSON object from --input or stdin.
    Map {
        direction: Direction,
        #[arg(long)]
        input: Option<PathBuf>,
        /// Required for phi-inv and gamma-inv; optional consistency check
        /// for encode-triple.
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
    },
    /// Cross-check every identity up to a size bound and print a report.
    Verify {
        #[arg(long, default_value_t = 6)]
        max_n: usize,
    },
    /// Render a dissection of the (n+1)-gon as SVG.
    Render {
        /// Parenthesization string over the identity list, e.g.
        /// "(1,((2,3),(4,5)))".
        #[arg(long)]
        parens: Option<String>,
        /// JSON file holding a parenthesized list (alternative to --parens).
        #[arg(long)]
        input: Option<PathBuf>,
        /// Output file (stdout when omitted).
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum CountFormula {
    /// Dissections of the (n+1)-gon by k-1 diagonals.
    KirkmanCayley {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
    },
    /// Distinguished internally ordered k-partitions of [1, n+k-1].
    Distinguished {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
    },
    /// |T_2(m,k)|, the 2-associated Stirling number (Ward number).
    Ward {
        #[arg(long)]
        m: Option<usize>,
        /// Alternative to --m: use the ground size n+k-1.
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        k: usize,
    },
    /// Dissections of a prescribed type, e.g. --type "3^2,4^1".
    Type {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long = "type")]
        type_spec: String,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Nested,
    Partition2,
    Parens,
    Iop,
    Triple,
}

#[derive(Clone, Copy, ValueEnum)]
enum Direction {
    Phi,
    PhiInv,
    Gamma,
    GammaInv,
    EncodeTriple,
    DecodeTriple,
}

/// Errors mapped to exit codes: usage/validation -> 2, failed verify -> 1.
enum Failure {
    Usage(String),
    Verification,
}

impl From<dissections::Error> for Failure {
    fn from(e: dissections::Error) -> Failure {
        Failure::Usage(e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Failure {
        Failure::Usage(e.to_string())
    }
}

impl From<grammar::GrammarError> for Failure {
    fn from(e: grammar::GrammarError) -> Failure {
        Failure::Usage(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Verification) => ExitCode::from(1),
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Count { formula } => run_count(formula),
        Command::Enum {
            family,
            n,
            m,
            k,
            limit,
            perm,
        } => run_enum(family, n, m, k, limit, perm),
        Command::Map {
            direction,
            input,
            n,
            k,
        } => run_map(direction, input, n, k),
        Command::Verify { max_n } => run_verify(max_n),
        Command::Render { parens, input, out } => run_render(parens, input, out),
    }
}

fn run_count(formula: CountFormula) -> Result<(), Failure> {
    let value = match formula {
        CountFormula::KirkmanCayley { n, k } => kirkman_cayley(n, k)?,
        CountFormula::Distinguished { n, k } => distinguished_count(n, k)?,
        CountFormula::Ward { m, n, k } => {
            let m = match (m, n) {
                (Some(m), None) => m,
                (None, Some(n)) => n
                    .checked_add(k)
                    .and_then(|v| v.checked_sub(1))
                    .ok_or_else(|| Failure::Usage("n+k-1 overflows".into()))?,
                _ => {
                    return Err(Failure::Usage(
                        "ward takes exactly one of --m or --n".into(),
                    ))
                }
            };
            assoc_stirling2(m, k)
        }
        CountFormula::Type { n, k, type_spec } => {
            let t = parse_type(&type_spec)?;
            type_count(n, k, &t)?
        }
    };
    println!("{value}");
    Ok(())
}

/// Parses "3^2,4^1" into a dissection type.
fn parse_type(spec: &str) -> Result<DissectionType, Failure> {
    let mut pairs = Vec::new();
    for part in spec.split(',') {
        let part = part.trim();
        let (i, m) = part
            .split_once('^')
            .ok_or_else(|| Failure::Usage(format!("bad type component '{part}', want i^m")))?;
        let i: usize = i
            .trim()
            .parse()
            .map_err(|_| Failure::Usage(format!("bad edge count in '{part}'")))?;
        let m: usize = m
            .trim()
            .parse()
            .map_err(|_| Failure::Usage(format!("bad multiplicity in '{part}'")))?;
        pairs.push((i, m));
    }
    Ok(DissectionType::new(pairs))
}

fn parse_perm(spec: &str) -> Result<Vec<usize>, Failure> {
    spec.split(',')
        .map(|part| {
            part.trim()
                .parse::<usize>()
                .map_err(|_| Failure::Usage(format!("bad perm entry '{part}'")))
        })
        .collect()
}

fn run_enum(
    family: Family,
    n: Option<usize>,
    m: Option<usize>,
    k: usize,
    limit: Option<usize>,
    perm: Option<String>,
) -> Result<(), Failure> {
    let need_n = || n.ok_or_else(|| Failure::Usage("this family requires --n".into()));
    let need_m = || match (m, n) {
        (Some(m), None) => Ok(m),
        (None, Some(n)) => n
            .checked_add(k)
            .and_then(|v| v.checked_sub(1))
            .ok_or_else(|| Failure::Usage("n+k-1 overflows".into())),
        (None, None) => Err(Failure::Usage("this family requires --m (or --n)".into())),
        _ => Err(Failure::Usage("give exactly one of --m or --n".into())),
    };
    let lines: Vec<String> = match family {
        Family::Nested => to_json_lines(enumeration::nested_sets(need_n()?, k)?),
        Family::Partition2 => to_json_lines(enumeration::partitions2(need_m()?, k)?),
        Family::Parens => {
            let n = need_n()?;
            let perm = match perm {
                Some(spec) => parse_perm(&spec)?,
                None => (1..=n).collect(),
            };
            to_json_lines(enumeration::parenthesizations(n, k, &perm)?)
        }
        Family::Iop => to_json_lines(enumeration::ordered_partitions(need_m()?, k)?),
        Family::Triple => to_json_lines(enumeration::triples(need_n()?, k)?),
    };
    for line in lines.iter().take(limit.unwrap_or(usize::MAX)) {
        println!("{line}");
    }
    Ok(())
}

fn to_json_lines<T: serde::Serialize>(items: Vec<T>) -> Vec<String> {
    items
        .iter()
        .map(|x| serde_json::to_string(x).expect("core types serialize"))
        .collect()
}

fn read_input(input: Option<PathBuf>) -> Result<String, Failure> {
    match input {
        Some(path) => Ok(std::fs::read_to_string(path)?),
        None => {
            let mut buf = String::new();
            std::io::stdin().read_to_string(&mut buf)?;
            Ok(buf)
        }
    }
}

fn parse_json<T: serde::de::DeserializeOwned>(text: &str) -> Result<T, Failure> {
    serde_json::from_str(text).map_err(|e| Failure::Usage(format!("bad input JSON: {e}")))
}

fn run_map(
    direction: Direction,
    input: Option<PathBuf>,
    n: Option<usize>,
    k: Option<usize>,
) -> Result<(), Failure> {
    let text = read_input(input)?;
    let need = |v: Option<usize>, flag: &str| {
        v.ok_or_else(|| Failure::Usage(format!("this direction requires --{flag}")))
    };
    let output = match direction {
        Direction::Phi => {
            let s: NestedSet = parse_json(&text)?;
            serde_json::to_string(&nested_to_partition(&s)?)
        }
        Direction::PhiInv => {
            let p: dissections::Partition2 = parse_json(&text)?;
            serde_json::to_string(&partition_to_nested(&p, need(n, "n")?, need(k, "k")?)?)
        }
        Direction::Gamma => {
            let p: ParenthesizedList = parse_json(&text)?;
            serde_json::to_string(&parens_to_ordered_partition(&p)?)
        }
        Direction::GammaInv => {
            let q: InternallyOrderedPartition = parse_json(&text)?;
            serde_json::to_string(&ordered_partition_to_parens(
                &q,
                need(n, "n")?,
                need(k, "k")?,
            )?)
        }
        Direction::EncodeTriple => {
            let q: InternallyOrderedPartition = parse_json(&text)?;
            let inferred_k = q.k();
            let inferred_n = (q.m() + 1).saturating_sub(inferred_k);
            let n = n.unwrap_or(inferred_n);
            let k = k.unwrap_or(inferred_k);
            if n != inferred_n || k != inferred_k {
                return Err(Failure::Usage(format!(
                    "--n/--k disagree with the input (inferred n={inferred_n}, k={inferred_k})"
                )));
            }
            serde_json::to_string(&encode_triple(&q, n, k)?)
        }
        Direction::DecodeTriple => {
            let t: Triple = parse_json(&text)?;
            serde_json::to_string(&decode_triple(&t)?)
        }
    }
    .expect("core types serialize");
    println!("{output}");
    Ok(())
}

fn run_verify(max_n: usize) -> Result<(), Failure> {
    if max_n < 2 {
        return Err(Failure::Usage("n must be >= 2".into()));
    }
    if max_n > 8 {
        return Err(Failure::Usage("--max-n is capped at 8".into()));
    }
    let reports = verify::run_all(max_n);
    let width = reports.iter().map(|r| r.name.len()).max().unwrap_or(0);
    let mut all_ok = true;
    println!("{:width$}  {:10}  STATUS", "IDENTITY", "RANGE");
    for r in &reports {
        match &r.result {
            Ok(()) => println!("{:width$}  {:10}  ok", r.name, r.range),
            Err(detail) => {
                all_ok = false;
                println!("{:width$}  {:10}  FAIL  {detail}", r.name, r.range);
            }
        }
    }
    if all_ok {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

fn run_render(
    parens: Option<String>,
    input: Option<PathBuf>,
    out: Option<PathBuf>,
) -> Result<(), Failure> {
    let list = match (parens, input) {
        (Some(spec), None) => grammar::parse(&spec)?,
        (None, Some(path)) => parse_json(&std::fs::read_to_string(path)?)?,
        _ => {
            return Err(Failure::Usage(
                "render takes exactly one of --parens or --input".into(),
            ))
        }
    };
    let dissection = dissection_from_parenthesization(&list)?;
    let svg = render_svg(&dissection)?;
    match out {
        Some(path) => std::fs::write(path, svg)?,
        None => print!("{svg}"),
    }
    Ok(())
}
