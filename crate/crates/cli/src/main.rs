//! `enright`: command-line front end for Blattner multiplicities, the series
//! `𝔟(0)`, and Enright resolutions.

mod selfcheck;

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use enright_core::blattner::{
    blattner_hermitian, blattner_two_nc_stable, check_hs_hypothesis, BlattnerContext, BlattnerQuery,
};
use enright_core::enright::{resolution_auto, resolution_of, Resolution, DEFAULT_DEPTH_CEILING};
use enright_core::genlr::{gen_lr_coeff, gen_tensor_decompose};
use enright_core::lr::{lr_coeff, tensor_decompose};
use enright_core::partitions::{Partition, RationalWeight};
use enright_core::rootsys::{BlockStructure, Level, Weight, DEFAULT_WEYL_CAP};
use enright_core::series::{b0_series, b_delta_series, dominant_filter, DEFAULT_DEPTH};
use enright_core::Error;

/// Rows allowed in one `blattner-table` sweep.
const TABLE_ROW_CAP: u64 = 5_000_000;

#[derive(Parser)]
#[command(name = "enright", version, about = "Blattner multiplicities, the series b(0), and Enright resolutions in type A")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Littlewood–Richardson coefficient, or the full decomposition of s_α·s_β.
    Lr {
        #[arg(long)]
        alpha: String,
        #[arg(long)]
        beta: String,
        #[arg(long)]
        gamma: Option<String>,
        /// Number of variables (default ℓ(α)+ℓ(β)).
        #[arg(long)]
        k: Option<usize>,
    },
    /// Tensor product multiplicity for rational GL_n representations.
    Genlr {
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        alpha: String,
        #[arg(long, allow_hyphen_values = true)]
        beta: String,
        #[arg(long, allow_hyphen_values = true)]
        gamma: Option<String>,
    },
    /// B(δ, η) for one pair of weights.
    Blattner {
        #[arg(long)]
        blocks: String,
        #[arg(long, allow_hyphen_values = true)]
        delta: String,
        #[arg(long, allow_hyphen_values = true)]
        eta: String,
        #[arg(long, value_enum, default_value_t = Method::Direct)]
        method: Method,
        /// Also report whether η + ρ_c − ρ_nc is dominant regular.
        #[arg(long)]
        check_hypothesis: bool,
        #[arg(long, default_value_t = DEFAULT_WEYL_CAP)]
        weyl_cap: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// CSV of B(δ, η) for every η with ‖η‖∞ ≤ window.
    BlattnerTable {
        #[arg(long)]
        blocks: String,
        #[arg(long, allow_hyphen_values = true)]
        delta: String,
        #[arg(long)]
        window: u32,
        /// Only emit rows with a nonzero value.
        #[arg(long)]
        nonzero: bool,
        #[arg(long, default_value_t = DEFAULT_WEYL_CAP)]
        weyl_cap: u64,
    },
    /// Truncated expansions of b(0) and b(δ).
    Series {
        #[command(subcommand)]
        which: SeriesCommand,
    },
    /// Enright resolution of the Howe-duality module with parameter λ.
    Resolution {
        #[arg(long)]
        blocks: String,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        /// Height of the series window, or "auto".
        #[arg(long, default_value = "auto")]
        depth: String,
        /// Largest height tried in auto mode.
        #[arg(long, env = "ENRIGHT_DEPTH_CEILING", default_value_t = DEFAULT_DEPTH_CEILING)]
        ceiling: i64,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Run the built-in consistency checks.
    Selfcheck {
        #[arg(value_enum, default_value_t = CheckLevel::Quick)]
        level: CheckLevel,
    },
}

#[derive(Subcommand)]
enum SeriesCommand {
    /// b(0) at blocks (p,n,q) or any other block structure.
    B0 {
        #[arg(long)]
        blocks: String,
        #[arg(long, default_value_t = DEFAULT_DEPTH, allow_negative_numbers = true)]
        depth: i64,
        #[arg(long, value_enum)]
        dominant: Option<Dominance>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// b(δ) = ch L(δ) · b(0).
    BDelta {
        #[arg(long)]
        blocks: String,
        #[arg(long, allow_hyphen_values = true)]
        delta: String,
        #[arg(long, default_value_t = DEFAULT_DEPTH, allow_negative_numbers = true)]
        depth: i64,
        #[arg(long, value_enum)]
        dominant: Option<Dominance>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Direct,
    Hermitian,
    StableLr,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
    Csv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Dominance {
    MPrime,
    KPrime,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CheckLevel {
    Quick,
    Full,
}

/// A failure with its exit code.
enum Failure {
    Core(Error),
    Usage(String),
    SelfcheckFailed(usize),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

impl Failure {
    fn exit_code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 2,
            Failure::Core(e) => match e {
                Error::Parse(_) => 3,
                Error::Invalid(_) => 4,
                Error::Truncation { .. } | Error::TruncationInsufficient { .. } => 5,
                Error::OrderingViolated(_) => 6,
                Error::CapExceeded(_) => 7,
                Error::Unsupported(_) => 8,
            },
            Failure::SelfcheckFailed(_) => 9,
        }
    }

    fn line(&self) -> String {
        let (kind, msg) = match self {
            Failure::Usage(m) => ("usage", m.clone()),
            Failure::SelfcheckFailed(n) => ("selfcheck", format!("{n} check(s) failed")),
            Failure::Core(e) => {
                let kind = match e {
                    Error::Parse(_) => "parse",
                    Error::Invalid(_) => "invalid",
                    Error::Truncation { .. } => "truncation",
                    Error::TruncationInsufficient { .. } => "truncation-insufficient",
                    Error::OrderingViolated(_) => "ordering",
                    Error::CapExceeded(_) => "cap-exceeded",
                    Error::Unsupported(_) => "unsupported",
                };
                let msg = match e {
                    Error::Parse(m) | Error::Invalid(m) | Error::OrderingViolated(m) | Error::CapExceeded(m) | Error::Unsupported(m) => m.clone(),
                    _ => e.to_string(),
                };
                (kind, msg)
            }
        };
        format!("error: {kind}: {}", msg.replace('\n', " "))
    }
}

type Outcome = std::result::Result<String, Failure>;

fn parse_blocks(s: &str) -> Result<BlockStructure, Error> {
    s.parse()
}

fn parse_weight(s: &str) -> Result<Weight, Error> {
    s.parse()
}

fn parse_partition(s: &str) -> Result<Partition, Error> {
    s.parse()
}

fn parse_rational(s: &str) -> Result<RationalWeight, Error> {
    s.parse::<RationalWeight>().map_err(|e| match e {
        Error::Invalid(m) => Error::Parse(m),
        e => e,
    })
}

fn csv(v: &[i32]) -> String {
    v.iter().map(i32::to_string).collect::<Vec<_>>().join(",")
}

fn to_json<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("serializable output")
}

fn run_lr(alpha: &str, beta: &str, gamma: Option<&str>, k: Option<usize>) -> Outcome {
    let alpha = parse_partition(alpha)?;
    let beta = parse_partition(beta)?;
    if let Some(g) = gamma {
        let g = parse_partition(g)?;
        return Ok(lr_coeff(&alpha, &beta, &g).to_string());
    }
    let k = k.unwrap_or(alpha.len() + beta.len()).max(1);
    let map: BTreeMap<String, u64> = tensor_decompose(&alpha, &beta, k).into_iter().map(|(g, c)| (g.to_string(), c)).collect();
    Ok(to_json(&map))
}

fn run_genlr(n: usize, alpha: &str, beta: &str, gamma: Option<&str>) -> Outcome {
    let alpha = parse_rational(alpha)?;
    let beta = parse_rational(beta)?;
    if let Some(g) = gamma {
        let g = parse_rational(g)?;
        return Ok(gen_lr_coeff(&alpha, &beta, &g, n)?.to_string());
    }
    let map: BTreeMap<String, u64> =
        gen_tensor_decompose(&alpha, &beta, n)?.into_iter().map(|(g, c)| (g.to_string(), c)).collect();
    Ok(to_json(&map))
}

/// `(δ^p, δ^q)` from the ε-vector `[δ^p, δ^q]` at blocks `(p,q)`.
fn hermitian_parts(w: &Weight, p: usize) -> Result<(Partition, Partition), Error> {
    let (first, second) = w.coords().split_at(p);
    let to_part = |v: Vec<i32>| -> Result<Partition, Error> {
        if v.iter().any(|&x| x < 0) {
            return Err(Error::Unsupported(format!(
                "weight {w} is not of the form [δ^p, δ^q] with partitions δ^p, δ^q"
            )));
        }
        Partition::new(v.into_iter().map(|x| x as u32).collect())
    };
    Ok((to_part(first.to_vec())?, to_part(second.iter().rev().map(|x| -x).collect())?))
}

#[derive(Serialize)]
struct BlattnerOut {
    value: i64,
    #[serde(skip_serializing_if = "Option::is_none")]
    hs_hypothesis: Option<bool>,
}

#[allow(clippy::too_many_arguments)]
fn run_blattner(
    blocks: &str,
    delta: &str,
    eta: &str,
    method: Method,
    check_hypothesis: bool,
    weyl_cap: u64,
    format: Format,
) -> Outcome {
    let bs = parse_blocks(blocks)?;
    let query = BlattnerQuery::new(bs.clone(), parse_weight(delta)?, parse_weight(eta)?)?;
    let value = match method {
        Method::Direct => BlattnerContext::new(&bs, weyl_cap)?.direct(&query.delta, &query.eta),
        Method::Hermitian => {
            let [p, q] = bs.blocks()[..] else {
                return Err(Error::Unsupported(format!("hermitian method needs blocks (p,q), got ({bs})")).into());
            };
            let (dp, dq) = hermitian_parts(&query.delta, p)?;
            let (ep, eq) = hermitian_parts(&query.eta, p)?;
            blattner_hermitian(p, q, &dp, &dq, &ep, &eq)? as i64
        }
        Method::StableLr => blattner_two_nc_stable(&bs, &query.delta, &query.eta)? as i64,
    };
    let hs = if check_hypothesis { Some(check_hs_hypothesis(&bs, &query.eta)?) } else { None };
    match format {
        Format::Json => Ok(to_json(&BlattnerOut { value, hs_hypothesis: hs })),
        Format::Text | Format::Csv => {
            let mut out = value.to_string();
            if let Some(h) = hs {
                write!(out, "\nhs-hypothesis: {h}").unwrap();
            }
            Ok(out)
        }
    }
}

fn run_blattner_table(blocks: &str, delta: &str, window: u32, nonzero: bool, weyl_cap: u64) -> Outcome {
    let bs = parse_blocks(blocks)?;
    let delta = parse_weight(delta)?;
    BlattnerQuery::new(bs.clone(), delta.clone(), Weight::zero(bs.rank()))?;
    let n = bs.rank();
    let side = 2 * window as u64 + 1;
    let rows = side.checked_pow(n as u32).unwrap_or(u64::MAX);
    if rows > TABLE_ROW_CAP {
        return Err(Error::CapExceeded(format!("window {window} at rank {n} gives {rows} rows (cap {TABLE_ROW_CAP})")).into());
    }
    let ctx = BlattnerContext::new(&bs, weyl_cap)?;
    let w = window as i32;
    let mut out = String::new();
    let header: Vec<String> = (1..=n).map(|i| format!("eta{i}")).chain(["value".to_string()]).collect();
    out.push_str(&header.join(","));
    let mut eta = vec![-w; n];
    loop {
        let value = ctx.direct(&delta, &Weight(eta.clone()));
        if !nonzero || value != 0 {
            write!(out, "\n{},{value}", csv(&eta)).unwrap();
        }
        let mut k = n;
        loop {
            if k == 0 {
                return Ok(out);
            }
            k -= 1;
            eta[k] += 1;
            if eta[k] <= w {
                break;
            }
            eta[k] = -w;
        }
    }
}

fn series_output(s: &enright_core::series::LaurentSeries, format: Format) -> String {
    let terms = s.sorted_terms();
    match format {
        Format::Json => to_json(&terms),
        Format::Text | Format::Csv => terms
            .iter()
            .map(|t| match format {
                Format::Csv => format!("\"{}\",{}", csv(&t.exponent), t.coeff),
                _ => format!("{:+} e^({})", t.coeff, csv(&t.exponent)),
            })
            .collect::<Vec<_>>()
            .join("\n"),
    }
}

fn apply_dominance(s: enright_core::series::LaurentSeries, bs: &BlockStructure, dominant: Option<Dominance>) -> enright_core::series::LaurentSeries {
    match dominant {
        None => s,
        Some(Dominance::MPrime) => dominant_filter(&s, bs, Level::M),
        Some(Dominance::KPrime) => dominant_filter(&s, bs, Level::K),
    }
}

fn run_series(which: &SeriesCommand) -> Outcome {
    let (SeriesCommand::B0 { depth, .. } | SeriesCommand::BDelta { depth, .. }) = which;
    if *depth < 0 {
        return Err(Error::Invalid(format!("depth must be nonnegative, got {depth}")).into());
    }
    match which {
        SeriesCommand::B0 { blocks, depth, dominant, format } => {
            let bs = parse_blocks(blocks)?;
            let s = b0_series(&bs, *depth)?;
            Ok(series_output(&apply_dominance(s, &bs, *dominant), *format))
        }
        SeriesCommand::BDelta { blocks, delta, depth, dominant, format } => {
            let bs = parse_blocks(blocks)?;
            let s = b_delta_series(&bs, &parse_weight(delta)?, *depth)?;
            Ok(series_output(&apply_dominance(s, &bs, *dominant), *format))
        }
    }
}

fn resolution_text(r: &Resolution) -> String {
    let mut out = format!("lambda = ({})  depth = {}  stabilized = {}", csv(r.lambda.entries()), r.depth_used, r.stabilized);
    for t in &r.terms {
        let sign = if t.sign > 0 { '+' } else { '-' };
        let mult = if t.multiplicity == 1 { String::new() } else { format!("{}·", t.multiplicity) };
        write!(out, "\n{}  {sign}{mult}M_(({}),({}))", t.degree, t.mu, t.nu).unwrap();
    }
    out
}

fn run_resolution(blocks: &str, lambda: &str, depth: &str, ceiling: i64, format: Format) -> Outcome {
    let bs = parse_blocks(blocks)?;
    let lambda = parse_rational(lambda)?;
    let res = if depth == "auto" {
        resolution_auto(&bs, &lambda, ceiling)?
    } else {
        let d: i64 = depth.parse().map_err(|_| Error::Parse(format!("depth must be a positive integer or \"auto\", got {depth:?}")))?;
        if d < 2 {
            return Err(Error::Invalid(format!("depth must be at least 2, got {d}")).into());
        }
        resolution_of(&bs, &lambda, d)?
    };
    match format {
        Format::Json => Ok(to_json(&res)),
        Format::Text => Ok(resolution_text(&res)),
        Format::Csv => Err(Failure::Usage("resolution supports --format json or text".into())),
    }
}

fn run(cli: Cli) -> Outcome {
    match &cli.command {
        Command::Lr { alpha, beta, gamma, k } => run_lr(alpha, beta, gamma.as_deref(), *k),
        Command::Genlr { n, alpha, beta, gamma } => run_genlr(*n, alpha, beta, gamma.as_deref()),
        Command::Blattner { blocks, delta, eta, method, check_hypothesis, weyl_cap, format } => {
            run_blattner(blocks, delta, eta, *method, *check_hypothesis, *weyl_cap, *format)
        }
        Command::BlattnerTable { blocks, delta, window, nonzero, weyl_cap } => {
            run_blattner_table(blocks, delta, *window, *nonzero, *weyl_cap)
        }
        Command::Series { which } => run_series(which),
        Command::Resolution { blocks, lambda, depth, ceiling, format } => run_resolution(blocks, lambda, depth, *ceiling, *format),
        Command::Selfcheck { level } => {
            let report = selfcheck::run(*level);
            let failed = report.failed();
            let text = report.to_string();
            if failed > 0 {
                println!("{text}");
                Err(Failure::SelfcheckFailed(failed))
            } else {
                Ok(text)
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = e.print();
                return ExitCode::SUCCESS;
            }
            let msg = e.to_string();
            let first = msg.lines().next().unwrap_or("").trim_start_matches("error: ").to_string();
            eprintln!("{}", Failure::Usage(first).line());
            return ExitCode::from(2);
        }
    };
    match run(cli) {
        Ok(out) => {
            println!("{out}");
            ExitCode::SUCCESS
        }
        Err(f) => {
            eprintln!("{}", f.line());
            ExitCode::from(f.exit_code())
        }
    }
}
