use std::fmt::Write as _;
use std::io::{Read, Write as _};
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::Parser;
use serde::Serialize;
use skewlen::lengths::{
    self, degeneracy_criteria, rank_length, shorten_pseudo_cyclic, shorten_pseudo_skew, Criterion,
    EquivalenceReport, ShortenedReport,
};
use skewlen::parse::{Analysis, Format};
use skewlen::{analyze, Error, Grid, JobSpec, LengthReport, LinearCode, SweepConfig, SweepSummary};

/// Rank lengths, Galois closures and rank degeneracy of cyclic and skew
/// cyclic codes.
#[derive(Debug, Parser)]
#[command(name = "skewlen", version, about)]
struct Args {
    /// JSON job specification; `-` reads standard input.
    #[arg(long)]
    spec: Option<PathBuf>,
    /// Comma-separated analyses, overriding the spec:
    /// lengths, degeneracy, shorten, equivalence, verify-sweep.
    #[arg(long, value_delimiter = ',')]
    analysis: Vec<Analysis>,
    /// Output format, overriding the spec.
    #[arg(long, value_parser = parse_format)]
    format: Option<Format>,
    /// Seed for sampled skew codes.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Largest ambient field size, in elements.
    #[arg(long)]
    cap_ambient: Option<u64>,
    /// Largest number of codewords enumerated for weight distributions.
    #[arg(long)]
    cap_enum: Option<u64>,
    /// Sweep grid such as `q=2;m=2,3;n=3..7|q=2;m=2;r=1;n=2,4`, or `acceptance`.
    #[arg(long)]
    grid: Option<String>,
}

fn parse_format(s: &str) -> Result<Format, String> {
    match s {
        "json" => Ok(Format::Json),
        "text" => Ok(Format::Text),
        _ => Err(format!("unknown format {s:?}, expected json or text")),
    }
}

#[derive(Debug)]
enum Failure {
    Input(String),
    Analysis(Analysis, Error),
}

impl Failure {
    fn exit_code(&self) -> u8 {
        match self {
            Failure::Input(_) => 2,
            Failure::Analysis(_, e) => match e {
                Error::PathDisagreement { .. }
                | Error::CriterionDisagreement(_)
                | Error::VerificationFailed(_) => 1,
                Error::EnumerationCapExceeded { .. }
                | Error::AmbientTooLarge { .. }
                | Error::DeskScaleExceeded(_)
                | Error::OrderCapExceeded(_) => 3,
                Error::H0NotCentral => 4,
                _ => 2,
            },
        }
    }
}

impl std::fmt::Display for Failure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Failure::Input(msg) => write!(f, "{msg}"),
            Failure::Analysis(a, Error::H0NotCentral) => write!(
                f,
                "{}: the check polynomial of the Galois closure is not central, \
                 so pseudo-skew shortening is not available for this code",
                name(*a)
            ),
            Failure::Analysis(a, e) => write!(f, "{}: {e}", name(*a)),
        }
    }
}

fn name(a: Analysis) -> String {
    serde_json::to_value(a)
        .ok()
        .and_then(|v| v.as_str().map(str::to_string))
        .unwrap_or_default()
}

#[derive(Debug, Serialize)]
struct DegeneracyOutput {
    n: usize,
    #[serde(rename = "l_R")]
    l_r: usize,
    degenerate: bool,
    criteria: Vec<Criterion>,
}

#[derive(Debug, Serialize)]
struct ShortenOutput {
    method: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    r: Option<usize>,
    map: &'static str,
    original_length: usize,
    multiplier: Vec<Vec<u64>>,
    original_distribution: Vec<u64>,
    shortened: ShortenedReport,
}

#[derive(Debug, Serialize)]
#[serde(untagged)]
enum Output {
    Lengths(Box<LengthReport>),
    Degeneracy(DegeneracyOutput),
    Shorten(ShortenOutput),
    Equivalence(EquivalenceReport),
    Sweep(SweepSummary),
}

impl Output {
    fn failed(&self) -> bool {
        matches!(self, Output::Sweep(s) if !s.passed)
    }

    fn text(&self) -> String {
        let mut s = String::new();
        match self {
            Output::Lengths(r) => {
                let _ = writeln!(s, "n = {}, k = {}", r.n, r.k);
                let _ = writeln!(s, "rank length l_R = {}", r.l_r);
                let _ = writeln!(s, "period length l_P = {}", r.l_p);
                for e in &r.shift_lengths {
                    let _ = writeln!(s, "shift length a = {}, r = {}: {}", e.a, e.r, e.value);
                }
                let b = &r.skew_bounds;
                let attained = match b.attained {
                    Some(true) => "attained",
                    Some(false) => "not attained",
                    None => "open",
                };
                let _ = writeln!(s, "skew length in [{}, {}] ({attained})", b.lower, b.upper);
                let _ = writeln!(s, "skew orders {:?}", r.skew_orders);
                let _ = write!(s, "degenerate: {}", r.degenerate);
            }
            Output::Degeneracy(d) => {
                let _ = writeln!(
                    s,
                    "l_R = {} of n = {}, degenerate: {}",
                    d.l_r, d.n, d.degenerate
                );
                for c in &d.criteria {
                    let v = c.value.map_or("n/a".to_string(), |v| v.to_string());
                    let _ = writeln!(s, "  {:<16} {v}", c.id);
                }
                s.pop();
            }
            Output::Shorten(o) => {
                let sh = &o.shortened;
                let _ = writeln!(s, "{} shortening, map {}", o.method, o.map);
                let _ = writeln!(
                    s,
                    "length {} -> {}, k = {}",
                    o.original_length, sh.length, sh.k
                );
                let _ = writeln!(s, "rank weight distribution {:?}", sh.distribution);
                if let Some(c) = sh.cyclic {
                    let _ = writeln!(s, "shortened code cyclic: {c}");
                }
                s.pop();
            }
            Output::Equivalence(e) => {
                let _ = writeln!(s, "equivalence of lengths {} -> {}", e.n, e.n_prime);
                let _ = writeln!(
                    s,
                    "a = {:?}, b = {:?}, r = {}, beta = {:?}",
                    e.a, e.b, e.r, e.beta
                );
                let _ = write!(s, "matrix {:?}", e.matrix);
            }
            Output::Sweep(sum) => {
                let _ = write!(s, "{sum}");
            }
        }
        s
    }
}

fn read_spec(path: &PathBuf) -> Result<JobSpec, Failure> {
    let text = if path.as_os_str() == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| Failure::Input(format!("reading standard input: {e}")))?;
        buf
    } else {
        std::fs::read_to_string(path)
            .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?
    };
    JobSpec::from_json(&text).map_err(|e| Failure::Input(e.to_string()))
}

fn shorten(job: &JobSpec, c: &LinearCode) -> skewlen::Result<ShortenOutput> {
    let tw = c.tower();
    let cap = job.caps.enumeration;
    let r = match job.shorten_r {
        Some(r) => Some(r),
        None if c.is_cyclic() => None,
        None => Some(
            *c.skew_orders()
                .first()
                .ok_or(Error::NotSkewCyclicAnyOrder)?,
        ),
    };
    let original_distribution = c.rank_weight_distribution(cap)?;
    let (method, map, multiplier, short) = match r {
        None | Some(0) => {
            let (g, _) = c.generator_check_poly()?;
            let gstar = g.conjugate_closures(tw)?.0;
            let short = shorten_pseudo_cyclic(c, cap)?;
            ("pseudo_cyclic", "f -> f g*", gstar.coeffs().to_vec(), short)
        }
        Some(r) => {
            let (g, _) = c.generator_check_lpoly(r)?;
            let gstar = g.conjugate_closures_l(c.n(), tw)?.star;
            let short = shorten_pseudo_skew(c, r, cap)?;
            (
                "pseudo_skew",
                "F -> F (x) G*",
                gstar.coeffs().to_vec(),
                short,
            )
        }
    };
    Ok(ShortenOutput {
        method,
        r: r.filter(|&r| r > 0),
        map,
        original_length: c.n(),
        multiplier: multiplier.iter().map(|&x| tw.encode(x)).collect(),
        original_distribution,
        shortened: short.report(),
    })
}

fn equivalence(job: &JobSpec, c: &LinearCode) -> skewlen::Result<EquivalenceReport> {
    let eq = job.equivalence.as_ref().ok_or_else(|| {
        Error::ParseError("equivalence analysis needs an \"equivalence\" object".into())
    })?;
    let tw = c.tower();
    let target = eq.target.build(tw)?;
    let a = eq.a.resolve(tw)?;
    let beta = eq.beta.resolve(tw)?;
    Ok(lengths::build_equivalence(c, &target, a, eq.r, beta)?.report())
}

fn run_job(
    job: &JobSpec,
    analyses: &[Analysis],
    sweep: &SweepConfig,
    grid: &Grid,
) -> Result<Vec<(Analysis, Output)>, Failure> {
    let needs_code = analyses.iter().any(|a| *a != Analysis::VerifySweep);
    let code = if needs_code {
        let fail = |e| Failure::Analysis(analyses[0], e);
        let tw = job.tower().map_err(fail)?;
        Some(job.code.build(&tw).map_err(fail)?)
    } else {
        None
    };
    let mut out = Vec::new();
    for &a in analyses {
        let fail = |e| Failure::Analysis(a, e);
        let c = || code.as_ref().expect("code built for per-code analyses");
        let o = match a {
            Analysis::Lengths => Output::Lengths(Box::new(analyze(c()).map_err(fail)?)),
            Analysis::Degeneracy => {
                let c = c();
                let l_r = rank_length(c).map_err(fail)?;
                Output::Degeneracy(DegeneracyOutput {
                    n: c.n(),
                    l_r,
                    degenerate: l_r < c.n(),
                    criteria: degeneracy_criteria(c).map_err(fail)?,
                })
            }
            Analysis::Shorten => Output::Shorten(shorten(job, c()).map_err(fail)?),
            Analysis::Equivalence => Output::Equivalence(equivalence(job, c()).map_err(fail)?),
            Analysis::VerifySweep => Output::Sweep(skewlen::run_sweep(grid, sweep).map_err(fail)?),
        };
        out.push((a, o));
    }
    Ok(out)
}

fn render(outputs: &[(Analysis, Output)], format: Format) -> String {
    match format {
        Format::Json => match outputs {
            [(_, o)] => serde_json::to_string_pretty(o),
            _ => serde_json::to_string_pretty(
                &outputs
                    .iter()
                    .map(|(a, o)| (name(*a), o))
                    .collect::<std::collections::BTreeMap<_, _>>(),
            ),
        }
        .expect("reports serialize"),
        Format::Text => outputs
            .iter()
            .map(|(a, o)| {
                if outputs.len() == 1 {
                    o.text()
                } else {
                    format!("[{}]\n{}", name(*a), o.text())
                }
            })
            .collect::<Vec<_>>()
            .join("\n\n"),
    }
}

fn run(args: Args) -> Result<(String, bool), Failure> {
    let job = args.spec.as_ref().map(read_spec).transpose()?;
    let grid = match &args.grid {
        Some(g) => Grid::from_str(g).map_err(|e| Failure::Input(e.to_string()))?,
        None => skewlen::sweep::acceptance_grid(),
    };
    let mut analyses = if !args.analysis.is_empty() {
        args.analysis.clone()
    } else if let Some(job) = job.as_ref().filter(|j| !j.analyses.is_empty()) {
        job.analyses.clone()
    } else if job.is_none() && args.grid.is_some() {
        vec![Analysis::VerifySweep]
    } else {
        vec![Analysis::Lengths]
    };
    let mut seen = std::collections::BTreeSet::new();
    analyses.retain(|a| seen.insert(*a));
    let format = args
        .format
        .or(job.as_ref().map(|j| j.format))
        .unwrap_or_default();
    let caps = job.as_ref().map(|j| j.caps).unwrap_or_default();
    let sweep = SweepConfig {
        seed: args.seed,
        cap_ambient: args.cap_ambient.unwrap_or(caps.ambient),
        cap_enum: args.cap_enum.unwrap_or(caps.enumeration),
        ..SweepConfig::default()
    };
    let outputs = match job {
        Some(mut job) => {
            job.caps.ambient = sweep.cap_ambient;
            job.caps.enumeration = sweep.cap_enum;
            run_job(&job, &analyses, &sweep, &grid)?
        }
        None if analyses == [Analysis::VerifySweep] => {
            let summary = skewlen::run_sweep(&grid, &sweep)
                .map_err(|e| Failure::Analysis(Analysis::VerifySweep, e))?;
            vec![(Analysis::VerifySweep, Output::Sweep(summary))]
        }
        None => {
            return Err(Failure::Input(
                "--spec is required for per-code analyses".into(),
            ))
        }
    };
    let failed = outputs.iter().any(|(_, o)| o.failed());
    Ok((render(&outputs, format), failed))
}

fn main() -> ExitCode {
    match run(Args::parse()) {
        Ok((text, failed)) => {
            let _ = writeln!(std::io::stdout(), "{text}");
            if failed {
                eprintln!("error: verify-sweep: invariant failures");
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(f) => {
            eprintln!("error: {f}");
            ExitCode::from(f.exit_code())
        }
    }
}
