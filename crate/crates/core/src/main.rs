use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;

use contact_scatter::limits::{
    audit_grid, classify_limit, enumerate_resonances, half_bound_check, run_audit, LimitError, ResonanceLabel,
};
use contact_scatter::model::{Family, ModelError, PotentialSpec};
use contact_scatter::report::{self, LimitScanRecord, ReportError, SequenceParams};

#[derive(Parser)]
#[command(name = "contact-scatter", version, about = "Phase shifts and contact limits of singular short-range potentials")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Phase-shift table at finite range, or its contact limit with --limit.
    PhaseShifts {
        #[command(flatten)]
        potential: PotentialArgs,
        #[command(flatten)]
        ks: KArgs,
        #[command(flatten)]
        seq: SeqArgs,
        #[arg(long)]
        limit: bool,
        /// Highest partial-wave order to include.
        #[arg(long)]
        l_max: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Total and differential cross sections (2D and 3D families).
    CrossSection {
        #[command(flatten)]
        potential: PotentialArgs,
        #[command(flatten)]
        ks: KArgs,
        #[command(flatten)]
        seq: SeqArgs,
        #[arg(long)]
        limit: bool,
        /// Scattering angles for the differential cross section, in radians.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        theta: Vec<f64>,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Reflection and transmission amplitudes (1D families).
    #[command(name = "scattering-1d")]
    Scattering1D {
        #[command(flatten)]
        potential: PotentialArgs,
        #[command(flatten)]
        ks: KArgs,
        #[command(flatten)]
        seq: SeqArgs,
        #[arg(long)]
        limit: bool,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Classify the contact limit from a shrinking-range sequence.
    LimitScan {
        #[command(flatten)]
        potential: PotentialArgs,
        #[command(flatten)]
        ks: KArgs,
        #[command(flatten)]
        seq: SeqArgs,
        /// JSON array of potential specs to scan instead of a single spec.
        #[arg(long, conflicts_with_all = ["family", "omega", "spec"])]
        grid: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Resonant strengths for alpha = 1 (alpha = beta = 1 in 2D).
    Resonances {
        #[arg(long)]
        family: Family,
        #[arg(long, default_value_t = 5)]
        nmax: u32,
        /// Restrict the square well on a line to one parity.
        #[arg(long, value_enum)]
        parity: Option<ParityArg>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Zero-energy half-bound state check for a well.
    HalfBound {
        #[command(flatten)]
        potential: PotentialArgs,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Compare numeric and rule-based limit classification over a grid.
    Audit {
        /// JSON array of potential specs; defaults to the built-in grid.
        #[arg(long)]
        grid: Option<PathBuf>,
        #[arg(long, default_value_t = 1.0)]
        k: f64,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
}

#[derive(Args, Clone)]
struct PotentialArgs {
    #[arg(long)]
    family: Option<Family>,
    #[arg(long, allow_hyphen_values = true)]
    omega: Option<f64>,
    #[arg(long, allow_hyphen_values = true, default_value_t = 1.0)]
    alpha: f64,
    /// Log exponent (2D families only).
    #[arg(long, allow_hyphen_values = true, default_value_t = 1.0)]
    beta: f64,
    #[arg(long, default_value_t = 1e-3)]
    a: f64,
    /// Log scale (2D families only).
    #[arg(long, default_value_t = 1.0)]
    a0: f64,
    /// Read the potential from a JSON file {family, omega, alpha, beta, a, a0}.
    #[arg(long, conflicts_with_all = ["family", "omega"])]
    spec: Option<PathBuf>,
}

#[derive(Args, Clone)]
struct KArgs {
    /// Wavenumber(s), comma separated.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    k: Vec<f64>,
    /// Evenly spaced wavenumbers MIN MAX COUNT.
    #[arg(long, num_args = 3, value_names = ["MIN", "MAX", "COUNT"], allow_hyphen_values = true, conflicts_with = "k")]
    k_range: Option<Vec<f64>>,
}

#[derive(Args, Clone)]
struct SeqArgs {
    /// First xi of the 1D/3D limit sequence.
    #[arg(long, default_value_t = 1e-2)]
    xi_start: f64,
    #[arg(long, default_value_t = 10.0)]
    xi_ratio: f64,
    #[arg(long, default_value_t = 5)]
    xi_count: usize,
    /// Decades of the log factor spanned by the 2D limit sequence.
    #[arg(long, default_value_t = 8)]
    log_decades: u32,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ParityArg {
    Even,
    Odd,
}

enum Failure {
    Invalid(String),
    Inconclusive(serde_json::Value),
    Audit,
}

impl From<ReportError> for Failure {
    fn from(e: ReportError) -> Self {
        match e {
            ReportError::Limit(l) => l.into(),
            other => Failure::Invalid(other.to_string()),
        }
    }
}

impl From<LimitError> for Failure {
    fn from(e: LimitError) -> Self {
        match e {
            LimitError::Inconclusive(ev) => Failure::Inconclusive(serde_json::json!({
                "error": "inconclusive",
                "message": LimitError::Inconclusive(ev.clone()).to_string(),
                "evidence": ev,
            })),
            other => Failure::Invalid(other.to_string()),
        }
    }
}

impl From<ModelError> for Failure {
    fn from(e: ModelError) -> Self {
        Failure::Invalid(e.to_string())
    }
}

impl PotentialArgs {
    fn spec(&self) -> Result<PotentialSpec, Failure> {
        let spec = match &self.spec {
            Some(path) => read_json(path)?,
            None => {
                let family = self.family.ok_or_else(|| Failure::Invalid("missing --family".into()))?;
                let omega = self.omega.ok_or_else(|| Failure::Invalid("missing --omega".into()))?;
                let spec = PotentialSpec::new(family, omega, self.alpha, self.a);
                if family.has_log_factor() {
                    spec.with_log_scale(self.beta, self.a0)
                } else {
                    spec
                }
            }
        };
        spec.validate()?;
        Ok(spec)
    }
}

impl KArgs {
    fn values(&self, default: Option<f64>) -> Result<Vec<f64>, Failure> {
        let mut ks = match &self.k_range {
            Some(r) => {
                let (lo, hi, n) = (r[0], r[1], r[2]);
                if n < 1.0 || n.fract() != 0.0 || hi < lo {
                    return Err(Failure::Invalid("--k-range needs MIN <= MAX and a positive integer COUNT".into()));
                }
                let n = n as usize;
                if n == 1 {
                    vec![lo]
                } else {
                    (0..n).map(|i| lo + (hi - lo) * i as f64 / (n - 1) as f64).collect()
                }
            }
            None if self.k.is_empty() => match default {
                Some(k) => vec![k],
                None => return Err(Failure::Invalid("missing --k or --k-range".into())),
            },
            None => self.k.clone(),
        };
        if let Some(bad) = ks.iter().find(|k| !(k.is_finite() && **k > 0.0)) {
            return Err(Failure::Invalid(format!("wavenumber must be positive and finite, got {bad}")));
        }
        ks.sort_by(f64::total_cmp);
        ks.dedup();
        Ok(ks)
    }
}

impl SeqArgs {
    fn params(&self) -> SequenceParams {
        SequenceParams {
            xi_start: self.xi_start,
            xi_ratio: self.xi_ratio,
            xi_count: self.xi_count,
            log_decades: self.log_decades,
        }
    }
}

fn read_json<T: serde::de::DeserializeOwned>(path: &PathBuf) -> Result<T, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::Invalid(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Failure::Invalid(format!("{}: {e}", path.display())))
}

fn json<T: Serialize + ?Sized>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("records serialize");
    s.push('\n');
    s
}

/// One record for a single wavenumber, an array otherwise.
fn json_one_or_many<T: Serialize>(v: &[T]) -> String {
    match v {
        [one] => json(one),
        many => json(many),
    }
}

fn per_k<T: Send, F>(ks: &[f64], f: F) -> Result<Vec<T>, Failure>
where
    F: Fn(f64) -> Result<T, ReportError> + Sync,
{
    let results: Vec<_> = ks.par_iter().map(|&k| f(k)).collect();
    results.into_iter().map(|r| r.map_err(Failure::from)).collect()
}

fn canonical_order(x: &(PotentialSpec, f64), y: &(PotentialSpec, f64)) -> std::cmp::Ordering {
    let key = |(s, k): &(PotentialSpec, f64)| [s.omega, s.alpha, s.beta, s.a, s.a0.unwrap_or(0.0), *k];
    x.0.family.cmp(&y.0.family).then_with(|| {
        key(x).iter().zip(key(y).iter()).map(|(a, b)| a.total_cmp(b)).find(|o| o.is_ne()).unwrap_or(std::cmp::Ordering::Equal)
    })
}

fn run(command: Command) -> Result<String, Failure> {
    match command {
        Command::PhaseShifts { potential, ks, seq, limit, l_max, format } => {
            let spec = potential.spec()?;
            let params = seq.params();
            let lim = limit.then_some(&params);
            let tables = per_k(&ks.values(None)?, |k| report::table_for(&spec, k, lim, l_max))?;
            Ok(match format {
                Format::Csv => report::phase_tables_csv(&tables),
                Format::Json => json_one_or_many(&tables),
            })
        }
        Command::CrossSection { potential, ks, seq, limit, theta, format } => {
            let spec = potential.spec()?;
            let params = seq.params();
            let lim = limit.then_some(&params);
            let records = per_k(&ks.values(None)?, |k| report::cross_section(&spec, k, lim, &theta))?;
            Ok(match format {
                Format::Csv => report::cross_sections_csv(&records),
                Format::Json => json_one_or_many(&records),
            })
        }
        Command::Scattering1D { potential, ks, seq, limit, format } => {
            let spec = potential.spec()?;
            let params = seq.params();
            let lim = limit.then_some(&params);
            let records = per_k(&ks.values(None)?, |k| report::scattering_1d(&spec, k, lim))?;
            Ok(match format {
                Format::Csv => report::scattering_1d_csv(&records),
                Format::Json => json_one_or_many(&records),
            })
        }
        Command::LimitScan { potential, ks, seq, grid, format } => {
            let specs: Vec<PotentialSpec> = match &grid {
                Some(path) => read_json(path)?,
                None => vec![potential.spec()?],
            };
            for s in &specs {
                s.validate()?;
            }
            let ks = ks.values(Some(1.0))?;
            let params = seq.params();
            let mut points: Vec<(PotentialSpec, f64)> =
                specs.iter().flat_map(|s| ks.iter().map(move |&k| (*s, k))).collect();
            points.sort_by(canonical_order);
            let results: Vec<_> = points
                .par_iter()
                .map(|(spec, k)| {
                    let seq = params.build(spec, *k)?;
                    let classification = classify_limit(spec, *k, &seq)?;
                    Ok(LimitScanRecord { spec: *spec, k: *k, classification })
                })
                .collect();
            let records = results.into_iter().collect::<Result<Vec<_>, LimitError>>()?;
            Ok(match (format, grid.is_none() && records.len() == 1) {
                (Format::Json, true) => json(&records[0].classification),
                (Format::Json, false) => json(&records),
                (Format::Csv, true) => report::limit_csv(&records[0].classification),
                (Format::Csv, false) => report::limit_scan_csv(&records),
            })
        }
        Command::Resonances { family, nmax, parity, format } => {
            let mut set = enumerate_resonances(family, nmax)?;
            if let Some(p) = parity {
                if family != Family::Well1D {
                    return Err(Failure::Invalid("--parity applies to well1d only".into()));
                }
                set = set.only(match p {
                    ParityArg::Even => ResonanceLabel::Well1DEven,
                    ParityArg::Odd => ResonanceLabel::Well1DOdd,
                });
            }
            Ok(match format {
                Format::Csv => report::resonances_csv(&set),
                Format::Json => json(&set.values()),
            })
        }
        Command::HalfBound { potential, format } => {
            let spec = potential.spec()?;
            let r = half_bound_check(&spec)?;
            Ok(match format {
                Format::Csv => report::half_bound_csv(&r),
                Format::Json => json(&r),
            })
        }
        Command::Audit { grid, k, format } => {
            let specs: Vec<PotentialSpec> = match &grid {
                Some(path) => read_json(path)?,
                None => audit_grid(),
            };
            for s in &specs {
                s.validate()?;
            }
            let report = run_audit(&specs, k)?;
            let out = match format {
                Format::Csv => report::audit_csv(&report),
                Format::Json => json(&report),
            };
            if report.passed() {
                Ok(out)
            } else {
                emit(&out);
                Err(Failure::Audit)
            }
        }
    }
}

fn emit(s: &str) {
    let mut out = std::io::stdout().lock();
    let _ = out.write_all(s.as_bytes()).and_then(|_| out.flush());
}

fn error_line(kind: &str, message: &str) -> String {
    serde_json::json!({ "error": kind, "message": message }).to_string()
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let msg = e.to_string();
            let first = msg.lines().next().unwrap_or("invalid arguments").trim_start_matches("error: ");
            eprintln!("{}", error_line("invalid-input", first));
            return ExitCode::from(2);
        }
    };
    match run(cli.command) {
        Ok(out) => {
            emit(&out);
            ExitCode::SUCCESS
        }
        Err(Failure::Invalid(msg)) => {
            eprintln!("{}", error_line("invalid-input", &msg));
            ExitCode::from(2)
        }
        Err(Failure::Inconclusive(record)) => {
            eprintln!("{record}");
            ExitCode::from(3)
        }
        Err(Failure::Audit) => {
            eprintln!("{}", error_line("audit-failure", "numeric and rule-based classification disagree"));
            ExitCode::from(4)
        }
    }
}
