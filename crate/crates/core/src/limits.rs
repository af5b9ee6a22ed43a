//! The `a -> 0` behaviour of each family: numerical classification along a
//! sequence of shrinking `xi`, the rule-based classification it is audited
//! against, the resonant strengths, and zero-energy half-bound states.

use std::f64::consts::{LN_10, PI};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::model::{Family, Kinematics, ModelError, Parity, PotentialSpec, ReducedParams, WavefunctionPieces};
use crate::phase_shifts::{ext_real, tan_delta, tan_delta_1d, PhaseShiftError, PhaseShiftTable};
use crate::special_fn::cyl_j;

/// `alpha` (and `beta`) count as 1 within this distance.
pub const ALPHA_TOL: f64 = 1e-12;
/// Resonance-set membership tolerance on `omega`.
pub const OMEGA_TOL: f64 = 1e-9;
/// A half-bound state exists when the connection residual is at most this.
pub const HALF_BOUND_TOL: f64 = 1e-10;

/// Number of trailing sequence points used for the slope fit.
const FIT_POINTS: usize = 5;
const TREND_SLOPE: f64 = 0.25;
const PLATEAU_SLOPE: f64 = 0.1;
const PLATEAU_SPREAD: f64 = 0.05;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum LimitError {
    #[error(transparent)]
    Phase(#[from] PhaseShiftError),
    #[error(transparent)]
    Model(#[from] ModelError),
    #[error("bad xi sequence: {0}")]
    BadSequence(String),
    #[error("N_max must be at least 1")]
    EmptyResonanceRange,
    #[error("inconclusive limit (slope {}, secondary {})", show(.0.slope), show(.0.slope_secondary))]
    Inconclusive(Box<LimitEvidence>),
}

fn show(v: Option<f64>) -> String {
    v.map_or_else(|| "none".to_string(), |x| format!("{x:.4}"))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Verdict {
    Trivial,
    ResonantContact,
    TotalTransmission,
    TotalTransmissionPhasePi,
    TotalReflectionPhasePi,
    OrdinaryDelta1D,
}

/// What one channel's `tan(delta)` does as `xi -> 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Trend {
    Vanishing,
    Divergent,
    Plateau,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct EvidencePoint {
    pub xi: f64,
    pub ln_xi: f64,
    /// Index 0, or the even channel in 1D.
    #[serde(with = "ext_real")]
    pub tan_delta0: f64,
    /// Index 1, or the odd channel in 1D.
    #[serde(with = "ext_real")]
    pub tan_delta1: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LimitEvidence {
    pub slope: Option<f64>,
    pub slope_secondary: Option<f64>,
    pub trend: Option<Trend>,
    pub trend_secondary: Option<Trend>,
    pub points: Vec<EvidencePoint>,
}

/// Limiting `tan(delta)` of the two tracked channels.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct LimitValues {
    #[serde(with = "ext_real")]
    pub tan_delta0: f64,
    #[serde(with = "ext_real")]
    pub tan_delta1: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LimitClassification {
    pub verdict: Verdict,
    pub resonant_index: Option<u32>,
    pub slope: Option<f64>,
    pub slope_secondary: Option<f64>,
    pub limit_values: Option<LimitValues>,
    pub evidence: Vec<EvidencePoint>,
}

impl LimitClassification {
    fn bare(verdict: Verdict) -> Self {
        LimitClassification {
            verdict,
            resonant_index: (verdict == Verdict::ResonantContact).then_some(0),
            slope: None,
            slope_secondary: None,
            limit_values: None,
            evidence: Vec::new(),
        }
    }
}

// ---------------------------------------------------------------------------
// Sequences
// ---------------------------------------------------------------------------

/// How the slope is measured. Power laws in `xi` are fitted against `ln xi`;
/// the 2D families approach their limits in powers of `L = -ln(xi/xi0)`, so
/// those are fitted against `-ln L`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FitAxis {
    LogXi,
    NegLogLogFactor,
}

/// Strictly decreasing sequence of `ln xi` values.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct XiSequence {
    pub ln_xi: Vec<f64>,
    pub axis: FitAxis,
}

impl XiSequence {
    /// `start, start/ratio, ...` with `count` points.
    pub fn geometric(start: f64, ratio: f64, count: usize) -> Result<Self, LimitError> {
        if !(start > 0.0 && start.is_finite() && ratio > 1.0 && ratio.is_finite()) {
            return Err(LimitError::BadSequence(format!("start {start} and ratio {ratio}")));
        }
        let (l0, lr) = (start.ln(), ratio.ln());
        let seq = XiSequence { ln_xi: (0..count).map(|i| l0 - i as f64 * lr).collect(), axis: FitAxis::LogXi };
        seq.check()?;
        Ok(seq)
    }

    /// `L = 1, 10, ..., 10^decades` below `ln xi0`.
    pub fn log_factor_decades(ln_xi0: f64, decades: u32) -> Result<Self, LimitError> {
        let ln_xi = (0..=decades).map(|d| ln_xi0 - 10f64.powi(d as i32)).collect();
        let seq = XiSequence { ln_xi, axis: FitAxis::NegLogLogFactor };
        seq.check()?;
        Ok(seq)
    }

    /// `1e-2 ... 1e-6` for 1D and 3D; `L = 1 ... 1e8` for 2D.
    pub fn default_for(spec: &PotentialSpec, k: f64) -> Result<Self, LimitError> {
        if spec.family.has_log_factor() {
            let a0 = spec.a0.ok_or(ModelError::MissingLogScale(spec.family))?;
            Self::log_factor_decades((k * a0).ln(), 8)
        } else {
            Self::geometric(1e-2, 10.0, 5)
        }
    }

    fn check(&self) -> Result<(), LimitError> {
        if self.ln_xi.len() < 3 {
            return Err(LimitError::BadSequence("need at least 3 points".into()));
        }
        if self.ln_xi.windows(2).any(|w| !(w[1] < w[0])) || self.ln_xi.iter().any(|v| !v.is_finite()) {
            return Err(LimitError::BadSequence("ln xi must be finite and strictly decreasing".into()));
        }
        let decades = (self.ln_xi[0] - self.ln_xi[self.ln_xi.len() - 1]) / LN_10;
        if decades < 4.0 - 1e-9 {
            return Err(LimitError::BadSequence(format!("spans {decades:.2} decades, need 4")));
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// Numerical classification
// ---------------------------------------------------------------------------

fn least_squares_slope(xs: &[f64], ys: &[f64]) -> f64 {
    let n = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let sxy: f64 = xs.iter().zip(ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let sxx: f64 = xs.iter().map(|x| (x - mx) * (x - mx)).sum();
    sxy / sxx
}

/// Slope of `ln |t|` against the fit variable over the trailing window, and
/// the trend it implies.
fn channel_trend(fit_x: &[f64], values: &[f64]) -> (Option<f64>, Option<Trend>) {
    let n = values.len();
    let last = values[n - 1];
    if last.is_infinite() {
        return (None, Some(Trend::Divergent));
    }
    if last == 0.0 {
        return (None, Some(Trend::Vanishing));
    }
    // Two-point running maximum: channels that oscillate while their size
    // grows or decays (wells with alpha > 1, where eta -> inf) are judged by
    // their envelope rather than by where the samples happen to land.
    let envelope: Vec<f64> = (0..n)
        .map(|i| if i == 0 { values[0].abs() } else { values[i].abs().max(values[i - 1].abs()) })
        .collect();
    let start = n.saturating_sub(FIT_POINTS);
    let (xs, ys): (Vec<f64>, Vec<f64>) = fit_x[start..]
        .iter()
        .zip(&envelope[start..])
        .filter(|(_, t)| t.is_finite() && **t != 0.0)
        .map(|(x, t)| (*x, t.ln()))
        .unzip();
    if xs.len() < 3 {
        return (None, None);
    }
    let p = least_squares_slope(&xs, &ys);
    let (first, end) = (envelope[start], envelope[n - 1]);
    let prev = values[n - 2];
    let trend = if p >= TREND_SLOPE && end < first {
        Some(Trend::Vanishing)
    } else if p <= -TREND_SLOPE && end > first {
        Some(Trend::Divergent)
    } else if p.abs() < PLATEAU_SLOPE && ((last - prev) / last).abs() < PLATEAU_SPREAD {
        Some(Trend::Plateau)
    } else {
        None
    };
    (Some(p), trend)
}

fn verdict_from_trends(family: Family, t0: Trend, t1: Option<Trend>) -> Option<Verdict> {
    use Trend::*;
    if family.dimension() == 1 {
        return match (t0, t1?) {
            (Vanishing, Vanishing) => Some(Verdict::TotalTransmission),
            (Divergent, Divergent) => Some(Verdict::TotalTransmissionPhasePi),
            (Divergent, Vanishing) => Some(Verdict::TotalReflectionPhasePi),
            (Plateau, Vanishing) => Some(Verdict::OrdinaryDelta1D),
            _ => None,
        };
    }
    Some(match t0 {
        Vanishing => Verdict::Trivial,
        Divergent | Plateau => Verdict::ResonantContact,
    })
}

fn idealized(trend: Option<Trend>, last: f64) -> f64 {
    match trend {
        Some(Trend::Divergent) => f64::INFINITY,
        Some(Trend::Vanishing) | None => 0.0,
        Some(Trend::Plateau) => last,
    }
}

/// Evaluate indices 0 and 1 (or the parity pair) along `seq` and classify
/// the limit from the fitted slopes.
pub fn classify_limit(spec: &PotentialSpec, k: f64, seq: &XiSequence) -> Result<LimitClassification, LimitError> {
    spec.validate()?;
    Kinematics::new(k)?;
    seq.check()?;
    let ln_xi0 = spec.a0.map(|a0| (k * a0).ln());
    let mut points = Vec::with_capacity(seq.ln_xi.len());
    let mut fit_x = Vec::with_capacity(seq.ln_xi.len());
    for &ln_xi in &seq.ln_xi {
        let rp = ReducedParams::at_log_xi(spec, k, ln_xi);
        let (t0, t1) = if spec.family.dimension() == 1 {
            tan_delta_1d(&rp, spec.family)?
        } else {
            (tan_delta(0, &rp)?, tan_delta(1, &rp)?)
        };
        points.push(EvidencePoint { xi: rp.xi, ln_xi, tan_delta0: t0, tan_delta1: t1 });
        fit_x.push(match seq.axis {
            FitAxis::LogXi => ln_xi,
            FitAxis::NegLogLogFactor => {
                let l = ln_xi0.ok_or(ModelError::MissingLogScale(spec.family))? - ln_xi;
                -l.ln()
            }
        });
    }
    let v0: Vec<f64> = points.iter().map(|p| p.tan_delta0).collect();
    let v1: Vec<f64> = points.iter().map(|p| p.tan_delta1).collect();
    let (slope, trend) = channel_trend(&fit_x, &v0);
    let (slope_secondary, trend_secondary) = channel_trend(&fit_x, &v1);
    let verdict = trend.and_then(|t| verdict_from_trends(spec.family, t, trend_secondary));
    let Some(verdict) = verdict else {
        return Err(LimitError::Inconclusive(Box::new(LimitEvidence {
            slope,
            slope_secondary,
            trend,
            trend_secondary,
            points,
        })));
    };
    let limit_values = LimitValues {
        tan_delta0: idealized(trend, *v0.last().unwrap()),
        tan_delta1: if spec.family.dimension() == 1 { idealized(trend_secondary, *v1.last().unwrap()) } else { 0.0 },
    };
    Ok(LimitClassification {
        verdict,
        resonant_index: (verdict == Verdict::ResonantContact).then_some(0),
        slope,
        slope_secondary,
        limit_values: Some(limit_values),
        evidence: points,
    })
}

/// Phase-shift table of the contact limit: the classified limiting values
/// for index 0 (or the parity pair) and zero for every other wave.
pub fn limit_table(spec: &PotentialSpec, k: f64, seq: &XiSequence) -> Result<(LimitClassification, PhaseShiftTable), LimitError> {
    let class = classify_limit(spec, k, seq)?;
    let lv = class.limit_values.expect("numerical classification carries limit values");
    let tans = [lv.tan_delta0, lv.tan_delta1];
    Ok((class, PhaseShiftTable::from_tan_deltas(spec.family, k, &tans)))
}

// ---------------------------------------------------------------------------
// Resonances and rule-based classification
// ---------------------------------------------------------------------------

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ResonanceLabel {
    #[serde(rename = "shell")]
    Shell,
    #[serde(rename = "well3d")]
    Well3D,
    #[serde(rename = "well1d-odd")]
    Well1DOdd,
    #[serde(rename = "well1d-even")]
    Well1DEven,
    #[serde(rename = "double-delta")]
    DoubleDelta,
    #[serde(rename = "2d")]
    TwoD,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ResonantOmega {
    pub n: u32,
    pub omega: f64,
    pub label: ResonanceLabel,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ResonanceSet {
    pub family: Family,
    pub alpha: f64,
    pub beta: Option<f64>,
    pub omegas: Vec<ResonantOmega>,
}

impl ResonanceSet {
    pub fn values(&self) -> Vec<f64> {
        self.omegas.iter().map(|o| o.omega).collect()
    }

    pub fn only(mut self, label: ResonanceLabel) -> Self {
        self.omegas.retain(|o| o.label == label);
        self
    }
}

fn odd_square(n: u32) -> f64 {
    let m = (2 * n - 1) as f64;
    m * m * PI * PI
}

/// The strengths at which the `alpha = 1` (and `beta = 1`) limit is nontrivial,
/// ordered by `|omega|`.
pub fn enumerate_resonances(family: Family, n_max: u32) -> Result<ResonanceSet, LimitError> {
    if n_max == 0 {
        return Err(LimitError::EmptyResonanceRange);
    }
    let single = |label| vec![ResonantOmega { n: 1, omega: -1.0, label }];
    let omegas = match family {
        Family::Shell3D => single(ResonanceLabel::Shell),
        Family::Ring2D | Family::Well2D => single(ResonanceLabel::TwoD),
        Family::DoubleDelta1D => single(ResonanceLabel::DoubleDelta),
        Family::Well3D => (1..=n_max)
            .map(|n| ResonantOmega { n, omega: -odd_square(n) / 12.0, label: ResonanceLabel::Well3D })
            .collect(),
        Family::Well1D => {
            let mut all: Vec<_> = (1..=n_max)
                .flat_map(|n| {
                    let nf = n as f64;
                    [
                        ResonantOmega { n, omega: -odd_square(n) / 4.0, label: ResonanceLabel::Well1DOdd },
                        ResonantOmega { n, omega: -nf * nf * PI * PI, label: ResonanceLabel::Well1DEven },
                    ]
                })
                .collect();
            all.sort_by(|a, b| b.omega.total_cmp(&a.omega));
            all
        }
    };
    let beta = family.has_log_factor().then_some(1.0);
    Ok(ResonanceSet { family, alpha: 1.0, beta, omegas })
}

/// Which resonance set `spec` belongs to, if any.
pub fn resonance_label(spec: &PotentialSpec) -> Option<ResonanceLabel> {
    if (spec.alpha - 1.0).abs() > ALPHA_TOL {
        return None;
    }
    if spec.family.has_log_factor() && (spec.beta - 1.0).abs() > ALPHA_TOL {
        return None;
    }
    // enough N to reach |omega| in every family; Well3D is the slowest,
    // |omega| = (2N-1)^2 pi^2 / 12
    let n_max = 2 + ((12.0 * spec.omega.abs()).sqrt() / PI) as u32;
    enumerate_resonances(spec.family, n_max)
        .ok()?
        .omegas
        .into_iter()
        .find(|r| (spec.omega - r.omega).abs() <= OMEGA_TOL)
        .map(|r| r.label)
}

/// The verdict read straight off the published case analysis.
pub fn symbolic_classify(spec: &PotentialSpec) -> LimitClassification {
    let one_d = spec.family.dimension() == 1;
    if spec.omega == 0.0 {
        return LimitClassification::bare(if one_d { Verdict::TotalTransmission } else { Verdict::Trivial });
    }
    let label = resonance_label(spec);
    let verdict = if !one_d {
        if label.is_some() {
            Verdict::ResonantContact
        } else {
            Verdict::Trivial
        }
    } else if spec.alpha.abs() <= ALPHA_TOL {
        Verdict::OrdinaryDelta1D
    } else if spec.alpha < 0.0 {
        Verdict::TotalTransmission
    } else {
        match label {
            Some(ResonanceLabel::DoubleDelta | ResonanceLabel::Well1DOdd) => Verdict::TotalTransmissionPhasePi,
            Some(ResonanceLabel::Well1DEven) => Verdict::TotalTransmission,
            _ => Verdict::TotalReflectionPhasePi,
        }
    };
    LimitClassification::bare(verdict)
}

// ---------------------------------------------------------------------------
// Half-bound states
// ---------------------------------------------------------------------------

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct HalfBoundReport {
    pub exists: bool,
    pub parity: Option<Parity>,
    pub pieces: WavefunctionPieces,
    pub residual: f64,
}

/// Zero-energy matching at `r = a`.
///
/// `shape_a` is the interior radial shape at `a` (value of `R` or `psi`),
/// `value`, `deriv` the interior function actually matched (`u = rR` in 3D),
/// `ext_deriv_ratio` the exterior `f'/f` at `a`, `jump` the strength of the
/// derivative discontinuity. `ext_value_a` converts an exterior amplitude to
/// the radial value at `a`.
struct Matching {
    shape_a: f64,
    value: f64,
    deriv: f64,
    ext_deriv_ratio: f64,
    jump: f64,
    ext_value_a: f64,
}

impl Matching {
    fn residual(&self, a: f64) -> f64 {
        // exterior amplitude fixed by continuity; compare the derivative jump
        let mismatch = self.value * self.ext_deriv_ratio - self.deriv - self.jump * self.value;
        let scale = self.value.abs().max(a * self.deriv.abs());
        if scale == 0.0 {
            return f64::INFINITY;
        }
        a * mismatch.abs() / scale
    }

    fn pieces(&self, parity: Option<Parity>) -> WavefunctionPieces {
        if self.shape_a == 0.0 {
            return WavefunctionPieces { interior_amplitude: 0.0, exterior_amplitude: 0.0, parity };
        }
        // normalized so the solution equals 1 at the matching point
        WavefunctionPieces {
            interior_amplitude: 1.0 / self.shape_a,
            exterior_amplitude: 1.0 / self.ext_value_a,
            parity,
        }
    }
}

fn well_kappa(spec: &PotentialSpec, c: f64, log_pow: f64) -> f64 {
    (-c * spec.omega / (spec.a.powf(spec.alpha + 1.0) * log_pow)).sqrt()
}

/// Build the zero-energy regular interior solution and the bounded exterior
/// one, and test the connection conditions at `a`.
pub fn half_bound_check(spec: &PotentialSpec) -> Result<HalfBoundReport, LimitError> {
    spec.validate()?;
    let a = spec.a;
    let delta_jump = spec.omega / spec.a.powf(spec.alpha);
    let report = |m: Matching, parity| {
        let residual = m.residual(a);
        HalfBoundReport { exists: residual <= HALF_BOUND_TOL, parity, pieces: m.pieces(parity), residual }
    };
    Ok(match spec.family {
        // u = rR: interior u = r, exterior u = B0
        Family::Shell3D => report(
            Matching { shape_a: 1.0, value: a, deriv: 1.0, ext_deriv_ratio: 0.0, jump: delta_jump, ext_value_a: 1.0 / a },
            None,
        ),
        Family::Well3D => {
            let kappa = well_kappa(spec, 3.0, 1.0);
            let (s, c) = (kappa * a).sin_cos();
            report(
                Matching {
                    shape_a: s / (kappa * a),
                    value: s,
                    deriv: kappa * c,
                    ext_deriv_ratio: 0.0,
                    jump: 0.0,
                    ext_value_a: 1.0 / a,
                },
                None,
            )
        }
        // R constant outside (the other solution grows like ln r)
        Family::Ring2D => {
            let l = spec.a0.unwrap().ln() - a.ln();
            let jump = delta_jump / l.powf(spec.beta);
            report(Matching { shape_a: 1.0, value: 1.0, deriv: 0.0, ext_deriv_ratio: 0.0, jump, ext_value_a: 1.0 }, None)
        }
        Family::Well2D => {
            let l = spec.a0.unwrap().ln() - a.ln();
            let kappa = well_kappa(spec, 2.0, l.powf(spec.beta));
            let j0 = cyl_j(0, kappa * a);
            report(
                Matching {
                    shape_a: j0,
                    value: j0,
                    deriv: -kappa * cyl_j(1, kappa * a),
                    ext_deriv_ratio: 0.0,
                    jump: 0.0,
                    ext_value_a: 1.0,
                },
                None,
            )
        }
        Family::DoubleDelta1D => {
            let even = Matching { shape_a: 1.0, value: 1.0, deriv: 0.0, ext_deriv_ratio: 0.0, jump: delta_jump, ext_value_a: 1.0 };
            let odd = Matching { shape_a: a, value: a, deriv: 1.0, ext_deriv_ratio: 0.0, jump: delta_jump, ext_value_a: 1.0 };
            better_parity(report(even, Some(Parity::Even)), report(odd, Some(Parity::Odd)))
        }
        Family::Well1D => {
            let kappa = well_kappa(spec, 1.0, 1.0);
            let (s, c) = (kappa * a).sin_cos();
            let even = Matching { shape_a: c, value: c, deriv: -kappa * s, ext_deriv_ratio: 0.0, jump: 0.0, ext_value_a: 1.0 };
            let odd = Matching { shape_a: s, value: s, deriv: kappa * c, ext_deriv_ratio: 0.0, jump: 0.0, ext_value_a: 1.0 };
            better_parity(report(even, Some(Parity::Even)), report(odd, Some(Parity::Odd)))
        }
    })
}

fn better_parity(even: HalfBoundReport, odd: HalfBoundReport) -> HalfBoundReport {
    if odd.residual < even.residual {
        odd
    } else {
        even
    }
}

// ---------------------------------------------------------------------------
// Audit
// ---------------------------------------------------------------------------

pub const AUDIT_ALPHAS: [f64; 6] = [-1.0, 0.0, 0.5, 1.0, 1.5, 2.0];
pub const AUDIT_BETAS: [f64; 4] = [-1.0, 0.5, 1.0, 2.0];
pub const AUDIT_OFFSET: f64 = 1e-3;
const AUDIT_A: f64 = 1e-3;
const AUDIT_RESONANCES: u32 = 3;

/// The fixed audit grid: every family, the listed `alpha` (and `beta`), and
/// strengths at, just off, and away from each resonance.
pub fn audit_grid() -> Vec<PotentialSpec> {
    let mut grid = Vec::new();
    for family in Family::ALL {
        let mut omegas = Vec::new();
        for r in enumerate_resonances(family, AUDIT_RESONANCES).unwrap().omegas {
            omegas.extend([r.omega, r.omega - AUDIT_OFFSET, r.omega + AUDIT_OFFSET]);
        }
        omegas.push(-0.5);
        if !family.is_well() {
            omegas.push(0.7);
        }
        let betas: &[f64] = if family.has_log_factor() { &AUDIT_BETAS } else { &[0.0] };
        for &alpha in &AUDIT_ALPHAS {
            for &beta in betas {
                for &omega in &omegas {
                    let spec = PotentialSpec::new(family, omega, alpha, AUDIT_A);
                    grid.push(if family.has_log_factor() { spec.with_log_scale(beta, 1.0) } else { spec });
                }
            }
        }
    }
    grid
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AuditRow {
    pub spec: PotentialSpec,
    /// `None` when the numerical classification was inconclusive.
    pub numeric: Option<Verdict>,
    pub symbolic: Verdict,
    pub agree: bool,
    pub resonant: bool,
    pub half_bound: bool,
    /// For 1D/3D: half-bound state present exactly at resonances. For 2D the
    /// two are expected to be unrelated and this records that no half-bound
    /// state accompanies the resonance.
    pub half_bound_consistent: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AuditReport {
    pub k: f64,
    pub rows: Vec<AuditRow>,
    pub disagreements: usize,
    pub half_bound_failures: usize,
}

impl AuditReport {
    pub fn passed(&self) -> bool {
        self.disagreements == 0 && self.half_bound_failures == 0
    }
}

fn audit_point(spec: &PotentialSpec, k: f64) -> Result<AuditRow, LimitError> {
    let symbolic = symbolic_classify(spec).verdict;
    let seq = XiSequence::default_for(spec, k)?;
    let numeric = match classify_limit(spec, k, &seq) {
        Ok(c) => Some(c.verdict),
        Err(LimitError::Inconclusive(_)) => None,
        Err(e) => return Err(e),
    };
    let resonant = resonance_label(spec).is_some();
    let half_bound = half_bound_check(spec)?.exists;
    let half_bound_consistent = if spec.family.dimension() == 2 { !half_bound || !resonant } else { half_bound == resonant };
    Ok(AuditRow {
        spec: *spec,
        numeric,
        symbolic,
        agree: numeric == Some(symbolic),
        resonant,
        half_bound,
        half_bound_consistent,
    })
}

/// Classify every grid point both ways and cross-check half-bound states.
/// Points are evaluated in parallel; rows keep the grid order.
pub fn run_audit(grid: &[PotentialSpec], k: f64) -> Result<AuditReport, LimitError> {
    Kinematics::new(k)?;
    let rows = grid.par_iter().map(|s| audit_point(s, k)).collect::<Result<Vec<_>, _>>()?;
    let disagreements = rows.iter().filter(|r| !r.agree).count();
    let half_bound_failures = rows.iter().filter(|r| !r.half_bound_consistent).count();
    Ok(AuditReport { k, rows, disagreements, half_bound_failures })
}
