//! Records emitted by the command-line tool, their CSV rendering, and the
//! per-wavenumber evaluations behind them.

use std::fmt::Write as _;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::limits::{
    limit_table, AuditReport, HalfBoundReport, LimitClassification, LimitError, ResonanceSet, XiSequence,
};
use crate::model::{Family, Kinematics, ModelError, PotentialSpec};
use crate::observables::{
    differential_2d, differential_3d, one_d_from_table, sigma_total_2d, sigma_total_3d, ObservableError,
};
use crate::phase_shifts::{build_table, PhaseShiftError, PhaseShiftTable};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ReportError {
    #[error(transparent)]
    Model(#[from] ModelError),
    #[error(transparent)]
    Phase(#[from] PhaseShiftError),
    #[error(transparent)]
    Limit(#[from] LimitError),
    #[error(transparent)]
    Observable(#[from] ObservableError),
}

/// Full-precision decimal rendering: 17 significant digits, `inf`, `-inf`.
pub fn fmt_real(v: f64) -> String {
    if v.is_infinite() {
        if v > 0.0 { "inf".into() } else { "-inf".into() }
    } else if v.is_nan() {
        "nan".into()
    } else {
        format!("{v:.16e}")
    }
}

fn fmt_opt(v: Option<f64>) -> String {
    v.map(fmt_real).unwrap_or_default()
}

/// Parameters of the `xi -> 0` sequence used by the limit path.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SequenceParams {
    pub xi_start: f64,
    pub xi_ratio: f64,
    pub xi_count: usize,
    pub log_decades: u32,
}

impl Default for SequenceParams {
    fn default() -> Self {
        SequenceParams { xi_start: 1e-2, xi_ratio: 10.0, xi_count: 5, log_decades: 8 }
    }
}

impl SequenceParams {
    pub fn build(&self, spec: &PotentialSpec, k: f64) -> Result<XiSequence, LimitError> {
        if spec.family.has_log_factor() {
            let a0 = spec.a0.ok_or(ModelError::MissingLogScale(spec.family))?;
            XiSequence::log_factor_decades((k * a0).ln(), self.log_decades)
        } else {
            XiSequence::geometric(self.xi_start, self.xi_ratio, self.xi_count)
        }
    }
}

/// Phase shifts at finite `a`, or the idealized table of the contact limit.
pub fn table_for(
    spec: &PotentialSpec,
    k: f64,
    limit: Option<&SequenceParams>,
    l_max_hint: Option<usize>,
) -> Result<PhaseShiftTable, ReportError> {
    let kin = Kinematics::new(k)?;
    match limit {
        None => Ok(build_table(spec, kin, l_max_hint)?),
        Some(params) => {
            let seq = params.build(spec, k)?;
            Ok(limit_table(spec, k, &seq)?.1)
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct DifferentialPoint {
    pub theta: f64,
    pub value: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CrossSectionRecord {
    pub family: Family,
    pub k: f64,
    pub limit: bool,
    pub sigma_total: f64,
    pub differential: Vec<DifferentialPoint>,
}

pub fn cross_section(
    spec: &PotentialSpec,
    k: f64,
    limit: Option<&SequenceParams>,
    thetas: &[f64],
) -> Result<CrossSectionRecord, ReportError> {
    let table = table_for(spec, k, limit, None)?;
    let (total, diff): (fn(&PhaseShiftTable) -> _, fn(&PhaseShiftTable, f64) -> _) = match spec.family.dimension() {
        3 => (sigma_total_3d, differential_3d),
        2 => (sigma_total_2d, differential_2d),
        _ => return Err(ObservableError::WrongDimension { family: spec.family, expected: 3 }.into()),
    };
    let differential = thetas
        .iter()
        .map(|&theta| Ok(DifferentialPoint { theta, value: diff(&table, theta)? }))
        .collect::<Result<_, ObservableError>>()?;
    Ok(CrossSectionRecord { family: spec.family, k, limit: limit.is_some(), sigma_total: total(&table)?, differential })
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Scattering1DRecord {
    pub family: Family,
    pub k: f64,
    pub limit: bool,
    pub r: Complex64,
    pub t: Complex64,
    pub reflection: f64,
    pub transmission: f64,
}

pub fn scattering_1d(spec: &PotentialSpec, k: f64, limit: Option<&SequenceParams>) -> Result<Scattering1DRecord, ReportError> {
    let table = table_for(spec, k, limit, None)?;
    let s = one_d_from_table(&table)?;
    Ok(Scattering1DRecord {
        family: spec.family,
        k,
        limit: limit.is_some(),
        r: s.r,
        t: s.t,
        reflection: s.reflection(),
        transmission: s.transmission(),
    })
}

// ---------------------------------------------------------------------------
// CSV
// ---------------------------------------------------------------------------

pub fn phase_tables_csv(tables: &[PhaseShiftTable]) -> String {
    let mut out = String::from("k,index,tan_delta,delta_mod_pi\n");
    for t in tables {
        for e in &t.entries {
            let _ = writeln!(out, "{},{},{},{}", fmt_real(t.k), e.index, fmt_real(e.tan_delta), fmt_real(e.delta_mod_pi));
        }
    }
    out
}

pub fn cross_sections_csv(records: &[CrossSectionRecord]) -> String {
    let mut out = String::from("k,quantity,theta,value\n");
    for r in records {
        let _ = writeln!(out, "{},sigma_total,,{}", fmt_real(r.k), fmt_real(r.sigma_total));
        for d in &r.differential {
            let _ = writeln!(out, "{},dsigma,{},{}", fmt_real(r.k), fmt_real(d.theta), fmt_real(d.value));
        }
    }
    out
}

pub fn scattering_1d_csv(records: &[Scattering1DRecord]) -> String {
    let mut out = String::from("k,r_re,r_im,t_re,t_im,reflection,transmission\n");
    for r in records {
        let _ = writeln!(
            out,
            "{},{},{},{},{},{},{}",
            fmt_real(r.k),
            fmt_real(r.r.re),
            fmt_real(r.r.im),
            fmt_real(r.t.re),
            fmt_real(r.t.im),
            fmt_real(r.reflection),
            fmt_real(r.transmission)
        );
    }
    out
}

pub fn limit_csv(c: &LimitClassification) -> String {
    let mut out = String::from("verdict,resonant_index,slope,slope_secondary\n");
    let index = c.resonant_index.map(|i| i.to_string()).unwrap_or_default();
    let _ = writeln!(out, "{:?},{},{},{}", c.verdict, index, fmt_opt(c.slope), fmt_opt(c.slope_secondary));
    out.push_str("xi,ln_xi,tan_delta0,tan_delta1\n");
    for p in &c.evidence {
        let _ = writeln!(out, "{},{},{},{}", fmt_real(p.xi), fmt_real(p.ln_xi), fmt_real(p.tan_delta0), fmt_real(p.tan_delta1));
    }
    out
}

/// One point of a limit scan.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LimitScanRecord {
    pub spec: PotentialSpec,
    pub k: f64,
    pub classification: LimitClassification,
}

pub fn limit_scan_csv(records: &[LimitScanRecord]) -> String {
    let mut out = String::from("family,omega,alpha,beta,k,verdict,resonant_index,slope,slope_secondary\n");
    for r in records {
        let c = &r.classification;
        let index = c.resonant_index.map(|i| i.to_string()).unwrap_or_default();
        let _ = writeln!(
            out,
            "{},{},{},{},{},{:?},{},{},{}",
            r.spec.family,
            fmt_real(r.spec.omega),
            fmt_real(r.spec.alpha),
            fmt_real(r.spec.beta),
            fmt_real(r.k),
            c.verdict,
            index,
            fmt_opt(c.slope),
            fmt_opt(c.slope_secondary)
        );
    }
    out
}

pub fn resonances_csv(set: &ResonanceSet) -> String {
    let mut out = String::from("n,label,omega\n");
    for r in &set.omegas {
        let label = serde_json::to_value(r.label).ok().and_then(|v| v.as_str().map(String::from)).unwrap_or_default();
        let _ = writeln!(out, "{},{},{}", r.n, label, fmt_real(r.omega));
    }
    out
}

pub fn half_bound_csv(r: &HalfBoundReport) -> String {
    let parity = match r.parity {
        Some(p) => format!("{p:?}").to_lowercase(),
        None => String::new(),
    };
    format!(
        "exists,parity,residual,interior_amplitude,exterior_amplitude\n{},{},{},{},{}\n",
        r.exists,
        parity,
        fmt_real(r.residual),
        fmt_real(r.pieces.interior_amplitude),
        fmt_real(r.pieces.exterior_amplitude)
    )
}

pub fn audit_csv(report: &AuditReport) -> String {
    let mut out = String::from("family,omega,alpha,beta,numeric,symbolic,agree,resonant,half_bound,half_bound_consistent\n");
    for r in &report.rows {
        let numeric = r.numeric.map(|v| format!("{v:?}")).unwrap_or_else(|| "Inconclusive".into());
        let _ = writeln!(
            out,
            "{},{},{},{},{},{:?},{},{},{},{}",
            r.spec.family,
            fmt_real(r.spec.omega),
            fmt_real(r.spec.alpha),
            fmt_real(r.spec.beta),
            numeric,
            r.symbolic,
            r.agree,
            r.resonant,
            r.half_bound,
            r.half_bound_consistent
        );
    }
    out
}
