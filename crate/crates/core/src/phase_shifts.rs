//! Closed-form phase shifts of the six potential families at finite `a`.
//!
//! Every formula returns `tan(delta)` as an extended real: a denominator that
//! vanishes to within `DIVERGENCE_RATIO` of the numerator yields `+-inf`.
//!
//! Where a resonance makes the leading terms of a denominator cancel, the
//! denominator is rearranged so the cancellation happens analytically
//! (`1 + b` is formed exactly and the remainder comes from a series).

use std::f64::consts::{FRAC_2_PI, FRAC_PI_2, LN_2, PI};

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::model::{Family, Kinematics, ModelError, PotentialSpec, ReducedParams};
use crate::special_fn::{
    bessel_n0_regular_part, cyl_j, cyl_n, log_half_plus_gamma, one_minus_bessel_j0,
    sinc_minus_one, sph_j, sph_n, SpecialFnError, EULER_GAMMA, MAX_ORDER,
};

/// `|den| < DIVERGENCE_RATIO * |num|` is reported as a divergent `tan(delta)`.
pub const DIVERGENCE_RATIO: f64 = 1e-13;

/// Table construction stops once two consecutive `|tan(delta)|` fall below this.
pub const NEGLIGIBLE_TAN: f64 = 1e-14;

/// Below this `xi` the 2D formulas switch to their small-`xi` limits in
/// `ln xi`; `xi^2` is then below double precision relative to every other term.
const DEEP_XI: f64 = 1e-20;

/// Beyond this `eta` the Bessel phase `eta - pi/4` is no longer resolved.
const ETA_PHASE_LIMIT: f64 = 1e8;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum PhaseShiftError {
    #[error(transparent)]
    Special(#[from] SpecialFnError),
    #[error(transparent)]
    Model(#[from] ModelError),
    #[error("eta is imaginary (radicand {radicand:e}); repulsive wells are not supported")]
    ImaginaryEta { radicand: f64 },
    #[error("xi = {xi:e} must lie strictly between 0 and xi0 = {xi0:e}")]
    OutsideLogRange { xi: f64, xi0: f64 },
    #[error("xi must be positive and finite, got {0:e}")]
    BadXi(f64),
    #[error("{family} is not handled by this formula")]
    WrongFamily { family: Family },
}

/// `num/den` with divergence detection.
pub fn guarded_ratio(num: f64, den: f64) -> f64 {
    if num == 0.0 {
        return 0.0;
    }
    if den == 0.0 || den.abs() < DIVERGENCE_RATIO * num.abs() {
        let sign = if den == 0.0 { num.signum() } else { num.signum() * den.signum() };
        return sign * f64::INFINITY;
    }
    num / den
}

/// `atan(t)` folded into `(-pi/2, pi/2]`, with `+-inf -> pi/2`.
pub fn delta_mod_pi(tan_delta: f64) -> f64 {
    if tan_delta.is_infinite() {
        return FRAC_PI_2;
    }
    let d = tan_delta.atan();
    if d <= -FRAC_PI_2 {
        FRAC_PI_2
    } else {
        d
    }
}

fn positive_xi(rp: &ReducedParams) -> Result<f64, PhaseShiftError> {
    if rp.xi > 0.0 && rp.xi.is_finite() {
        Ok(rp.xi)
    } else {
        Err(PhaseShiftError::BadXi(rp.xi))
    }
}

fn real_eta(rp: &ReducedParams) -> Result<f64, PhaseShiftError> {
    let eta = rp.eta.ok_or(PhaseShiftError::WrongFamily { family: rp.family })?;
    if eta.imaginary {
        return Err(PhaseShiftError::ImaginaryEta { radicand: -eta.ln_sq.exp() });
    }
    Ok(eta.magnitude)
}

fn log_range(rp: &ReducedParams) -> Result<f64, PhaseShiftError> {
    let xi0 = rp.xi0.ok_or(PhaseShiftError::WrongFamily { family: rp.family })?;
    let l = rp.log_factor().unwrap_or(f64::NAN);
    if l > 0.0 && l.is_finite() {
        Ok(l)
    } else {
        Err(PhaseShiftError::OutsideLogRange { xi: rp.xi, xi0 })
    }
}

/// `xi^alpha`, exact for the integer exponents 0 and 1.
fn xi_pow_alpha(rp: &ReducedParams) -> f64 {
    if rp.alpha == 1.0 {
        rp.xi
    } else if rp.alpha == 0.0 {
        1.0
    } else {
        (rp.alpha * rp.ln_xi).exp()
    }
}

fn check_order(order: usize) -> Result<(), PhaseShiftError> {
    if order > MAX_ORDER {
        Err(SpecialFnError::OrderAboveCap(order).into())
    } else {
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// Three dimensions
// ---------------------------------------------------------------------------

/// Spherical shell: `tan d_l = b xi j_l^2 / (-xi^(alpha-1) + b xi j_l n_l)`.
pub fn tan_delta_shell3d(l: usize, rp: &ReducedParams) -> Result<f64, PhaseShiftError> {
    check_order(l)?;
    let xi = positive_xi(rp)?;
    let b = rp.b;
    let jl = sph_j(l, xi);
    let num = b * xi * jl * jl;
    let den = if l == 0 {
        // xi j_0 n_0 = -sin(2 xi)/(2 xi)
        -(rp.xi_pow_alpha_minus_one() + b) - b * sinc_minus_one(2.0 * xi)
    } else {
        -rp.xi_pow_alpha_minus_one() + b * xi * jl * sph_n(l, xi)
    };
    Ok(guarded_ratio(num, den))
}

/// Spherical square well.
pub fn tan_delta_well3d(l: usize, rp: &ReducedParams) -> Result<f64, PhaseShiftError> {
    check_order(l)?;
    let xi = positive_xi(rp)?;
    let eta = real_eta(rp)?;
    if l == 0 {
        // j_0, j_1, n_0, n_1 substituted and the common 1/(xi eta) removed
        let (sx, cx) = xi.sin_cos();
        let (se, ce) = eta.sin_cos();
        let num = xi * se * cx - eta * ce * sx;
        let den = eta * ce * cx + xi * sx * se;
        return Ok(guarded_ratio(num, den));
    }
    let j_l_eta = sph_j(l, eta);
    let j_l1_eta = sph_j(l + 1, eta);
    let num = eta * sph_j(l, xi) * j_l1_eta - xi * sph_j(l + 1, xi) * j_l_eta;
    let den = eta * sph_n(l, xi) * j_l1_eta - xi * sph_n(l + 1, xi) * j_l_eta;
    Ok(guarded_ratio(num, den))
}

// ---------------------------------------------------------------------------
// Two dimensions
// ---------------------------------------------------------------------------

fn ln_factorial(n: usize) -> f64 {
    (2..=n).map(|i| (i as f64).ln()).sum()
}

/// Circular ring:
/// `tan d_m = b pi J_m^2 / (-2 xi^(alpha-1) L^beta + b pi J_m N_m)`, `L = -ln(xi/xi0)`.
pub fn tan_delta_ring2d(m: usize, rp: &ReducedParams) -> Result<f64, PhaseShiftError> {
    check_order(m)?;
    let l = log_range(rp)?;
    let b = rp.b;
    let x_pow = rp.xi_pow_alpha_minus_one();
    let log_pow = l.powf(rp.beta);
    let exact_log = rp.alpha == 1.0 && rp.beta == 1.0;
    // ln(xi0/2) + gamma
    let c = rp.xi0.unwrap().ln() - LN_2 + EULER_GAMMA;

    if rp.xi < DEEP_XI {
        if m == 0 {
            // J_0 = 1, pi N_0 = 2 (ln(xi/2) + gamma) = 2 (c - L)
            let den = if exact_log {
                -2.0 * l * (1.0 + b) + 2.0 * b * c
            } else {
                -2.0 * x_pow * log_pow - 2.0 * b * l + 2.0 * b * c
            };
            return Ok(guarded_ratio(b * PI, den));
        }
        // J_m ~ (xi/2)^m/m!, pi J_m N_m ~ -1/m
        let mf = m as f64;
        let num = b * PI * (2.0 * mf * (rp.ln_xi - LN_2) - 2.0 * ln_factorial(m)).exp();
        let den = -2.0 * x_pow * log_pow - b / mf;
        return Ok(guarded_ratio(num, den));
    }

    let xi = rp.xi;
    let jm = cyl_j(m, xi);
    let num = b * PI * jm * jm;
    let den = if m == 0 && xi < 0.5 {
        // pi J_0 N_0 = 2 J_0^2 (c - L) + 2 J_0 S
        let s = bessel_n0_regular_part(xi)?;
        if exact_log {
            let one_minus = one_minus_bessel_j0(xi)?;
            let one_minus_sq = one_minus * (2.0 - one_minus);
            -2.0 * l * (1.0 + b) + 2.0 * b * l * one_minus_sq + 2.0 * b * jm * jm * c + 2.0 * b * jm * s
        } else {
            -2.0 * x_pow * log_pow - 2.0 * b * l * jm * jm + 2.0 * b * jm * jm * c + 2.0 * b * jm * s
        }
    } else {
        -2.0 * x_pow * log_pow + b * PI * jm * cyl_n(m, xi)
    };
    Ok(guarded_ratio(num, den))
}

/// Circular square well.
pub fn tan_delta_well2d(m: usize, rp: &ReducedParams) -> Result<f64, PhaseShiftError> {
    check_order(m)?;
    log_range(rp)?;
    let eta = real_eta(rp)?;
    if rp.xi < DEEP_XI {
        return Ok(if m == 0 { deep_well2d_s(rp, eta) } else { deep_well2d_higher(m, rp, eta) });
    }
    let xi = rp.xi;
    let j_m_eta = cyl_j(m, eta);
    let j_m1_eta = cyl_j(m + 1, eta);
    let num = eta * cyl_j(m, xi) * j_m1_eta - xi * cyl_j(m + 1, xi) * j_m_eta;
    let den = eta * cyl_n(m, xi) * j_m1_eta - xi * cyl_n(m + 1, xi) * j_m_eta;
    Ok(guarded_ratio(num, den))
}

/// `(J_0(eta), S, J_0(eta) - S)` with `S = 2 J_1(eta)/eta`, taking `eta^2`
/// directly. The difference comes from its own series for small `eta`.
fn j0_and_s(eta_sq: f64) -> (f64, f64, f64) {
    if eta_sq >= 1.0 {
        let eta = eta_sq.sqrt();
        let (j0, s) = (cyl_j(0, eta), 2.0 * cyl_j(1, eta) / eta);
        return (j0, s, j0 - s);
    }
    // q^k/(k!)^2 carries J_0; S and the difference weight it by 1/(k+1), k/(k+1)
    let q = -0.25 * eta_sq;
    let (mut j0, mut s, mut d) = (1.0, 1.0, 0.0);
    let mut term = 1.0;
    for k in 1..30 {
        let kf = k as f64;
        term *= q / (kf * kf);
        j0 += term;
        s += term / (kf + 1.0);
        d += term * kf / (kf + 1.0);
        if term.abs() < 1e-18 * d.abs() {
            break;
        }
    }
    (j0, s, d)
}

/// `m = 0` once `xi^2` is negligible next to 1. With `J_0(xi) = 1`,
/// `xi N_1(xi) = -2/pi`, `N_0(xi) = (2/pi) g`, `g = ln(xi/2) + gamma`:
/// `tan d_0 = (eta J_1(eta) - xi^2/2 J_0(eta)) / ((2/pi)[eta J_1(eta) g + J_0(eta)])`.
///
/// At `alpha = beta = 1` the two terms of the denominator cancel to `O(1/L)`
/// near `b = -1`; there `eta^2 L / 2 = -b + xi^2 L / 2` is substituted so
/// that the cancellation happens analytically.
fn deep_well2d_s(rp: &ReducedParams, eta: f64) -> f64 {
    let g = log_half_plus_gamma(rp.ln_xi);
    if eta > ETA_PHASE_LIMIT {
        return guarded_ratio(1.0, FRAC_2_PI * g);
    }
    let excess = rp.eta.map(|e| e.excess).unwrap_or(0.0);
    let xi_sq = (2.0 * rp.ln_xi).exp();
    let radicand = xi_sq + excess;
    let eta_sq = if radicand.is_normal() { radicand } else { eta * eta };
    let (j0, s, d) = j0_and_s(eta_sq);
    let num = 0.5 * (excess * s - xi_sq * d);
    let den = match rp.log_factor() {
        Some(l) if rp.alpha == 1.0 && rp.beta == 1.0 => {
            // g + L, formed without the large cancellation
            let c = rp.xi0.unwrap().ln() - LN_2 + EULER_GAMMA;
            d + (1.0 + rp.b) * s - 0.5 * xi_sq * l * s + 0.5 * eta_sq * s * c
        }
        _ => 0.5 * eta_sq * s * g + j0,
    };
    guarded_ratio(num, FRAC_2_PI * den)
}

/// `m >= 1` once `xi^2` is negligible:
/// `tan d_m = pi (xi/2)^(2m) J_{m+1}(eta) / (m! (m-1)! J_{m-1}(eta))`.
fn deep_well2d_higher(m: usize, rp: &ReducedParams, eta: f64) -> f64 {
    let mf = m as f64;
    let ratio = if eta < 1e-4 {
        eta * eta / (4.0 * mf * (mf + 1.0))
    } else if eta > ETA_PHASE_LIMIT {
        -1.0
    } else if m + 1 > MAX_ORDER {
        0.0
    } else {
        guarded_ratio(cyl_j(m + 1, eta), cyl_j(m - 1, eta))
    };
    let scale = (2.0 * mf * (rp.ln_xi - LN_2) - ln_factorial(m) - ln_factorial(m - 1)).exp();
    if scale == 0.0 {
        return 0.0;
    }
    PI * scale * ratio
}

// ---------------------------------------------------------------------------
// One dimension
// ---------------------------------------------------------------------------

/// `(tan d+, tan d-)` for the two one-dimensional families.
pub fn tan_delta_1d(rp: &ReducedParams, family: Family) -> Result<(f64, f64), PhaseShiftError> {
    let xi = positive_xi(rp)?;
    let (sx, cx) = xi.sin_cos();
    match family {
        Family::DoubleDelta1D => {
            let b = rp.b;
            let x_alpha = xi_pow_alpha(rp);
            // sin xi cos xi = xi (1 + sinc_minus_one(2 xi))
            let rest = b * xi * sinc_minus_one(2.0 * xi);
            let plus = guarded_ratio(b * cx * cx, (b * xi - x_alpha) + rest);
            let minus_lead = if rp.alpha == 1.0 { xi * (1.0 + b) } else { x_alpha + b * xi };
            let minus = guarded_ratio(-b * sx * sx, minus_lead + rest);
            Ok((plus, minus))
        }
        Family::Well1D => {
            let eta = real_eta(rp)?;
            let (se, ce) = eta.sin_cos();
            // both ratios multiplied through by cos(xi) cos(eta)
            let plus = guarded_ratio(eta * se * cx - xi * sx * ce, xi * cx * ce + eta * sx * se);
            let minus = guarded_ratio(xi * se * cx - eta * sx * ce, eta * ce * cx + xi * sx * se);
            Ok((plus, minus))
        }
        other => Err(PhaseShiftError::WrongFamily { family: other }),
    }
}

/// Dispatch to the family formula for one partial wave (2D and 3D).
pub fn tan_delta(index: usize, rp: &ReducedParams) -> Result<f64, PhaseShiftError> {
    match rp.family {
        Family::Shell3D => tan_delta_shell3d(index, rp),
        Family::Well3D => tan_delta_well3d(index, rp),
        Family::Ring2D => tan_delta_ring2d(index, rp),
        Family::Well2D => tan_delta_well2d(index, rp),
        family => Err(PhaseShiftError::WrongFamily { family }),
    }
}

// ---------------------------------------------------------------------------
// Tables
// ---------------------------------------------------------------------------

/// Partial-wave label: `l`/`m` in 3D/2D, parity channel in 1D.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum WaveIndex {
    Order(u32),
    Even,
    Odd,
}

impl Serialize for WaveIndex {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            WaveIndex::Order(n) => s.serialize_u32(*n),
            WaveIndex::Even => s.serialize_str("+"),
            WaveIndex::Odd => s.serialize_str("-"),
        }
    }
}

impl<'de> Deserialize<'de> for WaveIndex {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Num(u32),
            Text(String),
        }
        match Raw::deserialize(d)? {
            Raw::Num(n) => Ok(WaveIndex::Order(n)),
            Raw::Text(t) if t == "+" => Ok(WaveIndex::Even),
            Raw::Text(t) if t == "-" => Ok(WaveIndex::Odd),
            Raw::Text(t) => Err(serde::de::Error::custom(format!("bad wave index '{t}'"))),
        }
    }
}

impl std::fmt::Display for WaveIndex {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            WaveIndex::Order(n) => write!(f, "{n}"),
            WaveIndex::Even => f.write_str("+"),
            WaveIndex::Odd => f.write_str("-"),
        }
    }
}

/// Serde adapter for reals that may be infinite: JSON has no infinity, so
/// `+-inf` travel as the strings `"inf"` / `"-inf"`.
pub mod ext_real {
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &f64, s: S) -> Result<S::Ok, S::Error> {
        if v.is_infinite() {
            s.serialize_str(if *v > 0.0 { "inf" } else { "-inf" })
        } else {
            s.serialize_f64(*v)
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<f64, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Num(f64),
            Text(String),
        }
        match Raw::deserialize(d)? {
            Raw::Num(v) => Ok(v),
            Raw::Text(t) => match t.as_str() {
                "inf" => Ok(f64::INFINITY),
                "-inf" => Ok(f64::NEG_INFINITY),
                _ => Err(serde::de::Error::custom(format!("bad extended real '{t}'"))),
            },
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct PhaseShiftEntry {
    pub index: WaveIndex,
    #[serde(with = "ext_real")]
    pub tan_delta: f64,
    #[serde(rename = "delta")]
    pub delta_mod_pi: f64,
}

impl PhaseShiftEntry {
    pub fn new(index: WaveIndex, tan_delta: f64) -> Self {
        PhaseShiftEntry { index, tan_delta, delta_mod_pi: delta_mod_pi(tan_delta) }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum TruncationReason {
    BelowThreshold,
    Cap,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Truncation {
    pub index: u32,
    pub reason: TruncationReason,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PhaseShiftTable {
    pub family: Family,
    pub k: f64,
    pub entries: Vec<PhaseShiftEntry>,
    pub truncation: Truncation,
}

impl PhaseShiftTable {
    /// Table from explicit `tan(delta)` values for indices `0..`.
    pub fn from_tan_deltas(family: Family, k: f64, tans: &[f64]) -> Self {
        if family.dimension() == 1 {
            assert_eq!(tans.len(), 2, "1D tables hold exactly the (+, -) pair");
            return Self::one_d(family, k, tans[0], tans[1]);
        }
        let entries: Vec<_> = tans
            .iter()
            .enumerate()
            .map(|(i, &t)| PhaseShiftEntry::new(WaveIndex::Order(i as u32), t))
            .collect();
        let index = entries.len().saturating_sub(1) as u32;
        PhaseShiftTable {
            family,
            k,
            entries,
            truncation: Truncation { index, reason: TruncationReason::BelowThreshold },
        }
    }

    fn one_d(family: Family, k: f64, plus: f64, minus: f64) -> Self {
        PhaseShiftTable {
            family,
            k,
            entries: vec![
                PhaseShiftEntry::new(WaveIndex::Even, plus),
                PhaseShiftEntry::new(WaveIndex::Odd, minus),
            ],
            truncation: Truncation { index: 1, reason: TruncationReason::BelowThreshold },
        }
    }

    pub fn get(&self, index: WaveIndex) -> Option<&PhaseShiftEntry> {
        self.entries.iter().find(|e| e.index == index)
    }

    /// `(tan d+, tan d-)` of a 1D table.
    pub fn parity_pair(&self) -> Option<(f64, f64)> {
        Some((self.get(WaveIndex::Even)?.tan_delta, self.get(WaveIndex::Odd)?.tan_delta))
    }
}

/// Evaluate the family's phase shifts at `k` for indices `0, 1, 2, ...`
/// until two consecutive ones are negligible, or the order cap (or the
/// caller's `l_max_hint`, whichever is lower) is reached.
pub fn build_table(
    spec: &PotentialSpec,
    kin: Kinematics,
    l_max_hint: Option<usize>,
) -> Result<PhaseShiftTable, PhaseShiftError> {
    spec.validate()?;
    let rp = ReducedParams::reduce(spec, kin);
    if spec.family.dimension() == 1 {
        let (plus, minus) = tan_delta_1d(&rp, spec.family)?;
        return Ok(PhaseShiftTable::one_d(spec.family, kin.k, plus, minus));
    }
    let cap = l_max_hint.map_or(MAX_ORDER, |h| h.min(MAX_ORDER));
    let mut entries = Vec::new();
    let mut quiet_run = 0;
    let mut reason = TruncationReason::Cap;
    for index in 0..=cap {
        let t = tan_delta(index, &rp)?;
        entries.push(PhaseShiftEntry::new(WaveIndex::Order(index as u32), t));
        quiet_run = if t.abs() < NEGLIGIBLE_TAN { quiet_run + 1 } else { 0 };
        if quiet_run >= 2 && index as f64 >= rp.xi {
            reason = TruncationReason::BelowThreshold;
            break;
        }
    }
    let index = (entries.len() - 1) as u32;
    Ok(PhaseShiftTable { family: spec.family, k: kin.k, entries, truncation: Truncation { index, reason } })
}
