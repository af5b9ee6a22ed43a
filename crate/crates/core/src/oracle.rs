//! Phase shifts by direct integration of the Schrodinger equation at finite
//! `a`, independent of the closed-form expressions.
//!
//! The radial (or half-line) equation is written as `y'' = Q(r) y` with
//! `y = rR` in 3D, `y = sqrt(r) R` in 2D and `y = psi` in 1D, integrated
//! outward with Numerov's scheme and matched to the free solutions at two
//! exterior radii. Grid nodes sit on every discontinuity of the potential,
//! where `Q` takes the mean of its one-sided values; the global error is then
//! second order in the step and is removed by Richardson extrapolation.

use std::f64::consts::{FRAC_PI_2, PI};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::model::{Family, Kinematics, ModelError, PotentialSpec};
use crate::phase_shifts::{delta_mod_pi, WaveIndex};
use crate::special_fn::{bessel_j, bessel_n, spherical_j, spherical_n, SpecialFnError};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum OracleError {
    #[error(transparent)]
    Model(#[from] ModelError),
    #[error(transparent)]
    Special(#[from] SpecialFnError),
    #[error("{family} is not handled by this oracle")]
    WrongFamily { family: Family },
    #[error("wave index {index} does not apply to {family}")]
    WrongIndex { family: Family, index: WaveIndex },
    #[error("matching radius {r_max:e} is below the required {needed:e}")]
    RangeTooShort { r_max: f64, needed: f64 },
    #[error("step {step:e} exceeds the allowed {allowed:e}")]
    StepTooCoarse { step: f64, allowed: f64 },
    #[error("regularization width {w:e} exceeds a/50 = {max:e}")]
    WidthTooLarge { w: f64, max: f64 },
    #[error("extrapolation did not converge: successive values {0:?}")]
    NonConvergent([f64; 3]),
}

/// Integration grid. The step is the coarsest of the three used for
/// extrapolation; it is further refined internally where the interior
/// wavenumber demands it.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct IntegrationConfig {
    pub r_max: f64,
    pub step: f64,
}

impl IntegrationConfig {
    /// `r_max = max(10/k, 5a)` and `step = min(a, 2 pi/k)/200`.
    pub fn for_problem(spec: &PotentialSpec, k: f64) -> Self {
        IntegrationConfig { r_max: Self::min_range(spec.a, k), step: Self::max_step(spec.a, k) }
    }

    fn min_range(a: f64, k: f64) -> f64 {
        (10.0 / k).max(5.0 * a)
    }

    fn max_step(a: f64, k: f64) -> f64 {
        a.min(2.0 * PI / k) / 200.0
    }

    fn check(&self, a: f64, k: f64) -> Result<(), OracleError> {
        let needed = Self::min_range(a, k);
        if !(self.r_max >= needed * (1.0 - 1e-12)) {
            return Err(OracleError::RangeTooShort { r_max: self.r_max, needed });
        }
        let allowed = Self::max_step(a, k);
        if !(self.step > 0.0 && self.step <= allowed * (1.0 + 1e-12)) {
            return Err(OracleError::StepTooCoarse { step: self.step, allowed });
        }
        Ok(())
    }
}

/// Piecewise-constant potential in the units of `y'' = Q y`, `Q = C/r^2 + U - k^2`.
struct Problem {
    dim: u8,
    index: WaveIndex,
    k: f64,
    /// `(r_end, U)` for consecutive shells starting at 0; `U = 0` beyond the last.
    pieces: Vec<(f64, f64)>,
    /// Every piece boundary is an integer multiple of this.
    grid_unit: f64,
}

impl Problem {
    fn centrifugal(&self) -> f64 {
        match (self.dim, self.index) {
            (3, WaveIndex::Order(l)) => (l as f64) * (l as f64 + 1.0),
            (2, WaveIndex::Order(m)) => (m as f64) * (m as f64) - 0.25,
            _ => 0.0,
        }
    }

    fn potential(&self, r: f64, tol: f64) -> f64 {
        let mut start = 0.0;
        for (i, &(end, u)) in self.pieces.iter().enumerate() {
            if (r - end).abs() <= tol {
                let next = self.pieces.get(i + 1).map_or(0.0, |p| p.1);
                return 0.5 * (u + next);
            }
            if r >= start && r < end {
                return u;
            }
            start = end;
        }
        0.0
    }

    fn q(&self, r: f64, h: f64) -> f64 {
        let cent = self.centrifugal();
        let c = if cent != 0.0 { cent / (r * r) } else { 0.0 };
        c + self.potential(r, 1e-6 * h) - self.k * self.k
    }

    /// Regular solution of the innermost region by its power series.
    fn series_start(&self, r: f64) -> f64 {
        let kk = self.k * self.k - self.pieces.first().map_or(0.0, |p| p.1);
        let (lead, shift) = match (self.dim, self.index) {
            (3, WaveIndex::Order(l)) => (r.powi(l as i32 + 1), 2.0 * l as f64 + 1.0),
            (2, WaveIndex::Order(m)) => (r.powf(m as f64 + 0.5), 2.0 * m as f64),
            (1, WaveIndex::Even) => (1.0, -1.0),
            (1, WaveIndex::Odd) => (r, 1.0),
            _ => unreachable!("index validated before integration"),
        };
        // y = lead * sum_j c_j r^(2j), c_j = -K^2 c_{j-1} / (2j (2j + shift))
        let mut term = 1.0;
        let mut sum = 1.0;
        for j in 1..60 {
            let jj = 2.0 * j as f64;
            term *= -kk * r * r / (jj * (jj + shift));
            sum += term;
            if term.abs() < 1e-18 * sum.abs() {
                break;
            }
        }
        lead * sum
    }

    /// Free exterior solutions `(regular, irregular)` in `y` form, with the
    /// 1D sign convention `psi ~ cos(kx) - t sin(kx)` (even),
    /// `psi ~ sin(kx) + t cos(kx)` (odd).
    fn free(&self, r: f64) -> Result<(f64, f64), OracleError> {
        let x = self.k * r;
        Ok(match (self.dim, self.index) {
            (3, WaveIndex::Order(l)) => (r * spherical_j(l as usize, x)?, r * spherical_n(l as usize, x)?),
            (2, WaveIndex::Order(m)) => {
                let s = r.sqrt();
                (s * bessel_j(m as usize, x)?, s * bessel_n(m as usize, x)?)
            }
            (1, WaveIndex::Even) => (x.cos(), x.sin()),
            (1, WaveIndex::Odd) => (x.sin(), -x.cos()),
            _ => unreachable!("index validated before integration"),
        })
    }

    fn inner_wavenumber(&self) -> f64 {
        self.pieces.iter().map(|p| (self.k * self.k - p.1).abs().sqrt()).fold(self.k, f64::max)
    }

    /// `tan(delta)` with the grid step `h` (every piece boundary must be a node).
    fn tan_delta(&self, h: f64, r_max: f64) -> Result<f64, OracleError> {
        let first_end = self.pieces.first().map_or(r_max, |p| p.0);
        let inner = (self.k * self.k - self.pieces.first().map_or(0.0, |p| p.1)).abs().sqrt();
        let n0 = if self.dim == 1 {
            0
        } else {
            let target = 0.25 * first_end.min(1.0 / inner.max(1e-300));
            ((target / h).floor() as usize).max(1)
        };
        let n_end = (r_max / h).ceil() as usize;
        let quarter = ((FRAC_PI_2 / self.k / h).round() as usize).clamp(1, n_end - n0 - 1);
        let n_match = n_end - quarter;

        // Summed form: with z = (1 - h^2 Q/12) y the scheme is
        // z_{n+1} - 2 z_n + z_{n-1} = h^2 Q_n y_n; carrying the first
        // difference keeps round-off linear in the number of steps.
        let hh = h * h;
        let f = |n: usize| 1.0 - hh * self.q(n as f64 * h, h) / 12.0;
        let y0 = self.series_start(n0 as f64 * h);
        let mut y = self.series_start((n0 + 1) as f64 * h);
        let mut z = f(n0 + 1) * y;
        let mut diff = z - f(n0) * y0;
        let mut y_match = if n_match == n0 { y0 } else { f64::NAN };
        let mut y_match_scale = 1.0;
        for n in n0 + 1..n_end {
            if n == n_match {
                y_match = y;
            }
            diff += hh * self.q(n as f64 * h, h) * y;
            z += diff;
            y = z / f(n + 1);
            if y.abs() > 1e150 {
                y *= 1e-150;
                z *= 1e-150;
                diff *= 1e-150;
                if n >= n_match {
                    y_match_scale *= 1e-150;
                }
            }
        }
        let (r1, r2) = (n_match as f64 * h, n_end as f64 * h);
        let g = y_match * y_match_scale / y;
        let (j1, n1) = self.free(r1)?;
        let (j2, n2) = self.free(r2)?;
        // y1/y2 = (j1 - t n1)/(j2 - t n2)
        Ok((g * j2 - j1) / (g * n2 - n1))
    }
}

/// Shift `d` by multiples of pi to lie within pi/2 of `reference`.
fn unwrap_near(d: f64, reference: f64) -> f64 {
    d - PI * ((d - reference) / PI).round()
}

/// Richardson extrapolation of values at parameter `x, x/2, x/4`, with the
/// convergence order estimated from the values themselves.
pub fn richardson(v: [f64; 3]) -> Result<f64, OracleError> {
    let d1 = v[0] - v[1];
    let d2 = v[1] - v[2];
    if d2.abs() <= 1e-14 * v[2].abs().max(1.0) {
        return Ok(v[2]);
    }
    let ratio = d1 / d2;
    if !(ratio > 1.8) {
        if d1.abs().max(d2.abs()) < 1e-11 {
            return Ok(v[2]);
        }
        return Err(OracleError::NonConvergent(v));
    }
    Ok(v[2] - d2 / (ratio - 1.0))
}

/// Two-stage Richardson for an error expansion `c1 x + c2 x^2 + ...` at
/// `x, x/2, x/4`. A finite-width bump of strength `lambda` differs from the
/// delta shell at first order (`~ lambda^2 w`), then at second.
pub fn richardson_linear_quadratic(v: [f64; 3]) -> Result<f64, OracleError> {
    let d1 = v[0] - v[1];
    let d2 = v[1] - v[2];
    let tiny = 1e-11 * v[2].abs().max(1.0);
    if d1.abs().max(d2.abs()) > tiny {
        let ratio = d1 / d2;
        if !(1.4..=3.0).contains(&ratio) {
            return Err(OracleError::NonConvergent(v));
        }
    }
    let r_a = 2.0 * v[1] - v[0];
    let r_b = 2.0 * v[2] - v[1];
    Ok((4.0 * r_b - r_a) / 3.0)
}

fn delta_on_grid(problem: &Problem, base: f64, r_max: f64) -> Result<f64, OracleError> {
    let h = problem.grid_unit / (problem.grid_unit / base).ceil();
    let mut deltas = [0.0; 3];
    for (i, slot) in deltas.iter_mut().enumerate() {
        let t = problem.tan_delta(h / (1 << i) as f64, r_max)?;
        *slot = t.atan();
    }
    let d0 = deltas[0];
    let d = [d0, unwrap_near(deltas[1], d0), unwrap_near(deltas[2], d0)];
    richardson(d)
}

fn check_index(family: Family, index: WaveIndex) -> Result<(), OracleError> {
    let ok = match index {
        WaveIndex::Order(_) => family.dimension() > 1,
        WaveIndex::Even | WaveIndex::Odd => family.dimension() == 1,
    };
    if ok {
        Ok(())
    } else {
        Err(OracleError::WrongIndex { family, index })
    }
}

fn log_power(spec: &PotentialSpec) -> f64 {
    match spec.a0 {
        Some(a0) if spec.family.has_log_factor() => (a0 / spec.a).ln().powf(spec.beta),
        _ => 1.0,
    }
}

/// Refine the configured step so the interior oscillation is resolved too.
fn working_step(problem: &Problem, cfg: &IntegrationConfig) -> f64 {
    cfg.step.min(0.05 / problem.inner_wavenumber())
}

/// `delta` (mod pi) of a square well by direct integration.
pub fn oracle_phase_shift(
    spec: &PotentialSpec,
    kin: Kinematics,
    index: WaveIndex,
    cfg: &IntegrationConfig,
) -> Result<f64, OracleError> {
    spec.validate()?;
    if !spec.family.is_well() {
        return Err(OracleError::WrongFamily { family: spec.family });
    }
    check_index(spec.family, index)?;
    cfg.check(spec.a, kin.k)?;
    let dim = spec.family.dimension();
    let u_in = dim as f64 * spec.omega / (spec.a.powf(spec.alpha + 1.0) * log_power(spec));
    let problem = Problem { dim, index, k: kin.k, pieces: vec![(spec.a, u_in)], grid_unit: spec.a };
    let h = working_step(&problem, cfg);
    Ok(delta_mod_pi(delta_on_grid(&problem, h, cfg.r_max)?.tan()))
}

/// `delta` (mod pi) of a delta-shell family with the shell replaced by a
/// rectangular bump of width `w` centred on `a` (same integrated strength),
/// extrapolated over `w, w/2, w/4`.
///
/// `w` is rounded down to `a/n` for an integer `n >= 50` so that both bump
/// edges fall on grid nodes. The extrapolation assumes the width expansion
/// has reached its asymptotic form; `w` around `a/200` is a safe choice.
pub fn oracle_shell_regularized(
    spec: &PotentialSpec,
    kin: Kinematics,
    index: WaveIndex,
    w: f64,
    cfg: &IntegrationConfig,
) -> Result<f64, OracleError> {
    spec.validate()?;
    if spec.family.is_well() {
        return Err(OracleError::WrongFamily { family: spec.family });
    }
    check_index(spec.family, index)?;
    cfg.check(spec.a, kin.k)?;
    let a = spec.a;
    if !(w > 0.0 && w <= a / 50.0 * (1.0 + 1e-12)) {
        return Err(OracleError::WidthTooLarge { w, max: a / 50.0 });
    }
    let n_w = (a / w).ceil();
    let strength = spec.omega / (a.powf(spec.alpha) * log_power(spec));
    let mut per_width = [0.0; 3];
    for (i, slot) in per_width.iter_mut().enumerate() {
        let wi = a / (n_w * (1 << i) as f64);
        let problem = Problem {
            dim: spec.family.dimension(),
            index,
            k: kin.k,
            pieces: vec![(a - 0.5 * wi, 0.0), (a + 0.5 * wi, strength / wi)],
            grid_unit: 0.5 * wi,
        };
        // resolve the bump interior as well as the wave
        let h = working_step(&problem, cfg).min(wi / 8.0);
        *slot = delta_on_grid(&problem, h, cfg.r_max)?;
    }
    let d0 = per_width[0];
    let d = [d0, unwrap_near(per_width[1], d0), unwrap_near(per_width[2], d0)];
    Ok(delta_mod_pi(richardson_linear_quadratic(d)?.tan()))
}

/// Distance between two phases modulo pi.
pub fn phase_distance(a: f64, b: f64) -> f64 {
    (a - b - PI * ((a - b) / PI).round()).abs()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::ReducedParams;
    use crate::phase_shifts::{tan_delta_1d, tan_delta_well3d};

    #[test]
    fn richardson_recovers_quadratic_error() {
        let f = |h: f64| 0.3 + 2.0 * h * h + 5.0 * h * h * h;
        let v = richardson([f(0.1), f(0.05), f(0.025)]).unwrap();
        assert!((v - 0.3).abs() < 2e-4);
        assert!(richardson([1.0, 0.0, 1.0]).is_err());
    }

    #[test]
    fn width_extrapolation_removes_two_orders() {
        let f = |w: f64| -1.25 + 0.7 * w - 3.0 * w * w;
        let v = richardson_linear_quadratic([f(0.01), f(0.005), f(0.0025)]).unwrap();
        assert!((v + 1.25).abs() < 1e-14);
    }

    #[test]
    fn weak_well_gives_small_shift() {
        let spec = PotentialSpec::new(Family::Well3D, -1e-12, 1.0, 0.5);
        let kin = Kinematics::new(1.0).unwrap();
        let d = oracle_phase_shift(&spec, kin, WaveIndex::Order(0), &IntegrationConfig::for_problem(&spec, 1.0)).unwrap();
        assert!(d.abs() < 1e-8, "{d}");
    }

    #[test]
    fn well3d_s_wave_example() {
        let spec = PotentialSpec::new(Family::Well3D, -1.0, 1.0, 0.5);
        let kin = Kinematics::new(1.0).unwrap();
        let d = oracle_phase_shift(&spec, kin, WaveIndex::Order(0), &IntegrationConfig::for_problem(&spec, 1.0)).unwrap();
        let t = tan_delta_well3d(0, &ReducedParams::reduce(&spec, kin)).unwrap();
        assert!(phase_distance(d, delta_mod_pi(t)) < 1e-6, "{d} {}", delta_mod_pi(t));
    }

    #[test]
    fn shell_regularized_matches_delta() {
        let spec = PotentialSpec::new(Family::DoubleDelta1D, 2.0, 0.0, 0.3);
        let kin = Kinematics::new(1.0).unwrap();
        let cfg = IntegrationConfig::for_problem(&spec, 1.0);
        let (tp, tm) = tan_delta_1d(&ReducedParams::reduce(&spec, kin), Family::DoubleDelta1D).unwrap();
        for (index, t) in [(WaveIndex::Even, tp), (WaveIndex::Odd, tm)] {
            let d = oracle_shell_regularized(&spec, kin, index, 0.3 / 200.0, &cfg).unwrap();
            assert!(phase_distance(d, delta_mod_pi(t)) < 1e-5, "{index}: {d} vs {}", delta_mod_pi(t));
        }
    }

    #[test]
    fn config_is_enforced() {
        let spec = PotentialSpec::new(Family::Well3D, -1.0, 1.0, 0.5);
        let kin = Kinematics::new(1.0).unwrap();
        let short = IntegrationConfig { r_max: 5.0, step: 1e-3 };
        assert!(matches!(
            oracle_phase_shift(&spec, kin, WaveIndex::Order(0), &short),
            Err(OracleError::RangeTooShort { .. })
        ));
        let coarse = IntegrationConfig { r_max: 10.0, step: 0.1 };
        assert!(matches!(
            oracle_phase_shift(&spec, kin, WaveIndex::Order(0), &coarse),
            Err(OracleError::StepTooCoarse { .. })
        ));
        let cfg = IntegrationConfig::for_problem(&spec, 1.0);
        assert!(oracle_phase_shift(&spec, kin, WaveIndex::Even, &cfg).is_err());
    }
}
