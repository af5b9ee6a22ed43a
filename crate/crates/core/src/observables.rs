//! Amplitudes and cross sections built from a phase-shift table.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::model::Family;
use crate::phase_shifts::PhaseShiftTable;
use crate::special_fn::legendre_unchecked;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ObservableError {
    #[error("{family} table used where a {expected}D table is required")]
    WrongDimension { family: Family, expected: u8 },
    #[error("1D table is missing its parity pair")]
    MissingParity,
}

fn require_dim(table: &PhaseShiftTable, expected: u8) -> Result<(), ObservableError> {
    if table.family.dimension() == expected {
        Ok(())
    } else {
        Err(ObservableError::WrongDimension { family: table.family, expected })
    }
}

/// `(sin d, cos d)` for `d` in `(-pi/2, pi/2]` given `tan d`.
fn sin_cos_from_tan(t: f64) -> (f64, f64) {
    if t.is_infinite() {
        return (1.0, 0.0);
    }
    let h = 1.0_f64.hypot(t);
    (t / h, 1.0 / h)
}

/// `exp(2i d) - 1 = 2i sin(d) exp(i d)`.
pub fn partial_wave_factor(tan_delta: f64) -> Complex64 {
    let (s, c) = sin_cos_from_tan(tan_delta);
    Complex64::new(-2.0 * s * s, 2.0 * s * c)
}

/// `exp(2i d)`.
pub fn s_matrix_element(tan_delta: f64) -> Complex64 {
    partial_wave_factor(tan_delta) + 1.0
}

fn sin_sq(tan_delta: f64) -> f64 {
    let (s, _) = sin_cos_from_tan(tan_delta);
    s * s
}

/// `f(theta) = (1/2ik) sum_l (2l+1)(exp(2i d_l) - 1) P_l(cos theta)`.
#[derive(Clone, Debug, PartialEq)]
pub struct Amplitude3D {
    pub k: f64,
    /// `(2l+1)(exp(2i d_l) - 1)` for `l = 0..`.
    pub partial_terms: Vec<Complex64>,
}

impl Amplitude3D {
    pub fn from_table(table: &PhaseShiftTable) -> Result<Self, ObservableError> {
        require_dim(table, 3)?;
        let partial_terms = table
            .entries
            .iter()
            .enumerate()
            .map(|(l, e)| (2 * l + 1) as f64 * partial_wave_factor(e.tan_delta))
            .collect();
        Ok(Amplitude3D { k: table.k, partial_terms })
    }

    pub fn at(&self, theta: f64) -> Complex64 {
        let u = theta.cos();
        let sum: Complex64 = self
            .partial_terms
            .iter()
            .enumerate()
            .map(|(l, t)| t * legendre_unchecked(l, u))
            .sum();
        sum / Complex64::new(0.0, 2.0 * self.k)
    }
}

/// `f(theta) = -i/sqrt(2 pi k) sum_m (exp(2i d_|m|) - 1) exp(i m theta)`.
#[derive(Clone, Debug, PartialEq)]
pub struct Amplitude2D {
    pub k: f64,
    /// `exp(2i d_m) - 1` for `m = 0..`; negative `m` reuse these.
    pub partial_terms: Vec<Complex64>,
}

impl Amplitude2D {
    pub fn from_table(table: &PhaseShiftTable) -> Result<Self, ObservableError> {
        require_dim(table, 2)?;
        let partial_terms = table.entries.iter().map(|e| partial_wave_factor(e.tan_delta)).collect();
        Ok(Amplitude2D { k: table.k, partial_terms })
    }

    pub fn at(&self, theta: f64) -> Complex64 {
        let sum: Complex64 = self
            .partial_terms
            .iter()
            .enumerate()
            .map(|(m, t)| if m == 0 { *t } else { 2.0 * t * (m as f64 * theta).cos() })
            .sum();
        Complex64::new(0.0, -1.0) * sum / (2.0 * PI * self.k).sqrt()
    }
}

pub fn amplitude_3d(table: &PhaseShiftTable, theta: f64) -> Result<Complex64, ObservableError> {
    Ok(Amplitude3D::from_table(table)?.at(theta))
}

pub fn amplitude_2d(table: &PhaseShiftTable, theta: f64) -> Result<Complex64, ObservableError> {
    Ok(Amplitude2D::from_table(table)?.at(theta))
}

/// `|f(theta)|^2` in 3D.
pub fn differential_3d(table: &PhaseShiftTable, theta: f64) -> Result<f64, ObservableError> {
    Ok(amplitude_3d(table, theta)?.norm_sqr())
}

/// `|f(theta)|^2` in 2D.
pub fn differential_2d(table: &PhaseShiftTable, theta: f64) -> Result<f64, ObservableError> {
    Ok(amplitude_2d(table, theta)?.norm_sqr())
}

/// `(4 pi / k^2) sum_l (2l+1) sin^2 d_l`.
pub fn sigma_total_3d(table: &PhaseShiftTable) -> Result<f64, ObservableError> {
    require_dim(table, 3)?;
    let sum: f64 = table
        .entries
        .iter()
        .enumerate()
        .map(|(l, e)| (2 * l + 1) as f64 * sin_sq(e.tan_delta))
        .sum();
    Ok(4.0 * PI / (table.k * table.k) * sum)
}

/// `(4/k)(sin^2 d_0 + 2 sum_{m>=1} sin^2 d_m)`.
pub fn sigma_total_2d(table: &PhaseShiftTable) -> Result<f64, ObservableError> {
    require_dim(table, 2)?;
    let sum: f64 = table
        .entries
        .iter()
        .enumerate()
        .map(|(m, e)| if m == 0 { 1.0 } else { 2.0 } * sin_sq(e.tan_delta))
        .sum();
    Ok(4.0 / table.k * sum)
}

/// Reflection and transmission amplitudes on a line.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct OneDScattering {
    pub r: Complex64,
    pub t: Complex64,
}

impl OneDScattering {
    pub fn reflection(&self) -> f64 {
        self.r.norm_sqr()
    }

    pub fn transmission(&self) -> f64 {
        self.t.norm_sqr()
    }
}

/// `R = (exp(2i d+) - exp(2i d-))/2`, `T = (exp(2i d+) + exp(2i d-))/2`.
pub fn one_d_scattering(tan_plus: f64, tan_minus: f64) -> OneDScattering {
    let plus = s_matrix_element(tan_plus);
    let minus = s_matrix_element(tan_minus);
    OneDScattering { r: 0.5 * (plus - minus), t: 0.5 * (plus + minus) }
}

pub fn one_d_from_table(table: &PhaseShiftTable) -> Result<OneDScattering, ObservableError> {
    require_dim(table, 1)?;
    let (plus, minus) = table.parity_pair().ok_or(ObservableError::MissingParity)?;
    Ok(one_d_scattering(plus, minus))
}
