//! Potential families, kinematics and the reduced dimensionless parameters
//! every phase-shift formula consumes.
//!
//! Units are natural, `hbar = mu = 1`, so `E = k^2/2` and `v = k`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ModelError {
    #[error("{0} must be finite")]
    NonFinite(&'static str),
    #[error("range a must be positive, got {0}")]
    NonPositiveRange(f64),
    #[error("wavenumber k must be positive, got {0}")]
    NonPositiveWavenumber(f64),
    #[error("{0} requires the log scale a0")]
    MissingLogScale(Family),
    #[error("log scale a0 = {a0} must exceed a = {a}")]
    LogScaleTooSmall { a: f64, a0: f64 },
    #[error("square wells need omega < 0, got {0}")]
    WellNotAttractive(f64),
    #[error("unknown family '{0}'")]
    UnknownFamily(String),
}

/// The six potential families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Shell3D,
    Well3D,
    Ring2D,
    Well2D,
    DoubleDelta1D,
    Well1D,
}

impl Family {
    pub const ALL: [Family; 6] = [
        Family::Shell3D,
        Family::Well3D,
        Family::Ring2D,
        Family::Well2D,
        Family::DoubleDelta1D,
        Family::Well1D,
    ];

    pub fn dimension(self) -> u8 {
        match self {
            Family::Shell3D | Family::Well3D => 3,
            Family::Ring2D | Family::Well2D => 2,
            Family::DoubleDelta1D | Family::Well1D => 1,
        }
    }

    pub fn is_well(self) -> bool {
        matches!(self, Family::Well3D | Family::Well2D | Family::Well1D)
    }

    /// Ring2D and Well2D carry the `[-ln(a/a0)]^beta` factor.
    pub fn has_log_factor(self) -> bool {
        self.dimension() == 2
    }

    pub fn name(self) -> &'static str {
        match self {
            Family::Shell3D => "shell3d",
            Family::Well3D => "well3d",
            Family::Ring2D => "ring2d",
            Family::Well2D => "well2d",
            Family::DoubleDelta1D => "doubledelta1d",
            Family::Well1D => "well1d",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = ModelError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Family::ALL
            .into_iter()
            .find(|f| f.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| ModelError::UnknownFamily(s.to_string()))
    }
}

/// One member of a potential family.
///
/// `beta` and `a0` only matter for the two-dimensional families.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct PotentialSpec {
    pub family: Family,
    pub omega: f64,
    pub alpha: f64,
    #[serde(default)]
    pub beta: f64,
    pub a: f64,
    #[serde(default)]
    pub a0: Option<f64>,
}

impl PotentialSpec {
    pub fn new(family: Family, omega: f64, alpha: f64, a: f64) -> Self {
        PotentialSpec { family, omega, alpha, beta: 0.0, a, a0: None }
    }

    pub fn with_log_scale(mut self, beta: f64, a0: f64) -> Self {
        self.beta = beta;
        self.a0 = Some(a0);
        self
    }

    pub fn with_range(mut self, a: f64) -> Self {
        self.a = a;
        self
    }

    pub fn validate(&self) -> Result<(), ModelError> {
        for (name, v) in [("omega", self.omega), ("alpha", self.alpha), ("beta", self.beta)] {
            if !v.is_finite() {
                return Err(ModelError::NonFinite(name));
            }
        }
        if !(self.a > 0.0 && self.a.is_finite()) {
            return Err(ModelError::NonPositiveRange(self.a));
        }
        if self.family.has_log_factor() {
            let a0 = self.a0.ok_or(ModelError::MissingLogScale(self.family))?;
            if !a0.is_finite() {
                return Err(ModelError::NonFinite("a0"));
            }
            if a0 <= self.a {
                return Err(ModelError::LogScaleTooSmall { a: self.a, a0 });
            }
        }
        if self.family.is_well() && self.omega >= 0.0 {
            return Err(ModelError::WellNotAttractive(self.omega));
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Kinematics {
    pub k: f64,
}

impl Kinematics {
    pub fn new(k: f64) -> Result<Self, ModelError> {
        if k > 0.0 && k.is_finite() {
            Ok(Kinematics { k })
        } else {
            Err(ModelError::NonPositiveWavenumber(k))
        }
    }

    pub fn energy(&self) -> f64 {
        0.5 * self.k * self.k
    }

    pub fn velocity(&self) -> f64 {
        self.k
    }
}

/// Interior wavenumber of a square well in units of `1/a`.
///
/// The radicand `xi^2 - c b xi^(1-alpha) L^(-beta)` is kept in logarithmic
/// form so that it survives arguments where `xi` itself underflows.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Eta {
    /// `|eta|`; may be 0 or +inf when the radicand under/overflows.
    pub magnitude: f64,
    /// Set when the radicand is negative.
    pub imaginary: bool,
    /// `ln |radicand|`.
    pub ln_sq: f64,
    /// `eta^2 - xi^2`, computed without forming the difference.
    pub excess: f64,
}

/// Dimensionless parameters of one (potential, k) pair.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ReducedParams {
    pub family: Family,
    pub alpha: f64,
    pub beta: f64,
    /// `k a`; underflows to 0 for very deep `ln_xi`.
    pub xi: f64,
    pub ln_xi: f64,
    /// `k a0`, two-dimensional families only.
    pub xi0: Option<f64>,
    /// `omega k^(alpha-1)`.
    pub b: f64,
    pub eta: Option<Eta>,
}

impl ReducedParams {
    /// Parameters at `xi = k a` with `a` taken from the spec.
    pub fn reduce(spec: &PotentialSpec, kin: Kinematics) -> ReducedParams {
        let xi = kin.k * spec.a;
        Self::build(spec, kin.k, xi, xi.ln())
    }

    /// Parameters at an arbitrary `ln xi`, leaving `a0` and `k` fixed. This is
    /// how limit sequences walk `a -> 0`.
    pub fn at_log_xi(spec: &PotentialSpec, k: f64, ln_xi: f64) -> ReducedParams {
        Self::build(spec, k, ln_xi.exp(), ln_xi)
    }

    fn build(spec: &PotentialSpec, k: f64, xi: f64, ln_xi: f64) -> ReducedParams {
        let b = spec.omega * k.powf(spec.alpha - 1.0);
        let xi0 = spec.a0.filter(|_| spec.family.has_log_factor()).map(|a0| k * a0);
        let mut rp = ReducedParams {
            family: spec.family,
            alpha: spec.alpha,
            beta: if spec.family.has_log_factor() { spec.beta } else { 0.0 },
            xi,
            ln_xi,
            xi0,
            b,
            eta: None,
        };
        rp.eta = match spec.family {
            Family::Well3D => Some(rp.compute_eta(3.0)),
            Family::Well2D => Some(rp.compute_eta(2.0)),
            Family::Well1D => Some(rp.compute_eta(1.0)),
            _ => None,
        };
        rp
    }

    /// `L = -ln(xi/xi0)`, the positive logarithm of the 2D families.
    pub fn log_factor(&self) -> Option<f64> {
        self.xi0.map(|xi0| xi0.ln() - self.ln_xi)
    }

    /// `xi^(alpha-1)` evaluated through the logarithm.
    pub fn xi_pow_alpha_minus_one(&self) -> f64 {
        if self.alpha == 1.0 {
            1.0
        } else {
            ((self.alpha - 1.0) * self.ln_xi).exp()
        }
    }

    fn compute_eta(&self, c: f64) -> Eta {
        let ln_xi_sq = 2.0 * self.ln_xi;
        if self.b == 0.0 {
            return Eta { magnitude: self.xi, imaginary: false, ln_sq: ln_xi_sq, excess: 0.0 };
        }
        let log_factor = self.log_factor();
        let ln_log = match log_factor {
            Some(l) => self.beta * l.ln(),
            None => 0.0,
        };
        // |c b| xi^(1-alpha) L^(-beta); the direct product keeps full relative
        // precision, the log form (off by eps * |ln|) only covers over/underflow
        let ln_excess = (c * self.b.abs()).ln() + (1.0 - self.alpha) * self.ln_xi - ln_log;
        let direct = c * self.b.abs() / self.xi_pow_alpha_minus_one() / log_factor.map_or(1.0, |l| l.powf(self.beta));
        let magnitude = if direct.is_normal() { direct } else { ln_excess.exp() };
        let excess_sign = -self.b.signum();
        let excess = excess_sign * magnitude;
        let radicand = self.xi * self.xi + excess;
        if radicand.is_normal() || excess_sign < 0.0 {
            return Eta {
                magnitude: radicand.abs().sqrt(),
                imaginary: radicand < 0.0,
                ln_sq: radicand.abs().ln(),
                excess,
            };
        }
        let (hi, lo) = if ln_xi_sq > ln_excess { (ln_xi_sq, ln_excess) } else { (ln_excess, ln_xi_sq) };
        let ln_sq = hi + (lo - hi).exp().ln_1p();
        Eta { magnitude: (0.5 * ln_sq).exp(), imaginary: false, ln_sq, excess }
    }
}

/// Amplitudes of a zero-energy solution on either side of the matching point.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct WavefunctionPieces {
    pub interior_amplitude: f64,
    pub exterior_amplitude: f64,
    pub parity: Option<Parity>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}
