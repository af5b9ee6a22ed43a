//! Bessel-type special functions of integer order and Legendre polynomials.
//!
//! Below `SERIES_SWITCH` every function is evaluated from its ascending
//! series, which is free of cancellation as the argument goes to zero. Above
//! it the usual closed forms, recurrences and (for large arguments) Hankel
//! asymptotics take over.

use std::f64::consts::{FRAC_2_PI, FRAC_PI_4, LN_2, PI};

use thiserror::Error;

/// Euler-Mascheroni constant.
pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

/// Highest order accepted by any function in this module.
pub const MAX_ORDER: usize = 200;

const SERIES_SWITCH: f64 = 0.5;
const HANKEL_SWITCH: f64 = 25.0;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SpecialFnError {
    #[error("order {0} exceeds the cap of {MAX_ORDER}")]
    OrderAboveCap(usize),
    #[error("argument must be positive and finite, got {0}")]
    BadArgument(f64),
    #[error("Legendre argument {0} outside [-1, 1]")]
    OutsideUnitInterval(f64),
}

fn check(order: usize, x: f64) -> Result<(), SpecialFnError> {
    if order > MAX_ORDER {
        return Err(SpecialFnError::OrderAboveCap(order));
    }
    if !(x > 0.0 && x.is_finite()) {
        return Err(SpecialFnError::BadArgument(x));
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// Spherical Bessel functions
// ---------------------------------------------------------------------------

/// Spherical Bessel function of the first kind `j_l(x)`.
pub fn spherical_j(l: usize, x: f64) -> Result<f64, SpecialFnError> {
    check(l, x)?;
    Ok(sph_j(l, x))
}

/// Spherical Bessel function of the second kind `n_l(x)` (also written `y_l`).
pub fn spherical_n(l: usize, x: f64) -> Result<f64, SpecialFnError> {
    check(l, x)?;
    Ok(sph_n(l, x))
}

/// `d j_l / dx` from `j_l' = j_{l-1} - (l+1)/x j_l` (and `j_0' = -j_1`).
pub fn spherical_j_deriv(l: usize, x: f64) -> Result<f64, SpecialFnError> {
    check(l, x)?;
    Ok(if l == 0 {
        -sph_j(1, x)
    } else {
        sph_j(l - 1, x) - (l as f64 + 1.0) / x * sph_j(l, x)
    })
}

/// `d n_l / dx`, same identities as for `j_l`.
pub fn spherical_n_deriv(l: usize, x: f64) -> Result<f64, SpecialFnError> {
    check(l, x)?;
    Ok(if l == 0 {
        -sph_n(1, x)
    } else {
        sph_n(l - 1, x) - (l as f64 + 1.0) / x * sph_n(l, x)
    })
}

pub(crate) fn sph_j(l: usize, x: f64) -> f64 {
    if x < SERIES_SWITCH {
        return sph_j_series(l, x);
    }
    if (l as f64) <= x && l <= closed_form_limit(x) {
        return sph_closed_form(l, x).0;
    }
    let j0 = x.sin() / x;
    let j1 = x.sin() / (x * x) - x.cos() / x;
    sph_j_miller(l, x, j0, j1)
}

/// `(j_l, n_l)` from the terminating expansion of `h_l^(1)`:
/// `h_l(x) = e^{i(x-(l+1)pi/2)}/x * sum_k i^k (l+k)!/(k!(l-k)!(2x)^k)`.
/// Terms grow like `(l^2/2x)^k/k!`, so it is only used up to
/// `closed_form_limit(x)`.
fn closed_form_limit(x: f64) -> usize {
    (8.0 * x).sqrt().floor() as usize
}

fn sph_closed_form(l: usize, x: f64) -> (f64, f64) {
    let mut a = 1.0;
    let mut p = 1.0;
    let mut q = 0.0;
    for k in 0..l {
        a *= ((l + k + 1) * (l - k)) as f64 / (2 * (k + 1)) as f64 / x;
        match (k + 1) % 4 {
            0 => p += a,
            1 => q += a,
            2 => p -= a,
            _ => q -= a,
        }
    }
    let (s, c) = x.sin_cos();
    // cos and sin of x - (l+1) pi/2 by exact quadrant shift
    let (ct, st) = match (l + 1) % 4 {
        0 => (c, s),
        1 => (s, -c),
        2 => (-c, -s),
        _ => (-s, c),
    };
    ((p * ct - q * st) / x, (p * st + q * ct) / x)
}

/// Downward recurrence normalised on whichever of `j_0`, `j_1` is larger.
fn sph_j_miller(l: usize, x: f64, j0: f64, j1: f64) -> f64 {
    let top = l.max(x.ceil() as usize);
    let start = top + 30 + (50.0 * top as f64).sqrt() as usize;
    let mut vals = vec![0.0; start + 2];
    vals[start] = 1e-300;
    for n in (1..=start).rev() {
        vals[n - 1] = (2 * n + 1) as f64 / x * vals[n] - vals[n + 1];
        if vals[n - 1].abs() > 1e250 {
            for v in vals.iter_mut().skip(n - 1) {
                *v *= 1e-250;
            }
        }
    }
    if j0.abs() >= j1.abs() {
        vals[l] * (j0 / vals[0])
    } else {
        vals[l] * (j1 / vals[1])
    }
}

fn sph_j_series(l: usize, x: f64) -> f64 {
    // x^l / (2l+1)!! * sum_k (-x^2/2)^k / (k! (2l+3)(2l+5)...(2l+2k+1))
    let mut pref = 1.0;
    for i in 1..=l {
        pref *= x / (2 * i + 1) as f64;
    }
    let z = -0.5 * x * x;
    let mut term = 1.0;
    let mut sum = 1.0;
    for k in 1..60 {
        term *= z / (k as f64 * (2 * l + 2 * k + 1) as f64);
        sum += term;
        if term.abs() < 1e-17 * sum.abs() {
            break;
        }
    }
    pref * sum
}

pub(crate) fn sph_n(l: usize, x: f64) -> f64 {
    if x < SERIES_SWITCH {
        return sph_n_series(l, x);
    }
    let start = closed_form_limit(x);
    if l <= start {
        return sph_closed_form(l, x).1;
    }
    // upward recurrence is stable for the dominant solution
    let (mut prev, mut cur) = (sph_closed_form(start - 1, x).1, sph_closed_form(start, x).1);
    for n in start..l {
        let next = (2 * n + 1) as f64 / x * cur - prev;
        prev = cur;
        cur = next;
        if !cur.is_finite() {
            break;
        }
    }
    cur
}

fn sph_n_series(l: usize, x: f64) -> f64 {
    // -(2l-1)!!/x^{l+1} * sum_k (-x^2/2)^k / (k! prod_{j=1..k} (2j-1-2l))
    let mut pref = -1.0 / x;
    for i in 1..=l {
        pref *= (2 * i - 1) as f64 / x;
    }
    let z = -0.5 * x * x;
    let mut term = 1.0;
    let mut sum = 1.0;
    for k in 1..60 {
        term *= z / (k as f64 * (2 * k as i64 - 1 - 2 * l as i64) as f64);
        sum += term;
        if term.abs() < 1e-17 * sum.abs() {
            break;
        }
    }
    pref * sum
}

/// `sin(x)/x - 1`, accurate for small `x`.
pub fn sinc_minus_one(x: f64) -> f64 {
    if x.abs() < 0.05 {
        // -x^2/3! + x^4/5! - ...
        let z = -x * x;
        let mut term = 1.0;
        let mut sum = 0.0;
        for k in 1..12 {
            term *= z / ((2 * k) * (2 * k + 1)) as f64;
            sum += term;
        }
        sum
    } else {
        x.sin() / x - 1.0
    }
}

// ---------------------------------------------------------------------------
// Cylindrical Bessel functions
// ---------------------------------------------------------------------------

/// Bessel function of the first kind `J_m(x)`.
pub fn bessel_j(m: usize, x: f64) -> Result<f64, SpecialFnError> {
    check(m, x)?;
    Ok(cyl_j(m, x))
}

/// Bessel function of the second kind `N_m(x)` (also written `Y_m`).
pub fn bessel_n(m: usize, x: f64) -> Result<f64, SpecialFnError> {
    check(m, x)?;
    Ok(cyl_n(m, x))
}

/// `J_m'(x) = J_{m-1}(x) - m/x J_m(x)`, with `J_0' = -J_1`.
pub fn bessel_j_deriv(m: usize, x: f64) -> Result<f64, SpecialFnError> {
    check(m, x)?;
    Ok(if m == 0 {
        -cyl_j(1, x)
    } else {
        cyl_j(m - 1, x) - m as f64 / x * cyl_j(m, x)
    })
}

/// `N_m'(x)`, same identity as for `J_m`.
pub fn bessel_n_deriv(m: usize, x: f64) -> Result<f64, SpecialFnError> {
    check(m, x)?;
    Ok(if m == 0 {
        -cyl_n(1, x)
    } else {
        cyl_n(m - 1, x) - m as f64 / x * cyl_n(m, x)
    })
}

/// Regular part of `N_0`: the `S(x)` in
/// `N_0(x) = (2/pi) [ (ln(x/2) + gamma) J_0(x) + S(x) ]`.
///
/// Exposed so that callers can cancel the logarithm analytically.
pub fn bessel_n0_regular_part(x: f64) -> Result<f64, SpecialFnError> {
    check(0, x)?;
    if x < SERIES_SWITCH {
        Ok(n0_remainder_series(x))
    } else {
        Ok(0.5 * PI * cyl_n(0, x) - ((0.5 * x).ln() + EULER_GAMMA) * cyl_j(0, x))
    }
}

/// `1 - J_0(x)` without cancellation at small `x`.
pub fn one_minus_bessel_j0(x: f64) -> Result<f64, SpecialFnError> {
    check(0, x)?;
    if x < SERIES_SWITCH {
        let z = -0.25 * x * x;
        let mut term = 1.0;
        let mut sum = 0.0;
        for k in 1..40 {
            term *= z / (k * k) as f64;
            sum += term;
            if term.abs() < 1e-17 * sum.abs() {
                break;
            }
        }
        Ok(-sum)
    } else {
        Ok(1.0 - cyl_j(0, x))
    }
}

fn n0_remainder_series(x: f64) -> f64 {
    // sum_{k>=1} (-1)^{k+1} H_k (x^2/4)^k / (k!)^2
    let z = 0.25 * x * x;
    let mut power = 1.0;
    let mut harmonic = 0.0;
    let mut sum = 0.0;
    for k in 1..40 {
        power *= -z / (k * k) as f64;
        harmonic += 1.0 / k as f64;
        let term = -power * harmonic;
        sum += term;
        if term.abs() < 1e-17 * sum.abs() {
            break;
        }
    }
    sum
}

pub(crate) fn cyl_j(m: usize, x: f64) -> f64 {
    if x < SERIES_SWITCH {
        return cyl_j_series(m, x);
    }
    if x >= HANKEL_SWITCH {
        let (j0, _) = hankel(0, x);
        let (j1, _) = hankel(1, x);
        if m == 0 {
            return j0;
        }
        if (m as f64) <= x {
            let (mut prev, mut cur) = (j0, j1);
            for n in 1..m {
                let next = 2.0 * n as f64 / x * cur - prev;
                prev = cur;
                cur = next;
            }
            return cur;
        }
        let seq = miller_j(m, x);
        let (anchor, idx) = if j0.abs() >= j1.abs() { (j0, 0) } else { (j1, 1) };
        return seq[m] * anchor / seq[idx];
    }
    let seq = miller_j(m, x);
    seq[m]
}

/// Downward recurrence for `J_0..=J_top`, normalised with
/// `J_0 + 2 sum J_{2k} = 1`. Returns at least `m + 1` values and enough
/// higher orders for the Neumann series of `N_0`, `N_1`.
fn miller_j(m: usize, x: f64) -> Vec<f64> {
    let top = m.max(x.ceil() as usize);
    let mut start = top + 30 + (60.0 * top as f64).sqrt() as usize;
    if start % 2 == 1 {
        start += 1;
    }
    let mut vals = vec![0.0; start + 2];
    vals[start] = 1e-300;
    for n in (1..=start).rev() {
        vals[n - 1] = 2.0 * n as f64 / x * vals[n] - vals[n + 1];
        if vals[n - 1].abs() > 1e250 {
            for v in vals.iter_mut().skip(n - 1) {
                *v *= 1e-250;
            }
        }
    }
    let mut norm = vals[0];
    for k in (2..=start).step_by(2) {
        norm += 2.0 * vals[k];
    }
    for v in vals.iter_mut() {
        *v /= norm;
    }
    vals
}

fn cyl_j_series(m: usize, x: f64) -> f64 {
    let mut pref = 1.0;
    for i in 1..=m {
        pref *= 0.5 * x / i as f64;
    }
    let z = -0.25 * x * x;
    let mut term = 1.0;
    let mut sum = 1.0;
    for k in 1..60 {
        term *= z / (k as f64 * (m + k) as f64);
        sum += term;
        if term.abs() < 1e-17 * sum.abs() {
            break;
        }
    }
    pref * sum
}

pub(crate) fn cyl_n(m: usize, x: f64) -> f64 {
    let (n0, n1) = if x < SERIES_SWITCH {
        let j0 = cyl_j_series(0, x);
        let j1 = cyl_j_series(1, x);
        let log_part = (0.5 * x).ln() + EULER_GAMMA;
        let n0 = FRAC_2_PI * (log_part * j0 + n0_remainder_series(x));
        // -(1/pi)(x/2) sum_k (H_k + H_{k+1}) (-x^2/4)^k / (k!(k+1)!)
        let z = -0.25 * x * x;
        let mut power = 1.0;
        let mut h = 0.0;
        let mut sum = 0.0;
        for k in 0..40 {
            if k > 0 {
                power *= z / (k * (k + 1)) as f64;
                h += 1.0 / k as f64;
            }
            let term = power * (2.0 * h + 1.0 / (k + 1) as f64);
            sum += term;
            if k > 0 && term.abs() < 1e-17 * sum.abs() {
                break;
            }
        }
        let n1 = -FRAC_2_PI / x + FRAC_2_PI * log_part * j1 - 0.5 * x / PI * sum;
        (n0, n1)
    } else if x >= HANKEL_SWITCH {
        (hankel(0, x).1, hankel(1, x).1)
    } else {
        neumann_series(x)
    };
    if m == 0 {
        return n0;
    }
    let (mut prev, mut cur) = (n0, n1);
    for n in 1..m {
        let next = 2.0 * n as f64 / x * cur - prev;
        prev = cur;
        cur = next;
        if !cur.is_finite() {
            break;
        }
    }
    cur
}

/// `N_0`, `N_1` from the Neumann expansions in even/odd `J_k`.
fn neumann_series(x: f64) -> (f64, f64) {
    let js = miller_j(2, x);
    let log_part = (0.5 * x).ln() + EULER_GAMMA;
    let mut s0 = 0.0;
    let mut s1 = 0.0;
    let mut k = 1;
    while 2 * k + 1 < js.len() {
        let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
        s0 += sign * js[2 * k] / k as f64;
        s1 += sign * (js[2 * k - 1] - js[2 * k + 1]) / k as f64;
        k += 1;
    }
    let n0 = FRAC_2_PI * (log_part * js[0] - 2.0 * s0);
    let n1 = FRAC_2_PI * (log_part * js[1] - js[0] / x + s1);
    (n0, n1)
}

/// Hankel asymptotic expansion for orders 0 and 1, returning `(J, N)`.
fn hankel(order: u32, x: f64) -> (f64, f64) {
    let mu = 4.0 * (order * order) as f64;
    let mut p = 1.0;
    let mut q = 0.0;
    let mut a = 1.0;
    let mut last = f64::INFINITY;
    for k in 1..200 {
        let odd = (2 * k - 1) as f64;
        a *= (mu - odd * odd) / (k as f64 * 8.0 * x);
        if a.abs() > last || a.abs() < 1e-18 {
            break;
        }
        last = a.abs();
        // a_k / x^k, with signs (-1)^{k/2} for even and (-1)^{(k-1)/2} for odd k
        match k % 4 {
            0 => p += a,
            1 => q += a,
            2 => p -= a,
            _ => q -= a,
        }
    }
    let chi = x - (0.5 * order as f64 + 0.5) * PI + FRAC_PI_4;
    let scale = (FRAC_2_PI / x).sqrt();
    let (s, c) = chi.sin_cos();
    (scale * (p * c - q * s), scale * (p * s + q * c))
}

// ---------------------------------------------------------------------------
// Legendre polynomials
// ---------------------------------------------------------------------------

/// Legendre polynomial `P_l(u)` by Bonnet's recurrence.
pub fn legendre_p(l: usize, u: f64) -> Result<f64, SpecialFnError> {
    if !(-1.0..=1.0).contains(&u) {
        return Err(SpecialFnError::OutsideUnitInterval(u));
    }
    if l > MAX_ORDER {
        return Err(SpecialFnError::OrderAboveCap(l));
    }
    Ok(legendre_unchecked(l, u))
}

pub(crate) fn legendre_unchecked(l: usize, u: f64) -> f64 {
    let (mut prev, mut cur) = (1.0, u);
    if l == 0 {
        return prev;
    }
    for n in 1..l {
        let n = n as f64;
        let next = ((2.0 * n + 1.0) * u * cur - n * prev) / (n + 1.0);
        prev = cur;
        cur = next;
    }
    cur
}

/// `ln(x/2) + gamma`, the logarithm that `N_0` carries at small argument.
pub(crate) fn log_half_plus_gamma(ln_x: f64) -> f64 {
    ln_x - LN_2 + EULER_GAMMA
}
