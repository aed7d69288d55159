//! The cross-order Wronskian `W_{nu,mu}(x) = J_nu(x) Y'_mu(x) - J'_nu(x) Y_mu(x)` and
//! the sign structure of neighbouring `Y` orders.
//!
//! From Bessel's equation, `(x W)' = (nu^2 - mu^2) J_nu(x) Y_mu(x) / x`, so the local
//! extrema of `x W` sit exactly at the zeros `j_{nu,s}` and `y_{mu,s}`. `x W` is
//! monotone between consecutive extrema and tends to `+inf` as `x -> 0+`, so `W` has a
//! positive zero if and only if it takes a negative value at one of these points.

use std::f64::consts::PI;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::special::{bessel_jy, Argument, Order};
use crate::zeros::{zeros_upto, ZeroIter, ZeroKind};

/// `W_{nu,mu}(x)`.
pub fn eval_w(nu: Order, mu: Order, x: Argument) -> Result<f64> {
    let a = bessel_jy(nu, x);
    let b = bessel_jy(mu, x);
    if !b.y_finite() {
        return Err(Error::OverflowNu {
            nu: mu.value(),
            x: x.value(),
        });
    }
    Ok(a.j * b.dy - a.dj * b.y)
}

/// Which family an extremal point comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ExtremumSource {
    /// A zero `j_{nu,s}`.
    JZero,
    /// A zero `y_{mu,s}`.
    YZero,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct WronskianSample {
    pub x: f64,
    pub w: f64,
    pub source: ExtremumSource,
    pub s: usize,
}

/// `W_{nu,mu}` at its extremal points, sorted by `x`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct WronskianProfile {
    pub nu: Order,
    pub mu: Order,
    pub samples: Vec<WronskianSample>,
    pub all_same_sign: bool,
    pub min_abs: f64,
}

fn sample_points(
    nu: Order,
    mu: Order,
    j: impl IntoIterator<Item = f64>,
    y: impl IntoIterator<Item = f64>,
) -> Result<Vec<WronskianSample>> {
    let tagged = j
        .into_iter()
        .enumerate()
        .map(|(i, x)| (x, ExtremumSource::JZero, i + 1))
        .chain(
            y.into_iter()
                .enumerate()
                .map(|(i, x)| (x, ExtremumSource::YZero, i + 1)),
        );
    let mut samples = tagged
        .map(|(x, source, s)| {
            Ok(WronskianSample {
                x,
                w: eval_w(nu, mu, Argument::new(x)?)?,
                source,
                s,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    samples.sort_by(|a, b| a.x.total_cmp(&b.x));
    Ok(samples)
}

fn distinct_orders(nu: Order, mu: Order) -> Result<()> {
    if nu.value() == mu.value() {
        return Err(Error::InvalidParameter(
            "orders must differ; W_{nu,nu} = 2/(pi x) never vanishes".into(),
        ));
    }
    Ok(())
}

/// Evaluates `W_{nu,mu}` at `j_{nu,s}` and `y_{mu,s}` for `s <= s_max`.
///
/// `all_same_sign` also accounts for the limit at `0+`, where `W` is positive.
pub fn profile_extrema(nu: Order, mu: Order, s_max: usize) -> Result<WronskianProfile> {
    distinct_orders(nu, mu)?;
    let j = zeros_upto(ZeroKind::J, nu, s_max)?;
    let y = zeros_upto(ZeroKind::Y, mu, s_max)?;
    let samples = sample_points(nu, mu, j.iter().map(|r| r.value), y.iter().map(|r| r.value))?;
    // the limit x -> 0+ is a positive extremum of x W
    let all_same_sign = samples.iter().all(|p| p.w > 0.0);
    let min_abs = samples
        .iter()
        .map(|p| p.w.abs())
        .fold(f64::INFINITY, f64::min);
    Ok(WronskianProfile {
        nu,
        mu,
        samples,
        all_same_sign,
        min_abs,
    })
}

fn zeros_below(kind: ZeroKind, nu: Order, x_max: f64) -> Result<Vec<f64>> {
    let mut out = Vec::new();
    for rec in ZeroIter::new(kind, nu) {
        let rec = rec?;
        if rec.value > x_max {
            break;
        }
        out.push(rec.value);
    }
    Ok(out)
}

/// Bisects `W` on `[lo, hi]`, given opposite signs at the ends.
fn bisect_w(nu: Order, mu: Order, mut lo: f64, mut hi: f64) -> Result<f64> {
    let f_lo = eval_w(nu, mu, Argument::new(lo)?)?;
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if hi - lo <= 1e-14 * mid.max(1.0) || mid <= lo || mid >= hi {
            break;
        }
        let f = eval_w(nu, mu, Argument::new(mid)?)?;
        if f == 0.0 {
            return Ok(mid);
        }
        if (f > 0.0) == (f_lo > 0.0) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// The smallest positive zero of `W_{nu,mu}` on `(0, x_max]`, if any.
///
/// Only the gaps between consecutive extremal points are searched, plus the
/// stretch between `0` and the first one, where `W` is positive.
pub fn has_positive_zero(nu: Order, mu: Order, x_max: f64) -> Result<Option<f64>> {
    distinct_orders(nu, mu)?;
    if !(x_max.is_finite() && x_max > 0.0) {
        return Err(Error::InvalidParameter(format!(
            "x_max must be positive, got {x_max}"
        )));
    }
    let samples = sample_points(
        nu,
        mu,
        zeros_below(ZeroKind::J, nu, x_max)?,
        zeros_below(ZeroKind::Y, mu, x_max)?,
    )?;
    let Some(first) = samples.first() else {
        return Ok(None);
    };
    if first.w <= 0.0 {
        if first.w == 0.0 {
            return Ok(Some(first.x));
        }
        // walk left until W is positive again
        let mut lo = first.x;
        for _ in 0..64 {
            lo *= 0.5;
            let w = eval_w(nu, mu, Argument::new(lo)?)?;
            if w > 0.0 {
                return bisect_w(nu, mu, lo, first.x).map(Some);
            }
        }
        return Err(Error::BracketNotFound {
            what: "Wronskian zero below the first extremum".into(),
            reached: lo,
        });
    }
    for pair in samples.windows(2) {
        let (a, b) = (pair[0], pair[1]);
        if b.w == 0.0 {
            return Ok(Some(b.x));
        }
        if (a.w > 0.0) != (b.w > 0.0) {
            return bisect_w(nu, mu, a.x, b.x).map(Some);
        }
    }
    Ok(None)
}

/// `n` Chebyshev points strictly inside `(a, b)`, ascending.
pub fn chebyshev_interior(a: f64, b: f64, n: usize) -> Vec<f64> {
    let (mid, half) = (0.5 * (a + b), 0.5 * (b - a));
    (1..=n)
        .rev()
        .map(|k| mid + half * ((2 * k - 1) as f64 * PI / (2 * n) as f64).cos())
        .collect()
}

/// Sign comparison of `Y_nu` and `Y_{nu+1}` on the two intervals around `y_{nu+1,s}`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SignIntervalReport {
    pub nu: Order,
    pub s: usize,
    /// `(y_{nu+1,s}, y_{nu,s+1})`, where the signs agree.
    pub same_sign_interval: (f64, f64),
    /// `(y_{nu,s}, y_{nu+1,s})`, where the signs differ.
    pub differ_interval: (f64, f64),
    pub same_sign_verdicts: Vec<bool>,
    pub differ_verdicts: Vec<bool>,
}

impl SignIntervalReport {
    pub fn ok(&self) -> bool {
        self.same_sign_verdicts
            .iter()
            .chain(&self.differ_verdicts)
            .all(|&v| v)
    }
}

fn y_signs(nu: Order, up: Order, x: f64) -> Result<(f64, f64)> {
    let arg = Argument::new(x)?;
    let (a, b) = (bessel_jy(nu, arg), bessel_jy(up, arg));
    if !(a.y.is_finite() && b.y.is_finite()) {
        return Err(Error::OverflowNu { nu: up.value(), x });
    }
    Ok((a.y.signum(), b.y.signum()))
}

/// Samples `Y_nu` and `Y_{nu+1}` at `n_samples` interior points of each interval.
pub fn sign_agreement(nu: Order, s: usize, n_samples: usize) -> Result<SignIntervalReport> {
    if n_samples < 3 {
        return Err(Error::InvalidParameter(format!(
            "need at least 3 samples per interval, got {n_samples}"
        )));
    }
    let up = nu.offset(1.0)?;
    let y_lo = zeros_upto(ZeroKind::Y, nu, s + 1)?;
    let y_up = zeros_upto(ZeroKind::Y, up, s)?;
    let same = (y_up[s - 1].value, y_lo[s].value);
    let differ = (y_lo[s - 1].value, y_up[s - 1].value);
    let verdicts = |(a, b): (f64, f64), want_same: bool| -> Result<Vec<bool>> {
        chebyshev_interior(a, b, n_samples)
            .into_iter()
            .map(|x| {
                let (p, q) = y_signs(nu, up, x)?;
                Ok(p != 0.0 && q != 0.0 && (p == q) == want_same)
            })
            .collect()
    };
    Ok(SignIntervalReport {
        nu,
        s,
        same_sign_interval: same,
        differ_interval: differ,
        same_sign_verdicts: verdicts(same, true)?,
        differ_verdicts: verdicts(differ, false)?,
    })
}

/// `|Y_{nu+1}(y'_{nu,s}) - (nu / y'_{nu,s}) Y_nu(y'_{nu,s})|`, which vanishes because
/// the left side equals `-Y'_nu` there. `Y_{nu+1}` is evaluated directly.
pub fn eq19_residual(nu: Order, s: usize) -> Result<f64> {
    let x = crate::zeros::zero(crate::zeros::ZeroId::new(ZeroKind::YPrime, nu, s)?)?.value;
    let arg = Argument::new(x)?;
    let y = bessel_jy(nu, arg).y;
    let y1 = bessel_jy(nu.offset(1.0)?, arg).y;
    if !(y.is_finite() && y1.is_finite()) {
        return Err(Error::OverflowNu { nu: nu.value(), x });
    }
    Ok((y1 - nu.value() / x * y).abs())
}

/// Contract bound for [`eq19_residual`].
pub fn eq19_tolerance(nu: Order, s: usize) -> Result<f64> {
    let x = crate::zeros::zero(crate::zeros::ZeroId::new(ZeroKind::YPrime, nu, s)?)?.value;
    Ok(1e-11 * bessel_jy(nu, Argument::new(x)?).y.abs().max(1.0))
}
