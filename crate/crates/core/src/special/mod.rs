//! Bessel functions of real order `nu >= 0` on the positive real axis.
//!
//! Three regimes are used:
//!
//! * `x < 2`: ascending series for `J`, Temme's series for `Y` at the reduced order
//!   `mu = nu - round(nu)` followed by upward recurrence.
//! * `2 <= x < 30 + (nu+1)^2/2`: CF1 for `J'/J`, downward recurrence to `mu`, CF2 for
//!   the Hankel log-derivative, normalisation by the Wronskian and upward recurrence for `Y`.
//! * larger `x`: Hankel asymptotic expansions.
//!
//! Everything is a pure function of `(nu, x)`.

mod hankel;
mod series;
mod steed;

use std::f64::consts::PI;

use serde::Serialize;

use crate::error::{Error, Result};

pub(crate) const EPS: f64 = 1e-16;
pub(crate) const FPMIN: f64 = 1e-300;

/// Largest order accepted from callers.
pub const NU_MAX: f64 = 600.0;

/// Rescaling threshold for unnormalised downward recurrence.
const RESCALE_BIG: f64 = 1e200;

/// A validated Bessel order, `0 <= nu <= NU_MAX`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Serialize)]
#[serde(transparent)]
pub struct Order(f64);

impl Order {
    pub fn new(nu: f64) -> Result<Self> {
        if !nu.is_finite() || nu < 0.0 {
            return Err(Error::DomainNu(nu));
        }
        if nu > NU_MAX {
            return Err(Error::OverflowNu { nu, x: f64::NAN });
        }
        Ok(Order(nu))
    }

    /// `nu + eps` for an increment `0 < eps`, allowing the result to exceed [`NU_MAX`]
    /// by at most one so that `(nu, nu + eps)` comparisons work at the top of the range.
    pub fn offset(self, eps: f64) -> Result<Self> {
        if !eps.is_finite() || eps < 0.0 {
            return Err(Error::InvalidParameter(format!(
                "order increment must be non-negative, got {eps}"
            )));
        }
        let nu = self.0 + eps;
        if nu > NU_MAX + 1.0 {
            return Err(Error::OverflowNu { nu, x: f64::NAN });
        }
        Ok(Order(nu))
    }

    pub fn value(self) -> f64 {
        self.0
    }
}

impl TryFrom<f64> for Order {
    type Error = Error;

    fn try_from(nu: f64) -> Result<Self> {
        Order::new(nu)
    }
}

/// A validated argument, finite and strictly positive.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Argument(f64);

impl Argument {
    pub fn new(x: f64) -> Result<Self> {
        if x.is_finite() && x > 0.0 {
            Ok(Argument(x))
        } else {
            Err(Error::DomainX(x))
        }
    }

    pub fn value(self) -> f64 {
        self.0
    }
}

impl TryFrom<f64> for Argument {
    type Error = Error;

    fn try_from(x: f64) -> Result<Self> {
        Argument::new(x)
    }
}

/// Mixing angle of the cylinder function `J cos(alpha) - Y sin(alpha)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CylinderMix {
    pub alpha: f64,
}

impl CylinderMix {
    pub fn new(alpha: f64) -> Result<Self> {
        if alpha.is_finite() {
            Ok(CylinderMix { alpha })
        } else {
            Err(Error::InvalidParameter(format!(
                "mixing angle must be finite, got {alpha}"
            )))
        }
    }
}

/// A function value with an advisory absolute error estimate.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EvalResult {
    pub value: f64,
    pub est_abs_error: f64,
}

/// `J_nu, J'_nu, Y_nu, Y'_nu` at one point.
///
/// `y` and `dy` are not finite when `Y_nu(x)` overflows; `j` then usually underflows to zero.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BesselJY {
    pub nu: f64,
    pub x: f64,
    pub j: f64,
    pub dj: f64,
    pub y: f64,
    pub dy: f64,
    /// Absolute error scale shared by all four values.
    pub err: f64,
}

impl BesselJY {
    pub fn y_finite(&self) -> bool {
        self.y.is_finite() && self.dy.is_finite()
    }

    /// `J''_nu(x)` from the differential equation.
    pub fn d2j(&self) -> f64 {
        second_derivative(self.nu, self.x, self.j, self.dj)
    }

    /// `Y''_nu(x)` from the differential equation.
    pub fn d2y(&self) -> f64 {
        second_derivative(self.nu, self.x, self.y, self.dy)
    }
}

fn second_derivative(nu: f64, x: f64, c: f64, dc: f64) -> f64 {
    -dc / x - (1.0 - (nu / x) * (nu / x)) * c
}

/// Evaluates all four functions at once. Callers must pass `nu >= 0` and `x > 0`.
pub(crate) fn jy_raw(nu: f64, x: f64) -> BesselJY {
    debug_assert!(nu >= 0.0 && x > 0.0);
    if x < 2.0 {
        small_x(nu, x)
    } else if x < 30.0 + 0.5 * (nu + 1.0) * (nu + 1.0) {
        intermediate_x(nu, x)
    } else {
        large_x(nu, x)
    }
}

/// All four functions for validated inputs.
pub fn bessel_jy(nu: Order, x: Argument) -> BesselJY {
    jy_raw(nu.value(), x.value())
}

fn small_x(nu: f64, x: f64) -> BesselJY {
    let (j, j1, jscale) = series::j_ascending(nu, x);
    let n = (nu + 0.5).floor();
    let mu = nu - n;
    let (ymu, ymu1) = series::temme_y(mu, x);
    let (y, y1) = recur_y_up(mu, x, n as usize, ymu, ymu1);
    let modulus = (j * j + y * y).sqrt();
    let steps = n + 1.0;
    BesselJY {
        nu,
        x,
        j,
        dj: nu / x * j - j1,
        y,
        dy: nu / x * y - y1,
        err: (10.0 + steps.sqrt()) * f64::EPSILON * modulus.max(jscale),
    }
}

fn intermediate_x(nu: f64, x: f64) -> BesselJY {
    let n = (nu + 0.5).floor();
    let nl = n as usize;
    let mu = nu - n;
    let xi = 1.0 / x;
    let w = 2.0 * xi / PI;

    let cf = steed::cf1(nu, x);
    let f = cf.ratio;
    let start = cf.sign;
    let mut rjl = start;
    let mut rjpl = f * rjl;
    let mut rescales = 0u32;
    let mut fact = nu * xi;
    for _ in 0..nl {
        let rjtemp = fact * rjl + rjpl;
        fact -= xi;
        rjpl = fact * rjtemp - rjl;
        rjl = rjtemp;
        if rjl.abs() > RESCALE_BIG {
            rjl /= RESCALE_BIG;
            rjpl /= RESCALE_BIG;
            rescales += 1;
        }
    }
    if rjl == 0.0 {
        rjl = EPS;
    }
    let f_mu = rjpl / rjl;

    let (p, q) = steed::cf2(mu, x);
    let gam = (p - f_mu) / q;
    let jmu = (w / ((p - f_mu) * gam + q)).sqrt().copysign(rjl);
    let ymu = jmu * gam;
    let dymu = q * jmu + p * ymu;
    let ymu1 = mu * xi * ymu - dymu;

    let mut j = start * (jmu / rjl);
    for _ in 0..rescales {
        j /= RESCALE_BIG;
    }
    let (y, y1) = recur_y_up(mu, x, nl, ymu, ymu1);
    let modulus = (j * j + y * y).sqrt();
    let steps = (nl as f64) + (cf.iterations as f64).sqrt();
    BesselJY {
        nu,
        x,
        j,
        dj: f * j,
        y,
        dy: nu * xi * y - y1,
        err: (10.0 + steps.sqrt()) * f64::EPSILON * modulus,
    }
}

fn large_x(nu: f64, x: f64) -> BesselJY {
    let ([j, j1, y, y1], trunc) = hankel::jy_pair(nu, x);
    let modulus = (j * j + y * y).sqrt();
    BesselJY {
        nu,
        x,
        j,
        dj: nu / x * j - j1,
        y,
        dy: nu / x * y - y1,
        err: 10.0 * f64::EPSILON * modulus + trunc,
    }
}

/// Upward recurrence for `Y` from `(Y_mu, Y_{mu+1})` over `steps` orders.
/// Returns `(Y_{mu+steps}, Y_{mu+steps+1})`; overflow yields non-finite values.
fn recur_y_up(mu: f64, x: f64, steps: usize, mut y0: f64, mut y1: f64) -> (f64, f64) {
    let xi2 = 2.0 / x;
    for i in 1..=steps {
        let next = (mu + i as f64) * xi2 * y1 - y0;
        y0 = y1;
        y1 = next;
        if !y1.is_finite() {
            // Y keeps growing with the order once it has overflowed
            let at_target = if i == steps { y0 } else { f64::NEG_INFINITY };
            return (at_target, f64::NEG_INFINITY);
        }
    }
    (y0, y1)
}

fn y_or_overflow(v: f64, nu: f64, x: f64) -> Result<f64> {
    if v.is_finite() {
        Ok(v)
    } else {
        Err(Error::OverflowNu { nu, x })
    }
}

pub fn eval_j(nu: Order, x: Argument) -> Result<EvalResult> {
    let r = bessel_jy(nu, x);
    Ok(EvalResult {
        value: r.j,
        est_abs_error: r.err,
    })
}

pub fn eval_y(nu: Order, x: Argument) -> Result<EvalResult> {
    let r = bessel_jy(nu, x);
    Ok(EvalResult {
        value: y_or_overflow(r.y, r.nu, r.x)?,
        est_abs_error: r.err,
    })
}

/// `J'_nu(x) = -J_{nu+1}(x) + (nu/x) J_nu(x)`.
pub fn eval_dj(nu: Order, x: Argument) -> Result<EvalResult> {
    let r = bessel_jy(nu, x);
    Ok(EvalResult {
        value: r.dj,
        est_abs_error: r.err * (1.0 + nu.value() / x.value()),
    })
}

/// `Y'_nu(x) = -Y_{nu+1}(x) + (nu/x) Y_nu(x)`.
pub fn eval_dy(nu: Order, x: Argument) -> Result<EvalResult> {
    let r = bessel_jy(nu, x);
    Ok(EvalResult {
        value: y_or_overflow(r.dy, r.nu, r.x)?,
        est_abs_error: r.err * (1.0 + nu.value() / x.value()),
    })
}

/// The cylinder function `J_nu(x) cos(alpha) - Y_nu(x) sin(alpha)`.
pub fn eval_cylinder(mix: CylinderMix, nu: Order, x: Argument) -> Result<EvalResult> {
    let r = bessel_jy(nu, x);
    let (s, c) = mix.alpha.sin_cos();
    let value = if s == 0.0 {
        c * r.j
    } else {
        c * r.j - s * y_or_overflow(r.y, r.nu, r.x)?
    };
    Ok(EvalResult {
        value,
        est_abs_error: r.err * (c.abs() + s.abs()),
    })
}
