//! Continued fractions: the ratio `J'_nu/J_nu` (CF1) and the complex
//! logarithmic derivative of the Hankel function (CF2).

use num_complex::Complex64;

use super::{EPS, FPMIN};

/// Outcome of CF1: `J'_nu(x) / J_nu(x)` together with the sign bookkeeping that
/// fixes the sign of an unnormalised starting value for downward recurrence.
#[derive(Debug, Clone, Copy)]
pub(crate) struct Cf1 {
    pub ratio: f64,
    pub sign: f64,
    pub iterations: usize,
}

pub(crate) fn cf1(nu: f64, x: f64) -> Cf1 {
    let xi = 1.0 / x;
    let mut sign = 1.0;
    let mut h = (nu * xi).max(FPMIN);
    let mut d = 0.0;
    let mut c = h;
    let max_iter = 100_000 + (4.0 * x) as usize;
    let mut i = 0;
    while i < max_iter {
        i += 1;
        // b is formed directly rather than accumulated: summing 2/x thousands of times
        // costs digits for large x
        let b = 2.0 * (nu + i as f64) / x;
        d = b - d;
        if d.abs() < FPMIN {
            d = FPMIN;
        }
        c = b - 1.0 / c;
        if c.abs() < FPMIN {
            c = FPMIN;
        }
        d = 1.0 / d;
        let del = c * d;
        h *= del;
        if d < 0.0 {
            sign = -sign;
        }
        if (del - 1.0).abs() < EPS {
            break;
        }
    }
    Cf1 {
        ratio: h,
        sign,
        iterations: i,
    }
}

/// `p + i q = (J'_mu + i Y'_mu) / (J_mu + i Y_mu)` by Steed's CF2, valid for `x >= 2`.
pub(crate) fn cf2(mu: f64, x: f64) -> (f64, f64) {
    let mu2 = mu * mu;
    let a = |k: f64| (k - 0.5) * (k - 0.5) - mu2;
    let b = |k: f64| Complex64::new(2.0 * x, 2.0 * k);
    let tiny = Complex64::new(FPMIN, 0.0);

    // Modified Lentz on T = b1 + a2/(b2 + a3/(b3 + ...)).
    let mut t = b(1.0);
    let mut c = t;
    let mut d = Complex64::new(0.0, 0.0);
    for k in 2..100_000 {
        let kf = k as f64;
        d = b(kf) + a(kf) * d;
        if d.norm_sqr() < FPMIN {
            d = tiny;
        }
        c = b(kf) + a(kf) / c;
        if c.norm_sqr() < FPMIN {
            c = tiny;
        }
        d = d.inv();
        let del = c * d;
        t *= del;
        if (del - 1.0).l1_norm() < EPS {
            break;
        }
    }
    let i = Complex64::i();
    let pq = Complex64::new(-0.5 / x, 1.0) + i / x * (a(1.0) / t);
    (pq.re, pq.im)
}
