//! Large-argument Hankel expansions.

use std::f64::consts::PI;

use super::EPS;

/// Amplitude series `P(nu, x)`, `Q(nu, x)` and the magnitude of the last retained term.
pub(crate) fn pq(nu: f64, x: f64) -> (f64, f64, f64) {
    let m4 = 4.0 * nu * nu;
    let mut p = 1.0;
    let mut q = 0.0;
    let mut term = 1.0_f64;
    let mut last = 0.0;
    for k in 1..400 {
        let odd = (2 * k - 1) as f64;
        let next = term * (m4 - odd * odd) / (k as f64 * 8.0 * x);
        if next == 0.0 {
            last = 0.0;
            break;
        }
        if next.abs() > term.abs() {
            // asymptotic series started to diverge
            last = term.abs();
            break;
        }
        term = next;
        // signs run +a0, +a1, -a2, -a3, +a4, ...
        let signed = if (k / 2) % 2 == 0 { term } else { -term };
        if k % 2 == 0 {
            p += signed;
        } else {
            q += signed;
        }
        last = term.abs();
        if term.abs() < 0.1 * EPS * (p.abs() + q.abs()) {
            break;
        }
    }
    (p, q, last)
}

/// `(cos chi, sin chi)` for `chi = x - (nu/2 + 1/4) pi`, reducing the phase offset exactly.
pub(crate) fn phase(nu: f64, x: f64) -> (f64, f64) {
    let t = (0.5 * nu + 0.25).rem_euclid(2.0);
    let (sp, cp) = (PI * t).sin_cos();
    let (sx, cx) = x.sin_cos();
    (cx * cp + sx * sp, sx * cp - cx * sp)
}

/// `J_nu, J_{nu+1}, Y_nu, Y_{nu+1}` and a truncation estimate, all from the Hankel expansion.
pub(crate) fn jy_pair(nu: f64, x: f64) -> ([f64; 4], f64) {
    let amp = (2.0 / (PI * x)).sqrt();
    let (c, s) = phase(nu, x);
    let (p0, q0, t0) = pq(nu, x);
    let (p1, q1, t1) = pq(nu + 1.0, x);
    // chi_{nu+1} = chi_nu - pi/2
    let (c1, s1) = (s, -c);
    let j0 = amp * (p0 * c - q0 * s);
    let y0 = amp * (p0 * s + q0 * c);
    let j1 = amp * (p1 * c1 - q1 * s1);
    let y1 = amp * (p1 * s1 + q1 * c1);
    ([j0, j1, y0, y1], amp * (t0 + t1))
}
