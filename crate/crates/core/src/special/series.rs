//! Small-argument machinery: the ascending series for `J` and Temme's series for `Y`.

use std::f64::consts::PI;

use super::EPS;

/// Taylor coefficients of `1/Γ(1+z)` about `z = 0`.
#[allow(clippy::excessive_precision)]
const RGAMMA_TAYLOR: [f64; 29] = [
    1.0,
    0.577215664901532861,
    -0.655878071520253881,
    -0.0420026350340952355,
    0.16653861138229149,
    -0.0421977345555443367,
    -0.00962197152787697356,
    0.00721894324666309954,
    -0.00116516759185906511,
    -0.000215241674114950973,
    0.000128050282388116186,
    -0.0000201348547807882387,
    -1.25049348214267066e-6,
    1.13302723198169588e-6,
    -2.0563384169776071e-7,
    6.11609510448141582e-9,
    5.00200764446922293e-9,
    -1.18127457048702014e-9,
    1.04342671169110051e-10,
    7.78226343990507125e-12,
    -3.69680561864220571e-12,
    5.10037028745447598e-13,
    -2.05832605356650678e-14,
    -5.34812253942301798e-15,
    1.22677862823826079e-15,
    -1.18125930169745877e-16,
    1.18669225475160033e-18,
    1.41238065531803178e-18,
    -2.29874568443537021e-19,
];

/// `1/Γ(1+z)` for `|z| <= 1/2`.
pub(crate) fn rgamma1p(z: f64) -> f64 {
    debug_assert!(z.abs() <= 0.5 + 1e-12);
    RGAMMA_TAYLOR.iter().rev().fold(0.0, |acc, &c| acc * z + c)
}

/// The four gamma combinations Temme's method needs at `|mu| <= 1/2`.
///
/// `gam1 = (1/Γ(1-mu) - 1/Γ(1+mu)) / (2 mu)` and `gam2 = (1/Γ(1-mu) + 1/Γ(1+mu)) / 2`,
/// both summed from the odd and even Taylor terms so nothing cancels near `mu = 0`.
#[derive(Debug, Clone, Copy)]
pub(crate) struct TemmeGammas {
    pub gam1: f64,
    pub gam2: f64,
    pub gampl: f64,
    pub gammi: f64,
}

pub(crate) fn temme_gammas(mu: f64) -> TemmeGammas {
    let mut odd = 0.0;
    let mut even = 0.0;
    for (k, &c) in RGAMMA_TAYLOR.iter().enumerate().rev() {
        if k % 2 == 1 {
            odd = odd * mu * mu + c;
        } else {
            even = even * mu * mu + c;
        }
    }
    // odd = sum_{k odd} c_k mu^(k-1), even = sum_{k even} c_k mu^k
    TemmeGammas {
        gam1: -odd,
        gam2: even,
        gampl: even + mu * odd,
        gammi: even - mu * odd,
    }
}

/// `J_nu(x)` and `J_{nu+1}(x)` from the ascending series, for small `x`.
///
/// The prefactor `(x/2)^nu / Γ(nu+1)` is built as a product so that large orders
/// underflow gracefully instead of overflowing an intermediate gamma value.
pub(crate) fn j_ascending(nu: f64, x: f64) -> (f64, f64, f64) {
    let n = (nu + 0.5).floor();
    let mu = nu - n;
    let half = 0.5 * x;
    let mut pref = half.powf(mu) * rgamma1p(mu);
    let mut k = 1.0;
    while k <= n {
        pref *= half / (mu + k);
        k += 1.0;
    }
    let (s0, t0) = ascending_sum(nu, x);
    let (s1, t1) = ascending_sum(nu + 1.0, x);
    let j0 = pref * s0;
    let j1 = pref * half / (nu + 1.0) * s1;
    (j0, j1, pref * (t0 + t1))
}

/// Sum of `(-x^2/4)^k / (k! (nu+1)_k)` plus the sum of absolute terms, used as an error scale.
fn ascending_sum(nu: f64, x: f64) -> (f64, f64) {
    let q = -0.25 * x * x;
    let mut term = 1.0;
    let mut sum = 1.0;
    let mut abs_sum = 1.0;
    for k in 1..200 {
        let kf = k as f64;
        term *= q / (kf * (nu + kf));
        sum += term;
        abs_sum += term.abs();
        if term.abs() < EPS * sum.abs() {
            break;
        }
    }
    (sum, abs_sum)
}

/// `Y_mu(x)` and `Y_{mu+1}(x)` for `|mu| <= 1/2` and small `x` by Temme's series.
pub(crate) fn temme_y(mu: f64, x: f64) -> (f64, f64) {
    let x2 = 0.5 * x;
    let pimu = PI * mu;
    let fact = if pimu.abs() < EPS {
        1.0
    } else {
        pimu / pimu.sin()
    };
    let d = -x2.ln();
    let e = mu * d;
    let fact2 = if e.abs() < EPS { 1.0 } else { e.sinh() / e };
    let g = temme_gammas(mu);
    let mut ff = 2.0 / PI * fact * (g.gam1 * e.cosh() + g.gam2 * fact2 * d);
    let e = e.exp();
    let mut p = e / (g.gampl * PI);
    let mut q = 1.0 / (e * PI * g.gammi);
    let pimu2 = 0.5 * pimu;
    let fact3 = if pimu2.abs() < EPS {
        1.0
    } else {
        pimu2.sin() / pimu2
    };
    let r = PI * pimu2 * fact3 * fact3;
    let mut c = 1.0;
    let d = -x2 * x2;
    let mut sum = ff + r * q;
    let mut sum1 = p;
    let mu2 = mu * mu;
    for i in 1..500 {
        let fi = i as f64;
        ff = (fi * ff + p + q) / (fi * fi - mu2);
        c *= d / fi;
        p /= fi - mu;
        q /= fi + mu;
        let del = c * (ff + r * q);
        sum += del;
        let del1 = c * p - fi * del;
        sum1 += del1;
        if del.abs() < (1.0 + sum.abs()) * EPS && del1.abs() < (1.0 + sum1.abs()) * EPS {
            break;
        }
    }
    (-sum, -sum1 * 2.0 / x)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rgamma_matches_known_values() {
        // 1/Γ(1.5) = 2/√π, 1/Γ(0.5) = 1/√π
        let sqrt_pi = PI.sqrt();
        assert!((rgamma1p(0.5) - 2.0 / sqrt_pi).abs() < 2e-16);
        assert!((rgamma1p(-0.5) - 1.0 / sqrt_pi).abs() < 2e-16);
        assert_eq!(rgamma1p(0.0), 1.0);
    }

    #[test]
    fn temme_gammas_are_consistent() {
        for &mu in &[-0.5, -0.3, -1e-9, 0.0, 1e-9, 0.2, 0.5] {
            let g = temme_gammas(mu);
            assert!((g.gampl - rgamma1p(mu)).abs() < 4e-16);
            assert!((g.gammi - rgamma1p(-mu)).abs() < 4e-16);
            if mu.abs() > 0.1 {
                let direct = (g.gammi - g.gampl) / (2.0 * mu);
                assert!((g.gam1 - direct).abs() < 1e-15);
            }
        }
        // gam1(0) = -γ
        assert!((temme_gammas(0.0).gam1 + 0.577_215_664_901_532_9).abs() < 1e-16);
    }

    #[test]
    fn half_order_y_closed_form() {
        // Y_{1/2}(x) = -sqrt(2/(πx)) cos x, Y_{3/2}(x) = -sqrt(2/(πx)) (cos x / x + sin x)
        for &x in &[0.1, 0.7, 1.5, 1.99] {
            let (y0, y1) = temme_y(0.5, x);
            let s = (2.0 / (PI * x)).sqrt();
            assert!((y0 + s * x.cos()).abs() < 1e-14 * (1.0 + y0.abs()));
            assert!((y1 + s * (x.cos() / x + x.sin())).abs() < 1e-14 * (1.0 + y1.abs()));
        }
    }
}
