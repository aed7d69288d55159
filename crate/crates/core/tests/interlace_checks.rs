//! Interlacing and Wronskian checks against values computed independently with mpmath.

use bessel_interlace::interlace::{
    check_derivative_chains, check_proposition, check_theorem1, check_theorem2,
    counterexample_scan, find_breaking, locate_crossover, CrossPair,
};
use bessel_interlace::wronskian::{eval_w, has_positive_zero, profile_extrema};
use bessel_interlace::zeros::ZeroTable;
use bessel_interlace::{Argument, Error, Order};

fn o(nu: f64) -> Order {
    Order::new(nu).unwrap()
}

#[test]
fn breaking_witnesses_match_oracle() {
    // first s with y_{nu+eps,s} > j_{nu,s}, with both zeros
    let cases = [
        (10.0, 1.25, 7, 35.513547529400824, 35.499909205373851),
        (3.0, 1.5, 2, 9.982_466_377_789_808, 9.761_023_129_981_67),
        (0.0, 2.0, 1, 3.384_241_767_149_593_5, 2.404_825_557_695_773),
    ];
    for (nu, eps, s, y, j) in cases {
        let w = find_breaking(o(nu), eps, 500).unwrap();
        assert_eq!(w.s, s, "nu={nu} eps={eps}");
        assert!((w.left_value - y).abs() < 1e-12 * y);
        assert!((w.right_value - j).abs() < 1e-12 * j);
    }
}

#[test]
fn breaking_cap_is_reported() {
    let err = find_breaking(o(10.0), 1.25, 6).unwrap_err();
    assert_eq!(
        err,
        Error::NotFoundWithinCap {
            nu: 10.0,
            eps: 1.25,
            s_cap: 6
        }
    );
}

#[test]
fn sweeps_hold_on_a_coarse_grid() {
    let table = ZeroTable::new();
    for i in 0..=12 {
        let nu = o(i as f64 * 2.5);
        assert!(check_theorem1(&table, nu, 15).unwrap().holds());
        assert!(check_proposition(&table, nu, 15).unwrap().holds());
        for eps in [0.1, 0.6, 1.0] {
            assert!(check_theorem2(&table, nu, eps, 15).unwrap().holds());
            assert!(check_derivative_chains(&table, nu, eps, 15)
                .unwrap()
                .holds());
        }
    }
}

#[test]
fn increments_above_one_break_the_sweep() {
    let table = ZeroTable::new();
    let out = check_theorem2(&table, o(0.0), 2.0, 5).unwrap();
    assert!(!out.holds());
    let first = &out.violations[0];
    assert_eq!((first.s, first.left_label.as_str()), (1, "y_{2,1}"));
}

#[test]
fn cross_pairs_change_order_at_second_rank() {
    // mpmath: j'_{nu+0.1,2} - y_{nu,2} is +0.0021 at nu=110 and -0.0024 at nu=130;
    // y'_{nu+0.1,2} - j_{nu,2} is +0.0016 at nu=500 and -0.0018 at nu=560.
    let table = ZeroTable::new();
    let cases = [
        (
            CrossPair::JPrimeVsY,
            110.0,
            130.0,
            0.00209966760687,
            -0.00242916099846,
        ),
        (
            CrossPair::YPrimeVsJ,
            500.0,
            560.0,
            0.00160911009405,
            -0.00183761328643,
        ),
    ];
    for (pair, lo, hi, d_lo, d_hi) in cases {
        assert!((pair.difference(&table, o(lo), 0.1, 2).unwrap() - d_lo).abs() < 1e-9);
        assert!((pair.difference(&table, o(hi), 0.1, 2).unwrap() - d_hi).abs() < 1e-9);
        let (above, below) = counterexample_scan(&table, pair, 0.1, &[o(lo), o(hi)], 2).unwrap();
        assert_eq!((above.nu, below.nu), (lo, hi));
        let nu = locate_crossover(&table, pair, 0.1, 2, o(lo), o(hi), 1e-8).unwrap();
        assert!(nu > lo && nu < hi);
        let left = pair.difference(&table, o(nu - 1e-3), 0.1, 2).unwrap();
        let right = pair.difference(&table, o(nu + 1e-3), 0.1, 2).unwrap();
        assert!(left > 0.0 && right < 0.0);
    }
}

#[test]
fn first_rank_keeps_one_ordering_for_small_increment() {
    // mpmath: j'_{nu+0.1,1} - y_{nu,1} = -0.2621 at nu=0.5 and -0.2225 at nu=5
    let table = ZeroTable::new();
    let d = CrossPair::JPrimeVsY
        .difference(&table, o(0.5), 0.1, 1)
        .unwrap();
    assert!((d + 0.262115425658).abs() < 1e-9);
    let d = CrossPair::JPrimeVsY
        .difference(&table, o(5.0), 0.1, 1)
        .unwrap();
    assert!((d + 0.22251261254).abs() < 1e-9);
}

#[test]
fn wronskian_zero_matches_oracle() {
    let x = has_positive_zero(o(0.0), o(2.0), 50.0).unwrap().unwrap();
    assert!((x - 1.4018949468675323).abs() < 1e-12);
}

#[test]
fn wronskian_has_no_interior_sign_change_when_extrema_agree() {
    for (nu, mu) in [(0.0, 0.5), (1.0, 1.5), (2.0, 3.0), (4.5, 4.75)] {
        let p = profile_extrema(o(nu), o(mu), 8).unwrap();
        assert!(p.all_same_sign);
        for gap in p.samples.windows(2) {
            for k in 1..=20 {
                let x = gap[0].x + (gap[1].x - gap[0].x) * k as f64 / 21.0;
                let w = eval_w(o(nu), o(mu), Argument::new(x).unwrap()).unwrap();
                assert!(w > 0.0, "W_({nu},{mu})({x}) = {w}");
            }
        }
    }
}
