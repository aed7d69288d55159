//! Positive real zeros `j_{nu,s}`, `y_{nu,s}`, `j'_{nu,s}`, `y'_{nu,s}`.
//!
//! Zeros are enumerated in increasing order. The `s`-th zero is located by walking
//! from the previous zero (or from `x = nu` for `s = 1`, since every first zero
//! lies at or beyond the order) in steps of `pi/8` until the target function changes
//! sign, then refined by safeguarded Newton iteration inside that bracket.
//!
//! `x = 0` is counted as the first zero of `J'_0`, so `j'_{0,s} = j_{1,s-1}`.

use std::collections::HashMap;
use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use parking_lot::Mutex;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::special::{jy_raw, Order};

/// Largest rank accepted by [`zeros_upto`].
pub const S_MAX: usize = 10_000;

/// Walking step between sign probes.
pub const SCAN_STEP: f64 = PI / 8.0;

/// Newton/bisection iteration cap in [`refine`].
pub const MAX_REFINE_ITER: usize = 200;

/// Probes allowed while walking to the next sign change.
const SCAN_BUDGET: usize = 4096;

/// Scan anchor for `nu = 0`, where `x = nu` is not an admissible argument.
const ZERO_ORDER_START: f64 = 1e-6;

/// Residual bound `|f(value)| <= 1e-10 max(1, value)` required of every record.
pub fn resid_tol(value: f64) -> f64 {
    1e-10 * value.abs().max(1.0)
}

/// Which function the zero belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum ZeroKind {
    J,
    Y,
    JPrime,
    YPrime,
}

impl ZeroKind {
    pub const ALL: [ZeroKind; 4] = [ZeroKind::J, ZeroKind::Y, ZeroKind::JPrime, ZeroKind::YPrime];

    /// Short tag used on the command line and in output files.
    pub fn tag(self) -> &'static str {
        match self {
            ZeroKind::J => "j",
            ZeroKind::Y => "y",
            ZeroKind::JPrime => "jp",
            ZeroKind::YPrime => "yp",
        }
    }

    /// Symbol used in labels, e.g. `j'`.
    pub fn symbol(self) -> &'static str {
        match self {
            ZeroKind::J => "j",
            ZeroKind::Y => "y",
            ZeroKind::JPrime => "j'",
            ZeroKind::YPrime => "y'",
        }
    }

    /// Value and `x`-derivative of the target function.
    fn eval(self, nu: f64, x: f64) -> (f64, f64) {
        let r = jy_raw(nu, x);
        match self {
            ZeroKind::J => (r.j, r.dj),
            ZeroKind::Y => (r.y, r.dy),
            ZeroKind::JPrime => (r.dj, r.d2j()),
            ZeroKind::YPrime => (r.dy, r.d2y()),
        }
    }

    /// First-zero guess `nu + c nu^(1/3)` or the McMahon large-zero expansion.
    fn guess(self, nu: f64, s: usize) -> f64 {
        if s == 1 && nu >= 1.0 {
            let c = match self {
                ZeroKind::J => 1.855_757_1,
                ZeroKind::Y => 0.931_576_8,
                ZeroKind::JPrime => 0.808_616_5,
                ZeroKind::YPrime => 1.821_098_0,
            };
            return nu + c * nu.cbrt();
        }
        let (shift, num) = match self {
            ZeroKind::J => (0.25, -1.0),
            ZeroKind::Y => (0.75, -1.0),
            ZeroKind::JPrime => (0.75, 3.0),
            ZeroKind::YPrime => (0.25, 3.0),
        };
        let beta = (s as f64 + 0.5 * nu - shift) * PI;
        beta - (4.0 * nu * nu + num) / (8.0 * beta)
    }
}

impl fmt::Display for ZeroKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for ZeroKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "j" => Ok(ZeroKind::J),
            "y" => Ok(ZeroKind::Y),
            "jp" | "j'" | "jprime" => Ok(ZeroKind::JPrime),
            "yp" | "y'" | "yprime" => Ok(ZeroKind::YPrime),
            other => Err(Error::InvalidParameter(format!(
                "unknown zero kind '{other}' (expected j, y, jp or yp)"
            ))),
        }
    }
}

/// Names one zero: `kind`, order and rank `s >= 1`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ZeroId {
    pub kind: ZeroKind,
    pub nu: Order,
    pub s: usize,
}

impl ZeroId {
    pub fn new(kind: ZeroKind, nu: Order, s: usize) -> Result<Self> {
        if s == 0 {
            return Err(Error::InvalidParameter("zero rank s must be >= 1".into()));
        }
        Ok(ZeroId { kind, nu, s })
    }

    /// `j'_{0,1} = 0` by convention.
    pub fn is_conventional(&self) -> bool {
        self.kind == ZeroKind::JPrime && self.nu.value() == 0.0 && self.s == 1
    }

    fn describe(&self) -> String {
        format!("{}_{{{},{}}}", self.kind.symbol(), self.nu.value(), self.s)
    }
}

/// An interval whose end points give the target function opposite signs.
/// The conventional zero `j'_{0,1}` uses the degenerate bracket `[0, 0]`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Bracket {
    pub lo: f64,
    pub hi: f64,
}

impl Bracket {
    pub fn width(&self) -> f64 {
        self.hi - self.lo
    }

    pub fn contains(&self, x: f64) -> bool {
        self.lo <= x && x <= self.hi
    }
}

/// A refined zero.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ZeroRecord {
    pub id: ZeroId,
    pub value: f64,
    pub bracket: Bracket,
    pub residual: f64,
    pub iterations: usize,
}

impl ZeroRecord {
    fn conventional(id: ZeroId) -> Self {
        ZeroRecord {
            id,
            value: 0.0,
            bracket: Bracket { lo: 0.0, hi: 0.0 },
            residual: 0.0,
            iterations: 0,
        }
    }
}

/// Where the walk to the next zero begins.
#[derive(Debug, Clone, Copy)]
enum Anchor {
    /// A point known to lie below the first zero.
    Start(f64),
    /// The previous zero.
    After(f64),
}

fn scan_start(nu: f64) -> f64 {
    if nu > 0.0 {
        nu
    } else {
        ZERO_ORDER_START
    }
}

fn walk(id: &ZeroId, anchor: Anchor) -> Result<Bracket> {
    let nu = id.nu.value();
    let origin = match anchor {
        Anchor::Start(x) => x,
        Anchor::After(prev) => prev + 0.25 * SCAN_STEP,
    };
    let (f0, _) = id.kind.eval(nu, origin);
    if !(f0.is_finite() && f0 != 0.0) {
        return Err(Error::BracketNotFound {
            what: id.describe(),
            reached: origin,
        });
    }
    let mut lo = origin;
    for k in 1..=SCAN_BUDGET {
        let hi = origin + k as f64 * SCAN_STEP;
        let (f, _) = id.kind.eval(nu, hi);
        if f.is_nan() {
            break;
        }
        if f == 0.0 || f.signum() != f0.signum() {
            return Ok(Bracket { lo, hi });
        }
        lo = hi;
    }
    Err(Error::BracketNotFound {
        what: id.describe(),
        reached: lo,
    })
}

/// Sign-change bracket of width `pi/8` around the `s`-th zero.
///
/// Zeros `1..s-1` are enumerated first to anchor the walk, so the bracket is
/// guaranteed to hold the zero of the requested rank.
pub fn initial_bracket(id: ZeroId) -> Result<Bracket> {
    if id.is_conventional() {
        return Err(Error::InvalidParameter(
            "j'_{0,1} = 0 is conventional and has no sign-change bracket".into(),
        ));
    }
    let anchor = if id.s == 1 {
        Anchor::Start(scan_start(id.nu.value()))
    } else {
        let prev = zeros_upto(id.kind, id.nu, id.s - 1)?;
        anchor_after(prev.last().expect("s - 1 >= 1 records"))
    };
    walk(&id, anchor)
}

fn anchor_after(rec: &ZeroRecord) -> Anchor {
    if rec.id.is_conventional() {
        Anchor::Start(ZERO_ORDER_START)
    } else {
        Anchor::After(rec.value)
    }
}

/// Safeguarded Newton iteration inside `bracket`, falling back to bisection whenever
/// a Newton step leaves the bracket or the bracket stops shrinking.
pub fn refine(bracket: Bracket, id: ZeroId) -> Result<ZeroRecord> {
    if id.is_conventional() {
        return Ok(ZeroRecord::conventional(id));
    }
    let nu = id.nu.value();
    let f = |x: f64| id.kind.eval(nu, x);
    let (mut a, mut b) = (bracket.lo, bracket.hi);
    if a.partial_cmp(&b) != Some(std::cmp::Ordering::Less) || a <= 0.0 {
        return Err(Error::InvalidParameter(format!(
            "bad bracket [{a}, {b}] for {}",
            id.describe()
        )));
    }
    let (fa, _) = f(a);
    let (fb, _) = f(b);
    if fb == 0.0 {
        return finish(id, collapse(&f, a, b, b), b, 0);
    }
    if !(fa.is_finite() && fb.is_finite()) || fa == 0.0 || fa.signum() == fb.signum() {
        return Err(Error::InvalidParameter(format!(
            "[{a}, {b}] is not a sign-change bracket for {}",
            id.describe()
        )));
    }
    let sign_a = fa.signum();

    let seed = id.kind.guess(nu, id.s);
    let mut x = if seed > a && seed < b {
        seed
    } else {
        0.5 * (a + b)
    };
    let mut dx_old = b - a;
    for iter in 1..=MAX_REFINE_ITER {
        let (fx, dfx) = f(x);
        if fx == 0.0 {
            return finish(id, collapse(&f, a, b, x), x, iter);
        }
        if fx.signum() == sign_a {
            a = x;
        } else {
            b = x;
        }
        let tol = 1e-14 * x.abs().max(1.0);
        let newton = x - fx / dfx;
        if b - a <= tol {
            let value = if newton.is_finite() {
                newton.clamp(a, b)
            } else {
                x
            };
            return finish(id, Bracket { lo: a, hi: b }, value, iter);
        }

        let step = newton - x;
        let mut next = newton;
        if !(newton > a && newton < b) || step.abs() > 0.5 * dx_old.abs() {
            next = 0.5 * (a + b);
        } else if step.abs() < 0.5 * tol {
            // Newton closes in from one side; step just past the root so the bracket collapses
            let overshoot = newton + step.signum() * 0.5 * tol;
            if overshoot > a && overshoot < b {
                next = overshoot;
            }
        }
        if next == x {
            return finish(id, collapse(&f, a, b, x), x, iter);
        }
        dx_old = next - x;
        x = next;
    }
    Err(Error::NoConvergence {
        what: id.describe(),
        detail: format!("bracket [{a}, {b}] after {MAX_REFINE_ITER} iterations"),
    })
}

/// Shrinks `[a, b]` to a sign-change bracket of width `1e-14 max(1, x)` around `x`
/// when probes on either side allow it.
fn collapse(f: &impl Fn(f64) -> (f64, f64), a: f64, b: f64, x: f64) -> Bracket {
    let h = 0.25e-14 * x.abs().max(1.0);
    let (lo, hi) = ((x - h).max(a), (x + h).min(b));
    let (fl, fh) = (f(lo).0, f(hi).0);
    if lo < hi && fl != 0.0 && fh != 0.0 && fl.signum() != fh.signum() {
        Bracket { lo, hi }
    } else {
        Bracket { lo: a, hi: b }
    }
}

fn finish(id: ZeroId, bracket: Bracket, value: f64, iterations: usize) -> Result<ZeroRecord> {
    let (residual, _) = id.kind.eval(id.nu.value(), value);
    if residual.is_nan() || residual.abs() > resid_tol(value) {
        return Err(Error::NoConvergence {
            what: id.describe(),
            detail: format!("residual {residual:e} at x = {value} exceeds tolerance"),
        });
    }
    Ok(ZeroRecord {
        id,
        value,
        bracket,
        residual,
        iterations,
    })
}

/// Lazily enumerates the zeros of one function in increasing order.
#[derive(Debug, Clone)]
pub struct ZeroIter {
    kind: ZeroKind,
    nu: Order,
    next_rank: usize,
    anchor: Anchor,
    failed: bool,
}

impl ZeroIter {
    pub fn new(kind: ZeroKind, nu: Order) -> Self {
        ZeroIter {
            kind,
            nu,
            next_rank: 1,
            anchor: Anchor::Start(scan_start(nu.value())),
            failed: false,
        }
    }

    /// Continues an enumeration after `last`.
    pub fn resume(last: &ZeroRecord) -> Self {
        ZeroIter {
            kind: last.id.kind,
            nu: last.id.nu,
            next_rank: last.id.s + 1,
            anchor: anchor_after(last),
            failed: false,
        }
    }

    fn step(&mut self) -> Result<ZeroRecord> {
        let id = ZeroId::new(self.kind, self.nu, self.next_rank)?;
        let rec = if id.is_conventional() {
            ZeroRecord::conventional(id)
        } else {
            let bracket = walk(&id, self.anchor)?;
            refine(bracket, id)?
        };
        self.anchor = anchor_after(&rec);
        self.next_rank += 1;
        Ok(rec)
    }
}

impl Iterator for ZeroIter {
    type Item = Result<ZeroRecord>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.failed {
            return None;
        }
        let out = self.step();
        self.failed = out.is_err();
        Some(out)
    }
}

fn check_s_max(s_max: usize) -> Result<()> {
    if s_max == 0 || s_max > S_MAX {
        return Err(Error::InvalidParameter(format!(
            "s_max must be in 1..={S_MAX}, got {s_max}"
        )));
    }
    Ok(())
}

/// The zeros of rank `1..=s_max`, strictly increasing.
pub fn zeros_upto(kind: ZeroKind, nu: Order, s_max: usize) -> Result<Vec<ZeroRecord>> {
    check_s_max(s_max)?;
    ZeroIter::new(kind, nu).take(s_max).collect()
}

/// The zero named by `id`.
pub fn zero(id: ZeroId) -> Result<ZeroRecord> {
    check_s_max(id.s)?;
    ZeroIter::new(id.kind, id.nu)
        .nth(id.s - 1)
        .expect("iterator yields until an error")
}

/// Brute-force reference: every sign change of the target function on `(0, x_max]`,
/// found on the grid `step, 2 step, ...` and bisected to width `1e-12`.
///
/// Used to validate [`zeros_upto`]; it shares only the function evaluator with it.
pub fn oracle_scan(kind: ZeroKind, nu: Order, x_max: f64, step: f64) -> Result<Vec<f64>> {
    if !(step > 0.0 && step <= 0.01) {
        return Err(Error::InvalidParameter(format!(
            "oracle step must be in (0, 0.01], got {step}"
        )));
    }
    if !x_max.is_finite() {
        return Err(Error::InvalidParameter(format!(
            "x_max must be finite, got {x_max}"
        )));
    }
    let nu = nu.value();
    let f = |x: f64| kind.eval(nu, x).0;
    let mut out = Vec::new();
    let n = (x_max / step).floor() as usize;
    let mut prev: Option<(f64, f64)> = None;
    for i in 1..=n {
        let x = i as f64 * step;
        let fx = f(x);
        if fx.is_nan() {
            prev = None;
            continue;
        }
        if fx == 0.0 {
            out.push(x);
            prev = None;
            continue;
        }
        if let Some((xp, fp)) = prev {
            if fp.signum() != fx.signum() {
                out.push(bisect(&f, xp, x, fp));
            }
        }
        prev = Some((x, fx));
    }
    Ok(out)
}

fn bisect(f: &impl Fn(f64) -> f64, mut a: f64, mut b: f64, fa: f64) -> f64 {
    while b - a > 1e-12 {
        let m = 0.5 * (a + b);
        let fm = f(m);
        if fm == 0.0 {
            return m;
        }
        if fm.signum() == fa.signum() {
            a = m;
        } else {
            b = m;
        }
    }
    0.5 * (a + b)
}

/// Thread-safe memo of enumerated zeros keyed by `(kind, nu)`.
///
/// Enumeration is deterministic, so extending a cached prefix gives the same
/// records bit for bit as enumerating from scratch.
#[derive(Debug, Default)]
pub struct ZeroTable {
    cache: Mutex<HashMap<(ZeroKind, u64), Vec<ZeroRecord>>>,
}

impl ZeroTable {
    pub fn new() -> Self {
        Self::default()
    }

    /// Same contract as [`zeros_upto`].
    pub fn zeros(&self, kind: ZeroKind, nu: Order, s_max: usize) -> Result<Vec<ZeroRecord>> {
        check_s_max(s_max)?;
        let mut have = self.ensure(kind, nu, s_max)?;
        have.truncate(s_max);
        Ok(have)
    }

    /// Same contract as [`zero`].
    pub fn zero(&self, kind: ZeroKind, nu: Order, s: usize) -> Result<ZeroRecord> {
        ZeroId::new(kind, nu, s)?;
        check_s_max(s)?;
        let key = (kind, nu.value().to_bits());
        if let Some(rec) = self.cache.lock().get(&key).and_then(|v| v.get(s - 1)) {
            return Ok(*rec);
        }
        Ok(self.ensure(kind, nu, s)?[s - 1])
    }

    /// Zero value shorthand.
    pub fn value(&self, kind: ZeroKind, nu: Order, s: usize) -> Result<f64> {
        Ok(self.zero(kind, nu, s)?.value)
    }

    fn ensure(&self, kind: ZeroKind, nu: Order, s_max: usize) -> Result<Vec<ZeroRecord>> {
        let key = (kind, nu.value().to_bits());
        let mut have = self.cache.lock().get(&key).cloned().unwrap_or_default();
        if have.len() >= s_max {
            return Ok(have);
        }
        let iter = match have.last() {
            Some(last) => ZeroIter::resume(last),
            None => ZeroIter::new(kind, nu),
        };
        for rec in iter.take(s_max - have.len()) {
            have.push(rec?);
        }
        let mut cache = self.cache.lock();
        let slot = cache.entry(key).or_default();
        if slot.len() < have.len() {
            *slot = have.clone();
        }
        Ok(have)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn o(nu: f64) -> Order {
        Order::new(nu).unwrap()
    }

    fn id(kind: ZeroKind, nu: f64, s: usize) -> ZeroId {
        ZeroId::new(kind, o(nu), s).unwrap()
    }

    #[test]
    fn rank_zero_is_rejected() {
        assert!(ZeroId::new(ZeroKind::J, o(1.0), 0).is_err());
        assert!(zeros_upto(ZeroKind::J, o(1.0), 0).is_err());
        assert!(zeros_upto(ZeroKind::J, o(1.0), S_MAX + 1).is_err());
    }

    #[test]
    fn kind_parsing() {
        assert_eq!("jp".parse::<ZeroKind>().unwrap(), ZeroKind::JPrime);
        assert_eq!("Y".parse::<ZeroKind>().unwrap(), ZeroKind::Y);
        assert!("q".parse::<ZeroKind>().is_err());
    }

    #[test]
    fn initial_brackets_hold_the_expected_zero() {
        let b = initial_bracket(id(ZeroKind::J, 0.0, 1)).unwrap();
        assert!(b.lo < 2.404825557695773 && 2.404825557695773 < b.hi);
        assert!(b.width() <= PI);
        let b = initial_bracket(id(ZeroKind::Y, 0.5, 1)).unwrap();
        assert!(b.contains(PI / 2.0));
        let b = initial_bracket(id(ZeroKind::JPrime, 0.0, 2)).unwrap();
        assert!(b.lo < 3.831705970207512 && 3.831705970207512 < b.hi);
        assert!(initial_bracket(id(ZeroKind::JPrime, 0.0, 1)).is_err());
    }

    #[test]
    fn refine_examples() {
        let rec = refine(
            initial_bracket(id(ZeroKind::J, 0.0, 1)).unwrap(),
            id(ZeroKind::J, 0.0, 1),
        )
        .unwrap();
        assert!((rec.value - 2.404825557695773).abs() < 1e-12);
        assert!(rec.bracket.contains(rec.value));
        assert!(rec.bracket.width() <= 1e-14 * rec.value.max(1.0));
        let yid = id(ZeroKind::Y, 1.0, 1);
        let rec = refine(initial_bracket(yid).unwrap(), yid).unwrap();
        assert!((rec.value - 2.197141326031017).abs() < 1e-12);
        let conv = refine(Bracket { lo: 0.0, hi: 0.0 }, id(ZeroKind::JPrime, 0.0, 1)).unwrap();
        assert_eq!((conv.value, conv.residual, conv.iterations), (0.0, 0.0, 0));
    }

    #[test]
    fn refine_rejects_non_bracket() {
        let jid = id(ZeroKind::J, 0.0, 1);
        assert!(refine(Bracket { lo: 0.5, hi: 1.0 }, jid).is_err());
        assert!(refine(Bracket { lo: 3.0, hi: 2.0 }, jid).is_err());
    }

    #[test]
    fn zero_examples() {
        assert_eq!(zero(id(ZeroKind::JPrime, 0.0, 1)).unwrap().value, 0.0);
        assert!((zero(id(ZeroKind::J, 0.0, 2)).unwrap().value - 5.520078110286311).abs() < 1e-12);
        assert!(
            (zero(id(ZeroKind::YPrime, 0.0, 1)).unwrap().value - 2.197141326031017).abs() < 1e-12
        );
    }

    #[test]
    fn zeros_upto_examples() {
        let v: Vec<f64> = zeros_upto(ZeroKind::J, o(0.0), 2)
            .unwrap()
            .iter()
            .map(|r| r.value)
            .collect();
        assert!((v[0] - 2.404825557695773).abs() < 1e-12);
        assert!((v[1] - 5.520078110286311).abs() < 1e-12);
        let v: Vec<f64> = zeros_upto(ZeroKind::Y, o(0.5), 3)
            .unwrap()
            .iter()
            .map(|r| r.value)
            .collect();
        for (k, z) in v.iter().enumerate() {
            assert!((z - (2 * k + 1) as f64 * PI / 2.0).abs() < 1e-12);
        }
        let v: Vec<f64> = zeros_upto(ZeroKind::JPrime, o(0.0), 3)
            .unwrap()
            .iter()
            .map(|r| r.value)
            .collect();
        assert_eq!(v[0], 0.0);
        assert!((v[1] - 3.831705970207512).abs() < 1e-12);
        assert!((v[2] - 7.015586669815619).abs() < 1e-12);
    }

    #[test]
    fn oracle_scan_examples() {
        let z = oracle_scan(ZeroKind::J, o(0.0), 10.0, 0.001).unwrap();
        let up = zeros_upto(ZeroKind::J, o(0.0), 3).unwrap();
        assert_eq!(z.len(), 3);
        for (a, b) in z.iter().zip(&up) {
            assert!((a - b.value).abs() < 1e-9);
        }
        let z = oracle_scan(ZeroKind::Y, o(0.0), 1.0, 0.001).unwrap();
        assert_eq!(z.len(), 1);
        assert!((z[0] - 0.893576966279167).abs() < 1e-11);
        assert!(oracle_scan(ZeroKind::J, o(5.0), 1.0, 0.001)
            .unwrap()
            .is_empty());
        assert!(oracle_scan(ZeroKind::J, o(5.0), 1.0, 0.1).is_err());
    }

    #[test]
    fn table_matches_direct_enumeration_bitwise() {
        let table = ZeroTable::new();
        let short = table.zeros(ZeroKind::YPrime, o(2.7), 3).unwrap();
        let long = table.zeros(ZeroKind::YPrime, o(2.7), 8).unwrap();
        let direct = zeros_upto(ZeroKind::YPrime, o(2.7), 8).unwrap();
        assert_eq!(&long[..3], &short[..]);
        assert_eq!(long, direct);
        assert_eq!(table.zero(ZeroKind::YPrime, o(2.7), 5).unwrap(), direct[4]);
        assert_eq!(zero(id(ZeroKind::YPrime, 2.7, 8)).unwrap(), direct[7]);
    }

    #[test]
    fn large_order_first_zeros() {
        for kind in ZeroKind::ALL {
            let rec = zero(id(kind, 600.0, 1)).unwrap();
            assert!(
                rec.value > 600.0 && rec.value < 620.0,
                "{kind}: {}",
                rec.value
            );
        }
    }
}
