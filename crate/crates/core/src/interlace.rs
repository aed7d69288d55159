//! Ordering chains between Bessel zeros.
//!
//! The central object is the seven-node chain
//!
//! ```text
//! j'_{nu,s} < y_{nu,s} < y_{nu+eps,s} < y'_{nu,s} < j_{nu,s} < j_{nu+eps,s} < j'_{nu,s+1}
//! ```
//!
//! which holds for `nu >= 0`, `0 < eps <= 1` and fails for some `s` once `eps > 1`.
//! The module also checks the classical pairwise interlacings, the two auxiliary
//! inequalities `j_{nu+1,s} < j'_{nu,s+1}`, `y_{nu+1,s} < y'_{nu,s}`, and the derivative
//! chains in `nu + eps`.
//!
//! At `nu = 0` the identities `J'_0 = -J_1` and `Y'_0 = -Y_1` turn some strict
//! inequalities into equalities (for instance `y'_{0,s} = y_{1,s}`). Such pairs are
//! reported as exemptions when the gap is within [`EQ_TOL`], never as violations.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::special::Order;
use crate::zeros::{ZeroIter, ZeroKind, ZeroTable};

/// Gaps at or below this size are treated as equalities where an exemption applies.
pub const EQ_TOL: f64 = 1e-10;

/// Default rank cap for [`find_breaking`].
pub const DEFAULT_S_CAP: usize = 500;

/// Smallest gap accepted as a strict inequality `left < right`.
pub fn strict_tol(right: f64) -> f64 {
    (1e-12 * right.abs()).max(1e-9)
}

/// Symbolic labels of the seven chain nodes, in chain order.
pub const NODE_LABELS: [&str; 7] = [
    "j'_{nu,s}",
    "y_{nu,s}",
    "y_{nu+eps,s}",
    "y'_{nu,s}",
    "j_{nu,s}",
    "j_{nu+eps,s}",
    "j'_{nu,s+1}",
];

/// Adjacent-pair positions that become equalities at `nu = 0, eps = 1`:
/// `y_{1,s} = y'_{0,s}` and `j_{1,s} = j'_{0,s+1}`.
const CHAIN_EQUALITY_PAIRS: [usize; 2] = [2, 5];

/// A concrete failure (or, for counterexample scans, a concrete ordering) of `left < right`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ViolationWitness {
    pub relation: String,
    pub nu: f64,
    pub eps: f64,
    pub s: usize,
    pub left_label: String,
    pub right_label: String,
    pub left_value: f64,
    pub right_value: f64,
}

impl ViolationWitness {
    pub fn gap(&self) -> f64 {
        self.right_value - self.left_value
    }
}

/// A pair that met the `nu = 0` equality exemption instead of the strict inequality.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Exemption {
    pub relation: String,
    pub nu: f64,
    pub eps: f64,
    pub s: usize,
    pub left_label: String,
    pub right_label: String,
    pub gap: f64,
}

/// Result of a sweep: violations plus the exemptions that were applied.
#[derive(Debug, Clone, Default, PartialEq, Serialize)]
pub struct CheckOutcome {
    pub violations: Vec<ViolationWitness>,
    pub exemptions: Vec<Exemption>,
}

impl CheckOutcome {
    pub fn holds(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn merge(&mut self, other: CheckOutcome) {
        self.violations.extend(other.violations);
        self.exemptions.extend(other.exemptions);
    }
}

fn label(kind: ZeroKind, nu: f64, s: usize) -> String {
    format!("{}_{{{},{}}}", kind.symbol(), nu, s)
}

/// One side of a comparison.
#[derive(Debug, Clone)]
struct Term {
    label: String,
    value: f64,
}

/// Records pairwise comparisons for one relation.
struct Recorder<'a> {
    relation: &'a str,
    nu: f64,
    eps: f64,
    allow_equal: bool,
    out: CheckOutcome,
}

impl<'a> Recorder<'a> {
    fn new(relation: &'a str, nu: f64, eps: f64, allow_equal: bool) -> Self {
        Recorder {
            relation,
            nu,
            eps,
            allow_equal,
            out: CheckOutcome::default(),
        }
    }

    /// Checks `left < right`.
    fn less(&mut self, s: usize, left: &Term, right: &Term) {
        let gap = right.value - left.value;
        if gap > strict_tol(right.value) {
            return;
        }
        if self.allow_equal && gap.abs() <= EQ_TOL {
            self.exempt(s, left, right, gap);
        } else {
            self.violate(s, left, right);
        }
    }

    /// Checks `left <= right`.
    fn less_eq(&mut self, s: usize, left: &Term, right: &Term) {
        let gap = right.value - left.value;
        if gap > strict_tol(right.value) {
            return;
        }
        if gap >= -EQ_TOL {
            self.exempt(s, left, right, gap);
        } else {
            self.violate(s, left, right);
        }
    }

    fn exempt(&mut self, s: usize, left: &Term, right: &Term, gap: f64) {
        self.out.exemptions.push(Exemption {
            relation: self.relation.to_string(),
            nu: self.nu,
            eps: self.eps,
            s,
            left_label: left.label.clone(),
            right_label: right.label.clone(),
            gap,
        });
    }

    fn violate(&mut self, s: usize, left: &Term, right: &Term) {
        self.out.violations.push(ViolationWitness {
            relation: self.relation.to_string(),
            nu: self.nu,
            eps: self.eps,
            s,
            left_label: left.label.clone(),
            right_label: right.label.clone(),
            left_value: left.value,
            right_value: right.value,
        });
    }
}

/// Fetches labelled zeros from a table.
struct Zeros<'a> {
    table: &'a ZeroTable,
}

impl Zeros<'_> {
    fn series(&self, kind: ZeroKind, nu: Order, s_max: usize) -> Result<Vec<Term>> {
        Ok(self
            .table
            .zeros(kind, nu, s_max)?
            .into_iter()
            .map(|r| Term {
                label: label(kind, nu.value(), r.id.s),
                value: r.value,
            })
            .collect())
    }
}

fn check_increment(eps: f64) -> Result<()> {
    if eps.is_finite() && eps > 0.0 {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!(
            "order increment eps must be positive, got {eps}"
        )))
    }
}

fn check_rank(name: &str, s: usize, cap: usize) -> Result<()> {
    if s == 0 || s > cap {
        return Err(Error::InvalidParameter(format!(
            "{name} must be in 1..={cap}, got {s}"
        )));
    }
    Ok(())
}

/// A labelled chain node.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ChainNode {
    pub label: &'static str,
    pub value: f64,
}

/// The seven ordered nodes for one `(nu, eps, s)`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct InterlaceChain {
    pub nu: Order,
    pub eps: f64,
    pub s: usize,
    pub nodes: [ChainNode; 7],
}

impl InterlaceChain {
    pub fn values(&self) -> [f64; 7] {
        std::array::from_fn(|i| self.nodes[i].value)
    }

    fn equality_exempt(&self) -> bool {
        self.nu.value() == 0.0 && self.eps == 1.0
    }
}

/// Verdict on one chain.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ChainReport {
    pub chain: InterlaceChain,
    pub ok: bool,
    /// Index `i` of the first failing pair `(nodes[i], nodes[i+1])`.
    pub first_failure: Option<usize>,
    /// `nodes[i+1] - nodes[i]`.
    pub margins: [f64; 6],
    /// Pairs accepted through the `nu = 0, eps = 1` equality exemption.
    pub exempt: [bool; 6],
}

/// Computes the seven chain nodes from the zero table.
pub fn build_chain(table: &ZeroTable, nu: Order, eps: f64, s: usize) -> Result<InterlaceChain> {
    check_increment(eps)?;
    check_rank("s", s, crate::zeros::S_MAX - 1)?;
    let shifted = nu.offset(eps)?;
    use ZeroKind::*;
    let values = [
        table.value(JPrime, nu, s)?,
        table.value(Y, nu, s)?,
        table.value(Y, shifted, s)?,
        table.value(YPrime, nu, s)?,
        table.value(J, nu, s)?,
        table.value(J, shifted, s)?,
        table.value(JPrime, nu, s + 1)?,
    ];
    Ok(InterlaceChain {
        nu,
        eps,
        s,
        nodes: std::array::from_fn(|i| ChainNode {
            label: NODE_LABELS[i],
            value: values[i],
        }),
    })
}

/// Classifies every adjacent gap of `chain`.
pub fn check_chain(chain: &InterlaceChain) -> ChainReport {
    let v = chain.values();
    let margins: [f64; 6] = std::array::from_fn(|i| v[i + 1] - v[i]);
    let mut exempt = [false; 6];
    let mut first_failure = None;
    for (i, &gap) in margins.iter().enumerate() {
        if gap > strict_tol(v[i + 1]) {
            continue;
        }
        if chain.equality_exempt() && CHAIN_EQUALITY_PAIRS.contains(&i) && gap.abs() <= EQ_TOL {
            exempt[i] = true;
            continue;
        }
        if first_failure.is_none() {
            first_failure = Some(i);
        }
    }
    ChainReport {
        chain: chain.clone(),
        ok: first_failure.is_none(),
        first_failure,
        margins,
        exempt,
    }
}

/// Builds and checks the chains `s = 1..=s_max`.
pub fn chain_reports(
    table: &ZeroTable,
    nu: Order,
    eps: f64,
    s_max: usize,
) -> Result<Vec<ChainReport>> {
    (1..=s_max)
        .map(|s| build_chain(table, nu, eps, s).map(|c| check_chain(&c)))
        .collect()
}

/// The unified chain for `s = 1..=s_max` as a sweep outcome.
pub fn check_theorem2(
    table: &ZeroTable,
    nu: Order,
    eps: f64,
    s_max: usize,
) -> Result<CheckOutcome> {
    let relation = "unified chain";
    let mut out = CheckOutcome::default();
    for report in chain_reports(table, nu, eps, s_max)? {
        let c = &report.chain;
        for i in 0..6 {
            let left = &c.nodes[i];
            let right = &c.nodes[i + 1];
            let concrete = |k: usize| concrete_chain_label(k, c);
            if report.exempt[i] {
                out.exemptions.push(Exemption {
                    relation: relation.into(),
                    nu: nu.value(),
                    eps,
                    s: c.s,
                    left_label: concrete(i),
                    right_label: concrete(i + 1),
                    gap: report.margins[i],
                });
            } else if report.margins[i] <= strict_tol(right.value) {
                out.violations.push(ViolationWitness {
                    relation: relation.into(),
                    nu: nu.value(),
                    eps,
                    s: c.s,
                    left_label: concrete(i),
                    right_label: concrete(i + 1),
                    left_value: left.value,
                    right_value: right.value,
                });
            }
        }
    }
    Ok(out)
}

fn concrete_chain_label(i: usize, c: &InterlaceChain) -> String {
    use ZeroKind::*;
    let nu = c.nu.value();
    let shifted = nu + c.eps;
    match i {
        0 => label(JPrime, nu, c.s),
        1 => label(Y, nu, c.s),
        2 => label(Y, shifted, c.s),
        3 => label(YPrime, nu, c.s),
        4 => label(J, nu, c.s),
        5 => label(J, shifted, c.s),
        _ => label(JPrime, nu, c.s + 1),
    }
}

/// The classical interlacings: `j_nu` with `j_{nu+1}`, `y_nu` with `y_{nu+1}`,
/// the mixed chain `nu <= j'_{nu,1} < y_{nu,1} < y'_{nu,1} < j_{nu,1} < j'_{nu,2} < ...`,
/// and the derivative interlacings `j'_nu` with `j'_{nu+1}`, `y'_nu` with `y'_{nu+1}`.
pub fn check_theorem1(table: &ZeroTable, nu: Order, s_max: usize) -> Result<CheckOutcome> {
    check_rank("s_max", s_max, crate::zeros::S_MAX - 1)?;
    use ZeroKind::*;
    let z = Zeros { table };
    let up = nu.offset(1.0)?;
    let allow = nu.value() == 0.0;
    let mut out = CheckOutcome::default();

    let pairs = [
        ("j_nu / j_nu+1 interlacing", J, J),
        ("y_nu / y_nu+1 interlacing", Y, Y),
        ("j'_nu / j'_nu+1 interlacing", JPrime, JPrime),
        ("y'_nu / y'_nu+1 interlacing", YPrime, YPrime),
    ];
    for (relation, kind_lo, kind_hi) in pairs {
        let lo = z.series(kind_lo, nu, s_max + 1)?;
        let hi = z.series(kind_hi, up, s_max)?;
        let mut rec = Recorder::new(relation, nu.value(), 1.0, allow);
        for s in 1..=s_max {
            rec.less(s, &lo[s - 1], &hi[s - 1]);
            rec.less(s, &hi[s - 1], &lo[s]);
        }
        out.merge(rec.out);
    }

    let jp = z.series(JPrime, nu, s_max + 1)?;
    let y = z.series(Y, nu, s_max)?;
    let yp = z.series(YPrime, nu, s_max)?;
    let j = z.series(J, nu, s_max)?;
    let mut rec = Recorder::new("mixed chain", nu.value(), 0.0, allow);
    let order = Term {
        label: "nu".into(),
        value: nu.value(),
    };
    rec.less_eq(1, &order, &jp[0]);
    for s in 1..=s_max {
        let i = s - 1;
        rec.less(s, &jp[i], &y[i]);
        rec.less(s, &y[i], &yp[i]);
        rec.less(s, &yp[i], &j[i]);
        rec.less(s, &j[i], &jp[i + 1]);
    }
    out.merge(rec.out);
    Ok(out)
}

/// `j_{nu+1,s} < j'_{nu,s+1}` and `y_{nu+1,s} < y'_{nu,s}` for `s = 1..=s_max`.
pub fn check_proposition(table: &ZeroTable, nu: Order, s_max: usize) -> Result<CheckOutcome> {
    check_rank("s_max", s_max, crate::zeros::S_MAX - 1)?;
    use ZeroKind::*;
    let z = Zeros { table };
    let up = nu.offset(1.0)?;
    let allow = nu.value() == 0.0;
    let j_up = z.series(J, up, s_max)?;
    let jp = z.series(JPrime, nu, s_max + 1)?;
    let y_up = z.series(Y, up, s_max)?;
    let yp = z.series(YPrime, nu, s_max)?;
    let mut out = CheckOutcome::default();
    let mut rec = Recorder::new("j_{nu+1,s} < j'_{nu,s+1}", nu.value(), 1.0, allow);
    for s in 1..=s_max {
        rec.less(s, &j_up[s - 1], &jp[s]);
    }
    out.merge(rec.out);
    let mut rec = Recorder::new("y_{nu+1,s} < y'_{nu,s}", nu.value(), 1.0, allow);
    for s in 1..=s_max {
        rec.less(s, &y_up[s - 1], &yp[s - 1]);
    }
    out.merge(rec.out);
    Ok(out)
}

/// `j'_{nu,s} < j'_{nu+eps,s} < j'_{nu,s+1}` and the same for `y'`, `0 < eps <= 1`.
pub fn check_derivative_chains(
    table: &ZeroTable,
    nu: Order,
    eps: f64,
    s_max: usize,
) -> Result<CheckOutcome> {
    check_increment(eps)?;
    if eps > 1.0 {
        return Err(Error::InvalidParameter(format!(
            "derivative chains are claimed for 0 < eps <= 1, got {eps}"
        )));
    }
    check_rank("s_max", s_max, crate::zeros::S_MAX - 1)?;
    use ZeroKind::*;
    let z = Zeros { table };
    let shifted = nu.offset(eps)?;
    let allow = nu.value() == 0.0 && eps == 1.0;
    let mut out = CheckOutcome::default();
    for (relation, kind) in [
        ("j'_nu / j'_nu+eps interlacing", JPrime),
        ("y'_nu / y'_nu+eps interlacing", YPrime),
    ] {
        let lo = z.series(kind, nu, s_max + 1)?;
        let hi = z.series(kind, shifted, s_max)?;
        let mut rec = Recorder::new(relation, nu.value(), eps, allow);
        for s in 1..=s_max {
            rec.less(s, &lo[s - 1], &hi[s - 1]);
            rec.less(s, &hi[s - 1], &lo[s]);
        }
        out.merge(rec.out);
    }
    Ok(out)
}

/// Smallest `s <= s_cap` with `y_{nu+eps,s} > j_{nu,s}`, the failure that breaks the
/// unified chain for `eps > 1`.
pub fn find_breaking(nu: Order, eps: f64, s_cap: usize) -> Result<ViolationWitness> {
    check_increment(eps)?;
    if eps <= 1.0 {
        return Err(Error::InvalidParameter(format!(
            "breaking search needs eps > 1, got {eps}"
        )));
    }
    check_rank("s_cap", s_cap, crate::zeros::S_MAX)?;
    let shifted = nu.offset(eps)?;
    let ys = ZeroIter::new(ZeroKind::Y, shifted);
    let js = ZeroIter::new(ZeroKind::J, nu);
    for (y, j) in ys.zip(js).take(s_cap) {
        let (y, j) = (y?, j?);
        if y.value > j.value {
            return Ok(ViolationWitness {
                relation: "y_{nu+eps,s} < j_{nu,s}".into(),
                nu: nu.value(),
                eps,
                s: y.id.s,
                left_label: label(ZeroKind::Y, shifted.value(), y.id.s),
                right_label: label(ZeroKind::J, nu.value(), j.id.s),
                left_value: y.value,
                right_value: j.value,
            });
        }
    }
    Err(Error::NotFoundWithinCap {
        nu: nu.value(),
        eps,
        s_cap,
    })
}

/// The two comparisons that admit no uniform ordering for `0 < eps <= 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum CrossPair {
    /// `j'_{nu+eps,s}` against `y_{nu,s}`.
    JPrimeVsY,
    /// `y'_{nu+eps,s}` against `j_{nu,s}`.
    YPrimeVsJ,
}

impl CrossPair {
    pub const ALL: [CrossPair; 2] = [CrossPair::JPrimeVsY, CrossPair::YPrimeVsJ];

    fn kinds(self) -> (ZeroKind, ZeroKind) {
        match self {
            CrossPair::JPrimeVsY => (ZeroKind::JPrime, ZeroKind::Y),
            CrossPair::YPrimeVsJ => (ZeroKind::YPrime, ZeroKind::J),
        }
    }

    pub fn relation(self) -> &'static str {
        match self {
            CrossPair::JPrimeVsY => "j'_{nu+eps,s} vs y_{nu,s}",
            CrossPair::YPrimeVsJ => "y'_{nu+eps,s} vs j_{nu,s}",
        }
    }

    pub fn tag(self) -> &'static str {
        match self {
            CrossPair::JPrimeVsY => "jp-y",
            CrossPair::YPrimeVsJ => "yp-j",
        }
    }

    /// `left - right`, i.e. the shifted derivative zero minus the unshifted zero.
    pub fn difference(self, table: &ZeroTable, nu: Order, eps: f64, s: usize) -> Result<f64> {
        let w = self.witness(table, nu, eps, s)?;
        Ok(w.left_value - w.right_value)
    }

    fn witness(self, table: &ZeroTable, nu: Order, eps: f64, s: usize) -> Result<ViolationWitness> {
        let (lk, rk) = self.kinds();
        let shifted = nu.offset(eps)?;
        Ok(ViolationWitness {
            relation: self.relation().into(),
            nu: nu.value(),
            eps,
            s,
            left_label: label(lk, shifted.value(), s),
            right_label: label(rk, nu.value(), s),
            left_value: table.value(lk, shifted, s)?,
            right_value: table.value(rk, nu, s)?,
        })
    }
}

impl fmt::Display for CrossPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for CrossPair {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "jp-y" => Ok(CrossPair::JPrimeVsY),
            "yp-j" => Ok(CrossPair::YPrimeVsJ),
            other => Err(Error::InvalidParameter(format!(
                "unknown pair '{other}' (expected jp-y or yp-j)"
            ))),
        }
    }
}

/// Searches `nu_list` for both orderings of `pair` at rank `s`.
///
/// Returns `(above, below)`: the first order where the shifted derivative zero lies
/// above the other zero, and the first where it lies below.
pub fn counterexample_scan(
    table: &ZeroTable,
    pair: CrossPair,
    eps: f64,
    nu_list: &[Order],
    s: usize,
) -> Result<(ViolationWitness, ViolationWitness)> {
    check_increment(eps)?;
    if eps > 1.0 {
        return Err(Error::InvalidParameter(format!(
            "counterexample scan is for 0 < eps <= 1, got {eps}"
        )));
    }
    if nu_list.is_empty() {
        return Err(Error::InvalidParameter("nu list is empty".into()));
    }
    check_rank("s", s, crate::zeros::S_MAX)?;
    let mut above = None;
    let mut below = None;
    for &nu in nu_list {
        let w = pair.witness(table, nu, eps, s)?;
        let gap = w.right_value - w.left_value;
        if gap < -strict_tol(w.right_value) && above.is_none() {
            above = Some(w);
        } else if gap > strict_tol(w.right_value) && below.is_none() {
            below = Some(w);
        }
        if above.is_some() && below.is_some() {
            break;
        }
    }
    match (above, below) {
        (Some(a), Some(b)) => Ok((a, b)),
        _ => Err(Error::OnlyOneOrdering {
            relation: pair.relation().into(),
        }),
    }
}

/// Bisects on the order for a sign change of `pair.difference` between `nu_lo` and `nu_hi`.
pub fn locate_crossover(
    table: &ZeroTable,
    pair: CrossPair,
    eps: f64,
    s: usize,
    nu_lo: Order,
    nu_hi: Order,
    nu_tol: f64,
) -> Result<f64> {
    let (mut lo, mut hi) = (nu_lo.value(), nu_hi.value());
    let mut d_lo = pair.difference(table, nu_lo, eps, s)?;
    let d_hi = pair.difference(table, nu_hi, eps, s)?;
    if d_lo.signum() == d_hi.signum() {
        return Err(Error::OnlyOneOrdering {
            relation: pair.relation().into(),
        });
    }
    while hi - lo > nu_tol.max(1e-12) {
        let mid = 0.5 * (lo + hi);
        let d = pair.difference(table, Order::new(mid)?, eps, s)?;
        if d.signum() == d_lo.signum() {
            lo = mid;
            d_lo = d;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}
