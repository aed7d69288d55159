use rayon::prelude::*;

use bessel_interlace::interlace::{
    self, CheckOutcome, CrossPair, Exemption, ViolationWitness, NODE_LABELS,
};
use bessel_interlace::wronskian::{self, ExtremumSource};
use bessel_interlace::zeros::{self, ZeroKind, ZeroTable};
use bessel_interlace::{Error, Order};

use crate::args::{parse_values, Command, Suite};
use crate::report::{Cell, Format, Report, Table};

/// Why a command could not produce a report.
#[derive(Debug)]
pub enum Failure {
    /// Bad flags or parameters outside the domain: exit 2.
    Usage(String),
    /// The mathematics came out negative (no witness, one ordering): exit 1.
    Negative(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_domain() {
            Failure::Usage(format!("[{}] {e}", e.code()))
        } else {
            Failure::Negative(e)
        }
    }
}

pub struct Outcome {
    pub report: Report,
    pub default_format: Format,
    /// 0 when every check passed, 1 when a violation was reported.
    pub exit: u8,
}

fn order(flag: &str, v: f64) -> Result<Order, Failure> {
    Order::new(v).map_err(|e| Failure::Usage(format!("{flag}: [{}] {e}", e.code())))
}

fn positive(flag: &str, v: f64) -> Result<f64, Failure> {
    if v.is_finite() && v > 0.0 {
        Ok(v)
    } else {
        Err(Failure::Usage(format!("{flag}: must be positive, got {v}")))
    }
}

fn rank(flag: &str, s: usize, max: usize) -> Result<usize, Failure> {
    if (1..=max).contains(&s) {
        Ok(s)
    } else {
        Err(Failure::Usage(format!(
            "{flag}: must be in 1..={max}, got {s}"
        )))
    }
}

fn orders(flag: &str, text: &str) -> Result<Vec<Order>, Failure> {
    parse_values(flag, text)
        .map_err(Failure::Usage)?
        .into_iter()
        .map(|v| order(flag, v))
        .collect()
}

pub fn run(command: Command) -> Result<Outcome, Failure> {
    match command {
        Command::Zeros { kind, nu, smax } => cmd_zeros(kind, nu, smax),
        Command::Chain { nu, eps, smax } => cmd_chain(nu, eps, smax),
        Command::Verify {
            suite,
            nu_grid,
            eps_list,
            smax,
        } => cmd_verify(suite, &nu_grid, &eps_list, smax),
        Command::Break { nu, eps, scap } => cmd_break(nu, eps, scap),
        Command::Wronskian { nu, mu, smax, xmax } => cmd_wronskian(nu, mu, smax, xmax),
        Command::Counterexample {
            eps,
            nu_list,
            s,
            pair,
        } => cmd_counterexample(eps, &nu_list, s, pair),
    }
}

fn cmd_zeros(kind: ZeroKind, nu: f64, smax: usize) -> Result<Outcome, Failure> {
    let nu = order("--nu", nu)?;
    let smax = rank("--smax", smax, zeros::S_MAX)?;
    let mut table = Table::new(
        "zeros",
        &[
            "kind",
            "nu",
            "s",
            "value",
            "bracket_lo",
            "bracket_hi",
            "residual",
        ],
    );
    for r in zeros::zeros_upto(kind, nu, smax)? {
        table.push(vec![
            kind.tag().into(),
            nu.value().into(),
            r.id.s.into(),
            r.value.into(),
            r.bracket.lo.into(),
            r.bracket.hi.into(),
            r.residual.into(),
        ]);
    }
    let mut report = Report::new("zeros")
        .param("kind", kind.tag())
        .param("nu", nu.value())
        .param("smax", smax);
    report.tables.push(table);
    report.summarize("count", smax);
    Ok(Outcome {
        report,
        default_format: Format::Csv,
        exit: 0,
    })
}

const CHAIN_COLUMNS: [&str; 19] = [
    "nu",
    "eps",
    "s",
    "jp_nu_s",
    "y_nu_s",
    "y_nueps_s",
    "yp_nu_s",
    "j_nu_s",
    "j_nueps_s",
    "jp_nu_s1",
    "gap1",
    "gap2",
    "gap3",
    "gap4",
    "gap5",
    "gap6",
    "ok",
    "first_failure",
    "exempt",
];

fn cmd_chain(nu: f64, eps: f64, smax: usize) -> Result<Outcome, Failure> {
    let nu = order("--nu", nu)?;
    let eps = positive("--eps", eps)?;
    nu.offset(eps)
        .map_err(|e| Failure::Usage(format!("--eps: nu + eps leaves the order range: {e}")))?;
    let smax = rank("--smax", smax, zeros::S_MAX - 1)?;
    let table_cache = ZeroTable::new();
    let reports = interlace::chain_reports(&table_cache, nu, eps, smax)?;
    let mut table = Table::new("chains", &CHAIN_COLUMNS);
    let mut failures = 0usize;
    let mut min_gap = f64::INFINITY;
    for r in &reports {
        let mut row: Vec<Cell> = vec![nu.value().into(), eps.into(), r.chain.s.into()];
        row.extend(r.chain.nodes.iter().map(|n| Cell::Num(n.value)));
        row.extend(r.margins.iter().map(|&g| Cell::Num(g)));
        row.push(r.ok.into());
        row.push(r.first_failure.map(gap_name).into());
        let exempt: Vec<String> = (0..6).filter(|&i| r.exempt[i]).map(gap_name).collect();
        row.push(exempt.join(" ").into());
        table.push(row);
        failures += usize::from(!r.ok);
        min_gap = r
            .margins
            .iter()
            .zip(r.exempt)
            .filter(|(_, ex)| !ex)
            .fold(min_gap, |m, (&g, _)| m.min(g));
    }
    let mut report = Report::new("chain")
        .param("nu", nu.value())
        .param("eps", eps)
        .param("smax", smax);
    report.tables.push(table);
    report.summarize("failures", failures);
    report.summarize("min_gap", min_gap);
    Ok(Outcome {
        report,
        default_format: Format::Csv,
        exit: u8::from(failures > 0),
    })
}

fn gap_name(i: usize) -> String {
    format!("{}<{}", NODE_LABELS[i], NODE_LABELS[i + 1])
}

struct Task {
    suite: Suite,
    nu: Order,
    eps: Option<f64>,
}

fn run_task(table: &ZeroTable, t: &Task, smax: usize) -> bessel_interlace::Result<CheckOutcome> {
    match (t.suite, t.eps) {
        (Suite::Theorem1, _) => interlace::check_theorem1(table, t.nu, smax),
        (Suite::Proposition, _) => interlace::check_proposition(table, t.nu, smax),
        (Suite::Theorem2, Some(eps)) => interlace::check_theorem2(table, t.nu, eps, smax),
        (Suite::DerivativeChains, Some(eps)) => {
            interlace::check_derivative_chains(table, t.nu, eps, smax)
        }
        _ => unreachable!("tasks are built with an increment exactly when the suite uses one"),
    }
}

fn cmd_verify(
    suite: Suite,
    nu_grid: &str,
    eps_list: &str,
    smax: usize,
) -> Result<Outcome, Failure> {
    let nus = orders("--nu-grid", nu_grid)?;
    let epss = parse_values("--eps-list", eps_list).map_err(Failure::Usage)?;
    for &e in &epss {
        positive("--eps-list", e)?;
    }
    let suites = suite.expand();
    if suites.contains(&Suite::DerivativeChains) {
        if let Some(e) = epss.iter().find(|&&e| e > 1.0) {
            return Err(Failure::Usage(format!(
                "--eps-list: derivative chains need eps <= 1, got {e}"
            )));
        }
    }
    for &nu in &nus {
        for &e in &epss {
            nu.offset(e).map_err(|err| {
                Failure::Usage(format!(
                    "--eps-list: nu + eps leaves the order range: {err}"
                ))
            })?;
        }
    }
    let smax = rank("--smax", smax, zeros::S_MAX - 1)?;

    let mut tasks = Vec::new();
    for &s in &suites {
        for &nu in &nus {
            if s.uses_eps() {
                tasks.extend(epss.iter().map(|&e| Task {
                    suite: s,
                    nu,
                    eps: Some(e),
                }));
            } else {
                tasks.push(Task {
                    suite: s,
                    nu,
                    eps: None,
                });
            }
        }
    }
    let table = ZeroTable::new();
    let results: Vec<_> = tasks
        .par_iter()
        .map(|t| run_task(&table, t, smax))
        .collect();

    let mut violations = Table::new(
        "violations",
        &[
            "suite",
            "relation",
            "nu",
            "eps",
            "s",
            "left",
            "left_value",
            "right",
            "right_value",
            "gap",
        ],
    );
    let mut exemptions = Table::new(
        "exemptions",
        &[
            "suite", "relation", "nu", "eps", "s", "left", "right", "gap",
        ],
    );
    for (task, result) in tasks.iter().zip(results) {
        let outcome = result?;
        let name = task.suite.name();
        for v in &outcome.violations {
            violations.push(violation_row(name, v));
        }
        for e in &outcome.exemptions {
            exemptions.push(exemption_row(name, e));
        }
    }
    let n_viol = violations.rows.len();
    let mut report = Report::new("verify")
        .param("suite", suite.name())
        .param("grid", nu_grid)
        .param("eps_list", eps_list)
        .param("smax", smax);
    report.summarize("checks", tasks.len());
    report.summarize("violations", n_viol);
    report.summarize("exemptions", exemptions.rows.len());
    report.tables.push(violations);
    report.tables.push(exemptions);
    Ok(Outcome {
        report,
        default_format: Format::Json,
        exit: u8::from(n_viol > 0),
    })
}

fn violation_row(suite: &str, v: &ViolationWitness) -> Vec<Cell> {
    vec![
        suite.into(),
        v.relation.clone().into(),
        v.nu.into(),
        v.eps.into(),
        v.s.into(),
        v.left_label.clone().into(),
        v.left_value.into(),
        v.right_label.clone().into(),
        v.right_value.into(),
        v.gap().into(),
    ]
}

fn exemption_row(suite: &str, e: &Exemption) -> Vec<Cell> {
    vec![
        suite.into(),
        e.relation.clone().into(),
        e.nu.into(),
        e.eps.into(),
        e.s.into(),
        e.left_label.clone().into(),
        e.right_label.clone().into(),
        e.gap.into(),
    ]
}

fn cmd_break(nu: f64, eps: f64, scap: usize) -> Result<Outcome, Failure> {
    let nu = order("--nu", nu)?;
    let eps = positive("--eps", eps)?;
    if eps <= 1.0 {
        return Err(Failure::Usage(format!(
            "--eps: the chain holds for eps <= 1; a breaking search needs eps > 1, got {eps}"
        )));
    }
    nu.offset(eps)
        .map_err(|e| Failure::Usage(format!("--eps: nu + eps leaves the order range: {e}")))?;
    let scap = rank("--scap", scap, zeros::S_MAX)?;
    let w = interlace::find_breaking(nu, eps, scap)?;
    let mut table = Table::new(
        "witness",
        &[
            "nu", "eps", "s", "y_label", "y_value", "j_label", "j_value", "excess",
        ],
    );
    table.push(vec![
        w.nu.into(),
        w.eps.into(),
        w.s.into(),
        w.left_label.clone().into(),
        w.left_value.into(),
        w.right_label.clone().into(),
        w.right_value.into(),
        (w.left_value - w.right_value).into(),
    ]);
    let mut report = Report::new("break")
        .param("nu", nu.value())
        .param("eps", eps)
        .param("scap", scap);
    report.tables.push(table);
    report.summarize("s", w.s);
    Ok(Outcome {
        report,
        default_format: Format::Csv,
        exit: 0,
    })
}

fn cmd_wronskian(nu: f64, mu: f64, smax: usize, xmax: f64) -> Result<Outcome, Failure> {
    let nu_o = order("--nu", nu)?;
    let mu_o = order("--mu", mu)?;
    if nu == mu {
        return Err(Failure::Usage(format!(
            "--mu: must differ from --nu (both {nu})"
        )));
    }
    let smax = rank("--smax", smax, zeros::S_MAX)?;
    let xmax = positive("--xmax", xmax)?;
    let profile = wronskian::profile_extrema(nu_o, mu_o, smax)?;
    let first_zero = wronskian::has_positive_zero(nu_o, mu_o, xmax)?;
    let mut table = Table::new("extrema", &["x", "w", "source", "s"]);
    for p in &profile.samples {
        let source = match p.source {
            ExtremumSource::JZero => "j_nu",
            ExtremumSource::YZero => "y_mu",
        };
        table.push(vec![p.x.into(), p.w.into(), source.into(), p.s.into()]);
    }
    let mut report = Report::new("wronskian")
        .param("nu", nu)
        .param("mu", mu)
        .param("smax", smax)
        .param("xmax", xmax);
    report.tables.push(table);
    report.summarize("all_same_sign", profile.all_same_sign);
    report.summarize("min_abs", profile.min_abs);
    report.summarize("first_zero", first_zero);
    Ok(Outcome {
        report,
        default_format: Format::Csv,
        exit: 0,
    })
}

fn cmd_counterexample(
    eps: f64,
    nu_list: &str,
    s: usize,
    pair: CrossPair,
) -> Result<Outcome, Failure> {
    let eps = positive("--eps", eps)?;
    if eps > 1.0 {
        return Err(Failure::Usage(format!(
            "--eps: must be at most 1, got {eps}"
        )));
    }
    let nus = orders("--nu-list", nu_list)?;
    for &nu in &nus {
        nu.offset(eps)
            .map_err(|e| Failure::Usage(format!("--eps: nu + eps leaves the order range: {e}")))?;
    }
    let s = rank("--s", s, zeros::S_MAX)?;
    let table = ZeroTable::new();
    let diffs: Vec<_> = nus
        .par_iter()
        .map(|&nu| pair.difference(&table, nu, eps, s))
        .collect::<bessel_interlace::Result<_>>()?;

    let (left_kind, right_kind) = match pair {
        CrossPair::JPrimeVsY => (ZeroKind::JPrime, ZeroKind::Y),
        CrossPair::YPrimeVsJ => (ZeroKind::YPrime, ZeroKind::J),
    };
    let mut rows = Table::new(
        "orders",
        &[
            "nu",
            "left",
            "left_value",
            "right",
            "right_value",
            "difference",
            "ordering",
        ],
    );
    for (&nu, &d) in nus.iter().zip(&diffs) {
        let shifted = nu.offset(eps)?;
        let left = table.value(left_kind, shifted, s)?;
        let right = table.value(right_kind, nu, s)?;
        let ordering = if d > interlace::strict_tol(right) {
            "above"
        } else if d < -interlace::strict_tol(right) {
            "below"
        } else {
            "tied"
        };
        rows.push(vec![
            nu.value().into(),
            format!("{}_{{{},{}}}", left_kind.symbol(), shifted.value(), s).into(),
            left.into(),
            format!("{}_{{{},{}}}", right_kind.symbol(), nu.value(), s).into(),
            right.into(),
            d.into(),
            ordering.into(),
        ]);
    }
    let mut report = Report::new("counterexample")
        .param("pair", pair.tag())
        .param("eps", eps)
        .param("nu_list", nu_list)
        .param("s", s);
    report.tables.push(rows);
    let exit = match interlace::counterexample_scan(&table, pair, eps, &nus, s) {
        Ok((above, below)) => {
            report.summarize("above_nu", above.nu);
            report.summarize("below_nu", below.nu);
            let crossover = crossover_between(&table, pair, eps, s, &nus, &diffs)?;
            report.summarize("crossover_nu", crossover);
            0
        }
        Err(e @ Error::OnlyOneOrdering { .. }) => {
            report.summarize("above_nu", Cell::Missing);
            report.summarize("below_nu", Cell::Missing);
            report.summarize("crossover_nu", Cell::Missing);
            report.summarize("error", format!("[{}] {e}", e.code()));
            1
        }
        Err(e) => return Err(e.into()),
    };
    Ok(Outcome {
        report,
        default_format: Format::Csv,
        exit,
    })
}

/// Bisects the first sign change between neighbouring list entries.
fn crossover_between(
    table: &ZeroTable,
    pair: CrossPair,
    eps: f64,
    s: usize,
    nus: &[Order],
    diffs: &[f64],
) -> Result<Option<f64>, Failure> {
    for i in 1..nus.len() {
        if diffs[i - 1] != 0.0 && diffs[i] != 0.0 && (diffs[i - 1] > 0.0) != (diffs[i] > 0.0) {
            let (a, b) = if nus[i - 1].value() < nus[i].value() {
                (nus[i - 1], nus[i])
            } else {
                (nus[i], nus[i - 1])
            };
            return Ok(Some(interlace::locate_crossover(
                table, pair, eps, s, a, b, 1e-10,
            )?));
        }
    }
    Ok(None)
}
