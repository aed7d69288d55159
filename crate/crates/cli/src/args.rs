use clap::{Args, Parser, Subcommand, ValueEnum};

use bessel_interlace::interlace::{CrossPair, DEFAULT_S_CAP};
use bessel_interlace::zeros::ZeroKind;

use crate::report::Format;

#[derive(Debug, Parser)]
#[command(
    name = "bessel-interlace",
    version,
    about = "Zeros of Bessel functions and the interlacing inequalities between them",
    allow_negative_numbers = true
)]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Global {
    /// Output format (each command has its own default)
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,

    /// Write the report to this file instead of standard output
    #[arg(long, global = true)]
    pub output: Option<std::path::PathBuf>,

    /// Worker threads for sweeps; BESSEL_INTERLACE_THREADS takes precedence
    #[arg(long, global = true)]
    pub threads: Option<usize>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Tabulate the first zeros of J, Y, J' or Y'
    #[command(allow_negative_numbers = true)]
    Zeros {
        #[arg(long, value_parser = parse_kind)]
        kind: ZeroKind,
        #[arg(long)]
        nu: f64,
        #[arg(long, default_value_t = 10)]
        smax: usize,
    },
    /// Check the seven-node chain for s = 1..smax
    #[command(allow_negative_numbers = true)]
    Chain {
        #[arg(long)]
        nu: f64,
        #[arg(long)]
        eps: f64,
        #[arg(long, default_value_t = 10)]
        smax: usize,
    },
    /// Run interlacing sweeps over a grid of orders
    #[command(allow_negative_numbers = true)]
    Verify {
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
        /// Orders as lo:hi:step (inclusive) or a comma-separated list
        #[arg(long, default_value = "0:10:0.5")]
        nu_grid: String,
        #[arg(long, default_value = "0.25,0.5,0.75,1")]
        eps_list: String,
        #[arg(long, default_value_t = 20)]
        smax: usize,
    },
    /// Find the first rank where y_{nu+eps,s} exceeds j_{nu,s} (eps > 1)
    #[command(allow_negative_numbers = true)]
    Break {
        #[arg(long)]
        nu: f64,
        #[arg(long)]
        eps: f64,
        #[arg(long, default_value_t = DEFAULT_S_CAP)]
        scap: usize,
    },
    /// Profile the cross-order Wronskian at its extremal points
    #[command(allow_negative_numbers = true)]
    Wronskian {
        #[arg(long)]
        nu: f64,
        #[arg(long)]
        mu: f64,
        #[arg(long, default_value_t = 10)]
        smax: usize,
        #[arg(long, default_value_t = 60.0)]
        xmax: f64,
    },
    /// Look for both orderings of a shifted derivative zero against another zero
    #[command(allow_negative_numbers = true)]
    Counterexample {
        #[arg(long)]
        eps: f64,
        /// Orders as lo:hi:step (inclusive) or a comma-separated list
        #[arg(long)]
        nu_list: String,
        #[arg(long, default_value_t = 1)]
        s: usize,
        /// jp-y compares j'_{nu+eps,s} with y_{nu,s}; yp-j compares y'_{nu+eps,s} with j_{nu,s}
        #[arg(long, default_value = "jp-y", value_parser = parse_pair)]
        pair: CrossPair,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Theorem1,
    Theorem2,
    Proposition,
    DerivativeChains,
    All,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::Theorem1 => "theorem1",
            Suite::Theorem2 => "theorem2",
            Suite::Proposition => "proposition",
            Suite::DerivativeChains => "derivative-chains",
            Suite::All => "all",
        }
    }

    pub fn expand(self) -> Vec<Suite> {
        match self {
            Suite::All => vec![
                Suite::Theorem1,
                Suite::Theorem2,
                Suite::Proposition,
                Suite::DerivativeChains,
            ],
            s => vec![s],
        }
    }

    pub fn uses_eps(self) -> bool {
        matches!(self, Suite::Theorem2 | Suite::DerivativeChains)
    }
}

fn parse_kind(s: &str) -> Result<ZeroKind, String> {
    s.parse()
        .map_err(|e: bessel_interlace::Error| e.to_string())
}

fn parse_pair(s: &str) -> Result<CrossPair, String> {
    s.parse()
        .map_err(|e: bessel_interlace::Error| e.to_string())
}

/// Parses `lo:hi:step` (endpoints inclusive within half a step) or `a,b,c`.
pub fn parse_values(flag: &str, text: &str) -> Result<Vec<f64>, String> {
    let num = |t: &str| -> Result<f64, String> {
        let v: f64 = t
            .trim()
            .parse()
            .map_err(|_| format!("{flag}: '{t}' is not a number"))?;
        if v.is_finite() {
            Ok(v)
        } else {
            Err(format!("{flag}: '{t}' is not finite"))
        }
    };
    if text.contains(':') {
        let parts: Vec<&str> = text.split(':').collect();
        let [lo, hi, step] = parts[..] else {
            return Err(format!("{flag}: expected lo:hi:step, got '{text}'"));
        };
        let (lo, hi, step) = (num(lo)?, num(hi)?, num(step)?);
        if hi < lo {
            return Err(format!("{flag}: hi {hi} is below lo {lo}"));
        }
        if step <= 0.0 {
            return Err(format!("{flag}: step must be positive, got {step}"));
        }
        let n = ((hi - lo) / step + 0.5).floor();
        if n > 1e6 {
            return Err(format!("{flag}: grid has more than a million points"));
        }
        Ok((0..=n as usize).map(|i| lo + i as f64 * step).collect())
    } else {
        let values = text.split(',').map(num).collect::<Result<Vec<_>, _>>()?;
        if values.is_empty() {
            return Err(format!("{flag}: empty list"));
        }
        Ok(values)
    }
}
