//! `ellint`: evaluate generalized elliptic integrals and the Ramanujan
//! function, tabulate the sharp envelope, run the verification catalogue and
//! exhibit sharpness witnesses.

mod output;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use ellint_core::verify::{self, Level};
use ellint_core::{
    elle_gen, ellk_gen, envelope_scan, eta, r_def, ratio_rho, sharp_constants, sharpness_scan, xi, EvalConfig,
    ModulusPoint, Param, RArgument, Side,
};
use output::{Cell, OutputFormat, Table};
use std::io::Write;
use std::process::ExitCode;

#[derive(Debug, Parser)]
#[command(
    name = "ellint",
    version,
    about = "Generalized elliptic integrals and their sharp logarithmic bounds"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Plain)]
    format: OutputFormat,

    /// Relative tolerance for series truncation.
    #[arg(long, global = true, env = "ELLINT_REL_TOL")]
    rel_tol: Option<f64>,

    /// Maximum number of series terms.
    #[arg(long, global = true, env = "ELLINT_MAX_TERMS")]
    max_terms: Option<usize>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate one function: `ellk|elle|rho <a> <r>` or `ramanujan|xi|eta <x>`.
    #[command(allow_negative_numbers = true)]
    Eval {
        #[arg(value_enum)]
        function: Function,
        #[arg(num_args = 1..=2, required = true)]
        args: Vec<f64>,
    },
    /// Tabulate the envelope at `n` moduli spaced linearly in `[r_min, r_max]`.
    #[command(allow_negative_numbers = true)]
    Bounds { a: f64, r_min: f64, r_max: f64, n: usize },
    /// Run the verification catalogue.
    Verify {
        #[arg(long, value_enum, default_value_t = LevelArg::Full)]
        level: LevelArg,
    },
    /// Witnesses that `alpha0 + epsilon` and `beta0 - epsilon` both fail.
    #[command(allow_negative_numbers = true)]
    Sharpness { a: f64, epsilon: f64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Function {
    Ellk,
    Elle,
    Ramanujan,
    Xi,
    Eta,
    Rho,
}

impl Function {
    fn name(self) -> &'static str {
        match self {
            Function::Ellk => "ellk",
            Function::Elle => "elle",
            Function::Ramanujan => "ramanujan",
            Function::Xi => "xi",
            Function::Eta => "eta",
            Function::Rho => "rho",
        }
    }

    fn takes_modulus(self) -> bool {
        matches!(self, Function::Ellk | Function::Elle | Function::Rho)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum LevelArg {
    Quick,
    Full,
}

impl From<LevelArg> for Level {
    fn from(l: LevelArg) -> Self {
        match l {
            LevelArg::Quick => Level::Quick,
            LevelArg::Full => Level::Full,
        }
    }
}

enum Status {
    Ok,
    ChecksFailed,
}

fn config(cli: &Cli) -> Result<EvalConfig> {
    let mut cfg = EvalConfig::default();
    if let Some(tol) = cli.rel_tol {
        cfg = cfg.with_rel_tol(tol).context("ELLINT_REL_TOL")?;
    }
    if let Some(n) = cli.max_terms {
        cfg = cfg.with_max_terms(n).context("ELLINT_MAX_TERMS")?;
    }
    Ok(cfg)
}

fn eval(function: Function, args: &[f64], cfg: &EvalConfig) -> Result<Table> {
    let (cols, row, value) = if function.takes_modulus() {
        let [a, r] = args else {
            bail!("{} takes two arguments: <a> <r>", function.name());
        };
        let pa = Param::new(*a)?;
        let p = ModulusPoint::new(*r)?;
        let v = match function {
            Function::Ellk => ellk_gen(pa, p, cfg)?,
            Function::Elle => elle_gen(pa, p, cfg)?,
            _ => ratio_rho(pa, p, cfg)?,
        };
        (
            vec!["function", "a", "r", "value"],
            vec![Cell::from(function.name()), (*a).into(), (*r).into()],
            v,
        )
    } else {
        let [x] = args else {
            bail!("{} takes one argument: <x>", function.name());
        };
        let x_arg = RArgument::new(*x)?;
        let v = match function {
            Function::Ramanujan => r_def(x_arg),
            Function::Xi => xi(x_arg),
            _ => eta(x_arg),
        };
        (
            vec!["function", "x", "value"],
            vec![Cell::from(function.name()), (*x).into()],
            v,
        )
    };
    let mut table = Table::new(cols);
    let mut row = row;
    row.push(value.into());
    table.push(row);
    Ok(table)
}

fn bounds(a: f64, r_min: f64, r_max: f64, n: usize, cfg: &EvalConfig) -> Result<(Table, bool)> {
    let pa = Param::new(a)?;
    if n == 0 {
        bail!("n must be at least 1");
    }
    if r_min > r_max {
        bail!("r_min = {r_min} exceeds r_max = {r_max}");
    }
    let grid = (0..n)
        .map(|i| {
            let r = if n == 1 {
                r_min
            } else {
                r_min + (r_max - r_min) * i as f64 / (n - 1) as f64
            };
            ModulusPoint::new(r)
        })
        .collect::<ellint_core::Result<Vec<_>>>()?;
    let reps = envelope_scan(&[pa], &grid, cfg)?;
    let mut table = Table::new(vec![
        "a",
        "r",
        "lower",
        "value",
        "upper",
        "lower_margin",
        "upper_margin",
    ]);
    let (mut min_lo, mut min_up) = (f64::INFINITY, f64::INFINITY);
    for rep in &reps {
        table.push(vec![
            rep.a.into(),
            rep.r.into(),
            rep.lower.into(),
            rep.value.into(),
            rep.upper.into(),
            rep.lower_margin.into(),
            rep.upper_margin.into(),
        ]);
        min_lo = min_lo.min(rep.lower_margin);
        min_up = min_up.min(rep.upper_margin);
    }
    table.footer.push(("min_lower_margin", min_lo.into()));
    table.footer.push(("min_upper_margin", min_up.into()));
    Ok((table, min_lo > 0.0 && min_up > 0.0))
}

fn run_verify(level: Level, cfg: &EvalConfig) -> (Table, bool) {
    let outcomes = verify::run(level, cfg);
    let mut table = Table::new(vec![
        "check",
        "criterion",
        "status",
        "seconds",
        "worst_at",
        "worst_gap",
        "detail",
    ]);
    let mut all = true;
    for c in &outcomes {
        all &= c.passed;
        if !c.passed {
            let (at, gap) = c
                .worst
                .as_ref()
                .map_or(("-".to_string(), f64::NAN), |w| (w.at.clone(), w.gap));
            eprintln!(
                "FAILED {}: worst at {at} (gap {}) {}",
                c.name,
                output::fmt_num(gap),
                c.detail
            );
        }
        table.push(vec![
            c.name.into(),
            c.criterion.map(|n| Cell::Int(n.into())).unwrap_or(Cell::Empty),
            if c.passed { "pass" } else { "fail" }.into(),
            c.seconds.into(),
            c.worst.as_ref().map(|w| w.at.clone()).into(),
            c.worst.as_ref().map(|w| w.gap).into(),
            c.detail.clone().into(),
        ]);
    }
    let passed = outcomes.iter().filter(|c| c.passed).count() as u64;
    table.footer.push(("passed", Cell::Int(passed)));
    table.footer.push(("failed", Cell::Int(outcomes.len() as u64 - passed)));
    (table, all)
}

fn sharpness(a: f64, epsilon: f64, cfg: &EvalConfig) -> Result<Table> {
    let pa = Param::new(a)?;
    let c = sharp_constants(pa);
    let gap = c.beta0 - c.alpha0;
    if !(epsilon > 0.0 && epsilon < gap) {
        bail!("epsilon = {epsilon} must lie in (0, beta0 - alpha0) = (0, {gap})");
    }
    let mut table = Table::new(vec!["side", "a", "lambda", "r", "rp2", "gap"]);
    for (side, lambda) in [(Side::Lower, c.alpha0 + epsilon), (Side::Upper, c.beta0 - epsilon)] {
        let w = sharpness_scan(pa, lambda, side, cfg)?;
        table.push(vec![
            w.side.as_str().into(),
            w.a.into(),
            w.lambda.into(),
            w.r.into(),
            w.rp2.into(),
            w.gap.into(),
        ]);
    }
    Ok(table)
}

fn run(cli: &Cli) -> Result<Status> {
    let cfg = config(cli)?;
    let (table, ok) = match &cli.command {
        Command::Eval { function, args } => {
            let table = eval(*function, args, &cfg)?;
            if cli.format == OutputFormat::Plain {
                // bare value for shell pipelines
                let v = table.rows[0].last().expect("value column");
                let Cell::Num(v) = v else { unreachable!() };
                println!("{}", output::fmt_num(*v));
                return Ok(Status::Ok);
            }
            (table, true)
        }
        Command::Bounds { a, r_min, r_max, n } => bounds(*a, *r_min, *r_max, *n, &cfg)?,
        Command::Verify { level } => run_verify((*level).into(), &cfg),
        Command::Sharpness { a, epsilon } => (sharpness(*a, *epsilon, &cfg)?, true),
    };
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    table.write(cli.format, &mut out)?;
    out.flush()?;
    Ok(if ok { Status::Ok } else { Status::ChecksFailed })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(Status::Ok) => ExitCode::SUCCESS,
        Ok(Status::ChecksFailed) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
