//! Command-line front end: point evaluation, grid tables, the verification
//! suite, and error-curve CSV emission.
//!
//! Exit codes: 0 success, 1 verification violations, 2 invalid input,
//! 3 reference-evaluator failure.

use crate::analysis::{
    self, figure_a_values, figure_x_values, linear_grid, log_grid, ErrorRecord, Fixture, GridSpec,
};
use crate::bounds::{bracket, dispatch_row, Mode};
use crate::oracle::igamma_ref_checked;
use crate::Error;
use clap::{Args, Parser, Subcommand, ValueEnum};
use std::io::Write;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATIONS: i32 = 1;
pub const EXIT_INVALID_INPUT: i32 = 2;
pub const EXIT_ORACLE_FAILURE: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "igbounds",
    about = "Certified lower/upper bounds for the upper incomplete gamma function",
    version
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Evaluate the certified bracket at one point, with the reference value
    /// and signed relative errors.
    Eval(EvalArgs),
    /// Emit a CSV/TSV table of signed relative errors over a grid.
    Table(TableArgs),
    /// Run the full inequality verification suite over a grid; exit code 0
    /// iff no violation is found.
    Verify(VerifyArgs),
    /// Emit signed relative-error curves for the standard set of orders
    /// (or a custom list), suitable for plotting.
    Figure(FigureArgs),
}

#[derive(Clone, Copy, Debug, ValueEnum, Default, PartialEq)]
pub enum ModeArg {
    #[default]
    Plain,
    Tamed,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Mode {
        match m {
            ModeArg::Plain => Mode::Plain,
            ModeArg::Tamed => Mode::Tamed,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum, Default, PartialEq)]
pub enum FormatArg {
    #[default]
    Csv,
    Tsv,
}

impl FormatArg {
    fn sep(self) -> char {
        match self {
            FormatArg::Csv => ',',
            FormatArg::Tsv => '\t',
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum, Default, PartialEq)]
pub enum ScaleArg {
    #[default]
    Log,
    Linear,
}

#[derive(Args, Debug)]
pub struct EvalArgs {
    /// Order a (any finite real).
    #[arg(short, long, allow_hyphen_values = true)]
    pub a: f64,
    /// Argument x (> 0).
    #[arg(short, long)]
    pub x: f64,
    #[arg(long, value_enum, default_value_t = ModeArg::Plain)]
    pub mode: ModeArg,
    /// Also print the dispatch-table row behind the selection.
    #[arg(long)]
    pub explain: bool,
}

#[derive(Args, Debug)]
pub struct GridArgs {
    /// Comma-separated list of orders.
    #[arg(long = "a-list", value_delimiter = ',', allow_hyphen_values = true)]
    pub a_list: Vec<f64>,
    /// Smallest x of the grid (> 0).
    #[arg(long, default_value_t = 1e-6)]
    pub x_min: f64,
    /// Largest x of the grid.
    #[arg(long, default_value_t = 1e3)]
    pub x_max: f64,
    /// Number of x grid points (>= 2).
    #[arg(long, default_value_t = 25)]
    pub x_count: usize,
    /// Grid spacing.
    #[arg(long, value_enum, default_value_t = ScaleArg::Log)]
    pub x_scale: ScaleArg,
}

impl GridArgs {
    fn x_values(&self) -> Result<Vec<f64>, Error> {
        if self.x_count < 2 {
            return Err(Error::InvalidInput("x-count must be >= 2".into()));
        }
        if !(self.x_min > 0.0) || !(self.x_min < self.x_max) {
            return Err(Error::InvalidInput(
                "requires 0 < x-min < x-max".to_string(),
            ));
        }
        Ok(match self.x_scale {
            ScaleArg::Log => log_grid(self.x_min, self.x_max, self.x_count),
            ScaleArg::Linear => linear_grid(self.x_min, self.x_max, self.x_count),
        })
    }
}

#[derive(Args, Debug)]
pub struct TableArgs {
    #[command(flatten)]
    pub grid: GridArgs,
    #[arg(long, value_enum, default_value_t = ModeArg::Plain)]
    pub mode: ModeArg,
    /// Output path; standard output if omitted.
    #[arg(short, long)]
    pub output: Option<std::path::PathBuf>,
    #[arg(long, value_enum, default_value_t = FormatArg::Csv)]
    pub format: FormatArg,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// Orders to verify; the standard grid if omitted.
    #[arg(long = "a-list", value_delimiter = ',', allow_hyphen_values = true)]
    pub a_list: Vec<f64>,
    /// x grid points; the standard 25-point log grid if omitted.
    #[arg(long, default_value_t = 1e-6)]
    pub x_min: f64,
    #[arg(long, default_value_t = 1e3)]
    pub x_max: f64,
    #[arg(long, default_value_t = 25)]
    pub x_count: usize,
    #[arg(long, value_enum, default_value_t = ModeArg::Plain)]
    pub mode: ModeArg,
    /// Test-only negative control: scale G by FACTOR at order A, written
    /// "A:FACTOR". Proves the suite reports violations.
    #[arg(long, hide = true, value_name = "A:FACTOR")]
    pub corrupt_g: Option<String>,
}

#[derive(Args, Debug)]
pub struct FigureArgs {
    /// Orders for the curves; the standard ten if omitted.
    #[arg(long = "a-list", value_delimiter = ',', allow_hyphen_values = true)]
    pub a_list: Vec<f64>,
    #[arg(short, long)]
    pub output: Option<std::path::PathBuf>,
    #[arg(long, value_enum, default_value_t = FormatArg::Csv)]
    pub format: FormatArg,
}

/// 17-significant-digit decimal formatting: round-trips every f64.
pub fn fmt_g17(v: f64) -> String {
    format!("{v:.16e}")
}

fn exit_code_for(err: &Error) -> i32 {
    match err {
        Error::Domain { .. } | Error::InvalidInput(_) => EXIT_INVALID_INPUT,
        Error::NonConvergence { .. }
        | Error::MethodDisagreement { .. }
        | Error::SubdivisionLimit { .. } => EXIT_ORACLE_FAILURE,
    }
}

fn open_output(path: &Option<std::path::PathBuf>) -> std::io::Result<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(std::io::BufWriter::new(std::fs::File::create(p)?)),
        None => Box::new(std::io::BufWriter::new(std::io::stdout())),
    })
}

fn write_records(
    out: &mut dyn Write,
    records: &[ErrorRecord],
    sep: char,
) -> std::io::Result<()> {
    writeln!(
        out,
        "a{sep}x{sep}bound{sep}direction{sep}value{sep}oracle{sep}delta{sep}delta_rel"
    )?;
    for r in records {
        writeln!(
            out,
            "{}{sep}{}{sep}{}{sep}{}{sep}{}{sep}{}{sep}{}{sep}{}",
            fmt_g17(r.a),
            fmt_g17(r.x),
            r.family.name(),
            r.direction,
            fmt_g17(r.bound_value),
            fmt_g17(r.oracle_value),
            fmt_g17(r.delta),
            fmt_g17(r.delta_rel),
        )?;
    }
    Ok(())
}

fn cmd_eval(args: &EvalArgs) -> Result<(), Error> {
    let mode: Mode = args.mode.into();
    let br = bracket(args.a, args.x, mode)?;
    let oracle = igamma_ref_checked(args.a, args.x)?;
    let dl = br.lower_scaled / oracle.scaled - 1.0;
    let du = br.upper_scaled / oracle.scaled - 1.0;
    println!("a = {}  x = {}  mode = {}", fmt_g17(args.a), fmt_g17(args.x), mode);
    println!(
        "lower  = {}  ({}, {})",
        fmt_g17(br.lower),
        br.lower_spec.family.name(),
        br.lower_spec.direction
    );
    println!(
        "upper  = {}  ({}, {})",
        fmt_g17(br.upper),
        br.upper_spec.family.name(),
        br.upper_spec.direction
    );
    println!(
        "oracle = {}  ({}, rel_err<={})",
        fmt_g17(oracle.value()),
        oracle.method.name(),
        fmt_g17(oracle.rel_err)
    );
    println!("delta_rel_lower = {}", fmt_g17(dl));
    println!("delta_rel_upper = {}", fmt_g17(du));
    if args.explain {
        let row = dispatch_row(args.a, mode)?;
        println!(
            "dispatch: region = {:?}, lower = {}, upper = {}",
            row.region, row.lower_rule, row.upper_rule
        );
    }
    Ok(())
}

fn cmd_table(args: &TableArgs) -> Result<(), Error> {
    if args.grid.a_list.is_empty() {
        return Err(Error::InvalidInput("table requires --a-list".into()));
    }
    let x_values = args.grid.x_values()?;
    let grid = GridSpec::new(args.grid.a_list.clone(), x_values)?;
    let records = analysis::figure_data(&grid.a_values, &grid.x_values)?;
    let mut out = open_output(&args.output).map_err(|e| Error::InvalidInput(e.to_string()))?;
    write_records(out.as_mut(), &records, args.format.sep())
        .map_err(|e| Error::InvalidInput(e.to_string()))?;
    Ok(())
}

fn parse_corruption(spec: &str) -> Result<Fixture, Error> {
    let (a, factor) = spec
        .split_once(':')
        .ok_or_else(|| Error::InvalidInput("corrupt-g expects A:FACTOR".into()))?;
    let a: f64 = a
        .parse()
        .map_err(|_| Error::InvalidInput("corrupt-g: bad order".into()))?;
    let factor: f64 = factor
        .parse()
        .map_err(|_| Error::InvalidInput("corrupt-g: bad factor".into()))?;
    Ok(Fixture::ScaleBigG { a, factor })
}

fn cmd_verify(args: &VerifyArgs) -> Result<bool, Error> {
    let grid = if args.a_list.is_empty() && args.x_count == 25 {
        GridSpec::standard()
    } else {
        let a_values = if args.a_list.is_empty() {
            GridSpec::standard().a_values
        } else {
            args.a_list.clone()
        };
        if args.x_count < 2 {
            return Err(Error::InvalidInput("x-count must be >= 2".into()));
        }
        if !(args.x_min > 0.0) || !(args.x_min < args.x_max) {
            return Err(Error::InvalidInput("requires 0 < x-min < x-max".into()));
        }
        GridSpec::new(a_values, log_grid(args.x_min, args.x_max, args.x_count))?
    };
    let fixture = match &args.corrupt_g {
        Some(s) => parse_corruption(s)?,
        None => Fixture::None,
    };
    let report = analysis::verify_all(&grid, args.mode.into(), fixture)?;
    for v in &report.violations {
        println!("{v}");
    }
    println!(
        "verify: {} grid points, {} violations",
        report.points_checked,
        report.violations.len()
    );
    Ok(report.is_empty())
}

fn cmd_figure(args: &FigureArgs) -> Result<(), Error> {
    let a_values = if args.a_list.is_empty() {
        figure_a_values()
    } else {
        args.a_list.clone()
    };
    let records = analysis::figure_data(&a_values, &figure_x_values())?;
    let mut out = open_output(&args.output).map_err(|e| Error::InvalidInput(e.to_string()))?;
    write_records(out.as_mut(), &records, args.format.sep())
        .map_err(|e| Error::InvalidInput(e.to_string()))?;
    Ok(())
}

/// Run a parsed command, returning the process exit code.
pub fn run(cli: Cli) -> i32 {
    let outcome = match &cli.command {
        Command::Eval(args) => cmd_eval(args).map(|()| true),
        Command::Table(args) => cmd_table(args).map(|()| true),
        Command::Verify(args) => cmd_verify(args),
        Command::Figure(args) => cmd_figure(args).map(|()| true),
    };
    match outcome {
        Ok(true) => EXIT_OK,
        Ok(false) => EXIT_VIOLATIONS,
        Err(err) => {
            eprintln!("error: {err}");
            exit_code_for(&err)
        }
    }
}
