mod commands;
mod grid;
mod output;

use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use grid::{parse_list, parse_usize_list, List, Scale};
use output::Format;

/// Bessel functions of pure imaginary order: Cf/Sf (oscillatory) and Cd/Sd (modified).
#[derive(Debug, Parser)]
#[command(name = "imbessel", version, allow_negative_numbers = true)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate the basis pair and derivatives at given points.
    Eval(EvalArgs),
    /// Tabulate the basis pair over a grid.
    Table(GridArgs),
    /// Compare the series against the extended-precision oracle.
    Compare(CompareArgs),
    /// Show tail bounds next to the empirical error for several term counts.
    Bounds(BoundsArgs),
    /// Reduce x²y'' + a·x·y' + (b + c·x^{2β})y = 0 to a Bessel equation.
    Classify(ClassifyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum KindArg {
    Osc,
    Mod,
}

impl From<KindArg> for imbessel::Kind {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::Osc => imbessel::Kind::Oscillatory,
            KindArg::Mod => imbessel::Kind::Modified,
        }
    }
}

#[derive(Debug, Args)]
struct EvalArgs {
    #[arg(long, value_enum, default_value = "osc")]
    kind: KindArg,
    /// Order, or a comma list of orders.
    #[arg(long, value_parser = parse_list, allow_hyphen_values = true)]
    nu: List<f64>,
    /// Argument, or a comma list of arguments.
    #[arg(long, value_parser = parse_list, allow_hyphen_values = true)]
    x: List<f64>,
    /// Truncation tolerance; by default the tightest the point supports.
    #[arg(long)]
    tol: Option<f64>,
    /// Keep coefficients 0..=N instead of choosing N from --tol.
    #[arg(long)]
    terms: Option<usize>,
    #[arg(long, value_enum, default_value = "csv")]
    format: Format,
}

#[derive(Debug, Args)]
struct GridArgs {
    #[arg(long, value_enum, default_value = "osc")]
    kind: KindArg,
    #[arg(long, value_parser = parse_list, default_value = "0,0.5,1,1.5,2", allow_hyphen_values = true)]
    nu: List<f64>,
    /// Explicit points; overrides the spaced grid.
    #[arg(long, value_parser = parse_list, allow_hyphen_values = true, conflicts_with_all = ["x_min", "x_max", "x_steps", "x_scale"])]
    x: Option<List<f64>>,
    #[arg(long, default_value_t = 0.1, allow_hyphen_values = true)]
    x_min: f64,
    #[arg(long, default_value_t = 2.0, allow_hyphen_values = true)]
    x_max: f64,
    #[arg(long, default_value_t = 20)]
    x_steps: usize,
    #[arg(long, value_enum, default_value = "linear")]
    x_scale: Scale,
    #[arg(long, default_value_t = 1e-12)]
    tol: f64,
    #[arg(long)]
    terms: Option<usize>,
    #[arg(long, value_enum, default_value = "csv")]
    format: Format,
}

#[derive(Debug, Args)]
struct CompareArgs {
    #[command(flatten)]
    grid: GridArgs,
    #[arg(long, default_value_t = imbessel::oracle::DEFAULT_DIGITS)]
    oracle_digits: u32,
}

#[derive(Debug, Args)]
struct BoundsArgs {
    #[arg(long, value_enum, default_value = "osc")]
    kind: KindArg,
    #[arg(long, allow_hyphen_values = true)]
    nu: f64,
    #[arg(long, allow_hyphen_values = true)]
    x: f64,
    /// Comma list of term counts N.
    #[arg(long, value_parser = parse_usize_list, default_value = "1,2,4,8,16")]
    terms: List<usize>,
    #[arg(long, default_value_t = imbessel::oracle::DEFAULT_DIGITS)]
    oracle_digits: u32,
    #[arg(long, value_enum, default_value = "csv")]
    format: Format,
}

#[derive(Debug, Args)]
struct ClassifyArgs {
    #[arg(long, allow_hyphen_values = true)]
    a: f64,
    #[arg(long, allow_hyphen_values = true)]
    b: f64,
    #[arg(long, allow_hyphen_values = true)]
    c: f64,
    #[arg(long, allow_hyphen_values = true)]
    beta: f64,
    #[arg(long, value_enum, default_value = "csv")]
    format: Format,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Eval(a) => commands::eval(&a),
        Command::Table(a) => commands::table(&a),
        Command::Compare(a) => commands::compare(&a),
        Command::Bounds(a) => commands::bounds(&a),
        Command::Classify(a) => commands::classify(&a),
    };
    match result {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(out.text.as_bytes()).and_then(|_| stdout.flush()).is_err() {
                return ExitCode::from(1);
            }
            ExitCode::from(out.status)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
