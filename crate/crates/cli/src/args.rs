use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "gegenbauer",
    version,
    about = "Gegenbauer polynomial tables and exact checks of the Pochhammer convolution identity"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Tabulate C_0..C_N as coefficient lists, lowest degree first.
    Table(TableArgs),
    /// Evaluate C_m at one point.
    Eval(EvalArgs),
    /// C_m(1) = (2λ)_m / m!.
    AtOne(AtOneArgs),
    /// Check the convolution identity over a grid of λ and m.
    Verify(VerifyArgs),
    /// Compare d/dt of the generating function with the term-wise derivative series.
    DerivCheck(DerivCheckArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Exact,
    Float,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum TableRoute {
    #[default]
    Composition,
    Recurrence,
}

#[derive(Debug, Args)]
pub struct Common {
    /// Arithmetic mode; defaults to exact when every literal is rational.
    #[arg(long, value_enum)]
    pub mode: Option<Mode>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    /// λ > 0 as p/q, an integer, or a decimal
    #[arg(long, allow_hyphen_values = true)]
    pub lambda: String,
    #[arg(long)]
    pub order: usize,
    #[arg(long, value_enum, default_value_t = TableRoute::Composition)]
    pub route: TableRoute,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Args)]
pub struct EvalArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub lambda: String,
    #[arg(long)]
    pub degree: usize,
    #[arg(long, allow_hyphen_values = true)]
    pub t: String,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Args)]
pub struct AtOneArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub lambda: String,
    #[arg(long)]
    pub degree: usize,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Comma-separated λ values, e.g. 1/2,1,3/2
    #[arg(long, allow_hyphen_values = true)]
    pub lambda_list: String,
    #[arg(long)]
    pub m_max: usize,
    /// Residual threshold in float mode.
    #[arg(long, default_value_t = 1e-10)]
    pub tolerance: f64,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Args)]
pub struct DerivCheckArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub lambda: String,
    #[arg(long, allow_hyphen_values = true)]
    pub t: String,
    #[arg(long, allow_hyphen_values = true)]
    pub r: String,
    #[arg(long)]
    pub order: usize,
    /// Largest accepted |A - B|.
    #[arg(long, default_value_t = 1e-10)]
    pub tolerance: f64,
    #[command(flatten)]
    pub common: Common,
}
