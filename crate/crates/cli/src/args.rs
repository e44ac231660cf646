use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(
    name = "dcurves",
    version,
    about = "Generate and certify polygonal-curve realizations of shift graphs",
    after_help = "Exit codes: 0 = all checks pass, 1 = a claim is violated, 2 = bad input."
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Write a curve family to a JSON file.
    Generate(GenerateArgs),
    /// Certify a family file, or a freshly generated family.
    Verify(VerifyArgs),
    /// Draw a family file as SVG.
    Render(RenderArgs),
    /// Export the shift graph H_m.
    Graph(GraphArgs),
    /// Exact chromatic number of H_m with certificates.
    Chi(ChiArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Segments {
    #[value(name = "3")]
    Three,
    #[value(name = "4")]
    Four,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ProfileName {
    Canonical,
    Figure,
}

#[derive(clap::Args, Debug)]
pub struct GenerateArgs {
    #[arg(long)]
    pub m: usize,
    #[arg(long, value_enum)]
    pub segments: Segments,
    /// Coordinate profile for the 4-segment family.
    #[arg(long, value_enum)]
    pub profile: Option<ProfileName>,
    /// Stretch base for the 3-segment family (default 12 N^2 + 1).
    #[arg(long = "K", value_name = "INT")]
    pub k: Option<String>,
    #[arg(long)]
    pub out: PathBuf,
}

#[derive(clap::Args, Debug)]
#[command(group(clap::ArgGroup::new("source").required(true).args(["input", "m"])))]
pub struct VerifyArgs {
    #[arg(long = "in", value_name = "FILE")]
    pub input: Option<PathBuf>,
    #[arg(long, requires = "segments")]
    pub m: Option<usize>,
    #[arg(long, value_enum, requires = "m")]
    pub segments: Option<Segments>,
    #[arg(long, value_enum, requires = "m")]
    pub profile: Option<ProfileName>,
    /// Also certify chi(H_m) = ceil(log2 m) (m <= 10).
    #[arg(long)]
    pub chi: bool,
    /// Print the report as JSON instead of text.
    #[arg(long)]
    pub json: bool,
    /// Write the JSON report to this file.
    #[arg(long, value_name = "FILE")]
    pub report: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Compression {
    None,
    SignedLog,
}

#[derive(clap::Args, Debug)]
pub struct RenderArgs {
    #[arg(long = "in", value_name = "FILE")]
    pub input: PathBuf,
    #[arg(long)]
    pub out: PathBuf,
    #[arg(long = "x-compress", value_enum, default_value = "none")]
    pub x_compress: Compression,
    #[arg(long)]
    pub no_labels: bool,
    #[arg(long, default_value_t = 800)]
    pub size: u32,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum GraphFormat {
    Dot,
    Json,
}

#[derive(clap::Args, Debug)]
pub struct GraphArgs {
    #[arg(long)]
    pub m: usize,
    #[arg(long, value_enum, default_value = "dot")]
    pub format: GraphFormat,
}

#[derive(clap::Args, Debug)]
pub struct ChiArgs {
    #[arg(long)]
    pub m: usize,
    /// Search-node limit for the exact solver.
    #[arg(long, default_value_t = 50_000_000)]
    pub budget: u64,
}
