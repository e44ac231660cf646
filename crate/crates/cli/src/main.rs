mod args;

use std::fmt;
use std::fs;
use std::path::Path;
use std::process::ExitCode;

use clap::Parser;
use disjoint_curves::io::graph_export;
use disjoint_curves::io::{parse_family, render_svg, serialize_family, RenderOptions, XCompression};
use disjoint_curves::shift_graph::ceil_log2;
use disjoint_curves::{
    build_shift_graph, chromatic_number_exact, formula_coloring, four_segment_family,
    three_segment_family, ChromaticOutcome, CurveFamily, ParamProfile, VerifyOptions,
};

use args::{Cli, Command, Compression, GraphFormat, ProfileName, Segments};

enum CliError {
    /// Bad arguments or unreadable input: exit 2.
    Input(String),
    /// A certified property failed: exit 1.
    Violation(String),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Input(msg) | CliError::Violation(msg) => f.write_str(msg),
        }
    }
}

impl From<disjoint_curves::Error> for CliError {
    fn from(e: disjoint_curves::Error) -> Self {
        CliError::Input(e.to_string())
    }
}

fn io_err(path: &Path, e: std::io::Error) -> CliError {
    CliError::Input(format!("{}: {e}", path.display()))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Generate(a) => cmd_generate(a),
        Command::Verify(a) => cmd_verify(a),
        Command::Render(a) => cmd_render(a),
        Command::Graph(a) => cmd_graph(a),
        Command::Chi(a) => cmd_chi(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Violation(msg)) => {
            eprintln!("violation: {msg}");
            ExitCode::from(1)
        }
        Err(CliError::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn build_family(
    m: usize,
    segments: Segments,
    profile: Option<ProfileName>,
    k: Option<&str>,
) -> Result<CurveFamily, CliError> {
    match segments {
        Segments::Four => {
            if k.is_some() {
                return Err(CliError::Input("--K only applies to --segments 3".into()));
            }
            let profile = match profile.unwrap_or(ProfileName::Canonical) {
                ProfileName::Canonical => ParamProfile::canonical(m),
                ProfileName::Figure => ParamProfile::figure(),
            };
            Ok(four_segment_family(m, &profile)?)
        }
        Segments::Three => {
            if profile.is_some() {
                return Err(CliError::Input("--profile only applies to --segments 4".into()));
            }
            let k = k
                .map(|s| {
                    s.parse()
                        .map_err(|_| CliError::Input(format!("--K expects an integer, got {s:?}")))
                })
                .transpose()?;
            Ok(three_segment_family(m, k)?)
        }
    }
}

fn load_family(path: &Path) -> Result<CurveFamily, CliError> {
    let text = fs::read_to_string(path).map_err(|e| io_err(path, e))?;
    parse_family(&text).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn cmd_generate(a: args::GenerateArgs) -> Result<(), CliError> {
    let fam = build_family(a.m, a.segments, a.profile, a.k.as_deref())?;
    fs::write(&a.out, serialize_family(&fam)).map_err(|e| io_err(&a.out, e))?;
    println!(
        "wrote {} curves ({}, m={}) to {}",
        fam.curves.len(),
        fam.kind,
        fam.m,
        a.out.display()
    );
    Ok(())
}

fn cmd_verify(a: args::VerifyArgs) -> Result<(), CliError> {
    let fam = match (&a.input, a.m, a.segments) {
        (Some(path), None, None) => load_family(path)?,
        (None, Some(m), Some(seg)) => build_family(m, seg, a.profile, None)?,
        _ => return Err(CliError::Input("use either --in FILE or --m M --segments S".into())),
    };
    let opts = VerifyOptions {
        chromatic: a.chi,
        ..VerifyOptions::default()
    };
    let report = disjoint_curves::verify_family(&fam, &opts);
    let json = serde_json::to_string_pretty(&report).expect("report json");
    if a.json {
        println!("{json}");
    } else {
        println!("{report}");
    }
    if let Some(path) = &a.report {
        fs::write(path, format!("{json}\n")).map_err(|e| io_err(path, e))?;
    }
    if report.pass {
        Ok(())
    } else {
        let (check, detail) = report
            .first_counterexample()
            .unwrap_or(("unknown", "no detail"));
        Err(CliError::Violation(format!("{check}: {detail}")))
    }
}

fn cmd_render(a: args::RenderArgs) -> Result<(), CliError> {
    let fam = load_family(&a.input)?;
    let opts = RenderOptions {
        width: a.size,
        height: a.size,
        labels: !a.no_labels,
        x_compression: match a.x_compress {
            Compression::None => XCompression::None,
            Compression::SignedLog => XCompression::SignedLog,
        },
    };
    let out = render_svg(&fam, &opts);
    for w in &out.warnings {
        eprintln!("warning: {w}");
    }
    fs::write(&a.out, out.svg).map_err(|e| io_err(&a.out, e))?;
    Ok(())
}

fn cmd_graph(a: args::GraphArgs) -> Result<(), CliError> {
    let g = build_shift_graph(a.m)?;
    let text = match a.format {
        GraphFormat::Dot => graph_export::to_dot(&g),
        GraphFormat::Json => graph_export::to_json(&g),
    };
    print!("{text}");
    Ok(())
}

fn cmd_chi(a: args::ChiArgs) -> Result<(), CliError> {
    let g = build_shift_graph(a.m)?;
    let want = ceil_log2(a.m);
    let formula = formula_coloring(a.m)?;
    println!(
        "bit coloring: {} colors, proper = {}",
        formula.color_count(),
        formula.is_proper(&g.graph)
    );
    match chromatic_number_exact(&g.graph, a.budget) {
        ChromaticOutcome::Determined {
            chi,
            witness,
            refutation,
            nodes,
        } => {
            println!("chi(H_{}) = {chi} (ceil(log2 {}) = {want}), {nodes} search nodes", a.m, a.m);
            let colors: Vec<String> = g
                .vertices
                .iter()
                .zip(&witness.0)
                .map(|(v, c)| format!("{v}:{c}"))
                .collect();
            println!("witness: {}", colors.join(" "));
            if let Some(r) = refutation {
                println!("{} colors refuted: {r:?}", chi.saturating_sub(1));
            }
            if chi != want || !witness.is_proper(&g.graph) {
                return Err(CliError::Violation(format!("chi = {chi}, expected {want}")));
            }
            Ok(())
        }
        ChromaticOutcome::Inconclusive {
            lower_bound,
            upper_bound,
            nodes,
        } => Err(CliError::Violation(format!(
            "inconclusive after {nodes} nodes: {lower_bound} <= chi <= {upper_bound:?}"
        ))),
    }
}
