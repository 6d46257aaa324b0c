mod commands;
mod input;
mod report;

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use report::{render_failure_json, render_json, render_text, Failure};

#[derive(Parser)]
#[command(name = "orthodual", version, about = "Finite ortholattices and their dual UVO-spaces")]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Largest lattice size for `enumerate` and `verify-all`.
    #[arg(long, default_value_t = 8, global = true)]
    max_size: usize,
    /// Write the report to FILE instead of stdout.
    #[arg(long, value_name = "FILE", global = true)]
    out: Option<std::path::PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

/// INPUT is a `.olat`/`.uvo` file if the path exists, otherwise a catalog name.
#[derive(Subcommand)]
enum Command {
    /// Validate an ortholattice or space and report its structural predicates.
    Check { input: String },
    /// The dual space X⁺_L.
    Dualize { input: String },
    /// The ortholattice COR(X) of a space (of X⁺_L for a lattice).
    Cor { input: String },
    /// L ≅ COR(X⁺_L), or X ≅ X⁺_{COR(X)} for a space.
    Roundtrip { input: String },
    /// The UVO-sum of two spaces (lattices are dualized).
    Sum { left: String, right: String },
    /// The product of two ortholattices and the homeomorphism with the sum of duals.
    Product { left: String, right: String },
    /// MacNeille completion, computed three ways.
    Macneille { input: String },
    /// Canonical extension as the regular sets of the dual frame.
    Canonical { input: String },
    /// Congruences of an orthomodular lattice against the PUGS of its dual.
    Congruences { input: String },
    /// Atoms against isolated points of the dual.
    Atoms { input: String },
    /// Count lattices and ortholattices up to --max-size.
    Enumerate,
    /// Graphviz output; two inputs export their sum.
    ExportDot {
        #[arg(required = true, num_args = 1..=2)]
        inputs: Vec<String>,
        /// Draw the dual space of a lattice input.
        #[arg(long)]
        dual: bool,
        /// Overlay ⊥ as dashed edges.
        #[arg(long)]
        perp: bool,
    },
    /// Run acceptance criteria 1 through 7.
    VerifyAll,
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Check { .. } => "check",
            Command::Dualize { .. } => "dualize",
            Command::Cor { .. } => "cor",
            Command::Roundtrip { .. } => "roundtrip",
            Command::Sum { .. } => "sum",
            Command::Product { .. } => "product",
            Command::Macneille { .. } => "macneille",
            Command::Canonical { .. } => "canonical",
            Command::Congruences { .. } => "congruences",
            Command::Atoms { .. } => "atoms",
            Command::Enumerate => "enumerate",
            Command::ExportDot { .. } => "export-dot",
            Command::VerifyAll => "verify-all",
        }
    }
}

fn emit(cli: &Cli, text: &str) -> Result<(), String> {
    match &cli.out {
        Some(path) => std::fs::write(path, text).map_err(|e| format!("{}: {e}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let name = cli.command.name();
    let outcome = match &cli.command {
        Command::Check { input } => commands::check(input),
        Command::Dualize { input } => commands::dualize(input),
        Command::Cor { input } => commands::cor(input),
        Command::Roundtrip { input } => commands::roundtrip(input),
        Command::Sum { left, right } => commands::sum(left, right),
        Command::Product { left, right } => commands::product_cmd(left, right),
        Command::Macneille { input } => commands::macneille_cmd(input),
        Command::Canonical { input } => commands::canonical_cmd(input),
        Command::Congruences { input } => commands::congruences_cmd(input),
        Command::Atoms { input } => commands::atoms_cmd(input),
        Command::Enumerate => commands::enumerate(cli.max_size),
        Command::ExportDot { inputs, dual, perp } => commands::export_dot(inputs, *dual, *perp),
        Command::VerifyAll => commands::verify_all(cli.max_size),
    };
    let (text, code) = match outcome {
        Ok(r) => {
            let text = match cli.format {
                Format::Json => render_json(name, &r),
                Format::Text => render_text(&r),
            };
            (text, u8::from(!r.ok))
        }
        Err(Failure::Math { message, witness }) => {
            let text = match cli.format {
                Format::Json => render_failure_json(name, &message, &witness),
                Format::Text => format!("FAIL: {message}\n"),
            };
            (text, 1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
    };
    if let Err(e) = emit(&cli, &text) {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    ExitCode::from(code)
}
