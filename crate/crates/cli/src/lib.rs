//! Command-line front end for `exdp`. Every command prints one JSON document
//! on stdout; diagnostics go to stderr. Exit codes: 0 success, 1 a check or
//! computation failed, 2 bad input.

pub mod commands;
pub mod expected;
pub mod report;

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::Value;

use exdp::instability::Mode;
use exdp::TypeTag;

pub use commands::{CliError, Outcome};

#[derive(Debug, Parser)]
#[command(name = "exdp", version, about = "Exact checks for root systems, del Pezzo lattices and elliptic data of types D5-E8")]
pub struct Cli {
    /// Emit JSON (the only output format; accepted for explicitness).
    #[arg(long, global = true)]
    pub json: bool,

    /// Seed for randomized commands.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,

    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    pub threads: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

fn parse_type(s: &str) -> Result<TypeTag, String> {
    s.parse::<TypeTag>().map_err(|e| e.to_string())
}

fn parse_mode(s: &str) -> Result<Mode, String> {
    s.parse::<Mode>()
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Recompute every table and compare with the reference values.
    Tables {
        #[arg(long = "type", value_parser = parse_type, value_name = "TYPE")]
        tag: Option<TypeTag>,
    },
    /// Lines (`m² = -1`, `m·κ = 1`) of `I_{1,l}`.
    Lines(EnumArgs),
    /// Roots (`δ² = -2`, `δ·κ = 0`) of `I_{1,l}`.
    Roots {
        #[command(flatten)]
        args: EnumArgs,
        /// Also extract a simple system and compare its Cartan matrix.
        #[arg(long)]
        system: bool,
    },
    /// Cocharacter classification and descent.
    Cochar {
        #[command(subcommand)]
        command: CocharCommand,
    },
    /// Weighted complete-intersection presentation of the central fibre.
    Ci {
        #[arg(long = "type", value_parser = parse_type, value_name = "TYPE")]
        tag: TypeTag,
    },
    /// Marked del Pezzo data from a homomorphism `P → E`.
    MarkedDp(MarkedDpArgs),
    /// Milnor number of a polynomial at the origin.
    Milnor {
        /// E.g. `z^2+y^3+x^6+1*x^3*y`.
        #[arg(long, allow_hyphen_values = true)]
        poly: String,
        #[arg(long, default_value_t = exdp::localsing::PrimeField::DEFAULT_P)]
        p: u64,
        #[arg(long, default_value_t = 20)]
        cap: usize,
        /// Exact rational arithmetic instead of `F_p`.
        #[arg(long)]
        rational: bool,
    },
    /// Nef test for a class in the positive cone.
    Nef {
        #[arg(long = "type", value_parser = parse_type, value_name = "TYPE")]
        tag: TypeTag,
        /// Coefficients `δ_1..δ_l, γ`, comma separated.
        #[arg(long, allow_hyphen_values = true)]
        class: String,
        /// Treat every root as effective (the surface with `ψ' = 0`).
        #[arg(long)]
        with_roots: bool,
    },
}

#[derive(Debug, Args)]
pub struct EnumArgs {
    #[arg(long = "type", value_parser = parse_type, value_name = "TYPE")]
    pub tag: TypeTag,
    #[arg(long)]
    pub count_only: bool,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum FilterArg {
    /// All nonempty subsets of nodes.
    All,
    /// Singletons and pairs only.
    Pairs,
}

#[derive(Debug, Subcommand)]
pub enum CocharCommand {
    /// Cocharacters `-Σ r_i α_i^∨` passing every subset test.
    Classify {
        #[arg(long = "type", value_parser = parse_type, value_name = "TYPE")]
        tag: TypeTag,
        #[arg(long, value_parser = parse_mode)]
        mode: Mode,
        #[arg(long, value_enum, default_value_t = FilterArg::All)]
        filter: FilterArg,
        /// Include the per-candidate verdicts.
        #[arg(long)]
        ledger: bool,
    },
    /// Bend-and-break descent of a coroot-coordinate vector.
    Descend {
        #[arg(long = "type", value_parser = parse_type, value_name = "TYPE")]
        tag: TypeTag,
        /// Comma separated coroot coefficients.
        #[arg(long, allow_hyphen_values = true)]
        v: String,
    },
}

#[derive(Debug, Args)]
pub struct MarkedDpArgs {
    /// Required unless `--roundtrip` (which then covers every type).
    #[arg(long = "type", value_parser = parse_type, value_name = "TYPE")]
    pub tag: Option<TypeTag>,
    #[arg(long, default_value_t = 101)]
    pub p: u64,
    #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
    pub a: i64,
    #[arg(long, default_value_t = 7, allow_hyphen_values = true)]
    pub b: i64,
    /// JSON list of `l` δ-images, each `{"x":..,"y":..}` or `"infinity"`
    /// (or an object with a `delta_images` list). Default: all `infinity`.
    #[arg(long)]
    pub psi: Option<PathBuf>,
    /// Randomized recover∘construct checks.
    #[arg(long)]
    pub roundtrip: bool,
    #[arg(long, default_value_t = 100)]
    pub trials: usize,
}

/// Runs a parsed command inside a rayon pool of the requested size.
pub fn run(cli: &Cli) -> Result<Outcome, CliError> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(n) = cli.threads {
        if n == 0 {
            return Err(CliError::Input("--threads must be positive".into()));
        }
        builder = builder.num_threads(n);
    }
    let pool = builder
        .build()
        .map_err(|e| CliError::Failed(format!("thread pool: {e}")))?;
    pool.install(|| commands::dispatch(cli))
}

/// Canonical rendering: sorted keys, two-space indentation, arrays of
/// scalars on one line, trailing newline.
pub fn render(v: &Value) -> String {
    let mut s = String::new();
    render_into(v, 0, &mut s);
    s.push('\n');
    s
}

fn render_into(v: &Value, indent: usize, out: &mut String) {
    let pad = |n: usize| "  ".repeat(n);
    match v {
        Value::Array(items) if items.iter().all(|x| !x.is_array() && !x.is_object()) => {
            let parts: Vec<String> = items.iter().map(Value::to_string).collect();
            out.push('[');
            out.push_str(&parts.join(", "));
            out.push(']');
        }
        Value::Array(items) => {
            out.push_str("[\n");
            for (k, x) in items.iter().enumerate() {
                out.push_str(&pad(indent + 1));
                render_into(x, indent + 1, out);
                out.push_str(if k + 1 < items.len() { ",\n" } else { "\n" });
            }
            out.push_str(&pad(indent));
            out.push(']');
        }
        Value::Object(map) if map.is_empty() => out.push_str("{}"),
        Value::Object(map) => {
            out.push_str("{\n");
            for (k, (key, x)) in map.iter().enumerate() {
                out.push_str(&pad(indent + 1));
                out.push_str(&Value::String(key.clone()).to_string());
                out.push_str(": ");
                render_into(x, indent + 1, out);
                out.push_str(if k + 1 < map.len() { ",\n" } else { "\n" });
            }
            out.push_str(&pad(indent));
            out.push('}');
        }
        scalar => out.push_str(&scalar.to_string()),
    }
}
