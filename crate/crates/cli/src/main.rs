//! `garside-al`: normal forms, absorbability and the additional length
//! complex of braid groups from the command line.

mod commands;
mod config;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use crate::config::{FileConfig, Overrides, Settings};

/// JSON output schema version.
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Parser, Debug)]
#[command(name = "garside-al", version, about = "Garside normal forms, absorbable braids and the additional length complex")]
pub struct Cli {
    /// Number of strands.
    #[arg(long, global = true, env = "GARSIDE_AL_N")]
    pub n: Option<usize>,
    /// Seed for randomized checks.
    #[arg(long, global = true, env = "GARSIDE_AL_SEED")]
    pub seed: Option<u64>,
    /// Maximum canonical length for enumeration and search generators.
    #[arg(long, global = true, default_value_t = 2)]
    pub max_len: usize,
    /// Node budget of one absorbability search.
    #[arg(long, global = true, env = "GARSIDE_AL_BUDGET")]
    pub budget: Option<u64>,
    /// Vertex budget of distance searches.
    #[arg(long, global = true, env = "GARSIDE_AL_VERTEX_BUDGET")]
    pub vertex_budget: Option<u64>,
    /// Cache file for `enum-absorbable`.
    #[arg(long, global = true, env = "GARSIDE_AL_CACHE")]
    pub cache: Option<PathBuf>,
    /// Worker threads for parallel searches.
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    /// Structured output.
    #[arg(long, global = true)]
    pub json: bool,
    /// TOML file with defaults for n, seed, budget, vertex_budget and cache.
    #[arg(long, global = true, env = "GARSIDE_AL_CONFIG")]
    pub config: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Left normal form.
    Nf { word: String },
    /// Right normal form.
    Rnf { word: String },
    /// Infimum, supremum and canonical length.
    Stats { word: String },
    /// Whether two words give the same element.
    Eq { left: String, right: String },
    /// Left (or right) gcd.
    Gcd {
        left: String,
        right: String,
        #[arg(long)]
        right_gcd: bool,
    },
    /// Conjugate by a power of Δ.
    Tau {
        word: String,
        #[arg(long, default_value_t = 1, allow_negative_numbers = true)]
        power: i64,
    },
    /// `y⁻¹Δ^sup(y)` for a positive element of infimum 0.
    Complement { word: String },
    /// Rigidity test.
    Rigid { word: String },
    /// Decide absorbability.
    Absorbable {
        word: String,
        /// Print the absorber found.
        #[arg(long)]
        certificate: bool,
    },
    /// All absorbable elements of infimum 0 up to `--max-len`.
    EnumAbsorbable,
    /// Distinguished representative of the vertex `gΔ^Z`.
    Vertex { word: String },
    /// Adjacency of the vertices of two words.
    Adjacent { left: String, right: String },
    /// Preferred path between the vertices of two words.
    Path { left: String, right: String },
    /// Upper bound on the distance between the vertices of two words.
    DistUb {
        left: String,
        right: String,
        #[arg(long, default_value_t = 6)]
        radius: usize,
    },
    /// The braid `x_n` and its structural checks.
    Xn,
    /// Largest `k` with `x_n^k` a prefix of the word.
    Lambda { word: String },
    /// `Δ^k` as a product of three absorbables.
    DecomposeDelta {
        #[arg(allow_negative_numbers = true)]
        k: i64,
    },
    /// Short absorbable decomposition of a braid keeping a round curve round.
    DecomposeReducible {
        word: String,
        /// Curve as `i,j`; every round curve is tried when omitted.
        #[arg(long)]
        curve: Option<String>,
    },
    /// Distance bounds along the orbit of the identity vertex, as CSV.
    ProbeOrbit {
        word: String,
        #[arg(long, default_value_t = 4)]
        count: usize,
        #[arg(long, default_value_t = 4)]
        radius: usize,
    },
    /// Run a verification suite.
    Verify {
        /// kernel, absorb, complex, special, paper-examples or all.
        suite: String,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let file = match &cli.config {
        Some(path) => match FileConfig::load(path) {
            Ok(f) => f,
            Err(m) => {
                eprintln!("error: {m}");
                return ExitCode::from(2);
            }
        },
        None => FileConfig::default(),
    };
    let over = Overrides {
        n: cli.n,
        seed: cli.seed,
        budget: cli.budget,
        vertex_budget: cli.vertex_budget,
        cache: cli.cache.clone(),
    };
    let settings = Settings::resolve(over, file);
    if let Some(t) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(t).build_global() {
            eprintln!("error: thread pool: {e}");
            return ExitCode::from(2);
        }
    }
    match commands::run(&cli, &settings) {
        Ok(out) => {
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&out.json).expect("serializable"));
            } else {
                print!("{}", out.text);
            }
            ExitCode::from(out.status)
        }
        Err(e) => {
            if cli.json {
                let body = serde_json::json!({
                    "schema_version": SCHEMA_VERSION,
                    "error": { "kind": e.kind(), "message": e.to_string() },
                });
                println!("{}", serde_json::to_string_pretty(&body).expect("serializable"));
            } else {
                eprintln!("error: {e}");
            }
            ExitCode::from(e.exit_code())
        }
    }
}
