//! Command-line driver: every command produces a [`Report`] of echoed
//! inputs, results and pass/fail verdicts.

mod commands;
mod report;

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

pub use report::{Report, Verdict};

/// Seed used by randomized checks when `--seed` is not given.
pub const DEFAULT_SEED: u64 = 20_240_617;

#[derive(Debug, Parser)]
#[command(name = "azumaya", version, about = "Exact computations with presentations, trace identities, quantum tori, branes and coalgebras")]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct Global {
    /// Presentation file in the `algebra ...; generators ...; relations ...;` language.
    #[arg(long, global = true)]
    pub presentation: Option<PathBuf>,
    /// Matrix size for `repideal`; quantum-torus level elsewhere.
    #[arg(long, global = true)]
    pub level: Option<u64>,
    /// Order N of the cyclotomic field Q(zeta_N) holding the coefficients.
    #[arg(long, global = true)]
    pub root_order: Option<u64>,
    /// Maximal word length for trace invariants or path length for path coalgebras.
    #[arg(long, global = true)]
    pub max_length: Option<usize>,
    /// Seed for randomized checks.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Ideal of the representation scheme: entries of every relation at generic matrices.
    Repideal,
    /// Cayley-Hamilton polynomial from power traces, checked at the matrix.
    Chpoly {
        /// Matrix-tuple file holding a single square matrix.
        matrix: PathBuf,
    },
    /// Trace invariants of a matrix tuple, with a conjugation-invariance check.
    Invariants {
        /// Matrix-tuple file.
        tuple: PathBuf,
        /// Second tuple to separate from the first by a trace invariant.
        #[arg(long)]
        other: Option<PathBuf>,
    },
    /// Quantum-torus computations.
    Qtorus {
        #[command(subcommand)]
        command: QtorusCommand,
    },
    /// Algebraic D-branes into quantum tori.
    Brane {
        #[command(subcommand)]
        command: BraneCommand,
    },
    /// Finite-dimensional coalgebras.
    Coalg {
        #[command(subcommand)]
        command: CoalgCommand,
    },
}

#[derive(Debug, Subcommand)]
pub enum QtorusCommand {
    /// Product of two elements, each `a,b` (the monomial U^a V^b) or an element file.
    Mul {
        #[arg(allow_hyphen_values = true)]
        x: String,
        #[arg(allow_hyphen_values = true)]
        y: String,
    },
    /// Exponent lattice of the center.
    Center,
    /// Exponent lattice of the centralizer of the monomials `a,b ...`
    /// (after `--` when an exponent starts with `-`).
    Centralizer { gens: Vec<String> },
    /// Clock-and-shift matrices U = mu*S, V = nu*D.
    Specialize {
        /// Scalar `p/q`, or a JSON coefficient list in powers of zeta_N.
        #[arg(long, allow_hyphen_values = true)]
        mu: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        nu: Option<String>,
    },
    /// The map U_n -> U_m^k, V_n -> V_m^k and whether it preserves VU = qUV.
    Embed { n: u64, m: u64 },
}

#[derive(Debug, Subcommand)]
pub enum BraneCommand {
    /// Whether every relation maps to zero.
    Check { brane: PathBuf },
    /// Maximal, minimal or neither.
    Classify { brane: PathBuf },
    /// Whether a 2-morphism f => g exists (centralizer containment).
    Twomorph { f: PathBuf, g: PathBuf },
    /// Compatibility of a family of branes along divisor pairs.
    Family { family: PathBuf },
    /// The brane s -> U^n, t -> V, u, v -> 0, w -> V^-1 U^-n on GL2 at `--level`.
    Beta,
}

#[derive(Debug, Subcommand)]
pub enum CoalgCommand {
    /// The matrix coalgebra on e_ij, 1 <= i, j <= n.
    Matrix { n: usize },
    /// Path coalgebra of a quiver file, truncated at `--max-length` (default 2).
    Path { quiver: PathBuf },
    /// Coassociativity and counit laws of a coalgebra (or quiver) file.
    Check { file: PathBuf },
    /// Convolution algebra on the dual basis.
    Dual { file: PathBuf },
    /// Grouplike elements and skew-primitive spaces between them.
    Grouplikes { file: PathBuf },
}

/// Runs a parsed command line.
pub fn run(cli: &Cli) -> anyhow::Result<Report> {
    commands::run(&cli.global, &cli.command)
}
