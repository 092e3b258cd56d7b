//! `matroid` — command-line interface for the exact matroid toolkit.
//!
//! Subcommands: inspect an instance (`info`), decide structural properties
//! (`check`), test circuit axiom systems on raw circuit lists (`axiom`),
//! search for series minors (`minor --series`), emit registry matroids
//! (`named`), run the exhaustive verification sweeps (`verify`), and dump
//! instance catalogs (`catalog`).
//!
//! Exit codes: `0` when the property holds / the verification passed, `1`
//! when the property fails / violations were found, `2` on usage or input
//! errors.

pub mod commands;
pub mod format;
pub mod output;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};
use commands::Bounds;
use output::Options;
use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

#[derive(Parser, Debug)]
#[command(
    name = "matroid",
    version,
    about = "Exact matroid toolkit: property checks, axiom tests, series-minor search, \
             and exhaustive verification sweeps",
    after_help = "Exit codes: 0 = holds/passed, 1 = fails/violations, 2 = usage or input error."
)]
pub struct Cli {
    /// Emit one JSON object per result line instead of text
    #[arg(long, global = true)]
    pub json: bool,

    /// Cap on witnesses or violations listed per check
    #[arg(long, global = true, value_name = "N", default_value_t = 25)]
    pub max_witnesses: usize,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Summarize an instance: size, rank, circuits, connectivity, binarity
    Info {
        /// Instance file (matroid, graph, or gf2 format)
        file: PathBuf,
    },

    /// Decide a structural property of an instance
    Check {
        /// ssce | skew | k-skew:K | unbreakable | circuit-difference | binary
        #[arg(long, value_name = "PROPERTY")]
        property: String,
        /// Instance file (matroid, graph, or gf2 format)
        file: PathBuf,
    },

    /// Test a circuit axiom system on a raw circuit list
    Axiom {
        /// c3 | c3s | c3pp | c3pp-unique | c3pp-weak
        #[arg(long, value_name = "SYSTEM")]
        system: String,
        /// Instance file; the circuit list need not satisfy matroid axioms
        file: PathBuf,
    },

    /// Search for a minor reachable by series-minor moves
    Minor {
        /// Use series-minor moves (deletions, and contractions inside
        /// nontrivial series classes); required
        #[arg(long, required = true)]
        series: bool,
        /// Host instance file
        host: PathBuf,
        /// Target instance file
        target: PathBuf,
    },

    /// Emit a matroid from the built-in registry
    Named {
        /// N5 | MK4 | K23 | U:r,n | SU:k,l | G:i | L:i
        id: String,
        /// Write to a file instead of standard output
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
    },

    /// Run an exhaustive verification sweep over generated catalogs
    Verify {
        /// theorem1 | theorem3 | axiom | lemmas
        what: String,
        #[command(flatten)]
        bounds: BoundArgs,
    },

    /// Write a catalog of instances to a directory
    Catalog {
        /// graphic | binary | uniform | named | clutter
        #[arg(long, value_name = "FAMILY")]
        family: String,
        #[command(flatten)]
        bounds: BoundArgs,
        /// Keep only connected instances
        #[arg(long)]
        connected: bool,
        /// Output directory (created if missing)
        #[arg(long, value_name = "DIR")]
        out: PathBuf,
    },
}

/// Size bounds for catalog generation and sweeps. Values above the built-in
/// defaults require `--allow-large`.
#[derive(clap::Args, Debug, Clone, Copy, Default)]
pub struct BoundArgs {
    /// Max edges for the graphic family
    #[arg(long, value_name = "N")]
    pub graphic_max_edges: Option<usize>,
    /// Max columns for the binary family
    #[arg(long, value_name = "N")]
    pub binary_max_cols: Option<usize>,
    /// Max rank for the binary family
    #[arg(long, value_name = "N")]
    pub binary_max_rank: Option<usize>,
    /// Max ground size for the uniform family
    #[arg(long, value_name = "N")]
    pub uniform_max: Option<usize>,
    /// Ground size for the clutter family
    #[arg(long, value_name = "N")]
    pub clutter_n: Option<usize>,
    /// Confirm bounds above the defaults
    #[arg(long)]
    pub allow_large: bool,
}

impl From<BoundArgs> for Bounds {
    fn from(args: BoundArgs) -> Bounds {
        Bounds {
            graphic_max_edges: args.graphic_max_edges,
            binary_max_cols: args.binary_max_cols,
            binary_max_rank: args.binary_max_rank,
            uniform_max: args.uniform_max,
            clutter_n: args.clutter_n,
            allow_large: args.allow_large,
        }
    }
}

/// Parse the argument list and run the selected command, writing results to
/// `out` and diagnostics to `err`. Returns the process exit code.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            // --help/--version surface as clap "errors" but exit 0.
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
            if code == 0 {
                let _ = write!(out, "{e}");
            } else {
                let _ = write!(err, "{e}");
            }
            return code;
        }
    };
    let opts = Options {
        json: cli.json,
        max_witnesses: cli.max_witnesses,
    };
    let result = match cli.command {
        Command::Info { file } => commands::info(out, &opts, &file),
        Command::Check { property, file } => commands::check(out, &opts, &property, &file),
        Command::Axiom { system, file } => commands::axiom(out, &opts, &system, &file),
        Command::Minor {
            series: _,
            host,
            target,
        } => commands::minor_series(out, &opts, &host, &target),
        Command::Named { id, out: out_file } => {
            commands::named_cmd(out, &opts, &id, out_file.as_deref())
        }
        Command::Verify { what, bounds } => commands::verify(out, &opts, &what, &bounds.into()),
        Command::Catalog {
            family,
            bounds,
            connected,
            out: dir,
        } => commands::catalog_cmd(out, &opts, &family, &bounds.into(), connected, &dir),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}
