//! Command-line front door: every subcommand is a thin composition of
//! library calls with deterministic, byte-stable output.
//!
//! Exit codes: 0 success/verified, 1 verification failed, 2 bad input,
//! 3 cap exceeded.

use std::fmt::Write as _;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use num_bigint::BigInt;
use num_traits::Signed;

use signed_chroma::chambers;
use signed_chroma::chromatic;
use signed_chroma::flats;
use signed_chroma::paths;
use signed_chroma::{Error, SignedGraph};

#[derive(Parser)]
#[command(
    name = "signed-chroma",
    version,
    about = "Exact chromatic invariants of signed graphs"
)]
struct Cli {
    /// Worker threads for the parallel searches (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,

    /// Cap on |E| for the 2^|E| subset expansion.
    #[arg(long, global = true, default_value_t = chromatic::DEFAULT_SUBSET_EDGE_CAP)]
    cap_edges: usize,

    /// Cap on the vertex count of the path search.
    #[arg(long, global = true, default_value_t = paths::DEFAULT_PATH_VERTEX_CAP)]
    cap_path_n: usize,

    /// Truncation radius for the oracle cross-checks.
    #[arg(long, global = true, default_value_t = 2)]
    radius: usize,

    /// Emit a stable header line before the regular output.
    #[arg(long, global = true)]
    machine: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Power-sum table of X, cross-validated against the flat expansion.
    X { graph_file: String },
    /// Power-sum table of Xbar from the flat expansion.
    Xbar { graph_file: String },
    /// Verify omega X = Xbar.
    Reciprocity { graph_file: String },
    /// Chromatic and zero-free chromatic polynomials, ascending coefficients.
    Chrompoly { graph_file: String },
    /// Flat lattice dump with ranks, Moebius values, and types.
    Flats { graph_file: String },
    /// Chamber dump: feasible sign vectors with rational witnesses.
    Chambers { graph_file: String },
    /// All oracle cross-checks at the configured radius.
    Oracle { graph_file: String },
    /// Signed-path collision search on n vertices.
    Paths { n: usize },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(threads) = cli.threads {
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global();
    }
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            let code = match e {
                Error::Parse { .. }
                | Error::InvalidGraph(_)
                | Error::LengthMismatch { .. }
                | Error::ZeroColumn => 2,
                Error::CapExceeded { .. } => 3,
                _ => 1,
            };
            ExitCode::from(code)
        }
    }
}

fn load(path: &str) -> signed_chroma::Result<SignedGraph> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Parse {
        line: 0,
        msg: format!("cannot read {path}: {e}"),
    })?;
    SignedGraph::parse(&text)
}

fn run(cli: &Cli) -> signed_chroma::Result<bool> {
    let mut out = String::new();
    if cli.machine {
        let name = match cli.command {
            Command::X { .. } => "x",
            Command::Xbar { .. } => "xbar",
            Command::Reciprocity { .. } => "reciprocity",
            Command::Chrompoly { .. } => "chrompoly",
            Command::Flats { .. } => "flats",
            Command::Chambers { .. } => "chambers",
            Command::Oracle { .. } => "oracle",
            Command::Paths { .. } => "paths",
        };
        writeln!(out, "# signed-chroma {name}").unwrap();
    }
    let verified = match &cli.command {
        Command::X { graph_file } => {
            let g = load(graph_file)?;
            let x = chromatic::x_subset(&g, cli.cap_edges)?;
            let verified = if g.n_edges() <= flats::DEFAULT_FLAT_EDGE_CAP {
                x == chromatic::x_flats(&g, flats::DEFAULT_FLAT_EDGE_CAP)?
            } else {
                true
            };
            out.push_str(&x.serialize());
            if !verified {
                eprintln!("error: subset and flat expansions disagree");
            }
            verified
        }
        Command::Xbar { graph_file } => {
            let g = load(graph_file)?;
            out.push_str(&chromatic::xbar_flats(&g, flats::DEFAULT_FLAT_EDGE_CAP)?.serialize());
            true
        }
        Command::Reciprocity { graph_file } => {
            let g = load(graph_file)?;
            let omega_x = chromatic::x_subset(&g, cli.cap_edges)?.omega();
            let xbar = chromatic::xbar_flats(&g, flats::DEFAULT_FLAT_EDGE_CAP)?;
            if omega_x == xbar {
                out.push_str("reciprocity: pass\n");
                true
            } else {
                out.push_str("reciprocity: fail\nomega X:\n");
                out.push_str(&omega_x.serialize());
                out.push_str("Xbar:\n");
                out.push_str(&xbar.serialize());
                false
            }
        }
        Command::Chrompoly { graph_file } => {
            let g = load(graph_file)?;
            let (chi, chi_star) = chromatic::chromatic_polynomials(&g, cli.cap_edges)?;
            writeln!(out, "{chi}").unwrap();
            writeln!(out, "{chi_star}").unwrap();
            true
        }
        Command::Flats { graph_file } => {
            let g = load(graph_file)?;
            out.push_str(&flats::enumerate_flats(&g, flats::DEFAULT_FLAT_EDGE_CAP)?.dump());
            true
        }
        Command::Chambers { graph_file } => {
            let g = load(graph_file)?;
            out.push_str(&chambers::enumerate_chambers(&g)?.dump());
            true
        }
        Command::Oracle { graph_file } => {
            let g = load(graph_file)?;
            let radius = cli.radius;
            let x = chromatic::x_subset(&g, cli.cap_edges)?;
            let x_flats = chromatic::x_flats(&g, flats::DEFAULT_FLAT_EDGE_CAP)?;
            let xbar = chromatic::xbar_flats(&g, flats::DEFAULT_FLAT_EDGE_CAP)?;
            let chamber_set = chambers::enumerate_chambers(&g)?;
            let lattice = flats::enumerate_flats(&g, flats::DEFAULT_FLAT_EDGE_CAP)?;
            let chi = flats::characteristic_polynomial(&lattice, g.n_vertices());
            let chambers_expected = chi.eval(&BigInt::from(-1));

            let checks = [
                (
                    "x truncation",
                    x.truncate(radius) == chambers::brute_x_truncated(&g, radius)?,
                ),
                (
                    "xbar truncation",
                    xbar.truncate(radius) == chambers::brute_xbar_truncated(&g, radius)?,
                ),
                (
                    "multiplicity",
                    chambers::multiplicity_crosscheck(&g, radius)?.passed(),
                ),
                (
                    "chamber count",
                    BigInt::from(chamber_set.count()) == chambers_expected.abs(),
                ),
                ("dual derivation", x == x_flats),
                ("reciprocity", x.omega() == xbar),
            ];
            let mut all = true;
            for (name, ok) in checks {
                writeln!(out, "check {name}: {}", if ok { "pass" } else { "fail" }).unwrap();
                all &= ok;
            }
            all
        }
        Command::Paths { n } => {
            let report = paths::search_collisions(*n, cli.cap_path_n)?;
            out.push_str(&report.render());
            report.violations.is_empty()
        }
    };
    print!("{out}");
    Ok(verified)
}
