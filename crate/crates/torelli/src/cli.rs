//! The `torelli` command line. Reports go to stdout as JSON lines; the exit
//! code is 0 when every verdict passes, 1 otherwise and 2 on usage errors.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;
use torelli_core::catalog::Catalog;
use torelli_core::complexes::{self, build_complex, ComplexKind};
use torelli_core::reconstruction::EvidenceKind;
use torelli_core::CurveClass;

use crate::checks::{self, MotifKind};
use crate::fixtures;
use crate::format::{self, FormatError, MapFile, MapSource};
use crate::report::{Report, Verdict};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "torelli", version, about = "Curve, complex and Torelli checks on triangulated surfaces")]
pub struct Cli {
    /// Seed for randomized inputs.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Record wall-clock time in each report.
    #[arg(long, global = true)]
    pub timing: bool,
    /// Write Graphviz output of graph-producing commands here.
    #[arg(long, global = true)]
    pub dot: Option<PathBuf>,
    /// Directory of stored catalogs.
    #[arg(long, global = true, env = fixtures::FIXTURE_ENV)]
    pub fixtures: Option<PathBuf>,
    #[command(subcommand)]
    pub cmd: Cmd,
}

#[derive(Subcommand, Debug)]
pub enum Cmd {
    /// Describe the fixture triangulation of a surface.
    Surface {
        /// Surface as `g,p`.
        #[arg(long, value_parser = surface_arg)]
        surface: (u32, u32),
    },
    /// Curve catalogs.
    #[command(subcommand)]
    Catalog(CatalogCmd),
    /// Finite views of the complexes C, C_s and T.
    #[command(subcommand)]
    Complex(ComplexCmd),
    /// Motif searches in a catalog.
    #[command(subcommand)]
    Motifs(MotifsCmd),
    /// Curve maps from vertex maps.
    #[command(subcommand)]
    Reconstruct(ReconstructCmd),
    /// Checks with a pass or fail verdict.
    #[command(subcommand)]
    Verify(VerifyCmd),
}

#[derive(Args, Debug, Clone)]
pub struct CatArgs {
    /// Surface as `g,p`.
    #[arg(long, value_parser = surface_arg)]
    pub surface: (u32, u32),
    /// Word length bound of the catalog; the surface default if absent.
    #[arg(long)]
    pub depth: Option<u32>,
    /// Total-weight bound of the catalog; the surface default if absent.
    #[arg(long)]
    pub weight_cap: Option<u64>,
}

#[derive(Subcommand, Debug)]
pub enum CatalogCmd {
    /// Enumerate a catalog, optionally writing it as JSON.
    Build {
        #[command(flatten)]
        cat: CatArgs,
        /// Write the catalog here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum KindArg {
    C,
    Cs,
    T,
}

impl From<KindArg> for ComplexKind {
    fn from(k: KindArg) -> ComplexKind {
        match k {
            KindArg::C => ComplexKind::C,
            KindArg::Cs => ComplexKind::Cs,
            KindArg::T => ComplexKind::T,
        }
    }
}

#[derive(Subcommand, Debug)]
pub enum ComplexCmd {
    /// Build a view and enumerate its maximal simplices.
    Build {
        #[command(flatten)]
        cat: CatArgs,
        #[arg(long, value_enum, default_value = "t")]
        kind: KindArg,
        /// Stop after this many maximal simplices.
        #[arg(long, default_value_t = 100_000)]
        cap: usize,
    },
    /// Adjacency and reduction graphs of a maximal separating simplex.
    Graphs {
        #[command(flatten)]
        cat: CatArgs,
        /// Catalog ids of the simplex; the first maximal one is used if absent.
        #[arg(long, value_delimiter = ',')]
        simplex: Option<Vec<usize>>,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum MotifArg {
    Pentagon,
    Hexagon,
    Sharing,
    Spine,
}

#[derive(Subcommand, Debug)]
pub enum MotifsCmd {
    /// Search the catalog for one kind of motif.
    Find {
        #[command(flatten)]
        cat: CatArgs,
        #[arg(long, value_enum)]
        kind: MotifArg,
        /// Candidates to test before giving up as inconclusive.
        #[arg(long, default_value_t = 100_000)]
        budget: usize,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum ViewArg {
    T,
    Cs,
}

#[derive(Subcommand, Debug)]
pub enum ReconstructCmd {
    /// Extend a vertex map to non-separating curves. Without `--map`, the
    /// map induced by a random word drawn from `--seed` is used.
    Phi {
        #[command(flatten)]
        cat: CatArgs,
        #[arg(long, value_enum)]
        view: ViewArg,
        /// JSON map file with a mapping word or explicit vertex pairs.
        #[arg(long)]
        map: Option<PathBuf>,
        /// Length of the random word used without `--map`.
        #[arg(long, default_value_t = 3)]
        length: usize,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum EvidenceArg {
    D,
    E,
    F,
}

#[derive(Subcommand, Debug)]
pub enum VerifyCmd {
    /// Dimension formulas of T and C_s.
    Dim {
        #[command(flatten)]
        cat: CatArgs,
    },
    /// Rank inequalities and reduction graphs on enumerated simplices.
    Rank {
        #[command(flatten)]
        cat: CatArgs,
        /// Stop after this many maximal simplices.
        #[arg(long, default_value_t = 20_000)]
        cap: usize,
    },
    /// The homomorphism p on the torus braid group presentation.
    Braid {
        /// Number of strands.
        #[arg(long)]
        n: u32,
    },
    /// Connectivity of the graphs D, E and F on genus-zero surfaces.
    Connectivity {
        #[command(flatten)]
        cat: CatArgs,
        #[arg(long, value_enum)]
        kind: EvidenceArg,
    },
}

fn surface_arg(s: &str) -> Result<(u32, u32), String> {
    format::parse_surface(s).map_err(|e| e.to_string())
}

struct Ctx {
    cli_fixtures: Option<PathBuf>,
    dot: Option<PathBuf>,
}

impl Ctx {
    fn catalog(&self, a: &CatArgs) -> Result<Catalog, FormatError> {
        let (g, p) = a.surface;
        let (d, w) = fixtures::default_bounds(g, p);
        fixtures::catalog(g, p, a.depth.unwrap_or(d), a.weight_cap.unwrap_or(w), self.cli_fixtures.as_deref())
    }

    fn write_dot(&self, text: &str) -> Result<(), FormatError> {
        if let Some(path) = &self.dot {
            std::fs::write(path, text)?;
        }
        Ok(())
    }
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    EXIT_PASS
                }
                _ => {
                    let _ = write!(err, "{e}");
                    EXIT_USAGE
                }
            };
        }
    };
    let start = Instant::now();
    let ctx = Ctx { cli_fixtures: cli.fixtures.clone(), dot: cli.dot.clone() };
    match execute(&cli, &ctx) {
        Ok(reports) => {
            let elapsed = start.elapsed().as_millis() as u64;
            let mut code = EXIT_PASS;
            for mut r in reports {
                if cli.timing {
                    r.timing_ms = Some(elapsed);
                }
                if r.verdict != Verdict::Pass {
                    code = EXIT_FAIL;
                }
                let _ = writeln!(out, "{}", r.to_line());
            }
            code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn execute(cli: &Cli, ctx: &Ctx) -> Result<Vec<Report>, FormatError> {
    Ok(match &cli.cmd {
        Cmd::Surface { surface: (g, p) } => vec![checks::surface_info(*g, *p)],
        Cmd::Catalog(CatalogCmd::Build { cat, out }) => {
            let c = ctx.catalog(cat)?;
            if let Some(path) = out {
                format::save_catalog(&c, path)?;
            }
            vec![checks::catalog_summary(&c)]
        }
        Cmd::Complex(ComplexCmd::Build { cat, kind, cap }) => {
            let c = ctx.catalog(cat)?;
            let (r, dot) = checks::complex_build(&c, (*kind).into(), *cap);
            ctx.write_dot(&dot)?;
            vec![r]
        }
        Cmd::Complex(ComplexCmd::Graphs { cat, simplex }) => {
            let c = ctx.catalog(cat)?;
            let (r, dot) = graphs(&c, simplex.as_deref())?;
            ctx.write_dot(&dot)?;
            vec![r]
        }
        Cmd::Motifs(MotifsCmd::Find { cat, kind, budget }) => {
            let c = ctx.catalog(cat)?;
            let kind = match kind {
                MotifArg::Pentagon => MotifKind::Pentagon,
                MotifArg::Hexagon => MotifKind::Hexagon,
                MotifArg::Sharing => MotifKind::Sharing,
                MotifArg::Spine => MotifKind::Spine,
            };
            vec![checks::motifs_find(&c, kind, *budget)]
        }
        Cmd::Reconstruct(ReconstructCmd::Phi { cat, view, map, length }) => {
            let c = ctx.catalog(cat)?;
            let kind = match view {
                ViewArg::T => ComplexKind::T,
                ViewArg::Cs => ComplexKind::Cs,
            };
            let source = match map {
                Some(path) => {
                    let f: MapFile = serde_json::from_str(&std::fs::read_to_string(path)?)?;
                    f.resolve(&c, kind)?
                }
                None => MapSource::Word(checks::random_word(&c.surface, cli.seed, *length)?),
            };
            vec![checks::reconstruct(&c, kind, &source)]
        }
        Cmd::Verify(VerifyCmd::Dim { cat }) => vec![checks::verify_dim(&ctx.catalog(cat)?)],
        Cmd::Verify(VerifyCmd::Rank { cat, cap }) => vec![checks::verify_rank(&ctx.catalog(cat)?, *cap)],
        Cmd::Verify(VerifyCmd::Braid { n }) => vec![checks::verify_braid(*n)],
        Cmd::Verify(VerifyCmd::Connectivity { cat, kind }) => {
            let c = ctx.catalog(cat)?;
            let kind = match kind {
                EvidenceArg::D => EvidenceKind::D,
                EvidenceArg::E => EvidenceKind::E,
                EvidenceArg::F => EvidenceKind::F,
            };
            let (r, dot) = checks::verify_connectivity(kind, &c);
            ctx.write_dot(&dot)?;
            vec![r]
        }
    })
}

fn graphs(cat: &Catalog, simplex: Option<&[usize]>) -> Result<(Report, String), FormatError> {
    let s = &cat.surface;
    let (g, p) = checks::surface_of(cat);
    let ids: Vec<usize> = match simplex {
        Some(ids) => {
            if let Some(&u) = ids.iter().find(|&&u| u >= cat.len()) {
                return Err(FormatError::Invalid(format!("curve {u} is not in the catalog")));
            }
            ids.to_vec()
        }
        None => {
            let view = build_complex(cat, ComplexKind::Cs);
            let best = view.graph.maximum_clique();
            best.iter().flat_map(|&k| view.vertices[k].curves()).collect()
        }
    };
    let curves: Vec<CurveClass> = ids.iter().map(|&u| cat.curves[u].clone()).collect();
    let params = json!({ "simplex": ids, "depth": cat.depth, "weight_cap": cat.weight_cap });
    let adj = match complexes::adjacency_graph(s, &curves) {
        Ok(a) => a,
        Err(e) => return Ok((Report::error("complex.graphs", Some((g, p)), params, &e), String::new())),
    };
    let red = complexes::reduction_graph(s, &curves)?;
    let labels: Vec<String> = ids.iter().map(|u| format!("c{u}")).collect();
    let mut dot = adj.to_dot(&format!("adjacency_{g}_{p}"), &labels);
    dot.push_str(&red.to_dot(&format!("reduction_{g}_{p}")));
    let edges: Vec<(usize, usize)> =
        (0..adj.len()).flat_map(|u| adj.neighbours(u).filter(move |&v| u < v).map(move |v| (u, v))).collect();
    let report = Report::new(
        "complex.graphs",
        Some((g, p)),
        params,
        Verdict::from_bool(adj.is_connected() && red.edges.len() == ids.len()),
        json!({
            "adjacency_edges": edges,
            "adjacency_connected": adj.is_connected(),
            "reduction": red,
        }),
    );
    Ok((report, dot))
}
