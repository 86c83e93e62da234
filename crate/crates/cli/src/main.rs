use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand};
use serde::Serialize;

use rainbow_cli::{input, repro};
use rainbow_core::constructions::{
    build_basic, colored_apex_bipartite, colored_balanced_bipartite, colored_cocycle_apex,
    colored_k2_bipartite, colored_layered_bundle, colored_rose_tail, colored_wheel_pendant, to_dot,
};
use rainbow_core::rainbow::verify_k_rainbow_with_witnesses;
use rainbow_core::{rx_at_most, rx_exact, t_min, verify_k_rainbow, ColoredConstruction, ConstructionSpec};

#[derive(Parser)]
#[command(version, about = "Rainbow tree colorings: constructions, verification and exact search")]
struct Cli {
    /// Worker threads for parallel verification and search (0 = one per core).
    #[arg(long, global = true, env = "RAINBOW_THREADS", default_value_t = 0)]
    threads: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a colored construction and print it as JSON.
    Gen {
        #[arg(long)]
        family: String,
        /// Number of vertices.
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        l: Option<usize>,
        /// Subset size used to color the basic families exactly (default 3).
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        r: Option<usize>,
        /// Second part size for complete-bipartite (defaults to r).
        #[arg(long)]
        s: Option<usize>,
        #[arg(long)]
        p: Option<usize>,
        #[arg(long)]
        q: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Check that every k-subset has a rainbow tree; exits 1 when one does not.
    Verify {
        #[arg(long)]
        graph: PathBuf,
        /// Colors file; may be omitted when the graph file is a construction.
        #[arg(long)]
        colors: Option<PathBuf>,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        witnesses: bool,
    },
    /// Exact k-rainbow index, or the decision "at most L colors".
    Rx {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        at_most: Option<usize>,
    },
    /// Minimum size of a connected graph of order n with rx_k at most l.
    Tmin {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        l: usize,
    },
    /// Run the claim registry and print a TSV report.
    Repro {
        /// Skip claims that need exhaustive search above this order.
        #[arg(long, default_value_t = 7)]
        max_n: usize,
        /// Comma-separated claim ids; all claims when absent.
        #[arg(long, value_delimiter = ',')]
        claims: Vec<String>,
        /// Also write the report as JSON.
        #[arg(long)]
        json: Option<PathBuf>,
    },
}

fn emit(value: &impl Serialize, out: Option<&Path>) -> Result<()> {
    let mut text = serde_json::to_string_pretty(value)?;
    text.push('\n');
    match out {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn need(value: Option<usize>, flag: &str, family: &str) -> Result<usize> {
    value.ok_or_else(|| anyhow!("--{flag} is required for family {family}"))
}

struct GenArgs {
    family: String,
    n: Option<usize>,
    l: Option<usize>,
    k: Option<usize>,
    r: Option<usize>,
    s: Option<usize>,
    p: Option<usize>,
    q: Option<usize>,
}

/// Basic families carry no coloring of their own, so they get an optimal one
/// from the exact solver.
fn colored_basic(spec: ConstructionSpec, k: usize) -> Result<ColoredConstruction> {
    let graph = build_basic(spec)?;
    let rx = rx_exact(&graph, k)?;
    Ok(ColoredConstruction {
        spec,
        vertex_labels: (0..graph.n()).map(|v| v.to_string()).collect(),
        graph,
        coloring: rx.witness_coloring,
        claimed_k: k,
        claimed_colors: rx.value,
    })
}

fn generate(a: &GenArgs) -> Result<ColoredConstruction> {
    use ConstructionSpec::*;
    let f = a.family.as_str();
    let n = || need(a.n, "n", f);
    let k = a.k.unwrap_or(3);
    Ok(match f {
        "path" => colored_basic(Path { n: n()? }, k)?,
        "cycle" => colored_basic(Cycle { n: n()? }, k)?,
        "star" => colored_basic(Star { n: n()? }, k)?,
        "complete" => colored_basic(Complete { n: n()? }, k)?,
        "complete-bipartite" => {
            let r = need(a.r, "r", f)?;
            colored_basic(CompleteBipartite { r, s: a.s.unwrap_or(r) }, k)?
        }
        "wheel" => {
            let n = n()?;
            if n < 4 {
                bail!("wheel: n = {n} must be at least 4");
            }
            colored_basic(Wheel { spokes: n - 1 }, k)?
        }
        "rose" => colored_basic(Rose { p: need(a.p, "p", f)?, q: need(a.q, "q", f)? }, k)?,
        "balanced-bipartite" => {
            let r = match (a.r, a.n) {
                (Some(r), _) => r,
                (None, Some(n)) if n % 2 == 0 => n / 2,
                (None, Some(n)) => bail!("balanced-bipartite: n = {n} must be even"),
                (None, None) => bail!("--r or --n is required for family {f}"),
            };
            colored_balanced_bipartite(r)?
        }
        "apex-bipartite" => colored_apex_bipartite(n()?)?,
        "cocycle-apex" => colored_cocycle_apex(n()?)?,
        "wheel-pendant" => {
            let n = n()?;
            if n < 5 {
                bail!("wheel-pendant: n = {n} must be at least 5");
            }
            let wheel = build_basic(Wheel { spokes: n - 2 })?;
            colored_wheel_pendant(n, &rx_exact(&wheel, 3)?.witness_coloring)?
        }
        "layered-bundle" => colored_layered_bundle(n()?, need(a.l, "l", f)?)?,
        "rose-tail" => colored_rose_tail(n()?, need(a.l, "l", f)?)?,
        "k2-bipartite" => colored_k2_bipartite(n()?)?,
        other => bail!("unknown family {other:?}"),
    })
}

#[derive(Serialize)]
struct Decision {
    k: usize,
    l: usize,
    present: bool,
    colors: Option<Vec<u32>>,
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Gen { family, n, l, k, r, s, p, q, out, dot } => {
            let c = generate(&GenArgs { family, n, l, k, r, s, p, q })?;
            emit(&c, out.as_deref())?;
            if let Some(path) = dot {
                fs::write(&path, to_dot(&c)).with_context(|| format!("writing {}", path.display()))?;
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { graph, colors, k, witnesses } => {
            let (g, embedded) = input::load_graph(&graph)?;
            let coloring = match (colors, embedded) {
                (Some(path), _) => input::load_coloring(&path)?,
                (None, Some(c)) => c,
                (None, None) => bail!("{}: no colors in the graph file; pass --colors", graph.display()),
            };
            let report = if witnesses {
                verify_k_rainbow_with_witnesses(&g, &coloring, k)?
            } else {
                verify_k_rainbow(&g, &coloring, k)?
            };
            emit(&report, None)?;
            Ok(if report.ok { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        Command::Rx { graph, k, at_most } => {
            let (g, _) = input::load_graph(&graph)?;
            match at_most {
                Some(l) => {
                    let found = rx_at_most(&g, k, l)?;
                    emit(
                        &Decision {
                            k,
                            l,
                            present: found.is_some(),
                            colors: found.map(|c| c.colors().to_vec()),
                        },
                        None,
                    )?;
                }
                None => emit(&rx_exact(&g, k)?, None)?,
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Tmin { n, k, l } => {
            emit(&t_min(n, k, l)?, None)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Repro { max_n, claims, json } => {
            let report = repro::run(max_n, &claims)?;
            print!("{}", report.to_tsv());
            if let Some(path) = json {
                emit(&report, Some(&path))?;
            }
            Ok(if report.refuted() == 0 { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(cli.threads).build_global() {
        eprintln!("error: configuring threads: {e}");
        return ExitCode::from(2);
    }
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
