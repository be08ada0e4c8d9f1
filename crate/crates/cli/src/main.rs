//! `hirsch`: polytope files in, exact answers and verification reports out.

mod io;
mod svg;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use hirsch_core::constructions::{
    blend_graph, family_parameters, hirsch_excess, one_point_suspension, power, product, push_vertex,
    strong_dstep_iterate,
};
use hirsch_core::fans::{base_projections, torus_map};
use hirsch_core::santos::{self, verify_santos};
use hirsch_core::{facet_enumeration, BitSet, Point, Polytope, Prismatoid, VPolytope};

use io::{parse_hpoly, parse_poly, write_hpoly, write_poly, HRows, ParseError};

#[derive(Parser)]
#[command(name = "hirsch", version, about = "Exact polytope combinatorics around the 5-prismatoid of width 6")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Seed for randomized constructions.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Iteration cap for `construct dstep-iterate`.
    #[arg(long, global = true, default_value_t = 1)]
    steps: usize,
    /// Output representation for commands that emit a polytope.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Output file (stdout if absent; the SVG for `plot-torus`).
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[arg(long, global = true, default_value_t = 800)]
    svg_size: u32,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Poly,
    Hpoly,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Base {
    Plus,
    Minus,
    Both,
}

#[derive(Subcommand)]
enum Command {
    /// Facets, hull equations and incidences of a point set.
    Hull { file: PathBuf },
    /// Width of a prismatoid (dual distance between its bases).
    Width { file: PathBuf },
    /// Diameter of the vertex graph, or of the dual graph with `--dual`.
    Diameter {
        file: PathBuf,
        #[arg(long)]
        dual: bool,
    },
    /// Polar polytope about the vertex centroid.
    Polar { file: PathBuf },
    /// Full check suite for the 48-vertex prismatoid.
    VerifySantos {
        /// Candidate vertex file in table order; the built-in data if absent.
        #[arg(long)]
        poly: Option<PathBuf>,
    },
    #[command(subcommand)]
    Construct(Construct),
    /// Hirsch excess `l/(n-d) - 1`.
    Excess {
        #[arg(long)]
        dim: u64,
        #[arg(long)]
        facets: u64,
        #[arg(long)]
        diameter: u64,
    },
    /// Parameters of `j` blended copies of the `k`-th power.
    Family {
        #[arg(long)]
        dim: u64,
        #[arg(long)]
        facets: u64,
        #[arg(long)]
        diameter: u64,
        #[arg(long, default_value_t = 1)]
        k: u64,
        #[arg(long, default_value_t = 1)]
        j: u64,
    },
    /// Normal maps of the two bases drawn on the flat torus.
    PlotTorus {
        #[arg(long)]
        poly: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Base::Both)]
        base: Base,
    },
}

#[derive(Subcommand)]
enum Construct {
    /// One-point suspension at a vertex.
    Ops {
        file: PathBuf,
        #[arg(long)]
        vertex: usize,
    },
    /// Push a vertex toward the relative interior of a face.
    Push {
        file: PathBuf,
        #[arg(long)]
        vertex: usize,
        /// Comma-separated vertex indices of the target face; all vertices if absent.
        #[arg(long, value_delimiter = ',')]
        target: Option<Vec<usize>>,
    },
    /// Product of the given polytopes, raised to `--power`.
    Product {
        #[arg(required = true)]
        files: Vec<PathBuf>,
        #[arg(long, default_value_t = 1)]
        power: usize,
    },
    /// Blend two simple polytopes at a vertex each (graph only).
    Blend {
        first: PathBuf,
        second: PathBuf,
        #[arg(long)]
        v1: usize,
        #[arg(long)]
        v2: usize,
        /// Facet at `v2` matched with the i-th facet at `v1`; identity if absent.
        #[arg(long, value_delimiter = ',')]
        matching: Option<Vec<usize>>,
    },
    /// Repeated strong d-steps on a prismatoid.
    DstepIterate { file: PathBuf },
}

/// Vertices of a POLY file, or of an HPOLY file through the polar: the
/// origin must satisfy every inequality strictly.
fn read_poly(path: &Path) -> Result<VPolytope> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    if text.trim_start().starts_with("HPOLY") {
        let h = parse_hpoly(&text).with_context(|| format!("parsing {}", path.display()))?;
        return vertices_of(&h);
    }
    parse_poly(&text).with_context(|| format!("parsing {}", path.display()))
}

fn vertices_of(h: &HRows) -> Result<VPolytope> {
    if !h.equalities.is_empty() {
        bail!("vertex enumeration needs a full-dimensional H-polytope");
    }
    let polar = polar_points(h)?;
    let hull = Polytope::convex_hull(polar.vertices().to_vec())?;
    let rows = HRows::from_hull(hull.hpolytope(), None);
    polar_points(&rows)
}

/// `a / b` for every row `a·x <= b`.
fn polar_points(h: &HRows) -> Result<VPolytope> {
    let mut pts = Vec::with_capacity(h.inequalities.len());
    for row in &h.inequalities {
        let (a, b) = row.split_at(h.dim);
        if !b[0].is_positive() {
            bail!(hirsch_core::Error::OriginNotInterior);
        }
        let inv = b[0].recip();
        pts.push(Point::new(a.iter().map(|x| x * &inv).collect()));
    }
    Ok(VPolytope::new(pts)?)
}

fn read_polytope(path: &Path) -> Result<Polytope> {
    Ok(Polytope::new(read_poly(path)?)?)
}

fn emit(cli: &Cli, text: &str) -> Result<()> {
    match &cli.out {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn hull_text(vp: &VPolytope) -> Result<String> {
    let (h, inc) = facet_enumeration(vp)?;
    Ok(write_hpoly(&HRows::from_hull(&h, Some(&inc))))
}

fn emit_polytope(cli: &Cli, vp: &VPolytope) -> Result<()> {
    let text = match cli.format.unwrap_or(Format::Poly) {
        Format::Poly => write_poly(vp),
        Format::Hpoly => hull_text(vp)?,
    };
    emit(cli, &text)
}

fn construct(cli: &Cli, c: &Construct) -> Result<bool> {
    match c {
        Construct::Ops { file, vertex } => {
            let q = read_polytope(file)?;
            emit_polytope(cli, &one_point_suspension(&q, *vertex)?)?;
        }
        Construct::Push { file, vertex, target } => {
            let q = read_polytope(file)?;
            let target = match target {
                Some(t) => {
                    if let Some(&bad) = t.iter().find(|&&i| i >= q.n_vertices()) {
                        bail!(hirsch_core::Error::IndexOutOfRange { index: bad, len: q.n_vertices() });
                    }
                    q.vertex_set(t.iter().copied())
                }
                None => BitSet::full(q.n_vertices()),
            };
            let p = push_vertex(&q, *vertex, &target, cli.seed)?;
            emit_polytope(cli, p.vpolytope())?;
        }
        Construct::Product { files, power: k } => {
            let mut parts = files.iter().map(|f| read_poly(f));
            let first = parts.next().expect("clap requires one file")?;
            let mut acc = first;
            for p in parts {
                acc = product(&acc, &p?);
            }
            emit_polytope(cli, &power(&acc, *k)?)?;
        }
        Construct::Blend { first, second, v1, v2, matching } => {
            let (p1, p2) = (read_polytope(first)?, read_polytope(second)?);
            let identity: Vec<usize> = (0..p1.dim()).collect();
            let b = blend_graph(&p1, *v1, &p2, *v2, matching.as_deref().unwrap_or(&identity))?;
            let mut text = format!(
                "BLEND dim={} facets={} nodes={} diameter={}\n",
                b.dim,
                b.facet_count,
                b.graph.node_count(),
                b.diameter()?
            );
            for (a, c) in b.graph.edges() {
                text.push_str(&format!("EDGE {a} {c}\n"));
            }
            emit(cli, &text)?;
        }
        Construct::DstepIterate { file } => {
            let q = Prismatoid::detect(read_polytope(file)?)?;
            let (r, trace) = strong_dstep_iterate(&q, cli.steps, cli.seed)?;
            for e in &trace {
                println!("{e}");
            }
            emit_polytope(cli, r.polytope().vpolytope())?;
        }
    }
    Ok(true)
}

fn plot_torus(cli: &Cli, poly: Option<&Path>, base: Base) -> Result<bool> {
    let q = match poly {
        Some(p) => Prismatoid::detect(read_polytope(p)?)?,
        None => santos::santos_prismatoid(),
    };
    let (plus, minus) = base_projections(&q)?;
    let mut maps = Vec::new();
    if base != Base::Minus {
        maps.push(("plus", torus_map(&plus)?));
    }
    if base != Base::Plus {
        maps.push(("minus", torus_map(&minus)?));
    }
    for (_, m) in &maps {
        for (l, p) in m.labels.iter().zip(&m.points) {
            println!("TORUS {l} {:.6} {:.6}", p.x, p.y);
        }
        for &(a, b) in &m.edges {
            println!("EDGE {} {}", m.labels[a], m.labels[b]);
        }
    }
    let refs: Vec<(&str, &hirsch_core::fans::TorusMap)> = maps.iter().map(|(n, m)| (*n, m)).collect();
    let out = cli.out.clone().unwrap_or_else(|| PathBuf::from("torus.svg"));
    fs::write(&out, svg::torus_svg(&refs, cli.svg_size)).with_context(|| format!("writing {}", out.display()))?;
    Ok(true)
}

fn run(cli: &Cli) -> Result<bool> {
    match &cli.command {
        Command::Hull { file } => {
            let vp = read_poly(file)?;
            let text = match cli.format.unwrap_or(Format::Hpoly) {
                Format::Hpoly => hull_text(&vp)?,
                Format::Poly => write_poly(Polytope::convex_hull(vp.vertices().to_vec())?.vpolytope()),
            };
            emit(cli, &text)?;
        }
        Command::Width { file } => {
            let q = Prismatoid::detect(read_polytope(file)?)?;
            println!("{}", q.width());
        }
        Command::Diameter { file, dual } => {
            let p = read_polytope(file)?;
            let g = if *dual { p.dual_graph() } else { p.vertex_graph() };
            println!("{}", g.diameter()?);
        }
        Command::Polar { file } => {
            let text = fs::read_to_string(file).with_context(|| format!("reading {}", file.display()))?;
            let polar = if text.trim_start().starts_with("HPOLY") {
                polar_points(&parse_hpoly(&text).with_context(|| format!("parsing {}", file.display()))?)?
            } else {
                read_polytope(file)?.polar()?
            };
            emit_polytope(cli, &polar)?;
        }
        Command::VerifySantos { poly } => {
            let points = match poly {
                Some(p) => read_poly(p)?,
                None => santos::data::vertices(),
            };
            let report = verify_santos(&points);
            print!("{report}");
            return Ok(report.all_pass());
        }
        Command::Construct(c) => return construct(cli, c),
        Command::Excess { dim, facets, diameter } => {
            println!("{}", hirsch_excess(*dim, *facets, *diameter)?);
        }
        Command::Family { dim, facets, diameter, k, j } => {
            let f = family_parameters(*dim, *facets, *diameter, *k, *j)?;
            println!("dim {}", f.dim);
            println!("facets {}", f.facets);
            println!("diameter {}", f.diameter_lower_bound);
            println!("excess {}", f.excess_lower_bound);
            println!("limit {}", f.limit_excess);
            println!("power-bound {}", f.power_bound);
            println!("refined-bound {}", f.refined_bound);
        }
        Command::PlotTorus { poly, base } => return plot_torus(cli, poly.as_deref(), *base),
    }
    Ok(true)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            if e.downcast_ref::<ParseError>().is_some() || e.downcast_ref::<std::io::Error>().is_some() {
                ExitCode::from(2)
            } else {
                ExitCode::from(3)
            }
        }
    }
}
