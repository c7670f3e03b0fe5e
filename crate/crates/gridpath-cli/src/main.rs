//! Command-line surface: generate cycles and paths of a given length in 2D
//! and 3D grids, validate files, render, run the exhaustive oracle, and
//! measure runtime scaling.
//!
//! Exit codes: 0 = found/valid, 1 = proven nonexistent or invalid (with a
//! machine-readable reason on stdout), 2 = usage error.

use anyhow::Result;
use clap::{Parser, Subcommand, ValueEnum};
use gridpath::error::{Error, Reason};
use gridpath::grid::{shortest_len, validate_cycle, validate_path, RectGrid, Vertex};
use gridpath::grid3d::{validate_cycle_3d, validate_path_3d, Grid3D, Vertex3};
use gridpath::json::Artifact;
use gridpath::oracle::{self, OracleCfg};
use gridpath::{cycles, grid3d, paths, render, scaling};
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "gridpath", version, about = "fixed-length cycles and paths in grid graphs", long_about = None)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Ascii,
    Svg,
}

#[derive(Subcommand)]
enum Command {
    /// Cycle of exactly K vertices in the M x N grid
    Cycle {
        m: i64,
        n: i64,
        k: usize,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Path of exactly K vertices from (SX,SY) to (TX,TY) in the M x N grid
    Path {
        m: i64,
        n: i64,
        sx: i64,
        sy: i64,
        tx: i64,
        ty: i64,
        k: usize,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Cycle of exactly K vertices in the M x N x O grid (JSON only)
    Cycle3d { m: i64, n: i64, o: i64, k: usize },
    /// Path of exactly K vertices between two vertices of a 3D grid (JSON only)
    #[command(name = "path3d")]
    Path3d {
        m: i64,
        n: i64,
        o: i64,
        sx: i64,
        sy: i64,
        sz: i64,
        tx: i64,
        ty: i64,
        tz: i64,
        k: usize,
    },
    /// Validate a canonical JSON file (optionally against grid dimensions)
    Check {
        file: std::path::PathBuf,
        /// Containing grid as M N
        #[arg(long, num_args = 2, value_names = ["M", "N"])]
        grid: Option<Vec<i64>>,
        /// Containing 3D grid as M N O
        #[arg(long, num_args = 3, value_names = ["M", "N", "O"])]
        grid3d: Option<Vec<i64>>,
    },
    /// Runtime-scaling table (CSV) with a fitted log-log exponent
    Bench {
        #[arg(value_enum)]
        suite: BenchSuite,
        /// Comma-separated k values
        #[arg(long, value_delimiter = ',')]
        sizes: Option<Vec<usize>>,
        #[arg(long, default_value_t = 5)]
        repetitions: usize,
    },
    /// Exhaustive small-instance oracle
    Oracle {
        #[command(subcommand)]
        query: OracleQuery,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum BenchSuite {
    Cycles,
    Paths,
}

#[derive(Subcommand)]
enum OracleQuery {
    /// Does the M x N grid contain a cycle of exactly K vertices?
    CycleExists { m: i64, n: i64, k: usize },
    /// Does a path of exactly K vertices join the two vertices?
    PathExists {
        m: i64,
        n: i64,
        sx: i64,
        sy: i64,
        tx: i64,
        ty: i64,
        k: usize,
    },
    /// Vertex count of a longest path between the two vertices
    LongestPath {
        m: i64,
        n: i64,
        sx: i64,
        sy: i64,
        tx: i64,
        ty: i64,
    },
}

fn reason_payload(reason: Reason, extra: Option<(usize, usize)>) -> String {
    match extra {
        Some((l, cap)) => format!(
            r#"{{"error":"{}","l":{},"L":{}}}"#,
            reason.as_str(),
            l,
            cap
        ),
        None => format!(r#"{{"error":"{}"}}"#, reason.as_str()),
    }
}

fn emit_2d(grid: &RectGrid, vs: &[Vertex], closed: bool, format: Format) {
    match format {
        Format::Json => {
            let artifact = if closed {
                Artifact::Cycle(gridpath::grid::CycleSeq::try_new(vs.to_vec()).unwrap())
            } else {
                Artifact::Path(gridpath::grid::PathSeq::try_new(vs.to_vec()).unwrap())
            };
            println!("{}", artifact.to_json());
        }
        Format::Ascii => print!("{}", render::ascii(grid, vs, closed)),
        Format::Svg => print!("{}", render::svg(grid, vs, closed)),
    }
}

fn run() -> Result<u8> {
    let cli = Cli::parse();
    match cli.command {
        Command::Cycle { m, n, k, format } => {
            if m < 1 || n < 1 {
                eprintln!("grid dimensions must be at least 1");
                return Ok(2);
            }
            let grid = RectGrid::new(m, n);
            match cycles::find_cycle(&grid, k) {
                Ok(c) => {
                    emit_2d(&grid, c.vertices(), true, format);
                    Ok(0)
                }
                Err(Error::NoSuchCycle(reason)) => {
                    println!("{}", reason_payload(reason, None));
                    Ok(1)
                }
                Err(e) => Err(e.into()),
            }
        }
        Command::Path {
            m,
            n,
            sx,
            sy,
            tx,
            ty,
            k,
            format,
        } => {
            if m < 1 || n < 1 {
                eprintln!("grid dimensions must be at least 1");
                return Ok(2);
            }
            let grid = RectGrid::new(m, n);
            let (s, t) = (Vertex::new(sx, sy), Vertex::new(tx, ty));
            match paths::find_path(&grid, s, t, k) {
                Ok(p) => {
                    emit_2d(&grid, p.vertices(), false, format);
                    Ok(0)
                }
                Err(Error::NoSuchPath(reason)) => {
                    let extra = if s != t {
                        let l = shortest_len(s, t);
                        let cap = paths::longest_path(&grid, s, t).map(|p| p.len()).unwrap_or(0);
                        Some((l, cap))
                    } else {
                        None
                    };
                    println!("{}", reason_payload(reason, extra));
                    Ok(1)
                }
                Err(Error::VertexOutOfGrid(v)) => {
                    eprintln!("vertex {v} outside the grid");
                    Ok(2)
                }
                Err(e) => Err(e.into()),
            }
        }
        Command::Cycle3d { m, n, o, k } => {
            if m < 1 || n < 1 || o < 1 {
                eprintln!("grid dimensions must be at least 1");
                return Ok(2);
            }
            let g = Grid3D::new(m, n, o);
            match grid3d::find_cycle_3d(&g, k) {
                Ok(c) => {
                    println!("{}", Artifact::Cycle3(c).to_json());
                    Ok(0)
                }
                Err(Error::NoSuchCycle(reason)) => {
                    println!("{}", reason_payload(reason, None));
                    Ok(1)
                }
                Err(e) => Err(e.into()),
            }
        }
        Command::Path3d {
            m,
            n,
            o,
            sx,
            sy,
            sz,
            tx,
            ty,
            tz,
            k,
        } => {
            if m < 1 || n < 1 || o < 1 {
                eprintln!("grid dimensions must be at least 1");
                return Ok(2);
            }
            let g = Grid3D::new(m, n, o);
            let (s, t) = (Vertex3::new(sx, sy, sz), Vertex3::new(tx, ty, tz));
            if !g.contains(s) || !g.contains(t) {
                eprintln!("endpoint outside the grid");
                return Ok(2);
            }
            match grid3d::find_path_3d(&g, s, t, k) {
                Ok(p) => {
                    println!("{}", Artifact::Path3(p).to_json());
                    Ok(0)
                }
                Err(Error::NoSuchPath(reason)) => {
                    println!("{}", reason_payload(reason, None));
                    Ok(1)
                }
                Err(e) => Err(e.into()),
            }
        }
        Command::Check { file, grid, grid3d } => {
            let text = std::fs::read_to_string(&file)?;
            let artifact = match Artifact::from_json(&text) {
                Ok(a) => a,
                Err(e) => {
                    println!(r#"{{"valid":false,"violation":"{e}"}}"#);
                    return Ok(1);
                }
            };
            let outcome: std::result::Result<(), String> = match (&artifact, &grid, &grid3d) {
                (Artifact::Path(p), Some(dims), _) => {
                    let g = RectGrid::new(dims[0], dims[1]);
                    validate_path(p.vertices(), &g).map_err(|v| v.to_string())
                }
                (Artifact::Cycle(c), Some(dims), _) => {
                    let g = RectGrid::new(dims[0], dims[1]);
                    validate_cycle(c.vertices(), &g).map_err(|v| v.to_string())
                }
                (Artifact::Path3(p), _, Some(dims)) => {
                    let g = Grid3D::new(dims[0], dims[1], dims[2]);
                    validate_path_3d(p, &g)
                }
                (Artifact::Cycle3(c), _, Some(dims)) => {
                    let g = Grid3D::new(dims[0], dims[1], dims[2]);
                    validate_cycle_3d(c, &g)
                }
                // no grid given: structural validity was already established
                // by parsing (paths/cycles) — 3D structures need an explicit
                // check since parsing keeps them raw
                (Artifact::Path3(p), _, None) => {
                    let g = bounding_grid3(p);
                    validate_path_3d(p, &g)
                }
                (Artifact::Cycle3(c), _, None) => {
                    let g = bounding_grid3(c);
                    validate_cycle_3d(c, &g)
                }
                _ => Ok(()),
            };
            match outcome {
                Ok(()) => {
                    println!(r#"{{"valid":true}}"#);
                    Ok(0)
                }
                Err(v) => {
                    println!(r#"{{"valid":false,"violation":"{v}"}}"#);
                    Ok(1)
                }
            }
        }
        Command::Bench {
            suite,
            sizes,
            repetitions,
        } => {
            if repetitions == 0 {
                println!("k,median_ns,min_ns,max_ns");
                return Ok(0);
            }
            let samples = match suite {
                BenchSuite::Cycles => {
                    let ks = sizes.unwrap_or_else(|| vec![10_000, 100_000, 1_000_000]);
                    scaling::bench_cycles(&ks, repetitions)
                }
                BenchSuite::Paths => {
                    let ks = sizes.unwrap_or_else(|| vec![1_000, 3_000, 10_000]);
                    scaling::bench_paths(&ks, repetitions)
                }
            };
            print!("{}", scaling::csv(&samples));
            if samples.len() >= 2 {
                println!("# fitted log-log exponent: {:.3}", scaling::fit_loglog_slope(&samples));
            }
            Ok(0)
        }
        Command::Oracle { query } => {
            let bound = std::env::var("GRIDKPATH_ORACLE_BOUND")
                .ok()
                .and_then(|s| s.parse().ok())
                .unwrap_or(oracle::DEFAULT_BOUND);
            let cfg = OracleCfg::with_bound(bound);
            match query {
                OracleQuery::CycleExists { m, n, k } => {
                    let verts: Vec<Vertex> = RectGrid::new(m, n).vertices().collect();
                    let ans = oracle::exists_cycle(&verts, k, cfg)?;
                    println!("{ans}");
                    Ok(if ans { 0 } else { 1 })
                }
                OracleQuery::PathExists {
                    m,
                    n,
                    sx,
                    sy,
                    tx,
                    ty,
                    k,
                } => {
                    let verts: Vec<Vertex> = RectGrid::new(m, n).vertices().collect();
                    let ans = oracle::exists_path(
                        &verts,
                        Vertex::new(sx, sy),
                        Vertex::new(tx, ty),
                        k,
                        cfg,
                    )?;
                    println!("{ans}");
                    Ok(if ans { 0 } else { 1 })
                }
                OracleQuery::LongestPath {
                    m,
                    n,
                    sx,
                    sy,
                    tx,
                    ty,
                } => {
                    let verts: Vec<Vertex> = RectGrid::new(m, n).vertices().collect();
                    let len = oracle::longest_path_len(
                        &verts,
                        Vertex::new(sx, sy),
                        Vertex::new(tx, ty),
                        cfg,
                    )?;
                    println!("{len}");
                    Ok(0)
                }
            }
        }
    }
}

fn bounding_grid3(vs: &[Vertex3]) -> Grid3D {
    let m = vs.iter().map(|v| v.x).max().unwrap_or(1).max(1);
    let n = vs.iter().map(|v| v.y).max().unwrap_or(1).max(1);
    let o = vs.iter().map(|v| v.z).max().unwrap_or(1).max(1);
    Grid3D::new(m, n, o)
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
