use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use rdv_core::bench::{self, Algo, Family, EDGE_COUNT_LIMIT};
use rdv_core::gen::{gen_random, Density, GenConfig};
use rdv_core::geometry::Layout;
use rdv_core::matching::DEFAULT_ORACLE_BOUND;
use rdv_core::{
    adjacency_lists, delayed_greedy, delayed_greedy_delta, greedy_reference,
    maximum_matching_oracle, parse_instance, write_instance, write_matching, Exec, RdvInstance,
};

/// Maximum matchings in RDV graphs.
#[derive(Parser)]
#[command(name = "rdvmatch", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check an instance file; prints violations, exits 0 iff valid.
    Validate { file: PathBuf },
    /// Compute a maximum matching.
    Match {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = MatchAlgo::Delayed)]
        algo: MatchAlgo,
    },
    /// Maximum matching size by exhaustive search (small instances only).
    Oracle {
        file: PathBuf,
        #[arg(long, default_value_t = DEFAULT_ORACLE_BOUND)]
        bound: usize,
    },
    /// Write a random instance.
    Gen {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        tree_nodes: usize,
        #[arg(long)]
        vertices: usize,
        #[arg(long, default_value_t = 1)]
        delta: usize,
        /// Start paths higher up, giving more edges.
        #[arg(long)]
        dense: bool,
        #[arg(long, default_value_t = 3)]
        max_branching: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Time an instance family over n = 2^min_exp ..= 2^max_exp and write CSV.
    /// Exits nonzero if a crosscheck on the small instances fails.
    Bench {
        #[arg(long, value_enum, default_value_t = BenchFamily::Dense)]
        family: BenchFamily,
        #[arg(long, default_value_t = 10)]
        min_exp: u32,
        #[arg(long, default_value_t = 16)]
        max_exp: u32,
        #[arg(long, default_value_t = 5)]
        repeats: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = BenchAlgo::Delayed)]
        algo: BenchAlgo,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Dump node coordinates, segments and rays.
    Segments { file: PathBuf },
}

#[derive(Clone, Copy, ValueEnum)]
enum MatchAlgo {
    Delayed,
    Greedy,
    Delta,
}

#[derive(Clone, Copy, ValueEnum)]
enum BenchFamily {
    Dense,
    Random,
}

#[derive(Clone, Copy, ValueEnum)]
enum BenchAlgo {
    Delayed,
    EdgeScan,
}

fn read_instance(path: &Path) -> Result<RdvInstance> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse_instance(&text).with_context(|| format!("parsing {}", path.display()))
}

fn emit(output: Option<&Path>, text: &str) -> Result<()> {
    match output {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Validate { file } => {
            let inst = read_instance(&file)?;
            let violations = inst.validate();
            for v in &violations {
                println!("{v}");
            }
            if violations.is_empty() {
                println!(
                    "valid: {} vertices, {} tree nodes",
                    inst.len(),
                    inst.tree.len()
                );
                return Ok(ExitCode::SUCCESS);
            }
            Ok(ExitCode::FAILURE)
        }
        Command::Match { file, algo } => {
            let inst = read_instance(&file)?;
            let m = match algo {
                MatchAlgo::Delayed => delayed_greedy(&inst)?,
                MatchAlgo::Delta => delayed_greedy_delta(&inst)?,
                MatchAlgo::Greedy => {
                    greedy_reference(&adjacency_lists(&inst)?, &Layout::new(&inst).order)
                }
            };
            print!("{}", write_matching(&m));
            Ok(ExitCode::SUCCESS)
        }
        Command::Oracle { file, bound } => {
            let inst = read_instance(&file)?;
            let (size, _) = maximum_matching_oracle(&adjacency_lists(&inst)?, bound)?;
            println!("{size}");
            Ok(ExitCode::SUCCESS)
        }
        Command::Gen {
            seed,
            tree_nodes,
            vertices,
            delta,
            dense,
            max_branching,
            output,
        } => {
            let inst = gen_random(&GenConfig {
                seed,
                tree_nodes,
                n_vertices: vertices,
                max_branching,
                delta,
                density: if dense {
                    Density::Dense
                } else {
                    Density::Sparse
                },
            })?;
            emit(output.as_deref(), &write_instance(&inst))?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Bench {
            family,
            min_exp,
            max_exp,
            repeats,
            seed,
            algo,
            output,
        } => {
            if min_exp > max_exp || max_exp > 24 {
                bail!("need min-exp <= max-exp <= 24");
            }
            let family = match family {
                BenchFamily::Dense => Family::Dense,
                BenchFamily::Random => Family::Random,
            };
            let algo = match algo {
                BenchAlgo::Delayed => Algo::Delayed,
                BenchAlgo::EdgeScan => Algo::EdgeScan,
            };
            let small = (min_exp..=max_exp)
                .filter(|k| 1usize << k <= EDGE_COUNT_LIMIT)
                .map(|k| bench::family_instance(family, 1 << k, seed))
                .collect::<rdv_core::Result<Vec<_>>>()?;
            let reports = bench::crosscheck_sweep(&small, DEFAULT_ORACLE_BOUND, Exec::Parallel);
            let records = bench::bench_sweep(family, min_exp..=max_exp, repeats, seed, algo)?;
            emit(output.as_deref(), &bench::write_csv(&records, repeats))?;
            let mut ok = true;
            for (inst, r) in small.iter().zip(&reports) {
                for c in r.failures() {
                    ok = false;
                    eprintln!(
                        "crosscheck failed at n = {}: {} {}",
                        inst.len(),
                        c.name,
                        c.detail
                    );
                }
            }
            Ok(if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            })
        }
        Command::Segments { file } => {
            let inst = read_instance(&file)?;
            inst.ensure_valid()?;
            let layout = Layout::new(&inst);
            let c = &layout.coords;
            let mut out = String::new();
            for u in 0..inst.tree.len() {
                out.push_str(&format!(
                    "node {} {} {} {}\n",
                    u + 1,
                    c.x[u],
                    c.r[u],
                    c.y[u]
                ));
            }
            for &v in &layout.order {
                let s = layout.segment(&inst, v);
                out.push_str(&format!("seg {} {} {} {}\n", v + 1, s.x_lo, s.x_hi, s.ys));
            }
            for &v in &layout.order {
                for q in layout.rays(&inst, v) {
                    out.push_str(&format!("ray {} {} {}\n", v + 1, q.x, q.y_origin));
                }
            }
            print!("{out}");
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
