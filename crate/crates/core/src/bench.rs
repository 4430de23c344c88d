//! Cross-checking every fast answer against the slow oracles, and timing
//! sweeps over instance families.

use std::fmt;
use std::ops::RangeInclusive;
use std::time::Instant;

use crate::adjacency::AdjacencyOracle;
use crate::error::Result;
use crate::gen::{gen_dense, gen_random, GenConfig};
use crate::geometry::Layout;
use crate::instance::RdvInstance;
use crate::matching::{delayed_greedy, greedy_reference, maximum_matching_oracle};
use crate::par::{self, Exec};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Fail,
    Skipped,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub outcome: Outcome,
    pub detail: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CrosscheckReport {
    pub checks: Vec<Check>,
}

impl CrosscheckReport {
    fn push(&mut self, name: &'static str, ok: bool, detail: impl Into<String>) {
        self.checks.push(Check {
            name,
            outcome: if ok { Outcome::Pass } else { Outcome::Fail },
            detail: detail.into(),
        });
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.outcome != Outcome::Fail)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.outcome == Outcome::Fail)
    }
}

impl fmt::Display for CrosscheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let tag = match c.outcome {
                Outcome::Pass => "pass",
                Outcome::Fail => "FAIL",
                Outcome::Skipped => "skip",
            };
            writeln!(f, "{tag} {} {}", c.name, c.detail)?;
        }
        Ok(())
    }
}

/// Runs the delayed greedy on `inst` and checks the result against
/// materialized adjacency: validity, maximality, identity with the plain
/// greedy on the same order, and, for `n <= bound`, optimality.
pub fn crosscheck(inst: &RdvInstance, bound: usize) -> CrosscheckReport {
    let mut report = CrosscheckReport::default();
    let violations = inst.validate();
    report.push(
        "valid_instance",
        violations.is_empty(),
        format!("{} violation(s)", violations.len()),
    );
    if !violations.is_empty() {
        return report;
    }
    let m = match delayed_greedy(inst) {
        Ok(m) => m,
        Err(e) => {
            report.push("delayed_greedy", false, e.to_string());
            return report;
        }
    };
    let adj = AdjacencyOracle::new(inst).adjacency_lists(Exec::Sequential);
    report.push(
        "matching_valid",
        m.is_valid_in(&adj),
        format!("{} pairs", m.len()),
    );
    report.push("maximal", m.is_maximal_in(&adj), "");

    let layout = Layout::new(inst);
    let g = greedy_reference(&adj, &layout.order);
    report.push(
        "greedy_equivalence",
        g == m,
        format!("greedy {} vs delayed {}", g.len(), m.len()),
    );

    if inst.len() <= bound {
        match maximum_matching_oracle(&adj, bound) {
            Ok((best, _)) => report.push(
                "optimal",
                best == m.len(),
                format!("{} == {}", m.len(), best),
            ),
            Err(e) => report.push("optimal", false, e.to_string()),
        }
    } else {
        report.checks.push(Check {
            name: "optimal",
            outcome: Outcome::Skipped,
            detail: format!("n = {} above bound {bound}", inst.len()),
        });
    }
    report
}

/// [`crosscheck`] over many instances, spread across threads when `exec`
/// allows. Reports come back in input order.
pub fn crosscheck_sweep(
    instances: &[RdvInstance],
    bound: usize,
    exec: Exec,
) -> Vec<CrosscheckReport> {
    par::map_slice(exec, instances, |inst| crosscheck(inst, bound))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Dense,
    Random,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Algo {
    /// Ray-shooting delayed greedy.
    Delayed,
    /// Materialize the edges through the oracle, then run the plain greedy.
    EdgeScan,
}

impl Algo {
    pub fn name(self) -> &'static str {
        match self {
            Algo::Delayed => "delayed",
            Algo::EdgeScan => "edge_scan",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BenchRecord {
    pub n: usize,
    pub tree_nodes: usize,
    /// `None` when the edge set was too large to count.
    pub edges: Option<usize>,
    pub algo: &'static str,
    pub median_ns: u64,
    pub matching_size: usize,
    pub seed: u64,
}

/// Largest n whose edges get counted for the CSV.
pub const EDGE_COUNT_LIMIT: usize = 1 << 12;

pub fn family_instance(family: Family, n: usize, seed: u64) -> Result<RdvInstance> {
    match family {
        Family::Dense => gen_dense(n),
        Family::Random => gen_random(&GenConfig {
            seed,
            tree_nodes: n,
            n_vertices: n,
            max_branching: 4,
            ..GenConfig::default()
        }),
    }
}

/// Times one algorithm on `inst`: `repeats` runs, median wall-clock
/// nanoseconds. Always sequential.
pub fn time_median(inst: &RdvInstance, algo: Algo, repeats: usize) -> Result<(u64, usize)> {
    let mut times = Vec::with_capacity(repeats.max(1));
    let mut size = 0;
    // One untimed warm-up run, then `repeats` timed ones.
    for rep in 0..=repeats.max(1) {
        let start = Instant::now();
        let m = match algo {
            Algo::Delayed => delayed_greedy(inst)?,
            Algo::EdgeScan => {
                inst.ensure_valid()?;
                let adj = AdjacencyOracle::new(inst).adjacency_lists(Exec::Sequential);
                let layout = Layout::new(inst);
                greedy_reference(&adj, &layout.order)
            }
        };
        if rep > 0 {
            times.push(start.elapsed().as_nanos().max(1) as u64);
        }
        size = m.len();
    }
    times.sort_unstable();
    Ok((times[times.len() / 2], size))
}

/// One record per `n = 2^k`, `k` in `exponents`.
pub fn bench_sweep(
    family: Family,
    exponents: RangeInclusive<u32>,
    repeats: usize,
    seed: u64,
    algo: Algo,
) -> Result<Vec<BenchRecord>> {
    exponents
        .map(|k| {
            let n = 1usize << k;
            let inst = family_instance(family, n, seed)?;
            let edges = (n <= EDGE_COUNT_LIMIT)
                .then(|| AdjacencyOracle::new(&inst).edge_count(Exec::Parallel));
            let (median_ns, matching_size) = time_median(&inst, algo, repeats)?;
            Ok(BenchRecord {
                n,
                tree_nodes: inst.tree.len(),
                edges,
                algo: algo.name(),
                median_ns,
                matching_size,
                seed,
            })
        })
        .collect()
}

pub const CSV_HEADER: &str = "n,tree_nodes,edges,algo,median_ns,matching_size,seed";

pub fn write_csv(records: &[BenchRecord], repeats: usize) -> String {
    let mut out = format!(
        "# median wall-clock ns over {repeats} run(s); timing covers the matching call only\n{CSV_HEADER}\n"
    );
    for r in records {
        let edges = r
            .edges
            .map_or_else(|| "not_materialized".to_string(), |e| e.to_string());
        out.push_str(&format!(
            "{},{},{},{},{},{},{}\n",
            r.n, r.tree_nodes, edges, r.algo, r.median_ns, r.matching_size, r.seed
        ));
    }
    out
}
