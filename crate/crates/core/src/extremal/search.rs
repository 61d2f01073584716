//! Minimizer searches over a generated class.
//!
//! Values are only needed exactly up to the best one seen so far, so each
//! graph is evaluated with an enumeration that stops past the current
//! bound. The bound only shrinks and every graph at the final minimum is
//! counted exactly, so the result does not depend on evaluation order or
//! thread count.

use std::fmt;
use std::str::FromStr;
use std::sync::atomic::{AtomicU64, Ordering};
use std::time::Instant;

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use super::{generate, ClassSpec};
use crate::canon::vertex_orbits;
use crate::census::{count_containing_bounded, Count};
use crate::decompose::{all_subgraph_numbers, count_via_decomposition};
use crate::error::{Error, Result};
use crate::graph::{members, Graph, VertexSet};
use crate::io::to_graph6;

const SEED_GRAPHS: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Objective {
    /// Total number of connected subgraphs.
    #[serde(rename = "F")]
    Total,
    /// Smallest subgraph number of any vertex.
    #[serde(rename = "minf")]
    MinVertex,
}

impl FromStr for Objective {
    type Err = Error;

    fn from_str(s: &str) -> Result<Objective> {
        match s {
            "F" => Ok(Objective::Total),
            "minf" => Ok(Objective::MinVertex),
            _ => Err(Error::InvalidFamily(format!("unknown objective {s:?}"))),
        }
    }
}

impl fmt::Display for Objective {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Objective::Total => "F",
            Objective::MinVertex => "minf",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Minimizer {
    pub graph6: String,
    /// Orbits of the vertices attaining the minimum (vertex objective only).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub argmin_orbits: Option<Vec<Vec<usize>>>,
    #[serde(skip)]
    pub graph: Graph,
}

fn decimal<S: Serializer>(value: &Option<Count>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match value {
        Some(v) => s.serialize_str(&v.to_str_radix(10)),
        None => s.serialize_none(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SearchReport {
    pub class: ClassSpec,
    pub objective: Objective,
    #[serde(serialize_with = "decimal")]
    pub minimum: Option<Count>,
    pub minimizers: Vec<Minimizer>,
    pub class_size: usize,
    pub wall_time_ms: Option<u64>,
}

impl SearchReport {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    /// `min=<value> minimizers=<g6,...> classes=<count>`
    pub fn summary(&self) -> String {
        let min = self.minimum.as_ref().map_or("none".to_string(), |m| m.to_string());
        let names: Vec<&str> = self.minimizers.iter().map(|m| m.graph6.as_str()).collect();
        format!("min={min} minimizers={} classes={}", names.join(","), self.class_size)
    }

    pub fn to_text(&self) -> String {
        let mut out =
            format!("class: {}\nobjective: {}\nclass_size: {}\n", self.class, self.objective, self.class_size);
        match &self.minimum {
            Some(m) => out += &format!("minimum: {m}\n"),
            None => out += "minimum: none (empty class)\n",
        }
        for m in &self.minimizers {
            out += &format!("minimizer: {}", m.graph6);
            if let Some(orbits) = &m.argmin_orbits {
                let shown: Vec<String> =
                    orbits.iter().map(|o| o.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",")).collect();
                out += &format!(" argmin_orbits={{{}}}", shown.join("}{"));
            }
            out.push('\n');
        }
        if let Some(ms) = self.wall_time_ms {
            out += &format!("wall_time_ms: {ms}\n");
        }
        out
    }
}

/// Exact value and argmin set, or `None` once the value is known to exceed
/// the bound.
fn evaluate(g: &Graph, objective: Objective, bound: &AtomicU64) -> Result<Option<(u64, VertexSet)>> {
    match objective {
        Objective::Total => {
            let value = count_containing_bounded(g, 0, bound.load(Ordering::Relaxed))?;
            if let Some(v) = value {
                bound.fetch_min(v, Ordering::Relaxed);
            }
            Ok(value.map(|v| (v, 0)))
        }
        Objective::MinVertex => {
            let mut best: Option<(u64, VertexSet)> = None;
            for v in 0..g.n() {
                if let Some(x) = count_containing_bounded(g, 1 << v, bound.load(Ordering::Relaxed))? {
                    bound.fetch_min(x, Ordering::Relaxed);
                    best = match best {
                        Some((b, set)) if b == x => Some((b, set | 1 << v)),
                        Some((b, set)) if b < x => Some((b, set)),
                        _ => Some((x, 1 << v)),
                    };
                }
            }
            Ok(best)
        }
    }
}

/// A starting bound from a few sparse members, computed through cut vertices.
fn seed(graphs: &[Graph], objective: Objective) -> u64 {
    let mut sparse: Vec<&Graph> = graphs.iter().collect();
    sparse.sort_by_key(|g| g.edge_count());
    sparse
        .iter()
        .take(SEED_GRAPHS)
        .filter_map(|g| match objective {
            Objective::Total => count_via_decomposition(g).ok(),
            Objective::MinVertex => all_subgraph_numbers(g).ok().and_then(|f| f.into_iter().min()),
        })
        .filter_map(|c| u64::try_from(c).ok())
        .min()
        .unwrap_or(u64::MAX)
}

fn run(class: &ClassSpec, objective: Objective) -> Result<SearchReport> {
    let start = Instant::now();
    let mut graphs = Vec::new();
    generate(class, |g| graphs.push(g.clone()))?;
    search_in(class, &graphs, objective, start)
}

/// Search over an already generated class.
pub(crate) fn search_in(
    class: &ClassSpec,
    graphs: &[Graph],
    objective: Objective,
    start: Instant,
) -> Result<SearchReport> {
    let class_size = graphs.len();
    let bound = AtomicU64::new(seed(graphs, objective));
    let values: Vec<Option<(u64, VertexSet)>> =
        graphs.par_iter().map(|g| evaluate(g, objective, &bound)).collect::<Result<_>>()?;
    let minimum = values.iter().flatten().map(|v| v.0).min();
    let mut minimizers: Vec<Minimizer> = graphs
        .iter()
        .zip(&values)
        .filter_map(|(g, v)| match v {
            Some((x, argmin)) if Some(*x) == minimum => Some((g, *argmin)),
            _ => None,
        })
        .map(|(g, argmin)| {
            let argmin_orbits = (objective == Objective::MinVertex).then(|| {
                vertex_orbits(g).into_iter().filter(|o| o & argmin != 0).map(|o| members(o).collect()).collect()
            });
            Ok(Minimizer { graph6: to_graph6(g)?, argmin_orbits, graph: g.clone() })
        })
        .collect::<Result<_>>()?;
    minimizers.sort_by(|a, b| a.graph6.cmp(&b.graph6));
    Ok(SearchReport {
        class: *class,
        objective,
        minimum: minimum.map(Count::from),
        minimizers,
        class_size,
        wall_time_ms: Some(start.elapsed().as_millis() as u64),
    })
}

/// Runs a search on a private pool of `jobs` worker threads.
pub fn search(class: &ClassSpec, objective: Objective, jobs: usize) -> Result<SearchReport> {
    let pool = rayon::ThreadPoolBuilder::new().num_threads(jobs.max(1)).build().expect("thread pool starts");
    pool.install(|| run(class, objective))
}

pub fn search_min_f(class: &ClassSpec) -> Result<SearchReport> {
    run(class, Objective::Total)
}

pub fn search_min_vertex_subgraph_number(class: &ClassSpec) -> Result<SearchReport> {
    run(class, Objective::MinVertex)
}
