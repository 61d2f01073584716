//! Exhaustive classes of connected graphs and extremal searches over them.

mod generate;
mod search;
mod table;
mod theorems;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::graph::Graph;

pub use generate::{children, generate, generate_all, GENERATION_CAP};
pub use search::{search, search_min_f, search_min_vertex_subgraph_number, Minimizer, Objective, SearchReport};
pub use table::{table_cells, verify_table, CellStatus, TableCell, TableCellReport, TableEntry, TableReport};
pub use theorems::{theorem_ids, verify_theorem, TheoremReport};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Subset {
    #[default]
    All,
    Trees,
    NonTrees,
}

impl FromStr for Subset {
    type Err = Error;

    fn from_str(s: &str) -> Result<Subset, Error> {
        match s {
            "all" => Ok(Subset::All),
            "trees" => Ok(Subset::Trees),
            "nontrees" => Ok(Subset::NonTrees),
            _ => Err(Error::InvalidFamily(format!("unknown subset {s:?}"))),
        }
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Subset::All => "all",
            Subset::Trees => "trees",
            Subset::NonTrees => "nontrees",
        })
    }
}

/// Connected graphs on `n` vertices, optionally with exactly `k` cut
/// vertices and girth at least `min_girth`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ClassSpec {
    pub n: usize,
    pub k: Option<usize>,
    pub min_girth: Option<usize>,
    pub subset: Subset,
}

impl ClassSpec {
    pub fn new(n: usize) -> ClassSpec {
        ClassSpec { n, k: None, min_girth: None, subset: Subset::All }
    }

    pub fn with_cut_vertices(self, k: usize) -> ClassSpec {
        ClassSpec { k: Some(k), ..self }
    }

    pub fn with_min_girth(self, g: usize) -> ClassSpec {
        ClassSpec { min_girth: Some(g), ..self }
    }

    pub fn with_subset(self, subset: Subset) -> ClassSpec {
        ClassSpec { subset, ..self }
    }

    /// Properties inherited by induced subgraphs, so safe to test on
    /// every generation level.
    pub(crate) fn hereditary(&self, g: &Graph) -> bool {
        if self.subset == Subset::Trees && g.edge_count() >= g.n() {
            return false;
        }
        match self.min_girth {
            Some(bound) if bound > 3 => g.girth().is_at_least(bound),
            _ => true,
        }
    }

    /// Full membership test for a connected candidate.
    pub fn admits(&self, g: &Graph) -> bool {
        g.n() == self.n
            && g.is_connected()
            && self.k.is_none_or(|k| g.cut_vertices().map(|c| c.count_ones() as usize) == Ok(k))
            && match self.subset {
                Subset::All => true,
                Subset::Trees => g.is_tree(),
                Subset::NonTrees => !g.is_tree(),
            }
            && self.min_girth.is_none_or(|b| g.girth().is_at_least(b))
    }
}

impl fmt::Display for ClassSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={}", self.n)?;
        if let Some(k) = self.k {
            write!(f, " k={k}")?;
        }
        if let Some(g) = self.min_girth {
            write!(f, " girth>={g}")?;
        }
        write!(f, " subset={}", self.subset)
    }
}
