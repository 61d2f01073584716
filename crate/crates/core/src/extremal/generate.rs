//! Isomorphism-free generation by canonical augmentation.
//!
//! A graph on `p + 1` vertices is produced from a canonical graph on `p`
//! vertices by adding vertex `p` with some neighbor set. The child is kept
//! only when deleting its canonically last vertex gives back the parent, so
//! every isomorphism class has exactly one parent; duplicates among the
//! children of one parent are removed by canonical form. Disconnected graphs
//! are kept on inner levels because a connected graph may have a
//! disconnected canonical parent.

use rayon::prelude::*;

use super::ClassSpec;
use crate::canon::{canonical_form, canonize};
use crate::error::{Error, Result};
use crate::graph::{full_set, Graph};

/// Largest order accepted by [`generate`].
pub const GENERATION_CAP: usize = 10;

const CHUNK: usize = 256;

/// Canonical children of the canonical graph `parent` that pass `keep`,
/// sorted.
pub fn children(parent: &Graph, keep: impl Fn(&Graph) -> bool) -> Vec<Graph> {
    let p = parent.n();
    let degrees: Vec<usize> = (0..p).map(|v| parent.degree(v)).collect();
    let mut out = Vec::new();
    let mut rows = parent.rows().to_vec();
    rows.push(0);
    for s in 0u64..(1u64 << p) {
        // the canonically last vertex has maximum degree, so the new
        // vertex must too
        let d = s.count_ones() as usize;
        if (0..p).any(|v| degrees[v] + (s >> v & 1) as usize > d) {
            continue;
        }
        for (v, (row, &old)) in rows.iter_mut().zip(parent.rows()).enumerate() {
            *row = old | ((s >> v & 1) << p);
        }
        rows[p] = s;
        let child = Graph::from_rows(rows.clone());
        if !keep(&child) {
            continue;
        }
        let canon = canonize(&child);
        let last = canon.labeling.iter().position(|&l| l == p).unwrap();
        if last != p {
            let (rest, _) = child.induced(full_set(p + 1) & !(1 << last));
            if canonical_form(&rest) != *parent {
                continue;
            }
        }
        out.push(canon.graph);
    }
    out.sort();
    out.dedup();
    out
}

fn check(class: &ClassSpec) -> Result<()> {
    if class.n == 0 {
        return Err(Error::BadVertexCount(0));
    }
    if class.n > GENERATION_CAP {
        return Err(Error::OverCap { n: class.n, cap: GENERATION_CAP });
    }
    Ok(())
}

/// Visits one canonical representative of every isomorphism class in
/// `class`, in a fixed order, and returns how many were visited.
pub fn generate(class: &ClassSpec, mut visit: impl FnMut(&Graph)) -> Result<usize> {
    check(class)?;
    if class.k.is_some_and(|k| k > class.n.saturating_sub(2)) {
        return Ok(0);
    }
    let k1 = Graph::empty(1)?;
    if class.n == 1 {
        return Ok(if class.admits(&k1) {
            visit(&k1);
            1
        } else {
            0
        });
    }
    let mut level = vec![k1];
    for _ in 2..class.n {
        level = level.par_iter().map(|g| children(g, |c| class.hereditary(c))).collect::<Vec<_>>().concat();
    }
    let mut visited = 0;
    for chunk in level.chunks(CHUNK) {
        let found: Vec<Vec<Graph>> =
            chunk.par_iter().map(|g| children(g, |c| class.hereditary(c) && class.admits(c))).collect();
        for g in found.iter().flatten() {
            visit(g);
            visited += 1;
        }
    }
    Ok(visited)
}

pub fn generate_all(class: &ClassSpec) -> Result<Vec<Graph>> {
    let mut all = Vec::new();
    generate(class, |g| all.push(g.clone()))?;
    Ok(all)
}
