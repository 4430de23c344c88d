//! Reference adjacency: two vertices are adjacent iff their subtrees share
//! a host-tree node. This is the slow, obviously-correct path that every
//! geometric shortcut is checked against.

use crate::error::{Error, Result};
use crate::instance::{Ancestry, RdvInstance, VertexPath};
use crate::par::{self, Exec};

pub struct AdjacencyOracle<'a> {
    inst: &'a RdvInstance,
    ancestry: Ancestry,
}

impl<'a> AdjacencyOracle<'a> {
    /// `inst` must be valid.
    pub fn new(inst: &'a RdvInstance) -> Self {
        AdjacencyOracle {
            inst,
            ancestry: Ancestry::new(&inst.tree),
        }
    }

    /// Two downward paths meet iff the deeper of the two tops lies on the
    /// other path.
    pub fn paths_meet(&self, p: VertexPath, q: VertexPath) -> bool {
        let a = &self.ancestry;
        let (upper, lower) = if a.depth[p.top] <= a.depth[q.top] {
            (p, q)
        } else {
            (q, p)
        };
        a.is_ancestor(upper.top, lower.top) && a.is_ancestor(lower.top, upper.bottom)
    }

    pub fn adjacent(&self, i: usize, j: usize) -> Result<bool> {
        let n = self.inst.len();
        for index in [i, j] {
            if index >= n {
                return Err(Error::VertexOutOfRange { index, len: n });
            }
        }
        if i == j {
            return Err(Error::SameVertex(i));
        }
        Ok(self.adjacent_unchecked(i, j))
    }

    pub(crate) fn adjacent_unchecked(&self, i: usize, j: usize) -> bool {
        let (vi, vj) = (&self.inst.vertices[i], &self.inst.vertices[j]);
        vi.paths()
            .any(|p| vj.paths().any(|q| self.paths_meet(p, q)))
    }

    /// Sorted neighbour lists of the whole graph, one row per vertex.
    pub fn adjacency_lists(&self, exec: Exec) -> Vec<Vec<usize>> {
        let n = self.inst.len();
        par::map_range(exec, n, |i| {
            (0..n)
                .filter(|&j| j != i && self.adjacent_unchecked(i, j))
                .collect()
        })
    }

    pub fn edge_count(&self, exec: Exec) -> usize {
        let n = self.inst.len();
        par::map_range(exec, n, |i| {
            (i + 1..n)
                .filter(|&j| self.adjacent_unchecked(i, j))
                .count()
        })
        .into_iter()
        .sum()
    }
}

/// One-shot adjacency query. Builds the ancestry index each call; use
/// [`AdjacencyOracle`] for repeated queries.
pub fn adjacency_oracle(inst: &RdvInstance, i: usize, j: usize) -> Result<bool> {
    inst.ensure_valid()?;
    AdjacencyOracle::new(inst).adjacent(i, j)
}

/// Materialized adjacency of a valid instance.
pub fn adjacency_lists(inst: &RdvInstance) -> Result<Vec<Vec<usize>>> {
    inst.ensure_valid()?;
    Ok(AdjacencyOracle::new(inst).adjacency_lists(Exec::default()))
}
