//! Greedy matching on a vertex order, its delayed rephrasing driven by the
//! ray-shooting index, and the exhaustive reference used to check them.

mod delayed;
mod exact;
mod greedy;
mod simple;

pub use delayed::{delayed_greedy, delayed_greedy_delta, delayed_greedy_with_layout};
pub use exact::{maximum_matching_oracle, DEFAULT_ORACLE_BOUND, MAX_ORACLE_BOUND};
pub use greedy::greedy_reference;
pub use simple::{first_non_simple_in_peel, is_simple_vertex};

/// Matched vertex pairs in discovery order. Equality ignores both pair
/// order and orientation.
#[derive(Debug, Clone, Default)]
pub struct Matching {
    pub pairs: Vec<(usize, usize)>,
}

impl Matching {
    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// Pairs as `(min, max)`, sorted.
    pub fn sorted_edges(&self) -> Vec<(usize, usize)> {
        let mut e: Vec<_> = self
            .pairs
            .iter()
            .map(|&(a, b)| (a.min(b), a.max(b)))
            .collect();
        e.sort_unstable();
        e
    }

    /// Partner of every vertex in `0..n`, or `None` if some vertex is used twice.
    pub fn mates(&self, n: usize) -> Option<Vec<Option<usize>>> {
        let mut mate = vec![None; n];
        for &(a, b) in &self.pairs {
            if a == b || a >= n || b >= n || mate[a].is_some() || mate[b].is_some() {
                return None;
            }
            mate[a] = Some(b);
            mate[b] = Some(a);
        }
        Some(mate)
    }

    /// Vertex-disjoint and every pair an edge of `adj`.
    pub fn is_valid_in(&self, adj: &[Vec<usize>]) -> bool {
        self.mates(adj.len()).is_some() && self.pairs.iter().all(|&(a, b)| adj[a].contains(&b))
    }

    /// No edge of `adj` joins two unmatched vertices.
    pub fn is_maximal_in(&self, adj: &[Vec<usize>]) -> bool {
        let Some(mate) = self.mates(adj.len()) else {
            return false;
        };
        adj.iter()
            .enumerate()
            .all(|(v, nb)| mate[v].is_some() || nb.iter().all(|&u| mate[u].is_some()))
    }
}

impl PartialEq for Matching {
    fn eq(&self, other: &Self) -> bool {
        self.sorted_edges() == other.sorted_edges()
    }
}

impl Eq for Matching {}

impl FromIterator<(usize, usize)> for Matching {
    fn from_iter<I: IntoIterator<Item = (usize, usize)>>(iter: I) -> Self {
        Matching {
            pairs: iter.into_iter().collect(),
        }
    }
}
