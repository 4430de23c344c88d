//! Exhaustive maximum matching for small graphs. Shares nothing with the
//! greedy code so it can serve as an independent check.

use std::collections::HashMap;

use super::Matching;
use crate::error::{Error, Result};

pub const DEFAULT_ORACLE_BOUND: usize = 24;
/// Vertex sets are `u64` bitmasks.
pub const MAX_ORACLE_BOUND: usize = 64;

/// Size of a maximum matching of `adj` and one matching of that size.
///
/// Branches on the lowest-id vertex that still has a neighbour: match it to
/// each neighbour in turn, or leave it unmatched. A branch is cut once half
/// the remaining non-isolated vertices cannot beat the best found so far.
/// Subproblems are memoized on the set of remaining vertices.
pub fn maximum_matching_oracle(adj: &[Vec<usize>], bound: usize) -> Result<(usize, Matching)> {
    let n = adj.len();
    let bound = bound.min(MAX_ORACLE_BOUND);
    if n > bound {
        return Err(Error::OracleBound { n, bound });
    }
    let nbr: Vec<u64> = adj
        .iter()
        .map(|row| row.iter().fold(0u64, |m, &u| m | (1 << u)))
        .collect();
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut search = Search {
        nbr,
        memo: HashMap::new(),
    };
    let best = search.solve(all);

    // Replay the optimal decisions to recover a witness.
    let mut m = Matching::default();
    let mut alive = search.strip(all);
    while alive != 0 {
        let target = search.solve(alive);
        if target == 0 {
            break;
        }
        let v = alive.trailing_zeros() as usize;
        let rest = alive & !(1 << v);
        let partner = bits(search.nbr[v] & rest)
            .find(|&u| 1 + search.solve(search.strip(rest & !(1 << u))) == target);
        match partner {
            Some(u) => {
                m.pairs.push((v, u));
                alive = search.strip(rest & !(1 << u));
            }
            None => alive = search.strip(rest),
        }
    }
    debug_assert_eq!(m.len(), best);
    Ok((best, m))
}

struct Search {
    nbr: Vec<u64>,
    memo: HashMap<u64, usize>,
}

impl Search {
    /// Drops vertices without a neighbour in `alive`.
    fn strip(&self, alive: u64) -> u64 {
        bits(alive)
            .filter(|&v| self.nbr[v] & alive != 0)
            .fold(0, |m, v| m | (1 << v))
    }

    fn solve(&mut self, alive: u64) -> usize {
        let alive = self.strip(alive);
        if alive == 0 {
            return 0;
        }
        if let Some(&s) = self.memo.get(&alive) {
            return s;
        }
        let upper = alive.count_ones() as usize / 2;
        let v = alive.trailing_zeros() as usize;
        let rest = alive & !(1 << v);
        let mut best = 0;
        for u in bits(self.nbr[v] & rest) {
            if best == upper {
                break;
            }
            best = best.max(1 + self.solve(rest & !(1 << u)));
        }
        if (rest.count_ones() as usize) / 2 > best {
            best = best.max(self.solve(rest));
        }
        self.memo.insert(alive, best);
        best
    }
}

fn bits(mut m: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        (m != 0).then(|| {
            let i = m.trailing_zeros() as usize;
            m &= m - 1;
            i
        })
    })
}
