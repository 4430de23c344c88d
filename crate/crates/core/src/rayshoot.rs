//! Dynamic orthogonal ray shooting among horizontal segments.
//!
//! A static segment tree over the leaf x-range `1..=leaves`; every node
//! keeps an ordered set of `(ys, owner)` for the segments whose x-range
//! covers the node's range canonically. Insert and delete touch
//! O(log L) nodes, a shot walks the root-to-leaf path of `q.x` and asks
//! each node for its largest `ys <= y_origin`. All three are O(log L · log n).

use std::collections::BTreeSet;

use thiserror::Error;

use crate::geometry::{HSegment, RayQuery};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RayShootError {
    #[error("segment of vertex {0} is already live")]
    DuplicateOwner(usize),
    #[error("segment of vertex {0} is not live")]
    NotLive(usize),
    #[error("owner {owner} exceeds index capacity {capacity}")]
    OwnerOutOfRange { owner: usize, capacity: usize },
    #[error("x-range [{x_lo}, {x_hi}] outside 1..={leaves}")]
    XOutOfRange {
        x_lo: usize,
        x_hi: usize,
        leaves: usize,
    },
}

#[derive(Debug, Clone)]
pub struct RayShootIndex {
    leaves: usize,
    /// Power of two >= leaves; node `k` has children `2k`, `2k + 1`.
    width: usize,
    nodes: Vec<BTreeSet<(u64, usize)>>,
    live: Vec<Option<HSegment>>,
    len: usize,
}

impl RayShootIndex {
    /// Index for x-coordinates `1..=leaves` and owners `0..capacity`.
    pub fn new(leaves: usize, capacity: usize) -> Self {
        let width = leaves.max(1).next_power_of_two();
        RayShootIndex {
            leaves: leaves.max(1),
            width,
            nodes: vec![BTreeSet::new(); 2 * width],
            live: vec![None; capacity],
            len: 0,
        }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn contains(&self, owner: usize) -> bool {
        self.live.get(owner).is_some_and(Option::is_some)
    }

    pub fn live(&self) -> impl Iterator<Item = &HSegment> {
        self.live.iter().flatten()
    }

    pub fn insert(&mut self, s: HSegment) -> Result<(), RayShootError> {
        let capacity = self.live.len();
        let slot = self
            .live
            .get_mut(s.owner)
            .ok_or(RayShootError::OwnerOutOfRange {
                owner: s.owner,
                capacity,
            })?;
        if slot.is_some() {
            return Err(RayShootError::DuplicateOwner(s.owner));
        }
        if s.x_lo < 1 || s.x_lo > s.x_hi || s.x_hi > self.leaves {
            return Err(RayShootError::XOutOfRange {
                x_lo: s.x_lo,
                x_hi: s.x_hi,
                leaves: self.leaves,
            });
        }
        *slot = Some(s);
        self.len += 1;
        let key = (s.ys, s.owner);
        self.for_cover(s.x_lo, s.x_hi, |set| {
            set.insert(key);
        });
        Ok(())
    }

    pub fn delete(&mut self, owner: usize) -> Result<HSegment, RayShootError> {
        let s = self
            .live
            .get_mut(owner)
            .and_then(Option::take)
            .ok_or(RayShootError::NotLive(owner))?;
        self.len -= 1;
        let key = (s.ys, s.owner);
        self.for_cover(s.x_lo, s.x_hi, |set| {
            set.remove(&key);
        });
        Ok(s)
    }

    /// First live segment hit by the upward ray: the largest `ys` not above
    /// `q.y_origin` among segments whose x-range contains `q.x`.
    pub fn shoot(&self, q: &RayQuery) -> Option<HSegment> {
        if q.x < 1 || q.x > self.leaves {
            return None;
        }
        let mut node = self.width + q.x - 1;
        let mut best: Option<(u64, usize)> = None;
        while node >= 1 {
            if let Some(&hit) = self.nodes[node]
                .range(..=(q.y_origin, usize::MAX))
                .next_back()
            {
                best = best.max(Some(hit));
            }
            node /= 2;
        }
        best.map(|(_, owner)| self.live[owner].expect("indexed segment is live"))
    }

    /// Calls `f` on the canonical nodes covering `[lo, hi]`.
    fn for_cover(&mut self, lo: usize, hi: usize, mut f: impl FnMut(&mut BTreeSet<(u64, usize)>)) {
        let mut l = self.width + lo - 1;
        let mut r = self.width + hi;
        while l < r {
            if l & 1 == 1 {
                f(&mut self.nodes[l]);
                l += 1;
            }
            if r & 1 == 1 {
                r -= 1;
                f(&mut self.nodes[r]);
            }
            l /= 2;
            r /= 2;
        }
    }
}
