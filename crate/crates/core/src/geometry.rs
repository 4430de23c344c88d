//! Planar embedding of the host tree and of the vertices.
//!
//! Node `i` sits at `(x(i), y(i))`: `x` is the index of its leftmost
//! descendant leaf and `y` its depth, growing downward. A vertex `v` gets a
//! horizontal segment at the level of its top node spanning the leaf range
//! below that node, and one upward ray per bottom node. For `v_i` before
//! `v_j` in bottom-up order, the two are adjacent iff a ray of `v_j` hits
//! the segment of `v_i`.
//!
//! All y-values are scaled by `n` so that equal-depth segments can be
//! separated with an integer offset: a segment of bottom-up rank `k`
//! (1-based) lives at `y * n + (n - k + 1)`, a ray from node `b` starts at
//! `(y(b) + 1) * n`. The offset lies in `1..=n`, so a segment at depth `d`
//! occupies `d*n + 1 ..= d*n + n`, strictly between the ray origins of
//! depths `d - 1` and `d` (inclusive of the latter).

use crate::instance::{HostTree, NodeId, RdvInstance};
use crate::order::bottom_up_order;

/// Per-node coordinates. Leaf indices are 1-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NodeCoords {
    pub x: Vec<usize>,
    pub y: Vec<usize>,
    pub r: Vec<usize>,
}

impl NodeCoords {
    pub fn leaf_count(&self) -> usize {
        self.r.iter().copied().max().unwrap_or(0)
    }
}

/// Leftmost/rightmost descendant leaf index and depth of every node, in
/// O(|T|). Requires a valid tree.
pub fn assign_coordinates(tree: &HostTree) -> NodeCoords {
    let n = tree.len();
    let order = tree.preorder();
    let mut x = vec![0; n];
    let mut r = vec![0; n];
    // Preorder meets the leaves left to right.
    let mut next_leaf = 0;
    for &u in &order {
        if tree.is_leaf(u) {
            next_leaf += 1;
            x[u] = next_leaf;
            r[u] = next_leaf;
        }
    }
    for &u in order.iter().rev() {
        if let (Some(&first), Some(&last)) = (tree.children(u).first(), tree.children(u).last()) {
            x[u] = x[first];
            r[u] = r[last];
        }
    }
    NodeCoords {
        x,
        y: tree.depths(),
        r,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct HSegment {
    pub owner: usize,
    pub ys: u64,
    pub x_lo: usize,
    pub x_hi: usize,
}

/// Upward ray from `(x, y_origin)` towards smaller y.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RayQuery {
    pub x: usize,
    pub y_origin: u64,
}

fn scale(n: usize) -> u64 {
    n.max(1) as u64
}

/// Scaled position of the vertex at bottom-up `rank` (1-based).
pub fn scaled_segment_y(depth: usize, rank: usize, n: usize) -> u64 {
    debug_assert!((1..=n).contains(&rank));
    depth as u64 * scale(n) + (n - rank + 1) as u64
}

pub fn scaled_ray_origin(depth: usize, n: usize) -> u64 {
    (depth as u64 + 1) * scale(n)
}

/// Smallest scaled y a segment at `depth` can have. Used as the upper end
/// (numerically the lower bound) of a finite vertical segment from a top
/// node at `depth`.
pub fn scaled_top(depth: usize, n: usize) -> u64 {
    depth as u64 * scale(n) + 1
}

/// Segment of the vertex at 1-based bottom-up `rank` in `order`.
pub fn build_segment(
    inst: &RdvInstance,
    coords: &NodeCoords,
    order: &[usize],
    rank: usize,
) -> HSegment {
    let owner = order[rank - 1];
    segment_for(coords, inst.vertices[owner].top, owner, rank, inst.len())
}

pub(crate) fn segment_for(
    coords: &NodeCoords,
    top: NodeId,
    owner: usize,
    rank: usize,
    n: usize,
) -> HSegment {
    HSegment {
        owner,
        ys: scaled_segment_y(coords.y[top], rank, n),
        x_lo: coords.x[top],
        // x of leaf r(top) is its own leaf index.
        x_hi: coords.r[top],
    }
}

/// Ray of `vertex` from one of its bottom nodes.
pub fn build_ray(
    inst: &RdvInstance,
    coords: &NodeCoords,
    vertex: usize,
    bottom: NodeId,
) -> RayQuery {
    debug_assert!(inst.vertices[vertex].bottoms.contains(&bottom));
    ray_for(coords, bottom, inst.len())
}

pub(crate) fn ray_for(coords: &NodeCoords, bottom: NodeId, n: usize) -> RayQuery {
    RayQuery {
        x: coords.x[bottom],
        y_origin: scaled_ray_origin(coords.y[bottom], n),
    }
}

/// Finite-segment intersection: the ray truncated at `top` (scaled, see
/// [`scaled_top`]) crosses `s`.
pub fn segment_intersects(s: &HSegment, q: &RayQuery, top: u64) -> bool {
    s.x_lo <= q.x && q.x <= s.x_hi && top <= s.ys && s.ys <= q.y_origin
}

/// Everything the matching routines need about an instance's embedding.
#[derive(Debug, Clone)]
pub struct Layout {
    pub coords: NodeCoords,
    /// Vertices in bottom-up order.
    pub order: Vec<usize>,
    /// 1-based bottom-up rank of every vertex.
    pub rank: Vec<usize>,
}

impl Layout {
    /// `inst` must be valid.
    pub fn new(inst: &RdvInstance) -> Self {
        let coords = assign_coordinates(&inst.tree);
        let order = bottom_up_order(inst, &coords);
        let mut rank = vec![0; order.len()];
        for (k, &v) in order.iter().enumerate() {
            rank[v] = k + 1;
        }
        Layout {
            coords,
            order,
            rank,
        }
    }

    pub fn segment(&self, inst: &RdvInstance, vertex: usize) -> HSegment {
        segment_for(
            &self.coords,
            inst.vertices[vertex].top,
            vertex,
            self.rank[vertex],
            inst.len(),
        )
    }

    pub fn rays<'a>(
        &'a self,
        inst: &'a RdvInstance,
        vertex: usize,
    ) -> impl Iterator<Item = RayQuery> + 'a {
        let n = inst.len();
        inst.vertices[vertex]
            .bottoms
            .iter()
            .map(move |&b| ray_for(&self.coords, b, n))
    }

    pub fn top_bound(&self, inst: &RdvInstance, vertex: usize) -> u64 {
        scaled_top(self.coords.y[inst.vertices[vertex].top], inst.len())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_tree_coordinates() {
        let c = assign_coordinates(&HostTree::path(5));
        assert_eq!(c.x, vec![1; 5]);
        assert_eq!(c.r, vec![1; 5]);
        assert_eq!(c.y, vec![0, 1, 2, 3, 4]);
    }

    #[test]
    fn star_coordinates() {
        let c = assign_coordinates(&HostTree::star(4));
        assert_eq!(c.x, vec![1, 1, 2, 3, 4]);
        assert_eq!(c.r, vec![4, 1, 2, 3, 4]);
        assert_eq!(c.y, vec![0, 1, 1, 1, 1]);
        assert_eq!(c.leaf_count(), 4);
    }

    #[test]
    fn child_order_follows_ids() {
        // node 3 is a child of 0 and listed after 1, so its leaf comes last.
        let tree = HostTree::from_parents(vec![None, Some(0), Some(1), Some(0), Some(1)]);
        let c = assign_coordinates(&tree);
        assert_eq!(c.x, vec![1, 1, 1, 3, 2]);
        assert_eq!(c.r, vec![3, 2, 1, 3, 2]);
    }

    #[test]
    fn single_vertex_segment_and_ray() {
        let inst = RdvInstance::from_paths(HostTree::path(3), [(0, 0)]);
        let c = assign_coordinates(&inst.tree);
        let s = build_segment(&inst, &c, &[0], 1);
        assert_eq!(
            s,
            HSegment {
                owner: 0,
                ys: 1,
                x_lo: 1,
                x_hi: 1
            }
        );
        let q = build_ray(&inst, &c, 0, 0);
        assert_eq!(q, RayQuery { x: 1, y_origin: 1 });
        assert!(segment_intersects(&s, &q, scaled_top(0, 1)));
    }

    #[test]
    fn ties_get_distinct_levels() {
        let inst = RdvInstance::from_paths(HostTree::path(2), [(1, 1), (1, 1)]);
        let c = assign_coordinates(&inst.tree);
        let order = [0, 1];
        let a = build_segment(&inst, &c, &order, 1);
        let b = build_segment(&inst, &c, &order, 2);
        assert_eq!((a.ys, b.ys), (4, 3));
    }

    #[test]
    fn explicit_intersection_cases() {
        let s = HSegment {
            owner: 0,
            ys: 7,
            x_lo: 2,
            x_hi: 5,
        };
        assert!(segment_intersects(&s, &RayQuery { x: 3, y_origin: 10 }, 4));
        assert!(!segment_intersects(&s, &RayQuery { x: 6, y_origin: 10 }, 4));
        assert!(!segment_intersects(&s, &RayQuery { x: 3, y_origin: 6 }, 4));
        assert!(!segment_intersects(&s, &RayQuery { x: 3, y_origin: 10 }, 8));
    }

    #[test]
    fn boundary_levels() {
        // A segment at depth d is hit by a ray from depth d, missed from d - 1.
        for n in 1..20 {
            for rank in 1..=n {
                for d in 1..5 {
                    let ys = scaled_segment_y(d, rank, n);
                    assert!(ys <= scaled_ray_origin(d, n));
                    assert!(ys > scaled_ray_origin(d - 1, n));
                    assert!(scaled_top(d, n) <= ys);
                    assert!(scaled_top(d + 1, n) > ys);
                    assert_eq!(ys.div_ceil(n as u64) - 1, d as u64);
                }
            }
        }
    }
}
