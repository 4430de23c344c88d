#![allow(dead_code)]

use proptest::prelude::*;
use rdv_core::geometry::{HSegment, RayQuery};
use rdv_core::{HostTree, RdvInstance, Vertex};

/// Linear-scan stand-in for the ray-shooting index.
#[derive(Default)]
pub struct Shadow {
    pub live: Vec<HSegment>,
}

impl Shadow {
    pub fn insert(&mut self, s: HSegment) {
        self.live.push(s);
    }

    pub fn delete(&mut self, owner: usize) {
        self.live.retain(|s| s.owner != owner);
    }

    pub fn shoot(&self, q: &RayQuery) -> Option<HSegment> {
        self.live
            .iter()
            .filter(|s| s.x_lo <= q.x && q.x <= s.x_hi && s.ys <= q.y_origin)
            .max_by_key(|s| (s.ys, s.owner))
            .copied()
    }
}

/// Maximum matching size by trying every subset of edges, largest first.
/// Only for tiny graphs.
pub fn brute_force_matching(adj: &[Vec<usize>]) -> usize {
    let edges: Vec<(usize, usize)> = adj
        .iter()
        .enumerate()
        .flat_map(|(a, row)| row.iter().filter(move |&&b| a < b).map(move |&b| (a, b)))
        .collect();
    assert!(edges.len() <= 20, "too many edges for brute force");
    let mut best = 0;
    for mask in 0u32..(1 << edges.len()) {
        let k = mask.count_ones() as usize;
        if k <= best {
            continue;
        }
        let mut used = 0u64;
        let ok = edges
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .all(|(_, &(a, b))| {
                let hit = used & (1 << a | 1 << b) != 0;
                used |= 1 << a | 1 << b;
                !hit
            });
        if ok {
            best = k;
        }
    }
    best
}

/// Path sharing, checked node by node: collects each path's node set by
/// walking parent pointers from the bottom to the top.
pub fn nodes_of(tree: &HostTree, v: &Vertex) -> Vec<usize> {
    let mut out = Vec::new();
    for &b in &v.bottoms {
        let mut u = b;
        loop {
            out.push(u);
            if u == v.top {
                break;
            }
            u = tree.parent(u).expect("top is an ancestor");
        }
    }
    out.sort_unstable();
    out.dedup();
    out
}

pub fn share_node(tree: &HostTree, a: &Vertex, b: &Vertex) -> bool {
    let na = nodes_of(tree, a);
    nodes_of(tree, b)
        .iter()
        .any(|u| na.binary_search(u).is_ok())
}

/// Random tree (arbitrary labels) with random downward paths or, for
/// `delta > 1`, subtrees with up to `delta` bottoms.
pub fn arb_instance(
    max_nodes: usize,
    max_vertices: usize,
    delta: usize,
) -> impl Strategy<Value = RdvInstance> {
    (1..=max_nodes)
        .prop_flat_map(move |nodes| {
            let parents = (1..nodes).map(|k| 0..k).collect::<Vec<_>>();
            let labels = Just((0..nodes).collect::<Vec<_>>()).prop_shuffle();
            let vertices = prop::collection::vec(
                (
                    0..nodes,
                    any::<usize>(),
                    prop::collection::vec(any::<usize>(), 1..=delta),
                ),
                0..=max_vertices,
            );
            (parents, labels, vertices)
        })
        .prop_map(move |(raw_parents, labels, raw_vertices)| {
            let nodes = labels.len();
            let mut parents = vec![None; nodes];
            for (k, p) in raw_parents.into_iter().enumerate() {
                parents[labels[k + 1]] = Some(labels[p]);
            }
            let tree = HostTree::from_parents(parents);
            let depth = tree.depths();
            let preorder = tree.preorder();
            let mut pos = vec![0; nodes];
            for (i, &u) in preorder.iter().enumerate() {
                pos[u] = i;
            }
            let mut size = vec![1usize; nodes];
            for &u in preorder.iter().rev() {
                if let Some(p) = tree.parent(u) {
                    size[p] += size[u];
                }
            }
            let vertices = raw_vertices
                .into_iter()
                .map(|(anchor, up, picks)| {
                    let mut top = anchor;
                    for _ in 0..up % (depth[anchor] + 1) {
                        top = tree.parent(top).unwrap();
                    }
                    if delta == 1 {
                        return Vertex::path(top, anchor);
                    }
                    let mut bottoms: Vec<usize> = picks
                        .into_iter()
                        .map(|p| preorder[pos[top] + p % size[top]])
                        .collect();
                    bottoms.dedup();
                    Vertex::subtree(top, bottoms)
                })
                .collect();
            RdvInstance::new(tree, vertices, delta)
        })
}
