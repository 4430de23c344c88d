//! Shrinking a representation without changing the graph it represents.
//!
//! A child is folded into its parent when both are used by exactly the same
//! vertices, and subtrees no vertex touches are dropped. The child's usage
//! set is a subset of its parent's unless some vertex starts at the child,
//! so "same set" reduces to "no vertex starts here and the usage counts
//! agree".

use crate::error::Result;
use crate::instance::{Ancestry, HostTree, NodeId, RdvInstance, Vertex};

pub fn compress_tree(inst: &RdvInstance) -> Result<RdvInstance> {
    inst.ensure_valid()?;
    let tree = &inst.tree;
    let n_nodes = tree.len();
    let ancestry = Ancestry::new(tree);
    let order = tree.preorder();

    let usage = usage_counts(inst, &ancestry, &order);
    let mut starts_here = vec![false; n_nodes];
    for v in &inst.vertices {
        starts_here[v.top] = true;
    }

    // A node survives pruning if anything in its subtree is used.
    let mut keep = usage.iter().map(|&c| c > 0).collect::<Vec<_>>();
    for &u in order.iter().rev() {
        if let (true, Some(p)) = (keep[u], tree.parent(u)) {
            keep[p] = true;
        }
    }
    let root = order[0];
    keep[root] = true;

    let mut rep: Vec<NodeId> = (0..n_nodes).collect();
    for &c in &order {
        if let Some(p) = tree.parent(c) {
            if keep[c] && !starts_here[c] && usage[c] == usage[p] {
                rep[c] = rep[p];
            }
        }
    }

    let mut new_id = vec![usize::MAX; n_nodes];
    let mut next = 0;
    for u in 0..n_nodes {
        if keep[u] && rep[u] == u {
            new_id[u] = next;
            next += 1;
        }
    }
    let mut parents = vec![None; next];
    for u in 0..n_nodes {
        if new_id[u] != usize::MAX {
            parents[new_id[u]] = tree.parent(u).map(|p| new_id[rep[p]]);
        }
    }
    let relabel = |u: NodeId| new_id[rep[u]];
    let vertices = inst
        .vertices
        .iter()
        .map(|v| {
            let mut bottoms: Vec<NodeId> = Vec::with_capacity(v.bottoms.len());
            for b in v.bottoms.iter().map(|&b| relabel(b)) {
                if !bottoms.contains(&b) {
                    bottoms.push(b);
                }
            }
            Vertex::subtree(relabel(v.top), bottoms)
        })
        .collect();
    Ok(RdvInstance::new(
        HostTree::from_parents(parents),
        vertices,
        inst.delta,
    ))
}

/// Number of vertices whose subtree contains each node.
///
/// Per vertex: +1 at each bottom, -1 at the meeting point of bottoms that
/// are adjacent in preorder, -1 above the top. Subtree sums then count each
/// node once per vertex covering it.
fn usage_counts(inst: &RdvInstance, ancestry: &Ancestry, order: &[NodeId]) -> Vec<i64> {
    let tree = &inst.tree;
    let mut diff = vec![0i64; tree.len()];
    for v in &inst.vertices {
        let mut bottoms = v.bottoms.clone();
        bottoms.sort_unstable_by_key(|&b| ancestry.span(b).0);
        bottoms.dedup();
        for (k, &b) in bottoms.iter().enumerate() {
            diff[b] += 1;
            if k > 0 {
                diff[meet(tree, ancestry, bottoms[k - 1], b)] -= 1;
            }
        }
        if let Some(p) = tree.parent(v.top) {
            diff[p] -= 1;
        }
    }
    for &u in order.iter().rev() {
        if let Some(p) = tree.parent(u) {
            diff[p] += diff[u];
        }
    }
    diff
}

fn meet(tree: &HostTree, ancestry: &Ancestry, mut a: NodeId, mut b: NodeId) -> NodeId {
    while ancestry.depth[a] > ancestry.depth[b] {
        a = tree.parent(a).expect("non-root");
    }
    while ancestry.depth[b] > ancestry.depth[a] {
        b = tree.parent(b).expect("non-root");
    }
    while a != b {
        a = tree.parent(a).expect("non-root");
        b = tree.parent(b).expect("non-root");
    }
    a
}
