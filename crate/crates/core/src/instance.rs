//! Rooted host trees and the vertex subtrees hung on them.
//!
//! Node and vertex ids are 0-based in memory. The text format is 1-based;
//! the conversion happens in [`crate::format`] and nowhere else.

use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};

pub type NodeId = usize;

/// Rooted ordered tree. Children are kept in ascending node id, which is
/// the order in which they first appear in a parent array.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HostTree {
    parent: Vec<Option<NodeId>>,
    children: Vec<Vec<NodeId>>,
}

impl HostTree {
    /// Builds the tree from a parent array. Never fails: out-of-range or
    /// self parents are kept in `parent` but left out of `children`, and
    /// [`HostTree::check`] reports them.
    pub fn from_parents(parent: Vec<Option<NodeId>>) -> Self {
        let n = parent.len();
        let mut children = vec![Vec::new(); n];
        for (node, p) in parent.iter().enumerate() {
            if let Some(p) = *p {
                if p < n && p != node {
                    children[p].push(node);
                }
            }
        }
        HostTree { parent, children }
    }

    /// Path `0 - 1 - ... - (n-1)` rooted at node 0.
    pub fn path(n: usize) -> Self {
        Self::from_parents((0..n).map(|i| i.checked_sub(1)).collect())
    }

    /// Root 0 with `leaves` children.
    pub fn star(leaves: usize) -> Self {
        Self::from_parents(
            std::iter::once(None)
                .chain(std::iter::repeat_n(Some(0), leaves))
                .collect(),
        )
    }

    pub fn len(&self) -> usize {
        self.parent.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parent.is_empty()
    }

    pub fn parent(&self, node: NodeId) -> Option<NodeId> {
        self.parent[node]
    }

    pub fn parents(&self) -> &[Option<NodeId>] {
        &self.parent
    }

    pub fn children(&self, node: NodeId) -> &[NodeId] {
        &self.children[node]
    }

    pub fn is_leaf(&self, node: NodeId) -> bool {
        self.children[node].is_empty()
    }

    /// The first parentless node.
    pub fn root(&self) -> Option<NodeId> {
        self.parent.iter().position(Option::is_none)
    }

    /// Structural violations; empty iff this is a single rooted tree.
    pub fn check(&self) -> Vec<Violation> {
        let n = self.len();
        if n == 0 {
            return vec![Violation::EmptyTree];
        }
        let mut out = Vec::new();
        for (node, p) in self.parent.iter().enumerate() {
            match *p {
                Some(p) if p >= n => out.push(Violation::ParentOutOfRange { node, parent: p }),
                Some(p) if p == node => out.push(Violation::SelfParent { node }),
                _ => {}
            }
        }
        let roots: Vec<NodeId> = (0..n).filter(|&i| self.parent[i].is_none()).collect();
        match roots.len() {
            0 => out.push(Violation::NoRoot),
            1 => {}
            _ => out.push(Violation::MultipleRoots(roots.clone())),
        }
        if let Some(&root) = roots.first() {
            let mut seen = vec![false; n];
            seen[root] = true;
            let mut queue = VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                for &c in &self.children[u] {
                    if !seen[c] {
                        seen[c] = true;
                        queue.push_back(c);
                    }
                }
            }
            // Nodes under a second root are already reported above.
            let unreachable: Vec<NodeId> = (0..n)
                .filter(|&i| !seen[i] && !roots.contains(&i) && !self.hangs_under(i, &roots[1..]))
                .collect();
            if !unreachable.is_empty() {
                out.push(Violation::Unreachable(unreachable));
            }
        }
        out
    }

    fn hangs_under(&self, node: NodeId, roots: &[NodeId]) -> bool {
        let mut cur = node;
        for _ in 0..=self.len() {
            match self.parent[cur] {
                None => return roots.contains(&cur),
                Some(p) if p >= self.len() => return false,
                Some(p) => cur = p,
            }
        }
        false
    }

    /// Edge distance of every node from the root. Requires a valid tree.
    pub fn depths(&self) -> Vec<usize> {
        let mut depth = vec![0; self.len()];
        let Some(root) = self.root() else {
            return depth;
        };
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            for &c in &self.children[u] {
                depth[c] = depth[u] + 1;
                queue.push_back(c);
            }
        }
        depth
    }

    /// Nodes in preorder (children visited in stored order). Requires a valid tree.
    pub fn preorder(&self) -> Vec<NodeId> {
        let mut out = Vec::with_capacity(self.len());
        let Some(root) = self.root() else {
            return out;
        };
        let mut stack = vec![root];
        while let Some(u) = stack.pop() {
            out.push(u);
            stack.extend(self.children[u].iter().rev());
        }
        out
    }
}

/// Preorder intervals and depths, for O(1) ancestor tests.
#[derive(Debug, Clone)]
pub struct Ancestry {
    pub depth: Vec<usize>,
    enter: Vec<usize>,
    exit: Vec<usize>,
}

impl Ancestry {
    pub fn new(tree: &HostTree) -> Self {
        let n = tree.len();
        let mut enter = vec![0; n];
        let mut exit = vec![0; n];
        let order = tree.preorder();
        for (i, &u) in order.iter().enumerate() {
            enter[u] = i;
        }
        // In preorder a subtree is contiguous: exit = enter + size - 1.
        let mut size = vec![1usize; n];
        for &u in order.iter().rev() {
            if let Some(p) = tree.parent(u) {
                size[p] += size[u];
            }
        }
        for u in 0..n {
            exit[u] = enter[u] + size[u] - 1;
        }
        Ancestry {
            depth: tree.depths(),
            enter,
            exit,
        }
    }

    /// `a` is an ancestor of `d` or equal to it.
    pub fn is_ancestor(&self, a: NodeId, d: NodeId) -> bool {
        self.enter[a] <= self.enter[d] && self.exit[d] <= self.exit[a]
    }

    /// Preorder rank and last preorder rank of `node`'s subtree.
    pub fn span(&self, node: NodeId) -> (usize, usize) {
        (self.enter[node], self.exit[node])
    }
}

/// Downward path `top ..= bottom`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct VertexPath {
    pub top: NodeId,
    pub bottom: NodeId,
}

/// A vertex's subtree: the union of the downward paths from `top` to each
/// of `bottoms`. Plain RDV vertices have exactly one bottom.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Vertex {
    pub top: NodeId,
    pub bottoms: Vec<NodeId>,
}

impl Vertex {
    pub fn path(top: NodeId, bottom: NodeId) -> Self {
        Vertex {
            top,
            bottoms: vec![bottom],
        }
    }

    pub fn subtree(top: NodeId, bottoms: Vec<NodeId>) -> Self {
        Vertex { top, bottoms }
    }

    pub fn as_path(&self) -> Option<VertexPath> {
        match self.bottoms[..] {
            [bottom] => Some(VertexPath {
                top: self.top,
                bottom,
            }),
            _ => None,
        }
    }

    /// One downward path per bottom.
    pub fn paths(&self) -> impl Iterator<Item = VertexPath> + '_ {
        self.bottoms.iter().map(move |&bottom| VertexPath {
            top: self.top,
            bottom,
        })
    }
}

/// Host tree plus one subtree per graph vertex. `delta` bounds the number
/// of bottoms per vertex; `delta == 1` is a plain RDV representation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RdvInstance {
    pub tree: HostTree,
    pub vertices: Vec<Vertex>,
    pub delta: usize,
}

impl RdvInstance {
    pub fn new(tree: HostTree, vertices: Vec<Vertex>, delta: usize) -> Self {
        RdvInstance {
            tree,
            vertices,
            delta,
        }
    }

    /// Plain RDV instance from `(top, bottom)` pairs.
    pub fn from_paths(tree: HostTree, paths: impl IntoIterator<Item = (NodeId, NodeId)>) -> Self {
        let vertices = paths.into_iter().map(|(t, b)| Vertex::path(t, b)).collect();
        RdvInstance::new(tree, vertices, 1)
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn validate(&self) -> Vec<Violation> {
        validate_instance(self)
    }

    pub fn ensure_valid(&self) -> Result<()> {
        let v = self.validate();
        if v.is_empty() {
            Ok(())
        } else {
            Err(Error::Invalid(v))
        }
    }

    /// The vertices as downward paths, or the first vertex that is not one.
    pub fn paths(&self) -> Result<Vec<VertexPath>> {
        self.vertices
            .iter()
            .enumerate()
            .map(|(vertex, v)| {
                v.as_path().ok_or(Error::NotPlainRdv {
                    vertex,
                    bottoms: v.bottoms.len(),
                })
            })
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    EmptyTree,
    NoRoot,
    MultipleRoots(Vec<NodeId>),
    ParentOutOfRange {
        node: NodeId,
        parent: NodeId,
    },
    SelfParent {
        node: NodeId,
    },
    Unreachable(Vec<NodeId>),
    ZeroDelta,
    NodeOutOfRange {
        vertex: usize,
        node: NodeId,
    },
    NoBottoms {
        vertex: usize,
    },
    TooManyBottoms {
        vertex: usize,
        bottoms: usize,
        delta: usize,
    },
    TopNotAncestor {
        vertex: usize,
        top: NodeId,
        bottom: NodeId,
    },
}

// Messages use the 1-based ids of the text format.
impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ids = |v: &[usize]| {
            v.iter()
                .map(|i| (i + 1).to_string())
                .collect::<Vec<_>>()
                .join(" ")
        };
        match self {
            Violation::EmptyTree => write!(f, "empty tree"),
            Violation::NoRoot => write!(f, "no root (every node has a parent)"),
            Violation::MultipleRoots(r) => write!(f, "multiple roots: nodes {}", ids(r)),
            Violation::ParentOutOfRange { node, parent } => {
                write!(
                    f,
                    "node {} has out-of-range parent {}",
                    node + 1,
                    parent + 1
                )
            }
            Violation::SelfParent { node } => write!(f, "node {} is its own parent", node + 1),
            Violation::Unreachable(nodes) => {
                write!(
                    f,
                    "nodes not reachable from the root (cycle): {}",
                    ids(nodes)
                )
            }
            Violation::ZeroDelta => write!(f, "delta must be at least 1"),
            Violation::NodeOutOfRange { vertex, node } => {
                write!(
                    f,
                    "vertex {} references missing node {}",
                    vertex + 1,
                    node + 1
                )
            }
            Violation::NoBottoms { vertex } => {
                write!(f, "vertex {} has no bottom node", vertex + 1)
            }
            Violation::TooManyBottoms {
                vertex,
                bottoms,
                delta,
            } => write!(
                f,
                "vertex {} has {} bottom nodes, more than delta {}",
                vertex + 1,
                bottoms,
                delta
            ),
            Violation::TopNotAncestor {
                vertex,
                top,
                bottom,
            } => write!(
                f,
                "vertex {}: top not ancestor of bottom (top {}, bottom {})",
                vertex + 1,
                top + 1,
                bottom + 1
            ),
        }
    }
}

/// Every violated invariant of `inst`; empty iff the instance is well-formed.
pub fn validate_instance(inst: &RdvInstance) -> Vec<Violation> {
    let mut out = inst.tree.check();
    let tree_ok = out.is_empty();
    if inst.delta == 0 {
        out.push(Violation::ZeroDelta);
    }
    let n = inst.tree.len();
    let ancestry = tree_ok.then(|| Ancestry::new(&inst.tree));
    for (vertex, v) in inst.vertices.iter().enumerate() {
        if v.bottoms.is_empty() {
            out.push(Violation::NoBottoms { vertex });
        }
        if inst.delta > 0 && v.bottoms.len() > inst.delta {
            out.push(Violation::TooManyBottoms {
                vertex,
                bottoms: v.bottoms.len(),
                delta: inst.delta,
            });
        }
        let mut in_range = true;
        for &node in std::iter::once(&v.top).chain(&v.bottoms) {
            if node >= n {
                out.push(Violation::NodeOutOfRange { vertex, node });
                in_range = false;
            }
        }
        if let (true, Some(a)) = (in_range, &ancestry) {
            for &bottom in &v.bottoms {
                if !a.is_ancestor(v.top, bottom) {
                    out.push(Violation::TopNotAncestor {
                        vertex,
                        top: v.top,
                        bottom,
                    });
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_node_instance_is_valid() {
        let inst = RdvInstance::from_paths(HostTree::path(1), [(0, 0)]);
        assert!(validate_instance(&inst).is_empty());
    }

    #[test]
    fn inverted_path_is_rejected() {
        // Two-node path rooted at node 1 (0-based 0); top = node 2, bottom = node 1.
        let inst = RdvInstance::from_paths(HostTree::path(2), [(1, 0)]);
        let v = validate_instance(&inst);
        assert_eq!(
            v,
            vec![Violation::TopNotAncestor {
                vertex: 0,
                top: 1,
                bottom: 0
            }]
        );
        assert!(v[0].to_string().contains("top not ancestor of bottom"));
    }

    #[test]
    fn forest_is_rejected() {
        let tree = HostTree::from_parents(vec![None, None, Some(0)]);
        let v = tree.check();
        assert_eq!(v, vec![Violation::MultipleRoots(vec![0, 1])]);
        assert!(v[0].to_string().starts_with("multiple roots"));
    }

    #[test]
    fn cycle_is_reported() {
        let tree = HostTree::from_parents(vec![None, Some(2), Some(1)]);
        assert_eq!(tree.check(), vec![Violation::Unreachable(vec![1, 2])]);
        let tree = HostTree::from_parents(vec![Some(1), Some(0)]);
        assert_eq!(tree.check(), vec![Violation::NoRoot]);
    }

    #[test]
    fn bad_parents_and_nodes() {
        let tree = HostTree::from_parents(vec![None, Some(7), Some(2)]);
        let v = tree.check();
        assert!(v.contains(&Violation::ParentOutOfRange { node: 1, parent: 7 }));
        assert!(v.contains(&Violation::SelfParent { node: 2 }));

        let inst = RdvInstance::new(
            HostTree::path(2),
            vec![
                Vertex::path(0, 5),
                Vertex::subtree(0, vec![]),
                Vertex::subtree(0, vec![0, 1]),
            ],
            1,
        );
        let v = validate_instance(&inst);
        assert!(v.contains(&Violation::NodeOutOfRange { vertex: 0, node: 5 }));
        assert!(v.contains(&Violation::NoBottoms { vertex: 1 }));
        assert!(v.contains(&Violation::TooManyBottoms {
            vertex: 2,
            bottoms: 2,
            delta: 1
        }));
    }

    #[test]
    fn ancestry_on_star() {
        let tree = HostTree::star(3);
        let a = Ancestry::new(&tree);
        assert!(a.is_ancestor(0, 2));
        assert!(a.is_ancestor(2, 2));
        assert!(!a.is_ancestor(1, 2));
        assert!(!a.is_ancestor(3, 0));
        assert_eq!(a.depth, vec![0, 1, 1, 1]);
        assert_eq!(tree.preorder(), vec![0, 1, 2, 3]);
    }

    #[test]
    fn paths_rejects_subtrees() {
        let inst = RdvInstance::new(HostTree::star(2), vec![Vertex::subtree(0, vec![1, 2])], 2);
        assert!(matches!(
            inst.paths(),
            Err(Error::NotPlainRdv {
                vertex: 0,
                bottoms: 2
            })
        ));
    }
}
