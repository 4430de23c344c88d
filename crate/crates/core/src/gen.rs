//! Instance generators and fixed instances.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::instance::{Ancestry, HostTree, NodeId, RdvInstance, Vertex};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Density {
    /// Tops uniform among the ancestors of the bottom.
    #[default]
    Sparse,
    /// Tops drawn from the upper half of the root path, so paths overlap more.
    Dense,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenConfig {
    pub seed: u64,
    pub tree_nodes: usize,
    pub n_vertices: usize,
    pub max_branching: usize,
    pub delta: usize,
    pub density: Density,
}

impl Default for GenConfig {
    fn default() -> Self {
        GenConfig {
            seed: 0,
            tree_nodes: 16,
            n_vertices: 16,
            max_branching: 3,
            delta: 1,
            density: Density::Sparse,
        }
    }
}

impl GenConfig {
    fn check(&self) -> Result<()> {
        for (name, v) in [
            ("tree_nodes", self.tree_nodes),
            ("n_vertices", self.n_vertices),
            ("max_branching", self.max_branching),
            ("delta", self.delta),
        ] {
            if v == 0 {
                return Err(Error::Config(format!("{name} must be positive")));
            }
        }
        Ok(())
    }
}

/// Random instance, fully determined by the config.
///
/// Node `k > 0` hangs below a uniformly chosen earlier node that still has
/// fewer than `max_branching` children. A plain vertex picks its bottom
/// uniformly and its top among the bottom's ancestors; with `delta > 1`
/// a vertex picks a top and then between 1 and `delta` bottoms below it.
pub fn gen_random(cfg: &GenConfig) -> Result<RdvInstance> {
    cfg.check()?;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);

    let mut parents = vec![None; cfg.tree_nodes];
    let mut child_count = vec![0usize; cfg.tree_nodes];
    let mut open: Vec<NodeId> = vec![0];
    for (k, slot) in parents.iter_mut().enumerate().skip(1) {
        let i = rng.gen_range(0..open.len());
        let p = open[i];
        *slot = Some(p);
        child_count[p] += 1;
        if child_count[p] == cfg.max_branching {
            open.swap_remove(i);
        }
        open.push(k);
    }
    let tree = HostTree::from_parents(parents);
    let ancestry = Ancestry::new(&tree);
    let preorder = tree.preorder();

    let pick_top = |rng: &mut ChaCha8Rng, below: NodeId| -> NodeId {
        let d = ancestry.depth[below];
        let top_depth = match cfg.density {
            Density::Sparse => rng.gen_range(0..=d),
            Density::Dense => rng.gen_range(0..=d / 2),
        };
        let mut t = below;
        for _ in top_depth..d {
            t = tree.parent(t).expect("depth > 0 has a parent");
        }
        t
    };

    let vertices = (0..cfg.n_vertices)
        .map(|_| {
            let anchor = rng.gen_range(0..cfg.tree_nodes);
            let top = pick_top(&mut rng, anchor);
            if cfg.delta == 1 {
                return Vertex::path(top, anchor);
            }
            let (lo, hi) = ancestry.span(top);
            let k = rng.gen_range(1..=cfg.delta);
            let mut bottoms = Vec::with_capacity(k);
            for _ in 0..k {
                let b = preorder[rng.gen_range(lo..=hi)];
                if !bottoms.contains(&b) {
                    bottoms.push(b);
                }
            }
            Vertex::subtree(top, bottoms)
        })
        .collect();
    Ok(RdvInstance::new(tree, vertices, cfg.delta))
}

/// Edge-heavy family on a path host of `n` nodes: vertex `i` (1-based)
/// runs from node `ceil(i / 2)` down to node `n`. Every pair of paths
/// shares node `n`, so the graph is complete while the input stays O(n).
pub fn gen_dense(n: usize) -> Result<RdvInstance> {
    if n < 2 {
        return Err(Error::Config("dense family needs n >= 2".into()));
    }
    Ok(RdvInstance::from_paths(
        HostTree::path(n),
        (1..=n).map(|i| (i.div_ceil(2) - 1, n - 1)),
    ))
}

/// Interval graph as an RDV instance on a path.
///
/// Endpoints are ranked by value with left endpoints before right ones on
/// ties, so closed intervals that touch still intersect. Rank `k` is the
/// node at depth `k` of a path rooted at one end.
pub fn intervals_to_rdv(intervals: &[(i64, i64)]) -> Result<RdvInstance> {
    if let Some((index, &(lo, hi))) = intervals.iter().enumerate().find(|(_, (lo, hi))| lo > hi) {
        return Err(Error::MalformedInterval { index, lo, hi });
    }
    let mut events: Vec<(i64, u8, usize)> = intervals
        .iter()
        .enumerate()
        .flat_map(|(i, &(lo, hi))| [(lo, 0, i), (hi, 1, i)])
        .collect();
    events.sort_unstable();
    let mut top = vec![0; intervals.len()];
    let mut bottom = vec![0; intervals.len()];
    for (rank, &(_, side, i)) in events.iter().enumerate() {
        if side == 0 {
            top[i] = rank;
        } else {
            bottom[i] = rank;
        }
    }
    Ok(RdvInstance::from_paths(
        HostTree::path(events.len().max(1)),
        top.into_iter().zip(bottom),
    ))
}

/// The 4-trampoline: inner clique `v5..v8`, outer vertices `v1..v4` each
/// attached to two inner ones. Ids are 0-based (`v1` is 0).
#[derive(Debug, Clone)]
pub struct Trampoline {
    pub adjacency: Vec<Vec<usize>>,
    /// `v1, ..., v8`.
    pub order: Vec<usize>,
    /// Rooted clique tree with two-leaf subtrees whose bottom-up order is
    /// `v1, ..., v8`.
    pub instance: RdvInstance,
}

pub fn fixture_trampoline() -> Trampoline {
    const OUTER: [[usize; 2]; 4] = [[5, 6], [4, 6], [5, 7], [4, 7]];
    let mut adjacency = vec![Vec::new(); 8];
    for (o, inner) in OUTER.iter().enumerate() {
        for &w in inner {
            adjacency[o].push(w);
            adjacency[w].push(o);
        }
    }
    for (a, row) in adjacency.iter_mut().enumerate().skip(4) {
        row.extend((4..8).filter(|&b| b != a));
    }
    for row in &mut adjacency {
        row.sort_unstable();
    }

    // Root = the inner clique, one leaf per outer vertex's maximal clique.
    let tree = HostTree::star(4);
    let mut vertices: Vec<Vertex> = (1..=4).map(|leaf| Vertex::path(leaf, leaf)).collect();
    for inner in 4..8 {
        let bottoms = (0..4)
            .filter(|&o| OUTER[o].contains(&inner))
            .map(|o| o + 1)
            .collect();
        vertices.push(Vertex::subtree(0, bottoms));
    }
    Trampoline {
        adjacency,
        order: (0..8).collect(),
        instance: RdvInstance::new(tree, vertices, 2),
    }
}
