use super::Matching;
use crate::error::Result;
use crate::geometry::{HSegment, Layout};
use crate::instance::RdvInstance;
use crate::rayshoot::RayShootIndex;

/// Maximum matching of a plain RDV instance without touching its edges.
///
/// Vertices are scanned bottom-up; the free ones sit in a ray-shooting
/// index as horizontal segments. Vertex `v_j` shoots its ray: a hit on
/// `s(v_i)` matches `v_i` with `v_j` and removes `s(v_i)`, a miss makes
/// `v_j` free. Pairs come out as `(v_i, v_j)` in discovery order.
pub fn delayed_greedy(inst: &RdvInstance) -> Result<Matching> {
    inst.ensure_valid()?;
    inst.paths()?;
    let layout = Layout::new(inst);
    delayed_greedy_with_layout(inst, &layout)
}

/// [`delayed_greedy`] on a precomputed layout. Also handles vertices with
/// several bottoms, one ray each.
pub fn delayed_greedy_with_layout(inst: &RdvInstance, layout: &Layout) -> Result<Matching> {
    let mut free = RayShootIndex::new(layout.coords.leaf_count(), inst.len());
    let mut m = Matching::default();
    for &j in &layout.order {
        let hit = layout
            .rays(inst, j)
            .filter_map(|q| free.shoot(&q))
            .max_by_key(|s: &HSegment| s.ys);
        match hit {
            Some(s) => {
                free.delete(s.owner)?;
                m.pairs.push((s.owner, j));
            }
            None => free.insert(layout.segment(inst, j))?,
        }
    }
    Ok(m)
}

/// Greedy matching for subtrees with up to `delta` leaves each: one ray per
/// bottom node, the highest hit wins. Maximal, but not necessarily maximum
/// once `delta > 1`.
pub fn delayed_greedy_delta(inst: &RdvInstance) -> Result<Matching> {
    inst.ensure_valid()?;
    let layout = Layout::new(inst);
    delayed_greedy_with_layout(inst, &layout)
}
