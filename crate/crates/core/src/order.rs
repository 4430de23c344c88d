use crate::geometry::NodeCoords;
use crate::instance::RdvInstance;

/// Vertices by decreasing depth of their top node, ties by ascending id.
/// Bucket sort over depths, O(|T| + n).
pub fn bottom_up_order(inst: &RdvInstance, coords: &NodeCoords) -> Vec<usize> {
    let max_depth = coords.y.iter().copied().max().unwrap_or(0);
    let mut buckets: Vec<Vec<usize>> = vec![Vec::new(); max_depth + 1];
    for (id, v) in inst.vertices.iter().enumerate() {
        buckets[coords.y[v.top]].push(id);
    }
    buckets.into_iter().rev().flatten().collect()
}
