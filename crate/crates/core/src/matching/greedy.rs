use super::Matching;

/// Greedy matching over `order` on explicit adjacency: each unmatched
/// vertex takes the unmatched neighbour that comes first in `order`.
/// O(n + m).
pub fn greedy_reference(adj: &[Vec<usize>], order: &[usize]) -> Matching {
    let n = adj.len();
    let mut pos = vec![usize::MAX; n];
    for (k, &v) in order.iter().enumerate() {
        pos[v] = k;
    }
    let mut matched = vec![false; n];
    let mut m = Matching::default();
    for &v in order {
        if matched[v] {
            continue;
        }
        if let Some(u) = adj[v]
            .iter()
            .copied()
            .filter(|&u| !matched[u])
            .min_by_key(|&u| pos[u])
        {
            matched[v] = true;
            matched[u] = true;
            m.pairs.push((v, u));
        }
    }
    m
}
