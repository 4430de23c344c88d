/// Whether `v` is simple in the subgraph induced by `alive`: its closed
/// neighbourhood is a clique whose members' closed neighbourhoods are
/// totally ordered by inclusion.
pub fn is_simple_vertex(adj: &[Vec<usize>], v: usize, alive: &[bool]) -> bool {
    debug_assert!(alive[v]);
    let closed = |w: usize| -> Vec<usize> {
        let mut s: Vec<usize> = adj[w].iter().copied().filter(|&u| alive[u]).collect();
        s.push(w);
        s.sort_unstable();
        s.dedup();
        s
    };
    let members = closed(v);
    let mut hoods: Vec<Vec<usize>> = members.iter().map(|&w| closed(w)).collect();
    // Clique: every member's closed neighbourhood contains all members.
    if !hoods.iter().all(|h| is_subset(&members, h)) {
        return false;
    }
    hoods.sort_by_key(Vec::len);
    hoods.windows(2).all(|w| is_subset(&w[0], &w[1]))
}

fn is_subset(small: &[usize], big: &[usize]) -> bool {
    small.iter().all(|x| big.binary_search(x).is_ok())
}

/// Removes vertices in `order` one at a time and returns the first one that
/// is not simple among the vertices still present, if any.
pub fn first_non_simple_in_peel(adj: &[Vec<usize>], order: &[usize]) -> Option<usize> {
    let mut alive = vec![true; adj.len()];
    for &v in order {
        if !is_simple_vertex(adj, v, &alive) {
            return Some(v);
        }
        alive[v] = false;
    }
    None
}
