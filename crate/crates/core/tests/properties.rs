mod common;

use common::{arb_instance, brute_force_matching, share_node, Shadow};
use proptest::prelude::*;
use rdv_core::gen::{gen_random, intervals_to_rdv, GenConfig};
use rdv_core::geometry::{scaled_top, segment_intersects, HSegment, Layout, RayQuery};
use rdv_core::matching::first_non_simple_in_peel;
use rdv_core::{
    assign_coordinates, bottom_up_order, compress_tree, delayed_greedy, delayed_greedy_delta,
    greedy_reference, maximum_matching_oracle, AdjacencyOracle, Exec, RayShootIndex,
};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn generated_instances_are_valid(inst in arb_instance(30, 20, 3)) {
        prop_assert!(inst.validate().is_empty());
    }

    #[test]
    fn oracle_matches_node_sets_and_is_symmetric(inst in arb_instance(25, 15, 3)) {
        let o = AdjacencyOracle::new(&inst);
        for i in 0..inst.len() {
            for j in 0..inst.len() {
                if i == j { continue; }
                let fast = o.adjacent(i, j).unwrap();
                prop_assert_eq!(fast, o.adjacent(j, i).unwrap());
                prop_assert_eq!(fast, share_node(&inst.tree, &inst.vertices[i], &inst.vertices[j]));
            }
        }
    }

    #[test]
    fn coordinates_nest(inst in arb_instance(40, 0, 1)) {
        let tree = &inst.tree;
        let c = assign_coordinates(tree);
        let leaves: Vec<usize> = tree.preorder().into_iter().filter(|&u| tree.is_leaf(u)).collect();
        for (k, &leaf) in leaves.iter().enumerate() {
            prop_assert_eq!((c.x[leaf], c.r[leaf]), (k + 1, k + 1));
        }
        for u in 0..tree.len() {
            prop_assert!(c.x[u] <= c.r[u]);
            if let Some(&first) = tree.children(u).first() {
                prop_assert_eq!(c.x[u], c.x[first]);
            }
            for &ch in tree.children(u) {
                prop_assert!(c.x[u] <= c.x[ch] && c.r[ch] <= c.r[u]);
                prop_assert_eq!(c.y[ch], c.y[u] + 1);
            }
            for w in 0..tree.len() {
                if w != u && c.y[w] == c.y[u] {
                    prop_assert!(c.r[u] < c.x[w] || c.r[w] < c.x[u]);
                }
            }
        }
    }

    #[test]
    fn bottom_up_order_is_monotone_permutation(inst in arb_instance(30, 30, 1)) {
        let c = assign_coordinates(&inst.tree);
        let order = bottom_up_order(&inst, &c);
        let mut sorted = order.clone();
        sorted.sort_unstable();
        prop_assert_eq!(sorted, (0..inst.len()).collect::<Vec<_>>());
        for w in order.windows(2) {
            let (a, b) = (c.y[inst.vertices[w[0]].top], c.y[inst.vertices[w[1]].top]);
            prop_assert!(a > b || (a == b && w[0] < w[1]));
        }
    }

    #[test]
    fn segments_levels_are_injective_and_floor_to_depth(inst in arb_instance(30, 30, 1)) {
        let layout = Layout::new(&inst);
        let n = inst.len() as u64;
        let mut levels: Vec<u64> = (0..inst.len()).map(|v| layout.segment(&inst, v).ys).collect();
        for (v, &ys) in inst.vertices.iter().zip(&levels) {
            prop_assert_eq!((ys - 1) / n, layout.coords.y[v.top] as u64);
        }
        levels.sort_unstable();
        levels.dedup();
        prop_assert_eq!(levels.len(), inst.len());
    }

    #[test]
    fn segment_hit_iff_adjacent(inst in arb_instance(40, 40, 1)) {
        let layout = Layout::new(&inst);
        let o = AdjacencyOracle::new(&inst);
        for (a, &i) in layout.order.iter().enumerate() {
            let s = layout.segment(&inst, i);
            for &j in &layout.order[a + 1..] {
                let q = layout.rays(&inst, j).next().unwrap();
                let top = layout.top_bound(&inst, j);
                prop_assert_eq!(segment_intersects(&s, &q, top), o.adjacent(i, j).unwrap());
                // The ray form agrees too, since v_i precedes v_j.
                let ray_hit = s.x_lo <= q.x && q.x <= s.x_hi && s.ys <= q.y_origin;
                prop_assert_eq!(ray_hit, o.adjacent(i, j).unwrap());
            }
        }
    }

    #[test]
    fn compression_preserves_graph(inst in arb_instance(40, 25, 1)) {
        let c = compress_tree(&inst).unwrap();
        prop_assert!(c.validate().is_empty());
        prop_assert!(c.tree.len() <= (2 * inst.len()).max(1));
        let before = AdjacencyOracle::new(&inst).adjacency_lists(Exec::Sequential);
        let after = AdjacencyOracle::new(&c).adjacency_lists(Exec::Sequential);
        prop_assert_eq!(before, after);
        prop_assert_eq!(compress_tree(&c).unwrap(), c);
    }

    #[test]
    fn compression_preserves_subtree_graph(inst in arb_instance(40, 25, 3)) {
        let c = compress_tree(&inst).unwrap();
        prop_assert!(c.validate().is_empty());
        let before = AdjacencyOracle::new(&inst).adjacency_lists(Exec::Sequential);
        let after = AdjacencyOracle::new(&c).adjacency_lists(Exec::Sequential);
        prop_assert_eq!(before, after);
        prop_assert_eq!(compress_tree(&c).unwrap(), c);
    }

    #[test]
    fn delayed_equals_greedy_and_is_optimal(inst in arb_instance(20, 14, 1)) {
        let m = delayed_greedy(&inst).unwrap();
        let adj = AdjacencyOracle::new(&inst).adjacency_lists(Exec::Sequential);
        let layout = Layout::new(&inst);
        prop_assert_eq!(&m, &greedy_reference(&adj, &layout.order));
        prop_assert!(m.is_valid_in(&adj));
        prop_assert!(m.is_maximal_in(&adj));
        prop_assert_eq!(m.len(), maximum_matching_oracle(&adj, 24).unwrap().0);
        prop_assert_eq!(delayed_greedy_delta(&inst).unwrap(), m);
    }

    #[test]
    fn delta_greedy_equals_reference(inst in arb_instance(30, 30, 3)) {
        let m = delayed_greedy_delta(&inst).unwrap();
        let adj = AdjacencyOracle::new(&inst).adjacency_lists(Exec::Sequential);
        let layout = Layout::new(&inst);
        prop_assert_eq!(&m, &greedy_reference(&adj, &layout.order));
        prop_assert!(m.is_maximal_in(&adj));
    }

    #[test]
    fn peeling_bottom_up_stays_simple(inst in arb_instance(30, 25, 1)) {
        let adj = AdjacencyOracle::new(&inst).adjacency_lists(Exec::Sequential);
        let layout = Layout::new(&inst);
        prop_assert_eq!(first_non_simple_in_peel(&adj, &layout.order), None);
    }

    #[test]
    fn intervals_convert_faithfully(iv in prop::collection::vec((-20i64..20, 0i64..10), 0..40)) {
        let intervals: Vec<(i64, i64)> = iv.into_iter().map(|(lo, len)| (lo, lo + len)).collect();
        let inst = intervals_to_rdv(&intervals).unwrap();
        prop_assert!(inst.validate().is_empty());
        let o = AdjacencyOracle::new(&inst);
        for i in 0..intervals.len() {
            for j in i + 1..intervals.len() {
                let (a, b) = (intervals[i], intervals[j]);
                prop_assert_eq!(o.adjacent(i, j).unwrap(), a.0.max(b.0) <= a.1.min(b.1));
            }
        }
    }

    #[test]
    fn exact_oracle_matches_brute_force(
        n in 1usize..9,
        edges in prop::collection::vec((0usize..9, 0usize..9), 0..14),
    ) {
        let mut adj = vec![Vec::new(); n];
        for (a, b) in edges {
            let (a, b) = (a % n, b % n);
            if a != b && !adj[a].contains(&b) {
                adj[a].push(b);
                adj[b].push(a);
            }
        }
        let (size, witness) = maximum_matching_oracle(&adj, 24).unwrap();
        prop_assert_eq!(size, brute_force_matching(&adj));
        prop_assert_eq!(witness.len(), size);
        prop_assert!(witness.is_valid_in(&adj));
    }

    #[test]
    fn rayshoot_matches_linear_scan(
        ops in prop::collection::vec((0u8..3, 0usize..32, 1usize..17, 0usize..16, 0u64..200), 1..300),
    ) {
        let leaves = 16;
        let mut idx = RayShootIndex::new(leaves, 32);
        let mut shadow = Shadow::default();
        for (kind, owner, x, w, y) in ops {
            match kind {
                0 if !idx.contains(owner) => {
                    // Level unique per owner, as the matching code guarantees.
                    let s = HSegment { owner, ys: y * 32 + owner as u64, x_lo: x, x_hi: (x + w).min(leaves) };
                    idx.insert(s).unwrap();
                    shadow.insert(s);
                }
                1 if idx.contains(owner) => {
                    idx.delete(owner).unwrap();
                    shadow.delete(owner);
                }
                _ => {
                    let q = RayQuery { x, y_origin: y * 32 };
                    prop_assert_eq!(idx.shoot(&q), shadow.shoot(&q));
                }
            }
            prop_assert_eq!(idx.len(), shadow.live.len());
        }
    }
}

#[test]
fn gen_random_sweep_is_valid() {
    for seed in 0..100 {
        let cfg = GenConfig {
            seed,
            tree_nodes: 1 + (seed as usize * 7) % 60,
            n_vertices: 1 + (seed as usize * 11) % 40,
            max_branching: 1 + seed as usize % 5,
            delta: 1 + seed as usize % 3,
            ..GenConfig::default()
        };
        let inst = gen_random(&cfg).unwrap();
        assert!(inst.validate().is_empty(), "seed {seed}");
    }
}

#[test]
fn boundary_levels_on_constructed_pair() {
    // v0 starts at depth 1; v1's path ends at depth 1 (hit) or above it (miss).
    use rdv_core::{HostTree, RdvInstance};
    let hit = RdvInstance::from_paths(HostTree::path(3), [(1, 2), (0, 1)]);
    let miss = RdvInstance::from_paths(HostTree::path(3), [(1, 2), (0, 0)]);
    for (inst, expect) in [(hit, true), (miss, false)] {
        let layout = Layout::new(&inst);
        assert_eq!(layout.order, vec![0, 1]);
        let s = layout.segment(&inst, 0);
        let q = layout.rays(&inst, 1).next().unwrap();
        assert_eq!(segment_intersects(&s, &q, scaled_top(0, 2)), expect);
    }
}
