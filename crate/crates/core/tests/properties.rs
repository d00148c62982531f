//! Property tests for the counting invariants.

use antiramsey_core::coloring::{pair_index, EdgeColoring};
use antiramsey_core::graph::build_graph;
use antiramsey_core::rainbow::count_rainbow_copies;
use num_bigint::BigUint;
use proptest::prelude::*;

fn arb_coloring(max_n: usize, max_r: usize) -> impl Strategy<Value = EdgeColoring> {
    (2..=max_n, 1..=max_r, any::<u64>())
        .prop_map(|(n, r, seed)| EdgeColoring::random(n, r, seed).unwrap())
}

fn relabel_colors(c: &EdgeColoring, perm: &[u16]) -> EdgeColoring {
    let colors = c.colors().iter().map(|&x| perm[x as usize]).collect();
    EdgeColoring::new(c.n(), c.r(), colors).unwrap()
}

fn permute_vertices(c: &EdgeColoring, perm: &[usize]) -> EdgeColoring {
    let n = c.n();
    let mut colors = vec![0u16; n * (n - 1) / 2];
    for u in 0..n {
        for v in (u + 1)..n {
            let (a, b) = (perm[u].min(perm[v]), perm[u].max(perm[v]));
            colors[pair_index(n, a, b)] = c.color(u, v);
        }
    }
    EdgeColoring::new(n, c.r(), colors).unwrap()
}

fn simple_shuffle<T>(items: &mut [T], seed: u64) {
    // Fisher-Yates driven by splitmix64 steps; good enough for tests.
    let mut state = seed;
    let mut next = || {
        state = state.wrapping_add(0x9E3779B97F4A7C15);
        let mut z = state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58476D1CE4E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D049BB133111EB);
        z ^ (z >> 31)
    };
    for i in (1..items.len()).rev() {
        let j = (next() % (i as u64 + 1)) as usize;
        items.swap(i, j);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn count_is_invariant_under_color_relabeling(
        c in arb_coloring(8, 5),
        shuffle_seed in any::<u64>(),
    ) {
        let mut perm: Vec<u16> = (0..c.r() as u16).collect();
        simple_shuffle(&mut perm, shuffle_seed);
        let relabeled = relabel_colors(&c, &perm);
        for spec in ["K3", "P2", "S4", "K4-e"] {
            let h = build_graph(spec).unwrap();
            if h.m() > c.n() {
                continue;
            }
            prop_assert_eq!(
                count_rainbow_copies(&h, &c).unwrap(),
                count_rainbow_copies(&h, &relabeled).unwrap()
            );
        }
    }

    #[test]
    fn count_is_invariant_under_vertex_relabeling(
        c in arb_coloring(8, 5),
        shuffle_seed in any::<u64>(),
    ) {
        let mut perm: Vec<usize> = (0..c.n()).collect();
        simple_shuffle(&mut perm, shuffle_seed);
        let permuted = permute_vertices(&c, &perm);
        for spec in ["K3", "P3", "S4", "M2"] {
            let h = build_graph(spec).unwrap();
            if h.m() > c.n() {
                continue;
            }
            prop_assert_eq!(
                count_rainbow_copies(&h, &c).unwrap(),
                count_rainbow_copies(&h, &permuted).unwrap()
            );
        }
    }

    #[test]
    fn count_never_exceeds_copy_count(c in arb_coloring(8, 6)) {
        for spec in ["K3", "P2", "P4", "S4", "K4-e", "M2", "C4"] {
            let h = build_graph(spec).unwrap();
            if h.m() > c.n() {
                continue;
            }
            let count = count_rainbow_copies(&h, &c).unwrap();
            let copies = h.copies_in_complete(c.n()).unwrap();
            prop_assert!(BigUint::from(count) <= copies);
        }
    }

    #[test]
    fn pigeonhole_zero_when_edges_exceed_colors(
        n in 4usize..8,
        seed in any::<u64>(),
    ) {
        let c = EdgeColoring::random(n, 2, seed).unwrap();
        for spec in ["K3", "P3", "S4"] {
            let h = build_graph(spec).unwrap();
            if h.m() > n {
                continue;
            }
            prop_assert!(h.edge_count() > 2);
            prop_assert_eq!(count_rainbow_copies(&h, &c).unwrap(), 0);
        }
    }

    #[test]
    fn blow_up_at_base_size_is_identity(base in arb_coloring(7, 4)) {
        prop_assert_eq!(base.blow_up(base.n()).unwrap(), base);
    }

    #[test]
    fn blow_up_top_parts_are_self_similar(
        base in arb_coloring(5, 4),
        multiplier in 2usize..4,
        extra in 0usize..3,
    ) {
        let n = base.n() * multiplier + extra;
        let up = base.blow_up(n).unwrap();
        // Recompute the pinned part boundaries: larger parts first.
        let small = n / base.n();
        let large_parts = n % base.n();
        let mut at = 0;
        for i in 0..base.n() {
            let size = small + usize::from(i < large_parts);
            let verts: Vec<usize> = (at..at + size).collect();
            at += size;
            if size < 2 {
                continue;
            }
            let part = up.induced(&verts).unwrap();
            let expect = if size >= base.n() {
                base.blow_up(size).unwrap()
            } else {
                base.induced(&(0..size).collect::<Vec<_>>()).unwrap()
            };
            prop_assert_eq!(part, expect);
        }
    }
}
