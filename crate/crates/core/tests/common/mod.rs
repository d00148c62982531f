//! Naive reference implementations, independent of the optimized
//! counting and search paths: injective-map enumeration for counts,
//! permutation enumeration for automorphisms, and a full odometer over
//! all colorings for exhaustive maxima.

use antiramsey_core::coloring::EdgeColoring;
use antiramsey_core::graph::Graph;

/// Counts vertex permutations of `0..m` mapping the edge list onto itself.
pub fn naive_automorphisms(m: usize, edges: &[(usize, usize)]) -> u64 {
    let mut perm: Vec<usize> = Vec::with_capacity(m);
    let mut used = vec![false; m];
    fn rec(
        m: usize,
        edges: &[(usize, usize)],
        perm: &mut Vec<usize>,
        used: &mut [bool],
    ) -> u64 {
        if perm.len() == m {
            let ok = edges.iter().all(|&(u, v)| {
                let (a, b) = (perm[u], perm[v]);
                edges
                    .iter()
                    .any(|&(x, y)| (x, y) == (a.min(b), a.max(b)))
            });
            return u64::from(ok);
        }
        let mut total = 0;
        for cand in 0..m {
            if !used[cand] {
                used[cand] = true;
                perm.push(cand);
                total += rec(m, edges, perm, used);
                perm.pop();
                used[cand] = false;
            }
        }
        total
    }
    rec(m, edges, &mut perm, &mut used)
}

fn graph_edges(h: &Graph) -> Vec<(usize, usize)> {
    h.edges()
        .iter()
        .map(|&(u, v)| (u as usize, v as usize))
        .collect()
}

/// Counts injective maps from the pattern vertices into the host whose
/// image edges receive pairwise distinct colors.
pub fn naive_labeled_rainbow(h: &Graph, c: &EdgeColoring) -> u64 {
    let m = h.m();
    let n = c.n();
    let edges = graph_edges(h);
    let mut map: Vec<usize> = Vec::with_capacity(m);
    let mut used = vec![false; n];
    fn rec(
        m: usize,
        n: usize,
        edges: &[(usize, usize)],
        c: &EdgeColoring,
        map: &mut Vec<usize>,
        used: &mut [bool],
    ) -> u64 {
        if map.len() == m {
            let mut colors: Vec<u16> = edges.iter().map(|&(u, v)| c.color(map[u], map[v])).collect();
            colors.sort_unstable();
            let distinct = colors.windows(2).all(|w| w[0] != w[1]);
            return u64::from(distinct);
        }
        let mut total = 0;
        for cand in 0..n {
            if !used[cand] {
                used[cand] = true;
                map.push(cand);
                total += rec(m, n, edges, c, map, used);
                map.pop();
                used[cand] = false;
            }
        }
        total
    }
    rec(m, n, &edges, c, &mut map, &mut used)
}

/// Unlabeled rainbow count: labeled embeddings divided by the naive
/// automorphism count.
pub fn naive_rainbow_count(h: &Graph, c: &EdgeColoring) -> u64 {
    let labeled = naive_labeled_rainbow(h, c);
    let aut = naive_automorphisms(h.m(), &graph_edges(h));
    assert_eq!(labeled % aut, 0, "labeled count must be divisible by |Aut|");
    labeled / aut
}

/// Exhaustive maximum of the naive rainbow count over all r^E colorings.
pub fn naive_exact_rb(h: &Graph, n: usize, r: usize) -> u64 {
    let edge_count = n * (n - 1) / 2;
    let total = (r as u64).checked_pow(edge_count as u32).expect("instance too big");
    let mut best = 0;
    for code in 0..total {
        let mut x = code;
        let mut colors = vec![0u16; edge_count];
        for slot in colors.iter_mut() {
            *slot = (x % r as u64) as u16;
            x /= r as u64;
        }
        let coloring = EdgeColoring::new(n, r, colors).unwrap();
        best = best.max(naive_rainbow_count(h, &coloring));
    }
    best
}
