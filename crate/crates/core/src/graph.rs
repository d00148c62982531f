//! Small pattern graphs: construction from spec strings, automorphism
//! counts, and copy counts inside `K_n`.
//!
//! A pattern graph has at most [`MAX_VERTICES`] vertices so that edge sets
//! fit in fixed-width bit masks and the counting hot loops stay
//! allocation-free.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;
use core::sync::atomic::{AtomicU64, Ordering};

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::Zero;

use crate::error::Error;
use crate::Result;

/// Hard limit on pattern-graph vertices.
pub const MAX_VERTICES: usize = 16;

/// Permutation brute force for automorphism counting is capped at this
/// order; built-in families carry closed forms and have no cap.
pub const MAX_BRUTE_FORCE_AUT: usize = 10;

/// `k!` for `k <= 20`.
pub(crate) fn factorial(k: u64) -> u64 {
    (2..=k).product()
}

pub(crate) fn big_factorial(k: u64) -> BigUint {
    (2..=k).map(BigUint::from).product()
}

pub(crate) fn big_binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    num_integer::binomial(BigUint::from(n), BigUint::from(k))
}

// ============================================================================
// Graph
// ============================================================================

/// A small labeled pattern graph on vertices `0..m`.
///
/// Edges are stored sorted lexicographically with `u < v`; adjacency is
/// mirrored into per-vertex bit masks for the hot loops. The automorphism
/// count is cached on first use (built-in families pre-seed it with a
/// closed form).
#[derive(Debug)]
pub struct Graph {
    m: usize,
    edges: Vec<(u8, u8)>,
    adj: [u16; MAX_VERTICES],
    aut_cache: AtomicU64,
}

impl Clone for Graph {
    fn clone(&self) -> Self {
        Graph {
            m: self.m,
            edges: self.edges.clone(),
            adj: self.adj,
            aut_cache: AtomicU64::new(self.aut_cache.load(Ordering::Relaxed)),
        }
    }
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.m == other.m && self.edges == other.edges
    }
}

impl Eq for Graph {}

impl Graph {
    /// Builds a graph from an explicit edge list.
    ///
    /// Rejects self-loops, duplicate edges, endpoints `>= m`, `m == 0`,
    /// and `m > MAX_VERTICES`.
    pub fn new(m: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if m == 0 {
            return Err(Error::Domain(String::from("graph needs at least one vertex")));
        }
        if m > MAX_VERTICES {
            return Err(Error::TooManyVertices { m });
        }
        let mut list: Vec<(u8, u8)> = Vec::with_capacity(edges.len());
        for &(a, b) in edges {
            if a == b {
                return Err(Error::Domain(format!("self-loop at vertex {a}")));
            }
            if a >= m || b >= m {
                return Err(Error::Domain(format!(
                    "edge ({a},{b}) has an endpoint outside 0..{m}"
                )));
            }
            let (u, v) = if a < b { (a, b) } else { (b, a) };
            list.push((u as u8, v as u8));
        }
        list.sort_unstable();
        if list.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::Domain(String::from("duplicate edge")));
        }
        let mut adj = [0u16; MAX_VERTICES];
        for &(u, v) in &list {
            adj[u as usize] |= 1 << v;
            adj[v as usize] |= 1 << u;
        }
        Ok(Graph {
            m,
            edges: list,
            adj,
            aut_cache: AtomicU64::new(0),
        })
    }

    /// Like [`Graph::new`] but pre-seeds the automorphism cache with a
    /// closed-form value (built-in families only).
    fn with_aut(m: usize, edges: &[(usize, usize)], aut: u64) -> Result<Self> {
        let g = Graph::new(m, edges)?;
        debug_assert!(aut >= 1 && factorial(m as u64).is_multiple_of(aut));
        g.aut_cache.store(aut, Ordering::Relaxed);
        Ok(g)
    }

    /// Vertex count m.
    pub fn m(&self) -> usize {
        self.m
    }

    /// Edge count e.
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edge list, sorted lexicographically with `u < v`.
    pub fn edges(&self) -> &[(u8, u8)] {
        &self.edges
    }

    /// Whether `(u, v)` is an edge.
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        debug_assert!(u < self.m && v < self.m);
        self.adj[u] & (1 << v) != 0
    }

    /// Number of vertex permutations mapping the edge set onto itself.
    ///
    /// Uses the cached closed form when the graph came from a built-in
    /// family; otherwise runs permutation brute force, which is capped at
    /// [`MAX_BRUTE_FORCE_AUT`] vertices.
    pub fn automorphism_count(&self) -> Result<u64> {
        let cached = self.aut_cache.load(Ordering::Relaxed);
        if cached != 0 {
            return Ok(cached);
        }
        if self.m > MAX_BRUTE_FORCE_AUT {
            return Err(Error::AutomorphismLimit { m: self.m });
        }
        let count = self.count_edge_preserving_permutations();
        self.aut_cache.store(count, Ordering::Relaxed);
        Ok(count)
    }

    /// Number of copies of this graph in an uncolored `K_n`:
    /// `binom(n, m) * m! / |Aut|`. Always integral.
    pub fn copies_in_complete(&self, n: usize) -> Result<BigUint> {
        if n < self.m {
            return Err(Error::Domain(format!(
                "host K_{n} is smaller than the pattern on {} vertices",
                self.m
            )));
        }
        let aut = self.automorphism_count()?;
        let arrangements = big_binomial(n as u64, self.m as u64) * big_factorial(self.m as u64);
        let (copies, rem) = arrangements.div_rem(&BigUint::from(aut));
        debug_assert!(rem.is_zero(), "|Aut| must divide the arrangement count");
        Ok(copies)
    }

    /// Heap's algorithm over all m! permutations, counting the
    /// edge-preserving ones.
    fn count_edge_preserving_permutations(&self) -> u64 {
        let m = self.m;
        let mut perm: [u8; MAX_VERTICES] = core::array::from_fn(|i| i as u8);
        let mut state = [0usize; MAX_VERTICES];
        let mut count = u64::from(self.preserves_edges(&perm));
        let mut i = 1;
        while i < m {
            if state[i] < i {
                if i % 2 == 0 {
                    perm.swap(0, i);
                } else {
                    perm.swap(state[i], i);
                }
                count += u64::from(self.preserves_edges(&perm));
                state[i] += 1;
                i = 1;
            } else {
                state[i] = 0;
                i += 1;
            }
        }
        count
    }

    fn preserves_edges(&self, perm: &[u8; MAX_VERTICES]) -> bool {
        self.edges.iter().all(|&(u, v)| {
            let pu = perm[u as usize] as usize;
            let pv = perm[v as usize] as usize;
            self.adj[pu] & (1 << pv) != 0
        })
    }
}

// ============================================================================
// GraphSpec
// ============================================================================

/// Textual descriptor of a built-in graph family.
///
/// Grammar: `K<a>` (complete), `K4-e` (complete minus one edge), `S<m>`
/// (star on m vertices), `P<k>` (path with k edges), `C<k>` (cycle with k
/// edges), `M<k>` (matching of k disjoint edges),
/// `stars:<m1>,<m2>,...` (disjoint stars, each part >= 2).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GraphSpec {
    /// `K<a>`: complete graph on a vertices.
    Complete(u32),
    /// `K4-e`: K_4 with one edge removed.
    CompleteMinusEdge,
    /// `S<m>`: star K_{1,m-1} on m vertices.
    Star(u32),
    /// `P<k>`: path with k edges (k+1 vertices).
    Path(u32),
    /// `C<k>`: cycle with k edges (k vertices).
    Cycle(u32),
    /// `M<k>`: matching of k disjoint edges (2k vertices).
    Matching(u32),
    /// `stars:<m1>,...`: disjoint stars with the given component orders.
    Stars(Vec<u32>),
}

fn parse_param(digits: &str, input: &str) -> Result<u32> {
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::SpecParse {
            input: String::from(input),
            reason: "expected a decimal parameter",
        });
    }
    digits.parse().map_err(|_| Error::SpecParse {
        input: String::from(input),
        reason: "parameter too large",
    })
}

impl FromStr for GraphSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s == "K4-e" {
            return Ok(GraphSpec::CompleteMinusEdge);
        }
        if let Some(rest) = s.strip_prefix("stars:") {
            let parts = rest
                .split(',')
                .map(|p| parse_param(p, s))
                .collect::<Result<Vec<u32>>>()?;
            return Ok(GraphSpec::Stars(parts));
        }
        let mut chars = s.chars();
        let family = chars.next().ok_or(Error::SpecParse {
            input: String::new(),
            reason: "empty spec",
        })?;
        let param = parse_param(chars.as_str(), s)?;
        match family {
            'K' => Ok(GraphSpec::Complete(param)),
            'S' => Ok(GraphSpec::Star(param)),
            'P' => Ok(GraphSpec::Path(param)),
            'C' => Ok(GraphSpec::Cycle(param)),
            'M' => Ok(GraphSpec::Matching(param)),
            _ => Err(Error::SpecParse {
                input: String::from(s),
                reason: "unknown family (expected K, S, P, C, M, K4-e, or stars:...)",
            }),
        }
    }
}

impl fmt::Display for GraphSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphSpec::Complete(a) => write!(f, "K{a}"),
            GraphSpec::CompleteMinusEdge => write!(f, "K4-e"),
            GraphSpec::Star(m) => write!(f, "S{m}"),
            GraphSpec::Path(k) => write!(f, "P{k}"),
            GraphSpec::Cycle(k) => write!(f, "C{k}"),
            GraphSpec::Matching(k) => write!(f, "M{k}"),
            GraphSpec::Stars(parts) => {
                write!(f, "stars:")?;
                for (i, p) in parts.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{p}")?;
                }
                Ok(())
            }
        }
    }
}

/// Automorphism count of a single star component on `m` vertices.
///
/// For `m == 2` the component is a bare edge and the two endpoints can
/// swap; for `m >= 3` the center is fixed by its degree and only the
/// `(m-1)!` leaf permutations remain.
fn star_component_aut(m: u32) -> u64 {
    if m == 2 {
        2
    } else {
        factorial(u64::from(m) - 1)
    }
}

impl GraphSpec {
    /// Builds the canonical labeled representative of this family.
    ///
    /// Canonical labelings: vertices are `0..m-1`; stars put the center at
    /// the lowest label of their component; paths and cycles are laid out
    /// in vertex order; matchings pair `(2i, 2i+1)`; `stars:` components
    /// occupy consecutive label ranges in the given order; `K4-e` drops
    /// the edge `(2,3)`.
    pub fn build(&self) -> Result<Graph> {
        match self {
            GraphSpec::Complete(a) => {
                let a = *a as usize;
                if a == 0 {
                    return Err(Error::Domain(String::from("K0 has no vertices")));
                }
                if a > MAX_VERTICES {
                    return Err(Error::TooManyVertices { m: a });
                }
                let mut edges = Vec::new();
                for u in 0..a {
                    for v in (u + 1)..a {
                        edges.push((u, v));
                    }
                }
                Graph::with_aut(a, &edges, factorial(a as u64))
            }
            GraphSpec::CompleteMinusEdge => {
                let edges = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)];
                Graph::with_aut(4, &edges, 4)
            }
            GraphSpec::Star(m) => {
                let m = *m as usize;
                if m < 2 {
                    return Err(Error::Domain(String::from("a star needs at least 2 vertices")));
                }
                if m > MAX_VERTICES {
                    return Err(Error::TooManyVertices { m });
                }
                let edges: Vec<(usize, usize)> = (1..m).map(|v| (0, v)).collect();
                Graph::with_aut(m, &edges, star_component_aut(m as u32))
            }
            GraphSpec::Path(k) => {
                let k = *k as usize;
                if k < 1 {
                    return Err(Error::Domain(String::from("a path needs at least one edge")));
                }
                let m = k + 1;
                if m > MAX_VERTICES {
                    return Err(Error::TooManyVertices { m });
                }
                let edges: Vec<(usize, usize)> = (0..k).map(|i| (i, i + 1)).collect();
                Graph::with_aut(m, &edges, 2)
            }
            GraphSpec::Cycle(k) => {
                let k = *k as usize;
                if k < 3 {
                    return Err(Error::Domain(String::from("a cycle needs at least 3 edges")));
                }
                if k > MAX_VERTICES {
                    return Err(Error::TooManyVertices { m: k });
                }
                let mut edges: Vec<(usize, usize)> = (0..k - 1).map(|i| (i, i + 1)).collect();
                edges.push((0, k - 1));
                // Dihedral group; at k = 3 this coincides with Aut(K3) = 3!.
                Graph::with_aut(k, &edges, 2 * k as u64)
            }
            GraphSpec::Matching(k) => {
                let k = *k as usize;
                if k < 1 {
                    return Err(Error::Domain(String::from("a matching needs at least one edge")));
                }
                let m = 2 * k;
                if m > MAX_VERTICES {
                    return Err(Error::TooManyVertices { m });
                }
                let edges: Vec<(usize, usize)> = (0..k).map(|i| (2 * i, 2 * i + 1)).collect();
                let aut = factorial(k as u64) * (1u64 << k);
                Graph::with_aut(m, &edges, aut)
            }
            GraphSpec::Stars(parts) => {
                if parts.is_empty() {
                    return Err(Error::Domain(String::from("stars: needs at least one part")));
                }
                if parts.iter().any(|&p| p < 2) {
                    return Err(Error::Domain(String::from("stars: parts must be at least 2")));
                }
                let m: usize = parts.iter().map(|&p| p as usize).sum();
                if m > MAX_VERTICES {
                    return Err(Error::TooManyVertices { m });
                }
                let mut edges = Vec::new();
                let mut offset = 0usize;
                for &p in parts {
                    for leaf in 1..p as usize {
                        edges.push((offset, offset + leaf));
                    }
                    offset += p as usize;
                }
                let aut = stars_aut(parts);
                Graph::with_aut(m, &edges, aut)
            }
        }
    }
}

/// `gamma(P) * prod_i Aut(K_{1,m_i-1})` where gamma permutes equal-order
/// components.
fn stars_aut(parts: &[u32]) -> u64 {
    let mut sorted: Vec<u32> = parts.to_vec();
    sorted.sort_unstable();
    let mut aut = 1u64;
    let mut run = 1u64;
    for (i, &p) in sorted.iter().enumerate() {
        if i > 0 && sorted[i - 1] == p {
            run += 1;
        } else {
            run = 1;
        }
        aut *= run * star_component_aut(p);
    }
    aut
}

/// Parses a spec string and builds the graph in one step.
pub fn build_graph(spec: &str) -> Result<Graph> {
    spec.parse::<GraphSpec>()?.build()
}

// ============================================================================
// Tests
// ============================================================================
