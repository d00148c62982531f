//! r-edge-colorings of `K_n`: dense upper-triangular storage plus the
//! generators used throughout — seeded random colorings, recursive
//! blow-ups, and the pinned base colorings.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha12Rng;

use crate::error::Error;
use crate::Result;

/// Colors are stored in `u16`, so at most this many are supported.
pub const MAX_COLORS: usize = u16::MAX as usize + 1;

/// An r-edge-coloring of `K_n`.
///
/// `colors[i]` holds the color of the i-th unordered pair `(u, v)`,
/// `u < v`, in row-major upper-triangular order; every entry is in
/// `0..r`. Colorings are immutable in normal use (the search module
/// mutates its own working copies) and safe to share across threads.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeColoring {
    n: usize,
    r: usize,
    colors: Vec<u16>,
}

/// Index of the pair `(u, v)`, `u < v`, in row-major upper-triangular
/// order over `n` vertices.
#[inline]
pub fn pair_index(n: usize, u: usize, v: usize) -> usize {
    debug_assert!(u < v && v < n);
    u * (2 * n - u - 1) / 2 + (v - u - 1)
}

fn check_host(n: usize, r: usize) -> Result<()> {
    if n < 2 {
        return Err(Error::Domain(format!("a coloring needs n >= 2 vertices, got {n}")));
    }
    if r < 1 {
        return Err(Error::Domain(String::from("a coloring needs at least one color")));
    }
    if r > MAX_COLORS {
        return Err(Error::Domain(format!("at most {MAX_COLORS} colors are supported, got {r}")));
    }
    Ok(())
}

impl EdgeColoring {
    /// Wraps a raw color array, validating the length and color range.
    pub fn new(n: usize, r: usize, colors: Vec<u16>) -> Result<Self> {
        check_host(n, r)?;
        let expected = n * (n - 1) / 2;
        if colors.len() != expected {
            return Err(Error::Domain(format!(
                "expected {expected} edge colors for n={n}, got {}",
                colors.len()
            )));
        }
        if let Some(&c) = colors.iter().find(|&&c| usize::from(c) >= r) {
            return Err(Error::Domain(format!("color {c} out of range 0..{r}")));
        }
        Ok(EdgeColoring { n, r, colors })
    }

    /// All edges the same color.
    pub fn constant(n: usize, r: usize, color: u16) -> Result<Self> {
        check_host(n, r)?;
        if usize::from(color) >= r {
            return Err(Error::Domain(format!("color {color} out of range 0..{r}")));
        }
        Ok(EdgeColoring {
            n,
            r,
            colors: vec![color; n * (n - 1) / 2],
        })
    }

    /// Each edge color drawn i.i.d. uniformly from `0..r`.
    ///
    /// The generator is pinned for reproducibility: a ChaCha12 stream
    /// seeded via `SeedableRng::seed_from_u64(seed)`, with one
    /// `random_range(0..r)` draw per pair in row-major upper-triangular
    /// order. Identical `(n, r, seed)` inputs reproduce the identical
    /// coloring bit for bit.
    pub fn random(n: usize, r: usize, seed: u64) -> Result<Self> {
        check_host(n, r)?;
        let mut rng = ChaCha12Rng::seed_from_u64(seed);
        let colors = (0..n * (n - 1) / 2)
            .map(|_| rng.random_range(0..r) as u16)
            .collect();
        Ok(EdgeColoring { n, r, colors })
    }

    /// Host vertex count.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of colors.
    pub fn r(&self) -> usize {
        self.r
    }

    /// Raw color array in pair order.
    pub fn colors(&self) -> &[u16] {
        &self.colors
    }

    /// Color of the edge `{u, v}`.
    pub fn color(&self, u: usize, v: usize) -> u16 {
        let (u, v) = if u < v { (u, v) } else { (v, u) };
        self.colors[pair_index(self.n, u, v)]
    }

    /// Color at a precomputed pair index.
    #[inline]
    pub fn color_at(&self, idx: usize) -> u16 {
        self.colors[idx]
    }

    /// Overwrites the color at a precomputed pair index.
    #[inline]
    pub(crate) fn set_color_at(&mut self, idx: usize, color: u16) {
        debug_assert!(usize::from(color) < self.r);
        self.colors[idx] = color;
    }

    /// The coloring induced on a vertex subset, relabeled to `0..k` in
    /// the order given. Keeps the full palette `r`.
    pub fn induced(&self, verts: &[usize]) -> Result<Self> {
        let k = verts.len();
        if k < 2 {
            return Err(Error::Domain(String::from("induced coloring needs >= 2 vertices")));
        }
        for (i, &v) in verts.iter().enumerate() {
            if v >= self.n || verts[..i].contains(&v) {
                return Err(Error::InvalidVertex { vertex: v, n: self.n });
            }
        }
        let mut colors = Vec::with_capacity(k * (k - 1) / 2);
        for i in 0..k {
            for j in (i + 1)..k {
                colors.push(self.color(verts[i], verts[j]));
            }
        }
        Ok(EdgeColoring { n: k, r: self.r, colors })
    }

    /// Recursive blow-up of this coloring onto `n >= self.n` vertices.
    ///
    /// The host vertices split into `self.n` consecutive parts whose
    /// sizes differ by at most one, larger parts first. A cross edge
    /// between parts i and j takes the base color of `(i, j)`; each part
    /// of size >= 2 is colored by the same rule applied to its own size.
    /// A part smaller than the base splits into that many singletons
    /// colored by the base restricted to its first vertices, so
    /// `blow_up(base, base.n) == base`.
    pub fn blow_up(&self, n: usize) -> Result<Self> {
        if n < self.n {
            return Err(Error::Domain(format!(
                "blow-up target n={n} is smaller than the base on {} vertices",
                self.n
            )));
        }
        let mut colors = vec![0u16; n * (n - 1) / 2];
        self.fill_blow_up(&mut colors, n, 0, n);
        Ok(EdgeColoring { n, r: self.r, colors })
    }

    fn fill_blow_up(&self, out: &mut [u16], host_n: usize, lo: usize, size: usize) {
        if size < 2 {
            return;
        }
        let parts = self.n.min(size);
        let small = size / parts;
        let large_parts = size % parts;
        // Part boundaries, larger parts first.
        let mut bounds = Vec::with_capacity(parts + 1);
        let mut at = lo;
        for i in 0..parts {
            bounds.push(at);
            at += small + usize::from(i < large_parts);
        }
        bounds.push(at);
        debug_assert_eq!(at, lo + size);

        for i in 0..parts {
            for j in (i + 1)..parts {
                let c = self.color(i, j);
                for u in bounds[i]..bounds[i + 1] {
                    for v in bounds[j]..bounds[j + 1] {
                        out[pair_index(host_n, u, v)] = c;
                    }
                }
            }
        }
        for i in 0..parts {
            self.fill_blow_up(out, host_n, bounds[i], bounds[i + 1] - bounds[i]);
        }
    }

    /// Looks up a built-in base coloring: `fig-k5` or `rainbow:<a>`.
    pub fn builtin(name: &str) -> Result<Self> {
        if name == "fig-k5" {
            return Ok(Self::fig_k5());
        }
        if let Some(rest) = name.strip_prefix("rainbow:") {
            let a: usize = rest.parse().map_err(|_| Error::UnknownBuiltin {
                name: String::from(name),
            })?;
            return Self::rainbow_complete(a);
        }
        Err(Error::UnknownBuiltin {
            name: String::from(name),
        })
    }

    /// The pinned 5-coloring of `K_5`: with vertices 0..4 on a cycle,
    /// cycle edges (0,1),(1,2),(2,3),(3,4),(4,0) get colors 0,1,2,3,4 and
    /// diagonals (2,4),(3,0),(4,1),(0,2),(1,3) get colors 0,1,2,3,4.
    pub fn fig_k5() -> Self {
        const EDGES: [(usize, usize, u16); 10] = [
            (0, 1, 0),
            (1, 2, 1),
            (2, 3, 2),
            (3, 4, 3),
            (4, 0, 4),
            (2, 4, 0),
            (3, 0, 1),
            (4, 1, 2),
            (0, 2, 3),
            (1, 3, 4),
        ];
        let mut colors = vec![0u16; 10];
        for &(u, v, c) in &EDGES {
            let (u, v) = if u < v { (u, v) } else { (v, u) };
            colors[pair_index(5, u, v)] = c;
        }
        EdgeColoring { n: 5, r: 5, colors }
    }

    /// `K_a` with all `binom(a, 2)` edges distinctly colored `0..binom(a, 2)`.
    pub fn rainbow_complete(a: usize) -> Result<Self> {
        if a < 2 {
            return Err(Error::Domain(format!("rainbow:{a} needs a >= 2")));
        }
        let e = a * (a - 1) / 2;
        if e > MAX_COLORS {
            return Err(Error::Domain(format!(
                "rainbow:{a} needs {e} colors, above the {MAX_COLORS} limit"
            )));
        }
        let colors = (0..e).map(|i| i as u16).collect();
        Ok(EdgeColoring { n: a, r: e, colors })
    }
}

// ============================================================================
// Tests
// ============================================================================

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pair_index_is_row_major() {
        let n = 5;
        let mut expect = 0;
        for u in 0..n {
            for v in (u + 1)..n {
                assert_eq!(pair_index(n, u, v), expect);
                expect += 1;
            }
        }
        assert_eq!(expect, 10);
    }

    #[test]
    fn single_edge_single_color() {
        let c = EdgeColoring::random(2, 1, 12345).unwrap();
        assert_eq!(c.colors(), &[0]);
    }

    #[test]
    fn random_is_deterministic() {
        let a = EdgeColoring::random(10, 4, 7).unwrap();
        let b = EdgeColoring::random(10, 4, 7).unwrap();
        assert_eq!(a, b);
        let c = EdgeColoring::random(10, 4, 8).unwrap();
        assert_ne!(a, c);
    }

    #[test]
    fn new_validates() {
        assert!(EdgeColoring::new(1, 1, vec![]).is_err());
        assert!(EdgeColoring::new(3, 1, vec![0, 0]).is_err());
        assert!(EdgeColoring::new(3, 2, vec![0, 2, 0]).is_err());
        assert!(EdgeColoring::new(3, 2, vec![0, 1, 1]).is_ok());
    }

    #[test]
    fn blow_up_of_constant_base_is_constant() {
        let base = EdgeColoring::constant(2, 1, 0).unwrap();
        let up = base.blow_up(4).unwrap();
        assert_eq!(up.colors(), &[0u16; 6][..]);
    }

    #[test]
    fn blow_up_at_base_size_is_identity() {
        let base = EdgeColoring::fig_k5();
        assert_eq!(base.blow_up(5).unwrap(), base);
        let r3 = EdgeColoring::rainbow_complete(3).unwrap();
        assert_eq!(r3.blow_up(3).unwrap(), r3);
    }

    #[test]
    fn blow_up_rejects_small_target() {
        let base = EdgeColoring::fig_k5();
        assert!(base.blow_up(4).is_err());
    }

    #[test]
    fn blow_up_small_part_rule() {
        // n=7 over a 5-vertex base gives part sizes 2,2,1,1,1. A 2-vertex
        // part recurses through the base restricted to its first two
        // vertices, so its internal edge takes the base color of (0,1).
        let base = EdgeColoring::fig_k5();
        let up = base.blow_up(7).unwrap();
        assert_eq!(up.color(0, 1), base.color(0, 1));
        assert_eq!(up.color(2, 3), base.color(0, 1));
        // Cross edges between the first two parts take the base (0,1) color.
        assert_eq!(up.color(0, 2), base.color(0, 1));
        assert_eq!(up.color(1, 3), base.color(0, 1));
        // A cross edge between parts 0 and 2 takes the base (0,2) color.
        assert_eq!(up.color(0, 4), base.color(0, 2));
    }

    #[test]
    fn blow_up_parts_are_self_similar() {
        // 28 over a 5-vertex base: parts sized 6,6,6,5,5. Every part is at
        // least as large as the base, so each one, relabeled, is the
        // blow-up of the same base at the part's size.
        let base = EdgeColoring::fig_k5();
        let up = base.blow_up(28).unwrap();
        let starts = [0usize, 6, 12, 18, 23, 28];
        for p in 0..5 {
            let verts: Vec<usize> = (starts[p]..starts[p + 1]).collect();
            let part = up.induced(&verts).unwrap();
            let expect = base.blow_up(verts.len()).unwrap();
            assert_eq!(part, expect, "part {p} is not self-similar");
        }
    }

    #[test]
    fn blow_up_parts_below_base_use_restricted_base() {
        // 12 over a 5-vertex base: parts sized 3,3,2,2,2. Parts smaller
        // than the base are colored by the base restricted to their first
        // |part| vertices.
        let base = EdgeColoring::fig_k5();
        let up = base.blow_up(12).unwrap();
        let starts = [0usize, 3, 6, 8, 10, 12];
        for p in 0..5 {
            let verts: Vec<usize> = (starts[p]..starts[p + 1]).collect();
            let part = up.induced(&verts).unwrap();
            let expect = base.induced(&(0..verts.len()).collect::<Vec<_>>()).unwrap();
            assert_eq!(part, expect, "part {p} does not match the restricted base");
        }
    }

    #[test]
    fn fig_k5_uses_each_color_twice() {
        let c = EdgeColoring::fig_k5();
        let mut counts = [0usize; 5];
        for &col in c.colors() {
            counts[col as usize] += 1;
        }
        assert_eq!(counts, [2; 5]);
    }

    #[test]
    fn rainbow_builtin() {
        let c = EdgeColoring::builtin("rainbow:3").unwrap();
        assert_eq!((c.n(), c.r()), (3, 3));
        assert_eq!(c.colors(), &[0, 1, 2]);
        assert!(EdgeColoring::builtin("rainbow:1").is_err());
        assert!(EdgeColoring::builtin("nope").is_err());
    }

    #[test]
    fn induced_validates_vertices() {
        let c = EdgeColoring::fig_k5();
        assert!(c.induced(&[0]).is_err());
        assert!(c.induced(&[0, 5]).is_err());
        assert!(c.induced(&[0, 0]).is_err());
        let sub = c.induced(&[0, 1, 2]).unwrap();
        assert_eq!(sub.color(0, 1), c.color(0, 1));
        assert_eq!(sub.color(1, 2), c.color(1, 2));
        assert_eq!(sub.color(0, 2), c.color(0, 2));
    }
}
