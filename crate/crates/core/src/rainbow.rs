//! Exact rainbow-copy counting in a colored `K_n`.
//!
//! A copy of H on a fixed m-vertex subset is one of the
//! `m!/|Aut(H)|` distinct edge images of H under vertex relabeling.
//! Those images are precomputed once per pattern graph as lists of local
//! pair slots; counting then streams m-subsets of the host and tests the
//! color distinctness of each image.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::coloring::{pair_index, EdgeColoring};
use crate::error::Error;
use crate::graph::{Graph, MAX_VERTICES};
use crate::Result;

/// Default cap on the number of distinct edge images kept per pattern.
pub const DEFAULT_PATTERN_CAP: u64 = 1 << 20;

pub(crate) const MAX_LOCAL_PAIRS: usize = MAX_VERTICES * (MAX_VERTICES - 1) / 2;

/// Slot of the local pair `(i, j)`, `i < j`, inside an m-vertex subset.
#[inline]
pub(crate) fn local_pair_slot(m: usize, i: usize, j: usize) -> usize {
    pair_index(m, i, j)
}

// ============================================================================
// Embedding patterns
// ============================================================================

/// The distinct edge images of a pattern graph under vertex relabeling,
/// precomputed once so the per-subset work in the counting loop is just
/// color-distinctness tests.
#[derive(Clone, Debug)]
pub struct EmbeddingPatterns {
    m: usize,
    e: usize,
    /// Flat slot lists, `e` local pair slots per image, images sorted by
    /// their bit mask for determinism.
    slots: Vec<u8>,
    /// Pair-membership mask per image, parallel to `slots` chunks.
    masks: Vec<u128>,
}

impl EmbeddingPatterns {
    /// Precomputes the images for `h` with the default cap.
    pub fn new(h: &Graph) -> Result<Self> {
        Self::with_cap(h, DEFAULT_PATTERN_CAP)
    }

    /// Precomputes the images for `h`, failing loudly if the orbit of the
    /// edge set under vertex relabeling exceeds `cap`.
    pub fn with_cap(h: &Graph, cap: u64) -> Result<Self> {
        let m = h.m();
        let e = h.edge_count();
        let mut base: u128 = 0;
        for &(u, v) in h.edges() {
            base |= 1 << local_pair_slot(m, u as usize, v as usize);
        }

        // Pair remap tables for the adjacent transpositions (t, t+1),
        // which generate all vertex relabelings.
        let pairs: Vec<(usize, usize)> = (0..m)
            .flat_map(|i| ((i + 1)..m).map(move |j| (i, j)))
            .collect();
        let mut tables: Vec<Vec<u8>> = Vec::with_capacity(m.saturating_sub(1));
        for t in 0..m.saturating_sub(1) {
            let swap = |x: usize| {
                if x == t {
                    t + 1
                } else if x == t + 1 {
                    t
                } else {
                    x
                }
            };
            let table = pairs
                .iter()
                .map(|&(i, j)| {
                    let (a, b) = (swap(i), swap(j));
                    let (a, b) = if a < b { (a, b) } else { (b, a) };
                    local_pair_slot(m, a, b) as u8
                })
                .collect();
            tables.push(table);
        }

        // Orbit search from the base edge set.
        let mut seen: BTreeSet<u128> = BTreeSet::new();
        seen.insert(base);
        let mut stack = vec![base];
        while let Some(mask) = stack.pop() {
            for table in &tables {
                let mut image: u128 = 0;
                let mut bits = mask;
                while bits != 0 {
                    let slot = bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    image |= 1 << table[slot];
                }
                if seen.insert(image) {
                    if seen.len() as u64 > cap {
                        return Err(Error::ResourceCap {
                            what: "embedding pattern count",
                            limit: cap,
                        });
                    }
                    stack.push(image);
                }
            }
        }

        let mut slots = Vec::with_capacity(seen.len() * e);
        let mut masks = Vec::with_capacity(seen.len());
        for &mask in &seen {
            masks.push(mask);
            let mut bits = mask;
            while bits != 0 {
                slots.push(bits.trailing_zeros() as u8);
                bits &= bits - 1;
            }
        }
        Ok(EmbeddingPatterns { m, e, slots, masks })
    }

    /// Pattern order m.
    pub fn m(&self) -> usize {
        self.m
    }

    /// Pattern size e.
    pub fn e(&self) -> usize {
        self.e
    }

    /// Number of distinct images, `m!/|Aut(H)|`.
    pub fn len(&self) -> usize {
        self.masks.len()
    }

    /// True when the pattern has no images (never happens for valid graphs).
    pub fn is_empty(&self) -> bool {
        self.masks.is_empty()
    }

    fn images(&self) -> impl Iterator<Item = &[u8]> {
        if self.e == 0 {
            // chunks_exact(0) is not allowed; a zero-edge pattern has one
            // empty image per mask.
            Either::A(self.masks.iter().map(|_| &[][..]))
        } else {
            Either::B(self.slots.chunks_exact(self.e))
        }
    }

    /// Counts images that use the given local pair slot and whose colors
    /// (read from `local`) are pairwise distinct. Backs the incremental
    /// move deltas in the local search.
    pub(crate) fn count_distinct_through(
        &self,
        local: &[u16; MAX_LOCAL_PAIRS],
        slot: u32,
        use_mask: bool,
    ) -> u64 {
        let mut hits = 0u64;
        for (image, &mask) in self.images().zip(self.masks.iter()) {
            if mask & (1u128 << slot) == 0 {
                continue;
            }
            hits += u64::from(all_distinct(local, image, use_mask));
        }
        hits
    }
}

enum Either<A, B> {
    A(A),
    B(B),
}

impl<'a, A, B> Iterator for Either<A, B>
where
    A: Iterator<Item = &'a [u8]>,
    B: Iterator<Item = &'a [u8]>,
{
    type Item = &'a [u8];
    fn next(&mut self) -> Option<Self::Item> {
        match self {
            Either::A(it) => it.next(),
            Either::B(it) => it.next(),
        }
    }
}

// ============================================================================
// Counting
// ============================================================================

/// Visits every m-subset of `0..n` in lexicographic order.
pub(crate) fn for_each_combination<F: FnMut(&[usize])>(n: usize, m: usize, mut f: F) {
    debug_assert!(m <= n);
    if m == 0 {
        f(&[]);
        return;
    }
    let mut idx: Vec<usize> = (0..m).collect();
    loop {
        f(&idx);
        let mut i = m;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if idx[i] != i + n - m {
                break;
            }
            if i == 0 {
                return;
            }
        }
        idx[i] += 1;
        for j in (i + 1)..m {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

#[inline]
fn all_distinct(colors: &[u16; MAX_LOCAL_PAIRS], image: &[u8], use_mask: bool) -> bool {
    if use_mask {
        let mut seen: u128 = 0;
        for &slot in image {
            let bit = 1u128 << colors[slot as usize];
            if seen & bit != 0 {
                return false;
            }
            seen |= bit;
        }
        true
    } else {
        for (i, &a) in image.iter().enumerate() {
            let ca = colors[a as usize];
            for &b in &image[i + 1..] {
                if ca == colors[b as usize] {
                    return false;
                }
            }
        }
        true
    }
}

/// Counts the rainbow copies of the pattern in a colored `K_n` given as a
/// raw color array in pair order. Shared by the public counters and the
/// exhaustive-search leaf evaluation.
pub(crate) fn count_in_colors(
    pats: &EmbeddingPatterns,
    n: usize,
    r: usize,
    colors: &[u16],
) -> Result<u64> {
    debug_assert_eq!(colors.len(), n * (n - 1) / 2);
    if n < pats.m {
        return Err(Error::Domain(format!(
            "host K_{n} is smaller than the pattern on {} vertices",
            pats.m
        )));
    }
    if pats.e > r {
        // Pigeonhole: not enough colors for a rainbow copy.
        return Ok(0);
    }
    let m = pats.m;
    let use_mask = r <= 128;
    let mut local = [0u16; MAX_LOCAL_PAIRS];
    let mut count: u64 = 0;
    let mut overflow = false;
    for_each_combination(n, m, |verts| {
        let mut slot = 0;
        for i in 0..m {
            for j in (i + 1)..m {
                local[slot] = colors[pair_index(n, verts[i], verts[j])];
                slot += 1;
            }
        }
        let mut hits: u64 = 0;
        for image in pats.images() {
            if all_distinct(&local, image, use_mask) {
                hits += 1;
            }
        }
        match count.checked_add(hits) {
            Some(c) => count = c,
            None => overflow = true,
        }
    });
    if overflow {
        return Err(Error::CountOverflow);
    }
    Ok(count)
}

/// Counts the rainbow copies of `h` in the colored host, with patterns
/// precomputed by the caller.
pub fn count_with_patterns(pats: &EmbeddingPatterns, c: &EdgeColoring) -> Result<u64> {
    count_in_colors(pats, c.n(), c.r(), c.colors())
}

/// Counts the distinct copies of `h` whose edges receive pairwise
/// distinct colors under `c`.
pub fn count_rainbow_copies(h: &Graph, c: &EdgeColoring) -> Result<u64> {
    let pats = EmbeddingPatterns::new(h)?;
    count_with_patterns(&pats, c)
}

/// The rainbow count divided by the number of copies of `h` in `K_n`,
/// as an exact rational.
pub fn rainbow_fraction(h: &Graph, c: &EdgeColoring) -> Result<BigRational> {
    let count = count_rainbow_copies(h, c)?;
    let copies = h.copies_in_complete(c.n())?;
    Ok(BigRational::new(BigInt::from(count), BigInt::from(copies)))
}

// ============================================================================
// Color-degree profiles
// ============================================================================

/// Per-color tallies of the edges leaving a center set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColorDegreeProfile {
    /// The center set C.
    pub centers: Vec<usize>,
    /// `q[i]` is the number of color-i edges with exactly one endpoint in
    /// C; edges inside C are excluded.
    pub q: Vec<u64>,
}

/// Tallies, per color, the edges incident to the center set `C`,
/// excluding edges between two centers.
///
/// For a single center the elementary symmetric sum of degree `m - 1`
/// over `q` is exactly the number of rainbow stars `K_{1,m-1}` centered
/// there.
pub fn color_degree_profile(c: &EdgeColoring, centers: &[usize]) -> Result<ColorDegreeProfile> {
    if centers.is_empty() {
        return Err(Error::Domain(alloc::string::String::from("center set must be nonempty")));
    }
    let n = c.n();
    let mut in_c = vec![false; n];
    for &v in centers {
        if v >= n {
            return Err(Error::InvalidVertex { vertex: v, n });
        }
        if in_c[v] {
            return Err(Error::InvalidVertex { vertex: v, n });
        }
        in_c[v] = true;
    }
    let mut q = vec![0u64; c.r()];
    for u in 0..n {
        for v in (u + 1)..n {
            if in_c[u] != in_c[v] {
                q[c.color(u, v) as usize] += 1;
            }
        }
    }
    Ok(ColorDegreeProfile {
        centers: centers.to_vec(),
        q,
    })
}

// ============================================================================
// Tests
// ============================================================================
