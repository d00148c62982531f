//! Exact-rational evaluation of the closed-form bounds, recurrences, and
//! non-anti-commonality criteria.
//!
//! Everything that can be decided in exact arithmetic is: the only
//! floating-point comparisons live in [`dense1_criterion`], which mixes
//! logarithms and pi, and those are guarded by an indeterminacy margin so
//! a borderline comparison errors out instead of silently misclassifying.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::f64::consts::PI;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::Error;
use crate::graph::{big_binomial, big_factorial, Graph, GraphSpec};
use crate::Result;

/// Arbitrary-precision rational; stored reduced with positive denominator.
pub type ExactRational = BigRational;

/// Default cap on `a` for [`complete_graph_criterion`].
pub const DEFAULT_COMPLETE_CAP: u64 = 12;

/// Guarded floating comparisons treat differences below this margin as
/// undecidable.
pub const FLOAT_MARGIN: f64 = 1e-12;

fn ratio(num: BigUint, den: BigUint) -> ExactRational {
    ExactRational::new(BigInt::from(num), BigInt::from(den))
}

fn big_pow(base: u64, exp: u64) -> BigUint {
    BigUint::from(base).pow(exp as u32)
}

// ============================================================================
// Elementary symmetric sums and Maclaurin's inequality
// ============================================================================

/// Elementary symmetric sum of degree `d` over rationals, by the usual
/// one-pass DP.
pub fn elementary_symmetric(xs: &[ExactRational], d: usize) -> ExactRational {
    let mut e: Vec<ExactRational> = vec![ExactRational::zero(); d + 1];
    e[0] = ExactRational::one();
    for x in xs {
        for j in (1..=d.min(xs.len())).rev() {
            let add = &e[j - 1] * x;
            e[j] += add;
        }
    }
    e[d].clone()
}

/// Elementary symmetric sum of degree `d` over non-negative counts.
pub fn elementary_symmetric_counts(xs: &[u64], d: usize) -> BigUint {
    let mut e: Vec<BigUint> = vec![BigUint::zero(); d + 1];
    e[0] = BigUint::one();
    for &x in xs {
        let x = BigUint::from(x);
        for j in (1..=d).rev() {
            let add = &e[j - 1] * &x;
            e[j] += add;
        }
    }
    e[d].clone()
}

/// `binom(n, d) * mean(xs)^d`, an upper bound for the elementary
/// symmetric sum of degree `d` of positive inputs, with equality exactly
/// when all inputs are equal (for `d >= 2`).
pub fn maclaurin_upper(xs: &[ExactRational], d: usize) -> Result<ExactRational> {
    let n = xs.len();
    if n == 0 || d < 1 || d > n {
        return Err(Error::Domain(String::from(
            "maclaurin bound needs 1 <= d <= len(xs) with xs nonempty",
        )));
    }
    if xs.iter().any(|x| !x.is_positive()) {
        return Err(Error::Domain(String::from("maclaurin bound needs positive inputs")));
    }
    let sum: ExactRational = xs.iter().sum();
    let mean = sum / ExactRational::from(BigInt::from(n));
    let binom = ratio(big_binomial(n as u64, d as u64), BigUint::one());
    Ok(binom * mean.pow(d as i32))
}

// ============================================================================
// Random baseline and star bounds
// ============================================================================

/// Rainbow probability of an e-edge graph under a uniformly random
/// r-coloring: `binom(r, e) * e! / r^e`. Zero when `e > r`.
pub fn random_baseline(e: u64, r: u64) -> ExactRational {
    assert!(r >= 1, "need at least one color");
    ratio(big_binomial(r, e) * big_factorial(e), big_pow(r, e))
}

/// Closed-form upper bound `n * ((n-1)/r)^(m-1) * binom(r, m-1)` on the
/// rainbow-star count `rb_r(K_{1,m-1}; n)` for every r-coloring of `K_n`.
pub fn star_upper_bound(n: u64, m: u64, r: u64) -> ExactRational {
    assert!(n >= m && m >= 2 && r >= 1, "need n >= m >= 2 and r >= 1");
    let num = BigUint::from(n) * big_pow(n - 1, m - 1) * big_binomial(r, m - 1);
    ratio(num, big_pow(r, m - 1))
}

// ============================================================================
// Star partitions and the disjoint-stars target
// ============================================================================

/// A multiset partition of m into k parts, each at least 2, describing a
/// disjoint union of stars with those component orders.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StarPartition {
    parts: Vec<u32>,
    m: u64,
    k: u64,
    gamma: BigUint,
    multinomial: BigUint,
    two_vertex_parts: u32,
}

impl StarPartition {
    /// Validates the parts and derives `gamma(P)` (the product of
    /// factorials of the multiplicities of equal part sizes) and the
    /// multinomial `binom(m-k; m_1-1, ..., m_k-1)`.
    pub fn new(parts: &[u32]) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::Domain(String::from("star partition needs at least one part")));
        }
        if parts.iter().any(|&p| p < 2) {
            return Err(Error::Domain(String::from("star partition parts must be at least 2")));
        }
        let mut sorted = parts.to_vec();
        sorted.sort_unstable();
        let m: u64 = sorted.iter().map(|&p| u64::from(p)).sum();
        let k = sorted.len() as u64;

        let mut gamma = BigUint::one();
        let mut run = 1u64;
        for (i, &p) in sorted.iter().enumerate() {
            if i > 0 && sorted[i - 1] == p {
                run += 1;
            } else {
                run = 1;
            }
            gamma *= BigUint::from(run);
        }

        let mut denom = BigUint::one();
        for &p in &sorted {
            denom *= big_factorial(u64::from(p) - 1);
        }
        let leaves = big_factorial(m - k);
        debug_assert!((&leaves % &denom).is_zero());
        let multinomial = leaves / denom;

        let two_vertex_parts = sorted.iter().filter(|&&p| p == 2).count() as u32;
        Ok(StarPartition {
            parts: sorted,
            m,
            k,
            gamma,
            multinomial,
            two_vertex_parts,
        })
    }

    /// Part sizes, ascending.
    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Total vertex count m.
    pub fn m(&self) -> u64 {
        self.m
    }

    /// Number of parts k.
    pub fn k(&self) -> u64 {
        self.k
    }

    /// Edge count of the star union, `m - k`.
    pub fn e(&self) -> u64 {
        self.m - self.k
    }

    /// `gamma(P)`: permutations of equal-order components.
    pub fn gamma(&self) -> &BigUint {
        &self.gamma
    }

    /// `binom(m-k; m_1-1, ..., m_k-1)`.
    pub fn multinomial(&self) -> &BigUint {
        &self.multinomial
    }

    /// The matching `stars:` spec for this partition.
    pub fn graph_spec(&self) -> GraphSpec {
        GraphSpec::Stars(self.parts.clone())
    }

    /// Builds the disjoint-star pattern graph.
    pub fn to_graph(&self) -> Result<Graph> {
        self.graph_spec().build()
    }
}

/// Leading-order target for the maximum rainbow count of the disjoint
/// star union `S_P` in `K_n` with `r` colors:
///
/// `binom(m-k; P-1) * binom(r, m-k) * binom(n, m) * m! /
///  (gamma(P) * 2^j * r^(m-k))`
///
/// where `j` counts the 2-vertex parts. The `2^j` factor makes the
/// normalization match unlabeled copies: a 2-vertex star has an end swap
/// that a center-rooted count misses, and without it the target divided
/// by the copy count would overshoot [`random_baseline`] by `2^j`.
pub fn disjoint_stars_target(p: &StarPartition, r: u64, n: u64) -> Result<ExactRational> {
    if r < 1 {
        return Err(Error::Domain(String::from("need at least one color")));
    }
    if n < p.m() {
        return Err(Error::Domain(String::from("host is smaller than the star union")));
    }
    let e = p.e();
    let num = p.multinomial() * big_binomial(r, e) * big_binomial(n, p.m())
        * big_factorial(p.m());
    let den = p.gamma() * big_pow(2, u64::from(p.two_vertex_parts)) * big_pow(r, e);
    Ok(ratio(num, den))
}

// ============================================================================
// Blow-up recurrence
// ============================================================================

/// Solved leading coefficient of the blow-up recurrence
/// `F(n) >= a F(n/a) + t (n/a)^m`, namely `F(n) >= t n^m / (a^m - a)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlowupRecurrence {
    /// Number of parts in the base coloring.
    pub a: u64,
    /// Rainbow copies with one vertex per part.
    pub t: u64,
    /// Order of the pattern graph.
    pub m: u32,
    /// `t / (a^m - a)`.
    pub coefficient: ExactRational,
}

/// Solves the blow-up recurrence exactly.
pub fn blowup_coefficient(a: u64, t: u64, m: u32) -> BlowupRecurrence {
    assert!(a >= 2 && m >= 2, "need a >= 2 and m >= 2");
    let den = big_pow(a, u64::from(m)) - BigUint::from(a);
    BlowupRecurrence {
        a,
        t,
        m,
        coefficient: ratio(BigUint::from(t), den),
    }
}

// ============================================================================
// Non-anti-commonality criteria
// ============================================================================

/// Verdict and exact certificate of the complete-graph criterion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompleteCriterion {
    /// Whether `lhs > rhs` strictly, certifying that `K_a` is not
    /// `binom(a,2)`-anti-common.
    pub holds: bool,
    /// `a! / (a^a - a)`.
    pub lhs: ExactRational,
    /// `binom(a,2)! / binom(a,2)^binom(a,2)`.
    pub rhs: ExactRational,
}

/// Decides `a!/(a^a - a) > binom(a,2)!/binom(a,2)^binom(a,2)` with exact
/// big-integer arithmetic (no Stirling approximation), using the default
/// cap on `a`.
pub fn complete_graph_criterion(a: u64) -> Result<CompleteCriterion> {
    complete_graph_criterion_with_cap(a, DEFAULT_COMPLETE_CAP)
}

/// Same as [`complete_graph_criterion`] with an explicit cap.
pub fn complete_graph_criterion_with_cap(a: u64, cap: u64) -> Result<CompleteCriterion> {
    if a < 2 {
        return Err(Error::Domain(String::from("complete-graph criterion needs a >= 2")));
    }
    if a > cap {
        return Err(Error::ResourceCap {
            what: "complete-graph criterion order a",
            limit: cap,
        });
    }
    let lhs = ratio(big_factorial(a), big_pow(a, a) - BigUint::from(a));
    let pairs = a * (a - 1) / 2;
    let rhs = ratio(big_factorial(pairs), big_pow(pairs, pairs));
    Ok(CompleteCriterion {
        holds: lhs > rhs,
        lhs,
        rhs,
    })
}

/// Outcome of the density criterion on (m, e, c).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Dense1Verdict {
    /// Whether the hypothesis `2 pi m (1 - c) > 1` holds.
    pub applicable: bool,
    /// Whether all three hypotheses hold, certifying that every graph
    /// with `m` vertices and `e` edges is not `binom(m,2)`-anti-common.
    pub holds: bool,
}

/// Strict `lhs > rhs` with an indeterminacy guard: differences inside
/// [`FLOAT_MARGIN`] are reported as errors, never silently decided.
fn guarded_gt(lhs: f64, rhs: f64) -> Result<bool> {
    if (lhs - rhs).abs() < FLOAT_MARGIN {
        return Err(Error::Indeterminate {
            lhs,
            rhs,
            margin: FLOAT_MARGIN,
        });
    }
    Ok(lhs > rhs)
}

/// Evaluates the density criterion: applicable when `2 pi m (1-c) > 1`;
/// holds when additionally `c + (1-c) ln(1-c) >= 2/(m-1) + 1/(12
/// binom(m,2)^2)` and `e >= c binom(m,2)`.
///
/// The inequality mixes logarithms and pi, so this is the one guarded
/// floating-point decision in the crate; a comparison within
/// [`FLOAT_MARGIN`] of equality errors out as indeterminate.
pub fn dense1_criterion(m: u64, e: u64, c: f64) -> Result<Dense1Verdict> {
    if m < 2 {
        return Err(Error::Domain(String::from("density criterion needs m >= 2")));
    }
    if !(c > 0.0 && c < 1.0) {
        return Err(Error::Domain(String::from("density criterion needs 0 < c < 1")));
    }
    let mf = m as f64;
    let applicable = guarded_gt(2.0 * PI * mf * (1.0 - c), 1.0)?;
    if !applicable {
        return Ok(Dense1Verdict {
            applicable: false,
            holds: false,
        });
    }
    let pairs = (m * (m - 1) / 2) as f64;
    let lhs = c + (1.0 - c) * libm::log(1.0 - c);
    let rhs = 2.0 / (mf - 1.0) + 1.0 / (12.0 * pairs * pairs);
    // ">= with margin" and "> with margin" coincide: ties are errors.
    let log_ok = guarded_gt(lhs, rhs)?;
    let edges_ok = guarded_gt(e as f64, c * pairs)?;
    Ok(Dense1Verdict {
        applicable: true,
        holds: log_ok && edges_ok,
    })
}

/// Integer form of the density corollary: true iff `m >= 6` and
/// `e^2 > m^2 (m - 1)`, i.e. `e > m sqrt(m-1)` without the square root.
pub fn dense2_criterion(m: u64, e: u64) -> bool {
    m >= 6 && u128::from(e) * u128::from(e) > u128::from(m) * u128::from(m) * u128::from(m - 1)
}

// ============================================================================
// Recoloring chain and monotonicity
// ============================================================================

/// The recoloring factor `(r+e)(r+1-e) / (r(r+1))`, clamped to zero when
/// `r + 1 <= e` (the bound is vacuous there).
pub fn recoloring_factor(r: u64, e: u64) -> ExactRational {
    assert!(r >= 1, "need at least one color");
    if e > r {
        return ExactRational::zero();
    }
    ratio(
        BigUint::from(r + e) * BigUint::from(r + 1 - e),
        BigUint::from(r) * BigUint::from(r + 1),
    )
}

/// Lower bound on `rb_r(H; n)` propagated from `rb_{r+1}(H; n)`:
/// `(r+e)(r+1-e)/(r(r+1)) * rb_next`.
pub fn recoloring_lower_bound(rb_next: u64, r: u64, e: u64) -> ExactRational {
    recoloring_factor(r, e) * ExactRational::from(BigInt::from(rb_next))
}

/// Checks `(n - m) rb(n) <= n rb(n-1)` on consecutive exact values.
///
/// `values` must be sorted by n with consecutive entries; a gap is an
/// error, not a false verdict.
pub fn monotonicity_check(h: &Graph, values: &[(usize, u64)]) -> Result<bool> {
    let m = h.m() as u128;
    for w in values.windows(2) {
        let (n_prev, rb_prev) = w[0];
        let (n, rb) = w[1];
        if n != n_prev + 1 {
            return Err(Error::NonConsecutiveN {
                prev: n_prev,
                next: n,
            });
        }
        let n = n as u128;
        if (n - m) * u128::from(rb) > n * u128::from(rb_prev) {
            return Ok(false);
        }
    }
    Ok(true)
}

// ============================================================================
// Tests
// ============================================================================
