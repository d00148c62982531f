//! Exact and heuristic maximization of rainbow-copy counts over
//! r-edge-colorings of `K_n`.
//!
//! Exhaustive enumeration assigns edge colors in lexicographic pair
//! order; with color-symmetry pruning each branch may only introduce a
//! color one past the largest used so far, which fixes the first edge to
//! color 0 and keeps one representative per color-relabeling orbit. The
//! local search runs restarts of single-edge recoloring moves with
//! incremental count deltas, deterministic for a given seed.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha12Rng;

use crate::bounds::ExactRational;
use crate::coloring::{pair_index, EdgeColoring};
use crate::error::Error;
use crate::graph::{big_factorial, Graph};
use crate::rainbow::{count_in_colors, for_each_combination, local_pair_slot, EmbeddingPatterns};
use crate::Result;

/// Default leaf-evaluation budget for exhaustive search.
pub const DEFAULT_BUDGET: u64 = 100_000_000;

// ============================================================================
// Results and parameters
// ============================================================================

/// Outcome of an exhaustive or heuristic search.
#[derive(Clone, Debug)]
pub struct SearchResult {
    /// Best rainbow count found.
    pub value: u64,
    /// True when `value` is the exhaustive maximum, false for a lower bound.
    pub exact: bool,
    /// A coloring achieving `value`.
    pub witness: EdgeColoring,
    /// `value / copies_in_complete(H, n)`, exact.
    pub fraction: ExactRational,
    /// Number of colorings examined.
    pub evaluations: u64,
}

/// Move-acceptance rule for the local search.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum AcceptanceRule {
    /// Apply the first improving move in a fixed scan order of
    /// (edge, color); stop at a local optimum.
    Greedy,
    /// Simulated annealing with geometric cooling; accepts equal-value
    /// moves and worsening moves with probability `exp(delta / T)`.
    Annealing {
        /// Starting temperature (>= 0).
        initial_temperature: f64,
        /// Geometric cooling factor in (0, 1), applied per iteration.
        cooling: f64,
    },
}

/// Seeded parameters for [`local_search`].
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SearchParams {
    /// Master seed; restarts derive sub-seeds from a ChaCha12 stream
    /// seeded with it.
    pub seed: u64,
    /// Number of independent restarts.
    pub restarts: u32,
    /// Iterations per restart (accepted-or-rejected proposals for
    /// annealing, applied moves for greedy).
    pub iterations: u64,
    /// Acceptance rule.
    pub acceptance: AcceptanceRule,
}

impl Default for SearchParams {
    /// The documented defaults: seed 1, 8 restarts, 30000 iterations of
    /// annealing at initial temperature 1.5 with cooling 0.9995.
    fn default() -> Self {
        SearchParams {
            seed: 1,
            restarts: 8,
            iterations: 30_000,
            acceptance: AcceptanceRule::Annealing {
                initial_temperature: 1.5,
                cooling: 0.9995,
            },
        }
    }
}

fn validate_params(params: &SearchParams) -> Result<()> {
    if params.restarts == 0 {
        return Err(Error::Domain(String::from("need at least one restart")));
    }
    if let AcceptanceRule::Annealing {
        initial_temperature,
        cooling,
    } = params.acceptance
    {
        if initial_temperature.is_nan() || initial_temperature < 0.0 {
            return Err(Error::Domain(String::from("initial temperature must be >= 0")));
        }
        if !(cooling > 0.0 && cooling < 1.0) {
            return Err(Error::Domain(String::from("cooling factor must be in (0, 1)")));
        }
    }
    Ok(())
}

/// Options for [`exact_rb_with`].
#[derive(Clone, Copy, Debug)]
pub struct ExactOptions {
    /// Leaf-evaluation budget; enumeration refuses to start when the
    /// estimate `r^E / r!` (or `r^E` unpruned) exceeds it.
    pub budget: u64,
    /// Restrict enumeration to one representative per color-relabeling
    /// orbit. Sound because rainbow counts are invariant under color
    /// permutations; the flag exists so tests can compare both modes.
    pub prune_color_symmetry: bool,
}

impl Default for ExactOptions {
    fn default() -> Self {
        ExactOptions {
            budget: DEFAULT_BUDGET,
            prune_color_symmetry: true,
        }
    }
}

// ============================================================================
// Exhaustive search
// ============================================================================

/// Exact `rb_r(H; n)` by exhaustive enumeration with default options.
pub fn exact_rb(h: &Graph, n: usize, r: usize) -> Result<SearchResult> {
    exact_rb_with(h, n, r, &ExactOptions::default())
}

/// Exact `rb_r(H; n)` by exhaustive enumeration.
///
/// The witness is the first maximal coloring in enumeration order, which
/// is pinned (lexicographic edge order, colors tried ascending), so
/// witnesses are reproducible.
pub fn exact_rb_with(h: &Graph, n: usize, r: usize, opts: &ExactOptions) -> Result<SearchResult> {
    if n < h.m() {
        return Err(Error::Domain(format!(
            "host K_{n} is smaller than the pattern on {} vertices",
            h.m()
        )));
    }
    if n < 2 || r < 1 {
        return Err(Error::Domain(String::from("need n >= 2 and r >= 1")));
    }
    let edge_count = n * (n - 1) / 2;
    check_budget(r, edge_count, opts)?;

    let pats = EmbeddingPatterns::new(h)?;
    let copies = h.copies_in_complete(n)?;

    if r == 1 {
        // Only the constant coloring exists.
        let witness = EdgeColoring::constant(n, 1, 0)?;
        let value = count_in_colors(&pats, n, 1, witness.colors())?;
        return Ok(finish(value, true, witness, &copies, 1));
    }

    let mut dfs = Dfs {
        pats: &pats,
        n,
        r: r as u32,
        prune: opts.prune_color_symmetry,
        budget: opts.budget,
        colors: alloc::vec![0u16; edge_count],
        best: 0,
        best_colors: None,
        evaluations: 0,
    };
    dfs.run(0, 0)?;

    let witness = EdgeColoring::new(
        n,
        r,
        dfs.best_colors.unwrap_or_else(|| alloc::vec![0u16; edge_count]),
    )?;
    Ok(finish(dfs.best, true, witness, &copies, dfs.evaluations))
}

fn check_budget(r: usize, edge_count: usize, opts: &ExactOptions) -> Result<()> {
    let total = BigUint::from(r as u64).pow(edge_count as u32);
    let estimate = if opts.prune_color_symmetry {
        let rfact = big_factorial(r as u64);
        (&total + &rfact - BigUint::from(1u32)) / rfact
    } else {
        total
    };
    if estimate > BigUint::from(opts.budget) {
        return Err(Error::BudgetExceeded {
            estimated_leaves: estimate.to_string(),
            budget: opts.budget,
        });
    }
    Ok(())
}

fn finish(
    value: u64,
    exact: bool,
    witness: EdgeColoring,
    copies: &BigUint,
    evaluations: u64,
) -> SearchResult {
    SearchResult {
        value,
        exact,
        witness,
        fraction: ExactRational::new(BigInt::from(value), BigInt::from(copies.clone())),
        evaluations,
    }
}

struct Dfs<'a> {
    pats: &'a EmbeddingPatterns,
    n: usize,
    r: u32,
    prune: bool,
    budget: u64,
    colors: Vec<u16>,
    best: u64,
    best_colors: Option<Vec<u16>>,
    evaluations: u64,
}

impl Dfs<'_> {
    fn run(&mut self, pos: usize, max_used: u32) -> Result<()> {
        if pos == self.colors.len() {
            // The up-front estimate `r^E / r!` undercounts the canonical
            // leaves when r is much larger than E, so enforce the budget
            // live as well.
            if self.evaluations >= self.budget {
                return Err(Error::BudgetExceeded {
                    estimated_leaves: String::from("more than the budget"),
                    budget: self.budget,
                });
            }
            let value = count_in_colors(self.pats, self.n, self.r as usize, &self.colors)?;
            self.evaluations += 1;
            if value > self.best || self.best_colors.is_none() {
                self.best = value;
                self.best_colors = Some(self.colors.clone());
            }
            return Ok(());
        }
        let limit = if self.prune {
            self.r.min(max_used + 1)
        } else {
            self.r
        };
        for color in 0..limit {
            self.colors[pos] = color as u16;
            self.run(pos + 1, max_used.max(color + 1))?;
        }
        Ok(())
    }
}

// ============================================================================
// Local search
// ============================================================================

/// Counts rainbow copies that use the edge `{u, v}`, so a single-edge
/// recolor only has to re-examine these.
fn count_through_edge(
    pats: &EmbeddingPatterns,
    n: usize,
    r: usize,
    colors: &[u16],
    u: usize,
    v: usize,
    scratch: &mut EdgeScratch,
) -> u64 {
    let m = pats.m();
    scratch.others.clear();
    scratch.others.extend((0..n).filter(|&w| w != u && w != v));
    let use_mask = r <= 128;
    let mut count = 0u64;
    let others = &scratch.others;
    let verts = &mut scratch.verts;
    let local = &mut scratch.local;
    for_each_combination(others.len(), m - 2, |sel| {
        verts.clear();
        verts.extend(sel.iter().map(|&i| others[i]));
        verts.push(u);
        verts.push(v);
        verts.sort_unstable();
        let iu = verts.iter().position(|&x| x == u.min(v)).unwrap();
        let iv = verts.iter().position(|&x| x == u.max(v)).unwrap();
        let target = local_pair_slot(m, iu, iv) as u32;
        let mut slot = 0;
        for i in 0..m {
            for j in (i + 1)..m {
                local[slot] = colors[pair_index(n, verts[i], verts[j])];
                slot += 1;
            }
        }
        count += pats.count_distinct_through(local, target, use_mask);
    });
    count
}

struct EdgeScratch {
    others: Vec<usize>,
    verts: Vec<usize>,
    local: [u16; crate::rainbow::MAX_LOCAL_PAIRS],
}

/// Stochastic lower bound on `rb_r(H; n)` via restarts of single-edge
/// recoloring moves.
///
/// Restart 0 starts from `warm` when given; every other restart starts
/// from a fresh seeded random coloring. Deterministic given
/// `(h, n, r, warm, params)`. The merged result takes the maximum value,
/// breaking ties toward the lexicographically smallest witness color
/// array.
pub fn local_search(
    h: &Graph,
    n: usize,
    r: usize,
    warm: Option<&EdgeColoring>,
    params: &SearchParams,
) -> Result<SearchResult> {
    if n < h.m() {
        return Err(Error::Domain(format!(
            "host K_{n} is smaller than the pattern on {} vertices",
            h.m()
        )));
    }
    validate_params(params)?;
    if let Some(w) = warm {
        if w.n() != n || w.r() != r {
            return Err(Error::Domain(format!(
                "warm start is a {}-coloring of K_{}, expected {r} colors on K_{n}",
                w.r(),
                w.n()
            )));
        }
    }

    let pats = EmbeddingPatterns::new(h)?;
    let copies = h.copies_in_complete(n)?;
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
        .collect();
    let mut scratch = EdgeScratch {
        others: Vec::with_capacity(n),
        verts: Vec::with_capacity(h.m()),
        local: [0u16; 120],
    };

    let mut master = ChaCha12Rng::seed_from_u64(params.seed);
    let mut best: Option<(u64, Vec<u16>)> = None;
    let mut evaluations = 0u64;

    for restart in 0..params.restarts {
        let start_seed = master.next_u64();
        let move_seed = master.next_u64();
        let mut current = match (restart, warm) {
            (0, Some(w)) => w.clone(),
            _ => EdgeColoring::random(n, r, start_seed)?,
        };
        let mut value = count_in_colors(&pats, n, r, current.colors())?;
        evaluations += 1;

        let restart_best = match params.acceptance {
            AcceptanceRule::Greedy => greedy_descent(
                &pats,
                &pairs,
                &mut current,
                value,
                params.iterations,
                &mut evaluations,
                &mut scratch,
            ),
            AcceptanceRule::Annealing {
                initial_temperature,
                cooling,
            } => anneal(
                &pats,
                &pairs,
                &mut current,
                &mut value,
                params.iterations,
                initial_temperature,
                cooling,
                move_seed,
                &mut evaluations,
                &mut scratch,
            ),
        };

        best = Some(match best {
            None => restart_best,
            Some(prev) => merge_results(prev, restart_best),
        });
    }

    let (value, colors) = best.expect("at least one restart");
    let witness = EdgeColoring::new(n, r, colors)?;
    debug_assert_eq!(
        count_in_colors(&pats, n, r, witness.colors()).ok(),
        Some(value)
    );
    Ok(finish(value, false, witness, &copies, evaluations))
}

fn merge_results(a: (u64, Vec<u16>), b: (u64, Vec<u16>)) -> (u64, Vec<u16>) {
    if b.0 > a.0 || (b.0 == a.0 && b.1 < a.1) {
        b
    } else {
        a
    }
}

/// First-improvement hill climbing in a fixed (edge, color) scan order.
fn greedy_descent(
    pats: &EmbeddingPatterns,
    pairs: &[(usize, usize)],
    current: &mut EdgeColoring,
    mut value: u64,
    max_moves: u64,
    evaluations: &mut u64,
    scratch: &mut EdgeScratch,
) -> (u64, Vec<u16>) {
    let n = current.n();
    let r = current.r();
    if r == 1 || pats.e() == 0 {
        // No move can change the count.
        return (value, current.colors().to_vec());
    }
    let mut moves = 0u64;
    'moves: while moves < max_moves {
        for (idx, &(u, v)) in pairs.iter().enumerate() {
            let old = current.color_at(idx);
            let before = count_through_edge(pats, n, r, current.colors(), u, v, scratch);
            for color in 0..r as u16 {
                if color == old {
                    continue;
                }
                current.set_color_at(idx, color);
                *evaluations += 1;
                let after = count_through_edge(pats, n, r, current.colors(), u, v, scratch);
                if after > before {
                    value = value + after - before;
                    moves += 1;
                    continue 'moves;
                }
                current.set_color_at(idx, old);
            }
        }
        break; // full scan found no improving move: local optimum
    }
    (value, current.colors().to_vec())
}

/// Simulated annealing with geometric cooling.
#[allow(clippy::too_many_arguments)]
fn anneal(
    pats: &EmbeddingPatterns,
    pairs: &[(usize, usize)],
    current: &mut EdgeColoring,
    value: &mut u64,
    iterations: u64,
    initial_temperature: f64,
    cooling: f64,
    move_seed: u64,
    evaluations: &mut u64,
    scratch: &mut EdgeScratch,
) -> (u64, Vec<u16>) {
    let n = current.n();
    let r = current.r();
    if r == 1 || pats.e() == 0 {
        return (*value, current.colors().to_vec());
    }
    let mut rng = ChaCha12Rng::seed_from_u64(move_seed);
    let mut temperature = initial_temperature;
    let mut best = (*value, current.colors().to_vec());
    for _ in 0..iterations {
        let idx = rng.random_range(0..pairs.len());
        let (u, v) = pairs[idx];
        let old = current.color_at(idx);
        let new = ((u32::from(old) + rng.random_range(1..r as u32)) % r as u32) as u16;

        let before = count_through_edge(pats, n, r, current.colors(), u, v, scratch);
        current.set_color_at(idx, new);
        let after = count_through_edge(pats, n, r, current.colors(), u, v, scratch);
        *evaluations += 1;

        let accept = if after >= before {
            true
        } else {
            let delta = -((before - after) as f64);
            rng.random::<f64>() < libm::exp(delta / temperature)
        };
        if accept {
            *value = *value + after - before;
            if *value > best.0 {
                best = (*value, current.colors().to_vec());
            }
        } else {
            current.set_color_at(idx, old);
        }
        temperature *= cooling;
    }
    best
}

// ============================================================================
// Convergence tables
// ============================================================================

/// How a table row was produced.
#[derive(Clone, Debug)]
pub enum TableMode {
    /// Exhaustive values via [`exact_rb_with`].
    Exact(ExactOptions),
    /// Heuristic lower bounds via [`local_search`].
    Heuristic(SearchParams),
}

/// Verdict of the monotonicity annotation on a table.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Monotonicity {
    /// All rows exact and `(n - m) rb(n) <= n rb(n-1)` held throughout.
    Verified,
    /// All rows exact and some pair violated the inequality (a counting
    /// bug if it ever happens).
    Violated,
    /// Some row is a heuristic lower bound; the check does not apply.
    Skipped,
}

/// A normalized-fraction convergence table over a range of n.
#[derive(Clone, Debug)]
pub struct ConvergenceTable {
    /// `(n, result)` rows in ascending n.
    pub rows: Vec<(usize, SearchResult)>,
    /// Monotonicity annotation.
    pub monotonicity: Monotonicity,
}

/// Computes rb values for each `n` in `n_min..=n_max` and annotates the
/// monotonicity of the exact sequence.
pub fn convergence_table(
    h: &Graph,
    r: usize,
    n_min: usize,
    n_max: usize,
    mode: &TableMode,
) -> Result<ConvergenceTable> {
    if n_min > n_max {
        return Err(Error::Domain(format!("empty range: n_min={n_min} > n_max={n_max}")));
    }
    let mut rows = Vec::with_capacity(n_max - n_min + 1);
    for n in n_min..=n_max {
        let result = match mode {
            TableMode::Exact(opts) => exact_rb_with(h, n, r, opts)?,
            TableMode::Heuristic(params) => local_search(h, n, r, None, params)?,
        };
        rows.push((n, result));
    }
    let monotonicity = if rows.iter().all(|(_, res)| res.exact) {
        let values: Vec<(usize, u64)> = rows.iter().map(|(n, res)| (*n, res.value)).collect();
        if crate::bounds::monotonicity_check(h, &values)? {
            Monotonicity::Verified
        } else {
            Monotonicity::Violated
        }
    } else {
        Monotonicity::Skipped
    };
    Ok(ConvergenceTable { rows, monotonicity })
}

// ============================================================================
// Tests
// ============================================================================

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::build_graph;
    use crate::rainbow::count_rainbow_copies;

    #[test]
    fn exact_rb_frozen_values() {
        let p2 = build_graph("P2").unwrap();
        assert_eq!(exact_rb(&p2, 3, 2).unwrap().value, 2);
        let k3 = build_graph("K3").unwrap();
        assert_eq!(exact_rb(&k3, 3, 3).unwrap().value, 1);
        assert_eq!(exact_rb(&k3, 4, 3).unwrap().value, 4);
        assert_eq!(exact_rb(&k3, 4, 2).unwrap().value, 0);
    }

    #[test]
    fn exact_witness_recounts_to_value() {
        let k3 = build_graph("K3").unwrap();
        let res = exact_rb(&k3, 4, 3).unwrap();
        assert!(res.exact);
        assert_eq!(count_rainbow_copies(&k3, &res.witness).unwrap(), res.value);
        assert_eq!(res.witness.colors()[0], 0, "first edge is normalized to color 0");
    }

    #[test]
    fn pruning_is_sound_on_small_instances() {
        let unpruned = ExactOptions {
            prune_color_symmetry: false,
            ..ExactOptions::default()
        };
        for (spec, n, r) in [("P2", 3, 2), ("K3", 3, 3), ("K3", 4, 2), ("S3", 4, 2)] {
            let h = build_graph(spec).unwrap();
            let pruned = exact_rb(&h, n, r).unwrap();
            let full = exact_rb_with(&h, n, r, &unpruned).unwrap();
            assert_eq!(pruned.value, full.value, "{spec} n={n} r={r}");
            assert!(pruned.evaluations <= full.evaluations);
        }
    }

    #[test]
    fn budget_error_is_loud() {
        let k3 = build_graph("K3").unwrap();
        let err = exact_rb(&k3, 8, 3).unwrap_err();
        assert!(matches!(err, Error::BudgetExceeded { .. }), "{err:?}");
    }

    #[test]
    fn single_color_short_circuits() {
        let p2 = build_graph("P2").unwrap();
        let res = exact_rb(&p2, 20, 1).unwrap();
        assert_eq!(res.value, 0);
        assert_eq!(res.evaluations, 1);
    }

    #[test]
    fn zero_iterations_returns_warm_start() {
        let k3 = build_graph("K3").unwrap();
        let exact = exact_rb(&k3, 4, 3).unwrap();
        let params = SearchParams {
            iterations: 0,
            restarts: 1,
            ..SearchParams::default()
        };
        let res = local_search(&k3, 4, 3, Some(&exact.witness), &params).unwrap();
        assert_eq!(res.value, exact.value);
        assert_eq!(res.witness, exact.witness);
        assert!(!res.exact);
    }

    #[test]
    fn local_search_is_deterministic() {
        let k3 = build_graph("K3").unwrap();
        let params = SearchParams {
            iterations: 500,
            restarts: 3,
            ..SearchParams::default()
        };
        let a = local_search(&k3, 8, 3, None, &params).unwrap();
        let b = local_search(&k3, 8, 3, None, &params).unwrap();
        assert_eq!(a.value, b.value);
        assert_eq!(a.witness, b.witness);
        assert_eq!(a.evaluations, b.evaluations);
    }

    #[test]
    fn local_search_never_beats_exact() {
        let k3 = build_graph("K3").unwrap();
        let exact = exact_rb(&k3, 5, 3).unwrap();
        for seed in 0..5 {
            let params = SearchParams {
                seed,
                restarts: 2,
                iterations: 2_000,
                ..SearchParams::default()
            };
            let heur = local_search(&k3, 5, 3, None, &params).unwrap();
            assert!(heur.value <= exact.value);
            assert_eq!(
                count_rainbow_copies(&k3, &heur.witness).unwrap(),
                heur.value
            );
        }
    }

    #[test]
    fn greedy_matches_its_own_recount() {
        let h = build_graph("K4-e").unwrap();
        let params = SearchParams {
            seed: 3,
            restarts: 2,
            iterations: 200,
            acceptance: AcceptanceRule::Greedy,
        };
        let res = local_search(&h, 7, 5, None, &params).unwrap();
        assert_eq!(count_rainbow_copies(&h, &res.witness).unwrap(), res.value);
    }

    #[test]
    fn params_are_validated() {
        let k3 = build_graph("K3").unwrap();
        let bad = SearchParams {
            restarts: 0,
            ..SearchParams::default()
        };
        assert!(local_search(&k3, 4, 3, None, &bad).is_err());
        let bad = SearchParams {
            acceptance: AcceptanceRule::Annealing {
                initial_temperature: 1.0,
                cooling: 1.5,
            },
            ..SearchParams::default()
        };
        assert!(local_search(&k3, 4, 3, None, &bad).is_err());
    }

    #[test]
    fn table_exact_mode_is_monotone() {
        let k3 = build_graph("K3").unwrap();
        let table = convergence_table(
            &k3,
            3,
            3,
            5,
            &TableMode::Exact(ExactOptions::default()),
        )
        .unwrap();
        assert_eq!(table.rows.len(), 3);
        assert_eq!(table.monotonicity, Monotonicity::Verified);
        for w in table.rows.windows(2) {
            assert!(w[1].1.fraction <= w[0].1.fraction, "fractions must not increase");
        }
    }

    #[test]
    fn table_heuristic_mode_skips_monotonicity() {
        let k3 = build_graph("K3").unwrap();
        let params = SearchParams {
            iterations: 100,
            restarts: 1,
            ..SearchParams::default()
        };
        let table = convergence_table(&k3, 3, 5, 6, &TableMode::Heuristic(params)).unwrap();
        assert_eq!(table.monotonicity, Monotonicity::Skipped);
    }
}
