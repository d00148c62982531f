//! Monte Carlo estimation of the random-coloring rainbow fraction.

use antiramsey_core::coloring::EdgeColoring;
use antiramsey_core::graph::Graph;
use antiramsey_core::rainbow::{count_with_patterns, EmbeddingPatterns};
use num_traits::ToPrimitive;
use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha12Rng;

/// Sample statistics of the rainbow fraction under uniformly random
/// colorings.
#[derive(Clone, Debug)]
pub struct McEstimate {
    /// Number of sampled colorings.
    pub samples: u64,
    /// Mean rainbow fraction.
    pub mean: f64,
    /// Standard error of the mean (0 for a single sample).
    pub std_error: f64,
}

/// Samples `samples` seeded random r-colorings of `K_n` (sub-seeds drawn
/// from a ChaCha12 stream over `seed`) and reports the mean rainbow
/// fraction of `h` with its standard error. Deterministic per seed.
pub fn estimate_random_fraction(
    h: &Graph,
    n: usize,
    r: usize,
    seed: u64,
    samples: u64,
) -> antiramsey_core::Result<McEstimate> {
    if samples == 0 {
        return Err(antiramsey_core::Error::Domain(
            "need at least one sample".to_string(),
        ));
    }
    let pats = EmbeddingPatterns::new(h)?;
    let copies = h
        .copies_in_complete(n)?
        .to_f64()
        .unwrap_or(f64::INFINITY);
    let mut master = ChaCha12Rng::seed_from_u64(seed);
    let mut fractions = Vec::with_capacity(samples as usize);
    for _ in 0..samples {
        let sub_seed = master.next_u64();
        let coloring = EdgeColoring::random(n, r, sub_seed)?;
        let count = count_with_patterns(&pats, &coloring)?;
        fractions.push(count as f64 / copies);
    }
    let k = fractions.len() as f64;
    let mean = fractions.iter().sum::<f64>() / k;
    let std_error = if fractions.len() > 1 {
        let var = fractions.iter().map(|f| (f - mean).powi(2)).sum::<f64>() / (k - 1.0);
        (var / k).sqrt()
    } else {
        0.0
    };
    Ok(McEstimate {
        samples,
        mean,
        std_error,
    })
}
