//! Rendering helpers shared by the CLI subcommands: exact rationals as
//! "p/q" strings, decimals at 10 significant digits, and the table rows
//! emitted by `table --csv`.

use antiramsey_core::ExactRational;
use num_traits::ToPrimitive;
use serde::Serialize;

/// Exact rational as a string, `p/q` or just `p` when integral.
pub fn rational_str(q: &ExactRational) -> String {
    q.to_string()
}

/// Rational as `f64` (approximate; the exact string is authoritative).
pub fn rational_f64(q: &ExactRational) -> f64 {
    q.to_f64().unwrap_or(f64::NAN)
}

/// Decimal rendering at 10 significant digits: plain notation for the
/// usual magnitudes (fractions in [0, 1], small bounds), scientific for
/// the extremes where plain digits would round to noise.
pub fn decimal_10sig(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let magnitude = x.abs().log10().floor() as i32;
    if !(-5..=12).contains(&magnitude) {
        return format!("{x:.9e}");
    }
    let decimals = (9 - magnitude).clamp(0, 17) as usize;
    format!("{x:.decimals$}")
}

/// One row of a convergence table.
#[derive(Debug, Serialize)]
pub struct ReportRow {
    /// Host order.
    pub n: usize,
    /// Number of colors.
    pub r: usize,
    /// Graph spec string.
    pub graph: String,
    /// rb value (exact) or best lower bound.
    pub rb: u64,
    /// Whether rb is the exhaustive maximum.
    pub exact: bool,
    /// Fraction at 10 significant digits.
    pub fraction_decimal: String,
    /// Exact fraction as `p/q`.
    pub fraction_exact: String,
    /// Random baseline as `p/q`.
    pub baseline_exact: String,
}

/// CSV header matching [`ReportRow`].
pub const CSV_HEADER: &str = "n,r,graph,rb,exact,fraction_decimal,fraction_exact,baseline_exact";

impl ReportRow {
    /// Renders the row as a CSV line (no embedded commas are possible in
    /// the field values).
    pub fn to_csv(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{}",
            self.n,
            self.r,
            self.graph,
            self.rb,
            self.exact,
            self.fraction_decimal,
            self.fraction_exact,
            self.baseline_exact
        )
    }
}
