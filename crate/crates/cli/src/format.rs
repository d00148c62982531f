//! JSON file formats.
//!
//! Coloring files: `{"n": int, "r": int, "colors": [[u, v, c], ...]}`
//! with `u < v`, all `n(n-1)/2` pairs present exactly once, pairs sorted
//! lexicographically, and `c` in `[0, r)`.
//!
//! Graph files: `{"m": int, "edges": [[u, v], ...]}` with `u < v` in
//! ascending lexicographic order.

use std::fmt;
use std::path::Path;

use antiramsey_core::coloring::{pair_index, EdgeColoring};
use antiramsey_core::graph::Graph;
use serde::{Deserialize, Serialize};

/// Errors raised while reading or validating format files.
#[derive(Debug)]
pub enum FormatError {
    /// The payload is not valid JSON of the expected shape.
    Json(serde_json::Error),
    /// A pair is not `u < v` within range.
    InvalidPair { u: usize, v: usize, n: usize },
    /// The same pair appears twice.
    DuplicatePair { u: usize, v: usize },
    /// Not every pair of `K_n` is present.
    MissingPairs { expected: usize, got: usize },
    /// A color is outside `[0, r)`.
    ColorOutOfRange { u: usize, v: usize, color: u64, r: usize },
    /// The underlying values fail core validation (n, r, edge rules).
    Core(antiramsey_core::Error),
}

impl fmt::Display for FormatError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FormatError::Json(e) => write!(f, "malformed JSON: {e}"),
            FormatError::InvalidPair { u, v, n } => {
                write!(f, "invalid pair ({u},{v}) for n={n}: need u < v < n")
            }
            FormatError::DuplicatePair { u, v } => write!(f, "duplicate pair ({u},{v})"),
            FormatError::MissingPairs { expected, got } => {
                write!(f, "expected {expected} pairs, got {got}")
            }
            FormatError::ColorOutOfRange { u, v, color, r } => {
                write!(f, "edge ({u},{v}) has color {color}, outside 0..{r}")
            }
            FormatError::Core(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for FormatError {}

impl From<serde_json::Error> for FormatError {
    fn from(e: serde_json::Error) -> Self {
        FormatError::Json(e)
    }
}

impl From<antiramsey_core::Error> for FormatError {
    fn from(e: antiramsey_core::Error) -> Self {
        FormatError::Core(e)
    }
}

// ============================================================================
// Colorings
// ============================================================================

#[derive(Serialize, Deserialize)]
struct ColoringFile {
    n: usize,
    r: usize,
    colors: Vec<(usize, usize, u64)>,
}

/// Serializes a coloring to the JSON format, pairs in lexicographic order.
pub fn coloring_to_json(c: &EdgeColoring) -> String {
    let mut rows = Vec::with_capacity(c.colors().len());
    for u in 0..c.n() {
        for v in (u + 1)..c.n() {
            rows.push((u, v, u64::from(c.color(u, v))));
        }
    }
    let file = ColoringFile {
        n: c.n(),
        r: c.r(),
        colors: rows,
    };
    serde_json::to_string(&file).expect("serialization cannot fail")
}

/// Hosts beyond this order make no sense in a dense file format.
pub const MAX_FILE_N: usize = 16_384;

/// Parses and fully validates a coloring file.
pub fn coloring_from_json(text: &str) -> Result<EdgeColoring, FormatError> {
    let file: ColoringFile = serde_json::from_str(text)?;
    if file.n > MAX_FILE_N {
        return Err(FormatError::Core(antiramsey_core::Error::Domain(format!(
            "coloring files support n <= {MAX_FILE_N}, got {}",
            file.n
        ))));
    }
    let expected = if file.n >= 2 { file.n * (file.n - 1) / 2 } else { 0 };
    let mut colors = vec![0u16; expected];
    let mut seen = vec![false; expected];
    let mut got = 0usize;
    for &(u, v, color) in &file.colors {
        if u >= v || v >= file.n {
            return Err(FormatError::InvalidPair { u, v, n: file.n });
        }
        let idx = pair_index(file.n, u, v);
        if seen[idx] {
            return Err(FormatError::DuplicatePair { u, v });
        }
        if color >= file.r as u64 {
            return Err(FormatError::ColorOutOfRange {
                u,
                v,
                color,
                r: file.r,
            });
        }
        seen[idx] = true;
        colors[idx] = color as u16;
        got += 1;
    }
    if got != expected {
        return Err(FormatError::MissingPairs { expected, got });
    }
    Ok(EdgeColoring::new(file.n, file.r, colors)?)
}

/// Resolves a coloring argument: the built-in names `fig-k5` and
/// `rainbow:<a>` are accepted wherever a file path is expected.
pub fn load_coloring(arg: &str) -> anyhow::Result<EdgeColoring> {
    if arg == "fig-k5" || arg.starts_with("rainbow:") {
        return Ok(EdgeColoring::builtin(arg)?);
    }
    let text = std::fs::read_to_string(Path::new(arg))
        .map_err(|e| anyhow::anyhow!("cannot read coloring {arg:?}: {e}"))?;
    Ok(coloring_from_json(&text)?)
}

/// Writes a coloring file.
pub fn save_coloring(c: &EdgeColoring, path: &Path) -> anyhow::Result<()> {
    std::fs::write(path, coloring_to_json(c))
        .map_err(|e| anyhow::anyhow!("cannot write {}: {e}", path.display()))
}

// ============================================================================
// Graphs
// ============================================================================

#[derive(Serialize, Deserialize)]
struct GraphFile {
    m: usize,
    edges: Vec<(usize, usize)>,
}

/// Serializes a graph to `{"m": int, "edges": [[u,v],...]}` with edges in
/// ascending lexicographic order.
pub fn graph_to_json(g: &Graph) -> String {
    let file = GraphFile {
        m: g.m(),
        edges: g
            .edges()
            .iter()
            .map(|&(u, v)| (u as usize, v as usize))
            .collect(),
    };
    serde_json::to_string(&file).expect("serialization cannot fail")
}

/// Parses a graph file; edge validation is the core's.
pub fn graph_from_json(text: &str) -> Result<Graph, FormatError> {
    let file: GraphFile = serde_json::from_str(text)?;
    Ok(Graph::new(file.m, &file.edges)?)
}

// ============================================================================
// Tests
// ============================================================================

#[cfg(test)]
mod tests {
    use super::*;
    use antiramsey_core::graph::build_graph;

    #[test]
    fn single_edge_example() {
        let c = EdgeColoring::constant(2, 1, 0).unwrap();
        assert_eq!(coloring_to_json(&c), r#"{"n":2,"r":1,"colors":[[0,1,0]]}"#);
    }

    #[test]
    fn fig_k5_roundtrip_is_identity() {
        let c = EdgeColoring::fig_k5();
        let parsed = coloring_from_json(&coloring_to_json(&c)).unwrap();
        assert_eq!(parsed, c);
    }

    #[test]
    fn random_roundtrip_is_identity() {
        for seed in 0..5 {
            let c = EdgeColoring::random(9, 7, seed).unwrap();
            assert_eq!(coloring_from_json(&coloring_to_json(&c)).unwrap(), c);
        }
    }

    #[test]
    fn parse_rejects_color_out_of_range() {
        let text = r#"{"n":2,"r":1,"colors":[[0,1,1]]}"#;
        assert!(matches!(
            coloring_from_json(text),
            Err(FormatError::ColorOutOfRange { .. })
        ));
    }

    #[test]
    fn parse_rejects_duplicate_pair() {
        let text = r#"{"n":3,"r":2,"colors":[[0,1,0],[0,1,1],[1,2,0]]}"#;
        assert!(matches!(
            coloring_from_json(text),
            Err(FormatError::DuplicatePair { u: 0, v: 1 })
        ));
    }

    #[test]
    fn parse_rejects_missing_pairs() {
        let text = r#"{"n":3,"r":2,"colors":[[0,1,0],[1,2,0]]}"#;
        assert!(matches!(
            coloring_from_json(text),
            Err(FormatError::MissingPairs { expected: 3, got: 2 })
        ));
    }

    #[test]
    fn parse_rejects_bad_pair_and_bad_json() {
        let text = r#"{"n":3,"r":2,"colors":[[1,0,0],[0,2,0],[1,2,0]]}"#;
        assert!(matches!(
            coloring_from_json(text),
            Err(FormatError::InvalidPair { .. })
        ));
        assert!(matches!(
            coloring_from_json("not json"),
            Err(FormatError::Json(_))
        ));
    }

    #[test]
    fn parse_accepts_unsorted_pairs() {
        let text = r#"{"n":3,"r":2,"colors":[[1,2,1],[0,1,0],[0,2,1]]}"#;
        let c = coloring_from_json(text).unwrap();
        assert_eq!(c.color(0, 1), 0);
        assert_eq!(c.color(1, 2), 1);
    }

    #[test]
    fn graph_roundtrip() {
        let g = build_graph("K4-e").unwrap();
        let json = graph_to_json(&g);
        assert_eq!(json, r#"{"m":4,"edges":[[0,1],[0,2],[0,3],[1,2],[1,3]]}"#);
        let parsed = graph_from_json(&json).unwrap();
        assert_eq!(parsed, g);
        assert!(graph_from_json(r#"{"m":3,"edges":[[0,0]]}"#).is_err());
    }

    #[test]
    fn load_coloring_resolves_builtins() {
        assert_eq!(load_coloring("fig-k5").unwrap(), EdgeColoring::fig_k5());
        assert_eq!(
            load_coloring("rainbow:4").unwrap(),
            EdgeColoring::rainbow_complete(4).unwrap()
        );
        assert!(load_coloring("no-such-file.json").is_err());
    }
}
