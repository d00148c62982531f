//! Command-line surface: counting, searching, blow-up generation, bound
//! evaluation, and convergence tables.

use std::path::PathBuf;

use anyhow::{bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use antiramsey::format::{load_coloring, save_coloring};
use antiramsey::mc::estimate_random_fraction;
use antiramsey::report::{decimal_10sig, rational_f64, rational_str, ReportRow, CSV_HEADER};
use antiramsey_core::bounds::{
    self, random_baseline, ExactRational, StarPartition,
};
use antiramsey_core::graph::{Graph, GraphSpec};
use antiramsey_core::rainbow::{count_rainbow_copies, rainbow_fraction};
use antiramsey_core::search::{
    convergence_table, exact_rb_with, local_search, AcceptanceRule, ExactOptions, Monotonicity,
    SearchParams, TableMode, DEFAULT_BUDGET,
};

#[derive(Parser)]
#[command(
    name = "antiramsey",
    version,
    about = "Rainbow-copy counting, extremal search, and anti-Ramsey bounds on edge-colored complete graphs"
)]
struct Cli {
    /// Emit one JSON object instead of human-readable text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Count rainbow copies of a graph in a coloring file (or builtin).
    Count {
        /// Graph spec (K<a>, K4-e, S<m>, P<k>, C<k>, M<k>, stars:...).
        #[arg(long)]
        graph: String,
        /// Coloring file, or builtin name (fig-k5, rainbow:<a>).
        #[arg(long)]
        coloring: String,
    },
    /// Random-coloring rainbow probability binom(r,e)·e!/r^e.
    Baseline {
        /// Number of edges e.
        #[arg(long)]
        edges: u64,
        /// Number of colors r.
        #[arg(long)]
        colors: u64,
    },
    /// Exact rb by exhaustive search with color-symmetry pruning.
    Brute {
        #[arg(long)]
        graph: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        colors: usize,
        /// Leaf-evaluation budget.
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        /// Write the witness coloring here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Heuristic lower bound on rb via seeded local search.
    Search {
        #[arg(long)]
        graph: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        colors: usize,
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = 8)]
        restarts: u32,
        #[arg(long, default_value_t = 30_000)]
        iters: u64,
        /// Move-acceptance rule.
        #[arg(long, value_enum, default_value_t = Rule::Anneal)]
        rule: Rule,
        /// Initial annealing temperature.
        #[arg(long, default_value_t = 1.5)]
        t0: f64,
        /// Geometric cooling factor.
        #[arg(long, default_value_t = 0.9995)]
        cooling: f64,
        /// Warm-start coloring (file or builtin) for the first restart.
        #[arg(long)]
        warm: Option<String>,
        /// Write the best coloring here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Blow up a base coloring onto n vertices.
    Blowup {
        /// Base coloring file, or builtin name (fig-k5, rainbow:<a>).
        #[arg(long)]
        base: String,
        #[arg(long)]
        n: usize,
        /// Output coloring file.
        #[arg(long)]
        out: PathBuf,
    },
    /// Closed-form bounds and non-anti-commonality criteria.
    #[command(subcommand)]
    Bounds(BoundsCommand),
    /// Convergence table of rb values over a range of n.
    Table {
        #[arg(long)]
        graph: String,
        #[arg(long)]
        colors: usize,
        #[arg(long)]
        n_min: usize,
        #[arg(long)]
        n_max: usize,
        #[arg(long, value_enum, default_value_t = Mode::Exact)]
        mode: Mode,
        /// Write rows as CSV to this file.
        #[arg(long)]
        csv: Option<PathBuf>,
        /// Search-mode seed.
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Search-mode restarts.
        #[arg(long, default_value_t = 8)]
        restarts: u32,
        /// Search-mode iterations per restart.
        #[arg(long, default_value_t = 30_000)]
        iters: u64,
        /// Exact-mode leaf budget.
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Monte Carlo estimate of the random-coloring rainbow fraction.
    Mc {
        #[arg(long)]
        graph: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        colors: usize,
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        samples: u64,
    },
}

#[derive(Subcommand)]
enum BoundsCommand {
    /// Exact test of a!/(a^a - a) > binom(a,2)!/binom(a,2)^binom(a,2).
    Complete {
        #[arg(long)]
        a: u64,
        /// Cap on a (the factorials grow fast).
        #[arg(long, default_value_t = bounds::DEFAULT_COMPLETE_CAP)]
        cap: u64,
    },
    /// Density criterion with hypotheses on (m, e, c).
    Dense1 {
        #[arg(long)]
        m: u64,
        #[arg(long)]
        e: u64,
        #[arg(long)]
        c: f64,
    },
    /// Integer density corollary: m >= 6 and e^2 > m^2(m-1).
    Dense2 {
        #[arg(long)]
        m: u64,
        #[arg(long)]
        e: u64,
    },
    /// Lower bound on rb_r from rb_{r+1} via random recoloring.
    Recolor {
        /// rb value at r+1 colors.
        #[arg(long)]
        rb: u64,
        #[arg(long)]
        r: u64,
        #[arg(long)]
        e: u64,
    },
    /// Leading coefficient t/(a^m - a) of the blow-up recurrence.
    BlowupCoef {
        #[arg(long)]
        a: u64,
        #[arg(long)]
        t: u64,
        #[arg(long)]
        m: u32,
    },
    /// Leading-order rainbow target for a disjoint union of stars.
    Stars {
        /// Comma-separated part sizes, each >= 2.
        #[arg(long, value_delimiter = ',')]
        parts: Vec<u32>,
        #[arg(long)]
        colors: u64,
        #[arg(long)]
        n: u64,
    },
    /// Closed-form upper bound on the rainbow-star count.
    StarUpper {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        m: u64,
        #[arg(long)]
        colors: u64,
    },
    /// Mean-power bound vs the elementary symmetric sum of degree d.
    Maclaurin {
        /// Comma-separated positive rationals, e.g. 1,3/2,5.
        #[arg(long, value_delimiter = ',')]
        xs: Vec<String>,
        #[arg(long)]
        d: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Exact,
    Search,
}

#[derive(Clone, Copy, ValueEnum)]
enum Rule {
    Greedy,
    Anneal,
}

fn main() {
    // Die quietly on closed pipes (e.g. `antiramsey ... | head`) like
    // other line-oriented tools instead of panicking mid-print.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    if let Err(e) = run(cli) {
        eprintln!("error: {e:#}");
        std::process::exit(1);
    }
}

fn emit(json_mode: bool, human: &str, value: serde_json::Value) {
    if json_mode {
        println!("{value}");
    } else {
        println!("{human}");
    }
}

fn parse_graph(spec: &str) -> anyhow::Result<(GraphSpec, Graph)> {
    let parsed: GraphSpec = spec.parse()?;
    let graph = parsed.build()?;
    Ok((parsed, graph))
}

fn frac_parts(q: &ExactRational) -> (String, String) {
    (rational_str(q), decimal_10sig(rational_f64(q)))
}

fn run(cli: Cli) -> anyhow::Result<()> {
    let json_mode = cli.json;
    match cli.command {
        Command::Count { graph, coloring } => {
            let (spec, h) = parse_graph(&graph)?;
            let c = load_coloring(&coloring)?;
            let count = count_rainbow_copies(&h, &c)?;
            let fraction = rainbow_fraction(&h, &c)?;
            let copies = h.copies_in_complete(c.n())?;
            let (fx, fd) = frac_parts(&fraction);
            emit(
                json_mode,
                &format!("{count}  fraction={fx} ({fd})"),
                json!({
                    "graph": spec.to_string(),
                    "n": c.n(),
                    "r": c.r(),
                    "rainbow": count,
                    "copies": copies.to_string(),
                    "fraction": fx,
                    "fraction_decimal": rational_f64(&fraction),
                }),
            );
        }
        Command::Baseline { edges, colors } => {
            if colors < 1 {
                bail!("need at least one color");
            }
            let b = random_baseline(edges, colors);
            let (bx, bd) = frac_parts(&b);
            emit(
                json_mode,
                &format!("{bx} \u{2248} {bd}"),
                json!({
                    "edges": edges,
                    "colors": colors,
                    "baseline": bx,
                    "baseline_decimal": rational_f64(&b),
                }),
            );
        }
        Command::Brute {
            graph,
            n,
            colors,
            budget,
            out,
        } => {
            let (spec, h) = parse_graph(&graph)?;
            let opts = ExactOptions {
                budget,
                prune_color_symmetry: true,
            };
            let res = exact_rb_with(&h, n, colors, &opts)?;
            let baseline = random_baseline(h.edge_count() as u64, colors as u64);
            if let Some(path) = &out {
                save_coloring(&res.witness, path)?;
            }
            let (fx, fd) = frac_parts(&res.fraction);
            let mut human = format!(
                "rb({spec}; n={n}, r={colors}) = {}  [exact]\nfraction = {fx} ({fd})  baseline = {}\nevaluations = {}",
                res.value,
                rational_str(&baseline),
                res.evaluations
            );
            if let Some(path) = &out {
                human.push_str(&format!("\nwitness written to {}", path.display()));
            }
            emit(
                json_mode,
                &human,
                json!({
                    "graph": spec.to_string(),
                    "n": n,
                    "r": colors,
                    "rb": res.value,
                    "exact": true,
                    "fraction": fx,
                    "fraction_decimal": rational_f64(&res.fraction),
                    "baseline": rational_str(&baseline),
                    "evaluations": res.evaluations,
                    "witness": out.as_ref().map(|p| p.display().to_string()),
                }),
            );
        }
        Command::Search {
            graph,
            n,
            colors,
            seed,
            restarts,
            iters,
            rule,
            t0,
            cooling,
            warm,
            out,
        } => {
            let (spec, h) = parse_graph(&graph)?;
            let warm_coloring = warm.as_deref().map(load_coloring).transpose()?;
            let params = SearchParams {
                seed,
                restarts,
                iterations: iters,
                acceptance: match rule {
                    Rule::Greedy => AcceptanceRule::Greedy,
                    Rule::Anneal => AcceptanceRule::Annealing {
                        initial_temperature: t0,
                        cooling,
                    },
                },
            };
            let res = local_search(&h, n, colors, warm_coloring.as_ref(), &params)?;
            let baseline = random_baseline(h.edge_count() as u64, colors as u64);
            if let Some(path) = &out {
                save_coloring(&res.witness, path)?;
            }
            let (fx, fd) = frac_parts(&res.fraction);
            let mut human = format!(
                "rb({spec}; n={n}, r={colors}) >= {}  [lower bound]\nfraction = {fx} ({fd})  baseline = {}\nevaluations = {}",
                res.value,
                rational_str(&baseline),
                res.evaluations
            );
            if let Some(path) = &out {
                human.push_str(&format!("\nwitness written to {}", path.display()));
            }
            emit(
                json_mode,
                &human,
                json!({
                    "graph": spec.to_string(),
                    "n": n,
                    "r": colors,
                    "rb": res.value,
                    "exact": false,
                    "fraction": fx,
                    "fraction_decimal": rational_f64(&res.fraction),
                    "baseline": rational_str(&baseline),
                    "evaluations": res.evaluations,
                    "seed": seed,
                    "restarts": restarts,
                    "iters": iters,
                    "witness": out.as_ref().map(|p| p.display().to_string()),
                }),
            );
        }
        Command::Blowup { base, n, out } => {
            let base_coloring = load_coloring(&base)?;
            let up = base_coloring.blow_up(n)?;
            save_coloring(&up, &out)?;
            emit(
                json_mode,
                &format!(
                    "wrote blow-up of {base} onto n={n} (r={}) to {}",
                    up.r(),
                    out.display()
                ),
                json!({
                    "base": base,
                    "n": n,
                    "r": up.r(),
                    "out": out.display().to_string(),
                }),
            );
        }
        Command::Bounds(cmd) => run_bounds(cmd, json_mode)?,
        Command::Table {
            graph,
            colors,
            n_min,
            n_max,
            mode,
            csv,
            seed,
            restarts,
            iters,
            budget,
        } => {
            let (spec, h) = parse_graph(&graph)?;
            let table_mode = match mode {
                Mode::Exact => TableMode::Exact(ExactOptions {
                    budget,
                    prune_color_symmetry: true,
                }),
                Mode::Search => TableMode::Heuristic(SearchParams {
                    seed,
                    restarts,
                    iterations: iters,
                    ..SearchParams::default()
                }),
            };
            let table = convergence_table(&h, colors, n_min, n_max, &table_mode)?;
            let baseline = random_baseline(h.edge_count() as u64, colors as u64);
            let rows: Vec<ReportRow> = table
                .rows
                .iter()
                .map(|(n, res)| {
                    debug_assert!(!res.exact || res.fraction >= baseline);
                    ReportRow {
                        n: *n,
                        r: colors,
                        graph: spec.to_string(),
                        rb: res.value,
                        exact: res.exact,
                        fraction_decimal: decimal_10sig(rational_f64(&res.fraction)),
                        fraction_exact: rational_str(&res.fraction),
                        baseline_exact: rational_str(&baseline),
                    }
                })
                .collect();
            let verdict = match table.monotonicity {
                Monotonicity::Verified => "verified",
                Monotonicity::Violated => "VIOLATED",
                Monotonicity::Skipped => "skipped (heuristic rows)",
            };
            if let Some(path) = &csv {
                let mut text = String::from(CSV_HEADER);
                for row in &rows {
                    text.push('\n');
                    text.push_str(&row.to_csv());
                }
                text.push('\n');
                std::fs::write(path, text)
                    .with_context(|| format!("cannot write {}", path.display()))?;
            }
            let mut human = format!(
                "{:>4} {:>12} {:>6}  {:<14} {:<16} {}\n",
                "n", "rb", "exact", "fraction", "fraction_exact", "baseline"
            );
            for row in &rows {
                human.push_str(&format!(
                    "{:>4} {:>12} {:>6}  {:<14} {:<16} {}\n",
                    row.n,
                    row.rb,
                    if row.exact { "yes" } else { "no" },
                    row.fraction_decimal,
                    row.fraction_exact,
                    row.baseline_exact
                ));
            }
            human.push_str(&format!("monotonicity: {verdict}"));
            if let Some(path) = &csv {
                human.push_str(&format!("\ncsv written to {}", path.display()));
            }
            emit(
                json_mode,
                &human,
                json!({
                    "graph": spec.to_string(),
                    "r": colors,
                    "rows": rows,
                    "monotonicity": verdict,
                    "csv": csv.as_ref().map(|p| p.display().to_string()),
                }),
            );
        }
        Command::Mc {
            graph,
            n,
            colors,
            seed,
            samples,
        } => {
            let (spec, h) = parse_graph(&graph)?;
            let est = estimate_random_fraction(&h, n, colors, seed, samples)?;
            let baseline = random_baseline(h.edge_count() as u64, colors as u64);
            let (bx, bd) = frac_parts(&baseline);
            emit(
                json_mode,
                &format!(
                    "samples={}  mean={}  se={}  baseline={bx} ({bd})",
                    est.samples,
                    decimal_10sig(est.mean),
                    decimal_10sig(est.std_error)
                ),
                json!({
                    "graph": spec.to_string(),
                    "n": n,
                    "r": colors,
                    "seed": seed,
                    "samples": est.samples,
                    "mean": est.mean,
                    "std_error": est.std_error,
                    "baseline": bx,
                    "baseline_decimal": rational_f64(&baseline),
                }),
            );
        }
    }
    Ok(())
}

fn run_bounds(cmd: BoundsCommand, json_mode: bool) -> anyhow::Result<()> {
    match cmd {
        BoundsCommand::Complete { a, cap } => {
            let v = bounds::complete_graph_criterion_with_cap(a, cap)?;
            let pairs = a * (a - 1) / 2;
            let (lx, ld) = frac_parts(&v.lhs);
            let (rx, rd) = frac_parts(&v.rhs);
            emit(
                json_mode,
                &format!(
                    "K{a} not {pairs}-anti-common: {}\nlhs = {lx} ({ld})  rhs = {rx} ({rd})",
                    verdict(v.holds)
                ),
                json!({
                    "a": a,
                    "pairs": pairs,
                    "holds": v.holds,
                    "lhs": lx,
                    "rhs": rx,
                }),
            );
        }
        BoundsCommand::Dense1 { m, e, c } => {
            let v = bounds::dense1_criterion(m, e, c)?;
            let pairs = m * (m - 1) / 2;
            emit(
                json_mode,
                &format!(
                    "applicable: {}\nnot {pairs}-anti-common: {}",
                    verdict(v.applicable),
                    verdict(v.holds)
                ),
                json!({
                    "m": m,
                    "e": e,
                    "c": c,
                    "applicable": v.applicable,
                    "holds": v.holds,
                }),
            );
        }
        BoundsCommand::Dense2 { m, e } => {
            let holds = bounds::dense2_criterion(m, e);
            let pairs = m * (m - 1) / 2;
            emit(
                json_mode,
                &format!("not {pairs}-anti-common: {}", verdict(holds)),
                json!({
                    "m": m,
                    "e": e,
                    "holds": holds,
                }),
            );
        }
        BoundsCommand::Recolor { rb, r, e } => {
            if r < 1 {
                bail!("need at least one color");
            }
            let factor = bounds::recoloring_factor(r, e);
            let bound = bounds::recoloring_lower_bound(rb, r, e);
            emit(
                json_mode,
                &format!(
                    "rb_{r} >= {} * rb_{} = {}",
                    rational_str(&factor),
                    r + 1,
                    rational_str(&bound)
                ),
                json!({
                    "rb_next": rb,
                    "r": r,
                    "e": e,
                    "factor": rational_str(&factor),
                    "bound": rational_str(&bound),
                }),
            );
        }
        BoundsCommand::BlowupCoef { a, t, m } => {
            if a < 2 || m < 2 {
                bail!("need a >= 2 and m >= 2");
            }
            let rec = bounds::blowup_coefficient(a, t, m);
            emit(
                json_mode,
                &format!(
                    "F(n) >= {} n^{m} + O(n^{})",
                    rational_str(&rec.coefficient),
                    m - 1
                ),
                json!({
                    "a": a,
                    "t": t,
                    "m": m,
                    "coefficient": rational_str(&rec.coefficient),
                }),
            );
        }
        BoundsCommand::Stars { parts, colors, n } => {
            let p = StarPartition::new(&parts)?;
            let target = bounds::disjoint_stars_target(&p, colors, n)?;
            let g = p.to_graph()?;
            let copies = g.copies_in_complete(n as usize)?;
            let normalized =
                &target / ExactRational::from(num_bigint::BigInt::from(copies.clone()));
            let baseline = random_baseline(p.e(), colors);
            let (tx, td) = frac_parts(&target);
            let (nx, nd) = frac_parts(&normalized);
            emit(
                json_mode,
                &format!(
                    "target = {tx} ({td})\nnormalized = {nx} ({nd})  baseline = {}",
                    rational_str(&baseline)
                ),
                json!({
                    "parts": p.parts(),
                    "m": p.m(),
                    "k": p.k(),
                    "gamma": p.gamma().to_string(),
                    "multinomial": p.multinomial().to_string(),
                    "r": colors,
                    "n": n,
                    "target": tx,
                    "copies": copies.to_string(),
                    "normalized": nx,
                    "baseline": rational_str(&baseline),
                }),
            );
        }
        BoundsCommand::StarUpper { n, m, colors } => {
            if !(n >= m && m >= 2 && colors >= 1) {
                bail!("need n >= m >= 2 and colors >= 1");
            }
            let bound = bounds::star_upper_bound(n, m, colors);
            let (bx, bd) = frac_parts(&bound);
            emit(
                json_mode,
                &format!("rb_{colors}(S{m}; {n}) <= {bx} ({bd})"),
                json!({
                    "n": n,
                    "m": m,
                    "r": colors,
                    "bound": bx,
                }),
            );
        }
        BoundsCommand::Maclaurin { xs, d } => {
            let values = xs
                .iter()
                .map(|s| {
                    s.parse::<ExactRational>()
                        .map_err(|e| anyhow::anyhow!("cannot parse {s:?} as a rational: {e}"))
                })
                .collect::<anyhow::Result<Vec<_>>>()?;
            let upper = bounds::maclaurin_upper(&values, d)?;
            let sym = bounds::elementary_symmetric(&values, d);
            let (ux, ud) = frac_parts(&upper);
            let (sx, sd) = frac_parts(&sym);
            emit(
                json_mode,
                &format!("symmetric_sum = {sx} ({sd})  <=  bound = {ux} ({ud})"),
                json!({
                    "xs": xs,
                    "d": d,
                    "symmetric_sum": sx,
                    "bound": ux,
                }),
            );
        }
    }
    Ok(())
}

fn verdict(b: bool) -> &'static str {
    if b {
        "TRUE"
    } else {
        "FALSE"
    }
}
