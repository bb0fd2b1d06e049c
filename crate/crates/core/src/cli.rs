//! Command-line surface. The binary only parses arguments and hands them to
//! [`run`]; everything here is callable in-process.
//!
//! Exit codes: 0 success or verified, 1 verification failure or a
//! refutation witness, 2 invalid input.

use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::bounds::{erdos_szekeres_upper, ramsey_upper, separation_pipeline_bound, theorem_color_classes, BigCount};
use crate::classify::{classify, CrossingCharacter, TripletonType};
use crate::construct::{
    g38_geometric_drawing, max_kton_degree_per_layer, thickness3_layering, two_tripleton_inner_fixture,
    upper_bound_drawing, ConstructionResult, ConstructionSummary,
};
use crate::drawing::{
    book_crossings, layer_planarity, validate_drawing, DrawnGraph, LayeredDrawing,
};
use crate::error::{Error, Result};
use crate::format::{
    book_from_json, coords_from_json, drawing_to_json, graph_from_json, graph_to_json, layering_from_json,
    layering_to_json, read_drawing, read_text, write_text, AbstractLayering,
};
use crate::incidence::generate_incidence_graph;
use crate::search::{
    book_thickness_exact, geometric_thickness_upper_search, min_layers_fixed_placement, refute_outer_type,
    PlacementStrategy, RefuteStrategy,
};
use crate::svg::{render_svg, SvgOptions};

/// Digits shown before bounds switch to digit counts.
const DIGIT_THRESHOLD: usize = 60;

#[derive(Parser, Debug)]
#[command(name = "thickness", version, about = "Layered drawings of subset-inclusion graphs: construct, verify, classify, search")]
pub struct Cli {
    /// Suppress the summary line.
    #[arg(long, global = true)]
    pub quiet: bool,
    /// Seed for randomized searches.
    #[arg(long, global = true, default_value_t = 1)]
    pub seed: u64,
    /// Write the payload (JSON or SVG) to this file instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Write the subset-inclusion graph G_k(n).
    Gen {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: usize,
    },
    /// Build and verify a shipped construction.
    Construct {
        #[arg(value_enum)]
        name: ConstructionName,
        #[arg(long, default_value_t = 8)]
        n: usize,
        /// Crossing character for the two-tripleton fixture.
        #[arg(long, value_enum, default_value_t = Character::Convex)]
        character: Character,
    },
    /// Check a drawing, book layout or abstract layering against a layer budget.
    Verify {
        path: PathBuf,
        #[arg(long, value_enum, default_value_t = VerifyKind::Geom)]
        kind: VerifyKind,
        #[arg(long)]
        t: usize,
    },
    /// Report numbering, roles, coherence, inner/outer status and types.
    Classify {
        path: PathBuf,
        /// Ground-set member numbered 0.
        #[arg(long, default_value_t = 0)]
        start: usize,
    },
    #[command(subcommand)]
    Search(SearchCommand),
    #[command(subcommand)]
    Bounds(BoundsCommand),
    /// Render a drawing file as SVG.
    Svg {
        path: PathBuf,
        /// Pixels per unit; fits to 800 pixels when omitted.
        #[arg(long)]
        scale: Option<f64>,
        /// Logarithmic radial warp for widely spread points.
        #[arg(long)]
        warp: bool,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ConstructionName {
    Layering3,
    G38,
    Upper,
    Fixture,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Character {
    Convex,
    Concave,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum VerifyKind {
    Geom,
    Book,
    Abstract,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum StrategyName {
    Grid,
    Random,
    Convex,
}

#[derive(Args, Debug)]
pub struct GraphArg {
    /// Graph file (a drawing file also works).
    #[arg(long)]
    pub graph: PathBuf,
    /// Give up above this many layers or pages.
    #[arg(long, default_value_t = 6)]
    pub cap: usize,
}

#[derive(Subcommand, Debug)]
pub enum SearchCommand {
    /// Minimum layers for the given vertex coordinates.
    Fixed {
        #[command(flatten)]
        graph: GraphArg,
        #[arg(long)]
        coords: PathBuf,
    },
    /// Best drawing over generated placements.
    Placement {
        #[command(flatten)]
        graph: GraphArg,
        #[arg(long, value_enum, default_value_t = StrategyName::Random)]
        strategy: StrategyName,
        /// Grid side length.
        #[arg(long, default_value_t = 4)]
        grid: usize,
        /// Placements tried by the grid strategy.
        #[arg(long, default_value_t = 200_000)]
        budget: usize,
        /// Trials of the random strategy.
        #[arg(long, default_value_t = 500)]
        trials: usize,
    },
    /// Exact book thickness.
    Book {
        #[command(flatten)]
        graph: GraphArg,
        /// Allow more than the default vertex limit.
        #[arg(long)]
        allow_large: bool,
    },
    /// Look for outer drawings of G_3(n) of one tripleton type.
    Refute {
        #[arg(long)]
        n: usize,
        #[arg(long = "type")]
        ty: String,
        /// Lattice points per layout radius.
        #[arg(long, default_value_t = 5)]
        grid: usize,
        /// Backtracking nodes per layout.
        #[arg(long, default_value_t = 10_000_000)]
        budget: u64,
    },
}

#[derive(Subcommand, Debug)]
pub enum BoundsCommand {
    /// Upper bound on R_e(l; c).
    Ramsey {
        #[arg(long)]
        e: u64,
        #[arg(long)]
        l: u64,
        #[arg(long)]
        c: u64,
    },
    /// Upper bound on the Erdős–Szekeres number N(k).
    Es {
        #[arg(long)]
        k: u64,
    },
    /// Colour classes of tripletons for t-1 layers.
    Classes {
        #[arg(long)]
        t: u64,
    },
    /// Bound on n2 from t and n1, with its sub-bounds.
    Pipeline {
        #[arg(long)]
        t: u64,
        #[arg(long)]
        n1: u64,
    },
}

/// Result of one command: exit code, a one-line summary and an optional
/// payload (JSON or SVG text).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommandOutcome {
    pub code: i32,
    pub summary: String,
    pub payload: Option<String>,
}

impl CommandOutcome {
    fn ok(summary: impl Into<String>, payload: Option<String>) -> Self {
        CommandOutcome { code: 0, summary: summary.into(), payload }
    }

    fn verdict(ok: bool, summary: impl Into<String>, payload: Option<String>) -> Self {
        CommandOutcome { code: if ok { 0 } else { 1 }, summary: summary.into(), payload }
    }

    fn invalid(err: &Error) -> Self {
        CommandOutcome { code: 2, summary: format!("error: {err}"), payload: None }
    }
}

fn pretty(v: &Value) -> Result<String> {
    let mut s = serde_json::to_string_pretty(v)?;
    s.push('\n');
    Ok(s)
}

fn big(v: &BigCount) -> String {
    v.describe(DIGIT_THRESHOLD)
}

/// Runs a parsed command. Errors become exit code 2.
pub fn run(cli: &Cli) -> CommandOutcome {
    dispatch(cli).unwrap_or_else(|e| CommandOutcome::invalid(&e))
}

fn dispatch(cli: &Cli) -> Result<CommandOutcome> {
    match &cli.command {
        Command::Gen { k, n } => cmd_gen(*k, *n),
        Command::Construct { name, n, character } => cmd_construct(*name, *n, *character),
        Command::Verify { path, kind, t } => cmd_verify(path, *kind, *t),
        Command::Classify { path, start } => cmd_classify(path, *start),
        Command::Search(s) => cmd_search(s, cli.seed),
        Command::Bounds(b) => cmd_bounds(b),
        Command::Svg { path, scale, warp } => cmd_svg(path, *scale, *warp),
    }
}

fn cmd_gen(k: usize, n: usize) -> Result<CommandOutcome> {
    let g = generate_incidence_graph(k, n)?;
    let summary = format!("G_{k}({n}): {} vertices, {} edges", g.vertex_count(), g.edge_count());
    Ok(CommandOutcome::ok(summary, Some(graph_to_json(&DrawnGraph::Incidence(g))?)))
}

fn drawing_outcome(label: &str, d: LayeredDrawing, target: usize) -> Result<CommandOutcome> {
    let checked = ConstructionResult::check(d, target);
    let summary_data = ConstructionSummary::from(&checked);
    let summary = format!(
        "{label}: {} vertices, {} edges, {} layers (target {target}), {} same-layer crossings, verified = {}",
        summary_data.vertices,
        summary_data.edges,
        summary_data.layers,
        summary_data.report.crossings.len(),
        summary_data.verified
    );
    Ok(CommandOutcome::verdict(summary_data.verified, summary, Some(drawing_to_json(&checked.drawing)?)))
}

fn cmd_construct(name: ConstructionName, n: usize, character: Character) -> Result<CommandOutcome> {
    match name {
        ConstructionName::Layering3 => {
            let layers = thickness3_layering(n)?;
            let g = generate_incidence_graph(3, n)?;
            let planar = layer_planarity(&(&g).into(), &layers)?;
            let stars = max_kton_degree_per_layer(&g, &layers).iter().all(|&d| d <= 1);
            let ok = planar.iter().all(|&p| p) && stars && planar.len() == 3;
            let summary = format!(
                "three-layer star-forest layering of G_3({n}): {} edges, layers planar = {planar:?}, star forests = {stars}",
                g.edge_count()
            );
            let doc = layering_to_json(&AbstractLayering { graph: DrawnGraph::Incidence(g), layers })?;
            Ok(CommandOutcome::verdict(ok, summary, Some(doc)))
        }
        ConstructionName::G38 => drawing_outcome("G_3(8)", g38_geometric_drawing(), 3),
        ConstructionName::Upper => {
            let r = upper_bound_drawing(n)?;
            drawing_outcome(&format!("G_3({n})"), r.drawing, r.target_layers)
        }
        ConstructionName::Fixture => {
            let ch = match character {
                Character::Convex => CrossingCharacter::Convex,
                Character::Concave => CrossingCharacter::Concave,
            };
            let d = two_tripleton_inner_fixture(ch);
            let report = validate_drawing(&d);
            let summary = format!(
                "{ch:?} two-tripleton fixture: {} same-layer crossing(s), valid = {}",
                report.crossings.len(),
                report.is_valid()
            );
            Ok(CommandOutcome::verdict(report.is_valid(), summary, Some(drawing_to_json(&d)?)))
        }
    }
}

fn cmd_verify(path: &Path, kind: VerifyKind, t: usize) -> Result<CommandOutcome> {
    let text = read_text(path)?;
    match kind {
        VerifyKind::Geom => {
            let d = crate::format::drawing_from_json(&text)?;
            let report = validate_drawing(&d);
            let layers = d.layer_count();
            let ok = report.is_clean() && layers <= t;
            let summary = format!(
                "{} layers (budget {t}), {} same-layer crossing(s), valid = {}: {}",
                layers,
                report.crossings.len(),
                report.is_valid(),
                if ok { "verified" } else { "not verified" }
            );
            let payload = json!({ "verified": ok, "layers": layers, "budget": t, "report": report });
            Ok(CommandOutcome::verdict(ok, summary, Some(pretty(&payload)?)))
        }
        VerifyKind::Book => {
            let b = book_from_json(&text)?;
            let crossings = book_crossings(&b);
            let ok = crossings.is_empty() && b.page_count() <= t;
            let summary = format!(
                "{} pages (budget {t}), {} same-page crossing(s): {}",
                b.page_count(),
                crossings.len(),
                if ok { "verified" } else { "not verified" }
            );
            let payload = json!({ "verified": ok, "pages": b.page_count(), "budget": t, "crossings": crossings });
            Ok(CommandOutcome::verdict(ok, summary, Some(pretty(&payload)?)))
        }
        VerifyKind::Abstract => {
            let l = layering_from_json(&text)?;
            let g = l.graph.to_graph();
            let planar = layer_planarity(&g, &l.layers)?;
            let ok = planar.len() <= t && planar.iter().all(|&p| p);
            let summary = format!(
                "{} layers (budget {t}), planar = {planar:?}: {}",
                planar.len(),
                if ok { "verified" } else { "not verified" }
            );
            let payload = json!({ "verified": ok, "layers": planar.len(), "budget": t, "planar": planar });
            Ok(CommandOutcome::verdict(ok, summary, Some(pretty(&payload)?)))
        }
    }
}

fn cmd_classify(path: &Path, start: usize) -> Result<CommandOutcome> {
    let d = read_drawing(path)?;
    let report = classify(&d, start)?;
    let summary = format!(
        "convex = {}, coherent = {}, {:?}, type {}",
        report.convex, report.coherent, report.inner_outer, report.drawing_type
    );
    Ok(CommandOutcome::ok(summary, Some(pretty(&serde_json::to_value(&report)?)?)))
}

fn load_plain_graph(path: &Path) -> Result<crate::graph::Graph> {
    let text = read_text(path)?;
    // a drawing file carries its graph under "graph"
    let value: Value = serde_json::from_str(&text)?;
    let graph_text = match value.get("graph") {
        Some(g) => g.to_string(),
        None => text,
    };
    Ok(graph_from_json(&graph_text)?.to_graph())
}

fn cmd_search(s: &SearchCommand, seed: u64) -> Result<CommandOutcome> {
    match s {
        SearchCommand::Fixed { graph, coords } => {
            let g = load_plain_graph(&graph.graph)?;
            let pts = coords_from_json(&read_text(coords)?)?;
            let r = min_layers_fixed_placement(&g, &pts, graph.cap)?;
            let payload = json!({
                "layers": r.layers,
                "crossing_pairs": r.conflicts,
                "drawing": r.witness.as_ref().map(drawing_to_json).transpose()?.map(|s| serde_json::from_str::<Value>(&s)).transpose()?,
            });
            let summary = match r.layers {
                Some(l) => l.to_string(),
                None => format!("more than {} layers", graph.cap),
            };
            Ok(CommandOutcome::ok(summary, Some(pretty(&payload)?)))
        }
        SearchCommand::Placement { graph, strategy, grid, budget, trials } => {
            let g = load_plain_graph(&graph.graph)?;
            let strat = match strategy {
                StrategyName::Grid => PlacementStrategy::Grid { resolution: *grid, budget: *budget },
                StrategyName::Random => PlacementStrategy::Random { seed, trials: *trials },
                StrategyName::Convex => PlacementStrategy::Convex,
            };
            let r = geometric_thickness_upper_search(&g, &strat, graph.cap)?;
            let summary = format!(
                "{} (best of {} placements, {} valid)",
                r.layers, r.placements_tried, r.valid_placements
            );
            Ok(CommandOutcome::ok(summary, Some(drawing_to_json(&r.drawing)?)))
        }
        SearchCommand::Book { graph, allow_large } => {
            let g = load_plain_graph(&graph.graph)?;
            let r = book_thickness_exact(&g, graph.cap, *allow_large)?;
            let payload = json!({
                "pages": r.pages,
                "orders_examined": r.orders_examined,
                "order": r.layout.as_ref().map(|l| l.order().to_vec()),
                "page_of_edge": r.layout.as_ref().map(|l| l.pages().to_vec()),
            });
            let summary = match r.pages {
                Some(p) => p.to_string(),
                None => format!("more than {} pages", graph.cap),
            };
            Ok(CommandOutcome::ok(summary, Some(pretty(&payload)?)))
        }
        SearchCommand::Refute { n, ty, grid, budget } => {
            let ty: TripletonType = ty.parse()?;
            let r = refute_outer_type(*n, ty, RefuteStrategy { resolution: *grid }, *budget)?;
            let mut payload = serde_json::to_value(&r)?;
            if let Some((_, d)) = r.witnesses.first() {
                payload["witness"] = serde_json::from_str(&drawing_to_json(d)?)?;
            }
            let complete = r.layouts.iter().all(|l| l.complete);
            let summary = if r.witnesses.is_empty() {
                format!(
                    "no outer drawing of type {ty} for n = {n} over {} layouts ({} candidate drawings{}); forced: {}",
                    r.layouts.len(),
                    r.candidates_examined,
                    if complete { "" } else { ", budget exhausted" },
                    if r.forced_everywhere.is_empty() { "none".to_string() } else { r.forced_everywhere.join(", ") }
                )
            } else {
                format!("witness of type {ty} for n = {n} on layout(s) {}", r.witness_layouts.join(", "))
            };
            Ok(CommandOutcome::verdict(r.witnesses.is_empty(), summary, Some(pretty(&payload)?)))
        }
    }
}

fn cmd_bounds(b: &BoundsCommand) -> Result<CommandOutcome> {
    let (summary, payload) = match *b {
        BoundsCommand::Ramsey { e, l, c } => {
            let v = ramsey_upper(e, l, c)?;
            (big(&v), json!({ "e": e, "l": l, "c": c, "upper_bound": v }))
        }
        BoundsCommand::Es { k } => {
            let v = erdos_szekeres_upper(k)?;
            (big(&v), json!({ "k": k, "upper_bound": v }))
        }
        BoundsCommand::Classes { t } => {
            let v = theorem_color_classes(t)?;
            (big(&v), json!({ "t": t, "classes": v }))
        }
        BoundsCommand::Pipeline { t, n1 } => {
            let p = separation_pipeline_bound(t, n1)?;
            let s = format!(
                "n2 <= {} (c = {}; coherent sub-bound {}; inner/outer sub-bound {})",
                big(&p.n2),
                big(&p.color_classes),
                big(&p.coherent),
                big(&p.inner_outer)
            );
            (s, serde_json::to_value(&p)?)
        }
    };
    Ok(CommandOutcome::ok(summary, Some(pretty(&payload)?)))
}

fn cmd_svg(path: &Path, scale: Option<f64>, warp: bool) -> Result<CommandOutcome> {
    let d = read_drawing(path)?;
    if let Some(s) = scale {
        if !(s.is_finite() && s > 0.0) {
            return Err(Error::InvalidParameters(format!("scale must be positive, got {s}")));
        }
    }
    let svg = render_svg(&d, &SvgOptions { scale, warp });
    let summary = format!("{} vertices, {} edges, {} layers", d.coords().len(), d.edges().len(), d.layer_count());
    Ok(CommandOutcome::ok(summary, Some(svg)))
}

/// Parses `args`, runs the command, writes the payload and returns the exit
/// code. With `--out`, the payload goes to the file and the summary to
/// stdout; otherwise the payload goes to stdout and the summary to stderr.
pub fn main_with<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let outcome = run(&cli);
    match (&outcome.payload, &cli.out) {
        (Some(payload), Some(path)) => {
            if let Err(e) = write_text(path, payload) {
                eprintln!("error: {e}");
                return 2;
            }
            if !cli.quiet {
                println!("{}", outcome.summary);
            }
        }
        (Some(payload), None) => {
            print!("{payload}");
            if !cli.quiet {
                eprintln!("{}", outcome.summary);
            }
        }
        (None, _) => {
            if outcome.code == 2 {
                eprintln!("{}", outcome.summary);
            } else if !cli.quiet {
                println!("{}", outcome.summary);
            }
        }
    }
    outcome.code
}
