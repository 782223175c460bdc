//! Command-line front end. [`run`] does all the work and returns the text to
//! print, so the commands are testable in-process; `main` maps errors to
//! exit codes (0 success, 1 domain error, 2 I/O or parse error).

use std::fmt::Write;
use std::path::{Path, PathBuf};

use arrgroup_core::arrangement::{incidence_graph, multiplicity_histogram, point_name};
use arrgroup_core::arvola::LabelRule;
use arrgroup_core::boundary::boundary_presentation;
use arrgroup_core::exactnum::{parse_rational, FieldDesc, QuadElem};
use arrgroup_core::inclusion::{
    complement_presentation_inclusion, eliminated_images, kernel_generators, randell_presentation, Variant,
};
use arrgroup_core::simplify::{abelianization, eliminate_generator, AbelianInvariants};
use arrgroup_core::words::{parse_word, Gen, Presentation, Word};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::formats::{parse_presentation, presentation_json, serialize_wiring};
use crate::pipeline::{load, prepare, read_input, Input, PipelineError, Prepared};
use crate::svg::render_svg;
use crate::verify::run_checks;

#[derive(Debug, Parser)]
#[command(
    name = "arrgroup",
    version,
    about = "Fundamental groups of complex line arrangements: boundary manifold, complement, and the inclusion map",
    after_help = "Inputs are arrangement files (.arr) or braided wiring diagrams (.wd). Paths that do not exist are \
                  looked up in the fixture directory ($ARRGROUP_FIXTURES, default: the bundled fixtures)."
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Default)]
pub enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Default)]
pub enum Mode {
    #[default]
    Arvola,
    Inclusion,
    Randell,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Default)]
pub enum VariantArg {
    #[default]
    Framed,
    Geometric,
}

impl From<VariantArg> for Variant {
    fn from(v: VariantArg) -> Variant {
        match v {
            VariantArg::Framed => Variant::Framed,
            VariantArg::Geometric => Variant::Geometric,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Default)]
pub enum LabelsArg {
    #[default]
    Generic,
    Simplified,
    Raw,
}

impl From<LabelsArg> for LabelRule {
    fn from(v: LabelsArg) -> LabelRule {
        match v {
            LabelsArg::Generic => LabelRule::Generic,
            LabelsArg::Simplified => LabelRule::Simplified,
            LabelsArg::Raw => LabelRule::Raw,
        }
    }
}

#[derive(Debug, Clone, Args)]
pub struct Common {
    /// Input file (.arr arrangement or .wd wiring diagram).
    pub file: PathBuf,
    /// Shear x -> x + λy for arrangements, as RE or RE,IM (λ = RE + IM·√−d).
    #[arg(long, value_name = "RE[,IM]", allow_hyphen_values = true)]
    pub shear: Option<String>,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Lines, singular points, incidence graph and cycle pairs.
    Info {
        #[command(flatten)]
        common: Common,
        /// Print the incidence graph in DOT format instead.
        #[arg(long)]
        dot: bool,
    },
    /// Compute (or validate) a braided wiring diagram.
    Wiring {
        #[command(flatten)]
        common: Common,
        /// Also write an SVG drawing.
        #[arg(long, value_name = "PATH")]
        svg: Option<PathBuf>,
        /// Write the diagram here instead of standard output.
        #[arg(short, long, value_name = "PATH")]
        output: Option<PathBuf>,
    },
    /// Fundamental group presentations.
    Pi1 {
        #[command(subcommand)]
        which: Pi1Command,
    },
    /// Correction words, retraction words, images and kernel words per cycle.
    Inclusion {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value_t)]
        labels: LabelsArg,
    },
    /// Eliminate generators and compute the abelianization of a presentation.
    Simplify {
        /// Presentation file (JSON, or the text form printed by `pi1`).
        file: PathBuf,
        /// Substitute a generator, e.g. `a0=(a1 a2 a3)^-1`. Repeatable.
        #[arg(long, value_name = "GEN=WORD")]
        eliminate: Vec<String>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Run the invariant suite; exits 1 when a check fails.
    Verify {
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Debug, Subcommand)]
pub enum Pi1Command {
    /// Presentation of the boundary manifold group.
    Boundary {
        #[command(flatten)]
        common: Common,
    },
    /// Presentation of the complement group.
    Complement {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value_t)]
        mode: Mode,
        /// Cycle realization for --mode inclusion.
        #[arg(long, value_enum, default_value_t)]
        variant: VariantArg,
        /// Label rule at actual crossings.
        #[arg(long, value_enum, default_value_t)]
        labels: LabelsArg,
    },
}

/// Result of a command: text for standard output and whether it failed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub failed: bool,
}

impl Outcome {
    fn ok(stdout: String) -> Outcome {
        Outcome { stdout, failed: false }
    }
}

fn usage(msg: impl Into<String>) -> PipelineError {
    PipelineError::Usage(msg.into())
}

/// Parses `RE` or `RE,IM` in the given field.
pub fn parse_shear(s: &str, field: FieldDesc) -> Result<QuadElem, PipelineError> {
    let bad = |e: arrgroup_core::exactnum::NumError| usage(format!("--shear {:?}: {}", s, e));
    let (re, im) = match s.split_once(',') {
        Some((a, b)) => (parse_rational(a.trim()).map_err(bad)?, parse_rational(b.trim()).map_err(bad)?),
        None => (parse_rational(s.trim()).map_err(bad)?, num_rational::BigRational::from_integer(0.into())),
    };
    Ok(QuadElem::new(re, im, field))
}

fn prepared(common: &Common) -> Result<Prepared, PipelineError> {
    let input = load(&common.file)?;
    let shear = match (&common.shear, &input) {
        (Some(s), Input::Arrangement(a)) => Some(parse_shear(s, a.field())?),
        (Some(_), Input::Diagram(_)) => return Err(usage("--shear applies to arrangement files only")),
        (None, _) => None,
    };
    prepare(input, shear.as_ref())
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn pairs_text(pairs: &[(usize, usize)]) -> String {
    pairs.iter().map(|(s, t)| format!("({},{})", s, t)).collect::<Vec<_>>().join(" ")
}

fn abelian_json(ab: &AbelianInvariants) -> Value {
    json!({"rank": ab.rank, "torsion": ab.torsion.iter().map(|d| d.to_string()).collect::<Vec<_>>(), "text": ab.to_string()})
}

/// Runs a parsed command line.
pub fn run(cli: &Cli) -> Result<Outcome, PipelineError> {
    match &cli.command {
        Command::Info { common, dot } => cmd_info(common, *dot),
        Command::Wiring { common, svg, output } => cmd_wiring(common, svg.as_ref(), output.as_ref()),
        Command::Pi1 { which: Pi1Command::Boundary { common } } => {
            let prep = prepared(common)?;
            let p = boundary_presentation(&prep.combinatorics, &prep.basis);
            emit_presentation(&p, common.format)
        }
        Command::Pi1 { which: Pi1Command::Complement { common, mode, variant, labels } } => {
            let prep = prepared(common)?;
            let p = match mode {
                Mode::Arvola => prep.arvola((*labels).into()),
                Mode::Inclusion => {
                    let table = prep.inclusion((*labels).into())?;
                    complement_presentation_inclusion(&prep.combinatorics, &prep.basis, &table, (*variant).into())?
                }
                Mode::Randell => randell_presentation(&prep.diagram)?,
            };
            emit_presentation(&p, common.format)
        }
        Command::Inclusion { common, labels } => cmd_inclusion(common, (*labels).into()),
        Command::Simplify { file, eliminate, format } => cmd_simplify(file, eliminate, *format),
        Command::Verify { common } => cmd_verify(common),
    }
}

fn emit_presentation(p: &Presentation, format: Format) -> Result<Outcome, PipelineError> {
    let ab = abelianization(p);
    Ok(Outcome::ok(match format {
        Format::Text => format!("{}abelianization: {}\n", p, ab),
        Format::Json => {
            let mut v = presentation_json(p);
            v["abelianization"] = abelian_json(&ab);
            pretty(&v)
        }
    }))
}

fn cmd_info(common: &Common, dot: bool) -> Result<Outcome, PipelineError> {
    let input = load(&common.file)?;
    if let Input::Arrangement(arr) = &input {
        let g = incidence_graph(arr);
        if dot {
            return Ok(Outcome::ok(g.to_dot()));
        }
        let basis = arrgroup_core::arrangement::cycle_basis(&g)?;
        let pts = &g.points;
        let hist = multiplicity_histogram(pts);
        match common.format {
            Format::Text => {
                let mut s = String::new();
                let _ = writeln!(s, "field: d = {}", arr.field().d());
                let _ = writeln!(s, "lines: {} (L0 at infinity, n = {})", arr.lines().len(), arr.n());
                for l in arr.lines() {
                    let _ =
                        writeln!(s, "  L{}: ({}) x + ({}) y + ({}) z", l.index, l.coeffs[0], l.coeffs[1], l.coeffs[2]);
                }
                let _ = writeln!(
                    s,
                    "singular points: {} ({} affine)",
                    pts.len(),
                    pts.iter().filter(|p| !p.at_infinity).count()
                );
                for p in pts {
                    let _ = writeln!(
                        s,
                        "  {:<12} m = {}{}  ({} : {} : {})",
                        point_name(p),
                        p.multiplicity(),
                        if p.at_infinity { ", on L0" } else { "" },
                        p.coords[0],
                        p.coords[1],
                        p.coords[2]
                    );
                }
                for ((inf, m), c) in &hist {
                    let _ = writeln!(s, "  multiplicity {} {}: {}", m, if *inf { "on L0" } else { "affine" }, c);
                }
                let _ = writeln!(
                    s,
                    "incidence graph: {} vertices, {} edges, b1 = {}",
                    g.vertex_count(),
                    g.edge_count(),
                    g.betti1()
                );
                let _ = writeln!(s, "cycle pairs: {}", pairs_text(&basis.cycles));
                Ok(Outcome::ok(s))
            }
            Format::Json => Ok(Outcome::ok(pretty(&json!({
                "field": {"d": arr.field().d()},
                "n": arr.n(),
                "points": pts.iter().map(|p| json!({
                    "name": point_name(p), "incident": p.incident, "multiplicity": p.multiplicity(), "at_infinity": p.at_infinity,
                    "coords": p.coords.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
                })).collect::<Vec<_>>(),
                "incidence_graph": {"vertices": g.vertex_count(), "edges": g.edge_count(), "b1": g.betti1()},
                "cycles": basis.cycles,
            })))),
        }
    } else {
        if dot {
            return Err(usage("--dot needs an arrangement file (the diagram does not record points on L0)"));
        }
        let prep = prepare(input, None)?;
        let d = &prep.diagram;
        match common.format {
            Format::Text => {
                let mut s = String::new();
                let _ = writeln!(s, "strands: {}", d.n);
                let _ = writeln!(
                    s,
                    "events: {} ({} actual, {} virtual)",
                    d.events.len(),
                    d.actual_count(),
                    d.virtual_count()
                );
                let _ = writeln!(s, "affine points: {}", prep.combinatorics.affine_points.len());
                for p in &prep.combinatorics.affine_points {
                    let _ = writeln!(s, "  {:<12} m = {}", arrgroup_core::arrangement::point_label_from(p), p.len());
                }
                let _ = writeln!(s, "cycle pairs: {} ({})", pairs_text(&prep.basis.cycles), prep.basis.len());
                Ok(Outcome::ok(s))
            }
            Format::Json => Ok(Outcome::ok(pretty(&json!({
                "n": d.n, "events": d.events.len(), "actual": d.actual_count(), "virtual": d.virtual_count(),
                "affine_points": prep.combinatorics.affine_points, "cycles": prep.basis.cycles,
            })))),
        }
    }
}

fn write_file(path: &PathBuf, text: &str) -> Result<(), PipelineError> {
    std::fs::write(path, text).map_err(|source| PipelineError::Io { path: path.display().to_string(), source })
}

fn cmd_wiring(common: &Common, svg: Option<&PathBuf>, output: Option<&PathBuf>) -> Result<Outcome, PipelineError> {
    let prep = prepared(common)?;
    let d = &prep.diagram;
    if let Some(p) = svg {
        write_file(p, &render_svg(d))?;
    }
    // The wiring file format is also the text output.
    let body = serialize_wiring(d);
    match output {
        Some(p) => {
            write_file(p, &body)?;
            Ok(Outcome::ok(String::new()))
        }
        None => Ok(Outcome::ok(body)),
    }
}

fn cmd_inclusion(common: &Common, rule: LabelRule) -> Result<Outcome, PipelineError> {
    let prep = prepared(common)?;
    let table = prep.inclusion(rule)?;
    let elim = eliminated_images(&table)?;
    let rows: Vec<(String, [String; 7])> = table
        .rows
        .iter()
        .map(|r| {
            (
                format!("e{},{}", r.pair.0, r.pair.1),
                [
                    r.delta_left.to_string(),
                    r.mu.to_string(),
                    r.delta_right.to_string(),
                    r.unknotted().to_string(),
                    r.image.to_string(),
                    elim[&r.pair].to_string(),
                    r.kernel.to_string(),
                ],
            )
        })
        .collect();
    let kernel = kernel_generators(&table);
    let product = kernel.last().expect("product word").to_string();
    match common.format {
        Format::Text => {
            let mut s = String::from("pair\tdelta_l\tmu\tdelta_r\tdelta\timage\timage_eliminated\tkernel\n");
            for (name, cols) in &rows {
                let _ = writeln!(s, "{}\t{}", name, cols.join("\t"));
            }
            let _ = writeln!(s, "kernel also contains {}", product);
            Ok(Outcome::ok(s))
        }
        Format::Json => {
            let keys = ["delta_l", "mu", "delta_r", "delta", "image", "image_eliminated", "kernel"];
            let rows: Vec<Value> = rows
                .iter()
                .map(|(name, cols)| {
                    let mut o = serde_json::Map::new();
                    o.insert("pair".into(), json!(name));
                    for (k, c) in keys.iter().zip(cols) {
                        o.insert((*k).into(), json!(c));
                    }
                    Value::Object(o)
                })
                .collect();
            Ok(Outcome::ok(pretty(&json!({"rows": rows, "meridian_product": product}))))
        }
    }
}

fn parse_elimination(s: &str) -> Result<(Gen, Word), PipelineError> {
    let (g, w) = s.split_once('=').ok_or_else(|| usage(format!("--eliminate {:?}: expected GEN=WORD", s)))?;
    let g = match parse_word(g.trim()).map_err(|e| usage(format!("--eliminate {:?}: {}", s, e)))?.letters() {
        [l] if !l.inv => l.gen,
        _ => return Err(usage(format!("--eliminate {:?}: left side must be one generator", s))),
    };
    let w = parse_word(w).map_err(|e| usage(format!("--eliminate {:?}: {}", s, e)))?;
    Ok((g, w))
}

fn cmd_simplify(file: &Path, eliminate: &[String], format: Format) -> Result<Outcome, PipelineError> {
    let (path, text) = read_input(file)?;
    let mut p = parse_presentation(&text)
        .map_err(|source| PipelineError::Format { path: path.display().to_string(), source })?;
    for e in eliminate {
        let (g, w) = parse_elimination(e)?;
        p = eliminate_generator(&p, g, &w).map_err(|e| usage(e.to_string()))?;
    }
    // Reduce every relator and drop the trivial ones.
    let relators = p.relators.iter().map(|r| r.map_words(|w| w.reduce())).filter(|r| !r.is_trivial()).collect();
    let p = Presentation::new(p.generators, relators);
    emit_presentation(&p, format)
}

fn cmd_verify(common: &Common) -> Result<Outcome, PipelineError> {
    let prep = prepared(common)?;
    let checks = run_checks(&prep);
    let failed = checks.iter().any(|c| !c.ok);
    let stdout = match common.format {
        Format::Text => {
            let mut s = String::new();
            for c in &checks {
                let _ = writeln!(
                    s,
                    "{:<4} {}{}",
                    if c.ok { "ok" } else { "FAIL" },
                    c.name,
                    if c.detail.is_empty() { String::new() } else { format!(": {}", c.detail) }
                );
            }
            let _ = writeln!(s, "{} of {} checks passed", checks.iter().filter(|c| c.ok).count(), checks.len());
            s
        }
        Format::Json => pretty(&json!({
            "passed": !failed,
            "checks": checks.iter().map(|c| json!({"name": c.name, "ok": c.ok, "detail": c.detail})).collect::<Vec<_>>(),
        })),
    };
    Ok(Outcome { stdout, failed })
}
