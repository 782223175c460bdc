//! JSON file formats for arrangements, wiring diagrams and presentations.
//!
//! Numbers are written `[p, q]` for `p + q√−d`, with `p`, `q` rational
//! strings such as `"3/2"` (plain JSON integers are accepted on input).

use arrgroup_core::arrangement::{Arrangement, ArrangementError};
use arrgroup_core::exactnum::{parse_rational, FieldDesc, NumError, QuadElem};
use arrgroup_core::wiring::{BraidedWiringDiagram, EventKind, Source, WiringError, WiringEvent};
use arrgroup_core::words::{parse_relator, Gen, Presentation, Relator, WordError};
use num_rational::BigRational;
use serde::{Deserialize, Serialize};
use serde_json::value::RawValue;
use serde_json::{json, Value};

/// Errors while reading or writing the file formats.
#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    #[error("JSON error: {0}")]
    Json(#[from] serde_json::Error),
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("line {line}: {source}")]
    Number { line: usize, source: NumError },
    #[error(transparent)]
    Arrangement(#[from] ArrangementError),
    #[error("line {line}: {source}")]
    Wiring { line: usize, source: WiringError },
    #[error("{context}: {source}")]
    Word { context: String, source: WordError },
}

impl FormatError {
    /// True for errors of the input's content (validation) rather than its
    /// syntax; the CLI maps these to the domain-error exit code.
    pub fn is_domain(&self) -> bool {
        matches!(self, FormatError::Arrangement(_) | FormatError::Wiring { .. })
    }
}

#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
enum RatLit {
    Str(String),
    Int(i64),
}

impl RatLit {
    fn value(&self) -> Result<BigRational, NumError> {
        match self {
            RatLit::Str(s) => parse_rational(s),
            RatLit::Int(v) => Ok(BigRational::from_integer((*v).into())),
        }
    }
}

#[derive(Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
struct FieldSpec {
    d: i64,
}

#[derive(Debug, Deserialize)]
struct ArrangementFile<'a> {
    field: FieldSpec,
    #[serde(default)]
    infinity: usize,
    #[serde(borrow)]
    lines: Vec<&'a RawValue>,
}

fn line_of(text: &str, offset: usize) -> usize {
    text[..offset.min(text.len())].bytes().filter(|&b| b == b'\n').count() + 1
}

fn offset_in(text: &str, raw: &RawValue) -> usize {
    (raw.get().as_ptr() as usize).saturating_sub(text.as_ptr() as usize)
}

fn quad(lit: &[RatLit; 2], field: FieldDesc) -> Result<QuadElem, NumError> {
    Ok(QuadElem::new(lit[0].value()?, lit[1].value()?, field))
}

fn rat_str(q: &BigRational) -> String {
    q.to_string()
}

fn quad_json(q: &QuadElem) -> Value {
    json!([rat_str(q.re_part()), rat_str(q.imc())])
}

/// Parses an arrangement file.
pub fn parse_arrangement(text: &str) -> Result<Arrangement, FormatError> {
    let file: ArrangementFile = serde_json::from_str(text)?;
    if file.infinity != 0 {
        return Err(FormatError::Syntax {
            line: 1,
            msg: format!("\"infinity\" must be 0 (list L0 first), got {}", file.infinity),
        });
    }
    let field = FieldDesc::new(file.field.d).map_err(|source| FormatError::Number { line: 1, source })?;
    let mut coeffs = Vec::with_capacity(file.lines.len());
    for raw in &file.lines {
        let line = line_of(text, offset_in(text, raw));
        let l: [[RatLit; 2]; 3] = serde_json::from_str(raw.get()).map_err(|e| FormatError::Syntax {
            line,
            msg: format!("a line is [[a_re, a_im], [b_re, b_im], [c_re, c_im]]: {}", e),
        })?;
        let num = |r: Result<QuadElem, NumError>| r.map_err(|source| FormatError::Number { line, source });
        coeffs.push([num(quad(&l[0], field))?, num(quad(&l[1], field))?, num(quad(&l[2], field))?]);
    }
    Ok(Arrangement::new(field, coeffs)?)
}

/// Serializes an arrangement, one line per row.
pub fn serialize_arrangement(arr: &Arrangement) -> String {
    let mut s = format!("{{\n  \"field\": {{\"d\": {}}},\n  \"infinity\": 0,\n  \"lines\": [\n", arr.field().d());
    let rows: Vec<String> = arr
        .lines()
        .iter()
        .map(|l| {
            let v = json!([quad_json(&l.coeffs[0]), quad_json(&l.coeffs[1]), quad_json(&l.coeffs[2])]);
            format!("    {}", v)
        })
        .collect();
    s.push_str(&rows.join(",\n"));
    s.push_str("\n  ]\n}\n");
    s
}

#[derive(Debug, Deserialize)]
struct WiringFile<'a> {
    n: usize,
    initial_order: Option<Vec<usize>>,
    #[serde(borrow)]
    events: Vec<&'a RawValue>,
    source: Option<SourceSpec>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct SourceSpec {
    field: FieldSpec,
    shear: [RatLit; 2],
    relabel: Vec<usize>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct EventSpec {
    t: RatLit,
    actual: Option<ActualSpec>,
    #[serde(rename = "virtual")]
    virtual_: Option<VirtualSpec>,
}

#[derive(Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
struct ActualSpec {
    top_pos: usize,
    lines: Vec<usize>,
}

#[derive(Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
struct VirtualSpec {
    pos: usize,
    sign: i8,
}

/// Parses and validates a wiring diagram file. Errors name the line of the
/// offending event.
pub fn parse_wiring(text: &str) -> Result<BraidedWiringDiagram, FormatError> {
    let file: WiringFile = serde_json::from_str(text)?;
    let mut events = Vec::with_capacity(file.events.len());
    let mut lines = Vec::with_capacity(file.events.len());
    for raw in &file.events {
        let line = line_of(text, offset_in(text, raw));
        lines.push(line);
        let spec: EventSpec =
            serde_json::from_str(raw.get()).map_err(|e| FormatError::Syntax { line, msg: e.to_string() })?;
        let t = spec.t.value().map_err(|source| FormatError::Number { line, source })?;
        let kind = match (spec.actual, spec.virtual_) {
            (Some(a), None) => EventKind::Actual { top_pos: a.top_pos, lines: a.lines },
            (None, Some(v)) => EventKind::Virtual { pos: v.pos, sign: v.sign },
            _ => {
                return Err(FormatError::Syntax {
                    line,
                    msg: "an event needs exactly one of \"actual\" or \"virtual\"".into(),
                })
            }
        };
        events.push(WiringEvent { t, kind });
    }
    let source = match file.source {
        None => Source::File,
        Some(s) => {
            let field = FieldDesc::new(s.field.d).map_err(|source| FormatError::Number { line: 1, source })?;
            let shear = quad(&s.shear, field).map_err(|source| FormatError::Number { line: 1, source })?;
            Source::Computed { shear, relabel: s.relabel }
        }
    };
    let initial_order = file.initial_order.unwrap_or_else(|| (1..=file.n).collect());
    BraidedWiringDiagram::new(file.n, initial_order, events, source).map_err(|e| {
        let line = match &e {
            WiringError::BadEvent { index, .. } | WiringError::UnsortedT(index) => {
                lines.get(*index).copied().unwrap_or(1)
            }
            _ => 1,
        };
        FormatError::Wiring { line, source: e }
    })
}

fn event_json(ev: &WiringEvent) -> Value {
    match &ev.kind {
        EventKind::Actual { top_pos, lines } => {
            json!({"t": rat_str(&ev.t), "actual": {"top_pos": top_pos, "lines": lines}})
        }
        EventKind::Virtual { pos, sign } => json!({"t": rat_str(&ev.t), "virtual": {"pos": pos, "sign": sign}}),
    }
}

/// Serializes a wiring diagram, one event per row. Round-trips with
/// [`parse_wiring`].
pub fn serialize_wiring(bwd: &BraidedWiringDiagram) -> String {
    let mut s = format!(
        "{{\n  \"n\": {},\n  \"initial_order\": {},\n",
        bwd.n,
        serde_json::to_string(&bwd.initial_order).expect("serializable")
    );
    if let Source::Computed { shear, relabel } = &bwd.source {
        let src = json!({"field": {"d": shear.field().d()}, "shear": quad_json(shear), "relabel": relabel});
        s.push_str(&format!("  \"source\": {},\n", src));
    }
    if bwd.events.is_empty() {
        s.push_str("  \"events\": []\n}\n");
        return s;
    }
    s.push_str("  \"events\": [\n");
    let rows: Vec<String> = bwd.events.iter().map(|e| format!("    {}", event_json(e))).collect();
    s.push_str(&rows.join(",\n"));
    s.push_str("\n  ]\n}\n");
    s
}

#[derive(Debug, Deserialize)]
struct PresentationFile {
    generators: Vec<String>,
    relators: Vec<String>,
}

fn parse_gen(s: &str) -> Result<Gen, FormatError> {
    let w = arrgroup_core::words::parse_word(s)
        .map_err(|source| FormatError::Word { context: format!("generator {:?}", s), source })?;
    match w.letters() {
        [l] if !l.inv => Ok(l.gen),
        _ => Err(FormatError::Syntax { line: 1, msg: format!("{:?} is not a single generator", s) }),
    }
}

/// Parses a presentation, either JSON
/// (`{"generators": ["a1", …], "relators": ["[a2, a1]", …]}`) or the text form
/// printed by the CLI (`generators: a1 a2` followed by one relator per
/// line; other `key: value` report lines such as `relators: 5` or
/// `abelianization: …` are skipped).
pub fn parse_presentation(text: &str) -> Result<Presentation, FormatError> {
    let (gens, rels): (Vec<String>, Vec<(usize, String)>) = if text.trim_start().starts_with('{') {
        let file: PresentationFile = serde_json::from_str(text)?;
        (file.generators, file.relators.into_iter().enumerate().map(|(k, r)| (k + 1, r)).collect())
    } else {
        let mut gens = None;
        let mut rels = Vec::new();
        for (k, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            if let Some(g) = line.strip_prefix("generators:") {
                gens = Some(g.split_whitespace().map(str::to_string).collect());
            } else if !line.contains(':') {
                rels.push((k + 1, line.to_string()));
            }
        }
        let gens = gens.ok_or(FormatError::Syntax { line: 1, msg: "missing \"generators:\" line".into() })?;
        (gens, rels)
    };
    let generators = gens.iter().map(|g| parse_gen(g)).collect::<Result<Vec<_>, _>>()?;
    let relators = rels
        .iter()
        .map(|(k, r)| {
            parse_relator(r).map_err(|source| FormatError::Word { context: format!("relator {}", k), source })
        })
        .collect::<Result<Vec<Relator>, _>>()?;
    let p = Presentation::new(generators, relators);
    p.validate().map_err(|source| FormatError::Word { context: "presentation".into(), source })?;
    Ok(p)
}

/// Structured form of a presentation.
pub fn presentation_json(p: &Presentation) -> Value {
    json!({
        "generators": p.generators.iter().map(|g| g.to_string()).collect::<Vec<_>>(),
        "relator_count": p.relator_count(),
        "relators": p.relators.iter().map(|r| r.to_string()).collect::<Vec<_>>(),
    })
}
