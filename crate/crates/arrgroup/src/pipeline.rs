//! Input loading and the end-to-end pipeline shared by the CLI, the
//! verification runner and the tests.

use std::path::{Path, PathBuf};

use arrgroup_core::arrangement::{
    cycle_basis, incidence_graph, Arrangement, ArrangementError, Combinatorics, CycleBasis,
};
use arrgroup_core::arvola::{complement_presentation_arvola, label_diagram, LabelRule, LabeledDiagram};
use arrgroup_core::exactnum::QuadElem;
use arrgroup_core::inclusion::{inclusion_table, InclusionError, InclusionTable};
use arrgroup_core::wiring::{
    compute_wiring, find_shear, find_shear_where, BraidedWiringDiagram, Source, WiringError, DEFAULT_SHEAR_CANDIDATES,
};
use arrgroup_core::words::Presentation;

use crate::formats::{parse_arrangement, parse_wiring, FormatError};

/// Environment variable overriding the fixture directory.
pub const FIXTURES_ENV: &str = "ARRGROUP_FIXTURES";

/// Errors of the pipeline, split by the CLI into domain (exit 1) and I/O or
/// parse (exit 2) failures.
#[derive(Debug, thiserror::Error)]
pub enum PipelineError {
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("{path}: {source}")]
    Format { path: String, source: FormatError },
    #[error(transparent)]
    Arrangement(#[from] ArrangementError),
    #[error(transparent)]
    Wiring(#[from] WiringError),
    #[error(transparent)]
    Inclusion(#[from] InclusionError),
    #[error("{0}")]
    Usage(String),
}

impl PipelineError {
    pub fn is_domain(&self) -> bool {
        match self {
            PipelineError::Io { .. } | PipelineError::Usage(_) => false,
            PipelineError::Format { source, .. } => source.is_domain(),
            _ => true,
        }
    }
}

/// The fixture directory: `$ARRGROUP_FIXTURES`, else the crate's `fixtures/`.
pub fn fixture_dir() -> PathBuf {
    match std::env::var_os(FIXTURES_ENV) {
        Some(d) if !d.is_empty() => PathBuf::from(d),
        _ => PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures"),
    }
}

/// Resolves a path: as given, else relative to the fixture directory (a
/// leading `fixtures/` component is dropped).
pub fn resolve(path: &Path) -> PathBuf {
    if path.exists() {
        return path.to_path_buf();
    }
    let dir = fixture_dir();
    let stripped = path.strip_prefix("fixtures").unwrap_or(path);
    let candidate = dir.join(stripped);
    if candidate.exists() {
        candidate
    } else {
        path.to_path_buf()
    }
}

/// Reads a file after [`resolve`].
pub fn read_input(path: &Path) -> Result<(PathBuf, String), PipelineError> {
    let p = resolve(path);
    let text =
        std::fs::read_to_string(&p).map_err(|source| PipelineError::Io { path: p.display().to_string(), source })?;
    Ok((p, text))
}

/// What an input file contained.
#[derive(Debug, Clone)]
pub enum Input {
    Arrangement(Arrangement),
    Diagram(BraidedWiringDiagram),
}

/// Loads an arrangement (`.arr`) or a wiring diagram (`.wd`). Other
/// extensions are sniffed: a JSON object with `"lines"` is an arrangement.
pub fn load(path: &Path) -> Result<Input, PipelineError> {
    let (p, text) = read_input(path)?;
    let name = p.display().to_string();
    let is_arr = match p.extension().and_then(|e| e.to_str()) {
        Some("arr") => true,
        Some("wd") => false,
        _ => text.contains("\"lines\"") && !text.contains("\"events\""),
    };
    let fmt = |source| PipelineError::Format { path: name.clone(), source };
    if is_arr {
        Ok(Input::Arrangement(parse_arrangement(&text).map_err(fmt)?))
    } else {
        Ok(Input::Diagram(parse_wiring(&text).map_err(fmt)?))
    }
}

/// A diagram with the combinatorial data needed downstream.
#[derive(Debug, Clone)]
pub struct Prepared {
    /// The arrangement renumbered to the diagram's line order, when known.
    pub arrangement: Option<Arrangement>,
    pub diagram: BraidedWiringDiagram,
    pub combinatorics: Combinatorics,
    pub basis: CycleBasis,
}

/// Search bound for shears whose diagram has the minimal line on top at every
/// actual crossing; past it the first generic shear is used.
pub const TOPS_MINIMAL_CANDIDATES: usize = 2_000;

/// Computes (or takes) the diagram and the cycle basis. For arrangements the
/// shear is `shear` if given, else the first generic one from the search
/// whose diagram has the minimal line on top at every actual crossing (so the
/// inclusion data is defined), else the first generic one.
pub fn prepare(input: Input, shear: Option<&QuadElem>) -> Result<Prepared, PipelineError> {
    match input {
        Input::Diagram(d) => {
            let combinatorics = d.combinatorics();
            let basis = CycleBasis::from_combinatorics(&combinatorics);
            Ok(Prepared { arrangement: None, diagram: d, combinatorics, basis })
        }
        Input::Arrangement(arr) => {
            let lam = match shear {
                Some(l) => l.clone(),
                None => match find_shear_where(&arr, TOPS_MINIMAL_CANDIDATES, |d| d.tops_minimal()) {
                    Ok(l) => l,
                    Err(_) => find_shear(&arr, DEFAULT_SHEAR_CANDIDATES)?,
                },
            };
            let diagram = compute_wiring(&arr, &lam)?;
            let relabel = match &diagram.source {
                Source::Computed { relabel, .. } => relabel.clone(),
                Source::File => (0..=arr.n()).collect(),
            };
            let renumbered = arr.relabeled(&relabel);
            let basis = cycle_basis(&incidence_graph(&renumbered))?;
            let combinatorics = renumbered.combinatorics();
            Ok(Prepared { arrangement: Some(renumbered), diagram, combinatorics, basis })
        }
    }
}

/// Loads and prepares in one step.
pub fn load_prepared(path: &Path, shear: Option<&QuadElem>) -> Result<Prepared, PipelineError> {
    prepare(load(path)?, shear)
}

impl Prepared {
    pub fn labeled(&self, rule: LabelRule) -> LabeledDiagram {
        label_diagram(&self.diagram, rule)
    }

    pub fn arvola(&self, rule: LabelRule) -> Presentation {
        complement_presentation_arvola(&self.diagram, &self.labeled(rule))
    }

    pub fn inclusion(&self, rule: LabelRule) -> Result<InclusionTable, InclusionError> {
        inclusion_table(&self.diagram, &self.labeled(rule), &self.basis)
    }
}
