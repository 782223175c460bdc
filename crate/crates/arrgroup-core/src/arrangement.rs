//! Arrangement combinatorics: singular points, the incidence graph, the
//! maximal tree and the generating cycles.
//!
//! Lines are `a x + b y + c z = 0` with coefficients in one quadratic field.
//! Line `L₀` (index 0) is the line at infinity.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec::Vec;

use crate::exactnum::{FieldDesc, NumError, QuadElem};

/// Errors raised while building or analysing an arrangement.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ArrangementError {
    #[error("an arrangement needs at least two lines (got {0})")]
    TooFewLines(usize),
    #[error("line L{0} has all coefficients zero")]
    ZeroLine(usize),
    #[error("lines L{0} and L{1} are proportional")]
    Proportional(usize, usize),
    #[error("line L{0} uses a different field than the arrangement")]
    FieldMismatch(usize),
    #[error("incidence graph is disconnected")]
    Disconnected,
    #[error("the chosen tree edges contain a cycle")]
    TreeHasCycle,
    #[error(transparent)]
    Num(#[from] NumError),
}

/// A projective line `a x + b y + c z = 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProjLine {
    pub index: usize,
    pub coeffs: [QuadElem; 3],
}

/// A line arrangement with `L₀` as the line at infinity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Arrangement {
    field: FieldDesc,
    lines: Vec<ProjLine>,
}

/// An intersection point of at least two lines.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SingularPoint {
    /// Projective coordinates normalized so the first nonzero entry is 1.
    pub coords: [QuadElem; 3],
    /// Sorted indices of the lines through the point.
    pub incident: Vec<usize>,
    /// True when the point lies on `L₀`.
    pub at_infinity: bool,
}

impl SingularPoint {
    pub fn multiplicity(&self) -> usize {
        self.incident.len()
    }

    /// `ν(P)`: the smallest line index through the point.
    pub fn nu(&self) -> usize {
        self.incident[0]
    }
}

fn cross(u: &[QuadElem; 3], v: &[QuadElem; 3]) -> [QuadElem; 3] {
    [&(&u[1] * &v[2]) - &(&u[2] * &v[1]), &(&u[2] * &v[0]) - &(&u[0] * &v[2]), &(&u[0] * &v[1]) - &(&u[1] * &v[0])]
}

fn dot(u: &[QuadElem; 3], v: &[QuadElem; 3]) -> QuadElem {
    &(&(&u[0] * &v[0]) + &(&u[1] * &v[1])) + &(&u[2] * &v[2])
}

fn normalize(p: [QuadElem; 3]) -> [QuadElem; 3] {
    let k = p.iter().position(|c| !c.is_zero()).expect("nonzero projective point");
    let inv = p[k].try_inv().expect("nonzero pivot");
    [&p[0] * &inv, &p[1] * &inv, &p[2] * &inv]
}

impl Arrangement {
    /// Builds an arrangement from lines `L₀, …, Lₙ` (in index order).
    pub fn new(field: FieldDesc, coeffs: Vec<[QuadElem; 3]>) -> Result<Arrangement, ArrangementError> {
        if coeffs.len() < 2 {
            return Err(ArrangementError::TooFewLines(coeffs.len()));
        }
        let lines: Vec<ProjLine> =
            coeffs.into_iter().enumerate().map(|(index, coeffs)| ProjLine { index, coeffs }).collect();
        for l in &lines {
            if l.coeffs.iter().any(|c| c.field() != field) {
                return Err(ArrangementError::FieldMismatch(l.index));
            }
            if l.coeffs.iter().all(|c| c.is_zero()) {
                return Err(ArrangementError::ZeroLine(l.index));
            }
        }
        for i in 0..lines.len() {
            for j in i + 1..lines.len() {
                if cross(&lines[i].coeffs, &lines[j].coeffs).iter().all(|c| c.is_zero()) {
                    return Err(ArrangementError::Proportional(i, j));
                }
            }
        }
        Ok(Arrangement { field, lines })
    }

    pub fn field(&self) -> FieldDesc {
        self.field
    }

    pub fn lines(&self) -> &[ProjLine] {
        &self.lines
    }

    /// Number of affine lines `n` (lines other than `L₀`).
    pub fn n(&self) -> usize {
        self.lines.len() - 1
    }

    /// Index of the line at infinity (always 0).
    pub fn infinity(&self) -> usize {
        0
    }

    /// True when every coefficient is rational (a real complexified arrangement).
    pub fn is_real(&self) -> bool {
        self.lines.iter().all(|l| l.coeffs.iter().all(|c| c.is_rational()))
    }

    /// Renumbers the affine lines: new line `k` is old line `relabel[k]`
    /// (with `relabel[0] == 0`).
    pub fn relabeled(&self, relabel: &[usize]) -> Arrangement {
        debug_assert_eq!(relabel.len(), self.lines.len());
        debug_assert_eq!(relabel[0], 0);
        let lines = relabel
            .iter()
            .enumerate()
            .map(|(k, &old)| ProjLine { index: k, coeffs: self.lines[old].coeffs.clone() })
            .collect();
        Arrangement { field: self.field, lines }
    }

    /// All singular points, merged by exact projective coordinates and sorted
    /// by incident line sets.
    pub fn singular_points(&self) -> Vec<SingularPoint> {
        let mut seen: Vec<SingularPoint> = Vec::new();
        let mut covered: BTreeSet<(usize, usize)> = BTreeSet::new();
        for i in 0..self.lines.len() {
            for j in i + 1..self.lines.len() {
                if covered.contains(&(i, j)) {
                    continue;
                }
                let p = normalize(cross(&self.lines[i].coeffs, &self.lines[j].coeffs));
                let incident: Vec<usize> =
                    self.lines.iter().filter(|l| dot(&l.coeffs, &p).is_zero()).map(|l| l.index).collect();
                for a in 0..incident.len() {
                    for b in a + 1..incident.len() {
                        covered.insert((incident[a], incident[b]));
                    }
                }
                let at_infinity = incident.contains(&0);
                seen.push(SingularPoint { coords: p, incident, at_infinity });
            }
        }
        seen.sort_by(|a, b| a.incident.cmp(&b.incident));
        seen
    }

    /// The affine combinatorics (multiple points off `L₀`).
    pub fn combinatorics(&self) -> Combinatorics {
        Combinatorics {
            n: self.n(),
            affine_points: self.singular_points().into_iter().filter(|p| !p.at_infinity).map(|p| p.incident).collect(),
        }
    }
}

/// The affine intersection lattice: `n` affine lines and the incident sets of
/// the singular points of `𝒫` (points off `L₀`). Both arrangements and wiring
/// diagrams provide it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Combinatorics {
    pub n: usize,
    /// Sorted incident sets, sorted lexicographically.
    pub affine_points: Vec<Vec<usize>>,
}

impl Combinatorics {
    pub fn new(n: usize, mut affine_points: Vec<Vec<usize>>) -> Combinatorics {
        for p in &mut affine_points {
            p.sort_unstable();
        }
        affine_points.sort();
        Combinatorics { n, affine_points }
    }

    /// `Σ_{P∈𝒫} (m_P − 1)`.
    pub fn relator_count(&self) -> usize {
        self.affine_points.iter().map(|p| p.len() - 1).sum()
    }

    /// The affine point through lines `s` and `t`, if any.
    pub fn point_of(&self, s: usize, t: usize) -> Option<&Vec<usize>> {
        self.affine_points.iter().find(|p| p.contains(&s) && p.contains(&t))
    }
}

/// The bipartite incidence graph `Γ_𝒜`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IncidenceGraph {
    pub line_count: usize,
    pub points: Vec<SingularPoint>,
    /// Edges `(line, point index)`, sorted.
    pub edges: Vec<(usize, usize)>,
}

impl IncidenceGraph {
    pub fn vertex_count(&self) -> usize {
        self.line_count + self.points.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// First Betti number `E − V + 1` (the graph is connected).
    pub fn betti1(&self) -> usize {
        self.edge_count() + 1 - self.vertex_count()
    }

    /// DOT export (undirected): lines as boxes `L<i>`, points as circles.
    pub fn to_dot(&self) -> String {
        use core::fmt::Write;
        let mut s = String::from("graph incidence {\n");
        for i in 0..self.line_count {
            let _ = writeln!(s, "  L{} [shape=box];", i);
        }
        for p in &self.points {
            let _ = writeln!(s, "  {} [shape=circle];", point_name(p));
        }
        for &(l, k) in &self.edges {
            let _ = writeln!(s, "  L{} -- {};", l, point_name(&self.points[k]));
        }
        s.push_str("}\n");
        s
    }
}

/// `P<i>_<j>_…` naming by incident lines.
pub fn point_name(p: &SingularPoint) -> String {
    point_label_from(&p.incident)
}

/// `P<i>_<j>_…` for a list of line indices.
pub fn point_label_from(lines: &[usize]) -> String {
    let mut s = String::from("P");
    for (k, i) in lines.iter().enumerate() {
        if k > 0 {
            s.push('_');
        }
        s.push_str(&alloc::format!("{}", i));
    }
    s
}

/// Builds the incidence graph of an arrangement.
pub fn incidence_graph(arr: &Arrangement) -> IncidenceGraph {
    let points = arr.singular_points();
    let mut edges = Vec::new();
    for (k, p) in points.iter().enumerate() {
        for &l in &p.incident {
            edges.push((l, k));
        }
    }
    edges.sort_unstable();
    IncidenceGraph { line_count: arr.lines().len(), points, edges }
}

/// The maximal tree `𝒯` and the generating cycles `ξ_{s,t}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleBasis {
    /// Tree edges `(line, point index)`; empty when built from combinatorics only.
    pub tree: Vec<(usize, usize)>,
    /// Pairs `(s, t)` with `s = ν(P)`, sorted lexicographically.
    pub cycles: Vec<(usize, usize)>,
}

impl CycleBasis {
    /// The cycle pairs `(ν(P), j)` for every affine point `P` and `j ∈ P∖{ν(P)}`.
    pub fn from_combinatorics(c: &Combinatorics) -> CycleBasis {
        let mut cycles: Vec<(usize, usize)> =
            c.affine_points.iter().flat_map(|p| p[1..].iter().map(move |&j| (p[0], j))).collect();
        cycles.sort_unstable();
        CycleBasis { tree: Vec::new(), cycles }
    }

    pub fn len(&self) -> usize {
        self.cycles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cycles.is_empty()
    }
}

/// Computes the maximal tree (all edges at points of `L₀`, plus `e(L_{ν(P)}, P)`
/// for affine `P`) and one cycle per remaining edge. The tree is checked to be
/// spanning and acyclic.
pub fn cycle_basis(graph: &IncidenceGraph) -> Result<CycleBasis, ArrangementError> {
    let mut tree = Vec::new();
    let mut cycles = Vec::new();
    for &(l, k) in &graph.edges {
        let p = &graph.points[k];
        if p.at_infinity || l == p.nu() {
            tree.push((l, k));
        } else {
            cycles.push((p.nu(), l));
        }
    }
    // Union-find over lines (0..L) and points (L..L+P).
    let nv = graph.vertex_count();
    let mut parent: Vec<usize> = (0..nv).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for &(l, k) in &tree {
        let a = find(&mut parent, l);
        let b = find(&mut parent, graph.line_count + k);
        if a == b {
            return Err(ArrangementError::TreeHasCycle);
        }
        parent[a] = b;
    }
    if tree.len() + 1 != nv {
        return Err(ArrangementError::Disconnected);
    }
    cycles.sort_unstable();
    Ok(CycleBasis { tree, cycles })
}

/// Multiplicity histogram `m ↦ #points`, split into affine and infinite points.
pub fn multiplicity_histogram(points: &[SingularPoint]) -> BTreeMap<(bool, usize), usize> {
    let mut h = BTreeMap::new();
    for p in points {
        *h.entry((p.at_infinity, p.multiplicity())).or_insert(0) += 1;
    }
    h
}
