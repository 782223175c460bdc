//! The inclusion of the boundary manifold into the complement: the correction
//! words `δˡ`, `δʳ` of the unknotting map, the retraction words `μ`, the
//! induced map `i*`, kernel generators, and the derived complement
//! presentations (framed, geometric, and Randell's for real diagrams).

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;

use crate::arrangement::{Combinatorics, CycleBasis};
use crate::arvola::LabeledDiagram;
use crate::boundary::{boundary_generators, point_family};
use crate::conventions::{MU_LEFT_LEG_SIGN, MU_RIGHT_LEG_SIGN};
use crate::simplify::{eliminate_generator, SimplifyError};
use crate::wiring::{BraidedWiringDiagram, EventKind};
use crate::words::{concat, Gen, GroupMap, Presentation, Relator, RelatorFamily, Word};

/// Errors of the inclusion pipeline.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum InclusionError {
    #[error("no actual crossing of lines {0} and {1} in the diagram")]
    MissingCrossing(usize, usize),
    #[error("crossing {point}: top strand is L{top}, not the minimal line L{nu}; the correction words are undefined")]
    TopNotMinimal { point: String, top: usize, nu: usize },
    #[error("cyclic dependency while eliminating e{0},{1}")]
    CyclicDependency(usize, usize),
    #[error("Randell's presentation needs a diagram without virtual crossings (found {0}); use the arvola or inclusion mode")]
    NotReal(usize),
    #[error(transparent)]
    Simplify(#[from] SimplifyError),
}

/// Which realization of the cycles the complement presentation uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Variant {
    /// Framed cycles `ε_{s,t} ↦ (δˡ)⁻¹ μ (δʳ)⁻¹`.
    #[default]
    Framed,
    /// Geometric cycles `𝓔_{s,t} ↦ μ`.
    Geometric,
}

/// The two legs of the cycle `ξ_{s,t}` in the diagram.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclePath {
    pub pair: (usize, usize),
    /// Event index of the actual crossing `P = L_s ∩ L_t`.
    pub crossing: usize,
    /// Events met by wire `s` before `P`, in increasing `t`.
    pub left_leg: Vec<usize>,
    /// Events met by wire `t` before `P`, in decreasing `t` (from `P` back).
    pub right_leg: Vec<usize>,
}

fn touches(kind: &EventKind, order: &[usize], wire: usize) -> bool {
    match kind {
        EventKind::Actual { lines, .. } => lines.contains(&wire),
        EventKind::Virtual { pos, .. } => order[pos - 1] == wire || order[*pos] == wire,
    }
}

/// Locates `P` and lists the events on both legs.
pub fn cycle_path(
    bwd: &BraidedWiringDiagram,
    orders: &[Vec<usize>],
    pair: (usize, usize),
) -> Result<CyclePath, InclusionError> {
    let (s, t) = pair;
    let kp = bwd.crossing_of(s, t).ok_or(InclusionError::MissingCrossing(s, t))?;
    let left_leg = (0..kp).filter(|&k| touches(&bwd.events[k].kind, &orders[k], s)).collect();
    let right_leg = (0..kp).rev().filter(|&k| touches(&bwd.events[k].kind, &orders[k], t)).collect();
    Ok(CyclePath { pair, crossing: kp, left_leg, right_leg })
}

fn crossing_lines(bwd: &BraidedWiringDiagram, k: usize) -> Option<&[usize]> {
    match &bwd.events[k].kind {
        EventKind::Actual { lines, .. } => Some(lines),
        EventKind::Virtual { .. } => None,
    }
}

fn check_top(lines: &[usize]) -> Result<usize, InclusionError> {
    let nu = *lines.iter().min().expect("nonempty");
    if lines[0] != nu {
        let mut sorted = lines.to_vec();
        sorted.sort_unstable();
        return Err(InclusionError::TopNotMinimal {
            point: crate::arrangement::point_label_from(&sorted),
            top: lines[0],
            nu,
        });
    }
    Ok(nu)
}

fn e(s: usize, t: usize) -> Word {
    Word::eps(s as u32, t as u32)
}

fn a(i: usize) -> Word {
    Word::alpha(i as u32)
}

/// The contribution of an actual crossing with lines `i₁…i_m` (top to
/// bottom) to `δˡ` when the cycle's wire is `i_h`.
pub fn left_contribution(lines: &[usize], wire: usize) -> Word {
    let i1 = lines[0];
    let h = lines.iter().position(|&l| l == wire).expect("wire at crossing") + 1;
    if h == 1 {
        return Word::identity();
    }
    let mut inner = a(i1).inverse();
    for &ij in &lines[1..h - 1] {
        inner = concat([&inner, &e(i1, ij), &a(ij).inverse(), &e(i1, ij).inverse()]);
    }
    inner.conj(&e(i1, wire))
}

/// The contribution of an actual crossing to `δʳ` when the cycle's wire is `i_h`.
pub fn right_contribution(lines: &[usize], wire: usize) -> Word {
    let i1 = lines[0];
    let h = lines.iter().position(|&l| l == wire).expect("wire at crossing") + 1;
    if h == 1 {
        return Word::identity();
    }
    let mut inner = Word::identity();
    for &ij in lines[1..h - 1].iter().rev() {
        inner = concat([&inner, &e(i1, ij), &a(ij), &e(i1, ij).inverse()]);
    }
    inner = inner.mul(&a(i1));
    inner.conj(&e(i1, wire))
}

/// `(δˡ_{s,t}, δʳ_{s,t})` for one cycle path.
pub fn delta_words(bwd: &BraidedWiringDiagram, path: &CyclePath) -> Result<(Word, Word), InclusionError> {
    let (s, t) = path.pair;
    let mut dl = Word::identity();
    for &k in &path.left_leg {
        if let Some(lines) = crossing_lines(bwd, k) {
            check_top(lines)?;
            dl = dl.mul(&left_contribution(lines, s));
        }
    }
    let mut dr = Word::identity();
    for &k in &path.right_leg {
        if let Some(lines) = crossing_lines(bwd, k) {
            check_top(lines)?;
            dr = dr.mul(&right_contribution(lines, t));
        }
    }
    Ok((dl, dr))
}

/// One over arc met by a cycle: event index, label of the over strand and
/// the signed exponent it enters `μ` with.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OverArc {
    pub event: usize,
    pub over_line: usize,
    pub label: Word,
    pub sign: i8,
}

/// Over arcs along the traversal (left leg, then right leg).
pub fn over_arcs(bwd: &BraidedWiringDiagram, labeled: &LabeledDiagram, path: &CyclePath) -> Vec<OverArc> {
    let (s, t) = path.pair;
    let mut out = Vec::new();
    let mut visit = |k: usize, wire: usize, leg_sign: i8| {
        if let EventKind::Virtual { pos, sign } = bwd.events[k].kind {
            let snap = &labeled.snapshots[k];
            let (up, lo) = (snap.order_before[pos - 1], snap.order_before[pos]);
            let over = if sign > 0 { up } else { lo };
            if over != wire {
                out.push(OverArc {
                    event: k,
                    over_line: over,
                    label: snap.labels_before[over].clone(),
                    sign: sign * leg_sign,
                });
            }
        }
    };
    for &k in &path.left_leg {
        visit(k, s, MU_LEFT_LEG_SIGN);
    }
    for &k in &path.right_leg {
        visit(k, t, MU_RIGHT_LEG_SIGN);
    }
    out
}

/// `μ_{s,t} = ∏ a_ς^{sgn(ς)}` over the over arcs, in traversal order.
pub fn mu(bwd: &BraidedWiringDiagram, labeled: &LabeledDiagram, path: &CyclePath) -> Word {
    let arcs = over_arcs(bwd, labeled, path);
    let parts: Vec<Word> = arcs.iter().map(|o| if o.sign > 0 { o.label.clone() } else { o.label.inverse() }).collect();
    concat(parts.iter())
}

/// Per-pair data of the inclusion map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InclusionData {
    pub pair: (usize, usize),
    pub delta_left: Word,
    pub delta_right: Word,
    pub mu: Word,
    /// `(δˡ)⁻¹ μ (δʳ)⁻¹`, still containing other `ε` generators.
    pub image: Word,
    /// `δˡ ε δʳ μ⁻¹`.
    pub kernel: Word,
}

impl InclusionData {
    /// `δ(ε_{s,t}) = δˡ ε_{s,t} δʳ`.
    pub fn unknotted(&self) -> Word {
        concat([&self.delta_left, &e(self.pair.0, self.pair.1), &self.delta_right])
    }
}

/// All per-pair data for a diagram and basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InclusionTable {
    pub n: usize,
    pub rows: Vec<InclusionData>,
}

impl InclusionTable {
    pub fn get(&self, pair: (usize, usize)) -> Option<&InclusionData> {
        self.rows.iter().find(|r| r.pair == pair)
    }
}

/// Computes `δˡ, δʳ, μ`, the framed image and the kernel word for every pair.
pub fn inclusion_table(
    bwd: &BraidedWiringDiagram,
    labeled: &LabeledDiagram,
    basis: &CycleBasis,
) -> Result<InclusionTable, InclusionError> {
    let orders = bwd.orders();
    let mut rows = Vec::with_capacity(basis.cycles.len());
    for &pair in &basis.cycles {
        let path = cycle_path(bwd, &orders, pair)?;
        let (dl, dr) = delta_words(bwd, &path)?;
        let m = mu(bwd, labeled, &path);
        let image = concat([&dl.inverse(), &m, &dr.inverse()]);
        let kernel = concat([&dl, &e(pair.0, pair.1), &dr, &m.inverse()]);
        rows.push(InclusionData { pair, delta_left: dl, delta_right: dr, mu: m, image, kernel });
    }
    Ok(InclusionTable { n: bwd.n, rows })
}

/// The unknotting map: `αᵢ ↦ αᵢ`, `ε_{s,t} ↦ δˡ ε_{s,t} δʳ`.
pub fn unknotting_map(table: &InclusionTable) -> GroupMap {
    let mut m = GroupMap::identity_on((0..=table.n).map(|i| Gen::Alpha(i as u32)));
    for r in &table.rows {
        m.insert(Gen::Eps(r.pair.0 as u32, r.pair.1 as u32), r.unknotted());
    }
    m
}

/// Framed images with every `ε` recursively replaced by its own image, so
/// each result is a word in the meridians only.
pub fn eliminated_images(table: &InclusionTable) -> Result<BTreeMap<(usize, usize), Word>, InclusionError> {
    fn visit(
        pair: (usize, usize),
        table: &InclusionTable,
        done: &mut BTreeMap<(usize, usize), Word>,
        active: &mut Vec<(usize, usize)>,
    ) -> Result<Word, InclusionError> {
        if let Some(w) = done.get(&pair) {
            return Ok(w.clone());
        }
        if active.contains(&pair) {
            return Err(InclusionError::CyclicDependency(pair.0, pair.1));
        }
        let row = table.get(pair).ok_or(InclusionError::MissingCrossing(pair.0, pair.1))?;
        active.push(pair);
        let mut out = Word::identity();
        for l in row.image.letters() {
            let piece = match l.gen {
                Gen::Eps(s, t) => visit((s as usize, t as usize), table, done, active)?,
                g => Word::gen(g),
            };
            out = out.mul(&if l.inv { piece.inverse() } else { piece });
        }
        active.pop();
        done.insert(pair, out.clone());
        Ok(out)
    }
    let mut done = BTreeMap::new();
    let mut active = Vec::new();
    for r in &table.rows {
        visit(r.pair, table, &mut done, &mut active)?;
    }
    Ok(done)
}

/// The induced map `i*` on generators (`αᵢ ↦ αᵢ` for `i = 0..n`).
///
/// Framed: `ε_{s,t} ↦` its eliminated image. Geometric: the `Eps` generators
/// stand for the geometric cycles `𝓔_{s,t}` and map to `μ_{s,t}`.
pub fn inclusion_map(table: &InclusionTable, variant: Variant) -> Result<GroupMap, InclusionError> {
    let mut m = GroupMap::identity_on((0..=table.n).map(|i| Gen::Alpha(i as u32)));
    match variant {
        Variant::Framed => {
            for (pair, w) in eliminated_images(table)? {
                m.insert(Gen::Eps(pair.0 as u32, pair.1 as u32), w);
            }
        }
        Variant::Geometric => {
            for r in &table.rows {
                m.insert(Gen::Eps(r.pair.0 as u32, r.pair.1 as u32), r.mu.clone());
            }
        }
    }
    Ok(m)
}

/// The product `α₀α₁⋯αₙ`.
pub fn meridian_product(n: usize) -> Word {
    let parts: Vec<Word> = (0..=n).map(a).collect();
    concat(parts.iter())
}

/// Kernel generators: `δˡ ε δʳ μ⁻¹` for every pair, then `α₀⋯αₙ`.
pub fn kernel_generators(table: &InclusionTable) -> Vec<Word> {
    let mut out: Vec<Word> = table.rows.iter().map(|r| r.kernel.clone()).collect();
    out.push(meridian_product(table.n));
    out
}

/// The presentation before elimination: generators `α₀…αₙ` and the `ε`,
/// relations `ε_{s,t} = c_{s,t}`, the boundary families, and `α₀⋯αₙ = 1`.
pub fn unreduced_presentation(
    comb: &Combinatorics,
    basis: &CycleBasis,
    table: &InclusionTable,
    variant: Variant,
) -> Presentation {
    let mut relators = Vec::new();
    for r in &table.rows {
        let c = match variant {
            Variant::Framed => r.image.clone(),
            Variant::Geometric => r.mu.clone(),
        };
        relators.push(Relator::Word(e(r.pair.0, r.pair.1).inverse().mul(&c)));
    }
    for p in &comb.affine_points {
        relators.push(Relator::Family(point_family(p, e)));
    }
    relators.push(Relator::Word(meridian_product(comb.n)));
    Presentation::new(boundary_generators(comb.n, basis), relators)
}

/// The minimal complement presentation `⟨α₁…αₙ | ⋃ R_P⟩` obtained by
/// eliminating every `ε` (by its meridian-only image) and then `α₀`.
pub fn complement_presentation_inclusion(
    comb: &Combinatorics,
    basis: &CycleBasis,
    table: &InclusionTable,
    variant: Variant,
) -> Result<Presentation, InclusionError> {
    let mut p = unreduced_presentation(comb, basis, table, variant);
    let images = inclusion_map(table, variant)?;
    for &(s, t) in &basis.cycles {
        let g = Gen::Eps(s as u32, t as u32);
        let def = images.get(g).cloned().ok_or(InclusionError::MissingCrossing(s, t))?;
        p = eliminate_generator(&p, g, &def)?;
    }
    let rest: Vec<Word> = (1..=comb.n).map(a).collect();
    p = eliminate_generator(&p, Gen::Alpha(0), &concat(rest.iter()).inverse())?;
    Ok(p)
}

/// The families of the minimal presentation, built directly from the
/// conjugators (`c_{s,t}` framed, `μ_{s,t}` geometric).
pub fn complement_families(
    comb: &Combinatorics,
    table: &InclusionTable,
    variant: Variant,
) -> Result<Vec<RelatorFamily>, InclusionError> {
    let m = inclusion_map(table, variant)?;
    Ok(comb
        .affine_points
        .iter()
        .map(|p| point_family(p, |s, t| m.get(Gen::Eps(s as u32, t as u32)).cloned().unwrap_or_default()))
        .collect())
}

/// Randell's presentation of a real diagram: `[α_{i_m}, …, α_{i₁}]` per
/// actual crossing, lines top to bottom on the left of the crossing.
pub fn randell_presentation(bwd: &BraidedWiringDiagram) -> Result<Presentation, InclusionError> {
    let v = bwd.virtual_count();
    if v > 0 {
        return Err(InclusionError::NotReal(v));
    }
    let relators = bwd
        .events
        .iter()
        .filter_map(|ev| match &ev.kind {
            EventKind::Actual { lines, .. } => {
                Some(Relator::Family(RelatorFamily::new(lines.iter().rev().map(|&l| a(l)).collect())))
            }
            _ => None,
        })
        .collect();
    Ok(Presentation::new((1..=bwd.n).map(|i| Gen::Alpha(i as u32)).collect(), relators))
}

/// Substitutes `α₀ = (α₁⋯αₙ)⁻¹`.
pub fn substitute_alpha0(n: usize, w: &Word) -> Word {
    let rest: Vec<Word> = (1..=n).map(a).collect();
    let mut m = GroupMap::new();
    m.insert(Gen::Alpha(0), concat(rest.iter()).inverse());
    m.apply_partial(w)
}
