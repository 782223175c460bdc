//! Braided wiring diagrams: the data model, strand bookkeeping, and exact
//! computation from an arrangement along a piecewise-linear admissible path.
//!
//! Strand positions are 1-based and counted top to bottom. "Top" means the
//! smallest real part of the `y`-coordinate in the fiber.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::arrangement::{point_label_from as point_label, Arrangement, Combinatorics};
use crate::conventions::{OverRule, OVER_RULE, POSITIVE_WHEN_OVER_DESCENDS};
use crate::exactnum::{FieldDesc, QuadElem};

/// An event of a braided wiring diagram.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EventKind {
    /// A multiple point: strands `top_pos..top_pos+m−1` meet and reverse.
    /// `lines` lists their lines top to bottom on the left of the crossing.
    Actual { top_pos: usize, lines: Vec<usize> },
    /// Strands `pos` and `pos+1` swap; `sign = +1` when the upper strand
    /// passes over (moving down), `−1` when the lower strand passes over.
    Virtual { pos: usize, sign: i8 },
}

/// An event at path parameter `t`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WiringEvent {
    pub t: BigRational,
    pub kind: EventKind,
}

impl WiringEvent {
    pub fn is_actual(&self) -> bool {
        matches!(self.kind, EventKind::Actual { .. })
    }
}

/// Where a diagram came from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Source {
    File,
    /// Computed at the given shear. `relabel[k]` is the original index of the
    /// line numbered `k` in the diagram (`relabel[0] = 0`).
    Computed {
        shear: QuadElem,
        relabel: Vec<usize>,
    },
}

/// A braided wiring diagram on `n` strands.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BraidedWiringDiagram {
    pub n: usize,
    /// Lines top to bottom at the base fiber.
    pub initial_order: Vec<usize>,
    /// Events sorted by strictly increasing `t`.
    pub events: Vec<WiringEvent>,
    pub source: Source,
}

/// Errors of diagram validation and computation.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum WiringError {
    #[error("initial order must be a permutation of 1..={0}")]
    BadInitialOrder(usize),
    #[error("event {index}: {msg}")]
    BadEvent { index: usize, msg: String },
    #[error("event {0}: t is not strictly larger than the previous event's t")]
    UnsortedT(usize),
    #[error("L0 must be the line z = 0 for the affine wiring computation")]
    InfinityNotStandard,
    #[error("non-generic shear: line L{0} is vertical")]
    Vertical(usize),
    #[error("non-generic shear: points {0} and {1} lie in the same fiber")]
    SameFiber(String, String),
    #[error("non-generic shear: points {0} and {1} have the same real x-part")]
    SameRealPart(String, String),
    #[error("non-generic shear: {0}")]
    Collision(String),
    #[error("no generic shear found among the first {0} candidates")]
    ShearSearchExhausted(usize),
}

fn bad(index: usize, msg: impl Into<String>) -> WiringError {
    WiringError::BadEvent { index, msg: msg.into() }
}

impl BraidedWiringDiagram {
    /// Builds and validates a diagram (strand bookkeeping, `t` ordering).
    pub fn new(
        n: usize,
        initial_order: Vec<usize>,
        events: Vec<WiringEvent>,
        source: Source,
    ) -> Result<BraidedWiringDiagram, WiringError> {
        let d = BraidedWiringDiagram { n, initial_order, events, source };
        d.validate()?;
        Ok(d)
    }

    /// Checks the permutation bookkeeping event by event.
    pub fn validate(&self) -> Result<(), WiringError> {
        let mut sorted = self.initial_order.clone();
        sorted.sort_unstable();
        if sorted != (1..=self.n).collect::<Vec<_>>() {
            return Err(WiringError::BadInitialOrder(self.n));
        }
        let mut order = self.initial_order.clone();
        for (k, ev) in self.events.iter().enumerate() {
            if k > 0 && ev.t <= self.events[k - 1].t {
                return Err(WiringError::UnsortedT(k));
            }
            match &ev.kind {
                EventKind::Actual { top_pos, lines } => {
                    let m = lines.len();
                    if m < 2 {
                        return Err(bad(k, "actual crossing needs at least two strands"));
                    }
                    if *top_pos < 1 || top_pos + m - 1 > self.n {
                        return Err(bad(k, alloc::format!("positions {}..{} out of range", top_pos, top_pos + m - 1)));
                    }
                    let block = &order[top_pos - 1..top_pos - 1 + m];
                    if block != lines.as_slice() {
                        return Err(bad(
                            k,
                            alloc::format!(
                                "lines {:?} do not match strands {:?} at positions {}..",
                                lines,
                                block,
                                top_pos
                            ),
                        ));
                    }
                    order[top_pos - 1..top_pos - 1 + m].reverse();
                }
                EventKind::Virtual { pos, sign } => {
                    if *pos < 1 || pos + 1 > self.n {
                        return Err(bad(k, alloc::format!("virtual position {} out of range", pos)));
                    }
                    if *sign != 1 && *sign != -1 {
                        return Err(bad(k, "virtual sign must be +1 or -1"));
                    }
                    order.swap(pos - 1, *pos);
                }
            }
        }
        Ok(())
    }

    /// Strand order before each event, followed by the final order.
    pub fn orders(&self) -> Vec<Vec<usize>> {
        let mut out = Vec::with_capacity(self.events.len() + 1);
        let mut order = self.initial_order.clone();
        out.push(order.clone());
        for ev in &self.events {
            apply_event(&mut order, &ev.kind);
            out.push(order.clone());
        }
        out
    }

    pub fn actual_count(&self) -> usize {
        self.events.iter().filter(|e| e.is_actual()).count()
    }

    pub fn virtual_count(&self) -> usize {
        self.events.len() - self.actual_count()
    }

    /// Affine combinatorics recovered from the actual crossings.
    pub fn combinatorics(&self) -> Combinatorics {
        let pts = self
            .events
            .iter()
            .filter_map(|e| match &e.kind {
                EventKind::Actual { lines, .. } => Some(lines.clone()),
                _ => None,
            })
            .collect();
        Combinatorics::new(self.n, pts)
    }

    /// True when the top strand of every actual crossing is its minimal line
    /// (the condition under which the correction words are defined).
    pub fn tops_minimal(&self) -> bool {
        self.events.iter().all(|e| match &e.kind {
            EventKind::Actual { lines, .. } => lines.iter().min() == lines.first(),
            _ => true,
        })
    }

    /// Index of the actual crossing where lines `s` and `t` meet.
    pub fn crossing_of(&self, s: usize, t: usize) -> Option<usize> {
        self.events.iter().position(|e| match &e.kind {
            EventKind::Actual { lines, .. } => lines.contains(&s) && lines.contains(&t),
            _ => false,
        })
    }

    /// Follows each wire through the events and checks that the resulting
    /// final order equals the composed permutation (`orders().last()`).
    pub fn permutation_consistent(&self) -> bool {
        // Position of each line tracked independently of the order vector.
        let mut pos: BTreeMap<usize, usize> = self.initial_order.iter().enumerate().map(|(p, &l)| (l, p + 1)).collect();
        for ev in &self.events {
            match &ev.kind {
                EventKind::Actual { top_pos, lines } => {
                    let m = lines.len();
                    for (k, l) in lines.iter().enumerate() {
                        if pos.get(l) != Some(&(top_pos + k)) {
                            return false;
                        }
                        pos.insert(*l, top_pos + m - 1 - k);
                    }
                }
                EventKind::Virtual { pos: p, .. } => {
                    let (mut a, mut b) = (None, None);
                    for (l, q) in pos.iter() {
                        if *q == *p {
                            a = Some(*l);
                        } else if *q == p + 1 {
                            b = Some(*l);
                        }
                    }
                    match (a, b) {
                        (Some(a), Some(b)) => {
                            pos.insert(a, p + 1);
                            pos.insert(b, *p);
                        }
                        _ => return false,
                    }
                }
            }
        }
        let mut fin = alloc::vec![0usize; self.n];
        for (l, p) in pos {
            if p < 1 || p > self.n || fin[p - 1] != 0 {
                return false;
            }
            fin[p - 1] = l;
        }
        self.orders().last() == Some(&fin)
    }
}

pub(crate) fn apply_event(order: &mut [usize], kind: &EventKind) {
    match kind {
        EventKind::Actual { top_pos, lines } => order[top_pos - 1..top_pos - 1 + lines.len()].reverse(),
        EventKind::Virtual { pos, .. } => order.swap(pos - 1, *pos),
    }
}

// ----- geometry ---------------------------------------------------------

/// A wire `y = p + q·x` over the sheared `x`-plane.
struct Wire {
    p: QuadElem,
    q: QuadElem,
}

impl Wire {
    fn at(&self, x: &QuadElem) -> QuadElem {
        &self.p + &(&self.q * x)
    }
}

/// Wires after the shear `x ↦ x + λy`, i.e. substituting `x = x' − λy`.
fn sheared_wires(arr: &Arrangement, shear: &QuadElem) -> Result<Vec<Wire>, WiringError> {
    let l0 = &arr.lines()[0].coeffs;
    if !(l0[0].is_zero() && l0[1].is_zero()) {
        return Err(WiringError::InfinityNotStandard);
    }
    let mut wires = Vec::with_capacity(arr.n());
    for l in &arr.lines()[1..] {
        let [a, b, c] = &l.coeffs;
        let b2 = b - &(a * shear);
        if b2.is_zero() {
            return Err(WiringError::Vertical(l.index));
        }
        let inv = b2.try_inv().expect("nonzero");
        wires.push(Wire { p: -(c * &inv), q: -(a * &inv) });
    }
    Ok(wires)
}

struct FiberPoint {
    x: QuadElem,
    lines: Vec<usize>,
}

/// Affine singular points grouped by fiber, checking that distinct points
/// have distinct `x` and distinct `Re(x)`. Sorted by `Re(x)`.
fn fiber_points(wires: &[Wire]) -> Result<Vec<FiberPoint>, WiringError> {
    // x ↦ (y, lines)
    let mut by_x: Vec<(QuadElem, QuadElem, Vec<usize>)> = Vec::new();
    for i in 0..wires.len() {
        for j in i + 1..wires.len() {
            let dq = &wires[i].q - &wires[j].q;
            if dq.is_zero() {
                continue; // parallel: the lines meet on L0
            }
            let x = (&wires[j].p - &wires[i].p).try_div(&dq).expect("nonzero");
            let y = wires[i].at(&x);
            match by_x.iter_mut().find(|(bx, _, _)| *bx == x) {
                Some((_, by, ls)) => {
                    if *by != y {
                        let mut other = ls.clone();
                        other.sort_unstable();
                        return Err(WiringError::SameFiber(point_label(&other), point_label(&[i + 1, j + 1])));
                    }
                    for l in [i + 1, j + 1] {
                        if !ls.contains(&l) {
                            ls.push(l);
                        }
                    }
                }
                None => by_x.push((x, y, alloc::vec![i + 1, j + 1])),
            }
        }
    }
    let mut pts: Vec<FiberPoint> = by_x
        .into_iter()
        .map(|(x, _, mut lines)| {
            lines.sort_unstable();
            FiberPoint { x, lines }
        })
        .collect();
    pts.sort_by(|a, b| a.x.re_part().cmp(b.x.re_part()));
    for w in pts.windows(2) {
        if w[0].x.re_part() == w[1].x.re_part() {
            return Err(WiringError::SameRealPart(point_label(&w[0].lines), point_label(&w[1].lines)));
        }
    }
    Ok(pts)
}

struct RawEvent {
    t: BigRational,
    i: usize,
    j: usize,
    x: QuadElem,
}

/// Computes the braided wiring diagram of `arr` after the shear `x ↦ x + λy`.
///
/// The path starts at `x₀ = x₁ − 1`, runs horizontally through
/// `[xₖ − h, xₖ + h]` around each singular value and straight in between,
/// with `h` a quarter of the smallest gap of real parts. Each crossing is the
/// exact rational root of `Re(yᵢ − yⱼ) = 0` on a segment. The lines are
/// renumbered so that the base-fiber order is `1..n`; see [`Source::Computed`].
pub fn compute_wiring(arr: &Arrangement, shear: &QuadElem) -> Result<BraidedWiringDiagram, WiringError> {
    let field = arr.field();
    let wires = sheared_wires(arr, shear)?;
    let n = wires.len();
    let pts = fiber_points(&wires)?;
    let quarter = BigRational::new(1.into(), 4.into());
    let h = if pts.len() >= 2 {
        pts.windows(2).map(|w| w[1].x.re_part() - w[0].x.re_part()).min().expect("nonempty") * &quarter
    } else {
        quarter.clone()
    };
    let hq = QuadElem::from_rational(h, field);
    let one = QuadElem::one(field);
    let x0 = match pts.first() {
        Some(p) => &p.x - &one,
        None => QuadElem::zero(field),
    };
    let mut verts = alloc::vec![x0.clone()];
    for p in &pts {
        verts.push(&p.x - &hq);
        verts.push(&p.x + &hq);
    }

    // Base-fiber order by increasing Re(y).
    let mut initial: Vec<usize> = (1..=n).collect();
    let y0: Vec<BigRational> = wires.iter().map(|w| w.at(&x0).re_part().clone()).collect();
    initial.sort_by(|&a, &b| y0[a - 1].cmp(&y0[b - 1]));
    for w in initial.windows(2) {
        if y0[w[0] - 1] == y0[w[1] - 1] {
            return Err(WiringError::Collision(alloc::format!("wires {} and {} tie at the base fiber", w[0], w[1])));
        }
    }

    // Crossing instants on each segment, τ ∈ (0, 1].
    let mut raw: Vec<RawEvent> = Vec::new();
    for (si, seg) in verts.windows(2).enumerate() {
        let (a, b) = (&seg[0], &seg[1]);
        let dir = b - a;
        for i in 0..n {
            for j in i + 1..n {
                let dp = &wires[i].p - &wires[j].p;
                let dq = &wires[i].q - &wires[j].q;
                let d0 = &dp + &(&dq * a);
                let d1 = &dq * &dir;
                if d1.re_part().is_zero() {
                    if d0.re_part().is_zero() {
                        return Err(WiringError::Collision(alloc::format!(
                            "wires {} and {} share a real part along segment {}",
                            i + 1,
                            j + 1,
                            si
                        )));
                    }
                    continue;
                }
                let tau = -(d0.re_part() / d1.re_part());
                if tau.is_positive() && tau <= BigRational::one() {
                    let x = a + &dir.scale(&tau);
                    let t = BigRational::from_integer((si as i64).into()) + &tau;
                    raw.push(RawEvent { t, i: i + 1, j: j + 1, x });
                }
            }
        }
    }
    raw.sort_by(|a, b| a.t.cmp(&b.t).then(a.i.cmp(&b.i)).then(a.j.cmp(&b.j)));

    let mut order = initial.clone();
    let mut events = Vec::new();
    let mut k = 0;
    while k < raw.len() {
        let mut e = k + 1;
        while e < raw.len() && raw[e].t == raw[k].t {
            e += 1;
        }
        let group = &raw[k..e];
        let x = &group[0].x;
        let meets: Vec<bool> = group.iter().map(|r| (wires[r.i - 1].at(x) - wires[r.j - 1].at(x)).is_zero()).collect();
        let kind = if meets.iter().all(|&m| m) {
            let mut lines: Vec<usize> = group.iter().flat_map(|r| [r.i, r.j]).collect();
            lines.sort_unstable();
            lines.dedup();
            let m = lines.len();
            if group.len() != m * (m - 1) / 2 || !pts.iter().any(|p| p.lines == lines) {
                return Err(WiringError::Collision(alloc::format!("crossings coincide at t = {}", raw[k].t)));
            }
            let positions: Vec<usize> =
                lines.iter().map(|l| order.iter().position(|o| o == l).expect("line in order") + 1).collect();
            let top = *positions.iter().min().expect("nonempty");
            if positions.iter().max().expect("nonempty") - top + 1 != m {
                return Err(WiringError::Collision(alloc::format!(
                    "another wire passes through {} at t = {}",
                    point_label(&lines),
                    raw[k].t
                )));
            }
            EventKind::Actual { top_pos: top, lines: order[top - 1..top - 1 + m].to_vec() }
        } else if group.len() == 1 {
            let r = &group[0];
            let pi = order.iter().position(|&o| o == r.i).expect("line") + 1;
            let pj = order.iter().position(|&o| o == r.j).expect("line") + 1;
            let (upos, upper, lower) = if pi < pj { (pi, r.i, r.j) } else { (pj, r.j, r.i) };
            if pi.abs_diff(pj) != 1 {
                return Err(WiringError::Collision(alloc::format!(
                    "wires {} and {} are not adjacent at t = {}",
                    r.i,
                    r.j,
                    r.t
                )));
            }
            let yu = wires[upper - 1].at(x);
            let yl = wires[lower - 1].at(x);
            let over_is_upper = match (OVER_RULE, yu.cmp_im(&yl)) {
                (_, Ordering::Equal) => unreachable!("equal imaginary parts would be a meeting"),
                (OverRule::LesserImaginary, ord) => ord == Ordering::Less,
                (OverRule::GreaterImaginary, ord) => ord == Ordering::Greater,
            };
            let sign = if over_is_upper == POSITIVE_WHEN_OVER_DESCENDS { 1 } else { -1 };
            EventKind::Virtual { pos: upos, sign }
        } else {
            return Err(WiringError::Collision(alloc::format!(
                "{} crossings coincide at t = {}",
                group.len(),
                raw[k].t
            )));
        };
        apply_event(&mut order, &kind);
        events.push(WiringEvent { t: raw[k].t.clone(), kind });
        k = e;
    }

    // Renumber lines so the base order reads 1..n.
    let mut relabel = alloc::vec![0usize; n + 1];
    let mut to_new = alloc::vec![0usize; n + 1];
    for (p, &l) in initial.iter().enumerate() {
        relabel[p + 1] = l;
        to_new[l] = p + 1;
    }
    for ev in &mut events {
        if let EventKind::Actual { lines, .. } = &mut ev.kind {
            for l in lines.iter_mut() {
                *l = to_new[*l];
            }
        }
    }
    BraidedWiringDiagram::new(n, (1..=n).collect(), events, Source::Computed { shear: shear.clone(), relabel })
}

/// The rational search sequence `0, 1, −1, 1/2, −1/2, 2, −2, 1/3, …`
/// (by height `max(|p|, q)`, then by value).
pub fn rational_sequence() -> impl Iterator<Item = BigRational> {
    let mut height = 0i64;
    let mut buf: Vec<BigRational> = Vec::new();
    core::iter::from_fn(move || {
        while buf.is_empty() {
            if height == 0 {
                buf.push(BigRational::zero());
            } else {
                let mut pos: Vec<BigRational> = Vec::new();
                for q in 1..=height {
                    for p in 1..=height {
                        if (p == height || q == height) && num_integer::gcd(p, q) == 1 {
                            pos.push(BigRational::new(p.into(), q.into()));
                        }
                    }
                }
                pos.sort();
                for r in pos.into_iter().rev() {
                    buf.push(-r.clone());
                    buf.push(r);
                }
            }
            height += 1;
        }
        buf.pop()
    })
}

/// Shear candidates: real values from [`rational_sequence`] for real
/// arrangements; for complex ones, `p + q√−d` enumerated by the larger of the
/// two sequence indices (real candidates first within each level).
pub fn shear_candidates(field: FieldDesc, real_only: bool) -> impl Iterator<Item = QuadElem> {
    let mut seq: Vec<BigRational> = Vec::new();
    let mut gen = rational_sequence();
    let mut level = 0usize;
    let mut pending: Vec<QuadElem> = Vec::new();
    core::iter::from_fn(move || {
        while pending.is_empty() {
            while seq.len() <= level {
                seq.push(gen.next().expect("infinite sequence"));
            }
            let k = level;
            let mut next = alloc::vec![QuadElem::from_rational(seq[k].clone(), field)];
            if !real_only {
                for b in 1..=k {
                    if b < k {
                        next.push(QuadElem::new(seq[k].clone(), seq[b].clone(), field));
                    } else {
                        for a in 0..=k {
                            next.push(QuadElem::new(seq[a].clone(), seq[k].clone(), field));
                        }
                    }
                }
            }
            next.reverse();
            pending = next;
            level += 1;
        }
        pending.pop()
    })
}

/// Returns the first generic shear among the first `max_candidates`
/// candidates of [`shear_candidates`].
pub fn find_shear(arr: &Arrangement, max_candidates: usize) -> Result<QuadElem, WiringError> {
    find_shear_where(arr, max_candidates, |_| true)
}

/// Returns the first generic shear whose diagram also satisfies `accept`.
pub fn find_shear_where<F: FnMut(&BraidedWiringDiagram) -> bool>(
    arr: &Arrangement,
    max_candidates: usize,
    mut accept: F,
) -> Result<QuadElem, WiringError> {
    if let Err(e) = sheared_wires(arr, &QuadElem::zero(arr.field())) {
        if e == WiringError::InfinityNotStandard {
            return Err(e);
        }
    }
    for lam in shear_candidates(arr.field(), arr.is_real()).take(max_candidates) {
        if let Ok(d) = compute_wiring(arr, &lam) {
            if accept(&d) {
                return Ok(lam);
            }
        }
    }
    Err(WiringError::ShearSearchExhausted(max_candidates))
}

/// Default bound for [`find_shear`].
pub const DEFAULT_SHEAR_CANDIDATES: usize = 10_000;

/// Checks that the actual crossings of a computed diagram biject with the
/// affine singular points of the (renumbered) arrangement.
pub fn crossings_match_points(bwd: &BraidedWiringDiagram, arr: &Arrangement) -> bool {
    bwd.combinatorics() == arr.combinatorics()
}
