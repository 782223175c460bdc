//! Arvola's labelling of a braided wiring diagram and the resulting
//! presentation of the complement group.
//!
//! Labels are words in the meridians. At a virtual crossing of sign +1 the
//! upper strand is over: `(aᵢ, aⱼ) ↦ (aⱼ^{aᵢ}, aᵢ)`. At sign −1 the lower
//! strand is over: `(aᵢ, aⱼ) ↦ (aⱼ, aᵢ^{aⱼ⁻¹})`. At an actual crossing with
//! incoming labels `a₁, …, a_m` (top to bottom) the block reverses and the
//! strand that entered at position `k` leaves labelled `a_k^{a_{k−1}⋯a₁}`,
//! up to the simplifications selected by [`LabelRule`].

use alloc::vec::Vec;

use crate::wiring::{BraidedWiringDiagram, EventKind};
use crate::words::{Gen, Presentation, Relator, RelatorFamily, Word};

/// How outgoing labels at an actual crossing are written.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum LabelRule {
    /// `a_m` for the strand leaving on top; `a_k^{a_{k−1}⋯a₁}` otherwise.
    #[default]
    Generic,
    /// As `Generic`, but the second strand from the top leaves as
    /// `a_{m−1}^{a_m⁻¹}` (equal modulo the crossing's relations).
    Simplified,
    /// The literal conjugates `a_k^{a_{k−1}⋯a₁}` for every strand.
    Raw,
}

/// Labels around one event.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EventSnapshot {
    /// Lines top to bottom before the event.
    pub order_before: Vec<usize>,
    /// Label of each line before the event, indexed by line (index 0 unused).
    pub labels_before: Vec<Word>,
    pub order_after: Vec<usize>,
    pub labels_after: Vec<Word>,
}

/// A diagram with every arc labelled.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledDiagram {
    pub rule: LabelRule,
    pub snapshots: Vec<EventSnapshot>,
    /// Labels after the last event, indexed by line.
    pub final_labels: Vec<Word>,
}

impl LabeledDiagram {
    /// Incoming labels top to bottom at event `k`.
    pub fn incoming(&self, k: usize) -> Vec<Word> {
        let s = &self.snapshots[k];
        s.order_before.iter().map(|&l| s.labels_before[l].clone()).collect()
    }
}

/// Runs the labelling fold from left to right.
pub fn label_diagram(bwd: &BraidedWiringDiagram, rule: LabelRule) -> LabeledDiagram {
    let mut labels: Vec<Word> = (0..=bwd.n).map(|i| Word::alpha(i as u32)).collect();
    labels[0] = Word::identity();
    let mut order = bwd.initial_order.clone();
    let mut snapshots = Vec::with_capacity(bwd.events.len());
    for ev in &bwd.events {
        let order_before = order.clone();
        let labels_before = labels.clone();
        match &ev.kind {
            EventKind::Actual { top_pos, lines } => {
                let m = lines.len();
                let a: Vec<Word> = lines.iter().map(|&l| labels[l].clone()).collect();
                // prefix[k] = a_{k}⋯a_1 (1-based k), prefix[0] = 1
                let mut prefix = alloc::vec![Word::identity()];
                for w in &a {
                    let p = w.mul(prefix.last().expect("nonempty"));
                    prefix.push(p);
                }
                for (k0, &line) in lines.iter().enumerate() {
                    let k = k0 + 1;
                    let generic = a[k0].conj(&prefix[k0]);
                    labels[line] = match rule {
                        LabelRule::Raw => generic,
                        LabelRule::Generic => {
                            if k == m {
                                a[k0].clone()
                            } else {
                                generic
                            }
                        }
                        LabelRule::Simplified => {
                            if k == m {
                                a[k0].clone()
                            } else if k == m - 1 && m >= 3 {
                                a[k0].conj(&a[m - 1].inverse())
                            } else {
                                generic
                            }
                        }
                    };
                }
                order[top_pos - 1..top_pos - 1 + m].reverse();
            }
            EventKind::Virtual { pos, sign } => {
                let (u, l) = (order[pos - 1], order[*pos]);
                if *sign > 0 {
                    labels[l] = labels[l].conj(&labels[u]);
                } else {
                    labels[u] = labels[u].conj(&labels[l].inverse());
                }
                order.swap(pos - 1, *pos);
            }
        }
        snapshots.push(EventSnapshot {
            order_before,
            labels_before,
            order_after: order.clone(),
            labels_after: labels.clone(),
        });
    }
    LabeledDiagram { rule, snapshots, final_labels: labels }
}

/// The family `[a_m, …, a₁]` of an actual crossing, from its incoming labels
/// `a₁, …, a_m` (top to bottom).
pub fn crossing_family(incoming_top_to_bottom: &[Word]) -> RelatorFamily {
    RelatorFamily::new(incoming_top_to_bottom.iter().rev().cloned().collect())
}

/// Arvola's presentation: generators `α₁…αₙ`, one family per actual crossing.
pub fn complement_presentation_arvola(bwd: &BraidedWiringDiagram, labeled: &LabeledDiagram) -> Presentation {
    let generators = (1..=bwd.n).map(|i| Gen::Alpha(i as u32)).collect();
    let mut relators = Vec::new();
    for (k, ev) in bwd.events.iter().enumerate() {
        if let EventKind::Actual { lines, .. } = &ev.kind {
            let snap = &labeled.snapshots[k];
            let incoming: Vec<Word> = lines.iter().map(|&l| snap.labels_before[l].clone()).collect();
            relators.push(Relator::Family(crossing_family(&incoming)));
        }
    }
    Presentation::new(generators, relators)
}

/// Checks that every label is a conjugate `w⁻¹αᵢw` of its own line's meridian.
pub fn labels_are_meridian_conjugates(labeled: &LabeledDiagram) -> bool {
    let ok = |labels: &[Word]| labels.iter().enumerate().skip(1).all(|(i, w)| w.conjugate_of_alpha() == Some(i as u32));
    labeled.snapshots.iter().all(|s| ok(&s.labels_after)) && ok(&labeled.final_labels)
}
