//! Fundamental groups of complex line arrangements from braided wiring
//! diagrams: the boundary manifold, the complement, and the word-level
//! inclusion map between them.
//!
//! Everything is exact: coordinates live in an imaginary quadratic field
//! ([`exactnum`]) and group elements are freely reduced words ([`words`]).
//! The pipeline runs
//! arrangement → [`wiring`] diagram → [`arvola`] labels → [`inclusion`] data →
//! presentations ([`boundary`], [`inclusion`]) → [`simplify`].
//!
//! The crate is `no_std` (it needs `alloc`).

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod arrangement;
pub mod arvola;
pub mod boundary;
pub mod conventions;
pub mod exactnum;
pub mod inclusion;
pub mod simplify;
pub mod wiring;
pub mod words;

pub use arrangement::{
    cycle_basis, incidence_graph, Arrangement, Combinatorics, CycleBasis, IncidenceGraph, SingularPoint,
};
pub use arvola::{complement_presentation_arvola, label_diagram, LabelRule, LabeledDiagram};
pub use boundary::boundary_presentation;
pub use exactnum::{FieldDesc, QuadElem};
pub use inclusion::{inclusion_table, InclusionTable, Variant};
pub use simplify::{abelianization, AbelianInvariants};
pub use wiring::{compute_wiring, find_shear, BraidedWiringDiagram, EventKind, WiringEvent};
pub use words::{parse_word, Gen, GroupMap, Presentation, Relator, RelatorFamily, Word};
