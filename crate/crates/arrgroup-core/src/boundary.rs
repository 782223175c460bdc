//! Presentation of the fundamental group of the boundary manifold, read off
//! the incidence combinatorics.
//!
//! Generators are `α₀, …, αₙ` and one `ε_{s,t}` per cycle pair. Each affine
//! point `P` with lines `i₁ = ν(P) < i₂ < ⋯ < i_m` contributes the family
//! `[α_{i_m}^{ε_{i₁,i_m}}, …, α_{i₂}^{ε_{i₁,i₂}}, α_{i₁}]`. Points on `L₀`
//! contribute nothing.

use alloc::vec::Vec;

use crate::arrangement::{Combinatorics, CycleBasis};
use crate::words::{Gen, Presentation, Relator, RelatorFamily, Word};

/// Builds the family of one affine point with conjugators `c(i₁, j)`.
pub fn point_family<F: FnMut(usize, usize) -> Word>(point: &[usize], mut conj: F) -> RelatorFamily {
    let i1 = point[0];
    let mut factors: Vec<Word> = point[1..].iter().rev().map(|&j| Word::alpha(j as u32).conj(&conj(i1, j))).collect();
    factors.push(Word::alpha(i1 as u32));
    RelatorFamily::new(factors)
}

/// The generators `α₀…αₙ` followed by the `ε` of the basis.
pub fn boundary_generators(n: usize, basis: &CycleBasis) -> Vec<Gen> {
    let mut g: Vec<Gen> = (0..=n).map(|i| Gen::Alpha(i as u32)).collect();
    g.extend(basis.cycles.iter().map(|&(s, t)| Gen::Eps(s as u32, t as u32)));
    g
}

/// The boundary-manifold presentation.
pub fn boundary_presentation(comb: &Combinatorics, basis: &CycleBasis) -> Presentation {
    let relators = comb
        .affine_points
        .iter()
        .map(|p| Relator::Family(point_family(p, |s, t| Word::eps(s as u32, t as u32))))
        .collect();
    Presentation::new(boundary_generators(comb.n, basis), relators)
}
