//! Presentation post-processing: substitution-style Tietze eliminations,
//! abelianization through the Smith normal form, and canonical comparison.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::words::{Gen, GroupMap, Presentation, Word};

/// Errors of presentation simplification.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SimplifyError {
    #[error("defining word for {0} contains {0} itself")]
    SelfReferential(String),
    #[error("generator {0} is not in the presentation")]
    UnknownGenerator(String),
}

/// Replaces `g` by `defining` everywhere, removes `g`, reduces relators and
/// drops relators that became trivial.
pub fn eliminate_generator(p: &Presentation, g: Gen, defining: &Word) -> Result<Presentation, SimplifyError> {
    if defining.contains(g) {
        return Err(SimplifyError::SelfReferential(g.to_string()));
    }
    if !p.generators.contains(&g) {
        return Err(SimplifyError::UnknownGenerator(g.to_string()));
    }
    let mut m = GroupMap::new();
    m.insert(g, defining.clone());
    let relators = p.relators.iter().map(|r| r.map_words(|w| m.apply_partial(w))).filter(|r| !r.is_trivial()).collect();
    let generators = p.generators.iter().copied().filter(|&h| h != g).collect();
    Ok(Presentation::new(generators, relators))
}

/// Abelian invariants `ℤ^rank ⊕ ⊕ ℤ/dᵢ`, with `d₁ | d₂ | ⋯`, all `dᵢ > 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AbelianInvariants {
    pub rank: usize,
    pub torsion: Vec<BigInt>,
}

impl AbelianInvariants {
    pub fn is_free_of_rank(&self, r: usize) -> bool {
        self.rank == r && self.torsion.is_empty()
    }
}

impl fmt::Display for AbelianInvariants {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        if self.rank > 0 {
            parts.push(alloc::format!("Z^{}", self.rank));
        }
        for d in &self.torsion {
            parts.push(alloc::format!("Z/{}", d));
        }
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" + "))
        }
    }
}

/// Exponent-sum matrix: one row per expanded relator, one column per generator.
pub fn relation_matrix(p: &Presentation) -> Vec<Vec<BigInt>> {
    p.expanded_relators()
        .iter()
        .map(|w| {
            let sums = w.exponent_sums();
            p.generators.iter().map(|g| BigInt::from(*sums.get(g).unwrap_or(&0))).collect()
        })
        .collect()
}

/// Diagonal of the Smith normal form (nonzero entries only, positive,
/// each dividing the next).
#[allow(clippy::needless_range_loop)] // row/column operations read clearer indexed
pub fn smith_diagonal(mut m: Vec<Vec<BigInt>>) -> Vec<BigInt> {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let mut diag = Vec::new();
    let mut t = 0;
    while t < rows.min(cols) {
        // Pivot: smallest nonzero |entry| in the trailing block.
        let mut best: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                if !m[i][j].is_zero() && best.is_none_or(|(bi, bj)| m[i][j].abs() < m[bi][bj].abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        m.swap(t, pi);
        for row in m.iter_mut() {
            row.swap(t, pj);
        }
        loop {
            let mut dirty = false;
            for i in t + 1..rows {
                if !m[i][t].is_zero() {
                    let q = m[i][t].div_floor(&m[t][t]);
                    for j in t..cols {
                        let v = &m[t][j] * &q;
                        m[i][j] -= v;
                    }
                    if !m[i][t].is_zero() {
                        dirty = true;
                    }
                }
            }
            for j in t + 1..cols {
                if !m[t][j].is_zero() {
                    let q = m[t][j].div_floor(&m[t][t]);
                    for i in t..rows {
                        let v = &m[i][t] * &q;
                        m[i][j] -= v;
                    }
                    if !m[t][j].is_zero() {
                        dirty = true;
                    }
                }
            }
            if !dirty {
                // Enforce divisibility of the trailing block by the pivot.
                let mut fix = None;
                'outer: for i in t + 1..rows {
                    for j in t + 1..cols {
                        if !(&m[i][j] % &m[t][t]).is_zero() {
                            fix = Some(i);
                            break 'outer;
                        }
                    }
                }
                match fix {
                    Some(i) => {
                        for j in t..cols {
                            let v = m[i][j].clone();
                            m[t][j] += v;
                        }
                    }
                    None => break,
                }
            }
            // Move the smallest nonzero entry of row/column t to the pivot.
            let mut bi = t;
            let mut bj = t;
            for i in t..rows {
                if !m[i][t].is_zero() && (m[bi][bj].is_zero() || m[i][t].abs() < m[bi][bj].abs()) {
                    bi = i;
                    bj = t;
                }
            }
            for j in t..cols {
                if !m[t][j].is_zero() && (m[bi][bj].is_zero() || m[t][j].abs() < m[bi][bj].abs()) {
                    bi = t;
                    bj = j;
                }
            }
            m.swap(t, bi);
            for row in m.iter_mut() {
                row.swap(t, bj);
            }
        }
        diag.push(m[t][t].abs());
        t += 1;
    }
    diag
}

/// Abelianization of a presentation.
pub fn abelianization(p: &Presentation) -> AbelianInvariants {
    let diag = smith_diagonal(relation_matrix(p));
    let rank = p.generators.len() - diag.len();
    let torsion = diag.into_iter().filter(|d| !d.is_one()).collect();
    AbelianInvariants { rank, torsion }
}

/// Equality of reduced words.
pub fn canonical_eq(a: &Word, b: &Word) -> bool {
    crate::words::canonical_eq(a, b)
}

/// Equal generator lists and equal multisets of expanded, reduced relators.
pub fn presentation_eq(a: &Presentation, b: &Presentation) -> bool {
    if a.generators != b.generators {
        return false;
    }
    let norm = |p: &Presentation| {
        let mut v: Vec<Word> = p.expanded_relators().into_iter().map(|w| w.reduce()).collect();
        v.sort();
        v
    };
    norm(a) == norm(b)
}

/// Abelianized image: exponent-sum vector of a word over the given generators.
pub fn abelianize_word(w: &Word, gens: &[Gen]) -> Vec<i64> {
    let sums = w.exponent_sums();
    gens.iter().map(|g| *sums.get(g).unwrap_or(&0)).collect()
}
