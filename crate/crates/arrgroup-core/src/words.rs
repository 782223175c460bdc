//! Free-group words over the meridians `αᵢ` and the cycle generators `ε_{s,t}`.
//!
//! Words are kept freely reduced. The conjugation convention throughout is
//! `a^b = b⁻¹ a b`, so `(a^b)^c = a^{bc}`.

use core::fmt;

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

/// A free generator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Gen {
    /// Meridian `αᵢ` of line `Lᵢ`.
    Alpha(u32),
    /// Cycle generator `ε_{s,t}` (framed or geometric, depending on context).
    Eps(u32, u32),
}

impl fmt::Display for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Gen::Alpha(i) => write!(f, "a{}", i),
            Gen::Eps(s, t) => write!(f, "e{},{}", s, t),
        }
    }
}

/// A generator with exponent ±1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub gen: Gen,
    pub inv: bool,
}

impl Letter {
    pub fn inverse(self) -> Letter {
        Letter { gen: self.gen, inv: !self.inv }
    }

    pub fn exponent(self) -> i64 {
        if self.inv {
            -1
        } else {
            1
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inv {
            write!(f, "{}^-1", self.gen)
        } else {
            write!(f, "{}", self.gen)
        }
    }
}

/// A freely reduced word; the empty word is the identity.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Word {
    letters: Vec<Letter>,
}

impl Word {
    pub fn identity() -> Word {
        Word::default()
    }

    pub fn gen(g: Gen) -> Word {
        Word { letters: alloc::vec![Letter { gen: g, inv: false }] }
    }

    pub fn alpha(i: u32) -> Word {
        Word::gen(Gen::Alpha(i))
    }

    /// `ε_{s,t}`; the degenerate `ε_{a,a}` is the empty word.
    pub fn eps(s: u32, t: u32) -> Word {
        if s == t {
            Word::identity()
        } else {
            Word::gen(Gen::Eps(s, t))
        }
    }

    /// Builds a word from letters, freely reducing it.
    pub fn from_letters<I: IntoIterator<Item = Letter>>(it: I) -> Word {
        let mut out: Vec<Letter> = Vec::new();
        for l in it {
            push_reduced(&mut out, l);
        }
        Word { letters: out }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Free reduction; words built by this module are already reduced, so
    /// this is idempotent.
    pub fn reduce(&self) -> Word {
        Word::from_letters(self.letters.iter().copied())
    }

    pub fn inverse(&self) -> Word {
        Word { letters: self.letters.iter().rev().map(|l| l.inverse()).collect() }
    }

    /// Reduced product `self · other`.
    pub fn mul(&self, other: &Word) -> Word {
        let mut out = self.letters.clone();
        for &l in &other.letters {
            push_reduced(&mut out, l);
        }
        Word { letters: out }
    }

    /// `by⁻¹ · self · by`, written `self^by`.
    pub fn conj(&self, by: &Word) -> Word {
        by.inverse().mul(self).mul(by)
    }

    /// Integer power (negative powers invert).
    pub fn pow(&self, k: i64) -> Word {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut out = Word::identity();
        for _ in 0..k.unsigned_abs() {
            out = out.mul(&base);
        }
        out
    }

    /// Exponent sum of each generator.
    pub fn exponent_sums(&self) -> BTreeMap<Gen, i64> {
        let mut m = BTreeMap::new();
        for l in &self.letters {
            *m.entry(l.gen).or_insert(0) += l.exponent();
        }
        m.retain(|_, v| *v != 0);
        m
    }

    /// Generators occurring in the word.
    pub fn generators(&self) -> impl Iterator<Item = Gen> + '_ {
        self.letters.iter().map(|l| l.gen)
    }

    pub fn contains(&self, g: Gen) -> bool {
        self.letters.iter().any(|l| l.gen == g)
    }

    /// If the word is `c⁻¹ x c` for a single letter `x`, returns `(x, c)`.
    pub fn as_conjugate(&self) -> Option<(Letter, Word)> {
        let n = self.letters.len();
        if n.is_multiple_of(2) {
            return None;
        }
        let k = n / 2;
        let c = Word { letters: self.letters[k + 1..].to_vec() };
        let left = Word { letters: self.letters[..k].to_vec() };
        if left == c.inverse() {
            Some((self.letters[k], c))
        } else {
            None
        }
    }

    /// If the word is a conjugate of `αᵢ` (positive exponent), returns `i`.
    pub fn conjugate_of_alpha(&self) -> Option<u32> {
        match self.as_conjugate() {
            Some((Letter { gen: Gen::Alpha(i), inv: false }, _)) => Some(i),
            _ => None,
        }
    }
}

fn push_reduced(out: &mut Vec<Letter>, l: Letter) {
    if let Some(&last) = out.last() {
        if last.gen == l.gen && last.inv != l.inv {
            out.pop();
            return;
        }
    }
    out.push(l);
}

/// Reduced product of a sequence of words.
pub fn concat<'a, I: IntoIterator<Item = &'a Word>>(ws: I) -> Word {
    let mut out = Vec::new();
    for w in ws {
        for &l in &w.letters {
            push_reduced(&mut out, l);
        }
    }
    Word { letters: out }
}

/// Canonical equality: equality of freely reduced letter sequences.
pub fn canonical_eq(a: &Word, b: &Word) -> bool {
    a.reduce() == b.reduce()
}

fn fmt_plain(w: &Word, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    for (k, l) in w.letters.iter().enumerate() {
        if k > 0 {
            f.write_str(" ")?;
        }
        write!(f, "{}", l)?;
    }
    Ok(())
}

impl fmt::Display for Word {
    /// Prints `1` for the identity, `x^c` for a conjugate of a single letter,
    /// and a space-separated letter sequence otherwise. The output parses back
    /// with [`parse_word`].
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("1");
        }
        if self.letters.len() > 1 {
            if let Some((x, c)) = self.as_conjugate() {
                if x.inv {
                    write!(f, "({})", x)?;
                } else {
                    write!(f, "{}", x)?;
                }
                if c.len() == 1 && !c.letters[0].inv {
                    return write!(f, "^{}", c.letters[0]);
                }
                f.write_str("^(")?;
                fmt_plain(&c, f)?;
                return f.write_str(")");
            }
        }
        fmt_plain(self, f)
    }
}

/// A cyclic relator family `[w₁,…,w_m]`: all cyclic permutations of
/// `w₁⋯w_m` are equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RelatorFamily {
    pub factors: Vec<Word>,
}

impl RelatorFamily {
    pub fn new(factors: Vec<Word>) -> RelatorFamily {
        debug_assert!(factors.len() >= 2, "relator family needs at least two factors");
        RelatorFamily { factors }
    }

    /// Number of relators the family stands for (`m − 1`).
    pub fn relator_count(&self) -> usize {
        self.factors.len().saturating_sub(1)
    }

    /// The `m − 1` relators `C_{k−1}·C_k⁻¹`, where `C_k = w_{k+1}⋯w_m w_1⋯w_k`.
    pub fn expand(&self) -> Vec<Word> {
        let m = self.factors.len();
        let cyc = |k: usize| concat((0..m).map(|j| &self.factors[(j + k) % m]));
        let mut out = Vec::with_capacity(m.saturating_sub(1));
        let mut prev = cyc(0);
        for k in 1..m {
            let cur = cyc(k);
            out.push(prev.mul(&cur.inverse()));
            prev = cur;
        }
        out
    }

    pub fn map_words<F: FnMut(&Word) -> Word>(&self, f: F) -> RelatorFamily {
        RelatorFamily { factors: self.factors.iter().map(f).collect() }
    }
}

/// Expands a family into its `m − 1` relators.
pub fn expand_relator_family(f: &RelatorFamily) -> Vec<Word> {
    f.expand()
}

impl fmt::Display for RelatorFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (k, w) in self.factors.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{}", w)?;
        }
        f.write_str("]")
    }
}

/// A relator: either a cyclic family (standing for `m − 1` relators) or a
/// single word.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Relator {
    Family(RelatorFamily),
    Word(Word),
}

impl Relator {
    pub fn expand(&self) -> Vec<Word> {
        match self {
            Relator::Family(f) => f.expand(),
            Relator::Word(w) => alloc::vec![w.clone()],
        }
    }

    pub fn relator_count(&self) -> usize {
        match self {
            Relator::Family(f) => f.relator_count(),
            Relator::Word(_) => 1,
        }
    }

    pub fn map_words<F: FnMut(&Word) -> Word>(&self, mut f: F) -> Relator {
        match self {
            Relator::Family(fam) => Relator::Family(fam.map_words(f)),
            Relator::Word(w) => Relator::Word(f(w)),
        }
    }

    /// True when every expanded relator is the empty word.
    pub fn is_trivial(&self) -> bool {
        self.expand().iter().all(|w| w.is_identity())
    }
}

impl fmt::Display for Relator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Relator::Family(fam) => write!(f, "{}", fam),
            Relator::Word(w) => write!(f, "{}", w),
        }
    }
}

/// A finite presentation.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Presentation {
    pub generators: Vec<Gen>,
    pub relators: Vec<Relator>,
}

impl Presentation {
    pub fn new(generators: Vec<Gen>, relators: Vec<Relator>) -> Presentation {
        Presentation { generators, relators }
    }

    /// Total number of relators, counting a family of size `m` as `m − 1`.
    pub fn relator_count(&self) -> usize {
        self.relators.iter().map(|r| r.relator_count()).sum()
    }

    /// All relators expanded to single words.
    pub fn expanded_relators(&self) -> Vec<Word> {
        self.relators.iter().flat_map(|r| r.expand()).collect()
    }

    /// The cyclic families, in order, skipping plain word relators.
    pub fn families(&self) -> impl Iterator<Item = &RelatorFamily> {
        self.relators.iter().filter_map(|r| match r {
            Relator::Family(f) => Some(f),
            Relator::Word(_) => None,
        })
    }

    /// Checks that every generator used by a relator is listed.
    pub fn validate(&self) -> Result<(), WordError> {
        for r in &self.relators {
            for w in r.expand() {
                for g in w.generators() {
                    if !self.generators.contains(&g) {
                        return Err(WordError::UnlistedGenerator(g.to_string()));
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("generators:")?;
        for g in &self.generators {
            write!(f, " {}", g)?;
        }
        writeln!(f)?;
        writeln!(f, "relators: {}", self.relator_count())?;
        for r in &self.relators {
            writeln!(f, "  {}", r)?;
        }
        Ok(())
    }
}

/// A homomorphism of free groups given by generator images.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct GroupMap {
    pub images: BTreeMap<Gen, Word>,
}

impl GroupMap {
    pub fn new() -> GroupMap {
        GroupMap::default()
    }

    pub fn insert(&mut self, g: Gen, w: Word) {
        self.images.insert(g, w);
    }

    pub fn get(&self, g: Gen) -> Option<&Word> {
        self.images.get(&g)
    }

    /// Identity on the listed generators.
    pub fn identity_on<I: IntoIterator<Item = Gen>>(gens: I) -> GroupMap {
        GroupMap { images: gens.into_iter().map(|g| (g, Word::gen(g))).collect() }
    }

    /// Homomorphic image of `w`; every generator of `w` must be mapped.
    pub fn apply(&self, w: &Word) -> Result<Word, WordError> {
        let mut out = Word::identity();
        for l in w.letters() {
            let img = self.images.get(&l.gen).ok_or_else(|| WordError::MissingGenerator(l.gen.to_string()))?;
            out = if l.inv { out.mul(&img.inverse()) } else { out.mul(img) };
        }
        Ok(out)
    }

    /// Like [`GroupMap::apply`] but leaves unmapped generators unchanged.
    pub fn apply_partial(&self, w: &Word) -> Word {
        let mut out = Word::identity();
        for l in w.letters() {
            match self.images.get(&l.gen) {
                Some(img) => out = if l.inv { out.mul(&img.inverse()) } else { out.mul(img) },
                None => out = out.mul(&Word::from_letters([*l])),
            }
        }
        out
    }
}

/// Applies a group map to a word (see [`GroupMap::apply`]).
pub fn apply_map(m: &GroupMap, w: &Word) -> Result<Word, WordError> {
    m.apply(w)
}

/// Errors of word parsing and map application.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum WordError {
    #[error("generator {0} has no image under the map")]
    MissingGenerator(String),
    #[error("generator {0} is used by a relator but not listed")]
    UnlistedGenerator(String),
    #[error("word parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

/// Parses a word.
///
/// Grammar (whitespace, `.` and `*` between factors are ignored):
///
/// ```text
/// word     := '1' | factor*
/// factor   := primary ('^' exponent)*
/// primary  := gen | '(' word ')'
/// exponent := '-'? INT | primary        INT = power, primary = conjugator
/// gen      := 'a' INT | 'e' INT ',' INT | 'e' DIGIT DIGIT
/// ```
///
/// So `a4^(a3^-1)` is `a3 a4 a3⁻¹` and `a4^a3^-1` is `(a3⁻¹a4a3)⁻¹`.
pub fn parse_word(s: &str) -> Result<Word, WordError> {
    let mut p = Parser { s: s.as_bytes(), pos: 0 };
    let w = p.word()?;
    p.skip_ws();
    if p.pos != p.s.len() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(w)
}

/// Parses a relator family `[w₁, …, w_m]` or a single word relator.
pub fn parse_relator(s: &str) -> Result<Relator, WordError> {
    let t = s.trim();
    if let Some(inner) = t.strip_prefix('[') {
        let inner = inner.strip_suffix(']').ok_or(WordError::Parse { pos: t.len(), msg: "missing ']'".into() })?;
        let mut factors = Vec::new();
        for (k, part) in split_top_level(inner).into_iter().enumerate() {
            factors.push(parse_word(part).map_err(|e| match e {
                WordError::Parse { pos, msg } => {
                    WordError::Parse { pos, msg: alloc::format!("factor {}: {}", k + 1, msg) }
                }
                other => other,
            })?);
        }
        if factors.len() < 2 {
            return Err(WordError::Parse { pos: 0, msg: "a family needs at least two factors".into() });
        }
        Ok(Relator::Family(RelatorFamily::new(factors)))
    } else {
        Ok(Relator::Word(parse_word(t)?))
    }
}

/// Splits on commas at parenthesis depth zero that are not part of an
/// `e<s>,<t>` generator.
fn split_top_level(s: &str) -> Vec<&str> {
    let b = s.as_bytes();
    let mut parts = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for i in 0..b.len() {
        match b[i] {
            b'(' => depth += 1,
            b')' => depth -= 1,
            b',' if depth == 0 && !comma_in_eps(b, i) => {
                parts.push(&s[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    parts.push(&s[start..]);
    parts
}

fn comma_in_eps(b: &[u8], i: usize) -> bool {
    // A comma belongs to an ε generator when it reads e<digits>,<digits>.
    let mut j = i;
    while j > 0 && b[j - 1].is_ascii_digit() {
        j -= 1;
    }
    j < i && j > 0 && b[j - 1] == b'e' && i + 1 < b.len() && b[i + 1].is_ascii_digit()
}

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err(&self, msg: &str) -> WordError {
        WordError::Parse { pos: self.pos, msg: msg.to_string() }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && matches!(self.s[self.pos], b' ' | b'\t' | b'\n' | b'\r' | b'.' | b'*') {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    fn word(&mut self) -> Result<Word, WordError> {
        let mut out = Word::identity();
        loop {
            match self.peek() {
                Some(b'1') => {
                    // The identity literal, only valid as a standalone factor.
                    self.pos += 1;
                    if matches!(self.s.get(self.pos), Some(c) if c.is_ascii_digit()) {
                        return Err(self.err("unexpected number"));
                    }
                }
                Some(b'a') | Some(b'e') | Some(b'(') => {
                    let f = self.factor()?;
                    out = out.mul(&f);
                }
                _ => return Ok(out),
            }
        }
    }

    fn factor(&mut self) -> Result<Word, WordError> {
        let mut base = self.primary()?;
        while self.peek() == Some(b'^') {
            self.pos += 1;
            match self.peek() {
                Some(b'-') | Some(b'0'..=b'9') => {
                    let k = self.int_signed()?;
                    base = base.pow(k);
                }
                _ => {
                    let c = self.primary()?;
                    base = base.conj(&c);
                }
            }
        }
        Ok(base)
    }

    fn primary(&mut self) -> Result<Word, WordError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let w = self.word()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected ')'"));
                }
                self.pos += 1;
                Ok(w)
            }
            Some(b'a') => {
                self.pos += 1;
                let i = self.uint()?;
                Ok(Word::alpha(i))
            }
            Some(b'e') => {
                self.pos += 1;
                let start = self.pos;
                let s = self.uint()?;
                if self.s.get(self.pos) == Some(&b',') {
                    self.pos += 1;
                    let t = self.uint()?;
                    Ok(Word::gen(Gen::Eps(s, t)))
                } else if self.pos - start == 2 {
                    let d = &self.s[start..self.pos];
                    Ok(Word::gen(Gen::Eps((d[0] - b'0') as u32, (d[1] - b'0') as u32)))
                } else {
                    Err(self.err("ε generator must be written e<s>,<t> (or e<d><d>)"))
                }
            }
            _ => Err(self.err("expected a generator or '('")),
        }
    }

    fn uint(&mut self) -> Result<u32, WordError> {
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected an integer"));
        }
        core::str::from_utf8(&self.s[start..self.pos])
            .ok()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| self.err("integer out of range"))
    }

    fn int_signed(&mut self) -> Result<i64, WordError> {
        self.skip_ws();
        let neg = if self.s.get(self.pos) == Some(&b'-') {
            self.pos += 1;
            true
        } else {
            false
        };
        let v = self.uint()? as i64;
        Ok(if neg { -v } else { v })
    }
}
