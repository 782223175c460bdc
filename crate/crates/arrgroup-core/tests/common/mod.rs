//! Shared samples for the integration tests: the didactic and MacLane
//! arrangements and their reference wiring diagrams, built in code.

#![allow(dead_code)]

use arrgroup_core::arrangement::Arrangement;
use arrgroup_core::exactnum::{rat, FieldDesc, QuadElem};
use arrgroup_core::wiring::{BraidedWiringDiagram, EventKind, Source, WiringEvent};
use arrgroup_core::words::{parse_relator, parse_word, Relator, RelatorFamily, Word};
use num_rational::BigRational;

pub fn w(s: &str) -> Word {
    parse_word(s).unwrap_or_else(|e| panic!("{:?}: {}", s, e))
}

pub fn fam(s: &str) -> RelatorFamily {
    match parse_relator(s).unwrap_or_else(|e| panic!("{:?}: {}", s, e)) {
        Relator::Family(f) => f,
        Relator::Word(_) => panic!("{:?} is not a family", s),
    }
}

/// `p + q√−d` from integer pairs `(num, den)`.
pub fn q(field: FieldDesc, re: (i64, i64), im: (i64, i64)) -> QuadElem {
    QuadElem::new(rat(re.0, re.1), rat(im.0, im.1), field)
}

pub fn zi(field: FieldDesc, re: i64, im: i64) -> QuadElem {
    q(field, (re, 1), (im, 1))
}

pub fn didactic_arrangement() -> Arrangement {
    let f = FieldDesc::gaussian();
    let z = |a, b| zi(f, a, b);
    Arrangement::new(
        f,
        vec![
            [z(0, 0), z(0, 0), z(1, 0)],
            [z(-2, -1), z(3, 2), z(0, 0)],
            [z(-1, 0), z(2, 1), z(0, 0)],
            [z(-1, 0), z(3, 0), z(0, 1)],
            [z(-1, 0), z(2, 2), z(0, 0)],
        ],
    )
    .expect("valid arrangement")
}

pub fn maclane_arrangement() -> Arrangement {
    let f = FieldDesc::eisenstein();
    let z = |a| zi(f, a, 0);
    let omega = q(f, (-1, 2), (1, 2));
    let omega2 = q(f, (-1, 2), (-1, 2));
    Arrangement::new(
        f,
        vec![
            [z(0), z(0), z(1)],
            [z(-1), z(0), z(1)],
            [z(1), z(0), z(0)],
            [z(0), z(1), z(0)],
            [omega2.clone(), omega.clone(), z(1)],
            [z(-1), z(1), z(0)],
            [z(-1), -omega2, z(1)],
            [z(0), omega, z(1)],
        ],
    )
    .expect("valid arrangement")
}

/// `('v', pos, sign)` or `('a', top_pos, m)`; lines of actual crossings are
/// read off the running order. Events get `t = 1, 2, …`.
pub fn diagram(n: usize, spec: &[(char, usize, i8)]) -> BraidedWiringDiagram {
    let mut order: Vec<usize> = (1..=n).collect();
    let mut events = Vec::new();
    for (k, &(c, a, b)) in spec.iter().enumerate() {
        let kind = if c == 'v' {
            order.swap(a - 1, a);
            EventKind::Virtual { pos: a, sign: b }
        } else {
            let m = b as usize;
            let lines = order[a - 1..a - 1 + m].to_vec();
            order[a - 1..a - 1 + m].reverse();
            EventKind::Actual { top_pos: a, lines }
        };
        events.push(WiringEvent { t: BigRational::from_integer((k as i64 + 1).into()), kind });
    }
    BraidedWiringDiagram::new(n, (1..=n).collect(), events, Source::File).expect("valid diagram")
}

pub const DIDACTIC: [(char, usize, i8); 12] = [
    ('v', 3, 1),
    ('a', 1, 3),
    ('v', 3, -1),
    ('v', 2, -1),
    ('v', 2, 1),
    ('v', 3, 1),
    ('a', 3, 2),
    ('v', 2, -1),
    ('v', 1, -1),
    ('a', 1, 2),
    ('v', 2, 1),
    ('a', 2, 2),
];

pub const MACLANE: [(char, usize, i8); 22] = [
    ('v', 4, 1),
    ('v', 6, -1),
    ('a', 2, 3),
    ('a', 4, 3),
    ('a', 6, 2),
    ('v', 2, 1),
    ('v', 3, -1),
    ('v', 4, -1),
    ('v', 2, -1),
    ('a', 4, 2),
    ('v', 3, -1),
    ('v', 2, 1),
    ('v', 3, 1),
    ('v', 5, 1),
    ('v', 4, 1),
    ('a', 3, 3),
    ('v', 4, 1),
    ('v', 5, -1),
    ('a', 1, 3),
    ('a', 3, 2),
    ('a', 4, 3),
    ('v', 3, -1),
];

pub fn didactic_diagram() -> BraidedWiringDiagram {
    diagram(4, &DIDACTIC)
}

pub fn maclane_diagram() -> BraidedWiringDiagram {
    diagram(7, &MACLANE)
}
