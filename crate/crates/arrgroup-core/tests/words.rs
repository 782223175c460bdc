use arrgroup_core::words::{
    canonical_eq, expand_relator_family, parse_relator, parse_word, Gen, GroupMap, Letter, Relator, RelatorFamily,
    Word, WordError,
};
use proptest::prelude::*;

mod common;
use common::{fam, w};

#[test]
fn cancellation() {
    assert!(w("a1 a1^-1").is_identity());
    assert_eq!(w("a3").conj(&w("a1 a1^-1")), w("a3"));
    assert_eq!(w("a7^-1 a4 a7 a7 a4^-1").len(), 5);
}

#[test]
fn conjugation_convention() {
    assert_eq!(w("a2").conj(&w("a1")), w("a1^-1 a2 a1"));
    assert_eq!(w("a1^-1 a2 a1").inverse(), w("a1^-1 a2^-1 a1"));
    let c = w("a4").conj(&w("a3"));
    assert_eq!(c, w("a3^-1 a4 a3"));
    assert_eq!(c.to_string(), "a4^a3");
    assert_eq!(w("a4^(a3^-1)"), w("a3 a4 a3^-1"));
    assert_eq!(w("a4").conj(&w("a3").inverse()).to_string(), "a4^(a3^-1)");
}

#[test]
fn grammar() {
    assert_eq!(w("e1,2"), Word::eps(1, 2));
    assert_eq!(w("e12"), Word::eps(1, 2));
    assert_eq!(w("1"), Word::identity());
    assert_eq!(w("(a1 a2)^-1"), w("a2^-1 a1^-1"));
    assert_eq!(w("a7^2"), w("a7 a7"));
    assert_eq!(w("a7^-2"), w("a7^-1 a7^-1"));
    assert_eq!(w("a4 . a5 * a6"), w("a4 a5 a6"));
    assert_eq!(w("a2^a1^-1"), w("a1^-1 a2 a1").inverse());
    assert!(matches!(parse_word("a"), Err(WordError::Parse { .. })));
    assert!(matches!(parse_word("a1 )"), Err(WordError::Parse { .. })));
    assert!(matches!(parse_word("e123"), Err(WordError::Parse { .. })));
}

#[test]
fn family_expansion() {
    let f = fam("[a1, a2]");
    assert_eq!(expand_relator_family(&f), vec![w("a1 a2 a1^-1 a2^-1")]);
    assert_eq!(fam("[a1, a2, a3]").expand().len(), 2);
    let triple = fam("[a4^a3, a2, a1]");
    assert_eq!(triple.expand().len(), 2);
    assert_eq!(triple.factors[0], w("a3^-1 a4 a3"));
    // Commas inside ε generators do not split factors.
    assert_eq!(fam("[a4^e1,4, a2^e1,2, a1]").factors.len(), 3);
    assert!(parse_relator("[a1]").is_err());
}

#[test]
fn map_application() {
    let mut m = GroupMap::identity_on((0..=7).map(Gen::Alpha));
    m.insert(Gen::Eps(2, 5), w("a4^-1"));
    assert_eq!(m.apply(&w("a5^e2,5")).unwrap(), w("a4 a5 a4^-1"));
    assert!(matches!(m.apply(&w("e1,3")), Err(WordError::MissingGenerator(_))));
    let x = w("a1 e1,2 a3^-1");
    assert_eq!(GroupMap::identity_on(x.generators()).apply(&x).unwrap(), x);
    let mut kill = GroupMap::new();
    for g in x.generators() {
        kill.insert(g, Word::identity());
    }
    assert!(kill.apply(&x).unwrap().is_identity());
}

#[test]
fn canonical_equality() {
    assert!(canonical_eq(&w("a4^a3"), &w("a3^-1 a4 a3")));
    let f = Relator::Family(fam("[a1, a2]"));
    assert_eq!(f.expand(), Relator::Word(w("a1 a2 a1^-1 a2^-1")).expand());
}

fn gen() -> impl Strategy<Value = Gen> {
    prop_oneof![(0u32..5).prop_map(Gen::Alpha), (1u32..3, 2u32..5).prop_map(|(s, t)| Gen::Eps(s, t))]
}

fn letters() -> impl Strategy<Value = Vec<Letter>> {
    prop::collection::vec((gen(), any::<bool>()).prop_map(|(gen, inv)| Letter { gen, inv }), 0..12)
}

fn word() -> impl Strategy<Value = Word> {
    letters().prop_map(Word::from_letters)
}

fn map() -> impl Strategy<Value = GroupMap> {
    let gens: Vec<Gen> =
        (0u32..5).map(Gen::Alpha).chain((1u32..3).flat_map(|s| (2u32..5).map(move |t| Gen::Eps(s, t)))).collect();
    prop::collection::vec(word(), gens.len()).prop_map(move |ws| {
        let mut m = GroupMap::new();
        for (g, w) in gens.iter().zip(ws) {
            m.insert(*g, w);
        }
        m
    })
}

proptest! {
    #[test]
    fn reduction_is_a_normal_form(ls in letters()) {
        let raw = Word::from_letters(ls.clone());
        let r = raw.reduce();
        prop_assert_eq!(r.reduce(), r.clone());
        prop_assert!(r.letters().windows(2).all(|p| p[0] != p[1].inverse()));
        prop_assert!(r.mul(&r.inverse()).is_identity());
        prop_assert!(r.len() <= ls.len());
        prop_assert_eq!(r.exponent_sums(), {
            let mut m = std::collections::BTreeMap::new();
            for l in &ls {
                *m.entry(l.gen).or_insert(0i64) += l.exponent();
            }
            m.retain(|_, v| *v != 0);
            m
        });
    }

    #[test]
    fn maps_are_homomorphisms(u in word(), v in word(), m in map()) {
        let lhs = m.apply(&u.mul(&v)).unwrap();
        let rhs = m.apply(&u).unwrap().mul(&m.apply(&v).unwrap());
        prop_assert_eq!(lhs, rhs);
        prop_assert_eq!(m.apply(&u.inverse()).unwrap(), m.apply(&u).unwrap().inverse());
    }

    #[test]
    fn family_expands_to_m_minus_one(ws in prop::collection::vec(word(), 2..6)) {
        let f = RelatorFamily::new(ws.clone());
        prop_assert_eq!(f.expand().len(), ws.len() - 1);
        prop_assert_eq!(f.relator_count(), ws.len() - 1);
    }

    #[test]
    fn printing_round_trips(u in word()) {
        prop_assert_eq!(parse_word(&u.to_string()).unwrap(), u.clone());
        let f = RelatorFamily::new(vec![u.clone(), Word::alpha(1), u.inverse()]);
        prop_assert_eq!(parse_relator(&f.to_string()).unwrap(), Relator::Family(f));
    }

    #[test]
    fn conjugation_is_an_automorphism(u in word(), v in word(), c in word()) {
        prop_assert_eq!(u.mul(&v).conj(&c), u.conj(&c).mul(&v.conj(&c)));
        prop_assert_eq!(u.conj(&c).conj(&c.inverse()), u.clone());
    }
}
