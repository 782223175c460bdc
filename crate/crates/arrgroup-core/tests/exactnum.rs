use arrgroup_core::exactnum::{field_arith, parse_rational, rat, FieldDesc, FieldOp, NumError, QuadElem};
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use proptest::prelude::*;

mod common;
use common::{q, zi};

#[test]
fn field_descriptor_rejects_non_square_free() {
    assert!(FieldDesc::new(1).is_ok());
    assert!(FieldDesc::new(3).is_ok());
    assert!(FieldDesc::new(6).is_ok());
    assert_eq!(FieldDesc::new(4), Err(NumError::InvalidField(4)));
    assert_eq!(FieldDesc::new(12), Err(NumError::InvalidField(12)));
    assert_eq!(FieldDesc::new(0), Err(NumError::InvalidField(0)));
    assert_eq!(FieldDesc::new(-3), Err(NumError::InvalidField(-3)));
}

#[test]
fn i_squared_is_minus_one() {
    let f = FieldDesc::gaussian();
    let i = QuadElem::sqrt_neg_d(f);
    assert_eq!(&i * &i, QuadElem::from_int(-1, f));
}

#[test]
fn omega_satisfies_its_minimal_polynomial() {
    let f = FieldDesc::eisenstein();
    let omega = q(f, (-1, 2), (1, 2));
    let sum = &(&(&omega * &omega) + &omega) + &QuadElem::one(f);
    assert!(sum.is_zero());
    let cube = &(&omega * &omega) * &omega;
    assert_eq!(cube, QuadElem::one(f));
}

#[test]
fn norm_of_two_plus_i() {
    let f = FieldDesc::gaussian();
    let a = zi(f, 2, 1);
    assert_eq!(&a * &a.conj(), QuadElem::from_int(5, f));
    assert_eq!(a.norm(), rat(5, 1));
}

#[test]
fn parts_and_signs() {
    let f = FieldDesc::eisenstein();
    let a = zi(f, 3, -2);
    assert_eq!(a.re_part(), &rat(3, 1));
    assert_eq!(a.im_sign(), -1);
    let z = QuadElem::zero(f);
    assert_eq!((z.re_part().clone(), z.im_sign()), (rat(0, 1), 0));
    let i = QuadElem::sqrt_neg_d(FieldDesc::gaussian());
    assert_eq!((i.re_part().clone(), i.im_sign()), (rat(0, 1), 1));
}

#[test]
fn division_by_zero_and_field_mismatch_are_errors() {
    let g = FieldDesc::gaussian();
    let e = FieldDesc::eisenstein();
    let one = QuadElem::one(g);
    assert_eq!(field_arith(&one, &QuadElem::zero(g), FieldOp::Div), Err(NumError::DivisionByZero));
    assert_eq!(one.try_add(&QuadElem::one(e)), Err(NumError::FieldMismatch(1, 3)));
    assert_eq!(one.try_mul(&QuadElem::one(e)), Err(NumError::FieldMismatch(1, 3)));
}

#[test]
fn rational_literals() {
    assert_eq!(parse_rational("3/2").unwrap(), rat(3, 2));
    assert_eq!(parse_rational("-4/6").unwrap(), rat(-2, 3));
    assert_eq!(parse_rational("7").unwrap(), rat(7, 1));
    assert!(parse_rational("1/0").is_err());
    assert!(parse_rational("x").is_err());
}

#[test]
fn display_forms() {
    let g = FieldDesc::gaussian();
    let e = FieldDesc::eisenstein();
    assert_eq!(QuadElem::sqrt_neg_d(g).to_string(), "i");
    assert_eq!(q(g, (0, 1), (-1, 100)).to_string(), "-1/100*i");
    assert_eq!(q(e, (1, 2), (1, 1)).to_string(), "1/2 + sqrt(-3)");
    assert_eq!(zi(e, 3, -2).to_string(), "3 - 2*sqrt(-3)");
}

fn small_rat() -> impl Strategy<Value = BigRational> {
    (-20i64..=20, 1i64..=9).prop_map(|(p, q)| rat(p, q))
}

fn elem(d: u32) -> impl Strategy<Value = QuadElem> {
    (small_rat(), small_rat()).prop_map(move |(a, b)| QuadElem::new(a, b, FieldDesc::new(d as i64).unwrap()))
}

fn triple() -> impl Strategy<Value = (QuadElem, QuadElem, QuadElem)> {
    prop_oneof![Just(1u32), Just(2), Just(3), Just(7)].prop_flat_map(|d| (elem(d), elem(d), elem(d)))
}

proptest! {
    #[test]
    fn field_axioms((a, b, c) in triple()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert!((&a - &a).is_zero());
        if !b.is_zero() {
            let quotient = a.try_div(&b).unwrap();
            prop_assert_eq!(&quotient * &b, a.clone());
            prop_assert_eq!(&b * &b.try_inv().unwrap(), QuadElem::one(b.field()));
        }
    }

    #[test]
    fn parts_reconstruct((a, _, _) in triple()) {
        let f = a.field();
        let back = &QuadElem::from_rational(a.re_part().clone(), f)
            + &QuadElem::sqrt_neg_d(f).scale(a.imc());
        prop_assert_eq!(&back, &a);
        let s = a.imc().signum();
        let expected = if s.is_zero() { 0 } else if s.is_positive() { 1 } else { -1 };
        prop_assert_eq!(a.im_sign(), expected);
        prop_assert_eq!(a.conj().conj(), a.clone());
        prop_assert_eq!(a.norm(), (&a * &a.conj()).re_part().clone());
    }
}
