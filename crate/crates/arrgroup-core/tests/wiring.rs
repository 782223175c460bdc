use arrgroup_core::arrangement::Arrangement;
use arrgroup_core::exactnum::{rat, FieldDesc, QuadElem};
use arrgroup_core::wiring::{
    compute_wiring, crossings_match_points, find_shear, rational_sequence, shear_candidates, BraidedWiringDiagram,
    EventKind, Source, WiringError, WiringEvent,
};
use num_rational::BigRational;
use proptest::prelude::*;

mod common;
use common::{didactic_arrangement, didactic_diagram, maclane_arrangement, maclane_diagram, q, zi};

fn real(lines: &[[i64; 3]]) -> Arrangement {
    let f = FieldDesc::gaussian();
    Arrangement::new(f, lines.iter().map(|l| [zi(f, l[0], 0), zi(f, l[1], 0), zi(f, l[2], 0)]).collect()).unwrap()
}

fn kinds(d: &BraidedWiringDiagram) -> Vec<EventKind> {
    d.events.iter().map(|e| e.kind.clone()).collect()
}

fn ev(t: i64, kind: EventKind) -> WiringEvent {
    WiringEvent { t: BigRational::from_integer(t.into()), kind }
}

#[test]
fn reference_diagrams_are_consistent() {
    let d = didactic_diagram();
    assert_eq!((d.actual_count(), d.virtual_count()), (4, 8));
    assert!(d.permutation_consistent());
    let m = maclane_diagram();
    assert_eq!((m.actual_count(), m.virtual_count()), (8, 14));
    assert!(m.permutation_consistent());
    assert!(d.tops_minimal() && m.tops_minimal());
}

#[test]
fn didactic_crossing_order() {
    let d = didactic_diagram();
    let actual: Vec<Vec<usize>> = d
        .events
        .iter()
        .filter_map(|e| match &e.kind {
            EventKind::Actual { lines, .. } => Some(lines.clone()),
            _ => None,
        })
        .collect();
    assert_eq!(actual, [vec![1, 2, 4], vec![1, 3], vec![3, 4], vec![2, 3]]);
}

#[test]
fn validation_errors() {
    let v = |pos, sign| EventKind::Virtual { pos, sign };
    assert_eq!(BraidedWiringDiagram::new(1, vec![1], vec![], Source::File).map(|d| d.events.len()), Ok(0));
    assert_eq!(BraidedWiringDiagram::new(2, vec![1, 1], vec![], Source::File), Err(WiringError::BadInitialOrder(2)));
    assert_eq!(
        BraidedWiringDiagram::new(2, vec![1, 2], vec![ev(1, v(1, 1)), ev(1, v(1, 1))], Source::File),
        Err(WiringError::UnsortedT(1))
    );
    assert!(matches!(
        BraidedWiringDiagram::new(2, vec![1, 2], vec![ev(1, v(2, 1))], Source::File),
        Err(WiringError::BadEvent { index: 0, .. })
    ));
    assert!(matches!(
        BraidedWiringDiagram::new(2, vec![1, 2], vec![ev(1, v(1, 0))], Source::File),
        Err(WiringError::BadEvent { index: 0, .. })
    ));
    let wrong_lines = EventKind::Actual { top_pos: 1, lines: vec![2, 1] };
    assert!(matches!(
        BraidedWiringDiagram::new(2, vec![1, 2], vec![ev(1, wrong_lines)], Source::File),
        Err(WiringError::BadEvent { index: 0, .. })
    ));
}

#[test]
fn rational_search_sequence() {
    let first: Vec<BigRational> = rational_sequence().take(9).collect();
    assert_eq!(
        first,
        [rat(0, 1), rat(1, 1), rat(-1, 1), rat(1, 2), rat(-1, 2), rat(2, 1), rat(-2, 1), rat(1, 3), rat(-1, 3)]
    );
    let f = FieldDesc::gaussian();
    assert!(shear_candidates(f, true).take(50).all(|c| c.is_rational()));
    let complex: Vec<QuadElem> = shear_candidates(f, false).take(40).collect();
    assert_eq!(complex[0], QuadElem::zero(f));
    assert!(complex.iter().any(|c| !c.is_rational()));
    let mut dedup = complex.clone();
    dedup.sort_by_key(|a| a.to_string());
    dedup.dedup();
    assert_eq!(dedup.len(), complex.len());
}

#[test]
fn didactic_at_fig_shear_reproduces_reference() {
    let arr = didactic_arrangement();
    let lam = q(FieldDesc::gaussian(), (0, 1), (-1, 100));
    let d = compute_wiring(&arr, &lam).unwrap();
    assert_eq!(kinds(&d), kinds(&didactic_diagram()));
    assert_eq!(d.source, Source::Computed { shear: lam, relabel: vec![0, 1, 2, 3, 4] });
}

#[test]
fn didactic_needs_a_complex_shear() {
    let arr = didactic_arrangement();
    assert!(compute_wiring(&arr, &QuadElem::zero(arr.field())).is_err());
    let lam = find_shear(&arr, 10_000).unwrap();
    assert!(!lam.is_rational());
    let d = compute_wiring(&arr, &lam).unwrap();
    assert!(d.permutation_consistent());
    let relabel = match &d.source {
        Source::Computed { relabel, .. } => relabel.clone(),
        Source::File => unreachable!(),
    };
    assert!(crossings_match_points(&d, &arr.relabeled(&relabel)));
}

#[test]
fn maclane_computed_diagram() {
    let arr = maclane_arrangement();
    assert!(matches!(compute_wiring(&arr, &QuadElem::zero(arr.field())), Err(WiringError::Vertical(_))));
    let lam = find_shear(&arr, 10_000).unwrap();
    let d = compute_wiring(&arr, &lam).unwrap();
    assert_eq!(d.actual_count(), 8);
    assert!(d.permutation_consistent());
    let Source::Computed { relabel, .. } = &d.source else { unreachable!() };
    assert!(crossings_match_points(&d, &arr.relabeled(relabel)));
}

#[test]
fn vertical_line_forces_a_shear() {
    let arr = real(&[[0, 0, 1], [1, 0, 0], [1, 0, -1], [0, 1, 0]]);
    assert!(matches!(compute_wiring(&arr, &QuadElem::zero(arr.field())), Err(WiringError::Vertical(_))));
    let lam = find_shear(&arr, 100).unwrap();
    assert!(lam.is_rational() && !lam.is_zero());
}

#[test]
fn one_affine_line_has_no_events() {
    let arr = real(&[[0, 0, 1], [0, 1, 0]]);
    let d = compute_wiring(&arr, &QuadElem::zero(arr.field())).unwrap();
    assert!(d.events.is_empty());
    assert_eq!(d.n, 1);
}

#[test]
fn infinity_must_be_z() {
    let arr = real(&[[1, 0, 0], [0, 1, 0], [1, 1, 1]]);
    assert_eq!(find_shear(&arr, 10), Err(WiringError::InfinityNotStandard));
}

fn small_real() -> impl Strategy<Value = Vec<[i64; 3]>> {
    prop::collection::vec(prop::array::uniform3(-2i64..=2), 1..6)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]
    #[test]
    fn real_arrangements_have_no_virtual_crossings(extra in small_real()) {
        let mut lines = vec![[0, 0, 1]];
        lines.extend(extra);
        let f = FieldDesc::gaussian();
        let Ok(arr) = Arrangement::new(f, lines.iter().map(|l| [zi(f, l[0], 0), zi(f, l[1], 0), zi(f, l[2], 0)]).collect()) else {
            return Ok(());
        };
        let lam = find_shear(&arr, 1_000).unwrap();
        prop_assert!(lam.is_rational());
        let d = compute_wiring(&arr, &lam).unwrap();
        prop_assert_eq!(d.virtual_count(), 0);
        prop_assert!(d.permutation_consistent());
        prop_assert!(d.tops_minimal());
        let Source::Computed { relabel, .. } = &d.source else { unreachable!() };
        prop_assert!(crossings_match_points(&d, &arr.relabeled(relabel)));
    }
}
