use arrgroup_core::arrangement::{
    cycle_basis, incidence_graph, multiplicity_histogram, point_name, Arrangement, ArrangementError, CycleBasis,
};
use arrgroup_core::exactnum::{FieldDesc, QuadElem};
use proptest::prelude::*;

mod common;
use common::{didactic_arrangement, maclane_arrangement, zi};

fn real(lines: &[[i64; 3]]) -> Arrangement {
    let f = FieldDesc::gaussian();
    Arrangement::new(f, lines.iter().map(|l| [zi(f, l[0], 0), zi(f, l[1], 0), zi(f, l[2], 0)]).collect()).unwrap()
}

fn generic3() -> Arrangement {
    real(&[[0, 0, 1], [0, 1, 0], [-1, 1, 0], [1, 1, -1]])
}

#[test]
fn didactic_points_and_graph() {
    let arr = didactic_arrangement();
    let names: Vec<String> = arr.singular_points().iter().map(point_name).collect();
    assert_eq!(names, ["P0_1", "P0_2", "P0_3", "P0_4", "P1_2_4", "P1_3", "P2_3", "P3_4"]);
    let g = incidence_graph(&arr);
    // 5 lines + 8 points; 4·2 + 3 + 3·2 = 17 incidences, so b1 = 17 − 13 + 1.
    assert_eq!((g.vertex_count(), g.edge_count(), g.betti1()), (13, 17, 5));
    let basis = cycle_basis(&g).unwrap();
    assert_eq!(basis.cycles, [(1, 2), (1, 3), (1, 4), (2, 3), (3, 4)]);
    assert_eq!(basis.tree.len(), g.vertex_count() - 1);
    assert_eq!(CycleBasis::from_combinatorics(&arr.combinatorics()).cycles, basis.cycles);
}

#[test]
fn two_lines() {
    let arr = real(&[[0, 0, 1], [1, 1, 0]]);
    let pts = arr.singular_points();
    assert_eq!(pts.len(), 1);
    assert!(pts[0].at_infinity);
    let g = incidence_graph(&arr);
    assert_eq!((g.vertex_count(), g.edge_count(), g.betti1()), (3, 2, 0));
    assert!(cycle_basis(&g).unwrap().is_empty());
}

#[test]
fn generic_three_lines() {
    let g = incidence_graph(&generic3());
    assert_eq!((g.vertex_count(), g.edge_count()), (10, 12));
    assert_eq!(cycle_basis(&g).unwrap().cycles, [(1, 2), (1, 3), (2, 3)]);
}

#[test]
fn maclane_combinatorics() {
    let arr = maclane_arrangement();
    let pts = arr.singular_points();
    assert_eq!(pts.len(), 12);
    let hist = multiplicity_histogram(&pts);
    // Five affine triple points, three affine double points; four points on L0.
    assert_eq!(hist.get(&(false, 3)), Some(&5));
    assert_eq!(hist.get(&(false, 2)), Some(&3));
    assert_eq!(hist.get(&(true, 3)), Some(&3));
    assert_eq!(hist.get(&(true, 2)), Some(&1));
    assert!(pts.iter().all(|p| p.multiplicity() <= 3));
    let g = incidence_graph(&arr);
    assert_eq!(g.betti1(), 13);
    assert_eq!(cycle_basis(&g).unwrap().len(), 13);
    assert_eq!(arr.combinatorics().relator_count(), 13);
}

#[test]
fn construction_errors() {
    let f = FieldDesc::gaussian();
    let z = |a| zi(f, a, 0);
    assert_eq!(Arrangement::new(f, vec![[z(0), z(0), z(1)]]), Err(ArrangementError::TooFewLines(1)));
    assert_eq!(Arrangement::new(f, vec![[z(0), z(0), z(1)], [z(0), z(0), z(0)]]), Err(ArrangementError::ZeroLine(1)));
    assert_eq!(
        Arrangement::new(f, vec![[z(0), z(0), z(1)], [z(1), z(2), z(0)], [z(2), z(4), z(0)]]),
        Err(ArrangementError::Proportional(1, 2))
    );
    let e = QuadElem::one(FieldDesc::eisenstein());
    assert_eq!(Arrangement::new(f, vec![[z(0), z(0), z(1)], [e, z(1), z(0)]]), Err(ArrangementError::FieldMismatch(1)));
}

#[test]
fn dot_export() {
    let dot = incidence_graph(&didactic_arrangement()).to_dot();
    assert!(dot.starts_with("graph incidence {"));
    assert_eq!(dot.matches(" -- ").count(), 17);
    assert!(dot.contains("L1 -- P1_2_4;"));
}

fn small_real() -> impl Strategy<Value = Vec<[i64; 3]>> {
    prop::collection::vec(prop::array::uniform3(-2i64..=2), 1..6)
}

proptest! {
    #[test]
    fn pair_and_cycle_counts(extra in small_real()) {
        let f = FieldDesc::gaussian();
        let mut lines = vec![[zi(f, 0, 0), zi(f, 0, 0), zi(f, 1, 0)]];
        lines.extend(extra.iter().map(|l| [zi(f, l[0], 0), zi(f, l[1], 0), zi(f, l[2], 0)]));
        let Ok(arr) = Arrangement::new(f, lines) else { return Ok(()) };
        let n = arr.n();
        let pts = arr.singular_points();
        let pairs: usize = pts.iter().map(|p| p.multiplicity() * (p.multiplicity() - 1) / 2).sum();
        prop_assert_eq!(pairs, (n + 1) * n / 2);
        let g = incidence_graph(&arr);
        let formula = pts.iter().map(|p| p.multiplicity()).sum::<usize>() + 1 - (n + 1) - pts.len();
        let basis = cycle_basis(&g).unwrap();
        prop_assert_eq!(basis.len(), formula);
        prop_assert_eq!(g.betti1(), formula);
        prop_assert_eq!(basis.tree.len() + 1, g.vertex_count());
        let mut sorted = basis.cycles.clone();
        sorted.dedup();
        prop_assert_eq!(sorted.len(), basis.len());
    }
}
