//! The invariant suite behind `arrgroup verify`.

use arrgroup_core::arrangement::{incidence_graph, CycleBasis};
use arrgroup_core::arvola::{labels_are_meridian_conjugates, LabelRule};
use arrgroup_core::boundary::boundary_presentation;
use arrgroup_core::inclusion::{
    complement_presentation_inclusion, inclusion_map, kernel_generators, randell_presentation, substitute_alpha0,
    InclusionTable, Variant,
};
use arrgroup_core::simplify::{abelianization, abelianize_word, presentation_eq};
use arrgroup_core::wiring::crossings_match_points;
use arrgroup_core::words::{Gen, Presentation, Word};

use crate::formats::{parse_wiring, serialize_wiring};
use crate::pipeline::Prepared;

/// One checked invariant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub ok: bool,
    pub detail: String,
}

fn check(out: &mut Vec<Check>, name: &str, ok: bool, detail: impl Into<String>) {
    out.push(Check { name: name.to_string(), ok, detail: detail.into() });
}

fn alphas(n: usize) -> Vec<Gen> {
    (1..=n).map(|i| Gen::Alpha(i as u32)).collect()
}

/// True when the word abelianizes to zero over α₁…αₙ after `α₀ = (α₁⋯αₙ)⁻¹`
/// and contains no ε.
pub fn abelianizes_to_zero(n: usize, w: &Word) -> bool {
    let v = substitute_alpha0(n, w);
    !v.generators().any(|g| matches!(g, Gen::Eps(..))) && abelianize_word(&v, &alphas(n)).iter().all(|&c| c == 0)
}

fn complement_ok(p: &Presentation, n: usize, relators: usize) -> (bool, String) {
    let ab = abelianization(p);
    let ok = p.generators == alphas(n) && p.relator_count() == relators && ab.is_free_of_rank(n);
    (ok, format!("{} generators, {} relators, H1 = {}", p.generators.len(), p.relator_count(), ab))
}

/// Runs every invariant that applies to the prepared input.
pub fn run_checks(prep: &Prepared) -> Vec<Check> {
    let mut out = Vec::new();
    let d = &prep.diagram;
    let comb = &prep.combinatorics;
    let n = d.n;
    let expected = comb.relator_count();

    if let Some(arr) = &prep.arrangement {
        let pts = arr.singular_points();
        let pairs: usize = pts.iter().map(|p| p.multiplicity() * (p.multiplicity() - 1) / 2).sum();
        check(&mut out, "every line pair meets once", pairs == (n + 1) * n / 2, format!("{} pairs", pairs));
        let g = incidence_graph(arr);
        let formula = pts.iter().map(|p| p.multiplicity()).sum::<usize>() + 1 - (n + 1) - pts.len();
        check(
            &mut out,
            "cycle count (tree complement = formula)",
            prep.basis.len() == formula && g.betti1() == formula,
            format!("b1 = {}", formula),
        );
        check(
            &mut out,
            "actual crossings match singular points",
            crossings_match_points(d, arr),
            format!("{} actual", d.actual_count()),
        );
        if arr.is_real() {
            check(
                &mut out,
                "real arrangement has no virtual crossings",
                d.virtual_count() == 0,
                format!("{} virtual", d.virtual_count()),
            );
        }
    }
    check(&mut out, "permutation consistency", d.permutation_consistent(), "");
    let round = parse_wiring(&serialize_wiring(d)).map(|r| &r == d).unwrap_or(false);
    check(&mut out, "wiring serialization round-trip", round, "");
    let from_comb = CycleBasis::from_combinatorics(comb);
    check(
        &mut out,
        "cycle pairs (s = nu(P), t)",
        from_comb.cycles == prep.basis.cycles,
        format!("{} pairs", prep.basis.len()),
    );

    for rule in [LabelRule::Generic, LabelRule::Simplified, LabelRule::Raw] {
        let labeled = prep.labeled(rule);
        let name = format!("{:?}", rule).to_lowercase();
        check(
            &mut out,
            &format!("labels are meridian conjugates ({})", name),
            labels_are_meridian_conjugates(&labeled),
            "",
        );
        let (ok, detail) = complement_ok(&prep.arvola(rule), n, expected);
        check(&mut out, &format!("arvola presentation ({})", name), ok, detail);
    }

    let bp = boundary_presentation(comb, &prep.basis);
    let ab = abelianization(&bp);
    check(
        &mut out,
        "boundary abelianization free of rank (n+1)+b1",
        ab.is_free_of_rank(n + 1 + prep.basis.len()) && bp.relator_count() == expected,
        format!("H1 = {}", ab),
    );

    match prep.inclusion(LabelRule::Generic) {
        Err(e) => check(&mut out, "inclusion data", false, e.to_string()),
        Ok(table) => inclusion_checks(&mut out, prep, &table, &bp),
    }

    if d.virtual_count() == 0 {
        let r = randell_presentation(d);
        let geo = prep
            .inclusion(LabelRule::Generic)
            .ok()
            .and_then(|t| complement_presentation_inclusion(comb, &prep.basis, &t, Variant::Geometric).ok());
        let ok = matches!((&r, &geo), (Ok(r), Some(g)) if presentation_eq(r, g) && same_families(r, g));
        check(&mut out, "randell presentation equals geometric inclusion presentation", ok, "");
    }
    out
}

/// Equal generators and equal relator lists up to order, family by family.
pub fn same_families(a: &Presentation, b: &Presentation) -> bool {
    let sorted = |p: &Presentation| {
        let mut v = p.relators.clone();
        v.sort();
        v
    };
    a.generators == b.generators && sorted(a) == sorted(b)
}

fn inclusion_checks(out: &mut Vec<Check>, prep: &Prepared, table: &InclusionTable, bp: &Presentation) {
    let n = prep.diagram.n;
    let expected = prep.combinatorics.relator_count();
    match inclusion_map(table, Variant::Framed) {
        Err(e) => check(out, "framed inclusion map", false, e.to_string()),
        Ok(map) => {
            let meridian_only = map.images.values().all(|w| !w.generators().any(|g| matches!(g, Gen::Eps(..))));
            check(out, "eliminated images are words in the meridians", meridian_only, "");
            let unknot = table.rows.iter().all(|r| map.apply(&r.unknotted()).map(|w| w == r.mu).unwrap_or(false));
            check(out, "i*(delta(e)) = mu for every pair", unknot, "");
            let kernel = kernel_generators(table);
            let kz = kernel.iter().all(|k| map.apply(k).map(|w| abelianizes_to_zero(n, &w)).unwrap_or(false));
            check(out, "kernel generators abelianize to 0", kz, format!("{} generators", kernel.len()));
            let rz = bp
                .expanded_relators()
                .iter()
                .all(|r| map.apply(r).map(|w| abelianizes_to_zero(n, &w)).unwrap_or(false));
            check(out, "i* of boundary relators abelianizes to 0", rz, "");
        }
    }
    for v in [Variant::Framed, Variant::Geometric] {
        let name = format!("inclusion presentation ({:?})", v).to_lowercase();
        match complement_presentation_inclusion(&prep.combinatorics, &prep.basis, table, v) {
            Err(e) => check(out, &name, false, e.to_string()),
            Ok(p) => {
                let (ok, detail) = complement_ok(&p, n, expected);
                check(out, &name, ok, detail);
            }
        }
    }
}
