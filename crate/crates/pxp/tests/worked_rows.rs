use pxp::format::{build_candidate, BasketEntry, CY3Candidate, FormatWeights, OrbifoldPoint};
use pxp::stratum::{candidate_strata, type_one_centers, validate_basket, Verdict};
use pxp::unproj::{
    ci_degeneration, family_table, generic_model_check, higher_embedding_diagnostic, node_count,
    project, project_auto, FamilyInputs, ModelStatus, RefKind, TJFormat, UnprojError,
};
use pxp::rat;

fn cand(a: u32, r: (u32, u32), c: (u32, u32), cones: &[u32], ci: &[u32]) -> CY3Candidate {
    build_candidate(&FormatWeights::new(a, r, c), cones, ci).unwrap()
}

#[test]
fn row22_degenerates_to_a_complete_intersection() {
    let c = cand(1, (1, 1), (1, 1), &[1, 1], &[2, 4, 5]);
    let m = project(&c, &OrbifoldPoint::new(3, [1, 1, 1]), (0, 2)).unwrap();
    assert_eq!(m.entry_rows()[0], vec![1, 2, 4, 5]);
    assert_eq!(m.b, [rat(3, 2), rat(-1, 2), rat(1, 2), rat(5, 2), rat(7, 2)]);
    assert_eq!(m.pf_degrees(), [6, 8, 7, 5, 4]);
    assert_eq!(generic_model_check(&m), ModelStatus::ZeroEntry { i: 2, j: 3 });
    let ci = ci_degeneration(&m, (2, 3)).unwrap();
    assert_eq!(ci.chosen.pfaffian, 5);
    assert_eq!(ci.chosen.ci_degrees, vec![5, 6]);
    assert_eq!(ci.chosen.ambient, vec![1, 1, 1, 2, 3, 3]);
    assert!(!ci.ambiguous);

    let inputs = FamilyInputs {
        model: m,
        realizable: Some(vec![TJFormat::Tom(1), TJFormat::Tom(2), TJFormat::Jerry(3, 5)]),
        euler_reference: -152,
        reference_kind: RefKind::GenericY,
        extra: vec![("Y_{5^2,6^3} in P(1^3,2,3^3)".into(), 30)],
    };
    let t = family_table(&c, &inputs).unwrap();
    let e: Vec<i64> = t.rows.iter().map(|r| r.euler).collect();
    assert_eq!(e, vec![-110, -106, -102, -94]);
    assert_eq!(t.family_count, 4);
}

#[test]
fn row20_has_a_weighted_divisor() {
    let c = cand(1, (0, 3), (0, 3), &[1, 2], &[4, 4, 4]);
    assert_eq!(c.weight_matrix().a, [[1, 1, 4], [1, 1, 4], [4, 4, 7]]);
    let (m, cell) = project_auto(&c, &OrbifoldPoint::new(7, [1, 2, 4])).unwrap();
    assert_eq!(cell, (2, 2));
    assert_eq!(m.entry_rows()[0], vec![4, 4, 4, 4]);
    assert_eq!(m.divisor.plane_weights, [1, 2, 4]);
    assert_eq!(m.divisor.generator_degrees, [1, 1, 1, 1]);
    assert_eq!(node_count(&m, TJFormat::Tom(1)), Ok(4));
    assert_eq!(node_count(&m, TJFormat::Jerry(2, 3)), Ok(6));
    let t = family_table(
        &c,
        &FamilyInputs {
            model: m,
            realizable: Some(vec![TJFormat::Tom(1), TJFormat::Jerry(2, 3)]),
            euler_reference: -174,
            reference_kind: RefKind::KnownFamily { nodes: 4 },
            extra: vec![],
        },
    )
    .unwrap();
    assert_eq!(t.euler_y, -180);
    assert_eq!(t.rows.iter().map(|r| r.euler).collect::<Vec<_>>(), vec![-174, -170]);
}

#[test]
fn row14_centres() {
    let mut c = cand(1, (0, 1), (1, 2), &[1, 1], &[2, 4, 4]);
    c.basket = vec![
        BasketEntry { r: 3, e: [2, 2, 2], count: 1 },
        BasketEntry { r: 5, e: [1, 1, 3], count: 1 },
    ];
    let v = validate_basket(&c, &c.basket);
    assert!(v.points.iter().all(|p| p.verdict != Verdict::Fail));
    let centres = type_one_centers(&c, &c.basket);
    assert_eq!(centres.len(), 1);
    assert_eq!(centres[0].r, 5);
    assert!(matches!(
        project(&c, &OrbifoldPoint::new(3, [2, 2, 2]), (2, 1)),
        Err(UnprojError::NotTypeOne { .. })
    ));
    let m = project(&c, &centres[0], (2, 2)).unwrap();
    assert_eq!(m.entry_rows()[0], vec![2, 3, 4, 4]);
    assert_eq!((m.m(2, 3), m.m(4, 5)), (0, 3));
    assert_eq!(m.divisor.plane_weights, [1, 1, 3]);
    let w = higher_embedding_diagnostic(&m, TJFormat::Tom(1));
    assert_eq!(w.len(), 1);
    assert!(w[0].contains("weight-3"));
    // a non-integral count on D = P(1,1,3)
    assert!(matches!(node_count(&m, TJFormat::Tom(1)), Err(UnprojError::NonIntegral { .. })));
    let types: Vec<_> = candidate_strata(&c).types().into_keys().collect();
    assert_eq!(types, vec![OrbifoldPoint::new(3, [2, 2, 2]), OrbifoldPoint::new(5, [1, 1, 3])]);
}

#[test]
fn wrong_cell_is_rejected() {
    let c = cand(1, (1, 0), (0, 1), &[1, 1, 1], &[2, 2, 2, 3]);
    assert!(matches!(
        project(&c, &OrbifoldPoint::new(3, [1, 1, 1]), (0, 0)),
        Err(UnprojError::BadCenter(_))
    ));
}
