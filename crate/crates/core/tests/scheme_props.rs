mod common;

use common::gauge_oracle;
use mchroma::scheme::{color_of_cell, HexagonKind, SchemeDocument, SUPPORTED_N};
use mchroma::{ColoringScheme, HexagonChoice, Vec2};
use proptest::prelude::*;

fn supported_n() -> impl Strategy<Value = usize> {
    prop::sample::select(SUPPORTED_N.to_vec())
}

/// Any valid hexagon, feasible or not: partition and regularity do not
/// depend on the packing condition.
fn any_choice() -> impl Strategy<Value = (usize, HexagonChoice)> {
    supported_n().prop_flat_map(|n| {
        let m = n / 2;
        let kind = prop_oneof![
            Just(HexagonKind::BoundaryMidpoint),
            (1..m - 1).prop_map(|index| HexagonKind::VertexIndex { index }),
            (0..m - 1, 0.01f64..0.99).prop_map(|(side, ratio)| HexagonKind::SideSplit { side, ratio }),
            (0.02f64..0.98).prop_map(|t| HexagonKind::ArcPosition { t }),
        ];
        (Just(n), kind, 0..n).prop_map(|(n, kind, k)| (n, HexagonChoice { kind, shared_side_index: k }))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn hexagon_is_inscribed_in_half_ball((n, c) in any_choice()) {
        let sc = ColoringScheme::build(n, Some(c)).unwrap();
        for &a in sc.hexagon().vertices() {
            prop_assert!((gauge_oracle(n, 1.0, a) - 1.0).abs() < 1e-9);
        }
        for i in 1..=3 {
            prop_assert_eq!(sc.hexagon().a(i + 3), -sc.hexagon().a(i));
        }
    }

    #[test]
    fn random_points_have_one_owner((n, c) in any_choice(), pts in prop::collection::vec((-20.0f64..20.0, -20.0f64..20.0), 200)) {
        let sc = ColoringScheme::build(n, Some(c)).unwrap();
        for (x, y) in pts {
            let p = Vec2::new(x, y);
            let claims = sc.claims(p);
            prop_assert_eq!(claims.len(), 1, "{} claimed by {:?}", p, claims);
            prop_assert_eq!(sc.cell_of(p).unwrap().coeffs, claims[0]);
        }
    }

    #[test]
    fn boundary_points_have_one_owner((n, c) in any_choice(), s in 0.0f64..1.0, i in -3i64..3, j in -3i64..3) {
        let sc = ColoringScheme::build(n, Some(c)).unwrap();
        let p = sc.tiling().point(i, j) + sc.hexagon().boundary_point(s);
        prop_assert_eq!(sc.claims(p).len(), 1);
        prop_assert_eq!(sc.cell_of(p).unwrap().coeffs, sc.claims(p)[0]);
    }

    #[test]
    fn antipodal_boundary_points_differ((n, c) in any_choice(), s in 0.0f64..1.0) {
        // H ⊂ C/2, so p and −p on the boundary are at C-distance at most 1;
        // the half-open rule must split them
        let sc = ColoringScheme::build(n, Some(c)).unwrap();
        let p = sc.hexagon().boundary_point(s);
        prop_assert_ne!(sc.cell_of(p).unwrap().coeffs, sc.cell_of(-p).unwrap().coeffs);
    }

    #[test]
    fn colors_are_periodic_and_regular((n, c) in any_choice(), x in -10.0f64..10.0, y in -10.0f64..10.0, i in -3i64..3, j in -3i64..3) {
        let sc = ColoringScheme::build(n, Some(c)).unwrap();
        let p = Vec2::new(x, y);
        let col = sc.color_of(p).unwrap();
        prop_assert_eq!(sc.color_of(p + sc.colors().point(i, j)).unwrap(), col);
        let back = p - sc.coset_reps()[col];
        prop_assert_eq!(sc.color_of(back).unwrap(), 0);
        for (d, &r) in sc.coset_reps().iter().enumerate() {
            prop_assert_eq!(sc.color_of(back + r).unwrap(), d);
        }
    }

    #[test]
    fn document_roundtrip((n, c) in any_choice()) {
        let sc = ColoringScheme::build(n, Some(c)).unwrap();
        let doc = sc.to_document();
        let text = serde_json::to_string(&doc).unwrap();
        let back: SchemeDocument = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(&back, &doc);
        prop_assert_eq!(ColoringScheme::from_document(&back).unwrap().to_document(), doc);
    }
}

#[test]
fn color_of_cell_uses_all_six_colors_once_per_block() {
    let mut seen = [0; 6];
    for i in 0..3 {
        for j in 0..2 {
            seen[color_of_cell((i, j))] += 1;
        }
    }
    assert_eq!(seen, [1; 6]);
    assert_eq!(color_of_cell((-1, -1)), color_of_cell((2, 1)));
}

#[test]
fn unsupported_sizes_are_rejected() {
    for n in [0, 4, 7, 9, 24] {
        assert!(ColoringScheme::build(n, None).is_err());
    }
    let c = HexagonChoice::canonical(24, HexagonKind::SideSplit { side: 2, ratio: 0.7 });
    assert!(ColoringScheme::build_experimental(24, c).is_ok());
    assert!(ColoringScheme::build_experimental(25, c).is_err());
}
