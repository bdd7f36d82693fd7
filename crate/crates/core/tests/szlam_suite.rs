mod common;

use std::sync::Arc;

use mchroma::scheme::SUPPORTED_N;
use mchroma::szlam::{
    check_red_unit_avoidance, check_translate_hits, from_red_blue, to_red_blue, Configuration, RedBlueColoring,
    SampleDomain,
};
use mchroma::{ColoringScheme, SzlamError, Vec2};

#[test]
fn derived_coloring_agrees_with_scheme_up_to_relabeling() {
    // red = class 0 and K = −reps: x + a_i is red exactly when x has color i
    for n in SUPPORTED_N {
        let sc = Arc::new(ColoringScheme::build(n, None).unwrap());
        let (rb, k) = to_red_blue(sc.clone());
        let d = from_red_blue(rb, k);
        for t in 0..500 {
            let x = Vec2::new((t as f64 * 0.731).sin() * 9.0, (t as f64 * 1.37).cos() * 9.0);
            assert_eq!(d.color(x).unwrap(), sc.color_of(x).unwrap() + 1);
        }
    }
}

#[test]
fn red_class_avoids_unit_distance() {
    let sc = Arc::new(ColoringScheme::build(22, None).unwrap());
    let (rb, _) = to_red_blue(sc.clone());
    let r = check_red_unit_avoidance(&rb, sc.norm(), 50_000, 11, None);
    assert!(r.pass);
}

#[test]
fn stripe_coloring_with_two_point_configuration() {
    // red stripes of width 1/2 every 1: any translate of {0, (1/2, 0)} hits red
    let rb = RedBlueColoring::new("stripes", |p| p.x.rem_euclid(1.0) < 0.5, None);
    let k = Configuration::new(vec![Vec2::ZERO, Vec2::new(0.5, 0.0)]).unwrap();
    let dom = SampleDomain::Box { min: Vec2::new(-3.0, -3.0), max: Vec2::new(3.0, 3.0) };
    assert!(check_translate_hits(&rb, &k, 10_000, 2, Some(dom)).pass);
    let short = Configuration::new(vec![Vec2::ZERO, Vec2::new(0.25, 0.0)]).unwrap();
    assert!(!check_translate_hits(&rb, &short, 10_000, 2, Some(dom)).pass);
    let d = from_red_blue(rb, short);
    assert!(matches!(d.color(Vec2::new(0.6, 0.0)), Err(SzlamError::HypothesisViolated(_))));
}

#[test]
fn configuration_serializes_as_point_list() {
    let k = Configuration::new(vec![Vec2::ZERO, Vec2::new(1.0, -2.0)]).unwrap();
    let s = serde_json::to_string(&k).unwrap();
    assert_eq!(s, "[[0.0,0.0],[1.0,-2.0]]");
    assert!(serde_json::from_str::<Configuration>("[]").is_err());
    assert!(serde_json::from_str::<Configuration>("[[1,1],[1,1]]").is_err());
}
