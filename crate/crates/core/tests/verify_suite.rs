mod common;

use common::gauge_oracle;
use mchroma::scheme::{HexagonKind, SUPPORTED_N};
use mchroma::verify::{
    adversarial_boundary_pairs, adversarial_pairs, packing_certificate, regression_lines, sample_contact_pairs,
    sample_unit_pairs, UNIT_TOL,
};
use mchroma::{ColoringScheme, HexagonChoice};

#[test]
fn sampling_is_reproducible_and_thread_independent() {
    let sc = ColoringScheme::build(16, None).unwrap();
    let a = sample_unit_pairs(&sc, 50_000, 9);
    let pool = rayon::ThreadPoolBuilder::new().num_threads(3).build().unwrap();
    let b = pool.install(|| sample_unit_pairs(&sc, 50_000, 9));
    assert_eq!(serde_json::to_string(&a).unwrap(), serde_json::to_string(&b).unwrap());
}

#[test]
fn adversarial_pairs_are_unit_pairs_everywhere() {
    for n in SUPPORTED_N {
        let sc = ColoringScheme::build(n, None).unwrap();
        let pairs = adversarial_pairs(&sc);
        assert!(pairs.len() > 500, "n = {n}: {}", pairs.len());
        for (p, q) in pairs {
            assert!((gauge_oracle(n, 2.0, q - p) - 1.0).abs() <= UNIT_TOL * 10.0);
        }
    }
}

#[test]
fn n18_vertex_two_touches_but_stays_proper() {
    // the vertex choice is rejected by the strict certificate (margin 0
    // against ±v1) but the half-open tiles keep it proper
    let c = HexagonChoice::canonical(18, HexagonKind::VertexIndex { index: 2 });
    let sc = ColoringScheme::build(18, Some(c)).unwrap();
    let rep = packing_certificate(&sc);
    assert!(!rep.pass);
    assert!(rep.min_nonflat_margin.unwrap().abs() <= 1e-7);
    assert!(sample_unit_pairs(&sc, 300_000, 18).pass);
    let adv = adversarial_boundary_pairs(&sc);
    assert!(adv.pass, "{:?}", adv.violations.first());
    assert_eq!(sample_contact_pairs(&sc, 1000, 1).n_samples, 0);
}

#[test]
fn overlapping_choices_are_caught_by_contact_sampling() {
    for (n, side, ratio) in [(22, 2, 0.98), (20, 3, 0.5), (16, 4, 0.5)] {
        let c = HexagonChoice::canonical(n, HexagonKind::SideSplit { side, ratio });
        let sc = ColoringScheme::build(n, Some(c)).unwrap();
        assert!(!packing_certificate(&sc).pass, "n = {n}");
        let r = sample_contact_pairs(&sc, 2000, 3);
        assert!(!r.violations.is_empty(), "n = {n}");
        for viol in &r.violations {
            assert!((gauge_oracle(n, 2.0, viol.q - viol.p) - 1.0).abs() < 1e-12);
        }
    }
}

#[test]
fn regression_lines_separate_with_positive_margins() {
    for n in [12, 22] {
        let sc = ColoringScheme::build(n, None).unwrap();
        for r in regression_lines(&sc) {
            assert!(r.check.separates, "n = {n} {}", r.name);
            assert!(r.check.min_margin_p >= -1e-9 && r.check.min_margin_q >= -1e-9);
        }
    }
}
