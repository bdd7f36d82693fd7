use mchroma::scheme::{default_choice, HexagonKind};
use mchroma::search::{certify, clearance, scan, Parameterization};
use mchroma::{HexagonChoice, EPS_SEP};

#[test]
fn reported_feasible_points_reevaluate_nonnegative() {
    let p = Parameterization::SideRatio { side: 2 };
    let r = scan(22, p, 64).unwrap();
    for iv in &r.intervals {
        for t in [iv.lo, 0.5 * (iv.lo + iv.hi), iv.hi] {
            assert!(clearance(22, p.choice(22, t)) >= -EPS_SEP, "t = {t}");
        }
        // endpoints bracket a sign change unless they hit (0, 1)
        if iv.lo > 1e-3 {
            assert!(clearance(22, p.choice(22, iv.lo - 2e-6)) < 0.0);
        }
        if iv.hi < 1.0 - 1e-3 {
            assert!(clearance(22, p.choice(22, iv.hi + 2e-6)) < 0.0);
        }
    }
    assert!(r.best_clearance >= r.samples.iter().map(|s| s.clearance).fold(f64::NEG_INFINITY, f64::max) - 1e-12);
}

#[test]
fn scan_is_deterministic() {
    let a = scan(14, Parameterization::ArcPosition, 40).unwrap();
    let b = scan(14, Parameterization::ArcPosition, 40).unwrap();
    assert_eq!(serde_json::to_string(&a).unwrap(), serde_json::to_string(&b).unwrap());
    assert_eq!(a.to_csv(), b.to_csv());
    assert_eq!(a.to_csv().lines().count(), 41);
}

#[test]
fn clearance_is_lipschitz_on_a_fine_grid() {
    // Lipschitz bound measured on a 4x finer grid, checked on the coarse one
    let p = Parameterization::ArcPosition;
    let slopes = |grid: usize| -> Vec<(f64, f64)> {
        let r = scan(12, p, grid).unwrap();
        let h = 1.0 / (grid + 1) as f64;
        r.samples
            .windows(2)
            .filter(|w| w[0].clearance.is_finite() && w[1].clearance.is_finite())
            .map(|w| (w[0].t, (w[1].clearance - w[0].clearance).abs() / h))
            .collect()
    };
    let fine = slopes(1599);
    let bound = fine.iter().map(|s| s.1).fold(0.0, f64::max);
    assert!(bound.is_finite() && bound > 0.0);
    for (t, slope) in slopes(399) {
        assert!(slope < 10.0 * bound, "jump at t = {t}: slope {slope}, bound {bound}");
    }
}

#[test]
fn exploratory_n24_reports_without_failing() {
    let r = scan(24, Parameterization::SideRatio { side: 2 }, 16).unwrap();
    assert_eq!(r.samples.len(), 16);
    assert_eq!(r.width, r.feasible_interval.map_or(0.0, |iv| iv.width()));
}

#[test]
fn every_supported_size_has_a_nonnegative_best() {
    for n in [8, 10, 12, 14, 16, 18, 20, 22] {
        let (c, _) = default_choice(n).unwrap();
        assert!(clearance(n, c) > EPS_SEP, "n = {n}");
    }
}

#[test]
fn n14_certificate_uses_a_vertex() {
    let c = certify(14).unwrap();
    assert!(!c.fallback);
    assert!(matches!(c.choice.kind, HexagonKind::VertexIndex { .. }));
    assert_eq!(Some(c.choice), default_choice(14).map(|d| d.0));
}

#[test]
fn extreme_ratio_is_infeasible() {
    let c = HexagonChoice::canonical(22, HexagonKind::SideSplit { side: 2, ratio: 0.98 });
    assert!(clearance(22, c) < 0.0);
}
