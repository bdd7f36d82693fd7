//! One-parameter scans of hexagon choices for feasibility.
//!
//! The clearance of a choice is the smallest separation margin between
//! `C/2 ⊕ H` and its translates by non-flat vectors of `L'`. A choice is
//! feasible when the clearance is nonnegative; defaults are certified only
//! with clearance above [`EPS_SEP`].

use std::collections::BTreeMap;
use std::fmt::Write as _;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::SearchError;
use crate::geom::{minkowski_sum, separate, DiskQuery, Vec2, EPS_SEP};
use crate::scheme::{ColoringScheme, HexagonChoice, HexagonKind, SUPPORTED_N};

const ROOT_TOL: f64 = 1e-6;
const GOLDEN_TOL: f64 = 1e-7;

fn build_any(n: usize, choice: HexagonChoice) -> Option<ColoringScheme> {
    ColoringScheme::build_experimental(n, choice).ok()
}

/// Smallest margin over the non-flat `L'` neighbors of `C/2 ⊕ H`.
/// `−∞` when the choice does not produce a valid hexagon, `+∞` when no
/// non-flat neighbor exists (impossible for a rank-2 lattice, kept as a
/// guard).
pub fn clearance(n: usize, choice: HexagonChoice) -> f64 {
    let Some(scheme) = build_any(n, choice) else {
        return f64::NEG_INFINITY;
    };
    let sum = minkowski_sum(scheme.half_ball(), scheme.hexagon().polygon()).expect("valid polygons");
    let r = sum.circumradius_about(Vec2::ZERO);
    // margin(v) >= |v| - 2R, so anything beyond 2R + reach cannot beat reach
    let mut reach = r.max(1.0);
    while reach < 1e6 {
        let pts = scheme
            .colors()
            .points_in_disk(2.0 * r + reach, DiskQuery::OPEN_PUNCTURED)
            .expect("finite radius");
        let best = pts
            .iter()
            .filter(|lp| !(lp.coeffs.0 == 0 && lp.coeffs.1.abs() == 1))
            .map(|lp| separate(&sum, &sum.translate(lp.point)).margin)
            .fold(f64::INFINITY, f64::min);
        if best <= reach {
            return best;
        }
        reach *= 2.0;
    }
    f64::INFINITY
}

/// A one-parameter family of hexagons, `t` in `(0, 1)`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Parameterization {
    /// Position along the whole arc from `A2` to `A6`.
    ArcPosition,
    /// Position along one side of that arc.
    SideRatio { side: usize },
}

impl Parameterization {
    pub fn choice(&self, n: usize, t: f64) -> HexagonChoice {
        let kind = match *self {
            Parameterization::ArcPosition => HexagonKind::ArcPosition { t },
            Parameterization::SideRatio { side } => HexagonKind::SideSplit { side, ratio: t },
        };
        HexagonChoice::canonical(n, kind)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ScanSample {
    pub t: f64,
    /// Serialized as `null` when the hexagon is degenerate.
    pub clearance: f64,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Interval {
    pub lo: f64,
    pub hi: f64,
}

impl Interval {
    pub fn width(&self) -> f64 {
        self.hi - self.lo
    }

    pub fn contains(&self, t: f64) -> bool {
        self.lo <= t && t <= self.hi
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FeasibilityReport {
    pub n: usize,
    pub parameterization: Parameterization,
    pub grid: usize,
    pub samples: Vec<ScanSample>,
    /// Maximal feasible intervals, endpoints refined by bisection.
    pub intervals: Vec<Interval>,
    pub best_t: f64,
    pub best_clearance: f64,
    /// Interval containing `best_t`, if the best point is feasible.
    pub feasible_interval: Option<Interval>,
    /// Width of `feasible_interval`, zero when there is none.
    pub width: f64,
}

impl FeasibilityReport {
    pub fn to_csv(&self) -> String {
        let mut s = String::from("t,clearance\n");
        for smp in &self.samples {
            let _ = writeln!(s, "{},{}", smp.t, smp.clearance);
        }
        s
    }
}

fn bisect(f: &impl Fn(f64) -> f64, mut bad: f64, mut good: f64) -> f64 {
    while (good - bad).abs() > ROOT_TOL {
        let mid = 0.5 * (bad + good);
        if f(mid) >= 0.0 {
            good = mid;
        } else {
            bad = mid;
        }
    }
    good
}

fn golden_max(f: &impl Fn(f64) -> f64, mut a: f64, mut b: f64) -> (f64, f64) {
    let g = (5f64.sqrt() - 1.0) / 2.0;
    let mut c = b - g * (b - a);
    let mut d = a + g * (b - a);
    let (mut fc, mut fd) = (f(c), f(d));
    while b - a > GOLDEN_TOL {
        if fc >= fd {
            b = d;
            d = c;
            fd = fc;
            c = b - g * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + g * (b - a);
            fd = f(d);
        }
    }
    let t = 0.5 * (a + b);
    (t, f(t))
}

/// Scan `grid` interior points of the family, locate the feasible
/// intervals and the clearance maximum.
pub fn scan(n: usize, param: Parameterization, grid: usize) -> Result<FeasibilityReport, SearchError> {
    if grid < 3 {
        return Err(SearchError::GridTooSmall(grid));
    }
    let f = |t: f64| clearance(n, param.choice(n, t));
    let ts: Vec<f64> = (0..grid).map(|k| (k + 1) as f64 / (grid + 1) as f64).collect();
    let cl: Vec<f64> = ts.par_iter().map(|&t| f(t)).collect();
    let samples: Vec<ScanSample> = ts.iter().zip(&cl).map(|(&t, &c)| ScanSample { t, clearance: c }).collect();

    let ok = |k: usize| cl[k] >= 0.0;
    let mut intervals = Vec::new();
    let mut k = 0;
    while k < grid {
        if !ok(k) {
            k += 1;
            continue;
        }
        let start = k;
        while k + 1 < grid && ok(k + 1) {
            k += 1;
        }
        let left_bad = if start == 0 { 0.0 } else { ts[start - 1] };
        let right_bad = if k + 1 == grid { 1.0 } else { ts[k + 1] };
        intervals.push(Interval { lo: bisect(&f, left_bad, ts[start]), hi: bisect(&f, right_bad, ts[k]) });
        k += 1;
    }

    let kbest = (0..grid).max_by(|&i, &j| cl[i].total_cmp(&cl[j])).expect("grid >= 3");
    let (best_t, best_clearance) = if cl[kbest].is_finite() {
        let a = if kbest == 0 { ts[0] * 0.5 } else { ts[kbest - 1] };
        let b = if kbest + 1 == grid { 0.5 * (1.0 + ts[kbest]) } else { ts[kbest + 1] };
        let (t, c) = golden_max(&f, a, b);
        if c >= cl[kbest] {
            (t, c)
        } else {
            (ts[kbest], cl[kbest])
        }
    } else {
        (ts[kbest], cl[kbest])
    };
    let feasible_interval = if best_clearance >= 0.0 {
        intervals.iter().copied().find(|iv| iv.contains(best_t))
    } else {
        None
    };
    Ok(FeasibilityReport {
        n,
        parameterization: param,
        grid,
        samples,
        intervals,
        best_t,
        best_clearance,
        width: feasible_interval.map_or(0.0, |iv| iv.width()),
        feasible_interval,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Candidate {
    pub choice: HexagonChoice,
    pub clearance: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CertifiedChoice {
    pub n: usize,
    pub choice: HexagonChoice,
    pub clearance: f64,
    /// True when no vertex or side-bisector candidate cleared the
    /// threshold and a side ratio was optimized instead.
    pub fallback: bool,
    pub candidates: Vec<Candidate>,
}

fn candidate(n: usize, kind: HexagonKind) -> Candidate {
    let choice = HexagonChoice::canonical(n, kind);
    Candidate { choice, clearance: clearance(n, choice) }
}

fn pick(cands: &[Candidate]) -> Option<Candidate> {
    cands
        .iter()
        .copied()
        .filter(|c| c.clearance > EPS_SEP)
        .max_by(|a, b| a.clearance.total_cmp(&b.clearance))
}

/// Optimize the ratio on each side of the arc, rounded to 0.01.
fn side_ratio_candidates(n: usize) -> Vec<Candidate> {
    (0..n / 2)
        .into_par_iter()
        .map(|side| {
            let param = Parameterization::SideRatio { side };
            let f = |t: f64| clearance(n, param.choice(n, t));
            let grid = 50;
            let k = (1..grid).max_by(|&i, &j| f(i as f64 / grid as f64).total_cmp(&f(j as f64 / grid as f64))).unwrap();
            let (t, _) = golden_max(&f, (k - 1) as f64 / grid as f64, (k + 1) as f64 / grid as f64);
            let ratio = ((t * 100.0).round() / 100.0).clamp(0.01, 0.99);
            candidate(n, HexagonKind::SideSplit { side, ratio })
        })
        .collect()
}

/// Certify a hexagon for `n`: the best arc vertex (or side bisector for
/// `n = 20`) with clearance above [`EPS_SEP`], falling back to an
/// optimized side ratio.
pub fn certify(n: usize) -> Result<CertifiedChoice, SearchError> {
    if !SUPPORTED_N.contains(&n) {
        return Err(SearchError::Scheme(crate::error::SchemeError::UnsupportedN(n)));
    }
    let m = n / 2;
    let mut candidates: Vec<Candidate> = if n == 20 {
        (0..m).into_par_iter().map(|side| candidate(n, HexagonKind::SideSplit { side, ratio: 0.5 })).collect()
    } else {
        (1..m).into_par_iter().map(|index| candidate(n, HexagonKind::VertexIndex { index })).collect()
    };
    if let Some(c) = pick(&candidates) {
        return Ok(CertifiedChoice { n, choice: c.choice, clearance: c.clearance, fallback: false, candidates });
    }
    let extra = side_ratio_candidates(n);
    let best = pick(&extra);
    candidates.extend(extra);
    match best {
        Some(c) => Ok(CertifiedChoice { n, choice: c.choice, clearance: c.clearance, fallback: true, candidates }),
        None => Err(SearchError::NoFeasibleChoice {
            n,
            best: candidates.iter().map(|c| c.clearance).fold(f64::NEG_INFINITY, f64::max),
        }),
    }
}

/// Certified choices for the sizes without a published hexagon.
pub fn certify_defaults() -> Result<BTreeMap<usize, CertifiedChoice>, SearchError> {
    [14, 16, 18, 20].into_par_iter().map(|n| certify(n).map(|c| (n, c))).collect()
}
