//! Certificates and tests that a [`ColoringScheme`] is a proper coloring.
//!
//! Two points of one color are at `C`-distance 1 only if they come from
//! tiles `λ + H` and `λ' + H` with `λ − λ'` in `L'` and the sums
//! `λ + C/2 ⊕ H`, `λ' + C/2 ⊕ H` meet. The packing certificate checks every
//! `L'` neighbor whose sum could reach the central one. The flat neighbors
//! `±v2` touch along the shared sides; the half-open rule puts one side of
//! each such contact into a differently colored tile. The samplers test
//! that claim directly.

use std::time::Instant;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::geom::{
    check_separating_line, minkowski_sum, polygon_area, separate, ConvexPolygon, DiskQuery, Lattice2, Line, LineCheck,
    SeparationResult, Vec2, Verdict, EPS_SEP,
};
use crate::sampling::par_collect;
use crate::scheme::{default_choice, unit_at, ColoringScheme};

/// Tolerance on `gauge(q − p) = 1` for a recorded unit pair.
pub const UNIT_TOL: f64 = 1e-12;

/// `C/2 ⊕ H` for the scheme.
pub fn tile_sum(scheme: &ColoringScheme) -> ConvexPolygon {
    minkowski_sum(scheme.half_ball(), scheme.hexagon().polygon()).expect("sum of valid convex polygons")
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct NeighborCheck {
    /// Coordinates in the `L'` basis `(v1, v2)`.
    pub coeffs: (i64, i64),
    pub lattice_vector: Vec2,
    pub separation: SeparationResult,
    pub is_flat_direction: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PackingReport {
    pub scheme_id: String,
    /// Circumradius `R` of `C/2 ⊕ H` about the origin.
    pub sum_circumradius: f64,
    /// Neighbors are all `v ∈ L' \ {0}` with `|v| < 2R`.
    pub enumeration_radius: f64,
    pub neighbors: Vec<NeighborCheck>,
    /// Smallest margin over non-flat neighbors (`None` when there are none
    /// inside the enumeration radius).
    pub min_nonflat_margin: Option<f64>,
    pub pass: bool,
}

impl PackingReport {
    pub fn flat_neighbors(&self) -> impl Iterator<Item = &NeighborCheck> {
        self.neighbors.iter().filter(|n| n.is_flat_direction)
    }

    pub fn nonflat_neighbors(&self) -> impl Iterator<Item = &NeighborCheck> {
        self.neighbors.iter().filter(|n| !n.is_flat_direction)
    }
}

/// Packing check of the translates `L' + sum`.
pub fn packing_check(scheme_id: &str, sum: &ConvexPolygon, colors: &Lattice2) -> PackingReport {
    let r = sum.circumradius_about(Vec2::ZERO);
    let radius = 2.0 * r;
    let pts = colors
        .points_in_disk(radius, DiskQuery::OPEN_PUNCTURED)
        .expect("circumradius is finite and positive");
    let neighbors: Vec<NeighborCheck> = pts
        .into_iter()
        .map(|lp| NeighborCheck {
            coeffs: lp.coeffs,
            lattice_vector: lp.point,
            separation: separate(sum, &sum.translate(lp.point)),
            is_flat_direction: lp.coeffs.0 == 0 && lp.coeffs.1.abs() == 1,
        })
        .collect();
    let pass = neighbors.iter().all(|nb| {
        if nb.is_flat_direction {
            nb.separation.margin >= -EPS_SEP
        } else {
            nb.separation.verdict == Verdict::Disjoint
        }
    });
    let min_nonflat_margin = neighbors
        .iter()
        .filter(|n| !n.is_flat_direction)
        .map(|n| n.separation.margin)
        .reduce(f64::min);
    PackingReport {
        scheme_id: scheme_id.to_string(),
        sum_circumradius: r,
        enumeration_radius: radius,
        neighbors,
        min_nonflat_margin,
        pass,
    }
}

/// Check that the translates `L' + C/2 ⊕ H` form a packing.
pub fn packing_certificate(scheme: &ColoringScheme) -> PackingReport {
    packing_check(&scheme.id(), &tile_sum(scheme), scheme.colors())
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LineRegression {
    pub name: String,
    /// `L'` vector of the second sum.
    pub neighbor: Vec2,
    pub line: Line,
    pub check: LineCheck,
}

/// The published separating lines, for the default n = 12 and n = 22
/// schemes. Empty for anything else.
pub fn regression_lines(scheme: &ColoringScheme) -> Vec<LineRegression> {
    let n = scheme.n();
    if default_choice(n).map(|(c, _)| c) != Some(*scheme.choice()) {
        return Vec::new();
    }
    let sum = tile_sum(scheme);
    let (v1, v2) = (scheme.colors().b1(), scheme.colors().b2());
    let mut lines: Vec<(&str, Vec2, Line)> = Vec::new();
    match n {
        12 => {
            let s3 = 3f64.sqrt();
            let l = Line::from_slope_intercept(-(2.0 + s3) / 3.0, (5.0 + 2.0 * s3) / 3.0).unwrap();
            lines.push(("l", v1 + v2, l));
        }
        22 => {
            let (a1, a6) = (scheme.hexagon().a(1), scheme.hexagon().a(6));
            // l1 runs parallel to A6A1 through the vertex w6 + a6 of the sum,
            // lifted by 1/300
            let w6 = unit_at(12.0, 22.0);
            let p1 = Vec2::new(w6.x + a6.x, w6.y + a6.y + 1.0 / 300.0);
            let l1 = Line::through_point_slope(p1, (a6.y - a1.y) / (a6.x - a1.x)).unwrap();
            // l2 runs parallel to the side w1w2 through w2 + a1, lifted by 1/50
            let (w1, w2) = (unit_at(2.0, 22.0), unit_at(4.0, 22.0));
            let p2 = Vec2::new(w2.x + a1.x, w2.y + a1.y + 1.0 / 50.0);
            let l2 = Line::through_point_slope(p2, (w2.y - w1.y) / (w2.x - w1.x)).unwrap();
            lines.push(("l1", v1, l1));
            lines.push(("l2", v1 + v2, l2));
        }
        _ => {}
    }
    lines
        .into_iter()
        .map(|(name, v, line)| LineRegression {
            name: name.to_string(),
            neighbor: v,
            check: check_separating_line(&sum, &sum.translate(v), &line),
            line,
        })
        .collect()
}

/// A monochromatic pair at `C`-distance 1.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Violation {
    /// Sample index (Monte Carlo) or pair index (adversarial suite).
    pub index: u64,
    pub p: Vec2,
    pub q: Vec2,
    pub color: usize,
    pub gauge: f64,
}

/// A point the coloring could not place; indicates a tolerance problem.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CellFailure {
    pub index: u64,
    pub point: Vec2,
    pub message: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SamplingReport {
    pub n_samples: u64,
    pub seed: u64,
    pub violations: Vec<Violation>,
    pub cell_failures: Vec<CellFailure>,
    pub pass: bool,
    /// Wall-clock seconds; not serialized so reports stay reproducible.
    #[serde(skip)]
    pub elapsed: f64,
}

enum PairOutcome {
    Violation(Violation),
    Failure(CellFailure),
}

fn check_pair(scheme: &ColoringScheme, index: u64, p: Vec2, q: Vec2) -> Option<PairOutcome> {
    let fail = |point: Vec2, e: crate::SchemeError| {
        Some(PairOutcome::Failure(CellFailure { index, point, message: e.to_string() }))
    };
    let cp = match scheme.color_of(p) {
        Ok(c) => c,
        Err(e) => return fail(p, e),
    };
    let cq = match scheme.color_of(q) {
        Ok(c) => c,
        Err(e) => return fail(q, e),
    };
    (cp == cq).then(|| {
        PairOutcome::Violation(Violation { index, p, q, color: cp, gauge: scheme.norm().gauge(q - p) })
    })
}

fn assemble(n_samples: u64, seed: u64, outcomes: Vec<PairOutcome>, start: Instant) -> SamplingReport {
    let mut violations = Vec::new();
    let mut cell_failures = Vec::new();
    for o in outcomes {
        match o {
            PairOutcome::Violation(v) => violations.push(v),
            PairOutcome::Failure(f) => cell_failures.push(f),
        }
    }
    SamplingReport {
        n_samples,
        seed,
        pass: violations.is_empty() && cell_failures.is_empty(),
        violations,
        cell_failures,
        elapsed: start.elapsed().as_secs_f64(),
    }
}

/// Random unit pairs `(p, p + u)` with `u ∈ ∂C`. `p` is uniform over the
/// 3×3 block of `L'` fundamental parallelograms around the origin.
pub fn sample_unit_pairs(scheme: &ColoringScheme, n_samples: u64, seed: u64) -> SamplingReport {
    let start = Instant::now();
    let colors = scheme.colors();
    let outcomes = par_collect(n_samples, seed, |i, rng| {
        let s: f64 = rng.gen_range(-1.0..2.0);
        let t: f64 = rng.gen_range(-1.0..2.0);
        let p = colors.b1() * s + colors.b2() * t;
        let u = scheme.norm().boundary_point(rng.gen::<f64>());
        check_pair(scheme, i, p, p + u)
    });
    assemble(n_samples, seed, outcomes, start)
}

/// Unit pairs `(x, q)` with `x` in the central tile and `q` in a tile of
/// the same color whose sum meets the central one with positive area.
/// `x` is uniform over the set of points that have a unit partner in that
/// tile, `q` uniform by length over the partners. Flat neighbors and
/// touching neighbors contribute nothing here; the boundary suite covers
/// them. A scheme passing the packing certificate yields no pairs.
pub fn sample_contact_pairs(scheme: &ColoringScheme, n_samples: u64, seed: u64) -> SamplingReport {
    let start = Instant::now();
    let hex = scheme.hexagon().polygon();
    let ball = scheme.norm().ball();
    let report = packing_certificate(scheme);
    // (tile, fan triangles with cumulative areas)
    let targets: Vec<(ConvexPolygon, Vec<(Vec2, Vec2, Vec2)>, Vec<f64>)> = report
        .nonflat_neighbors()
        .filter(|nb| nb.separation.verdict != Verdict::Disjoint)
        .filter_map(|nb| {
            let tile = hex.translate(nb.lattice_vector);
            let reach = minkowski_sum(&tile, ball).expect("valid polygons");
            let region = hex.clip(reach.vertices());
            if region.len() < 3 || polygon_area(&region) <= EPS_SEP * EPS_SEP {
                return None;
            }
            let tris: Vec<_> = (1..region.len() - 1).map(|i| (region[0], region[i], region[i + 1])).collect();
            let mut acc = 0.0;
            let cum = tris
                .iter()
                .map(|&(a, b, c)| {
                    acc += 0.5 * (b - a).cross(c - a).abs();
                    acc
                })
                .collect();
            Some((tile, tris, cum))
        })
        .collect();
    if targets.is_empty() {
        return assemble(0, seed, Vec::new(), start);
    }
    let m = targets.len() as u64;
    let outcomes = par_collect(n_samples, seed, |i, rng| {
        let (tile, tris, cum) = &targets[(i % m) as usize];
        let pick = rng.gen::<f64>() * cum[cum.len() - 1];
        let k = cum.partition_point(|&c| c < pick).min(tris.len() - 1);
        let (a, b, c) = tris[k];
        let (mut r1, mut r2): (f64, f64) = (rng.gen(), rng.gen());
        if r1 + r2 > 1.0 {
            r1 = 1.0 - r1;
            r2 = 1.0 - r2;
        }
        let x = a + (b - a) * r1 + (c - a) * r2;
        let pieces: Vec<(Vec2, Vec2)> = ball
            .edges()
            .filter_map(|(u, w)| {
                let (p, q) = (x + u, x + w);
                tile.clip_segment(p, q).map(|(t0, t1)| (p.lerp(q, t0), p.lerp(q, t1)))
            })
            .collect();
        let total: f64 = pieces.iter().map(|(p, q)| p.distance(*q)).sum();
        if total <= 0.0 {
            return None;
        }
        let mut s = rng.gen::<f64>() * total;
        let mut q = pieces[pieces.len() - 1].1;
        for &(p0, p1) in &pieces {
            let len = p0.distance(p1);
            if s <= len {
                q = p0.lerp(p1, s / len);
                break;
            }
            s -= len;
        }
        check_pair(scheme, i, x, q)
    });
    assemble(n_samples, seed, outcomes, start)
}

/// Grid points on a closed segment, endpoints included.
fn segment_grid(a: Vec2, b: Vec2, k: usize) -> impl Iterator<Item = Vec2> {
    (0..=k).map(move |i| a.lerp(b, i as f64 / k as f64))
}

/// Pairs built on the tile boundaries where unit distances are realized
/// exactly:
///
/// 1. antipodal pairs `(p, −p)` with `p` on a shared side or at `A1`/`A4`;
/// 2. flat contacts: `x` on side `A2A3` of the central tile and `y` on side
///    `A5A6` of the tile at `v2` (and the mirror image at `−v2`);
/// 3. for every `L'` neighbor whose sum touches the central one, all pairs
///    of boundary grid points of the two tiles at `C`-distance 1.
pub fn adversarial_boundary_pairs(scheme: &ColoringScheme) -> SamplingReport {
    let start = Instant::now();
    let pairs = adversarial_pairs(scheme);
    let n = pairs.len() as u64;
    let outcomes = pairs
        .into_iter()
        .enumerate()
        .filter_map(|(i, (p, q))| check_pair(scheme, i as u64, p, q))
        .collect();
    assemble(n, 0, outcomes, start)
}

/// The pair list behind [`adversarial_boundary_pairs`]; every pair is at
/// `C`-distance 1 within [`UNIT_TOL`].
pub fn adversarial_pairs(scheme: &ColoringScheme) -> Vec<(Vec2, Vec2)> {
    let h = scheme.hexagon();
    let a = |i| h.a(i);
    let norm = scheme.norm();
    let is_unit = |p: Vec2, q: Vec2| (norm.gauge(q - p) - 1.0).abs() <= UNIT_TOL;
    let mut pairs = Vec::new();

    for (x, y) in [(a(2), a(3)), (a(5), a(6))] {
        for p in segment_grid(x, y, 256) {
            pairs.push((p, -p));
        }
    }
    pairs.push((a(1), a(4)));
    pairs.push((a(4), a(1)));

    let v2 = scheme.flat_generator();
    for (side, far, shift) in [((2, 3), (5, 6), v2), ((5, 6), (2, 3), -v2)] {
        for x in segment_grid(a(side.0), a(side.1), 64) {
            for y in segment_grid(a(far.0) + shift, a(far.1) + shift, 64) {
                if is_unit(x, y) {
                    pairs.push((x, y));
                }
            }
        }
    }

    let report = packing_certificate(scheme);
    let boundary: Vec<Vec2> = (0..6)
        .flat_map(|e| segment_grid(h.vertices()[e], h.vertices()[(e + 1) % 6], 32))
        .collect();
    for nb in report.neighbors.iter().filter(|n| n.separation.verdict == Verdict::Touching) {
        for &x in &boundary {
            for &y in &boundary {
                let y = y + nb.lattice_vector;
                if is_unit(x, y) {
                    pairs.push((x, y));
                }
            }
        }
    }
    pairs
}
