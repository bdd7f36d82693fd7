//! Planar geometry primitives: vectors, convex polygons, Minkowski sums,
//! convex separation with margins, and 2D lattices.
//!
//! Conventions
//! - All coordinates are `f64`. Predicates use [`EPS_GEOM`]; the
//!   touching/disjoint classification of [`separate`] uses [`EPS_SEP`].
//! - Polygons are stored as counterclockwise vertex cycles with strict left
//!   turns. Collinear vertices are never stored.
//! - Everything here is immutable after construction.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::GeomError;

/// Tolerance for geometric predicates (turns, on-line tests, containment).
pub const EPS_GEOM: f64 = 1e-9;

/// Tolerance separating "touching" from "disjoint"/"overlapping".
pub const EPS_SEP: f64 = 1e-7;

/// A point or vector in the plane.
///
/// Serialized as a two-element array `[x, y]`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(from = "[f64; 2]", into = "[f64; 2]")]
pub struct Vec2 {
    pub x: f64,
    pub y: f64,
}

impl Vec2 {
    pub const ZERO: Vec2 = Vec2 { x: 0.0, y: 0.0 };

    #[inline]
    pub const fn new(x: f64, y: f64) -> Self {
        Self { x, y }
    }

    /// Checked constructor; rejects NaN and infinities.
    pub fn try_new(x: f64, y: f64) -> Result<Self, GeomError> {
        let v = Self { x, y };
        if v.is_finite() {
            Ok(v)
        } else {
            Err(GeomError::NonFinite)
        }
    }

    /// Unit vector at angle `theta` (radians).
    #[inline]
    pub fn from_angle(theta: f64) -> Self {
        let (s, c) = theta.sin_cos();
        Self { x: c, y: s }
    }

    #[inline]
    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }

    #[inline]
    pub fn dot(self, o: Vec2) -> f64 {
        self.x * o.x + self.y * o.y
    }

    /// z-component of the 3D cross product; positive when `o` is
    /// counterclockwise from `self`.
    #[inline]
    pub fn cross(self, o: Vec2) -> f64 {
        self.x * o.y - self.y * o.x
    }

    #[inline]
    pub fn norm(self) -> f64 {
        self.x.hypot(self.y)
    }

    #[inline]
    pub fn norm_sq(self) -> f64 {
        self.dot(self)
    }

    /// Rotation by +90 degrees.
    #[inline]
    pub fn perp(self) -> Vec2 {
        Vec2::new(-self.y, self.x)
    }

    pub fn normalized(self) -> Vec2 {
        self / self.norm()
    }

    #[inline]
    pub fn lerp(self, o: Vec2, t: f64) -> Vec2 {
        self + (o - self) * t
    }

    pub fn distance(self, o: Vec2) -> f64 {
        (self - o).norm()
    }

    pub fn approx_eq(self, o: Vec2, tol: f64) -> bool {
        (self.x - o.x).abs() <= tol && (self.y - o.y).abs() <= tol
    }
}

impl From<[f64; 2]> for Vec2 {
    fn from(a: [f64; 2]) -> Self {
        Vec2::new(a[0], a[1])
    }
}

impl From<Vec2> for [f64; 2] {
    fn from(v: Vec2) -> Self {
        [v.x, v.y]
    }
}

impl fmt::Display for Vec2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

impl Add for Vec2 {
    type Output = Vec2;
    #[inline]
    fn add(self, o: Vec2) -> Vec2 {
        Vec2::new(self.x + o.x, self.y + o.y)
    }
}

impl AddAssign for Vec2 {
    #[inline]
    fn add_assign(&mut self, o: Vec2) {
        self.x += o.x;
        self.y += o.y;
    }
}

impl Sub for Vec2 {
    type Output = Vec2;
    #[inline]
    fn sub(self, o: Vec2) -> Vec2 {
        Vec2::new(self.x - o.x, self.y - o.y)
    }
}

impl Neg for Vec2 {
    type Output = Vec2;
    #[inline]
    fn neg(self) -> Vec2 {
        Vec2::new(-self.x, -self.y)
    }
}

impl Mul<f64> for Vec2 {
    type Output = Vec2;
    #[inline]
    fn mul(self, s: f64) -> Vec2 {
        Vec2::new(self.x * s, self.y * s)
    }
}

impl Mul<Vec2> for f64 {
    type Output = Vec2;
    #[inline]
    fn mul(self, v: Vec2) -> Vec2 {
        v * self
    }
}

impl Div<f64> for Vec2 {
    type Output = Vec2;
    #[inline]
    fn div(self, s: f64) -> Vec2 {
        Vec2::new(self.x / s, self.y / s)
    }
}

/// A strictly convex polygon stored as a counterclockwise vertex cycle.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec2>", into = "Vec<Vec2>")]
pub struct ConvexPolygon {
    vertices: Vec<Vec2>,
    center: Vec2,
}

impl ConvexPolygon {
    /// Validates a counterclockwise, strictly convex vertex cycle.
    pub fn new(vertices: Vec<Vec2>) -> Result<Self, GeomError> {
        if vertices.len() < 3 {
            return Err(GeomError::TooFewVertices(vertices.len()));
        }
        if vertices.iter().any(|v| !v.is_finite()) {
            return Err(GeomError::NonFinite);
        }
        let n = vertices.len();
        for i in 0..n {
            let a = vertices[i];
            let b = vertices[(i + 1) % n];
            let c = vertices[(i + 2) % n];
            let turn = (b - a).cross(c - b);
            if turn <= EPS_GEOM {
                return Err(GeomError::NotStrictlyConvex { index: (i + 1) % n, turn });
            }
        }
        // A strictly convex cycle winds exactly once; a star polygon would
        // pass the local turn test but sum to more than one full turn.
        let total: f64 = (0..n)
            .map(|i| {
                let e0 = vertices[(i + 1) % n] - vertices[i];
                let e1 = vertices[(i + 2) % n] - vertices[(i + 1) % n];
                e0.cross(e1).atan2(e0.dot(e1))
            })
            .sum();
        if (total - std::f64::consts::TAU).abs() > 1e-6 {
            return Err(GeomError::NotStrictlyConvex { index: 0, turn: total });
        }
        let center = vertices.iter().fold(Vec2::ZERO, |acc, &v| acc + v) / n as f64;
        Ok(Self { vertices, center })
    }

    /// Convex hull of an arbitrary point set (monotone chain), dropping
    /// collinear and duplicate points.
    pub fn hull(points: &[Vec2]) -> Result<Self, GeomError> {
        let mut pts: Vec<Vec2> = points.to_vec();
        if pts.iter().any(|v| !v.is_finite()) {
            return Err(GeomError::NonFinite);
        }
        pts.sort_by(|a, b| a.x.total_cmp(&b.x).then(a.y.total_cmp(&b.y)));
        pts.dedup_by(|a, b| a.approx_eq(*b, EPS_GEOM));
        if pts.len() < 3 {
            return Err(GeomError::TooFewVertices(pts.len()));
        }
        let mut lower: Vec<Vec2> = Vec::with_capacity(pts.len());
        for &p in &pts {
            while lower.len() >= 2
                && (lower[lower.len() - 1] - lower[lower.len() - 2]).cross(p - lower[lower.len() - 1])
                    <= EPS_GEOM
            {
                lower.pop();
            }
            lower.push(p);
        }
        let mut upper: Vec<Vec2> = Vec::with_capacity(pts.len());
        for &p in pts.iter().rev() {
            while upper.len() >= 2
                && (upper[upper.len() - 1] - upper[upper.len() - 2]).cross(p - upper[upper.len() - 1])
                    <= EPS_GEOM
            {
                upper.pop();
            }
            upper.push(p);
        }
        lower.pop();
        upper.pop();
        lower.extend(upper);
        Self::new(lower)
    }

    #[inline]
    pub fn vertices(&self) -> &[Vec2] {
        &self.vertices
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Vertex average; the symmetry center for centrally symmetric polygons.
    #[inline]
    pub fn center(&self) -> Vec2 {
        self.center
    }

    /// Edges as `(start, end)` pairs in counterclockwise order.
    pub fn edges(&self) -> impl Iterator<Item = (Vec2, Vec2)> + '_ {
        let n = self.vertices.len();
        (0..n).map(move |i| (self.vertices[i], self.vertices[(i + 1) % n]))
    }

    /// Outward unit normals with offsets: `n·x <= c` for every edge.
    pub fn facets(&self) -> Vec<(Vec2, f64)> {
        self.edges()
            .map(|(a, b)| {
                let d = b - a;
                let n = Vec2::new(d.y, -d.x) / d.norm();
                (n, n.dot(a))
            })
            .collect()
    }

    /// Support function `max_{v in P} u·v`.
    pub fn support(&self, u: Vec2) -> f64 {
        self.vertices
            .iter()
            .map(|v| v.dot(u))
            .fold(f64::NEG_INFINITY, f64::max)
    }

    /// Width in direction `u` (not normalized: scales with `|u|`).
    pub fn width(&self, u: Vec2) -> f64 {
        self.support(u) + self.support(-u)
    }

    pub fn translate(&self, t: Vec2) -> ConvexPolygon {
        ConvexPolygon {
            vertices: self.vertices.iter().map(|&v| v + t).collect(),
            center: self.center + t,
        }
    }

    /// Scale about the polygon's center.
    pub fn scale_about_center(&self, s: f64) -> Result<ConvexPolygon, GeomError> {
        let c = self.center;
        ConvexPolygon::new(self.vertices.iter().map(|&v| c + (v - c) * s).collect())
    }

    /// Largest distance from `p` to a vertex.
    pub fn circumradius_about(&self, p: Vec2) -> f64 {
        self.vertices
            .iter()
            .map(|v| v.distance(p))
            .fold(0.0, f64::max)
    }

    /// Closed containment test with [`EPS_GEOM`] slack.
    pub fn contains(&self, p: Vec2) -> bool {
        self.edges().all(|(a, b)| (b - a).cross(p - a) >= -EPS_GEOM * (b - a).norm())
    }

    /// Whether `vertex[i + m] = 2·center − vertex[i]` holds for every `i`.
    pub fn is_centrally_symmetric(&self) -> bool {
        let n = self.vertices.len();
        if n % 2 != 0 {
            return false;
        }
        let m = n / 2;
        let c2 = self.center * 2.0;
        (0..m).all(|i| self.vertices[i + m].approx_eq(c2 - self.vertices[i], EPS_GEOM))
    }

    pub fn area(&self) -> f64 {
        polygon_area(&self.vertices)
    }

    /// Sutherland–Hodgman clip of a counterclockwise polygon against this
    /// one. The result may be empty or degenerate.
    pub fn clip(&self, subject: &[Vec2]) -> Vec<Vec2> {
        let mut out = subject.to_vec();
        for (nrm, off) in self.facets() {
            if out.is_empty() {
                break;
            }
            let input = std::mem::take(&mut out);
            let k = input.len();
            for i in 0..k {
                let (p, q) = (input[i], input[(i + 1) % k]);
                let (dp, dq) = (nrm.dot(p) - off, nrm.dot(q) - off);
                if dp <= 0.0 {
                    out.push(p);
                }
                if (dp < 0.0 && dq > 0.0) || (dp > 0.0 && dq < 0.0) {
                    out.push(p.lerp(q, dp / (dp - dq)));
                }
            }
        }
        out
    }

    /// Part of the segment `ab` inside the polygon, as parameters
    /// `0 <= t0 < t1 <= 1` along it.
    pub fn clip_segment(&self, a: Vec2, b: Vec2) -> Option<(f64, f64)> {
        let d = b - a;
        let (mut t0, mut t1) = (0.0f64, 1.0f64);
        for (nrm, off) in self.facets() {
            let num = off - nrm.dot(a);
            let den = nrm.dot(d);
            if den.abs() < 1e-300 {
                if num < 0.0 {
                    return None;
                }
            } else if den > 0.0 {
                t1 = t1.min(num / den);
            } else {
                t0 = t0.max(num / den);
            }
            if t0 >= t1 {
                return None;
            }
        }
        Some((t0, t1))
    }

    /// Index of the lowest vertex (smallest y, then smallest x).
    fn bottom_index(&self) -> usize {
        let mut best = 0;
        for (i, v) in self.vertices.iter().enumerate() {
            let b = self.vertices[best];
            if v.y < b.y || (v.y == b.y && v.x < b.x) {
                best = i;
            }
        }
        best
    }
}

impl TryFrom<Vec<Vec2>> for ConvexPolygon {
    type Error = GeomError;
    fn try_from(v: Vec<Vec2>) -> Result<Self, Self::Error> {
        ConvexPolygon::new(v)
    }
}

impl From<ConvexPolygon> for Vec<Vec2> {
    fn from(p: ConvexPolygon) -> Self {
        p.vertices
    }
}

/// Signed shoelace area, positive for counterclockwise order.
pub fn polygon_area(vs: &[Vec2]) -> f64 {
    let k = vs.len();
    (0..k).map(|i| vs[i].cross(vs[(i + 1) % k])).sum::<f64>() * 0.5
}

/// Drop vertices whose turn is not a strict left turn (collinear or
/// spurious noise vertices) and near-duplicate vertices.
fn cleanup_cycle(mut v: Vec<Vec2>) -> Vec<Vec2> {
    loop {
        let n = v.len();
        if n < 3 {
            return v;
        }
        let mut drop = None;
        for i in 0..n {
            let a = v[(i + n - 1) % n];
            let b = v[i];
            let c = v[(i + 1) % n];
            let e0 = b - a;
            let e1 = c - b;
            if e0.norm() <= EPS_GEOM || e0.cross(e1) <= EPS_GEOM * e0.norm() * e1.norm() {
                drop = Some(i);
                break;
            }
        }
        match drop {
            Some(i) => {
                v.remove(i);
            }
            None => return v,
        }
    }
}

/// Minkowski sum `{a + b | a in p, b in q}` by merging the two edge
/// sequences in angular order, starting from both bottom vertices.
pub fn minkowski_sum(p: &ConvexPolygon, q: &ConvexPolygon) -> Result<ConvexPolygon, GeomError> {
    let (n, m) = (p.len(), q.len());
    let (ps, qs) = (p.bottom_index(), q.bottom_index());
    let pv = |k: usize| p.vertices[(ps + k) % n];
    let qv = |k: usize| q.vertices[(qs + k) % m];
    let mut out = Vec::with_capacity(n + m);
    let (mut i, mut j) = (0usize, 0usize);
    while i < n || j < m {
        out.push(pv(i) + qv(j));
        if i == n {
            j += 1;
            continue;
        }
        if j == m {
            i += 1;
            continue;
        }
        let ep = pv(i + 1) - pv(i);
        let eq = qv(j + 1) - qv(j);
        let c = ep.cross(eq);
        if c > 0.0 {
            i += 1;
        } else if c < 0.0 {
            j += 1;
        } else {
            i += 1;
            j += 1;
        }
    }
    let verts = cleanup_cycle(out);
    let sum = ConvexPolygon::new(verts)?;
    Ok(ConvexPolygon {
        center: p.center + q.center,
        ..sum
    })
}

/// Outcome class of [`separate`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Disjoint,
    Touching,
    Overlapping,
}

impl Verdict {
    pub fn from_margin(margin: f64) -> Verdict {
        if margin > EPS_SEP {
            Verdict::Disjoint
        } else if margin < -EPS_SEP {
            Verdict::Overlapping
        } else {
            Verdict::Touching
        }
    }
}

/// The line `normal·x = offset`; the "lower" side is `normal·x <= offset`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Line {
    pub normal: Vec2,
    pub offset: f64,
}

impl Line {
    /// Normalizes the normal to unit length.
    pub fn new(normal: Vec2, offset: f64) -> Result<Self, GeomError> {
        let len = normal.norm();
        if !len.is_finite() || !offset.is_finite() || len <= EPS_GEOM {
            return Err(GeomError::DegenerateLine);
        }
        Ok(Line { normal: normal / len, offset: offset / len })
    }

    /// `y = slope·x + intercept`, with "below" as the lower side.
    pub fn from_slope_intercept(slope: f64, intercept: f64) -> Result<Self, GeomError> {
        Line::new(Vec2::new(-slope, 1.0), intercept)
    }

    /// Line through `p` with the given slope.
    pub fn through_point_slope(p: Vec2, slope: f64) -> Result<Self, GeomError> {
        Line::from_slope_intercept(slope, p.y - slope * p.x)
    }

    /// Signed distance, positive on the upper side.
    #[inline]
    pub fn signed_distance(&self, p: Vec2) -> f64 {
        self.normal.dot(p) - self.offset
    }
}

/// Result of [`separate`].
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SeparationResult {
    pub verdict: Verdict,
    /// Euclidean distance when disjoint, minus the penetration depth when
    /// overlapping.
    pub margin: f64,
    /// Present for disjoint pairs: `normal·p <= offset` on the first polygon,
    /// strictly the other way on the second.
    pub witness_line: Option<Line>,
}

fn point_segment_closest(p: Vec2, a: Vec2, b: Vec2) -> Vec2 {
    let d = b - a;
    let len2 = d.norm_sq();
    if len2 == 0.0 {
        return a;
    }
    let t = ((p - a).dot(d) / len2).clamp(0.0, 1.0);
    a + d * t
}

/// Largest gap over the edge normals of both polygons; positive iff the
/// polygons are disjoint, and minus the penetration depth otherwise.
fn max_axis_gap(p: &ConvexPolygon, q: &ConvexPolygon) -> f64 {
    let gap_along = |a: &ConvexPolygon, b: &ConvexPolygon| {
        a.facets()
            .into_iter()
            .map(|(n, _)| {
                let max_a = a.support(n);
                let min_b = -b.support(-n);
                min_b - max_a
            })
            .fold(f64::NEG_INFINITY, f64::max)
    };
    gap_along(p, q).max(gap_along(q, p))
}

/// Closest pair (on p, on q) by brute force over vertex/edge pairs.
fn closest_pair(p: &ConvexPolygon, q: &ConvexPolygon) -> (Vec2, Vec2, f64) {
    let mut best = (p.vertices[0], q.vertices[0], f64::INFINITY);
    for &v in p.vertices() {
        for (a, b) in q.edges() {
            let c = point_segment_closest(v, a, b);
            let d = v.distance(c);
            if d < best.2 {
                best = (v, c, d);
            }
        }
    }
    for &v in q.vertices() {
        for (a, b) in p.edges() {
            let c = point_segment_closest(v, a, b);
            let d = v.distance(c);
            if d < best.2 {
                best = (c, v, d);
            }
        }
    }
    best
}

/// Classify two convex polygons as disjoint, touching, or overlapping and
/// measure the signed margin between them.
pub fn separate(p: &ConvexPolygon, q: &ConvexPolygon) -> SeparationResult {
    let gap = max_axis_gap(p, q);
    if gap <= 0.0 {
        return SeparationResult {
            verdict: Verdict::from_margin(gap),
            margin: gap,
            witness_line: None,
        };
    }
    let (cp, cq, dist) = closest_pair(p, q);
    let verdict = Verdict::from_margin(dist);
    let witness_line = (verdict == Verdict::Disjoint).then(|| {
        let n = (cq - cp) / dist;
        let hi_p = p.support(n);
        let lo_q = -q.support(-n);
        Line { normal: n, offset: 0.5 * (hi_p + lo_q) }
    });
    SeparationResult { verdict, margin: dist, witness_line }
}

/// Result of [`check_separating_line`].
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct LineCheck {
    pub separates: bool,
    /// Smallest `offset − normal·v` over the vertices of the first polygon.
    pub min_margin_p: f64,
    /// Smallest `normal·v − offset` over the vertices of the second polygon.
    pub min_margin_q: f64,
    /// Vertices of the first polygon lying on the line (within `EPS_GEOM`).
    pub on_line_p: usize,
    pub on_line_q: usize,
}

/// Check that `p` lies on or below `line` and `q` on or above it.
pub fn check_separating_line(p: &ConvexPolygon, q: &ConvexPolygon, line: &Line) -> LineCheck {
    let below: Vec<f64> = p.vertices().iter().map(|&v| -line.signed_distance(v)).collect();
    let above: Vec<f64> = q.vertices().iter().map(|&v| line.signed_distance(v)).collect();
    let min_p = below.iter().copied().fold(f64::INFINITY, f64::min);
    let min_q = above.iter().copied().fold(f64::INFINITY, f64::min);
    LineCheck {
        separates: min_p >= -EPS_GEOM && min_q >= -EPS_GEOM,
        min_margin_p: min_p,
        min_margin_q: min_q,
        on_line_p: below.iter().filter(|d| d.abs() <= EPS_GEOM).count(),
        on_line_q: above.iter().filter(|d| d.abs() <= EPS_GEOM).count(),
    }
}

/// A 2D lattice `{i·b1 + j·b2 | i, j integers}`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "LatticeRepr", into = "LatticeRepr")]
pub struct Lattice2 {
    b1: Vec2,
    b2: Vec2,
    det: f64,
}

#[derive(Serialize, Deserialize)]
struct LatticeRepr {
    b1: Vec2,
    b2: Vec2,
}

impl TryFrom<LatticeRepr> for Lattice2 {
    type Error = GeomError;
    fn try_from(r: LatticeRepr) -> Result<Self, Self::Error> {
        Lattice2::new(r.b1, r.b2)
    }
}

impl From<Lattice2> for LatticeRepr {
    fn from(l: Lattice2) -> Self {
        LatticeRepr { b1: l.b1, b2: l.b2 }
    }
}

/// A lattice vector together with its integer coordinates.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct LatticePoint {
    pub coeffs: (i64, i64),
    pub point: Vec2,
}

/// Which disk [`Lattice2::points_in_disk`] enumerates.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DiskQuery {
    /// Include points at distance exactly `radius` (within `EPS_GEOM`).
    pub closed: bool,
    /// Exclude the origin.
    pub punctured: bool,
}

impl DiskQuery {
    pub const OPEN_PUNCTURED: DiskQuery = DiskQuery { closed: false, punctured: true };
    pub const CLOSED_PUNCTURED: DiskQuery = DiskQuery { closed: true, punctured: true };
}

impl Lattice2 {
    pub fn new(b1: Vec2, b2: Vec2) -> Result<Self, GeomError> {
        if !b1.is_finite() || !b2.is_finite() {
            return Err(GeomError::NonFinite);
        }
        let det = b1.cross(b2);
        if det.abs() <= EPS_GEOM {
            return Err(GeomError::DegenerateLattice(det));
        }
        Ok(Lattice2 { b1, b2, det })
    }

    #[inline]
    pub fn b1(&self) -> Vec2 {
        self.b1
    }

    #[inline]
    pub fn b2(&self) -> Vec2 {
        self.b2
    }

    /// Signed determinant `b1 × b2`.
    #[inline]
    pub fn det(&self) -> f64 {
        self.det
    }

    #[inline]
    pub fn point(&self, i: i64, j: i64) -> Vec2 {
        self.b1 * i as f64 + self.b2 * j as f64
    }

    /// Real coordinates of `p` in the basis.
    #[inline]
    pub fn coords(&self, p: Vec2) -> (f64, f64) {
        (p.cross(self.b2) / self.det, self.b1.cross(p) / self.det)
    }

    /// Split `p` into an integer lattice part and a residual whose basis
    /// coordinates lie in `[0, 1)`. Coordinates within `EPS_GEOM` of an
    /// integer snap to it.
    pub fn reduce_to_cell(&self, p: Vec2) -> ((i64, i64), Vec2) {
        let (s, t) = self.coords(p);
        let snap_floor = |x: f64| {
            let r = x.round();
            if (x - r).abs() <= EPS_GEOM {
                r
            } else {
                x.floor()
            }
        };
        let (i, j) = (snap_floor(s) as i64, snap_floor(t) as i64);
        ((i, j), p - self.point(i, j))
    }

    /// All lattice vectors inside the disk of `radius` about the origin.
    ///
    /// Complete by construction: `|i| <= r·|b2| / |det|` and
    /// `|j| <= r·|b1| / |det|` bound every candidate.
    pub fn points_in_disk(&self, radius: f64, query: DiskQuery) -> Result<Vec<LatticePoint>, GeomError> {
        if !radius.is_finite() || radius <= 0.0 {
            return Err(GeomError::BadRadius(radius));
        }
        let ad = self.det.abs();
        let imax = (radius * self.b2.norm() / ad).ceil() as i64 + 1;
        let jmax = (radius * self.b1.norm() / ad).ceil() as i64 + 1;
        let mut out = Vec::new();
        for i in -imax..=imax {
            for j in -jmax..=jmax {
                if query.punctured && i == 0 && j == 0 {
                    continue;
                }
                let v = self.point(i, j);
                let len = v.norm();
                let inside = if query.closed { len <= radius + EPS_GEOM } else { len < radius };
                if inside {
                    out.push(LatticePoint { coeffs: (i, j), point: v });
                }
            }
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn clipping_squares() {
        let sq = |c: Vec2| ConvexPolygon::new(vec![c + Vec2::new(-1.0, -1.0), c + Vec2::new(1.0, -1.0), c + Vec2::new(1.0, 1.0), c + Vec2::new(-1.0, 1.0)]).unwrap();
        let a = sq(Vec2::ZERO);
        let b = sq(Vec2::new(1.0, 1.0));
        let inter = a.clip(b.vertices());
        assert!((polygon_area(&inter) - 1.0).abs() < 1e-12);
        assert!(a.clip(sq(Vec2::new(3.0, 0.0)).vertices()).is_empty());
        assert!((a.area() - 4.0).abs() < 1e-12);
        let (t0, t1) = a.clip_segment(Vec2::new(-2.0, 0.0), Vec2::new(2.0, 0.0)).unwrap();
        assert!((t0 - 0.25).abs() < 1e-12 && (t1 - 0.75).abs() < 1e-12);
        assert!(a.clip_segment(Vec2::new(-2.0, 2.0), Vec2::new(2.0, 2.0)).is_none());
    }

    fn square(h: f64, c: Vec2) -> ConvexPolygon {
        ConvexPolygon::new(vec![
            c + Vec2::new(-h, -h),
            c + Vec2::new(h, -h),
            c + Vec2::new(h, h),
            c + Vec2::new(-h, h),
        ])
        .unwrap()
    }

    #[test]
    fn rejects_degenerate_polygons() {
        assert!(matches!(
            ConvexPolygon::new(vec![Vec2::ZERO, Vec2::new(1.0, 0.0)]),
            Err(GeomError::TooFewVertices(2))
        ));
        // collinear middle vertex
        let r = ConvexPolygon::new(vec![
            Vec2::new(0.0, 0.0),
            Vec2::new(1.0, 0.0),
            Vec2::new(2.0, 0.0),
            Vec2::new(1.0, 1.0),
        ]);
        assert!(matches!(r, Err(GeomError::NotStrictlyConvex { .. })));
        // clockwise order
        let cw: Vec<Vec2> = square(1.0, Vec2::ZERO).vertices().iter().rev().copied().collect();
        assert!(ConvexPolygon::new(cw).is_err());
        assert!(Vec2::try_new(f64::NAN, 0.0).is_err());
    }

    #[test]
    fn minkowski_self_sum_is_dilate() {
        let p = square(1.0, Vec2::new(0.5, -0.25));
        let s = minkowski_sum(&p, &p).unwrap();
        let expect = square(2.0, Vec2::new(1.0, -0.5));
        assert_eq!(s.len(), 4);
        for v in expect.vertices() {
            assert!(s.vertices().iter().any(|w| w.approx_eq(*v, 1e-12)));
        }
        assert!(s.center().approx_eq(Vec2::new(1.0, -0.5), 1e-12));
    }

    #[test]
    fn self_separation_overlaps_without_witness() {
        let p = square(1.0, Vec2::ZERO);
        let r = separate(&p, &p);
        assert_eq!(r.verdict, Verdict::Overlapping);
        assert!((r.margin + 2.0).abs() < 1e-12);
        assert!(r.witness_line.is_none());
    }

    #[test]
    fn unit_squares_two_apart_touch() {
        // oracle: for axis-aligned squares of half-width 1 the gap is
        // max(|dx|, |dy|) - 2 when one offset is zero
        let a = square(1.0, Vec2::ZERO);
        let b = square(1.0, Vec2::new(2.0, 0.0));
        let r = separate(&a, &b);
        assert_eq!(r.verdict, Verdict::Touching);
        assert!(r.margin.abs() < 1e-15);
    }

    #[test]
    fn line_forms_agree() {
        let l = Line::from_slope_intercept(2.0, 1.0).unwrap();
        assert!(l.signed_distance(Vec2::new(0.0, 1.0)).abs() < 1e-15);
        assert!(l.signed_distance(Vec2::new(0.0, 0.0)) < 0.0);
        let v = Line::new(Vec2::new(1.0, 0.0), 3.0).unwrap();
        assert!((v.signed_distance(Vec2::new(5.0, 7.0)) - 2.0).abs() < 1e-15);
        assert!(Line::new(Vec2::ZERO, 1.0).is_err());
    }

    #[test]
    fn line_through_interior_does_not_separate() {
        let p = square(1.0, Vec2::ZERO);
        let l = Line::from_slope_intercept(0.3, 0.1).unwrap();
        assert!(!check_separating_line(&p, &p, &l).separates);
    }

    #[test]
    fn reduce_examples() {
        let lat = Lattice2::new(Vec2::new(1.3, 0.2), Vec2::new(-0.4, 0.9)).unwrap();
        let (c, r) = lat.reduce_to_cell(lat.b1() + lat.b2());
        assert_eq!(c, (1, 1));
        assert!(r.approx_eq(Vec2::ZERO, 1e-12));
        let (c, r) = lat.reduce_to_cell(lat.b1() * 0.5);
        assert_eq!(c, (0, 0));
        assert!(r.approx_eq(lat.b1() * 0.5, 1e-12));
        // oracle: Cramer solve gives (-0.25, 1.75); floor -> (-1, 1)
        let p = lat.b1() * -0.25 + lat.b2() * 1.75;
        let (c, r) = lat.reduce_to_cell(p);
        assert_eq!(c, (-1, 1));
        assert!(r.approx_eq(lat.b1() * 0.75 + lat.b2() * 0.75, 1e-12));
    }

    #[test]
    fn disk_enumeration_edges() {
        let lat = Lattice2::new(Vec2::new(1.0, 0.0), Vec2::new(0.0, 1.0)).unwrap();
        assert!(lat.points_in_disk(0.5, DiskQuery::OPEN_PUNCTURED).unwrap().is_empty());
        assert_eq!(lat.points_in_disk(1.0, DiskQuery::OPEN_PUNCTURED).unwrap().len(), 0);
        assert_eq!(lat.points_in_disk(1.0, DiskQuery::CLOSED_PUNCTURED).unwrap().len(), 4);
        let closed_full = DiskQuery { closed: true, punctured: false };
        assert_eq!(lat.points_in_disk(1.0, closed_full).unwrap().len(), 5);
        assert!(lat.points_in_disk(f64::INFINITY, DiskQuery::OPEN_PUNCTURED).is_err());
        assert!(Lattice2::new(Vec2::new(1.0, 1.0), Vec2::new(2.0, 2.0)).is_err());
    }
}
