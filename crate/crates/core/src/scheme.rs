//! The lattice–sublattice 6-coloring of a polygonal Minkowski plane.
//!
//! `C` is a regular `n`-gon of circumradius 2 (vertex at `(2, 0)`), so `C/2`
//! has circumradius 1. A centrally symmetric hexagon `H` is inscribed in
//! `C/2`: two of its sides are a pair of opposite sides of `C/2`, and the
//! remaining two vertices are antipodal points on `∂(C/2)`. Vertices are
//! labelled `A1..A6` clockwise, with `A2A3` and `A5A6` the shared sides and
//! `A1` the extra point on the arc from `A2` to `A6`.
//!
//! Translates of `H` by the tiling lattice `L = span(a1 + a6, a2 + a3)`
//! cover the plane. Boundary points are assigned by a half-open rule, and
//! the color of a tile is its coset modulo `L' = span(3(a1 + a6), 2(a2 + a3))`.
//!
//! Half-open rule: a tile keeps the open edges `A4A5`, `A5A6`, `A6A1` and
//! the vertices `A6`, `A1`. It drops the edges `A1A2`, `A2A3`, `A3A4` and the
//! vertices `A2..A5`. Each tiling vertex is `A1`, `A3`, `A5` of three tiles
//! (or `A2`, `A4`, `A6`), and each edge is `e` of one tile and `e + 3` of
//! the other, so every boundary point has exactly one owner. `A1` kept with
//! `A4 = −A1` dropped means no antipodal boundary pair shares a tile.

use std::f64::consts::PI;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::SchemeError;
use crate::geom::{ConvexPolygon, Lattice2, Vec2, EPS_GEOM};
use crate::norm::PolygonalNorm;

/// Vertex counts with a built-in default hexagon.
pub const SUPPORTED_N: [usize; 8] = [8, 10, 12, 14, 16, 18, 20, 22];

/// Circumradius of `C` used throughout (so `C/2` has circumradius 1).
pub const BALL_CIRCUMRADIUS: f64 = 2.0;

/// Split ratio of the n = 18 default, found by `search::certify_defaults`.
pub const N18_DEFAULT_RATIO: f64 = 0.16;

/// How the extra vertex `A1` is placed on the arc of `∂(C/2)` running
/// counterclockwise from `A2` to `A6`. Arc vertices are numbered from 0
/// (`A2`) to `n/2 − 1` (`A6`); side `j` joins arc vertices `j` and `j + 1`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum HexagonKind {
    /// Halfway along the arc (by arc length).
    BoundaryMidpoint,
    /// An interior arc vertex, `1 <= index <= n/2 − 2`.
    VertexIndex { index: usize },
    /// `(1 − ratio)·u_side + ratio·u_{side+1}`, `ratio` in `(0, 1)`.
    SideSplit { side: usize, ratio: f64 },
    /// Arc-length fraction `t` in `(0, 1)`.
    ArcPosition { t: f64 },
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct HexagonChoice {
    #[serde(flatten)]
    pub kind: HexagonKind,
    /// Side `k` of `C/2` joins vertices `w_k` and `w_{k+1}`; it becomes
    /// `A3A2`. The worked examples use `k = n − 1`.
    pub shared_side_index: usize,
}

impl HexagonChoice {
    /// Choice with the shared side pair used by the worked examples.
    pub fn canonical(n: usize, kind: HexagonKind) -> Self {
        HexagonChoice { kind, shared_side_index: n.saturating_sub(1) }
    }
}

impl fmt::Display for HexagonChoice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            HexagonKind::BoundaryMidpoint => write!(f, "midpoint")?,
            HexagonKind::VertexIndex { index } => write!(f, "vertex{index}")?,
            HexagonKind::SideSplit { side, ratio } => write!(f, "side{side}@{ratio}")?,
            HexagonKind::ArcPosition { t } => write!(f, "arc@{t}")?,
        }
        write!(f, "/shared{}", self.shared_side_index)
    }
}

/// Where a choice came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Provenance {
    /// Taken directly from the published construction.
    Paper,
    /// Found and certified by the feasibility search.
    SearchCertified,
    /// Supplied by the caller.
    Custom,
}

/// Built-in hexagon for each supported `n`.
pub fn default_choice(n: usize) -> Option<(HexagonChoice, Provenance)> {
    use HexagonKind::*;
    let (kind, prov) = match n {
        8 | 10 | 12 => (BoundaryMidpoint, Provenance::Paper),
        14 | 16 => (VertexIndex { index: 2 }, Provenance::SearchCertified),
        18 => (SideSplit { side: 2, ratio: N18_DEFAULT_RATIO }, Provenance::SearchCertified),
        20 => (SideSplit { side: 2, ratio: 0.5 }, Provenance::SearchCertified),
        22 => (SideSplit { side: 2, ratio: 0.68 }, Provenance::Paper),
        _ => return None,
    };
    Some((HexagonChoice::canonical(n, kind), prov))
}

/// A boundary feature of the hexagon: edge `e` runs from `A_{e+1}` to
/// `A_{e+2}` (0-based `e`), vertex `k` is `A_{k+1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Feature {
    Edge(usize),
    Vertex(usize),
}

impl Feature {
    /// Whether the half-open tile keeps this feature.
    pub fn is_kept(self) -> bool {
        match self {
            Feature::Edge(e) => e >= 3,
            Feature::Vertex(k) => k == 0 || k == 5,
        }
    }

    /// Lattice offset (in `L` coordinates) from a tile to the tile that owns
    /// this feature.
    fn owner_offset(self) -> (i64, i64) {
        match self {
            // neighbor across edge e is translated by a_e + a_{e+1}
            Feature::Edge(e) => EDGE_NEIGHBOR[e],
            Feature::Vertex(k) => VERTEX_OWNER[k],
        }
    }
}

// b1 = a1 + a6, b2 = a2 + a3; a_{i+3} = −a_i.
const EDGE_NEIGHBOR: [(i64, i64); 6] = [(1, 1), (0, 1), (-1, 0), (-1, -1), (0, -1), (1, 0)];
// A1, A3, A5 are owned where they are A1; A2, A4, A6 where they are A6.
const VERTEX_OWNER: [(i64, i64); 6] = [(0, 0), (0, 1), (-1, 0), (-1, 0), (-1, -1), (0, 0)];

/// Position of a point relative to a hexagon.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Location {
    Interior,
    Boundary(Feature),
    Outside,
    /// Within tolerance of two non-adjacent edges; only possible for
    /// pathologically thin hexagons.
    Ambiguous,
}

#[derive(Clone, Copy, Debug, PartialEq)]
struct EdgeLine {
    normal: Vec2,
    offset: f64,
}

/// The half-open hexagon tile `H`.
#[derive(Clone, Debug, PartialEq)]
pub struct HalfOpenHexagon {
    /// `A1..A6` in clockwise order.
    vertices: [Vec2; 6],
    polygon: ConvexPolygon,
    edges: [EdgeLine; 6],
}

impl HalfOpenHexagon {
    /// Hexagon from `A1, A2, A3`; the rest follow by central symmetry.
    pub fn from_half(a1: Vec2, a2: Vec2, a3: Vec2) -> Result<Self, SchemeError> {
        let v = [a1, a2, a3, -a1, -a2, -a3];
        let ccw = vec![v[0], v[5], v[4], v[3], v[2], v[1]];
        let polygon = ConvexPolygon::new(ccw)
            .map_err(|e| SchemeError::DegenerateHexagon(format!("A1 = {a1}: {e}")))?;
        let edges = std::array::from_fn(|e| {
            let d = v[(e + 1) % 6] - v[e];
            // clockwise traversal: outward is the left-hand normal
            let normal = d.perp() / d.norm();
            EdgeLine { normal, offset: normal.dot(v[e]) }
        });
        Ok(Self { vertices: v, polygon, edges })
    }

    /// `A1..A6` in clockwise order.
    #[inline]
    pub fn vertices(&self) -> &[Vec2; 6] {
        &self.vertices
    }

    /// Vertex `A_i`, `i` in `1..=6`.
    pub fn a(&self, i: usize) -> Vec2 {
        self.vertices[i - 1]
    }

    /// Closure of the tile as a counterclockwise polygon.
    #[inline]
    pub fn polygon(&self) -> &ConvexPolygon {
        &self.polygon
    }

    /// Signed depth: positive inside, negative outside (Euclidean distance
    /// to the nearest edge line).
    #[inline]
    pub fn depth(&self, x: Vec2) -> f64 {
        self.edges
            .iter()
            .map(|e| e.offset - e.normal.dot(x))
            .fold(f64::INFINITY, f64::min)
    }

    pub fn locate(&self, x: Vec2) -> Location {
        let mut on = [false; 6];
        let mut count = 0;
        for (e, edge) in self.edges.iter().enumerate() {
            let d = edge.normal.dot(x) - edge.offset;
            if d > EPS_GEOM {
                return Location::Outside;
            }
            if d >= -EPS_GEOM {
                on[e] = true;
                count += 1;
            }
        }
        match count {
            0 => Location::Interior,
            1 => Location::Boundary(Feature::Edge(on.iter().position(|&b| b).unwrap())),
            2 => {
                // adjacent pair (e, e+1) meets at vertex e+1
                (0..6)
                    .find(|&e| on[e] && on[(e + 1) % 6])
                    .map(|e| Location::Boundary(Feature::Vertex((e + 1) % 6)))
                    .unwrap_or(Location::Ambiguous)
            }
            _ => Location::Ambiguous,
        }
    }

    /// Half-open membership of a point given in tile-local coordinates.
    pub fn contains(&self, x: Vec2) -> bool {
        match self.locate(x) {
            Location::Interior => true,
            Location::Boundary(f) => f.is_kept(),
            Location::Outside | Location::Ambiguous => false,
        }
    }

    /// Point at fraction `s` along the closed boundary, starting at `A1`
    /// and running clockwise through `A2, …, A6`.
    pub fn boundary_point(&self, s: f64) -> Vec2 {
        let s = (s - s.floor()) * 6.0;
        let e = (s.floor() as usize).min(5);
        self.vertices[e].lerp(self.vertices[(e + 1) % 6], s - e as f64)
    }
}

fn arc_vertices(half_ball: &ConvexPolygon, shared: usize) -> Vec<Vec2> {
    let w = half_ball.vertices();
    let n = w.len();
    (0..n / 2).map(|i| w[(shared + 1 + i) % n]).collect()
}

fn arc_point(arc: &[Vec2], t: f64) -> Vec2 {
    let m = arc.len() - 1;
    let s = t * m as f64;
    let i = (s.floor() as usize).min(m - 1);
    arc[i].lerp(arc[i + 1], s - i as f64)
}

fn open_unit(x: f64) -> bool {
    x.is_finite() && x > 0.0 && x < 1.0
}

/// Inscribe the half-open hexagon described by `choice` in `half_ball`,
/// which must be a regular polygon of circumradius 1 about the origin.
pub fn build_hexagon(half_ball: &ConvexPolygon, choice: &HexagonChoice) -> Result<HalfOpenHexagon, SchemeError> {
    let n = half_ball.len();
    let regular = n % 2 == 0
        && half_ball.is_centrally_symmetric()
        && half_ball.center().norm() <= EPS_GEOM
        && half_ball.vertices().iter().all(|v| (v.norm() - 1.0).abs() <= EPS_GEOM);
    if !regular {
        return Err(SchemeError::InvalidChoice(
            "half ball must be a centrally symmetric polygon of circumradius 1 about the origin".into(),
        ));
    }
    if choice.shared_side_index >= n {
        return Err(SchemeError::InvalidChoice(format!(
            "shared side index {} out of range for n = {n}",
            choice.shared_side_index
        )));
    }
    let arc = arc_vertices(half_ball, choice.shared_side_index);
    let m = arc.len() - 1;
    let a1 = match choice.kind {
        HexagonKind::BoundaryMidpoint => arc_point(&arc, 0.5),
        HexagonKind::VertexIndex { index } => {
            if index == 0 || index >= m {
                return Err(SchemeError::InvalidChoice(format!(
                    "vertex index {index} must lie strictly inside the arc (1..={})",
                    m.saturating_sub(1)
                )));
            }
            arc[index]
        }
        HexagonKind::SideSplit { side, ratio } => {
            if side >= m {
                return Err(SchemeError::InvalidChoice(format!("side {side} out of range (0..{m})")));
            }
            if !open_unit(ratio) {
                return Err(SchemeError::InvalidChoice(format!("ratio {ratio} not in (0, 1)")));
            }
            arc[side].lerp(arc[side + 1], ratio)
        }
        HexagonKind::ArcPosition { t } => {
            if !open_unit(t) {
                return Err(SchemeError::InvalidChoice(format!("arc position {t} not in (0, 1)")));
            }
            arc_point(&arc, t)
        }
    };
    let w = half_ball.vertices();
    let a2 = arc[0];
    let a3 = w[choice.shared_side_index];
    let hex = HalfOpenHexagon::from_half(a1, a2, a3)?;
    let facets = half_ball.facets();
    for (i, v) in hex.vertices().iter().enumerate() {
        let g = facets.iter().map(|(nrm, off)| nrm.dot(*v) / off).fold(0.0, f64::max);
        if (g - 1.0).abs() > EPS_GEOM {
            return Err(SchemeError::OffBoundary { index: i + 1, gauge: g });
        }
    }
    Ok(hex)
}

/// A tile of the tiling, identified by its `L` coordinates.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Cell {
    pub coeffs: (i64, i64),
    pub center: Vec2,
}

/// The complete coloring: norm, tile, lattices, and the coset→color map.
#[derive(Clone, Debug, PartialEq)]
pub struct ColoringScheme {
    n: usize,
    choice: HexagonChoice,
    provenance: Provenance,
    norm: PolygonalNorm,
    half_ball: ConvexPolygon,
    hexagon: HalfOpenHexagon,
    tiling: Lattice2,
    colors: Lattice2,
    coset_reps: [Vec2; 6],
    flat_generator: Vec2,
    reach: i64,
}

/// Number of color classes.
pub const N_COLORS: usize = 6;

/// Color of the tile with `L` coordinates `(i, j)`: coset representatives
/// `j·b2 + i·b1`, `(j, i)` in `{0,1}×{0,1,2}`, numbered in that order.
#[inline]
pub fn color_of_cell(coeffs: (i64, i64)) -> usize {
    (3 * coeffs.1.rem_euclid(2) + coeffs.0.rem_euclid(3)) as usize
}

impl ColoringScheme {
    /// Build the scheme for a supported `n`, with the built-in hexagon when
    /// `choice` is `None`.
    pub fn build(n: usize, choice: Option<HexagonChoice>) -> Result<Self, SchemeError> {
        if !SUPPORTED_N.contains(&n) {
            return Err(SchemeError::UnsupportedN(n));
        }
        let (default, prov) = default_choice(n).expect("supported n has a default");
        match choice {
            None => Self::assemble(n, default, prov),
            Some(c) if c == default => Self::assemble(n, c, prov),
            Some(c) => Self::assemble(n, c, Provenance::Custom),
        }
    }

    /// Build for any even `n >= 6`; the caller must supply the hexagon.
    pub fn build_experimental(n: usize, choice: HexagonChoice) -> Result<Self, SchemeError> {
        if SUPPORTED_N.contains(&n) {
            return Self::build(n, Some(choice));
        }
        if n < 6 || n % 2 != 0 {
            return Err(SchemeError::UnsupportedN(n));
        }
        Self::assemble(n, choice, Provenance::Custom)
    }

    fn assemble(n: usize, choice: HexagonChoice, provenance: Provenance) -> Result<Self, SchemeError> {
        let norm = PolygonalNorm::regular(n, BALL_CIRCUMRADIUS, 0.0)?;
        let half_ball = PolygonalNorm::regular(n, BALL_CIRCUMRADIUS / 2.0, 0.0)?.ball().clone();
        let hexagon = build_hexagon(&half_ball, &choice)?;
        let a = |i| hexagon.a(i);
        let b1 = a(1) + a(6);
        let b2 = a(2) + a(3);
        let tiling = Lattice2::new(b1, b2)?;
        let colors = Lattice2::new(b1 * 3.0, b2 * 2.0)?;
        let coset_reps = std::array::from_fn(|c| tiling.point((c % 3) as i64, (c / 3) as i64));
        // candidate block half-width: hexagon points have L coordinates in
        // [-m, m], rounding adds 1/2
        let m = hexagon
            .vertices()
            .iter()
            .map(|&v| {
                let (s, t) = tiling.coords(v);
                s.abs().max(t.abs())
            })
            .fold(0.0, f64::max);
        let reach = ((m + 0.5 + 1e-6).floor() as i64).max(1);
        Ok(Self {
            n,
            choice,
            provenance,
            norm,
            half_ball,
            hexagon,
            tiling,
            colors,
            coset_reps,
            flat_generator: b2 * 2.0,
            reach,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn choice(&self) -> &HexagonChoice {
        &self.choice
    }

    pub fn provenance(&self) -> Provenance {
        self.provenance
    }

    /// Short identifier used in reports.
    pub fn id(&self) -> String {
        format!("n{}-{}", self.n, self.choice)
    }

    /// The unit ball `C` (circumradius 2).
    pub fn norm(&self) -> &PolygonalNorm {
        &self.norm
    }

    /// `C/2`.
    pub fn half_ball(&self) -> &ConvexPolygon {
        &self.half_ball
    }

    pub fn hexagon(&self) -> &HalfOpenHexagon {
        &self.hexagon
    }

    /// The tiling lattice `L`.
    pub fn tiling(&self) -> &Lattice2 {
        &self.tiling
    }

    /// The color sublattice `L'` (basis `v1 = 3·b1`, `v2 = 2·b2`).
    pub fn colors(&self) -> &Lattice2 {
        &self.colors
    }

    pub fn coset_reps(&self) -> &[Vec2; 6] {
        &self.coset_reps
    }

    /// The `L'` generator perpendicular to the shared sides (`v2`).
    pub fn flat_generator(&self) -> Vec2 {
        self.flat_generator
    }

    /// The tile containing `p` under the half-open rule.
    ///
    /// Picks the deepest candidate tile near `p`; if `p` is on that tile's
    /// boundary, ownership follows the kept/removed status of the boundary
    /// feature, which maps to exactly one neighbor.
    pub fn cell_of(&self, p: Vec2) -> Result<Cell, SchemeError> {
        if !p.is_finite() {
            return Err(SchemeError::Uncovered(p));
        }
        let (s, t) = self.tiling.coords(p);
        let (i0, j0) = (s.round() as i64, t.round() as i64);
        let mut best: Option<((i64, i64), f64)> = None;
        'search: for di in -self.reach..=self.reach {
            for dj in -self.reach..=self.reach {
                let c = (i0 + di, j0 + dj);
                let d = self.hexagon.depth(p - self.tiling.point(c.0, c.1));
                if best.is_none_or(|(_, bd)| d > bd) {
                    best = Some((c, d));
                    if d > EPS_GEOM {
                        break 'search;
                    }
                }
            }
        }
        let (c, depth) = best.expect("candidate block is nonempty");
        if depth < -EPS_GEOM {
            return Err(SchemeError::Uncovered(p));
        }
        let owner = match self.hexagon.locate(p - self.tiling.point(c.0, c.1)) {
            Location::Interior => c,
            Location::Boundary(f) if f.is_kept() => c,
            Location::Boundary(f) => {
                let (di, dj) = f.owner_offset();
                (c.0 + di, c.1 + dj)
            }
            Location::Outside | Location::Ambiguous => {
                return Err(SchemeError::AmbiguousBoundary { point: p, tile: c })
            }
        };
        Ok(Cell { coeffs: owner, center: self.tiling.point(owner.0, owner.1) })
    }

    /// Tiles in the candidate block that claim `p` under an independent
    /// per-tile half-open test. Exactly one for a correct partition.
    pub fn claims(&self, p: Vec2) -> Vec<(i64, i64)> {
        let (s, t) = self.tiling.coords(p);
        let (i0, j0) = (s.round() as i64, t.round() as i64);
        let r = self.reach + 1;
        let mut out = Vec::new();
        for i in i0 - r..=i0 + r {
            for j in j0 - r..=j0 + r {
                if self.hexagon.contains(p - self.tiling.point(i, j)) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// Color in `0..6` of the point `p`.
    pub fn color_of(&self, p: Vec2) -> Result<usize, SchemeError> {
        self.cell_of(p).map(|c| color_of_cell(c.coeffs))
    }

    /// Serializable description of the scheme.
    pub fn to_document(&self) -> SchemeDocument {
        SchemeDocument {
            format: SCHEME_FORMAT.to_string(),
            n: self.n,
            choice: self.choice,
            provenance: self.provenance,
            ball_vertices: self.norm.ball().vertices().to_vec(),
            half_ball_vertices: self.half_ball.vertices().to_vec(),
            hexagon: *self.hexagon.vertices(),
            tiling: self.tiling,
            colors: self.colors,
            coset_reps: self.coset_reps.to_vec(),
            flat_generator: self.flat_generator,
        }
    }

    /// Rebuild from a document. `n` and `choice` are authoritative; the
    /// stored geometry is informational and is recomputed.
    pub fn from_document(doc: &SchemeDocument) -> Result<Self, SchemeError> {
        if SUPPORTED_N.contains(&doc.n) {
            Self::build(doc.n, Some(doc.choice))
        } else {
            Self::build_experimental(doc.n, doc.choice)
        }
    }
}

pub const SCHEME_FORMAT: &str = "mchroma-scheme/1";

/// JSON form of a [`ColoringScheme`].
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SchemeDocument {
    pub format: String,
    pub n: usize,
    pub choice: HexagonChoice,
    pub provenance: Provenance,
    /// Vertices of `C` (circumradius 2), counterclockwise from `(2, 0)`.
    pub ball_vertices: Vec<Vec2>,
    pub half_ball_vertices: Vec<Vec2>,
    /// `A1..A6`, clockwise.
    pub hexagon: [Vec2; 6],
    pub tiling: Lattice2,
    pub colors: Lattice2,
    pub coset_reps: Vec<Vec2>,
    pub flat_generator: Vec2,
}

/// Angle helper for the worked examples: `(cos(kπ/d), sin(kπ/d))`.
pub fn unit_at(k: f64, d: f64) -> Vec2 {
    Vec2::from_angle(k * PI / d)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s3() -> f64 {
        3f64.sqrt()
    }

    #[test]
    fn dodecagon_lattices_match_worked_example() {
        let sc = ColoringScheme::build(12, None).unwrap();
        let s3 = s3();
        assert!(sc.tiling().b1().approx_eq(Vec2::new((1.0 - 2.0 * s3) / 4.0, (4.0 + s3) / 4.0), 1e-12));
        assert!(sc.tiling().b2().approx_eq(Vec2::new((2.0 + s3) / 2.0, -0.5), 1e-12));
        assert!(sc.colors().b1().approx_eq(Vec2::new((3.0 - 6.0 * s3) / 4.0, (12.0 + 3.0 * s3) / 4.0), 1e-12));
        assert!(sc.colors().b2().approx_eq(Vec2::new(2.0 + s3, -1.0), 1e-12));
        // shared sides parallel to (2 − √3, 1)
        assert!(sc.flat_generator().dot(Vec2::new(2.0 - s3, 1.0)).abs() < 1e-12);
    }

    #[test]
    fn appendix_hexagon_vertices() {
        let sc = ColoringScheme::build(22, None).unwrap();
        let h = sc.hexagon();
        let p4 = unit_at(4.0, 22.0);
        let p6 = unit_at(6.0, 22.0);
        assert!(h.a(1).approx_eq(p4 * 0.32 + p6 * 0.68, 1e-12));
        assert!(h.a(2).approx_eq(Vec2::new(1.0, 0.0), 1e-12));
        assert!(h.a(3).approx_eq(Vec2::new((2.0 * PI / 22.0).cos(), -(2.0 * PI / 22.0).sin()), 1e-12));
        for i in 1..=3 {
            assert_eq!(h.a(i + 3), -h.a(i));
        }
    }

    #[test]
    fn invalid_choices_are_rejected() {
        let n = 12;
        let bad = [
            HexagonKind::VertexIndex { index: 0 },
            HexagonKind::VertexIndex { index: 5 },
            HexagonKind::SideSplit { side: 5, ratio: 0.5 },
            HexagonKind::SideSplit { side: 1, ratio: 1.0 },
            HexagonKind::SideSplit { side: 1, ratio: f64::NAN },
            HexagonKind::ArcPosition { t: 0.0 },
        ];
        for k in bad {
            let r = ColoringScheme::build(n, Some(HexagonChoice::canonical(n, k)));
            assert!(matches!(r, Err(SchemeError::InvalidChoice(_))), "{k:?}: {r:?}");
        }
        let far = HexagonChoice { kind: HexagonKind::BoundaryMidpoint, shared_side_index: 12 };
        assert!(ColoringScheme::build(12, Some(far)).is_err());
        assert!(matches!(ColoringScheme::build(9, None), Err(SchemeError::UnsupportedN(9))));
        assert!(matches!(ColoringScheme::build(24, None), Err(SchemeError::UnsupportedN(24))));
    }

    #[test]
    fn square_arc_is_straight_so_hexagon_degenerates() {
        let half = PolygonalNorm::regular(4, 1.0, 0.0).unwrap().ball().clone();
        let c = HexagonChoice::canonical(4, HexagonKind::ArcPosition { t: 0.5 });
        assert!(matches!(build_hexagon(&half, &c), Err(SchemeError::DegenerateHexagon(_))));
    }

    #[test]
    fn rotated_shared_side_is_a_rotation() {
        let n = 12;
        let base = ColoringScheme::build(n, None).unwrap();
        let rot = HexagonChoice { kind: HexagonKind::BoundaryMidpoint, shared_side_index: 2 };
        let sc = ColoringScheme::build(n, Some(rot)).unwrap();
        assert_eq!(sc.provenance(), Provenance::Custom);
        let angle = 2.0 * PI * 3.0 / 12.0;
        let (s, c) = angle.sin_cos();
        for i in 1..=6 {
            let v = base.hexagon().a(i);
            let r = Vec2::new(c * v.x - s * v.y, s * v.x + c * v.y);
            assert!(sc.hexagon().a(i).approx_eq(r, 1e-12));
        }
    }

    #[test]
    fn origin_and_kept_vertex_belong_to_central_tile() {
        let sc = ColoringScheme::build(12, None).unwrap();
        assert_eq!(sc.cell_of(Vec2::ZERO).unwrap().coeffs, (0, 0));
        assert_eq!(sc.color_of(Vec2::ZERO).unwrap(), 0);
        assert_eq!(sc.cell_of(sc.hexagon().a(1)).unwrap().coeffs, (0, 0));
        assert_eq!(sc.cell_of(sc.hexagon().a(6)).unwrap().coeffs, (0, 0));
    }

    #[test]
    fn removed_vertex_a4_goes_to_a_neighbor() {
        // oracle: A4 is a vertex of three tiles; in the tile where it is A6
        // (offset a4 − a6 = −b1) it is kept
        let sc = ColoringScheme::build(12, None).unwrap();
        let a4 = sc.hexagon().a(4);
        let cell = sc.cell_of(a4).unwrap();
        assert_ne!(cell.coeffs, (0, 0));
        assert_eq!(cell.coeffs, (-1, 0));
        assert!(cell.center.approx_eq(a4 - sc.hexagon().a(6), 1e-12));
        assert_eq!(sc.claims(a4), vec![(-1, 0)]);
    }

    #[test]
    fn every_vertex_has_one_owner() {
        for n in SUPPORTED_N {
            let sc = ColoringScheme::build(n, None).unwrap();
            for v in sc.hexagon().vertices() {
                assert_eq!(sc.claims(*v).len(), 1, "n={n} vertex {v}");
            }
        }
    }

    #[test]
    fn coset_reps_cover_all_colors() {
        let sc = ColoringScheme::build(16, None).unwrap();
        let mut seen = [false; 6];
        for (c, r) in sc.coset_reps().iter().enumerate() {
            let col = sc.color_of(*r).unwrap();
            assert_eq!(col, c);
            seen[col] = true;
        }
        assert!(seen.iter().all(|&s| s));
    }

    #[test]
    fn nonfinite_point_is_an_error() {
        let sc = ColoringScheme::build(8, None).unwrap();
        assert!(sc.cell_of(Vec2::new(f64::NAN, 0.0)).is_err());
    }

    #[test]
    fn document_roundtrip_rebuilds_same_scheme() {
        let sc = ColoringScheme::build(22, None).unwrap();
        let doc = sc.to_document();
        let json = serde_json::to_string(&doc).unwrap();
        let back: SchemeDocument = serde_json::from_str(&json).unwrap();
        assert_eq!(back, doc);
        assert_eq!(ColoringScheme::from_document(&back).unwrap(), sc);
    }
}
