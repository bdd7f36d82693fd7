//! Polygonal norms: the unit ball `C` as a regular even-gon, the gauge
//! `‖x‖_C = min{λ ≥ 0 : x ∈ λC}`, and arc-length sampling of `∂C`.

use std::f64::consts::TAU;

use crate::error::NormError;
use crate::geom::{ConvexPolygon, Vec2, EPS_GEOM};

/// One facet inequality `normal·x <= offset` of the unit ball.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Facet {
    pub normal: Vec2,
    pub offset: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct PolygonalNorm {
    ball: ConvexPolygon,
    facets: Vec<Facet>,
    /// Cumulative boundary length at each vertex, starting at 0.
    arc: Vec<f64>,
    perimeter: f64,
    n_vertices: usize,
    circumradius: f64,
}

impl PolygonalNorm {
    /// Regular `n`-gon ball with vertices at
    /// `circumradius·(cos(2πt/n + phase), sin(2πt/n + phase))`.
    ///
    /// The second half of the vertex cycle is the exact negation of the
    /// first, so facets come in exactly antipodal pairs and
    /// `gauge(v) == gauge(-v)` holds bit for bit.
    pub fn regular(n: usize, circumradius: f64, phase: f64) -> Result<Self, NormError> {
        if n < 4 || n % 2 != 0 {
            return Err(NormError::BadVertexCount(n));
        }
        if !circumradius.is_finite() || circumradius <= 0.0 || !phase.is_finite() {
            return Err(NormError::BadCircumradius(circumradius));
        }
        let half: Vec<Vec2> = (0..n / 2)
            .map(|t| {
                let v = Vec2::from_angle(TAU * t as f64 / n as f64 + phase) * circumradius;
                // scrub cos(π/2)-style residue so paper coordinates come out clean
                let snap = |x: f64| if x.abs() < 1e-15 * circumradius { 0.0 } else { x };
                Vec2::new(snap(v.x), snap(v.y))
            })
            .collect();
        let vertices: Vec<Vec2> = half.iter().copied().chain(half.iter().map(|&v| -v)).collect();
        let ball = ConvexPolygon::new(vertices)?;
        let facets = ball
            .facets()
            .into_iter()
            .map(|(normal, offset)| Facet { normal, offset })
            .collect();
        let mut arc = Vec::with_capacity(n + 1);
        let mut acc = 0.0;
        arc.push(0.0);
        for (a, b) in ball.edges() {
            acc += a.distance(b);
            arc.push(acc);
        }
        Ok(Self { ball, facets, arc, perimeter: acc, n_vertices: n, circumradius })
    }

    #[inline]
    pub fn ball(&self) -> &ConvexPolygon {
        &self.ball
    }

    #[inline]
    pub fn facets(&self) -> &[Facet] {
        &self.facets
    }

    #[inline]
    pub fn n_vertices(&self) -> usize {
        self.n_vertices
    }

    #[inline]
    pub fn circumradius(&self) -> f64 {
        self.circumradius
    }

    /// Inradius (apothem) of the ball.
    pub fn inradius(&self) -> f64 {
        self.facets[0].offset
    }

    /// The `C`-norm of `v`.
    #[inline]
    pub fn gauge(&self, v: Vec2) -> f64 {
        self.facets
            .iter()
            .map(|f| f.normal.dot(v) / f.offset)
            .fold(0.0, f64::max)
    }

    #[inline]
    pub fn distance(&self, a: Vec2, b: Vec2) -> f64 {
        self.gauge(b - a)
    }

    /// Point at arc-length fraction `s` along `∂C`, starting at vertex 0 and
    /// running counterclockwise. `s` is wrapped to `[0, 1)`.
    pub fn boundary_point(&self, s: f64) -> Vec2 {
        let s = s - s.floor();
        let target = s * self.perimeter;
        let verts = self.ball.vertices();
        // arc is sorted; find the edge containing target
        let k = match self.arc.binary_search_by(|a| a.total_cmp(&target)) {
            Ok(k) => k,
            Err(k) => k - 1,
        }
        .min(self.n_vertices - 1);
        let len = self.arc[k + 1] - self.arc[k];
        let f = ((target - self.arc[k]) / len).clamp(0.0, 1.0);
        verts[k].lerp(verts[(k + 1) % self.n_vertices], f)
    }

    /// Closed membership in the ball, `gauge(v) <= 1` with `EPS_GEOM` slack.
    pub fn contains(&self, v: Vec2) -> bool {
        self.gauge(v) <= 1.0 + EPS_GEOM
    }
}
