//! Error types for the crate.

use thiserror::Error;

use crate::geom::Vec2;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum GeomError {
    #[error("coordinate is NaN or infinite")]
    NonFinite,
    #[error("polygon needs at least 3 vertices, got {0}")]
    TooFewVertices(usize),
    #[error("vertex cycle is not strictly convex counterclockwise at vertex {index} (turn {turn:e})")]
    NotStrictlyConvex { index: usize, turn: f64 },
    #[error("lattice basis is degenerate (det {0:e})")]
    DegenerateLattice(f64),
    #[error("radius must be finite and positive, got {0}")]
    BadRadius(f64),
    #[error("line normal must be finite and nonzero")]
    DegenerateLine,
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum NormError {
    #[error("polygon norm needs an even vertex count >= 4, got {0}")]
    BadVertexCount(usize),
    #[error("circumradius must be finite and positive, got {0}")]
    BadCircumradius(f64),
    #[error(transparent)]
    Geom(#[from] GeomError),
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SchemeError {
    #[error("n = {0} is not supported (expected an even n in 8..=22, or an even n >= 6 in experimental mode)")]
    UnsupportedN(usize),
    #[error("invalid hexagon choice: {0}")]
    InvalidChoice(String),
    #[error("degenerate hexagon: {0}")]
    DegenerateHexagon(String),
    #[error("hexagon vertex {index} is not on the boundary of C/2 (gauge {gauge})")]
    OffBoundary { index: usize, gauge: f64 },
    #[error("no tile in the candidate block contains {0}")]
    Uncovered(Vec2),
    #[error("point {point} sits on an ambiguous boundary feature of tile {tile:?}")]
    AmbiguousBoundary { point: Vec2, tile: (i64, i64) },
    #[error(transparent)]
    Norm(#[from] NormError),
    #[error(transparent)]
    Geom(#[from] GeomError),
}

#[derive(Debug, Error)]
pub enum SzlamError {
    #[error("Szlam hypothesis violated at {0}: no translate x + a_i is red")]
    HypothesisViolated(Vec2),
    #[error("configuration must be nonempty")]
    EmptyConfiguration,
    #[error("configuration points {0} and {1} coincide")]
    DuplicatePoint(usize, usize),
    #[error(transparent)]
    Scheme(#[from] SchemeError),
}

#[derive(Debug, Error)]
pub enum SearchError {
    #[error("no feasible hexagon found for n = {n} (best clearance {best})")]
    NoFeasibleChoice { n: usize, best: f64 },
    #[error("grid size must be at least 3, got {0}")]
    GridTooSmall(usize),
    #[error(transparent)]
    Scheme(#[from] SchemeError),
}

#[derive(Debug, Error)]
pub enum RenderError {
    #[error("viewport must be finite with x0 < x1 and y0 < y1, got {0:?}")]
    BadViewport([f64; 4]),
    #[error("scale must be finite and positive, got {0}")]
    BadScale(f64),
    #[error("viewport would contain {0} tiles; shrink it or lower the scale")]
    TooManyTiles(u64),
}
