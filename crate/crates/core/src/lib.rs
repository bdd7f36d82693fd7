//! Regular proper 6-colorings of Minkowski planes whose unit circle is a
//! regular polygon with an even number of vertices (8 to 22).
//!
//! The crate builds the lattice–sublattice coloring ([`scheme`]), certifies
//! it geometrically and by Monte Carlo sampling ([`verify`]), searches the
//! hexagon parameters ([`search`]), and converts colorings to red–blue
//! colorings with a forbidden translate configuration ([`szlam`]).
//!
//! ```
//! use mchroma::{ColoringScheme, Vec2};
//!
//! let scheme = ColoringScheme::build(12, None).unwrap();
//! assert_eq!(scheme.color_of(Vec2::ZERO).unwrap(), 0);
//! let report = mchroma::verify::packing_certificate(&scheme);
//! assert!(report.pass);
//! ```

pub mod cli;
pub mod error;
pub mod geom;
pub mod norm;
pub mod sampling;
pub mod scheme;
pub mod search;
pub mod svg;
pub mod szlam;
pub mod verify;

pub use error::{GeomError, NormError, RenderError, SchemeError, SearchError, SzlamError};
pub use geom::{ConvexPolygon, Lattice2, Line, SeparationResult, Vec2, Verdict, EPS_GEOM, EPS_SEP};
pub use norm::PolygonalNorm;
pub use scheme::{ColoringScheme, HalfOpenHexagon, HexagonChoice, HexagonKind, SchemeDocument};
