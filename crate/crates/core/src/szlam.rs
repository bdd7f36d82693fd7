//! Red–blue colorings with a forbidden translate configuration.
//!
//! A regular proper `k`-coloring with classes `C_i = C_1 + v_i` gives a
//! red–blue coloring (red = `C_1`) in which red avoids unit distance and
//! blue contains no translate of `K = {−v_1, …, −v_k}`: for any `m`, the
//! class containing `m` is `C_1 + v_i`, so `m − v_i` is red. Conversely,
//! from such a red–blue pair, coloring `x` by the first `i` with `x + a_i`
//! red is a proper `k`-coloring.

use std::fmt;
use std::sync::Arc;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::SzlamError;
use crate::geom::{Vec2, EPS_GEOM};
use crate::norm::PolygonalNorm;
use crate::sampling::par_collect;
use crate::scheme::ColoringScheme;

/// Region that sampled points are drawn from.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SampleDomain {
    /// `origin + s·e1 + t·e2`, `s, t` in `[0, 1)`.
    Parallelogram { origin: Vec2, e1: Vec2, e2: Vec2 },
    /// Axis-aligned box `[min, max)`.
    Box { min: Vec2, max: Vec2 },
}

impl SampleDomain {
    pub fn sample<R: Rng>(&self, rng: &mut R) -> Vec2 {
        match *self {
            SampleDomain::Parallelogram { origin, e1, e2 } => {
                origin + e1 * rng.gen::<f64>() + e2 * rng.gen::<f64>()
            }
            SampleDomain::Box { min, max } => Vec2::new(
                min.x + (max.x - min.x) * rng.gen::<f64>(),
                min.y + (max.y - min.y) * rng.gen::<f64>(),
            ),
        }
    }
}

type RedPredicate = Arc<dyn Fn(Vec2) -> bool + Send + Sync>;

/// A two-coloring of the plane given by its red class.
#[derive(Clone)]
pub struct RedBlueColoring {
    red: RedPredicate,
    description: String,
    domain: Option<SampleDomain>,
}

impl fmt::Debug for RedBlueColoring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("RedBlueColoring")
            .field("description", &self.description)
            .field("domain", &self.domain)
            .finish_non_exhaustive()
    }
}

impl RedBlueColoring {
    /// User-supplied red class. `domain` is where sampling checks draw from
    /// when no explicit domain is passed; it should be a period cell when
    /// the coloring is periodic.
    pub fn new(
        description: impl Into<String>,
        red: impl Fn(Vec2) -> bool + Send + Sync + 'static,
        domain: Option<SampleDomain>,
    ) -> Self {
        Self { red: Arc::new(red), description: description.into(), domain }
    }

    #[inline]
    pub fn is_red(&self, p: Vec2) -> bool {
        (self.red)(p)
    }

    pub fn description(&self) -> &str {
        &self.description
    }

    pub fn domain(&self) -> Option<SampleDomain> {
        self.domain
    }
}

/// A finite point configuration `K`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec2>", into = "Vec<Vec2>")]
pub struct Configuration {
    points: Vec<Vec2>,
}

impl Configuration {
    pub fn new(points: Vec<Vec2>) -> Result<Self, SzlamError> {
        if points.is_empty() {
            return Err(SzlamError::EmptyConfiguration);
        }
        for i in 0..points.len() {
            for j in i + 1..points.len() {
                if points[i].approx_eq(points[j], EPS_GEOM) {
                    return Err(SzlamError::DuplicatePoint(i, j));
                }
            }
        }
        Ok(Self { points })
    }

    pub fn points(&self) -> &[Vec2] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

impl TryFrom<Vec<Vec2>> for Configuration {
    type Error = SzlamError;
    fn try_from(v: Vec<Vec2>) -> Result<Self, Self::Error> {
        Configuration::new(v)
    }
}

impl From<Configuration> for Vec<Vec2> {
    fn from(c: Configuration) -> Self {
        c.points
    }
}

/// Red = color class 0 of the scheme; `K = {−r_i}` over the coset
/// representatives `r_i` (so `K` contains the origin).
pub fn to_red_blue(scheme: Arc<ColoringScheme>) -> (RedBlueColoring, Configuration) {
    let k = Configuration::new(scheme.coset_reps().iter().map(|&r| -r).collect())
        .expect("coset representatives are distinct");
    let domain = SampleDomain::Parallelogram {
        origin: Vec2::ZERO,
        e1: scheme.colors().b1(),
        e2: scheme.colors().b2(),
    };
    let description = format!("color class 0 of {}", scheme.id());
    let rb = RedBlueColoring::new(description, move |p| matches!(scheme.color_of(p), Ok(0)), Some(domain));
    (rb, k)
}

/// The coloring `x ↦ min{i : x + a_i red}` (1-based).
#[derive(Clone, Debug)]
pub struct SzlamColoring {
    rb: RedBlueColoring,
    config: Configuration,
}

impl SzlamColoring {
    pub fn n_colors(&self) -> usize {
        self.config.len()
    }

    pub fn color(&self, x: Vec2) -> Result<usize, SzlamError> {
        self.config
            .points()
            .iter()
            .position(|&a| self.rb.is_red(x + a))
            .map(|i| i + 1)
            .ok_or(SzlamError::HypothesisViolated(x))
    }
}

pub fn from_red_blue(rb: RedBlueColoring, config: Configuration) -> SzlamColoring {
    SzlamColoring { rb, config }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct HitReport {
    pub n_samples: u64,
    pub seed: u64,
    pub domain: SampleDomain,
    /// Sampled `m` with `K + m` entirely blue.
    pub misses: Vec<Vec2>,
    pub pass: bool,
}

fn resolve_domain(rb: &RedBlueColoring, domain: Option<SampleDomain>) -> SampleDomain {
    domain.or(rb.domain()).unwrap_or(SampleDomain::Box {
        min: Vec2::new(-1.0, -1.0),
        max: Vec2::new(1.0, 1.0),
    })
}

/// Sample translates `K + m` and report those missing the red class.
/// Uses `domain` when given, otherwise the coloring's own domain, otherwise
/// the box `[−1, 1)²`.
pub fn check_translate_hits(
    rb: &RedBlueColoring,
    config: &Configuration,
    n_samples: u64,
    seed: u64,
    domain: Option<SampleDomain>,
) -> HitReport {
    let domain = resolve_domain(rb, domain);
    let misses = par_collect(n_samples, seed, |_, rng| {
        let m = domain.sample(rng);
        (!config.points().iter().any(|&a| rb.is_red(m + a))).then_some(m)
    });
    HitReport { n_samples, seed, domain, pass: misses.is_empty(), misses }
}

/// Sampled unit-pair check of a red–blue coloring or of a derived
/// coloring.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct UnitPairReport {
    pub n_samples: u64,
    pub seed: u64,
    /// Pairs `(p, q)` at unit distance with equal color (or both red).
    pub monochromatic: Vec<(Vec2, Vec2)>,
    /// Points where the derived coloring was undefined.
    pub hypothesis_failures: Vec<Vec2>,
    pub pass: bool,
}

enum PairIssue {
    Mono(Vec2, Vec2),
    Undefined(Vec2),
}

fn unit_pair_report(n_samples: u64, seed: u64, issues: Vec<PairIssue>) -> UnitPairReport {
    let mut monochromatic = Vec::new();
    let mut hypothesis_failures = Vec::new();
    for i in issues {
        match i {
            PairIssue::Mono(p, q) => monochromatic.push((p, q)),
            PairIssue::Undefined(x) => hypothesis_failures.push(x),
        }
    }
    UnitPairReport {
        n_samples,
        seed,
        pass: monochromatic.is_empty() && hypothesis_failures.is_empty(),
        monochromatic,
        hypothesis_failures,
    }
}

/// Red points `p` with `p + u` red for `u ∈ ∂C`. Only pairs whose first
/// point is red count toward a violation.
pub fn check_red_unit_avoidance(
    rb: &RedBlueColoring,
    norm: &PolygonalNorm,
    n_samples: u64,
    seed: u64,
    domain: Option<SampleDomain>,
) -> UnitPairReport {
    let domain = resolve_domain(rb, domain);
    let issues = par_collect(n_samples, seed, |_, rng| {
        let p = domain.sample(rng);
        let q = p + norm.boundary_point(rng.gen::<f64>());
        (rb.is_red(p) && rb.is_red(q)).then_some(PairIssue::Mono(p, q))
    });
    unit_pair_report(n_samples, seed, issues)
}

/// Unit pairs that the derived coloring colors alike.
pub fn check_derived_coloring(
    coloring: &SzlamColoring,
    norm: &PolygonalNorm,
    n_samples: u64,
    seed: u64,
    domain: Option<SampleDomain>,
) -> UnitPairReport {
    let domain = resolve_domain(&coloring.rb, domain);
    let issues = par_collect(n_samples, seed, |_, rng| {
        let p = domain.sample(rng);
        let q = p + norm.boundary_point(rng.gen::<f64>());
        match (coloring.color(p), coloring.color(q)) {
            (Ok(a), Ok(b)) => (a == b).then_some(PairIssue::Mono(p, q)),
            (Err(_), _) => Some(PairIssue::Undefined(p)),
            (_, Err(_)) => Some(PairIssue::Undefined(q)),
        }
    });
    unit_pair_report(n_samples, seed, issues)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn scheme(n: usize) -> Arc<ColoringScheme> {
        Arc::new(ColoringScheme::build(n, None).unwrap())
    }

    #[test]
    fn configuration_validation() {
        assert!(matches!(Configuration::new(vec![]), Err(SzlamError::EmptyConfiguration)));
        let p = Vec2::new(1.0, 2.0);
        assert!(matches!(Configuration::new(vec![p, Vec2::ZERO, p]), Err(SzlamError::DuplicatePoint(0, 2))));
    }

    #[test]
    fn scheme_configuration_is_negated_coset_reps() {
        let sc = scheme(12);
        let (_, k) = to_red_blue(sc.clone());
        assert_eq!(k.len(), 6);
        assert_eq!(k.points()[0], Vec2::ZERO);
        for (a, r) in k.points().iter().zip(sc.coset_reps()) {
            assert_eq!(*a, -*r);
        }
    }

    #[test]
    fn red_point_gets_color_one() {
        let sc = scheme(12);
        let (rb, k) = to_red_blue(sc);
        let c = from_red_blue(rb, k);
        assert_eq!(c.color(Vec2::ZERO).unwrap(), 1);
    }

    #[test]
    fn trivial_colorings() {
        let all = RedBlueColoring::new("all red", |_| true, None);
        let none = RedBlueColoring::new("all blue", |_| false, None);
        let k = Configuration::new(vec![Vec2::ZERO]).unwrap();
        let c = from_red_blue(all.clone(), k.clone());
        assert_eq!(c.color(Vec2::new(3.0, -7.0)).unwrap(), 1);
        assert!(check_translate_hits(&all, &k, 1000, 1, None).pass);
        let miss = check_translate_hits(&none, &k, 1000, 1, None);
        assert_eq!(miss.misses.len(), 1000);
        let c = from_red_blue(none, k);
        assert!(matches!(c.color(Vec2::ZERO), Err(SzlamError::HypothesisViolated(_))));
    }

    #[test]
    fn explicit_box_domain_is_used() {
        let rb = RedBlueColoring::new("right half", |p| p.x >= 0.0, None);
        let k = Configuration::new(vec![Vec2::ZERO]).unwrap();
        let dom = SampleDomain::Box { min: Vec2::new(1.0, 0.0), max: Vec2::new(2.0, 1.0) };
        assert!(check_translate_hits(&rb, &k, 500, 3, Some(dom)).pass);
        let dom = SampleDomain::Box { min: Vec2::new(-2.0, 0.0), max: Vec2::new(-1.0, 1.0) };
        assert_eq!(check_translate_hits(&rb, &k, 500, 3, Some(dom)).misses.len(), 500);
    }
}
