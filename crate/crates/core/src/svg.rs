//! SVG rendering of a coloring scheme.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::RenderError;
use crate::geom::{ConvexPolygon, Line, Vec2};
use crate::scheme::ColoringScheme;
use crate::verify::{regression_lines, tile_sum};

/// Fill colors for classes 0..6. Class 0 is the red class.
pub const DEFAULT_PALETTE: [&str; 6] = ["red", "gold", "limegreen", "deepskyblue", "mediumpurple", "darkorange"];

const MAX_TILES: u64 = 200_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Overlay {
    /// Outlines of `C/2 ⊕ H` at the `L'` points.
    Sums,
    /// Published separating lines, where the scheme has them.
    Lines,
    /// Basis vectors of `L` and `L'` from the origin.
    Lattice,
}

impl std::str::FromStr for Overlay {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "sums" => Ok(Overlay::Sums),
            "lines" => Ok(Overlay::Lines),
            "lattice" => Ok(Overlay::Lattice),
            _ => Err(format!("unknown overlay {s:?} (expected sums, lines or lattice)")),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RenderOptions {
    /// `[x0, y0, x1, y1]` in plane coordinates.
    pub viewport: [f64; 4],
    /// Pixels per unit.
    pub scale: f64,
    pub palette: [String; 6],
    pub overlays: Vec<Overlay>,
}

impl Default for RenderOptions {
    fn default() -> Self {
        Self {
            viewport: [-6.0, -6.0, 6.0, 6.0],
            scale: 40.0,
            palette: DEFAULT_PALETTE.map(String::from),
            overlays: Vec::new(),
        }
    }
}

struct Frame {
    x0: f64,
    y0: f64,
    x1: f64,
    y1: f64,
    scale: f64,
}

impl Frame {
    fn map(&self, p: Vec2) -> (f64, f64) {
        ((p.x - self.x0) * self.scale, (self.y1 - p.y) * self.scale)
    }

    fn hits(&self, poly: &ConvexPolygon) -> bool {
        let vs = poly.vertices();
        let (mut lo, mut hi) = (vs[0], vs[0]);
        for v in vs {
            lo = Vec2::new(lo.x.min(v.x), lo.y.min(v.y));
            hi = Vec2::new(hi.x.max(v.x), hi.y.max(v.y));
        }
        hi.x >= self.x0 && lo.x <= self.x1 && hi.y >= self.y0 && lo.y <= self.y1
    }

    fn path(&self, vs: &[Vec2]) -> String {
        let mut d = String::new();
        for (i, &v) in vs.iter().enumerate() {
            let (x, y) = self.map(v);
            let _ = write!(d, "{}{:.4},{:.4} ", if i == 0 { "M" } else { "L" }, x, y);
        }
        d.push('Z');
        d
    }

    /// Segment of `line` inside the frame, if any.
    fn clip(&self, line: &Line) -> Option<(Vec2, Vec2)> {
        let p0 = line.normal * line.offset;
        let dir = line.normal.perp();
        let (mut lo, mut hi) = (f64::NEG_INFINITY, f64::INFINITY);
        for (p, d, a, b) in [(p0.x, dir.x, self.x0, self.x1), (p0.y, dir.y, self.y0, self.y1)] {
            if d.abs() < 1e-15 {
                if p < a || p > b {
                    return None;
                }
            } else {
                let (t0, t1) = ((a - p) / d, (b - p) / d);
                lo = lo.max(t0.min(t1));
                hi = hi.min(t0.max(t1));
            }
        }
        (lo < hi).then(|| (p0 + dir * lo, p0 + dir * hi))
    }
}

fn check(opts: &RenderOptions) -> Result<Frame, RenderError> {
    let [x0, y0, x1, y1] = opts.viewport;
    if !opts.viewport.iter().all(|v| v.is_finite()) || x0 >= x1 || y0 >= y1 {
        return Err(RenderError::BadViewport(opts.viewport));
    }
    if !opts.scale.is_finite() || opts.scale <= 0.0 {
        return Err(RenderError::BadScale(opts.scale));
    }
    Ok(Frame { x0, y0, x1, y1, scale: opts.scale })
}

/// Integer coordinate box in basis `(b1, b2)` covering the viewport grown
/// by `pad`.
fn index_box(scheme_lat: &crate::geom::Lattice2, f: &Frame, pad: f64) -> (i64, i64, i64, i64) {
    let corners = [
        Vec2::new(f.x0 - pad, f.y0 - pad),
        Vec2::new(f.x1 + pad, f.y0 - pad),
        Vec2::new(f.x0 - pad, f.y1 + pad),
        Vec2::new(f.x1 + pad, f.y1 + pad),
    ];
    let (mut i0, mut i1, mut j0, mut j1) = (f64::INFINITY, f64::NEG_INFINITY, f64::INFINITY, f64::NEG_INFINITY);
    for c in corners {
        let (s, t) = scheme_lat.coords(c);
        i0 = i0.min(s);
        i1 = i1.max(s);
        j0 = j0.min(t);
        j1 = j1.max(t);
    }
    (i0.floor() as i64, i1.ceil() as i64, j0.floor() as i64, j1.ceil() as i64)
}

/// Render the tiling inside the viewport. Output depends only on the
/// scheme and the options.
pub fn render(scheme: &ColoringScheme, opts: &RenderOptions) -> Result<String, RenderError> {
    let f = check(opts)?;
    let (w, h) = ((f.x1 - f.x0) * f.scale, (f.y1 - f.y0) * f.scale);
    let hex = scheme.hexagon().polygon();
    let pad = hex.circumradius_about(Vec2::ZERO);
    let (i0, i1, j0, j1) = index_box(scheme.tiling(), &f, pad);
    let count = (i1 - i0 + 1) as u64 * (j1 - j0 + 1) as u64;
    if count > MAX_TILES {
        return Err(RenderError::TooManyTiles(count));
    }

    let mut out = String::new();
    let _ = writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{w:.4}" height="{h:.4}" viewBox="0 0 {w:.4} {h:.4}">"#
    );
    let _ = writeln!(out, "<title>{}</title>", scheme.id());
    let _ = writeln!(out, r#"<g id="tiles" stroke="black" stroke-width="0.5">"#);
    for j in j0..=j1 {
        for i in i0..=i1 {
            let c = scheme.tiling().point(i, j);
            let tile = hex.translate(c);
            if !f.hits(&tile) {
                continue;
            }
            let color = scheme.color_of(c).expect("tile centers are finite");
            let _ = writeln!(
                out,
                r#"<path class="c{color}" fill="{}" d="{}"/>"#,
                opts.palette[color],
                f.path(tile.vertices())
            );
        }
    }
    out.push_str("</g>\n");

    if opts.overlays.contains(&Overlay::Sums) {
        let sum = tile_sum(scheme);
        let r = sum.circumradius_about(Vec2::ZERO);
        let (a0, a1, b0, b1) = index_box(scheme.colors(), &f, r);
        out.push_str(r#"<g id="sums" fill="none" stroke="black" stroke-width="1.5">"#);
        out.push('\n');
        for j in b0..=b1 {
            for i in a0..=a1 {
                let s = sum.translate(scheme.colors().point(i, j));
                if f.hits(&s) {
                    let _ = writeln!(out, r#"<path d="{}"/>"#, f.path(s.vertices()));
                }
            }
        }
        out.push_str("</g>\n");
    }

    if opts.overlays.contains(&Overlay::Lines) {
        out.push_str(r#"<g id="lines" stroke="black" stroke-width="1.5" stroke-dasharray="6 4">"#);
        out.push('\n');
        for reg in regression_lines(scheme) {
            if let Some((a, b)) = f.clip(&reg.line) {
                let ((ax, ay), (bx, by)) = (f.map(a), f.map(b));
                let _ = writeln!(
                    out,
                    r#"<line data-name="{}" x1="{ax:.4}" y1="{ay:.4}" x2="{bx:.4}" y2="{by:.4}"/>"#,
                    reg.name
                );
            }
        }
        out.push_str("</g>\n");
    }

    if opts.overlays.contains(&Overlay::Lattice) {
        out.push_str(r#"<g id="lattice" stroke-width="2">"#);
        out.push('\n');
        let o = f.map(Vec2::ZERO);
        let vecs = [
            ("b1", scheme.tiling().b1(), "black"),
            ("b2", scheme.tiling().b2(), "black"),
            ("v1", scheme.colors().b1(), "navy"),
            ("v2", scheme.colors().b2(), "navy"),
        ];
        for (name, v, stroke) in vecs {
            let (x, y) = f.map(v);
            let _ = writeln!(
                out,
                r#"<line stroke="{stroke}" x1="{:.4}" y1="{:.4}" x2="{x:.4}" y2="{y:.4}"/><text x="{x:.4}" y="{y:.4}" font-size="12">{name}</text>"#,
                o.0, o.1
            );
        }
        out.push_str("</g>\n");
    }
    out.push_str("</svg>\n");
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    #[test]
    fn all_six_fills_appear() {
        let sc = ColoringScheme::build(12, None).unwrap();
        let opts = RenderOptions { viewport: [-10.0, -10.0, 10.0, 10.0], ..Default::default() };
        let svg = render(&sc, &opts).unwrap();
        let fills: BTreeSet<_> =
            svg.lines().filter_map(|l| l.split("fill=\"").nth(1)).map(|s| s.split('"').next().unwrap()).collect();
        for c in DEFAULT_PALETTE {
            assert!(fills.contains(c), "{c} missing");
        }
        assert!(svg.ends_with("</svg>\n"));
    }

    #[test]
    fn bad_viewport_and_scale() {
        let sc = ColoringScheme::build(12, None).unwrap();
        let mut opts = RenderOptions { viewport: [1.0, 0.0, 0.0, 1.0], ..Default::default() };
        assert!(matches!(render(&sc, &opts), Err(RenderError::BadViewport(_))));
        opts.viewport = [0.0, 0.0, 1.0, 1.0];
        opts.scale = 0.0;
        assert!(matches!(render(&sc, &opts), Err(RenderError::BadScale(_))));
    }

    #[test]
    fn clip_horizontal_line() {
        let f = Frame { x0: -1.0, y0: -1.0, x1: 1.0, y1: 1.0, scale: 1.0 };
        let l = Line::new(Vec2::new(0.0, 1.0), 0.5).unwrap();
        let (a, b) = f.clip(&l).unwrap();
        assert!((a.y - 0.5).abs() < 1e-12 && (b.y - 0.5).abs() < 1e-12);
        assert!(((a.x - b.x).abs() - 2.0).abs() < 1e-12);
        assert!(f.clip(&Line::new(Vec2::new(0.0, 1.0), 2.0).unwrap()).is_none());
    }
}
