//! Independent reference computations shared by the integration tests.
#![allow(dead_code)]

use std::f64::consts::PI;

use mchroma::Vec2;

/// Gauge of the regular `n`-gon with circumradius `r` and a vertex at
/// `(r, 0)`, from the angle of `v` to the nearest facet normal.
pub fn gauge_oracle(n: usize, r: f64, v: Vec2) -> f64 {
    let len = v.x.hypot(v.y);
    if len == 0.0 {
        return 0.0;
    }
    let theta = v.y.atan2(v.x).rem_euclid(2.0 * PI);
    let step = 2.0 * PI / n as f64;
    // facet normals sit at (k + 1/2)·step
    let k = ((theta - step / 2.0) / step).round();
    let phi = theta - (k + 0.5) * step;
    len * phi.cos() / (r * (PI / n as f64).cos())
}

pub fn close(a: Vec2, b: Vec2, tol: f64) -> bool {
    (a.x - b.x).abs() <= tol && (a.y - b.y).abs() <= tol
}

pub fn v(x: f64, y: f64) -> Vec2 {
    Vec2::new(x, y)
}

/// `(cos(kπ/d), sin(kπ/d))`.
pub fn w(k: f64, d: f64) -> Vec2 {
    let a = k * PI / d;
    Vec2::new(a.cos(), a.sin())
}

/// Brute-force lattice points with `|i·b1 + j·b2| < radius` (or `<=`),
/// origin excluded.
pub fn lattice_points_oracle(b1: Vec2, b2: Vec2, radius: f64, closed: bool) -> Vec<(i64, i64)> {
    let mut out = Vec::new();
    for i in -60..=60i64 {
        for j in -60..=60i64 {
            if i == 0 && j == 0 {
                continue;
            }
            let p = b1 * i as f64 + b2 * j as f64;
            let d = p.x.hypot(p.y);
            if (closed && d <= radius + 1e-9) || (!closed && d < radius - 1e-9) {
                out.push((i, j));
            }
        }
    }
    out.sort();
    out
}
