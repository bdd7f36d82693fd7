//! Distances in the regular 22-gon norm.

use mchroma::norm::PolygonalNorm;
use mchroma::Vec2;

fn main() {
    let norm = PolygonalNorm::regular(22, 2.0, 0.0).unwrap();
    println!("circumradius {}, inradius {:.12}", norm.circumradius(), norm.inradius());
    for p in [Vec2::new(2.0, 0.0), Vec2::new(0.0, 2.0), Vec2::new(1.0, 1.0), Vec2::new(-3.0, 0.5)] {
        println!("|{p}|_C = {:.12}  (euclidean {:.12})", norm.gauge(p), p.norm());
    }
    // walk around the unit circle by arc length
    for k in 0..8 {
        let u = norm.boundary_point(k as f64 / 8.0);
        println!("s = {:.3}: {u}, gauge {:.15}", k as f64 / 8.0, norm.gauge(u));
    }
}
