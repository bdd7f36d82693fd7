//! Draw the n = 22 tiling with the sums that nearly touch.
//! Usage: cargo run --example render_svg -- out.svg

use mchroma::svg::{render, Overlay, RenderOptions};
use mchroma::ColoringScheme;

fn main() {
    let path = std::env::args().nth(1).unwrap_or_else(|| "tiling-22.svg".to_string());
    let scheme = ColoringScheme::build(22, None).unwrap();
    let opts = RenderOptions {
        viewport: [-6.0, -6.0, 6.0, 6.0],
        scale: 60.0,
        overlays: vec![Overlay::Sums, Overlay::Lines, Overlay::Lattice],
        ..Default::default()
    };
    let svg = render(&scheme, &opts).unwrap();
    std::fs::write(&path, &svg).expect("writable path");
    println!("wrote {path} ({} bytes)", svg.len());
}
