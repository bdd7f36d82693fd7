//! Build the n = 12 scheme and look at its lattices and a few colors.

use mchroma::{ColoringScheme, Vec2};

fn main() {
    let scheme = ColoringScheme::build(12, None).expect("12 is supported");
    println!("scheme {} ({:?})", scheme.id(), scheme.provenance());
    for i in 1..=6 {
        println!("  A{i} = {}", scheme.hexagon().a(i));
    }
    println!("tiling lattice L : b1 = {}, b2 = {}", scheme.tiling().b1(), scheme.tiling().b2());
    println!("color lattice L' : v1 = {}, v2 = {}", scheme.colors().b1(), scheme.colors().b2());
    println!("flat generator   : {}", scheme.flat_generator());

    for p in [Vec2::ZERO, Vec2::new(1.0, 0.0), Vec2::new(-0.5, 2.0), Vec2::new(3.0, -1.25)] {
        let cell = scheme.cell_of(p).unwrap();
        println!("{p} lies in tile {:?}, color {}", cell.coeffs, scheme.color_of(p).unwrap());
    }

    // the kept vertex A1 stays in the central tile, its opposite A4 does not
    let (a1, a4) = (scheme.hexagon().a(1), scheme.hexagon().a(4));
    println!("A1 -> {:?}, A4 -> {:?}", scheme.cell_of(a1).unwrap().coeffs, scheme.cell_of(a4).unwrap().coeffs);
}
