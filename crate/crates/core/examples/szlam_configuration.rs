//! Turn a 6-coloring into a red–blue coloring plus a 6-point configuration,
//! and back.

use std::sync::Arc;

use mchroma::szlam::{check_red_unit_avoidance, check_translate_hits, from_red_blue, to_red_blue};
use mchroma::{ColoringScheme, Vec2};

fn main() {
    let scheme = Arc::new(ColoringScheme::build(16, None).unwrap());
    let (rb, k) = to_red_blue(scheme.clone());
    println!("{}", rb.description());
    for (i, a) in k.points().iter().enumerate() {
        println!("  a{} = {a}", i + 1);
    }

    let hits = check_translate_hits(&rb, &k, 100_000, 1, None);
    println!("translates missing red: {} of {}", hits.misses.len(), hits.n_samples);
    let red = check_red_unit_avoidance(&rb, scheme.norm(), 100_000, 1, None);
    println!("red unit pairs: {} of {}", red.monochromatic.len(), red.n_samples);

    let derived = from_red_blue(rb, k);
    for p in [Vec2::ZERO, Vec2::new(1.2, 0.4), Vec2::new(-2.0, 3.0)] {
        // derived colors count from 1
        println!("{p}: derived color {}, scheme color {}", derived.color(p).unwrap(), scheme.color_of(p).unwrap());
    }
}
