//! Packing certificates for every supported n.

use mchroma::scheme::SUPPORTED_N;
use mchroma::verify::packing_certificate;
use mchroma::ColoringScheme;

fn main() {
    for n in SUPPORTED_N {
        let scheme = ColoringScheme::build(n, None).unwrap();
        let rep = packing_certificate(&scheme);
        println!(
            "{:<28} R = {:.6}  neighbors {:>2}  min non-flat margin {}  {}",
            rep.scheme_id,
            rep.sum_circumradius,
            rep.neighbors.len(),
            rep.min_nonflat_margin.map_or("-".to_string(), |m| format!("{m:.6}")),
            if rep.pass { "PASS" } else { "FAIL" }
        );
        for nb in &rep.neighbors {
            println!(
                "    {:>3?} {:<12} margin {:+.9}{}",
                nb.coeffs,
                format!("{:?}", nb.separation.verdict),
                nb.separation.margin,
                if nb.is_flat_direction { "  (flat)" } else { "" }
            );
        }
    }
}
