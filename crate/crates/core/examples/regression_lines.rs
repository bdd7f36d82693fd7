//! The separating lines of the n = 12 and n = 22 worked examples.

use mchroma::verify::regression_lines;
use mchroma::ColoringScheme;

fn main() {
    for n in [12, 22] {
        let scheme = ColoringScheme::build(n, None).unwrap();
        for r in regression_lines(&scheme) {
            println!(
                "n = {n} line {:<2} vs {}: separates {}  margins ({:.6}, {:.6})  vertices on line ({}, {})",
                r.name,
                r.neighbor,
                r.check.separates,
                r.check.min_margin_p,
                r.check.min_margin_q,
                r.check.on_line_p,
                r.check.on_line_q
            );
        }
    }
}
