//! Re-derive the built-in hexagons for n = 14..20 and compare them with
//! the shipped defaults.

use mchroma::scheme::default_choice;
use mchroma::search::certify_defaults;

fn main() {
    let certified = certify_defaults().expect("every size has a feasible hexagon");
    for (n, c) in &certified {
        let shipped = default_choice(*n).unwrap().0;
        println!(
            "n = {n:2}: {} clearance {:.6}{} {}",
            c.choice,
            c.clearance,
            if c.fallback { " (side-ratio fallback)" } else { "" },
            if c.choice == shipped { "matches default" } else { "DIFFERS from default" },
        );
        for cand in &c.candidates {
            println!("    {:<28} {:+.6}", cand.choice.to_string(), cand.clearance);
        }
    }
}
