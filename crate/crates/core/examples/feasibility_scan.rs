//! How much room the hexagon has: arc scan at n = 12, ratio scan at n = 22.
//! Pass a path to also write the n = 22 curve as CSV.

use mchroma::search::{scan, Parameterization};

fn main() {
    let r12 = scan(12, Parameterization::ArcPosition, 512).unwrap();
    println!("n = 12, arc position:");
    for iv in &r12.intervals {
        println!("  feasible [{:.6}, {:.6}]", iv.lo, iv.hi);
    }
    println!("  best t = {:.6}, clearance {:.6}", r12.best_t, r12.best_clearance);

    let r22 = scan(22, Parameterization::SideRatio { side: 2 }, 512).unwrap();
    println!("n = 22, ratio on side 2:");
    for iv in &r22.intervals {
        println!("  feasible [{:.6}, {:.6}] width {:.6}", iv.lo, iv.hi, iv.width());
    }
    println!("  best ratio = {:.6}, clearance {:.6}", r22.best_t, r22.best_clearance);

    for n in [24, 26] {
        let r = scan(n, Parameterization::ArcPosition, 256).unwrap();
        println!("n = {n} (exploratory): best clearance {:.6} at t = {:.4}", r.best_clearance, r.best_t);
    }

    if let Some(path) = std::env::args().nth(1) {
        std::fs::write(&path, r22.to_csv()).expect("writable path");
        println!("wrote {path}");
    }
}
