//! Seeded unit-pair sampling, the boundary suite, and a broken scheme.

use mchroma::verify::{adversarial_boundary_pairs, sample_contact_pairs, sample_unit_pairs};
use mchroma::{ColoringScheme, HexagonChoice, HexagonKind};

fn main() {
    let samples = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(200_000);
    for n in [12, 18, 22] {
        let scheme = ColoringScheme::build(n, None).unwrap();
        let mc = sample_unit_pairs(&scheme, samples, 7);
        let adv = adversarial_boundary_pairs(&scheme);
        println!(
            "n = {n}: {} random pairs, {} violations ({:.2} s); {} boundary pairs, {} violations",
            mc.n_samples,
            mc.violations.len(),
            mc.elapsed,
            adv.n_samples,
            adv.violations.len()
        );
    }

    // pushing A1 almost to the end of its side makes same-color sums overlap
    let bad = HexagonChoice::canonical(22, HexagonKind::SideSplit { side: 2, ratio: 0.95 });
    let scheme = ColoringScheme::build(22, Some(bad)).unwrap();
    let uniform = sample_unit_pairs(&scheme, samples, 7);
    let contact = sample_contact_pairs(&scheme, 10_000, 7);
    println!(
        "ratio 0.95: uniform sampling finds {} violations, targeted sampling {} of {}",
        uniform.violations.len(),
        contact.violations.len(),
        contact.n_samples
    );
    if let Some(v) = contact.violations.first() {
        println!("  e.g. {} and {} both get color {} (gauge {:.15})", v.p, v.q, v.color, v.gauge);
    }
}
