//! Minimum distance: an exhaustive Gray-order scan when `q^k` is within the
//! threshold, seeded sampling bounds otherwise, and the weight distribution.
//!
//! ```bash
//! cargo run --release --example distance
//! ```

use wedderburn::codes::{min_distance, weight_distribution, Distance, DistanceConfig, LinearCode};

fn main() -> wedderburn::Result<()> {
    // The ternary Golay code [11,6,5]: cyclic, generated by
    // g(x) = 2 + x² + 2x³ + x⁴ + x⁵, which divides x¹¹ - 1 over F_3.
    let g = [2, 0, 1, 2, 1, 1];
    let rows: Vec<Vec<u64>> = (0..6)
        .map(|shift| (0..11).map(|i| if i >= shift && i - shift < g.len() { g[i - shift] } else { 0 }).collect())
        .collect();
    let golay = LinearCode::from_generators(rows, 11, 3)?;
    report("Golay [11,6] over F_3", &golay, &DistanceConfig::default());

    // The same code with a budget below 3^6 = 729 codewords: bounds only.
    let tight = DistanceConfig { threshold: 100, samples: 50, seed: 7 };
    report("Golay with threshold 100", &golay, &tight);

    let wd = weight_distribution(&golay, 1_000)?;
    let terms: Vec<String> =
        wd.iter().enumerate().filter(|(_, &a)| a > 0).map(|(w, a)| format!("A_{w} = {a}")).collect();
    println!("weight distribution: {}", terms.join(", "));
    Ok(())
}

fn report(name: &str, code: &LinearCode, cfg: &DistanceConfig) {
    match min_distance(code, cfg) {
        Distance::Certified { d, witness } => println!("{name}: d = {d} certified, witness {witness:?}"),
        Distance::Bounds { lower, upper, .. } => println!("{name}: {lower} ≤ d ≤ {upper} (sampled, seed {})", cfg.seed),
        Distance::ZeroCode => println!("{name}: zero code"),
    }
}
