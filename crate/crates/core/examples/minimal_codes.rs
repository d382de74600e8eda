//! Minimal left ideals `F_q G·e` as linear codes of length `|G|`, with the
//! generator matrix written in the group's canonical coordinate order.
//!
//! ```bash
//! cargo run --release --example minimal_codes
//! ```

use wedderburn::blocks::Decomposition;
use wedderburn::codes::{best_known_lookup, ideal_to_code, min_distance, DistanceConfig};
use wedderburn::{FieldSpec, GroupKind};

fn main() -> wedderburn::Result<()> {
    for (n, p) in [(3, 5), (3, 7), (4, 5), (4, 7)] {
        let dec = Decomposition::compute(GroupKind::An, n, FieldSpec::prime(p)?)?;
        let alg = dec.algebra();
        let coords: Vec<String> = alg.group().elements().iter().map(|g| g.to_string()).collect();
        println!("F_{p}A_{n}, coordinates {}", coords.join(" "));
        for block in dec.blocks() {
            let e = block.generator.as_ref().expect("prime-field idempotent");
            let code = ideal_to_code(alg, e)?;
            let d = min_distance(&code, &DistanceConfig::default());
            let d = d.certified().expect("every code here is small enough to scan");
            print!("  {:<18} [{},{},{d}]", block.label.to_string(), code.length(), code.dimension());
            if let Some(best) = best_known_lookup(code.length(), code.dimension(), p) {
                print!("   (best known d = {best})");
            }
            println!();
            if code.dimension() <= 3 {
                for line in code.to_text().lines() {
                    println!("      {line}");
                }
            }
        }
    }
    Ok(())
}
