//! Wedderburn decompositions of `F_q S_n` and `F_q A_n`.
//!
//! ```bash
//! cargo run --example decompose
//! ```

use wedderburn::blocks::Decomposition;
use wedderburn::{FieldSpec, GroupKind};

fn main() -> wedderburn::Result<()> {
    let cases = [
        (GroupKind::An, 3, 5, 1),
        (GroupKind::An, 3, 7, 1),
        (GroupKind::Sn, 3, 7, 1),
        (GroupKind::An, 4, 5, 1),
        (GroupKind::An, 4, 7, 1),
        (GroupKind::An, 5, 7, 1),
        (GroupKind::An, 6, 11, 1),
        // Over F_25 every element of F_5 is a square, so nothing stays merged.
        (GroupKind::An, 4, 5, 2),
    ];
    for (kind, n, p, f) in cases {
        let field = FieldSpec::new(p, f)?;
        let dec = Decomposition::compute(kind, n, field)?;
        let group = if kind == GroupKind::Sn { "S" } else { "A" };
        println!("{field}{group}_{n} = {}", dec.summary());
        for block in dec.blocks() {
            println!(
                "    {:<18} {:<12} F_q-dimension {}",
                block.label.to_string(),
                block.render(&field),
                block.fq_dimension
            );
        }
        let total: usize = dec.blocks().iter().map(|b| b.fq_dimension).sum();
        assert_eq!(total, dec.algebra().order());
    }
    Ok(())
}
