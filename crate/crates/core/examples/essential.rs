//! Essential idempotents: `e·Ĥ = 0` for every nontrivial subgroup `H`,
//! where `Ĥ` is the subgroup average. Checked over prime-order cyclic
//! subgroups and confirmed over the full subgroup lattice.
//!
//! The weaker property that `g ↦ g·e` is injective (the block's
//! representation is faithful) is printed alongside: the two agree for
//! abelian groups but not in general. Every nontrivial block of `A_5` is
//! faithful, yet none is essential, since each involution fixes a vector.
//!
//! ```bash
//! cargo run --release --example essential
//! ```

use wedderburn::blocks::Decomposition;
use wedderburn::{FieldSpec, GroupKind};

fn main() -> wedderburn::Result<()> {
    for (kind, n, p) in [(GroupKind::An, 3, 7), (GroupKind::Sn, 3, 5), (GroupKind::An, 4, 5), (GroupKind::An, 5, 7)] {
        let dec = Decomposition::compute(kind, n, FieldSpec::prime(p)?)?;
        let alg = dec.algebra();
        println!(
            "F_{p}{}_{n}: {} subgroups",
            if kind == GroupKind::Sn { "S" } else { "A" },
            alg.group().all_subgroups()?.len()
        );
        for block in dec.blocks() {
            let e = block.generator.as_ref().expect("prime-field idempotent");
            let quick = alg.is_essential(e)?;
            let full = alg.is_essential_all_subgroups(e)?;
            assert_eq!(quick.essential, full.essential);
            let kernel = alg.translation_kernel(e).order();
            let verdict = match quick.witness {
                None => "essential".to_string(),
                Some(h) => {
                    let members: Vec<String> =
                        h.members().iter().map(|&i| alg.group().element(i).to_string()).collect();
                    format!("not essential; e·Ĥ ≠ 0 for H = {{{}}}", members.join(", "))
                }
            };
            println!("  {:<18} {verdict}; kernel of g ↦ g·e has order {kernel}", block.label.to_string());
        }
    }
    Ok(())
}
