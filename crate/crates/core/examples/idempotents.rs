//! Centrally primitive idempotents from Young symmetrizers, checked against
//! the character formula `e_χ = (χ(1)/|G|) Σ χ(g⁻¹) g`.
//!
//! ```bash
//! cargo run --example idempotents
//! ```

use wedderburn::chars::{idempotent_from_character, sn_idempotent_from_character, AnCharacterTable};
use wedderburn::tableaux::partitions_of;
use wedderburn::{Algebra, FieldSpec, GroupKind, Partition};

fn main() -> wedderburn::Result<()> {
    let field = FieldSpec::prime(5)?;
    let s3 = Algebra::new(GroupKind::Sn, 3, field)?;

    // Standard tableaux in an order where later-times-earlier products vanish.
    let lambda: Partition = "2,1".parse()?;
    for (i, t) in s3.order_tableaux(&lambda)?.iter().enumerate() {
        let e = s3.young_symmetrizer(t)?;
        println!("T_{} = {:?}   e_T = {}", i + 1, t.rows(), s3.format(&e));
    }

    println!("\nF_5 S_3:");
    for lambda in partitions_of(3) {
        let e = s3.central_idempotent(&lambda)?;
        assert!(s3.is_idempotent(&e) && s3.is_central(&e));
        assert_eq!(e, sn_idempotent_from_character(&s3, &lambda)?);
        println!("  e_{lambda} = {}", s3.format(&e));
    }

    // A_n: restrictions of S_n idempotents, or character idempotents where a class splits.
    let field = FieldSpec::prime(7)?;
    let s4 = Algebra::new(GroupKind::Sn, 4, field)?;
    let a4 = Algebra::new(GroupKind::An, 4, field)?;
    println!("\nF_7 A_4:");
    let pair = s4.an_pair_idempotent(&"3,1".parse()?, &a4)?;
    println!("  e_{{(3,1),(2,1,1)}} = {}", a4.format(&pair));
    let table = AnCharacterTable::new(a4.group())?;
    for (row, line) in table.rows.iter().enumerate() {
        let e = idempotent_from_character(&a4, &table, row)?;
        println!("  e_{} = {}", line.label, a4.format(&e));
    }
    Ok(())
}
