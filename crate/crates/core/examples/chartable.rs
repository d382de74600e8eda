//! Exact character tables: Murnaghan–Nakayama for `S_n`, and the `A_n`
//! table with split characters `(s ± √p_λ)/2` on the split classes.
//!
//! ```bash
//! cargo run --example chartable
//! ```

use wedderburn::chars::{mn_character, AnCharacterTable};
use wedderburn::tableaux::partitions_of;
use wedderburn::{Group, GroupKind};

fn main() -> wedderburn::Result<()> {
    let n = 5;
    let classes = partitions_of(n);
    println!("S_{n}:");
    for lambda in &classes {
        let row: Vec<String> = classes.iter().map(|mu| format!("{:>3}", mn_character(lambda, mu))).collect();
        println!("  {:<12} {}", lambda.to_string(), row.join(" "));
    }

    let a5 = Group::new(GroupKind::An, n)?;
    let table = AnCharacterTable::new(&a5)?;
    println!("\nA_{n}:");
    let header: Vec<String> = table.classes.iter().map(|c| format!("{:>12}", c.label.to_string())).collect();
    println!("  {:<18} {}", "", header.join(""));
    for row in &table.rows {
        let values: Vec<String> = row.values.iter().map(|v| format!("{:>12}", v.to_string())).collect();
        println!("  {:<18} {}", row.label.to_string(), values.join(""));
    }
    println!("rows orthonormal: {}, columns orthogonal: {}", table.rows_orthonormal(), table.columns_orthogonal());
    Ok(())
}
