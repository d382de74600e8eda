//! Partitions, hooks and standard tableaux, and the classification of
//! self-conjugate partitions that decides whether an `S_n` block splits
//! over `F_q A_n`.
//!
//! ```bash
//! cargo run --example tableaux
//! ```

use wedderburn::tableaux::{classify, factorial, partitions_of, standard_tableaux};
use wedderburn::{FieldSpec, Partition};

fn main() -> wedderburn::Result<()> {
    let lambda: Partition = "3,2,2,2".parse()?;
    println!(
        "λ = {lambda}, λ' = {}, hook(2,2) = {}, d_λ = {}",
        lambda.conjugate(),
        lambda.hook_number(2, 2)?,
        lambda.dimension()
    );

    for n in 3..=7 {
        let parts = partitions_of(n);
        let sum: u128 = parts.iter().map(|l| l.dimension().pow(2)).sum();
        let counted = parts.iter().all(|l| standard_tableaux(l).len() as u128 == l.dimension());
        println!(
            "n = {n}: {} partitions, Σ d² = {sum} = {}! ({}), hook formula matches tableau count: {counted}",
            parts.len(),
            n,
            factorial(n)
        );
    }

    println!("\nself-conjugate partitions and their fate over F_q A_n:");
    for (n, p) in [(3, 5), (3, 7), (4, 5), (4, 7), (5, 7), (6, 11), (7, 11)] {
        let field = FieldSpec::prime(p)?;
        for l in partitions_of(n).into_iter().filter(|l| l.is_self_conjugate()) {
            let data = l.self_conj_data().expect("self-conjugate");
            println!("  F_{p}, λ = {l:<10} p_λ = {:>3}  {:?}", data.p_lambda, classify(&l, &field));
        }
    }
    Ok(())
}
