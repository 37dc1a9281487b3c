//! Modified Macdonald polynomials and their Kostka coefficients.
//!
//! `cargo run --release --example htilde_kostka -- 4`

use msw::macdonald::{htilde, ktilde_table, ktilde_to_k};
use msw::partcomb::enumerate_partitions;

fn main() {
    let n: usize = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(3);
    for mu in enumerate_partitions(n) {
        println!("H~{mu} = {}", htilde(&mu).unwrap().expansion);
    }
    let table = ktilde_table(n).unwrap();
    println!("\nK~(q,t), rows lambda, columns mu:");
    for (lambda, row) in table.partitions.iter().zip(&table.entries) {
        let cells: Vec<String> = row.iter().map(|c| format!("{:>16}", c.to_string())).collect();
        println!("{:>10} {}", lambda.to_string(), cells.join(""));
    }
    let mu = &table.partitions[0];
    match ktilde_to_k(mu, &table) {
        Ok(col) => {
            println!("\nK_(lambda,{mu})(q,t):");
            for (lambda, k) in table.partitions.iter().zip(col) {
                println!("  {lambda}: {k}");
            }
        }
        Err(bad) => println!("non-polynomial entries: {bad:?}"),
    }
}
