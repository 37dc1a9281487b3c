//! Partitions, hooks and the character table of a symmetric group.
//!
//! `cargo run --example partitions_and_characters -- 5`

use msw::partcomb::{character_table, enumerate_partitions, syt_count};

fn main() {
    let n: usize = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(4);
    println!("partitions of {n} (reverse-lex):");
    for mu in enumerate_partitions(n) {
        let hooks: Vec<usize> = mu.cells().into_iter().map(|c| mu.hook(c)).collect();
        println!(
            "  {mu:<12} n(mu)={:<3} conj={:<12} syt={:<4} hooks={hooks:?}",
            mu.n_stat(),
            mu.conjugate().to_string(),
            syt_count(&mu)
        );
    }
    let table = character_table(n);
    println!("\ncharacter table (rows lambda, columns cycle type):");
    print!("{:>12}", "");
    for tau in &table.partitions {
        print!("{:>12}", tau.to_string());
    }
    println!();
    for (lambda, row) in table.partitions.iter().zip(&table.values) {
        print!("{:>12}", lambda.to_string());
        for v in row {
            print!("{v:>12}");
        }
        println!();
    }
}
