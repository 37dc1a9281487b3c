//! Checks that every K~ coefficient up to `n` lies in N[q,t] and that it
//! evaluates to the number of standard tableaux at q = t = 1.

use msw::macdonald::positivity_report;

fn main() {
    let max_n: usize = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(5);
    for n in 1..=max_n {
        let r = positivity_report(n).unwrap();
        println!(
            "n={n}: {} entries, nonnegative integer polynomials: {}, value at one = #SYT: {}",
            r.entries.len(),
            r.all_positive(),
            r.all_consistent()
        );
        for e in r.violations() {
            println!("  violation at ({}, {}): {}", e.lambda, e.mu, e.value);
        }
    }
}
