//! Dimensions of the derivative-closure spaces D_mu, slice by slice.
//!
//! `cargo run --release --example n_factorial -- 5`

use msw::ghmodule::{delta_mu, dmu_basis};
use msw::partcomb::{enumerate_partitions, factorial};

fn main() {
    let max_n: usize = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(4);
    for n in 1..=max_n {
        for mu in enumerate_partitions(n) {
            let mut d = dmu_basis(&mu);
            println!(
                "{mu:<12} top {:?}  dim {:>4} (n! = {:>4})  closed {}",
                delta_mu(&mu).bidegree(),
                d.total_dim(),
                factorial(n),
                d.is_derivative_closed()
            );
        }
    }
    let mu = "2,1".parse().unwrap();
    println!("\nslices of D_[2,1]:");
    for (bd, dim) in dmu_basis(&mu).dims() {
        println!("  {bd:?}: {dim}");
    }
}
