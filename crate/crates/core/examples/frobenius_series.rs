//! The bigraded Frobenius series of D_mu, compared with H~_mu.

use msw::ghmodule::{bigraded_frobenius, verify_f_equals_h};
use msw::partcomb::{enumerate_partitions, Partition};

fn main() {
    let mu: Partition = std::env::args().nth(1).unwrap_or_else(|| "2,1".into()).parse().unwrap();
    let series = bigraded_frobenius(&mu);
    for ((r, s), f) in &series.slices {
        println!("x-degree {r}, y-degree {s}: {f}");
    }
    println!("total: {}", series.flatten());
    for n in 1..=4 {
        for mu in enumerate_partitions(n) {
            let r = verify_f_equals_h(&mu).unwrap();
            println!(
                "F = H~ for {mu}: {} (q = 0 slice consistent: {})",
                r.equal, r.q0_consistent
            );
        }
    }
}
