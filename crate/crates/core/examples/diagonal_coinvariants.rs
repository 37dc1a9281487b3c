//! Bigraded dimensions of C[x,y] modulo the polarized power sums.

use msw::ghmodule::{diagonal_coinvariants_dims, COINV_MAX_N};

fn main() {
    for n in 1..=COINV_MAX_N {
        let t = diagonal_coinvariants_dims(n).unwrap();
        println!("n={n}: total {} ((n+1)^(n-1) = {})", t.total, (n + 1).pow(n as u32 - 1));
        for ((r, s), d) in &t.dims {
            print!(" ({r},{s}):{d}");
        }
        println!();
    }
}
