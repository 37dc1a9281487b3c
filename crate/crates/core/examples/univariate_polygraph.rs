//! The one-alphabet polygraph and the product description of Z(n,1).

use msw::polygraph::{product_ideal_check, univariate_polygraph_basis};

fn main() {
    for (n, l) in [(2, 1), (3, 1), (2, 2), (3, 2)] {
        let r = univariate_polygraph_basis(n, l, 5).unwrap();
        println!(
            "n={n} l={l}: {} basis monomials a^e, free basis: {}",
            r.basis.len(),
            r.pass()
        );
    }
    for n in [2, 3] {
        let r = product_ideal_check(n, 4, 4).unwrap();
        println!(
            "I(Z({n},1)) equals the product of the point ideals up to (4,4): {}",
            r.pass()
        );
    }
}
