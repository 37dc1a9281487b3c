//! The explicit basis p[e,f] of R(2,l) and the ideals it is adapted to.

use msw::polygraph::{listed_generator_checks, n2_basis_element, n2_common_basis};

fn main() {
    for e in [(0, 0), (1, 0), (0, 1), (2, 1)] {
        for f in [[0usize], [1]] {
            println!("p[{e:?}, f(1)={}] = {}", f[0] + 1, n2_basis_element(e, &f));
        }
    }
    let l = 1;
    let report = n2_common_basis(l, 4, 4).unwrap();
    println!(
        "\nl={l}: basis checks pass: {} (per x-degree counts {:?})",
        report.pass(),
        report.enumerator
    );
    for g in listed_generator_checks(l, 4, 4).unwrap() {
        println!("  {} generated by the listed polynomials: {}", g.name, g.pass());
    }
}
