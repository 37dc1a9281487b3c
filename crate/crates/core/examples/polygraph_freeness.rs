//! Coordinate rings of polygraphs: bigraded Hilbert functions, the generic
//! rank n^l·C(d+n-1, n-1), and truncated freeness over the y variables.

use msw::polygraph::{freeness_certificate, generic_hs_check, hilbert_series, ArrangementSpec};

fn main() {
    let (n, l) = (2, 1);
    let z = ArrangementSpec::z(n, l).unwrap();
    let h = hilbert_series(&z, 4, 4);
    println!("dim R(2,1) slices, rows x-degree:");
    for d in 0..=4 {
        let row: Vec<String> = (0..=4).map(|e| format!("{:>4}", h.get((d, e)))).collect();
        println!("  {}", row.join(""));
    }
    for (n, l) in [(2, 1), (2, 2), (3, 1)] {
        let g = generic_hs_check(n, l, 5, 5).unwrap();
        let cert = freeness_certificate(&ArrangementSpec::z(n, l).unwrap(), 5, 5);
        println!(
            "Z({n},{l}): generic ranks {:?} match formula: {}; free up to (5,5): {}",
            g.formula,
            g.pass(),
            cert.pass()
        );
    }
}
