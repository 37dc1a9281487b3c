//! Powers of the alternant ideal J against intersections of pairwise
//! diagonal ideals.

use msw::polygraph::jpower_check;

fn main() {
    for (n, d) in [(2, 1), (2, 2), (3, 1)] {
        let r = jpower_check(n, d, 4, 4).unwrap();
        println!(
            "n={n} d={d}: contained {}, equal in every slice {}, free over C[y] {}",
            r.containment,
            r.equality_failures.is_empty(),
            r.freeness.is_none()
        );
        let low: Vec<String> = r
            .dims
            .iter()
            .filter(|(b, _)| b.0 + b.1 <= 3)
            .map(|(b, v)| format!("{b:?}:{v}"))
            .collect();
        println!("  dims {}", low.join(" "));
    }
}
