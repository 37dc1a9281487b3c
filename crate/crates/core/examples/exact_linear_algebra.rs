//! Fraction-free elimination over ℚ and over ℚ(q,t), plus the sparse
//! echelon form used by the big slice computations.

use msw::exactcore::{determinant, kernel_basis, rank, solve_linear, Matrix, Rat, RatFunc, SparseEchelon};

fn rf(s: &str) -> RatFunc {
    s.parse().expect("rational function")
}

fn main() {
    let m = Matrix::from_rows(vec![
        vec![Rat::from_int(2), Rat::from_int(4), Rat::from_int(-2)],
        vec![Rat::from_int(1), Rat::from_int(2), Rat::from_int(-1)],
        vec![Rat::from_int(0), Rat::from_int(1), Rat::from_int(3)],
    ])
    .unwrap();
    println!("rank over Q: {}", rank(&m));
    for v in kernel_basis(&m) {
        println!(
            "kernel vector: [{}]",
            v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ")
        );
    }

    // A 2x2 system whose coefficients live in Q(q,t).
    let a = Matrix::from_rows(vec![vec![rf("1"), rf("q")], vec![rf("t"), rf("1")]]).unwrap();
    println!("det = {}", determinant(&a).unwrap());
    let sol = solve_linear(&a, &[rf("1"), rf("0")]).unwrap();
    println!("solution: x = {}, y = {}", sol.particular[0], sol.particular[1]);

    let mut ech = SparseEchelon::new(4);
    let one = Rat::from_int(1);
    ech.insert(&[(0, one.clone()), (2, one.clone())]);
    ech.insert(&[(1, one.clone()), (2, -one.clone())]);
    let probe = [(0, one.clone()), (1, one.clone())];
    println!("sparse rank {}, e0 + e1 in span: {}", ech.rank(), ech.contains(&probe));
}
