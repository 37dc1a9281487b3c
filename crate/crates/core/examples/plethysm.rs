//! Basis changes and plethystic substitution `f[X(1-q)]`.

use msw::exactcore::RatFunc;
use msw::partcomb::Partition;
use msw::symfunc::{Alphabet, Basis, SymFunc};

fn main() {
    let mu: Partition = "2,1".parse().unwrap();
    let s = SymFunc::schur(&mu);
    for b in [Basis::P, Basis::M, Basis::E, Basis::H] {
        println!("s{mu} in {}: {}", b.tag(), s.convert_basis(b));
    }
    let one_minus_q = &RatFunc::one() - &RatFunc::q();
    let shifted = s.plethystic_eval(&Alphabet::scaled(one_minus_q.clone()));
    println!("s{mu}[X(1-q)] = {shifted}");
    // Substituting X/(1-q) undoes it.
    let back = shifted.plethystic_eval(&Alphabet::scaled(one_minus_q.inverse()));
    println!("round trip equals s{mu}: {}", back == s);
    println!("s{mu}[1] = {}", s.principal_value_at_one());
}
