//! The annihilator ideal J_mu through apolarity, and the alternation
//! criterion for membership of a polynomial's alternant.

use msw::exactcore::MPoly;
use msw::ghmodule::{delta_coefficient_of_alternation, dmu_basis, jmu_annihilator, satisfies_alternation_criterion};
use msw::partcomb::Partition;

fn main() {
    let mu: Partition = "2,1".parse().unwrap();
    let d = dmu_basis(&mu);
    let j = jmu_annihilator(&mu, (2, 2)).unwrap();
    for (bd, dim) in j.dims() {
        println!("{bd:?}: dim J = {dim:>2}, dim C[x,y]/J = {}", d.dim(bd));
    }
    for g in ["x1", "x2*y1", "x1*x2", "y1^2"] {
        let p: MPoly = g.parse().unwrap();
        println!(
            "{g}: coefficient of Delta in its alternant = {}, in J_mu by the alternation criterion: {}",
            delta_coefficient_of_alternation(&mu, &p),
            satisfies_alternation_criterion(&mu, &p)
        );
    }
}
