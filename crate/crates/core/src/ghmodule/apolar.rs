//! The annihilator ideal `J_μ` of `Δ_μ` under the apolarity pairing.

use num_traits::Zero;

use super::{bidegree_of, delta_packed, dmu_basis, layout, permutations, permute, slice_monomials, Bidegree};
use super::{BigradedSpace, GhError, Slice};
use crate::exactcore::packed::Exps;
use crate::exactcore::{kernel_basis, MPoly, Matrix, Rat};
use crate::partcomb::{factorial, Partition};

fn top_bidegree(mu: &Partition) -> Bidegree {
    (mu.n_stat() as u32, mu.conjugate().n_stat() as u32)
}

/// `⟨m, m⟩ = ∏ e_i!` for a monomial with exponents `e`.
fn pairing_weight(e: &Exps) -> Rat {
    Rat::from(e.0.iter().map(|&k| factorial(k as usize)).product::<u64>() as i64)
}

/// Slices of `J_μ = {p : p(∂)Δ_μ = 0}` for every bidegree up to `cutoff`.
///
/// Each slice is the orthogonal complement of the matching `D_μ` slice under
/// `⟨x^a, x^b⟩ = a!·δ_{ab}`.
pub fn jmu_annihilator(mu: &Partition, cutoff: Bidegree) -> Result<BigradedSpace, GhError> {
    let top = top_bidegree(mu);
    if cutoff.0 < top.0 || cutoff.1 < top.1 {
        return Err(GhError::CutoffBelowTop(cutoff.0, cutoff.1, top.0, top.1));
    }
    let n = mu.size();
    let d = dmu_basis(mu);
    let mut out = BigradedSpace::new(n);
    for r in 0..=cutoff.0 {
        for s in 0..=cutoff.1 {
            let cols = slice_monomials(n, (r, s));
            let k = cols.len();
            let mut slice = Slice::with_columns(cols.clone());
            let harmonic = d.slice((r, s)).map(Slice::basis_packed).unwrap_or_default();
            if harmonic.is_empty() {
                for i in 0..k {
                    slice.echelon.insert(&[(i as u32, Rat::from_int(1))]);
                }
            } else {
                let rows: Vec<Vec<Rat>> = harmonic
                    .iter()
                    .map(|g| {
                        let mut row = vec![Rat::zero(); k];
                        for (e, c) in g {
                            let j = slice.table.get(e).expect("monomial of the slice") as usize;
                            row[j] = c * &pairing_weight(e);
                        }
                        row
                    })
                    .collect();
                for v in kernel_basis(&Matrix::from_rows(rows).expect("rectangular")) {
                    let sv: Vec<(u32, Rat)> = v
                        .into_iter()
                        .enumerate()
                        .filter(|(_, a)| !a.is_zero())
                        .map(|(j, a)| (j as u32, a))
                        .collect();
                    slice.echelon.insert(&sv);
                }
            }
            out.slices.insert((r, s), slice);
        }
    }
    Ok(out)
}

/// Coefficient of `Δ_μ` in `Θ^ε f`, read off the monomial `∏ x_i^{p_i} y_i^{q_i}`
/// of the pinned cell order. No other `Δ_D` contains that monomial.
pub fn delta_coefficient_of_alternation(mu: &Partition, f: &MPoly) -> Rat {
    let n = mu.size();
    let target = delta_packed(&mu.cells())
        .into_iter()
        .find(|(e, _)| {
            mu.cells()
                .iter()
                .enumerate()
                .all(|(i, c)| e.0[i] as usize == c.0 && e.0[n + i] as usize == c.1)
        })
        .expect("identity term")
        .0;
    let packed = layout(n).pack_poly(f).expect("polynomial in x_1..x_n, y_1..y_n");
    let mut total = Rat::zero();
    for (w, sign) in permutations(n) {
        for (e, c) in &packed {
            if permute(e, &w) == target {
                total += &(c * &Rat::from_int(sign));
            }
        }
    }
    total
}

/// Membership in `J_μ` by the alternation criterion: the coefficient of
/// `Δ_μ` in `Θ^ε(g p)` vanishes for every monomial `g`.
pub fn satisfies_alternation_criterion(mu: &Partition, p: &MPoly) -> bool {
    if p.is_zero() {
        return true;
    }
    let n = mu.size();
    let lay = layout(n);
    let packed = lay.pack_poly(p).expect("polynomial in x_1..x_n, y_1..y_n");
    let bd = bidegree_of(&packed[0].0, n);
    let top = top_bidegree(mu);
    if bd.0 > top.0 || bd.1 > top.1 {
        return true;
    }
    slice_monomials(n, (top.0 - bd.0, top.1 - bd.1)).into_iter().all(|g| {
        let gp = MPoly::from_terms(packed.iter().map(|(e, c)| (lay.unpack(&e.mul(&g)), c.clone())));
        delta_coefficient_of_alternation(mu, &gp).is_zero()
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn two_cell_slices() {
        let mut j = jmu_annihilator(&p("2"), (1, 1)).unwrap();
        assert_eq!(j.dim((1, 0)), 2);
        assert_eq!(j.dim((0, 1)), 1);
        assert!(j.contains(&"y1 + y2".parse().unwrap()));
        assert!(!j.contains(&"y2 - y1".parse().unwrap()));
        assert!(matches!(
            jmu_annihilator(&p("2"), (0, 0)),
            Err(GhError::CutoffBelowTop(..))
        ));
    }

    #[test]
    fn criterion_agrees() {
        let mu = p("2,1");
        let mut j = jmu_annihilator(&mu, (1, 1)).unwrap();
        for s in ["x1 + x2 + x3", "y1", "x1 - x2", "x1*y2 - x2*y1", "x1*y1"] {
            let f: MPoly = s.parse().unwrap();
            assert_eq!(j.contains(&f), satisfies_alternation_criterion(&mu, &f), "{s}");
        }
    }
}
