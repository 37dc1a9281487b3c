//! Bigraded `S_n` characters of `D_μ` and the comparison with `H̃_μ`.

use std::collections::BTreeMap;

use num_traits::Zero;
use serde_json::{json, Map, Value};

use super::{dmu_basis, permute, Bidegree, BigradedSpace};
use crate::exactcore::{Rat, RatFunc};
use crate::macdonald::{htilde, q0_specialization};
use crate::partcomb::{cycle_representative, enumerate_partitions, z_tau, Partition};
use crate::symfunc::{Basis, SymFunc};

/// `Ψ` of each slice character, keyed by `(x-degree, y-degree)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrobeniusSeries {
    pub n: usize,
    pub slices: BTreeMap<Bidegree, SymFunc>,
}

impl FrobeniusSeries {
    /// `Σ t^r q^s Ψ(ch slice_{r,s})`.
    pub fn flatten(&self) -> SymFunc {
        self.slices
            .iter()
            .fold(SymFunc::zero(self.n, Basis::S), |acc, ((r, s), f)| {
                acc.add(&f.scale(&RatFunc::monomial(Rat::from_int(1), *s as i32, *r as i32)))
            })
    }

    /// Slices with `y`-degree 0, weighted by `t^r`.
    pub fn y_degree_zero(&self) -> SymFunc {
        self.slices
            .iter()
            .filter(|((_, s), _)| *s == 0)
            .fold(SymFunc::zero(self.n, Basis::S), |acc, ((r, _), f)| {
                acc.add(&f.scale(&RatFunc::monomial(Rat::from_int(1), 0, *r as i32)))
            })
    }

    pub fn to_json(&self) -> Value {
        let mut m = Map::new();
        for ((r, s), f) in &self.slices {
            m.insert(format!("({r},{s})"), f.to_json());
        }
        json!({"n": self.n, "slices": Value::Object(m)})
    }
}

/// Trace of `w` on one slice, from the coordinates of `w·b_i` in the basis.
fn trace(space: &mut BigradedSpace, bd: Bidegree, w: &[usize]) -> Rat {
    let slice = space.slice_mut(bd).expect("slice exists");
    let basis = slice.basis_packed();
    let mut tr = Rat::zero();
    for (i, b) in basis.iter().enumerate() {
        let moved: Vec<_> = b.iter().map(|(e, c)| (permute(e, w), c.clone())).collect();
        let v = slice
            .to_sparse_existing(&moved)
            .expect("internal error: slice is not stable under the symmetric group");
        let coords = slice
            .echelon
            .coordinates(&v)
            .expect("internal error: slice is not stable under the symmetric group");
        if let Some((_, c)) = coords.iter().find(|(r, _)| *r == i) {
            tr += c;
        }
    }
    tr
}

/// Frobenius image of every nonzero slice of `space`.
pub(crate) fn frobenius_of_space(space: &mut BigradedSpace) -> FrobeniusSeries {
    let n = space.npoints();
    let classes = enumerate_partitions(n);
    let reps: Vec<Vec<usize>> = classes.iter().map(cycle_representative).collect();
    let mut slices = BTreeMap::new();
    for bd in space.dims().into_keys() {
        // Ψ(χ) = Σ_τ χ(τ) p_τ / z_τ
        let coeffs = classes.iter().zip(&reps).map(|(tau, w)| {
            let chi = trace(space, bd, w);
            (tau.clone(), RatFunc::constant(chi * Rat::new(1, z_tau(tau) as i64)))
        });
        let f = SymFunc::from_coeffs(n, Basis::P, coeffs.collect::<Vec<_>>()).convert_basis(Basis::S);
        slices.insert(bd, f);
    }
    FrobeniusSeries { n, slices }
}

/// Bigraded Frobenius series of `D_μ`: `t` tracks `x`-degree, `q` tracks `y`-degree.
pub fn bigraded_frobenius(mu: &Partition) -> FrobeniusSeries {
    frobenius_of_space(&mut dmu_basis(mu))
}

/// Outcome of comparing the module side with `H̃_μ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FhReport {
    pub mu: Partition,
    pub equal: bool,
    pub frobenius: SymFunc,
    pub htilde: SymFunc,
    /// `(λ, module coefficient, H̃ coefficient)` wherever they differ.
    pub diffs: Vec<(Partition, RatFunc, RatFunc)>,
    /// The `y`-degree-0 part agrees with `H̃_μ(x;0,t)`.
    pub q0_consistent: bool,
}

impl FhReport {
    pub fn to_json(&self) -> Value {
        let diffs: Vec<Value> = self
            .diffs
            .iter()
            .map(|(l, a, b)| json!({"lambda": l.to_string(), "module": a.to_string(), "htilde": b.to_string()}))
            .collect();
        json!({
            "mu": self.mu.parts(),
            "equal": self.equal,
            "q0_consistent": self.q0_consistent,
            "diffs": diffs,
        })
    }
}

pub fn verify_f_equals_h(mu: &Partition) -> Result<FhReport, super::GhError> {
    let series = bigraded_frobenius(mu);
    let frob = series.flatten();
    let h = htilde(mu)?.expansion;
    let diffs: Vec<_> = enumerate_partitions(mu.size())
        .into_iter()
        .filter_map(|l| {
            let (a, b) = (frob.coeff(&l), h.coeff(&l));
            (a != b).then_some((l, a, b))
        })
        .collect();
    let q0_consistent = series.y_degree_zero() == q0_specialization(mu)?;
    Ok(FhReport {
        mu: mu.clone(),
        equal: diffs.is_empty(),
        frobenius: frob,
        htilde: h,
        diffs,
        q0_consistent,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn two_cells() {
        let f = bigraded_frobenius(&p("2")).flatten();
        assert_eq!(f.coeff(&p("2")), "1".parse().unwrap());
        assert_eq!(f.coeff(&p("1,1")), "q".parse().unwrap());
        let f = bigraded_frobenius(&p("1,1")).flatten();
        assert_eq!(f.coeff(&p("1,1")), "t".parse().unwrap());
    }

    #[test]
    fn three_cells_match() {
        for mu in enumerate_partitions(3) {
            let r = verify_f_equals_h(&mu).unwrap();
            assert!(r.equal, "{:?}", r.diffs);
            assert!(r.q0_consistent);
        }
    }
}
