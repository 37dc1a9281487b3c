//! The one-alphabet polygraph and the product-ideal description of `Z(n,1)`.

use serde_json::{json, Value};

use super::{binom, image_vector, ring_slice, ArrangementSpec, Bidegree, ImageIndex, PolygraphError};
use crate::exactcore::packed::{compositions, mul_packed, Exps, PackedPoly};
use crate::exactcore::sparse::SparseEchelon;
use crate::exactcore::Rat;

/// `∏_j (a_i - x_j)` with `x_j` in slot `j` and `a_i` in slot `a_slot`.
fn vanishing_product(n: usize, a_slot: usize) -> PackedPoly {
    let one = Rat::from_int(1);
    let mut p: PackedPoly = vec![(Exps::default(), one.clone())];
    for j in 0..n {
        let lin = vec![
            (Exps::default().with(a_slot, 1), one.clone()),
            (Exps::default().with(j, 1), -one.clone()),
        ];
        p = mul_packed(&p, &lin);
    }
    p
}

/// Check of the monomial basis `a^e`, `0 ≤ e_i < n`, of `k[x,a]/I` over `k[x]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnivariateReport {
    pub n: usize,
    pub l: usize,
    /// Exponent vectors `e` of the basis monomials.
    pub basis: Vec<Vec<u32>>,
    /// The basis monomials are independent modulo `I + (x)` and span it.
    pub spans_modulo_x: bool,
    /// `dim (k[x,a]/I)_d` agrees with a free module on that basis, up to the truncation.
    pub free_up_to: Option<u32>,
    pub truncation: u32,
}

impl UnivariateReport {
    pub fn pass(&self) -> bool {
        self.spans_modulo_x && self.basis.len() == self.n.pow(self.l as u32) && self.free_up_to.is_none()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "check": "univariate-basis",
            "n": self.n,
            "l": self.l,
            "pass": self.pass(),
            "basis_size": self.basis.len(),
            "spans_modulo_x": self.spans_modulo_x,
            "first_discrepancy_degree": self.free_up_to,
        })
    }
}

/// Rank of `I_d` (and optionally `(I + (x))_d`) in `k[x_1..x_n, a_1..a_l]_d`.
fn ideal_rank(n: usize, l: usize, d: u32, gens: &[PackedPoly], with_x: bool) -> (SparseEchelon, Vec<Exps>) {
    let monos = compositions(n + l, d, 0);
    let index: rustc_hash::FxHashMap<Exps, u32> = monos.iter().enumerate().map(|(i, e)| (*e, i as u32)).collect();
    let mut ech = SparseEchelon::new(monos.len());
    let push = |p: &[(Exps, Rat)], ech: &mut SparseEchelon| {
        let mut v: Vec<(u32, Rat)> = p.iter().map(|(e, c)| (index[e], c.clone())).collect();
        v.sort_unstable_by_key(|t| t.0);
        ech.insert(&v);
    };
    if with_x && d > 0 {
        for m in compositions(n + l, d - 1, 0) {
            for j in 0..n {
                push(&[(m.with(j, m.0[j] + 1), Rat::from_int(1))], &mut ech);
            }
        }
    }
    for g in gens {
        let gd = g[0].0.degree(0..n + l);
        if gd > d {
            continue;
        }
        for m in compositions(n + l, d - gd, 0) {
            let p: PackedPoly = g.iter().map(|(e, c)| (e.mul(&m), c.clone())).collect();
            push(&p, &mut ech);
        }
    }
    (ech, monos)
}

/// Verifies that `a^e` with `0 ≤ e_i < n` is a `k[x]`-basis of
/// `k[x,a]/Σ_i (∏_j (a_i - x_j))`: the monomials are a basis modulo `(x)`,
/// there are `n^l` of them, and the Hilbert function up to `truncation` is
/// that of the free module they generate.
pub fn univariate_polygraph_basis(n: usize, l: usize, truncation: u32) -> Result<UnivariateReport, PolygraphError> {
    if n == 0 || n + l > crate::exactcore::packed::MAX_VARS {
        return Err(PolygraphError::InvalidParameters(format!(
            "need n >= 1 and n + l <= 16, got n={n}, l={l}"
        )));
    }
    let gens: Vec<PackedPoly> = (0..l).map(|i| vanishing_product(n, n + i)).collect();
    let basis: Vec<Vec<u32>> = {
        let top = ((n - 1) * l) as u32;
        (0..=top)
            .flat_map(|d| compositions(l, d, 0))
            .filter(|e| (0..l).all(|i| (e.0[i] as usize) < n))
            .map(|e| (0..l).map(|i| e.0[i] as u32).collect())
            .collect()
    };
    let count_in_degree = |d: u32| basis.iter().filter(|e| e.iter().sum::<u32>() == d).count() as u64;

    let mut spans_modulo_x = true;
    for d in 0..=truncation.max(((n - 1) * l) as u32 + 1) {
        let (mut ech, monos) = ideal_rank(n, l, d, &gens, true);
        for e in basis.iter().filter(|e| e.iter().sum::<u32>() == d) {
            let mut m = Exps::default();
            for (i, &k) in e.iter().enumerate() {
                m.0[n + i] = k as u8;
            }
            let col = monos.iter().position(|x| *x == m).unwrap() as u32;
            if !ech.insert(&[(col, Rat::from_int(1))]) {
                spans_modulo_x = false;
            }
        }
        if ech.rank() != monos.len() {
            spans_modulo_x = false;
        }
    }

    let mut free_up_to = None;
    for d in 0..=truncation {
        let (ech, monos) = ideal_rank(n, l, d, &gens, false);
        let dim = (monos.len() - ech.rank()) as u64;
        let expected: u64 = (0..=d)
            .map(|k| count_in_degree(k) * binom((d - k) as u64 + n as u64 - 1, n as u64 - 1))
            .sum();
        if dim != expected {
            free_up_to = Some(d);
            break;
        }
    }
    Ok(UnivariateReport {
        n,
        l,
        basis,
        spans_modulo_x,
        free_up_to,
        truncation,
    })
}

/// Comparison of the ideal of `Z(n,1)` with `∏_j (a - x_j, b - y_j)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProductIdealReport {
    pub n: usize,
    pub dx: u32,
    pub dy: u32,
    /// Every product generator vanishes on `Z(n,1)`.
    pub contained: bool,
    /// Bidegrees where the slice dimensions differ.
    pub mismatches: Vec<Bidegree>,
}

impl ProductIdealReport {
    pub fn pass(&self) -> bool {
        self.contained && self.mismatches.is_empty()
    }
}

/// Slice-by-slice equality of `I(Z(n,1))` and the product of the ideals of
/// its components, up to `(dx, dy)`.
pub fn product_ideal_check(n: usize, dx: u32, dy: u32) -> Result<ProductIdealReport, PolygraphError> {
    let spec = ArrangementSpec::z(n, 1)?;
    let h = spec.half();
    let one = Rat::from_int(1);
    // Products ∏_j L_j with L_j ∈ {a - x_j, b - y_j}.
    let mut products: Vec<PackedPoly> = vec![vec![(Exps::default(), one.clone())]];
    for j in 0..n {
        let la = vec![
            (Exps::default().with(n, 1), one.clone()),
            (Exps::default().with(j, 1), -one.clone()),
        ];
        let lb = vec![
            (Exps::default().with(h + n, 1), one.clone()),
            (Exps::default().with(h + j, 1), -one.clone()),
        ];
        products = products
            .iter()
            .flat_map(|p| [mul_packed(p, &la), mul_packed(p, &lb)])
            .collect();
    }
    let contained = products.iter().all(|p| {
        let idx = ImageIndex::new(n, spec.components.len(), spec.bidegree_of(&p[0].0));
        image_vector(&spec, &idx, p).is_empty()
    });
    let mut mismatches = Vec::new();
    for d in 0..=dx {
        for e in 0..=dy {
            let cols = spec.domain_monomials((d, e));
            // dim I(Z)_{(d,e)} = #monomials - dim R_{(d,e)}
            let kernel_dim = cols.len() - ring_slice(&spec, (d, e)).dim;
            let index: rustc_hash::FxHashMap<Exps, u32> =
                cols.iter().enumerate().map(|(i, m)| (*m, i as u32)).collect();
            let mut ech = SparseEchelon::new(cols.len());
            for p in &products {
                let (pd, pe) = spec.bidegree_of(&p[0].0);
                if pd > d || pe > e {
                    continue;
                }
                for m in spec.domain_monomials((d - pd, e - pe)) {
                    let mut v: Vec<(u32, Rat)> = p.iter().map(|(x, c)| (index[&x.mul(&m)], c.clone())).collect();
                    v.sort_unstable_by_key(|t| t.0);
                    ech.insert(&v);
                }
            }
            if ech.rank() != kernel_dim {
                mismatches.push((d, e));
            }
        }
    }
    Ok(ProductIdealReport {
        n,
        dx,
        dy,
        contained,
        mismatches,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_bases() {
        let r = univariate_polygraph_basis(2, 1, 4).unwrap();
        assert_eq!(r.basis, vec![vec![0], vec![1]]);
        assert!(r.pass(), "{r:?}");
        let r = univariate_polygraph_basis(3, 1, 4).unwrap();
        assert_eq!(r.basis.len(), 3);
        assert!(r.pass());
        assert!(univariate_polygraph_basis(2, 2, 4).unwrap().pass());
    }

    #[test]
    fn two_point_product() {
        assert!(product_ideal_check(2, 3, 3).unwrap().pass());
    }
}
