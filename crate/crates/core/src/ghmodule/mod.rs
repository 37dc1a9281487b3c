//! Bivariate alternants `Δ_D`, the spaces `D_μ` of their iterated
//! derivatives, their bigraded characters, the annihilator `J_μ`, and diagonal
//! coinvariant dimensions.
//!
//! Polynomials live in `x_1..x_n, y_1..y_n`, packed into slots `0..n` and
//! `n..2n` of an [`Exps`].

mod apolar;
mod coinv;
mod frobenius;

use std::collections::BTreeMap;

use thiserror::Error;

use crate::exactcore::packed::{compositions, Exps, MonomialTable, VarLayout, MAX_VARS};
use crate::exactcore::sparse::{SparseEchelon, SparseVec};
use crate::exactcore::{MPoly, Rat, Var};
use crate::partcomb::{Cell, Partition};

pub use apolar::{delta_coefficient_of_alternation, jmu_annihilator, satisfies_alternation_criterion};
pub use coinv::{diagonal_coinvariants_dims, CoinvariantTable, COINV_MAX_N};
pub use frobenius::{bigraded_frobenius, verify_f_equals_h, FhReport, FrobeniusSeries};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GhError {
    #[error("repeated cell ({0}, {1})")]
    RepeatedCell(usize, usize),
    #[error("cutoff ({0}, {1}) is below the top bidegree ({2}, {3})")]
    CutoffBelowTop(u32, u32, u32, u32),
    #[error("n = {0} is outside the supported range 1..={1}")]
    OutOfRange(usize, usize),
    #[error(transparent)]
    Macdonald(#[from] crate::macdonald::MacdonaldError),
}

/// Bidegree `(x-degree, y-degree)`.
pub type Bidegree = (u32, u32);

/// Packed polynomial: terms with distinct exponents, no zero coefficients.
pub(crate) type Packed = crate::exactcore::packed::PackedPoly;

/// Variable order `x_1..x_n, y_1..y_n`.
pub fn layout(n: usize) -> VarLayout {
    assert!(
        2 * n <= MAX_VARS,
        "at most {} points fit the packed layout",
        MAX_VARS / 2
    );
    VarLayout::new((1..=n).map(Var::x).chain((1..=n).map(Var::y)).collect())
}

pub(crate) fn bidegree_of(e: &Exps, n: usize) -> Bidegree {
    (e.degree(0..n), e.degree(n..2 * n))
}

pub(crate) use crate::exactcore::packed::normalize as collect;

/// `w` acting by `x_i -> x_{w(i)}`, `y_i -> y_{w(i)}`.
pub(crate) fn permute(e: &Exps, w: &[usize]) -> Exps {
    let n = w.len();
    let mut out = *e;
    for (i, &wi) in w.iter().enumerate() {
        out.0[wi] = e.0[i];
        out.0[n + wi] = e.0[n + i];
    }
    out
}

/// All permutations of `0..n` with their signs.
pub(crate) fn permutations(n: usize) -> Vec<(Vec<usize>, i64)> {
    fn go(prefix: &mut Vec<usize>, used: &mut Vec<bool>, sign: i64, out: &mut Vec<(Vec<usize>, i64)>) {
        let n = used.len();
        if prefix.len() == n {
            out.push((prefix.clone(), sign));
            return;
        }
        // Placing value v after the unused values smaller than it adds that
        // many inversions.
        let mut smaller_unused = 0;
        for v in 0..n {
            if used[v] {
                continue;
            }
            used[v] = true;
            prefix.push(v);
            let s = if smaller_unused % 2 == 0 { sign } else { -sign };
            go(prefix, used, s, out);
            prefix.pop();
            used[v] = false;
            smaller_unused += 1;
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], 1, &mut out);
    out
}

/// `Θ^ε g = Σ_w ε(w) w·g` for `g` in `x_1..x_n, y_1..y_n`.
pub fn alternate(g: &MPoly, n: usize) -> MPoly {
    let lay = layout(n);
    let packed = lay.pack_poly(g).expect("polynomial in x_1..x_n, y_1..y_n");
    let terms = permutations(n).into_iter().flat_map(|(w, sign)| {
        let s = Rat::from_int(sign);
        packed
            .iter()
            .map(move |(e, c)| (permute(e, &w), c * &s))
            .collect::<Vec<_>>()
    });
    let out = collect(terms);
    lay.unpack_poly(out.iter().map(|(e, c)| (e, c)))
}

/// `Δ_D` with its cells in the pinned (lexicographic) column order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeltaPoly {
    pub cells: Vec<Cell>,
    pub value: MPoly,
}

impl DeltaPoly {
    pub fn bidegree(&self) -> Bidegree {
        let r = self.cells.iter().map(|c| c.0 as u32).sum();
        let s = self.cells.iter().map(|c| c.1 as u32).sum();
        (r, s)
    }
}

pub(crate) fn delta_packed(cells: &[Cell]) -> Packed {
    let n = cells.len();
    let terms = permutations(n).into_iter().map(|(w, sign)| {
        let mut e = Exps::default();
        for (i, &col) in w.iter().enumerate() {
            e.0[i] = cells[col].0 as u8;
            e.0[n + i] = cells[col].1 as u8;
        }
        (e, Rat::from_int(sign))
    });
    collect(terms)
}

fn sorted_cells(cells: &[Cell]) -> Result<Vec<Cell>, GhError> {
    let mut cs = cells.to_vec();
    cs.sort_unstable();
    if let Some(w) = cs.windows(2).find(|w| w[0] == w[1]) {
        return Err(GhError::RepeatedCell(w[0].0, w[0].1));
    }
    Ok(cs)
}

/// `det(x_i^{p_j} y_i^{q_j})` with cells `(p_j, q_j)` sorted lexicographically.
pub fn delta_d(cells: &[Cell]) -> Result<DeltaPoly, GhError> {
    let cells = sorted_cells(cells)?;
    let lay = layout(cells.len());
    let p = delta_packed(&cells);
    Ok(DeltaPoly {
        value: lay.unpack_poly(p.iter().map(|(e, c)| (e, c))),
        cells,
    })
}

/// `Δ_μ = Δ_{D(μ)}`.
pub fn delta_mu(mu: &Partition) -> DeltaPoly {
    delta_d(&mu.cells()).expect("diagram cells are distinct")
}

/// One bidegree of a [`BigradedSpace`].
#[derive(Clone, Debug)]
pub struct Slice {
    table: MonomialTable,
    echelon: SparseEchelon,
}

impl Slice {
    fn new() -> Slice {
        Slice {
            table: MonomialTable::new(),
            echelon: SparseEchelon::new(0),
        }
    }

    fn with_columns(list: Vec<Exps>) -> Slice {
        let k = list.len();
        Slice {
            table: MonomialTable::from_list(list),
            echelon: SparseEchelon::new(k),
        }
    }

    fn intern(&mut self, p: &[(Exps, Rat)]) -> SparseVec {
        let mut v: SparseVec = p.iter().map(|(e, c)| (self.table.id(*e), c.clone())).collect();
        self.echelon.grow(self.table.len());
        v.sort_unstable_by_key(|t| t.0);
        v
    }

    /// Looks up columns without adding new ones; `None` if a monomial is new.
    fn to_sparse_existing(&self, p: &[(Exps, Rat)]) -> Option<SparseVec> {
        let mut v = p
            .iter()
            .map(|(e, c)| Some((self.table.get(e)?, c.clone())))
            .collect::<Option<SparseVec>>()?;
        v.sort_unstable_by_key(|t| t.0);
        Some(v)
    }

    fn insert(&mut self, p: &[(Exps, Rat)]) -> bool {
        let v = self.intern(p);
        self.echelon.insert(&v)
    }

    fn contains(&mut self, p: &[(Exps, Rat)]) -> bool {
        match self.to_sparse_existing(p) {
            Some(v) => self.echelon.contains(&v),
            None => p.is_empty(),
        }
    }

    pub fn dim(&self) -> usize {
        self.echelon.rank()
    }

    pub(crate) fn basis_packed(&self) -> Vec<Packed> {
        self.echelon
            .rows()
            .iter()
            .map(|r| r.iter().map(|(c, a)| (self.table.exps(*c), a.clone())).collect())
            .collect()
    }
}

/// A subspace of `ℚ[x,y]` stored slice by slice in row echelon form.
#[derive(Clone, Debug)]
pub struct BigradedSpace {
    n: usize,
    slices: BTreeMap<Bidegree, Slice>,
}

impl BigradedSpace {
    fn new(n: usize) -> BigradedSpace {
        BigradedSpace {
            n,
            slices: BTreeMap::new(),
        }
    }

    /// Number of points: the space lives in `x_1..x_n, y_1..y_n`.
    pub fn npoints(&self) -> usize {
        self.n
    }

    pub fn dim(&self, bd: Bidegree) -> usize {
        self.slices.get(&bd).map_or(0, Slice::dim)
    }

    /// Nonzero slice dimensions.
    pub fn dims(&self) -> BTreeMap<Bidegree, usize> {
        self.slices
            .iter()
            .filter(|(_, s)| s.dim() > 0)
            .map(|(k, s)| (*k, s.dim()))
            .collect()
    }

    pub fn total_dim(&self) -> usize {
        self.slices.values().map(Slice::dim).sum()
    }

    /// Row-reduced basis of one slice.
    pub fn basis(&self, bd: Bidegree) -> Vec<MPoly> {
        let lay = layout(self.n);
        self.slices.get(&bd).map_or_else(Vec::new, |s| {
            s.basis_packed()
                .iter()
                .map(|p| lay.unpack_poly(p.iter().map(|(e, c)| (e, c))))
                .collect()
        })
    }

    pub(crate) fn slice(&self, bd: Bidegree) -> Option<&Slice> {
        self.slices.get(&bd)
    }

    pub(crate) fn slice_mut(&mut self, bd: Bidegree) -> Option<&mut Slice> {
        self.slices.get_mut(&bd)
    }

    /// Membership for a bihomogeneous polynomial.
    pub fn contains(&mut self, p: &MPoly) -> bool {
        if p.is_zero() {
            return true;
        }
        let packed = layout(self.n).pack_poly(p).expect("polynomial in x_1..x_n, y_1..y_n");
        let bd = bidegree_of(&packed[0].0, self.n);
        assert!(
            packed.iter().all(|(e, _)| bidegree_of(e, self.n) == bd),
            "not bihomogeneous"
        );
        match self.slices.get_mut(&bd) {
            Some(s) => s.contains(&packed),
            None => false,
        }
    }

    /// Whether every first partial derivative of every slice basis vector
    /// lies in the space.
    pub fn is_derivative_closed(&mut self) -> bool {
        let n = self.n;
        let keys: Vec<Bidegree> = self.slices.keys().copied().collect();
        for bd in keys {
            let basis = self.slices[&bd].basis_packed();
            for b in &basis {
                for v in 0..2 * n {
                    let d = derivative(b, v);
                    if d.is_empty() {
                        continue;
                    }
                    let target = if v < n { (bd.0 - 1, bd.1) } else { (bd.0, bd.1 - 1) };
                    let ok = self.slices.get_mut(&target).is_some_and(|s| s.contains(&d));
                    if !ok {
                        return false;
                    }
                }
            }
        }
        true
    }
}

pub(crate) fn derivative(p: &[(Exps, Rat)], slot: usize) -> Packed {
    p.iter()
        .filter(|(e, _)| e.0[slot] > 0)
        .map(|(e, c)| {
            let k = e.0[slot];
            (e.with(slot, k - 1), c * &Rat::from_int(k as i64))
        })
        .collect()
}

/// All monomials of bidegree `bd` in `x_1..x_n, y_1..y_n`.
pub(crate) fn slice_monomials(n: usize, bd: Bidegree) -> Vec<Exps> {
    let xs = compositions(n, bd.0, 0);
    let ys = compositions(n, bd.1, n);
    xs.iter().flat_map(|a| ys.iter().map(move |b| a.mul(b))).collect()
}

/// `D_μ = ℚ[∂x, ∂y] Δ_μ`, slice by slice.
///
/// Bidegrees are processed by decreasing total degree, so a slice is final
/// before its derivatives are pushed down. Closure therefore holds by
/// construction; [`BigradedSpace::is_derivative_closed`] re-checks it.
pub fn dmu_basis(mu: &Partition) -> BigradedSpace {
    let n = mu.size();
    let top = (mu.n_stat() as u32, mu.conjugate().n_stat() as u32);
    let mut space = BigradedSpace::new(n);
    let mut start = Slice::new();
    start.insert(&delta_packed(&mu.cells()));
    space.slices.insert(top, start);
    for total in (1..=top.0 + top.1).rev() {
        let current: Vec<Bidegree> = space.slices.keys().filter(|k| k.0 + k.1 == total).copied().collect();
        for bd in current {
            let basis = space.slices[&bd].basis_packed();
            for v in 0..2 * n {
                let target = if v < n {
                    if bd.0 == 0 {
                        continue;
                    }
                    (bd.0 - 1, bd.1)
                } else {
                    if bd.1 == 0 {
                        continue;
                    }
                    (bd.0, bd.1 - 1)
                };
                let slice = space.slices.entry(target).or_insert_with(Slice::new);
                for b in &basis {
                    let d = derivative(b, v);
                    if !d.is_empty() {
                        slice.insert(&d);
                    }
                }
            }
        }
    }
    space
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn poly(s: &str) -> MPoly {
        s.parse().unwrap()
    }

    #[test]
    fn alternation_examples() {
        assert_eq!(alternate(&poly("x1"), 2), poly("x1 - x2"));
        assert!(alternate(&poly("x1*x2"), 2).is_zero());
        let a = alternate(&poly("x1^2*x2"), 3);
        assert_eq!(a.len(), 6);
        assert_eq!(alternate(&a, 3), a.scale(&Rat::from_int(6)));
    }

    #[test]
    fn delta_examples() {
        assert_eq!(delta_d(&[(0, 0), (1, 0)]).unwrap().value, poly("x2 - x1"));
        assert_eq!(delta_d(&[(0, 0), (0, 1)]).unwrap().value, poly("y2 - y1"));
        assert!(matches!(delta_d(&[(0, 0), (0, 0)]), Err(GhError::RepeatedCell(0, 0))));
        let v = delta_mu(&p("1,1,1")).value;
        let vandermonde = poly("x2 - x1").mul(&poly("x3 - x1")).mul(&poly("x3 - x2"));
        assert_eq!(v, vandermonde);
    }

    #[test]
    fn small_modules() {
        let d = dmu_basis(&p("2"));
        assert_eq!(d.dims(), [((0, 0), 1), ((0, 1), 1)].into_iter().collect());
        let d = dmu_basis(&p("1,1"));
        assert_eq!(d.dims(), [((0, 0), 1), ((1, 0), 1)].into_iter().collect());
        let mut d = dmu_basis(&p("2,1"));
        assert_eq!(d.total_dim(), 6);
        assert!(d.is_derivative_closed());
    }

    #[test]
    fn permutation_signs() {
        let ps = permutations(3);
        assert_eq!(ps.len(), 6);
        for (w, s) in ps {
            assert_eq!(s, crate::partcomb::sign(&w));
        }
    }
}
