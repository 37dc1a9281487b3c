//! Powers of the ideal `J` generated by the alternating polynomials, compared
//! with the intersection of the powers of the pairwise diagonal ideals.

use std::collections::BTreeMap;

use num_traits::Zero;
use rustc_hash::FxHashMap;
use serde_json::{json, Map, Value};

use super::{binom, hilbert_identity, Bidegree, Discrepancy, IdealSlice, PolygraphError};
use crate::exactcore::packed::{mul_packed, Exps, PackedPoly, MAX_VARS};
use crate::exactcore::sparse::SparseEchelon;
use crate::exactcore::Rat;
use crate::ghmodule::{delta_packed, slice_monomials};

/// Sets of `n` distinct cells with coordinate sums `bd`, in lexicographic order.
fn cell_sets(n: usize, bd: Bidegree) -> Vec<Vec<(usize, usize)>> {
    fn go(
        cells: &[(usize, usize)],
        start: usize,
        left: usize,
        rem: (usize, usize),
        cur: &mut Vec<(usize, usize)>,
        out: &mut Vec<Vec<(usize, usize)>>,
    ) {
        if left == 0 {
            if rem == (0, 0) {
                out.push(cur.clone());
            }
            return;
        }
        for i in start..cells.len() {
            let c = cells[i];
            if c.0 <= rem.0 && c.1 <= rem.1 {
                cur.push(c);
                go(cells, i + 1, left - 1, (rem.0 - c.0, rem.1 - c.1), cur, out);
                cur.pop();
            }
        }
    }
    let (r, s) = (bd.0 as usize, bd.1 as usize);
    let cells: Vec<(usize, usize)> = (0..=r).flat_map(|p| (0..=s).map(move |q| (p, q))).collect();
    let mut out = Vec::new();
    go(&cells, 0, n, (r, s), &mut Vec::new(), &mut out);
    out
}

fn space(n: usize, bd: Bidegree) -> IdealSlice {
    IdealSlice::new(slice_monomials(n, bd))
}

fn insert(s: &mut IdealSlice, p: &[(Exps, Rat)]) {
    if !p.is_empty() {
        let v = s.vector(p);
        s.echelon.insert(&v);
    }
}

fn shift(p: &[(Exps, Rat)], slot: usize) -> PackedPoly {
    p.iter()
        .map(|(e, c)| (e.with(slot, e.0[slot] + 1), c.clone()))
        .collect()
}

/// Spans of products of exactly `k` alternants, by exact bidegree.
fn product_spans(n: usize, k: usize, dx: u32, dy: u32) -> BTreeMap<Bidegree, Vec<PackedPoly>> {
    let grid = || (0..=dx).flat_map(|r| (0..=dy).map(move |s| (r, s)));
    let mut single: BTreeMap<Bidegree, Vec<PackedPoly>> = BTreeMap::new();
    for bd in grid() {
        let mut sp = space(n, bd);
        for cells in cell_sets(n, bd) {
            insert(&mut sp, &delta_packed(&cells));
        }
        if sp.dim() > 0 {
            single.insert(bd, sp.basis_packed());
        }
    }
    let mut level = single.clone();
    for _ in 1..k {
        let mut next = BTreeMap::new();
        for bd in grid() {
            let mut sp = space(n, bd);
            for (b1, us) in &level {
                for (b2, gs) in &single {
                    if b1.0 + b2.0 != bd.0 || b1.1 + b2.1 != bd.1 {
                        continue;
                    }
                    for u in us {
                        for g in gs {
                            insert(&mut sp, &mul_packed(u, g));
                        }
                    }
                }
            }
            if sp.dim() > 0 {
                next.insert(bd, sp.basis_packed());
            }
        }
        level = next;
    }
    level
}

/// Taylor coefficients of order `< d` along `x_i = x_j`, `y_i = y_j`, for
/// every pair `i < j` in `pairs`. A polynomial lies in the intersection of
/// `(x_i - x_j, y_i - y_j)^d` iff all of them vanish.
struct Constraints {
    n: usize,
    d: u32,
    pairs: Vec<(usize, usize)>,
    keys: FxHashMap<(u16, u8, u8, Exps), u32>,
}

impl Constraints {
    fn new(n: usize, d: u32, pairs: Vec<(usize, usize)>) -> Constraints {
        Constraints {
            n,
            d,
            pairs,
            keys: FxHashMap::default(),
        }
    }

    fn image(&mut self, p: &[(Exps, Rat)]) -> Vec<(u32, Rat)> {
        let n = self.n;
        let mut acc: FxHashMap<u32, Rat> = FxHashMap::default();
        for (pi, &(i, j)) in self.pairs.iter().enumerate() {
            for (e, c) in p {
                let (px, qy) = (e.0[i] as u32, e.0[n + i] as u32);
                let mut rest = *e;
                rest.0[i] = 0;
                rest.0[n + i] = 0;
                for a in 0..=px.min(self.d - 1) {
                    for b in 0..=qy.min(self.d - 1 - a) {
                        let mut m = rest;
                        m.0[j] += (px - a) as u8;
                        m.0[n + j] += (qy - b) as u8;
                        let w = binom(px as u64, a as u64) * binom(qy as u64, b as u64);
                        let next = self.keys.len() as u32;
                        let col = *self.keys.entry((pi as u16, a as u8, b as u8, m)).or_insert(next);
                        *acc.entry(col).or_insert_with(Rat::zero) += &(c * &Rat::from(w as i64));
                    }
                }
            }
        }
        let mut v: Vec<(u32, Rat)> = acc.into_iter().filter(|(_, a)| !a.is_zero()).collect();
        v.sort_unstable_by_key(|t| t.0);
        v
    }

    /// Dimension of the common kernel on the slice `bd`.
    fn kernel_dim(&mut self, bd: Bidegree) -> usize {
        let monos = slice_monomials(self.n, bd);
        let rows: Vec<Vec<(u32, Rat)>> = monos.iter().map(|m| self.image(&[(*m, Rat::from_int(1))])).collect();
        let mut ech = SparseEchelon::new(self.keys.len());
        for r in &rows {
            ech.insert(r);
        }
        monos.len() - ech.rank()
    }
}

/// Outcome of the `J^d` comparisons up to a truncation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JpowerReport {
    pub n: usize,
    pub d: usize,
    pub dx: u32,
    pub dy: u32,
    /// `dim J^d_{(r,s)}`.
    pub dims: BTreeMap<Bidegree, usize>,
    /// `J^d` lies in every `(x_i - x_j, y_i - y_j)^d`.
    pub containment: bool,
    /// Bidegrees where `J^d` is strictly smaller than the intersection.
    pub equality_failures: Vec<Bidegree>,
    /// `(i, j, bidegree)` where the generators of a pairwise power did not
    /// span the kernel of its Taylor constraints.
    pub power_generator_failures: Vec<(usize, usize, Bidegree)>,
    /// Truncated freeness of `J^d` over `ℚ[y]`.
    pub freeness: Option<Discrepancy>,
}

impl JpowerReport {
    pub fn pass(&self) -> bool {
        self.containment
            && self.equality_failures.is_empty()
            && self.power_generator_failures.is_empty()
            && self.freeness.is_none()
    }

    pub fn to_json(&self) -> Value {
        let fail: Vec<[u32; 2]> = self.equality_failures.iter().map(|b| [b.0, b.1]).collect();
        let free = self
            .freeness
            .as_ref()
            .map(|d| json!({"bidegree": [d.bidegree.0, d.bidegree.1], "expected": d.expected, "found": d.found}));
        let pairs: Vec<Value> = self
            .power_generator_failures
            .iter()
            .map(|(i, j, b)| json!({"pair": [i + 1, j + 1], "bidegree": [b.0, b.1]}))
            .collect();
        let mut dims = Map::new();
        for ((r, s), v) in &self.dims {
            dims.insert(format!("({r},{s})"), json!(v));
        }
        json!({
            "check": "jpower",
            "n": self.n,
            "d": self.d,
            "Dx": self.dx,
            "Dy": self.dy,
            "pass": self.pass(),
            "containment": self.containment,
            "equality_failures": fail,
            "power_generator_failures": pairs,
            "freeness_discrepancy": free,
            "dims": Value::Object(dims),
        })
    }
}

/// Builds `J^d` slice by slice and compares it with `⋂_{i<j} (x_i - x_j, y_i - y_j)^d`
/// for every bidegree up to `(dx, dy)`; also runs the truncated freeness
/// certificate of `J^d` over `ℚ[y_1..y_n]`.
pub fn jpower_check(n: usize, d: usize, dx: u32, dy: u32) -> Result<JpowerReport, PolygraphError> {
    if n < 2 || d < 1 || 2 * n > MAX_VARS {
        return Err(PolygraphError::InvalidParameters(format!(
            "need 2 <= n <= 8 and d >= 1, got n={n}, d={d}"
        )));
    }
    let gens = product_spans(n, d, dx, dy);
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let mut all = Constraints::new(n, d as u32, pairs.clone());

    let mut slices: BTreeMap<Bidegree, IdealSlice> = BTreeMap::new();
    let mut h = vec![vec![0usize; dy as usize + 1]; dx as usize + 1];
    let mut g = h.clone();
    let mut containment = true;
    let mut equality_failures = Vec::new();
    for r in 0..=dx {
        for s in 0..=dy {
            let mut sp = space(n, (r, s));
            if s > 0 {
                for b in slices[&(r, s - 1)].basis_packed() {
                    for j in 0..n {
                        insert(&mut sp, &shift(&b, n + j));
                    }
                }
            }
            let dim_y = sp.dim();
            if r > 0 {
                for b in slices[&(r - 1, s)].basis_packed() {
                    for j in 0..n {
                        insert(&mut sp, &shift(&b, j));
                    }
                }
            }
            for p in gens.get(&(r, s)).into_iter().flatten() {
                insert(&mut sp, p);
            }
            h[r as usize][s as usize] = sp.dim();
            g[r as usize][s as usize] = sp.dim() - dim_y;
            if !sp.basis_packed().iter().all(|b| all.image(b).is_empty()) {
                containment = false;
            }
            if all.kernel_dim((r, s)) != sp.dim() {
                equality_failures.push((r, s));
            }
            slices.insert((r, s), sp);
        }
    }

    // Each pairwise power: its generators span its constraint kernel.
    let mut power_generator_failures = Vec::new();
    let one = Rat::from_int(1);
    for &(i, j) in &pairs {
        let dx_lin = vec![
            (Exps::default().with(i, 1), one.clone()),
            (Exps::default().with(j, 1), -one.clone()),
        ];
        let dy_lin = vec![
            (Exps::default().with(n + i, 1), one.clone()),
            (Exps::default().with(n + j, 1), -one.clone()),
        ];
        let mut single = Constraints::new(n, d as u32, vec![(i, j)]);
        for r in 0..=dx {
            for s in 0..=dy {
                let mut sp = space(n, (r, s));
                for a in 0..=d as u32 {
                    let b = d as u32 - a;
                    if a > r || b > s {
                        continue;
                    }
                    let mut gen: PackedPoly = vec![(Exps::default(), one.clone())];
                    for _ in 0..a {
                        gen = mul_packed(&gen, &dx_lin);
                    }
                    for _ in 0..b {
                        gen = mul_packed(&gen, &dy_lin);
                    }
                    for m in slice_monomials(n, (r - a, s - b)) {
                        let p: PackedPoly = gen.iter().map(|(e, c)| (e.mul(&m), c.clone())).collect();
                        insert(&mut sp, &p);
                    }
                }
                let inside = sp.basis_packed().iter().all(|b| single.image(b).is_empty());
                if !inside || single.kernel_dim((r, s)) != sp.dim() {
                    power_generator_failures.push((i, j, (r, s)));
                }
            }
        }
    }

    let dims = slices.iter().map(|(k, v)| (*k, v.dim())).collect();
    let freeness = hilbert_identity(&h, &g, n);
    Ok(JpowerReport {
        n,
        d,
        dx,
        dy,
        dims,
        containment,
        equality_failures,
        power_generator_failures,
        freeness,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_points() {
        let r = jpower_check(2, 1, 3, 3).unwrap();
        assert!(r.pass(), "{r:?}");
        // J = (x1 - x2, y1 - y2): codimension 1 in every slice
        assert_eq!(r.dims[&(2, 1)], 6 - 1);
        assert!(jpower_check(2, 2, 3, 3).unwrap().pass());
    }

    #[test]
    fn cell_set_count() {
        assert_eq!(cell_sets(2, (1, 0)), vec![vec![(0, 0), (1, 0)]]);
        assert!(cell_sets(3, (0, 0)).is_empty());
    }
}
