//! Coordinate rings of polygraph arrangements, by per-bidegree linear algebra.
//!
//! A component `(f, T)` is the linear space where `(a_i, b_i) = (x_{f(i)}, y_{f(i)})`
//! and `x_j = 0` for `j ∈ T`. Restricting a polynomial to a component is the
//! substitution `Φ_{f,T}`; the ideal of a union of components is the common
//! kernel of these substitutions, and the coordinate ring is their joint
//! image. Indices are 0-based throughout.
//!
//! Variables are packed as `x_1..x_n, a_1..a_l, y_1..y_n, b_1..b_l`, so the
//! `x`-kind slots are `0..n+l` and the `y`-kind slots are `n+l..2(n+l)`.

mod jpower;
mod n2;
mod univariate;

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;
use rustc_hash::FxHashMap;
use serde_json::{json, Map, Value};
use thiserror::Error;

use crate::exactcore::packed::{compositions, Exps, VarLayout, MAX_VARS};
use crate::exactcore::sparse::{SparseEchelon, SparseVec};
use crate::exactcore::{MPoly, Rat, Var};

pub use jpower::{jpower_check, JpowerReport};
pub use n2::{listed_generator_checks, n2_basis_element, n2_common_basis, N2Report};
pub use univariate::{product_ideal_check, univariate_polygraph_basis, ProductIdealReport, UnivariateReport};

/// `(x-degree, y-degree)`.
pub type Bidegree = (u32, u32);

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolygraphError {
    #[error("{0} points and {1} extra points exceed the {max} packed variables", max = MAX_VARS / 2)]
    TooManyVariables(usize, usize),
    #[error("invalid component: {0}")]
    InvalidComponent(String),
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
}

/// One irreducible piece `V(x_j : j ∈ T) ∩ W_f`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Component {
    /// `f(i)` for `i` in `0..l`, values in `0..n`.
    pub f: Vec<usize>,
    /// Sorted point indices whose `x` coordinate vanishes.
    pub t: Vec<usize>,
}

/// A union of components inside `E^n × E^l`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArrangementSpec {
    pub n: usize,
    pub l: usize,
    pub components: Vec<Component>,
}

impl fmt::Display for Component {
    fn fmt(&self, fm: &mut fmt::Formatter<'_>) -> fmt::Result {
        let f: Vec<String> = self.f.iter().map(|v| (v + 1).to_string()).collect();
        let t: Vec<String> = self.t.iter().map(|v| (v + 1).to_string()).collect();
        write!(fm, "f=({}) T={{{}}}", f.join(","), t.join(","))
    }
}

/// All functions `[l] -> [n]`, as value vectors in lexicographic order.
pub(crate) fn all_functions(n: usize, l: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for _ in 0..l {
        out = out
            .into_iter()
            .flat_map(|f| (0..n).map(move |v| [f.clone(), vec![v]].concat()))
            .collect();
    }
    if n == 0 && l > 0 {
        out.clear();
    }
    out
}

fn subsets(n: usize) -> impl Iterator<Item = Vec<usize>> {
    (0u32..(1 << n)).map(move |mask| (0..n).filter(|j| mask & (1 << j) != 0).collect())
}

impl ArrangementSpec {
    fn check_size(n: usize, l: usize) -> Result<(), PolygraphError> {
        if 2 * (n + l) > MAX_VARS {
            return Err(PolygraphError::TooManyVariables(n, l));
        }
        Ok(())
    }

    pub fn new(n: usize, l: usize, components: Vec<Component>) -> Result<ArrangementSpec, PolygraphError> {
        validate(n, l)?;
        for c in &components {
            if c.f.len() != l || c.f.iter().any(|&v| v >= n) || c.t.iter().any(|&j| j >= n) {
                return Err(PolygraphError::InvalidComponent(c.to_string()));
            }
        }
        Ok(ArrangementSpec { n, l, components })
    }

    /// The polygraph `Z(n,l)`: every `W_f`.
    pub fn z(n: usize, l: usize) -> Result<ArrangementSpec, PolygraphError> {
        let comps = all_functions(n, l)
            .into_iter()
            .map(|f| Component { f, t: vec![] })
            .collect();
        ArrangementSpec::new(n, l, comps)
    }

    /// `Y(m,r,k)`: pairs `(f,T)` with `|T ∩ ([r] \ f([k]))| ≥ m`.
    pub fn y(n: usize, l: usize, m: i64, r: usize, k: usize) -> Result<ArrangementSpec, PolygraphError> {
        if r > n || k > l {
            return Err(PolygraphError::InvalidParameters(format!(
                "need r <= n and k <= l, got r={r}, k={k}"
            )));
        }
        if m <= 0 {
            return ArrangementSpec::z(n, l);
        }
        validate(n, l)?;
        let mut comps = Vec::new();
        for f in all_functions(n, l) {
            for t in subsets(n) {
                let count = t.iter().filter(|&&j| j < r && !f[..k].contains(&j)).count();
                if count as i64 >= m {
                    comps.push(Component { f: f.clone(), t });
                }
            }
        }
        ArrangementSpec::new(n, l, comps)
    }

    /// Drops components contained in another one (same `f`, larger `T`).
    /// The union, and hence the ideal, is unchanged.
    pub fn minimal(&self) -> ArrangementSpec {
        let comps = self
            .components
            .iter()
            .filter(|c| {
                !self
                    .components
                    .iter()
                    .any(|d| d != *c && d.f == c.f && d.t.iter().all(|j| c.t.contains(j)))
            })
            .cloned()
            .collect();
        ArrangementSpec {
            n: self.n,
            l: self.l,
            components: comps,
        }
    }

    pub fn nvars(&self) -> usize {
        2 * (self.n + self.l)
    }

    /// Number of `x`-kind variables (`x` and `a`).
    pub fn half(&self) -> usize {
        self.n + self.l
    }

    pub fn layout(&self) -> VarLayout {
        let (n, l) = (self.n, self.l);
        let vars = (1..=n)
            .map(Var::x)
            .chain((1..=l).map(Var::a))
            .chain((1..=n).map(Var::y))
            .chain((1..=l).map(Var::b))
            .collect();
        VarLayout::new(vars)
    }

    pub fn bidegree_of(&self, e: &Exps) -> Bidegree {
        let h = self.half();
        (e.degree(0..h), e.degree(h..2 * h))
    }

    /// `Φ_c` on a monomial: its image monomial in `x_1..x_n, y_1..y_n`
    /// (slots `0..n`, `n..2n`), or `None` if it vanishes on the component.
    pub(crate) fn restrict(&self, c: &Component, e: &Exps) -> Option<Exps> {
        let (n, l, h) = (self.n, self.l, self.half());
        let mut out = Exps::default();
        for j in 0..n {
            out.0[j] = e.0[j];
            out.0[n + j] = e.0[h + j];
        }
        for i in 0..l {
            let j = c.f[i];
            out.0[j] += e.0[n + i];
            out.0[n + j] += e.0[h + n + i];
        }
        if c.t.iter().any(|&j| out.0[j] > 0) {
            return None;
        }
        Some(out)
    }

    /// All monomials of a bidegree in the full variable set.
    pub fn domain_monomials(&self, (d, e): Bidegree) -> Vec<Exps> {
        let h = self.half();
        let xs = compositions(h, d, 0);
        let ys = compositions(h, e, h);
        xs.iter().flat_map(|a| ys.iter().map(move |b| a.mul(b))).collect()
    }
}

/// Column indices for the joint image `⊕_c ℚ[x,y]_{(d,e)}`.
pub(crate) struct ImageIndex {
    ncomp: usize,
    monos: FxHashMap<Exps, u32>,
}

impl ImageIndex {
    pub(crate) fn new(n: usize, ncomp: usize, (d, e): Bidegree) -> ImageIndex {
        let xs = compositions(n, d, 0);
        let ys = compositions(n, e, n);
        let monos = xs
            .iter()
            .flat_map(|a| ys.iter().map(move |b| a.mul(b)))
            .enumerate()
            .map(|(i, m)| (m, i as u32))
            .collect();
        ImageIndex { ncomp, monos }
    }

    pub(crate) fn ncols(&self) -> usize {
        self.ncomp * self.monos.len()
    }

    pub(crate) fn col(&self, comp: usize, m: &Exps) -> u32 {
        self.monos[m] * self.ncomp as u32 + comp as u32
    }
}

/// `Φ(p)` for a packed polynomial, as a sparse vector in image coordinates.
pub(crate) fn image_vector(spec: &ArrangementSpec, idx: &ImageIndex, p: &[(Exps, Rat)]) -> SparseVec {
    let mut acc: FxHashMap<u32, Rat> = FxHashMap::default();
    for (ci, c) in spec.components.iter().enumerate() {
        for (e, a) in p {
            if let Some(m) = spec.restrict(c, e) {
                *acc.entry(idx.col(ci, &m)).or_insert_with(Rat::zero) += a;
            }
        }
    }
    let mut v: SparseVec = acc.into_iter().filter(|(_, a)| !num_traits::Zero::is_zero(a)).collect();
    v.sort_unstable_by_key(|t| t.0);
    v
}

/// Reduced exponents `(γ, δ)` for the extra points: `γ_i + δ_i < n`.
pub(crate) fn reduced_extra(spec: &ArrangementSpec, (d, e): Bidegree) -> Vec<Exps> {
    let (n, l, h) = (spec.n, spec.l, spec.half());
    let mut out = Vec::new();
    for dg in 0..=d {
        for de in 0..=e {
            for g in compositions(l, dg, n) {
                for b in compositions(l, de, h + n) {
                    if (0..l).all(|i| (g.0[n + i] as usize) + (b.0[h + n + i] as usize) < n) {
                        out.push(g.mul(&b));
                    }
                }
            }
        }
    }
    out
}

/// Dimensions of `R_{(d,e)}` and `(y R)_{(d,e)}` for the coordinate ring `R`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RingSlice {
    pub dim: usize,
    pub dim_y: usize,
}

/// Inserts the spanning vectors `x^ω y^ν Φ(a^γ b^δ)` of `R_{(d,e)}` over
/// reduced `(γ,δ)`: those with `|ν| > 0` (spanning `(yR)_{(d,e)}`) when
/// `y_part` is set, the rest otherwise.
fn fill(spec: &ArrangementSpec, idx: &ImageIndex, ech: &mut SparseEchelon, bd: Bidegree, y_part: bool) {
    let n = spec.n;
    let ncols = idx.ncols();
    for g in reduced_extra(spec, bd) {
        let img: Vec<Option<Exps>> = spec.components.iter().map(|c| spec.restrict(c, &g)).collect();
        if img.iter().all(Option::is_none) {
            continue;
        }
        let (gd, ge) = spec.bidegree_of(&g);
        let rest_y = bd.1 - ge;
        if y_part != (rest_y > 0) {
            continue;
        }
        let ys = compositions(n, rest_y, n);
        for a in compositions(n, bd.0 - gd, 0) {
            for b in &ys {
                if ech.rank() == ncols {
                    return;
                }
                let w = a.mul(b);
                let mut v: SparseVec = img
                    .iter()
                    .enumerate()
                    .filter(|(ci, _)| spec.components[*ci].t.iter().all(|&j| a.0[j] == 0))
                    .filter_map(|(ci, m)| m.map(|m| (idx.col(ci, &m.mul(&w)), Rat::from_int(1))))
                    .collect();
                v.sort_unstable_by_key(|t| t.0);
                ech.insert(&v);
            }
        }
    }
}

/// Echelon form of `(yR)_{(d,e)}` in the image coordinates of `spec`.
pub(crate) fn y_part(spec: &ArrangementSpec, bd: Bidegree) -> (ImageIndex, SparseEchelon) {
    let idx = ImageIndex::new(spec.n, spec.components.len(), bd);
    let mut ech = SparseEchelon::new(idx.ncols());
    fill(spec, &idx, &mut ech, bd, true);
    (idx, ech)
}

pub(crate) fn ring_slice(spec: &ArrangementSpec, bd: Bidegree) -> RingSlice {
    let spec = spec.minimal();
    if spec.components.is_empty() {
        return RingSlice { dim: 0, dim_y: 0 };
    }
    let (idx, mut ech) = y_part(&spec, bd);
    let dim_y = ech.rank();
    fill(&spec, &idx, &mut ech, bd, false);
    RingSlice { dim: ech.rank(), dim_y }
}

/// `dim R_{(d,e)}` over a grid of bidegrees.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BivariateHilbert {
    pub dx: u32,
    pub dy: u32,
    pub dims: BTreeMap<Bidegree, usize>,
}

impl BivariateHilbert {
    pub fn get(&self, bd: Bidegree) -> usize {
        self.dims.get(&bd).copied().unwrap_or(0)
    }

    pub fn dims_json(&self) -> Value {
        let mut m = Map::new();
        for ((d, e), v) in &self.dims {
            m.insert(format!("({d},{e})"), json!(v));
        }
        Value::Object(m)
    }
}

/// Slice dimensions of the coordinate ring for `d ≤ dx`, `e ≤ dy`.
pub fn hilbert_series(spec: &ArrangementSpec, dx: u32, dy: u32) -> BivariateHilbert {
    let mut dims = BTreeMap::new();
    for d in 0..=dx {
        for e in 0..=dy {
            dims.insert((d, e), ring_slice(spec, (d, e)).dim);
        }
    }
    BivariateHilbert { dx, dy, dims }
}

/// `C(a, b)` as u64.
pub(crate) fn binom(a: u64, b: u64) -> u64 {
    if b > a {
        return 0;
    }
    (0..b).fold(1u64, |acc, i| acc * (a - i) / (i + 1))
}

/// First bidegree where a certificate failed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Discrepancy {
    pub bidegree: Bidegree,
    pub expected: i64,
    pub found: i64,
}

/// Truncated freeness certificate over `k[y_1..y_n]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreenessCertificate {
    pub dx: u32,
    pub dy: u32,
    /// `h[d][e] = dim R_{(d,e)}`.
    pub h: Vec<Vec<usize>>,
    /// `g[d][e] = dim (R/yR)_{(d,e)}`.
    pub g: Vec<Vec<usize>>,
    pub first_discrepancy: Option<Discrepancy>,
}

impl FreenessCertificate {
    pub fn pass(&self) -> bool {
        self.first_discrepancy.is_none()
    }

    pub fn to_json(&self) -> Value {
        let disc = self
            .first_discrepancy
            .as_ref()
            .map(|d| json!({"bidegree": [d.bidegree.0, d.bidegree.1], "expected": d.expected, "found": d.found}));
        json!({"check": "freeness", "pass": self.pass(), "first_discrepancy": disc})
    }
}

/// Checks `h_d(s) ≡ g_d(s)/(1-s)^nv (mod s^{dy+1})` for each `d`, where `h`
/// and `g` are indexed `[d][e]`.
pub(crate) fn hilbert_identity(h: &[Vec<usize>], g: &[Vec<usize>], nv: usize) -> Option<Discrepancy> {
    for (d, (hd, gd)) in h.iter().zip(g).enumerate() {
        for (e, &found) in hd.iter().enumerate() {
            let expected: u64 = (0..=e)
                .map(|k| gd[k] as u64 * binom((e - k + nv - 1) as u64, nv as u64 - 1))
                .sum();
            if expected != found as u64 {
                return Some(Discrepancy {
                    bidegree: (d as u32, e as u32),
                    expected: expected as i64,
                    found: found as i64,
                });
            }
        }
    }
    None
}

pub fn freeness_certificate(spec: &ArrangementSpec, dx: u32, dy: u32) -> FreenessCertificate {
    let mut h = vec![vec![0; dy as usize + 1]; dx as usize + 1];
    let mut g = h.clone();
    for d in 0..=dx {
        for e in 0..=dy {
            let s = ring_slice(spec, (d, e));
            h[d as usize][e as usize] = s.dim;
            g[d as usize][e as usize] = s.dim - s.dim_y;
        }
    }
    let first_discrepancy = hilbert_identity(&h, &g, spec.n);
    FreenessCertificate {
        dx,
        dy,
        h,
        g,
        first_discrepancy,
    }
}

/// `Σ t^{|e|}` over pairs `(e, f)` with `|[r] \ S_k(e,f)| ≥ m`, where
/// `S_k(e,f) = {j : e_j > 0} ∪ f([k])`; coefficients for `d ≤ dx`.
pub fn y_generic_enumerator(n: usize, l: usize, m: i64, r: usize, k: usize, dx: u32) -> Vec<u64> {
    let fs = all_functions(n, l);
    (0..=dx)
        .map(|d| {
            let es = compositions(n, d, 0);
            let mut count = 0u64;
            for e in &es {
                for f in &fs {
                    let missing = (0..r).filter(|&j| e.0[j] == 0 && !f[..k].contains(&j)).count();
                    if missing as i64 >= m {
                        count += 1;
                    }
                }
            }
            count
        })
        .collect()
}

/// Both computations of the generic `x`-degree Hilbert function.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenericHsReport {
    pub n: usize,
    pub l: usize,
    /// `n^l · C(d+n-1, n-1)`.
    pub formula: Vec<u64>,
    /// Pair count `(e, f)`.
    pub enumerator: Vec<u64>,
    /// `(1-s)^n h_d(s)` at `s = 1`, or `None` if it has not stabilized by `dy`.
    pub stabilized: Vec<Option<u64>>,
    /// The slice dimensions behind `stabilized`.
    pub hilbert: BivariateHilbert,
}

impl GenericHsReport {
    pub fn pass(&self) -> bool {
        self.formula == self.enumerator && self.stabilized.iter().zip(&self.formula).all(|(s, f)| *s == Some(*f))
    }

    pub fn to_json(&self) -> Value {
        json!({
            "check": "generic-hilbert",
            "spec": "Z",
            "n": self.n,
            "l": self.l,
            "Dx": self.hilbert.dx,
            "Dy": self.hilbert.dy,
            "pass": self.pass(),
            "formula": self.formula,
            "enumerator": self.enumerator,
            "stabilized": self.stabilized,
            "hilbert": self.hilbert.dims_json(),
        })
    }
}

/// `(1-s)^nv · Σ_e h[e] s^e`, truncated to the same length, evaluated at 1 if
/// the top coefficient vanishes.
pub(crate) fn stabilized_value(h: &[usize], nv: usize) -> Option<u64> {
    let mut c: Vec<i64> = h.iter().map(|&v| v as i64).collect();
    for _ in 0..nv {
        for e in (1..c.len()).rev() {
            c[e] -= c[e - 1];
        }
    }
    if c.last().copied().unwrap_or(0) != 0 || c.iter().any(|&v| v < 0) {
        return None;
    }
    Some(c.iter().sum::<i64>() as u64)
}

/// Generic Hilbert series of `Y(m,r,k)` (which is `Z(n,l)` for `m ≤ 0`),
/// computed from pair counting and from stabilized slice dimensions.
pub fn generic_hs_check_y(
    n: usize,
    l: usize,
    m: i64,
    r: usize,
    k: usize,
    dx: u32,
    dy: u32,
) -> Result<GenericHsReport, PolygraphError> {
    let spec = ArrangementSpec::y(n, l, m, r, k)?;
    let enumerator = y_generic_enumerator(n, l, m, r, k, dx);
    let hilbert = hilbert_series(&spec, dx, dy);
    let stabilized = (0..=dx)
        .map(|d| {
            let h: Vec<usize> = (0..=dy).map(|e| hilbert.get((d, e))).collect();
            stabilized_value(&h, n)
        })
        .collect();
    let formula = if m <= 0 {
        (0..=dx)
            .map(|d| (n as u64).pow(l as u32) * binom(d as u64 + n as u64 - 1, n as u64 - 1))
            .collect()
    } else {
        enumerator.clone()
    };
    Ok(GenericHsReport {
        n,
        l,
        formula,
        enumerator,
        stabilized,
        hilbert,
    })
}

/// Generic `x`-degree Hilbert function of `Z(n,l)` against `n^l/(1-t)^n`.
pub fn generic_hs_check(n: usize, l: usize, dx: u32, dy: u32) -> Result<GenericHsReport, PolygraphError> {
    generic_hs_check_y(n, l, 0, 0, 0, dx, dy)
}

/// One bidegree of an ideal in the full variable set.
#[derive(Clone, Debug)]
pub struct IdealSlice {
    columns: Vec<Exps>,
    index: FxHashMap<Exps, u32>,
    echelon: SparseEchelon,
}

impl IdealSlice {
    fn new(columns: Vec<Exps>) -> IdealSlice {
        let index = columns.iter().enumerate().map(|(i, e)| (*e, i as u32)).collect();
        let k = columns.len();
        IdealSlice {
            columns,
            index,
            echelon: SparseEchelon::new(k),
        }
    }

    fn vector(&self, p: &[(Exps, Rat)]) -> SparseVec {
        let mut v: SparseVec = p.iter().map(|(e, c)| (self.index[e], c.clone())).collect();
        v.sort_unstable_by_key(|t| t.0);
        v
    }

    pub fn dim(&self) -> usize {
        self.echelon.rank()
    }

    /// Number of monomials of this bidegree.
    pub fn ambient_dim(&self) -> usize {
        self.columns.len()
    }

    pub fn contains_packed(&mut self, p: &[(Exps, Rat)]) -> bool {
        let v = self.vector(p);
        self.echelon.contains(&v)
    }

    pub(crate) fn basis_packed(&self) -> Vec<Vec<(Exps, Rat)>> {
        self.echelon
            .rows()
            .iter()
            .map(|r| r.iter().map(|(c, a)| (self.columns[*c as usize], a.clone())).collect())
            .collect()
    }
}

/// Slices of a bihomogeneous ideal up to a truncation.
#[derive(Clone, Debug)]
pub struct BigradedIdeal {
    pub n: usize,
    pub l: usize,
    pub dx: u32,
    pub dy: u32,
    slices: BTreeMap<Bidegree, IdealSlice>,
}

impl BigradedIdeal {
    pub fn dim(&self, bd: Bidegree) -> usize {
        self.slices[&bd].dim()
    }

    pub fn codim(&self, bd: Bidegree) -> usize {
        let s = &self.slices[&bd];
        s.ambient_dim() - s.dim()
    }

    pub fn slice(&self, bd: Bidegree) -> &IdealSlice {
        &self.slices[&bd]
    }

    fn layout(&self) -> VarLayout {
        ArrangementSpec {
            n: self.n,
            l: self.l,
            components: vec![],
        }
        .layout()
    }

    /// Membership of a bihomogeneous polynomial within the truncation.
    pub fn contains(&mut self, p: &MPoly) -> bool {
        if p.is_zero() {
            return true;
        }
        let spec = ArrangementSpec {
            n: self.n,
            l: self.l,
            components: vec![],
        };
        let packed = self
            .layout()
            .pack_poly(p)
            .expect("polynomial in the arrangement variables");
        let bd = spec.bidegree_of(&packed[0].0);
        self.slices
            .get_mut(&bd)
            .expect("bidegree within truncation")
            .contains_packed(&packed)
    }

    /// Row-reduced basis of one slice.
    pub fn basis(&self, bd: Bidegree) -> Vec<MPoly> {
        let lay = self.layout();
        self.slices[&bd]
            .basis_packed()
            .iter()
            .map(|p| lay.unpack_poly(p.iter().map(|(e, c)| (e, c))))
            .collect()
    }

    /// Whether each variable times each slice lands in the next slice, within
    /// the truncation.
    pub fn is_closed_under_variables(&mut self) -> bool {
        let h = self.n + self.l;
        let keys: Vec<Bidegree> = self.slices.keys().copied().collect();
        for bd in keys {
            let basis = self.slices[&bd].basis_packed();
            for v in 0..2 * h {
                let target = if v < h { (bd.0 + 1, bd.1) } else { (bd.0, bd.1 + 1) };
                let Some(ts) = self.slices.get_mut(&target) else {
                    continue;
                };
                for b in &basis {
                    let moved: Vec<_> = b.iter().map(|(e, c)| (e.with(v, e.0[v] + 1), c.clone())).collect();
                    if !ts.contains_packed(&moved) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Slice-wise containment in another ideal over the same variables.
    pub fn is_subset_of(&self, other: &mut BigradedIdeal) -> bool {
        self.slices.iter().all(|(bd, s)| match other.slices.get_mut(bd) {
            Some(o) => s.basis_packed().iter().all(|b| o.contains_packed(b)),
            None => true,
        })
    }
}

/// The ideal slice of a single component: linear generators times monomials.
pub fn component_ideal(n: usize, l: usize, c: &Component, bd: Bidegree) -> Result<IdealSlice, PolygraphError> {
    let spec = ArrangementSpec::new(n, l, vec![c.clone()])?;
    let h = spec.half();
    let mut slice = IdealSlice::new(spec.domain_monomials(bd));
    let one = Rat::from_int(1);
    let unit = |s: usize| Exps::default().with(s, 1);
    // Linear generators with their bidegree.
    let mut gens: Vec<(Vec<(Exps, Rat)>, Bidegree)> = Vec::new();
    for i in 0..l {
        let j = c.f[i];
        gens.push((vec![(unit(n + i), one.clone()), (unit(j), -one.clone())], (1, 0)));
        gens.push((
            vec![(unit(h + n + i), one.clone()), (unit(h + j), -one.clone())],
            (0, 1),
        ));
    }
    for &j in &c.t {
        gens.push((vec![(unit(j), one.clone())], (1, 0)));
    }
    for (g, gd) in gens {
        if gd.0 > bd.0 || gd.1 > bd.1 {
            continue;
        }
        for m in spec.domain_monomials((bd.0 - gd.0, bd.1 - gd.1)) {
            let p: Vec<_> = g.iter().map(|(e, a)| (e.mul(&m), a.clone())).collect();
            let v = slice.vector(&p);
            slice.echelon.insert(&v);
        }
    }
    Ok(slice)
}

/// Ideal of the arrangement up to `(dx, dy)`: per slice, the common kernel of
/// all component restrictions, found by echelonizing `[Φ(m) | e_m]`.
pub fn arrangement_ideal(spec: &ArrangementSpec, dx: u32, dy: u32) -> BigradedIdeal {
    let mut slices = BTreeMap::new();
    for d in 0..=dx {
        for e in 0..=dy {
            slices.insert((d, e), ideal_slice(spec, (d, e)));
        }
    }
    BigradedIdeal {
        n: spec.n,
        l: spec.l,
        dx,
        dy,
        slices,
    }
}

pub(crate) fn ideal_slice(spec: &ArrangementSpec, bd: Bidegree) -> IdealSlice {
    let spec_min = spec.minimal();
    let cols = spec.domain_monomials(bd);
    let idx = ImageIndex::new(spec.n, spec_min.components.len(), bd);
    let off = idx.ncols() as u32;
    let mut aug = SparseEchelon::new(idx.ncols() + cols.len());
    for (i, m) in cols.iter().enumerate() {
        let mut v = image_vector(&spec_min, &idx, &[(*m, Rat::from_int(1))]);
        v.push((off + i as u32, Rat::from_int(1)));
        aug.insert(&v);
    }
    let mut slice = IdealSlice::new(cols);
    for (row, &p) in aug.rows().iter().zip(aug.pivots()) {
        if p >= off {
            let v: SparseVec = row.iter().map(|(c, a)| (c - off, a.clone())).collect();
            slice.echelon.insert(&v);
        }
    }
    slice
}

/// Fails if the parameters do not describe a valid arrangement.
/// Checks `(n, l)` before any computation: at least one point, and few
/// enough variables to pack.
pub fn validate(n: usize, l: usize) -> Result<(), PolygraphError> {
    if n == 0 {
        return Err(PolygraphError::InvalidParameters("need at least one point".into()));
    }
    ArrangementSpec::check_size(n, l)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn one_point_is_a_plane() {
        let spec = ArrangementSpec::z(1, 0).unwrap();
        let hs = hilbert_series(&spec, 3, 3);
        assert!(hs.dims.values().all(|&v| v == 1));
        let spec = ArrangementSpec::z(1, 2).unwrap();
        assert!(hilbert_series(&spec, 3, 3).dims.values().all(|&v| v == 1));
    }

    #[test]
    fn component_examples() {
        let c = Component { f: vec![0], t: vec![] };
        let s = component_ideal(1, 1, &c, (1, 0)).unwrap();
        assert_eq!(s.dim(), 1);
        let c = Component { f: vec![1], t: vec![] };
        let s = component_ideal(2, 1, &c, (0, 1)).unwrap();
        assert_eq!(s.dim(), 1);
        let c = Component { f: vec![], t: vec![0] };
        let s = component_ideal(2, 0, &c, (1, 0)).unwrap();
        assert_eq!(s.dim(), 1);
    }

    #[test]
    fn kernel_matches_generators() {
        let spec = ArrangementSpec::z(2, 1).unwrap();
        let mut z = arrangement_ideal(&spec, 2, 2);
        assert!(z.is_closed_under_variables());
        for c in &spec.components {
            for d in 0..=2 {
                for e in 0..=2 {
                    let mut ci = component_ideal(2, 1, c, (d, e)).unwrap();
                    let ck = ideal_slice(&ArrangementSpec::new(2, 1, vec![c.clone()]).unwrap(), (d, e));
                    assert_eq!(ci.dim(), ck.dim());
                    assert!(z.slice((d, e)).basis_packed().iter().all(|b| ci.contains_packed(b)));
                }
            }
        }
    }

    #[test]
    fn y_edge_cases() {
        assert_eq!(
            ArrangementSpec::y(2, 1, 0, 1, 1).unwrap(),
            ArrangementSpec::z(2, 1).unwrap()
        );
        assert!(ArrangementSpec::y(2, 1, 2, 1, 0).unwrap().components.is_empty());
        assert_eq!(y_generic_enumerator(2, 1, 3, 2, 0, 3), vec![0, 0, 0, 0]);
    }

    #[test]
    fn small_freeness() {
        let spec = ArrangementSpec::z(2, 1).unwrap();
        assert!(freeness_certificate(&spec, 3, 3).pass());
        let r = generic_hs_check(2, 1, 3, 4).unwrap();
        assert!(r.pass(), "{r:?}");
        assert_eq!(r.formula[..2], [2, 4]);
    }
}
