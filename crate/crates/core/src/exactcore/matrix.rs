//! Dense exact matrices and fraction-free (Bareiss) elimination.

use std::fmt::Debug;
use std::ops::{Add, Div, Index, IndexMut, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::zpoly::ZPoly2;
use super::{ExactError, Rat, RatFunc};

/// Exact field arithmetic shared by [`Rat`] and [`RatFunc`].
pub trait Field:
    Clone
    + PartialEq
    + Debug
    + Zero
    + One
    + Neg<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
    + for<'a> Div<&'a Self, Output = Self>
{
}

impl Field for Rat {}
impl Field for RatFunc {}

/// An integral domain with exact division, used by Bareiss elimination.
pub trait BareissRing: Clone + PartialEq + Debug {
    fn ring_zero() -> Self;
    fn ring_one() -> Self;
    fn is_zero(&self) -> bool;
    fn mul(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Exact quotient; panics if the division is not exact.
    fn div_exact(&self, o: &Self) -> Self;
    /// Pivot preference: smaller is better.
    fn size(&self) -> usize;
}

impl BareissRing for BigInt {
    fn ring_zero() -> Self {
        Zero::zero()
    }
    fn ring_one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn div_exact(&self, o: &Self) -> Self {
        let (q, r) = self.div_rem(o);
        assert!(Zero::is_zero(&r), "inexact integer division in elimination");
        q
    }
    fn size(&self) -> usize {
        self.bits() as usize
    }
}

impl BareissRing for ZPoly2 {
    fn ring_zero() -> Self {
        ZPoly2::zero()
    }
    fn ring_one() -> Self {
        ZPoly2::one()
    }
    fn is_zero(&self) -> bool {
        ZPoly2::is_zero(self)
    }
    fn mul(&self, o: &Self) -> Self {
        ZPoly2::mul(self, o)
    }
    fn sub(&self, o: &Self) -> Self {
        ZPoly2::sub(self, o)
    }
    fn neg(&self) -> Self {
        ZPoly2::neg(self)
    }
    fn div_exact(&self, o: &Self) -> Self {
        self.exact_div(o).expect("inexact polynomial division in elimination")
    }
    fn size(&self) -> usize {
        self.nterms() * 64
            + self
                .0
                .iter()
                .flat_map(|u| u.0.iter())
                .map(|c| c.bits() as usize)
                .max()
                .unwrap_or(0)
    }
}

/// A field whose rows can be cleared of denominators into a [`BareissRing`].
pub trait FractionFree: Field {
    type Ring: BareissRing;
    /// Scales a row by a nonzero field element so every entry lies in the ring.
    fn clear_row(row: &[Self]) -> Vec<Self::Ring>;
    fn from_ring(r: &Self::Ring) -> Self;
}

impl FractionFree for Rat {
    type Ring = BigInt;
    fn clear_row(row: &[Rat]) -> Vec<BigInt> {
        let mut l = BigInt::one();
        for x in row {
            if !x.is_zero() {
                l = l.lcm(&x.denom());
            }
        }
        row.iter().map(|x| x.numer() * (&l / x.denom())).collect()
    }
    fn from_ring(r: &BigInt) -> Rat {
        Rat::from_bigint(r.clone())
    }
}

impl FractionFree for RatFunc {
    type Ring = ZPoly2;
    fn clear_row(row: &[RatFunc]) -> Vec<ZPoly2> {
        let nz: Vec<&RatFunc> = row.iter().filter(|x| !x.is_zero()).collect();
        if nz.is_empty() {
            return vec![ZPoly2::zero(); row.len()];
        }
        let mut den = ZPoly2::one();
        let mut lcm_c = BigInt::one();
        let (mut mq, mut mt) = (i32::MAX, i32::MAX);
        for x in &nz {
            let (c, sq, st, _, d) = x.parts();
            lcm_c = lcm_c.lcm(&c.denom());
            mq = mq.min(sq);
            mt = mt.min(st);
            if !d.is_one() {
                let g = den.gcd(d);
                den = den.mul(&d.exact_div(&g).unwrap());
            }
        }
        row.iter()
            .map(|x| {
                if x.is_zero() {
                    return ZPoly2::zero();
                }
                let (c, sq, st, n, d) = x.parts();
                let k = c.numer() * (&lcm_c / c.denom());
                let cof = if d.is_one() {
                    den.clone()
                } else {
                    den.exact_div(d).unwrap()
                };
                n.mul(&cof).scale(&k).shift((sq - mq) as usize, (st - mt) as usize)
            })
            .collect()
    }
    fn from_ring(r: &ZPoly2) -> RatFunc {
        RatFunc::from_zpoly(r.clone())
    }
}

/// A dense row-major matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Clone> Matrix<T> {
    pub fn filled(rows: usize, cols: usize, v: T) -> Matrix<T> {
        Matrix {
            rows,
            cols,
            data: vec![v; rows * cols],
        }
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Matrix<T>, ExactError> {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        if rows.iter().any(|x| x.len() != c) {
            return Err(ExactError::Shape("ragged rows".into()));
        }
        Ok(Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    /// A matrix with `cols` columns and no rows.
    pub fn empty(cols: usize) -> Matrix<T> {
        Matrix {
            rows: 0,
            cols,
            data: Vec::new(),
        }
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn rows_vec(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Matrix<T> {
        let mut data = Vec::with_capacity(self.data.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                data.push(self[(i, j)].clone());
            }
        }
        Matrix {
            rows: self.cols,
            cols: self.rows,
            data,
        }
    }

    /// Stacks the rows of `o` below `self`.
    pub fn vstack(&self, o: &Matrix<T>) -> Result<Matrix<T>, ExactError> {
        if self.cols != o.cols {
            return Err(ExactError::Shape(format!("{} vs {} columns", self.cols, o.cols)));
        }
        let mut data = self.data.clone();
        data.extend(o.data.iter().cloned());
        Ok(Matrix {
            rows: self.rows + o.rows,
            cols: self.cols,
            data,
        })
    }
}

impl<T: Field> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Matrix<T> {
        Matrix::filled(rows, cols, T::zero())
    }

    pub fn mul_vec(&self, v: &[T]) -> Vec<T> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                let mut acc = T::zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc = acc + &(a.clone() * b);
                    }
                }
                acc
            })
            .collect()
    }

    pub fn matmul(&self, o: &Matrix<T>) -> Result<Matrix<T>, ExactError> {
        if self.cols != o.rows {
            return Err(ExactError::Shape("incompatible product".into()));
        }
        let mut m: Matrix<T> = Matrix::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let b = &o[(k, j)];
                    if !b.is_zero() {
                        m[(i, j)] = m[(i, j)].clone() + &(a.clone() * b);
                    }
                }
            }
        }
        Ok(m)
    }
}

impl<T> Index<(usize, usize)> for Matrix<T> {
    type Output = T;
    fn index(&self, (i, j): (usize, usize)) -> &T {
        &self.data[i * self.cols + j]
    }
}

impl<T> IndexMut<(usize, usize)> for Matrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        &mut self.data[i * self.cols + j]
    }
}

/// Row-echelon form produced by fraction-free elimination.
#[derive(Clone, Debug)]
pub struct BareissEchelon<R> {
    /// Nonzero rows of the echelon form, in pivot order.
    pub rows: Vec<Vec<R>>,
    /// Pivot column of each row.
    pub pivots: Vec<usize>,
    pub ncols: usize,
    /// Indices of the original rows, in elimination order.
    pub row_order: Vec<usize>,
}

impl<R: BareissRing> BareissEchelon<R> {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// The last pivot: the determinant of the pivot minor (up to sign).
    pub fn last_pivot(&self) -> R {
        match self.rows.last() {
            Some(r) => r[*self.pivots.last().unwrap()].clone(),
            None => R::ring_one(),
        }
    }

    pub fn free_columns(&self) -> Vec<usize> {
        let mut is_piv = vec![false; self.ncols];
        for &p in &self.pivots {
            is_piv[p] = true;
        }
        (0..self.ncols).filter(|&j| !is_piv[j]).collect()
    }

    /// Ring kernel vector with `free` set to the last pivot and the other free
    /// columns set to zero.
    pub fn ring_kernel_vector(&self, free: usize) -> Vec<R> {
        let d = self.last_pivot();
        let mut v = vec![R::ring_zero(); self.ncols];
        v[free] = d;
        for k in (0..self.rank()).rev() {
            let p = self.pivots[k];
            let row = &self.rows[k];
            let mut s = R::ring_zero();
            for j in p + 1..self.ncols {
                if !row[j].is_zero() && !v[j].is_zero() {
                    s = s.sub(&row[j].mul(&v[j]).neg());
                }
            }
            v[p] = if s.is_zero() {
                R::ring_zero()
            } else {
                s.neg().div_exact(&row[p])
            };
        }
        v
    }
}

/// Fraction-free row echelon form of an integral matrix.
pub fn bareiss<R: BareissRing>(mut a: Vec<Vec<R>>, ncols: usize) -> BareissEchelon<R> {
    let nrows = a.len();
    let mut order: Vec<usize> = (0..nrows).collect();
    let mut prev = R::ring_one();
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        if r == nrows {
            break;
        }
        let mut best: Option<(usize, usize)> = None;
        for (i, row) in a.iter().enumerate().skip(r) {
            if !row[col].is_zero() {
                let s = row[col].size();
                if best.is_none_or(|(_, bs)| s < bs) {
                    best = Some((i, s));
                }
            }
        }
        let Some((p, _)) = best else { continue };
        a.swap(r, p);
        order.swap(r, p);
        let (top, bottom) = a.split_at_mut(r + 1);
        let prow = &top[r];
        let piv = &prow[col];
        for row in bottom.iter_mut() {
            let f = std::mem::replace(&mut row[col], R::ring_zero());
            for j in col + 1..ncols {
                let x = if f.is_zero() {
                    if row[j].is_zero() {
                        continue;
                    }
                    piv.mul(&row[j])
                } else if row[j].is_zero() {
                    if prow[j].is_zero() {
                        continue;
                    }
                    f.mul(&prow[j]).neg()
                } else if prow[j].is_zero() {
                    piv.mul(&row[j])
                } else {
                    piv.mul(&row[j]).sub(&f.mul(&prow[j]))
                };
                row[j] = if x.is_zero() { x } else { x.div_exact(&prev) };
            }
        }
        prev = piv.clone();
        pivots.push(col);
        r += 1;
    }
    a.truncate(r);
    BareissEchelon {
        rows: a,
        pivots,
        ncols,
        row_order: order,
    }
}

fn to_ring<T: FractionFree>(m: &Matrix<T>) -> Vec<Vec<T::Ring>> {
    (0..m.nrows()).map(|i| T::clear_row(m.row(i))).collect()
}

/// Fraction-free echelon form of a field matrix (rows cleared of denominators).
pub fn echelon<T: FractionFree>(m: &Matrix<T>) -> BareissEchelon<T::Ring> {
    bareiss(to_ring(m), m.ncols())
}

pub fn rank<T: FractionFree>(m: &Matrix<T>) -> usize {
    echelon(m).rank()
}

/// Basis of the right kernel `{v : M v = 0}`.
///
/// One vector per non-pivot column `f`, with entry 1 at `f` and 0 at the other
/// non-pivot columns: the same basis reduced row echelon form yields.
pub fn kernel_basis<T: FractionFree>(m: &Matrix<T>) -> Vec<Vec<T>> {
    let e = echelon(m);
    kernel_from_echelon(&e)
}

pub(crate) fn kernel_from_echelon<T: FractionFree>(e: &BareissEchelon<T::Ring>) -> Vec<Vec<T>> {
    e.free_columns()
        .into_iter()
        .map(|f| {
            let v = e.ring_kernel_vector(f);
            let d = T::from_ring(&v[f]);
            v.iter()
                .map(|x| if x.is_zero() { T::zero() } else { T::from_ring(x) / &d })
                .collect()
        })
        .collect()
}

/// A solution set `particular + span(kernel)`.
#[derive(Clone, Debug, PartialEq)]
pub struct Solution<T> {
    pub particular: Vec<T>,
    pub kernel: Vec<Vec<T>>,
}

/// Solves `M x = b`. Returns `Err(Inconsistent)` if there is no solution.
pub fn solve_linear<T: FractionFree>(m: &Matrix<T>, b: &[T]) -> Result<Solution<T>, ExactError> {
    if b.len() != m.nrows() {
        return Err(ExactError::Shape("right-hand side length".into()));
    }
    let n = m.ncols();
    let aug: Vec<Vec<T::Ring>> = (0..m.nrows())
        .map(|i| {
            let mut row = m.row(i).to_vec();
            row.push(b[i].clone());
            T::clear_row(&row)
        })
        .collect();
    let e = bareiss(aug, n + 1);
    if e.pivots.last() == Some(&n) {
        return Err(ExactError::Inconsistent);
    }
    let v = e.ring_kernel_vector(n);
    let d = -T::from_ring(&v[n]);
    let particular = v[..n]
        .iter()
        .map(|x| if x.is_zero() { T::zero() } else { T::from_ring(x) / &d })
        .collect();
    let kernel = kernel_from_echelon::<T>(&e)
        .into_iter()
        .filter(|k| k[n].is_zero())
        .map(|mut k| {
            k.truncate(n);
            k
        })
        .collect();
    Ok(Solution { particular, kernel })
}

/// Determinant of a square matrix.
pub fn determinant<T: FractionFree>(m: &Matrix<T>) -> Result<T, ExactError> {
    if m.nrows() != m.ncols() {
        return Err(ExactError::Shape("determinant of non-square matrix".into()));
    }
    let n = m.nrows();
    // Clearing row denominators scales the determinant; undo it afterwards.
    let mut scale = T::one();
    let mut ring = Vec::with_capacity(n);
    for i in 0..n {
        let row = m.row(i);
        let cleared = T::clear_row(row);
        if let Some(j) = (0..n).find(|&j| !row[j].is_zero()) {
            scale = scale * &(T::from_ring(&cleared[j]) / &row[j]);
        }
        ring.push(cleared);
    }
    let e = bareiss(ring, n);
    if e.rank() < n {
        return Ok(T::zero());
    }
    let sign = permutation_sign(&e.row_order);
    let d = T::from_ring(&e.last_pivot()) / &scale;
    Ok(if sign < 0 { -d } else { d })
}

fn permutation_sign(p: &[usize]) -> i32 {
    let mut seen = vec![false; p.len()];
    let mut sign = 1;
    for i in 0..p.len() {
        if seen[i] {
            continue;
        }
        let mut j = i;
        let mut len = 0;
        while !seen[j] {
            seen[j] = true;
            j = p[j];
            len += 1;
        }
        if len % 2 == 0 {
            sign = -sign;
        }
    }
    sign
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> Matrix<Rat> {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| Rat::from_int(x)).collect())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn kernel_of_rank_one() {
        let a = m(&[&[1, 2, 3], &[2, 4, 6]]);
        let k = kernel_basis(&a);
        assert_eq!(k.len(), 2);
        for v in &k {
            assert!(a.mul_vec(v).iter().all(|x| x.is_zero()));
        }
        assert_eq!(k[0], vec![Rat::from_int(-2), Rat::one(), Rat::zero()]);
    }

    #[test]
    fn solve_and_detect_inconsistency() {
        let a = m(&[&[2, 1], &[1, 3]]);
        let s = solve_linear(&a, &[Rat::from_int(3), Rat::from_int(4)]).unwrap();
        assert_eq!(s.particular, vec![Rat::one(), Rat::one()]);
        assert!(s.kernel.is_empty());
        let sing = m(&[&[1, 1], &[1, 1]]);
        assert_eq!(
            solve_linear(&sing, &[Rat::one(), Rat::zero()]),
            Err(ExactError::Inconsistent)
        );
    }

    #[test]
    fn determinant_with_row_swaps() {
        let a = m(&[&[0, 1, 2], &[3, 0, 1], &[1, 1, 0]]);
        assert_eq!(determinant(&a).unwrap(), Rat::from_int(7));
        let b = Matrix::from_rows(vec![vec![Rat::new(1, 2), Rat::one()], vec![Rat::one(), Rat::new(1, 3)]]).unwrap();
        assert_eq!(determinant(&b).unwrap(), Rat::new(-5, 6));
    }

    #[test]
    fn ratfunc_kernel() {
        let q = RatFunc::q();
        let t = RatFunc::t();
        let a = Matrix::from_rows(vec![vec![q.clone(), t.clone(), RatFunc::one()]]).unwrap();
        let k = kernel_basis(&a);
        assert_eq!(k.len(), 2);
        assert_eq!(k[0][0], -(t / &q));
    }
}
