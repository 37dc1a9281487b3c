//! Dense integer polynomials in `t` and in `(q, t)`.
//!
//! These back the rational-function field and the fraction-free
//! elimination; they are not part of the public surface.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Prime for the modular degree tests.
const P: u64 = (1 << 61) - 1;

/// Past this many bits of evaluated integers the heuristic gcd gives way to
/// the remainder sequence.
const HEURISTIC_BITS: usize = 1 << 20;

fn modp(c: &BigInt) -> u64 {
    c.mod_floor(&BigInt::from(P)).to_u64().expect("reduced below P")
}

fn mulmod(a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % P as u128) as u64
}

fn invmod(a: u64) -> u64 {
    let (mut base, mut e, mut r) = (a, P - 2, 1);
    while e > 0 {
        if e & 1 == 1 {
            r = mulmod(r, base);
        }
        base = mulmod(base, base);
        e >>= 1;
    }
    r
}

/// Degree of the gcd in `F_P[x]` of two ascending coefficient vectors.
/// Neither input may reduce to zero.
fn gcd_degree_modp(mut a: Vec<u64>, mut b: Vec<u64>) -> usize {
    let trim = |v: &mut Vec<u64>| {
        while v.last() == Some(&0) {
            v.pop();
        }
    };
    trim(&mut a);
    trim(&mut b);
    while !b.is_empty() {
        let inv = invmod(*b.last().unwrap());
        while a.len() >= b.len() {
            let f = mulmod(*a.last().unwrap(), inv);
            let k = a.len() - b.len();
            for (i, &c) in b.iter().enumerate() {
                a[k + i] = (a[k + i] + P - mulmod(f, c)) % P;
            }
            trim(&mut a);
        }
        std::mem::swap(&mut a, &mut b);
    }
    a.len() - 1
}

/// Polynomial in `t` with integer coefficients, ascending, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct UPoly(pub Vec<BigInt>);

impl UPoly {
    pub fn zero() -> UPoly {
        UPoly(Vec::new())
    }

    pub fn constant(c: BigInt) -> UPoly {
        let mut p = UPoly(vec![c]);
        p.trim();
        p
    }

    pub fn one() -> UPoly {
        UPoly(vec![BigInt::one()])
    }

    fn trim(&mut self) {
        while self.0.last().is_some_and(|c| c.is_zero()) {
            self.0.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.0.len() == 1 && self.0[0].is_one()
    }

    pub fn degree(&self) -> isize {
        self.0.len() as isize - 1
    }

    pub fn lead(&self) -> &BigInt {
        self.0.last().expect("zero polynomial has no leading coefficient")
    }

    pub fn add(&self, o: &UPoly) -> UPoly {
        let n = self.0.len().max(o.0.len());
        let mut v = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.0.get(i);
            let b = o.0.get(i);
            v.push(match (a, b) {
                (Some(a), Some(b)) => a + b,
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                _ => unreachable!(),
            });
        }
        let mut p = UPoly(v);
        p.trim();
        p
    }

    pub fn neg(&self) -> UPoly {
        UPoly(self.0.iter().map(|c| -c).collect())
    }

    pub fn sub(&self, o: &UPoly) -> UPoly {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &UPoly) -> UPoly {
        if self.is_zero() || o.is_zero() {
            return UPoly::zero();
        }
        let mut v = vec![BigInt::zero(); self.0.len() + o.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.0.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        let mut p = UPoly(v);
        p.trim();
        p
    }

    pub fn scale(&self, c: &BigInt) -> UPoly {
        if c.is_zero() {
            return UPoly::zero();
        }
        UPoly(self.0.iter().map(|a| a * c).collect())
    }

    pub fn shift(&self, k: usize) -> UPoly {
        if self.is_zero() {
            return UPoly::zero();
        }
        let mut v = vec![BigInt::zero(); k];
        v.extend(self.0.iter().cloned());
        UPoly(v)
    }

    /// Exact quotient, or `None` if `o` does not divide `self` over ℤ.
    pub fn exact_div(&self, o: &UPoly) -> Option<UPoly> {
        assert!(!o.is_zero(), "division by zero polynomial");
        if self.is_zero() {
            return Some(UPoly::zero());
        }
        if o.0.len() == 1 {
            let d = &o.0[0];
            let mut v = Vec::with_capacity(self.0.len());
            for c in &self.0 {
                let (qq, r) = c.div_rem(d);
                if !r.is_zero() {
                    return None;
                }
                v.push(qq);
            }
            return Some(UPoly(v));
        }
        let mut r = self.0.clone();
        let db = o.0.len() - 1;
        if r.len() - 1 < db {
            return None;
        }
        let mut quot = vec![BigInt::zero(); r.len() - db];
        let lb = o.lead();
        for k in (0..quot.len()).rev() {
            let c = &r[k + db];
            if c.is_zero() {
                continue;
            }
            let (qq, rem) = c.div_rem(lb);
            if !rem.is_zero() {
                return None;
            }
            for (j, b) in o.0.iter().enumerate() {
                r[k + j] -= &qq * b;
            }
            quot[k] = qq;
        }
        if r.iter().any(|c| !c.is_zero()) {
            return None;
        }
        let mut p = UPoly(quot);
        p.trim();
        Some(p)
    }

    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.0 {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    pub fn primitive(&self) -> UPoly {
        if self.is_zero() {
            return UPoly::zero();
        }
        let mut c = self.content();
        if self.lead().is_negative() {
            c = -c;
        }
        UPoly(self.0.iter().map(|a| a / &c).collect())
    }

    fn prem(&self, o: &UPoly) -> UPoly {
        let mut r = self.clone();
        let db = o.degree();
        let lb = o.lead().clone();
        while !r.is_zero() && r.degree() >= db {
            let k = (r.degree() - db) as usize;
            let lr = r.lead().clone();
            r = r.scale(&lb).sub(&o.shift(k).scale(&lr));
        }
        r
    }

    /// Gcd over ℤ\[t\], normalized to a positive leading coefficient.
    pub fn gcd(&self, o: &UPoly) -> UPoly {
        if self.is_zero() {
            return o.primitive_with_content();
        }
        if o.is_zero() {
            return self.primitive_with_content();
        }
        let c = self.content().gcd(&o.content());
        let bound = self.gcd_degree_bound(o);
        if self.degree() == 0 || o.degree() == 0 || bound == Some(0) {
            return UPoly::constant(c);
        }
        let (a, b) = (self.primitive(), o.primitive());
        let g = bound
            .and_then(|d| UPoly::heuristic_gcd(&a, &b, d))
            .unwrap_or_else(|| UPoly::prs_gcd(a, b));
        g.scale(&c)
    }

    /// Primitive remainder sequence for primitive, nonzero inputs.
    fn prs_gcd(mut a: UPoly, mut b: UPoly) -> UPoly {
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            if b.degree() == 0 {
                return UPoly::one();
            }
            let r = a.prem(&b);
            a = b;
            b = r.primitive();
        }
        a.primitive()
    }

    /// Upper bound on the degree of the gcd from the images mod `P`, when
    /// `P` keeps both leading coefficients.
    fn gcd_degree_bound(&self, o: &UPoly) -> Option<usize> {
        let (la, lb) = (modp(self.lead()), modp(o.lead()));
        (la != 0 && lb != 0).then(|| gcd_degree_modp(self.0.iter().map(modp).collect(), o.0.iter().map(modp).collect()))
    }

    fn max_norm(&self) -> BigInt {
        self.0.iter().map(|c| c.abs()).max().unwrap_or_default()
    }

    fn eval_big(&self, x: &BigInt) -> BigInt {
        self.0.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    /// Reads `v` as digits in base `xi`, each in the symmetric range.
    fn from_xi_adic(mut v: BigInt, xi: &BigInt) -> UPoly {
        let half = xi / 2;
        let mut out = Vec::new();
        while !v.is_zero() {
            let mut r = v.mod_floor(xi);
            if r > half {
                r -= xi;
            }
            v = (v - &r) / xi;
            out.push(r);
        }
        let mut p = UPoly(out);
        p.trim();
        p
    }

    /// Heuristic gcd of primitive polynomials: evaluate at a large integer,
    /// take the integer gcd and read it back in that base. A candidate is
    /// kept only if it divides both inputs and reaches the degree bound
    /// `bound`, which makes it the gcd.
    fn heuristic_gcd(a: &UPoly, b: &UPoly, bound: usize) -> Option<UPoly> {
        let mut xi: BigInt = a.max_norm().min(b.max_norm()) * 2 + 29;
        for _ in 0..6 {
            if xi.bits() as usize * (a.0.len() + b.0.len()) > HEURISTIC_BITS {
                return None;
            }
            let g = a.eval_big(&xi).gcd(&b.eval_big(&xi));
            let cand = UPoly::from_xi_adic(g, &xi).primitive();
            if cand.degree() == bound as isize && a.exact_div(&cand).is_some() && b.exact_div(&cand).is_some() {
                return Some(cand);
            }
            xi = xi * 73_794 / 27_011;
        }
        None
    }

    /// Value at `t0` mod `P`.
    fn eval_modp(&self, t0: u64) -> u64 {
        self.0.iter().rev().fold(0, |acc, c| (mulmod(acc, t0) + modp(c)) % P)
    }

    fn primitive_with_content(&self) -> UPoly {
        if self.is_zero() {
            return UPoly::zero();
        }
        if self.lead().is_negative() {
            self.neg()
        } else {
            self.clone()
        }
    }
}

/// Polynomial in `q` whose coefficients are [`UPoly`]s in `t`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct ZPoly2(pub Vec<UPoly>);

impl ZPoly2 {
    pub fn zero() -> ZPoly2 {
        ZPoly2(Vec::new())
    }

    pub fn one() -> ZPoly2 {
        ZPoly2(vec![UPoly::one()])
    }

    pub fn constant(c: BigInt) -> ZPoly2 {
        let mut p = ZPoly2(vec![UPoly::constant(c)]);
        p.trim();
        p
    }

    /// `c * q^i * t^j`.
    pub fn monomial(c: BigInt, i: usize, j: usize) -> ZPoly2 {
        let mut p = ZPoly2::zero();
        p.add_coeff(i, j, &c);
        p
    }

    fn trim(&mut self) {
        while self.0.last().is_some_and(|c| c.is_zero()) {
            self.0.pop();
        }
    }

    pub fn add_coeff(&mut self, i: usize, j: usize, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        if self.0.len() <= i {
            self.0.resize(i + 1, UPoly::zero());
        }
        let u = &mut self.0[i].0;
        if u.len() <= j {
            u.resize(j + 1, BigInt::zero());
        }
        u[j] += c;
        self.0[i].trim();
        self.trim();
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.0.len() == 1 && self.0[0].is_one()
    }

    pub fn deg_q(&self) -> isize {
        self.0.len() as isize - 1
    }

    pub fn deg_t(&self) -> isize {
        self.0.iter().map(|u| u.degree()).max().unwrap_or(-1)
    }

    pub fn is_constant(&self) -> bool {
        self.0.len() <= 1 && self.0.first().is_none_or(|u| u.0.len() <= 1)
    }

    /// Number of nonzero terms.
    pub fn nterms(&self) -> usize {
        self.0.iter().map(|u| u.0.iter().filter(|c| !c.is_zero()).count()).sum()
    }

    /// `(i, j, coeff)` for every nonzero coefficient of `q^i t^j`.
    pub fn iter_terms(&self) -> impl Iterator<Item = (usize, usize, &BigInt)> {
        self.0.iter().enumerate().flat_map(|(i, u)| {
            u.0.iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(move |(j, c)| (i, j, c))
        })
    }

    pub fn add(&self, o: &ZPoly2) -> ZPoly2 {
        let n = self.0.len().max(o.0.len());
        let mut v = Vec::with_capacity(n);
        for i in 0..n {
            v.push(match (self.0.get(i), o.0.get(i)) {
                (Some(a), Some(b)) => a.add(b),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                _ => unreachable!(),
            });
        }
        let mut p = ZPoly2(v);
        p.trim();
        p
    }

    pub fn neg(&self) -> ZPoly2 {
        ZPoly2(self.0.iter().map(|u| u.neg()).collect())
    }

    pub fn sub(&self, o: &ZPoly2) -> ZPoly2 {
        let n = self.0.len().max(o.0.len());
        let mut v = Vec::with_capacity(n);
        for i in 0..n {
            v.push(match (self.0.get(i), o.0.get(i)) {
                (Some(a), Some(b)) => a.sub(b),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.neg(),
                _ => unreachable!(),
            });
        }
        let mut p = ZPoly2(v);
        p.trim();
        p
    }

    pub fn mul(&self, o: &ZPoly2) -> ZPoly2 {
        if self.is_zero() || o.is_zero() {
            return ZPoly2::zero();
        }
        // flatten to a dense grid; faster than nested UPoly products
        let (ta, tb) = (self.deg_t() as usize + 1, o.deg_t() as usize + 1);
        let tw = ta + tb - 1;
        let mut grid = vec![BigInt::zero(); (self.0.len() + o.0.len() - 1) * tw];
        for (i, u) in self.0.iter().enumerate() {
            for (j, a) in u.0.iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                for (k, w) in o.0.iter().enumerate() {
                    let base = (i + k) * tw + j;
                    for (l, b) in w.0.iter().enumerate() {
                        if !b.is_zero() {
                            grid[base + l] += a * b;
                        }
                    }
                }
            }
        }
        let mut v = Vec::with_capacity(self.0.len() + o.0.len() - 1);
        for row in grid.chunks(tw) {
            let mut u = UPoly(row.to_vec());
            u.trim();
            v.push(u);
        }
        let mut p = ZPoly2(v);
        p.trim();
        p
    }

    pub fn scale(&self, c: &BigInt) -> ZPoly2 {
        if c.is_zero() {
            return ZPoly2::zero();
        }
        ZPoly2(self.0.iter().map(|u| u.scale(c)).collect())
    }

    pub fn mul_upoly(&self, c: &UPoly) -> ZPoly2 {
        if c.is_zero() {
            return ZPoly2::zero();
        }
        ZPoly2(self.0.iter().map(|u| u.mul(c)).collect())
    }

    /// Multiplies by `q^i t^j`.
    pub fn shift(&self, i: usize, j: usize) -> ZPoly2 {
        if self.is_zero() {
            return ZPoly2::zero();
        }
        let mut v = vec![UPoly::zero(); i];
        v.extend(self.0.iter().map(|u| u.shift(j)));
        ZPoly2(v)
    }

    /// Exact quotient in ℤ\[q,t\], or `None` when `o` does not divide `self`.
    pub fn exact_div(&self, o: &ZPoly2) -> Option<ZPoly2> {
        assert!(!o.is_zero(), "division by zero polynomial");
        if self.is_zero() {
            return Some(ZPoly2::zero());
        }
        if o.0.len() == 1 {
            let d = &o.0[0];
            let mut v = Vec::with_capacity(self.0.len());
            for u in &self.0 {
                v.push(u.exact_div(d)?);
            }
            return Some(ZPoly2(v));
        }
        let db = o.0.len() - 1;
        if self.0.len() - 1 < db {
            return None;
        }
        let mut r = self.clone();
        let mut quot = vec![UPoly::zero(); self.0.len() - db];
        let lb = o.0.last().unwrap();
        while !r.is_zero() {
            if r.0.len() - 1 < db {
                return None;
            }
            let k = r.0.len() - 1 - db;
            let c = r.0.last().unwrap().exact_div(lb)?;
            for (j, b) in o.0.iter().enumerate() {
                r.0[k + j] = r.0[k + j].sub(&b.mul(&c));
            }
            r.trim();
            quot[k] = c;
        }
        let mut p = ZPoly2(quot);
        p.trim();
        Some(p)
    }

    /// Gcd of all integer coefficients.
    pub fn int_content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for u in &self.0 {
            for c in &u.0 {
                g = g.gcd(c);
                if g.is_one() {
                    return g;
                }
            }
        }
        g
    }

    /// Leading coefficient under graded lex with `q > t`.
    pub fn grlex_lead(&self) -> Option<(usize, usize, &BigInt)> {
        let mut best: Option<(usize, usize, &BigInt)> = None;
        for (i, j, c) in self.iter_terms() {
            let better = match best {
                None => true,
                Some((bi, bj, _)) => (i + j, i).cmp(&(bi + bj, bi)) == Ordering::Greater,
            };
            if better {
                best = Some((i, j, c));
            }
        }
        best
    }

    /// Divides out the integer content and fixes the sign so the graded-lex
    /// leading coefficient is positive. Returns `(unit, primitive)` with
    /// `self = unit * primitive`.
    pub fn normalize(&self) -> (BigInt, ZPoly2) {
        if self.is_zero() {
            return (BigInt::zero(), ZPoly2::zero());
        }
        let mut c = self.int_content();
        if self.grlex_lead().unwrap().2.is_negative() {
            c = -c;
        }
        if c.is_one() {
            return (c, self.clone());
        }
        let v = self
            .0
            .iter()
            .map(|u| UPoly(u.0.iter().map(|a| a / &c).collect()))
            .collect();
        (c, ZPoly2(v))
    }

    /// Largest `(i, j)` such that `q^i t^j` divides `self`.
    pub fn monomial_content(&self) -> (usize, usize) {
        let i = self.0.iter().position(|u| !u.is_zero()).unwrap_or(0);
        let j = self
            .0
            .iter()
            .filter_map(|u| u.0.iter().position(|c| !c.is_zero()))
            .min()
            .unwrap_or(0);
        (i, j)
    }

    /// Divides by `q^i t^j`; the caller guarantees divisibility.
    pub fn unshift(&self, i: usize, j: usize) -> ZPoly2 {
        let mut p = ZPoly2(
            self.0[i.min(self.0.len())..]
                .iter()
                .map(|u| {
                    if u.is_zero() {
                        UPoly::zero()
                    } else {
                        UPoly(u.0[j..].to_vec())
                    }
                })
                .collect(),
        );
        p.trim();
        p
    }

    /// Content with respect to `q`: the gcd in ℤ\[t\] of the coefficients.
    fn q_content(&self) -> UPoly {
        let mut g = UPoly::zero();
        for u in &self.0 {
            if u.is_zero() {
                continue;
            }
            g = g.gcd(u);
            if g.is_one() {
                break;
            }
        }
        g
    }

    fn div_upoly(&self, c: &UPoly) -> ZPoly2 {
        ZPoly2(
            self.0
                .iter()
                .map(|u| u.exact_div(c).expect("content divides"))
                .collect(),
        )
    }

    fn prem(&self, o: &ZPoly2) -> ZPoly2 {
        let mut r = self.clone();
        let db = o.deg_q();
        let lb = o.0.last().unwrap().clone();
        while !r.is_zero() && r.deg_q() >= db {
            let k = (r.deg_q() - db) as usize;
            let lr = r.0.last().unwrap().clone();
            r = r.mul_upoly(&lb).sub(&o.mul_upoly(&lr).shift(k, 0));
        }
        r
    }

    /// Coefficients in `t` of `self(q0, t)` mod `P`, padded to `deg_t + 1`.
    fn image_in_t(&self, q0: u64) -> Vec<u64> {
        let mut out = vec![0u64; (self.deg_t() + 1) as usize];
        let mut pw = 1u64;
        for u in &self.0 {
            for (j, c) in u.0.iter().enumerate() {
                out[j] = (out[j] + mulmod(pw, modp(c))) % P;
            }
            pw = mulmod(pw, q0);
        }
        out
    }

    /// Upper bound on the `q`-degree of the gcd from a specialization
    /// `t = t0` mod `P` that keeps both leading coefficients in `q`.
    fn q_degree_bound(&self, o: &ZPoly2) -> Option<usize> {
        [1_000_003u64, 7_919].iter().find_map(|&t0| {
            let ia: Vec<u64> = self.0.iter().map(|u| u.eval_modp(t0)).collect();
            let ib: Vec<u64> = o.0.iter().map(|u| u.eval_modp(t0)).collect();
            (ia.last() != Some(&0) && ib.last() != Some(&0)).then(|| gcd_degree_modp(ia, ib))
        })
    }

    /// The same bound for the `t`-degree, specializing `q`.
    fn t_degree_bound(&self, o: &ZPoly2) -> Option<usize> {
        [1_000_033u64, 7_927].iter().find_map(|&q0| {
            let (ia, ib) = (self.image_in_t(q0), o.image_in_t(q0));
            (ia.last() != Some(&0) && ib.last() != Some(&0)).then(|| gcd_degree_modp(ia, ib))
        })
    }

    fn max_norm(&self) -> BigInt {
        self.0.iter().map(UPoly::max_norm).max().unwrap_or_default()
    }

    /// Heuristic gcd of polynomials that are primitive over ℤ\[t\]: specialize
    /// `t` to a large integer, take the gcd in ℤ\[q\] and read each
    /// coefficient back in that base. A candidate that divides both inputs
    /// and reaches both degree bounds is the gcd up to sign.
    fn heuristic_gcd(a: &ZPoly2, b: &ZPoly2, bq: usize, bt: usize) -> Option<ZPoly2> {
        let mut xi: BigInt = a.max_norm().min(b.max_norm()) * 2 + 29;
        let size = (a.deg_t() + b.deg_t() + 2) as usize * (a.0.len() + b.0.len());
        for _ in 0..6 {
            if xi.bits() as usize * size > HEURISTIC_BITS {
                return None;
            }
            let image = |p: &ZPoly2| {
                let mut u = UPoly(p.0.iter().map(|c| c.eval_big(&xi)).collect());
                u.trim();
                u
            };
            let (ia, ib) = (image(a), image(b));
            if !ia.is_zero() && !ib.is_zero() {
                let g = ia.gcd(&ib);
                let mut cand = ZPoly2(g.0.iter().map(|c| UPoly::from_xi_adic(c.clone(), &xi)).collect());
                cand.trim();
                let cand = cand.normalize().1;
                if cand.deg_q() == bq as isize
                    && cand.deg_t() == bt as isize
                    && a.exact_div(&cand).is_some()
                    && b.exact_div(&cand).is_some()
                {
                    return Some(cand);
                }
            }
            xi = xi * 73_794 / 27_011;
        }
        None
    }

    /// Gcd in ℤ\[q,t\], normalized to a positive graded-lex leading
    /// coefficient. Modular degree bounds settle the coprime case and certify
    /// the heuristic gcd; the primitive remainder sequence in `q` over ℤ\[t\]
    /// is the fallback.
    pub fn gcd(&self, o: &ZPoly2) -> ZPoly2 {
        if self.is_zero() {
            return o.normalize().1.scale(&o.int_content());
        }
        if o.is_zero() {
            return self.normalize().1.scale(&self.int_content());
        }
        if self.is_constant() || o.is_constant() {
            return ZPoly2::constant(self.int_content().gcd(&o.int_content()));
        }
        let ca = self.q_content();
        let cb = o.q_content();
        let c = ca.gcd(&cb);
        let a = self.div_upoly(&ca);
        let b = o.div_upoly(&cb);
        let g = match a.q_degree_bound(&b) {
            Some(0) => ZPoly2::one(),
            Some(bq) => a
                .t_degree_bound(&b)
                .and_then(|bt| ZPoly2::heuristic_gcd(&a, &b, bq, bt))
                .unwrap_or_else(|| ZPoly2::prs_gcd(a, b)),
            None => ZPoly2::prs_gcd(a, b),
        };
        let g = g.mul_upoly(&c);
        g.normalize().1.scale(&g.int_content())
    }

    /// Primitive remainder sequence in `q` for inputs with unit content over
    /// ℤ\[t\]. The result has unit content too.
    fn prs_gcd(mut a: ZPoly2, mut b: ZPoly2) -> ZPoly2 {
        if a.deg_q() < b.deg_q() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            if b.deg_q() == 0 {
                return ZPoly2::one();
            }
            let r = a.prem(&b);
            a = b;
            b = if r.is_zero() { r } else { r.div_upoly(&r.q_content()) };
        }
        a.div_upoly(&a.q_content())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(terms: &[(i64, usize, usize)]) -> ZPoly2 {
        let mut p = ZPoly2::zero();
        for &(c, i, j) in terms {
            p.add_coeff(i, j, &BigInt::from(c));
        }
        p
    }

    #[test]
    fn bivariate_gcd_recovers_common_factor() {
        // (q - t)(q + 2t + 1) and (q - t)(3q t - 1)
        let g = z(&[(1, 1, 0), (-1, 0, 1)]);
        let a = g.mul(&z(&[(1, 1, 0), (2, 0, 1), (1, 0, 0)]));
        let b = g.mul(&z(&[(3, 1, 1), (-1, 0, 0)]));
        assert_eq!(a.gcd(&b), g);
        assert_eq!(a.exact_div(&g).unwrap().mul(&g), a);
        assert!(a.exact_div(&z(&[(1, 1, 0), (1, 0, 0)])).is_none());
    }

    #[test]
    fn coprime_gcd_is_one() {
        let a = z(&[(1, 2, 0), (-1, 0, 0)]);
        let b = z(&[(1, 0, 2), (1, 0, 0)]);
        assert!(a.gcd(&b).is_one());
    }

    #[test]
    fn gcd_in_t_alone_survives_the_modular_shortcut() {
        // (t + 1)(q + 1) and (2t + 2)(q + 2)
        let a = z(&[(1, 1, 1), (1, 1, 0), (1, 0, 1), (1, 0, 0)]);
        let b = z(&[(2, 1, 1), (2, 1, 0), (4, 0, 1), (4, 0, 0)]);
        assert_eq!(a.gcd(&b), z(&[(1, 0, 1), (1, 0, 0)]));
        let u = UPoly(vec![BigInt::from(3), BigInt::from(6)]);
        let v = UPoly(vec![BigInt::from(9), BigInt::from(0), BigInt::from(3)]);
        assert_eq!(u.gcd(&v), UPoly::constant(BigInt::from(3)));
    }

    #[test]
    fn fast_paths_agree_with_remainder_sequences() {
        // Small deterministic generator; products share a random factor.
        let mut state = 0x2545_f491_u64;
        let mut next = |m: i64| {
            state = state
                .wrapping_mul(6_364_136_223_846_793_005)
                .wrapping_add(1_442_695_040_888_963_407);
            ((state >> 33) as i64).rem_euclid(2 * m + 1) - m
        };
        let mut random = |dq: usize, dt: usize| {
            let mut p = ZPoly2::zero();
            for i in 0..=dq {
                for j in 0..=dt {
                    p.add_coeff(i, j, &BigInt::from(next(9)));
                }
            }
            p
        };
        for round in 0..40 {
            let g = random(round % 3 + 1, round % 2 + 1);
            let (a, b) = (g.mul(&random(2, 2)), g.mul(&random(3, 1)));
            if a.is_zero() || b.is_zero() || a.is_constant() || b.is_constant() {
                continue;
            }
            let (ca, cb) = (a.q_content(), b.q_content());
            let (pa, pb) = (a.div_upoly(&ca), b.div_upoly(&cb));
            let slow = ZPoly2::prs_gcd(pa.clone(), pb.clone()).mul_upoly(&ca.gcd(&cb));
            let slow = slow.normalize().1.scale(&slow.int_content());
            assert_eq!(a.gcd(&b), slow, "round {round}");
            assert!(a.gcd(&b).exact_div(&g.normalize().1).is_some(), "round {round}");
        }
        for _ in 0..40 {
            let u = UPoly((0..3).map(|_| BigInt::from(next(20))).collect());
            let (a, b) = (
                u.mul(&UPoly((0..4).map(|_| BigInt::from(next(20))).collect())),
                u.mul(&UPoly((0..3).map(|_| BigInt::from(next(20))).collect())),
            );
            if a.is_zero() || b.is_zero() || a.degree() == 0 || b.degree() == 0 {
                continue;
            }
            let slow = UPoly::prs_gcd(a.primitive(), b.primitive()).scale(&a.content().gcd(&b.content()));
            assert_eq!(a.gcd(&b), slow);
        }
    }

    #[test]
    fn univariate_gcd_with_content() {
        let a = UPoly(vec![BigInt::from(-4), BigInt::from(0), BigInt::from(4)]);
        let b = UPoly(vec![BigInt::from(6), BigInt::from(6)]);
        assert_eq!(a.gcd(&b), UPoly(vec![BigInt::from(2), BigInt::from(2)]));
    }
}
