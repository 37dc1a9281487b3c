//! Reduced rational functions in `q` and `t` over ℚ.

use std::fmt;
use std::ops::{Add, AddAssign, Div, DivAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::zpoly::ZPoly2;
use super::{ExactError, MPoly, Monomial, Rat, Var, VarKind};

/// An element of ℚ(q,t) in canonical form
/// `scalar * q^sq * t^st * num / den`.
///
/// `num` and `den` are coprime primitive integer polynomials, neither
/// divisible by `q` or `t`, each with a positive graded-lex leading
/// coefficient. Structural equality is therefore value equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    scalar: Rat,
    sq: i32,
    st: i32,
    num: ZPoly2,
    den: ZPoly2,
}

fn zpoly_from_mpoly(p: &MPoly) -> Result<(Rat, i32, i32, ZPoly2), ExactError> {
    if p.is_zero() {
        return Ok((Rat::zero(), 0, 0, ZPoly2::zero()));
    }
    let mut lcm = BigInt::one();
    let (mut mq, mut mt) = (i32::MAX, i32::MAX);
    for (m, c) in p.terms() {
        for (v, _) in m.pairs() {
            if !v.allows_laurent() {
                return Err(ExactError::Domain(format!("variable {v} is not q or t")));
            }
        }
        lcm = lcm.lcm(&c.denom());
        mq = mq.min(m.exponent(Var::q()));
        mt = mt.min(m.exponent(Var::t()));
    }
    let mut z = ZPoly2::zero();
    for (m, c) in p.terms() {
        let v = c.numer() * (&lcm / c.denom());
        z.add_coeff(
            (m.exponent(Var::q()) - mq) as usize,
            (m.exponent(Var::t()) - mt) as usize,
            &v,
        );
    }
    Ok((Rat::from_bigints(BigInt::one(), lcm), mq, mt, z))
}

fn zpoly_to_mpoly(z: &ZPoly2, scalar: &Rat, sq: i32, st: i32) -> MPoly {
    MPoly::from_terms(z.iter_terms().map(|(i, j, c)| {
        (
            Monomial::from_pairs([(Var::q(), i as i32 + sq), (Var::t(), j as i32 + st)]),
            scalar * &Rat::from_bigint(c.clone()),
        )
    }))
}

impl RatFunc {
    pub fn zero() -> RatFunc {
        RatFunc {
            scalar: Rat::zero(),
            sq: 0,
            st: 0,
            num: ZPoly2::one(),
            den: ZPoly2::one(),
        }
    }

    pub fn one() -> RatFunc {
        RatFunc::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> RatFunc {
        if c.is_zero() {
            return RatFunc::zero();
        }
        RatFunc {
            scalar: c,
            sq: 0,
            st: 0,
            num: ZPoly2::one(),
            den: ZPoly2::one(),
        }
    }

    pub fn from_int(n: i64) -> RatFunc {
        RatFunc::constant(Rat::from_int(n))
    }

    pub fn q() -> RatFunc {
        RatFunc::monomial(Rat::one(), 1, 0)
    }

    pub fn t() -> RatFunc {
        RatFunc::monomial(Rat::one(), 0, 1)
    }

    /// `c * q^i * t^j`.
    pub fn monomial(c: Rat, i: i32, j: i32) -> RatFunc {
        if c.is_zero() {
            return RatFunc::zero();
        }
        RatFunc {
            scalar: c,
            sq: i,
            st: j,
            num: ZPoly2::one(),
            den: ZPoly2::one(),
        }
    }

    /// Canonicalizes `scalar * q^sq t^st * num / den`.
    fn build(scalar: Rat, sq: i32, st: i32, num: ZPoly2, den: ZPoly2, coprime: bool) -> RatFunc {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() || scalar.is_zero() {
            return RatFunc::zero();
        }
        let (nq, nt) = num.monomial_content();
        let (dq, dt) = den.monomial_content();
        let mut num = if nq + nt > 0 { num.unshift(nq, nt) } else { num };
        let mut den = if dq + dt > 0 { den.unshift(dq, dt) } else { den };
        let sq = sq + nq as i32 - dq as i32;
        let st = st + nt as i32 - dt as i32;
        if !coprime && !den.is_constant() {
            if let Some(qq) = num.exact_div(&den) {
                num = qq;
                den = ZPoly2::one();
            } else {
                let g = num.gcd(&den);
                if !g.is_constant() {
                    num = num.exact_div(&g).expect("gcd divides");
                    den = den.exact_div(&g).expect("gcd divides");
                }
            }
        }
        let (un, num) = num.normalize();
        let (ud, den) = den.normalize();
        let scalar = scalar * Rat::from_bigints(un, ud);
        RatFunc {
            scalar,
            sq,
            st,
            num,
            den,
        }
    }

    /// Reduces `num / den` for Laurent polynomials in `q` and `t`.
    pub fn reduce(num: &MPoly, den: &MPoly) -> Result<RatFunc, ExactError> {
        let (cn, nq, nt, zn) = zpoly_from_mpoly(num)?;
        let (cd, dq, dt, zd) = zpoly_from_mpoly(den)?;
        if zd.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        Ok(RatFunc::build(cn / cd, nq - dq, nt - dt, zn, zd, false))
    }

    pub fn from_mpoly(p: &MPoly) -> Result<RatFunc, ExactError> {
        RatFunc::reduce(p, &MPoly::one())
    }

    pub(crate) fn from_zpoly(z: ZPoly2) -> RatFunc {
        RatFunc::build(Rat::one(), 0, 0, z, ZPoly2::one(), true)
    }

    /// `(scalar, q-shift, t-shift, num, den)` in internal form.
    pub(crate) fn parts(&self) -> (&Rat, i32, i32, &ZPoly2, &ZPoly2) {
        (&self.scalar, self.sq, self.st, &self.num, &self.den)
    }

    pub fn is_zero(&self) -> bool {
        self.scalar.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.scalar.is_one() && self.sq == 0 && self.st == 0 && self.num.is_one() && self.den.is_one()
    }

    /// The Laurent monomial shift `(q-exponent, t-exponent)`.
    pub fn shift(&self) -> (i32, i32) {
        (self.sq, self.st)
    }

    /// Numerator polynomial (without the monomial shift) paired with
    /// [`RatFunc::denom`], whose graded-lex leading coefficient is 1.
    pub fn numer(&self) -> MPoly {
        if self.is_zero() {
            return MPoly::zero();
        }
        let lc = Rat::from_bigint(self.den.grlex_lead().unwrap().2.clone());
        zpoly_to_mpoly(&self.num, &(&self.scalar * &lc), 0, 0)
    }

    pub fn denom(&self) -> MPoly {
        let lc = Rat::from_bigint(self.den.grlex_lead().unwrap().2.clone());
        zpoly_to_mpoly(&self.den, &lc.recip(), 0, 0)
    }

    /// True when the denominator is 1 (a Laurent polynomial).
    pub fn is_laurent_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn is_polynomial(&self) -> bool {
        self.is_zero() || (self.den.is_one() && self.sq >= 0 && self.st >= 0)
    }

    pub fn is_constant(&self) -> bool {
        self.is_zero() || (self.den.is_one() && self.num.is_one() && self.sq == 0 && self.st == 0)
    }

    pub fn as_constant(&self) -> Option<Rat> {
        if self.is_constant() {
            Some(self.scalar.clone())
        } else {
            None
        }
    }

    /// The value as a Laurent polynomial, if the denominator is 1.
    pub fn to_mpoly(&self) -> Option<MPoly> {
        if self.is_zero() {
            return Some(MPoly::zero());
        }
        if !self.den.is_one() {
            return None;
        }
        Some(zpoly_to_mpoly(&self.num, &self.scalar, self.sq, self.st))
    }

    pub fn inverse(&self) -> RatFunc {
        assert!(!self.is_zero(), "inverse of zero");
        RatFunc {
            scalar: self.scalar.recip(),
            sq: -self.sq,
            st: -self.st,
            num: self.den.clone(),
            den: self.num.clone(),
        }
    }

    pub fn pow(&self, e: i32) -> RatFunc {
        let base = if e < 0 { self.inverse() } else { self.clone() };
        let mut acc = RatFunc::one();
        for _ in 0..e.unsigned_abs() {
            acc = &acc * &base;
        }
        acc
    }

    fn map_zpoly(z: &ZPoly2, f: impl Fn(usize, usize) -> (usize, usize)) -> ZPoly2 {
        let mut out = ZPoly2::zero();
        for (i, j, c) in z.iter_terms() {
            let (a, b) = f(i, j);
            out.add_coeff(a, b, c);
        }
        out
    }

    /// `f(q^k, t^k)`.
    pub fn power_substitute(&self, k: u32) -> RatFunc {
        if self.is_zero() || k == 1 {
            return self.clone();
        }
        let k = k as usize;
        let num = RatFunc::map_zpoly(&self.num, |i, j| (i * k, j * k));
        let den = RatFunc::map_zpoly(&self.den, |i, j| (i * k, j * k));
        RatFunc::build(
            self.scalar.clone(),
            self.sq * k as i32,
            self.st * k as i32,
            num,
            den,
            false,
        )
    }

    /// `f(t, q)`.
    pub fn swap_qt(&self) -> RatFunc {
        if self.is_zero() {
            return RatFunc::zero();
        }
        let num = RatFunc::map_zpoly(&self.num, |i, j| (j, i));
        let den = RatFunc::map_zpoly(&self.den, |i, j| (j, i));
        RatFunc::build(self.scalar.clone(), self.st, self.sq, num, den, true)
    }

    /// `f(q, 1/t)`.
    pub fn invert_t(&self) -> RatFunc {
        if self.is_zero() {
            return RatFunc::zero();
        }
        let dn = self.num.deg_t().max(0) as usize;
        let dd = self.den.deg_t().max(0) as usize;
        let num = RatFunc::map_zpoly(&self.num, |i, j| (i, dn - j));
        let den = RatFunc::map_zpoly(&self.den, |i, j| (i, dd - j));
        RatFunc::build(
            self.scalar.clone(),
            self.sq,
            -self.st - dn as i32 + dd as i32,
            num,
            den,
            true,
        )
    }

    /// Substitutes `q -> qv`, `t -> tv`.
    pub fn substitute(&self, qv: &RatFunc, tv: &RatFunc) -> Result<RatFunc, ExactError> {
        if self.is_zero() {
            return Ok(RatFunc::zero());
        }
        let ev = |z: &ZPoly2| -> RatFunc {
            let mut acc = RatFunc::zero();
            for (i, j, c) in z.iter_terms() {
                let term = qv.pow(i as i32) * tv.pow(j as i32) * RatFunc::constant(Rat::from_bigint(c.clone()));
                acc += term;
            }
            acc
        };
        let d = ev(&self.den);
        if d.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        let shift = |v: &RatFunc, e: i32| -> Result<RatFunc, ExactError> {
            if e < 0 && v.is_zero() {
                Err(ExactError::DivisionByZero)
            } else if e == 0 {
                Ok(RatFunc::one())
            } else {
                Ok(v.pow(e))
            }
        };
        let s = shift(qv, self.sq)? * shift(tv, self.st)?;
        Ok(RatFunc::constant(self.scalar.clone()) * s * ev(&self.num) / d)
    }

    /// Evaluates at rational `q`, `t`.
    pub fn eval(&self, q: &Rat, t: &Rat) -> Result<Rat, ExactError> {
        let r = self.substitute(&RatFunc::constant(q.clone()), &RatFunc::constant(t.clone()))?;
        Ok(r.as_constant().expect("constant after full evaluation"))
    }

    /// Degree in `t` of a Laurent polynomial (None if zero or not one).
    pub fn degree_t(&self) -> Option<i32> {
        if self.is_zero() || !self.den.is_one() {
            return None;
        }
        Some(self.num.deg_t() as i32 + self.st)
    }

    pub fn degree_q(&self) -> Option<i32> {
        if self.is_zero() || !self.den.is_one() {
            return None;
        }
        Some(self.num.deg_q() as i32 + self.sq)
    }
}

impl Default for RatFunc {
    fn default() -> RatFunc {
        RatFunc::zero()
    }
}

impl From<Rat> for RatFunc {
    fn from(c: Rat) -> RatFunc {
        RatFunc::constant(c)
    }
}

impl From<i64> for RatFunc {
    fn from(n: i64) -> RatFunc {
        RatFunc::from_int(n)
    }
}

fn rat_to_int_pair(c: &Rat) -> (BigInt, BigInt) {
    (c.numer(), c.denom())
}

impl<'a> Add<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn add(self, o: &RatFunc) -> RatFunc {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        let (mq, mt) = (self.sq.min(o.sq), self.st.min(o.st));
        let (a1, b1) = rat_to_int_pair(&self.scalar);
        let (a2, b2) = rat_to_int_pair(&o.scalar);
        let l = b1.lcm(&b2);
        let e1 = a1 * (&l / &b1);
        let e2 = a2 * (&l / &b2);
        let x1 = self
            .num
            .shift((self.sq - mq) as usize, (self.st - mt) as usize)
            .scale(&e1);
        let x2 = o.num.shift((o.sq - mq) as usize, (o.st - mt) as usize).scale(&e2);
        let scalar = Rat::from_bigints(BigInt::one(), l);
        if self.den == o.den {
            return RatFunc::build(scalar, mq, mt, x1.add(&x2), self.den.clone(), false);
        }
        if self.den.is_one() {
            return RatFunc::build(scalar, mq, mt, x1.mul(&o.den).add(&x2), o.den.clone(), true);
        }
        if o.den.is_one() {
            return RatFunc::build(scalar, mq, mt, x1.add(&x2.mul(&self.den)), self.den.clone(), true);
        }
        let g = self.den.gcd(&o.den);
        let (d1, d2) = if g.is_one() {
            (self.den.clone(), o.den.clone())
        } else {
            (self.den.exact_div(&g).unwrap(), o.den.exact_div(&g).unwrap())
        };
        let num = x1.mul(&d2).add(&x2.mul(&d1));
        let den = self.den.mul(&d2);
        // a common factor can only come from g
        if g.is_one() {
            RatFunc::build(scalar, mq, mt, num, den, true)
        } else {
            RatFunc::build(scalar, mq, mt, num, den, false)
        }
    }
}

impl<'a> Sub<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn sub(self, o: &RatFunc) -> RatFunc {
        self + &(-o)
    }
}

impl<'a> Mul<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn mul(self, o: &RatFunc) -> RatFunc {
        if self.is_zero() || o.is_zero() {
            return RatFunc::zero();
        }
        let scalar = &self.scalar * &o.scalar;
        let (sq, st) = (self.sq + o.sq, self.st + o.st);
        if self.den.is_one() && o.den.is_one() {
            return RatFunc::build(scalar, sq, st, self.num.mul(&o.num), ZPoly2::one(), true);
        }
        let cancel = |n: &ZPoly2, d: &ZPoly2| -> (ZPoly2, ZPoly2) {
            if n.is_one() || d.is_one() {
                return (n.clone(), d.clone());
            }
            let g = n.gcd(d);
            if g.is_constant() {
                (n.clone(), d.clone())
            } else {
                (n.exact_div(&g).unwrap(), d.exact_div(&g).unwrap())
            }
        };
        let (n1, d2) = cancel(&self.num, &o.den);
        let (n2, d1) = cancel(&o.num, &self.den);
        RatFunc::build(scalar, sq, st, n1.mul(&n2), d1.mul(&d2), true)
    }
}

impl<'a> Div<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, o: &RatFunc) -> RatFunc {
        self * &o.inverse()
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        let mut r = self.clone();
        r.scalar = -&r.scalar;
        r
    }
}

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        -&self
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident, $atr:ident, $am:ident) => {
        impl $tr<RatFunc> for RatFunc {
            type Output = RatFunc;
            fn $m(self, o: RatFunc) -> RatFunc {
                (&self).$m(&o)
            }
        }
        impl<'a> $tr<&'a RatFunc> for RatFunc {
            type Output = RatFunc;
            fn $m(self, o: &RatFunc) -> RatFunc {
                (&self).$m(o)
            }
        }
        impl<'a> $tr<RatFunc> for &'a RatFunc {
            type Output = RatFunc;
            fn $m(self, o: RatFunc) -> RatFunc {
                self.$m(&o)
            }
        }
        impl $atr<RatFunc> for RatFunc {
            fn $am(&mut self, o: RatFunc) {
                *self = (&*self).$m(&o);
            }
        }
        impl<'a> $atr<&'a RatFunc> for RatFunc {
            fn $am(&mut self, o: &RatFunc) {
                *self = (&*self).$m(o);
            }
        }
    };
}

forward_binop!(Add, add, AddAssign, add_assign);
forward_binop!(Sub, sub, SubAssign, sub_assign);
forward_binop!(Mul, mul, MulAssign, mul_assign);
forward_binop!(Div, div, DivAssign, div_assign);

impl Zero for RatFunc {
    fn zero() -> RatFunc {
        RatFunc::zero()
    }
    fn is_zero(&self) -> bool {
        self.scalar.is_zero()
    }
}

impl One for RatFunc {
    fn one() -> RatFunc {
        RatFunc::one()
    }
}

impl fmt::Display for RatFunc {
    /// Laurent polynomials print in graded-lex form; proper fractions print
    /// as `(num)/(den)` with a monic denominator.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(p) = self.to_mpoly() {
            return write!(f, "{p}");
        }
        let lc = Rat::from_bigint(self.den.grlex_lead().unwrap().2.clone());
        let num = zpoly_to_mpoly(&self.num, &(&self.scalar * &lc), self.sq.max(0), self.st.max(0));
        let den = zpoly_to_mpoly(&self.den, &lc.recip(), (-self.sq).max(0), (-self.st).max(0));
        write!(f, "({num})/({den})")
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for RatFunc {
    type Err = ExactError;
    fn from_str(s: &str) -> Result<RatFunc, ExactError> {
        let s = s.trim();
        if let Some(rest) = s.strip_prefix('(') {
            if let Some((n, d)) = rest.split_once(")/(") {
                let d = d
                    .strip_suffix(')')
                    .ok_or_else(|| ExactError::Parse(format!("bad fraction {s:?}")))?;
                return RatFunc::reduce(&n.parse()?, &d.parse()?);
            }
        }
        RatFunc::from_mpoly(&s.parse()?)
    }
}

/// Checks that every variable in `p` is `q` or `t`.
pub fn is_qt_poly(p: &MPoly) -> bool {
    p.variables().iter().all(|v| matches!(v.kind, VarKind::Q | VarKind::T))
}

/// Nonnegative-integer coefficient test for a Laurent polynomial value.
pub fn has_nonneg_int_coeffs(f: &RatFunc) -> bool {
    if f.is_zero() {
        return true;
    }
    if !f.is_polynomial() {
        return false;
    }
    let (c, _, _, num, _) = f.parts();
    num.iter_terms().all(|(_, _, a)| {
        let v = c * &Rat::from_bigint(a.clone());
        v.is_integer() && !v.numer().is_negative()
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(s: &str) -> RatFunc {
        s.parse().unwrap()
    }

    #[test]
    fn reduce_cancels_and_normalizes() {
        let f = RatFunc::reduce(&"q^2 - t^2".parse().unwrap(), &"2*q - 2*t".parse().unwrap()).unwrap();
        assert_eq!(f.to_string(), "1/2*q + 1/2*t");
        let g = RatFunc::reduce(&"q".parse().unwrap(), &"q^2*t - q*t".parse().unwrap()).unwrap();
        assert_eq!(g.to_string(), "(1)/(q*t - t)");
        assert_eq!(g.denom().to_string(), "q - 1");
        assert_eq!(g.shift(), (0, -1));
    }

    #[test]
    fn field_identities() {
        let a = r("(q + 1)/(t - 1)");
        let b = r("(q*t - 2)/(q + t)");
        assert_eq!(&(&a + &b) - &b, a);
        assert_eq!(&(&a * &b) / &b, a);
        assert!((&a - &a).is_zero());
        assert_eq!(r("q^-1*t + 1").to_string(), "1 + q^-1*t");
    }

    #[test]
    fn substitutions() {
        let f = r("q^2*t + 3*t");
        assert_eq!(f.swap_qt().to_string(), "q*t^2 + 3*q");
        assert_eq!(f.invert_t().to_string(), "q^2*t^-1 + 3*t^-1");
        assert_eq!(f.power_substitute(2).to_string(), "q^4*t^2 + 3*t^2");
        assert_eq!(f.eval(&Rat::from_int(1), &Rat::from_int(2)).unwrap(), Rat::from_int(8));
        let g = r("(1)/(q - t)");
        assert!(g.substitute(&RatFunc::t(), &RatFunc::t()).is_err());
    }
}
