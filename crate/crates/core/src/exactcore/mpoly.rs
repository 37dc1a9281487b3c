//! Sparse multivariate polynomials over ℚ in tagged variables.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};

use super::{ExactError, Rat};

/// Variable families. Declaration order is the lex precedence used by the
/// graded-lex monomial order (`x` highest, `t` lowest).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum VarKind {
    X,
    Y,
    A,
    B,
    Q,
    T,
}

/// A tagged variable such as `x3` or `q`. Indices are 1-based; `q` and `t`
/// use index 0.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Var {
    pub kind: VarKind,
    pub index: u16,
}

impl Var {
    pub fn x(i: usize) -> Var {
        Var {
            kind: VarKind::X,
            index: i as u16,
        }
    }
    pub fn y(i: usize) -> Var {
        Var {
            kind: VarKind::Y,
            index: i as u16,
        }
    }
    pub fn a(i: usize) -> Var {
        Var {
            kind: VarKind::A,
            index: i as u16,
        }
    }
    pub fn b(i: usize) -> Var {
        Var {
            kind: VarKind::B,
            index: i as u16,
        }
    }
    pub fn q() -> Var {
        Var {
            kind: VarKind::Q,
            index: 0,
        }
    }
    pub fn t() -> Var {
        Var {
            kind: VarKind::T,
            index: 0,
        }
    }

    /// Only `q` and `t` may carry negative exponents.
    pub fn allows_laurent(&self) -> bool {
        matches!(self.kind, VarKind::Q | VarKind::T)
    }

    /// `x`-type variables (`x`, `a`) count toward the first bidegree
    /// component, `y`-type (`y`, `b`) toward the second.
    pub fn is_x_type(&self) -> bool {
        matches!(self.kind, VarKind::X | VarKind::A)
    }
    pub fn is_y_type(&self) -> bool {
        matches!(self.kind, VarKind::Y | VarKind::B)
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            VarKind::X => write!(f, "x{}", self.index),
            VarKind::Y => write!(f, "y{}", self.index),
            VarKind::A => write!(f, "a{}", self.index),
            VarKind::B => write!(f, "b{}", self.index),
            VarKind::Q => write!(f, "q"),
            VarKind::T => write!(f, "t"),
        }
    }
}

/// A monomial: sorted `(var, exponent)` pairs with nonzero exponents.
/// Ordered by graded lex.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Monomial(Vec<(Var, i32)>);

impl Monomial {
    pub fn one() -> Monomial {
        Monomial(Vec::new())
    }

    pub fn var(v: Var) -> Monomial {
        Monomial(vec![(v, 1)])
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (Var, i32)>) -> Monomial {
        let mut m: BTreeMap<Var, i32> = BTreeMap::new();
        for (v, e) in pairs {
            *m.entry(v).or_insert(0) += e;
        }
        Monomial(m.into_iter().filter(|&(_, e)| e != 0).collect())
    }

    pub fn pairs(&self) -> &[(Var, i32)] {
        &self.0
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn exponent(&self, v: Var) -> i32 {
        self.0.iter().find(|(w, _)| *w == v).map_or(0, |p| p.1)
    }

    pub fn degree(&self) -> i32 {
        self.0.iter().map(|p| p.1).sum()
    }

    /// (x-type degree, y-type degree).
    pub fn bidegree(&self) -> (i32, i32) {
        let mut d = (0, 0);
        for (v, e) in &self.0 {
            if v.is_x_type() {
                d.0 += e;
            } else if v.is_y_type() {
                d.1 += e;
            }
        }
        d
    }

    pub fn mul(&self, o: &Monomial) -> Monomial {
        let mut out = Vec::with_capacity(self.0.len() + o.0.len());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < o.0.len() {
            let (a, b) = (self.0[i], o.0[j]);
            match a.0.cmp(&b.0) {
                Ordering::Less => {
                    out.push(a);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b);
                    j += 1;
                }
                Ordering::Equal => {
                    if a.1 + b.1 != 0 {
                        out.push((a.0, a.1 + b.1));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.0[i..]);
        out.extend_from_slice(&o.0[j..]);
        Monomial(out)
    }

    pub fn pow(&self, k: i32) -> Monomial {
        if k == 0 {
            return Monomial::one();
        }
        Monomial(self.0.iter().map(|&(v, e)| (v, e * k)).collect())
    }

    fn lex_cmp(&self, o: &Monomial) -> Ordering {
        let (mut i, mut j) = (0, 0);
        loop {
            match (self.0.get(i), o.0.get(j)) {
                (None, None) => return Ordering::Equal,
                (Some(&(_, e)), None) => return e.cmp(&0),
                (None, Some(&(_, e))) => return 0.cmp(&e),
                (Some(&(v, e)), Some(&(w, f))) => {
                    if v == w {
                        if e != f {
                            return e.cmp(&f);
                        }
                        i += 1;
                        j += 1;
                    } else if v < w {
                        return e.cmp(&0);
                    } else {
                        return 0.cmp(&f);
                    }
                }
            }
        }
    }
}

impl Ord for Monomial {
    fn cmp(&self, o: &Monomial) -> Ordering {
        self.degree().cmp(&o.degree()).then_with(|| self.lex_cmp(o))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, o: &Monomial) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for (k, (v, e)) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, "*")?;
            }
            if *e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

/// A polynomial with rational coefficients. `q` and `t` may appear with
/// negative exponents; the other variables may not.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct MPoly {
    terms: BTreeMap<Monomial, Rat>,
}

impl MPoly {
    pub fn zero() -> MPoly {
        MPoly::default()
    }

    pub fn one() -> MPoly {
        MPoly::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> MPoly {
        MPoly::term(c, Monomial::one())
    }

    pub fn var(v: Var) -> MPoly {
        MPoly::term(Rat::one(), Monomial::var(v))
    }

    pub fn term(c: Rat, m: Monomial) -> MPoly {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        MPoly { terms }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, Rat)>) -> MPoly {
        let mut p = MPoly::zero();
        for (m, c) in terms {
            p.add_term(m, &c);
        }
        p
    }

    pub fn add_term(&mut self, m: Monomial, c: &Rat) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get() + c;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in increasing graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rat)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Rat {
        self.terms.get(m).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn leading(&self) -> Option<(&Monomial, &Rat)> {
        self.terms.iter().next_back()
    }

    pub fn scale(&self, c: &Rat) -> MPoly {
        if c.is_zero() {
            return MPoly::zero();
        }
        MPoly {
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> MPoly {
        MPoly {
            terms: self.terms.iter().map(|(k, a)| (k.mul(m), a.clone())).collect(),
        }
    }

    pub fn add(&self, o: &MPoly) -> MPoly {
        let mut r = self.clone();
        for (m, c) in &o.terms {
            r.add_term(m.clone(), c);
        }
        r
    }

    pub fn sub(&self, o: &MPoly) -> MPoly {
        let mut r = self.clone();
        for (m, c) in &o.terms {
            r.add_term(m.clone(), &-c);
        }
        r
    }

    pub fn neg(&self) -> MPoly {
        self.scale(&-Rat::one())
    }

    pub fn mul(&self, o: &MPoly) -> MPoly {
        let mut r = MPoly::zero();
        for (m, c) in &self.terms {
            for (n, d) in &o.terms {
                r.add_term(m.mul(n), &(c * d));
            }
        }
        r
    }

    pub fn pow(&self, k: u32) -> MPoly {
        let mut acc = MPoly::one();
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Partial derivative with respect to `v`.
    pub fn derivative(&self, v: Var) -> MPoly {
        let mut r = MPoly::zero();
        for (m, c) in &self.terms {
            let e = m.exponent(v);
            if e != 0 {
                let lowered = m.mul(&Monomial(vec![(v, -1)]));
                r.add_term(lowered, &(c * &Rat::from_int(e as i64)));
            }
        }
        r
    }

    /// Replaces each variable by the image under `f` (variables mapped to
    /// `None` are left alone). Exponents of substituted variables must be
    /// nonnegative.
    pub fn substitute(&self, f: &dyn Fn(Var) -> Option<MPoly>) -> MPoly {
        let mut r = MPoly::zero();
        for (m, c) in &self.terms {
            let mut acc = MPoly::constant(c.clone());
            let mut kept = Vec::new();
            for &(v, e) in m.pairs() {
                match f(v) {
                    Some(img) => {
                        assert!(e >= 0, "cannot substitute into a negative power of {v}");
                        acc = acc.mul(&img.pow(e as u32));
                    }
                    None => kept.push((v, e)),
                }
            }
            r = r.add(&acc.mul_monomial(&Monomial(kept)));
        }
        r
    }

    /// Renames variables; the map must be injective on the variables present.
    pub fn rename(&self, f: &dyn Fn(Var) -> Var) -> MPoly {
        MPoly::from_terms(self.terms.iter().map(|(m, c)| {
            (
                Monomial::from_pairs(m.pairs().iter().map(|&(v, e)| (f(v), e))),
                c.clone(),
            )
        }))
    }

    /// All variables appearing with nonzero exponent.
    pub fn variables(&self) -> Vec<Var> {
        let mut vs: Vec<Var> = self.terms.keys().flat_map(|m| m.pairs().iter().map(|p| p.0)).collect();
        vs.sort();
        vs.dedup();
        vs
    }

    pub fn degree_in(&self, v: Var) -> Option<i32> {
        self.terms.keys().map(|m| m.exponent(v)).max()
    }

    /// The common bidegree if the polynomial is bihomogeneous.
    pub fn bidegree(&self) -> Option<(i32, i32)> {
        let mut it = self.terms.keys().map(|m| m.bidegree());
        let first = it.next()?;
        if it.all(|d| d == first) {
            Some(first)
        } else {
            None
        }
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.is_one())
    }

    pub fn constant_term(&self) -> Rat {
        self.coeff(&Monomial::one())
    }
}

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.signum() < 0;
            let a = c.abs();
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if m.is_one() {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{a}*{m}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn parse_var(s: &str) -> Option<Var> {
    let (head, idx) = s.split_at(1);
    let kind = match head {
        "x" => VarKind::X,
        "y" => VarKind::Y,
        "a" => VarKind::A,
        "b" => VarKind::B,
        "q" if idx.is_empty() => return Some(Var::q()),
        "t" if idx.is_empty() => return Some(Var::t()),
        _ => return None,
    };
    let i: u16 = idx.parse().ok()?;
    Some(Var { kind, index: i })
}

fn parse_term(s: &str) -> Result<(Monomial, Rat), ExactError> {
    let bad = || ExactError::Parse(format!("bad term {s:?}"));
    let mut coeff = Rat::one();
    let mut pairs = Vec::new();
    for factor in s.split('*') {
        let factor = factor.trim();
        if factor.is_empty() {
            return Err(bad());
        }
        if factor.starts_with(|c: char| c.is_ascii_digit()) {
            coeff *= factor.parse::<Rat>()?;
            continue;
        }
        let (v, e) = match factor.split_once('^') {
            Some((v, e)) => (v, e.trim().parse::<i32>().map_err(|_| bad())?),
            None => (factor, 1),
        };
        let var = parse_var(v.trim()).ok_or_else(bad)?;
        if e < 0 && !var.allows_laurent() {
            return Err(ExactError::Parse(format!("negative exponent on {var}")));
        }
        pairs.push((var, e));
    }
    Ok((Monomial::from_pairs(pairs), coeff))
}

impl FromStr for MPoly {
    type Err = ExactError;

    /// Parses the canonical text form, e.g. `q^2*t - 3/2*q + 1`.
    fn from_str(s: &str) -> Result<MPoly, ExactError> {
        let s = s.trim();
        if s.is_empty() {
            return Err(ExactError::Parse("empty polynomial".into()));
        }
        let mut p = MPoly::zero();
        let mut sign = 1i64;
        let mut cur = String::new();
        let mut prev_caret = false;
        let flush = |cur: &mut String, sign: i64, p: &mut MPoly| -> Result<(), ExactError> {
            let t = cur.trim();
            if t.is_empty() {
                return Err(ExactError::Parse(format!("dangling sign in {s:?}")));
            }
            let (m, c) = parse_term(t)?;
            p.add_term(m, &(c * Rat::from_int(sign)));
            cur.clear();
            Ok(())
        };
        let mut started = false;
        for ch in s.chars() {
            if (ch == '+' || ch == '-') && !prev_caret {
                if started {
                    flush(&mut cur, sign, &mut p)?;
                }
                sign = if ch == '-' { -1 } else { 1 };
                started = true;
                continue;
            }
            if !ch.is_whitespace() {
                prev_caret = ch == '^';
                started = true;
            }
            cur.push(ch);
        }
        flush(&mut cur, sign, &mut p)?;
        Ok(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> MPoly {
        s.parse().unwrap()
    }

    #[test]
    fn graded_lex_display() {
        let q = MPoly::var(Var::q());
        let t = MPoly::var(Var::t());
        let f = q.pow(2).mul(&t).sub(&q.scale(&Rat::new(3, 2)));
        assert_eq!(f.to_string(), "q^2*t - 3/2*q");
        let g = t.add(&q).add(&MPoly::one());
        assert_eq!(g.to_string(), "q + t + 1");
    }

    #[test]
    fn parse_round_trip() {
        for s in ["q^2*t - 3/2*q", "-x1*y2^3 + a1 - 1", "1 + q^-1*t", "0", "-2"] {
            let f = p(s);
            assert_eq!(f.to_string(), s, "{s}");
        }
        assert!("x0^-1".parse::<MPoly>().is_err());
    }

    #[test]
    fn derivative_and_substitution() {
        let f = p("x1^3*y1 + 2*x1");
        assert_eq!(f.derivative(Var::x(1)).to_string(), "3*x1^2*y1 + 2");
        let g = f.substitute(&|v| if v == Var::x(1) { Some(p("x2 + 1")) } else { None });
        assert_eq!(g.bidegree(), None);
        assert_eq!(g.coeff(&Monomial::var(Var::y(1))), Rat::one());
        assert_eq!(f.bidegree(), None);
        assert_eq!(p("x1*y2 - a1*b1").bidegree(), Some((1, 1)));
    }
}
