//! Symmetric functions of a fixed degree over ℚ(q,t).
//!
//! Arithmetic happens in the power-sum basis; results are usually presented
//! in the Schur basis.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num_traits::{One, Zero};
use serde_json::{json, Map, Value};

use crate::exactcore::{Rat, RatFunc};
use crate::partcomb::{character_table, enumerate_partitions, z_tau, Partition};

/// The five classical bases.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Basis {
    M,
    E,
    H,
    P,
    S,
}

impl Basis {
    pub fn tag(&self) -> &'static str {
        match self {
            Basis::M => "m",
            Basis::E => "e",
            Basis::H => "h",
            Basis::P => "p",
            Basis::S => "s",
        }
    }

    pub fn from_tag(s: &str) -> Option<Basis> {
        Some(match s {
            "m" => Basis::M,
            "e" => Basis::E,
            "h" => Basis::H,
            "p" => Basis::P,
            "s" => Basis::S,
            _ => return None,
        })
    }
}

/// A homogeneous symmetric function of degree `n` in a tagged basis.
#[derive(Clone, PartialEq, Eq)]
pub struct SymFunc {
    n: usize,
    basis: Basis,
    coeffs: BTreeMap<Partition, RatFunc>,
}

/// The formal alphabet `c(q,t)·X`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Alphabet {
    pub scalar: RatFunc,
}

impl Alphabet {
    /// The plain alphabet `X`.
    pub fn x() -> Alphabet {
        Alphabet { scalar: RatFunc::one() }
    }

    pub fn scaled(scalar: RatFunc) -> Alphabet {
        Alphabet { scalar }
    }

    /// Substituting `X -> self` and then `X -> other` multiplies the scalars.
    pub fn compose(&self, other: &Alphabet) -> Alphabet {
        Alphabet {
            scalar: &self.scalar * &other.scalar,
        }
    }
}

/// Transition matrices between a basis and `p`, indexed by positions in
/// [`enumerate_partitions`].
struct Transitions {
    parts: Vec<Partition>,
    index: HashMap<Partition, usize>,
    to_p: HashMap<Basis, Vec<Vec<Rat>>>,
    from_p: HashMap<Basis, Vec<Vec<Rat>>>,
}

fn invert(m: &[Vec<Rat>]) -> Vec<Vec<Rat>> {
    let n = m.len();
    let mut a: Vec<Vec<Rat>> = m
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut row = r.clone();
            row.extend((0..n).map(|j| if i == j { Rat::one() } else { Rat::zero() }));
            row
        })
        .collect();
    for c in 0..n {
        let p = (c..n)
            .find(|&r| !a[r][c].is_zero())
            .expect("transition matrix is invertible");
        a.swap(c, p);
        let inv = a[c][c].recip();
        for x in a[c].iter_mut() {
            *x = &*x * &inv;
        }
        for r in 0..n {
            if r != c && !a[r][c].is_zero() {
                let f = a[r][c].clone();
                let pivot = a[c].clone();
                for (x, y) in a[r].iter_mut().zip(pivot.iter()) {
                    *x = &*x - &(&f * y);
                }
            }
        }
    }
    a.into_iter().map(|r| r[n..].to_vec()).collect()
}

type PExpansion = BTreeMap<Partition, Rat>;

fn p_product(a: &PExpansion, b: &PExpansion) -> PExpansion {
    let mut out = PExpansion::new();
    for (s, x) in a {
        for (t, y) in b {
            let e = out.entry(s.union(t)).or_insert_with(Rat::zero);
            *e = &*e + &(x * y);
        }
    }
    out.retain(|_, v| !v.is_zero());
    out
}

/// `h_k` (sign = false) or `e_k` (sign = true) in the power-sum basis.
fn single_part_in_p(k: usize, signed: bool) -> PExpansion {
    enumerate_partitions(k)
        .into_iter()
        .map(|tau| {
            let mut c = Rat::new(1, z_tau(&tau) as i64);
            if signed && (k - tau.len()) % 2 == 1 {
                c = -c;
            }
            (tau, c)
        })
        .collect()
}

/// Coefficient of the monomial `x^λ` in `p_τ`: ways to send each part of `τ`
/// to a variable so that the loads equal `λ`.
fn p_in_m(tau: &Partition, lambda: &Partition) -> i64 {
    fn go(parts: &[usize], load: &mut Vec<usize>, target: &[usize]) -> i64 {
        let Some((&k, rest)) = parts.split_first() else {
            return if load.as_slice() == target { 1 } else { 0 };
        };
        let mut total = 0;
        for j in 0..target.len() {
            if load[j] + k <= target[j] {
                load[j] += k;
                total += go(rest, load, target);
                load[j] -= k;
            }
        }
        total
    }
    go(tau.parts(), &mut vec![0; lambda.len()], lambda.parts())
}

fn build_transitions(n: usize) -> Transitions {
    let parts = enumerate_partitions(n);
    let index: HashMap<Partition, usize> = parts.iter().enumerate().map(|(i, p)| (p.clone(), i)).collect();
    let k = parts.len();
    let table = character_table(n);
    let mut to_p = HashMap::new();

    // s_λ = Σ_τ χ^λ(τ) p_τ / z_τ
    let s_to_p: Vec<Vec<Rat>> = (0..k)
        .map(|l| {
            (0..k)
                .map(|t| Rat::new(table.values[l][t], z_tau(&parts[t]) as i64))
                .collect()
        })
        .collect();
    to_p.insert(Basis::S, s_to_p);

    for (basis, signed) in [(Basis::H, false), (Basis::E, true)] {
        let rows = parts
            .iter()
            .map(|lam| {
                let mut acc: PExpansion = [(Partition::default(), Rat::one())].into_iter().collect();
                for &part in lam.parts() {
                    acc = p_product(&acc, &single_part_in_p(part, signed));
                }
                let mut row = vec![Rat::zero(); k];
                for (tau, c) in acc {
                    row[index[&tau]] = c;
                }
                row
            })
            .collect();
        to_p.insert(basis, rows);
    }

    // p_τ = Σ_λ R[τ][λ] m_λ, so m = R^{-1} p
    let p_to_m: Vec<Vec<Rat>> = parts
        .iter()
        .map(|tau| parts.iter().map(|lam| Rat::from_int(p_in_m(tau, lam))).collect())
        .collect();
    to_p.insert(Basis::M, invert(&p_to_m));

    let identity: Vec<Vec<Rat>> = (0..k)
        .map(|i| (0..k).map(|j| if i == j { Rat::one() } else { Rat::zero() }).collect())
        .collect();
    to_p.insert(Basis::P, identity);

    let mut from_p = HashMap::new();
    for (b, m) in &to_p {
        let inv = if *b == Basis::S {
            // p_τ = Σ_λ χ^λ(τ) s_λ
            (0..k)
                .map(|t| (0..k).map(|l| Rat::from_int(table.values[l][t])).collect())
                .collect()
        } else if *b == Basis::M {
            p_to_m.clone()
        } else {
            invert(m)
        };
        from_p.insert(*b, inv);
    }
    Transitions {
        parts,
        index,
        to_p,
        from_p,
    }
}

fn transitions(n: usize) -> Arc<Transitions> {
    static T: OnceLock<Mutex<HashMap<usize, Arc<Transitions>>>> = OnceLock::new();
    let cache = T.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(t) = cache.lock().unwrap().get(&n) {
        return t.clone();
    }
    let t = Arc::new(build_transitions(n));
    cache.lock().unwrap().insert(n, t.clone());
    t
}

impl SymFunc {
    pub fn zero(n: usize, basis: Basis) -> SymFunc {
        SymFunc {
            n,
            basis,
            coeffs: BTreeMap::new(),
        }
    }

    /// The single basis element `b_λ`.
    pub fn basis_element(basis: Basis, lambda: &Partition) -> SymFunc {
        let mut f = SymFunc::zero(lambda.size(), basis);
        f.coeffs.insert(lambda.clone(), RatFunc::one());
        f
    }

    pub fn schur(lambda: &Partition) -> SymFunc {
        SymFunc::basis_element(Basis::S, lambda)
    }

    pub fn from_coeffs(n: usize, basis: Basis, coeffs: impl IntoIterator<Item = (Partition, RatFunc)>) -> SymFunc {
        let mut f = SymFunc::zero(n, basis);
        for (p, c) in coeffs {
            assert_eq!(p.size(), n, "partition {p} has the wrong size");
            f.add_coeff(p, &c);
        }
        f
    }

    fn add_coeff(&mut self, p: Partition, c: &RatFunc) {
        if c.is_zero() {
            return;
        }
        let sum = match self.coeffs.get(&p) {
            Some(old) => old + c,
            None => c.clone(),
        };
        if sum.is_zero() {
            self.coeffs.remove(&p);
        } else {
            self.coeffs.insert(p, sum);
        }
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn coeff(&self, p: &Partition) -> RatFunc {
        self.coeffs.get(p).cloned().unwrap_or_default()
    }

    /// Nonzero coefficients in partition order.
    pub fn coeffs(&self) -> impl Iterator<Item = (&Partition, &RatFunc)> {
        self.coeffs.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add(&self, o: &SymFunc) -> SymFunc {
        assert_eq!(self.n, o.n, "degree mismatch");
        let o = o.convert_basis(self.basis);
        let mut r = self.clone();
        for (p, c) in o.coeffs {
            r.add_coeff(p, &c);
        }
        r
    }

    pub fn scale(&self, c: &RatFunc) -> SymFunc {
        if c.is_zero() {
            return SymFunc::zero(self.n, self.basis);
        }
        SymFunc {
            n: self.n,
            basis: self.basis,
            coeffs: self.coeffs.iter().map(|(p, v)| (p.clone(), v * c)).collect(),
        }
    }

    /// Applies `g` to every coefficient.
    pub fn map_coeffs(&self, g: impl Fn(&RatFunc) -> RatFunc) -> SymFunc {
        SymFunc::from_coeffs(self.n, self.basis, self.coeffs.iter().map(|(p, c)| (p.clone(), g(c))))
    }

    /// The same element expressed in `target`.
    pub fn convert_basis(&self, target: Basis) -> SymFunc {
        if target == self.basis {
            return self.clone();
        }
        let tr = transitions(self.n);
        let k = tr.parts.len();
        let mut p = vec![RatFunc::zero(); k];
        let to_p = &tr.to_p[&self.basis];
        for (lam, c) in &self.coeffs {
            for (t, m) in to_p[tr.index[lam]].iter().enumerate() {
                if !m.is_zero() {
                    p[t] = &p[t] + &(c * &RatFunc::constant(m.clone()));
                }
            }
        }
        let from_p = &tr.from_p[&target];
        let mut out = vec![RatFunc::zero(); k];
        for (t, c) in p.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (l, m) in from_p[t].iter().enumerate() {
                if !m.is_zero() {
                    out[l] = &out[l] + &(c * &RatFunc::constant(m.clone()));
                }
            }
        }
        SymFunc::from_coeffs(self.n, target, tr.parts.iter().cloned().zip(out))
    }

    /// Product in the power-sum basis; the result has degree `n + m`.
    pub fn mul(&self, o: &SymFunc) -> SymFunc {
        let a = self.convert_basis(Basis::P);
        let b = o.convert_basis(Basis::P);
        let mut r = SymFunc::zero(self.n + o.n, Basis::P);
        for (s, x) in &a.coeffs {
            for (t, y) in &b.coeffs {
                r.add_coeff(s.union(t), &(x * y));
            }
        }
        r
    }

    /// Plethystic substitution `f[c(q,t)·X]` via `p_k -> c(q^k,t^k) p_k`,
    /// returned in the Schur basis.
    pub fn plethystic_eval(&self, a: &Alphabet) -> SymFunc {
        let p = self.convert_basis(Basis::P);
        let powers: Vec<RatFunc> = (0..=self.n)
            .map(|k| a.scalar.power_substitute(k.max(1) as u32))
            .collect();
        let out = p.coeffs.iter().map(|(tau, c)| {
            let mut f = c.clone();
            for &k in tau.parts() {
                f = &f * &powers[k];
            }
            (tau.clone(), f)
        });
        SymFunc::from_coeffs(self.n, Basis::P, out).convert_basis(Basis::S)
    }

    /// `f[1]`: every `p_k` evaluates to 1.
    pub fn principal_value_at_one(&self) -> RatFunc {
        let p = self.convert_basis(Basis::P);
        p.coeffs.values().fold(RatFunc::zero(), |acc, c| &acc + c)
    }

    /// `{"basis":"s","n":3,"coeffs":{"[3]":"1",...}}`.
    pub fn to_json(&self) -> Value {
        json!({"basis": self.basis.tag(), "n": self.n, "coeffs": self.coeffs_json()})
    }

    /// Just the `coeffs` object.
    pub fn coeffs_json(&self) -> Value {
        let mut m = Map::new();
        for (p, c) in &self.coeffs {
            m.insert(p.to_string(), Value::String(c.to_string()));
        }
        Value::Object(m)
    }
}

impl fmt::Display for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        for (k, (p, c)) in self.coeffs.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            if c.is_one() {
                write!(f, "{}{}", self.basis.tag(), p)?;
            } else {
                write!(f, "({c})*{}{}", self.basis.tag(), p)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// `f[c·X]` as a free function.
pub fn plethystic_eval(f: &SymFunc, a: &Alphabet) -> SymFunc {
    f.plethystic_eval(a)
}

pub fn convert_basis(f: &SymFunc, target: Basis) -> SymFunc {
    f.convert_basis(target)
}

pub fn principal_value_at_one(f: &SymFunc) -> RatFunc {
    f.principal_value_at_one()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn schur_two_in_power_sums() {
        let f = SymFunc::schur(&p("2")).convert_basis(Basis::P);
        assert_eq!(f.coeff(&p("2")), RatFunc::constant(Rat::new(1, 2)));
        assert_eq!(f.coeff(&p("1,1")), RatFunc::constant(Rat::new(1, 2)));
    }

    #[test]
    fn h_n_is_s_n() {
        for n in 1..6 {
            let one_row = Partition::new(vec![n]).unwrap();
            let f = SymFunc::basis_element(Basis::H, &one_row).convert_basis(Basis::S);
            assert_eq!(f, SymFunc::schur(&one_row));
        }
    }

    #[test]
    fn plethysm_examples() {
        let one_minus_q = &RatFunc::one() - &RatFunc::q();
        let a = Alphabet::scaled(one_minus_q.inverse());
        let f = SymFunc::basis_element(Basis::P, &p("2"))
            .plethystic_eval(&a)
            .convert_basis(Basis::P);
        let expect = (&RatFunc::one() - &RatFunc::q().pow(2)).inverse();
        assert_eq!(f.coeff(&p("2")), expect);
        let s1 = SymFunc::schur(&p("1"));
        assert_eq!(
            s1.plethystic_eval(&Alphabet::scaled(one_minus_q.clone())),
            s1.scale(&one_minus_q)
        );
    }

    #[test]
    fn value_at_one() {
        assert!(SymFunc::schur(&p("3")).principal_value_at_one().is_one());
        assert!(SymFunc::schur(&p("1,1")).principal_value_at_one().is_zero());
        assert!(SymFunc::basis_element(Basis::P, &p("2,1"))
            .principal_value_at_one()
            .is_one());
    }

    #[test]
    fn json_shape() {
        let f = SymFunc::schur(&p("2")).add(&SymFunc::schur(&p("1,1")).scale(&RatFunc::q()));
        assert_eq!(
            f.to_json().to_string(),
            r#"{"basis":"s","n":2,"coeffs":{"[2]":"1","[1,1]":"q"}}"#
        );
    }
}
