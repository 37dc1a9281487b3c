//! Fixed-width exponent vectors and monomial index tables for the hot loops.

use num_traits::Zero;
use rustc_hash::FxHashMap;

use super::{MPoly, Monomial, Rat, Var};

/// Maximum number of variables an [`Exps`] can hold.
pub const MAX_VARS: usize = 16;

/// Exponent vector over an ordered list of variables.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Exps(pub [u8; MAX_VARS]);

impl Exps {
    pub fn degree(&self, range: std::ops::Range<usize>) -> u32 {
        self.0[range].iter().map(|&e| e as u32).sum()
    }

    pub fn with(&self, i: usize, e: u8) -> Exps {
        let mut x = *self;
        x.0[i] = e;
        x
    }

    pub fn mul(&self, o: &Exps) -> Exps {
        let mut x = *self;
        for i in 0..MAX_VARS {
            x.0[i] = x.0[i].checked_add(o.0[i]).expect("exponent overflow");
        }
        x
    }
}

/// All exponent vectors on `nvars` consecutive slots starting at `offset`
/// with total degree `d`, in lexicographically decreasing order.
pub fn compositions(nvars: usize, d: u32, offset: usize) -> Vec<Exps> {
    fn go(i: usize, nvars: usize, left: u32, offset: usize, cur: &mut Exps, out: &mut Vec<Exps>) {
        if i + 1 == nvars {
            cur.0[offset + i] = left as u8;
            out.push(*cur);
            cur.0[offset + i] = 0;
            return;
        }
        for e in (0..=left).rev() {
            cur.0[offset + i] = e as u8;
            go(i + 1, nvars, left - e, offset, cur, out);
        }
        cur.0[offset + i] = 0;
    }
    let mut out = Vec::new();
    if nvars == 0 {
        if d == 0 {
            out.push(Exps::default());
        }
        return out;
    }
    go(0, nvars, d, offset, &mut Exps::default(), &mut out);
    out
}

/// A polynomial as `(exponents, coefficient)` terms.
pub type PackedPoly = Vec<(Exps, Rat)>;

/// Sums duplicate exponents, drops zeros, and sorts by exponent.
pub fn normalize(terms: impl IntoIterator<Item = (Exps, Rat)>) -> PackedPoly {
    let mut acc: FxHashMap<Exps, Rat> = FxHashMap::default();
    for (e, c) in terms {
        *acc.entry(e).or_insert_with(Rat::zero) += &c;
    }
    let mut out: PackedPoly = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
    out.sort_unstable_by_key(|t| t.0);
    out
}

pub fn mul_packed(a: &[(Exps, Rat)], b: &[(Exps, Rat)]) -> PackedPoly {
    normalize(
        a.iter()
            .flat_map(|(e, c)| b.iter().map(move |(f, d)| (e.mul(f), c * d))),
    )
}

/// Assigns dense column indices to monomials as they are first seen.
#[derive(Clone, Debug, Default)]
pub struct MonomialTable {
    index: FxHashMap<Exps, u32>,
    list: Vec<Exps>,
}

impl MonomialTable {
    pub fn new() -> MonomialTable {
        MonomialTable::default()
    }

    pub fn from_list(list: Vec<Exps>) -> MonomialTable {
        let index = list.iter().enumerate().map(|(i, e)| (*e, i as u32)).collect();
        MonomialTable { index, list }
    }

    pub fn id(&mut self, e: Exps) -> u32 {
        if let Some(&i) = self.index.get(&e) {
            return i;
        }
        let i = self.list.len() as u32;
        self.index.insert(e, i);
        self.list.push(e);
        i
    }

    pub fn get(&self, e: &Exps) -> Option<u32> {
        self.index.get(e).copied()
    }

    pub fn exps(&self, i: u32) -> Exps {
        self.list[i as usize]
    }

    pub fn len(&self) -> usize {
        self.list.len()
    }

    pub fn is_empty(&self) -> bool {
        self.list.is_empty()
    }
}

/// Converts between [`MPoly`] and packed exponent vectors over a fixed
/// variable order.
#[derive(Clone, Debug)]
pub struct VarLayout {
    pub vars: Vec<Var>,
}

impl VarLayout {
    pub fn new(vars: Vec<Var>) -> VarLayout {
        assert!(vars.len() <= MAX_VARS, "too many variables for packed exponents");
        VarLayout { vars }
    }

    pub fn slot(&self, v: Var) -> Option<usize> {
        self.vars.iter().position(|&w| w == v)
    }

    pub fn pack(&self, m: &Monomial) -> Option<Exps> {
        let mut e = Exps::default();
        for &(v, k) in m.pairs() {
            let s = self.slot(v)?;
            if !(0..=255).contains(&k) {
                return None;
            }
            e.0[s] = k as u8;
        }
        Some(e)
    }

    pub fn unpack(&self, e: &Exps) -> Monomial {
        Monomial::from_pairs(self.vars.iter().enumerate().map(|(i, &v)| (v, e.0[i] as i32)))
    }

    /// Packs every term; `None` if a variable is outside the layout.
    pub fn pack_poly(&self, p: &MPoly) -> Option<Vec<(Exps, Rat)>> {
        p.terms().map(|(m, c)| Some((self.pack(m)?, c.clone()))).collect()
    }

    pub fn unpack_poly<'a>(&self, terms: impl IntoIterator<Item = (&'a Exps, &'a Rat)>) -> MPoly {
        MPoly::from_terms(terms.into_iter().map(|(e, c)| (self.unpack(e), c.clone())))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn composition_counts() {
        assert_eq!(compositions(3, 4, 0).len(), 15);
        assert_eq!(compositions(1, 2, 5)[0].0[5], 2);
        assert_eq!(compositions(0, 0, 0).len(), 1);
        assert!(compositions(0, 1, 0).is_empty());
    }
}
