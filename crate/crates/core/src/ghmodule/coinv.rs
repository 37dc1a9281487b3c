//! Bigraded dimensions of the diagonal coinvariants `ℚ[x,y]/I_n`.

use std::collections::BTreeMap;

use serde_json::{json, Map, Value};

use super::{compositions, Bidegree, GhError};
use crate::exactcore::packed::Exps;
use crate::exactcore::sparse::SparseEchelon;
use crate::exactcore::Rat;

/// Largest supported `n`. At five points the top slices have ~2.6·10^4
/// columns and elimination runs for tens of minutes.
pub const COINV_MAX_N: usize = 4;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoinvariantTable {
    pub n: usize,
    pub dims: BTreeMap<Bidegree, usize>,
    pub total: usize,
}

impl CoinvariantTable {
    pub fn to_json(&self) -> Value {
        let mut m = Map::new();
        for ((r, s), d) in &self.dims {
            m.insert(format!("({r},{s})"), json!(d));
        }
        json!({"n": self.n, "dims": Value::Object(m), "total": self.total})
    }
}

/// Quotient dimension of one slice. `I_n` in bidegree `(r,s)` is spanned by
/// `p_{h,k}·m` with `1 ≤ h+k ≤ n` and `m` a monomial of bidegree `(r-h, s-k)`;
/// higher polarized power sums are polynomials in these.
fn quotient_dim(n: usize, (r, s): Bidegree) -> usize {
    let xs = compositions(n, r, 0);
    let ys = compositions(n, s, n);
    let ny = ys.len();
    let index = |e: &Exps| -> u32 {
        let ix = xs.binary_search_by(|a| e.0[..n].cmp(&a.0[..n])).expect("x part");
        let iy = ys
            .binary_search_by(|b| e.0[n..2 * n].cmp(&b.0[n..2 * n]))
            .expect("y part");
        (ix * ny + iy) as u32
    };
    let ncols = xs.len() * ny;
    let mut ech = SparseEchelon::new(ncols);
    'outer: for h in 0..=r.min(n as u32) {
        for k in 0..=s.min(n as u32 - h) {
            if h + k == 0 {
                continue;
            }
            for a in compositions(n, r - h, 0) {
                for b in compositions(n, s - k, n) {
                    let m = a.mul(&b);
                    let mut v: Vec<(u32, Rat)> = (0..n)
                        .map(|i| {
                            let mut e = m;
                            e.0[i] += h as u8;
                            e.0[n + i] += k as u8;
                            (index(&e), Rat::from_int(1))
                        })
                        .collect();
                    v.sort_unstable_by_key(|t| t.0);
                    ech.insert(&v);
                    if ech.rank() == ncols {
                        break 'outer;
                    }
                }
            }
        }
    }
    ncols - ech.rank()
}

/// Slice dimensions of `ℚ[x,y]/I_n`, computed until a whole total degree vanishes.
pub fn diagonal_coinvariants_dims(n: usize) -> Result<CoinvariantTable, GhError> {
    if n == 0 || n > COINV_MAX_N {
        return Err(GhError::OutOfRange(n, COINV_MAX_N));
    }
    let mut dims = BTreeMap::new();
    // The quotient is generated in degree one, so a zero total degree ends it.
    // The ordinary coinvariants already stop after degree n(n-1)/2.
    let bound = (n * (n - 1) / 2 + 1) as u32;
    for total in 0..=bound {
        let mut any = false;
        for r in 0..=total {
            let d = quotient_dim(n, (r, total - r));
            if d > 0 {
                dims.insert((r, total - r), d);
                any = true;
            }
        }
        if !any {
            break;
        }
    }
    let total = dims.values().sum();
    Ok(CoinvariantTable { n, dims, total })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_totals() {
        assert_eq!(diagonal_coinvariants_dims(1).unwrap().total, 1);
        let t = diagonal_coinvariants_dims(2).unwrap();
        assert_eq!(t.total, 3);
        assert_eq!(t.dims[&(0, 0)], 1);
        assert!(diagonal_coinvariants_dims(0).is_err());
    }
}
