//! Modified Macdonald polynomials from their triangularity characterization.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use num_traits::One;
use thiserror::Error;

use crate::exactcore::{has_nonneg_int_coeffs, kernel_basis, Matrix, Rat, RatFunc};
use crate::partcomb::{enumerate_partitions, syt_count, Partition};
use crate::symfunc::{Alphabet, Basis, SymFunc};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MacdonaldError {
    #[error("characterization failure for {mu}: solution space has dimension {dim}")]
    CharacterizationFailure { mu: Partition, dim: usize },
    #[error("characterization failure for {0}: normalization value is 0")]
    ZeroNormalization(Partition),
}

/// `H̃_μ` in the Schur basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HtildeResult {
    pub mu: Partition,
    pub expansion: SymFunc,
}

impl HtildeResult {
    /// `K̃_{λμ}(q,t)`.
    pub fn coeff(&self, lambda: &Partition) -> RatFunc {
        self.expansion.coeff(lambda)
    }

    /// Coefficients that failed to reduce to polynomials. Empty when healthy.
    pub fn non_polynomial(&self) -> Vec<Partition> {
        self.expansion
            .coeffs()
            .filter(|(_, c)| !c.is_polynomial())
            .map(|(p, _)| p.clone())
            .collect()
    }
}

/// Square table of `K̃_{λμ}`, rows `λ` and columns `μ` in reverse-lex order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KostkaTable {
    pub n: usize,
    pub partitions: Vec<Partition>,
    pub entries: Vec<Vec<RatFunc>>,
}

impl KostkaTable {
    pub fn get(&self, lambda: &Partition, mu: &Partition) -> &RatFunc {
        let i = self.partitions.iter().position(|p| p == lambda).expect("row partition");
        let j = self.partitions.iter().position(|p| p == mu).expect("column partition");
        &self.entries[i][j]
    }

    pub fn column(&self, mu: &Partition) -> Vec<RatFunc> {
        let j = self.partitions.iter().position(|p| p == mu).expect("column partition");
        self.entries.iter().map(|r| r[j].clone()).collect()
    }
}

fn one_minus(x: RatFunc) -> RatFunc {
    &RatFunc::one() - &x
}

/// Rows `ν` of the `s`-basis matrix of `s_λ -> s_λ[X(1-z)]` with `ν` not
/// dominating `bound`. These cut out `span{s_λ[X/(1-z)] : λ ≥ bound}`,
/// because the two plethysms are mutually inverse.
pub(crate) fn span_functionals(bound: &Partition, z: &RatFunc) -> Vec<Vec<RatFunc>> {
    let parts = enumerate_partitions(bound.size());
    let alpha = Alphabet::scaled(one_minus(z.clone()));
    let columns: Vec<SymFunc> = parts
        .iter()
        .map(|l| SymFunc::schur(l).plethystic_eval(&alpha))
        .collect();
    parts
        .iter()
        .filter(|nu| !nu.dominates(bound))
        .map(|nu| columns.iter().map(|c| c.coeff(nu)).collect())
        .collect()
}

fn compute_htilde(mu: &Partition) -> Result<HtildeResult, MacdonaldError> {
    let n = mu.size();
    let parts = enumerate_partitions(n);
    let mut rows = span_functionals(mu, &RatFunc::q());
    rows.extend(span_functionals(&mu.conjugate(), &RatFunc::t()));
    let kernel = if rows.is_empty() {
        // Only possible for n = 1.
        vec![vec![RatFunc::one(); parts.len()]]
    } else {
        kernel_basis(&Matrix::from_rows(rows).expect("rectangular"))
    };
    if kernel.len() != 1 {
        return Err(MacdonaldError::CharacterizationFailure {
            mu: mu.clone(),
            dim: kernel.len(),
        });
    }
    let f = SymFunc::from_coeffs(n, Basis::S, parts.into_iter().zip(kernel.into_iter().next().unwrap()));
    let norm = f.principal_value_at_one();
    if norm.is_zero() {
        return Err(MacdonaldError::ZeroNormalization(mu.clone()));
    }
    Ok(HtildeResult {
        mu: mu.clone(),
        expansion: f.scale(&norm.inverse()),
    })
}

/// `H̃_μ(x;q,t)`, memoized per process.
pub fn htilde(mu: &Partition) -> Result<HtildeResult, MacdonaldError> {
    assert!(mu.size() >= 1, "htilde needs a nonempty partition");
    static MEMO: OnceLock<Mutex<HashMap<Partition, Arc<HtildeResult>>>> = OnceLock::new();
    let memo = MEMO.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(r) = memo.lock().unwrap().get(mu) {
        return Ok((**r).clone());
    }
    let r = compute_htilde(mu)?;
    memo.lock().unwrap().insert(mu.clone(), Arc::new(r.clone()));
    Ok(r)
}

pub fn ktilde_table(n: usize) -> Result<KostkaTable, MacdonaldError> {
    let partitions = enumerate_partitions(n);
    let cols = partitions.iter().map(htilde).collect::<Result<Vec<_>, _>>()?;
    let entries = partitions
        .iter()
        .map(|l| cols.iter().map(|c| c.coeff(l)).collect())
        .collect();
    Ok(KostkaTable { n, partitions, entries })
}

/// An entry of `K = t^{n(μ)} K̃(q, 1/t)` that is not a polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NonPolynomialEntry {
    pub lambda: Partition,
    pub value: RatFunc,
}

/// `K_{λμ}(q,t)` for every `λ`, in table row order.
pub fn ktilde_to_k(mu: &Partition, table: &KostkaTable) -> Result<Vec<RatFunc>, Vec<NonPolynomialEntry>> {
    let shift = RatFunc::t().pow(mu.n_stat() as i32);
    let col: Vec<RatFunc> = table.column(mu).iter().map(|k| &shift * &k.invert_t()).collect();
    let bad: Vec<NonPolynomialEntry> = table
        .partitions
        .iter()
        .zip(&col)
        .filter(|(_, v)| !v.is_polynomial())
        .map(|(l, v)| NonPolynomialEntry {
            lambda: l.clone(),
            value: v.clone(),
        })
        .collect();
    if bad.is_empty() {
        Ok(col)
    } else {
        Err(bad)
    }
}

/// One `(λ, μ)` cell of a positivity report.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PositivityEntry {
    pub lambda: Partition,
    pub mu: Partition,
    pub value: RatFunc,
    pub polynomial: bool,
    pub nonneg_integer: bool,
    /// A monomial with a negative or non-integral coefficient, if any.
    pub offending: Option<String>,
    pub value_at_one: Option<Rat>,
    pub syt: u64,
}

impl PositivityEntry {
    pub fn consistent(&self) -> bool {
        self.value_at_one == Some(Rat::from(self.syt as i64))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PositivityReport {
    pub n: usize,
    pub entries: Vec<PositivityEntry>,
}

impl PositivityReport {
    pub fn all_positive(&self) -> bool {
        self.entries.iter().all(|e| e.nonneg_integer)
    }

    pub fn all_consistent(&self) -> bool {
        self.entries.iter().all(PositivityEntry::consistent)
    }

    pub fn violations(&self) -> impl Iterator<Item = &PositivityEntry> {
        self.entries.iter().filter(|e| !e.nonneg_integer)
    }
}

pub fn positivity_report(n: usize) -> Result<PositivityReport, MacdonaldError> {
    let table = ktilde_table(n)?;
    let mut entries = Vec::new();
    for (j, mu) in table.partitions.iter().enumerate() {
        for (i, lambda) in table.partitions.iter().enumerate() {
            let value = table.entries[i][j].clone();
            let polynomial = value.is_polynomial();
            let nonneg_integer = has_nonneg_int_coeffs(&value);
            let offending = if polynomial && !nonneg_integer {
                value.to_mpoly().and_then(|p| {
                    p.terms()
                        .find(|(_, c)| !c.is_integer() || c.signum() < 0)
                        .map(|(m, c)| format!("{c}*{m}"))
                })
            } else if !polynomial {
                Some(value.to_string())
            } else {
                None
            };
            entries.push(PositivityEntry {
                lambda: lambda.clone(),
                mu: mu.clone(),
                value_at_one: value.eval(&Rat::one(), &Rat::one()).ok(),
                syt: syt_count(lambda),
                value,
                polynomial,
                nonneg_integer,
                offending,
            });
        }
    }
    Ok(PositivityReport { n, entries })
}

/// `H̃_μ(x;0,t)`.
pub fn q0_specialization(mu: &Partition) -> Result<SymFunc, MacdonaldError> {
    let h = htilde(mu)?;
    Ok(h.expansion.map_coeffs(|c| {
        c.substitute(&RatFunc::zero(), &RatFunc::t())
            .expect("coefficients are polynomials")
    }))
}

/// `∏_x (1 - q^{-a} t^{1+l}) (1 - q^{1+a} t^{-l})` over the cells of `μ`.
pub fn local_hilbert_denominator(mu: &Partition) -> RatFunc {
    let mut out = RatFunc::one();
    for c in mu.cells() {
        let a = mu.arm(c) as i32;
        let l = mu.leg(c) as i32;
        out = &out * &one_minus(RatFunc::monomial(Rat::one(), -a, 1 + l));
        out = &out * &one_minus(RatFunc::monomial(Rat::one(), 1 + a, -l));
    }
    out
}

/// Map from `λ` to `K̃_{λμ}` for the whole column.
pub fn ktilde_column(mu: &Partition) -> Result<BTreeMap<Partition, RatFunc>, MacdonaldError> {
    let h = htilde(mu)?;
    Ok(enumerate_partitions(mu.size())
        .into_iter()
        .map(|l| (l.clone(), h.coeff(&l)))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn rf(s: &str) -> RatFunc {
        s.parse().unwrap()
    }

    #[test]
    fn small_cases() {
        assert_eq!(htilde(&p("1")).unwrap().expansion, SymFunc::schur(&p("1")));
        let h2 = htilde(&p("2")).unwrap();
        assert_eq!(h2.coeff(&p("2")), rf("1"));
        assert_eq!(h2.coeff(&p("1,1")), rf("q"));
        let h11 = htilde(&p("1,1")).unwrap();
        assert_eq!(h11.coeff(&p("1,1")), rf("t"));
        let h21 = htilde(&p("2,1")).unwrap();
        assert_eq!(h21.coeff(&p("2,1")), rf("q + t"));
        assert_eq!(h21.coeff(&p("1,1,1")), rf("q*t"));
    }

    #[test]
    fn k_from_ktilde() {
        let table = ktilde_table(2).unwrap();
        let k = ktilde_to_k(&p("1,1"), &table).unwrap();
        assert_eq!(k, vec![rf("t"), rf("1")]);
        assert_eq!(ktilde_to_k(&p("2"), &table).unwrap(), table.column(&p("2")));
    }

    #[test]
    fn denominators() {
        assert_eq!(
            local_hilbert_denominator(&p("1")),
            &one_minus(RatFunc::t()) * &one_minus(RatFunc::q())
        );
        let d = local_hilbert_denominator(&p("2"));
        let expect = [rf("t"), RatFunc::monomial(Rat::one(), -1, 1), rf("q"), rf("q^2")]
            .into_iter()
            .fold(RatFunc::one(), |acc, x| &acc * &one_minus(x));
        assert_eq!(d, expect);
    }

    #[test]
    fn q_zero() {
        assert_eq!(q0_specialization(&p("2")).unwrap(), SymFunc::schur(&p("2")));
        let f = q0_specialization(&p("1,1")).unwrap();
        assert_eq!(f.coeff(&p("1,1")), rf("t"));
    }
}
