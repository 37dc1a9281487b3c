//! Integer partitions, Young diagrams, and characters of the symmetric group.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartitionError {
    #[error("invalid partition {0:?}: parts must be positive and weakly decreasing")]
    Invalid(String),
}

/// A weakly decreasing list of positive parts.
///
/// Partitions order **reverse-lexicographically**: `[3] < [2,1] < [1,1,1]`,
/// matching [`enumerate_partitions`]. Sorted collections therefore list the
/// one-row partition first.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

/// A cell `(row, column)` of a Young diagram, both zero-based.
pub type Cell = (usize, usize);

/// Cycle types of permutations are partitions.
pub type CycleType = Partition;

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Partition, PartitionError> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(PartitionError::Invalid(format!("{parts:?}")));
        }
        Ok(Partition { parts })
    }

    /// Sorts and drops zeros.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Partition {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The `i`-th part (zero-based), or 0 past the end.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let m = self.part(0);
        Partition {
            parts: (0..m).map(|j| self.parts.iter().filter(|&&p| p > j).count()).collect(),
        }
    }

    /// Dominance: `self ≥ other` iff every prefix sum of `self` is at least
    /// the corresponding prefix sum of `other`. Both must have equal size.
    pub fn dominates(&self, other: &Partition) -> bool {
        if self.size() != other.size() {
            return false;
        }
        let (mut a, mut b) = (0, 0);
        for i in 0..self.len().max(other.len()) {
            a += self.part(i);
            b += other.part(i);
            if a < b {
                return false;
            }
        }
        true
    }

    /// `n(μ) = Σ (i-1) μ_i` with 1-based `i`.
    pub fn n_stat(&self) -> usize {
        self.parts.iter().enumerate().map(|(i, &p)| i * p).sum()
    }

    /// Diagram cells `{(i, j) : j < μ_{i+1}}` in lexicographic order.
    pub fn cells(&self) -> Vec<Cell> {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| (0..p).map(move |j| (i, j)))
            .collect()
    }

    pub fn contains_cell(&self, (i, j): Cell) -> bool {
        j < self.part(i)
    }

    /// Cells strictly to the right in the same row.
    pub fn arm(&self, (i, j): Cell) -> usize {
        self.part(i) - j - 1
    }

    /// Cells strictly below in the same column.
    pub fn leg(&self, (i, j): Cell) -> usize {
        self.parts.iter().skip(i + 1).filter(|&&p| p > j).count()
    }

    pub fn hook(&self, c: Cell) -> usize {
        self.arm(c) + self.leg(c) + 1
    }

    /// Removable corners as cells.
    pub fn corners(&self) -> Vec<Cell> {
        (0..self.len())
            .filter(|&i| self.part(i) > self.part(i + 1))
            .map(|i| (i, self.part(i) - 1))
            .collect()
    }

    /// Multiplicities `m_k` of each part size `k >= 1` (index 0 unused).
    pub fn multiplicities(&self) -> Vec<usize> {
        let mut m = vec![0; self.part(0) + 1];
        for &p in &self.parts {
            m[p] += 1;
        }
        m
    }

    /// Union of multisets of parts.
    pub fn union(&self, o: &Partition) -> Partition {
        let mut v = self.parts.clone();
        v.extend_from_slice(&o.parts);
        Partition::from_unsorted(v)
    }
}

impl Ord for Partition {
    fn cmp(&self, o: &Partition) -> Ordering {
        o.parts.cmp(&self.parts)
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, o: &Partition) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

impl std::ops::Index<usize> for Partition {
    type Output = usize;
    fn index(&self, i: usize) -> &usize {
        &self.parts[i]
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, p) in self.parts.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Partition {
    type Err = PartitionError;

    /// Accepts `2,1`, `[2,1]`, `2 1`, or the empty partition `[]`.
    fn from_str(s: &str) -> Result<Partition, PartitionError> {
        let inner = s.trim().trim_start_matches('[').trim_end_matches(']');
        let bad = || PartitionError::Invalid(s.to_string());
        let parts: Vec<usize> = inner
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|x| !x.is_empty())
            .map(|x| x.parse().map_err(|_| bad()))
            .collect::<Result<_, _>>()?;
        Partition::new(parts)
    }
}

/// All partitions of `n` in reverse-lexicographic order.
pub fn enumerate_partitions(n: usize) -> Vec<Partition> {
    fn go(n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if n == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        for p in (1..=max.min(n)).rev() {
            cur.push(p);
            go(n - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// Number of standard Young tableaux, by the hook length formula.
pub fn syt_count(lambda: &Partition) -> u64 {
    let fact: u128 = (1..=lambda.size() as u128).product();
    let hooks: u128 = lambda.cells().iter().map(|&c| lambda.hook(c) as u128).product();
    (fact / hooks) as u64
}

pub fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

/// Size of the centralizer of a permutation of cycle type `tau`:
/// `Π k^{m_k} m_k!`.
pub fn z_tau(tau: &CycleType) -> u64 {
    tau.multiplicities()
        .iter()
        .enumerate()
        .skip(1)
        .map(|(k, &m)| (k as u64).pow(m as u32) * factorial(m))
        .product()
}

/// Number of permutations with cycle type `tau`.
pub fn class_size(tau: &CycleType) -> u64 {
    factorial(tau.size()) / z_tau(tau)
}

/// A permutation of `0..n` (as an image vector) with cycle type `tau`,
/// built from consecutive cycles `(0 1 … τ₁-1)(τ₁ …)…`.
pub fn cycle_representative(tau: &CycleType) -> Vec<usize> {
    let mut w = Vec::with_capacity(tau.size());
    let mut start = 0;
    for &k in tau.parts() {
        for i in 0..k {
            w.push(start + (i + 1) % k);
        }
        start += k;
    }
    w
}

/// The cycle type of a permutation given as an image vector.
pub fn cycle_type(w: &[usize]) -> CycleType {
    let mut seen = vec![false; w.len()];
    let mut parts = Vec::new();
    for i in 0..w.len() {
        if seen[i] {
            continue;
        }
        let mut j = i;
        let mut len = 0;
        while !seen[j] {
            seen[j] = true;
            j = w[j];
            len += 1;
        }
        parts.push(len);
    }
    Partition::from_unsorted(parts)
}

/// Sign of a permutation.
pub fn sign(w: &[usize]) -> i64 {
    let tau = cycle_type(w);
    if (tau.size() - tau.len()).is_multiple_of(2) {
        1
    } else {
        -1
    }
}

fn beta_set(lambda: &[usize], len: usize) -> Vec<usize> {
    (0..len)
        .map(|i| lambda.get(i).copied().unwrap_or(0) + (len - 1 - i))
        .collect()
}

fn from_beta(beta: &[usize]) -> Vec<usize> {
    let mut b = beta.to_vec();
    b.sort_unstable_by(|a, c| c.cmp(a));
    let l = b.len();
    let mut parts: Vec<usize> = b.iter().enumerate().map(|(i, &x)| x - (l - 1 - i)).collect();
    parts.retain(|&p| p > 0);
    parts
}

type CharKey = (Vec<usize>, Vec<usize>);

fn char_cache() -> &'static Mutex<HashMap<CharKey, i64>> {
    static C: OnceLock<Mutex<HashMap<CharKey, i64>>> = OnceLock::new();
    C.get_or_init(|| Mutex::new(HashMap::new()))
}

fn mn(lambda: &[usize], tau: &[usize]) -> i64 {
    if tau.is_empty() {
        return if lambda.is_empty() { 1 } else { 0 };
    }
    let key = (lambda.to_vec(), tau.to_vec());
    if let Some(&v) = char_cache().lock().unwrap().get(&key) {
        return v;
    }
    let k = tau[0];
    let rest = &tau[1..];
    let l = lambda.len();
    let beta = beta_set(lambda, l);
    let mut total = 0i64;
    for (idx, &b) in beta.iter().enumerate() {
        if b < k || beta.contains(&(b - k)) {
            continue;
        }
        // removing a rim hook of length k moves bead b to b-k; the leg length
        // is the number of beads strictly in between
        let between = beta.iter().filter(|&&x| x > b - k && x < b).count();
        let mut nb = beta.clone();
        nb[idx] = b - k;
        let sub = from_beta(&nb);
        let s = if between % 2 == 0 { 1 } else { -1 };
        total += s * mn(&sub, rest);
    }
    char_cache().lock().unwrap().insert(key, total);
    total
}

/// The irreducible character `χ^λ` at cycle type `τ`, by the
/// Murnaghan–Nakayama rule.
pub fn character_value(lambda: &Partition, tau: &CycleType) -> i64 {
    assert_eq!(lambda.size(), tau.size(), "character arguments of different sizes");
    mn(&lambda.parts, &tau.parts)
}

/// Character table of `S_n`: rows are irreducibles `λ`, columns cycle types
/// `τ`, both in [`enumerate_partitions`] order.
#[derive(Debug)]
pub struct CharacterTable {
    pub partitions: Vec<Partition>,
    pub values: Vec<Vec<i64>>,
}

impl CharacterTable {
    pub fn index_of(&self, p: &Partition) -> usize {
        self.partitions
            .iter()
            .position(|x| x == p)
            .expect("partition of the right size")
    }
}

/// Cached character table of `S_n`.
pub fn character_table(n: usize) -> Arc<CharacterTable> {
    static T: OnceLock<Mutex<HashMap<usize, Arc<CharacterTable>>>> = OnceLock::new();
    let cache = T.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(t) = cache.lock().unwrap().get(&n) {
        return t.clone();
    }
    let ps = enumerate_partitions(n);
    let values = ps
        .iter()
        .map(|l| ps.iter().map(|t| character_value(l, t)).collect())
        .collect();
    let t = Arc::new(CharacterTable { partitions: ps, values });
    cache.lock().unwrap().insert(n, t.clone());
    t
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn enumeration_order() {
        let v: Vec<String> = enumerate_partitions(4).iter().map(|x| x.to_string()).collect();
        assert_eq!(v, ["[4]", "[3,1]", "[2,2]", "[2,1,1]", "[1,1,1,1]"]);
        let mut sorted = enumerate_partitions(5);
        sorted.reverse();
        sorted.sort();
        assert_eq!(sorted, enumerate_partitions(5));
        assert_eq!(enumerate_partitions(0), vec![Partition::default()]);
    }

    #[test]
    fn arm_leg_hook() {
        let mu = p("3,1");
        assert_eq!(mu.cells(), vec![(0, 0), (0, 1), (0, 2), (1, 0)]);
        assert_eq!((mu.arm((0, 0)), mu.leg((0, 0))), (2, 1));
        assert_eq!(mu.hook((0, 1)), 2);
        assert_eq!(mu.n_stat(), 1);
        assert_eq!(mu.conjugate(), p("2,1,1"));
    }

    #[test]
    fn dominance() {
        assert!(p("3,1").dominates(&p("2,2")));
        assert!(!p("2,2").dominates(&p("3,1")));
        assert!(!p("3,1,1,1").dominates(&p("2,2,2")));
        assert!(!p("2,2,2").dominates(&p("3,1,1,1")));
    }

    #[test]
    fn characters_small() {
        assert_eq!(character_value(&p("2,1"), &p("3")), -1);
        assert_eq!(character_value(&p("2,1"), &p("1,1,1")), 2);
        assert_eq!(syt_count(&p("3,2")), 5);
        assert_eq!(z_tau(&p("2,2,1")), 8);
        assert_eq!(cycle_type(&cycle_representative(&p("3,2,2"))), p("3,2,2"));
    }

    #[test]
    fn rejects_bad_input() {
        assert!("1,2".parse::<Partition>().is_err());
        assert!("2,0".parse::<Partition>().is_err());
        assert!("x".parse::<Partition>().is_err());
    }
}
