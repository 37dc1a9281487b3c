//! Slow, obviously-correct reference implementations shared by the
//! integration tests.

#![allow(dead_code)]

use msw::exactcore::{determinant, kernel_basis, rank, solve_linear, Field, Matrix, Rat, RatFunc, SparseEchelon};
use msw::partcomb::{character_table, enumerate_partitions, syt_count, z_tau, Partition};
use num_traits::Zero;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

/// Textbook Gauss-Jordan with field division. Returns the reduced rows,
/// the pivot columns and the determinant factor `±∏ pivots` (square only).
pub fn naive_rref<T: Field>(m: &[Vec<T>], ncols: usize) -> (Vec<Vec<T>>, Vec<usize>, T) {
    let mut a: Vec<Vec<T>> = m.to_vec();
    let mut pivots = Vec::new();
    let mut det = T::one();
    let mut row = 0;
    for col in 0..ncols {
        let Some(p) = (row..a.len()).find(|&i| !a[i][col].is_zero()) else {
            continue;
        };
        if p != row {
            a.swap(p, row);
            det = -det;
        }
        let piv = a[row][col].clone();
        det = det * &piv;
        a[row] = a[row].iter().map(|x| x.clone() / &piv).collect();
        for i in 0..a.len() {
            if i != row && !a[i][col].is_zero() {
                let f = a[i][col].clone();
                let pr = a[row].clone();
                for (x, y) in a[i].iter_mut().zip(&pr) {
                    *x = x.clone() - &(f.clone() * y);
                }
            }
        }
        pivots.push(col);
        row += 1;
        if row == a.len() {
            break;
        }
    }
    if pivots.len() < a.len().min(ncols) || a.len() != ncols {
        det = T::zero();
    }
    a.truncate(pivots.len());
    (a, pivots, det)
}

pub fn naive_kernel<T: Field>(m: &[Vec<T>], ncols: usize) -> Vec<Vec<T>> {
    let (r, pivots, _) = naive_rref(m, ncols);
    (0..ncols)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut v = vec![T::zero(); ncols];
            v[free] = T::one();
            for (row, &p) in r.iter().zip(&pivots) {
                v[p] = -row[free].clone();
            }
            v
        })
        .collect()
}

fn mat_vec<T: Field>(m: &[Vec<T>], v: &[T]) -> Vec<T> {
    m.iter()
        .map(|r| r.iter().zip(v).fold(T::zero(), |acc, (a, b)| acc + &(a.clone() * b)))
        .collect()
}

/// Small random matrix with a random number of dependent rows.
pub fn random_matrix<T: Field>(rng: &mut StdRng, max: usize, entry: &dyn Fn(&mut StdRng) -> T) -> Vec<Vec<T>> {
    let rows = rng.gen_range(1..=max);
    let cols = rng.gen_range(1..=max);
    let mut m: Vec<Vec<T>> = (0..rows).map(|_| (0..cols).map(|_| entry(rng)).collect()).collect();
    // Overwrite some rows by combinations of earlier ones.
    for i in 1..rows {
        if rng.gen_bool(0.3) {
            let (j, c) = (rng.gen_range(0..i), entry(rng));
            let k = rng.gen_range(0..i);
            m[i] = m[j].iter().zip(&m[k]).map(|(a, b)| a.clone() * &c + b).collect();
        }
    }
    m
}

pub fn small_rat(rng: &mut StdRng) -> Rat {
    if rng.gen_bool(0.25) {
        return Rat::from_int(0);
    }
    Rat::new(rng.gen_range(-6..=6), rng.gen_range(1..=4))
}

pub fn small_ratfunc(rng: &mut StdRng) -> RatFunc {
    let r = small_rat(rng);
    if r.is_zero() {
        return RatFunc::zero();
    }
    let m = RatFunc::monomial(r, rng.gen_range(-1..=2), rng.gen_range(-1..=2));
    match rng.gen_range(0..4) {
        0 => &m + &RatFunc::from_int(rng.gen_range(-2..=2)),
        1 => &m / &(&RatFunc::q() + &RatFunc::from_int(rng.gen_range(1..=3))),
        _ => m,
    }
}

/// Compares rank, kernel, determinant and solving against the reference.
fn compare_one<T>(m: &[Vec<T>]) -> Result<(), String>
where
    T: Field + msw::exactcore::FractionFree + std::fmt::Display,
{
    let ncols = m[0].len();
    let mat = Matrix::from_rows(m.to_vec()).unwrap();
    let (_, pivots, ndet) = naive_rref(m, ncols);
    if rank(&mat) != pivots.len() {
        return Err(format!("rank {} vs naive {} for {m:?}", rank(&mat), pivots.len()));
    }
    let ker = kernel_basis(&mat);
    if ker.len() != ncols - pivots.len() {
        return Err(format!(
            "kernel dimension {} vs {} for {m:?}",
            ker.len(),
            ncols - pivots.len()
        ));
    }
    for v in &ker {
        if mat_vec(m, v).iter().any(|x| !x.is_zero()) {
            return Err(format!("kernel vector not annihilated for {m:?}"));
        }
    }
    // Same span as the naive kernel.
    let mut both = naive_kernel(m, ncols);
    both.extend(ker.iter().cloned());
    if !both.is_empty() && naive_rref(&both, ncols).1.len() != ker.len() {
        return Err(format!("kernel span differs for {m:?}"));
    }
    if m.len() == ncols {
        let d = determinant(&mat).unwrap();
        if d != ndet {
            return Err(format!("determinant {d} vs naive {ndet} for {m:?}"));
        }
    }
    // A consistent right-hand side: M times a known vector.
    let x0: Vec<T> = (0..ncols)
        .map(|i| if i % 2 == 0 { T::one() } else { -T::one() })
        .collect();
    let b = mat_vec(m, &x0);
    let sol = solve_linear(&mat, &b).map_err(|e| format!("solve failed: {e}"))?;
    if mat_vec(m, &sol.particular) != b {
        return Err(format!("solve_linear residual for {m:?}"));
    }
    Ok(())
}

/// Runs `over_q` random comparisons over ℚ (plus the sparse echelon rank)
/// and `over_qt` over ℚ(q,t), all up to 5×5. The ℚ(q,t) entries are Laurent
/// monomials, some shifted by a constant or divided by `q + c`. Returns the
/// number of matrices checked.
pub fn linear_algebra_oracle(over_q: usize, over_qt: usize, seed: u64) -> Result<usize, String> {
    let mut rng = StdRng::seed_from_u64(seed);
    for _ in 0..over_q {
        let m = random_matrix(&mut rng, 5, &small_rat);
        compare_one(&m)?;
        let mut ech = SparseEchelon::new(m[0].len());
        for row in &m {
            let sv: Vec<(u32, Rat)> = row
                .iter()
                .enumerate()
                .filter(|(_, a)| !a.is_zero())
                .map(|(j, a)| (j as u32, a.clone()))
                .collect();
            ech.insert(&sv);
        }
        let naive = naive_rref(&m, m[0].len()).1.len();
        if ech.rank() != naive {
            return Err(format!("sparse rank {} vs naive {naive} for {m:?}", ech.rank()));
        }
    }
    for _ in 0..over_qt {
        compare_one(&random_matrix(&mut rng, 5, &small_ratfunc))?;
    }
    Ok(over_q + over_qt)
}

/// Standard Young tableaux by peeling off the cell holding `n`.
pub fn brute_syt(parts: &[usize]) -> u64 {
    if parts.iter().sum::<usize>() <= 1 {
        return 1;
    }
    let mut total = 0;
    for i in 0..parts.len() {
        let is_corner = parts[i] > 0 && parts.get(i + 1).is_none_or(|&next| next < parts[i]);
        if is_corner {
            let mut smaller = parts.to_vec();
            smaller[i] -= 1;
            while smaller.last() == Some(&0) {
                smaller.pop();
            }
            total += brute_syt(&smaller);
        }
    }
    total
}

/// Partitions of `n` by filtering all compositions.
pub fn brute_partitions(n: usize) -> Vec<Vec<usize>> {
    fn compositions(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        (1..=n)
            .flat_map(|first| {
                compositions(n - first).into_iter().map(move |mut rest| {
                    rest.insert(0, first);
                    rest
                })
            })
            .collect()
    }
    let mut out: Vec<Vec<usize>> = compositions(n)
        .into_iter()
        .filter(|c| c.windows(2).all(|w| w[0] >= w[1]))
        .collect();
    out.sort();
    out
}

/// Both orthogonality relations of the character table, and the degree
/// column against the tableau count.
pub fn character_oracle(max_n: usize) -> Result<(), String> {
    for n in 1..=max_n {
        let table = character_table(n);
        let parts = &table.partitions;
        let mut brute: Vec<Vec<usize>> = brute_partitions(n);
        brute.sort();
        let mut ours: Vec<Vec<usize>> = enumerate_partitions(n).iter().map(|p| p.parts().to_vec()).collect();
        ours.sort();
        if ours != brute {
            return Err(format!("partitions of {n} differ from brute force"));
        }
        let z: Vec<Rat> = parts.iter().map(|t| Rat::from_int(z_tau(t) as i64)).collect();
        for (i, li) in parts.iter().enumerate() {
            for (j, lj) in parts.iter().enumerate() {
                let s: Rat = (0..parts.len())
                    .map(|k| Rat::from_int(table.values[i][k] * table.values[j][k]) / &z[k])
                    .sum();
                if s != Rat::from_int((i == j) as i64) {
                    return Err(format!("row orthogonality fails for {li}, {lj}"));
                }
                let c: i64 = (0..parts.len()).map(|k| table.values[k][i] * table.values[k][j]).sum();
                let expect = if i == j { z_tau(li) as i64 } else { 0 };
                if c != expect {
                    return Err(format!("column orthogonality fails for {li}, {lj}"));
                }
            }
        }
        let identity = table.index_of(&Partition::new(vec![1; n]).unwrap());
        for (i, l) in parts.iter().enumerate() {
            let deg = table.values[i][identity];
            if deg as u64 != syt_count(l) || syt_count(l) != brute_syt(l.parts()) {
                return Err(format!(
                    "degree of {l}: character {deg}, syt {}, brute {}",
                    syt_count(l),
                    brute_syt(l.parts())
                ));
            }
        }
    }
    Ok(())
}
