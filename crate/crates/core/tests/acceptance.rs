//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit on failure.
//!
//! The heavy instances run only with `MSW_LONG=1` or a `--long` argument:
//!
//! ```text
//! cargo test --test acceptance
//! MSW_LONG=1 cargo test --test acceptance
//! ```

mod common;

use std::time::Instant;

use msw::exactcore::RatFunc;
use msw::ghmodule::{diagonal_coinvariants_dims, dmu_basis, verify_f_equals_h};
use msw::macdonald::{ktilde_table, ktilde_to_k, positivity_report};
use msw::partcomb::{enumerate_partitions, factorial};
use msw::polygraph::{
    freeness_certificate, generic_hs_check, jpower_check, listed_generator_checks, n2_common_basis,
    product_ideal_check, ArrangementSpec,
};

const POLYGRAPH_CASES: [(usize, usize); 4] = [(2, 1), (2, 2), (3, 1), (3, 2)];

/// Outcome of one criterion: failures found, and instances left to `--long`.
#[derive(Default)]
struct Outcome {
    failures: Vec<String>,
    skipped: Vec<String>,
}

impl Outcome {
    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if !ok {
            self.failures.push(what());
        }
    }
}

fn long_mode() -> bool {
    std::env::var("MSW_LONG").is_ok_and(|v| !v.is_empty() && v != "0") || std::env::args().any(|a| a == "--long")
}

fn n_factorial(long: bool) -> Outcome {
    let mut o = Outcome::default();
    for n in 1..=6 {
        if n == 6 && !long {
            o.skipped.push("n = 6".into());
            continue;
        }
        for mu in enumerate_partitions(n) {
            let mut d = dmu_basis(&mu);
            let dim = d.total_dim() as u64;
            o.check(dim == factorial(n), || format!("dim D_{mu} = {dim}"));
            o.check(d.is_derivative_closed(), || {
                format!("D_{mu} is not closed under derivatives")
            });
        }
    }
    o
}

/// Criterion 2 together with the `y`-degree-0 part of criterion 4, which
/// comes out of the same reports.
fn graded_character(long: bool) -> (Outcome, Outcome) {
    let (mut fh, mut q0) = (Outcome::default(), Outcome::default());
    for n in 1..=5 {
        if n == 5 && !long {
            fh.skipped.push("n = 5".into());
            continue;
        }
        for mu in enumerate_partitions(n) {
            match verify_f_equals_h(&mu) {
                Ok(r) => {
                    fh.check(r.equal, || format!("{mu}: {} coefficients differ", r.diffs.len()));
                    if n <= 4 {
                        q0.check(r.q0_consistent, || {
                            format!("{mu}: y-degree 0 part differs from H̃(x;0,t)")
                        });
                    }
                }
                Err(e) => fh.failures.push(format!("{mu}: {e}")),
            }
        }
    }
    (fh, q0)
}

fn positivity() -> Outcome {
    let mut o = Outcome::default();
    for n in 1..=6 {
        match positivity_report(n) {
            Ok(r) => {
                for e in r.violations() {
                    o.failures.push(format!("K̃[{}, {}] = {}", e.lambda, e.mu, e.value));
                }
            }
            Err(e) => o.failures.push(e.to_string()),
        }
    }
    o
}

fn specializations(mut q0: Outcome) -> Outcome {
    let mut o = Outcome::default();
    for n in 1..=6 {
        let r = match positivity_report(n) {
            Ok(r) => r,
            Err(e) => {
                o.failures.push(e.to_string());
                continue;
            }
        };
        for e in r.entries.iter().filter(|e| !e.consistent()) {
            o.failures.push(format!(
                "K̃[{}, {}](1,1) = {:?}, syt = {}",
                e.lambda, e.mu, e.value_at_one, e.syt
            ));
        }
        let table = ktilde_table(n).expect("table computed above");
        for mu in &table.partitions {
            match ktilde_to_k(mu, &table) {
                Ok(col) => {
                    for (lambda, k) in table.partitions.iter().zip(&col) {
                        let deg = k.degree_t().unwrap_or(0);
                        o.check(deg <= mu.n_stat() as i32, || {
                            format!("deg_t K[{lambda}, {mu}] = {deg} > n(μ)")
                        });
                    }
                }
                Err(bad) => o.failures.extend(
                    bad.iter()
                        .map(|b| format!("K[{}, {mu}] = {} is not a polynomial", b.lambda, b.value)),
                ),
            }
        }
    }
    o.failures.append(&mut q0.failures);
    o
}

fn conjugation_symmetry() -> Outcome {
    let mut o = Outcome::default();
    for n in 1..=6 {
        let table = match ktilde_table(n) {
            Ok(t) => t,
            Err(e) => {
                o.failures.push(e.to_string());
                continue;
            }
        };
        for lambda in &table.partitions {
            for mu in &table.partitions {
                let a = table.get(lambda, mu);
                let b: RatFunc = table.get(lambda, &mu.conjugate()).swap_qt();
                o.check(*a == b, || {
                    format!("K̃[{lambda}, {mu}] = {a} but swapped conjugate gives {b}")
                });
            }
        }
    }
    o
}

fn generic_hilbert() -> Outcome {
    let mut o = Outcome::default();
    for (n, l) in POLYGRAPH_CASES {
        match generic_hs_check(n, l, 6, 6) {
            Ok(r) => o.check(r.pass(), || {
                format!("Z({n},{l}): {:?} vs formula {:?}", r.stabilized, r.formula)
            }),
            Err(e) => o.failures.push(format!("Z({n},{l}): {e}")),
        }
    }
    o
}

fn freeness() -> Outcome {
    let mut o = Outcome::default();
    for (n, l) in POLYGRAPH_CASES {
        let spec = ArrangementSpec::z(n, l).expect("valid sizes");
        let c = freeness_certificate(&spec, 6, 6);
        o.check(c.pass(), || {
            format!("Z({n},{l}): first discrepancy {:?}", c.first_discrepancy)
        });
    }
    o
}

fn two_point_basis() -> Outcome {
    let mut o = Outcome::default();
    for l in 1..=2 {
        match n2_common_basis(l, 6, 6) {
            Ok(r) => o.check(r.pass(), || format!("l = {l}: {}", r.to_json())),
            Err(e) => o.failures.push(format!("l = {l}: {e}")),
        }
        match listed_generator_checks(l, 6, 6) {
            Ok(gens) => {
                for g in gens.iter().filter(|g| !g.pass()) {
                    o.failures.push(format!(
                        "l = {l}: {} contained={} first gap {:?}",
                        g.name, g.contained, g.first_gap
                    ));
                }
            }
            Err(e) => o.failures.push(format!("l = {l}: {e}")),
        }
    }
    o
}

fn jpower(long: bool) -> Outcome {
    let mut o = Outcome::default();
    for (n, d) in [(2, 1), (2, 2), (3, 1), (3, 2)] {
        if (n, d) == (3, 2) && !long {
            o.skipped.push("(n, d) = (3, 2)".into());
            continue;
        }
        match jpower_check(n, d, 5, 5) {
            Ok(r) => o.check(r.pass(), || format!("(n, d) = ({n}, {d}): {}", r.to_json())),
            Err(e) => o.failures.push(format!("(n, d) = ({n}, {d}): {e}")),
        }
    }
    o
}

fn product_ideal() -> Outcome {
    let mut o = Outcome::default();
    for n in 2..=3 {
        match product_ideal_check(n, 5, 5) {
            Ok(r) => o.check(r.pass(), || {
                format!("n = {n}: contained={} mismatches {:?}", r.contained, r.mismatches)
            }),
            Err(e) => o.failures.push(format!("n = {n}: {e}")),
        }
    }
    o
}

fn coinvariants() -> Outcome {
    let mut o = Outcome::default();
    for (n, expected) in [(2, 3), (3, 16), (4, 125)] {
        match diagonal_coinvariants_dims(n) {
            Ok(t) => o.check(t.total == expected, || {
                format!("n = {n}: total {} (expected {expected})", t.total)
            }),
            Err(e) => o.failures.push(format!("n = {n}: {e}")),
        }
    }
    o
}

fn oracles() -> Outcome {
    let mut o = Outcome::default();
    match common::linear_algebra_oracle(150, 150, 0xacce) {
        Ok(count) => o.check(count >= 100, || format!("only {count} matrices")),
        Err(e) => o.failures.push(e),
    }
    if let Err(e) = common::character_oracle(6) {
        o.failures.push(e);
    }
    o
}

fn main() {
    let long = long_mode();
    let mut all_ok = true;
    let mut report = |id: usize, name: &str, run: &mut dyn FnMut() -> Outcome| {
        let start = Instant::now();
        let o = run();
        let secs = start.elapsed().as_secs_f64();
        let verdict = if o.failures.is_empty() { "PASS" } else { "FAIL" };
        all_ok &= o.failures.is_empty();
        println!("{verdict} {id:>2} {name} ({secs:.1}s)");
        for f in &o.failures {
            println!("       {f}");
        }
        if !o.skipped.is_empty() {
            println!("       skipped without --long: {}", o.skipped.join(", "));
        }
    };

    report(1, "dim D_mu = n!", &mut || n_factorial(long));
    let mut q0 = None;
    report(2, "Frobenius series equals H~_mu", &mut || {
        let (fh, y0) = graded_character(long);
        q0 = Some(y0);
        fh
    });
    report(3, "K~ entries in N[q,t] for n <= 6", &mut positivity);
    report(4, "specializations at (1,1), t-degree bound, y-degree 0", &mut || {
        specializations(q0.take().unwrap())
    });
    report(5, "K~(q,t) for mu equals K~(t,q) for mu'", &mut conjugation_symmetry);
    report(6, "generic fiber Hilbert series n^l/(1-t)^n", &mut generic_hilbert);
    report(7, "polygraph freeness certificates", &mut freeness);
    report(8, "two-point common basis and listed generators", &mut two_point_basis);
    report(9, "J^d as intersection of powers, y-freeness", &mut || jpower(long));
    report(10, "Z(n,1) ideal is the product ideal", &mut product_ideal);
    report(11, "diagonal coinvariant totals 3, 16, 125", &mut coinvariants);
    report(12, "linear algebra and character oracles", &mut oracles);

    if !all_ok {
        std::process::exit(1);
    }
}
