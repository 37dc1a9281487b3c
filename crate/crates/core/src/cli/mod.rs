//! Command-line front end.
//!
//! Every verb computes a JSON payload, which is cached on disk and rendered
//! as JSON, CSV or a plain table. Rendering only reads the payload, so a
//! cache hit prints exactly what a fresh run prints.
//!
//! Exit codes: [`EXIT_PASS`] on success and on passing checks,
//! [`EXIT_CHECK_FAILED`] when a check fails (the JSON report is printed),
//! [`EXIT_USAGE`] for anything wrong with the arguments.

mod cache;

use std::ffi::OsString;
use std::io::Write;

use clap::{Parser, Subcommand};
use serde_json::{json, Map, Value};

pub use cache::{Cache, CACHE_ENV, CACHE_VERSION};

use crate::ghmodule::{bigraded_frobenius, diagonal_coinvariants_dims, dmu_basis, verify_f_equals_h, COINV_MAX_N};
use crate::macdonald::{htilde, ktilde_table, local_hilbert_denominator, positivity_report};
use crate::partcomb::{enumerate_partitions, factorial, Partition};
use crate::polygraph::{
    freeness_certificate, generic_hs_check, generic_hs_check_y, jpower_check, listed_generator_checks, n2_common_basis,
    validate, ArrangementSpec,
};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "msw",
    version,
    about = "Exact computations with Macdonald polynomials, derivative modules and polygraph rings"
)]
struct Cli {
    #[command(subcommand)]
    verb: Verb,
    /// Print the payload as JSON.
    #[arg(long, global = true, conflicts_with = "csv")]
    json: bool,
    /// Print the main table as CSV.
    #[arg(long, global = true)]
    csv: bool,
    /// Neither read nor write the result cache.
    #[arg(long, global = true)]
    no_cache: bool,
    /// Allow the heavy instances (n = 6 modules, large arrangements).
    #[arg(long, global = true)]
    long: bool,
}

#[derive(Subcommand, Debug)]
enum Verb {
    /// Schur expansion of the modified Macdonald polynomial.
    Htilde {
        #[arg(long, value_parser = parse_mu)]
        mu: Partition,
    },
    /// Table of all K̃ coefficients for one n.
    Ktable {
        #[arg(long)]
        n: usize,
    },
    /// Nonnegativity and the value at q = t = 1 of every K̃ entry.
    Positivity {
        #[arg(long, default_value_t = 6)]
        max_n: usize,
    },
    /// dim D_μ against n! for every μ up to max-n.
    Nfact {
        #[arg(long, default_value_t = 5)]
        max_n: usize,
    },
    /// Bigraded Frobenius series of D_μ.
    Frobenius {
        #[arg(long, value_parser = parse_mu)]
        mu: Partition,
    },
    /// Frobenius series of D_μ against H̃_μ.
    #[command(name = "check-fh")]
    CheckFh {
        #[arg(long, value_parser = parse_mu, conflicts_with = "max_n")]
        mu: Option<Partition>,
        #[arg(long)]
        max_n: Option<usize>,
    },
    /// Generic Hilbert function of Z(n,l), or of Y(m,r,k) when m, r, k are given.
    #[command(name = "polygraph-hilbert")]
    PolygraphHilbert {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        l: usize,
        #[arg(long, allow_negative_numbers = true, requires_all = ["r", "k"])]
        m: Option<i64>,
        #[arg(long, requires = "m")]
        r: Option<usize>,
        #[arg(long, requires = "m")]
        k: Option<usize>,
        #[arg(long, default_value_t = 6)]
        dx: u32,
        #[arg(long, default_value_t = 6)]
        dy: u32,
    },
    /// Truncated freeness certificate of R(n,l) over the y variables.
    #[command(name = "polygraph-freeness")]
    PolygraphFreeness {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        l: usize,
        #[arg(long, default_value_t = 6)]
        dx: u32,
        #[arg(long, default_value_t = 6)]
        dy: u32,
    },
    /// The explicit two-point basis and the listed ideal generators.
    #[command(name = "polygraph-basis2")]
    PolygraphBasis2 {
        #[arg(long)]
        l: usize,
        #[arg(long, default_value_t = 6)]
        dx: u32,
        #[arg(long, default_value_t = 6)]
        dy: u32,
    },
    /// J^d against the intersection of the pairwise diagonal powers.
    Jpower {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
        #[arg(long, default_value_t = 5)]
        dx: u32,
        #[arg(long, default_value_t = 5)]
        dy: u32,
    },
    /// Bigraded dimensions of the diagonal coinvariants.
    Coinv {
        #[arg(long)]
        n: usize,
    },
    /// The arm/leg product ∏ (1 - q^{-a} t^{1+l}) (1 - q^{1+a} t^{-l}).
    Denominator {
        #[arg(long, value_parser = parse_mu)]
        mu: Partition,
    },
}

fn parse_mu(s: &str) -> Result<Partition, String> {
    let p: Partition = s.parse().map_err(|e| format!("{e}"))?;
    if p.size() == 0 {
        return Err("the partition must be nonempty".into());
    }
    Ok(p)
}

fn mu_key(mu: &Partition) -> String {
    mu.to_string()
}

type Compute = Box<dyn FnOnce() -> Result<Value, String>>;

/// A validated request: a cache key, the computation and how to tabulate it.
struct Job {
    key: String,
    compute: Compute,
    table: fn(&Value) -> Table,
}

struct Table {
    header: Vec<String>,
    rows: Vec<Vec<String>>,
}

impl Table {
    fn new(header: &[&str]) -> Table {
        Table {
            header: header.iter().map(|s| s.to_string()).collect(),
            rows: Vec::new(),
        }
    }
}

fn text(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "-".into(),
        other => other.to_string(),
    }
}

fn usage(msg: impl Into<String>) -> String {
    msg.into()
}

fn need_long(long: bool, what: &str) -> Result<(), String> {
    if long {
        Ok(())
    } else {
        Err(usage(format!("{what} is a heavy instance; pass --long to run it")))
    }
}

fn err_string<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

/// Validates the arguments and returns the job, without computing anything.
fn plan(verb: Verb, long: bool) -> Result<Job, String> {
    Ok(match verb {
        Verb::Htilde { mu } => {
            if mu.size() > 6 {
                need_long(long, "htilde with n > 6")?;
            }
            Job {
                key: format!("htilde mu={}", mu_key(&mu)),
                compute: Box::new(move || {
                    let h = htilde(&mu).map_err(err_string)?;
                    Ok(json!({"mu": mu.parts(), "coeffs": h.expansion.coeffs_json()}))
                }),
                table: |p| {
                    let mut t = Table::new(&["lambda", "coeff"]);
                    for (k, v) in p["coeffs"].as_object().into_iter().flatten() {
                        t.rows.push(vec![k.clone(), text(v)]);
                    }
                    t
                },
            }
        }
        Verb::Ktable { n } => {
            if n == 0 {
                return Err(usage("--n must be at least 1"));
            }
            if n > 6 {
                need_long(long, "ktable with n > 6")?;
            }
            Job {
                key: format!("ktable n={n}"),
                compute: Box::new(move || {
                    let table = ktilde_table(n).map_err(err_string)?;
                    let mut rows = Map::new();
                    for (i, lambda) in table.partitions.iter().enumerate() {
                        let mut row = Map::new();
                        for (j, mu) in table.partitions.iter().enumerate() {
                            row.insert(mu.to_string(), Value::String(table.entries[i][j].to_string()));
                        }
                        rows.insert(lambda.to_string(), Value::Object(row));
                    }
                    let parts: Vec<String> = table.partitions.iter().map(|p| p.to_string()).collect();
                    Ok(json!({"n": n, "partitions": parts, "entries": rows}))
                }),
                table: |p| {
                    let parts: Vec<String> = p["partitions"].as_array().into_iter().flatten().map(text).collect();
                    let mut header = vec!["lambda\\mu".to_string()];
                    header.extend(parts.iter().cloned());
                    let rows = parts
                        .iter()
                        .map(|l| {
                            let mut row = vec![l.clone()];
                            row.extend(parts.iter().map(|m| text(&p["entries"][l][m])));
                            row
                        })
                        .collect();
                    Table { header, rows }
                },
            }
        }
        Verb::Positivity { max_n } => {
            if max_n == 0 {
                return Err(usage("--max-n must be at least 1"));
            }
            if max_n > 6 {
                need_long(long, "positivity with max-n > 6")?;
            }
            Job {
                key: format!("positivity max-n={max_n}"),
                compute: Box::new(move || {
                    let mut by_n = Vec::new();
                    let mut violations = Vec::new();
                    let mut inconsistent = Vec::new();
                    for n in 1..=max_n {
                        let r = positivity_report(n).map_err(err_string)?;
                        for e in &r.entries {
                            let cell = json!({
                                "lambda": e.lambda.to_string(),
                                "mu": e.mu.to_string(),
                                "value": e.value.to_string(),
                                "offending": e.offending,
                            });
                            if !e.nonneg_integer {
                                violations.push(cell.clone());
                            }
                            if !e.consistent() {
                                inconsistent.push(cell);
                            }
                        }
                        by_n.push(json!({
                            "n": n,
                            "entries": r.entries.len(),
                            "nonneg_integer": r.all_positive(),
                            "value_at_one_is_syt": r.all_consistent(),
                        }));
                    }
                    let pass = violations.is_empty() && inconsistent.is_empty();
                    Ok(json!({
                        "check": "positivity",
                        "max_n": max_n,
                        "pass": pass,
                        "by_n": by_n,
                        "violations": violations,
                        "inconsistent": inconsistent,
                    }))
                }),
                table: |p| rows_of(p, "by_n", &["n", "entries", "nonneg_integer", "value_at_one_is_syt"]),
            }
        }
        Verb::Nfact { max_n } => {
            if max_n == 0 {
                return Err(usage("--max-n must be at least 1"));
            }
            if max_n > 5 {
                need_long(long, "nfact with max-n > 5")?;
            }
            Job {
                key: format!("nfact max-n={max_n}"),
                compute: Box::new(move || {
                    let mut rows = Vec::new();
                    let mut pass = true;
                    for n in 1..=max_n {
                        let nf = factorial(n);
                        for mu in enumerate_partitions(n) {
                            let mut space = dmu_basis(&mu);
                            let dim = space.total_dim() as u64;
                            let closed = space.is_derivative_closed();
                            pass &= dim == nf && closed;
                            rows.push(json!({
                                "mu": mu.to_string(),
                                "dim": dim,
                                "n_factorial": nf,
                                "equal": dim == nf,
                                "derivative_closed": closed,
                            }));
                        }
                    }
                    Ok(json!({"check": "nfact", "max_n": max_n, "pass": pass, "rows": rows}))
                }),
                table: |p| rows_of(p, "rows", &["mu", "dim", "n_factorial", "equal", "derivative_closed"]),
            }
        }
        Verb::Frobenius { mu } => {
            if mu.size() > 5 {
                need_long(long, "frobenius with n > 5")?;
            }
            Job {
                key: format!("frobenius mu={}", mu_key(&mu)),
                compute: Box::new(move || {
                    let series = bigraded_frobenius(&mu);
                    let mut slices = Map::new();
                    for ((r, s), f) in &series.slices {
                        slices.insert(format!("({r},{s})"), f.coeffs_json());
                    }
                    Ok(json!({
                        "mu": mu.parts(),
                        "slices": slices,
                        "total": series.flatten().coeffs_json(),
                    }))
                }),
                table: |p| {
                    let mut t = Table::new(&["bidegree", "lambda", "coeff"]);
                    for (bd, f) in p["slices"].as_object().into_iter().flatten() {
                        for (l, c) in f.as_object().into_iter().flatten() {
                            t.rows.push(vec![bd.clone(), l.clone(), text(c)]);
                        }
                    }
                    t
                },
            }
        }
        Verb::CheckFh { mu, max_n } => {
            let mus: Vec<Partition> = match (mu, max_n) {
                (Some(mu), _) => vec![mu],
                (None, m) => {
                    let m = m.unwrap_or(4);
                    if m == 0 {
                        return Err(usage("--max-n must be at least 1"));
                    }
                    (1..=m).flat_map(enumerate_partitions).collect()
                }
            };
            if mus.iter().any(|m| m.size() >= 5) {
                need_long(long, "check-fh with n >= 5")?;
            }
            let key = format!("check-fh mus={}", mus.iter().map(mu_key).collect::<Vec<_>>().join(";"));
            Job {
                key,
                compute: Box::new(move || {
                    let mut reports = Vec::new();
                    let mut pass = true;
                    for mu in &mus {
                        let r = verify_f_equals_h(mu).map_err(err_string)?;
                        pass &= r.equal && r.q0_consistent;
                        reports.push(r.to_json());
                    }
                    Ok(json!({"check": "f-equals-h", "pass": pass, "reports": reports}))
                }),
                table: |p| {
                    let mut t = Table::new(&["mu", "equal", "q0_consistent"]);
                    for r in p["reports"].as_array().into_iter().flatten() {
                        t.rows
                            .push(vec![text(&r["mu"]), text(&r["equal"]), text(&r["q0_consistent"])]);
                    }
                    t
                },
            }
        }
        Verb::PolygraphHilbert { n, l, m, r, k, dx, dy } => {
            validate(n, l).map_err(err_string)?;
            arrangement_size(n, l, long)?;
            if (dy as usize) < n {
                return Err(usage(format!(
                    "--dy must be at least n = {n} for the y-direction to stabilize"
                )));
            }
            let y = match (m, r, k) {
                (Some(m), Some(r), Some(k)) => {
                    ArrangementSpec::y(n, l, m, r, k).map_err(err_string)?;
                    Some((m, r, k))
                }
                _ => None,
            };
            let key = match y {
                Some((m, r, k)) => format!("polygraph-hilbert n={n} l={l} m={m} r={r} k={k} dx={dx} dy={dy}"),
                None => format!("polygraph-hilbert n={n} l={l} dx={dx} dy={dy}"),
            };
            Job {
                key,
                compute: Box::new(move || {
                    let report = match y {
                        Some((m, r, k)) => generic_hs_check_y(n, l, m, r, k, dx, dy),
                        None => generic_hs_check(n, l, dx, dy),
                    }
                    .map_err(err_string)?;
                    let mut v = report.to_json();
                    if let Some((m, r, k)) = y {
                        v["spec"] = json!("Y");
                        v["m"] = json!(m);
                        v["r"] = json!(r);
                        v["k"] = json!(k);
                    }
                    Ok(v)
                }),
                table: |p| {
                    let mut t = Table::new(&["d", "formula", "enumerator", "stabilized"]);
                    let col = |name: &str, d: usize| p[name].get(d).map(text).unwrap_or_default();
                    for d in 0..p["formula"].as_array().map_or(0, Vec::len) {
                        t.rows.push(vec![
                            d.to_string(),
                            col("formula", d),
                            col("enumerator", d),
                            col("stabilized", d),
                        ]);
                    }
                    t
                },
            }
        }
        Verb::PolygraphFreeness { n, l, dx, dy } => {
            validate(n, l).map_err(err_string)?;
            arrangement_size(n, l, long)?;
            Job {
                key: format!("polygraph-freeness n={n} l={l} dx={dx} dy={dy}"),
                compute: Box::new(move || {
                    let spec = ArrangementSpec::z(n, l).map_err(err_string)?;
                    let mut v = freeness_certificate(&spec, dx, dy).to_json();
                    v["spec"] = json!("Z");
                    v["n"] = json!(n);
                    v["l"] = json!(l);
                    v["Dx"] = json!(dx);
                    v["Dy"] = json!(dy);
                    Ok(v)
                }),
                table: |p| {
                    let mut t = Table::new(&["n", "l", "Dx", "Dy", "pass", "first_discrepancy"]);
                    t.rows.push(
                        ["n", "l", "Dx", "Dy", "pass", "first_discrepancy"]
                            .iter()
                            .map(|k| text(&p[*k]))
                            .collect(),
                    );
                    t
                },
            }
        }
        Verb::PolygraphBasis2 { l, dx, dy } => {
            validate(2, l).map_err(err_string)?;
            arrangement_size(2, l, long)?;
            Job {
                key: format!("polygraph-basis2 l={l} dx={dx} dy={dy}"),
                compute: Box::new(move || {
                    let basis = n2_common_basis(l, dx, dy).map_err(err_string)?;
                    let gens = listed_generator_checks(l, dx, dy).map_err(err_string)?;
                    let pass = basis.pass() && gens.iter().all(|g| g.pass());
                    let gens: Vec<Value> = gens
                        .iter()
                        .map(|g| {
                            json!({
                                "ideal": g.name,
                                "pass": g.pass(),
                                "contained": g.contained,
                                "first_gap": g.first_gap.map(|b| [b.0, b.1]),
                            })
                        })
                        .collect();
                    Ok(json!({
                        "check": "n2-basis",
                        "l": l,
                        "Dx": dx,
                        "Dy": dy,
                        "pass": pass,
                        "basis": basis.to_json(),
                        "generators": gens,
                    }))
                }),
                table: |p| {
                    let mut t = Table::new(&["check", "pass"]);
                    t.rows.push(vec!["common basis".into(), text(&p["basis"]["pass"])]);
                    for g in p["generators"].as_array().into_iter().flatten() {
                        t.rows.push(vec![text(&g["ideal"]), text(&g["pass"])]);
                    }
                    t
                },
            }
        }
        Verb::Jpower { n, d, dx, dy } => {
            if !(2..=8).contains(&n) || d == 0 {
                return Err(usage("jpower needs 2 <= n <= 8 and d >= 1"));
            }
            if n > 3 || (n == 3 && d > 1) || d > 3 {
                need_long(long, &format!("jpower with n = {n}, d = {d}"))?;
            }
            Job {
                key: format!("jpower n={n} d={d} dx={dx} dy={dy}"),
                compute: Box::new(move || Ok(jpower_check(n, d, dx, dy).map_err(err_string)?.to_json())),
                table: |p| {
                    let mut t = Table::new(&["bidegree", "dim"]);
                    for (bd, v) in p["dims"].as_object().into_iter().flatten() {
                        t.rows.push(vec![bd.clone(), text(v)]);
                    }
                    t
                },
            }
        }
        Verb::Coinv { n } => {
            if n == 0 || n > COINV_MAX_N {
                return Err(usage(format!("coinv supports 1 <= n <= {COINV_MAX_N}")));
            }
            Job {
                key: format!("coinv n={n}"),
                compute: Box::new(move || {
                    let table = diagonal_coinvariants_dims(n).map_err(err_string)?;
                    let expected = (n as u64 + 1).pow(n as u32 - 1);
                    let mut v = table.to_json();
                    v["expected"] = json!(expected);
                    v["pass"] = json!(table.total as u64 == expected);
                    Ok(v)
                }),
                table: |p| {
                    let mut t = Table::new(&["bidegree", "dim"]);
                    for (bd, v) in p["dims"].as_object().into_iter().flatten() {
                        t.rows.push(vec![bd.clone(), text(v)]);
                    }
                    t
                },
            }
        }
        Verb::Denominator { mu } => Job {
            key: format!("denominator mu={}", mu_key(&mu)),
            compute: Box::new(move || {
                Ok(json!({"mu": mu.parts(), "value": local_hilbert_denominator(&mu).to_string()}))
            }),
            table: |p| {
                let mut t = Table::new(&["mu", "value"]);
                t.rows.push(vec![text(&p["mu"]), text(&p["value"])]);
                t
            },
        },
    })
}

fn arrangement_size(n: usize, l: usize, long: bool) -> Result<(), String> {
    if n + l > 5 {
        need_long(long, &format!("an arrangement with n + l = {}", n + l))?;
    }
    Ok(())
}

fn rows_of(p: &Value, list: &str, cols: &[&str]) -> Table {
    let mut t = Table::new(cols);
    for r in p[list].as_array().into_iter().flatten() {
        t.rows.push(cols.iter().map(|c| text(&r[*c])).collect());
    }
    t
}

fn write_plain(out: &mut dyn Write, t: &Table) -> std::io::Result<()> {
    let mut widths: Vec<usize> = t.header.iter().map(|h| h.chars().count()).collect();
    for row in &t.rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |cells: &[String]| -> String {
        let padded: Vec<String> = cells
            .iter()
            .zip(&widths)
            .map(|(c, w)| format!("{c}{}", " ".repeat(w - c.chars().count())))
            .collect();
        padded.join("  ").trim_end().to_string()
    };
    writeln!(out, "{}", line(&t.header))?;
    for row in &t.rows {
        writeln!(out, "{}", line(row))?;
    }
    Ok(())
}

fn write_csv(out: &mut dyn Write, t: &Table) -> std::io::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(&t.header)?;
    for row in &t.rows {
        w.write_record(row)?;
    }
    w.flush()
}

/// Runs the program with the cache taken from the environment, writing to
/// the process stdout and stderr.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(argv, &Cache::from_env(), &mut stdout.lock(), &mut stderr.lock())
}

/// Runs the program against an explicit cache and output streams.
pub fn run_with<I, T>(argv: I, cache: &Cache, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_PASS };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() {
                write!(err, "{rendered}")
            } else {
                write!(out, "{rendered}")
            };
            return code;
        }
    };
    let job = match plan(cli.verb, cli.long) {
        Ok(j) => j,
        Err(msg) => {
            let _ = writeln!(err, "error: {msg}");
            return EXIT_USAGE;
        }
    };
    let disabled = Cache::disabled();
    let cache = if cli.no_cache { &disabled } else { cache };
    let payload = match cache.get_or_compute(&job.key, err, job.compute) {
        Ok(p) => p,
        Err(msg) => {
            let _ = writeln!(err, "error: {msg}");
            return EXIT_CHECK_FAILED;
        }
    };
    let failed = payload.get("pass") == Some(&Value::Bool(false));
    let written = if cli.json {
        writeln!(out, "{payload}")
    } else {
        let table = (job.table)(&payload);
        let r = if cli.csv {
            write_csv(out, &table)
        } else {
            write_plain(out, &table)
        };
        r.and_then(|_| match payload.get("pass") {
            Some(Value::Bool(true)) if !cli.csv => writeln!(out, "PASS"),
            // A failing check always carries its JSON report.
            Some(Value::Bool(false)) => writeln!(out, "FAIL\n{payload}"),
            _ => Ok(()),
        })
    };
    if written.is_err() {
        return EXIT_CHECK_FAILED;
    }
    if failed {
        EXIT_CHECK_FAILED
    } else {
        EXIT_PASS
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn go(args: &[&str]) -> (i32, String, String) {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let mut argv = vec!["msw"];
        argv.extend_from_slice(args);
        let code = run_with(argv, &Cache::disabled(), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn htilde_json_shape() {
        let (code, out, _) = go(&["htilde", "--mu", "2", "--json"]);
        assert_eq!(code, 0);
        assert_eq!(out.trim(), r#"{"mu":[2],"coeffs":{"[2]":"1","[1,1]":"q"}}"#);
    }

    #[test]
    fn usage_errors_exit_two() {
        assert_eq!(go(&["frobnicate"]).0, EXIT_USAGE);
        assert_eq!(go(&["htilde", "--mu", "1,2"]).0, EXIT_USAGE);
        assert_eq!(go(&["htilde"]).0, EXIT_USAGE);
        assert_eq!(go(&["nfact", "--max-n", "6"]).0, EXIT_USAGE);
        assert_eq!(
            go(&["polygraph-hilbert", "--n", "3", "--l", "1", "--dy", "2"]).0,
            EXIT_USAGE
        );
        assert_eq!(go(&["coinv", "--n", "9"]).0, EXIT_USAGE);
        assert_eq!(go(&["htilde", "--mu", "2", "--json", "--csv"]).0, EXIT_USAGE);
    }

    #[test]
    fn help_is_not_an_error() {
        let (code, out, _) = go(&["--help"]);
        assert_eq!(code, 0);
        assert!(out.contains("polygraph-freeness"));
    }

    #[test]
    fn plain_and_csv() {
        let (code, out, _) = go(&["nfact", "--max-n", "3"]);
        assert_eq!(code, 0);
        assert!(out.lines().last() == Some("PASS"), "{out}");
        let (_, csv, _) = go(&["htilde", "--mu", "2,1", "--csv"]);
        assert!(csv.starts_with("lambda,coeff\n[3],1\n\"[2,1]\",q + t\n"), "{csv}");
    }
}
