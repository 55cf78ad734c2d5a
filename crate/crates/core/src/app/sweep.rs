//! Parallel verification sweeps with deterministic aggregation and a
//! file-backed cache keyed by suite, rank, and engine version. Reports are
//! byte-identical across runs and worker counts; wall-clock timing is kept
//! out of the serialized form.

use std::fs;
use std::path::{Path, PathBuf};
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::bracket::{rewrite_search, skew_element};
use crate::divdiff::{ddiff_i, ddiff_ij, ddiff_perm};
use crate::nilcox::theorem2_constants;
use crate::perm::Permutation;
use crate::poly::{Monomial, Polynomial};
use crate::schubert::{constants_by_product, schubert_poly, SchubertExpansion};
use crate::skew::{constants_by_skew, skew_apply, SkewOp};

#[derive(Clone, Copy, PartialEq, Eq, Debug, clap::ValueEnum)]
pub enum Suite {
    Conjecture1,
    Conjecture2,
    Theorem1,
    RoutesEquality,
    Identities,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::Conjecture1 => "conjecture1",
            Suite::Conjecture2 => "conjecture2",
            Suite::Theorem1 => "theorem1",
            Suite::RoutesEquality => "routes-equality",
            Suite::Identities => "identities",
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    BudgetExhausted,
}

/// A non-passing instance, with enough context to rerun it by hand.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct InstanceOutcome {
    pub instance: String,
    pub status: Status,
    pub detail: String,
    pub reproducer: String,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SweepReport {
    pub suite: String,
    pub n: usize,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub budget: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub trials: Option<usize>,
    pub engine: String,
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    pub budget_exhausted: usize,
    pub failures: Vec<InstanceOutcome>,
    #[serde(skip)]
    pub elapsed_ms: u128,
}

impl SweepReport {
    pub fn ok(&self) -> bool {
        self.failed == 0 && self.budget_exhausted == 0
    }

    /// The canonical serialized form; this is what the cache stores and
    /// what the determinism contract is stated over.
    pub fn to_json_string(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).unwrap();
        s.push('\n');
        s
    }

    pub fn render(&self, fmt: crate::app::render::Format) -> String {
        use crate::app::render::Format;
        match fmt {
            Format::Json => self.to_json_string(),
            Format::Text => {
                let mut out = format!(
                    "suite {} (n = {}): {} instances, {} passed, {} failed, {} budget-exhausted\n",
                    self.suite, self.n, self.total, self.passed, self.failed,
                    self.budget_exhausted
                );
                for f in &self.failures {
                    out.push_str(&format!(
                        "  {:?} {}: {}\n    rerun: {}\n",
                        f.status, f.instance, f.detail, f.reproducer
                    ));
                }
                out
            }
            Format::Csv => {
                let mut out = String::from("instance,status,detail,reproducer\n");
                out.push_str(&format!(
                    "summary,,total={} passed={} failed={} budget-exhausted={},\n",
                    self.total, self.passed, self.failed, self.budget_exhausted
                ));
                for f in &self.failures {
                    out.push_str(&format!(
                        "{},{:?},{},{}\n",
                        f.instance,
                        f.status,
                        f.detail.replace(',', ";"),
                        f.reproducer.replace(',', ";")
                    ));
                }
                out
            }
        }
    }
}

/// Hash identifying the computational engine; cached reports from a
/// different engine revision are recomputed.
pub fn engine_version() -> String {
    const ENGINE_REV: &str = "schubert-engine-1";
    let mut h = Sha256::new();
    h.update(env!("CARGO_PKG_VERSION").as_bytes());
    h.update(ENGINE_REV.as_bytes());
    let digest = h.finalize();
    digest[..8].iter().map(|b| format!("{b:02x}")).collect()
}

struct Outcome {
    status: Status,
    failure: Option<InstanceOutcome>,
}

fn pass() -> Outcome {
    Outcome {
        status: Status::Pass,
        failure: None,
    }
}

fn bad(status: Status, instance: String, detail: String, reproducer: String) -> Outcome {
    Outcome {
        status,
        failure: Some(InstanceOutcome {
            instance,
            status,
            detail,
            reproducer,
        }),
    }
}

/// Runs a sweep on a dedicated pool of `jobs` workers (0 = automatic) and
/// aggregates in instance-enumeration order, so the report does not depend
/// on the worker count.
pub fn run(suite: Suite, n: usize, budget: usize, trials: usize, jobs: usize) -> SweepReport {
    let start = Instant::now();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .expect("worker pool");
    let outcomes = pool.install(|| match suite {
        Suite::Conjecture1 => conjecture1(n),
        Suite::Conjecture2 => conjecture2(n, budget),
        Suite::Theorem1 => theorem1(n),
        Suite::RoutesEquality => routes_equality(n),
        Suite::Identities => identities(n, trials),
    });
    let mut report = SweepReport {
        suite: suite.name().to_string(),
        n,
        budget: match suite {
            Suite::Conjecture2 => Some(budget),
            _ => None,
        },
        trials: match suite {
            Suite::Identities => Some(trials),
            _ => None,
        },
        engine: engine_version(),
        total: outcomes.len(),
        passed: 0,
        failed: 0,
        budget_exhausted: 0,
        failures: Vec::new(),
        elapsed_ms: 0,
    };
    for o in outcomes {
        match o.status {
            Status::Pass => report.passed += 1,
            Status::Fail => report.failed += 1,
            Status::BudgetExhausted => report.budget_exhausted += 1,
        }
        if let Some(f) = o.failure {
            report.failures.push(f);
        }
    }
    report.elapsed_ms = start.elapsed().as_millis();
    report
}

/// Cache-aware entry point: one file per (suite, n) under `cache_dir`,
/// reused only when engine version and parameters match. A corrupt cache
/// file triggers a warning and a recompute.
pub fn run_cached(
    suite: Suite,
    n: usize,
    budget: usize,
    trials: usize,
    jobs: usize,
    cache_dir: Option<&Path>,
) -> SweepReport {
    let path = cache_dir.map(|d| cache_path(d, suite, n));
    if let Some(path) = &path {
        match fs::read_to_string(path) {
            Ok(text) => match serde_json::from_str::<SweepReport>(&text) {
                Ok(cached)
                    if cached.engine == engine_version()
                        && cached.suite == suite.name()
                        && cached.n == n
                        && cached.budget == expected_budget(suite, budget)
                        && cached.trials == expected_trials(suite, trials) =>
                {
                    return cached;
                }
                Ok(_) => {}
                Err(e) => {
                    eprintln!("warning: ignoring corrupt cache file {}: {e}", path.display());
                }
            },
            Err(_) => {}
        }
    }
    let report = run(suite, n, budget, trials, jobs);
    if let Some(path) = &path {
        if let Some(dir) = path.parent() {
            let _ = fs::create_dir_all(dir);
        }
        if let Err(e) = fs::write(path, report.to_json_string()) {
            eprintln!("warning: could not write cache file {}: {e}", path.display());
        }
    }
    report
}

fn cache_path(dir: &Path, suite: Suite, n: usize) -> PathBuf {
    dir.join(format!("{}-n{}.json", suite.name(), n))
}

fn expected_budget(suite: Suite, budget: usize) -> Option<usize> {
    match suite {
        Suite::Conjecture2 => Some(budget),
        _ => None,
    }
}

fn expected_trials(suite: Suite, trials: usize) -> Option<usize> {
    match suite {
        Suite::Identities => Some(trials),
        _ => None,
    }
}

/// Nonnegativity of every `d_{w/v}(S_u)` over the rank-`n` window.
fn conjecture1(n: usize) -> Vec<Outcome> {
    let perms = Permutation::all(n);
    let mut triples = Vec::new();
    for u in &perms {
        for v in &perms {
            for w in &perms {
                triples.push((u, v, w));
            }
        }
    }
    triples
        .par_iter()
        .map(|(u, v, w)| {
            if !v.bruhat_leq(w) {
                return pass();
            }
            let p = skew_apply(w, v, &schubert_poly(u)).expect("v <= w checked");
            if p.is_nonnegative() {
                pass()
            } else {
                bad(
                    Status::Fail,
                    format!("u={u} v={v} w={w}"),
                    format!("negative coefficient in {p}"),
                    format!(
                        "schubert skew-apply {} {} \"{}\"",
                        w.window_string(n),
                        v.window_string(n),
                        schubert_poly(u)
                    ),
                )
            }
        })
        .collect()
}

/// Every bracket element `d_{w/v}` either has nonnegative coefficients
/// already or a rewrite within the budget makes it so.
fn conjecture2(n: usize, budget: usize) -> Vec<Outcome> {
    let perms = Permutation::all(n);
    let mut pairs = Vec::new();
    for w in &perms {
        for v in &perms {
            if v.bruhat_leq(w) {
                pairs.push((w, v));
            }
        }
    }
    pairs
        .par_iter()
        .map(|(w, v)| {
            let e = skew_element(w, v, n).expect("v <= w checked");
            if e.is_nonnegative() || rewrite_search(&e, budget).is_some() {
                pass()
            } else {
                bad(
                    Status::BudgetExhausted,
                    format!("w={w} v={v}"),
                    format!("no nonnegative form found within {budget} rewrites of {e}"),
                    format!(
                        "schubert bracket {} {} --search {budget}",
                        w.window_string(n),
                        v.window_string(n)
                    ),
                )
            }
        })
        .collect()
}

/// Nonnegativity of `d_{ij} S_w` for every transposition and every `w`.
fn theorem1(n: usize) -> Vec<Outcome> {
    let perms = Permutation::all(n);
    let mut instances = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            for w in &perms {
                instances.push((i, j, w));
            }
        }
    }
    instances
        .par_iter()
        .map(|&(i, j, w)| {
            let p = ddiff_ij(i, j, &schubert_poly(w));
            if p.is_nonnegative() {
                pass()
            } else {
                bad(
                    Status::Fail,
                    format!("i={i} j={j} w={w}"),
                    format!("negative coefficient in {p}"),
                    format!("schubert verify theorem1 --n {n}"),
                )
            }
        })
        .collect()
}

/// Structure constants by product expansion, by the skew operator, and by
/// weighted Bruhat paths must agree on every triple.
fn routes_equality(n: usize) -> Vec<Outcome> {
    let perms = Permutation::all(n);
    let k = perms.len();
    let product: Vec<Vec<SchubertExpansion>> = perms
        .par_iter()
        .map(|u| {
            perms
                .iter()
                .map(|v| constants_by_product(u, v, n).expect("degree within range"))
                .collect()
        })
        .collect();
    let paths: Vec<Vec<Option<SchubertExpansion>>> = perms
        .par_iter()
        .map(|w| {
            perms
                .iter()
                .map(|u| {
                    if u.bruhat_leq(w) {
                        Some(theorem2_constants(w, u, n).expect("u <= w checked"))
                    } else {
                        None
                    }
                })
                .collect()
        })
        .collect();
    let mut triples = Vec::new();
    for ui in 0..k {
        for vi in 0..k {
            for wi in 0..k {
                triples.push((ui, vi, wi));
            }
        }
    }
    triples
        .par_iter()
        .map(|&(ui, vi, wi)| {
            let (u, v, w) = (&perms[ui], &perms[vi], &perms[wi]);
            let c = product[ui][vi].coeff(w);
            let mut mismatch = Vec::new();
            if v.bruhat_leq(w) {
                let s = constants_by_skew(u, v, w).expect("v <= w checked");
                if s != c {
                    mismatch.push(format!("skew route gives {s}, product route gives {c}"));
                }
            } else if c != 0 {
                mismatch.push(format!("product route gives {c} although v is not below w"));
            }
            match &paths[wi][ui] {
                Some(exp) => {
                    let t = exp.coeff(v);
                    if t != c {
                        mismatch.push(format!("path route gives {t}, product route gives {c}"));
                    }
                }
                None => {
                    if c != 0 {
                        mismatch
                            .push(format!("product route gives {c} although u is not below w"));
                    }
                }
            }
            if mismatch.is_empty() {
                pass()
            } else {
                bad(
                    Status::Fail,
                    format!("u={u} v={v} w={w}"),
                    mismatch.join("; "),
                    format!(
                        "schubert constants {} {} {n} --route all",
                        u.window_string(n),
                        v.window_string(n)
                    ),
                )
            }
        })
        .collect()
}

/// Deterministic pseudo-random polynomial for the identity trials.
fn sample(seed: u64, n: usize, max_deg: usize) -> Polynomial {
    let mut state = seed.wrapping_mul(0x9e3779b97f4a7c15).wrapping_add(1);
    let mut next = move || {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        state
    };
    let mut out = Polynomial::zero();
    for _ in 0..6 {
        let mut exps = vec![0usize; n];
        for e in exps.iter_mut() {
            *e = (next() % (max_deg as u64 + 1)) as usize;
        }
        let c = (next() % 9) as i64 - 4;
        out = out.add(&Polynomial::from_monomial(Monomial::from_exps(&exps), c));
    }
    out
}

/// One trial: random `f`, `g` checked against the divided-difference
/// identity battery over the whole rank-`n` window.
fn identities(n: usize, trials: usize) -> Vec<Outcome> {
    let seeds: Vec<u64> = (0..trials as u64).collect();
    seeds
        .par_iter()
        .map(|&seed| {
            let f = sample(seed * 2 + 1, n, 3);
            let g = sample(seed * 2 + 2, n, 3);
            match identity_battery(n, &f, &g) {
                Ok(()) => pass(),
                Err(name) => bad(
                    Status::Fail,
                    format!("trial={seed}"),
                    format!("identity {name} failed for f={f}, g={g}"),
                    format!("schubert verify identities --n {n}"),
                ),
            }
        })
        .collect()
}

/// Runs every identity in the suite; returns the name of the first one
/// that fails.
pub fn identity_battery(n: usize, f: &Polynomial, g: &Polynomial) -> Result<(), &'static str> {
    let perms = Permutation::all(n);
    let w0 = Permutation::longest(n);
    let fg = f.mul(g);

    // twisted Leibnitz for a single transposition
    for i in 1..=n {
        for j in i + 1..=n {
            let lhs = ddiff_ij(i, j, &fg);
            let t = Permutation::transposition(i, j);
            let rhs = ddiff_ij(i, j, f)
                .mul(g)
                .add(&f.permute_variables(&t).mul(&ddiff_ij(i, j, g)));
            if lhs != rhs {
                return Err("twisted-leibnitz");
            }
        }
    }

    // nilpotence, braid, and commutation
    for i in 1..n {
        if !ddiff_i(i, &ddiff_i(i, f)).is_zero() {
            return Err("nilpotence");
        }
    }
    for i in 1..n.saturating_sub(1) {
        let a = ddiff_i(i, &ddiff_i(i + 1, &ddiff_i(i, f)));
        let b = ddiff_i(i + 1, &ddiff_i(i, &ddiff_i(i + 1, f)));
        if a != b {
            return Err("braid");
        }
    }
    for i in 1..n {
        for j in i + 2..n {
            let a = ddiff_i(i, &ddiff_i(j, f));
            let b = ddiff_i(j, &ddiff_i(i, f));
            if a != b {
                return Err("commutation");
            }
        }
    }

    // d_w(fg) = sum over v below w of v(d_{w/v}f) d_v(g)
    for w in &perms {
        let mut rhs = Polynomial::zero();
        for v in &perms {
            if !v.bruhat_leq(w) {
                continue;
            }
            rhs = rhs.add(
                &skew_apply(w, v, f)
                    .unwrap()
                    .permute_variables(v)
                    .mul(&ddiff_perm(v, g)),
            );
        }
        if ddiff_perm(w, &fg) != rhs {
            return Err("product-expansion");
        }
    }

    // d_{w/u}(fg) = sum over u <= v <= w of u^{-1}v(d_{w/v}f) d_{v/u}(g)
    for w in &perms {
        for u in &perms {
            if !u.bruhat_leq(w) {
                continue;
            }
            let mut rhs = Polynomial::zero();
            for v in &perms {
                if !u.bruhat_leq(v) || !v.bruhat_leq(w) {
                    continue;
                }
                let twist = u.inverse().compose(v);
                rhs = rhs.add(
                    &skew_apply(w, v, f)
                        .unwrap()
                        .permute_variables(&twist)
                        .mul(&skew_apply(v, u, g).unwrap()),
                );
            }
            if skew_apply(w, u, &fg).unwrap() != rhs {
                return Err("skew-product-expansion");
            }
        }
    }

    // w0 v d_{w0/v} = d_{w0 v}
    for v in &perms {
        let lhs = skew_apply(&w0, v, f)
            .unwrap()
            .permute_variables(&w0.compose(v));
        if lhs != ddiff_perm(&w0.compose(v), f) {
            return Err("longest-skew-conjugation");
        }
    }

    // d_{w0}(fg) = sum over w of sign(w) d_w(w0 f) d_{w w0}(g)
    let mut rhs = Polynomial::zero();
    for w in &perms {
        rhs = rhs.add(
            &ddiff_perm(w, &f.permute_variables(&w0))
                .mul(&ddiff_perm(&w.compose(&w0), g))
                .scale(w.sign()),
        );
    }
    if ddiff_perm(&w0, &fg) != rhs {
        return Err("alternating-product-rule");
    }

    // d_{w0 w w0} = sign(w) w0 d_w w0
    for w in &perms {
        let lhs = ddiff_perm(&w0.compose(w).compose(&w0), f);
        let rhs = ddiff_perm(w, &f.permute_variables(&w0))
            .permute_variables(&w0)
            .scale(w.sign());
        if lhs != rhs {
            return Err("conjugation-by-longest");
        }
    }

    // the skew operator does not depend on the reduced word
    for w in &perms {
        for v in &perms {
            if !v.bruhat_leq(w) {
                continue;
            }
            let reference = skew_apply(w, v, f).unwrap();
            for word in w.reduced_words() {
                let op = SkewOp::with_word(w, v, word).unwrap();
                if op.apply(f) != reference {
                    return Err("word-independence");
                }
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_range_is_a_clean_report() {
        let r = run(Suite::Identities, 3, 0, 0, 1);
        assert_eq!(r.total, 0);
        assert!(r.ok());
        let r = run(Suite::Theorem1, 1, 0, 0, 1);
        assert_eq!(r.total, 0);
        assert!(r.ok());
    }

    #[test]
    fn routes_equality_s3() {
        let r = run(Suite::RoutesEquality, 3, 0, 0, 2);
        assert_eq!(r.total, 216);
        assert!(r.ok(), "failures: {:?}", r.failures);
    }

    #[test]
    fn identity_battery_small() {
        let r = run(Suite::Identities, 3, 0, 5, 2);
        assert_eq!(r.total, 5);
        assert!(r.ok(), "failures: {:?}", r.failures);
    }

    #[test]
    fn conjecture_suites_s3() {
        let r = run(Suite::Conjecture1, 3, 0, 0, 2);
        assert_eq!(r.total, 216);
        assert!(r.ok(), "failures: {:?}", r.failures);
        let r = run(Suite::Conjecture2, 3, 1000, 0, 2);
        assert!(r.ok(), "failures: {:?}", r.failures);
    }

    #[test]
    fn reports_do_not_depend_on_worker_count() {
        let a = run(Suite::RoutesEquality, 3, 0, 0, 1).to_json_string();
        let b = run(Suite::RoutesEquality, 3, 0, 0, 4).to_json_string();
        assert_eq!(a, b);
    }

    #[test]
    fn cache_round_trip_and_corruption() {
        let dir = std::env::temp_dir().join(format!("schubert-cache-test-{}", std::process::id()));
        let _ = fs::remove_dir_all(&dir);
        let first = run_cached(Suite::Theorem1, 3, 0, 0, 1, Some(&dir));
        assert!(first.ok());
        let path = cache_path(&dir, Suite::Theorem1, 3);
        assert!(path.exists());
        let second = run_cached(Suite::Theorem1, 3, 0, 0, 1, Some(&dir));
        assert_eq!(first.to_json_string(), second.to_json_string());
        fs::write(&path, "not json").unwrap();
        let third = run_cached(Suite::Theorem1, 3, 0, 0, 1, Some(&dir));
        assert_eq!(first.to_json_string(), third.to_json_string());
        let _ = fs::remove_dir_all(&dir);
    }
}
