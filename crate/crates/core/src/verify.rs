//! Exhaustive and randomized checks of the theorems, each reported as a count
//! of instances checked and violations found.

use std::collections::BTreeMap;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Map, Value};

use crate::census::{PolySpace, SCHEMA_VERSION};
use crate::dynamics::{
    adjusted_resultant, converse_counterexample, critical_residue_orbit, cubic_char3_irreducible,
    cubic_char3_theorem_check, direct_iterate_check, necessary_condition_test,
    norm_identity_check, quadratic_stability_test, reachable_depth, ResultantMethod, Verdict,
};
use crate::error::{Error, Result};
use crate::factor::{is_irreducible, stickelberger_check};
use crate::field::{Elem, Field};
use crate::format::{element_json, poly_json};
use crate::oracle;
use crate::poly::{Poly, DEFAULT_DEGREE_CAP};
use crate::report::certificate_json;

pub const SUITES: &[&str] = &[
    "stickelberger",
    "cubic-char3",
    "lemma42",
    "resultant-identities",
    "norm-identity",
    "counterexample",
    "soundness",
    "quadratic-iff",
    "orbit-equivalence",
];

/// Number of failing instances echoed in a summary.
const MAX_FAILURES: usize = 10;

#[derive(Clone, Debug)]
pub struct SuiteParams {
    pub max_degree: usize,
    pub degree: Option<usize>,
    pub depth: Option<u32>,
    pub samples: usize,
    pub seed: u64,
    pub a0: Option<Elem>,
    pub monic: bool,
    pub degree_cap: usize,
    /// Largest population an exhaustive suite may enumerate.
    pub budget: u128,
}

impl Default for SuiteParams {
    fn default() -> Self {
        SuiteParams {
            max_degree: 4,
            degree: None,
            depth: None,
            samples: 200,
            seed: 0,
            a0: None,
            monic: false,
            degree_cap: DEFAULT_DEGREE_CAP,
            budget: 20_000_000,
        }
    }
}

#[derive(Clone, Debug)]
pub struct SuiteSummary {
    pub suite: String,
    pub field: String,
    pub params: Map<String, Value>,
    pub checked: u64,
    pub violations: u64,
    pub skipped: u64,
    pub stats: BTreeMap<String, Value>,
    pub failures: Vec<Value>,
    pub seconds: f64,
}

pub const TSV_HEADER: &str = "suite\tfield\tchecked\tviolations\tskipped\tseconds";

impl SuiteSummary {
    pub fn passed(&self) -> bool {
        self.violations == 0
    }

    pub fn to_json(&self) -> Value {
        json!({
            "schema_version": SCHEMA_VERSION,
            "kind": "suite_summary",
            "suite": self.suite,
            "field": self.field,
            "params": self.params,
            "checked": self.checked,
            "violations": self.violations,
            "skipped": self.skipped,
            "stats": self.stats,
            "failures": self.failures,
            "passed": self.passed(),
        })
    }

    pub fn tsv_row(&self) -> String {
        format!(
            "{}\t{}\t{}\t{}\t{}\t{:.3}",
            self.suite, self.field, self.checked, self.violations, self.skipped, self.seconds
        )
    }
}

#[derive(Clone, Debug, Default)]
struct Tally {
    checked: u64,
    violations: u64,
    skipped: u64,
    stats: BTreeMap<String, u64>,
    failures: Vec<Value>,
}

impl Tally {
    fn skip() -> Self {
        Tally { skipped: 1, ..Tally::default() }
    }

    fn check(ok: bool, failure: impl FnOnce() -> Value) -> Self {
        let mut t = Tally { checked: 1, ..Tally::default() };
        if !ok {
            t.violations = 1;
            t.failures.push(failure());
        }
        t
    }

    fn bump(&mut self, key: &str) {
        *self.stats.entry(key.to_string()).or_insert(0) += 1;
    }

    fn merge(mut self, o: Tally) -> Tally {
        self.checked += o.checked;
        self.violations += o.violations;
        self.skipped += o.skipped;
        for (k, v) in o.stats {
            *self.stats.entry(k).or_insert(0) += v;
        }
        if self.failures.len() < MAX_FAILURES {
            self.failures.extend(o.failures);
            self.failures.truncate(MAX_FAILURES);
        }
        self
    }

    fn finish(self, suite: &str, field: &Field, params: Value, start: Instant) -> SuiteSummary {
        SuiteSummary {
            suite: suite.to_string(),
            field: field.spec(),
            params: match params {
                Value::Object(m) => m,
                _ => Map::new(),
            },
            checked: self.checked,
            violations: self.violations,
            skipped: self.skipped,
            stats: self.stats.into_iter().map(|(k, v)| (k, json!(v))).collect(),
            failures: self.failures,
            seconds: start.elapsed().as_secs_f64(),
        }
    }
}

/// Runs `item` over `0..len` in parallel; the merge order follows the index order.
fn tally_range(len: u128, item: impl Fn(u128) -> Result<Tally> + Sync) -> Result<Tally> {
    let len = usize::try_from(len).map_err(|_| Error::BudgetExceeded("population overflows".into()))?;
    (0..len)
        .into_par_iter()
        .with_min_len(8)
        .map(|i| item(i as u128))
        .try_reduce(Tally::default, |a, b| Ok(a.merge(b)))
}

fn check_budget(population: u128, params: &SuiteParams) -> Result<()> {
    if population > params.budget {
        return Err(Error::BudgetExceeded(format!(
            "{population} polynomials exceed the budget of {}",
            params.budget
        )));
    }
    Ok(())
}

fn space_len(field: &Field, degree: usize, monic: bool) -> u128 {
    let q = field.order() as u128;
    let lead = if monic { 1 } else { q - 1 };
    (0..degree).fold(lead, |acc, _| acc.saturating_mul(q))
}

fn poly_failure(f: &Poly, extra: Value) -> Value {
    json!({"poly": poly_json(f), "poly_text": f.to_string(), "detail": extra})
}

pub fn run_suite(name: &str, field: &Field, params: &SuiteParams) -> Result<SuiteSummary> {
    match name {
        "stickelberger" => stickelberger(field, params),
        "cubic-char3" => cubic_char3(field, params),
        "lemma42" => lemma42(field, params),
        "resultant-identities" => resultant_identities(field, params),
        "norm-identity" => norm_identity(field, params),
        "counterexample" => counterexample(field, params),
        "soundness" => soundness(field, params),
        "quadratic-iff" => quadratic_iff(field, params),
        "orbit-equivalence" => orbit_equivalence(field, params),
        other => Err(Error::Parse(format!(
            "unknown suite {other:?}; expected one of {}",
            SUITES.join(", ")
        ))),
    }
}

/// Parity of the number of distinct factors against the character of the
/// discriminant, for every squarefree monic `f` with `2 <= deg f <= max_degree`.
/// The factor count is also compared with a trial-division factorization.
pub fn stickelberger(field: &Field, params: &SuiteParams) -> Result<SuiteSummary> {
    let start = Instant::now();
    let degrees = 2..=params.max_degree;
    check_budget(degrees.clone().map(|d| space_len(field, d, true)).sum(), params)?;
    let mut total = Tally::default();
    for d in degrees {
        let space = PolySpace::new(field, d, true, &[])?;
        let t = tally_range(space.len(), |i| {
            let f = space.nth(i);
            let check = stickelberger_check(&f)?;
            if !check.applicable {
                return Ok(Tally::skip());
            }
            let oracle_count = oracle::trial_factorization(&f)?.len();
            let ok = check.consistent && oracle_count == check.factor_count;
            let mut t = Tally::check(ok, || {
                poly_failure(
                    &f,
                    json!({"factor_count": check.factor_count, "oracle_count": oracle_count,
                           "disc_character": check.disc_char}),
                )
            });
            t.bump(&format!("degree_{d}"));
            if check.disc_char == 1 {
                t.bump("square_discriminant");
            }
            Ok(t)
        })?;
        total = total.merge(t);
    }
    Ok(total.finish("stickelberger", field, json!({"max_degree": params.max_degree}), start))
}

/// For every `f = a3 X^3 - a1 X - a0` over a field of characteristic 3, one of
/// `f, f^{(2)}, f^{(3)}` must be reducible.
pub fn cubic_char3(field: &Field, params: &SuiteParams) -> Result<SuiteSummary> {
    let start = Instant::now();
    if field.characteristic() != 3 {
        return Err(Error::WrongCharacteristic { expected: 3, found: field.characteristic() });
    }
    let space = PolySpace::new(field, 3, false, &[2])?;
    check_budget(space.len(), params)?;
    let t = tally_range(space.len(), |i| {
        let f = space.nth(i);
        let r = cubic_char3_theorem_check(&f)?;
        let mut t = Tally::check(r.holds(), || poly_failure(&f, json!("no reducible iterate")));
        if let Some(first) = r.reducible_at.iter().next() {
            t.bump(&format!("first_reducible_{first}"));
        }
        Ok(t)
    })?;
    Ok(t.finish("cubic-char3", field, json!({}), start))
}

/// The trace criterion for cubics in characteristic 3 against Rabin's test and
/// a direct root search, over every monic cubic.
pub fn lemma42(field: &Field, params: &SuiteParams) -> Result<SuiteSummary> {
    let start = Instant::now();
    if field.characteristic() != 3 {
        return Err(Error::WrongCharacteristic { expected: 3, found: field.characteristic() });
    }
    let space = PolySpace::new(field, 3, true, &[])?;
    check_budget(space.len(), params)?;
    let t = tally_range(space.len(), |i| {
        let f = space.nth(i);
        let criterion = cubic_char3_irreducible(&f)?;
        let rabin = is_irreducible(&f)?;
        let rootless = field.elements().all(|x| !f.evaluate(x).is_zero());
        let mut t = Tally::check(criterion == rabin && rabin == rootless, || {
            poly_failure(&f, json!({"criterion": criterion, "rabin": rabin, "rootless": rootless}))
        });
        if rabin {
            t.bump("irreducible");
        }
        let branch = match (f.coeff(2).is_zero(), f.coeff(1).is_zero()) {
            (true, true) => "branch_degenerate",
            (true, false) => "branch_a2_zero",
            (false, _) => "branch_a2_nonzero",
        };
        t.bump(branch);
        Ok(t)
    })?;
    let q = field.order() as u128;
    let mut s = t.finish("lemma42", field, json!({}), start);
    s.stats.insert("expected_irreducible".into(), json!((q * q * q - q) / 3));
    Ok(s)
}

fn random_poly(rng: &mut ChaCha8Rng, field: &Field, degree: usize) -> Poly {
    let q = field.order();
    let mut coeffs: Vec<Elem> =
        (0..degree).map(|_| field.elem(rng.gen_range(0..q)).unwrap()).collect();
    coeffs.push(field.elem(rng.gen_range(1..q)).unwrap());
    Poly::new(field, coeffs)
}

/// Euclidean, Sylvester and root-product resultants agree, resultants are
/// multiplicative, and `Disc(f) = C_f Res(f, f')` matches the root-product discriminant.
pub fn resultant_identities(field: &Field, params: &SuiteParams) -> Result<SuiteSummary> {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    let max = params.max_degree.max(2);
    let mut total = Tally::default();
    for _ in 0..params.samples {
        let deg = rng.gen_range(1..=max);
        let f = random_poly(&mut rng, field, deg);
        let deg = rng.gen_range(1..=max);
        let g = random_poly(&mut rng, field, deg);
        let deg = rng.gen_range(1..=max);
        let h = random_poly(&mut rng, field, deg);
        let dd = rng.gen_range(2..=max);
        let p = random_poly(&mut rng, field, dd);

        // three routes to Res(f, g), plus the swap rule
        let euclid = f.resultant(&g)?;
        let sylvester = oracle::sylvester_resultant(&f, &g)?;
        let roots = oracle::root_product_resultant(&f, &g)?;
        let sign = (f.degree().unwrap() * g.degree().unwrap()) % 2 == 1;
        let swapped = g.resultant(&f)?;
        let swap_ok = swapped == if sign { field.neg(euclid) } else { euclid };
        let mut t = Tally::check(euclid == sylvester && sylvester == roots && swap_ok, || {
            json!({"identity": "three_way", "f": poly_json(&f), "g": poly_json(&g)})
        });
        t.bump("three_way");

        let left = f.mul(&g)?.resultant(&h)?;
        let right = field.mul(f.resultant(&h)?, g.resultant(&h)?);
        let left2 = h.resultant(&f.mul(&g)?)?;
        let right2 = field.mul(h.resultant(&f)?, h.resultant(&g)?);
        let mut u = Tally::check(left == right && left2 == right2, || {
            json!({"identity": "multiplicative", "f": poly_json(&f), "g": poly_json(&g), "h": poly_json(&h)})
        });
        u.bump("multiplicative");

        let disc = p.discriminant()?;
        let by_roots = oracle::root_product_discriminant(&p)?;
        let fp = p.derivative();
        let relation_ok = match fp.degree() {
            None => disc.inseparable && disc.value.is_zero(),
            Some(k) => {
                let c = field.pow_signed(p.leading(), dd as i64 - k as i64 - 2)?;
                let c = if dd * (dd - 1) / 2 % 2 == 1 { field.neg(c) } else { c };
                disc.value == field.mul(c, p.resultant(&fp)?)
            }
        };
        let mut w = Tally::check(relation_ok && disc.value == by_roots, || {
            json!({"identity": "discriminant", "f": poly_json(&p),
                   "disc": element_json(field, disc.value), "by_roots": element_json(field, by_roots)})
        });
        w.bump("discriminant");
        total = total.merge(t).merge(u).merge(w);
    }
    Ok(total.finish(
        "resultant-identities",
        field,
        json!({"samples": params.samples, "seed": params.seed, "max_degree": max}),
        start,
    ))
}

/// The norm identity for every polynomial of the given degrees whose
/// `(n-1)`-th iterate is irreducible.
pub fn norm_identity(field: &Field, params: &SuiteParams) -> Result<SuiteSummary> {
    let start = Instant::now();
    let n = params.depth.unwrap_or(2);
    let degrees: Vec<usize> = match params.degree {
        Some(d) => vec![d],
        None => vec![2, 3],
    };
    check_budget(degrees.iter().map(|&d| space_len(field, d, params.monic)).sum(), params)?;
    let mut total = Tally::default();
    for &d in &degrees {
        let space = PolySpace::new(field, d, params.monic, &[])?;
        let t = tally_range(space.len(), |i| {
            let f = space.nth(i);
            match norm_identity_check(&f, n, params.degree_cap) {
                Ok(r) => {
                    let mut t = Tally::check(r.holds, || {
                        poly_failure(
                            &f,
                            json!({"lhs": element_json(field, r.lhs), "rhs": element_json(field, r.rhs)}),
                        )
                    });
                    t.bump(&format!("degree_{d}"));
                    Ok(t)
                }
                Err(Error::ReducibleIterate(_))
                | Err(Error::ConstantDerivative)
                | Err(Error::ZeroDerivative) => Ok(Tally::skip()),
                Err(e) => Err(e),
            }
        })?;
        total = total.merge(t);
    }
    Ok(total.finish(
        "norm-identity",
        field,
        json!({"n": n, "degrees": degrees, "monic": params.monic}),
        start,
    ))
}

/// Certificate for `(X - a0)^d + a0`.
pub fn counterexample(field: &Field, params: &SuiteParams) -> Result<SuiteSummary> {
    let start = Instant::now();
    let d = params.degree.unwrap_or(5);
    let a0 = params.a0.unwrap_or(Elem::ONE);
    let cert = converse_counterexample(field, d, a0)?;
    let t = Tally::check(cert.is_valid(), || certificate_json(&cert));
    let mut s = t.finish(
        "counterexample",
        field,
        json!({"d": d, "a0": element_json(field, a0)}),
        start,
    );
    s.stats.insert("certificate".into(), certificate_json(&cert));
    Ok(s)
}

/// Every criterion failure at a witness `n` within the depth must come with a
/// reducible iterate `f^{(m)}`, `m <= n`, found by direct factorization.
pub fn soundness(field: &Field, params: &SuiteParams) -> Result<SuiteSummary> {
    let start = Instant::now();
    let depth = params.depth.unwrap_or(3);
    let degrees = 2..=params.max_degree;
    check_budget(degrees.clone().map(|d| space_len(field, d, params.monic)).sum(), params)?;
    let mut total = Tally::default();
    for d in degrees {
        let space = PolySpace::new(field, d, params.monic, &[])?;
        let depth = reachable_depth(d, depth, params.degree_cap);
        let t = tally_range(space.len(), |i| {
            let f = space.nth(i);
            let r = necessary_condition_test(&f)?;
            let n = match (&r.verdict, &r.witness) {
                (Verdict::NotStable, Some(w)) if w.n <= depth as u64 => w.n,
                (Verdict::Inapplicable, _) => return Ok(Tally::skip()),
                (Verdict::NotStable, _) => {
                    let mut t = Tally::skip();
                    t.bump("witness_beyond_depth");
                    return Ok(t);
                }
                _ => {
                    let mut t = Tally::skip();
                    t.bump("criterion_survivor");
                    return Ok(t);
                }
            };
            let direct = direct_iterate_check(&f, n as u32, params.degree_cap)?;
            let mut t = Tally::check(direct.first_reducible.is_some(), || {
                poly_failure(&f, json!({"witness": n}))
            });
            t.bump(&format!("witness_{n}"));
            Ok(t)
        })?;
        total = total.merge(t);
    }
    Ok(total.finish(
        "soundness",
        field,
        json!({"max_degree": params.max_degree, "depth": depth, "monic": params.monic}),
        start,
    ))
}

/// The degree-2 criterion by two routes against direct irreducibility of the iterates.
pub fn quadratic_iff(field: &Field, params: &SuiteParams) -> Result<SuiteSummary> {
    let start = Instant::now();
    let depth = reachable_depth(2, params.depth.unwrap_or(5), params.degree_cap);
    let space = PolySpace::new(field, 2, params.monic, &[])?;
    check_budget(space.len(), params)?;
    let t = tally_range(space.len(), |i| {
        let f = space.nth(i);
        let quad = quadratic_stability_test(&f)?;
        let general = necessary_condition_test(&f)?;
        let direct = direct_iterate_check(&f, depth, params.degree_cap)?;
        let consistent = match (quad.verdict, &quad.witness) {
            (Verdict::Stable, _) => direct.first_reducible.is_none(),
            (_, Some(w)) if w.n <= depth as u64 => {
                direct.first_reducible.is_some_and(|m| m as u64 <= w.n)
            }
            _ => true,
        };
        let same_route = quad.verdict == general.verdict
            && quad.witness.as_ref().map(|w| w.n) == general.witness.as_ref().map(|w| w.n);
        let mut t = Tally::check(consistent && same_route, || {
            poly_failure(
                &f,
                json!({"quadratic": quad.verdict.to_string(), "general": general.verdict.to_string(),
                       "first_reducible": direct.first_reducible}),
            )
        });
        if quad.verdict == Verdict::Stable {
            t.bump("stable");
        }
        Ok(t)
    })?;
    Ok(t.finish("quadratic-iff", field, json!({"depth": depth, "monic": params.monic}), start))
}

/// Adjusted resultants from explicit iterates against the orbit route, and
/// orbit values against evaluation at explicit critical points.
pub fn orbit_equivalence(field: &Field, params: &SuiteParams) -> Result<SuiteSummary> {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    let max = params.max_degree.clamp(2, 4);
    let max_n = params.depth.unwrap_or(3) as u64;
    let mut total = Tally::default();
    let mut drawn = 0;
    while drawn < params.samples {
        let deg = rng.gen_range(2..=max);
        let f = random_poly(&mut rng, field, deg);
        let n = rng.gen_range(1..=max_n);
        if f.derivative().degree().unwrap_or(0) == 0 {
            continue;
        }
        drawn += 1;
        let explicit = adjusted_resultant(&f, n, ResultantMethod::Explicit, params.degree_cap)?;
        let orbit = adjusted_resultant(&f, n, ResultantMethod::Orbit, params.degree_cap)?;
        let v = critical_residue_orbit(&f)?.value_at(n);
        let by_roots = oracle::critical_value_product(&f, n)?;
        let t = Tally::check(explicit == orbit && v == by_roots, || {
            poly_failure(
                &f,
                json!({"n": n, "explicit": element_json(field, explicit),
                       "orbit": element_json(field, orbit)}),
            )
        });
        total = total.merge(t);
    }
    Ok(total.finish(
        "orbit-equivalence",
        field,
        json!({"samples": params.samples, "seed": params.seed, "max_n": max_n}),
        start,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_suites_pass() {
        let f3 = Field::prime(3).unwrap();
        let params = SuiteParams { max_degree: 3, samples: 20, ..SuiteParams::default() };
        for name in ["stickelberger", "cubic-char3", "lemma42", "resultant-identities", "norm-identity", "soundness", "quadratic-iff", "orbit-equivalence"] {
            let s = run_suite(name, &f3, &params).unwrap();
            assert_eq!(s.violations, 0, "{name}: {:?}", s.failures);
            assert!(s.checked > 0, "{name}");
        }
    }

    #[test]
    fn cubic_char3_population() {
        let f3 = Field::prime(3).unwrap();
        let s = cubic_char3(&f3, &SuiteParams::default()).unwrap();
        assert_eq!(s.checked, 18);
    }

    #[test]
    fn unknown_suite() {
        let f3 = Field::prime(3).unwrap();
        assert!(matches!(run_suite("nope", &f3, &SuiteParams::default()), Err(Error::Parse(_))));
    }

    #[test]
    fn seeded_suites_repeat() {
        let f5 = Field::prime(5).unwrap();
        let params = SuiteParams { samples: 30, seed: 7, ..SuiteParams::default() };
        let a = resultant_identities(&f5, &params).unwrap().to_json();
        let b = resultant_identities(&f5, &params).unwrap().to_json();
        assert_eq!(a, b);
    }
}
