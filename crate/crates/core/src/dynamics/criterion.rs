use std::collections::HashMap;
use std::fmt;

use serde::Serialize;

use super::orbit::{orbit_sets, CriterionValue};
use crate::error::{Error, Result};
use crate::factor::is_irreducible;
use crate::field::Elem;
use crate::poly::Poly;

/// Maximum number of criterion values kept in a report.
pub const REPORTED_VALUES: usize = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Verdict {
    Stable,
    NotStable,
    CandidateStable,
    Inapplicable,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Verdict::Stable => "Stable",
            Verdict::NotStable => "NotStable",
            Verdict::CandidateStable => "CandidateStable",
            Verdict::Inapplicable => "Inapplicable",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub n: u64,
    pub reason: String,
}

#[derive(Clone, Debug)]
pub struct StabilityReport {
    pub poly: Poly,
    /// Final verdict after combining the criterion with any direct checks.
    pub verdict: Verdict,
    /// Verdict of the character criterion alone.
    pub criterion_verdict: Verdict,
    pub witness: Option<Witness>,
    pub criterion_values: Vec<CriterionValue>,
    pub tail_length: Option<usize>,
    pub cycle_length: Option<usize>,
    /// Number of indices checked by the criterion; covers every `n >= 1`.
    pub span: Option<u64>,
    pub depth_verified: u32,
    pub first_reducible: Option<u32>,
    pub applicability: String,
    /// The criterion held for all `n` but an iterate is reducible.
    pub converse_failure: bool,
}

const ROOT_HIT: &str = "critical orbit hits a root: f^(n) has a root in F_{q^k}";

fn failure_reason(character: i8) -> String {
    match character {
        0 => ROOT_HIT.to_string(),
        1 => "criterion element is a square".to_string(),
        _ => "criterion element is a nonsquare".to_string(),
    }
}

fn degree_at_least_two(f: &Poly) -> Result<usize> {
    match f.degree() {
        Some(d) if d >= 2 => Ok(d),
        other => Err(Error::WrongDegree(format!("need degree >= 2, got {}", fmt_degree(other)))),
    }
}

fn fmt_degree(d: Option<usize>) -> String {
    d.map_or_else(|| "-inf".to_string(), |d| d.to_string())
}

fn empty_report(f: &Poly, verdict: Verdict, applicability: String) -> StabilityReport {
    StabilityReport {
        poly: f.clone(),
        verdict,
        criterion_verdict: verdict,
        witness: None,
        criterion_values: Vec::new(),
        tail_length: None,
        cycle_length: None,
        span: None,
        depth_verified: 0,
        first_reducible: None,
        applicability,
        converse_failure: false,
    }
}

/// Walks the criterion elements over every index that determines them.
///
/// For `d = 2` a clean pass proves stability; for larger `d` it is only a
/// necessary condition and yields `CandidateStable`.
pub fn necessary_condition_test(f: &Poly) -> Result<StabilityReport> {
    let d = degree_at_least_two(f)?;
    let sets = match orbit_sets(f) {
        Ok(s) => s,
        Err(Error::ZeroDerivative) => {
            return Ok(empty_report(
                f,
                Verdict::Inapplicable,
                "derivative is zero; the criterion does not apply".into(),
            ))
        }
        Err(Error::ConstantDerivative) => {
            return Ok(empty_report(
                f,
                Verdict::Inapplicable,
                "derivative is constant; the criterion does not apply".into(),
            ))
        }
        Err(e) => return Err(e),
    };
    let required = sets.required_character();
    let span = sets.span();
    let mut values = Vec::new();
    let mut witness = None;
    for n in 1..=span {
        let v = sets.value(n);
        if values.len() < REPORTED_VALUES {
            values.push(v);
        }
        if v.character != required {
            witness = Some(Witness { n, reason: failure_reason(v.character) });
            break;
        }
    }
    let verdict = match (&witness, d) {
        (Some(_), _) => Verdict::NotStable,
        (None, 2) => Verdict::Stable,
        (None, _) => Verdict::CandidateStable,
    };
    let applicability = if d == 2 {
        "degree 2: criterion is necessary and sufficient".to_string()
    } else {
        "degree >= 3: criterion is necessary only".to_string()
    };
    let orbit = sets.orbit();
    Ok(StabilityReport {
        poly: f.clone(),
        verdict,
        criterion_verdict: verdict,
        witness,
        criterion_values: values,
        tail_length: Some(orbit.tail_length()),
        cycle_length: Some(orbit.cycle_length()),
        span: Some(span),
        depth_verified: 0,
        first_reducible: None,
        applicability,
        converse_failure: false,
    })
}

/// Quadratic criterion evaluated on the orbit of the critical point itself.
///
/// With `f = a X^2 + b X + c` and `gamma = -b / 2a`, the elements are
/// `-a f(gamma)` and `a f^{(n)}(gamma)` for `n >= 2`; all must be nonsquares.
/// This never forms residues or resultants, so it is an independent route to
/// the degree-2 case of [`necessary_condition_test`].
pub fn quadratic_stability_test(f: &Poly) -> Result<StabilityReport> {
    if f.degree() != Some(2) {
        return Err(Error::WrongDegree(format!(
            "quadratic test needs degree 2, got {}",
            fmt_degree(f.degree())
        )));
    }
    let field = f.field();
    let a = f.coeff(2);
    let gamma = field.neg(field.div(f.coeff(1), field.add(a, a))?);

    // x_n = f^{(n)}(gamma), n = 1, 2, ... until the first repeat.
    let mut first_seen: HashMap<Elem, u64> = HashMap::new();
    let mut orbit = Vec::new();
    let mut x = f.evaluate(gamma);
    let mut n = 1u64;
    let (tail, cycle) = loop {
        if let Some(&m) = first_seen.get(&x) {
            break ((m - 1) as usize, (n - m) as usize);
        }
        first_seen.insert(x, n);
        orbit.push(x);
        x = f.evaluate(x);
        n += 1;
    };
    let span = tail.max(1) + cycle;
    let at = |n: usize| -> Elem {
        if n <= orbit.len() {
            orbit[n - 1]
        } else {
            orbit[tail + (n - 1 - tail) % cycle]
        }
    };

    let mut values = Vec::new();
    let mut witness = None;
    for n in 1..=span {
        let mut element = field.mul(a, at(n));
        if n == 1 {
            element = field.neg(element);
        }
        let character = field.quadratic_character(element);
        if values.len() < REPORTED_VALUES {
            values.push(CriterionValue { n: n as u64, element, character });
        }
        if character != -1 {
            witness = Some(Witness { n: n as u64, reason: failure_reason(character) });
            break;
        }
    }
    let verdict = if witness.is_some() { Verdict::NotStable } else { Verdict::Stable };
    Ok(StabilityReport {
        poly: f.clone(),
        verdict,
        criterion_verdict: verdict,
        witness,
        criterion_values: values,
        tail_length: Some(tail),
        cycle_length: Some(cycle),
        span: Some(span as u64),
        depth_verified: 0,
        first_reducible: None,
        applicability: "degree 2: critical point orbit criterion".into(),
        converse_failure: false,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DirectCheck {
    /// Largest `n` with `f^{(1)}, ..., f^{(n)}` all irreducible.
    pub depth_verified: u32,
    pub first_reducible: Option<u32>,
}

fn check_cap(d: usize, n: u32, cap: usize) -> Result<()> {
    let degree = (d as u128).checked_pow(n).unwrap_or(u128::MAX);
    if degree > cap as u128 {
        return Err(Error::DegreeCapExceeded { degree, cap });
    }
    Ok(())
}

/// `f^{(n)}` built by repeated composition.
pub fn iterate(f: &Poly, n: u32, cap: usize) -> Result<Poly> {
    let d = f.degree().ok_or(Error::ZeroPolynomial)?;
    check_cap(d, n, cap)?;
    let mut it = Poly::x(f.field());
    for _ in 0..n {
        it = f.compose_capped(&it, cap)?;
    }
    Ok(it)
}

/// Builds `f^{(1)}, ..., f^{(n_max)}` and tests each for irreducibility,
/// stopping at the first reducible one.
pub fn direct_iterate_check(f: &Poly, n_max: u32, cap: usize) -> Result<DirectCheck> {
    let d = degree_at_least_two(f)?;
    check_cap(d, n_max, cap)?;
    let mut it = Poly::x(f.field());
    for n in 1..=n_max {
        it = f.compose_capped(&it, cap)?;
        if !is_irreducible(&it)? {
            return Ok(DirectCheck { depth_verified: n - 1, first_reducible: Some(n) });
        }
    }
    Ok(DirectCheck { depth_verified: n_max, first_reducible: None })
}

/// Largest `n <= depth` with `d^n <= cap`.
pub fn reachable_depth(d: usize, depth: u32, cap: usize) -> u32 {
    let mut n = 0;
    let mut degree = 1u128;
    while n < depth {
        degree *= d as u128;
        if degree > cap as u128 {
            break;
        }
        n += 1;
    }
    n
}

/// Criterion test followed by a direct check of the iterates up to `depth`
/// (clamped so that no iterate exceeds `cap`).
pub fn assess(f: &Poly, depth: u32, cap: usize) -> Result<StabilityReport> {
    let mut report = necessary_condition_test(f)?;
    let d = f.degree().unwrap();
    let depth = reachable_depth(d, depth, cap);
    if depth == 0 {
        return Ok(report);
    }
    let direct = direct_iterate_check(f, depth, cap)?;
    report.depth_verified = direct.depth_verified;
    report.first_reducible = direct.first_reducible;
    if let Some(m) = direct.first_reducible {
        if report.verdict != Verdict::NotStable {
            report.converse_failure = report.criterion_verdict == Verdict::CandidateStable;
            report.verdict = Verdict::NotStable;
            report.witness =
                Some(Witness { n: m as u64, reason: format!("f^({m}) is reducible") });
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;
    use crate::poly::DEFAULT_DEGREE_CAP;

    fn p(q: u64, c: &[i64]) -> Poly {
        Poly::from_ints(&Field::prime(q).unwrap(), c)
    }

    #[test]
    fn x2_plus_1_over_f3_is_stable() {
        let f = p(3, &[1, 0, 1]);
        assert_eq!(necessary_condition_test(&f).unwrap().verdict, Verdict::Stable);
        assert_eq!(quadratic_stability_test(&f).unwrap().verdict, Verdict::Stable);
        let direct = direct_iterate_check(&f, 3, DEFAULT_DEGREE_CAP).unwrap();
        assert_eq!(direct, DirectCheck { depth_verified: 3, first_reducible: None });
    }

    #[test]
    fn x2_minus_1_over_f5() {
        let f = p(5, &[-1, 0, 1]);
        let r = necessary_condition_test(&f).unwrap();
        assert_eq!(r.verdict, Verdict::NotStable);
        assert_eq!(r.witness.unwrap().n, 1);
        assert_eq!(
            direct_iterate_check(&f, 3, DEFAULT_DEGREE_CAP).unwrap().first_reducible,
            Some(1)
        );
    }

    #[test]
    fn x2_over_f5_hits_zero() {
        let r = quadratic_stability_test(&p(5, &[0, 0, 1])).unwrap();
        assert_eq!(r.verdict, Verdict::NotStable);
        let w = r.witness.unwrap();
        assert_eq!(w.n, 1);
        assert_eq!(w.reason, ROOT_HIT);
    }

    #[test]
    fn linear_is_rejected() {
        assert!(matches!(
            direct_iterate_check(&p(3, &[0, 1]), 2, 64),
            Err(Error::WrongDegree(_))
        ));
    }

    #[test]
    fn cap_is_enforced() {
        let f = p(3, &[1, 0, 1]);
        assert_eq!(
            direct_iterate_check(&f, 5, 16),
            Err(Error::DegreeCapExceeded { degree: 32, cap: 16 })
        );
        assert_eq!(reachable_depth(2, 5, 16), 4);
        assert_eq!(assess(&f, 5, 16).unwrap().depth_verified, 4);
    }

    #[test]
    fn iterate_degrees() {
        let f = p(5, &[1, 2, 0, 1]);
        assert_eq!(iterate(&f, 0, 64).unwrap(), Poly::x(f.field()));
        assert_eq!(iterate(&f, 3, 64).unwrap().degree(), Some(27));
        let two = iterate(&f, 2, 64).unwrap();
        assert_eq!(two, f.compose(&f).unwrap());
    }

    #[test]
    fn inapplicable_when_derivative_constant() {
        let r = necessary_condition_test(&p(3, &[1, 2, 0, 1])).unwrap();
        assert_eq!(r.verdict, Verdict::Inapplicable);
        let r = assess(&p(3, &[1, 2, 0, 1]), 3, DEFAULT_DEGREE_CAP).unwrap();
        assert_eq!(r.verdict, Verdict::NotStable);
        assert!(r.first_reducible.is_some());
    }

    #[test]
    fn converse_family_is_flagged() {
        let f3 = Field::prime(3).unwrap();
        let f9 = Field::extension(&f3, 2, None).unwrap();
        let lin = Poly::from_ints(&f9, &[-1, 1]);
        let mut f = Poly::one(&f9);
        for _ in 0..5 {
            f = &f * &lin;
        }
        let f = &f + &Poly::one(&f9);
        let r = assess(&f, 1, DEFAULT_DEGREE_CAP).unwrap();
        assert_eq!(r.criterion_verdict, Verdict::CandidateStable);
        assert_eq!(r.verdict, Verdict::NotStable);
        assert!(r.converse_failure);
        assert_eq!(r.first_reducible, Some(1));
    }

    #[test]
    fn quadratic_routes_agree_over_small_fields() {
        for q in [3u64, 5, 7, 9] {
            let field = if q == 9 {
                Field::extension(&Field::prime(3).unwrap(), 2, None).unwrap()
            } else {
                Field::prime(q).unwrap()
            };
            for a in field.elements().filter(|a| !a.is_zero()) {
                for b in field.elements() {
                    for c in field.elements() {
                        let f = Poly::new(&field, vec![c, b, a]);
                        let x = necessary_condition_test(&f).unwrap();
                        let y = quadratic_stability_test(&f).unwrap();
                        assert_eq!(x.verdict, y.verdict, "{f}");
                        assert_eq!(
                            x.witness.as_ref().map(|w| w.n),
                            y.witness.as_ref().map(|w| w.n)
                        );
                    }
                }
            }
        }
    }
}
