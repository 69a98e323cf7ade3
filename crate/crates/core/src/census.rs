//! Exhaustive stability sweeps over all polynomials of a fixed degree.

use std::time::Instant;

use rayon::prelude::*;
use serde_json::{json, Value};

use crate::dynamics::{assess, quadratic_stability_test, reachable_depth, Verdict};
use crate::error::{Error, Result};
use crate::field::{Elem, Field};
use crate::poly::{Poly, DEFAULT_DEGREE_CAP};

pub const SCHEMA_VERSION: u32 = 1;

/// Default bound on `population * d^depth`.
pub const DEFAULT_BUDGET: u128 = 2_000_000_000;

/// All polynomials of one degree, optionally monic and with some coefficients
/// pinned to zero, in lexicographic order of `(a_0, ..., a_d)` with `a_0` most
/// significant.
#[derive(Clone, Debug)]
pub struct PolySpace {
    field: Field,
    degree: usize,
    monic: bool,
    free: Vec<usize>,
    len: u128,
}

impl PolySpace {
    pub fn new(field: &Field, degree: usize, monic: bool, zero_coefficients: &[usize]) -> Result<Self> {
        if degree < 2 {
            return Err(Error::WrongDegree(format!("census needs degree >= 2, got {degree}")));
        }
        if let Some(&i) = zero_coefficients.iter().find(|&&i| i >= degree) {
            return Err(Error::PreconditionViolated(format!(
                "coefficient {i} cannot be pinned to zero in degree {degree}"
            )));
        }
        let free: Vec<usize> = (0..degree).filter(|i| !zero_coefficients.contains(i)).collect();
        let q = field.order() as u128;
        let lead = if monic { 1 } else { q - 1 };
        let len = (0..free.len())
            .try_fold(lead, |acc, _| acc.checked_mul(q))
            .ok_or_else(|| Error::BudgetExceeded("population overflows".into()))?;
        Ok(PolySpace { field: field.clone(), degree, monic, free, len })
    }

    pub fn len(&self) -> u128 {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// The `i`-th polynomial.
    pub fn nth(&self, mut i: u128) -> Poly {
        let q = self.field.order() as u128;
        let mut coeffs = vec![Elem::ZERO; self.degree + 1];
        coeffs[self.degree] = if self.monic {
            Elem::ONE
        } else {
            let lead = i % (q - 1);
            i /= q - 1;
            self.field.elem(lead as u64 + 1).unwrap()
        };
        for &j in self.free.iter().rev() {
            coeffs[j] = self.field.elem((i % q) as u64).unwrap();
            i /= q;
        }
        Poly::new(&self.field, coeffs)
    }

    pub fn iter(&self) -> impl Iterator<Item = Poly> + '_ {
        (0..self.len).map(move |i| self.nth(i))
    }
}

/// Every polynomial of degree `d` (monic or with any nonzero leading coefficient).
pub fn enumerate_polynomials(field: &Field, d: usize, monic: bool) -> Result<Vec<Poly>> {
    Ok(PolySpace::new(field, d, monic, &[])?.iter().collect())
}

#[derive(Clone, Debug)]
pub struct CensusConfig {
    pub degree: usize,
    pub monic: bool,
    /// Iterates checked directly for every polynomial the criterion does not reject.
    pub direct_depth: u32,
    pub degree_cap: usize,
    /// Worker threads; `None` uses the global pool.
    pub jobs: Option<usize>,
    pub budget: u128,
    pub zero_coefficients: Vec<usize>,
}

impl CensusConfig {
    pub fn new(degree: usize) -> Self {
        CensusConfig {
            degree,
            monic: false,
            direct_depth: 3,
            degree_cap: DEFAULT_DEGREE_CAP,
            jobs: None,
            budget: DEFAULT_BUDGET,
            zero_coefficients: Vec::new(),
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Counts {
    pub stable: u64,
    pub candidate_stable: u64,
    pub not_stable: u64,
    pub inapplicable: u64,
    /// Stable or CandidateStable by the criterion alone.
    pub criterion_survivors: u64,
    /// Criterion survivors or inapplicable items with a reducible iterate within depth.
    pub demoted: u64,
    /// CandidateStable items with a reducible iterate.
    pub converse_failures: u64,
    /// Final survivors whose iterates were all checked to the full depth.
    pub verified_survivors: u64,
    /// Disagreements between independent routes that theory rules out.
    pub contradictions: u64,
}

impl Counts {
    fn merge(mut self, o: Counts) -> Counts {
        self.stable += o.stable;
        self.candidate_stable += o.candidate_stable;
        self.not_stable += o.not_stable;
        self.inapplicable += o.inapplicable;
        self.criterion_survivors += o.criterion_survivors;
        self.demoted += o.demoted;
        self.converse_failures += o.converse_failures;
        self.verified_survivors += o.verified_survivors;
        self.contradictions += o.contradictions;
        self
    }

    pub fn total(&self) -> u64 {
        self.stable + self.candidate_stable + self.not_stable + self.inapplicable
    }
}

#[derive(Clone, Debug)]
pub struct CensusResult {
    pub field: String,
    pub q: u64,
    pub degree: usize,
    pub monic: bool,
    pub zero_coefficients: Vec<usize>,
    pub population: u64,
    pub counts: Counts,
    pub depth: u32,
    pub degree_cap: usize,
    pub bound_reference: f64,
    /// Wall time; kept out of the JSON document so that it stays reproducible.
    pub seconds: f64,
}

pub const TSV_HEADER: &str = "field\td\tmonic\tpopulation\tstable\tcandidate\tnot_stable\tinapplicable\tdepth\tbound_reference\tseconds";

impl CensusResult {
    pub fn to_json(&self) -> Value {
        let c = &self.counts;
        json!({
            "schema_version": SCHEMA_VERSION,
            "kind": "census",
            "field": self.field,
            "q": self.q,
            "degree": self.degree,
            "monic": self.monic,
            "zero_coefficients": self.zero_coefficients,
            "population": self.population,
            "counts": {
                "stable": c.stable,
                "candidate_stable": c.candidate_stable,
                "not_stable": c.not_stable,
                "inapplicable": c.inapplicable,
            },
            "criterion_survivors": c.criterion_survivors,
            "demoted": c.demoted,
            "converse_failures": c.converse_failures,
            "verified_survivors": c.verified_survivors,
            "contradictions": c.contradictions,
            "depth": self.depth,
            "degree_cap": self.degree_cap,
            "bound_reference": self.bound_reference,
            "bound_reference_approximate": true,
        })
    }

    pub fn tsv_row(&self) -> String {
        let c = &self.counts;
        format!(
            "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{:.6}\t{:.3}",
            self.field,
            self.degree,
            self.monic,
            self.population,
            c.stable,
            c.candidate_stable,
            c.not_stable,
            c.inapplicable,
            self.depth,
            self.bound_reference,
            self.seconds
        )
    }
}

/// `q^{d + 1 - 1/ln(2 d^2)}`, a reference scale with unknown constant.
pub fn bound_reference(q: u64, d: usize) -> f64 {
    let d = d as f64;
    (q as f64).powf(d + 1.0 - 1.0 / (2.0 * d * d).ln())
}

fn classify(f: &Poly, depth: u32, cap: usize) -> Result<Counts> {
    let report = assess(f, depth, cap)?;
    let mut c = Counts::default();
    let crit = report.criterion_verdict;
    if matches!(crit, Verdict::Stable | Verdict::CandidateStable) {
        c.criterion_survivors = 1;
    }
    if f.degree() == Some(2) && quadratic_stability_test(f)?.verdict != crit {
        c.contradictions += 1;
    }
    if report.first_reducible.is_some() && crit != Verdict::NotStable {
        c.demoted = 1;
        match crit {
            Verdict::Stable => c.contradictions += 1,
            Verdict::CandidateStable => c.converse_failures = 1,
            _ => {}
        }
    }
    match report.verdict {
        Verdict::Stable => c.stable = 1,
        Verdict::CandidateStable => c.candidate_stable = 1,
        Verdict::NotStable => c.not_stable = 1,
        Verdict::Inapplicable => c.inapplicable = 1,
    }
    if matches!(report.verdict, Verdict::Stable | Verdict::CandidateStable)
        && report.depth_verified == depth
    {
        c.verified_survivors = 1;
    }
    Ok(c)
}

pub fn stability_census(field: &Field, config: &CensusConfig) -> Result<CensusResult> {
    let start = Instant::now();
    let space = PolySpace::new(field, config.degree, config.monic, &config.zero_coefficients)?;
    let depth = reachable_depth(config.degree, config.direct_depth, config.degree_cap);
    let work = (config.degree as u128)
        .checked_pow(depth)
        .and_then(|w| w.checked_mul(space.len()))
        .unwrap_or(u128::MAX);
    if work > config.budget {
        return Err(Error::BudgetExceeded(format!(
            "{} polynomials at depth {depth} exceed the budget of {}",
            space.len(),
            config.budget
        )));
    }
    let population = usize::try_from(space.len())
        .map_err(|_| Error::BudgetExceeded("population overflows".into()))?;
    let run = || -> Result<Counts> {
        (0..population)
            .into_par_iter()
            .with_min_len(16)
            .map(|i| classify(&space.nth(i as u128), depth, config.degree_cap))
            .try_reduce(Counts::default, |a, b| Ok(a.merge(b)))
    };
    let counts = match config.jobs {
        None => run()?,
        Some(jobs) => rayon::ThreadPoolBuilder::new()
            .num_threads(jobs.max(1))
            .build()
            .map_err(|e| Error::PreconditionViolated(format!("thread pool: {e}")))?
            .install(run)?,
    };
    let population = population as u64;
    debug_assert_eq!(counts.total(), population);
    Ok(CensusResult {
        field: field.spec(),
        q: field.order(),
        degree: config.degree,
        monic: config.monic,
        zero_coefficients: config.zero_coefficients.clone(),
        population,
        counts,
        depth,
        degree_cap: config.degree_cap,
        bound_reference: bound_reference(field.order(), config.degree),
        seconds: start.elapsed().as_secs_f64(),
    })
}
