use serde::Serialize;

use crate::cycle::brent;
use crate::error::{Error, Result};
use crate::field::{Elem, Field};
use crate::poly::Poly;

/// One step of the critical residue orbit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitRecord {
    pub n: u64,
    /// `t_n = f^{(n)} mod f'`
    pub residue: Poly,
    /// `v_n`, the product of `f^{(n)}(gamma)` over the roots `gamma` of `f'` with multiplicity.
    pub value: Elem,
}

/// The residue orbit `t_1, t_2, ...` up to its first repetition.
///
/// Records are stored for `n = 1 ..= tail + cycle`; later indices wrap into the
/// cycle.
#[derive(Clone, Debug)]
pub struct CriticalOrbit {
    f: Poly,
    derivative: Poly,
    records: Vec<OrbitRecord>,
    tail: usize,
    cycle: usize,
}

/// `prod t(gamma_i) = (-1)^{k deg t} lc(f')^{-deg t} Res(t, f')`, with `c^k` for a constant `c`.
fn residue_value(t: &Poly, fp: &Poly, k: usize) -> Result<Elem> {
    let field = t.field();
    match t.degree() {
        None => Ok(Elem::ZERO),
        Some(0) => Ok(field.pow(t.leading(), k as u64)),
        Some(dt) => {
            let mut v = field.mul(
                field.pow_signed(fp.leading(), -(dt as i64))?,
                t.resultant(fp)?,
            );
            if k * dt % 2 == 1 {
                v = field.neg(v);
            }
            Ok(v)
        }
    }
}

impl CriticalOrbit {
    pub fn new(f: &Poly) -> Result<Self> {
        let fp = f.derivative();
        let k = match fp.degree() {
            None => return Err(Error::ZeroDerivative),
            Some(0) => return Err(Error::ConstantDerivative),
            Some(k) => k,
        };
        let t1 = f.rem(&fp)?;
        let shape = brent(t1.clone(), |t| f.compose_mod(t, &fp))?;
        let total = shape.tail + shape.cycle;
        let mut records = Vec::with_capacity(total);
        let mut t = t1;
        for n in 1..=total as u64 {
            let value = residue_value(&t, &fp, k)?;
            let next = f.compose_mod(&t, &fp)?;
            records.push(OrbitRecord { n, residue: t, value });
            t = next;
        }
        Ok(CriticalOrbit {
            f: f.clone(),
            derivative: fp,
            records,
            tail: shape.tail,
            cycle: shape.cycle,
        })
    }

    pub fn polynomial(&self) -> &Poly {
        &self.f
    }

    pub fn derivative(&self) -> &Poly {
        &self.derivative
    }

    /// `k = deg f'`.
    pub fn critical_degree(&self) -> usize {
        self.derivative.degree().unwrap()
    }

    pub fn records(&self) -> &[OrbitRecord] {
        &self.records
    }

    /// Number of indices `n >= 1` before the residue sequence enters its cycle.
    pub fn tail_length(&self) -> usize {
        self.tail
    }

    pub fn cycle_length(&self) -> usize {
        self.cycle
    }

    /// Record holding `t_n` for any `n >= 1`.
    pub fn record(&self, n: u64) -> &OrbitRecord {
        assert!(n >= 1, "orbit indices start at 1");
        let i = n - 1;
        let idx = if i < self.records.len() as u64 {
            i as usize
        } else {
            self.tail + ((i - self.tail as u64) % self.cycle as u64) as usize
        };
        &self.records[idx]
    }

    pub fn value_at(&self, n: u64) -> Elem {
        self.record(n).value
    }

    pub fn residue_at(&self, n: u64) -> &Poly {
        &self.record(n).residue
    }
}

pub fn critical_residue_orbit(f: &Poly) -> Result<CriticalOrbit> {
    CriticalOrbit::new(f)
}

/// Which family a polynomial's criterion elements belong to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Parity {
    /// even degree: every element must be a nonsquare
    Even,
    /// odd degree: every element must be a nonzero square
    Odd,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CriterionValue {
    pub n: u64,
    pub element: Elem,
    pub character: i8,
}

/// The adjusted critical products whose characters decide the stability criterion.
///
/// Even `d`:
///   `n = 1`: `(-1)^{d/2} a_d^k v_1`, and `n > 1`: `a_d^k v_n`.
///
/// Odd `d`:
///   `(-1)^{(d-1)/2 + k} (k+1) a_{k+1} a_d^{nk+1} v_n` for `n >= 1`.
///
/// The odd-degree exponent `nk + 1` is what the norm computation yields: the
/// leading coefficient `A` of `f^{(n-1)}` contributes `a_d^{k(n-1)}` and the
/// discriminant constant `C_f` contributes `a_d^{k+1}` modulo squares. It only
/// differs from `a_d^{(n-1)k+1}` by `a_d^k`, which matters when `k` is odd.
#[derive(Clone, Debug)]
pub struct OrbitSets {
    orbit: CriticalOrbit,
    degree: usize,
    parity: Parity,
    lead_power_k: Elem,
    odd_constant: Elem,
    span: u64,
}

impl OrbitSets {
    pub fn new(f: &Poly) -> Result<Self> {
        let degree = match f.degree() {
            Some(d) if d >= 2 => d,
            other => return Err(Error::WrongDegree(format!("need degree >= 2, got {other:?}"))),
        };
        let orbit = CriticalOrbit::new(f)?;
        let field = f.field();
        let k = orbit.critical_degree();
        let ad = f.leading();
        let parity = if degree % 2 == 0 { Parity::Even } else { Parity::Odd };
        let lead_power_k = field.pow(ad, k as u64);
        let mut odd_constant = field.mul(field.from_i64(k as i64 + 1), f.coeff(k + 1));
        if ((degree - 1) / 2 + k) % 2 == 1 {
            odd_constant = field.neg(odd_constant);
        }
        // Characters repeat with the residue cycle, except that a_d^{nk+1} flips
        // with the parity of n when k is odd and a_d is a nonsquare.
        let mut period = orbit.cycle_length() as u64;
        if parity == Parity::Odd
            && k % 2 == 1
            && field.quadratic_character(ad) == -1
            && period % 2 == 1
        {
            period *= 2;
        }
        // n = 1 is special for even degree, so the checked range always starts
        // the periodic part at n >= 2.
        let span = orbit.tail_length().max(1) as u64 + period;
        Ok(OrbitSets { orbit, degree, parity, lead_power_k, odd_constant, span })
    }

    pub fn orbit(&self) -> &CriticalOrbit {
        &self.orbit
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }

    fn field(&self) -> &Field {
        self.orbit.polynomial().field()
    }

    /// Character every element must have: -1 for even degree, +1 for odd.
    pub fn required_character(&self) -> i8 {
        match self.parity {
            Parity::Even => -1,
            Parity::Odd => 1,
        }
    }

    /// Number of leading indices whose characters determine those of all `n`.
    pub fn span(&self) -> u64 {
        self.span
    }

    /// The criterion element for index `n >= 1`.
    pub fn element(&self, n: u64) -> Elem {
        let field = self.field();
        let v = self.orbit.value_at(n);
        match self.parity {
            Parity::Even => {
                let e = field.mul(self.lead_power_k, v);
                if n == 1 && (self.degree / 2) % 2 == 1 {
                    field.neg(e)
                } else {
                    e
                }
            }
            Parity::Odd => {
                let k = self.orbit.critical_degree() as u128;
                let m = (field.order() - 1) as u128;
                let exp = ((n as u128 % m) * k + 1) % m;
                let lead = field.pow(self.orbit.polynomial().leading(), exp as u64);
                field.mul(field.mul(self.odd_constant, lead), v)
            }
        }
    }

    pub fn value(&self, n: u64) -> CriterionValue {
        let element = self.element(n);
        CriterionValue { n, element, character: self.field().quadratic_character(element) }
    }

    /// Values for `n = 1 ..= span`.
    pub fn values(&self) -> Vec<CriterionValue> {
        (1..=self.span).map(|n| self.value(n)).collect()
    }
}

pub fn orbit_sets(f: &Poly) -> Result<OrbitSets> {
    OrbitSets::new(f)
}
