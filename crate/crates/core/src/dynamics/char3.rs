use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::factor::is_irreducible;
use crate::poly::Poly;

fn require_char3_cubic(f: &Poly) -> Result<()> {
    let p = f.field().characteristic();
    if p != 3 {
        return Err(Error::WrongCharacteristic { expected: 3, found: p });
    }
    if f.degree() != Some(3) {
        return Err(Error::WrongDegree(format!("expected a cubic, got degree {:?}", f.degree())));
    }
    Ok(())
}

/// Irreducibility of a cubic over a field of characteristic 3 via the trace criteria.
///
/// After normalizing to `X^3 - a2 X^2 - a1 X - a0`:
///
/// * `a2 = 0`: irreducible iff `a1 = b^2` and `Tr(a0 / b^3) != 0`
/// * `a2 != 0`: with `D = a2^2 a1^2 + a1^3 - a0 a2^3`, irreducible iff
///   `D != 0`, `a2^4 / D = b^2` and `Tr(1 / (a2 b)) != 0`
///
/// where `Tr` is the absolute trace to `F_3`.
pub fn cubic_char3_irreducible(f: &Poly) -> Result<bool> {
    require_char3_cubic(f)?;
    let f = f.monic()?;
    let field = f.field();
    let f3 = field.prime_field();
    let a2 = field.neg(f.coeff(2));
    let a1 = field.neg(f.coeff(1));
    let a0 = field.neg(f.coeff(0));
    let nonzero_trace = |x| -> Result<bool> { Ok(!field.trace(&f3, x)?.is_zero()) };

    if a2.is_zero() {
        if a1.is_zero() || a0.is_zero() {
            return Ok(false);
        }
        let b = match field.sqrt(a1) {
            Some(b) => b,
            // X^3 - a1 X is then injective, so X^3 - a1 X = a0 has a solution.
            None => return Ok(false),
        };
        let b3 = field.mul(b, field.square(b));
        return nonzero_trace(field.div(a0, b3)?);
    }

    let a2_sq = field.square(a2);
    let a2_cu = field.mul(a2_sq, a2);
    let denom = field.sub(
        field.add(field.mul(a2_sq, field.square(a1)), field.mul(a1, field.square(a1))),
        field.mul(a0, a2_cu),
    );
    if denom.is_zero() {
        return Ok(false);
    }
    let b = match field.sqrt(field.div(field.square(a2_sq), denom)?) {
        Some(b) => b,
        None => return Ok(false),
    };
    nonzero_trace(field.inv(field.mul(a2, b))?)
}

/// Which of `f, f^{(2)}, f^{(3)}` are reducible.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CubicIterateCheck {
    pub reducible_at: BTreeSet<u32>,
}

impl CubicIterateCheck {
    /// True when at least one of the three iterates is reducible.
    pub fn holds(&self) -> bool {
        !self.reducible_at.is_empty()
    }
}

/// Tests `f`, `f^{(2)}` and `f^{(3)}` directly for `f = a3 X^3 - a1 X - a0` in characteristic 3.
pub fn cubic_char3_theorem_check(f: &Poly) -> Result<CubicIterateCheck> {
    require_char3_cubic(f)?;
    if !f.coeff(2).is_zero() {
        return Err(Error::WrongShape("X^2 coefficient must be zero".into()));
    }
    let mut reducible_at = BTreeSet::new();
    let mut it = f.clone();
    for n in 1..=3 {
        if !is_irreducible(&it)? {
            reducible_at.insert(n);
        }
        if n < 3 {
            it = f.compose(&it)?;
        }
    }
    Ok(CubicIterateCheck { reducible_at })
}
