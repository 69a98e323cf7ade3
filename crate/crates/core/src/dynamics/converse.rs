use super::orbit::{orbit_sets, CriterionValue};
use crate::error::{Error, Result};
use crate::factor::is_irreducible;
use crate::field::{Elem, Field};
use crate::poly::Poly;

/// A polynomial that passes the odd-degree criterion for every `n` and is
/// nevertheless reducible.
#[derive(Clone, Debug)]
pub struct ConverseCertificate {
    pub f: Poly,
    pub d: usize,
    pub a0: Elem,
    /// `e d = 1 (mod q - 1)`
    pub e: u64,
    /// `a0 - a0^e`
    pub root: Elem,
    pub root_verified: bool,
    pub s2_values: Vec<CriterionValue>,
    pub s2_all_squares: bool,
    pub f_reducible: bool,
}

impl ConverseCertificate {
    pub fn is_valid(&self) -> bool {
        self.root_verified && self.s2_all_squares && self.f_reducible
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn inverse_mod(a: u64, m: u64) -> Option<u64> {
    let (mut r0, mut r1) = (m as i128, (a % m) as i128);
    let (mut s0, mut s1) = (0i128, 1i128);
    while r1 != 0 {
        let t = r0 / r1;
        (r0, r1) = (r1, r0 - t * r1);
        (s0, s1) = (s1, s0 - t * s1);
    }
    (r0 == 1).then(|| s0.rem_euclid(m as i128) as u64)
}

/// Builds `f = (X - a0)^d + a0` over a field of even absolute degree, with
/// `gcd(d, q - 1) = gcd(d, p) = 1` and `a0` a nonzero square.
pub fn converse_counterexample(field: &Field, d: usize, a0: Elem) -> Result<ConverseCertificate> {
    let q = field.order();
    let p = field.characteristic();
    let fail = |msg: String| Err(Error::PreconditionViolated(msg));
    if d < 2 {
        return fail(format!("degree {d} must be at least 2"));
    }
    if gcd(d as u64, q - 1) != 1 {
        return fail(format!("gcd({d}, {}) != 1", q - 1));
    }
    if (d as u64).is_multiple_of(p) {
        return fail(format!("degree {d} is divisible by the characteristic {p}"));
    }
    if !field.absolute_degree().is_multiple_of(2) {
        return fail(format!("field {} has odd degree over its prime field", field.spec()));
    }
    if field.quadratic_character(a0) != 1 {
        return fail(format!("a0 = {} is not a nonzero square", field.render(a0)));
    }

    let lin = Poly::new(field, vec![field.neg(a0), Elem::ONE]);
    let mut f = Poly::one(field);
    for _ in 0..d {
        f = f.mul(&lin)?;
    }
    let f = f.add(&Poly::constant(field, a0))?;
    let e = inverse_mod(d as u64, q - 1).expect("d is invertible modulo q - 1");
    let root = field.sub(a0, field.pow(a0, e));
    let root_verified = f.evaluate(root).is_zero();
    let s2_values = orbit_sets(&f)?.values();
    let s2_all_squares = s2_values.iter().all(|v| v.character == 1);
    let f_reducible = !is_irreducible(&f)?;
    Ok(ConverseCertificate {
        f,
        d,
        a0,
        e,
        root,
        root_verified,
        s2_values,
        s2_all_squares,
        f_reducible,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f9() -> Field {
        Field::extension(&Field::prime(3).unwrap(), 2, None).unwrap()
    }

    #[test]
    fn f9_degree5() {
        let f9 = f9();
        let cert = converse_counterexample(&f9, 5, Elem::ONE).unwrap();
        assert_eq!(cert.e, 5);
        assert_eq!(cert.root, Elem::ZERO);
        assert!(cert.is_valid());
        assert!(cert.s2_values.iter().all(|v| v.element == f9.from_i64(2)));
    }

    #[test]
    fn every_square_a0_over_f9_and_f25() {
        let f25 = Field::extension(&Field::prime(5).unwrap(), 2, None).unwrap();
        for (field, d) in [(f9(), 5), (f9(), 7), (f25.clone(), 5), (f25, 7)] {
            if (d as u64).is_multiple_of(field.characteristic()) {
                continue;
            }
            for a0 in field.elements().filter(|&a| field.quadratic_character(a) == 1) {
                let cert = converse_counterexample(&field, d, a0).unwrap();
                assert!(cert.is_valid(), "{} d={d} a0={}", field.spec(), field.render(a0));
            }
        }
    }

    #[test]
    fn hypotheses_are_checked() {
        let f9 = f9();
        let nonsquare = f9.elements().find(|&a| f9.quadratic_character(a) == -1).unwrap();
        assert!(matches!(
            converse_counterexample(&f9, 5, nonsquare),
            Err(Error::PreconditionViolated(_))
        ));
        let f3 = Field::prime(3).unwrap();
        assert!(matches!(
            converse_counterexample(&f3, 5, Elem::ONE),
            Err(Error::PreconditionViolated(_))
        ));
        assert!(matches!(
            converse_counterexample(&f9, 3, Elem::ONE),
            Err(Error::PreconditionViolated(_))
        ));
    }

    #[test]
    fn inverse_mod_small() {
        assert_eq!(inverse_mod(5, 8), Some(5));
        assert_eq!(inverse_mod(7, 24), Some(7));
        assert_eq!(inverse_mod(2, 8), None);
    }
}
