use serde::Serialize;

use super::criterion::iterate;
use super::orbit::CriticalOrbit;
use crate::error::{Error, Result};
use crate::factor::{is_irreducible, roots_in};
use crate::field::{Elem, Field};
use crate::poly::Poly;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ResultantMethod {
    /// Build `f^{(n)}` and take its resultant with `f'`.
    Explicit,
    /// Recover `Res(f^{(n)}, f')` from the residue orbit value `v_n`.
    Orbit,
}

fn derivative_degree(f: &Poly) -> Result<(usize, usize, Poly)> {
    let d = match f.degree() {
        Some(d) if d >= 2 => d,
        _ => return Err(Error::WrongDegree("need degree >= 2".into())),
    };
    let fp = f.derivative();
    match fp.degree() {
        None => Err(Error::ZeroDerivative),
        Some(0) => Err(Error::ConstantDerivative),
        Some(k) => Ok((d, k, fp)),
    }
}

/// `d^n mod m` for `m >= 1`.
fn pow_mod(d: u128, mut n: u64, m: u128) -> u128 {
    let mut acc = 1 % m;
    let mut base = d % m;
    while n > 0 {
        if n & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        n >>= 1;
    }
    acc
}

/// The adjusted resultant whose character the stability criterion constrains:
///
/// * even `d`: `a_d^k Res(f^{(n)}, f')`
/// * odd `d`: `(-1)^{(d-1)/2} a_d^{nk+1} Res(f^{(n)}, f')`
///
/// Both methods compute the same element.
pub fn adjusted_resultant(f: &Poly, n: u64, method: ResultantMethod, cap: usize) -> Result<Elem> {
    let (d, k, fp) = derivative_degree(f)?;
    if n == 0 {
        return Err(Error::PreconditionViolated("iterate index must be >= 1".into()));
    }
    let field = f.field();
    let m = (field.order() - 1) as u128;
    let res = match method {
        ResultantMethod::Explicit => {
            let n32 = u32::try_from(n).map_err(|_| Error::DegreeCapExceeded {
                degree: u128::MAX,
                cap,
            })?;
            iterate(f, n32, cap)?.resultant(&fp)?
        }
        ResultantMethod::Orbit => {
            // Res(F, G) = (-1)^{deg F deg G} lc(G)^{deg F} prod_{G(g)=0} F(g), deg F = d^n.
            let v = CriticalOrbit::new(f)?.value_at(n);
            let e = pow_mod(d as u128, n, m) as u64;
            let mut r = field.mul(field.pow(fp.leading(), e), v);
            if d % 2 == 1 && k % 2 == 1 {
                r = field.neg(r);
            }
            r
        }
    };
    let ad = f.leading();
    if d % 2 == 0 {
        Ok(field.mul(field.pow(ad, k as u64), res))
    } else {
        let e = ((n as u128 % m) * k as u128 + 1) % m;
        let mut r = field.mul(field.pow(ad, e as u64), res);
        if (d - 1) / 2 % 2 == 1 {
            r = field.neg(r);
        }
        Ok(r)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NormIdentity {
    /// `prod Disc(f - alpha)` over the roots `alpha` of `f^{(n-1)}`.
    pub lhs: Elem,
    /// `A^{-k} C_f^{d^{n-1}} Res(f^{(n)}, f')`, `A` the leading coefficient of `f^{(n-1)}`.
    pub rhs: Elem,
    pub holds: bool,
}

/// `C_f` with `Disc(f) = C_f Res(f, f')`: `(-1)^{d(d-1)/2} a_d^{d-k-2}`.
fn disc_constant(field: &Field, f: &Poly, d: usize, k: usize) -> Result<Elem> {
    let c = field.pow_signed(f.leading(), d as i64 - k as i64 - 2)?;
    Ok(if d * (d - 1) / 2 % 2 == 1 { field.neg(c) } else { c })
}

/// Evaluates both sides of the norm identity that links the discriminants of
/// `f - alpha` to the resultant of the next iterate with `f'`.
///
/// The roots `alpha` live in the extension defined by `f^{(n-1)}` itself, so
/// that iterate must be irreducible.
pub fn norm_identity_check(f: &Poly, n: u32, cap: usize) -> Result<NormIdentity> {
    let (d, k, fp) = derivative_degree(f)?;
    if n < 2 {
        return Err(Error::PreconditionViolated("norm identity needs n >= 2".into()));
    }
    let full = iterate(f, n, cap)?;
    let prev = iterate(f, n - 1, cap)?;
    if !is_irreducible(&prev)? {
        return Err(Error::ReducibleIterate(n - 1));
    }
    let field = f.field();
    let big_d = prev.degree().unwrap();
    let ext = Field::extension(field, big_d as u32, Some(&prev.monic()?))?;

    let f_ext = f.embed_into(&ext)?;
    let mut lhs = ext.one();
    let alphas = roots_in(&prev, &ext)?;
    debug_assert_eq!(alphas.len(), big_d);
    for alpha in alphas {
        let shifted = f_ext.sub(&Poly::constant(&ext, alpha))?;
        lhs = ext.mul(lhs, shifted.discriminant()?.value);
    }
    let lhs = ext.project(field, lhs)?;

    let a_inv_k = field.pow_signed(prev.leading(), -(k as i64))?;
    let c_f = field.pow(disc_constant(field, f, d, k)?, big_d as u64);
    let rhs = field.mul(field.mul(a_inv_k, c_f), full.resultant(&fp)?);
    Ok(NormIdentity { lhs, rhs, holds: lhs == rhs })
}
