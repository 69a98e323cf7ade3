//! Brute-force reference computations.
//!
//! Nothing here shares a code path with the fast routines it is used to check:
//! resultants come from a Sylvester determinant or from explicit roots in a
//! splitting field, irreducibility from trial division.

use crate::error::{Error, Result};
use crate::factor;
use crate::field::{Elem, Field};
use crate::poly::Poly;

/// All monic polynomials of the given degree, in index order of `(c_0, ..., c_{d-1})`
/// with `c_0` varying fastest.
pub fn monic_polys(field: &Field, degree: usize) -> impl Iterator<Item = Poly> + '_ {
    let q = field.order() as u128;
    let count = q.pow(degree as u32);
    (0..count).map(move |mut idx| {
        let mut coeffs: Vec<Elem> = (0..degree)
            .map(|_| {
                let c = field.elem((idx % q) as u64).unwrap();
                idx /= q;
                c
            })
            .collect();
        coeffs.push(Elem::ONE);
        Poly::new(field, coeffs)
    })
}

/// Determinant of the Sylvester matrix of `f` and `g`.
pub fn sylvester_resultant(f: &Poly, g: &Poly) -> Result<Elem> {
    if f.field() != g.field() {
        return Err(Error::ContextMismatch);
    }
    let (m, n) = match (f.degree(), g.degree()) {
        (Some(m), Some(n)) => (m, n),
        _ => return Err(Error::ZeroPolynomial),
    };
    let field = f.field();
    let size = m + n;
    if size == 0 {
        return Ok(Elem::ONE);
    }
    let mut rows = vec![vec![Elem::ZERO; size]; size];
    for i in 0..n {
        for (j, &c) in f.coeffs().iter().rev().enumerate() {
            rows[i][i + j] = c;
        }
    }
    for i in 0..m {
        for (j, &c) in g.coeffs().iter().rev().enumerate() {
            rows[n + i][i + j] = c;
        }
    }
    determinant(field, rows)
}

/// Gaussian elimination.
pub fn determinant(field: &Field, mut rows: Vec<Vec<Elem>>) -> Result<Elem> {
    let size = rows.len();
    let mut det = Elem::ONE;
    for col in 0..size {
        let pivot = match (col..size).find(|&r| !rows[r][col].is_zero()) {
            Some(r) => r,
            None => return Ok(Elem::ZERO),
        };
        if pivot != col {
            rows.swap(pivot, col);
            det = field.neg(det);
        }
        let pv = rows[col][col];
        det = field.mul(det, pv);
        let inv = field.inv(pv)?;
        for r in (col + 1)..size {
            let factor = field.mul(rows[r][col], inv);
            if factor.is_zero() {
                continue;
            }
            for c in col..size {
                let t = field.mul(factor, rows[col][c]);
                rows[r][c] = field.sub(rows[r][c], t);
            }
        }
    }
    Ok(det)
}

/// Irreducibility by trial division with every monic polynomial of degree `<= deg f / 2`.
pub fn irreducible_by_trial_division(f: &Poly) -> Result<bool> {
    let d = match f.degree() {
        Some(d) if d >= 1 => d,
        _ => return Err(Error::ConstantPolynomial),
    };
    for e in 1..=d / 2 {
        for g in monic_polys(f.field(), e) {
            if f.rem(&g)?.is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Complete factorization into monic irreducibles with multiplicities, by trial division.
/// The leading coefficient is dropped.
pub fn trial_factorization(f: &Poly) -> Result<Vec<(Poly, usize)>> {
    if f.degree().unwrap_or(0) == 0 {
        return Err(Error::ConstantPolynomial);
    }
    let mut rest = f.monic()?;
    let mut out = Vec::new();
    let mut e = 1;
    while rest.degree().unwrap() >= 1 {
        if 2 * e > rest.degree().unwrap() {
            out.push((rest.clone(), 1));
            break;
        }
        for g in monic_polys(f.field(), e) {
            let mut mult = 0;
            loop {
                let (q, r) = rest.divrem(&g)?;
                if !r.is_zero() {
                    break;
                }
                rest = q;
                mult += 1;
            }
            if mult > 0 {
                out.push((g, mult));
            }
        }
        e += 1;
    }
    Ok(out)
}

fn gcd_u(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd_u(b, a % b)
    }
}

/// Smallest canonical extension of `f`'s field containing all roots of `f`.
pub fn splitting_field(f: &Poly) -> Result<Field> {
    let (rad, _) = factor::squarefree_radical(f)?;
    let degree = factor::distinct_degree_parts(&rad)?
        .iter()
        .fold(1, |acc, (i, _)| acc / gcd_u(acc, *i) * i);
    Field::extension(f.field(), degree as u32, None)
}

/// `Res(f, g) = (-1)^{de} b_e^d prod f(beta_j)` over the roots of `g` in a splitting field.
pub fn root_product_resultant(f: &Poly, g: &Poly) -> Result<Elem> {
    if f.field() != g.field() {
        return Err(Error::ContextMismatch);
    }
    let field = f.field();
    let (d, e) = match (f.degree(), g.degree()) {
        (Some(d), Some(e)) => (d, e),
        _ => return Err(Error::ZeroPolynomial),
    };
    if e == 0 {
        return Ok(field.pow(g.leading(), d as u64));
    }
    let ext = splitting_field(g)?;
    let roots = factor::roots_in(g, &ext)?;
    debug_assert_eq!(roots.len(), e);
    let mut acc = ext.pow(g.leading(), d as u64);
    if d * e % 2 == 1 {
        acc = ext.neg(acc);
    }
    for beta in roots {
        acc = ext.mul(acc, f.evaluate_in(&ext, beta)?);
    }
    ext.project(field, acc)
}

/// `a_d^{2d-2} prod_{i<j} (alpha_i - alpha_j)^2` over the roots of `f` in a splitting field.
pub fn root_product_discriminant(f: &Poly) -> Result<Elem> {
    let d = match f.degree() {
        Some(d) if d >= 2 => d,
        _ => return Err(Error::WrongDegree("discriminant needs degree >= 2".into())),
    };
    let ext = splitting_field(f)?;
    let roots = factor::roots_in(f, &ext)?;
    debug_assert_eq!(roots.len(), d);
    let mut acc = ext.pow(f.leading(), 2 * d as u64 - 2);
    for i in 0..d {
        for j in (i + 1)..d {
            acc = ext.mul(acc, ext.square(ext.sub(roots[i], roots[j])));
        }
    }
    ext.project(f.field(), acc)
}

/// `prod_i f^{(n)}(gamma_i)` over the roots of `f'` (with multiplicity), each
/// iterate evaluated by applying `f` to `gamma_i` `n` times.
pub fn critical_value_product(f: &Poly, n: u64) -> Result<Elem> {
    let fp = f.derivative();
    if fp.is_zero() {
        return Err(Error::ZeroDerivative);
    }
    if fp.degree() == Some(0) {
        return Err(Error::ConstantDerivative);
    }
    let ext = splitting_field(&fp)?;
    let mut acc = Elem::ONE;
    for gamma in factor::roots_in(&fp, &ext)? {
        let mut x = gamma;
        for _ in 0..n {
            x = f.evaluate_in(&ext, x)?;
        }
        acc = ext.mul(acc, x);
    }
    ext.project(f.field(), acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sylvester_matches_hand_values() {
        let f5 = Field::prime(5).unwrap();
        let f = Poly::from_ints(&f5, &[1, 0, 1]);
        assert_eq!(sylvester_resultant(&f, &Poly::from_ints(&f5, &[-2, 1])), Ok(Elem::ZERO));
        assert_eq!(
            sylvester_resultant(&f, &Poly::from_ints(&f5, &[-1, 1])),
            Ok(f5.from_i64(2))
        );
        assert_eq!(sylvester_resultant(&f, &Poly::one(&f5)), Ok(Elem::ONE));
    }

    #[test]
    fn trial_division_examples() {
        let f3 = Field::prime(3).unwrap();
        // f^{(2)} for X^2 + 1
        assert!(irreducible_by_trial_division(&Poly::from_ints(&f3, &[2, 0, 2, 0, 1])).unwrap());
        let fac = trial_factorization(&Poly::from_ints(&f3, &[1, 0, 2, 0, 1])).unwrap();
        assert_eq!(fac, vec![(Poly::from_ints(&f3, &[1, 0, 1]), 2)]);
    }

    #[test]
    fn splitting_field_degree() {
        let f3 = Field::prime(3).unwrap();
        // (X^2+1)(X^3+2X+1): lcm(2,3) = 6
        let f = &Poly::from_ints(&f3, &[1, 0, 1]) * &Poly::from_ints(&f3, &[1, 2, 0, 1]);
        assert_eq!(splitting_field(&f).unwrap().order(), 729);
        assert_eq!(factor::roots_in(&f, &splitting_field(&f).unwrap()).unwrap().len(), 5);
    }

    #[test]
    fn root_product_discriminant_quadratic() {
        let f5 = Field::prime(5).unwrap();
        let f = Poly::from_ints(&f5, &[1, 1, 1]);
        assert_eq!(root_product_discriminant(&f), Ok(f5.from_i64(2)));
    }
}
