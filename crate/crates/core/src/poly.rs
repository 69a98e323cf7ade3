//! Dense univariate polynomials over a [`Field`].

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::field::{Elem, Field};

/// Degree cap for explicit composition. Past this, use [`Poly::compose_mod`].
pub const DEFAULT_DEGREE_CAP: usize = 4096;

/// A polynomial with coefficients `coeffs[i]` of `X^i`, trailing zeros trimmed.
///
/// The zero polynomial has no coefficients and degree `None`.
#[derive(Clone, PartialEq, Eq)]
pub struct Poly {
    field: Field,
    coeffs: Vec<Elem>,
}

/// Discriminant of a polynomial, with a flag for `f' = 0`.
///
/// An inseparable polynomial (derivative identically zero) has a repeated root,
/// so its discriminant is zero, but the resultant formula does not apply to it.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Discriminant {
    pub value: Elem,
    pub inseparable: bool,
}

fn trim(mut coeffs: Vec<Elem>) -> Vec<Elem> {
    while coeffs.last().is_some_and(|c| c.is_zero()) {
        coeffs.pop();
    }
    coeffs
}

impl Poly {
    pub fn new(field: &Field, coeffs: Vec<Elem>) -> Poly {
        Poly { field: field.clone(), coeffs: trim(coeffs) }
    }

    /// Polynomial with coefficients taken from the prime subfield.
    pub fn from_ints(field: &Field, coeffs: &[i64]) -> Poly {
        Poly::new(field, coeffs.iter().map(|&c| field.from_i64(c)).collect())
    }

    pub fn zero(field: &Field) -> Poly {
        Poly { field: field.clone(), coeffs: Vec::new() }
    }

    pub fn one(field: &Field) -> Poly {
        Poly::constant(field, Elem::ONE)
    }

    /// The identity polynomial `X`.
    pub fn x(field: &Field) -> Poly {
        Poly::monomial(field, Elem::ONE, 1)
    }

    pub fn constant(field: &Field, c: Elem) -> Poly {
        Poly::new(field, vec![c])
    }

    /// `c X^n`.
    pub fn monomial(field: &Field, c: Elem, n: usize) -> Poly {
        let mut coeffs = vec![Elem::ZERO; n + 1];
        coeffs[n] = c;
        Poly::new(field, coeffs)
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn coeffs(&self) -> &[Elem] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of `X^i` (zero past the degree).
    pub fn coeff(&self, i: usize) -> Elem {
        self.coeffs.get(i).copied().unwrap_or(Elem::ZERO)
    }

    /// Leading coefficient; zero for the zero polynomial.
    pub fn leading(&self) -> Elem {
        self.coeffs.last().copied().unwrap_or(Elem::ZERO)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// True for the zero polynomial and nonzero constants.
    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn is_monic(&self) -> bool {
        self.leading() == Elem::ONE
    }

    fn same_field(&self, other: &Poly) -> Result<()> {
        if self.field != other.field {
            return Err(Error::ContextMismatch);
        }
        Ok(())
    }

    fn with(&self, coeffs: Vec<Elem>) -> Poly {
        Poly::new(&self.field, coeffs)
    }

    pub fn add(&self, other: &Poly) -> Result<Poly> {
        self.same_field(other)?;
        let n = self.coeffs.len().max(other.coeffs.len());
        let f = &self.field;
        Ok(self.with((0..n).map(|i| f.add(self.coeff(i), other.coeff(i))).collect()))
    }

    pub fn sub(&self, other: &Poly) -> Result<Poly> {
        self.same_field(other)?;
        let n = self.coeffs.len().max(other.coeffs.len());
        let f = &self.field;
        Ok(self.with((0..n).map(|i| f.sub(self.coeff(i), other.coeff(i))).collect()))
    }

    pub fn mul(&self, other: &Poly) -> Result<Poly> {
        self.same_field(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Poly::zero(&self.field));
        }
        let f = &self.field;
        let mut out = vec![Elem::ZERO; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = f.add(out[i + j], f.mul(a, b));
            }
        }
        Ok(self.with(out))
    }

    pub fn scale(&self, c: Elem) -> Poly {
        let f = &self.field;
        self.with(self.coeffs.iter().map(|&a| f.mul(a, c)).collect())
    }

    /// Divides by the leading coefficient.
    pub fn monic(&self) -> Result<Poly> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        Ok(self.scale(self.field.inv(self.leading())?))
    }

    /// Quotient and remainder with `deg r < deg g`.
    pub fn divrem(&self, g: &Poly) -> Result<(Poly, Poly)> {
        self.same_field(g)?;
        if g.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let f = &self.field;
        let dg = g.coeffs.len() - 1;
        if self.coeffs.len() <= dg {
            return Ok((Poly::zero(f), self.clone()));
        }
        let inv_lc = f.inv(g.leading())?;
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Elem::ZERO; rem.len() - dg];
        for i in (dg..rem.len()).rev() {
            let c = f.mul(rem[i], inv_lc);
            if c.is_zero() {
                continue;
            }
            quot[i - dg] = c;
            for (j, &gj) in g.coeffs.iter().enumerate() {
                rem[i - dg + j] = f.sub(rem[i - dg + j], f.mul(c, gj));
            }
        }
        rem.truncate(dg);
        Ok((self.with(quot), self.with(rem)))
    }

    pub fn rem(&self, g: &Poly) -> Result<Poly> {
        Ok(self.divrem(g)?.1)
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Poly) -> Result<Poly> {
        self.same_field(other)?;
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b)?;
            a = b;
            b = r;
        }
        if a.is_zero() {
            Ok(a)
        } else {
            a.monic()
        }
    }

    /// Formal derivative. Terms `c X^i` with `p | i` vanish.
    pub fn derivative(&self) -> Poly {
        let f = &self.field;
        self.with(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, &c)| f.mul(f.from_i64(i as i64), c))
                .collect(),
        )
    }

    /// Horner evaluation at an element of the coefficient field.
    pub fn evaluate(&self, a: Elem) -> Elem {
        let f = &self.field;
        self.coeffs.iter().rev().fold(Elem::ZERO, |acc, &c| f.add(f.mul(acc, a), c))
    }

    /// Evaluation at an element of an extension in the coefficient field's tower.
    pub fn evaluate_in(&self, ext: &Field, a: Elem) -> Result<Elem> {
        if !ext.tower_contains(&self.field) {
            return Err(Error::NotASubfield(self.field.spec(), ext.spec()));
        }
        Ok(self.coeffs.iter().rev().fold(Elem::ZERO, |acc, &c| ext.add(ext.mul(acc, a), c)))
    }

    /// The same polynomial with coefficients viewed in an extension field.
    pub fn embed_into(&self, ext: &Field) -> Result<Poly> {
        if !ext.tower_contains(&self.field) {
            return Err(Error::NotASubfield(self.field.spec(), ext.spec()));
        }
        Ok(Poly::new(ext, self.coeffs.clone()))
    }

    /// `f(g(X))` under [`DEFAULT_DEGREE_CAP`].
    pub fn compose(&self, g: &Poly) -> Result<Poly> {
        self.compose_capped(g, DEFAULT_DEGREE_CAP)
    }

    /// `f(g(X))`, refusing results of degree above `cap`.
    pub fn compose_capped(&self, g: &Poly, cap: usize) -> Result<Poly> {
        self.same_field(g)?;
        let degree = self.degree().unwrap_or(0) as u128 * g.degree().unwrap_or(0) as u128;
        if degree > cap as u128 {
            return Err(Error::DegreeCapExceeded { degree, cap });
        }
        let mut acc = Poly::zero(&self.field);
        for &c in self.coeffs.iter().rev() {
            acc = acc.mul(g)?.add(&Poly::constant(&self.field, c))?;
        }
        Ok(acc)
    }

    /// `f(g(X)) mod h`, by Horner's rule in `F[X]/(h)`.
    pub fn compose_mod(&self, g: &Poly, h: &Poly) -> Result<Poly> {
        self.same_field(g)?;
        self.same_field(h)?;
        if h.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let g = g.rem(h)?;
        let mut acc = Poly::zero(&self.field);
        for &c in self.coeffs.iter().rev() {
            acc = acc.mul(&g)?.rem(h)?.add(&Poly::constant(&self.field, c))?;
        }
        acc.rem(h)
    }

    /// `self^e mod h`.
    pub fn powmod(&self, mut e: u64, h: &Poly) -> Result<Poly> {
        self.same_field(h)?;
        let mut base = self.rem(h)?;
        let mut acc = Poly::one(&self.field).rem(h)?;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base)?.rem(h)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base)?.rem(h)?;
            }
        }
        Ok(acc)
    }

    /// Resultant by the Euclidean remainder sequence.
    ///
    /// For a constant argument `Res(f, c) = c^deg f` and `Res(c, g) = c^deg g`.
    pub fn resultant(&self, g: &Poly) -> Result<Elem> {
        self.same_field(g)?;
        if self.is_zero() || g.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let f = &self.field;
        let mut a = self.clone();
        let mut b = g.clone();
        let mut acc = Elem::ONE;
        loop {
            let da = a.coeffs.len() - 1;
            let db = b.coeffs.len() - 1;
            if db == 0 {
                return Ok(f.mul(acc, f.pow(b.leading(), da as u64)));
            }
            if da == 0 {
                return Ok(f.mul(acc, f.pow(a.leading(), db as u64)));
            }
            if da < db {
                if da * db % 2 == 1 {
                    acc = f.neg(acc);
                }
                std::mem::swap(&mut a, &mut b);
                continue;
            }
            // Res(a, b) = (-1)^{da db} lc(b)^{da - dr} Res(b, a mod b)
            let r = a.rem(&b)?;
            if r.is_zero() {
                return Ok(Elem::ZERO);
            }
            let dr = r.coeffs.len() - 1;
            if da * db % 2 == 1 {
                acc = f.neg(acc);
            }
            acc = f.mul(acc, f.pow(b.leading(), (da - dr) as u64));
            a = b;
            b = r;
        }
    }

    /// `Disc(f) = (-1)^{d(d-1)/2} a_d^{d-k-2} Res(f, f')` with `k = deg f'`.
    pub fn discriminant(&self) -> Result<Discriminant> {
        let d = match self.degree() {
            Some(d) if d >= 2 => d,
            other => {
                return Err(Error::WrongDegree(format!(
                    "discriminant needs degree >= 2, got {other:?}"
                )))
            }
        };
        let fp = self.derivative();
        let k = match fp.degree() {
            None => return Ok(Discriminant { value: Elem::ZERO, inseparable: true }),
            Some(k) => k,
        };
        let f = &self.field;
        let mut c = f.pow_signed(self.leading(), d as i64 - k as i64 - 2)?;
        if (d * (d - 1) / 2) % 2 == 1 {
            c = f.neg(c);
        }
        let value = f.mul(c, self.resultant(&fp)?);
        Ok(Discriminant { value, inseparable: false })
    }

    /// `X^{deg g} g(1/X)`: the coefficient list reversed.
    pub fn reciprocal(&self) -> Result<Poly> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        Ok(self.with(self.coeffs.iter().rev().copied().collect()))
    }

    /// `f(X + c)`.
    pub fn shift(&self, c: Elem) -> Poly {
        let lin = Poly::new(&self.field, vec![c, Elem::ONE]);
        self.compose_capped(&lin, usize::MAX).expect("shift preserves degree")
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        Poly::add(self, rhs).expect("polynomials over different fields")
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        Poly::sub(self, rhs).expect("polynomials over different fields")
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        Poly::mul(self, rhs).expect("polynomials over different fields")
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        let f = &self.field;
        self.with(self.coeffs.iter().map(|&c| f.neg(c)).collect())
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return out.write_str("0");
        }
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                out.write_str(" + ")?;
            }
            first = false;
            let cs = self.field.render(c);
            match (i, c == Elem::ONE) {
                (0, _) => out.write_str(&cs)?,
                (1, true) => out.write_str("X")?,
                (1, false) => write!(out, "{cs}*X")?,
                (_, true) => write!(out, "X^{i}")?,
                (_, false) => write!(out, "{cs}*X^{i}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(out, "Poly({} over {})", self, self.field.spec())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f3() -> Field {
        Field::prime(3).unwrap()
    }

    fn f5() -> Field {
        Field::prime(5).unwrap()
    }

    #[test]
    fn gcd_and_divrem() {
        let f5 = f5();
        let a = Poly::from_ints(&f5, &[-1, 0, 1]);
        let b = Poly::from_ints(&f5, &[-1, 1]);
        assert_eq!(a.gcd(&b).unwrap(), b);

        let f = Poly::from_ints(&f5, &[1, 1, 0, 1]);
        let g = Poly::from_ints(&f5, &[1, 0, 3]);
        let (q, r) = f.divrem(&g).unwrap();
        assert_eq!(q, Poly::from_ints(&f5, &[0, 2]));
        assert_eq!(r, Poly::from_ints(&f5, &[1, 4]));
        assert_eq!(&(&q * &g) + &r, f);
        assert!(f.mul(&Poly::zero(&f5)).unwrap().is_zero());
        assert_eq!(f.divrem(&Poly::zero(&f5)), Err(Error::DivisionByZero));
    }

    #[test]
    fn derivatives_in_characteristic_three() {
        let f3 = f3();
        assert_eq!(Poly::from_ints(&f3, &[1, 2, 0, 1]).derivative(), Poly::from_ints(&f3, &[2]));
        assert_eq!(Poly::from_ints(&f3, &[1, 0, 1]).derivative(), Poly::from_ints(&f3, &[0, 2]));
        assert_eq!(Poly::from_ints(&f3, &[1, 0, 1, 1]).derivative(), Poly::from_ints(&f3, &[0, 2]));
    }

    #[test]
    fn evaluation() {
        let f3 = f3();
        let f9 = Field::extension(&f3, 2, None).unwrap();
        let f = Poly::from_ints(&f3, &[1, 0, 1]);
        assert_eq!(f.evaluate(Elem::ZERO), Elem::ONE);
        assert_eq!(f.evaluate(f3.from_i64(2)), f3.from_i64(2));
        assert_eq!(f.evaluate_in(&f9, f9.generator()), Ok(Elem::ZERO));
        let f5 = f5();
        assert!(f.evaluate_in(&f5, Elem::ONE).is_err());
    }

    #[test]
    fn composition() {
        let f3 = f3();
        let f = Poly::from_ints(&f3, &[1, 0, 1]);
        let x = Poly::x(&f3);
        assert_eq!(f.compose(&f).unwrap(), Poly::from_ints(&f3, &[2, 0, 2, 0, 1]));
        assert_eq!(f.compose(&x).unwrap(), f);
        assert_eq!(x.compose(&f).unwrap(), f);
        assert_eq!(
            f.compose_capped(&f, 3),
            Err(Error::DegreeCapExceeded { degree: 4, cap: 3 })
        );
    }

    #[test]
    fn modular_composition() {
        let f5 = f5();
        let f = Poly::from_ints(&f5, &[1, 1, 0, 1]);
        let h = f.derivative();
        assert_eq!(h, Poly::from_ints(&f5, &[1, 0, 3]));
        assert_eq!(f.compose_mod(&Poly::x(&f5), &h).unwrap(), Poly::from_ints(&f5, &[1, 4]));
        let g = Poly::from_ints(&f5, &[2, 3]);
        assert_eq!(Poly::x(&f5).compose_mod(&g, &h).unwrap(), g);
        assert_eq!(f.compose_mod(&g, &Poly::zero(&f5)), Err(Error::DivisionByZero));
        let full = f.compose(&g).unwrap().rem(&h).unwrap();
        assert_eq!(f.compose_mod(&g, &h).unwrap(), full);
    }

    #[test]
    fn resultant_examples() {
        let f5 = f5();
        let f = Poly::from_ints(&f5, &[1, 0, 1]);
        assert_eq!(f.resultant(&Poly::from_ints(&f5, &[-2, 1])), Ok(Elem::ZERO));
        assert_eq!(f.resultant(&Poly::from_ints(&f5, &[-1, 1])), Ok(f5.from_i64(2)));
        assert_eq!(f.resultant(&Poly::one(&f5)), Ok(Elem::ONE));
        assert_eq!(f.resultant(&Poly::zero(&f5)), Err(Error::ZeroPolynomial));
        // constants on either side
        let c = Poly::constant(&f5, f5.from_i64(3));
        assert_eq!(f.resultant(&c), Ok(f5.from_i64(9)));
        assert_eq!(c.resultant(&f), Ok(f5.from_i64(9)));
    }

    #[test]
    fn discriminant_examples() {
        let f5 = f5();
        let disc = |c: &[i64]| Poly::from_ints(&f5, c).discriminant().unwrap();
        assert_eq!(disc(&[1, 1, 1]).value, f5.from_i64(2));
        assert_eq!(disc(&[1, 1, 0, 1]).value, f5.from_i64(4));
        assert_eq!(disc(&[-1, 0, 1]).value, f5.from_i64(4));
        // X^5 + 1 over F_5 has zero derivative
        let d = disc(&[1, 0, 0, 0, 0, 1]);
        assert!(d.inseparable);
        assert_eq!(d.value, Elem::ZERO);
        assert!(Poly::from_ints(&f5, &[1, 1]).discriminant().is_err());
    }

    #[test]
    fn reciprocals() {
        let f3 = f3();
        let g = Poly::from_ints(&f3, &[1, 0, 2, 1]);
        assert_eq!(g.reciprocal().unwrap(), Poly::from_ints(&f3, &[1, 2, 0, 1]));
        let h = Poly::from_ints(&f3, &[1, 0, 1]);
        assert_eq!(h.reciprocal().unwrap(), h);
        assert_eq!(g.reciprocal().unwrap().reciprocal().unwrap(), g);
        // valuation drops the degree
        let v = Poly::from_ints(&f3, &[0, 1, 1]);
        assert_eq!(v.reciprocal().unwrap().degree(), Some(1));
        assert_eq!(Poly::zero(&f3).reciprocal(), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn display() {
        let f3 = f3();
        assert_eq!(Poly::from_ints(&f3, &[2, 0, 2, 0, 1]).to_string(), "X^4 + 2*X^2 + 2");
        assert_eq!(Poly::zero(&f3).to_string(), "0");
    }
}
