//! Finite fields `F_p`, `F_q = F_p[x]/(m)` and one further layer `F_{q^k}`.
//!
//! Every element of a field is stored as its *canonical index*: the base-`|base|`
//! number whose digits are the indices of its coefficients over the base field,
//! lowest degree first. For a prime field the index is the residue itself.
//!
//! Because a tower step embeds the base field as the constant polynomials, the
//! index of a base element is unchanged by the embedding. Embedding and
//! projection along the tower are therefore identities on indices, and an element
//! of an extension lies in a tower subfield exactly when its index is smaller than
//! the subfield's order.
//!
//! Fields of order at most [`TABLE_LIMIT`] (other than prime fields) carry
//! discrete-log and Zech tables so that every operation is a few lookups. Larger
//! extensions fall back to polynomial arithmetic over the base.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::factor;
use crate::poly::Poly;

/// Extensions up to this order get log/Zech tables.
pub const TABLE_LIMIT: u64 = 1 << 18;

/// Largest supported field order.
pub const MAX_ORDER: u64 = 1 << 62;

/// Largest supported characteristic; products of residues must fit a `u64`.
pub const MAX_CHARACTERISTIC: u64 = u32::MAX as u64;

const NO_LOG: u32 = u32::MAX;

/// An element of some [`Field`], as its canonical index.
///
/// `Elem` carries no reference to its field; operations go through the field.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Elem(u64);

impl Elem {
    pub const ZERO: Elem = Elem(0);
    pub const ONE: Elem = Elem(1);

    pub fn index(self) -> u64 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

struct Tables {
    /// index -> discrete log with respect to the primitive element
    log: Vec<u32>,
    /// discrete log -> index
    exp: Vec<u32>,
    /// zech[n] = log(1 + g^n), or NO_LOG when 1 + g^n = 0
    zech: Vec<u32>,
}

struct Inner {
    p: u64,
    degree: u32,
    abs_degree: u32,
    order: u64,
    depth: u8,
    base: Option<Field>,
    modulus: Vec<Elem>,
    tables: Option<Tables>,
}

/// A finite field of odd characteristic. Cheap to clone and immutable.
#[derive(Clone)]
pub struct Field(Arc<Inner>);

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.p == other.0.p
                && self.0.degree == other.0.degree
                && self.0.modulus == other.0.modulus
                && self.0.base == other.0.base)
    }
}

impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Field({})", self.spec())
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.spec())
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

pub(crate) fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

impl Field {
    /// The prime field `F_p`.
    pub fn prime(p: u64) -> Result<Field> {
        if p == 2 {
            return Err(Error::EvenCharacteristic);
        }
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if p > MAX_CHARACTERISTIC {
            return Err(Error::FieldTooLarge(format!(
                "characteristic {p} exceeds {MAX_CHARACTERISTIC}"
            )));
        }
        Ok(Field(Arc::new(Inner {
            p,
            degree: 1,
            abs_degree: 1,
            order: p,
            depth: 0,
            base: None,
            modulus: Vec::new(),
            tables: None,
        })))
    }

    /// Extension of `base` of the given degree.
    ///
    /// Without an explicit modulus the canonical one is used: the first monic
    /// irreducible polynomial when candidates `c_0 + c_1 X + ... + X^degree` are
    /// scanned by the integer `sum index(c_i) |base|^i` in ascending order.
    /// Degree 1 returns `base` itself.
    pub fn extension(base: &Field, degree: u32, modulus: Option<&Poly>) -> Result<Field> {
        if degree == 0 {
            return Err(Error::DegreeMismatch("extension degree must be at least 1".into()));
        }
        if let Some(m) = modulus {
            if m.field() != base {
                return Err(Error::ContextMismatch);
            }
            if m.degree() != Some(degree as usize) {
                return Err(Error::DegreeMismatch(format!(
                    "modulus has degree {:?}, expected {degree}",
                    m.degree()
                )));
            }
            if m.leading() != Elem::ONE {
                return Err(Error::PreconditionViolated("modulus must be monic".into()));
            }
        }
        if degree == 1 {
            return Ok(base.clone());
        }
        if base.0.depth >= 2 {
            return Err(Error::TowerTooDeep);
        }
        let order = (base.order() as u128).pow(degree);
        if order > MAX_ORDER as u128 {
            return Err(Error::FieldTooLarge(format!(
                "{}^{degree} exceeds {MAX_ORDER}",
                base.order()
            )));
        }
        let modulus = match modulus {
            Some(m) => {
                if !factor::is_irreducible(m)? {
                    return Err(Error::ReducibleModulus);
                }
                m.coeffs().to_vec()
            }
            None => canonical_modulus(base, degree)?,
        };
        let inner = Inner {
            p: base.0.p,
            degree,
            abs_degree: base.0.abs_degree * degree,
            order: order as u64,
            depth: base.0.depth + 1,
            base: Some(base.clone()),
            modulus,
            tables: None,
        };
        let plain = Field(Arc::new(inner));
        if plain.order() > TABLE_LIMIT {
            return Ok(plain);
        }
        let tables = plain.build_tables();
        let mut inner = Arc::try_unwrap(plain.0).ok().expect("freshly built field is unshared");
        inner.tables = Some(tables);
        Ok(Field(Arc::new(inner)))
    }

    fn build_tables(&self) -> Tables {
        let q = self.order();
        let g = self.find_primitive();
        let mut exp = Vec::with_capacity((q - 1) as usize);
        let mut log = vec![NO_LOG; q as usize];
        let mut x = Elem::ONE;
        for i in 0..(q - 1) {
            exp.push(x.0 as u32);
            log[x.0 as usize] = i as u32;
            x = self.generic_mul(x, g);
        }
        let zech = exp
            .iter()
            .map(|&e| {
                let s = self.generic_add(Elem::ONE, Elem(e as u64));
                if s.is_zero() {
                    NO_LOG
                } else {
                    log[s.0 as usize]
                }
            })
            .collect();
        Tables { log, exp, zech }
    }

    fn find_primitive(&self) -> Elem {
        let q = self.order();
        let factors = prime_factors(q - 1);
        (2..q)
            .map(Elem)
            .find(|&g| factors.iter().all(|&l| self.generic_pow(g, (q - 1) / l) != Elem::ONE))
            .expect("multiplicative group of a finite field is cyclic")
    }

    pub fn characteristic(&self) -> u64 {
        self.0.p
    }

    /// Cardinality of the field.
    pub fn order(&self) -> u64 {
        self.0.order
    }

    /// Degree over the immediate base (1 for a prime field).
    pub fn degree(&self) -> u32 {
        self.0.degree
    }

    /// Degree over the prime field.
    pub fn absolute_degree(&self) -> u32 {
        self.0.abs_degree
    }

    /// Number of extension layers above the prime field.
    pub fn depth(&self) -> u8 {
        self.0.depth
    }

    pub fn base(&self) -> Option<&Field> {
        self.0.base.as_ref()
    }

    pub fn is_prime_field(&self) -> bool {
        self.0.base.is_none()
    }

    /// Defining polynomial over the base, if this is an extension.
    pub fn modulus(&self) -> Option<Poly> {
        self.0
            .base
            .as_ref()
            .map(|b| Poly::new(b, self.0.modulus.clone()))
    }

    pub fn prime_field(&self) -> Field {
        let mut f = self.clone();
        while let Some(b) = f.base().cloned() {
            f = b;
        }
        f
    }

    /// True when `sub` is `self` or one of the fields below it in its tower.
    pub fn tower_contains(&self, sub: &Field) -> bool {
        let mut f = Some(self);
        while let Some(cur) = f {
            if cur == sub {
                return true;
            }
            f = cur.base();
        }
        false
    }

    /// `[self : sub]` for a tower subfield.
    pub fn degree_over(&self, sub: &Field) -> Result<u32> {
        if !self.tower_contains(sub) {
            return Err(Error::NotASubfield(sub.spec(), self.spec()));
        }
        Ok(self.absolute_degree() / sub.absolute_degree())
    }

    /// Reproducible textual description.
    ///
    /// `p` for a prime field, `p^s:c0,...,1` for a first extension, and
    /// `(base)^k:[..],...,1` for a second layer.
    pub fn spec(&self) -> String {
        match self.base() {
            None => self.0.p.to_string(),
            Some(b) if b.is_prime_field() => {
                let coeffs: Vec<String> =
                    self.0.modulus.iter().map(|c| c.0.to_string()).collect();
                format!("{}^{}:{}", self.0.p, self.0.degree, coeffs.join(","))
            }
            Some(b) => {
                let coeffs: Vec<String> =
                    self.0.modulus.iter().map(|&c| b.render(c)).collect();
                format!("({})^{}:{}", b.spec(), self.0.degree, coeffs.join(","))
            }
        }
    }

    pub fn zero(&self) -> Elem {
        Elem::ZERO
    }

    pub fn one(&self) -> Elem {
        Elem::ONE
    }

    /// The image of an integer in the prime subfield.
    pub fn from_i64(&self, n: i64) -> Elem {
        Elem(n.rem_euclid(self.0.p as i64) as u64)
    }

    /// Validates a canonical index.
    pub fn elem(&self, index: u64) -> Result<Elem> {
        if index >= self.order() {
            return Err(Error::InvalidElement(index, self.order()));
        }
        Ok(Elem(index))
    }

    /// The adjoined root of the modulus (`x` in `F_p[x]/(m)`).
    pub fn generator(&self) -> Elem {
        match self.base() {
            None => Elem::ONE,
            Some(b) => Elem(b.order()),
        }
    }

    /// All elements in canonical index order.
    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        (0..self.order()).map(Elem)
    }

    /// Coefficients over the immediate base, lowest degree first.
    pub fn coefficients(&self, a: Elem) -> Vec<Elem> {
        match self.base() {
            None => vec![a],
            Some(b) => {
                let qb = b.order();
                let mut v = a.0;
                (0..self.0.degree)
                    .map(|_| {
                        let d = v % qb;
                        v /= qb;
                        Elem(d)
                    })
                    .collect()
            }
        }
    }

    /// Inverse of [`coefficients`](Self::coefficients); missing high coefficients are zero.
    pub fn from_coefficients(&self, coeffs: &[Elem]) -> Result<Elem> {
        let b = match self.base() {
            None => {
                return match coeffs {
                    [] => Ok(Elem::ZERO),
                    [c] => self.elem(c.0),
                    _ => Err(Error::DegreeMismatch("prime field element has one coefficient".into())),
                }
            }
            Some(b) => b,
        };
        if coeffs.len() > self.0.degree as usize {
            return Err(Error::DegreeMismatch(format!(
                "{} coefficients for a degree-{} extension",
                coeffs.len(),
                self.0.degree
            )));
        }
        let qb = b.order();
        let mut v = 0u64;
        for c in coeffs.iter().rev() {
            b.elem(c.0)?;
            v = v * qb + c.0;
        }
        Ok(Elem(v))
    }

    /// Element rendered as an integer (prime field) or a bracketed base-coefficient list.
    pub fn render(&self, a: Elem) -> String {
        match self.base() {
            None => a.0.to_string(),
            Some(b) => {
                let parts: Vec<String> =
                    self.coefficients(a).into_iter().map(|c| b.render(c)).collect();
                format!("[{}]", parts.join(","))
            }
        }
    }

    // ---------------------------------------------------------------------
    // arithmetic

    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        match &self.0.tables {
            _ if self.is_prime_field() => {
                let s = a.0 + b.0;
                Elem(if s >= self.0.p { s - self.0.p } else { s })
            }
            Some(t) => {
                if a.is_zero() {
                    return b;
                }
                if b.is_zero() {
                    return a;
                }
                let m = (self.0.order - 1) as usize;
                let la = t.log[a.0 as usize] as usize;
                let lb = t.log[b.0 as usize] as usize;
                let z = t.zech[(lb + m - la) % m];
                if z == NO_LOG {
                    Elem::ZERO
                } else {
                    Elem(t.exp[(la + z as usize) % m] as u64)
                }
            }
            None => self.generic_add(a, b),
        }
    }

    pub fn neg(&self, a: Elem) -> Elem {
        if a.is_zero() {
            return a;
        }
        match &self.0.tables {
            _ if self.is_prime_field() => Elem(self.0.p - a.0),
            Some(t) => {
                let m = (self.0.order - 1) as usize;
                let la = t.log[a.0 as usize] as usize;
                Elem(t.exp[(la + m / 2) % m] as u64)
            }
            None => {
                let b = self.base().unwrap();
                let c: Vec<Elem> = self.coefficients(a).into_iter().map(|c| b.neg(c)).collect();
                self.encode(&c)
            }
        }
    }

    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        match &self.0.tables {
            _ if self.is_prime_field() => Elem(a.0 * b.0 % self.0.p),
            Some(t) => {
                if a.is_zero() || b.is_zero() {
                    return Elem::ZERO;
                }
                let m = (self.0.order - 1) as usize;
                let l = t.log[a.0 as usize] as usize + t.log[b.0 as usize] as usize;
                Elem(t.exp[l % m] as u64)
            }
            None => self.generic_mul(a, b),
        }
    }

    pub fn square(&self, a: Elem) -> Elem {
        self.mul(a, a)
    }

    pub fn inv(&self, a: Elem) -> Result<Elem> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(match &self.0.tables {
            Some(t) => {
                let m = (self.0.order - 1) as usize;
                let la = t.log[a.0 as usize] as usize;
                Elem(t.exp[(m - la) % m] as u64)
            }
            None => self.pow(a, self.0.order - 2),
        })
    }

    pub fn div(&self, a: Elem, b: Elem) -> Result<Elem> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// `a^e`, with `0^0 = 1`.
    pub fn pow(&self, a: Elem, e: u64) -> Elem {
        if e == 0 {
            return Elem::ONE;
        }
        if a.is_zero() {
            return Elem::ZERO;
        }
        let m = self.0.order - 1;
        match &self.0.tables {
            Some(t) if !self.is_prime_field() => {
                let l = (t.log[a.0 as usize] as u128 * (e % m) as u128) % m as u128;
                Elem(t.exp[l as usize] as u64)
            }
            _ => {
                let e = match e % m {
                    0 => m,
                    r => r,
                };
                self.square_multiply(a, e, |x, y| self.mul(x, y))
            }
        }
    }

    /// `a^e` for a signed exponent; negative powers need `a != 0`.
    pub fn pow_signed(&self, a: Elem, e: i64) -> Result<Elem> {
        if e >= 0 {
            Ok(self.pow(a, e as u64))
        } else {
            Ok(self.pow(self.inv(a)?, e.unsigned_abs()))
        }
    }

    fn square_multiply(&self, a: Elem, mut e: u64, mul: impl Fn(Elem, Elem) -> Elem) -> Elem {
        let mut base = a;
        let mut acc = Elem::ONE;
        while e > 0 {
            if e & 1 == 1 {
                acc = mul(acc, base);
            }
            base = mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// `a ↦ a^p`.
    pub fn frobenius(&self, a: Elem) -> Elem {
        self.pow(a, self.0.p)
    }

    /// +1 for nonzero squares, -1 for nonsquares, 0 for zero.
    pub fn quadratic_character(&self, a: Elem) -> i8 {
        if a.is_zero() {
            return 0;
        }
        match &self.0.tables {
            Some(t) if !self.is_prime_field() => {
                if t.log[a.0 as usize] % 2 == 0 {
                    1
                } else {
                    -1
                }
            }
            _ => {
                if self.pow(a, (self.0.order - 1) / 2) == Elem::ONE {
                    1
                } else {
                    -1
                }
            }
        }
    }

    /// Some square root of `a`, if one exists.
    pub fn sqrt(&self, a: Elem) -> Option<Elem> {
        if a.is_zero() {
            return Some(a);
        }
        if self.quadratic_character(a) != 1 {
            return None;
        }
        if let Some(t) = &self.0.tables {
            return Some(Elem(t.exp[(t.log[a.0 as usize] / 2) as usize] as u64));
        }
        // Tonelli-Shanks
        let q = self.order();
        let mut odd = q - 1;
        let mut s = 0u32;
        while odd.is_multiple_of(2) {
            odd /= 2;
            s += 1;
        }
        let z = self
            .elements()
            .skip(2)
            .find(|&z| self.quadratic_character(z) == -1)
            .expect("odd-order field has nonsquares");
        let mut m = s;
        let mut c = self.pow(z, odd);
        let mut t = self.pow(a, odd);
        let mut r = self.pow(a, odd.div_ceil(2));
        while t != Elem::ONE {
            let mut i = 0;
            let mut t2 = t;
            while t2 != Elem::ONE {
                t2 = self.square(t2);
                i += 1;
            }
            let mut b = c;
            for _ in 0..(m - i - 1) {
                b = self.square(b);
            }
            m = i;
            c = self.square(b);
            t = self.mul(t, c);
            r = self.mul(r, b);
        }
        Some(r)
    }

    // ---------------------------------------------------------------------
    // tower maps

    /// `Tr_{self|sub}(a) = a + a^Q + ... + a^{Q^{m-1}}` with `Q = |sub|`.
    pub fn trace(&self, sub: &Field, a: Elem) -> Result<Elem> {
        let m = self.degree_over(sub)?;
        let mut acc = Elem::ZERO;
        let mut x = a;
        for _ in 0..m {
            acc = self.add(acc, x);
            x = self.pow(x, sub.order());
        }
        debug_assert!(acc.0 < sub.order());
        Ok(acc)
    }

    /// `Nm_{self|sub}(a) = a · a^Q · ... · a^{Q^{m-1}}` with `Q = |sub|`.
    pub fn norm(&self, sub: &Field, a: Elem) -> Result<Elem> {
        let m = self.degree_over(sub)?;
        let mut acc = Elem::ONE;
        let mut x = a;
        for _ in 0..m {
            acc = self.mul(acc, x);
            x = self.pow(x, sub.order());
        }
        debug_assert!(acc.0 < sub.order());
        Ok(acc)
    }

    /// Image of a subfield element in `self`.
    pub fn embed(&self, sub: &Field, a: Elem) -> Result<Elem> {
        if !self.tower_contains(sub) {
            return Err(Error::NotASubfield(sub.spec(), self.spec()));
        }
        sub.elem(a.0)
    }

    /// Preimage in `sub` of an element of `self` that lies in the subfield.
    pub fn project(&self, sub: &Field, a: Elem) -> Result<Elem> {
        if !self.tower_contains(sub) {
            return Err(Error::NotASubfield(sub.spec(), self.spec()));
        }
        if a.0 >= sub.order() {
            return Err(Error::PreconditionViolated(format!(
                "{} does not lie in {}",
                self.render(a),
                sub.spec()
            )));
        }
        Ok(a)
    }

    // ---------------------------------------------------------------------
    // table-free arithmetic over the base

    fn encode(&self, coeffs: &[Elem]) -> Elem {
        let qb = self.base().map_or(self.0.p, |b| b.order());
        Elem(coeffs.iter().rev().fold(0, |v, c| v * qb + c.0))
    }

    fn generic_add(&self, a: Elem, b: Elem) -> Elem {
        let base = match self.base() {
            None => return self.add(a, b),
            Some(base) => base,
        };
        let x = self.coefficients(a);
        let y = self.coefficients(b);
        let s: Vec<Elem> = x.iter().zip(&y).map(|(&u, &v)| base.add(u, v)).collect();
        self.encode(&s)
    }

    fn generic_mul(&self, a: Elem, b: Elem) -> Elem {
        let base = match self.base() {
            None => return self.mul(a, b),
            Some(base) => base,
        };
        let m = self.0.degree as usize;
        let x = self.coefficients(a);
        let y = self.coefficients(b);
        let mut prod = vec![Elem::ZERO; 2 * m - 1];
        for (i, &xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, &yj) in y.iter().enumerate() {
                prod[i + j] = base.add(prod[i + j], base.mul(xi, yj));
            }
        }
        for i in (m..2 * m - 1).rev() {
            let c = prod[i];
            if c.is_zero() {
                continue;
            }
            for (j, &mj) in self.0.modulus[..m].iter().enumerate() {
                prod[i - m + j] = base.sub(prod[i - m + j], base.mul(c, mj));
            }
        }
        self.encode(&prod[..m])
    }

    fn generic_pow(&self, a: Elem, e: u64) -> Elem {
        self.square_multiply(a, e, |x, y| self.generic_mul(x, y))
    }

    /// Wraps an element together with this field.
    pub fn element(&self, value: Elem) -> Result<FieldElement> {
        FieldElement::new(self, value)
    }
}

fn canonical_modulus(base: &Field, degree: u32) -> Result<Vec<Elem>> {
    let qb = base.order();
    let count = (qb as u128).pow(degree);
    // constant term zero means X divides the candidate, so start at 1
    for idx in 1..count {
        if idx % qb as u128 == 0 {
            continue;
        }
        let mut v = idx;
        let mut coeffs: Vec<Elem> = (0..degree)
            .map(|_| {
                let d = (v % qb as u128) as u64;
                v /= qb as u128;
                Elem(d)
            })
            .collect();
        coeffs.push(Elem::ONE);
        let cand = Poly::new(base, coeffs);
        if factor::is_irreducible(&cand)? {
            return Ok(cand.coeffs().to_vec());
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}

/// An element bundled with its field, for checked arithmetic.
#[derive(Clone, PartialEq, Eq)]
pub struct FieldElement {
    field: Field,
    value: Elem,
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} in {}", self.field.render(self.value), self.field.spec())
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.field.render(self.value))
    }
}

impl FieldElement {
    pub fn new(field: &Field, value: Elem) -> Result<Self> {
        field.elem(value.0)?;
        Ok(FieldElement { field: field.clone(), value })
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn value(&self) -> Elem {
        self.value
    }

    fn same(&self, other: &FieldElement) -> Result<()> {
        if self.field != other.field {
            return Err(Error::ContextMismatch);
        }
        Ok(())
    }

    fn with(&self, value: Elem) -> FieldElement {
        FieldElement { field: self.field.clone(), value }
    }

    pub fn add(&self, other: &FieldElement) -> Result<FieldElement> {
        self.same(other)?;
        Ok(self.with(self.field.add(self.value, other.value)))
    }

    pub fn sub(&self, other: &FieldElement) -> Result<FieldElement> {
        self.same(other)?;
        Ok(self.with(self.field.sub(self.value, other.value)))
    }

    pub fn mul(&self, other: &FieldElement) -> Result<FieldElement> {
        self.same(other)?;
        Ok(self.with(self.field.mul(self.value, other.value)))
    }

    pub fn div(&self, other: &FieldElement) -> Result<FieldElement> {
        self.same(other)?;
        Ok(self.with(self.field.div(self.value, other.value)?))
    }

    pub fn neg(&self) -> FieldElement {
        self.with(self.field.neg(self.value))
    }

    pub fn inv(&self) -> Result<FieldElement> {
        Ok(self.with(self.field.inv(self.value)?))
    }

    pub fn pow(&self, e: i64) -> Result<FieldElement> {
        Ok(self.with(self.field.pow_signed(self.value, e)?))
    }

    pub fn quadratic_character(&self) -> i8 {
        self.field.quadratic_character(self.value)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f9() -> Field {
        Field::extension(&Field::prime(3).unwrap(), 2, None).unwrap()
    }

    #[test]
    fn prime_field_construction() {
        assert_eq!(Field::prime(3).unwrap().order(), 3);
        assert_eq!(Field::prime(5).unwrap().order(), 5);
        assert_eq!(Field::prime(2), Err(Error::EvenCharacteristic));
        assert_eq!(Field::prime(9), Err(Error::NotPrime(9)));
        assert_eq!(Field::prime(1), Err(Error::NotPrime(1)));
    }

    #[test]
    fn canonical_moduli() {
        let f3 = Field::prime(3).unwrap();
        assert_eq!(f9().spec(), "3^2:1,0,1");
        let f27 = Field::extension(&f3, 3, None).unwrap();
        assert_eq!(f27.spec(), "3^3:1,2,0,1");
        assert_eq!(Field::extension(&f3, 1, None).unwrap(), f3);
    }

    #[test]
    fn explicit_modulus() {
        let f3 = Field::prime(3).unwrap();
        let m = Poly::from_ints(&f3, &[2, 2, 1]);
        let f = Field::extension(&f3, 2, Some(&m)).unwrap();
        assert_eq!(f.spec(), "3^2:2,2,1");
        let bad = Poly::from_ints(&f3, &[2, 0, 1]);
        assert_eq!(Field::extension(&f3, 2, Some(&bad)), Err(Error::ReducibleModulus));
        assert!(matches!(
            Field::extension(&f3, 3, Some(&m)),
            Err(Error::DegreeMismatch(_))
        ));
    }

    #[test]
    fn tower_depth_is_limited() {
        let f9 = f9();
        let f81 = Field::extension(&f9, 2, None).unwrap();
        assert_eq!(f81.depth(), 2);
        assert_eq!(f81.order(), 81);
        assert_eq!(Field::extension(&f81, 2, None), Err(Error::TowerTooDeep));
    }

    #[test]
    fn small_arithmetic() {
        let f5 = Field::prime(5).unwrap();
        assert_eq!(f5.mul(Elem(2), Elem(4)), Elem(3));
        assert_eq!(f5.inv(Elem(2)), Ok(Elem(3)));
        assert_eq!(f5.inv(Elem(0)), Err(Error::DivisionByZero));
        let f9 = f9();
        let x = f9.generator();
        assert_eq!(f9.pow(x, 4), Elem::ONE);
        assert_eq!(f9.mul(x, x), f9.from_i64(-1));
    }

    #[test]
    fn characters() {
        let f5 = Field::prime(5).unwrap();
        let f7 = Field::prime(7).unwrap();
        assert_eq!(f5.quadratic_character(Elem(2)), -1);
        assert_eq!(f7.quadratic_character(Elem(0)), 0);
        assert_eq!(f9().quadratic_character(Elem(2)), 1);
    }

    #[test]
    fn trace_and_norm_examples() {
        let f3 = Field::prime(3).unwrap();
        let f9 = f9();
        let x = f9.generator();
        assert_eq!(f9.trace(&f3, x), Ok(Elem(0)));
        assert_eq!(f9.trace(&f3, Elem(1)), Ok(Elem(2)));
        assert_eq!(f3.trace(&f3, Elem(1)), Ok(Elem(1)));
        assert_eq!(f9.norm(&f3, x), Ok(Elem(1)));
        assert_eq!(f9.norm(&f3, Elem(2)), Ok(Elem(1)));
        assert_eq!(f3.norm(&f3, Elem(2)), Ok(Elem(2)));
        let f5 = Field::prime(5).unwrap();
        assert!(matches!(f9.trace(&f5, x), Err(Error::NotASubfield(..))));
    }

    #[test]
    fn embedding() {
        let f3 = Field::prime(3).unwrap();
        let f9 = f9();
        assert_eq!(f9.embed(&f3, Elem(2)), Ok(Elem(2)));
        assert_eq!(f9.embed(&f3, Elem(0)), Ok(Elem(0)));
        let e = f9.embed(&f3, Elem(2)).unwrap();
        assert_eq!(f9.trace(&f3, e), Ok(f3.mul(Elem(2), Elem(2))));
        assert!(f9.project(&f3, f9.generator()).is_err());
    }

    #[test]
    fn table_free_extension_agrees_with_tables() {
        // F_{5^8} is above TABLE_LIMIT, so this exercises the polynomial path
        let f5 = Field::prime(5).unwrap();
        let big = Field::extension(&f5, 8, None).unwrap();
        assert!(big.0.tables.is_none());
        let a = Elem(123_456);
        let b = Elem(98_765);
        let ab = big.mul(a, b);
        assert_eq!(big.div(ab, b), Ok(a));
        assert_eq!(big.sub(big.add(a, b), b), a);
        assert_eq!(big.pow(a, big.order() - 1), Elem::ONE);
        let r = big.sqrt(big.square(a)).unwrap();
        assert_eq!(big.square(r), big.square(a));
        assert_eq!(big.quadratic_character(big.square(a)), 1);
    }

    #[test]
    fn sqrt_exhaustive_small() {
        for f in [Field::prime(7).unwrap(), f9(), Field::prime(13).unwrap()] {
            for a in f.elements() {
                match f.sqrt(a) {
                    Some(r) => assert_eq!(f.square(r), a),
                    None => assert_eq!(f.quadratic_character(a), -1),
                }
            }
        }
    }

    #[test]
    fn field_element_checks_context() {
        let f5 = Field::prime(5).unwrap();
        let f7 = Field::prime(7).unwrap();
        let a = f5.element(Elem(2)).unwrap();
        let b = f7.element(Elem(2)).unwrap();
        assert_eq!(a.add(&b), Err(Error::ContextMismatch));
        assert_eq!(a.mul(&a).unwrap().value(), Elem(4));
        assert_eq!(a.pow(-1).unwrap().value(), Elem(3));
        assert!(f5.element(Elem(5)).is_err());
    }
}
