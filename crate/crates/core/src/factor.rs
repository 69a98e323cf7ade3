//! Irreducibility, distinct-factor counting, root finding and the
//! Stickelberger parity check. All algorithms here are deterministic.

use crate::error::{Error, Result};
use crate::field::{prime_factors, Elem, Field};
use crate::poly::Poly;

/// Fields up to this order are searched exhaustively for roots.
pub const EXHAUSTIVE_ROOT_LIMIT: u64 = 10_000;

fn require_nonconstant(f: &Poly) -> Result<usize> {
    match f.degree() {
        Some(d) if d >= 1 => Ok(d),
        _ => Err(Error::ConstantPolynomial),
    }
}

/// Rabin's test: a monic `f` of degree `m` is irreducible iff
/// `X^{q^m} = X mod f` and `gcd(X^{q^{m/l}} - X, f) = 1` for every prime `l | m`.
pub fn is_irreducible(f: &Poly) -> Result<bool> {
    let m = require_nonconstant(f)?;
    if m == 1 {
        return Ok(true);
    }
    let f = f.monic()?;
    let field = f.field();
    let q = field.order();
    let x = Poly::x(field);
    let mut frob = Vec::with_capacity(m + 1);
    frob.push(x.clone());
    for i in 1..=m {
        let next = frob[i - 1].powmod(q, &f)?;
        frob.push(next);
    }
    if frob[m] != x {
        return Ok(false);
    }
    for l in prime_factors(m as u64) {
        let g = (&frob[m / l as usize] - &x).gcd(&f)?;
        if g.degree() != Some(0) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Number of distinct monic irreducible factors, and whether all multiplicities are 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FactorCount {
    pub count: usize,
    pub squarefree: bool,
}

/// `p`-th root of a polynomial with zero derivative: `a_i ↦ a_{pi}^{p^{s-1}}`.
pub fn pth_root(f: &Poly) -> Result<Poly> {
    if !f.derivative().is_zero() {
        return Err(Error::PreconditionViolated("p-th root needs f' = 0".into()));
    }
    let field = f.field();
    let p = field.characteristic() as usize;
    let root_exp = field.order() / field.characteristic();
    let coeffs = f
        .coeffs()
        .iter()
        .step_by(p)
        .map(|&c| field.pow(c, root_exp))
        .collect();
    Ok(Poly::new(field, coeffs))
}

/// Monic product of the distinct irreducible factors of `f`, and whether `f` is squarefree.
pub fn squarefree_radical(f: &Poly) -> Result<(Poly, bool)> {
    require_nonconstant(f)?;
    Ok(radical(&f.monic()?))
}

fn radical(f: &Poly) -> (Poly, bool) {
    let field = f.field();
    if f.degree() == Some(0) {
        return (Poly::one(field), true);
    }
    let fp = f.derivative();
    if fp.is_zero() {
        let root = pth_root(f).expect("derivative checked");
        return (radical(&root).0, false);
    }
    let g = f.gcd(&fp).expect("same field");
    if g.degree() == Some(0) {
        return (f.clone(), true);
    }
    // w collects the primes whose multiplicity is prime to p; what is left of g
    // afterwards is a p-th power.
    let w = f.divrem(&g).expect("g divides f").0;
    let mut rest = g;
    loop {
        let y = rest.gcd(&w).expect("same field");
        if y.degree() == Some(0) {
            break;
        }
        rest = rest.divrem(&y).expect("nonzero").0;
    }
    let tail = if rest.degree() == Some(0) {
        Poly::one(field)
    } else {
        radical(&pth_root(&rest).expect("p-th power")).0
    };
    (&w * &tail, false)
}

/// Distinct-degree splitting of a squarefree monic polynomial.
///
/// Returns `(i, g_i)` where `g_i` is the product of all irreducible factors of degree `i`.
pub fn distinct_degree_parts(f: &Poly) -> Result<Vec<(usize, Poly)>> {
    require_nonconstant(f)?;
    let field = f.field();
    let q = field.order();
    let x = Poly::x(field);
    let mut g = f.monic()?;
    let mut h = x.rem(&g)?;
    let mut parts = Vec::new();
    let mut i = 0;
    while g.degree().unwrap_or(0) >= 2 * (i + 1) {
        i += 1;
        h = h.powmod(q, &g)?;
        let d = (&h - &x).gcd(&g)?;
        if d.degree().unwrap_or(0) > 0 {
            g = g.divrem(&d)?.0;
            h = h.rem(&g)?;
            parts.push((i, d));
        }
    }
    if let Some(dg) = g.degree().filter(|&d| d > 0) {
        parts.push((dg, g));
    }
    Ok(parts)
}

/// Counts distinct irreducible factors: squarefree part first (handling `f' = 0`),
/// then distinct-degree splitting.
pub fn count_distinct_irreducible_factors(f: &Poly) -> Result<FactorCount> {
    let (rad, squarefree) = squarefree_radical(f)?;
    if rad.degree() == Some(0) {
        return Ok(FactorCount { count: 0, squarefree });
    }
    let count = distinct_degree_parts(&rad)?
        .iter()
        .map(|(i, g)| g.degree().unwrap() / i)
        .sum();
    Ok(FactorCount { count, squarefree })
}

/// Roots of `f` lying in `ext`, repeated per multiplicity, in index order.
pub fn roots_in(f: &Poly, ext: &Field) -> Result<Vec<Elem>> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let fe = f.embed_into(ext)?;
    if fe.degree() == Some(0) {
        return Ok(Vec::new());
    }
    let mut distinct = if ext.order() <= EXHAUSTIVE_ROOT_LIMIT {
        ext.elements().filter(|&a| fe.evaluate(a).is_zero()).collect()
    } else {
        let x = Poly::x(ext);
        let fm = fe.monic()?;
        let linear = (&x.powmod(ext.order(), &fm)? - &x).gcd(&fm)?;
        let mut out = Vec::new();
        split_linear(&linear, &mut out)?;
        out
    };
    distinct.sort();
    let mut roots = Vec::new();
    for r in distinct {
        let lin = Poly::new(ext, vec![ext.neg(r), Elem::ONE]);
        let mut g = fe.clone();
        loop {
            let (quo, rem) = g.divrem(&lin)?;
            if !rem.is_zero() {
                break;
            }
            roots.push(r);
            g = quo;
        }
    }
    Ok(roots)
}

/// Splits a squarefree product of distinct linear factors by trying
/// `gcd((X + c)^{(Q-1)/2} - 1, g)` for `c` in index order.
fn split_linear(g: &Poly, out: &mut Vec<Elem>) -> Result<()> {
    let field = g.field();
    match g.degree() {
        None | Some(0) => return Ok(()),
        Some(1) => {
            let g = g.monic()?;
            out.push(field.neg(g.coeff(0)));
            return Ok(());
        }
        _ => {}
    }
    let half = (field.order() - 1) / 2;
    for c in field.elements() {
        let shifted = Poly::new(field, vec![c, Elem::ONE]);
        let h = (&shifted.powmod(half, g)? - &Poly::one(field)).gcd(g)?;
        let dh = h.degree().unwrap_or(0);
        if dh > 0 && dh < g.degree().unwrap() {
            split_linear(&h, out)?;
            split_linear(&g.divrem(&h)?.0, out)?;
            return Ok(());
        }
    }
    unreachable!("distinct roots are separated by some quadratic character shift")
}

/// Outcome of checking `r ≡ d (mod 2)  <=>  Disc(f) is a square`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct StickelbergerCheck {
    /// False when `f` is not squarefree; the other fields are then not meaningful.
    pub applicable: bool,
    pub consistent: bool,
    pub disc_char: i8,
    pub parity_match: bool,
    pub factor_count: usize,
    pub degree: usize,
}

pub fn stickelberger_check(f: &Poly) -> Result<StickelbergerCheck> {
    let d = require_nonconstant(f)?;
    if d < 2 {
        return Err(Error::WrongDegree("Stickelberger parity needs degree >= 2".into()));
    }
    let fc = count_distinct_irreducible_factors(f)?;
    if !fc.squarefree {
        return Ok(StickelbergerCheck {
            applicable: false,
            consistent: false,
            disc_char: 0,
            parity_match: fc.count % 2 == d % 2,
            factor_count: fc.count,
            degree: d,
        });
    }
    let disc = f.discriminant()?;
    let disc_char = f.field().quadratic_character(disc.value);
    let parity_match = fc.count % 2 == d % 2;
    Ok(StickelbergerCheck {
        applicable: true,
        consistent: parity_match == (disc_char == 1),
        disc_char,
        parity_match,
        factor_count: fc.count,
        degree: d,
    })
}
