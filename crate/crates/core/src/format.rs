//! Text forms for fields, elements and polynomials, and their JSON renderings.
//!
//! Field specs:
//!
//! ```text
//! 5                 prime field
//! 3^2               canonical extension of F_3
//! 3^2:2,2,1         extension with modulus 2 + 2X + X^2 over F_3
//! (3^2)^3           canonical extension of F_9
//! (3^2)^3:[1,1],0,0,1
//! ```
//!
//! Elements are integers (mapped into the prime field) or bracketed coefficient
//! lists over the immediate base, low degree first. Polynomials are comma
//! separated coefficient lists, constant term first: `1,0,1` is `X^2 + 1`.

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::field::{Elem, Field};
use crate::poly::Poly;

pub const FIELD_GRAMMAR: &str = "p | p^s | p^s:c0,...,c_{s-1},1 | (FIELD)^k[:e0,...,1]";
pub const POLY_GRAMMAR: &str = "c0,c1,...,cd with c_i an integer or [b0,b1,...] over the base";

fn parse_err(what: &str, input: &str, grammar: &str) -> Error {
    Error::Parse(format!("cannot parse {what} {input:?}; expected {grammar}"))
}

/// Splits on commas that are not inside brackets or parentheses.
pub fn split_top_level(s: &str) -> Result<Vec<&str>> {
    let mut parts = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, ch) in s.char_indices() {
        match ch {
            '[' | '(' => depth += 1,
            ']' | ')' => {
                depth -= 1;
                if depth < 0 {
                    return Err(Error::Parse(format!("unbalanced brackets in {s:?}")));
                }
            }
            ',' if depth == 0 => {
                parts.push(s[start..i].trim());
                start = i + 1;
            }
            _ => {}
        }
    }
    if depth != 0 {
        return Err(Error::Parse(format!("unbalanced brackets in {s:?}")));
    }
    parts.push(s[start..].trim());
    Ok(parts)
}

fn parse_uint(s: &str, what: &str, input: &str) -> Result<u64> {
    s.trim().parse::<u64>().map_err(|_| parse_err(what, input, FIELD_GRAMMAR))
}

pub fn parse_field(spec: &str) -> Result<Field> {
    let spec = spec.trim();
    let (head, modulus) = match spec.rfind(':') {
        Some(i) if spec[..i].matches('(').count() == spec[..i].matches(')').count() => {
            (&spec[..i], Some(&spec[i + 1..]))
        }
        _ => (spec, None),
    };
    let (base, degree) = if let Some(rest) = head.strip_prefix('(') {
        let close = rest.rfind(')').ok_or_else(|| parse_err("field", spec, FIELD_GRAMMAR))?;
        let base = parse_field(&rest[..close])?;
        let exp = rest[close + 1..]
            .strip_prefix('^')
            .ok_or_else(|| parse_err("field", spec, FIELD_GRAMMAR))?;
        (base, parse_uint(exp, "field", spec)?)
    } else {
        match head.split_once('^') {
            Some((p, s)) => {
                (Field::prime(parse_uint(p, "field", spec)?)?, parse_uint(s, "field", spec)?)
            }
            None => {
                if modulus.is_some() {
                    return Err(parse_err("field", spec, FIELD_GRAMMAR));
                }
                return Field::prime(parse_uint(head, "field", spec)?);
            }
        }
    };
    if degree == 0 || degree > u32::MAX as u64 {
        return Err(Error::DegreeMismatch(format!("extension degree {degree}")));
    }
    let modulus = match modulus {
        None => None,
        Some(m) => {
            let poly = parse_poly(&base, m)?;
            if poly.degree() != Some(degree as usize) {
                return Err(Error::DegreeMismatch(format!(
                    "modulus {poly} has degree {:?}, expected {degree}",
                    poly.degree()
                )));
            }
            Some(poly)
        }
    };
    Field::extension(&base, degree as u32, modulus.as_ref())
}

pub fn parse_element(field: &Field, token: &str) -> Result<Elem> {
    let token = token.trim();
    if let Some(inner) = token.strip_prefix('[') {
        let inner = inner
            .strip_suffix(']')
            .ok_or_else(|| parse_err("element", token, POLY_GRAMMAR))?;
        let base = match field.base() {
            Some(b) => b,
            None => {
                return Err(Error::Parse(format!(
                    "bracketed element {token:?} given for prime field {}",
                    field.spec()
                )))
            }
        };
        let coeffs = split_top_level(inner)?
            .into_iter()
            .filter(|s| !s.is_empty())
            .map(|s| parse_element(base, s))
            .collect::<Result<Vec<_>>>()?;
        return field.from_coefficients(&coeffs);
    }
    let n: i64 = token.parse().map_err(|_| parse_err("element", token, POLY_GRAMMAR))?;
    Ok(field.from_i64(n))
}

pub fn parse_poly(field: &Field, text: &str) -> Result<Poly> {
    if text.trim().is_empty() {
        return Err(parse_err("polynomial", text, POLY_GRAMMAR));
    }
    let coeffs = split_top_level(text)?
        .into_iter()
        .map(|t| parse_element(field, t))
        .collect::<Result<Vec<_>>>()?;
    Ok(Poly::new(field, coeffs))
}

/// Integer for a prime-field element, nested coefficient list otherwise.
pub fn element_json(field: &Field, a: Elem) -> Value {
    match field.base() {
        None => json!(a.index()),
        Some(b) => Value::Array(field.coefficients(a).into_iter().map(|c| element_json(b, c)).collect()),
    }
}

pub fn poly_json(f: &Poly) -> Value {
    Value::Array(f.coeffs().iter().map(|&c| element_json(f.field(), c)).collect())
}

/// Coefficients in the same syntax [`parse_poly`] accepts.
pub fn render_poly(f: &Poly) -> String {
    if f.is_zero() {
        return "0".into();
    }
    f.coeffs().iter().map(|&c| f.field().render(c)).collect::<Vec<_>>().join(",")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_specs_round_trip() {
        for spec in ["3", "5", "3^2", "3^2:2,2,1", "5^3", "(3^2)^2", "(3^2:1,0,1)^3:[1,1],2,0,1"] {
            let f = parse_field(spec).unwrap();
            assert_eq!(parse_field(&f.spec()).unwrap(), f, "{spec}");
        }
        assert_eq!(parse_field("3^2").unwrap().spec(), "3^2:1,0,1");
        assert_eq!(parse_field("(3^2)^2").unwrap().order(), 81);
    }

    #[test]
    fn field_errors() {
        assert_eq!(parse_field("4"), Err(Error::NotPrime(4)));
        assert_eq!(parse_field("2"), Err(Error::EvenCharacteristic));
        assert!(matches!(parse_field("3^x"), Err(Error::Parse(_))));
        assert!(matches!(parse_field("abc"), Err(Error::Parse(_))));
        assert!(matches!(parse_field("3^2:1,1,1"), Err(Error::ReducibleModulus)));
        assert!(matches!(parse_field("3^2:1,1"), Err(Error::DegreeMismatch(_))));
        assert_eq!(parse_field("((3^2)^2)^2"), Err(Error::TowerTooDeep));
    }

    #[test]
    fn polys() {
        let f3 = Field::prime(3).unwrap();
        let f = parse_poly(&f3, "1,0,1").unwrap();
        assert_eq!(f, Poly::from_ints(&f3, &[1, 0, 1]));
        assert_eq!(parse_poly(&f3, "-1, -1, 0, 1").unwrap(), Poly::from_ints(&f3, &[2, 2, 0, 1]));
        let f9 = parse_field("3^2").unwrap();
        let g = parse_poly(&f9, "[1,2],0,1").unwrap();
        assert_eq!(g.coeff(0), f9.from_coefficients(&[Elem::ONE, f3.from_i64(2)]).unwrap());
        assert_eq!(render_poly(&g), "[1,2],[0,0],[1,0]");
        assert_eq!(parse_poly(&f9, &render_poly(&g)).unwrap(), g);
        assert!(matches!(parse_poly(&f3, "1,,2"), Err(Error::Parse(_))));
        assert!(matches!(parse_poly(&f3, "[1,2]"), Err(Error::Parse(_))));
        assert!(matches!(parse_poly(&f9, "[1,2,0]"), Err(Error::DegreeMismatch(_))));
    }

    #[test]
    fn json_forms() {
        let f9 = parse_field("3^2").unwrap();
        let g = parse_poly(&f9, "[1,2],0,1").unwrap();
        assert_eq!(poly_json(&g), json!([[1, 2], [0, 0], [1, 0]]));
    }
}
