//! Cubics X^3 + aX + b in characteristic 3: trace criterion and reducible iterates.

use stabpoly::dynamics::{cubic_char3_irreducible, cubic_char3_theorem_check};
use stabpoly::factor::is_irreducible;
use stabpoly::{Field, Poly};

fn main() -> stabpoly::Result<()> {
    let f9 = Field::extension(&Field::prime(3)?, 2, None)?;
    let mut agree = 0;
    let mut irreducible = 0;
    let mut examples = Vec::new();
    for a in f9.elements() {
        for b in f9.elements() {
            let f = Poly::new(&f9, vec![b, a, f9.zero(), f9.one()]);
            let by_trace = cubic_char3_irreducible(&f)?;
            if by_trace == is_irreducible(&f)? {
                agree += 1;
            }
            if by_trace {
                irreducible += 1;
                let check = cubic_char3_theorem_check(&f)?;
                assert!(check.holds());
                if examples.len() < 3 {
                    examples.push(format!("{f}: reducible at {:?}", check.reducible_at));
                }
            }
        }
    }
    println!("trace criterion agrees with Rabin on {agree} of 81 cubics; {irreducible} irreducible");
    for e in examples {
        println!("  {e}");
    }
    Ok(())
}
