//! A polynomial that passes every criterion test yet has a root.

use stabpoly::dynamics::{assess, converse_counterexample};
use stabpoly::{Elem, Field};

fn main() -> stabpoly::Result<()> {
    let f9 = Field::extension(&Field::prime(3)?, 2, None)?;
    for a0 in [Elem::ONE, f9.generator()] {
        let cert = converse_counterexample(&f9, 5, a0)?;
        println!("f = {}", cert.f);
        println!(
            "  a0 = {}, e = {}, root {} (verified {}), S2 values all squares {}, valid {}",
            f9.render(cert.a0),
            cert.e,
            f9.render(cert.root),
            cert.root_verified,
            cert.s2_all_squares,
            cert.is_valid()
        );
        let r = assess(&cert.f, 1, 4096)?;
        println!("  criterion {}, final {}", r.criterion_verdict, r.verdict);
    }
    Ok(())
}
