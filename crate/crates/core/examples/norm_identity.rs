//! Adjusted resultants by two routes and the norm identity at n = 2.

use stabpoly::dynamics::{adjusted_resultant, norm_identity_check, ResultantMethod};
use stabpoly::{Field, Poly};

fn main() -> stabpoly::Result<()> {
    let f5 = Field::prime(5)?;
    let f = Poly::from_ints(&f5, &[1, 1, 0, 1]);
    for n in 1..=4 {
        let explicit = adjusted_resultant(&f, n, ResultantMethod::Explicit, 4096)?;
        let orbit = adjusted_resultant(&f, n, ResultantMethod::Orbit, 4096)?;
        println!("n={n}: explicit {}, orbit {}", f5.render(explicit), f5.render(orbit));
    }
    let orbit_only = adjusted_resultant(&f, 1_000_000, ResultantMethod::Orbit, 4096)?;
    println!("n=10^6 by the orbit: {}", f5.render(orbit_only));

    let id = norm_identity_check(&f, 2, 4096)?;
    println!("{f} at n = 2: lhs {}, rhs {}, holds {}", f5.render(id.lhs), f5.render(id.rhs), id.holds);
    match norm_identity_check(&Poly::from_ints(&f5, &[-1, -1, 0, 1]), 2, 4096) {
        Ok(id) => println!("unexpected: {id:?}"),
        Err(e) => println!("X^3 - X - 1: {e}"),
    }
    Ok(())
}
