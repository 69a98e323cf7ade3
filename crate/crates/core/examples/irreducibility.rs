//! Irreducibility, factor counts, roots in extensions and the Stickelberger parity.

use stabpoly::factor::{count_distinct_irreducible_factors, is_irreducible, roots_in, stickelberger_check};
use stabpoly::{oracle, Field, Poly};

fn main() -> stabpoly::Result<()> {
    let f5 = Field::prime(5)?;
    let polys = [
        Poly::from_ints(&f5, &[2, 0, 1]),
        Poly::from_ints(&f5, &[1, 1, 0, 1]),
        Poly::from_ints(&f5, &[-1, -1, 0, 1]),
        Poly::from_ints(&f5, &[2, 0, 0, 0, 1]),
        Poly::from_ints(&f5, &[1, 2, 1]),
    ];
    for f in &polys {
        let count = count_distinct_irreducible_factors(f)?;
        let s = stickelberger_check(f)?;
        println!(
            "{f}: irreducible {}, {} distinct factors, squarefree {}, chi(Disc) {}, parity consistent {}",
            is_irreducible(f)?,
            count.count,
            count.squarefree,
            s.disc_char,
            !s.applicable || s.consistent
        );
    }

    let f = &polys[3];
    let split = oracle::splitting_field(f)?;
    let roots = roots_in(f, &split)?;
    let shown: Vec<String> = roots.iter().map(|&r| split.render(r)).collect();
    println!("roots of {f} in {}: {}", split.spec(), shown.join(", "));

    let irreducible = oracle::monic_polys(&f5, 3).filter(|p| is_irreducible(p).unwrap()).count();
    println!("{irreducible} monic irreducible cubics over F_5");
    Ok(())
}
