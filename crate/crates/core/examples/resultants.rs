//! Resultants and discriminants, checked against the Sylvester determinant.

use stabpoly::{oracle, Field, Poly};

fn main() -> stabpoly::Result<()> {
    let f7 = Field::prime(7)?;
    let f = Poly::from_ints(&f7, &[3, 1, 1, 2]);
    let g = Poly::from_ints(&f7, &[-1, 4, 1]);
    println!("f = {f}\ng = {g}");
    let euclid = f.resultant(&g)?;
    let sylvester = oracle::sylvester_resultant(&f, &g)?;
    println!("Res(f, g): euclidean {}, sylvester {}", f7.render(euclid), f7.render(sylvester));

    for h in [&f, &g, &Poly::from_ints(&f7, &[1, 2, 1])] {
        let disc = h.discriminant()?;
        println!("Disc({h}) = {} (chi = {})", f7.render(disc.value), f7.quadratic_character(disc.value));
    }

    let f9 = Field::extension(&Field::prime(3)?, 2, None)?;
    let p = Poly::new(&f9, vec![f9.generator(), f9.zero(), f9.one(), f9.one()]);
    let q = p.derivative();
    println!("over {}: Res({p}, {q}) = {}", f9.spec(), f9.render(p.resultant(&q)?));
    Ok(())
}
