//! Builds F_9 and its quadratic extension F_81, then exercises the tower maps.

use stabpoly::format::parse_field;
use stabpoly::Field;

fn main() -> stabpoly::Result<()> {
    let f3 = Field::prime(3)?;
    let f9 = Field::extension(&f3, 2, None)?;
    let f81 = parse_field("(3^2)^2")?;
    println!("{} has modulus {}", f9.spec(), f9.modulus().unwrap());
    println!("{} has order {} and depth {}", f81.spec(), f81.order(), f81.depth());

    let g = f81.generator();
    println!("generator g = {}", f81.render(g));
    println!("g^-1 = {}", f81.render(f81.inv(g)?));
    println!("chi(g) = {}", f81.quadratic_character(g));
    println!("Tr_(81/9)(g) = {}", f9.render(f81.trace(&f9, g)?));
    println!("N_(81/9)(g) = {}", f9.render(f81.norm(&f9, g)?));
    println!("N_(81/3)(g) = {}", f3.render(f81.norm(&f3, g)?));

    let squares = f81.elements().filter(|&a| f81.quadratic_character(a) == 1).count();
    println!("{squares} nonzero squares in F_81");
    let a = f81.square(f81.add(g, f81.one()));
    let r = f81.sqrt(a).expect("a square has a root");
    println!("sqrt({}) = {}", f81.render(a), f81.render(r));
    Ok(())
}
