//! Critical residue orbit of a cubic and the character values it feeds.

use stabpoly::dynamics::{assess, orbit_sets};
use stabpoly::{Field, Poly};

fn main() -> stabpoly::Result<()> {
    let f7 = Field::prime(7)?;
    let f = Poly::from_ints(&f7, &[1, 3, 0, 1]);
    let sets = orbit_sets(&f)?;
    let orbit = sets.orbit();
    println!("f = {f}, f' = {}", orbit.derivative());
    println!(
        "tail {}, cycle {}, span {}, parity {:?}, required character {}",
        orbit.tail_length(),
        orbit.cycle_length(),
        sets.span(),
        sets.parity(),
        sets.required_character()
    );
    for n in 1..=sets.span() {
        let rec = orbit.record(n);
        let v = sets.value(n);
        println!(
            "n={n}: t = {}, v = {}, criterion element {} (chi {})",
            rec.residue,
            f7.render(rec.value),
            f7.render(v.element),
            v.character
        );
    }
    let report = assess(&f, 3, 4096)?;
    println!("verdict {} (criterion {})", report.verdict, report.criterion_verdict);
    Ok(())
}
