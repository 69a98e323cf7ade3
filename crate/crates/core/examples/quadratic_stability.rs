//! Stable quadratics: the criterion, the independent orbit route and a direct check.

use stabpoly::dynamics::{assess, direct_iterate_check, quadratic_stability_test, Verdict};
use stabpoly::{oracle, Field};

fn main() -> stabpoly::Result<()> {
    for p in [3, 5, 7] {
        let field = Field::prime(p)?;
        let mut stable = Vec::new();
        for f in oracle::monic_polys(&field, 2) {
            let r = assess(&f, 5, 4096)?;
            let q = quadratic_stability_test(&f)?;
            assert_eq!(r.criterion_verdict, q.verdict, "{f}");
            if r.verdict == Verdict::Stable {
                assert!(direct_iterate_check(&f, 5, 4096)?.first_reducible.is_none());
                stable.push(f.to_string());
            }
        }
        println!("F_{p}: {} stable monic quadratics", stable.len());
        for f in stable.iter().take(4) {
            println!("  {f}");
        }
    }

    let field = Field::prime(5)?;
    let f = stabpoly::Poly::from_ints(&field, &[2, 0, 1]);
    let r = assess(&f, 3, 4096)?;
    match r.witness {
        Some(w) => println!("{f}: {} at n = {} ({})", r.verdict, w.n, w.reason),
        None => println!("{f}: {}", r.verdict),
    }
    Ok(())
}
