use proptest::prelude::*;
use stabpoly::dynamics::{critical_residue_orbit, CriticalOrbit};
use stabpoly::factor::{count_distinct_irreducible_factors, is_irreducible, roots_in, stickelberger_check};
use stabpoly::format::{parse_poly, render_poly};
use stabpoly::oracle;
use stabpoly::{Elem, Field, Poly};

fn field(i: usize) -> Field {
    let f3 = Field::prime(3).unwrap();
    match i % 6 {
        0 => f3,
        1 => Field::prime(5).unwrap(),
        2 => Field::prime(7).unwrap(),
        3 => Field::extension(&f3, 2, None).unwrap(),
        4 => Field::extension(&f3, 3, None).unwrap(),
        _ => Field::extension(&Field::extension(&f3, 2, None).unwrap(), 2, None).unwrap(),
    }
}

fn small_field(i: usize) -> Field {
    field([0, 1, 3][i % 3])
}

fn elem(f: &Field, raw: u64) -> Elem {
    f.elem(raw % f.order()).unwrap()
}

/// Polynomial of exactly the given degree from raw coefficient draws.
fn poly(f: &Field, raw: &[u64], degree: usize) -> Poly {
    let mut c: Vec<Elem> = (0..degree).map(|i| elem(f, raw[i % raw.len()].wrapping_mul(i as u64 + 7))).collect();
    let lead = raw[0] % (f.order() - 1) + 1;
    c.push(f.elem(lead).unwrap());
    Poly::new(f, c)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn field_axioms(fi in 0usize..6, a in any::<u64>(), b in any::<u64>(), c in any::<u64>()) {
        let f = field(fi);
        let (a, b, c) = (elem(&f, a), elem(&f, b), elem(&f, c));
        prop_assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
        prop_assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
        prop_assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
        prop_assert_eq!(f.add(a, f.neg(a)), Elem::ZERO);
        prop_assert_eq!(f.sub(a, b), f.add(a, f.neg(b)));
        prop_assert_eq!(f.pow(a, f.order()), a);
        if !a.is_zero() {
            prop_assert_eq!(f.mul(a, f.inv(a).unwrap()), Elem::ONE);
            prop_assert_eq!(f.pow_signed(a, -3).unwrap(), f.inv(f.pow(a, 3)).unwrap());
        }
        let mut x = a;
        for _ in 0..f.absolute_degree() {
            x = f.frobenius(x);
        }
        prop_assert_eq!(x, a);
    }

    #[test]
    fn character_is_multiplicative(fi in 0usize..6, a in any::<u64>(), b in any::<u64>()) {
        let f = field(fi);
        let (a, b) = (elem(&f, a), elem(&f, b));
        prop_assert_eq!(f.quadratic_character(f.mul(a, b)), f.quadratic_character(a) * f.quadratic_character(b));
        let expected = match f.pow(a, (f.order() - 1) / 2) {
            x if x.is_zero() => 0,
            x if x == Elem::ONE => 1,
            _ => -1,
        };
        prop_assert_eq!(f.quadratic_character(a), expected);
        if let Some(r) = f.sqrt(a) {
            prop_assert_eq!(f.square(r), a);
        } else {
            prop_assert_eq!(f.quadratic_character(a), -1);
        }
    }

    #[test]
    fn trace_additive_norm_multiplicative(a in any::<u64>(), b in any::<u64>()) {
        let f3 = field(0);
        let f9 = field(3);
        let f81 = field(5);
        for (big, small) in [(&f9, &f3), (&f81, &f9), (&f81, &f3)] {
            let (x, y) = (elem(big, a), elem(big, b));
            prop_assert_eq!(big.trace(small, big.add(x, y)).unwrap(),
                small.add(big.trace(small, x).unwrap(), big.trace(small, y).unwrap()));
            prop_assert_eq!(big.norm(small, big.mul(x, y)).unwrap(),
                small.mul(big.norm(small, x).unwrap(), big.norm(small, y).unwrap()));
            let s = elem(small, a);
            prop_assert_eq!(big.project(small, big.embed(small, s).unwrap()).unwrap(), s);
            // x^{(Q-1)/2} = N(x)^{(q-1)/2}
            let chi = big.quadratic_character(x);
            prop_assert_eq!(small.quadratic_character(big.norm(small, x).unwrap()), chi);
        }
    }

    #[test]
    fn resultant_routes_agree(fi in 0usize..3, raw in prop::collection::vec(any::<u64>(), 1..6), dg in 1usize..5, dh in 1usize..5) {
        let f = small_field(fi);
        let g = poly(&f, &raw, dg);
        let h = poly(&f, &raw.iter().map(|x| x.rotate_left(17)).collect::<Vec<_>>(), dh);
        let euclid = g.resultant(&h).unwrap();
        prop_assert_eq!(euclid, oracle::sylvester_resultant(&g, &h).unwrap());
        prop_assert_eq!(euclid, oracle::root_product_resultant(&g, &h).unwrap());
        let swapped = h.resultant(&g).unwrap();
        prop_assert_eq!(swapped, if dg * dh % 2 == 1 { f.neg(euclid) } else { euclid });
        let k = poly(&f, &raw.iter().map(|x| x ^ 0x5555).collect::<Vec<_>>(), 2);
        prop_assert_eq!(g.mul(&k).unwrap().resultant(&h).unwrap(),
            f.mul(g.resultant(&h).unwrap(), k.resultant(&h).unwrap()));
    }

    #[test]
    fn compose_mod_matches_compose(fi in 0usize..6, raw in prop::collection::vec(any::<u64>(), 1..6), df in 1usize..5, dg in 0usize..4, dh in 1usize..4) {
        let f = field(fi);
        let a = poly(&f, &raw, df);
        let b = poly(&f, &raw.iter().map(|x| x.wrapping_mul(31)).collect::<Vec<_>>(), dg);
        let h = poly(&f, &raw.iter().map(|x| x.wrapping_add(11)).collect::<Vec<_>>(), dh);
        prop_assert_eq!(a.compose(&b).unwrap().rem(&h).unwrap(), a.compose_mod(&b, &h).unwrap());
    }

    #[test]
    fn division_identity(fi in 0usize..6, raw in prop::collection::vec(any::<u64>(), 1..8), da in 0usize..7, db in 0usize..4) {
        let f = field(fi);
        let a = poly(&f, &raw, da);
        let b = poly(&f, &raw.iter().map(|x| x.rotate_right(5)).collect::<Vec<_>>(), db);
        let (q, r) = a.divrem(&b).unwrap();
        prop_assert_eq!(q.mul(&b).unwrap().add(&r).unwrap(), a);
        prop_assert!(r.is_zero() || r.degree() < b.degree());
    }

    #[test]
    fn factorization_accounts_for_degree(fi in 0usize..3, raw in prop::collection::vec(any::<u64>(), 1..6), d in 1usize..7) {
        let f = small_field(fi);
        let p = poly(&f, &raw, d);
        let parts = oracle::trial_factorization(&p).unwrap();
        let total: usize = parts.iter().map(|(g, m)| g.degree().unwrap() * m).sum();
        prop_assert_eq!(total, d);
        prop_assert!(parts.iter().all(|(g, _)| is_irreducible(g).unwrap()));
        prop_assert_eq!(count_distinct_irreducible_factors(&p).unwrap().count, parts.len());
        let split = oracle::splitting_field(&p).unwrap();
        prop_assert_eq!(roots_in(&p, &split).unwrap().len(), d);
    }

    #[test]
    fn stickelberger_random(fi in 0usize..3, raw in prop::collection::vec(any::<u64>(), 1..8), d in 2usize..8) {
        let f = small_field(fi);
        let p = poly(&f, &raw, d);
        let check = stickelberger_check(&p).unwrap();
        prop_assert!(!check.applicable || check.consistent);
    }

    #[test]
    fn orbit_recurrence_and_values(fi in 0usize..3, raw in prop::collection::vec(any::<u64>(), 1..6), d in 2usize..5) {
        let f = small_field(fi);
        let p = poly(&f, &raw, d);
        let fp = p.derivative();
        prop_assume!(fp.degree().unwrap_or(0) >= 1);
        let orbit = critical_residue_orbit(&p).unwrap();
        prop_assert_eq!(orbit.residue_at(1), &p.rem(&fp).unwrap());
        for n in 1..=6u64 {
            prop_assert_eq!(orbit.residue_at(n + 1), &p.compose_mod(orbit.residue_at(n), &fp).unwrap());
        }
        for n in 1..=4u64 {
            prop_assert_eq!(orbit.value_at(n), oracle::critical_value_product(&p, n).unwrap());
        }
    }

    #[test]
    fn cycle_indexing_matches_replay(fi in 0usize..3, raw in prop::collection::vec(any::<u64>(), 1..6), d in 2usize..5, extra in prop::collection::vec(0u64..400, 10)) {
        let f = small_field(fi);
        let p = poly(&f, &raw, d);
        let fp = p.derivative();
        prop_assume!(fp.degree().unwrap_or(0) >= 1);
        let orbit = CriticalOrbit::new(&p).unwrap();
        let closure = (orbit.tail_length() + orbit.cycle_length()) as u64;
        let mut t = p.rem(&fp).unwrap();
        let mut replay = vec![t.clone()];
        let far = closure + 400;
        for _ in 1..far {
            t = p.compose_mod(&t, &fp).unwrap();
            replay.push(t.clone());
        }
        for e in extra {
            let n = closure + 1 + e;
            prop_assert_eq!(orbit.residue_at(n), &replay[(n - 1) as usize]);
        }
    }

    #[test]
    fn poly_text_round_trip(fi in 0usize..6, raw in prop::collection::vec(any::<u64>(), 1..6), d in 0usize..6) {
        let f = field(fi);
        let p = poly(&f, &raw, d);
        prop_assert_eq!(parse_poly(&f, &render_poly(&p)).unwrap(), p);
    }
}

#[test]
fn character_counts_exhaustive() {
    for fi in 0..6 {
        let f = field(fi);
        let squares = f.elements().filter(|&a| f.quadratic_character(a) == 1).count() as u64;
        assert_eq!(squares, (f.order() - 1) / 2, "{}", f.spec());
    }
}

#[test]
fn trace_and_norm_are_surjective() {
    let f3 = field(0);
    let f9 = field(3);
    let f81 = field(5);
    for (big, small) in [(&f9, &f3), (&f81, &f9), (&f81, &f3)] {
        let mut traces: Vec<u64> = big.elements().map(|a| big.trace(small, a).unwrap().index()).collect();
        traces.sort();
        traces.dedup();
        assert_eq!(traces.len() as u64, small.order());
        let mut norms: Vec<u64> = big
            .elements()
            .filter(|a| !a.is_zero())
            .map(|a| big.norm(small, a).unwrap().index())
            .collect();
        norms.sort();
        norms.dedup();
        assert_eq!(norms.len() as u64, small.order() - 1);
    }
}

#[test]
fn rabin_matches_trial_division_exhaustively() {
    for fi in 0..2 {
        let f = small_field(fi);
        for d in 1..=4 {
            for p in oracle::monic_polys(&f, d) {
                assert_eq!(is_irreducible(&p).unwrap(), oracle::irreducible_by_trial_division(&p).unwrap(), "{p}");
            }
        }
    }
}
