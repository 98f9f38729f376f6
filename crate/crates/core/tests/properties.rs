mod common;

use std::sync::OnceLock;

use common::*;
use proptest::prelude::*;
use ringlab::construct::{opposite, quotient};
use ringlab::deciders::*;
use ringlab::structure::{ideal_generated, units};
use ringlab::{Elem, FiniteRing, RingSpec, StructureTables};

const POOL: [&str; 10] =
    ["Z6", "Z8", "Z12", "Z2xZ4", "Triv(Z3)", "Z4[x]/(x^2)", "T2(Z4)", "M2(Z2)", "M2(Z3)", "Ideal(Z8,2)"];

fn pool() -> &'static Vec<FiniteRing> {
    static P: OnceLock<Vec<FiniteRing>> = OnceLock::new();
    P.get_or_init(|| POOL.iter().map(|s| ring(s)).collect())
}

fn ring_and_elems(k: usize) -> impl Strategy<Value = (usize, Vec<u32>)> {
    (0..POOL.len()).prop_flat_map(move |i| {
        let n = pool()[i].order() as u32;
        (Just(i), proptest::collection::vec(0..n, k))
    })
}

fn spec_strategy() -> impl Strategy<Value = RingSpec> {
    let leaf = (2u32..40).prop_map(RingSpec::Zn);
    leaf.prop_recursive(4, 24, 3, |inner| {
        let non_product = inner.clone().prop_filter("no nested products", |s| !matches!(s, RingSpec::Product(_)));
        prop_oneof![
            proptest::collection::vec(non_product, 2..4).prop_map(RingSpec::Product),
            (1usize..4, inner.clone()).prop_map(|(k, b)| RingSpec::matrix(k, b)),
            (1usize..4, inner.clone()).prop_map(|(k, b)| RingSpec::triangular(k, b)),
            (inner.clone(), 1usize..5).prop_map(|(b, n)| RingSpec::poly_mod(b, n)),
            inner.clone().prop_map(RingSpec::trivial_ext),
            inner.clone().prop_map(RingSpec::opposite),
            inner.clone().prop_map(RingSpec::center),
            (inner.clone(), 0u32..50).prop_map(|(b, e)| RingSpec::corner(b, e)),
            (inner.clone(), proptest::collection::vec(0u32..50, 0..3)).prop_map(|(b, g)| RingSpec::quotient(b, g)),
            (inner, proptest::collection::vec(0u32..50, 0..3)).prop_map(|(b, g)| RingSpec::ideal_ring(b, g)),
        ]
    })
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn powers_compose((i, v) in ring_and_elems(1), j in 1u64..40, k in 1u64..40) {
        let r = &pool()[i];
        let a = Elem(v[0]);
        prop_assert_eq!(r.mul(r.power(a, j), r.power(a, k)), r.power(a, j + k));
        prop_assert_eq!(r.power(r.power(a, j), k), r.power(a, j * k));
    }

    #[test]
    fn trajectory_is_the_first_repeat((i, v) in ring_and_elems(1)) {
        let r = &pool()[i];
        let a = Elem(v[0]);
        let t = r.power_trajectory(a);
        prop_assert!(t.preperiod >= 1 && t.period >= 1);
        let (m, p) = (t.preperiod as u64, t.period as u64);
        prop_assert_eq!(r.power(a, m + p), r.power(a, m));
        let seen: Vec<Elem> = (1..m + p).map(|k| r.power(a, k)).collect();
        let mut sorted = seen.clone();
        sorted.sort_unstable();
        sorted.dedup();
        prop_assert_eq!(sorted.len(), seen.len());
    }

    #[test]
    fn axioms_hold_on_random_triples((i, v) in ring_and_elems(3)) {
        let r = &pool()[i];
        let (a, b, c) = (Elem(v[0]), Elem(v[1]), Elem(v[2]));
        prop_assert_eq!(r.mul(r.mul(a, b), c), r.mul(a, r.mul(b, c)));
        prop_assert_eq!(r.mul(a, r.add(b, c)), r.add(r.mul(a, b), r.mul(a, c)));
        prop_assert_eq!(r.mul(r.add(a, b), c), r.add(r.mul(a, c), r.mul(b, c)));
        prop_assert_eq!(r.add(a, r.neg(a)), r.zero());
    }

    #[test]
    fn grammar_round_trips(spec in spec_strategy()) {
        let text = spec.to_string();
        let parsed: RingSpec = text.parse().unwrap();
        prop_assert_eq!(&parsed, &spec);
        let spaced: String = text.chars().flat_map(|c| [c, ' ']).collect();
        prop_assert_eq!(spaced.parse::<RingSpec>().unwrap(), spec);
    }

    #[test]
    fn projection_is_a_homomorphism((i, v) in ring_and_elems(3)) {
        let r = &pool()[i];
        let ideal = ideal_generated(r, &[Elem(v[0])]).unwrap();
        let qr = quotient(r, &ideal).unwrap();
        let (a, b) = (Elem(v[1]), Elem(v[2]));
        let q = &qr.ring;
        prop_assert_eq!(qr.project(r.add(a, b)), q.add(qr.project(a), qr.project(b)));
        prop_assert_eq!(qr.project(r.mul(a, b)), q.mul(qr.project(a), qr.project(b)));
        prop_assert_eq!(qr.project(qr.representative(qr.project(a))), qr.project(a));
    }

    #[test]
    fn decided_witnesses_validate((i, v) in ring_and_elems(1)) {
        let r = &pool()[i];
        let s = StructureTables::new(r);
        let a = Elem(v[0]);
        let w = decide_wncl(&s, a).expect("finite rings are weakly nil clean");
        prop_assert!(w.check(r, a).is_ok());
        let p = decide_pi_regular(r, a).unwrap();
        prop_assert!(p.check(r, a).is_ok());
        if r.is_unital() {
            prop_assert!(wncl_from_pi_regular(r, a, &p).is_ok());
            let x = decide_exchange(&s, a).unwrap().unwrap();
            prop_assert!(x.check(r, a).is_ok());
        }
    }

    #[test]
    fn strong_pi_regularity_is_left_right_symmetric((i, v) in ring_and_elems(1)) {
        let r = &pool()[i];
        let a = Elem(v[0]);
        prop_assert_eq!(right_strong_pi_exponent(r, a).is_some(), left_strong_pi_exponent(r, a).is_some());
        let op = opposite(r);
        prop_assert_eq!(right_strong_pi_exponent(r, a).is_some(), right_strong_pi_exponent(&op, a).is_some());
    }

    #[test]
    fn forms_convert_both_ways((i, v) in ring_and_elems(1)) {
        let r = &pool()[i];
        prop_assume!(r.is_unital());
        let s = StructureTables::new(r);
        let a = Elem(v[0]);
        let w = decide_wncl(&s, r.neg(a)).unwrap();
        let alt = primal_to_alternate(r, a, &w).unwrap();
        prop_assert!(alt.check(r, a).is_ok());
        let back = alternate_to_primal(r, a, &alt).unwrap();
        prop_assert!(back.check(r, r.neg(a)).is_ok());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn units_of_zn_are_coprime_residues(n in 2u32..200) {
        let r = ring(&format!("Z{n}"));
        let u = units(&r).unwrap();
        let expect: Vec<u32> = (0..n).filter(|&k| gcd(k, n) == 1).collect();
        let got: Vec<u32> = u.members().iter().map(|e| e.0).collect();
        prop_assert_eq!(got, expect);
    }
}

#[test]
fn matrix_units_match_the_determinant_oracle() {
    for n in [2u32, 3, 4, 6] {
        let r = ring(&format!("M2(Z{n})"));
        let u = units(&r).unwrap();
        let expect: Vec<u32> = Mat2::all(n)
            .filter(|m| gcd((m.m[0] * m.m[3] + n * n - m.m[1] * m.m[2] % n) % n, n) == 1)
            .map(|m| m.index())
            .collect();
        let got: Vec<u32> = u.members().iter().map(|e| e.0).collect();
        assert_eq!(got, expect, "M2(Z{n})");
        for &x in u.members() {
            let inv = u.inverse(x).unwrap();
            assert_eq!(r.mul(x, inv), r.one().unwrap());
        }
    }
}
