mod common;

use common::*;
use ringlab::construct::quotient;
use ringlab::structure::*;
use ringlab::Elem;

#[test]
fn powers() {
    let z8 = ring("Z8");
    assert_eq!(z8.power(el(2), 3), el(0));
    let z6 = ring("Z6");
    assert_eq!(z6.power(el(5), 2), el(1));
    for e in idempotents(&z6) {
        assert_eq!(z6.power(e, 7), e);
    }
}

#[test]
fn trajectories() {
    let t = ring("Z4").power_trajectory(el(2));
    assert_eq!((t.preperiod, t.period), (2, 1));
    let t = ring("Z6").power_trajectory(el(2));
    assert_eq!((t.preperiod, t.period), (1, 2));
    let m = ring("M2(Z2)");
    for e in idempotents(&m) {
        let t = m.power_trajectory(e);
        assert_eq!((t.preperiod, t.period), (1, 1));
    }
}

#[test]
fn idempotent_sets() {
    assert_eq!(idempotents(&ring("Z4")), els(&[0, 1]));
    assert_eq!(idempotents(&ring("Z6")), els(&[0, 1, 3, 4]));
    let oracle: Vec<Elem> = Mat2::all(2).filter(|a| a.mul(a) == *a).map(|a| Elem(a.index())).collect();
    assert_eq!(oracle.len(), 8);
    assert_eq!(idempotents(&ring("M2(Z2)")), oracle);
}

#[test]
fn nilpotent_sets() {
    let z4 = nilpotents(&ring("Z4"));
    assert_eq!(z4.members(), els(&[0, 2]).as_slice());
    assert_eq!(z4.nil_index(el(2)), Some(2));
    assert_eq!(z4.nil_index(el(0)), Some(1));
    let z8 = nilpotents(&ring("Z8"));
    assert_eq!(z8.members(), els(&[0, 2, 4, 6]).as_slice());
    assert_eq!(z8.nil_index(el(2)), Some(3));
    assert_eq!(nilpotents(&ring("Z6")).members(), els(&[0]).as_slice());
    let oracle = Mat2::all(2).filter(|a| a.is_nilpotent()).count();
    assert_eq!(oracle, 4);
    assert_eq!(nilpotents(&ring("M2(Z2)")).len(), oracle);
}

#[test]
fn unit_sets() {
    let u = units(&ring("Z6")).unwrap();
    assert_eq!(u.members(), els(&[1, 5]).as_slice());
    assert_eq!(u.inverse(el(5)), Some(el(5)));
    let oracle =
        Mat2::all(2).filter(|a| Mat2::all(2).any(|b| a.mul(&b) == Mat2::one(2) && b.mul(a) == Mat2::one(2))).count();
    assert_eq!(oracle, 6);
    assert_eq!(units(&ring("M2(Z2)")).unwrap().len(), oracle);
    let zero = ring("Z1");
    assert_eq!(units(&zero).unwrap().members(), els(&[0]).as_slice());
    assert!(units(&ring("Ideal(Z4,2)")).is_err());
}

#[test]
fn centers() {
    assert_eq!(center(&ring("Z12")).len(), 12);
    assert_eq!(center(&ring("M2(Z2)")), els(&[0, 9]));
    // T2(Z2) is enumerated (a11, a12, a22); the identity is 1*4 + 0*2 + 1 = 5.
    assert_eq!(center(&ring("T2(Z2)")), els(&[0, 5]));
}

#[test]
fn radicals() {
    assert_eq!(jacobson_radical(&ring("Z4")).unwrap().members(), els(&[0, 2]).as_slice());
    assert_eq!(jacobson_radical(&ring("Z6")).unwrap().members(), els(&[0]).as_slice());
    // Strictly upper triangular: a11 = a22 = 0, so indices 0 and 2.
    assert_eq!(jacobson_radical(&ring("T2(Z2)")).unwrap().members(), els(&[0, 2]).as_slice());
    assert!(jacobson_radical(&ring("Ideal(Z4,2)")).is_err());
}

#[test]
fn radical_of_semisimple_quotient_is_zero() {
    for spec in CORPUS.iter().filter(|s| !s.starts_with("Ideal")) {
        let r = ring(spec);
        let j = jacobson_radical(&r).unwrap();
        assert!(is_nil_ideal(&r, &j), "{spec}");
        let q = quotient(&r, &j).unwrap();
        assert!(jacobson_radical(&q.ring).unwrap().is_zero(), "{spec}");
    }
}

#[test]
fn generated_ideals() {
    let z6 = ring("Z6");
    assert_eq!(ideal_generated(&z6, &[el(2)]).unwrap().members(), els(&[0, 2, 4]).as_slice());
    assert_eq!(ideal_generated(&z6, &[]).unwrap().members(), els(&[0]).as_slice());
    let t = ring("T2(Z2)");
    assert_eq!(ideal_generated(&t, &[el(2)]).unwrap().members(), els(&[0, 2]).as_slice());
    assert!(ideal_generated(&z6, &[el(6)]).is_err());
}

#[test]
fn nil_ideals() {
    let z4 = ring("Z4");
    assert!(is_nil_ideal(&z4, &Ideal::new(&z4, els(&[0, 2])).unwrap()));
    let z6 = ring("Z6");
    assert!(!is_nil_ideal(&z6, &Ideal::new(&z6, els(&[0, 2, 4])).unwrap()));
    assert!(is_nil_ideal(&z6, &Ideal::new(&z6, els(&[0])).unwrap()));
    assert!(Ideal::new(&z6, els(&[0, 2])).is_err());
}

#[test]
fn bounded_indices() {
    assert_eq!(bounded_index(&ring("Z8")), 3);
    assert_eq!(bounded_index(&ring("M2(Z2)")), 2);
    assert_eq!(bounded_index(&ring("Z6")), 1);
}

#[test]
fn abelian_rings() {
    assert!(is_abelian(&ring("Z12")));
    assert!(!is_abelian(&ring("M2(Z2)")));
    assert!(!is_abelian(&ring("T2(Z2)")));
}

#[test]
fn structure_table_invariants_on_corpus() {
    for spec in CORPUS {
        let r = ring(spec);
        let s = StructureTables::new(&r);
        assert!(s.idempotents().contains(&r.zero()));
        assert!(s.nilpotents().contains(r.zero()));
        let both: Vec<_> = s.idempotents().iter().filter(|&&e| s.nilpotents().contains(e)).collect();
        assert_eq!(both, vec![&r.zero()], "{spec}");
        for &c in s.center() {
            for &d in s.center() {
                assert!(s.is_central(r.mul(c, d)) && s.is_central(r.add(c, d)));
                assert!(r.commutes(c, d));
            }
        }
        if let Some(one) = r.one() {
            assert!(s.idempotents().contains(&one));
            let u = s.units().unwrap();
            for &a in u.members() {
                let inv = u.inverse(a).unwrap();
                assert_eq!(u.inverse(inv), Some(a));
                assert_eq!(r.mul(a, inv), one);
                for &b in u.members() {
                    assert!(u.contains(r.mul(a, b)));
                }
            }
        }
        if s.is_abelian() {
            for &e in s.idempotents() {
                for &f in s.idempotents() {
                    assert!(r.is_idempotent(r.mul(e, f)), "{spec}");
                }
            }
        }
    }
}
