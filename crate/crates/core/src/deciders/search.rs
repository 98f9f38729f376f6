//! Exhaustive element-wise searches. Each returns the lexicographically
//! smallest witness by element index, first field varying slowest.

use super::witness::*;
use crate::error::Result;
use crate::ring::{Elem, FiniteRing};
use crate::structure::StructureTables;

const NONE: u32 = u32::MAX;

/// `table[v]` is the smallest `x` with `f(x) = v`, or `NONE`.
fn smallest_preimages(r: &FiniteRing, f: impl Fn(Elem) -> Elem) -> Vec<u32> {
    let mut table = vec![NONE; r.order()];
    for x in r.elements() {
        let v = f(x).index();
        if table[v] == NONE {
            table[v] = x.0;
        }
    }
    table
}

fn found(table: &[u32], v: Elem) -> Option<Elem> {
    match table[v.index()] {
        NONE => None,
        x => Some(Elem(x)),
    }
}

/// Primal form: `a − e − q = e·x·a` over `Id(R) × Nil(R) × R`.
pub fn wncl_witness(s: &StructureTables, a: Elem) -> Option<WnclWitness> {
    let r = s.ring();
    let nil = s.nilpotents().members();
    s.idempotents().iter().find_map(|&e| {
        let in_era = smallest_preimages(r, |x| r.mul(r.mul(e, x), a));
        let rest = r.sub(a, e);
        nil.iter().find_map(|&q| found(&in_era, r.sub(rest, q)).map(|x| WnclWitness::primal(e, q, x)))
    })
}

/// Alternate form: `e = x·a` idempotent, `1 − e = (1 − e)(1 + q)(1 − a)`.
pub fn wncl_witness_alt(s: &StructureTables, a: Elem) -> Result<Option<WnclWitness>> {
    let r = s.ring();
    let one = r.unity("wncl_witness_alt")?;
    let in_ra = smallest_preimages(r, |x| r.mul(x, a));
    let b = r.sub(one, a);
    let nil = s.nilpotents().members();
    Ok(s.idempotents().iter().find_map(|&e| {
        let x = found(&in_ra, e)?;
        let f = r.sub(one, e);
        nil.iter().find(|&&q| r.mul3(f, r.add(one, q), b) == f).map(|&q| WnclWitness::alternate(e, q, x))
    }))
}

pub fn pi_regular_witness(r: &FiniteRing, a: Elem) -> Option<PiRegularWitness> {
    let horizon = r.power_trajectory(a).horizon();
    (1..=horizon).find_map(|n| {
        let an = r.power(a, n as u64);
        r.elements().find(|&x| r.mul3(an, x, an) == an).map(|x| PiRegularWitness { n, r: x })
    })
}

/// Smallest `(n, r)` with `a^n = a^{n+1}·r`.
pub fn right_strong_pi_exponent(r: &FiniteRing, a: Elem) -> Option<(usize, Elem)> {
    let horizon = r.power_trajectory(a).horizon();
    (1..=horizon).find_map(|n| {
        let an = r.power(a, n as u64);
        let an1 = r.mul(an, a);
        r.elements().find(|&x| r.mul(an1, x) == an).map(|x| (n, x))
    })
}

/// Smallest `(m, r)` with `a^m = r·a^{m+1}`.
pub fn left_strong_pi_exponent(r: &FiniteRing, a: Elem) -> Option<(usize, Elem)> {
    let horizon = r.power_trajectory(a).horizon();
    (1..=horizon).find_map(|m| {
        let am = r.power(a, m as u64);
        let am1 = r.mul(am, a);
        r.elements().find(|&x| r.mul(x, am1) == am).map(|x| (m, x))
    })
}

/// The unique idempotent among the eventually periodic powers of `a`.
pub fn fitting_idempotent(r: &FiniteRing, a: Elem) -> Elem {
    let t = r.power_trajectory(a);
    let mut p = r.power(a, t.preperiod as u64);
    for _ in 0..t.period {
        if r.is_idempotent(p) {
            return p;
        }
        p = r.mul(p, a);
    }
    unreachable!("the cycle of powers always contains an idempotent")
}

pub fn strong_pi_witness(r: &FiniteRing, a: Elem) -> Result<Option<StrongPiWitness>> {
    r.unity("strong_pi_witness")?;
    Ok(right_strong_pi_exponent(r, a).map(|(n, x)| StrongPiWitness { n, r: x, e: fitting_idempotent(r, a) }))
}

pub fn exchange_witness(s: &StructureTables, a: Elem) -> Result<Option<ExchangeWitness>> {
    let r = s.ring();
    let one = r.unity("exchange_witness")?;
    let b = r.sub(one, a);
    let in_ra = smallest_preimages(r, |x| r.mul(x, a));
    let in_rb = smallest_preimages(r, |x| r.mul(x, b));
    Ok(s.idempotents().iter().find_map(|&e| {
        let x = found(&in_ra, e)?;
        let y = found(&in_rb, r.sub(one, e))?;
        Some(ExchangeWitness { e, r: x, s: y })
    }))
}

pub fn clean_witness(s: &StructureTables, a: Elem) -> Result<Option<SumWitness>> {
    let r = s.ring();
    let units = s.units()?;
    Ok(s.idempotents().iter().map(|&e| (e, r.sub(a, e))).find(|&(_, u)| units.contains(u)).map(|(e, u)| SumWitness {
        e,
        second: u,
        kind: SumKind::Unit,
    }))
}

pub fn nil_clean_witness(s: &StructureTables, a: Elem) -> Option<SumWitness> {
    let r = s.ring();
    let nil = s.nilpotents();
    s.idempotents().iter().map(|&e| (e, r.sub(a, e))).find(|&(_, q)| nil.contains(q)).map(|(e, q)| SumWitness {
        e,
        second: q,
        kind: SumKind::Nilpotent,
    })
}

pub fn strongly_regular_witness(r: &FiniteRing, a: Elem) -> Option<StronglyRegularWitness> {
    let a2 = r.mul(a, a);
    r.elements().find(|&x| r.mul(a2, x) == a).map(|x| StronglyRegularWitness { r: x })
}
