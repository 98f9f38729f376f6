//! Ring-level verdicts. Each verdict quantifies the element decider over
//! all elements; a decider first tries the cheap construction from the
//! power trajectory, validates it, and only then falls back to the
//! exhaustive search.

use std::collections::BTreeMap;
use std::time::Instant;

use serde::Serialize;

use super::constructive::*;
use super::search::*;
use super::unique::wncl_decompositions;
use super::witness::*;
use crate::error::Result;
use crate::par;
use crate::ring::{Elem, FiniteRing};
use crate::structure::StructureTables;

pub fn decide_wncl(s: &StructureTables, a: Elem) -> Option<WnclWitness> {
    let r = s.ring();
    if r.is_unital() {
        if let Ok(w) = wncl_from_pi_regular(r, a, &fast_pi_regular_witness(r, a)) {
            return Some(w);
        }
    }
    wncl_witness(s, a)
}

pub fn decide_pi_regular(r: &FiniteRing, a: Elem) -> Option<PiRegularWitness> {
    let w = fast_pi_regular_witness(r, a);
    if w.check(r, a).is_ok() {
        return Some(w);
    }
    pi_regular_witness(r, a)
}

/// `a^n = a^{n+1}·r` for some `n`, `r`; needs no unity.
pub fn decide_strong_pi(r: &FiniteRing, a: Elem) -> Option<(usize, Elem)> {
    let (n, x) = fast_right_strong_pi(r, a);
    if check_right_exponent(r, a, n, x).is_ok() {
        return Some((n, x));
    }
    right_strong_pi_exponent(r, a)
}

pub fn decide_exchange(s: &StructureTables, a: Elem) -> Result<Option<ExchangeWitness>> {
    match fast_exchange_witness(s.ring(), a) {
        Ok(w) => Ok(Some(w)),
        Err(_) => exchange_witness(s, a),
    }
}

pub fn decide_strongly_regular(r: &FiniteRing, a: Elem) -> Option<StronglyRegularWitness> {
    let t = r.power_trajectory(a);
    if t.preperiod == 1 {
        let w = StronglyRegularWitness { r: r.power(a, (t.period.max(2) - 1) as u64) };
        if w.check(r, a).is_ok() {
            return Some(w);
        }
    }
    strongly_regular_witness(r, a)
}

/// Forces every lazily computed table so parallel loops only read them.
fn warm(s: &StructureTables) {
    s.idempotents();
    s.nilpotents();
    s.center();
    s.is_abelian();
    if s.ring().is_unital() {
        let _ = s.units();
    }
}

pub fn ring_is_wncl(s: &StructureTables) -> bool {
    warm(s);
    par::all_range(s.ring().order(), |i| decide_wncl(s, Elem(i as u32)).is_some())
}

pub fn ring_is_pi_regular(r: &FiniteRing) -> bool {
    par::all_range(r.order(), |i| decide_pi_regular(r, Elem(i as u32)).is_some())
}

pub fn ring_is_strongly_pi_regular(r: &FiniteRing) -> bool {
    par::all_range(r.order(), |i| decide_strong_pi(r, Elem(i as u32)).is_some())
}

/// Ring-level booleans. `None` marks a property that needs a unity on a
/// ring without one.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Properties {
    pub weakly_nil_clean: Option<bool>,
    pub clean: Option<bool>,
    pub nil_clean: Option<bool>,
    pub exchange: Option<bool>,
    pub pi_regular: Option<bool>,
    pub strongly_pi_regular: Option<bool>,
    pub strongly_regular: Option<bool>,
    pub abelian: Option<bool>,
    pub unique_idempotent_all: Option<bool>,
    pub unique_nilpotent_all: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counts {
    pub id: usize,
    pub nil: usize,
    pub unit: Option<usize>,
    pub center: usize,
    pub radical: Option<usize>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ClassificationReport {
    pub spec: String,
    pub order: usize,
    pub unital: bool,
    pub properties: Properties,
    pub counts: Counts,
    pub bounded_index: usize,
    /// Milliseconds per decider.
    pub timings: Option<BTreeMap<String, f64>>,
}

impl ClassificationReport {
    /// Names of implications that fail in this report (empty when
    /// consistent): strongly regular ⇒ strongly π-regular ⇒ π-regular ⇒
    /// weakly nil clean ⇒ exchange, and nil clean ⇒ weakly nil clean.
    pub fn lattice_violations(&self) -> Vec<&'static str> {
        let p = &self.properties;
        let implies = |x: Option<bool>, y: Option<bool>| !(x == Some(true) && y == Some(false));
        [
            ("strongly_regular => strongly_pi_regular", p.strongly_regular, p.strongly_pi_regular),
            ("strongly_pi_regular => pi_regular", p.strongly_pi_regular, p.pi_regular),
            ("pi_regular => weakly_nil_clean", p.pi_regular, p.weakly_nil_clean),
            ("weakly_nil_clean => exchange", p.weakly_nil_clean, p.exchange),
            ("nil_clean => weakly_nil_clean", p.nil_clean, p.weakly_nil_clean),
        ]
        .into_iter()
        .filter(|&(_, x, y)| !implies(x, y))
        .map(|(name, _, _)| name)
        .collect()
    }
}

struct Stopwatch(BTreeMap<String, f64>);

impl Stopwatch {
    fn time<T>(&mut self, name: &str, f: impl FnOnce() -> T) -> T {
        let start = Instant::now();
        let v = f();
        self.0.insert(name.to_string(), start.elapsed().as_secs_f64() * 1e3);
        v
    }
}

pub fn classify(r: &FiniteRing) -> ClassificationReport {
    let s = StructureTables::new(r);
    let mut clock = Stopwatch(BTreeMap::new());
    let n = r.order();
    let unital = r.is_unital();
    let all = |pred: &(dyn Fn(Elem) -> bool + Sync)| par::all_range(n, |i| pred(Elem(i as u32)));

    clock.time("structure", || warm(&s));
    let weakly_nil_clean = clock.time("weakly_nil_clean", || all(&|a| decide_wncl(&s, a).is_some()));
    let clean = clock.time("clean", || unital.then(|| all(&|a| matches!(clean_witness(&s, a), Ok(Some(_))))));
    let nil_clean = clock.time("nil_clean", || all(&|a| nil_clean_witness(&s, a).is_some()));
    let exchange = clock.time("exchange", || unital.then(|| all(&|a| matches!(decide_exchange(&s, a), Ok(Some(_))))));
    let pi_regular = clock.time("pi_regular", || ring_is_pi_regular(r));
    let strongly_pi_regular = clock.time("strongly_pi_regular", || ring_is_strongly_pi_regular(r));
    let strongly_regular = clock.time("strongly_regular", || all(&|a| decide_strongly_regular(r, a).is_some()));
    let (unique_e, unique_q) = clock.time("uniqueness", || {
        let flags = par::map_range(n, |i| {
            let (e, q) = wncl_decompositions(&s, Elem(i as u32));
            (e.is_unique(), q.is_unique())
        });
        (flags.iter().all(|f| f.0), flags.iter().all(|f| f.1))
    });
    let radical = clock.time("radical", || if unital { s.radical().ok().map(|j| j.len()) } else { None });

    ClassificationReport {
        spec: r.spec_string(),
        order: n,
        unital,
        properties: Properties {
            weakly_nil_clean: Some(weakly_nil_clean),
            clean,
            nil_clean: Some(nil_clean),
            exchange,
            pi_regular: Some(pi_regular),
            strongly_pi_regular: Some(strongly_pi_regular),
            strongly_regular: Some(strongly_regular),
            abelian: Some(s.is_abelian()),
            unique_idempotent_all: Some(unique_e),
            unique_nilpotent_all: Some(unique_q),
        },
        counts: Counts {
            id: s.idempotents().len(),
            nil: s.nilpotents().len(),
            unit: s.units().ok().map(|u| u.len()),
            center: s.center().len(),
            radical,
        },
        bounded_index: s.bounded_index(),
        timings: Some(clock.0),
    }
}
