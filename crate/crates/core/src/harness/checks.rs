use std::collections::{BTreeMap, BTreeSet};

use super::{Corpus, Counterexample, PropositionCheck, PropositionId, Verdict};
use crate::construct::{self, build, structural_nil_ideal, RingSpec, Subring};
use crate::deciders::*;
use crate::par;
use crate::ring::{Elem, FiniteRing};
use crate::structure::{ideal_generated, is_nil_ideal, jacobson_radical, Ideal, StructureTables};

const MOCNA_MAX_ORDER: usize = 64;
const EXPIREG_MAX_ORDER: usize = 64;
const SMALL_MAX_ORDER: usize = 16;
const PRODUCT_MAX_ORDER: usize = 64;
const MAX_COUNTEREXAMPLES_PER_RING: usize = 5;

#[derive(Default)]
struct RingResult {
    applicable: bool,
    detail: String,
    failures: Vec<Counterexample>,
    hits: usize,
    total: usize,
}

impl RingResult {
    fn skip(reason: &str) -> Self {
        RingResult { detail: format!("skipped ({reason})"), ..Default::default() }
    }

    fn new() -> Self {
        RingResult { applicable: true, ..Default::default() }
    }

    fn fail(&mut self, spec: &str, elements: &[Elem], reason: impl Into<String>) {
        if self.failures.len() < MAX_COUNTEREXAMPLES_PER_RING {
            self.failures.push(Counterexample {
                spec: spec.to_string(),
                elements: elements.iter().map(|e| e.0).collect(),
                reason: reason.into(),
            });
        }
    }

    fn require(&mut self, ok: bool, spec: &str, elements: &[Elem], reason: impl FnOnce() -> String) {
        if !ok {
            self.fail(spec, elements, reason());
        }
    }
}

fn elems(r: &FiniteRing) -> Vec<Elem> {
    r.elements().collect()
}

type RingCheck = fn(&str, &FiniteRing) -> RingResult;

pub(super) fn run(id: PropositionId, corpus: &Corpus) -> PropositionCheck {
    let f: RingCheck = match id {
        PropositionId::P_OSNOVE => osnove,
        PropositionId::P_PRVA => prva,
        PropositionId::P_NILIDEAL => nilideal,
        PropositionId::P_RADIKAL => radikal,
        PropositionId::L_MOCNA => mocna,
        PropositionId::P_PIREG => pireg,
        PropositionId::P_ABEL => abel,
        PropositionId::P_BOUNDED => bounded,
        PropositionId::C_PI => corollary_pi,
        PropositionId::P_KOTI => koti,
        PropositionId::P_CENTER => center,
        PropositionId::P_UNQ1 => unq1,
        PropositionId::P_UNQ2 => unq2,
        PropositionId::Q_SYMMETRY => symmetry,
        PropositionId::Q_CORNER => corner_probe,
        PropositionId::P_EXPIREG => expireg,
    };
    let results = par::map_slice(&corpus.entries, |entry| match &entry.ring {
        Ok(r) => f(&entry.text, r),
        Err(err) => RingResult { detail: format!("build error: {err}"), ..Default::default() },
    });

    let mut check = PropositionCheck { id, corpus: Vec::new(), verdict: Verdict::Pass, details: Vec::new() };
    let mut failures = Vec::new();
    let (mut hits, mut total) = (0, 0);
    for (entry, res) in corpus.entries.iter().zip(results) {
        if res.applicable {
            check.corpus.push(entry.text.clone());
        }
        check.details.push(format!("{}: {}", entry.text, res.detail));
        failures.extend(res.failures);
        hits += res.hits;
        total += res.total;
    }
    check.verdict = if id.is_experiment() {
        let pct = if total == 0 { 100.0 } else { 100.0 * hits as f64 / total as f64 };
        Verdict::Experiment { observed: format!("agreement={hits}/{total} ({pct:.2}%)") }
    } else if failures.is_empty() {
        Verdict::Pass
    } else {
        Verdict::Fail { counterexamples: failures }
    };
    check
}

fn flag(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn principal_ideals(r: &FiniteRing) -> Vec<Ideal> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for a in r.elements() {
        let Ok(i) = ideal_generated(r, &[a]) else { continue };
        if seen.insert(i.members().to_vec()) {
            out.push(i);
        }
    }
    out
}

fn osnove(spec: &str, r: &FiniteRing) -> RingResult {
    let mut res = RingResult::new();
    let s = StructureTables::new(r);
    let wncl = ring_is_wncl(&s);
    let mut notes = vec![format!("wncl={}", flag(wncl))];

    if r.is_unital() {
        let outcomes = par::map_range(r.order(), |i| {
            let a = Elem(i as u32);
            decide_wncl(&s, a)?;
            Some(match decide_exchange(&s, a) {
                Ok(Some(w)) => w.check(r, a).map_err(|e| e.to_string()),
                Ok(None) => Err("no exchange witness".to_string()),
                Err(e) => Err(e.to_string()),
            })
        });
        let mut checked = 0;
        for (i, o) in outcomes.into_iter().enumerate() {
            if let Some(o) = o {
                checked += 1;
                if let Err(msg) = o {
                    res.fail(spec, &[Elem(i as u32)], format!("wncl element without exchange witness: {msg}"));
                }
            }
        }
        notes.push(format!("exchange {checked}/{}", r.order()));
    }

    let ideals = principal_ideals(r);
    let mut images = 0;
    for ideal in &ideals {
        match construct::quotient(r, ideal) {
            Ok(qr) => {
                let image = ring_is_wncl(&StructureTables::new(&qr.ring));
                images += 1;
                let gen = ideal.members().get(1).copied().unwrap_or(r.zero());
                res.require(!wncl || image, spec, &[gen], || {
                    format!("image modulo an ideal of order {} is not wncl", ideal.len())
                });
            }
            Err(e) => res.fail(spec, &[], format!("quotient failed: {e}")),
        }
    }
    notes.push(format!("images {images}"));

    if r.order() <= PRODUCT_MAX_ORDER {
        if let Some(base) = r.spec() {
            let prod_spec = RingSpec::product([base.clone(), RingSpec::zn(2)]);
            match build(&prod_spec) {
                Ok(p) => {
                    let pw = ring_is_wncl(&StructureTables::new(&p));
                    res.require(pw == wncl, spec, &[], || format!("{prod_spec} wncl={pw} differs from factor"));
                    notes.push(format!("x Z2 wncl={}", flag(pw)));
                }
                Err(e) => res.fail(spec, &[], format!("product failed: {e}")),
            }
        }
    }
    res.detail = notes.join(", ");
    res
}

fn prva(spec: &str, r: &FiniteRing) -> RingResult {
    if !r.is_unital() {
        return RingResult::skip("needs unity");
    }
    let mut res = RingResult::new();
    let s = StructureTables::new(r);
    s.idempotents();
    s.nilpotents();
    let primal = par::map_range(r.order(), |i| wncl_witness(&s, Elem(i as u32)));
    let rows = par::map_range(r.order(), |i| {
        let a = Elem(i as u32);
        let alt = wncl_witness_alt(&s, a);
        let neg = &primal[r.neg(a).index()];
        let mut errs = Vec::new();
        let alt = match alt {
            Ok(w) => w,
            Err(e) => return (false, vec![e.to_string()]),
        };
        if primal[i].is_some() != alt.is_some() {
            errs.push(format!("primal present={} but alternate present={}", primal[i].is_some(), alt.is_some()));
        }
        if let Some(w) = neg {
            if let Err(e) = primal_to_alternate(r, a, w) {
                errs.push(format!("primal(-a) to alternate(a): {e}"));
            }
        }
        if let Some(w) = &alt {
            if let Err(e) = alternate_to_primal(r, a, w) {
                errs.push(format!("alternate(a) to primal(-a): {e}"));
            }
        }
        (primal[i].is_some(), errs)
    });
    let mut present = 0;
    for (i, (p, errs)) in rows.into_iter().enumerate() {
        present += p as usize;
        for e in errs {
            res.fail(spec, &[Elem(i as u32)], e);
        }
    }
    res.detail = format!("primal=alternate on {present}/{} elements, conversions validated", r.order());
    res
}

fn canonical_nil_ideal(r: &FiniteRing) -> Option<(Ideal, &'static str)> {
    if let Some(i) = structural_nil_ideal(r).filter(|i| !i.is_zero()) {
        return Some((i, "structural"));
    }
    if r.is_unital() {
        if let Ok(j) = jacobson_radical(r) {
            if !j.is_zero() {
                return Some((j, "J(R)"));
            }
        }
    }
    None
}

fn nilideal(spec: &str, r: &FiniteRing) -> RingResult {
    let Some((ideal, kind)) = canonical_nil_ideal(r) else {
        return RingResult::skip("no nonzero nil ideal in scope");
    };
    let mut res = RingResult::new();
    if !is_nil_ideal(r, &ideal) {
        res.fail(spec, &[], format!("{kind} ideal is not nil"));
        return res;
    }
    let qr = match construct::quotient(r, &ideal) {
        Ok(q) => q,
        Err(e) => {
            res.fail(spec, &[], format!("quotient failed: {e}"));
            return res;
        }
    };
    let s = StructureTables::new(r);
    let qs = StructureTables::new(&qr.ring);
    let (rw, qw) = (ring_is_wncl(&s), ring_is_wncl(&qs));
    res.require(rw == qw, spec, &[], || format!("R wncl={rw} but R/I wncl={qw}"));

    let quotient_witnesses = par::map_range(qr.ring.order(), |c| wncl_witness(&qs, Elem(c as u32)));
    let lifts = par::map_range(r.order(), |i| {
        let a = Elem(i as u32);
        let down = &quotient_witnesses[qr.project(a).index()];
        let up = wncl_witness(&s, a);
        let mut errs = Vec::new();
        if down.is_some() != up.is_some() {
            errs.push(format!("wncl in R={} but image wncl={}", up.is_some(), down.is_some()));
        }
        if let Some(w) = down {
            if let Err(e) = lift_wncl_witness(&qr, a, w) {
                errs.push(format!("lift failed: {e}"));
            }
        }
        errs
    });
    for (i, errs) in lifts.into_iter().enumerate() {
        for e in errs {
            res.fail(spec, &[Elem(i as u32)], e);
        }
    }

    let mut idempotent_lifts = 0;
    for x in r.elements() {
        if !ideal.contains(r.sub(r.mul(x, x), x)) {
            continue;
        }
        idempotent_lifts += 1;
        match (lift_idempotent(r, &ideal, x), lift_idempotent_scan(r, &ideal, x)) {
            (Ok(a), Ok(b)) => res.require(ideal.contains(r.sub(a, b)), spec, &[x], || {
                format!("iteration gives {a}, scan gives {b}, not congruent")
            }),
            (a, b) => res.fail(spec, &[x], format!("lift_idempotent: {a:?} / scan: {b:?}")),
        }
    }
    res.detail = format!(
        "{kind} |I|={}, R wncl={}, R/I wncl={}, {} elements lifted, {} idempotent lifts agree",
        ideal.len(),
        flag(rw),
        flag(qw),
        r.order(),
        idempotent_lifts
    );
    res
}

fn radikal(spec: &str, r: &FiniteRing) -> RingResult {
    if !r.is_unital() {
        return RingResult::skip("needs unity");
    }
    let mut res = RingResult::new();
    let s = StructureTables::new(r);
    let j = match s.radical() {
        Ok(j) => j.clone(),
        Err(e) => {
            res.fail(spec, &[], e.to_string());
            return res;
        }
    };
    let nil = is_nil_ideal(r, &j);
    if let Some(&m) = j.members().iter().find(|&&m| !r.is_nilpotent(m)) {
        res.fail(spec, &[m], "element of J(R) is not nilpotent");
    }
    let qr = match construct::quotient(r, &j) {
        Ok(q) => q,
        Err(e) => {
            res.fail(spec, &[], format!("quotient failed: {e}"));
            return res;
        }
    };
    let qw = ring_is_wncl(&StructureTables::new(&qr.ring));
    let rw = ring_is_wncl(&s);
    let jj = jacobson_radical(&qr.ring).map(|i| i.len()).unwrap_or(usize::MAX);
    res.require(rw == (nil && qw), spec, &[], || format!("R wncl={rw}, J nil={nil}, R/J wncl={qw}"));
    res.require(jj == 1, spec, &[], || format!("J(R/J) has {jj} elements"));
    res.detail =
        format!("|J|={}, J nil={}, R/J order {} wncl={}, J(R/J)=0", j.len(), flag(nil), qr.ring.order(), flag(qw));
    res
}

/// Primal witnesses, in ambient indices, for every element of `fRf`.
struct CornerTable {
    sub: Subring,
    witnesses: Vec<Option<WnclWitness>>,
}

impl CornerTable {
    fn new(r: &FiniteRing, f: Elem) -> crate::Result<Self> {
        let sub = construct::corner(r, f)?;
        let cs = StructureTables::new(&sub.ring);
        let witnesses = sub
            .ring
            .elements()
            .map(|b| wncl_witness(&cs, b).map(|w| WnclWitness::primal(sub.embed(w.e), sub.embed(w.q), sub.embed(w.x))))
            .collect();
        Ok(CornerTable { sub, witnesses })
    }

    fn witness(&self, b: Elem) -> Option<WnclWitness> {
        self.sub.locate(b).and_then(|i| self.witnesses[i.index()])
    }
}

fn mocna(spec: &str, r: &FiniteRing) -> RingResult {
    if !r.is_unital() {
        return RingResult::skip("needs unity");
    }
    if r.order() > MOCNA_MAX_ORDER {
        return RingResult::skip("order above 64");
    }
    let mut res = RingResult::new();
    let one = r.one().expect("unital");
    let s = StructureTables::new(r);
    let mut corners = BTreeMap::new();
    for &f in s.idempotents() {
        match CornerTable::new(r, f) {
            Ok(t) => {
                corners.insert(f, t);
            }
            Err(e) => res.fail(spec, &[f], format!("corner failed: {e}")),
        }
    }
    let rows = par::map_range(r.order(), |i| {
        let a = Elem(i as u32);
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for x in r.elements() {
            let e = r.mul(x, a);
            if !r.is_idempotent(e) || !seen.insert(e) {
                continue;
            }
            let f = r.sub(one, e);
            let faf = r.mul3(f, a, f);
            let Some(table) = corners.get(&f) else { continue };
            let outcome = match table.witness(faf) {
                None => Err(format!("faf = {faf} has no witness in fRf")),
                Some(cw) => wncl_from_corner(r, a, e, x, &cw).and_then(|w| w.check(r, a)).map_err(|e| e.to_string()),
            };
            out.push((e, outcome));
        }
        out
    });
    let mut triples = 0;
    for (i, row) in rows.into_iter().enumerate() {
        for (e, outcome) in row {
            triples += 1;
            if let Err(msg) = outcome {
                res.fail(spec, &[Elem(i as u32), e], msg);
            }
        }
    }
    res.detail = format!("{triples} (a, e) pairs, {} corners", corners.len());
    res
}

fn pireg(spec: &str, r: &FiniteRing) -> RingResult {
    let mut res = RingResult::new();
    let s = StructureTables::new(r);
    s.idempotents();
    s.nilpotents();
    let unital = r.is_unital();
    let rows = par::map_range(r.order(), |i| {
        let a = Elem(i as u32);
        let Some(pw) = pi_regular_witness(r, a) else { return (false, None) };
        if wncl_witness(&s, a).is_none() {
            return (true, Some("pi-regular element without primal witness".to_string()));
        }
        if unital {
            if let Err(e) = wncl_from_pi_regular(r, a, &pw) {
                return (true, Some(format!("constructive path: {e}")));
            }
        }
        (true, None)
    });
    let mut count = 0;
    for (i, (p, err)) in rows.into_iter().enumerate() {
        count += p as usize;
        if let Some(msg) = err {
            res.fail(spec, &[Elem(i as u32)], msg);
        }
    }
    let path = if unital { "exhaustive and constructive" } else { "exhaustive" };
    res.detail = format!("{count}/{} pi-regular, all wncl ({path})", r.order());
    res
}

fn abel(spec: &str, r: &FiniteRing) -> RingResult {
    let s = StructureTables::new(r);
    if !s.is_abelian() {
        return RingResult::skip("not abelian");
    }
    let mut res = RingResult::new();
    let wncl = ring_is_wncl(&s);
    let spi = ring_is_strongly_pi_regular(r);
    res.require(wncl == spi, spec, &[], || format!("wncl={wncl} but strongly pi-regular={spi}"));
    for a in elems(r) {
        if decide_wncl(&s, a).is_some() && decide_strong_pi(r, a).is_none() {
            res.fail(spec, &[a], "wncl element of an abelian ring is not strongly pi-regular");
        }
    }
    res.detail = format!("wncl={}, strongly pi-regular={}", flag(wncl), flag(spi));
    res
}

fn bounded(spec: &str, r: &FiniteRing) -> RingResult {
    let mut res = RingResult::new();
    let s = StructureTables::new(r);
    let bidx = s.bounded_index();
    for &q in s.nilpotents().members() {
        res.require(r.power_or_one(q, bidx as u64).ok() == Some(r.zero()) || bidx == 0, spec, &[q], || {
            format!("q^{bidx} is nonzero")
        });
    }
    let attained = s.nilpotents().members().iter().any(|&q| r.nil_index(q) == Some(bidx));
    res.require(attained, spec, &[], || format!("no nilpotent of index {bidx}"));
    let wncl = ring_is_wncl(&s);
    let spi = ring_is_strongly_pi_regular(r);
    res.require(!wncl || spi, spec, &[], || "wncl ring of bounded index is not strongly pi-regular".into());
    let sides = par::map_range(r.order(), |i| {
        let a = Elem(i as u32);
        (right_strong_pi_exponent(r, a).is_some(), left_strong_pi_exponent(r, a).is_some())
    });
    for (i, (right, left)) in sides.into_iter().enumerate() {
        res.require(right == left, spec, &[Elem(i as u32)], || {
            format!("right strongly pi-regular={right} but left={left}")
        });
    }
    res.detail = format!("index {bidx}, wncl={}, strongly pi-regular={}, left=right", flag(wncl), flag(spi));
    res
}

fn six_verdicts(r: &FiniteRing) -> [bool; 3] {
    [ring_is_wncl(&StructureTables::new(r)), ring_is_pi_regular(r), ring_is_strongly_pi_regular(r)]
}

fn corollary_pi(spec: &str, r: &FiniteRing) -> RingResult {
    if r.order() > SMALL_MAX_ORDER {
        return RingResult::skip("order above 16");
    }
    let Some(base) = r.spec() else { return RingResult::skip("no spec") };
    let mut res = RingResult::new();
    let m = match build(&RingSpec::matrix(2, base.clone())) {
        Ok(m) => m,
        Err(e) => {
            res.fail(spec, &[], format!("M2 build failed: {e}"));
            return res;
        }
    };
    let [a, b, c] = six_verdicts(r);
    let [d, e, f] = six_verdicts(&m);
    let all = [a, b, c, d, e, f];
    res.require(all.iter().all(|&v| v == a), spec, &[], || format!("verdicts disagree: {all:?}"));
    let render: Vec<&str> = all.iter().map(|&v| flag(v)).collect();
    res.detail = format!("R [{}] M2(R) order {} [{}]", render[..3].join(" "), m.order(), render[3..].join(" "));
    res
}

fn koti(spec: &str, r: &FiniteRing) -> RingResult {
    if !r.is_unital() {
        return RingResult::skip("needs unity");
    }
    if r.order() > SMALL_MAX_ORDER {
        return RingResult::skip("order above 16");
    }
    if !StructureTables::new(r).is_abelian() {
        return RingResult::skip("not abelian");
    }
    let Some(base) = r.spec() else { return RingResult::skip("no spec") };
    let mut res = RingResult::new();
    let m = match build(&RingSpec::matrix(2, base.clone())) {
        Ok(m) => m,
        Err(e) => {
            res.fail(spec, &[], format!("M2 build failed: {e}"));
            return res;
        }
    };
    let ms = StructureTables::new(&m);
    let rows = par::map_range(r.order(), |i| {
        let a = Elem(i as u32);
        let big_a = m.from_components(&[a, r.zero(), r.zero(), r.zero()]).expect("matrix layout");
        let w_neg = decide_wncl(&ms, m.neg(big_a)).ok_or_else(|| "no primal witness for -diag(a,0)".to_string())?;
        let alt = primal_to_alternate(&m, big_a, &w_neg).map_err(|e| e.to_string())?;
        let w = extract_from_matrix(r, &m, a, &alt).map_err(|e| e.to_string())?;
        w.check(r, a).map_err(|e| e.to_string())
    });
    for (i, row) in rows.into_iter().enumerate() {
        if let Err(msg) = row {
            res.fail(spec, &[Elem(i as u32)], msg);
        }
    }
    res.detail = format!("{} base elements extracted from M2(R)", r.order());
    res
}

fn center(spec: &str, r: &FiniteRing) -> RingResult {
    if !r.is_unital() {
        return RingResult::skip("needs unity");
    }
    let mut res = RingResult::new();
    let sub = match construct::center_ring(r) {
        Ok(c) => c,
        Err(e) => {
            res.fail(spec, &[], format!("center failed: {e}"));
            return res;
        }
    };
    let s = StructureTables::new(r);
    let outcomes = par::map_slice(&sub.members, |&a| {
        let w = decide_wncl(&s, a).ok_or_else(|| "central element without witness".to_string())?;
        let ext = center_witness(r, &sub, a, &w).map_err(|e| e.to_string())?;
        let local = sub.locate(a).expect("member");
        ext.in_center.check(&sub.ring, local).map_err(|e| format!("in center: {e}"))?;
        if !r.is_central(ext.in_ring.e) {
            return Err(format!("e = {} is not central", ext.in_ring.e));
        }
        Ok(())
    });
    for (&a, o) in sub.members.iter().zip(outcomes) {
        if let Err(msg) = o {
            res.fail(spec, &[a], msg);
        }
    }
    let cw = ring_is_wncl(&StructureTables::new(&sub.ring));
    res.require(cw, spec, &[], || "center ring is not wncl".into());
    res.detail = format!("|Z|={}, every central element validated in Z(R)", sub.members.len());
    res
}

fn uniqueness(r: &FiniteRing) -> (bool, bool) {
    let s = StructureTables::new(r);
    s.idempotents();
    s.nilpotents();
    let flags = par::map_range(r.order(), |i| {
        let (e, q) = wncl_decompositions(&s, Elem(i as u32));
        (e.is_unique(), q.is_unique())
    });
    (flags.iter().all(|f| f.0), flags.iter().all(|f| f.1))
}

fn unq1(spec: &str, r: &FiniteRing) -> RingResult {
    if !r.is_unital() {
        return RingResult::skip("needs unity");
    }
    let mut res = RingResult::new();
    let (unique_e, _) = uniqueness(r);
    let abelian = StructureTables::new(r).is_abelian();
    let spi = ring_is_strongly_pi_regular(r);
    res.require(unique_e == (abelian && spi), spec, &[], || {
        format!("unique e={unique_e} but abelian={abelian}, strongly pi-regular={spi}")
    });
    res.detail = format!("unique e={}, abelian={}, strongly pi-regular={}", flag(unique_e), flag(abelian), flag(spi));
    res
}

fn unq2(spec: &str, r: &FiniteRing) -> RingResult {
    if !r.is_unital() {
        return RingResult::skip("needs unity");
    }
    let mut res = RingResult::new();
    let (_, unique_q) = uniqueness(r);
    let sreg = par::all_range(r.order(), |i| decide_strongly_regular(r, Elem(i as u32)).is_some());
    res.require(unique_q == sreg, spec, &[], || format!("unique q={unique_q} but strongly regular={sreg}"));
    res.detail = format!("unique q={}, strongly regular={}", flag(unique_q), flag(sreg));
    res
}

fn symmetry(_spec: &str, r: &FiniteRing) -> RingResult {
    let mut res = RingResult::new();
    let op = construct::opposite(r);
    let (s, os) = (StructureTables::new(r), StructureTables::new(&op));
    for t in [&s, &os] {
        t.idempotents();
        t.nilpotents();
    }
    let agree = par::map_range(r.order(), |i| {
        let a = Elem(i as u32);
        wncl_witness(&s, a).is_some() == wncl_witness(&os, a).is_some()
    });
    res.total = agree.len();
    res.hits = agree.iter().filter(|&&b| b).count();
    res.detail = format!("R vs Op(R) elementwise agreement {}/{}", res.hits, res.total);
    res
}

fn corner_probe(_spec: &str, r: &FiniteRing) -> RingResult {
    if !r.is_unital() {
        return RingResult::skip("needs unity");
    }
    let mut res = RingResult::new();
    let s = StructureTables::new(r);
    let wncl = ring_is_wncl(&s);
    let one = r.one().expect("unital");
    let idem = s.idempotents().to_vec();
    let corner_wncl: BTreeMap<Elem, bool> = idem
        .iter()
        .zip(par::map_slice(&idem, |&e| {
            construct::corner(r, e).map(|c| ring_is_wncl(&StructureTables::new(&c.ring))).unwrap_or(false)
        }))
        .map(|(&e, w)| (e, w))
        .collect();
    let corners = corner_wncl.values().filter(|&&w| w == wncl).count();
    res.hits += corners;
    res.total += idem.len();
    let glued = idem.iter().filter(|&&e| corner_wncl[&e] && corner_wncl[&r.sub(one, e)]).count();
    res.hits += if glued == 0 || wncl { glued } else { 0 };
    res.total += glued;
    let mut detail =
        format!("wncl={}, corners agreeing {corners}/{}, complementary wncl pairs {glued}", flag(wncl), idem.len());
    if r.order() <= SMALL_MAX_ORDER {
        if let Some(base) = r.spec() {
            if let Ok(m) = build(&RingSpec::matrix(2, base.clone())) {
                let mw = ring_is_wncl(&StructureTables::new(&m));
                res.total += 1;
                res.hits += (mw == wncl) as usize;
                detail.push_str(&format!(", M2(R) wncl={}", flag(mw)));
            }
        }
    }
    res.detail = detail;
    res
}

fn expireg(spec: &str, r: &FiniteRing) -> RingResult {
    if !r.is_unital() {
        return RingResult::skip("needs unity");
    }
    if r.order() > EXPIREG_MAX_ORDER {
        return RingResult::skip("order above 64");
    }
    let mut res = RingResult::new();
    let wncl = ring_is_wncl(&StructureTables::new(r));
    let mut premises = 0;
    let ideals = principal_ideals(r);
    for ideal in &ideals {
        let inner = construct::ideal_ring(r, ideal).map(|sub| ring_is_pi_regular(&sub.ring));
        let outer = construct::quotient(r, ideal).map(|q| ring_is_pi_regular(&q.ring));
        match (inner, outer) {
            (Ok(true), Ok(true)) => {
                premises += 1;
                let gen = ideal.members().get(1).copied().unwrap_or(r.zero());
                res.require(wncl, spec, &[gen], || "I and R/I pi-regular but R not wncl".into());
            }
            (Ok(_), Ok(_)) => {}
            (a, b) => res.fail(spec, &[], format!("construction failed: {a:?} / {b:?}")),
        }
    }
    res.detail =
        format!("{} principal ideals, {premises} with I and R/I pi-regular, R wncl={}", ideals.len(), flag(wncl));
    res
}
