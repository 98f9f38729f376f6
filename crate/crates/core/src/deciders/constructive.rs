//! Witness constructions that follow the proofs step by step, checking each
//! intermediate identity on the way.

use super::search::fitting_idempotent;
use super::witness::*;
use crate::construct::{QuotientRing, Subring};
use crate::error::{Error, Result};
use crate::ring::{Elem, FiniteRing};
use crate::structure::Ideal;

fn invalid<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::InvalidWitness(msg.into()))
}

fn internal<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Internal(msg.into()))
}

/// `(1 + q)^{-1} = Σ (−q)^k` for nilpotent `q`.
pub(crate) fn inverse_one_plus_nil(r: &FiniteRing, q: Elem) -> Result<Elem> {
    let one = r.unity("inverse of 1 + q")?;
    let k = match r.nil_index(q) {
        Some(k) => k,
        None => return invalid(format!("{q} is not nilpotent")),
    };
    let mq = r.neg(q);
    let mut sum = one;
    let mut term = one;
    for _ in 1..k {
        term = r.mul(term, mq);
        sum = r.add(sum, term);
    }
    debug_assert_eq!(r.mul(sum, r.add(one, q)), one);
    Ok(sum)
}

/// `n = preperiod`, `r = a^j` with `n + j` a multiple of the period.
pub fn fast_pi_regular_witness(r: &FiniteRing, a: Elem) -> PiRegularWitness {
    let t = r.power_trajectory(a);
    let n = t.preperiod;
    let j = t.period - n % t.period;
    PiRegularWitness { n, r: r.power(a, j as u64) }
}

/// `n = preperiod`, `r = a^{2p−1}`.
pub fn fast_right_strong_pi(r: &FiniteRing, a: Elem) -> (usize, Elem) {
    let t = r.power_trajectory(a);
    (t.preperiod, r.power(a, 2 * t.period as u64 - 1))
}

pub fn fast_strong_pi_witness(r: &FiniteRing, a: Elem) -> Result<StrongPiWitness> {
    r.unity("strong_pi_witness")?;
    let (n, x) = fast_right_strong_pi(r, a);
    let w = StrongPiWitness { n, r: x, e: fitting_idempotent(r, a) };
    w.check(r, a)?;
    Ok(w)
}

/// With `e = a^m` the Fitting idempotent (`m ≥ 2`) and `b = a(1 − e)`
/// nilpotent: `e = a^{m−1}·a` and `1 − e = (1 − e)(1 + b + b² + …)(1 − a)`.
pub fn fast_exchange_witness(r: &FiniteRing, a: Elem) -> Result<ExchangeWitness> {
    let one = r.unity("exchange_witness")?;
    let t = r.power_trajectory(a);
    let mut m = t.period;
    while m < t.preperiod.max(2) {
        m += t.period;
    }
    let e = r.power(a, m as u64);
    let f = r.sub(one, e);
    let b = r.mul(a, f);
    let k = match r.nil_index(b) {
        Some(k) => k,
        None => return internal(format!("a(1-e) = {b} is not nilpotent")),
    };
    let mut s = f;
    let mut term = f;
    for _ in 1..k {
        term = r.mul(term, b);
        s = r.add(s, term);
    }
    let w = ExchangeWitness { e, r: r.power_or_one(a, m as u64 - 1)?, s };
    w.check(r, a)?;
    Ok(w)
}

/// Composes a witness for `a` from an idempotent `e = x_e·a` and a primal
/// witness `(g, q, x)` for `faf` whose entries lie in the corner `fRf`,
/// `f = 1 − e`. Returns `(π, μ, 1 − z)` with `μ = q + fae`, `π = e + g`
/// and `π + μ = z·a`.
pub fn wncl_from_corner(r: &FiniteRing, a: Elem, e: Elem, x_e: Elem, corner: &WnclWitness) -> Result<WnclWitness> {
    let one = r.unity("wncl_from_corner")?;
    if !r.is_idempotent(e) {
        return Err(Error::NotIdempotent(e));
    }
    if r.mul(x_e, a) != e {
        return invalid(format!("x_e*a = {} differs from e = {e}", r.mul(x_e, a)));
    }
    if corner.form != WitnessForm::Primal {
        return invalid("corner witness must be in primal form");
    }
    let f = r.sub(one, e);
    let faf = r.mul3(f, a, f);
    let (g, q, x) = (corner.e, corner.q, corner.x);
    for (name, v) in [("g", g), ("q", q), ("x", x)] {
        if r.mul3(f, v, f) != v {
            return invalid(format!("{name} = {v} does not lie in fRf"));
        }
    }
    corner.check(r, faf)?;

    let fae = r.mul3(f, a, e);
    let mu = r.add(q, fae);
    let pi = r.add(e, g);
    if !r.is_idempotent(pi) {
        return internal(format!("pi = {pi} is not idempotent"));
    }
    let nq = r.nil_index(q).expect("checked above");
    let mut mu_n = mu;
    let mut q_prev = q;
    for _ in 2..=nq + 1 {
        mu_n = r.mul(mu_n, mu);
        let q_n = r.mul(q_prev, q);
        if mu_n != r.add(q_n, r.mul(q_prev, fae)) {
            return internal("mu^n differs from q^n + q^(n-1)fae");
        }
        q_prev = q_n;
    }
    if !r.is_nilpotent(mu) {
        return internal(format!("mu = {mu} is not nilpotent"));
    }
    if r.mul(r.sub(one, pi), r.sub(a, mu)) != r.zero() {
        return internal("(1-pi)(a-mu) is nonzero");
    }

    let ax = r.sub(one, r.mul(a, x_e));
    let f_ax = r.mul(f, ax);
    let z = r.sub(r.add(r.add(x_e, r.mul3(f, a, x_e)), f_ax), r.mul3(g, x, f_ax));
    if r.mul(z, a) != r.add(pi, mu) {
        return internal("pi + mu differs from z*a");
    }
    let w = WnclWitness::primal(pi, mu, r.sub(one, z));
    w.check(r, a).map_err(|err| Error::Internal(format!("corner composition failed: {err}")))?;
    Ok(w)
}

/// `e = r·a^n`, `f = 1 − e`, and `faf` is nilpotent; composes through
/// [`wncl_from_corner`] with the corner witness `(0, faf, 0)`.
pub fn wncl_from_pi_regular(r: &FiniteRing, a: Elem, w: &PiRegularWitness) -> Result<WnclWitness> {
    let one = r.unity("wncl_from_pi_regular")?;
    w.check(r, a)?;
    let e = r.mul(w.r, r.power(a, w.n as u64));
    let x_e = r.mul(w.r, r.power_or_one(a, w.n as u64 - 1)?);
    let f = r.sub(one, e);
    let faf = r.mul3(f, a, f);
    if !r.is_nilpotent(faf) {
        return internal(format!("faf = {faf} is not nilpotent"));
    }
    wncl_from_corner(r, a, e, x_e, &WnclWitness::primal(r.zero(), faf, r.zero()))
}

/// Turns a primal witness for `−a` into an alternate witness for `a`:
/// with `u = 1 + q`, returns `(u⁻¹eu, u⁻¹ − 1, −u⁻¹e(1 − ex))`.
pub fn primal_to_alternate(r: &FiniteRing, a: Elem, w_neg: &WnclWitness) -> Result<WnclWitness> {
    let one = r.unity("primal_to_alternate")?;
    if w_neg.form != WitnessForm::Primal {
        return invalid("expected a primal witness");
    }
    w_neg.check(r, r.neg(a))?;
    let (e, q, x) = (w_neg.e, w_neg.q, w_neg.x);
    let u = r.add(one, q);
    let u_inv = inverse_one_plus_nil(r, q)?;
    let e2 = r.mul3(u_inv, e, u);
    let x2 = r.neg(r.mul3(u_inv, e, r.sub(one, r.mul(e, x))));
    let out = WnclWitness::alternate(e2, r.sub(u_inv, one), x2);
    out.check(r, a).map_err(|err| Error::Internal(format!("form conversion failed: {err}")))?;
    Ok(out)
}

/// Inverse direction of [`primal_to_alternate`]: from an alternate witness
/// for `a`, a primal witness for `−a`.
pub fn alternate_to_primal(r: &FiniteRing, a: Elem, w: &WnclWitness) -> Result<WnclWitness> {
    let one = r.unity("alternate_to_primal")?;
    if w.form != WitnessForm::Alternate {
        return invalid("expected an alternate witness");
    }
    w.check(r, a)?;
    let v = r.add(one, w.q);
    let u = inverse_one_plus_nil(r, w.q)?;
    let e = r.mul3(u, w.e, v);
    let x = r.add(r.mul(u, w.x), one);
    let out = WnclWitness::primal(e, r.sub(u, one), x);
    out.check(r, r.neg(a)).map_err(|err| Error::Internal(format!("form conversion failed: {err}")))?;
    Ok(out)
}

fn require_nil(r: &FiniteRing, ideal: &Ideal) -> Result<()> {
    ideal.check(r)?;
    match ideal.members().iter().find(|&&m| !r.is_nilpotent(m)) {
        Some(&m) => Err(Error::NotNilIdeal(m)),
        None => Ok(()),
    }
}

fn require_idempotent_mod(r: &FiniteRing, ideal: &Ideal, x: Elem) -> Result<()> {
    r.elem(x.0 as u64)?;
    let defect = r.sub(r.mul(x, x), x);
    if !ideal.contains(defect) {
        return invalid(format!("x^2 - x = {defect} is not in the ideal"));
    }
    Ok(())
}

/// Idempotent congruent to `x` modulo the nil ideal, by iterating
/// `x ← 3x² − 2x³`; falls back to [`lift_idempotent_scan`] if the iteration
/// has not settled.
pub fn lift_idempotent(r: &FiniteRing, ideal: &Ideal, x: Elem) -> Result<Elem> {
    require_nil(r, ideal)?;
    require_idempotent_mod(r, ideal, x)?;
    let rounds = (usize::BITS - r.order().saturating_sub(1).leading_zeros()) as usize + 1;
    let mut y = x;
    for _ in 0..rounds {
        if r.is_idempotent(y) {
            break;
        }
        let y2 = r.mul(y, y);
        let y3 = r.mul(y2, y);
        y = r.sub(r.add(r.add(y2, y2), y2), r.add(y3, y3));
    }
    if r.is_idempotent(y) && ideal.contains(r.sub(y, x)) {
        return Ok(y);
    }
    lift_idempotent_scan(r, ideal, x)
}

/// Reference path: the smallest idempotent congruent to `x`.
pub fn lift_idempotent_scan(r: &FiniteRing, ideal: &Ideal, x: Elem) -> Result<Elem> {
    require_nil(r, ideal)?;
    require_idempotent_mod(r, ideal, x)?;
    match r.elements().find(|&e| r.is_idempotent(e) && ideal.contains(r.sub(e, x))) {
        Some(e) => Ok(e),
        None => internal(format!("no idempotent lifts {x}")),
    }
}

/// Lifts a primal witness for the coset of `a` in `R/I` to `R`.
pub fn lift_wncl_witness(qr: &QuotientRing, a: Elem, w: &WnclWitness) -> Result<WnclWitness> {
    let r = &qr.base;
    r.elem(a.0 as u64)?;
    require_nil(r, &qr.ideal)?;
    if w.form != WitnessForm::Primal {
        return invalid("expected a primal witness");
    }
    w.check(&qr.ring, qr.project(a))?;
    let e = lift_idempotent(r, &qr.ideal, qr.representative(w.e))?;
    let x = qr.representative(w.x);
    let q = r.sub(r.sub(a, e), r.mul3(e, x, a));
    if !r.is_nilpotent(q) {
        return internal(format!("lifted q = {q} is not nilpotent"));
    }
    let out = WnclWitness::primal(e, q, x);
    out.check(r, a)?;
    Ok(out)
}

fn require_abelian(r: &FiniteRing) -> Result<()> {
    match r.elements().find(|&e| r.is_idempotent(e) && !r.is_central(e)) {
        Some(e) => Err(Error::NotAbelian(e)),
        None => Ok(()),
    }
}

/// Reads an alternate witness for `a ∈ base` off an alternate witness for
/// `diag(a, 0, …, 0)` in the matrix ring: `e = E₁₁`, `x = X₁₁`,
/// `q = (1 − e)·Q₁₁`.
pub fn extract_from_matrix(base: &FiniteRing, matrix: &FiniteRing, a: Elem, w: &WnclWitness) -> Result<WnclWitness> {
    let one = base.unity("extract_from_matrix")?;
    base.elem(a.0 as u64)?;
    require_abelian(base)?;
    let is_matrix_over_base = matches!(
        (matrix.spec(), base.spec()),
        (Some(crate::construct::RingSpec::Matrix { base: b, .. }), Some(s)) if b.as_ref() == s
    );
    if !is_matrix_over_base {
        return invalid("second ring is not a matrix ring over the base");
    }
    if w.form != WitnessForm::Alternate {
        return invalid("matrix witness must be in alternate form");
    }
    let k2 = matrix.components(matrix.zero()).map_or(0, |c| c.len());
    let mut diag = vec![base.zero(); k2];
    diag[0] = a;
    let big_a = matrix.from_components(&diag).ok_or_else(|| Error::Internal("diag(a, 0, ...) out of range".into()))?;
    w.check(matrix, big_a)?;
    let entry = |m: Elem| matrix.components(m).expect("matrix layout")[0];
    let (e, alpha, x) = (entry(w.e), entry(w.q), entry(w.x));
    let f = base.sub(one, e);
    let q = base.mul(f, alpha);
    if !base.is_nilpotent(q) {
        return internal(format!("(1-e)*alpha = {q} is not nilpotent"));
    }
    let out = WnclWitness::alternate(e, q, x);
    out.check(base, a).map_err(|err| Error::Internal(format!("matrix extraction failed: {err}")))?;
    Ok(out)
}

/// Output of [`center_witness`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CenterExtraction {
    /// `(e, (1 − e)a, z)` in base-ring indices.
    pub in_ring: WnclWitness,
    /// The same witness re-indexed into the center ring.
    pub in_center: WnclWitness,
}

/// From `a = e + q + exa` with `a` central: `e = y·a` for
/// `y = e(1 − x)(1 + q)⁻¹`, `e` is central, and
/// `a = e + (1 − e)a + e·z·a` with `z = e − eye` central.
pub fn center_witness(r: &FiniteRing, center: &Subring, a: Elem, w: &WnclWitness) -> Result<CenterExtraction> {
    let one = r.unity("center_witness")?;
    r.elem(a.0 as u64)?;
    if !r.is_central(a) {
        return Err(Error::NotCentral(a));
    }
    if w.form != WitnessForm::Primal {
        return invalid("expected a primal witness");
    }
    w.check(r, a)?;
    let (e, q, x) = (w.e, w.q, w.x);
    let y = r.mul3(e, r.sub(one, x), inverse_one_plus_nil(r, q)?);
    if r.mul(y, a) != e {
        return internal("e differs from y*a");
    }
    let n = r.nil_index(q).expect("checked above");
    let (mut yk, mut ak) = (y, a);
    for k in 1..=n {
        if r.mul(yk, ak) != e {
            return internal(format!("e is not y^k*a^k for k = {k}"));
        }
        yk = r.mul(yk, y);
        ak = r.mul(ak, a);
    }
    let f = r.sub(one, e);
    let fa = r.mul(f, a);
    if r.power(fa, n as u64) != r.zero() {
        return internal("((1-e)a)^n is nonzero");
    }
    if !r.is_central(e) {
        return internal(format!("e = {e} is not central"));
    }
    let ea = r.mul(e, a);
    let u = r.mul3(e, y, e);
    if r.mul(u, ea) != e || r.mul(ea, u) != e {
        return internal("eye is not the inverse of ea in eRe");
    }
    let z = r.sub(e, u);
    if !r.is_central(z) {
        return internal(format!("z = {z} is not central"));
    }
    let in_ring = WnclWitness::primal(e, fa, z);
    in_ring.check(r, a).map_err(|err| Error::Internal(format!("center decomposition failed: {err}")))?;
    let locate = |v: Elem| center.locate(v).ok_or_else(|| Error::Internal(format!("{v} is not in the center ring")));
    let in_center = WnclWitness::primal(locate(e)?, locate(fa)?, locate(z)?);
    in_center.check(&center.ring, locate(a)?)?;
    Ok(CenterExtraction { in_ring, in_center })
}
