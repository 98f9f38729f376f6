//! Certificates for the element-wise properties. Every witness can be
//! re-checked with a handful of ring operations and rendered as a trace of
//! the products and sums involved.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ring::{Elem, FiniteRing};

fn invalid<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::InvalidWitness(msg.into()))
}

fn in_range(r: &FiniteRing, els: &[Elem]) -> Result<()> {
    for &x in els {
        r.elem(x.0 as u64)?;
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum WitnessForm {
    /// `a − e − q = e·x·a`.
    Primal,
    /// `e = x·a` idempotent and `1 − e = (1 − e)(1 + q)(1 − a)`.
    Alternate,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct WnclWitness {
    pub e: Elem,
    pub q: Elem,
    pub x: Elem,
    pub form: WitnessForm,
}

impl WnclWitness {
    pub fn primal(e: Elem, q: Elem, x: Elem) -> Self {
        WnclWitness { e, q, x, form: WitnessForm::Primal }
    }

    pub fn alternate(e: Elem, q: Elem, x: Elem) -> Self {
        WnclWitness { e, q, x, form: WitnessForm::Alternate }
    }

    pub fn check(&self, r: &FiniteRing, a: Elem) -> Result<()> {
        in_range(r, &[a, self.e, self.q, self.x])?;
        if !r.is_nilpotent(self.q) {
            return invalid(format!("q = {} is not nilpotent", self.q));
        }
        match self.form {
            WitnessForm::Primal => {
                if !r.is_idempotent(self.e) {
                    return invalid(format!("e = {} is not idempotent", self.e));
                }
                let lhs = r.sub(r.sub(a, self.e), self.q);
                let rhs = r.mul3(self.e, self.x, a);
                if lhs != rhs {
                    return invalid(format!("a - e - q = {lhs} but e*x*a = {rhs}"));
                }
            }
            WitnessForm::Alternate => {
                let one = r.unity("alternate weakly nil clean form")?;
                if r.mul(self.x, a) != self.e {
                    return invalid(format!("x*a = {} differs from e = {}", r.mul(self.x, a), self.e));
                }
                if !r.is_idempotent(self.e) {
                    return invalid(format!("e = {} is not idempotent", self.e));
                }
                let f = r.sub(one, self.e);
                let rhs = r.mul3(f, r.add(one, self.q), r.sub(one, a));
                if rhs != f {
                    return invalid(format!("1 - e = {f} but (1-e)(1+q)(1-a) = {rhs}"));
                }
            }
        }
        Ok(())
    }

    pub fn trace(&self, r: &FiniteRing, a: Elem) -> Vec<String> {
        let (e, q, x) = (self.e, self.q, self.x);
        let mut out = vec![
            format!("e*e = {}*{} = {}", e, e, r.mul(e, e)),
            format!("q^{} = 0 (nil index of q = {})", r.nil_index(q).unwrap_or(0), q),
        ];
        match self.form {
            WitnessForm::Primal => {
                let ex = r.mul(e, x);
                out.push(format!("a - e - q = {} - {} - {} = {}", a, e, q, r.sub(r.sub(a, e), q)));
                out.push(format!("e*x*a = {}*{}*{} = {}*{} = {}", e, x, a, ex, a, r.mul(ex, a)));
            }
            WitnessForm::Alternate => {
                out.push(format!("x*a = {}*{} = {}", x, a, r.mul(x, a)));
                if let Some(one) = r.one() {
                    let f = r.sub(one, e);
                    let u = r.add(one, q);
                    let b = r.sub(one, a);
                    let fu = r.mul(f, u);
                    out.push(format!("1 - e = {f}, 1 + q = {u}, 1 - a = {b}"));
                    out.push(format!("(1-e)(1+q)(1-a) = {}*{}*{} = {}*{} = {}", f, u, b, fu, b, r.mul(fu, b)));
                }
            }
        }
        out
    }
}

/// `a^n·r·a^n = a^n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PiRegularWitness {
    pub n: usize,
    pub r: Elem,
}

impl PiRegularWitness {
    pub fn check(&self, ring: &FiniteRing, a: Elem) -> Result<()> {
        in_range(ring, &[a, self.r])?;
        if self.n == 0 {
            return invalid("exponent must be positive");
        }
        let an = ring.power(a, self.n as u64);
        let lhs = ring.mul3(an, self.r, an);
        if lhs != an {
            return invalid(format!("a^n*r*a^n = {lhs} but a^n = {an}"));
        }
        Ok(())
    }

    pub fn trace(&self, ring: &FiniteRing, a: Elem) -> Vec<String> {
        let an = ring.power(a, self.n as u64);
        let anr = ring.mul(an, self.r);
        vec![
            format!("a^{} = {}^{} = {}", self.n, a, self.n, an),
            format!("a^n*r*a^n = {}*{}*{} = {}*{} = {}", an, self.r, an, anr, an, ring.mul(anr, an)),
        ]
    }
}

/// `a^n = a^{n+1}·r`, with the idempotent `e` of the Fitting decomposition:
/// `e` commutes with `a`, `a·e` is a unit of `eRe` and `a·(1 − e)` is
/// nilpotent.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct StrongPiWitness {
    pub n: usize,
    pub r: Elem,
    pub e: Elem,
}

impl StrongPiWitness {
    pub fn check(&self, ring: &FiniteRing, a: Elem) -> Result<()> {
        in_range(ring, &[a, self.r, self.e])?;
        let one = ring.unity("strong pi-regular witness")?;
        check_right_exponent(ring, a, self.n, self.r)?;
        let e = self.e;
        if !ring.is_idempotent(e) {
            return invalid(format!("e = {e} is not idempotent"));
        }
        if !ring.commutes(a, e) {
            return invalid(format!("e = {e} does not commute with a"));
        }
        if !is_corner_unit(ring, ring.mul(a, e), e) {
            return invalid(format!("a*e = {} is not a unit of eRe", ring.mul(a, e)));
        }
        let rest = ring.mul(a, ring.sub(one, e));
        if !ring.is_nilpotent(rest) {
            return invalid(format!("a*(1-e) = {rest} is not nilpotent"));
        }
        Ok(())
    }

    pub fn trace(&self, ring: &FiniteRing, a: Elem) -> Vec<String> {
        let an = ring.power(a, self.n as u64);
        let an1 = ring.mul(an, a);
        let mut out = vec![
            format!("a^{} = {}", self.n, an),
            format!("a^(n+1)*r = {}*{} = {}", an1, self.r, ring.mul(an1, self.r)),
            format!("e*e = {}, a*e = {}, e*a = {}", ring.mul(self.e, self.e), ring.mul(a, self.e), ring.mul(self.e, a)),
        ];
        if let Some(one) = ring.one() {
            let rest = ring.mul(a, ring.sub(one, self.e));
            out.push(format!("a*(1-e) = {} with nil index {}", rest, ring.nil_index(rest).unwrap_or(0)));
        }
        out
    }
}

pub(crate) fn check_right_exponent(ring: &FiniteRing, a: Elem, n: usize, r: Elem) -> Result<()> {
    if n == 0 {
        return invalid("exponent must be positive");
    }
    let an = ring.power(a, n as u64);
    let rhs = ring.mul(ring.mul(an, a), r);
    if an != rhs {
        return invalid(format!("a^n = {an} but a^(n+1)*r = {rhs}"));
    }
    Ok(())
}

/// Whether `u ∈ eRe` has an inverse in `eRe`. The powers of `u` form an
/// eventually periodic sequence; `u` is a corner unit exactly when the
/// sequence is purely periodic and returns to `e`.
pub(crate) fn is_corner_unit(ring: &FiniteRing, u: Elem, e: Elem) -> bool {
    if ring.mul(e, u) != u || ring.mul(u, e) != u {
        return false;
    }
    let t = ring.power_trajectory(u);
    t.preperiod == 1 && ring.power(u, t.period as u64) == e
}

/// `e = r·a` idempotent and `1 − e = s·(1 − a)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ExchangeWitness {
    pub e: Elem,
    pub r: Elem,
    pub s: Elem,
}

impl ExchangeWitness {
    pub fn check(&self, ring: &FiniteRing, a: Elem) -> Result<()> {
        in_range(ring, &[a, self.e, self.r, self.s])?;
        let one = ring.unity("exchange witness")?;
        if !ring.is_idempotent(self.e) {
            return invalid(format!("e = {} is not idempotent", self.e));
        }
        if ring.mul(self.r, a) != self.e {
            return invalid(format!("r*a = {} differs from e = {}", ring.mul(self.r, a), self.e));
        }
        let f = ring.sub(one, self.e);
        let rhs = ring.mul(self.s, ring.sub(one, a));
        if rhs != f {
            return invalid(format!("1 - e = {f} but s*(1-a) = {rhs}"));
        }
        Ok(())
    }

    pub fn trace(&self, ring: &FiniteRing, a: Elem) -> Vec<String> {
        let mut out = vec![format!("r*a = {}*{} = {}", self.r, a, ring.mul(self.r, a))];
        if let Some(one) = ring.one() {
            let b = ring.sub(one, a);
            out.push(format!("1 - e = {}", ring.sub(one, self.e)));
            out.push(format!("s*(1-a) = {}*{} = {}", self.s, b, ring.mul(self.s, b)));
        }
        out
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SumKind {
    Unit,
    Nilpotent,
}

/// `a = e + second` with `second` a unit (clean) or nilpotent (nil clean).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SumWitness {
    pub e: Elem,
    pub second: Elem,
    pub kind: SumKind,
}

impl SumWitness {
    pub fn check(&self, ring: &FiniteRing, a: Elem) -> Result<()> {
        in_range(ring, &[a, self.e, self.second])?;
        if !ring.is_idempotent(self.e) {
            return invalid(format!("e = {} is not idempotent", self.e));
        }
        if ring.add(self.e, self.second) != a {
            return invalid(format!("e + second = {} differs from a", ring.add(self.e, self.second)));
        }
        match self.kind {
            SumKind::Nilpotent if !ring.is_nilpotent(self.second) => {
                invalid(format!("{} is not nilpotent", self.second))
            }
            SumKind::Unit => {
                let one = ring.unity("clean witness")?;
                let t = ring.power_trajectory(self.second);
                if t.preperiod == 1 && ring.power(self.second, t.period as u64) == one {
                    Ok(())
                } else {
                    invalid(format!("{} is not a unit", self.second))
                }
            }
            SumKind::Nilpotent => Ok(()),
        }
    }

    pub fn trace(&self, ring: &FiniteRing, a: Elem) -> Vec<String> {
        let mut out =
            vec![format!("e + second = {} + {} = {} (a = {})", self.e, self.second, ring.add(self.e, self.second), a)];
        match self.kind {
            SumKind::Nilpotent => {
                out.push(format!("nil index of {} is {}", self.second, ring.nil_index(self.second).unwrap_or(0)))
            }
            SumKind::Unit => {
                let t = ring.power_trajectory(self.second);
                let inv = if t.period == 1 { self.second } else { ring.power(self.second, t.period as u64 - 1) };
                out.push(format!("{}*{} = {}", self.second, inv, ring.mul(self.second, inv)));
            }
        }
        out
    }
}

/// `a = a²·r`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct StronglyRegularWitness {
    pub r: Elem,
}

impl StronglyRegularWitness {
    pub fn check(&self, ring: &FiniteRing, a: Elem) -> Result<()> {
        in_range(ring, &[a, self.r])?;
        let rhs = ring.mul3(a, a, self.r);
        if rhs != a {
            return invalid(format!("a^2*r = {rhs} differs from a"));
        }
        Ok(())
    }

    pub fn trace(&self, ring: &FiniteRing, a: Elem) -> Vec<String> {
        let a2 = ring.mul(a, a);
        vec![format!("a^2*r = {}*{} = {}", a2, self.r, ring.mul(a2, self.r))]
    }
}
