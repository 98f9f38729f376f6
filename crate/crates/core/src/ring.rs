//! The finite-ring abstraction.
//!
//! A [`FiniteRing`] is a set `{0, …, order−1}` of element indices with
//! addition, negation and multiplication. Small rings carry materialized
//! Cayley tables; larger ones compute products on demand from the layout
//! their constructor recorded (tuples of base-ring elements, cosets,
//! subsets).

use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::construct::RingSpec;
use crate::error::{Error, Result};
use crate::par;

/// Canonical identifier of an element inside one ring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct Elem(pub u32);

impl Elem {
    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Maximum number of base-ring digits in a tuple layout.
pub(crate) const MAX_DIGITS: usize = 32;

#[derive(Clone, Copy)]
struct Digits {
    len: usize,
    d: [u32; MAX_DIGITS],
}

impl Digits {
    fn zeroed(len: usize) -> Self {
        Digits { len, d: [0; MAX_DIGITS] }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum TupleKind {
    Product,
    Matrix { k: usize },
    Triangular { k: usize },
    PolyMod { n: usize },
    TrivialExt,
}

/// How element indices decompose, and therefore how to compute with them
/// when no table is materialized.
pub(crate) enum Layout {
    /// Raw tables with no further structure.
    Table,
    Cyclic {
        modulus: u32,
    },
    /// Mixed-radix tuple of base elements, first digit most significant.
    Tuple {
        kind: TupleKind,
        bases: Vec<FiniteRing>,
    },
    Opposite {
        base: FiniteRing,
    },
    /// Cosets ordered by their smallest member.
    Quotient {
        base: FiniteRing,
        reps: Vec<Elem>,
        coset_of: Vec<u32>,
    },
    /// A subset of the base closed under the ring operations.
    Subset {
        base: FiniteRing,
        members: Vec<Elem>,
        position: Vec<u32>,
    },
}

impl Layout {
    fn tuple_len(kind: TupleKind, bases: &[FiniteRing]) -> usize {
        match kind {
            TupleKind::Product => bases.len(),
            TupleKind::Matrix { k } => k * k,
            TupleKind::Triangular { k } => k * (k + 1) / 2,
            TupleKind::PolyMod { n } => n,
            TupleKind::TrivialExt => 2,
        }
    }

    #[inline]
    fn digit_base(kind: TupleKind, bases: &[FiniteRing], i: usize) -> &FiniteRing {
        match kind {
            TupleKind::Product => &bases[i],
            _ => &bases[0],
        }
    }

    fn decode(kind: TupleKind, bases: &[FiniteRing], idx: u32) -> Digits {
        let len = Self::tuple_len(kind, bases);
        let mut out = Digits::zeroed(len);
        let mut rest = idx as u64;
        for i in (0..len).rev() {
            let radix = Self::digit_base(kind, bases, i).order() as u64;
            out.d[i] = (rest % radix) as u32;
            rest /= radix;
        }
        out
    }

    fn encode(kind: TupleKind, bases: &[FiniteRing], digits: &Digits) -> Elem {
        let mut idx: u64 = 0;
        for i in 0..digits.len {
            let radix = Self::digit_base(kind, bases, i).order() as u64;
            idx = idx * radix + digits.d[i] as u64;
        }
        Elem(idx as u32)
    }

    fn add(&self, a: Elem, b: Elem) -> Elem {
        match self {
            Layout::Table => unreachable!("table rings always carry tables"),
            Layout::Cyclic { modulus } => Elem(((a.0 as u64 + b.0 as u64) % *modulus as u64) as u32),
            Layout::Tuple { kind, bases } => {
                let x = Self::decode(*kind, bases, a.0);
                let y = Self::decode(*kind, bases, b.0);
                let mut z = Digits::zeroed(x.len);
                for i in 0..x.len {
                    let r = Self::digit_base(*kind, bases, i);
                    z.d[i] = r.add(Elem(x.d[i]), Elem(y.d[i])).0;
                }
                Self::encode(*kind, bases, &z)
            }
            Layout::Opposite { base } => base.add(a, b),
            Layout::Quotient { base, reps, coset_of } => {
                Elem(coset_of[base.add(reps[a.index()], reps[b.index()]).index()])
            }
            Layout::Subset { base, members, position } => {
                Elem(position[base.add(members[a.index()], members[b.index()]).index()])
            }
        }
    }

    fn neg(&self, a: Elem) -> Elem {
        match self {
            Layout::Table => unreachable!("table rings always carry tables"),
            Layout::Cyclic { modulus } => Elem((*modulus - a.0) % *modulus),
            Layout::Tuple { kind, bases } => {
                let mut x = Self::decode(*kind, bases, a.0);
                for i in 0..x.len {
                    x.d[i] = Self::digit_base(*kind, bases, i).neg(Elem(x.d[i])).0;
                }
                Self::encode(*kind, bases, &x)
            }
            Layout::Opposite { base } => base.neg(a),
            Layout::Quotient { base, reps, coset_of } => Elem(coset_of[base.neg(reps[a.index()]).index()]),
            Layout::Subset { base, members, position } => Elem(position[base.neg(members[a.index()]).index()]),
        }
    }

    fn mul(&self, a: Elem, b: Elem) -> Elem {
        match self {
            Layout::Table => unreachable!("table rings always carry tables"),
            Layout::Cyclic { modulus } => Elem(((a.0 as u64 * b.0 as u64) % *modulus as u64) as u32),
            Layout::Tuple { kind, bases } => {
                let x = Self::decode(*kind, bases, a.0);
                let y = Self::decode(*kind, bases, b.0);
                let z = tuple_mul(*kind, bases, &x, &y);
                Self::encode(*kind, bases, &z)
            }
            Layout::Opposite { base } => base.mul(b, a),
            Layout::Quotient { base, reps, coset_of } => {
                Elem(coset_of[base.mul(reps[a.index()], reps[b.index()]).index()])
            }
            Layout::Subset { base, members, position } => {
                Elem(position[base.mul(members[a.index()], members[b.index()]).index()])
            }
        }
    }
}

/// Position of entry `(i, j)`, `i <= j`, in the row-major list of stored
/// upper-triangular entries of a `k × k` matrix.
pub(crate) fn triangular_slot(k: usize, i: usize, j: usize) -> usize {
    i * k - i * i.saturating_sub(1) / 2 + j - i
}

fn tuple_mul(kind: TupleKind, bases: &[FiniteRing], x: &Digits, y: &Digits) -> Digits {
    let mut z = Digits::zeroed(x.len);
    match kind {
        TupleKind::Product => {
            for (i, b) in bases.iter().enumerate().take(x.len) {
                z.d[i] = b.mul(Elem(x.d[i]), Elem(y.d[i])).0;
            }
        }
        TupleKind::Matrix { k } => {
            let r = &bases[0];
            for i in 0..k {
                for j in 0..k {
                    let mut acc = r.zero();
                    for l in 0..k {
                        acc = r.add(acc, r.mul(Elem(x.d[i * k + l]), Elem(y.d[l * k + j])));
                    }
                    z.d[i * k + j] = acc.0;
                }
            }
        }
        TupleKind::Triangular { k } => {
            let r = &bases[0];
            for i in 0..k {
                for j in i..k {
                    let mut acc = r.zero();
                    for l in i..=j {
                        let p = r.mul(Elem(x.d[triangular_slot(k, i, l)]), Elem(y.d[triangular_slot(k, l, j)]));
                        acc = r.add(acc, p);
                    }
                    z.d[triangular_slot(k, i, j)] = acc.0;
                }
            }
        }
        TupleKind::PolyMod { n } => {
            let r = &bases[0];
            for deg in 0..n {
                let mut acc = r.zero();
                for i in 0..=deg {
                    acc = r.add(acc, r.mul(Elem(x.d[i]), Elem(y.d[deg - i])));
                }
                z.d[deg] = acc.0;
            }
        }
        TupleKind::TrivialExt => {
            let r = &bases[0];
            let (a, m) = (Elem(x.d[0]), Elem(x.d[1]));
            let (b, n) = (Elem(y.d[0]), Elem(y.d[1]));
            z.d[0] = r.mul(a, b).0;
            z.d[1] = r.add(r.mul(a, n), r.mul(m, b)).0;
        }
    }
    z
}

pub(crate) struct Tables {
    add: Vec<u32>,
    mul: Vec<u32>,
    neg: Vec<u32>,
}

pub(crate) struct RingInner {
    order: usize,
    layout: Layout,
    tables: Option<Tables>,
    zero: Elem,
    one: Option<Elem>,
    spec: Option<RingSpec>,
}

/// A concrete finite ring. Cloning is cheap; the data is shared.
#[derive(Clone)]
pub struct FiniteRing(Arc<RingInner>);

impl fmt::Debug for FiniteRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteRing")
            .field("order", &self.0.order)
            .field("unital", &self.is_unital())
            .field("spec", &self.0.spec.as_ref().map(|s| s.to_string()))
            .finish()
    }
}

impl FiniteRing {
    /// Wraps raw operation tables (row-major `order × order` for `add` and
    /// `mul`). Entries are range-checked; the ring axioms are not, see
    /// [`validate_axioms`].
    pub fn from_tables(
        order: usize,
        add: Vec<u32>,
        mul: Vec<u32>,
        neg: Vec<u32>,
        zero: Elem,
        one: Option<Elem>,
    ) -> Result<Self> {
        if order == 0 {
            return Err(Error::MalformedSpec("a ring needs at least one element".into()));
        }
        if add.len() != order * order || mul.len() != order * order || neg.len() != order {
            return Err(Error::MalformedSpec("operation tables have the wrong shape".into()));
        }
        let in_range = |v: &u32| (*v as usize) < order;
        if !add.iter().all(in_range) || !mul.iter().all(in_range) || !neg.iter().all(in_range) {
            return Err(Error::MalformedSpec("operation table entry out of range".into()));
        }
        if zero.index() >= order || one.is_some_and(|e| e.index() >= order) {
            return Err(Error::MalformedSpec("distinguished element out of range".into()));
        }
        Ok(FiniteRing(Arc::new(RingInner {
            order,
            layout: Layout::Table,
            tables: Some(Tables { add, mul, neg }),
            zero,
            one,
            spec: None,
        })))
    }

    pub(crate) fn from_layout(
        order: usize,
        layout: Layout,
        zero: Elem,
        one: Option<Elem>,
        spec: Option<RingSpec>,
        table_limit: usize,
    ) -> Self {
        let mut inner = RingInner { order, layout, tables: None, zero, one, spec };
        if order <= table_limit {
            inner.tables = Some(materialize(&inner));
        }
        FiniteRing(Arc::new(inner))
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.0.order
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> + Clone {
        (0..self.0.order as u32).map(Elem)
    }

    /// Range-checked element constructor.
    pub fn elem(&self, index: u64) -> Result<Elem> {
        if index < self.0.order as u64 {
            Ok(Elem(index as u32))
        } else {
            Err(Error::ElementOutOfRange { index, order: self.0.order })
        }
    }

    pub fn spec(&self) -> Option<&RingSpec> {
        self.0.spec.as_ref()
    }

    /// Spec rendered in the textual grammar, or `"<table>"` for raw rings.
    pub fn spec_string(&self) -> String {
        self.0.spec.as_ref().map_or_else(|| "<table>".to_string(), |s| s.to_string())
    }

    pub fn has_tables(&self) -> bool {
        self.0.tables.is_some()
    }

    #[inline]
    pub fn zero(&self) -> Elem {
        self.0.zero
    }

    #[inline]
    pub fn one(&self) -> Option<Elem> {
        self.0.one
    }

    #[inline]
    pub fn is_unital(&self) -> bool {
        self.0.one.is_some()
    }

    /// The unity, or [`Error::NonUnital`] naming the operation that needed it.
    pub fn unity(&self, op: &'static str) -> Result<Elem> {
        self.0.one.ok_or(Error::NonUnital { op })
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        match &self.0.tables {
            Some(t) => Elem(t.add[a.index() * self.0.order + b.index()]),
            None => self.0.layout.add(a, b),
        }
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        match &self.0.tables {
            Some(t) => Elem(t.neg[a.index()]),
            None => self.0.layout.neg(a),
        }
    }

    #[inline]
    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        match &self.0.tables {
            Some(t) => Elem(t.mul[a.index() * self.0.order + b.index()]),
            None => self.0.layout.mul(a, b),
        }
    }

    #[inline]
    pub fn mul3(&self, a: Elem, b: Elem, c: Elem) -> Elem {
        self.mul(self.mul(a, b), c)
    }

    /// `a^k` for `k >= 1`, by repeated squaring.
    pub fn power(&self, a: Elem, k: u64) -> Elem {
        assert!(k >= 1, "power exponent must be positive");
        let mut acc: Option<Elem> = None;
        let mut base = a;
        let mut k = k;
        loop {
            if k & 1 == 1 {
                acc = Some(match acc {
                    Some(x) => self.mul(x, base),
                    None => base,
                });
            }
            k >>= 1;
            if k == 0 {
                break;
            }
            base = self.mul(base, base);
        }
        acc.expect("k >= 1")
    }

    /// `a^k` with `a^0 = 1`; requires a unity when `k == 0`.
    pub(crate) fn power_or_one(&self, a: Elem, k: u64) -> Result<Elem> {
        if k == 0 {
            self.unity("zeroth power")
        } else {
            Ok(self.power(a, k))
        }
    }

    /// Smallest `(i, p)` with `a^i = a^{i+p}`, both at least 1.
    pub fn power_trajectory(&self, a: Elem) -> Trajectory {
        // Brent's cycle detection over x_t = a^{t+1}.
        let step = |x: Elem| self.mul(x, a);
        let mut power = 1usize;
        let mut lam = 1usize;
        let mut tortoise = a;
        let mut hare = step(a);
        while tortoise != hare {
            if power == lam {
                tortoise = hare;
                power *= 2;
                lam = 0;
            }
            hare = step(hare);
            lam += 1;
        }
        let mut tortoise = a;
        let mut hare = a;
        for _ in 0..lam {
            hare = step(hare);
        }
        let mut mu = 0usize;
        while tortoise != hare {
            tortoise = step(tortoise);
            hare = step(hare);
            mu += 1;
        }
        Trajectory { preperiod: mu + 1, period: lam }
    }

    /// Smallest `k` with `a^k = 0`, if `a` is nilpotent.
    pub fn nil_index(&self, a: Elem) -> Option<usize> {
        let t = self.power_trajectory(a);
        (t.period == 1 && self.power(a, t.preperiod as u64) == self.zero()).then_some(t.preperiod)
    }

    pub fn is_nilpotent(&self, a: Elem) -> bool {
        self.nil_index(a).is_some()
    }

    pub fn is_idempotent(&self, a: Elem) -> bool {
        self.mul(a, a) == a
    }

    pub fn commutes(&self, a: Elem, b: Elem) -> bool {
        self.mul(a, b) == self.mul(b, a)
    }

    pub fn is_central(&self, a: Elem) -> bool {
        self.elements().all(|r| self.commutes(a, r))
    }

    /// Base-ring components of an element of a tuple-shaped ring (product,
    /// matrix, triangular, truncated polynomial, trivial extension), in
    /// enumeration order.
    pub fn components(&self, a: Elem) -> Option<Vec<Elem>> {
        match &self.0.layout {
            Layout::Tuple { kind, bases } => {
                let x = Layout::decode(*kind, bases, a.0);
                Some((0..x.len).map(|i| Elem(x.d[i])).collect())
            }
            _ => None,
        }
    }

    /// Inverse of [`FiniteRing::components`].
    pub fn from_components(&self, parts: &[Elem]) -> Option<Elem> {
        match &self.0.layout {
            Layout::Tuple { kind, bases } => {
                let len = Layout::tuple_len(*kind, bases);
                if parts.len() != len {
                    return None;
                }
                let mut x = Digits::zeroed(len);
                for (i, p) in parts.iter().enumerate() {
                    if p.index() >= Layout::digit_base(*kind, bases, i).order() {
                        return None;
                    }
                    x.d[i] = p.0;
                }
                Some(Layout::encode(*kind, bases, &x))
            }
            _ => None,
        }
    }

    /// Base rings of a tuple layout (one per product factor, otherwise a
    /// single coefficient ring).
    pub fn component_rings(&self) -> Option<&[FiniteRing]> {
        match &self.0.layout {
            Layout::Tuple { bases, .. } => Some(bases),
            _ => None,
        }
    }

    /// Human-readable form of an element following the constructor layout.
    pub fn render(&self, a: Elem) -> String {
        match &self.0.layout {
            Layout::Table => a.to_string(),
            Layout::Cyclic { .. } => a.to_string(),
            Layout::Tuple { kind, bases } => {
                let x = Layout::decode(*kind, bases, a.0);
                let part = |i: usize| Layout::digit_base(*kind, bases, i).render(Elem(x.d[i]));
                match kind {
                    TupleKind::Product | TupleKind::TrivialExt => {
                        let parts: Vec<String> = (0..x.len).map(part).collect();
                        format!("({})", parts.join(","))
                    }
                    TupleKind::Matrix { k } => {
                        let rows: Vec<String> = (0..*k)
                            .map(|i| {
                                let row: Vec<String> = (0..*k).map(|j| part(i * k + j)).collect();
                                format!("[{}]", row.join(","))
                            })
                            .collect();
                        format!("[{}]", rows.join(","))
                    }
                    TupleKind::Triangular { k } => {
                        let zero = bases[0].render(bases[0].zero());
                        let rows: Vec<String> = (0..*k)
                            .map(|i| {
                                let row: Vec<String> = (0..*k)
                                    .map(|j| if j < i { zero.clone() } else { part(triangular_slot(*k, i, j)) })
                                    .collect();
                                format!("[{}]", row.join(","))
                            })
                            .collect();
                        format!("[{}]", rows.join(","))
                    }
                    TupleKind::PolyMod { .. } => {
                        let r = &bases[0];
                        let terms: Vec<String> = (0..x.len)
                            .filter(|&i| Elem(x.d[i]) != r.zero())
                            .map(|i| match i {
                                0 => part(0),
                                1 => format!("{}*x", part(1)),
                                _ => format!("{}*x^{}", part(i), i),
                            })
                            .collect();
                        if terms.is_empty() {
                            part(0)
                        } else {
                            terms.join("+")
                        }
                    }
                }
            }
            Layout::Opposite { base } => base.render(a),
            Layout::Quotient { base, reps, .. } => format!("[{}]", base.render(reps[a.index()])),
            Layout::Subset { base, members, .. } => base.render(members[a.index()]),
        }
    }
}

fn materialize(inner: &RingInner) -> Tables {
    let n = inner.order;
    let layout = &inner.layout;
    let rows: Vec<(Vec<u32>, Vec<u32>)> = par::map_range(n, |a| {
        let a = Elem(a as u32);
        let add = (0..n as u32).map(|b| layout.add(a, Elem(b)).0).collect();
        let mul = (0..n as u32).map(|b| layout.mul(a, Elem(b)).0).collect();
        (add, mul)
    });
    let mut add = Vec::with_capacity(n * n);
    let mut mul = Vec::with_capacity(n * n);
    for (ra, rm) in rows {
        add.extend(ra);
        mul.extend(rm);
    }
    let neg = (0..n as u32).map(|a| layout.neg(Elem(a)).0).collect();
    Tables { add, mul, neg }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Trajectory {
    pub preperiod: usize,
    pub period: usize,
}

impl Trajectory {
    /// Exponent bound used by the π-regularity searches.
    pub fn horizon(&self) -> usize {
        self.preperiod + self.period
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Axiom {
    AdditiveIdentity,
    AdditiveInverse,
    AdditiveCommutativity,
    AdditiveAssociativity,
    MultiplicativeAssociativity,
    LeftDistributivity,
    RightDistributivity,
    ZeroAbsorption,
    Unity,
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Axiom::AdditiveIdentity => "additive identity",
            Axiom::AdditiveInverse => "additive inverse",
            Axiom::AdditiveCommutativity => "additive commutativity",
            Axiom::AdditiveAssociativity => "additive associativity",
            Axiom::MultiplicativeAssociativity => "multiplicative associativity",
            Axiom::LeftDistributivity => "left distributivity",
            Axiom::RightDistributivity => "right distributivity",
            Axiom::ZeroAbsorption => "zero absorption",
            Axiom::Unity => "unity",
        };
        f.write_str(s)
    }
}

/// First failing axiom together with the elements that witness the failure.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AxiomViolation {
    pub axiom: Axiom,
    pub elements: Vec<Elem>,
}

impl fmt::Display for AxiomViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let els: Vec<String> = self.elements.iter().map(|e| e.to_string()).collect();
        write!(f, "{} fails at ({})", self.axiom, els.join(", "))
    }
}

impl AxiomViolation {
    /// Re-evaluates the recorded elements; true when they still violate the axiom.
    pub fn recheck(&self, r: &FiniteRing) -> bool {
        let e = &self.elements;
        match self.axiom {
            Axiom::AdditiveIdentity => r.add(r.zero(), e[0]) != e[0] || r.add(e[0], r.zero()) != e[0],
            Axiom::AdditiveInverse => r.add(e[0], r.neg(e[0])) != r.zero(),
            Axiom::AdditiveCommutativity => r.add(e[0], e[1]) != r.add(e[1], e[0]),
            Axiom::AdditiveAssociativity => r.add(r.add(e[0], e[1]), e[2]) != r.add(e[0], r.add(e[1], e[2])),
            Axiom::MultiplicativeAssociativity => r.mul(r.mul(e[0], e[1]), e[2]) != r.mul(e[0], r.mul(e[1], e[2])),
            Axiom::LeftDistributivity => r.mul(e[0], r.add(e[1], e[2])) != r.add(r.mul(e[0], e[1]), r.mul(e[0], e[2])),
            Axiom::RightDistributivity => r.mul(r.add(e[0], e[1]), e[2]) != r.add(r.mul(e[0], e[2]), r.mul(e[1], e[2])),
            Axiom::ZeroAbsorption => r.mul(r.zero(), e[0]) != r.zero() || r.mul(e[0], r.zero()) != r.zero(),
            Axiom::Unity => match r.one() {
                Some(one) => r.mul(one, e[0]) != e[0] || r.mul(e[0], one) != e[0],
                None => false,
            },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AxiomVerdict {
    Ok,
    Failed(AxiomViolation),
}

impl AxiomVerdict {
    pub fn is_ok(&self) -> bool {
        matches!(self, AxiomVerdict::Ok)
    }
}

/// Exhaustive check of the ring axioms. Cubic in the order.
pub fn validate_axioms(r: &FiniteRing) -> AxiomVerdict {
    let n = r.order();
    let fail = |axiom, elements: Vec<Elem>| AxiomVerdict::Failed(AxiomViolation { axiom, elements });

    for a in r.elements() {
        for axiom in [Axiom::AdditiveIdentity, Axiom::AdditiveInverse] {
            let v = AxiomViolation { axiom, elements: vec![a] };
            if v.recheck(r) {
                return AxiomVerdict::Failed(v);
            }
        }
    }
    let pair = |axiom: Axiom| {
        par::find_first_range(n, |a| {
            let a = Elem(a as u32);
            r.elements().find_map(|b| {
                let v = AxiomViolation { axiom, elements: vec![a, b] };
                v.recheck(r).then_some(v)
            })
        })
    };
    if let Some(v) = pair(Axiom::AdditiveCommutativity) {
        return AxiomVerdict::Failed(v);
    }
    let triple = |axiom: Axiom| {
        par::find_first_range(n, |a| {
            let a = Elem(a as u32);
            r.elements().find_map(|b| {
                r.elements().find_map(|c| {
                    let v = AxiomViolation { axiom, elements: vec![a, b, c] };
                    v.recheck(r).then_some(v)
                })
            })
        })
    };
    for axiom in [
        Axiom::AdditiveAssociativity,
        Axiom::MultiplicativeAssociativity,
        Axiom::LeftDistributivity,
        Axiom::RightDistributivity,
    ] {
        if let Some(v) = triple(axiom) {
            return AxiomVerdict::Failed(v);
        }
    }
    for a in r.elements() {
        for axiom in [Axiom::ZeroAbsorption, Axiom::Unity] {
            let v = AxiomViolation { axiom, elements: vec![a] };
            if v.recheck(r) {
                return fail(axiom, vec![a]);
            }
        }
    }
    AxiomVerdict::Ok
}
