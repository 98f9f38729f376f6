//! Ring constructors and the expression language describing them.

mod grammar;

use crate::error::{Error, Result};
use crate::ring::{validate_axioms, AxiomVerdict, Elem, FiniteRing, Layout, TupleKind, MAX_DIGITS};
use crate::structure::{center, ideal_generated, ideal_generators, Ideal};

/// How a finite ring is assembled from smaller ones.
///
/// Element enumeration is fixed per constructor: `Zn` by residue; tuple
/// constructors lexicographically with the first component most significant
/// (products by factor, matrices row-major, triangular matrices row-major
/// over the stored upper entries, truncated polynomials constant term first,
/// trivial extensions as `(ring, module)`); subrings and quotients by their
/// smallest base index.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum RingSpec {
    Zn(u32),
    Product(Vec<RingSpec>),
    Matrix {
        k: usize,
        base: Box<RingSpec>,
    },
    Triangular {
        k: usize,
        base: Box<RingSpec>,
    },
    PolyMod {
        base: Box<RingSpec>,
        n: usize,
    },
    /// `R ⊕ R` with `(a,x)(b,y) = (ab, ay + xb)`.
    TrivialExt(Box<RingSpec>),
    Quotient {
        base: Box<RingSpec>,
        generators: Vec<u32>,
    },
    Corner {
        base: Box<RingSpec>,
        e: u32,
    },
    Opposite(Box<RingSpec>),
    IdealRing {
        base: Box<RingSpec>,
        generators: Vec<u32>,
    },
    Center(Box<RingSpec>),
}

impl RingSpec {
    pub fn zn(n: u32) -> Self {
        RingSpec::Zn(n)
    }

    pub fn product(parts: impl IntoIterator<Item = RingSpec>) -> Self {
        RingSpec::Product(parts.into_iter().collect())
    }

    pub fn matrix(k: usize, base: RingSpec) -> Self {
        RingSpec::Matrix { k, base: Box::new(base) }
    }

    pub fn triangular(k: usize, base: RingSpec) -> Self {
        RingSpec::Triangular { k, base: Box::new(base) }
    }

    pub fn poly_mod(base: RingSpec, n: usize) -> Self {
        RingSpec::PolyMod { base: Box::new(base), n }
    }

    pub fn trivial_ext(base: RingSpec) -> Self {
        RingSpec::TrivialExt(Box::new(base))
    }

    pub fn quotient(base: RingSpec, generators: Vec<u32>) -> Self {
        RingSpec::Quotient { base: Box::new(base), generators }
    }

    pub fn corner(base: RingSpec, e: u32) -> Self {
        RingSpec::Corner { base: Box::new(base), e }
    }

    pub fn opposite(base: RingSpec) -> Self {
        RingSpec::Opposite(Box::new(base))
    }

    pub fn ideal_ring(base: RingSpec, generators: Vec<u32>) -> Self {
        RingSpec::IdealRing { base: Box::new(base), generators }
    }

    pub fn center(base: RingSpec) -> Self {
        RingSpec::Center(Box::new(base))
    }

    /// Order of the denoted ring when it follows from the spec alone
    /// (saturating); `None` for subrings and quotients.
    pub fn nominal_order(&self) -> Option<u128> {
        let pow = |b: u128, e: usize| -> u128 { (0..e).fold(1u128, |acc, _| acc.saturating_mul(b)) };
        match self {
            RingSpec::Zn(n) => Some(*n as u128),
            RingSpec::Product(parts) => {
                parts.iter().try_fold(1u128, |acc, p| p.nominal_order().map(|o| acc.saturating_mul(o)))
            }
            RingSpec::Matrix { k, base } => base.nominal_order().map(|b| pow(b, k * k)),
            RingSpec::Triangular { k, base } => base.nominal_order().map(|b| pow(b, k * (k + 1) / 2)),
            RingSpec::PolyMod { base, n } => base.nominal_order().map(|b| pow(b, *n)),
            RingSpec::TrivialExt(base) => base.nominal_order().map(|b| b.saturating_mul(b)),
            RingSpec::Opposite(base) => base.nominal_order(),
            _ => None,
        }
    }
}

/// Limits applied while building.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BuildOptions {
    /// Largest order any ring in the construction may have.
    pub max_order: usize,
    /// Operation tables are materialized up to this order.
    pub table_limit: usize,
    /// Axioms are validated exhaustively up to this order.
    pub validate_limit: usize,
}

pub const DEFAULT_MAX_ORDER: usize = 1 << 16;
pub const MAX_ORDER_ENV: &str = "RINGLAB_MAX_ORDER";

impl Default for BuildOptions {
    fn default() -> Self {
        BuildOptions { max_order: DEFAULT_MAX_ORDER, table_limit: 1024, validate_limit: 256 }
    }
}

impl BuildOptions {
    /// Defaults, with `max_order` overridden by `RINGLAB_MAX_ORDER` when set.
    pub fn from_env() -> Result<Self> {
        let mut opts = BuildOptions::default();
        if let Ok(v) = std::env::var(MAX_ORDER_ENV) {
            opts.max_order = v
                .trim()
                .parse()
                .map_err(|_| Error::MalformedSpec(format!("{MAX_ORDER_ENV}={v:?} is not an integer")))?;
        }
        Ok(opts)
    }

    pub fn validate_always(mut self) -> Self {
        self.validate_limit = usize::MAX;
        self
    }

    fn check_cap(&self, order: u128) -> Result<()> {
        if order > self.max_order as u128 {
            Err(Error::OrderOverCap { order, cap: self.max_order })
        } else {
            Ok(())
        }
    }

    fn finish(&self, ring: FiniteRing) -> Result<FiniteRing> {
        if ring.order() <= self.validate_limit {
            if let AxiomVerdict::Failed(v) = validate_axioms(&ring) {
                return Err(Error::Axioms(v));
            }
        }
        Ok(ring)
    }
}

/// Builds with [`BuildOptions::default`].
pub fn build(spec: &RingSpec) -> Result<FiniteRing> {
    build_with(spec, &BuildOptions::default())
}

pub fn build_with(spec: &RingSpec, opts: &BuildOptions) -> Result<FiniteRing> {
    if let Some(order) = spec.nominal_order() {
        opts.check_cap(order)?;
    }
    let ring = match spec {
        RingSpec::Zn(n) => {
            if *n == 0 {
                return Err(Error::MalformedSpec("Z0 is not finite".into()));
            }
            let layout = Layout::Cyclic { modulus: *n };
            FiniteRing::from_layout(
                *n as usize,
                layout,
                Elem(0),
                Some(Elem(1 % n)),
                Some(spec.clone()),
                opts.table_limit,
            )
        }
        RingSpec::Product(parts) => {
            if parts.is_empty() {
                return Err(Error::MalformedSpec("empty product".into()));
            }
            let bases = parts.iter().map(|p| build_with(p, opts)).collect::<Result<Vec<_>>>()?;
            tuple_ring(TupleKind::Product, bases, spec, opts)?
        }
        RingSpec::Matrix { k, base } => {
            if *k == 0 {
                return Err(Error::MalformedSpec("matrix size must be at least 1".into()));
            }
            tuple_ring(TupleKind::Matrix { k: *k }, vec![build_with(base, opts)?], spec, opts)?
        }
        RingSpec::Triangular { k, base } => {
            if *k < 2 {
                return Err(Error::MalformedSpec("triangular size must be at least 2".into()));
            }
            tuple_ring(TupleKind::Triangular { k: *k }, vec![build_with(base, opts)?], spec, opts)?
        }
        RingSpec::PolyMod { base, n } => {
            if *n == 0 {
                return Err(Error::MalformedSpec("truncation degree must be at least 1".into()));
            }
            tuple_ring(TupleKind::PolyMod { n: *n }, vec![build_with(base, opts)?], spec, opts)?
        }
        RingSpec::TrivialExt(base) => tuple_ring(TupleKind::TrivialExt, vec![build_with(base, opts)?], spec, opts)?,
        RingSpec::Quotient { base, generators } => {
            let b = build_with(base, opts)?;
            let gens = elems_in(&b, generators)?;
            let ideal = ideal_generated(&b, &gens)?;
            quotient_impl(&b, &ideal, Some(spec.clone()), opts)?.ring
        }
        RingSpec::Corner { base, e } => {
            let b = build_with(base, opts)?;
            corner_with(&b, b.elem(*e as u64)?, opts)?.ring
        }
        RingSpec::Opposite(base) => opposite_with(&build_with(base, opts)?, opts),
        RingSpec::IdealRing { base, generators } => {
            let b = build_with(base, opts)?;
            let gens = elems_in(&b, generators)?;
            let ideal = ideal_generated(&b, &gens)?;
            subset_ring(&b, ideal.members().to_vec(), None, Some(spec.clone()), opts)?.ring
        }
        RingSpec::Center(base) => {
            let b = build_with(base, opts)?;
            center_ring_with(&b, opts)?.ring
        }
    };
    opts.finish(ring)
}

fn elems_in(r: &FiniteRing, indices: &[u32]) -> Result<Vec<Elem>> {
    indices.iter().map(|&i| r.elem(i as u64)).collect()
}

fn tuple_ring(kind: TupleKind, bases: Vec<FiniteRing>, spec: &RingSpec, opts: &BuildOptions) -> Result<FiniteRing> {
    let digits = match kind {
        TupleKind::Product => bases.len(),
        TupleKind::Matrix { k } => k * k,
        TupleKind::Triangular { k } => k * (k + 1) / 2,
        TupleKind::PolyMod { n } => n,
        TupleKind::TrivialExt => 2,
    };
    if digits > MAX_DIGITS {
        return Err(Error::MalformedSpec(format!("{digits} components exceed the supported {MAX_DIGITS}")));
    }
    let base_of = |i: usize| match kind {
        TupleKind::Product => &bases[i],
        _ => &bases[0],
    };
    let order = (0..digits).fold(1u128, |acc, i| acc.saturating_mul(base_of(i).order() as u128));
    opts.check_cap(order)?;

    let zero_parts: Vec<u32> = (0..digits).map(|i| base_of(i).zero().0).collect();
    let one_parts: Option<Vec<u32>> = match kind {
        TupleKind::Product => bases.iter().map(|b| b.one().map(|e| e.0)).collect(),
        _ => bases[0].one().map(|one| {
            let r = &bases[0];
            let mut parts = zero_parts.clone();
            match kind {
                TupleKind::Matrix { k } => (0..k).for_each(|i| parts[i * k + i] = one.0),
                TupleKind::Triangular { k } => {
                    (0..k).for_each(|i| parts[crate::ring::triangular_slot(k, i, i)] = one.0)
                }
                TupleKind::PolyMod { .. } | TupleKind::TrivialExt => parts[0] = one.0,
                TupleKind::Product => unreachable!(),
            }
            debug_assert_eq!(r.zero().0, zero_parts[0]);
            parts
        }),
    };
    let encode = |parts: &[u32]| -> Elem {
        let mut idx: u64 = 0;
        for (i, &p) in parts.iter().enumerate() {
            idx = idx * base_of(i).order() as u64 + p as u64;
        }
        Elem(idx as u32)
    };
    let zero = encode(&zero_parts);
    let one = one_parts.as_deref().map(encode);
    let layout = Layout::Tuple { kind, bases: bases.clone() };
    Ok(FiniteRing::from_layout(order as usize, layout, zero, one, Some(spec.clone()), opts.table_limit))
}

/// A subring (possibly without the ambient unity) with its embedding.
#[derive(Debug, Clone)]
pub struct Subring {
    pub ring: FiniteRing,
    /// Sub-index to base element, ascending.
    pub members: Vec<Elem>,
}

impl Subring {
    pub fn embed(&self, a: Elem) -> Elem {
        self.members[a.index()]
    }

    pub fn locate(&self, base: Elem) -> Option<Elem> {
        self.members.binary_search(&base).ok().map(|i| Elem(i as u32))
    }
}

/// Closure checks on candidate subsets are skipped above this size.
const SUBSET_CLOSURE_CHECK_LIMIT: usize = 4096;

fn subset_ring(
    base: &FiniteRing,
    mut members: Vec<Elem>,
    one: Option<Elem>,
    spec: Option<RingSpec>,
    opts: &BuildOptions,
) -> Result<Subring> {
    members.sort_unstable();
    members.dedup();
    let mut position = vec![u32::MAX; base.order()];
    for (i, m) in members.iter().enumerate() {
        position[m.index()] = i as u32;
    }
    if members.len() <= SUBSET_CLOSURE_CHECK_LIMIT {
        for &a in &members {
            if position[base.neg(a).index()] == u32::MAX {
                return Err(Error::Internal(format!("subset not closed under negation at {a}")));
            }
            for &b in &members {
                if position[base.add(a, b).index()] == u32::MAX || position[base.mul(a, b).index()] == u32::MAX {
                    return Err(Error::Internal(format!("subset not closed at ({a}, {b})")));
                }
            }
        }
    }
    let zero = Elem(position[base.zero().index()]);
    let one = match one {
        Some(u) => Some(Elem(position[u.index()])),
        None => own_identity(base, &members).map(|u| Elem(position[u.index()])),
    };
    let order = members.len();
    let layout = Layout::Subset { base: base.clone(), members: members.clone(), position };
    let ring = FiniteRing::from_layout(order, layout, zero, one, spec, opts.table_limit);
    Ok(Subring { ring, members })
}

/// An element acting as a two-sided identity on `members`, if any.
fn own_identity(base: &FiniteRing, members: &[Elem]) -> Option<Elem> {
    members.iter().copied().find(|&u| members.iter().all(|&m| base.mul(u, m) == m && base.mul(m, u) == m))
}

/// The corner ring `eRe`, with unity `e`.
pub fn corner(r: &FiniteRing, e: Elem) -> Result<Subring> {
    corner_with(r, e, &BuildOptions::default())
}

pub fn corner_with(r: &FiniteRing, e: Elem, opts: &BuildOptions) -> Result<Subring> {
    r.elem(e.0 as u64)?;
    if !r.is_idempotent(e) {
        return Err(Error::NotIdempotent(e));
    }
    let mut members: Vec<Elem> = r.elements().map(|x| r.mul3(e, x, e)).collect();
    members.sort_unstable();
    members.dedup();
    let spec = r.spec().map(|s| RingSpec::corner(s.clone(), e.0));
    subset_ring(r, members, Some(e), spec, opts)
}

/// The ideal `I` as a (generally non-unital) ring.
pub fn ideal_ring(r: &FiniteRing, ideal: &Ideal) -> Result<Subring> {
    ideal.check(r)?;
    let spec =
        r.spec().map(|s| RingSpec::ideal_ring(s.clone(), ideal_generators(r, ideal).iter().map(|g| g.0).collect()));
    subset_ring(r, ideal.members().to_vec(), None, spec, &BuildOptions::default())
}

/// The center as a ring sharing the unity of `r`.
pub fn center_ring(r: &FiniteRing) -> Result<Subring> {
    center_ring_with(r, &BuildOptions::default())
}

fn center_ring_with(r: &FiniteRing, opts: &BuildOptions) -> Result<Subring> {
    let spec = r.spec().map(|s| RingSpec::center(s.clone()));
    subset_ring(r, center(r), r.one(), spec, opts)
}

/// Same elements and addition, multiplication reversed.
pub fn opposite(r: &FiniteRing) -> FiniteRing {
    opposite_with(r, &BuildOptions::default())
}

fn opposite_with(r: &FiniteRing, opts: &BuildOptions) -> FiniteRing {
    let spec = r.spec().map(|s| RingSpec::opposite(s.clone()));
    let layout = Layout::Opposite { base: r.clone() };
    FiniteRing::from_layout(r.order(), layout, r.zero(), r.one(), spec, opts.table_limit)
}

/// `R/I` together with the canonical surjection.
#[derive(Debug, Clone)]
pub struct QuotientRing {
    pub base: FiniteRing,
    pub ideal: Ideal,
    pub ring: FiniteRing,
    /// Base element to coset index.
    pub projection: Vec<Elem>,
    /// Coset index to its smallest member.
    pub representatives: Vec<Elem>,
}

impl QuotientRing {
    pub fn project(&self, a: Elem) -> Elem {
        self.projection[a.index()]
    }

    /// Canonical preimage of a coset.
    pub fn representative(&self, c: Elem) -> Elem {
        self.representatives[c.index()]
    }
}

pub fn quotient(r: &FiniteRing, ideal: &Ideal) -> Result<QuotientRing> {
    ideal.check(r)?;
    let spec =
        r.spec().map(|s| RingSpec::quotient(s.clone(), ideal_generators(r, ideal).iter().map(|g| g.0).collect()));
    let opts = BuildOptions::default();
    let mut q = quotient_impl(r, ideal, spec, &opts)?;
    q.ring = opts.finish(q.ring)?;
    Ok(q)
}

fn quotient_impl(r: &FiniteRing, ideal: &Ideal, spec: Option<RingSpec>, opts: &BuildOptions) -> Result<QuotientRing> {
    let mut coset_of = vec![u32::MAX; r.order()];
    let mut reps = Vec::new();
    for x in r.elements() {
        if coset_of[x.index()] != u32::MAX {
            continue;
        }
        let c = reps.len() as u32;
        reps.push(x);
        for &i in ideal.members() {
            coset_of[r.add(x, i).index()] = c;
        }
    }
    let projection: Vec<Elem> = coset_of.iter().map(|&c| Elem(c)).collect();
    let zero = projection[r.zero().index()];
    let one = r.one().map(|u| projection[u.index()]);
    let layout = Layout::Quotient { base: r.clone(), reps: reps.clone(), coset_of };
    let ring = FiniteRing::from_layout(reps.len(), layout, zero, one, spec, opts.table_limit);
    Ok(QuotientRing { base: r.clone(), ideal: ideal.clone(), ring, projection, representatives: reps })
}

/// A nil ideal that the constructor makes evident: strictly upper
/// triangular matrices, the module part of a trivial extension, or the
/// multiples of `x` in a truncated polynomial ring.
pub fn structural_nil_ideal(r: &FiniteRing) -> Option<Ideal> {
    let spec = r.spec()?;
    let zero_slots: Vec<usize> = match spec {
        RingSpec::Triangular { k, .. } => (0..*k).map(|i| crate::ring::triangular_slot(*k, i, i)).collect(),
        RingSpec::TrivialExt(_) | RingSpec::PolyMod { .. } => vec![0],
        _ => return None,
    };
    let members = r.elements().filter(|&a| r.components(a).is_some_and(|c| zero_slots.iter().all(|&s| c[s].0 == 0)));
    Ideal::new(r, members).ok()
}
