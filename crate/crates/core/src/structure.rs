//! Structural sets of a finite ring: idempotents, nilpotents, units, the
//! center, the Jacobson radical, generated ideals and the nilpotence bound.

use std::collections::VecDeque;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::par;
use crate::ring::{Elem, FiniteRing};

/// A validated two-sided ideal, stored as a sorted member list plus a
/// membership mask over the ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ideal {
    members: Vec<Elem>,
    mask: Vec<bool>,
}

impl Ideal {
    /// Checks that `members` contains zero, is closed under addition and
    /// negation, and absorbs multiplication on both sides.
    pub fn new(r: &FiniteRing, members: impl IntoIterator<Item = Elem>) -> Result<Self> {
        let mut mask = vec![false; r.order()];
        for m in members {
            let i = m.index();
            if i >= r.order() {
                return Err(Error::ElementOutOfRange { index: m.0 as u64, order: r.order() });
            }
            mask[i] = true;
        }
        let members: Vec<Elem> = r.elements().filter(|a| mask[a.index()]).collect();
        let ideal = Ideal { members, mask };
        ideal.check(r)?;
        Ok(ideal)
    }

    pub(crate) fn check(&self, r: &FiniteRing) -> Result<()> {
        if self.mask.len() != r.order() {
            return Err(Error::NotAnIdeal("ideal belongs to a ring of a different order".into()));
        }
        if !self.contains(r.zero()) {
            return Err(Error::NotAnIdeal("zero is missing".into()));
        }
        for &i in &self.members {
            if !self.contains(r.neg(i)) {
                return Err(Error::NotAnIdeal(format!("not closed under negation at {i}")));
            }
            if let Some(&j) = self.members.iter().find(|&&j| !self.contains(r.add(i, j))) {
                return Err(Error::NotAnIdeal(format!("not closed under addition at ({i}, {j})")));
            }
            if let Some(x) = r.elements().find(|&x| !self.contains(r.mul(x, i)) || !self.contains(r.mul(i, x))) {
                return Err(Error::NotAnIdeal(format!("does not absorb multiplication at ({x}, {i})")));
            }
        }
        Ok(())
    }

    pub fn members(&self) -> &[Elem] {
        &self.members
    }

    #[inline]
    pub fn contains(&self, a: Elem) -> bool {
        self.mask.get(a.index()).copied().unwrap_or(false)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.members.len() == 1
    }
}

/// Nilpotent elements and their nilpotence indices.
#[derive(Debug, Clone)]
pub struct Nilpotents {
    members: Vec<Elem>,
    // 0 marks a non-nilpotent element.
    index: Vec<u32>,
}

impl Nilpotents {
    pub fn members(&self) -> &[Elem] {
        &self.members
    }

    #[inline]
    pub fn contains(&self, a: Elem) -> bool {
        self.index[a.index()] != 0
    }

    pub fn nil_index(&self, a: Elem) -> Option<usize> {
        match self.index[a.index()] {
            0 => None,
            k => Some(k as usize),
        }
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

/// The unit group with recorded inverses.
#[derive(Debug, Clone)]
pub struct Units {
    members: Vec<Elem>,
    inverse: Vec<Option<Elem>>,
}

impl Units {
    pub fn members(&self) -> &[Elem] {
        &self.members
    }

    #[inline]
    pub fn contains(&self, a: Elem) -> bool {
        self.inverse[a.index()].is_some()
    }

    pub fn inverse(&self, a: Elem) -> Option<Elem> {
        self.inverse[a.index()]
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

pub fn idempotents(r: &FiniteRing) -> Vec<Elem> {
    par::filter_range(r.order(), |a| r.is_idempotent(Elem(a as u32))).into_iter().map(|a| Elem(a as u32)).collect()
}

pub fn nilpotents(r: &FiniteRing) -> Nilpotents {
    let index: Vec<u32> = par::map_range(r.order(), |a| r.nil_index(Elem(a as u32)).map_or(0, |k| k as u32));
    let members = r.elements().filter(|a| index[a.index()] != 0).collect();
    Nilpotents { members, index }
}

/// In a finite unital ring `a` is a unit exactly when some power of `a` is
/// 1; the inverse is then the preceding power. Both products are checked.
pub fn units(r: &FiniteRing) -> Result<Units> {
    let one = r.unity("units")?;
    let inverse: Vec<Option<Elem>> = par::map_range(r.order(), |a| {
        let a = Elem(a as u32);
        let t = r.power_trajectory(a);
        if t.preperiod != 1 || r.power(a, t.period as u64) != one {
            return None;
        }
        let inv = if t.period == 1 { one } else { r.power(a, t.period as u64 - 1) };
        (r.mul(a, inv) == one && r.mul(inv, a) == one).then_some(inv)
    });
    let members = r.elements().filter(|a| inverse[a.index()].is_some()).collect();
    Ok(Units { members, inverse })
}

pub fn center(r: &FiniteRing) -> Vec<Elem> {
    par::filter_range(r.order(), |a| r.is_central(Elem(a as u32))).into_iter().map(|a| Elem(a as u32)).collect()
}

/// `{x : 1 − r·x is a unit for every r}`, validated as a two-sided ideal.
pub fn jacobson_radical(r: &FiniteRing) -> Result<Ideal> {
    let u = units(r)?;
    jacobson_radical_with(r, &u)
}

pub(crate) fn jacobson_radical_with(r: &FiniteRing, u: &Units) -> Result<Ideal> {
    let one = r.unity("jacobson_radical")?;
    let members = par::filter_range(r.order(), |x| {
        let x = Elem(x as u32);
        r.elements().all(|s| u.contains(r.sub(one, r.mul(s, x))))
    });
    Ideal::new(r, members.into_iter().map(|x| Elem(x as u32)))
        .map_err(|e| Error::Internal(format!("quasi-regular set failed ideal validation: {e}")))
}

/// Smallest two-sided ideal containing `gens`, by worklist closure.
pub fn ideal_generated(r: &FiniteRing, gens: &[Elem]) -> Result<Ideal> {
    let mut mask = vec![false; r.order()];
    let mut members: Vec<Elem> = Vec::new();
    let mut queue = VecDeque::new();
    fn push(x: Elem, mask: &mut [bool], members: &mut Vec<Elem>, queue: &mut VecDeque<Elem>) {
        if !mask[x.index()] {
            mask[x.index()] = true;
            members.push(x);
            queue.push_back(x);
        }
    }
    push(r.zero(), &mut mask, &mut members, &mut queue);
    for &g in gens {
        r.elem(g.0 as u64)?;
        push(g, &mut mask, &mut members, &mut queue);
    }
    while let Some(y) = queue.pop_front() {
        push(r.neg(y), &mut mask, &mut members, &mut queue);
        let snapshot = members.len();
        for k in 0..snapshot {
            let z = members[k];
            push(r.add(y, z), &mut mask, &mut members, &mut queue);
        }
        for s in r.elements() {
            push(r.mul(s, y), &mut mask, &mut members, &mut queue);
            push(r.mul(y, s), &mut mask, &mut members, &mut queue);
        }
    }
    members.sort_unstable();
    let ideal = Ideal { members, mask };
    debug_assert!(ideal.check(r).is_ok());
    Ok(ideal)
}

/// A small generating set: members taken in index order, each kept only if
/// it is not already in the ideal generated by the earlier ones.
pub fn ideal_generators(r: &FiniteRing, ideal: &Ideal) -> Vec<Elem> {
    let mut gens = Vec::new();
    let mut current = ideal_generated(r, &[]).expect("empty generator set");
    for &m in ideal.members() {
        if !current.contains(m) {
            gens.push(m);
            current = ideal_generated(r, &gens).expect("members are in range");
        }
        if current.len() == ideal.len() {
            break;
        }
    }
    gens
}

pub fn is_nil_ideal(r: &FiniteRing, ideal: &Ideal) -> bool {
    ideal.members().iter().all(|&x| r.is_nilpotent(x))
}

/// Largest nilpotence index over the nilpotent elements (1 when only zero
/// is nilpotent).
pub fn bounded_index(r: &FiniteRing) -> usize {
    bounded_index_of(&nilpotents(r))
}

fn bounded_index_of(nil: &Nilpotents) -> usize {
    nil.members().iter().filter_map(|&q| nil.nil_index(q)).max().unwrap_or(1)
}

pub fn is_abelian(r: &FiniteRing) -> bool {
    idempotents(r).into_iter().all(|e| r.is_central(e))
}

/// Lazily computed structural data for one ring. Every field is computed at
/// most once and may be requested from several threads.
pub struct StructureTables<'r> {
    ring: &'r FiniteRing,
    idempotents: OnceLock<Vec<Elem>>,
    nilpotents: OnceLock<Nilpotents>,
    units: OnceLock<Result<Units>>,
    center: OnceLock<Vec<Elem>>,
    center_mask: OnceLock<Vec<bool>>,
    radical: OnceLock<Result<Ideal>>,
    abelian: OnceLock<bool>,
}

impl<'r> StructureTables<'r> {
    pub fn new(ring: &'r FiniteRing) -> Self {
        StructureTables {
            ring,
            idempotents: OnceLock::new(),
            nilpotents: OnceLock::new(),
            units: OnceLock::new(),
            center: OnceLock::new(),
            center_mask: OnceLock::new(),
            radical: OnceLock::new(),
            abelian: OnceLock::new(),
        }
    }

    pub fn ring(&self) -> &'r FiniteRing {
        self.ring
    }

    pub fn idempotents(&self) -> &[Elem] {
        self.idempotents.get_or_init(|| idempotents(self.ring))
    }

    pub fn nilpotents(&self) -> &Nilpotents {
        self.nilpotents.get_or_init(|| nilpotents(self.ring))
    }

    pub fn units(&self) -> Result<&Units> {
        self.units.get_or_init(|| units(self.ring)).as_ref().map_err(Clone::clone)
    }

    pub fn center(&self) -> &[Elem] {
        self.center.get_or_init(|| center(self.ring))
    }

    pub fn is_central(&self, a: Elem) -> bool {
        let mask = self.center_mask.get_or_init(|| {
            let mut m = vec![false; self.ring.order()];
            for &c in self.center() {
                m[c.index()] = true;
            }
            m
        });
        mask[a.index()]
    }

    pub fn radical(&self) -> Result<&Ideal> {
        self.radical.get_or_init(|| jacobson_radical_with(self.ring, self.units()?)).as_ref().map_err(Clone::clone)
    }

    pub fn bounded_index(&self) -> usize {
        bounded_index_of(self.nilpotents())
    }

    pub fn is_abelian(&self) -> bool {
        *self.abelian.get_or_init(|| self.idempotents().iter().all(|&e| self.is_central(e)))
    }
}
