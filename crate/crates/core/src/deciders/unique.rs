//! Counting the distinct idempotents and nilpotents that occur across all
//! primal decompositions of an element.

use serde::Serialize;

use super::witness::WnclWitness;
use crate::ring::Elem;
use crate::structure::StructureTables;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct UniquenessCount {
    pub count: usize,
    /// The lexicographically first triple for each distinct value, ascending.
    pub samples: Vec<WnclWitness>,
}

impl UniquenessCount {
    pub fn is_unique(&self) -> bool {
        self.count == 1
    }
}

/// Both counts from one pass over `Id(R) × Nil(R)`.
pub fn wncl_decompositions(s: &StructureTables, a: Elem) -> (UniquenessCount, UniquenessCount) {
    let r = s.ring();
    let nil = s.nilpotents().members();
    let mut by_e = Vec::new();
    let mut by_q: Vec<Option<WnclWitness>> = vec![None; nil.len()];
    for &e in s.idempotents() {
        let mut era = vec![u32::MAX; r.order()];
        for x in r.elements() {
            let v = r.mul3(e, x, a).index();
            if era[v] == u32::MAX {
                era[v] = x.0;
            }
        }
        let rest = r.sub(a, e);
        let mut first_for_e = None;
        for (i, &q) in nil.iter().enumerate() {
            let x = era[r.sub(rest, q).index()];
            if x == u32::MAX {
                continue;
            }
            let w = WnclWitness::primal(e, q, Elem(x));
            first_for_e.get_or_insert(w);
            by_q[i].get_or_insert(w);
        }
        by_e.extend(first_for_e);
    }
    let by_q: Vec<WnclWitness> = by_q.into_iter().flatten().collect();
    (UniquenessCount { count: by_e.len(), samples: by_e }, UniquenessCount { count: by_q.len(), samples: by_q })
}

pub fn unique_idempotent_wncl(s: &StructureTables, a: Elem) -> UniquenessCount {
    wncl_decompositions(s, a).0
}

pub fn unique_nilpotent_wncl(s: &StructureTables, a: Elem) -> UniquenessCount {
    wncl_decompositions(s, a).1
}
