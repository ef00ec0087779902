use std::collections::BTreeSet;

use super::{Elem, ElementSet, FiniteRing, RingError};

/// A two-sided ideal, stored as its member set.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Ideal {
    members: ElementSet,
}

impl Ideal {
    /// Checks that `members` is a two-sided ideal of `ring`.
    pub fn new(ring: &FiniteRing, members: ElementSet) -> Result<Ideal, RingError> {
        if members.universe() != ring.order() {
            return Err(RingError::NotAnIdeal("element set belongs to a ring of different order".into()));
        }
        if !members.contains(ring.zero()) {
            return Err(RingError::NotAnIdeal("does not contain zero".into()));
        }
        let elems = members.to_vec();
        for &a in &elems {
            if !members.contains(ring.neg(a)) {
                return Err(RingError::NotAnIdeal(format!("not closed under negation at {a}")));
            }
            for &b in &elems {
                if !members.contains(ring.add(a, b)) {
                    return Err(RingError::NotAnIdeal(format!("not closed under addition at ({a}, {b})")));
                }
            }
            for r in ring.elements() {
                if !members.contains(ring.mul(r, a)) || !members.contains(ring.mul(a, r)) {
                    return Err(RingError::NotAnIdeal(format!("does not absorb {r} at {a}")));
                }
            }
        }
        Ok(Ideal { members })
    }

    #[cfg(test)]
    pub(crate) fn new_unchecked(members: ElementSet) -> Ideal {
        Ideal { members }
    }

    pub fn members(&self) -> &ElementSet {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, a: Elem) -> bool {
        self.members.contains(a)
    }

    pub fn is_zero(&self) -> bool {
        self.members.len() == 1
    }

    pub fn is_whole(&self) -> bool {
        self.members.len() == self.members.universe()
    }

    pub fn intersection(&self, other: &Ideal) -> Ideal {
        Ideal {
            members: self.members.intersection(&other.members),
        }
    }
}

/// Smallest two-sided ideal containing `gens` (worklist closure).
pub fn ideal_generated_by(ring: &FiniteRing, gens: &[Elem]) -> Result<Ideal, RingError> {
    for &g in gens {
        if g >= ring.order() {
            return Err(RingError::IndexOutOfRange {
                index: g,
                order: ring.order(),
            });
        }
    }
    let mut set = ElementSet::from_members(ring.order(), [ring.zero()]);
    Ok(Ideal {
        members: close_into(ring, &mut set, gens.iter().copied()),
    })
}

/// Extends an ideal's member set by new elements and closes it again.
fn close_into(
    ring: &FiniteRing,
    set: &mut ElementSet,
    new: impl IntoIterator<Item = Elem>,
) -> ElementSet {
    let mut members = set.to_vec();
    let mut queue: Vec<Elem> = Vec::new();
    for g in new {
        if set.insert(g) {
            queue.push(g);
        }
    }
    while let Some(x) = queue.pop() {
        for r in ring.elements() {
            for y in [ring.mul(r, x), ring.mul(x, r)] {
                if set.insert(y) {
                    queue.push(y);
                }
            }
        }
        // In a finite group, closure under addition implies closure under
        // negation.
        let mut i = 0;
        while i < members.len() {
            let s = ring.add(x, members[i]);
            if set.insert(s) {
                queue.push(s);
            }
            i += 1;
        }
        members.push(x);
        let s = ring.add(x, x);
        if set.insert(s) {
            queue.push(s);
        }
    }
    set.clone()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IdealEnumeration {
    /// Breadth-first growth: every ideal is reached from `{0}` by repeatedly
    /// adjoining one element and closing.
    Generators { cap: usize },
    /// Closes every subset of the ring; exponential, for cross-checks only.
    Exhaustive { cap: usize },
}

impl Default for IdealEnumeration {
    fn default() -> Self {
        IdealEnumeration::Generators { cap: 64 }
    }
}

/// All two-sided ideals, sorted by cardinality then membership.
pub fn enumerate_ideals(ring: &FiniteRing, mode: IdealEnumeration) -> Result<Vec<Ideal>, RingError> {
    let n = ring.order();
    let found: BTreeSet<Ideal> = match mode {
        IdealEnumeration::Generators { cap } => {
            if n > cap {
                return Err(RingError::OracleCapExceeded { order: n, cap });
            }
            let zero = ideal_generated_by(ring, &[])?;
            let mut found = BTreeSet::new();
            let mut frontier = vec![zero.clone()];
            found.insert(zero);
            while let Some(ideal) = frontier.pop() {
                for x in ring.elements() {
                    if ideal.contains(x) {
                        continue;
                    }
                    let mut set = ideal.members.clone();
                    let grown = Ideal {
                        members: close_into(ring, &mut set, [x]),
                    };
                    if found.insert(grown.clone()) {
                        frontier.push(grown);
                    }
                }
            }
            found
        }
        IdealEnumeration::Exhaustive { cap } => {
            if n > cap || n >= usize::BITS as usize {
                return Err(RingError::OracleCapExceeded { order: n, cap });
            }
            (0u64..(1u64 << n))
                .map(|mask| {
                    let gens: Vec<Elem> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
                    ideal_generated_by(ring, &gens).expect("indices in range")
                })
                .collect()
        }
    };
    Ok(found.into_iter().collect())
}
