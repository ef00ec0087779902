use super::{enumerate_ideals, ElementSet, FiniteRing, Ideal, IdealEnumeration, RingError};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RadicalMode {
    /// Uses `P(R) = J(R)`, which holds for finite (hence artinian) rings.
    Fast,
    /// Intersects all prime ideals found by exhaustive ideal enumeration.
    Oracle { cap: usize },
}

/// `J(R) = {a : 1 - r·a is a unit for every r}`.
pub fn jacobson_radical(ring: &FiniteRing) -> ElementSet {
    ring.jacobson().clone()
}

pub(super) fn compute_jacobson(ring: &FiniteRing) -> ElementSet {
    let units = ring.units();
    let one = ring.one();
    ElementSet::from_predicate(ring.order(), |a| {
        ring.elements()
            .all(|r| units.contains(ring.sub(one, ring.mul(r, a))))
    })
}

pub fn prime_radical(ring: &FiniteRing, mode: RadicalMode) -> Result<ElementSet, RingError> {
    match mode {
        RadicalMode::Fast => Ok(jacobson_radical(ring)),
        RadicalMode::Oracle { cap } => {
            let ideals = enumerate_ideals(ring, IdealEnumeration::Exhaustive { cap })?;
            let mut meet = ElementSet::full(ring.order());
            for p in ideals.iter().filter(|p| is_prime(ring, p)) {
                meet = meet.intersection(p.members());
            }
            // With no proper ideals (the zero ring) the empty intersection is
            // the whole ring, which is {0} there anyway.
            Ok(meet)
        }
    }
}

/// Element test for primeness: `P` proper and `aRb ⊆ P ⟹ a ∈ P or b ∈ P`.
pub fn is_prime(ring: &FiniteRing, p: &Ideal) -> bool {
    if p.is_whole() {
        return false;
    }
    let outside: Vec<_> = ring.elements().filter(|&a| !p.contains(a)).collect();
    outside.iter().all(|&a| {
        outside
            .iter()
            .all(|&b| ring.elements().any(|r| !p.contains(ring.mul(ring.mul(a, r), b))))
    })
}
