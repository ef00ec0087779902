use super::{PredicateError, Property, PropertyReport};
use crate::ring::{FiniteRing, Ideal, Meter, Witness, WitnessKind};

/// `reduced-ideal`: no nonzero nilpotent member. `bounded-index`: every
/// member nilpotent; the report carries the largest index.
pub fn ideal_predicate(ring: &FiniteRing, ideal: &Ideal, property: Property) -> Result<PropertyReport, PredicateError> {
    let ideal = Ideal::new(ring, ideal.members().clone())?;
    let m = Meter::new(ring);
    m.charge(ideal.len() as u64);
    let idx = ring.nilpotency_indices();
    let members = || ideal.members().iter();
    match property {
        Property::ReducedIdeal => {
            let w = members()
                .find(|&a| a != ring.zero() && idx[a] != 0)
                .map(|a| Witness::new(WitnessKind::NilpotentIdealMember, &[("a", a)]));
            Ok(PropertyReport::new(ring, property, w, &m))
        }
        Property::BoundedIndex => {
            let w = members()
                .find(|&a| idx[a] == 0)
                .map(|a| Witness::new(WitnessKind::NonNilpotentIdealMember, &[("a", a)]));
            let mut rep = PropertyReport::new(ring, property, w, &m);
            if rep.value {
                rep.index = members().map(|a| idx[a]).max();
            }
            Ok(rep)
        }
        other => Err(PredicateError::UnknownProperty(format!("{other} is not an ideal property"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{matrix_ring, zmod, MatrixShape};
    use crate::ring::{ideal_generated_by, ElementSet};

    #[test]
    fn strictly_upper_ideal() {
        let u = matrix_ring(&zmod(2).unwrap(), 2, MatrixShape::UpperTriangular, 4096).unwrap();
        let e12 = u.element_by_name("[0,1;0,0]").unwrap();
        let j = ideal_generated_by(&u, &[e12]).unwrap();
        let red = ideal_predicate(&u, &j, Property::ReducedIdeal).unwrap();
        assert!(!red.value);
        assert_eq!(red.witness.as_ref().unwrap().get("a"), Some(e12));
        assert!(red.witness.unwrap().replays(&u));
        let bi = ideal_predicate(&u, &j, Property::BoundedIndex).unwrap();
        assert!(bi.value);
        assert_eq!(bi.index, Some(2));
    }

    #[test]
    fn zero_and_whole_ideals() {
        let z4 = zmod(4).unwrap();
        let zero = ideal_generated_by(&z4, &[]).unwrap();
        assert!(ideal_predicate(&z4, &zero, Property::ReducedIdeal).unwrap().value);
        assert_eq!(ideal_predicate(&z4, &zero, Property::BoundedIndex).unwrap().index, Some(1));
        let whole = ideal_generated_by(&z4, &[1]).unwrap();
        assert!(!ideal_predicate(&z4, &whole, Property::BoundedIndex).unwrap().value);
        let bogus = Ideal::new_unchecked(ElementSet::from_members(4, [0, 1]));
        assert!(ideal_predicate(&z4, &bogus, Property::ReducedIdeal).is_err());
    }
}
