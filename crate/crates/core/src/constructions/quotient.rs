use super::{tabulate, ConstructionError};
use crate::ring::{Elem, FiniteRing, Ideal};

/// `R/I` together with the projection `R → R/I`.
#[derive(Debug, Clone)]
pub struct Quotient {
    pub ring: FiniteRing,
    /// `projection[a]` is the coset of `a`.
    pub projection: Vec<Elem>,
    /// Least member of each coset, indexed by coset.
    pub representatives: Vec<Elem>,
}

/// Cosets are numbered in ascending order of their least member.
pub fn quotient_ring(r: &FiniteRing, ideal: &Ideal) -> Result<Quotient, ConstructionError> {
    // Re-validate: the ideal may have been built against another ring.
    let ideal = Ideal::new(r, ideal.members().clone())?;
    let mut projection = vec![usize::MAX; r.order()];
    let mut representatives = Vec::new();
    for a in r.elements() {
        if projection[a] != usize::MAX {
            continue;
        }
        let coset = representatives.len();
        representatives.push(a);
        for i in ideal.members().iter() {
            projection[r.add(a, i)] = coset;
        }
    }
    let order = representatives.len();
    let names = representatives
        .iter()
        .map(|&a| format!("{}+I", r.label(a)))
        .collect();
    let ring = tabulate(
        format!("{}/I{}", r.name(), ideal.len()),
        order,
        projection[r.zero()],
        projection[r.one()],
        Some(names),
        |x, y| projection[r.add(representatives[x], representatives[y])],
        |x, y| projection[r.mul(representatives[x], representatives[y])],
    )?;
    Ok(Quotient {
        ring,
        projection,
        representatives,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{matrix_ring, zmod, MatrixShape};
    use crate::ring::{ideal_generated_by, ElementSet};

    fn assert_homomorphism(r: &FiniteRing, q: &Quotient, ideal: &Ideal) {
        let p = &q.projection;
        for a in r.elements() {
            for b in r.elements() {
                assert_eq!(p[r.add(a, b)], q.ring.add(p[a], p[b]));
                assert_eq!(p[r.mul(a, b)], q.ring.mul(p[a], p[b]));
            }
            assert_eq!(p[a] == q.ring.zero(), ideal.contains(a));
        }
        assert_eq!(p[r.one()], q.ring.one());
    }

    #[test]
    fn upper_triangular_mod_strict_part_is_reduced() {
        let u = matrix_ring(&zmod(2).unwrap(), 2, MatrixShape::UpperTriangular, 4096).unwrap();
        let e12 = u.element_by_name("[0,1;0,0]").unwrap();
        let j = ideal_generated_by(&u, &[e12]).unwrap();
        assert_eq!(j.members().to_vec(), vec![u.zero(), e12]);
        let q = quotient_ring(&u, &j).unwrap();
        assert_eq!(q.ring.order(), 4);
        assert_eq!(q.ring.nilpotents().len(), 1);
        assert!(q.ring.is_commutative());
        assert_homomorphism(&u, &q, &j);
    }

    #[test]
    fn trivial_quotients() {
        let z8 = zmod(8).unwrap();
        let zero = ideal_generated_by(&z8, &[]).unwrap();
        assert!(quotient_ring(&z8, &zero).unwrap().ring.same_tables(&z8));
        let four = ideal_generated_by(&z8, &[4]).unwrap();
        let q = quotient_ring(&z8, &four).unwrap();
        assert!(q.ring.same_tables(&zmod(4).unwrap()));
        assert_homomorphism(&z8, &q, &four);
    }

    #[test]
    fn rejects_non_ideal() {
        let z6 = zmod(6).unwrap();
        let bogus = Ideal::new_unchecked(ElementSet::from_members(6, [0, 1]));
        assert!(quotient_ring(&z6, &bogus).is_err());
    }
}
