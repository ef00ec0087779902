use super::{PredicateError, Property, PropertyReport};
use crate::config::Limits;
use crate::ring::{prime_radical, Elem, FiniteRing, Meter, RadicalMode, Side, Witness, WitnessKind};

/// `l(a) = r(a)` for every nilpotent `a`.
///
/// The witness is the least nilpotent `a` with asymmetric annihilators and
/// the least `b` in `l(a) Δ r(a)`.
pub fn is_nil_reversible(ring: &FiniteRing) -> PropertyReport {
    let meter = Meter::new(ring);
    let n = ring.order() as u64;
    let witness = ring.nilpotents().iter().find_map(|a| {
        meter.charge(2 * n);
        let b = ring
            .annihilator(Side::Left, a)
            .first_difference(&ring.annihilator(Side::Right, a))?;
        Some(Witness::new(WitnessKind::AnnihilatorAsymmetry, &[("a", a), ("b", b)]))
    });
    PropertyReport::new(ring, Property::NilReversible, witness, &meter)
}

/// Least `b` with exactly one of `ab`, `ba` zero, for a fixed nilpotent `a`.
pub fn nil_reversible_witness_for(ring: &FiniteRing, a: Elem) -> Option<Elem> {
    if !ring.is_nilpotent(a) {
        return None;
    }
    let z = ring.zero();
    ring.elements().find(|&b| (ring.mul(a, b) == z) != (ring.mul(b, a) == z))
}

pub fn zero_divisor_predicate(ring: &FiniteRing, property: Property) -> Result<PropertyReport, PredicateError> {
    let m = Meter::new(ring);
    let z = ring.zero();
    let pairs = || ring.elements().flat_map(|a| ring.elements().map(move |b| (a, b)));
    let witness = match property {
        Property::Reduced => ring
            .nilpotents()
            .iter()
            .find(|&a| a != z)
            .map(|a| Witness::new(WitnessKind::NonzeroNilpotent, &[("a", a)])),
        Property::Reversible => pairs()
            .find(|&(a, b)| m.mul(a, b) == z && m.mul(b, a) != z)
            .map(|(a, b)| Witness::new(WitnessKind::ZeroDivisorPair, &[("a", a), ("b", b)])),
        Property::Semicommutative => semicommutative_witness(ring, &m),
        Property::WeaklySemicommutative => pairs()
            .filter(|&(a, b)| m.mul(a, b) == z)
            .find_map(|(a, b)| {
                let r = ring.elements().find(|&r| !ring.is_nilpotent(m.mul(m.mul(a, r), b)))?;
                Some(Witness::new(WitnessKind::WeakSemicommutativeTriple, &[("a", a), ("b", b), ("r", r)]))
            }),
        Property::CentralReversible => {
            let center = ring.center();
            pairs()
                .filter(|&(a, b)| m.mul(a, b) == z && !center.contains(m.mul(b, a)))
                .find_map(|(a, b)| {
                    let ba = ring.mul(b, a);
                    let c = ring.elements().find(|&c| m.mul(ba, c) != m.mul(c, ba))?;
                    Some(Witness::new(WitnessKind::NoncentralReverseProduct, &[("a", a), ("b", b), ("c", c)]))
                })
        }
        Property::SquareZero => ring.nilpotents().iter().find_map(|w| {
            ring.elements().find_map(|h| {
                let wh = m.mul(w, h);
                if wh != z && m.mul(wh, wh) == z {
                    return Some(Witness::new(WitnessKind::SquareZeroLeft, &[("w", w), ("h", h)]));
                }
                let hw = m.mul(h, w);
                if hw != z && m.mul(hw, hw) == z {
                    return Some(Witness::new(WitnessKind::SquareZeroRight, &[("w", w), ("h", h)]));
                }
                None
            })
        }),
        other => return Err(PredicateError::UnknownProperty(format!("{other} is not a zero-divisor property"))),
    };
    Ok(PropertyReport::new(ring, property, witness, &m))
}

/// `ab = 0 ⟹ aRb = 0`. Since `a r b` is additive in `r`, it suffices to
/// test `r` over an additive generating set; the least witness is then
/// located by a full scan of the first failing `a`.
fn semicommutative_witness(ring: &FiniteRing, m: &Meter) -> Option<Witness> {
    let z = ring.zero();
    let gens = ring.additive_generators();
    let a = ring.elements().find(|&a| {
        let ann = ring.annihilator(Side::Right, a);
        m.charge(ring.order() as u64);
        gens.iter().any(|&r| {
            let ar = m.mul(a, r);
            ann.iter().any(|b| m.mul(ar, b) != z)
        })
    })?;
    ring.annihilator(Side::Right, a).iter().find_map(|b| {
        let r = ring.elements().find(|&r| m.mul(m.mul(a, r), b) != z)?;
        Some(Witness::new(WitnessKind::SemicommutativeTriple, &[("a", a), ("b", b), ("r", r)]))
    })
}

/// `r(a) = eR` (right) or `l(a) = Re` (left) for some idempotent `e`.
///
/// `r(a) = eR` holds iff `ae = 0` and `eb = b` for every `b ∈ r(a)`;
/// symmetrically on the left.
pub fn annihilator_is_principal(ring: &FiniteRing, side: Side, a: Elem) -> bool {
    let z = ring.zero();
    let ann = ring.annihilator(side, a);
    ring.idempotents().iter().any(|e| match side {
        Side::Right => ring.mul(a, e) == z && ann.iter().all(|b| ring.mul(e, b) == b),
        Side::Left => ring.mul(e, a) == z && ann.iter().all(|b| ring.mul(b, e) == b),
    })
}

pub fn structural_predicate(
    ring: &FiniteRing,
    property: Property,
    limits: &Limits,
) -> Result<PropertyReport, PredicateError> {
    let m = Meter::new(ring);
    let z = ring.zero();
    let one = ring.one();
    let noncommuting = |x: Elem| ring.elements().find(|&r| m.mul(x, r) != m.mul(r, x));
    let witness = match property {
        Property::Abelian => ring.idempotents().iter().find_map(|e| {
            let r = noncommuting(e)?;
            Some(Witness::new(WitnessKind::NoncentralIdempotent, &[("e", e), ("r", r)]))
        }),
        Property::DirectlyFinite => ring.elements().find_map(|x| {
            let y = ring.elements().find(|&y| m.mul(x, y) == one && m.mul(y, x) != one)?;
            Some(Witness::new(WitnessKind::OneSidedInverse, &[("x", x), ("y", y)]))
        }),
        Property::UnitCentral => ring.units().iter().find_map(|u| {
            let r = noncommuting(u)?;
            Some(Witness::new(WitnessKind::NoncentralUnit, &[("u", u), ("r", r)]))
        }),
        Property::RightPp | Property::LeftPp => {
            let (side, kind) = if property == Property::RightPp {
                (Side::Right, WitnessKind::RightAnnihilatorNotPrincipal)
            } else {
                (Side::Left, WitnessKind::LeftAnnihilatorNotPrincipal)
            };
            let idem = ring.idempotents().len() as u64;
            ring.elements()
                .find(|&a| {
                    m.charge(ring.order() as u64 * (1 + idem));
                    !annihilator_is_principal(ring, side, a)
                })
                .map(|a| Witness::new(kind, &[("a", a)]))
        }
        Property::Semiprime => {
            let p = prime_radical(ring, RadicalMode::Fast)?;
            m.charge((ring.order() * ring.order()) as u64);
            if ring.order() <= limits.oracle_cap {
                let oracle = prime_radical(ring, RadicalMode::Oracle { cap: limits.oracle_cap })?;
                if oracle != p {
                    return Err(PredicateError::Inconsistent(format!(
                        "prime radical of {}: fast {:?} but oracle {:?}",
                        ring.name(),
                        p,
                        oracle
                    )));
                }
            }
            let semiprime = p.len() == 1;
            // In a finite ring J ≠ 0 has a nonzero power J^k with J^k R J^k = 0,
            // so a sandwich element exists exactly when the radical is nonzero.
            let gens = ring.additive_generators();
            let sandwich = ring
                .elements()
                .filter(|&a| a != z)
                .find(|&a| gens.iter().all(|&r| m.mul(m.mul(a, r), a) == z));
            if semiprime != sandwich.is_none() {
                return Err(PredicateError::Inconsistent(format!(
                    "{}: radical and sandwich tests disagree on semiprimeness",
                    ring.name()
                )));
            }
            sandwich.map(|a| Witness::new(WitnessKind::NilpotentSandwich, &[("a", a)]))
        }
        Property::StronglyRegular => ring
            .elements()
            .find(|&x| {
                let x2 = m.mul(x, x);
                ring.elements().all(|y| m.mul(y, x2) != x)
            })
            .map(|x| Witness::new(WitnessKind::NotStronglyRegular, &[("x", x)])),
        other => return Err(PredicateError::UnknownProperty(format!("{other} is not a structural property"))),
    };
    Ok(PropertyReport::new(ring, property, witness, &m))
}

pub fn radical_predicate(ring: &FiniteRing, property: Property) -> Result<PropertyReport, PredicateError> {
    let m = Meter::new(ring);
    let nil = ring.nilpotents();
    let witness = match property {
        Property::TwoPrimal => {
            let p = prime_radical(ring, RadicalMode::Fast)?;
            m.charge((ring.order() * ring.order()) as u64);
            nil.iter()
                .find(|&a| !p.contains(a))
                .map(|a| Witness::new(WitnessKind::NilpotentOutsideRadical, &[("a", a)]))
        }
        Property::Ni => {
            let sum = nil.iter().find_map(|a| {
                let b = nil.iter().find(|&b| !ring.is_nilpotent(m.add(a, b)))?;
                Some(Witness::new(WitnessKind::NilSumNotNilpotent, &[("a", a), ("b", b)]))
            });
            sum.or_else(|| {
                nil.iter().find_map(|a| {
                    let r = ring
                        .elements()
                        .find(|&r| !ring.is_nilpotent(m.mul(r, a)) || !ring.is_nilpotent(m.mul(a, r)))?;
                    Some(Witness::new(WitnessKind::NilMultipleNotNilpotent, &[("a", a), ("r", r)]))
                })
            })
        }
        other => return Err(PredicateError::UnknownProperty(format!("{other} is not a radical property"))),
    };
    Ok(PropertyReport::new(ring, property, witness, &m))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{matrix_ring, zmod, MatrixShape};

    fn u2() -> FiniteRing {
        matrix_ring(&zmod(2).unwrap(), 2, MatrixShape::UpperTriangular, 4096).unwrap()
    }

    fn m2() -> FiniteRing {
        matrix_ring(&zmod(2).unwrap(), 2, MatrixShape::Full, 4096).unwrap()
    }

    fn eval(r: &FiniteRing, p: Property) -> PropertyReport {
        let rep = p.evaluate(r, &Limits::default()).unwrap();
        if let Some(w) = &rep.witness {
            assert!(w.replays(r), "{p} witness {} does not replay", w.describe(r));
        }
        rep
    }

    #[test]
    fn upper_triangular_witnesses() {
        let u = u2();
        let e11 = u.element_by_name("[1,0;0,0]").unwrap();
        let e12 = u.element_by_name("[0,1;0,0]").unwrap();
        let nr = eval(&u, Property::NilReversible);
        assert!(!nr.value);
        let w = nr.witness.unwrap();
        assert_eq!((w.get("a"), w.get("b")), (Some(e12), Some(e11)));
        let rev = eval(&u, Property::Reversible).witness.unwrap();
        assert_eq!((rev.get("a"), rev.get("b")), (Some(e12), Some(e11)));
        assert!(!eval(&u, Property::Semicommutative).value);
        assert!(eval(&u, Property::TwoPrimal).value);
        assert!(!eval(&u, Property::Semiprime).value);
        assert!(eval(&u, Property::DirectlyFinite).value);
        assert_eq!(nil_reversible_witness_for(&u, e12), Some(e11));
    }

    #[test]
    fn full_matrix_ring_properties() {
        let m = m2();
        let ab = eval(&m, Property::Abelian);
        assert!(!ab.value);
        assert_eq!(ab.witness.unwrap().get("e"), m.element_by_name("[1,0;0,0]"));
        assert!(!eval(&m, Property::WeaklySemicommutative).value);
        assert!(!eval(&m, Property::TwoPrimal).value);
        assert!(!eval(&m, Property::Ni).value);
        assert!(eval(&m, Property::Semiprime).value);
        assert!(eval(&m, Property::RightPp).value);
        assert!(eval(&m, Property::DirectlyFinite).value);
        assert!(!eval(&m, Property::UnitCentral).value);
    }

    #[test]
    fn reduced_commutative_rings_satisfy_everything() {
        let z6 = zmod(6).unwrap();
        for p in Property::RING_LEVEL {
            let rep = eval(&z6, p);
            assert!(rep.value, "{p} fails on Z6");
        }
    }

    #[test]
    fn z4_radical_properties() {
        let z4 = zmod(4).unwrap();
        assert!(eval(&z4, Property::TwoPrimal).value);
        assert!(eval(&z4, Property::Ni).value);
        assert!(eval(&z4, Property::NilReversible).value);
        assert!(!eval(&z4, Property::Reduced).value);
        assert!(!eval(&z4, Property::SquareZero).value);
        assert!(!eval(&z4, Property::StronglyRegular).value);
        assert!(!eval(&z4, Property::RightPp).value);
    }

    #[test]
    fn zero_ring_is_vacuous() {
        let z1 = zmod(1).unwrap();
        for p in Property::RING_LEVEL {
            assert!(eval(&z1, p).value, "{p}");
        }
    }

    #[test]
    fn pp_matches_definition_by_enumeration() {
        // Oracle: compare r(a) with eR built explicitly for each idempotent.
        for r in [u2(), m2(), zmod(4).unwrap(), zmod(12).unwrap()] {
            for a in r.elements() {
                for side in [Side::Left, Side::Right] {
                    let ann = r.annihilator(side, a);
                    let expected = r.idempotents().iter().any(|e| {
                        let gen = crate::ring::ElementSet::from_members(
                            r.order(),
                            r.elements().map(|s| match side {
                                Side::Right => r.mul(e, s),
                                Side::Left => r.mul(s, e),
                            }),
                        );
                        gen == ann
                    });
                    assert_eq!(annihilator_is_principal(&r, side, a), expected);
                }
            }
        }
    }

    #[test]
    fn semicommutative_matches_triple_sweep() {
        for r in [u2(), m2(), zmod(8).unwrap()] {
            let z = r.zero();
            let oracle = r.elements().all(|a| {
                r.elements()
                    .all(|b| r.mul(a, b) != z || r.elements().all(|s| r.mul(r.mul(a, s), b) == z))
            });
            assert_eq!(eval(&r, Property::Semicommutative).value, oracle);
        }
    }
}
