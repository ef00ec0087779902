//! Library predicates against brute-force definitions on a small corpus.

use ringlab_core::harness::{build_corpus, CorpusSpec};
use ringlab_core::predicates::Property;
use ringlab_core::{Elem, FiniteRing, Limits};

fn small_rings() -> Vec<FiniteRing> {
    build_corpus(&CorpusSpec::default().with_max_order(16), &Limits::default())
        .entries
        .into_iter()
        .map(|e| e.ring)
        .collect()
}

fn nil(r: &FiniteRing) -> Vec<Elem> {
    r.elements().filter(|&a| (1..=r.order() as u32 + 1).any(|k| r.pow(a, k) == r.zero())).collect()
}

fn central(r: &FiniteRing, c: Elem) -> bool {
    r.elements().all(|x| r.mul(c, x) == r.mul(x, c))
}

fn oracle(r: &FiniteRing, p: Property) -> bool {
    let z = r.zero();
    let n = nil(r);
    let all = || r.elements();
    match p {
        Property::Reduced => n.len() == 1,
        Property::Reversible => all().all(|a| all().all(|b| (r.mul(a, b) == z) <= (r.mul(b, a) == z))),
        Property::NilReversible => n.iter().all(|&a| all().all(|b| (r.mul(a, b) == z) == (r.mul(b, a) == z))),
        Property::Semicommutative => {
            all().all(|a| all().all(|b| r.mul(a, b) != z || all().all(|x| r.mul(r.mul(a, x), b) == z)))
        }
        Property::WeaklySemicommutative => all().all(|a| {
            all().all(|b| r.mul(a, b) != z || all().all(|x| n.contains(&r.mul(r.mul(a, x), b))))
        }),
        Property::Abelian => all().filter(|&e| r.mul(e, e) == e).all(|e| central(r, e)),
        Property::DirectlyFinite => {
            all().all(|x| all().all(|y| r.mul(x, y) != r.one() || r.mul(y, x) == r.one()))
        }
        Property::UnitCentral => all()
            .filter(|&u| all().any(|v| r.mul(u, v) == r.one() && r.mul(v, u) == r.one()))
            .all(|u| central(r, u)),
        Property::Ni => n.iter().all(|&a| {
            n.iter().all(|&b| n.contains(&r.add(a, b))) && all().all(|x| n.contains(&r.mul(a, x)) && n.contains(&r.mul(x, a)))
        }),
        Property::SquareZero => n.iter().all(|&a| r.mul(a, a) == z),
        _ => unreachable!(),
    }
}

#[test]
fn elementwise_predicates_match_definitions() {
    let props = [
        Property::Reduced,
        Property::Reversible,
        Property::NilReversible,
        Property::Semicommutative,
        Property::WeaklySemicommutative,
        Property::Abelian,
        Property::DirectlyFinite,
        Property::UnitCentral,
        Property::Ni,
    ];
    let limits = Limits::default();
    let rings = small_rings();
    assert!(rings.len() > 30);
    for r in &rings {
        for p in props {
            let rep = p.evaluate(r, &limits).unwrap();
            assert_eq!(rep.value, oracle(r, p), "{p} on {}", r.name());
            if let Some(w) = &rep.witness {
                assert!(!rep.value);
                assert!(w.replays(r), "{p} witness on {}", r.name());
            }
        }
    }
}

/// `N(R)` is nil, so 2-primal means `N(R)` is the intersection of all prime
/// ideals; on finite rings that is the Jacobson radical, computed here from
/// its definition.
#[test]
fn two_primal_matches_jacobson_definition() {
    let limits = Limits::default();
    for r in small_rings() {
        let units: Vec<Elem> = r
            .elements()
            .filter(|&u| r.elements().any(|v| r.mul(u, v) == r.one() && r.mul(v, u) == r.one()))
            .collect();
        let jac: Vec<Elem> = r
            .elements()
            .filter(|&a| r.elements().all(|x| units.contains(&r.sub(r.one(), r.mul(x, a)))))
            .collect();
        let expect = jac == nil(&r);
        assert_eq!(Property::TwoPrimal.evaluate(&r, &limits).unwrap().value, expect, "{}", r.name());
    }
}

/// Armendariz at degree one from the definition.
#[test]
fn armendariz_degree_one() {
    let limits = Limits::default();
    for r in small_rings().into_iter().filter(|r| r.order() <= 8) {
        let z = r.zero();
        let els: Vec<Elem> = r.elements().collect();
        let mut arm = true;
        'outer: for &a0 in &els {
            for &a1 in &els {
                for &b0 in &els {
                    for &b1 in &els {
                        let prod = [
                            r.mul(a0, b0),
                            r.add(r.mul(a0, b1), r.mul(a1, b0)),
                            r.mul(a1, b1),
                        ];
                        if prod.iter().all(|&c| c == z)
                            && [a0, a1].iter().any(|&a| [b0, b1].iter().any(|&b| r.mul(a, b) != z))
                        {
                            arm = false;
                            break 'outer;
                        }
                    }
                }
            }
        }
        let rep = Property::Armendariz(1).evaluate(&r, &limits).unwrap();
        assert_eq!(rep.value, arm, "{}", r.name());
        assert_eq!(rep.bounded, Some(1));
    }
}

#[test]
fn implications_hold_on_small_rings() {
    let limits = Limits::default();
    let v = |r: &FiniteRing, p: Property| p.evaluate(r, &limits).unwrap().value;
    for r in small_rings() {
        if v(&r, Property::Reversible) {
            assert!(v(&r, Property::NilReversible), "{}", r.name());
        }
        if v(&r, Property::NilReversible) {
            assert!(v(&r, Property::WeaklySemicommutative), "{}", r.name());
            assert!(v(&r, Property::TwoPrimal), "{}", r.name());
            assert!(v(&r, Property::Abelian), "{}", r.name());
        }
    }
}

#[test]
fn bounded_sweeps_respect_the_budget() {
    let r = ringlab_core::constructions::zmod(64).unwrap();
    let limits = Limits {
        poly_budget: 1 << 10,
        ..Limits::default()
    };
    assert!(Property::Armendariz(2).evaluate(&r, &limits).is_err());
}
