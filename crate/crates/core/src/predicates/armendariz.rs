use std::ops::ControlFlow;
use std::str::FromStr;

use super::{check_budget, nominal, PredicateError, Property, PropertyReport};
use crate::config::Limits;
use crate::poly::{lex_tuple, mul_metered, pruned_factors, Order};
use crate::ring::{Elem, FiniteRing, Meter, Witness, WitnessKind};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ArmendarizKind {
    /// `fg = 0 ⟹ f_i g_j = 0`.
    Plain,
    /// `fg ∈ N(R)[x] ⟹ f_i g_j ∈ N(R)`.
    Nil,
    /// `fg = 0 ⟹ f_i g_j ∈ Z(R)`.
    Central,
}

impl FromStr for ArmendarizKind {
    type Err = PredicateError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "plain" => Ok(ArmendarizKind::Plain),
            "nil" => Ok(ArmendarizKind::Nil),
            "central" => Ok(ArmendarizKind::Central),
            _ => Err(PredicateError::UnknownKind(s.to_string())),
        }
    }
}

/// Sweeps all pairs `f, g` of degree `≤ d`, `f` outer, both in
/// lexicographic coefficient order. A `true` verdict is bounded by `d`.
///
/// For each `f` the candidates `g` come from a pruned sweep: choosing `g_k`
/// fixes coefficient `k` of `fg`, which must already satisfy the
/// hypothesis. The budget counts all `|R|^(2(d+1))` pairs regardless of
/// pruning.
pub fn armendariz_bounded(
    r: &FiniteRing,
    kind: ArmendarizKind,
    d: usize,
    limits: &Limits,
) -> Result<PropertyReport, PredicateError> {
    let n = r.order();
    let len = d + 1;
    check_budget(nominal(n, 2 * len), limits)?;
    let m = Meter::new(r);
    let z = r.zero();
    let hyp = |c: Elem| match kind {
        ArmendarizKind::Nil => r.is_nilpotent(c),
        _ => c == z,
    };
    let concl = |c: Elem| match kind {
        ArmendarizKind::Plain => c == z,
        ArmendarizKind::Nil => r.is_nilpotent(c),
        ArmendarizKind::Central => r.center().contains(c),
    };
    let (property, wkind) = match kind {
        ArmendarizKind::Plain => (Property::Armendariz(d), WitnessKind::ArmendarizPair),
        ArmendarizKind::Nil => (Property::NilArmendariz(d), WitnessKind::NilArmendarizPair),
        ArmendarizKind::Central => (Property::CentralArmendariz(d), WitnessKind::CentralArmendarizPair),
    };
    let witness = (0..n.pow(len as u32)).find_map(|t| {
        let f = lex_tuple(t, n, len);
        // A constant f (or any f whose products already satisfy the
        // conclusion for every g) cannot fail.
        if f.iter().all(|&a| r.elements().all(|b| concl(r.mul(a, b)))) {
            m.charge((len * n) as u64);
            return None;
        }
        pruned_factors(&m, &f, len, Order::Right, &|_, c| hyp(c), &mut |g| {
            let prod = mul_metered(&m, &f, g);
            if !prod.iter().all(|&c| hyp(c)) {
                return ControlFlow::Continue(());
            }
            let bad = f.iter().any(|&a| g.iter().any(|&b| !concl(m.mul(a, b))));
            if bad {
                ControlFlow::Break(
                    Witness::new(wkind, &[])
                        .with_poly("f", &crate::poly::normalize(r, f.clone()))
                        .with_poly("g", &crate::poly::normalize(r, g.to_vec())),
                )
            } else {
                ControlFlow::Continue(())
            }
        })
    });
    Ok(PropertyReport::new(r, property, witness, &m).with_bound(d))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{matrix_ring, zmod, MatrixShape};

    fn brute_force(r: &FiniteRing, kind: ArmendarizKind, d: usize) -> Option<(Vec<Elem>, Vec<Elem>)> {
        let n = r.order();
        let len = d + 1;
        let z = r.zero();
        for f in (0..n.pow(len as u32)).map(|t| lex_tuple(t, n, len)) {
            for g in (0..n.pow(len as u32)).map(|t| lex_tuple(t, n, len)) {
                let p = crate::poly::dense_mul(r, &f, &g);
                let (h, c): (bool, Box<dyn Fn(Elem) -> bool>) = match kind {
                    ArmendarizKind::Plain => (p.is_empty(), Box::new(|x| x == z)),
                    ArmendarizKind::Nil => (p.iter().all(|&x| r.is_nilpotent(x)), Box::new(|x| r.is_nilpotent(x))),
                    ArmendarizKind::Central => (p.is_empty(), Box::new(|x| r.center().contains(x))),
                };
                if h && f.iter().any(|&a| g.iter().any(|&b| !c(r.mul(a, b)))) {
                    return Some((crate::poly::normalize(r, f), crate::poly::normalize(r, g)));
                }
            }
        }
        None
    }

    #[test]
    fn upper_triangular_plain_witness() {
        let u = matrix_ring(&zmod(2).unwrap(), 2, MatrixShape::UpperTriangular, 4096).unwrap();
        let rep = armendariz_bounded(&u, ArmendarizKind::Plain, 1, &Limits::default()).unwrap();
        assert!(!rep.value);
        assert_eq!(rep.bounded, Some(1));
        let w = rep.witness.unwrap();
        assert!(w.replays(&u));
        let name = |s| u.element_by_name(s).unwrap();
        assert_eq!(w.poly("f"), vec![name("[1,0;0,0]"), name("[0,1;0,0]")]);
        assert_eq!(w.poly("g"), vec![name("[0,0;0,1]"), name("[0,1;0,0]")]);
    }

    #[test]
    fn sweeps_agree_with_brute_force() {
        let rings = [
            zmod(4).unwrap(),
            zmod(6).unwrap(),
            matrix_ring(&zmod(2).unwrap(), 2, MatrixShape::UpperTriangular, 4096).unwrap(),
        ];
        for r in &rings {
            for kind in [ArmendarizKind::Plain, ArmendarizKind::Nil, ArmendarizKind::Central] {
                let rep = armendariz_bounded(r, kind, 1, &Limits::default()).unwrap();
                let got = rep.witness.map(|w| (w.poly("f"), w.poly("g")));
                assert_eq!(got, brute_force(r, kind, 1), "{} {:?}", r.name(), kind);
            }
        }
    }

    #[test]
    fn z4_degree_two_and_budget() {
        let z4 = zmod(4).unwrap();
        assert!(armendariz_bounded(&z4, ArmendarizKind::Plain, 2, &Limits::default()).unwrap().value);
        let small = Limits {
            poly_budget: 1000,
            ..Limits::default()
        };
        assert!(matches!(
            armendariz_bounded(&z4, ArmendarizKind::Plain, 2, &small),
            Err(PredicateError::BudgetExceeded { needed: 4096, .. })
        ));
        assert!("sideways".parse::<ArmendarizKind>().is_err());
    }
}
