use std::ops::ControlFlow;

use super::nilpotency::dense_nilpotency_with;
use super::{lex_tuple, mul_metered, normalize, pruned_factors, structural_nilpotency_bound, DenseNilpotency, Order, PolyError};
use crate::config::Limits;
use crate::predicates::{check_budget, is_nil_reversible, nominal, zero_divisor_predicate, Property, PropertyReport};
use crate::ring::{Elem, FiniteRing, Meter, Witness, WitnessKind};

fn require_nil_reversible(r: &FiniteRing) -> Result<(), PolyError> {
    if is_nil_reversible(r).value {
        Ok(())
    } else {
        Err(PolyError::HypothesisNotMet(format!("{} is not nil-reversible", r.name())))
    }
}

/// `N(R[x]) = N(R)[x]` restricted to degree `≤ d`: a polynomial is
/// nilpotent exactly when all of its coefficients are.
pub fn check_nilradical_identity(r: &FiniteRing, d: usize, limits: &Limits) -> Result<PropertyReport, PolyError> {
    require_nil_reversible(r)?;
    let n = r.order();
    check_budget(nominal(n, d + 1), limits)?;
    let m = Meter::new(r);
    let bound = structural_nilpotency_bound(r);
    let witness = (0..n.pow(d as u32 + 1)).find_map(|t| {
        let f = normalize(r, lex_tuple(t, n, d + 1));
        let coeffs_nil = f.iter().all(|&c| r.is_nilpotent(c));
        m.charge(bound as u64 * (f.len() * f.len()) as u64);
        let nilpotent = matches!(dense_nilpotency_with(r, &f, bound), DenseNilpotency::Nilpotent(_));
        (nilpotent != coeffs_nil).then(|| Witness::new(WitnessKind::PolyNilradicalMismatch, &[]).with_poly("f", &f))
    });
    Ok(PropertyReport::new(r, format!("nilradical-identity:{d}"), witness, &m).with_bound(d))
}

/// For tuples `(f_1, …, f_n)` of degree `≤ d` whose product has nilpotent
/// coefficients, every product `c_1 ⋯ c_n` with `c_i ∈ C_{f_i}` is nilpotent.
///
/// The first `n - 1` factors are enumerated outright; the last is found by
/// a pruned sweep, since its `k`-th coefficient fixes coefficient `k` of
/// the product.
pub fn check_coefficient_nil_transfer(
    r: &FiniteRing,
    n: usize,
    d: usize,
    limits: &Limits,
) -> Result<PropertyReport, PolyError> {
    require_nil_reversible(r)?;
    if n == 0 {
        return Err(PolyError::HypothesisNotMet("at least one factor is needed".into()));
    }
    let order = r.order();
    let len = d + 1;
    check_budget(nominal(order, n * len), limits)?;
    let m = Meter::new(r);
    let nil = |_: usize, c: Elem| r.is_nilpotent(c);
    let prefixes = order.pow(((n - 1) * len) as u32);
    let witness = (0..prefixes).find_map(|t| {
        let flat = lex_tuple(t, order, (n - 1) * len);
        let prefix: Vec<Vec<Elem>> = flat.chunks(len).map(|c| normalize(r, c.to_vec())).collect();
        if prefix.iter().any(|f| f.is_empty()) {
            return None;
        }
        let p = prefix.iter().fold(vec![r.one()], |acc, f| mul_metered(&m, &acc, f));
        let p = normalize(r, p);
        pruned_factors(&m, &p, len, Order::Right, &nil, &mut |last| {
            let product = mul_metered(&m, &p, last);
            if !product.iter().all(|&c| r.is_nilpotent(c)) {
                return ControlFlow::Continue(());
            }
            let mut factors = prefix.clone();
            factors.push(normalize(r, last.to_vec()));
            match bad_choice(r, &m, &factors) {
                Some(choice) => {
                    let mut w = Witness::new(WitnessKind::CoefficientTransfer, &[]);
                    for (i, f) in factors.iter().enumerate() {
                        w = w.with_poly(&format!("f{}", i + 1), f);
                    }
                    for (i, &c) in choice.iter().enumerate() {
                        w.elements.push(crate::ring::Role {
                            role: format!("c{}", i + 1),
                            element: c,
                        });
                    }
                    ControlFlow::Break(w)
                }
                None => ControlFlow::Continue(()),
            }
        })
    });
    Ok(PropertyReport::new(r, format!("coefficient-transfer:{n}:{d}"), witness, &m).with_bound(d))
}

/// First choice `(c_1, …, c_n)` of coefficients, in lexicographic order of
/// positions, whose product is not nilpotent.
fn bad_choice(r: &FiniteRing, m: &Meter, factors: &[Vec<Elem>]) -> Option<Vec<Elem>> {
    fn rec(r: &FiniteRing, m: &Meter, factors: &[Vec<Elem>], acc: Elem, chosen: &mut Vec<Elem>) -> bool {
        let Some((f, rest)) = factors.split_first() else {
            return !r.is_nilpotent(acc);
        };
        for &c in f {
            chosen.push(c);
            if rec(r, m, rest, m.mul(acc, c), chosen) {
                return true;
            }
            chosen.pop();
        }
        false
    }
    let mut chosen = Vec::new();
    rec(r, m, factors, r.one(), &mut chosen).then_some(chosen)
}

/// Bounded nil-reversibility of `R[x]`: for nilpotent `f` and arbitrary `g`
/// of degree `≤ d`, `fg = 0 ⟺ gf = 0`.
///
/// For fixed `f` both `{g : fg = 0}` and `{g : gf = 0}` are produced in
/// lexicographic order by pruned sweeps; the witness is the least `g` in
/// their symmetric difference.
pub fn polyring_nil_reversible_bounded(r: &FiniteRing, d: usize, limits: &Limits) -> Result<PropertyReport, PolyError> {
    let n = r.order();
    let len = d + 1;
    check_budget(nominal(n, 2 * len), limits)?;
    let m = Meter::new(r);
    let bound = structural_nilpotency_bound(r);
    let zero = |_: usize, c: Elem| c == r.zero();
    let witness = (0..n.pow(len as u32)).find_map(|t| {
        let f = normalize(r, lex_tuple(t, n, len));
        if f.is_empty() || dense_nilpotency_with(r, &f, bound) == DenseNilpotency::NotNilpotent {
            return None;
        }
        let annihilated = |order: Order| {
            let mut out = Vec::new();
            pruned_factors::<()>(&m, &f, len, order, &zero, &mut |g| {
                let p = match order {
                    Order::Right => mul_metered(&m, &f, g),
                    Order::Left => mul_metered(&m, g, &f),
                };
                if p.is_empty() {
                    out.push(g.to_vec());
                }
                ControlFlow::Continue(())
            });
            out
        };
        let right = annihilated(Order::Right);
        let left = annihilated(Order::Left);
        let g = first_difference(&right, &left)?;
        Some(
            Witness::new(WitnessKind::PolyAnnihilatorAsymmetry, &[])
                .with_poly("f", &f)
                .with_poly("g", &normalize(r, g)),
        )
    });
    Ok(PropertyReport::new(r, format!("polyring-nil-reversible:{d}"), witness, &m).with_bound(d))
}

fn first_difference(a: &[Vec<Elem>], b: &[Vec<Elem>]) -> Option<Vec<Elem>> {
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Equal => {
                i += 1;
                j += 1;
            }
            std::cmp::Ordering::Less => return Some(a[i].clone()),
            std::cmp::Ordering::Greater => return Some(b[j].clone()),
        }
    }
    a.get(i).or_else(|| b.get(j)).cloned()
}

/// Under the square-zero condition: `xyx = 0` or `xy² = 0` forces `xy = 0`,
/// and `y²x = 0` forces `yx = 0`, for `x ∈ R`, `y ∈ N(R)`.
pub fn check_lemma_products(r: &FiniteRing) -> Result<PropertyReport, PolyError> {
    if !zero_divisor_predicate(r, Property::SquareZero)?.value {
        return Err(PolyError::HypothesisNotMet(format!(
            "{} fails the square-zero condition",
            r.name()
        )));
    }
    let m = Meter::new(r);
    let z = r.zero();
    let witness = r.elements().find_map(|x| {
        r.nilpotents().iter().find_map(|y| {
            let xy = m.mul(x, y);
            let yx = m.mul(y, x);
            let first = xy != z && (m.mul(xy, x) == z || m.mul(xy, y) == z);
            let second = yx != z && m.mul(m.mul(y, y), x) == z;
            (first || second).then(|| Witness::new(WitnessKind::LemmaProducts, &[("x", x), ("y", y)]))
        })
    });
    Ok(PropertyReport::new(r, "lemma-products", witness, &m))
}
