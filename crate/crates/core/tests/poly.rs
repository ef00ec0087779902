use ringlab_core::constructions::{matrix_ring, zmod, MatrixShape};
use ringlab_core::poly::{
    check_coefficient_nil_transfer, check_lemma_products, check_nilradical_identity, dense_mul, parse_poly,
    poly_is_nilpotent, polyring_nil_reversible_bounded, structural_nilpotency_bound, Poly, PolyError,
};
use ringlab_core::{Elem, FiniteRing, Limits};

fn u2() -> FiniteRing {
    matrix_ring(&zmod(2).unwrap(), 2, MatrixShape::UpperTriangular, 1 << 12).unwrap()
}

fn schoolbook(r: &FiniteRing, f: &[Elem], g: &[Elem]) -> Vec<Elem> {
    let mut out = vec![r.zero(); f.len() + g.len() - 1];
    for (i, &a) in f.iter().enumerate() {
        for (j, &b) in g.iter().enumerate() {
            out[i + j] = r.add(out[i + j], r.mul(a, b));
        }
    }
    while out.len() > 1 && out.last() == Some(&r.zero()) {
        out.pop();
    }
    out
}

/// Least `k ≤ cap` with `f^k = 0`, by repeated multiplication.
fn naive_index(r: &FiniteRing, f: &[Elem], cap: u32) -> Option<u32> {
    let mut p = f.to_vec();
    for k in 1..=cap {
        if p.iter().all(|&c| c == r.zero()) {
            return Some(k);
        }
        p = schoolbook(r, &p, f);
    }
    None
}

fn all_polys(r: &FiniteRing, len: usize) -> impl Iterator<Item = Vec<Elem>> + '_ {
    let n = r.order();
    (0..n.pow(len as u32)).map(move |mut t| {
        (0..len)
            .map(|_| {
                let c = t % n;
                t /= n;
                c
            })
            .collect()
    })
}

#[test]
fn z4_nilpotent_polynomials() {
    let r = zmod(4).unwrap();
    let limits = Limits::default();
    let mut count = 0;
    for f in all_polys(&r, 3) {
        let cert = poly_is_nilpotent(&Poly::new(&r, f.clone()), &limits).unwrap();
        assert_eq!(cert.map(|c| c.exponent), naive_index(&r, &f, 64), "{f:?}");
        count += cert.is_some() as usize;
    }
    assert_eq!(count, 8);
}

#[test]
fn u2_nilpotency_matches_powering() {
    let r = u2();
    let limits = Limits::default();
    for f in all_polys(&r, 2) {
        let cert = poly_is_nilpotent(&Poly::new(&r, f.clone()), &limits).unwrap();
        assert_eq!(cert.map(|c| c.exponent), naive_index(&r, &f, 32), "{f:?}");
        if let Some(c) = cert {
            assert!(c.exponent <= structural_nilpotency_bound(&r));
        }
    }
}

#[test]
fn products_match_schoolbook() {
    let r = u2();
    for f in all_polys(&r, 2) {
        for g in all_polys(&r, 2).step_by(3) {
            let mut lib = dense_mul(&r, &f, &g);
            if lib.is_empty() {
                lib.push(r.zero());
            }
            assert_eq!(lib, schoolbook(&r, &f, &g));
        }
    }
}

#[test]
fn parse_literals() {
    let r = zmod(4).unwrap();
    assert_eq!(parse_poly(&r, "1 + 2*x^2").unwrap(), vec![1, 0, 2]);
    assert_eq!(parse_poly(&r, "[3]*x + x^2 + x^2").unwrap(), vec![0, 3, 2]);
    assert!(parse_poly(&r, "5*x").is_err());
    let u = u2();
    let f = parse_poly(&u, "[1,0;0,0] + [0,1;0,0]*x").unwrap();
    assert_eq!(f, vec![u.element_by_name("[1,0;0,0]").unwrap(), u.element_by_name("[0,1;0,0]").unwrap()]);
}

#[test]
fn polynomial_checks_over_z4() {
    let r = zmod(4).unwrap();
    let limits = Limits::default();
    for d in 1..=2 {
        assert!(polyring_nil_reversible_bounded(&r, d, &limits).unwrap().value);
        assert!(check_nilradical_identity(&r, d, &limits).unwrap().value);
    }
    assert!(check_coefficient_nil_transfer(&r, 2, 1, &limits).unwrap().value);
    assert!(matches!(check_lemma_products(&r), Err(PolyError::HypothesisNotMet(_))));
    assert!(check_lemma_products(&zmod(6).unwrap()).unwrap().value);
}

#[test]
fn hypotheses_are_enforced() {
    let r = u2();
    let limits = Limits::default();
    assert!(matches!(check_nilradical_identity(&r, 1, &limits), Err(PolyError::HypothesisNotMet(_))));
    assert!(matches!(check_lemma_products(&r), Err(PolyError::HypothesisNotMet(_))));
    let rep = polyring_nil_reversible_bounded(&r, 1, &limits).unwrap();
    assert!(!rep.value);
    let w = rep.witness.unwrap();
    let (f, g) = (w.poly("f"), w.poly("g"));
    assert!(naive_index(&r, &f, 8).is_some());
    let fg = schoolbook(&r, &f, &g).iter().all(|&c| c == r.zero());
    let gf = schoolbook(&r, &g, &f).iter().all(|&c| c == r.zero());
    assert_ne!(fg, gf);
}
