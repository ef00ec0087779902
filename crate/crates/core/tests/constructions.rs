use ringlab_core::constructions::{
    direct_product, dorroh_extension, find_automorphisms, matrix_ring, quotient_ring, structure_algebra, trivial_extension,
    truncated_poly_ring, zmod, MatrixShape, Rng,
};
use ringlab_core::ring::{ideal_generated_by, validate_ring};
use ringlab_core::{Elem, FiniteRing};

const CAP: usize = 1 << 12;

fn split_pair(label: &str, sep: char) -> (String, String) {
    let inner = label.trim_start_matches('(').trim_end_matches(')');
    let (a, b) = inner.split_once(sep).unwrap();
    (a.to_string(), b.to_string())
}

#[test]
fn zmod_matches_integer_arithmetic() {
    for n in 1..=12 {
        let r = zmod(n).unwrap();
        assert_eq!(r.order(), n);
        for a in 0..n {
            for b in 0..n {
                let (x, y) = (r.element_by_name(&a.to_string()).unwrap(), r.element_by_name(&b.to_string()).unwrap());
                assert_eq!(r.label(r.add(x, y)), ((a + b) % n).to_string());
                assert_eq!(r.label(r.mul(x, y)), ((a * b) % n).to_string());
            }
        }
    }
}

#[test]
fn product_is_componentwise() {
    let (a, b) = (zmod(4).unwrap(), zmod(3).unwrap());
    let p = direct_product(&a, &b).unwrap();
    assert_eq!(p.order(), 12);
    for x in p.elements() {
        for y in p.elements() {
            let (x1, x2) = split_pair(&p.label(x), ',');
            let (y1, y2) = split_pair(&p.label(y), ',');
            let (z1, z2) = split_pair(&p.label(p.mul(x, y)), ',');
            let e = |r: &FiniteRing, s: &str| r.element_by_name(s).unwrap();
            assert_eq!(e(&a, &z1), a.mul(e(&a, &x1), e(&a, &y1)));
            assert_eq!(e(&b, &z2), b.mul(e(&b, &x2), e(&b, &y2)));
        }
    }
}

#[test]
fn matrix_orders() {
    let z2 = zmod(2).unwrap();
    let z3 = zmod(3).unwrap();
    assert_eq!(matrix_ring(&z2, 2, MatrixShape::Full, CAP).unwrap().order(), 16);
    assert_eq!(matrix_ring(&z3, 2, MatrixShape::Full, CAP).unwrap().order(), 81);
    assert_eq!(matrix_ring(&z2, 2, MatrixShape::UpperTriangular, CAP).unwrap().order(), 8);
    assert_eq!(matrix_ring(&z2, 3, MatrixShape::UpperTriangular, CAP).unwrap().order(), 64);
    assert!(matrix_ring(&z3, 3, MatrixShape::Full, CAP).is_err());
}

/// Entries of a `[a,b;c,d]` label over `Z_n`, as integers.
fn entries(label: &str) -> Vec<usize> {
    label
        .trim_matches(|c| c == '[' || c == ']')
        .split([',', ';'])
        .map(|s| s.parse().unwrap())
        .collect()
}

#[test]
fn congruence_ring_is_the_matrix_subring() {
    for m in [2usize, 4] {
        let n = 2 * m;
        let c = matrix_ring(&zmod(n).unwrap(), 2, MatrixShape::Congruence2, CAP).unwrap();
        // Products recomputed as plain 2x2 matrix products over Z_n.
        for a in c.elements() {
            for b in c.elements() {
                let (p, q) = (entries(&c.label(a)), entries(&c.label(b)));
                let prod = [
                    (p[0] * q[0] + p[1] * q[2]) % n,
                    (p[0] * q[1] + p[1] * q[3]) % n,
                    (p[2] * q[0] + p[3] * q[2]) % n,
                    (p[2] * q[1] + p[3] * q[3]) % n,
                ];
                assert_eq!(entries(&c.label(c.mul(a, b))), prod);
            }
        }
        validate_ring(c.to_raw()).unwrap();
    }
}

#[test]
fn trivial_extension_rule() {
    let r = zmod(4).unwrap();
    let t = trivial_extension(&r, CAP).unwrap();
    assert_eq!(t.order(), 16);
    let e = |s: &str| r.element_by_name(s).unwrap();
    for x in t.elements() {
        for y in t.elements() {
            let (r1, p1) = split_pair(&t.label(x), '|');
            let (r2, p2) = split_pair(&t.label(y), '|');
            let (r3, p3) = split_pair(&t.label(t.mul(x, y)), '|');
            assert_eq!(e(&r3), r.mul(e(&r1), e(&r2)));
            assert_eq!(e(&p3), r.add(r.mul(e(&r1), e(&p2)), r.mul(e(&p1), e(&r2))));
        }
    }
}

#[test]
fn dorroh_orders() {
    assert_eq!(dorroh_extension(&Rng::null(2), 2, CAP).unwrap().order(), 4);
    let z8 = zmod(8).unwrap();
    let two = ideal_generated_by(&z8, &[2]).unwrap();
    // Z_8 × 2Z_8 with Z_8 coefficients: 8 · 4.
    let d = dorroh_extension(&Rng::from_ideal(&z8, &two), 8, CAP).unwrap();
    assert_eq!(d.order(), 32);
    validate_ring(d.to_raw()).unwrap();
}

#[test]
fn quotients() {
    let z12 = zmod(12).unwrap();
    let i = ideal_generated_by(&z12, &[z12.element_by_name("4").unwrap()]).unwrap();
    let q = quotient_ring(&z12, &i).unwrap();
    assert_eq!(q.ring.order(), 4);
    for a in z12.elements() {
        for b in z12.elements() {
            assert_eq!(q.projection[z12.mul(a, b)], q.ring.mul(q.projection[a], q.projection[b]));
        }
    }
}

#[test]
fn truncation_nilpotent_variable() {
    let r = zmod(3).unwrap();
    let t = truncated_poly_ring(&r, 3, None, CAP).unwrap();
    assert_eq!(t.order(), 27);
    let x = t.element_by_name("1*x").unwrap();
    assert_ne!(t.mul(x, x), t.zero());
    assert_eq!(t.pow(x, 3), t.zero());
    assert!(t.is_commutative());
}

#[test]
fn skew_truncation_over_gf4() {
    let gf4 = ringlab_core::harness::builtin_algebras()
        .into_iter()
        .find(|a| a.name == "GF4")
        .map(|a| structure_algebra(&a, CAP).unwrap())
        .unwrap();
    let autos = find_automorphisms(&gf4, CAP).unwrap();
    assert_eq!(autos.len(), 2);
    let frob = autos.iter().find(|a| !a.is_identity()).unwrap();
    for a in gf4.elements() {
        assert_eq!(frob.apply(a), gf4.mul(a, a));
    }
    let s = truncated_poly_ring(&gf4, 2, Some(frob), CAP).unwrap();
    assert_eq!(s.order(), 16);
    assert!(!s.is_commutative());
    let x = s.element_by_name("1*x").unwrap();
    let t = s.element_by_name("t").unwrap();
    // x·t = t²·x
    let t2x = s.mul(s.mul(t, t), x);
    assert_eq!(s.mul(x, t), t2x);
}

fn is_ring_hom(src: &FiniteRing, dst: &FiniteRing, map: &[Elem]) -> bool {
    src.elements().all(|a| {
        src.elements()
            .all(|b| map[src.add(a, b)] == dst.add(map[a], map[b]) && map[src.mul(a, b)] == dst.mul(map[a], map[b]))
    })
}

#[test]
fn automorphisms_are_homomorphisms() {
    let u = matrix_ring(&zmod(2).unwrap(), 2, MatrixShape::UpperTriangular, CAP).unwrap();
    let autos = find_automorphisms(&u, CAP).unwrap();
    assert!(!autos.is_empty());
    for a in &autos {
        assert!(is_ring_hom(&u, &u, a.image()));
    }
}
