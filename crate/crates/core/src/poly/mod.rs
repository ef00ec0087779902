//! Exact polynomial arithmetic over a finite ring, polynomial nilpotency,
//! and bounded sweeps over polynomials of degree at most `d`.

mod nilpotency;
mod sweep;
mod theorems;

use std::fmt;

use thiserror::Error;

use crate::constructions::AutomorphismMap;
use crate::predicates::PredicateError;
use crate::ring::{Elem, FiniteRing, Meter};

pub use nilpotency::{
    dense_nilpotency, poly_is_nilpotent, structural_nilpotency_bound, BoundUsed, DenseNilpotency,
    NilpotencyCertificate,
};
pub(crate) use sweep::{lex_tuple, pruned_factors, Order};
pub use theorems::{
    check_coefficient_nil_transfer, check_lemma_products, check_nilradical_identity,
    polyring_nil_reversible_bounded,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("polynomials live over different rings")]
    RingMismatch,
    #[error("polynomials use different twisting automorphisms")]
    AlphaMismatch,
    #[error("nilpotency of skew polynomials is not supported")]
    SkewUnsupported,
    #[error("no zero power found up to the exponent cap {cap}")]
    ExponentCapExceeded { cap: u32 },
    #[error("f^{bound} is nonzero although every coefficient is nilpotent in a nil-reversible ring")]
    IndexBoundViolated { bound: u32 },
    #[error("hypothesis not met: {0}")]
    HypothesisNotMet(String),
    #[error("cannot parse polynomial `{0}`")]
    Parse(String),
    #[error(transparent)]
    Predicate(#[from] PredicateError),
}

/// A polynomial `Σ c_i x^i` over `ring`, optionally skewed by `x·w = α(w)·x`.
/// Trailing zero coefficients are removed; the zero polynomial has no
/// coefficients.
#[derive(Clone)]
pub struct Poly<'r> {
    ring: &'r FiniteRing,
    coeffs: Vec<Elem>,
    alpha: Option<&'r AutomorphismMap>,
}

impl<'r> Poly<'r> {
    pub fn new(ring: &'r FiniteRing, coeffs: Vec<Elem>) -> Self {
        Poly {
            ring,
            coeffs: normalize(ring, coeffs),
            alpha: None,
        }
    }

    pub fn skew(ring: &'r FiniteRing, coeffs: Vec<Elem>, alpha: &'r AutomorphismMap) -> Self {
        Poly {
            ring,
            coeffs: normalize(ring, coeffs),
            alpha: Some(alpha),
        }
    }

    pub fn parse(ring: &'r FiniteRing, literal: &str) -> Result<Self, PolyError> {
        Ok(Poly::new(ring, parse_poly(ring, literal)?))
    }

    pub fn ring(&self) -> &'r FiniteRing {
        self.ring
    }

    pub fn coeffs(&self) -> &[Elem] {
        &self.coeffs
    }

    pub fn alpha(&self) -> Option<&'r AutomorphismMap> {
        self.alpha
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `C_f`: the distinct coefficients up to the degree, ascending.
    pub fn coefficient_set(&self) -> Vec<Elem> {
        let mut c = self.coeffs.clone();
        c.sort_unstable();
        c.dedup();
        c
    }

    /// Literal with bracketed element indices, e.g. `[2] + [2]*x`.
    pub fn to_literal(&self) -> String {
        literal(self.ring, &self.coeffs)
    }
}

impl fmt::Display for Poly<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::constructions::poly_label(self.ring, &self.coeffs))
    }
}

impl fmt::Debug for Poly<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({})", self.to_literal())
    }
}

impl PartialEq for Poly<'_> {
    fn eq(&self, other: &Self) -> bool {
        same_ring(self.ring, other.ring) && self.coeffs == other.coeffs && self.alpha == other.alpha
    }
}

fn same_ring(a: &FiniteRing, b: &FiniteRing) -> bool {
    std::ptr::eq(a, b) || a.same_tables(b)
}

pub(crate) fn normalize(r: &FiniteRing, mut c: Vec<Elem>) -> Vec<Elem> {
    while c.last() == Some(&r.zero()) {
        c.pop();
    }
    c
}

/// `f·g` with `x·w = α(w)·x`: coefficient `k` accumulates `f_i α^i(g_j)`
/// over `i + j = k`. No truncation.
pub fn poly_mul<'r>(f: &Poly<'r>, g: &Poly<'r>) -> Result<Poly<'r>, PolyError> {
    if !same_ring(f.ring, g.ring) {
        return Err(PolyError::RingMismatch);
    }
    if f.alpha != g.alpha {
        return Err(PolyError::AlphaMismatch);
    }
    let r = f.ring;
    let coeffs = match f.alpha {
        None => dense_mul(r, &f.coeffs, &g.coeffs),
        Some(alpha) => {
            let mut out = vec![r.zero(); (f.coeffs.len() + g.coeffs.len()).saturating_sub(1)];
            let mut twist = AutomorphismMap::identity(r);
            for (i, &a) in f.coeffs.iter().enumerate() {
                for (j, &b) in g.coeffs.iter().enumerate() {
                    out[i + j] = r.add(out[i + j], r.mul(a, twist.apply(b)));
                }
                twist = alpha.compose(&twist);
            }
            normalize(r, out)
        }
    };
    Ok(Poly {
        ring: r,
        coeffs,
        alpha: f.alpha,
    })
}

/// Plain product of coefficient vectors, normalized.
pub fn dense_mul(r: &FiniteRing, f: &[Elem], g: &[Elem]) -> Vec<Elem> {
    mul_metered(&Meter::new(r), f, g)
}

pub(crate) fn mul_metered(m: &Meter, f: &[Elem], g: &[Elem]) -> Vec<Elem> {
    let r = m.ring();
    if f.is_empty() || g.is_empty() {
        return Vec::new();
    }
    let z = r.zero();
    let mut out = vec![z; f.len() + g.len() - 1];
    for (i, &a) in f.iter().enumerate() {
        if a == z {
            continue;
        }
        for (j, &b) in g.iter().enumerate() {
            out[i + j] = m.add(out[i + j], m.mul(a, b));
        }
    }
    normalize(r, out)
}

pub(crate) fn literal(r: &FiniteRing, c: &[Elem]) -> String {
    let terms: Vec<String> = c
        .iter()
        .enumerate()
        .filter(|&(_, &a)| a != r.zero())
        .map(|(i, &a)| match i {
            0 => format!("[{a}]"),
            1 => format!("[{a}]*x"),
            _ => format!("[{a}]*x^{i}"),
        })
        .collect();
    if terms.is_empty() {
        format!("[{}]", r.zero())
    } else {
        terms.join(" + ")
    }
}

/// Parses `c0 + c1*x + c2*x^2`. Coefficients are element names or indices
/// in square brackets; a bare `x^k` has coefficient one and repeated
/// degrees are summed. Element names containing `+` are recognised by
/// joining pieces until a known name appears.
pub fn parse_poly(r: &FiniteRing, s: &str) -> Result<Vec<Elem>, PolyError> {
    let err = || PolyError::Parse(s.to_string());
    let pieces: Vec<&str> = s.split('+').collect();
    let mut out: Vec<Elem> = Vec::new();
    let mut i = 0;
    while i < pieces.len() {
        let mut parsed = None;
        for j in i..pieces.len() {
            if let Some(t) = parse_term(r, pieces[i..=j].join("+").trim()) {
                parsed = Some((t, j));
                break;
            }
        }
        let ((c, deg), j) = parsed.ok_or_else(err)?;
        if out.len() <= deg {
            out.resize(deg + 1, r.zero());
        }
        out[deg] = r.add(out[deg], c);
        i = j + 1;
    }
    if out.is_empty() {
        return Err(err());
    }
    Ok(normalize(r, out))
}

fn parse_term(r: &FiniteRing, t: &str) -> Option<(Elem, usize)> {
    if t.is_empty() {
        return None;
    }
    if let Some(c) = r.element_by_name(t) {
        return Some((c, 0));
    }
    let (coef, var) = match t.rsplit_once('*') {
        Some((c, v)) => (Some(c.trim()), v.trim()),
        None => (None, t),
    };
    let deg = match var {
        "x" => 1,
        _ => var.strip_prefix("x^")?.trim().parse().ok()?,
    };
    let c = match coef {
        Some(c) => r.element_by_name(c)?,
        None => r.one(),
    };
    Some((c, deg))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{direct_product, find_automorphisms, matrix_ring, zmod, MatrixShape};

    #[test]
    fn z4_square_of_two_plus_two_x() {
        let z4 = zmod(4).unwrap();
        let f = Poly::parse(&z4, "[2] + [2]*x").unwrap();
        assert_eq!(f.coeffs(), &[2, 2]);
        assert!(poly_mul(&f, &f).unwrap().is_zero());
        let one = Poly::new(&z4, vec![1]);
        assert_eq!(poly_mul(&f, &one).unwrap(), f);
    }

    #[test]
    fn upper_triangular_zero_product() {
        let u = matrix_ring(&zmod(2).unwrap(), 2, MatrixShape::UpperTriangular, 4096).unwrap();
        let f = Poly::parse(&u, "[1,0;0,0] + [0,1;0,0]*x").unwrap();
        let g = Poly::parse(&u, "[0,0;0,1] + [0,1;0,0]*x").unwrap();
        assert!(poly_mul(&f, &g).unwrap().is_zero());
        assert_ne!(u.mul(f.coeffs()[0], g.coeffs()[1]), u.zero());
        assert_eq!(f.to_literal(), "[1] + [2]*x");
    }

    #[test]
    fn parse_forms() {
        let z6 = zmod(6).unwrap();
        assert_eq!(parse_poly(&z6, "3 + x^2").unwrap(), vec![3, 0, 1]);
        assert_eq!(parse_poly(&z6, "[5]*x + 2*x").unwrap(), vec![0, 1]);
        assert_eq!(parse_poly(&z6, "0").unwrap(), Vec::<Elem>::new());
        assert!(parse_poly(&z6, "7").is_err());
        assert!(parse_poly(&z6, "2*y").is_err());
        assert!(parse_poly(&z6, "").is_err());
    }

    #[test]
    fn skew_product_twists_right_factor() {
        let z2 = zmod(2).unwrap();
        let s = direct_product(&z2, &z2).unwrap();
        let autos = find_automorphisms(&s, 64).unwrap();
        let swap = &autos[1];
        let x = Poly::skew(&s, vec![0, s.one()], swap);
        let w = Poly::skew(&s, vec![2], swap);
        assert_eq!(poly_mul(&x, &w).unwrap().coeffs(), &[0, 1]);
        assert_eq!(poly_mul(&w, &x).unwrap().coeffs(), &[0, 2]);
        let plain = Poly::new(&s, vec![2]);
        assert_eq!(poly_mul(&x, &plain), Err(PolyError::AlphaMismatch));
        let z3 = zmod(3).unwrap();
        assert_eq!(
            poly_mul(&Poly::new(&z3, vec![1]), &plain),
            Err(PolyError::RingMismatch)
        );
    }

    #[test]
    fn product_is_associative_and_distributive_on_z4() {
        let z4 = zmod(4).unwrap();
        let polys: Vec<Vec<Elem>> = (0..64).map(|t| lex_tuple(t, 4, 3)).collect();
        for f in polys.iter().step_by(5) {
            for g in polys.iter().step_by(7) {
                for h in polys.iter().step_by(11) {
                    let l = dense_mul(&z4, &dense_mul(&z4, f, g), h);
                    let r = dense_mul(&z4, f, &dense_mul(&z4, g, h));
                    assert_eq!(l, r);
                    let sum: Vec<Elem> = g.iter().zip(h).map(|(&a, &b)| z4.add(a, b)).collect();
                    let lhs = dense_mul(&z4, f, &sum);
                    let a = dense_mul(&z4, f, g);
                    let b = dense_mul(&z4, f, h);
                    let len = a.len().max(b.len());
                    let rhs: Vec<Elem> = (0..len)
                        .map(|i| z4.add(*a.get(i).unwrap_or(&0), *b.get(i).unwrap_or(&0)))
                        .collect();
                    assert_eq!(lhs, normalize(&z4, rhs));
                }
            }
        }
    }
}
