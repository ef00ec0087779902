//! Ring builders. Every builder returns a ring that has passed the full
//! axiom check, with a fixed element numbering so witnesses are reproducible:
//!
//! * `zmod(n)`: residue `k` is element `k`;
//! * products: `(i, j)` is `i·|S| + j`;
//! * matrices, coefficient vectors and coordinate vectors: little-endian
//!   digit expansion over the entries in row-major order (the first entry is
//!   the least significant digit);
//! * trivial extension `(r, p)` is `r·|R| + p`; Dorroh pair `(a, s)` is
//!   `a·m + s`;
//! * quotient cosets are numbered by their least representative.

mod algebra;
mod automorphism;
mod extension;
mod matrix;
mod polytrunc;
mod quotient;

use rayon::prelude::*;
use thiserror::Error;

use crate::ring::{validate_flat, Elem, FiniteRing, RingError};

pub use algebra::{structure_algebra, PresentedAlgebra};
pub use automorphism::{find_automorphisms, AutomorphismMap};
pub use extension::{dorroh_extension, trivial_extension, Rng};
pub use matrix::{matrix_ring, MatrixShape};
pub use polytrunc::truncated_poly_ring;
pub(crate) use polytrunc::poly_label;
pub use quotient::{quotient_ring, Quotient};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error("unsupported shape: {0}")]
    ShapeUnsupported(String),
    #[error("construction would have order {order}, above the cap {cap}")]
    OrderCapExceeded { order: u128, cap: usize },
    #[error("element {element} is not annihilated by the modulus {modulus}")]
    ModulusMismatch { element: Elem, modulus: usize },
    #[error("invalid automorphism: {0}")]
    InvalidAutomorphism(String),
    #[error("basis products are not associative at ({0}, {1}, {2})")]
    NotAssociative(usize, usize, usize),
    #[error("unit vector is not a two-sided identity (fails on basis element {0})")]
    NoUnit(usize),
    #[error("invalid algebra presentation: {0}")]
    InvalidPresentation(String),
}

pub(crate) fn check_cap(order: u128, cap: usize) -> Result<usize, ConstructionError> {
    if order > cap as u128 {
        Err(ConstructionError::OrderCapExceeded { order, cap })
    } else {
        Ok(order as usize)
    }
}

/// Fills both tables (rows in parallel; the result is identical to a
/// sequential fill) and validates them.
pub(crate) fn tabulate(
    name: String,
    n: usize,
    zero: Elem,
    one: Elem,
    names: Option<Vec<String>>,
    add: impl Fn(Elem, Elem) -> Elem + Sync,
    mul: impl Fn(Elem, Elem) -> Elem + Sync,
) -> Result<FiniteRing, ConstructionError> {
    let fill = |f: &(dyn Fn(Elem, Elem) -> Elem + Sync)| -> Vec<u32> {
        (0..n)
            .into_par_iter()
            .flat_map_iter(|a| (0..n).map(move |b| f(a, b) as u32))
            .collect()
    };
    let add_t = fill(&add);
    let mul_t = fill(&mul);
    Ok(validate_flat(name, n, add_t, mul_t, zero, one, names)?)
}

/// Integers modulo `n`.
pub fn zmod(n: usize) -> Result<FiniteRing, ConstructionError> {
    if n == 0 {
        return Err(ConstructionError::ShapeUnsupported("zmod needs n >= 1".into()));
    }
    let names = (0..n).map(|k| k.to_string()).collect();
    tabulate(
        format!("Z{n}"),
        n,
        0,
        1 % n,
        Some(names),
        |a, b| (a + b) % n,
        |a, b| (a * b) % n,
    )
}

/// `R × S` with componentwise operations; `(i, j)` is element `i·|S| + j`.
pub fn direct_product(r: &FiniteRing, s: &FiniteRing) -> Result<FiniteRing, ConstructionError> {
    direct_product_capped(r, s, usize::MAX)
}

pub fn direct_product_capped(
    r: &FiniteRing,
    s: &FiniteRing,
    cap: usize,
) -> Result<FiniteRing, ConstructionError> {
    let m = s.order();
    let n = check_cap(r.order() as u128 * m as u128, cap)?;
    let names = (0..n)
        .map(|x| format!("({},{})", r.label(x / m), s.label(x % m)))
        .collect();
    let pair = |x: Elem| (x / m, x % m);
    tabulate(
        format!("{}x{}", wrap(r.name()), wrap(s.name())),
        n,
        r.zero() * m + s.zero(),
        r.one() * m + s.one(),
        Some(names),
        |x, y| {
            let ((a, b), (c, d)) = (pair(x), pair(y));
            r.add(a, c) * m + s.add(b, d)
        },
        |x, y| {
            let ((a, b), (c, d)) = (pair(x), pair(y));
            r.mul(a, c) * m + s.mul(b, d)
        },
    )
}

/// Parenthesizes compound ring names when they are embedded in another.
pub(crate) fn wrap(name: &str) -> String {
    if name.chars().all(|c| c.is_ascii_alphanumeric()) {
        name.to_string()
    } else {
        format!("({name})")
    }
}

/// Little-endian digit expansion of `index` in base `base`, `len` digits.
pub(crate) fn digits(mut index: usize, base: usize, len: usize) -> Vec<Elem> {
    let mut out = Vec::with_capacity(len);
    for _ in 0..len {
        out.push(index % base);
        index /= base;
    }
    out
}

pub(crate) fn from_digits(digits: &[Elem], base: usize) -> usize {
    digits.iter().rev().fold(0, |acc, &d| acc * base + d)
}
