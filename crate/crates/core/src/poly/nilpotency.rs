use std::collections::HashSet;

use serde::Serialize;

use super::{dense_mul, Poly, PolyError};
use crate::config::Limits;
use crate::predicates::is_nil_reversible;
use crate::ring::{Elem, FiniteRing};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum BoundUsed {
    CycleDetection,
    IndexSumBound,
}

/// `f^exponent = 0`, with `exponent` the least such power.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct NilpotencyCertificate {
    pub exponent: u32,
    pub bound_used: BoundUsed,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DenseNilpotency {
    /// Least exponent with a zero power.
    Nilpotent(u32),
    NotNilpotent,
}

/// An exponent `K` such that every nilpotent polynomial over `r` satisfies
/// `f^K = 0`.
///
/// Split `R` into its `p`-primary parts `R_p`. Left multiplication embeds
/// `(R_p/pR_p)[x]` into `D×D` matrices over `F_p[x]`, `D = dim R_p/pR_p`,
/// so a nilpotent `f` has `f^D ∈ pR_p[x]`; and `p^e R_p = 0` where `p^e`
/// is the `p`-part of the characteristic. Hence `K = max_p D·e`.
pub fn structural_nilpotency_bound(r: &FiniteRing) -> u32 {
    let mut k = 1u32;
    for (p, e) in factor(r.characteristic()) {
        let part: Vec<Elem> = r.elements().filter(|&a| is_power_of(r.additive_order(a), p)).collect();
        let mut multiples: Vec<Elem> = part.iter().map(|&a| r.scale(p, a)).collect();
        multiples.sort_unstable();
        multiples.dedup();
        let mut quotient = part.len() / multiples.len();
        let mut dim = 0u32;
        while quotient > 1 {
            quotient /= p;
            dim += 1;
        }
        k = k.max(dim * e);
    }
    k
}

fn is_power_of(mut n: usize, p: usize) -> bool {
    while n.is_multiple_of(p) {
        n /= p;
    }
    n == 1
}

fn factor(mut n: usize) -> Vec<(usize, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        let mut e = 0;
        while n.is_multiple_of(p) {
            n /= p;
            e += 1;
        }
        if e > 0 {
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Decides nilpotency of a plain polynomial by computing powers up to the
/// structural bound.
pub fn dense_nilpotency(r: &FiniteRing, f: &[Elem]) -> DenseNilpotency {
    dense_nilpotency_with(r, f, structural_nilpotency_bound(r))
}

pub(crate) fn dense_nilpotency_with(r: &FiniteRing, f: &[Elem], bound: u32) -> DenseNilpotency {
    let f = super::normalize(r, f.to_vec());
    let mut p = f.clone();
    for k in 1..=bound {
        if p.is_empty() {
            return DenseNilpotency::Nilpotent(k);
        }
        if k < bound {
            p = dense_mul(r, &p, &f);
        }
    }
    DenseNilpotency::NotNilpotent
}

/// Nilpotency of a plain polynomial.
///
/// When every coefficient is nilpotent and the ring is nil-reversible,
/// `f^l` with `l = Σ s_i + 1` (`s_i` the coefficient indices) is computed
/// and must vanish; the certificate records the least zero power. Otherwise
/// powers are iterated until zero, a repeated power, or the structural
/// bound decides the question; the configured exponent cap is a hard stop.
pub fn poly_is_nilpotent(f: &Poly, limits: &Limits) -> Result<Option<NilpotencyCertificate>, PolyError> {
    if f.alpha().is_some_and(|a| !a.is_identity()) {
        return Err(PolyError::SkewUnsupported);
    }
    let r = f.ring();
    let coeffs = f.coeffs();
    if coeffs.iter().all(|&c| r.is_nilpotent(c)) && is_nil_reversible(r).value {
        let bound: u32 = coeffs.iter().map(|&c| r.nilpotency_indices()[c]).sum::<u32>() + 1;
        let mut p = coeffs.to_vec();
        let mut k = 1;
        while !p.is_empty() {
            if k == bound {
                return Err(PolyError::IndexBoundViolated { bound });
            }
            p = dense_mul(r, &p, coeffs);
            k += 1;
        }
        return Ok(Some(NilpotencyCertificate {
            exponent: k,
            bound_used: BoundUsed::IndexSumBound,
        }));
    }
    let degree = f.degree().unwrap_or(0);
    let cap = limits
        .exponent_cap
        .unwrap_or_else(|| (r.order() * (degree + 1)).min(u32::MAX as usize) as u32);
    let structural = structural_nilpotency_bound(r);
    let mut seen: HashSet<Vec<Elem>> = HashSet::new();
    let mut p = coeffs.to_vec();
    let mut k = 1u32;
    loop {
        if p.is_empty() {
            return Ok(Some(NilpotencyCertificate {
                exponent: k,
                bound_used: BoundUsed::CycleDetection,
            }));
        }
        if k >= structural || !seen.insert(p.clone()) {
            return Ok(None);
        }
        if k >= cap {
            return Err(PolyError::ExponentCapExceeded { cap });
        }
        p = dense_mul(r, &p, coeffs);
        k += 1;
    }
}
