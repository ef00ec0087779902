use serde::Serialize;

/// Size caps and search budgets shared by constructions, predicates and the
/// harness. Every cap breach surfaces as an error or a reported skip.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Limits {
    /// Largest ring any constructor may produce.
    pub order_cap: usize,
    /// Largest ring for automorphism search.
    pub automorphism_cap: usize,
    /// Largest ring for breadth-first ideal enumeration.
    pub ideal_cap: usize,
    /// Largest ring for the exhaustive (all-subsets) ideal enumeration used
    /// by the prime-radical oracle.
    pub oracle_cap: usize,
    /// Nominal number of enumerated polynomials / pairs / tuples a bounded
    /// polynomial sweep may cover.
    pub poly_budget: u64,
    /// Exponent cap for the uncertified polynomial nilpotency path; `None`
    /// means `order × (degree + 1)`.
    pub exponent_cap: Option<u32>,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            order_cap: 4096,
            automorphism_cap: 64,
            ideal_cap: 64,
            oracle_cap: 16,
            poly_budget: 1 << 24,
            exponent_cap: None,
        }
    }
}
