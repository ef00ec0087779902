//! Exhaustive class predicates. Every `false` verdict carries the least
//! violating tuple in canonical element order, and every report counts the
//! table lookups it spent.

mod armendariz;
mod elementwise;
mod ideal;

use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use crate::config::Limits;
use crate::ring::{FiniteRing, Ideal, Meter, RingError, Witness};

pub use armendariz::{armendariz_bounded, ArmendarizKind};
pub use elementwise::{
    annihilator_is_principal, is_nil_reversible, nil_reversible_witness_for, radical_predicate,
    structural_predicate, zero_divisor_predicate,
};
pub use ideal::ideal_predicate;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PredicateError {
    #[error("unknown property `{0}`")]
    UnknownProperty(String),
    #[error("unknown Armendariz kind `{0}`")]
    UnknownKind(String),
    #[error("sweep needs {needed} candidates, budget is {budget}")]
    BudgetExceeded { needed: u128, budget: u64 },
    #[error("property `{0}` is evaluated on an ideal, not on a ring")]
    NeedsIdeal(String),
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
    #[error(transparent)]
    Ring(#[from] RingError),
}

/// Stable property identifiers, as used on the command line and in reports.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Property {
    Reduced,
    Reversible,
    NilReversible,
    Semicommutative,
    WeaklySemicommutative,
    CentralReversible,
    SquareZero,
    Abelian,
    DirectlyFinite,
    UnitCentral,
    RightPp,
    LeftPp,
    Semiprime,
    StronglyRegular,
    TwoPrimal,
    Ni,
    Armendariz(usize),
    NilArmendariz(usize),
    CentralArmendariz(usize),
    ReducedIdeal,
    BoundedIndex,
}

impl Property {
    /// Every ring-level property, with degree 1 for the Armendariz family.
    pub const RING_LEVEL: [Property; 19] = [
        Property::Reduced,
        Property::Reversible,
        Property::NilReversible,
        Property::Semicommutative,
        Property::WeaklySemicommutative,
        Property::CentralReversible,
        Property::SquareZero,
        Property::Abelian,
        Property::DirectlyFinite,
        Property::UnitCentral,
        Property::RightPp,
        Property::LeftPp,
        Property::Semiprime,
        Property::StronglyRegular,
        Property::TwoPrimal,
        Property::Ni,
        Property::Armendariz(1),
        Property::NilArmendariz(1),
        Property::CentralArmendariz(1),
    ];

    pub fn is_ideal_level(self) -> bool {
        matches!(self, Property::ReducedIdeal | Property::BoundedIndex)
    }

    /// Degree bound of the Armendariz family, if any.
    pub fn bound(self) -> Option<usize> {
        match self {
            Property::Armendariz(d) | Property::NilArmendariz(d) | Property::CentralArmendariz(d) => Some(d),
            _ => None,
        }
    }

    /// Evaluates a ring-level property.
    pub fn evaluate(self, ring: &FiniteRing, limits: &Limits) -> Result<PropertyReport, PredicateError> {
        use Property::*;
        match self {
            NilReversible => Ok(is_nil_reversible(ring)),
            Reduced | Reversible | Semicommutative | WeaklySemicommutative | CentralReversible | SquareZero => {
                zero_divisor_predicate(ring, self)
            }
            Abelian | DirectlyFinite | UnitCentral | RightPp | LeftPp | Semiprime | StronglyRegular => {
                structural_predicate(ring, self, limits)
            }
            TwoPrimal | Ni => radical_predicate(ring, self),
            Armendariz(d) => armendariz_bounded(ring, ArmendarizKind::Plain, d, limits),
            NilArmendariz(d) => armendariz_bounded(ring, ArmendarizKind::Nil, d, limits),
            CentralArmendariz(d) => armendariz_bounded(ring, ArmendarizKind::Central, d, limits),
            ReducedIdeal | BoundedIndex => Err(PredicateError::NeedsIdeal(self.to_string())),
        }
    }

    /// Evaluates an ideal-level property.
    pub fn evaluate_on(self, ring: &FiniteRing, ideal: &Ideal) -> Result<PropertyReport, PredicateError> {
        if self.is_ideal_level() {
            ideal_predicate(ring, ideal, self)
        } else {
            Err(PredicateError::UnknownProperty(format!("{self} is not an ideal property")))
        }
    }
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use Property::*;
        let s = match self {
            Reduced => "reduced",
            Reversible => "reversible",
            NilReversible => "nil-reversible",
            Semicommutative => "semicommutative",
            WeaklySemicommutative => "weakly-semicommutative",
            CentralReversible => "central-reversible",
            SquareZero => "square-zero",
            Abelian => "abelian",
            DirectlyFinite => "directly-finite",
            UnitCentral => "unit-central",
            RightPp => "right-pp",
            LeftPp => "left-pp",
            Semiprime => "semiprime",
            StronglyRegular => "strongly-regular",
            TwoPrimal => "2-primal",
            Ni => "ni",
            Armendariz(d) => return write!(f, "armendariz:{d}"),
            NilArmendariz(d) => return write!(f, "nil-armendariz:{d}"),
            CentralArmendariz(d) => return write!(f, "central-armendariz:{d}"),
            ReducedIdeal => "reduced-ideal",
            BoundedIndex => "bounded-index",
        };
        f.write_str(s)
    }
}

impl FromStr for Property {
    type Err = PredicateError;

    /// Accepts the stable names; `armendariz` without a bound means degree 1.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        use Property::*;
        let s = s.trim();
        let unknown = || PredicateError::UnknownProperty(s.to_string());
        if let Some((head, d)) = s.split_once(':') {
            let d: usize = d.parse().map_err(|_| unknown())?;
            return match head {
                "armendariz" => Ok(Armendariz(d)),
                "nil-armendariz" => Ok(NilArmendariz(d)),
                "central-armendariz" => Ok(CentralArmendariz(d)),
                _ => Err(unknown()),
            };
        }
        Ok(match s {
            "reduced" => Reduced,
            "reversible" => Reversible,
            "nil-reversible" => NilReversible,
            "semicommutative" => Semicommutative,
            "weakly-semicommutative" => WeaklySemicommutative,
            "central-reversible" => CentralReversible,
            "square-zero" => SquareZero,
            "abelian" => Abelian,
            "directly-finite" => DirectlyFinite,
            "unit-central" => UnitCentral,
            "right-pp" => RightPp,
            "left-pp" => LeftPp,
            "semiprime" => Semiprime,
            "strongly-regular" => StronglyRegular,
            "2-primal" => TwoPrimal,
            "ni" => Ni,
            "armendariz" => Armendariz(1),
            "nil-armendariz" => NilArmendariz(1),
            "central-armendariz" => CentralArmendariz(1),
            "reduced-ideal" => ReducedIdeal,
            "bounded-index" => BoundedIndex,
            _ => return Err(unknown()),
        })
    }
}

impl Serialize for Property {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Outcome of one predicate on one ring.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PropertyReport {
    pub ring: String,
    pub property: String,
    pub value: bool,
    pub witness: Option<Witness>,
    /// Table lookups spent.
    pub cost: u64,
    /// Degree bound of a semi-decision; a `true` with a bound only means no
    /// violation was found up to that degree.
    pub bounded: Option<usize>,
    /// Largest nilpotency index, for `bounded-index`.
    pub index: Option<u32>,
}

impl PropertyReport {
    pub(crate) fn new(ring: &FiniteRing, property: impl fmt::Display, witness: Option<Witness>, meter: &Meter) -> Self {
        PropertyReport {
            ring: ring.name().to_string(),
            property: property.to_string(),
            value: witness.is_none(),
            witness,
            cost: meter.lookups(),
            bounded: None,
            index: None,
        }
    }

    pub(crate) fn with_bound(mut self, d: usize) -> Self {
        self.bounded = Some(d);
        self
    }
}

/// `|R|^k`, saturating.
pub(crate) fn nominal(order: usize, k: usize) -> u128 {
    (order as u128).checked_pow(k as u32).unwrap_or(u128::MAX)
}

pub(crate) fn check_budget(needed: u128, limits: &Limits) -> Result<(), PredicateError> {
    if needed > limits.poly_budget as u128 {
        Err(PredicateError::BudgetExceeded {
            needed,
            budget: limits.poly_budget,
        })
    } else {
        Ok(())
    }
}
