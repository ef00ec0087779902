//! Finite rings given by explicit addition and multiplication tables.
//!
//! Elements are indices `0..order`. A [`FiniteRing`] is only obtainable
//! through [`validate_ring`] (directly or via a constructor), so every value
//! of the type satisfies the ring axioms: `(R, +)` is an abelian group with
//! identity `zero`, multiplication is associative and distributes over
//! addition on both sides, and `one` is a two-sided identity.
//!
//! Derived sets (nilpotents, units, center, idempotents, Jacobson radical)
//! are computed once on first use and cached; the ring is immutable and can
//! be shared across threads.

mod ideal;
mod radical;
mod set;
mod validate;
mod witness;

use std::cell::Cell;
use std::fmt;
use std::sync::OnceLock;

use serde::Serialize;
use thiserror::Error;

pub use ideal::{enumerate_ideals, ideal_generated_by, Ideal, IdealEnumeration};
pub use radical::{jacobson_radical, prime_radical, RadicalMode};
pub use set::ElementSet;
pub use validate::{validate_ring, RawTables};
pub(crate) use validate::validate_flat;
pub use witness::{Role, Witness, WitnessKind};

/// Element index.
pub type Elem = usize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Left,
    Right,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Subset {
    Center,
    Units,
    Idempotents,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RingError {
    #[error("table shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("addition is not an abelian group ({axiom}) at {witness:?}")]
    AdditionNotGroup {
        axiom: &'static str,
        witness: Vec<Elem>,
    },
    #[error("multiplication is not associative: ({0}*{1})*{2} != {0}*({1}*{2})")]
    MulNotAssociative(Elem, Elem, Elem),
    #[error("{side:?} distributivity fails at ({a}, {b}, {c})")]
    NotDistributive {
        side: Side,
        a: Elem,
        b: Elem,
        c: Elem,
    },
    #[error("element {one} is not a two-sided identity (fails at {witness})")]
    NoIdentity { one: Elem, witness: Elem },
    #[error("element index {index} out of range for order {order}")]
    IndexOutOfRange { index: usize, order: usize },
    #[error("order {order} exceeds the configured cap {cap}")]
    OracleCapExceeded { order: usize, cap: usize },
    #[error("not a two-sided ideal: {0}")]
    NotAnIdeal(String),
}

#[derive(Debug, Default, Clone)]
struct Analysis {
    nil_index: OnceLock<Vec<u32>>,
    nilpotents: OnceLock<ElementSet>,
    units: OnceLock<ElementSet>,
    center: OnceLock<ElementSet>,
    idempotents: OnceLock<ElementSet>,
    jacobson: OnceLock<ElementSet>,
    additive_generators: OnceLock<Vec<Elem>>,
}

/// A validated finite ring. See the module docs for the guaranteed axioms.
#[derive(Clone)]
pub struct FiniteRing {
    name: String,
    order: usize,
    add: Vec<u32>,
    mul: Vec<u32>,
    neg: Vec<u32>,
    zero: Elem,
    one: Elem,
    names: Option<Vec<String>>,
    analysis: Analysis,
}

impl fmt::Debug for FiniteRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteRing")
            .field("name", &self.name)
            .field("order", &self.order)
            .field("zero", &self.zero)
            .field("one", &self.one)
            .finish_non_exhaustive()
    }
}

impl FiniteRing {
    /// Assembles a ring from flat row-major tables that already passed
    /// validation.
    fn from_validated(
        name: String,
        order: usize,
        add: Vec<u32>,
        mul: Vec<u32>,
        zero: Elem,
        one: Elem,
        names: Option<Vec<String>>,
    ) -> Self {
        let mut neg = vec![0u32; order];
        for a in 0..order {
            for b in 0..order {
                if add[a * order + b] as usize == zero {
                    neg[a] = b as u32;
                    break;
                }
            }
        }
        FiniteRing {
            name,
            order,
            add,
            mul,
            neg,
            zero,
            one,
            names,
            analysis: Analysis::default(),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn zero(&self) -> Elem {
        self.zero
    }

    pub fn one(&self) -> Elem {
        self.one
    }

    pub fn names(&self) -> Option<&[String]> {
        self.names.as_deref()
    }

    /// Display string for an element: its name if the ring carries names,
    /// otherwise `[index]`.
    pub fn label(&self, a: Elem) -> String {
        match &self.names {
            Some(n) => n[a].clone(),
            None => format!("[{a}]"),
        }
    }

    /// Looks an element up by display name (or `[index]` form).
    pub fn element_by_name(&self, name: &str) -> Option<Elem> {
        if let Some(names) = &self.names {
            if let Some(i) = names.iter().position(|n| n == name) {
                return Some(i);
            }
        }
        let inner = name.strip_prefix('[')?.strip_suffix(']')?;
        inner.parse().ok().filter(|&i| i < self.order)
    }

    pub fn elements(&self) -> std::ops::Range<Elem> {
        0..self.order
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        self.add[a * self.order + b] as usize
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        self.mul[a * self.order + b] as usize
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        self.neg[a] as usize
    }

    #[inline]
    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    /// `a^k` for `k >= 1` by repeated multiplication.
    pub fn pow(&self, a: Elem, k: u32) -> Elem {
        assert!(k >= 1, "exponent must be at least 1");
        let mut p = a;
        for _ in 1..k {
            p = self.mul(p, a);
        }
        p
    }

    /// `k·a` (repeated addition); `k = 0` gives zero.
    pub fn scale(&self, k: usize, a: Elem) -> Elem {
        let mut s = self.zero;
        for _ in 0..k {
            s = self.add(s, a);
        }
        s
    }

    /// Product of a sequence, left to right. The empty product is `one`.
    pub fn product<I: IntoIterator<Item = Elem>>(&self, it: I) -> Elem {
        it.into_iter().fold(self.one, |acc, x| self.mul(acc, x))
    }

    fn check_index(&self, a: Elem) -> Result<(), RingError> {
        if a < self.order {
            Ok(())
        } else {
            Err(RingError::IndexOutOfRange {
                index: a,
                order: self.order,
            })
        }
    }

    /// Bounds-checked arithmetic entry point.
    pub fn eval(&self, op: ArithOp, args: &[Elem]) -> Result<Elem, RingError> {
        for &a in args {
            self.check_index(a)?;
        }
        let arity_err = || RingError::ShapeMismatch(format!("{op:?} given {} arguments", args.len()));
        match op {
            ArithOp::Add => match args {
                [a, b] => Ok(self.add(*a, *b)),
                _ => Err(arity_err()),
            },
            ArithOp::Mul => match args {
                [a, b] => Ok(self.mul(*a, *b)),
                _ => Err(arity_err()),
            },
            ArithOp::Neg => match args {
                [a] => Ok(self.neg(*a)),
                _ => Err(arity_err()),
            },
            ArithOp::Pow(k) => match args {
                [a] if k >= 1 => Ok(self.pow(*a, k)),
                _ => Err(arity_err()),
            },
        }
    }

    /// True iff the add/mul tables, zero and one coincide exactly.
    pub fn same_tables(&self, other: &FiniteRing) -> bool {
        self.order == other.order
            && self.zero == other.zero
            && self.one == other.one
            && self.add == other.add
            && self.mul == other.mul
    }

    pub fn is_commutative(&self) -> bool {
        self.elements()
            .all(|a| (a + 1..self.order).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Left annihilator `{m : m·a = 0}` or right annihilator `{m : a·m = 0}`.
    pub fn annihilator(&self, side: Side, a: Elem) -> ElementSet {
        match side {
            Side::Left => ElementSet::from_predicate(self.order, |m| self.mul(m, a) == self.zero),
            Side::Right => ElementSet::from_predicate(self.order, |m| self.mul(a, m) == self.zero),
        }
    }

    /// Nilpotency index of every element (0 for non-nilpotent elements).
    ///
    /// Powers are iterated until they reach zero or revisit a value; a
    /// revisit means the power sequence cycles without reaching zero.
    pub fn nilpotency_indices(&self) -> &[u32] {
        self.analysis.nil_index.get_or_init(|| {
            let n = self.order;
            let mut out = vec![0u32; n];
            let mut stamp = vec![usize::MAX; n];
            for a in 0..n {
                let mut p = a;
                let mut k = 1u32;
                loop {
                    if p == self.zero {
                        out[a] = k;
                        break;
                    }
                    if stamp[p] == a {
                        break;
                    }
                    stamp[p] = a;
                    p = self.mul(p, a);
                    k += 1;
                }
            }
            out
        })
    }

    /// Least `k` with `a^k = 0`, if `a` is nilpotent.
    pub fn nilpotency_index(&self, a: Elem) -> Option<u32> {
        match self.nilpotency_indices()[a] {
            0 => None,
            k => Some(k),
        }
    }

    #[inline]
    pub fn is_nilpotent(&self, a: Elem) -> bool {
        self.nilpotency_indices()[a] != 0
    }

    /// N(R).
    pub fn nilpotents(&self) -> &ElementSet {
        self.analysis.nilpotents.get_or_init(|| {
            let idx = self.nilpotency_indices();
            ElementSet::from_predicate(self.order, |a| idx[a] != 0)
        })
    }

    pub fn units(&self) -> &ElementSet {
        self.analysis.units.get_or_init(|| {
            ElementSet::from_predicate(self.order, |u| {
                self.elements()
                    .any(|v| self.mul(u, v) == self.one && self.mul(v, u) == self.one)
            })
        })
    }

    pub fn center(&self) -> &ElementSet {
        self.analysis.center.get_or_init(|| {
            ElementSet::from_predicate(self.order, |z| {
                self.elements().all(|r| self.mul(z, r) == self.mul(r, z))
            })
        })
    }

    pub fn idempotents(&self) -> &ElementSet {
        self.analysis
            .idempotents
            .get_or_init(|| ElementSet::from_predicate(self.order, |e| self.mul(e, e) == e))
    }

    pub fn subset(&self, kind: Subset) -> &ElementSet {
        match kind {
            Subset::Center => self.center(),
            Subset::Units => self.units(),
            Subset::Idempotents => self.idempotents(),
        }
    }

    /// J(R), cached. See [`jacobson_radical`].
    pub fn jacobson(&self) -> &ElementSet {
        self.analysis
            .jacobson
            .get_or_init(|| radical::compute_jacobson(self))
    }

    /// A minimal-by-construction generating set of the additive group,
    /// chosen greedily in index order.
    pub fn additive_generators(&self) -> &[Elem] {
        self.analysis
            .additive_generators
            .get_or_init(|| validate::additive_generators(self.order, &self.add, self.zero))
    }

    /// Additive order of `a`.
    pub fn additive_order(&self, a: Elem) -> usize {
        let mut k = 1;
        let mut s = a;
        while s != self.zero {
            s = self.add(s, a);
            k += 1;
        }
        k
    }

    /// Exponent of the additive group: the characteristic.
    pub fn characteristic(&self) -> usize {
        self.additive_order(self.one)
    }

    /// Flat row-major copy of the addition table.
    pub fn add_table(&self) -> &[u32] {
        &self.add
    }

    /// Flat row-major copy of the multiplication table.
    pub fn mul_table(&self) -> &[u32] {
        &self.mul
    }

    pub fn to_raw(&self) -> RawTables {
        let n = self.order;
        let rows = |t: &[u32]| -> Vec<Vec<usize>> {
            (0..n)
                .map(|a| t[a * n..(a + 1) * n].iter().map(|&x| x as usize).collect())
                .collect()
        };
        RawTables {
            name: self.name.clone(),
            add: rows(&self.add),
            mul: rows(&self.mul),
            zero: self.zero,
            one: self.one,
            names: self.names.clone(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Mul,
    Neg,
    Pow(u32),
}

/// Ring arithmetic that counts table lookups, for predicate cost reporting.
pub struct Meter<'r> {
    ring: &'r FiniteRing,
    lookups: Cell<u64>,
}

impl<'r> Meter<'r> {
    pub fn new(ring: &'r FiniteRing) -> Self {
        Meter {
            ring,
            lookups: Cell::new(0),
        }
    }

    pub fn ring(&self) -> &'r FiniteRing {
        self.ring
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        self.lookups.set(self.lookups.get() + 1);
        self.ring.add(a, b)
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        self.lookups.set(self.lookups.get() + 1);
        self.ring.mul(a, b)
    }

    /// Charges `k` lookups performed outside the meter (cached sets etc.).
    pub fn charge(&self, k: u64) {
        self.lookups.set(self.lookups.get() + k);
    }

    pub fn lookups(&self) -> u64 {
        self.lookups.get()
    }
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;

    pub(crate) fn zmod_raw(n: usize) -> RawTables {
        RawTables {
            name: format!("Z{n}"),
            add: (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect(),
            mul: (0..n).map(|a| (0..n).map(|b| (a * b) % n).collect()).collect(),
            zero: 0,
            one: 1 % n,
            names: None,
        }
    }

    pub(crate) fn zmod(n: usize) -> FiniteRing {
        validate_ring(zmod_raw(n)).unwrap()
    }

    #[test]
    fn z4_arithmetic() {
        let r = zmod(4);
        assert_eq!(r.eval(ArithOp::Add, &[2, 3]), Ok(1));
        assert_eq!(r.eval(ArithOp::Mul, &[2, 3]), Ok(2));
        assert_eq!(r.eval(ArithOp::Pow(2), &[2]), Ok(0));
        assert_eq!(r.eval(ArithOp::Neg, &[1]), Ok(3));
        assert!(matches!(
            r.eval(ArithOp::Add, &[4, 0]),
            Err(RingError::IndexOutOfRange { index: 4, order: 4 })
        ));
        assert!(r.eval(ArithOp::Pow(0), &[1]).is_err());
    }

    #[test]
    fn z4_annihilators_and_nilpotents() {
        let r = zmod(4);
        assert_eq!(r.annihilator(Side::Left, 2).to_vec(), vec![0, 2]);
        assert_eq!(r.annihilator(Side::Right, 2).to_vec(), vec![0, 2]);
        assert_eq!(r.annihilator(Side::Left, 0).len(), 4);
        assert_eq!(r.nilpotents().to_vec(), vec![0, 2]);
        assert_eq!(r.nilpotency_index(0), Some(1));
        assert_eq!(r.nilpotency_index(2), Some(2));
        assert_eq!(r.nilpotency_index(1), None);
    }

    #[test]
    fn z6_units_and_z8_characteristic() {
        assert_eq!(zmod(6).units().to_vec(), vec![1, 5]);
        assert_eq!(zmod(8).characteristic(), 8);
        assert_eq!(zmod(6).idempotents().to_vec(), vec![0, 1, 3, 4]);
    }

    #[test]
    fn zero_ring_is_valid() {
        let r = zmod(1);
        assert_eq!(r.order(), 1);
        assert_eq!(r.zero(), r.one());
        assert_eq!(r.nilpotents().to_vec(), vec![0]);
        assert_eq!(r.units().to_vec(), vec![0]);
        assert_eq!(r.characteristic(), 1);
    }

    #[test]
    fn element_lookup_by_index_form() {
        let r = zmod(5);
        assert_eq!(r.element_by_name("[3]"), Some(3));
        assert_eq!(r.element_by_name("[9]"), None);
        assert_eq!(r.label(2), "[2]");
    }
}
