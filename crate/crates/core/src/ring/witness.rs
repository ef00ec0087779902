use serde::Serialize;

use super::{Elem, FiniteRing, Side};
use crate::poly::{dense_mul, dense_nilpotency, DenseNilpotency};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum WitnessKind {
    /// `a` nilpotent, exactly one of `ab`, `ba` is zero.
    AnnihilatorAsymmetry,
    /// `ab = 0`, `ba ≠ 0`.
    ZeroDivisorPair,
    /// `a ≠ 0` nilpotent.
    NonzeroNilpotent,
    /// `ab = 0`, `arb ≠ 0`.
    SemicommutativeTriple,
    /// `ab = 0`, `arb` not nilpotent.
    WeakSemicommutativeTriple,
    /// `ab = 0`, `ba` does not commute with `c`.
    NoncentralReverseProduct,
    /// `w` nilpotent, `(wh)² = 0`, `wh ≠ 0`.
    SquareZeroLeft,
    /// `w` nilpotent, `(hw)² = 0`, `hw ≠ 0`.
    SquareZeroRight,
    /// `e² = e`, `er ≠ re`.
    NoncentralIdempotent,
    /// `xy = 1`, `yx ≠ 1`.
    OneSidedInverse,
    /// `u` a unit, `ur ≠ ru`.
    NoncentralUnit,
    /// `r(a)` is not `eR` for any idempotent `e`.
    RightAnnihilatorNotPrincipal,
    /// `l(a)` is not `Re` for any idempotent `e`.
    LeftAnnihilatorNotPrincipal,
    /// `a ≠ 0` with `aRa = 0`.
    NilpotentSandwich,
    /// No `y` with `x = y x²`.
    NotStronglyRegular,
    /// `a` nilpotent but outside the prime radical.
    NilpotentOutsideRadical,
    /// `a`, `b` nilpotent, `a + b` not.
    NilSumNotNilpotent,
    /// `a` nilpotent, `ra` or `ar` not nilpotent.
    NilMultipleNotNilpotent,
    /// `f·g = 0` but some `f_i g_j ≠ 0`.
    ArmendarizPair,
    /// `f·g ∈ N(R)[x]` but some `f_i g_j ∉ N(R)`.
    NilArmendarizPair,
    /// `f·g = 0` but some `f_i g_j` is not central.
    CentralArmendarizPair,
    /// Ideal member `a ≠ 0` that is nilpotent.
    NilpotentIdealMember,
    /// Ideal member `a` that is not nilpotent.
    NonNilpotentIdealMember,
    /// Polynomial `f` whose nilpotency disagrees with its coefficients'.
    PolyNilradicalMismatch,
    /// Polynomials `f1..fn` with nilpotent product coefficients and a
    /// non-nilpotent product of chosen coefficients `c1..cn`.
    CoefficientTransfer,
    /// `f` nilpotent polynomial, exactly one of `fg`, `gf` zero.
    PolyAnnihilatorAsymmetry,
    /// `x`, `y ∈ N(R)` violating one of the square-zero lemma items.
    LemmaProducts,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Role {
    pub role: String,
    pub element: Elem,
}

/// A concrete counterexample: a kind tag plus labelled element indices.
///
/// Polynomials are encoded coefficient-wise with roles `f[0]`, `f[1]`, ...
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Witness {
    pub kind: WitnessKind,
    pub elements: Vec<Role>,
}

impl Witness {
    pub fn new(kind: WitnessKind, roles: &[(&str, Elem)]) -> Self {
        Witness {
            kind,
            elements: roles
                .iter()
                .map(|&(r, e)| Role {
                    role: r.to_string(),
                    element: e,
                })
                .collect(),
        }
    }

    pub fn with_poly(mut self, name: &str, coeffs: &[Elem]) -> Self {
        for (i, &c) in coeffs.iter().enumerate() {
            self.elements.push(Role {
                role: format!("{name}[{i}]"),
                element: c,
            });
        }
        self
    }

    pub fn get(&self, role: &str) -> Option<Elem> {
        self.elements.iter().find(|r| r.role == role).map(|r| r.element)
    }

    /// Coefficients recorded under `name[0]`, `name[1]`, ... in order.
    pub fn poly(&self, name: &str) -> Vec<Elem> {
        let mut out = Vec::new();
        while let Some(c) = self.get(&format!("{name}[{}]", out.len())) {
            out.push(c);
        }
        out
    }

    /// Renders the witness with element display names.
    pub fn describe(&self, ring: &FiniteRing) -> String {
        let parts: Vec<String> = self
            .elements
            .iter()
            .map(|r| format!("{}={}", r.role, ring.label(r.element)))
            .collect();
        format!("{:?}({})", self.kind, parts.join(", "))
    }

    /// Re-evaluates the recorded elements against the ring's tables and
    /// reports whether the claimed violation is reproduced.
    pub fn replays(&self, ring: &FiniteRing) -> bool {
        self.replay_inner(ring).unwrap_or(false)
    }

    fn replay_inner(&self, r: &FiniteRing) -> Option<bool> {
        if self.elements.iter().any(|x| x.element >= r.order()) {
            return Some(false);
        }
        let z = r.zero();
        let g = |name: &str| self.get(name);
        use WitnessKind::*;
        Some(match self.kind {
            AnnihilatorAsymmetry => {
                let (a, b) = (g("a")?, g("b")?);
                r.is_nilpotent(a) && ((r.mul(a, b) == z) != (r.mul(b, a) == z))
            }
            ZeroDivisorPair => {
                let (a, b) = (g("a")?, g("b")?);
                r.mul(a, b) == z && r.mul(b, a) != z
            }
            NonzeroNilpotent | NilpotentIdealMember => {
                let a = g("a")?;
                a != z && r.is_nilpotent(a)
            }
            NonNilpotentIdealMember => !r.is_nilpotent(g("a")?),
            SemicommutativeTriple => {
                let (a, m, b) = (g("a")?, g("r")?, g("b")?);
                r.mul(a, b) == z && r.mul(r.mul(a, m), b) != z
            }
            WeakSemicommutativeTriple => {
                let (a, m, b) = (g("a")?, g("r")?, g("b")?);
                r.mul(a, b) == z && !r.is_nilpotent(r.mul(r.mul(a, m), b))
            }
            NoncentralReverseProduct => {
                let (a, b, c) = (g("a")?, g("b")?, g("c")?);
                let ba = r.mul(b, a);
                r.mul(a, b) == z && r.mul(ba, c) != r.mul(c, ba)
            }
            SquareZeroLeft | SquareZeroRight => {
                let (w, h) = (g("w")?, g("h")?);
                let p = if self.kind == SquareZeroLeft {
                    r.mul(w, h)
                } else {
                    r.mul(h, w)
                };
                r.is_nilpotent(w) && r.mul(p, p) == z && p != z
            }
            NoncentralIdempotent => {
                let (e, m) = (g("e")?, g("r")?);
                r.mul(e, e) == e && r.mul(e, m) != r.mul(m, e)
            }
            OneSidedInverse => {
                let (x, y) = (g("x")?, g("y")?);
                r.mul(x, y) == r.one() && r.mul(y, x) != r.one()
            }
            NoncentralUnit => {
                let (u, m) = (g("u")?, g("r")?);
                r.units().contains(u) && r.mul(u, m) != r.mul(m, u)
            }
            RightAnnihilatorNotPrincipal | LeftAnnihilatorNotPrincipal => {
                let a = g("a")?;
                let side = if self.kind == RightAnnihilatorNotPrincipal {
                    Side::Right
                } else {
                    Side::Left
                };
                !crate::predicates::annihilator_is_principal(r, side, a)
            }
            NilpotentSandwich => {
                let a = g("a")?;
                a != z && r.elements().all(|m| r.mul(r.mul(a, m), a) == z)
            }
            NotStronglyRegular => {
                let x = g("x")?;
                let x2 = r.mul(x, x);
                r.elements().all(|y| r.mul(y, x2) != x)
            }
            NilpotentOutsideRadical => {
                let a = g("a")?;
                r.is_nilpotent(a) && !r.jacobson().contains(a)
            }
            NilSumNotNilpotent => {
                let (a, b) = (g("a")?, g("b")?);
                r.is_nilpotent(a) && r.is_nilpotent(b) && !r.is_nilpotent(r.add(a, b))
            }
            NilMultipleNotNilpotent => {
                let (a, m) = (g("a")?, g("r")?);
                r.is_nilpotent(a)
                    && (!r.is_nilpotent(r.mul(m, a)) || !r.is_nilpotent(r.mul(a, m)))
            }
            ArmendarizPair | NilArmendarizPair | CentralArmendarizPair => {
                let (f, h) = (self.poly("f"), self.poly("g"));
                let prod = dense_mul(r, &f, &h);
                let pairs = || f.iter().flat_map(|&a| h.iter().map(move |&b| (a, b)));
                match self.kind {
                    ArmendarizPair => {
                        prod.iter().all(|&c| c == z) && pairs().any(|(a, b)| r.mul(a, b) != z)
                    }
                    NilArmendarizPair => {
                        prod.iter().all(|&c| r.is_nilpotent(c))
                            && pairs().any(|(a, b)| !r.is_nilpotent(r.mul(a, b)))
                    }
                    _ => {
                        prod.iter().all(|&c| c == z)
                            && pairs().any(|(a, b)| !r.center().contains(r.mul(a, b)))
                    }
                }
            }
            PolyNilradicalMismatch => {
                let f = self.poly("f");
                let coeffs_nil = f.iter().all(|&c| r.is_nilpotent(c));
                match dense_nilpotency(r, &f) {
                    DenseNilpotency::Nilpotent(_) => !coeffs_nil,
                    DenseNilpotency::NotNilpotent => coeffs_nil,
                }
            }
            CoefficientTransfer => {
                let mut prod = vec![r.one()];
                let mut chosen = r.one();
                let mut k = 1;
                while !self.poly(&format!("f{k}")).is_empty() {
                    let f = self.poly(&format!("f{k}"));
                    let c = g(&format!("c{k}"))?;
                    if !f.contains(&c) {
                        return Some(false);
                    }
                    prod = dense_mul(r, &prod, &f);
                    chosen = r.mul(chosen, c);
                    k += 1;
                }
                k > 1 && prod.iter().all(|&c| r.is_nilpotent(c)) && !r.is_nilpotent(chosen)
            }
            PolyAnnihilatorAsymmetry => {
                let (f, h) = (self.poly("f"), self.poly("g"));
                let fg_zero = dense_mul(r, &f, &h).iter().all(|&c| c == z);
                let gf_zero = dense_mul(r, &h, &f).iter().all(|&c| c == z);
                matches!(dense_nilpotency(r, &f), DenseNilpotency::Nilpotent(_))
                    && fg_zero != gf_zero
            }
            LemmaProducts => {
                let (x, y) = (g("x")?, g("y")?);
                let xy = r.mul(x, y);
                let yx = r.mul(y, x);
                let first = (r.mul(xy, x) == z || r.mul(xy, y) == z) && xy != z;
                let second = r.mul(r.mul(y, y), x) == z && yx != z;
                r.is_nilpotent(y) && (first || second)
            }
        })
    }
}
