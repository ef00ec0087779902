use super::{check_cap, tabulate, wrap, ConstructionError, PresentedAlgebra};
use crate::ring::{Elem, FiniteRing, Ideal};

/// `T(R, R)`: pairs `(r, p)` with `(r1,p1)(r2,p2) = (r1 r2, r1 p2 + p1 r2)`.
/// The pair `(r, p)` is element `r·|R| + p`.
pub fn trivial_extension(r: &FiniteRing, order_cap: usize) -> Result<FiniteRing, ConstructionError> {
    let n = r.order();
    let order = check_cap(n as u128 * n as u128, order_cap)?;
    let names = (0..order)
        .map(|x| format!("({}|{})", r.label(x / n), r.label(x % n)))
        .collect();
    tabulate(
        format!("T({})", r.name()),
        order,
        r.zero() * n + r.zero(),
        r.one() * n + r.zero(),
        Some(names),
        |x, y| r.add(x / n, y / n) * n + r.add(x % n, y % n),
        |x, y| {
            let (r1, p1, r2, p2) = (x / n, x % n, y / n, y % n);
            r.mul(r1, r2) * n + r.add(r.mul(r1, p2), r.mul(p1, r2))
        },
    )
}

/// A finite ring without identity (an algebra "rng"), used as the input of
/// the Dorroh extension.
#[derive(Debug, Clone)]
pub struct Rng {
    name: String,
    order: usize,
    add: Vec<u32>,
    mul: Vec<u32>,
    zero: Elem,
    names: Vec<String>,
}

impl Rng {
    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.order
    }

    fn add(&self, a: Elem, b: Elem) -> Elem {
        self.add[a * self.order + b] as usize
    }

    fn mul(&self, a: Elem, b: Elem) -> Elem {
        self.mul[a * self.order + b] as usize
    }

    fn scale(&self, k: usize, a: Elem) -> Elem {
        (0..k).fold(self.zero, |s, _| self.add(s, a))
    }

    /// A ring regarded as a rng (its identity is forgotten).
    pub fn from_ring(r: &FiniteRing) -> Rng {
        let n = r.order();
        Rng {
            name: r.name().to_string(),
            order: n,
            add: r.add_table().to_vec(),
            mul: r.mul_table().to_vec(),
            zero: r.zero(),
            names: (0..n).map(|a| r.label(a)).collect(),
        }
    }

    /// An ideal with the ring's operations, renumbered by ascending member
    /// index.
    pub fn from_ideal(r: &FiniteRing, ideal: &Ideal) -> Rng {
        let members = ideal.members().to_vec();
        let mut pos = vec![usize::MAX; r.order()];
        for (i, &m) in members.iter().enumerate() {
            pos[m] = i;
        }
        let k = members.len();
        let table = |f: &dyn Fn(Elem, Elem) -> Elem| -> Vec<u32> {
            (0..k * k)
                .map(|t| pos[f(members[t / k], members[t % k])] as u32)
                .collect()
        };
        Rng {
            name: format!("{}|ideal", r.name()),
            order: k,
            add: table(&|a, b| r.add(a, b)),
            mul: table(&|a, b| r.mul(a, b)),
            zero: pos[r.zero()],
            names: members.iter().map(|&m| r.label(m)).collect(),
        }
    }

    /// `Z_k` as an additive group with identically zero multiplication.
    pub fn null(k: usize) -> Rng {
        Rng {
            name: format!("null(Z{k})"),
            order: k,
            add: (0..k * k).map(|t| ((t / k + t % k) % k) as u32).collect(),
            mul: vec![0; k * k],
            zero: 0,
            names: (0..k).map(|a| a.to_string()).collect(),
        }
    }

    /// The algebra of a presentation with its unit ignored; elements are
    /// coordinate vectors numbered as in `structure_algebra`.
    pub fn from_algebra(spec: &PresentedAlgebra, order_cap: usize) -> Result<Rng, ConstructionError> {
        let (order, add, mul, names) = spec.tables(order_cap)?;
        Ok(Rng {
            name: spec.name.clone(),
            order,
            add,
            mul,
            zero: 0,
            names,
        })
    }
}

/// Unitalization `A ⊕_D Z_m`: pairs `(a, s)` with
/// `(a1,s1)(a2,s2) = (a1 a2 + s1·a2 + s2·a1, s1 s2)` and identity `(0, 1)`.
/// The pair `(a, s)` is element `a·m + s`.
///
/// Requires `m·a = 0` for every `a ∈ A` so that the scalar action of `Z_m`
/// is well defined.
pub fn dorroh_extension(a: &Rng, m: usize, order_cap: usize) -> Result<FiniteRing, ConstructionError> {
    if m == 0 {
        return Err(ConstructionError::ShapeUnsupported("modulus must be at least 1".into()));
    }
    if let Some(bad) = (0..a.order).find(|&x| a.scale(m, x) != a.zero) {
        return Err(ConstructionError::ModulusMismatch {
            element: bad,
            modulus: m,
        });
    }
    let order = check_cap(a.order as u128 * m as u128, order_cap)?;
    let names = (0..order)
        .map(|x| format!("({}|{})", a.names[x / m], x % m))
        .collect();
    tabulate(
        format!("Dorroh({},{m})", wrap(&a.name)),
        order,
        a.zero * m,
        a.zero * m + 1 % m,
        Some(names),
        |x, y| a.add(x / m, y / m) * m + (x % m + y % m) % m,
        |x, y| {
            let (a1, s1, a2, s2) = (x / m, x % m, y / m, y % m);
            let first = a.add(a.add(a.mul(a1, a2), a.scale(s1, a2)), a.scale(s2, a1));
            first * m + (s1 * s2) % m
        },
    )
}
