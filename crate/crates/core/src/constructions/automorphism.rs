use super::ConstructionError;
use crate::ring::{Elem, FiniteRing};

/// A ring automorphism given by its image permutation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AutomorphismMap {
    image: Vec<Elem>,
}

impl AutomorphismMap {
    pub fn identity(ring: &FiniteRing) -> Self {
        AutomorphismMap {
            image: ring.elements().collect(),
        }
    }

    /// Checks bijectivity, additivity, multiplicativity and `1 ↦ 1`.
    pub fn new(ring: &FiniteRing, image: Vec<Elem>) -> Result<Self, ConstructionError> {
        let n = ring.order();
        if image.len() != n {
            return Err(ConstructionError::InvalidAutomorphism(format!(
                "image has {} entries for a ring of order {n}",
                image.len()
            )));
        }
        let mut hit = vec![false; n];
        for &y in &image {
            if y >= n || std::mem::replace(&mut hit[y], true) {
                return Err(ConstructionError::InvalidAutomorphism("not a bijection".into()));
            }
        }
        if image[ring.one()] != ring.one() || image[ring.zero()] != ring.zero() {
            return Err(ConstructionError::InvalidAutomorphism("does not fix zero and one".into()));
        }
        for a in ring.elements() {
            for b in ring.elements() {
                if image[ring.add(a, b)] != ring.add(image[a], image[b]) {
                    return Err(ConstructionError::InvalidAutomorphism(format!(
                        "not additive at ({a}, {b})"
                    )));
                }
                if image[ring.mul(a, b)] != ring.mul(image[a], image[b]) {
                    return Err(ConstructionError::InvalidAutomorphism(format!(
                        "not multiplicative at ({a}, {b})"
                    )));
                }
            }
        }
        Ok(AutomorphismMap { image })
    }

    #[inline]
    pub fn apply(&self, a: Elem) -> Elem {
        self.image[a]
    }

    pub fn image(&self) -> &[Elem] {
        &self.image
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &AutomorphismMap) -> AutomorphismMap {
        AutomorphismMap {
            image: other.image.iter().map(|&x| self.image[x]).collect(),
        }
    }

    /// `self^k`, with `k = 0` the identity.
    pub fn power(&self, k: usize) -> AutomorphismMap {
        let mut acc = AutomorphismMap {
            image: (0..self.image.len()).collect(),
        };
        for _ in 0..k {
            acc = self.compose(&acc);
        }
        acc
    }
}

/// Invariants preserved by every automorphism; images of a generator must
/// share its profile.
fn profile(ring: &FiniteRing, a: Elem) -> (usize, u32, bool, bool, bool, usize) {
    let sq = ring.mul(a, a);
    (
        ring.additive_order(a),
        ring.nilpotency_indices()[a],
        sq == a,
        ring.units().contains(a),
        ring.center().contains(a),
        ring.additive_order(sq),
    )
}

/// All ring automorphisms, identity first, the rest in ascending order of
/// their image vectors.
///
/// Backtracks over images of an additive generating set that starts with
/// `1`; each partial assignment is extended additively to the subgroup it
/// generates and rejected as soon as it is inconsistent, non-injective or
/// non-multiplicative there.
pub fn find_automorphisms(ring: &FiniteRing, cap: usize) -> Result<Vec<AutomorphismMap>, ConstructionError> {
    let n = ring.order();
    if n > cap {
        return Err(ConstructionError::OrderCapExceeded {
            order: n as u128,
            cap,
        });
    }
    let gens = generators_from_one(ring);
    let mut partial = vec![usize::MAX; n];
    partial[ring.zero()] = ring.zero();
    let mut found = Vec::new();
    search(ring, &gens, 0, &partial, &mut found);
    found.sort();
    let id = AutomorphismMap::identity(ring);
    found.retain(|a| *a != id);
    found.insert(0, id);
    Ok(found)
}

fn generators_from_one(ring: &FiniteRing) -> Vec<Elem> {
    let n = ring.order();
    let mut span = vec![false; n];
    span[ring.zero()] = true;
    let mut members = vec![ring.zero()];
    let mut gens = Vec::new();
    let candidates = std::iter::once(ring.one()).chain(ring.elements());
    for g in candidates {
        if span[g] {
            continue;
        }
        gens.push(g);
        let old = members.clone();
        let mut multiple = g;
        while multiple != ring.zero() {
            for &x in &old {
                let y = ring.add(x, multiple);
                if !span[y] {
                    span[y] = true;
                    members.push(y);
                }
            }
            multiple = ring.add(multiple, g);
        }
    }
    gens
}

fn search(
    ring: &FiniteRing,
    gens: &[Elem],
    depth: usize,
    partial: &[Elem],
    found: &mut Vec<AutomorphismMap>,
) {
    if depth == gens.len() {
        found.push(AutomorphismMap {
            image: partial.to_vec(),
        });
        return;
    }
    let g = gens[depth];
    let want = profile(ring, g);
    let candidates: Vec<Elem> = if g == ring.one() {
        vec![ring.one()]
    } else {
        ring.elements().filter(|&h| profile(ring, h) == want).collect()
    };
    for h in candidates {
        if let Some(next) = extend(ring, partial, g, h) {
            search(ring, gens, depth + 1, &next, found);
        }
    }
}

/// Extends the partial additive map by `g ↦ h`; `None` if inconsistent.
fn extend(ring: &FiniteRing, partial: &[Elem], g: Elem, h: Elem) -> Option<Vec<Elem>> {
    let unset = usize::MAX;
    let domain: Vec<Elem> = ring.elements().filter(|&x| partial[x] != unset).collect();
    let mut next = partial.to_vec();
    let mut used = vec![false; ring.order()];
    for &x in &domain {
        used[partial[x]] = true;
    }
    let (mut mg, mut mh) = (g, h);
    while mg != ring.zero() {
        for &x in &domain {
            let y = ring.add(x, mg);
            let img = ring.add(partial[x], mh);
            if next[y] == unset {
                if used[img] {
                    return None;
                }
                used[img] = true;
                next[y] = img;
            } else if next[y] != img {
                return None;
            }
        }
        mg = ring.add(mg, g);
        mh = ring.add(mh, h);
    }
    if mh != ring.zero() {
        return None;
    }
    let domain: Vec<Elem> = ring.elements().filter(|&x| next[x] != unset).collect();
    for &a in &domain {
        for &b in &domain {
            let p = ring.mul(a, b);
            if next[p] != unset && next[p] != ring.mul(next[a], next[b]) {
                return None;
            }
        }
    }
    Some(next)
}
