//! Axiom checking for candidate ring tables.
//!
//! A full cubic sweep of associativity and distributivity is too slow for
//! rings of order in the thousands, so the checks go through a generating
//! set `G` of the additive structure:
//!
//! * additive associativity uses Light's test `(x+g)+y = x+(g+y)` for
//!   `g ∈ G`, which suffices because the elements passing the test form a
//!   sub-magma;
//! * distributivity of `x ↦ a·x` is checked as `a(g+y) = ag + ay` for
//!   `g ∈ G`, which extends to all of `R` by closure under addition;
//! * once multiplication is bi-additive, `(ab)c - a(bc)` is additive in each
//!   argument, so associativity on `G³` implies associativity everywhere.
//!
//! Total cost is `O(n² |G|)` with `|G| ≤ log2 n`.

use super::{FiniteRing, RingError, Side};
use crate::ring::Elem;

/// Candidate tables as read from a file or produced by a constructor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RawTables {
    pub name: String,
    pub add: Vec<Vec<usize>>,
    pub mul: Vec<Vec<usize>>,
    pub zero: usize,
    pub one: usize,
    pub names: Option<Vec<String>>,
}

pub fn validate_ring(raw: RawTables) -> Result<FiniteRing, RingError> {
    let n = raw.add.len();
    if n == 0 {
        return Err(RingError::ShapeMismatch("order must be at least 1".into()));
    }
    if raw.mul.len() != n {
        return Err(RingError::ShapeMismatch(format!(
            "add has {n} rows but mul has {}",
            raw.mul.len()
        )));
    }
    if n > u32::MAX as usize {
        return Err(RingError::ShapeMismatch(format!("order {n} too large")));
    }
    let flatten = |t: &[Vec<usize>], what: &str| -> Result<Vec<u32>, RingError> {
        let mut flat = Vec::with_capacity(n * n);
        for (i, row) in t.iter().enumerate() {
            if row.len() != n {
                return Err(RingError::ShapeMismatch(format!(
                    "{what} row {i} has {} entries, expected {n}",
                    row.len()
                )));
            }
            for &x in row {
                if x >= n {
                    return Err(RingError::IndexOutOfRange { index: x, order: n });
                }
                flat.push(x as u32);
            }
        }
        Ok(flat)
    };
    let add = flatten(&raw.add, "add")?;
    let mul = flatten(&raw.mul, "mul")?;
    for idx in [raw.zero, raw.one] {
        if idx >= n {
            return Err(RingError::IndexOutOfRange { index: idx, order: n });
        }
    }
    if let Some(names) = &raw.names {
        if names.len() != n {
            return Err(RingError::ShapeMismatch(format!(
                "{} names for {n} elements",
                names.len()
            )));
        }
    }
    check_tables(n, &add, &mul, raw.zero, raw.one)?;
    Ok(FiniteRing::from_validated(
        raw.name, n, add, mul, raw.zero, raw.one, raw.names,
    ))
}

/// Validates flat row-major tables produced by a constructor.
pub(crate) fn validate_flat(
    name: String,
    n: usize,
    add: Vec<u32>,
    mul: Vec<u32>,
    zero: Elem,
    one: Elem,
    names: Option<Vec<String>>,
) -> Result<FiniteRing, RingError> {
    debug_assert_eq!(add.len(), n * n);
    debug_assert_eq!(mul.len(), n * n);
    if let Some(&bad) = add.iter().chain(&mul).find(|&&x| x as usize >= n) {
        return Err(RingError::IndexOutOfRange {
            index: bad as usize,
            order: n,
        });
    }
    check_tables(n, &add, &mul, zero, one)?;
    Ok(FiniteRing::from_validated(name, n, add, mul, zero, one, names))
}

/// Runs every axiom check on flat tables; the first failure is returned.
pub(crate) fn check_tables(
    n: usize,
    add: &[u32],
    mul: &[u32],
    zero: Elem,
    one: Elem,
) -> Result<(), RingError> {
    let a = |x: Elem, y: Elem| add[x * n + y] as usize;
    let m = |x: Elem, y: Elem| mul[x * n + y] as usize;

    // Latin square: every row and column of the addition table is a permutation.
    let mut seen = vec![usize::MAX; n];
    for x in 0..n {
        for y in 0..n {
            let s = a(x, y);
            if seen[s] == x {
                return Err(RingError::AdditionNotGroup {
                    axiom: "row is not a permutation",
                    witness: vec![x, y],
                });
            }
            seen[s] = x;
        }
    }
    seen.fill(usize::MAX);
    for y in 0..n {
        for x in 0..n {
            let s = a(x, y);
            if seen[s] == y {
                return Err(RingError::AdditionNotGroup {
                    axiom: "column is not a permutation",
                    witness: vec![x, y],
                });
            }
            seen[s] = y;
        }
    }
    for x in 0..n {
        if a(x, zero) != x || a(zero, x) != x {
            return Err(RingError::AdditionNotGroup {
                axiom: "zero is not an additive identity",
                witness: vec![x],
            });
        }
        for y in x + 1..n {
            if a(x, y) != a(y, x) {
                return Err(RingError::AdditionNotGroup {
                    axiom: "addition is not commutative",
                    witness: vec![x, y],
                });
            }
        }
    }
    let gens = additive_generators(n, add, zero);
    for &g in &gens {
        for x in 0..n {
            let xg = a(x, g);
            for y in 0..n {
                if a(xg, y) != a(x, a(g, y)) {
                    return Err(RingError::AdditionNotGroup {
                        axiom: "addition is not associative",
                        witness: vec![x, g, y],
                    });
                }
            }
        }
    }

    for x in 0..n {
        for &g in &gens {
            let xg = m(x, g);
            let gx = m(g, x);
            for y in 0..n {
                if m(x, a(g, y)) != a(xg, m(x, y)) {
                    return Err(RingError::NotDistributive {
                        side: Side::Left,
                        a: x,
                        b: g,
                        c: y,
                    });
                }
                if m(a(g, y), x) != a(gx, m(y, x)) {
                    return Err(RingError::NotDistributive {
                        side: Side::Right,
                        a: x,
                        b: g,
                        c: y,
                    });
                }
            }
        }
    }

    for x in 0..n {
        if m(one, x) != x || m(x, one) != x {
            return Err(RingError::NoIdentity { one, witness: x });
        }
    }

    for &x in &gens {
        for &y in &gens {
            let xy = m(x, y);
            for &z in &gens {
                if m(xy, z) != m(x, m(y, z)) {
                    return Err(RingError::MulNotAssociative(x, y, z));
                }
            }
        }
    }
    Ok(())
}

/// Greedy generating set of the additive magma: scan elements in index
/// order and keep each one not yet in the closure of those kept so far.
pub(crate) fn additive_generators(n: usize, add: &[u32], zero: Elem) -> Vec<Elem> {
    let mut in_closure = vec![false; n];
    let mut members: Vec<Elem> = vec![zero];
    in_closure[zero] = true;
    let mut gens = Vec::new();
    for cand in 0..n {
        if in_closure[cand] {
            continue;
        }
        gens.push(cand);
        in_closure[cand] = true;
        let mut queue = vec![cand];
        while let Some(x) = queue.pop() {
            // Combine the new element with everything already present; the
            // pairs among older members were handled when they were added.
            let mut i = 0;
            while i < members.len() {
                let y = members[i];
                for s in [add[x * n + y] as usize, add[y * n + x] as usize] {
                    if !in_closure[s] {
                        in_closure[s] = true;
                        queue.push(s);
                    }
                }
                i += 1;
            }
            members.push(x);
            let s = add[x * n + x] as usize;
            if !in_closure[s] {
                in_closure[s] = true;
                queue.push(s);
            }
        }
    }
    gens
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::tests::zmod_raw;
    use proptest::prelude::*;

    /// Independent cubic check of every axiom.
    fn brute_force_is_ring(raw: &RawTables) -> bool {
        let n = raw.add.len();
        let a = |x: usize, y: usize| raw.add[x][y];
        let m = |x: usize, y: usize| raw.mul[x][y];
        let z = raw.zero;
        let one = raw.one;
        for x in 0..n {
            if a(x, z) != x || a(z, x) != x || m(one, x) != x || m(x, one) != x {
                return false;
            }
            if !(0..n).any(|y| a(x, y) == z) {
                return false;
            }
            for y in 0..n {
                if a(x, y) != a(y, x) {
                    return false;
                }
                for w in 0..n {
                    if a(a(x, y), w) != a(x, a(y, w))
                        || m(m(x, y), w) != m(x, m(y, w))
                        || m(x, a(y, w)) != a(m(x, y), m(x, w))
                        || m(a(y, w), x) != a(m(y, x), m(w, x))
                    {
                        return false;
                    }
                }
            }
        }
        true
    }

    #[test]
    fn z4_is_valid() {
        let r = validate_ring(zmod_raw(4)).unwrap();
        assert_eq!(r.order(), 4);
        assert_eq!(r.additive_generators(), &[1]);
    }

    #[test]
    fn order_one_is_valid() {
        assert_eq!(validate_ring(zmod_raw(1)).unwrap().order(), 1);
    }

    #[test]
    fn corrupted_mul_entry_is_rejected_with_replayable_witness() {
        let mut raw = zmod_raw(4);
        raw.mul[2][3] = 1;
        let err = validate_ring(raw.clone()).unwrap_err();
        let m = |x: usize, y: usize| raw.mul[x][y];
        let a = |x: usize, y: usize| raw.add[x][y];
        match err {
            RingError::NotDistributive { side: Side::Left, a: x, b: g, c: y } => {
                assert_ne!(m(x, a(g, y)), a(m(x, g), m(x, y)));
            }
            RingError::NotDistributive { side: Side::Right, a: x, b: g, c: y } => {
                assert_ne!(m(a(g, y), x), a(m(g, x), m(y, x)));
            }
            RingError::MulNotAssociative(x, y, z) => {
                assert_ne!(m(m(x, y), z), m(x, m(y, z)));
            }
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn shape_errors() {
        let mut raw = zmod_raw(3);
        raw.mul.pop();
        assert!(matches!(validate_ring(raw), Err(RingError::ShapeMismatch(_))));
        let mut raw = zmod_raw(3);
        raw.add[1][1] = 7;
        assert!(matches!(
            validate_ring(raw),
            Err(RingError::IndexOutOfRange { index: 7, order: 3 })
        ));
        let mut raw = zmod_raw(3);
        raw.one = 2;
        assert!(matches!(validate_ring(raw), Err(RingError::NoIdentity { .. })));
    }

    #[test]
    fn every_single_entry_corruption_of_z4_is_detected() {
        let base = zmod_raw(4);
        for table in 0..2 {
            for x in 0..4 {
                for y in 0..4 {
                    for v in 0..4 {
                        let mut raw = base.clone();
                        let t = if table == 0 { &mut raw.add } else { &mut raw.mul };
                        if t[x][y] == v {
                            continue;
                        }
                        t[x][y] = v;
                        assert!(validate_ring(raw).is_err(), "missed table {table} ({x},{y})={v}");
                    }
                }
            }
        }
    }

    proptest! {
        #[test]
        fn generator_checks_agree_with_cubic_oracle(
            n in 2usize..7,
            edits in proptest::collection::vec((0usize..2, 0usize..7, 0usize..7, 0usize..7), 0..3),
        ) {
            let mut raw = zmod_raw(n);
            for (t, x, y, v) in edits {
                let tab = if t == 0 { &mut raw.add } else { &mut raw.mul };
                tab[x % n][y % n] = v % n;
            }
            prop_assert_eq!(validate_ring(raw.clone()).is_ok(), brute_force_is_ring(&raw));
        }
    }
}
