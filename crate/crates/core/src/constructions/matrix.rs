use std::collections::HashMap;

use super::{check_cap, digits, from_digits, tabulate, wrap, ConstructionError};
use crate::ring::{Elem, FiniteRing};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MatrixShape {
    Full,
    UpperTriangular,
    /// 2×2 matrices `[[x, y], [z, w]]` over `Z_{2m}` with `x ≡ w` and
    /// `y ≡ z` (mod 2).
    Congruence2,
}

/// Ring of `k×k` matrices over `base` of the given shape.
///
/// Elements are numbered by little-endian digit expansion of the stored
/// entries in row-major order (for upper-triangular matrices only the
/// entries on or above the diagonal are digits). Congruence matrices are
/// numbered by rank among all 2×2 matrices in that order.
pub fn matrix_ring(
    base: &FiniteRing,
    k: usize,
    shape: MatrixShape,
    order_cap: usize,
) -> Result<FiniteRing, ConstructionError> {
    if k == 0 {
        return Err(ConstructionError::ShapeUnsupported("matrix size must be at least 1".into()));
    }
    let n = base.order();
    let all_positions: Vec<(usize, usize)> = (0..k).flat_map(|i| (0..k).map(move |j| (i, j))).collect();
    let positions: Vec<(usize, usize)> = match shape {
        MatrixShape::UpperTriangular => all_positions.iter().copied().filter(|&(i, j)| i <= j).collect(),
        _ => all_positions,
    };
    let nominal = (n as u128).checked_pow(positions.len() as u32).unwrap_or(u128::MAX);

    // Entries as full k×k row-major vectors.
    let elements: Vec<Vec<Elem>> = match shape {
        MatrixShape::Full | MatrixShape::UpperTriangular => {
            let order = check_cap(nominal, order_cap)?;
            (0..order)
                .map(|idx| embed(&digits(idx, n, positions.len()), &positions, k, base.zero()))
                .collect()
        }
        MatrixShape::Congruence2 => {
            if k != 2 {
                return Err(ConstructionError::ShapeUnsupported("congruence matrices are 2x2".into()));
            }
            let parity = residue_parity(base)?;
            check_cap(nominal / 4, order_cap)?;
            (0..nominal as usize)
                .map(|idx| digits(idx, n, 4))
                .filter(|m| parity[m[0]] == parity[m[3]] && parity[m[1]] == parity[m[2]])
                .collect()
        }
    };
    let order = elements.len();
    let key = |m: &[Elem]| -> usize { from_digits(&positions.iter().map(|&(i, j)| m[i * k + j]).collect::<Vec<_>>(), n) };
    let index: HashMap<usize, Elem> = elements.iter().enumerate().map(|(i, m)| (key(m), i)).collect();
    let lookup = |m: &[Elem]| -> Elem { index[&key(m)] };

    let zero_m = vec![base.zero(); k * k];
    let mut one_m = zero_m.clone();
    for i in 0..k {
        one_m[i * k + i] = base.one();
    }
    let names = elements
        .iter()
        .map(|m| {
            let rows: Vec<String> = (0..k)
                .map(|i| (0..k).map(|j| base.label(m[i * k + j])).collect::<Vec<_>>().join(","))
                .collect();
            format!("[{}]", rows.join(";"))
        })
        .collect();
    let label = match shape {
        MatrixShape::Full => format!("M{k}"),
        MatrixShape::UpperTriangular => format!("U{k}"),
        MatrixShape::Congruence2 => "Cong2".to_string(),
    };
    tabulate(
        format!("{label}({})", wrap(base.name())),
        order,
        lookup(&zero_m),
        lookup(&one_m),
        Some(names),
        |x, y| {
            let (a, b) = (&elements[x], &elements[y]);
            let s: Vec<Elem> = a.iter().zip(b).map(|(&p, &q)| base.add(p, q)).collect();
            lookup(&s)
        },
        |x, y| {
            let (a, b) = (&elements[x], &elements[y]);
            let mut p = vec![base.zero(); k * k];
            for i in 0..k {
                for j in 0..k {
                    let mut acc = base.zero();
                    for t in 0..k {
                        acc = base.add(acc, base.mul(a[i * k + t], b[t * k + j]));
                    }
                    p[i * k + j] = acc;
                }
            }
            lookup(&p)
        },
    )
}

fn embed(d: &[Elem], positions: &[(usize, usize)], k: usize, zero: Elem) -> Vec<Elem> {
    let mut m = vec![zero; k * k];
    for (&digit, &(i, j)) in d.iter().zip(positions) {
        m[i * k + j] = digit;
    }
    m
}

/// For a ring `Z_{2m}` (cyclic additive group generated by `one`, even
/// order) returns the parity of each element `t·1`.
fn residue_parity(base: &FiniteRing) -> Result<Vec<u8>, ConstructionError> {
    let n = base.order();
    if !n.is_multiple_of(2) || base.characteristic() != n {
        return Err(ConstructionError::ShapeUnsupported(format!(
            "congruence matrices need Z_2m as base, got {} (order {n})",
            base.name()
        )));
    }
    let mut parity = vec![0u8; n];
    let mut x = base.zero();
    for t in 0..n {
        parity[x] = (t % 2) as u8;
        x = base.add(x, base.one());
    }
    Ok(parity)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::zmod;
    use crate::ring::Side;

    #[test]
    fn upper_triangular_z2_numbering() {
        let u = matrix_ring(&zmod(2).unwrap(), 2, MatrixShape::UpperTriangular, 4096).unwrap();
        assert_eq!(u.order(), 8);
        let e11 = u.element_by_name("[1,0;0,0]").unwrap();
        let e12 = u.element_by_name("[0,1;0,0]").unwrap();
        let e22 = u.element_by_name("[0,0;0,1]").unwrap();
        assert_eq!((e11, e12, e22), (1, 2, 4));
        assert_eq!(u.one(), 5);
        assert_eq!(u.mul(e12, e11), u.zero());
        assert_eq!(u.mul(e11, e12), e12);
    }

    #[test]
    fn upper_triangular_annihilators_of_e12() {
        // Independent check: left annihilator of e12 is {[[0,b],[0,c]]},
        // right annihilator is {[[a,b],[0,0]]}.
        let u = matrix_ring(&zmod(2).unwrap(), 2, MatrixShape::UpperTriangular, 4096).unwrap();
        let e12 = u.element_by_name("[0,1;0,0]").unwrap();
        let named = |v: &[&str]| -> Vec<Elem> {
            let mut out: Vec<Elem> = v.iter().map(|s| u.element_by_name(s).unwrap()).collect();
            out.sort();
            out
        };
        assert_eq!(
            u.annihilator(Side::Left, e12).to_vec(),
            named(&["[0,0;0,0]", "[0,1;0,0]", "[0,0;0,1]", "[0,1;0,1]"])
        );
        assert_eq!(
            u.annihilator(Side::Right, e12).to_vec(),
            named(&["[0,0;0,0]", "[0,1;0,0]", "[1,0;0,0]", "[1,1;0,0]"])
        );
    }

    #[test]
    fn full_matrices_over_z2() {
        let m = matrix_ring(&zmod(2).unwrap(), 2, MatrixShape::Full, 4096).unwrap();
        assert_eq!(m.order(), 16);
        assert_eq!(m.jacobson().to_vec(), vec![m.zero()]);
        let names: Vec<String> = m.nilpotents().iter().map(|a| m.label(a)).collect();
        assert_eq!(names, vec!["[0,0;0,0]", "[0,1;0,0]", "[0,0;1,0]", "[1,1;1,1]"]);
        let center: Vec<String> = m.center().iter().map(|a| m.label(a)).collect();
        assert_eq!(center, vec!["[0,0;0,0]", "[1,0;0,1]"]);
    }

    #[test]
    fn congruence_ring_over_z8() {
        let c = matrix_ring(&zmod(8).unwrap(), 2, MatrixShape::Congruence2, 4096).unwrap();
        assert_eq!(c.order(), 1024);
        let a = c.element_by_name("[0,2;0,0]").unwrap();
        let b = c.element_by_name("[2,0;0,0]").unwrap();
        assert!(c.is_nilpotent(a));
        assert_eq!(c.mul(a, b), c.zero());
        assert_eq!(c.label(c.mul(b, a)), "[0,4;0,0]");
    }

    #[test]
    fn shape_and_cap_errors() {
        let z3 = zmod(3).unwrap();
        assert!(matches!(
            matrix_ring(&z3, 2, MatrixShape::Congruence2, 4096),
            Err(ConstructionError::ShapeUnsupported(_))
        ));
        assert!(matches!(
            matrix_ring(&zmod(4).unwrap(), 3, MatrixShape::Congruence2, 4096),
            Err(ConstructionError::ShapeUnsupported(_))
        ));
        assert!(matches!(
            matrix_ring(&zmod(8).unwrap(), 2, MatrixShape::Full, 1024),
            Err(ConstructionError::OrderCapExceeded { order: 4096, cap: 1024 })
        ));
    }
}
