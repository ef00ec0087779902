use super::{check_cap, digits, from_digits, tabulate, wrap, AutomorphismMap, ConstructionError};
use crate::ring::{Elem, FiniteRing};

/// `R[x; α]/(x^m)`. The coefficient vector `(c_0, …, c_{m-1})` is numbered
/// by little-endian digit expansion, so `c_0` is the least significant
/// digit. Multiplication uses `x·w = α(w)·x`; `α` defaults to the identity.
pub fn truncated_poly_ring(
    r: &FiniteRing,
    m: usize,
    alpha: Option<&AutomorphismMap>,
    order_cap: usize,
) -> Result<FiniteRing, ConstructionError> {
    if m == 0 {
        return Err(ConstructionError::ShapeUnsupported("truncation degree must be at least 1".into()));
    }
    let n = r.order();
    let powers: Vec<AutomorphismMap> = match alpha {
        Some(a) => {
            let a = AutomorphismMap::new(r, a.image().to_vec())?;
            (0..m).map(|i| a.power(i)).collect()
        }
        None => vec![AutomorphismMap::identity(r); m],
    };
    let nominal = (n as u128).checked_pow(m as u32).unwrap_or(u128::MAX);
    let order = check_cap(nominal, order_cap)?;
    let coeffs: Vec<Vec<Elem>> = (0..order).map(|x| digits(x, n, m)).collect();
    // Element names stay free of whitespace so ring files can list them.
    let names = coeffs.iter().map(|c| poly_label(r, c).replace(" + ", "+")).collect();
    let skew = alpha.is_some_and(|a| !a.is_identity());
    let name = if skew {
        format!("{}[x;a]/(x^{m})", wrap(r.name()))
    } else {
        format!("{}[x]/(x^{m})", wrap(r.name()))
    };
    let mut one = vec![r.zero(); m];
    one[0] = r.one();
    tabulate(
        name,
        order,
        from_digits(&vec![r.zero(); m], n),
        from_digits(&one, n),
        Some(names),
        |x, y| {
            let s: Vec<Elem> = coeffs[x].iter().zip(&coeffs[y]).map(|(&a, &b)| r.add(a, b)).collect();
            from_digits(&s, n)
        },
        |x, y| {
            let (a, b) = (&coeffs[x], &coeffs[y]);
            let mut p = vec![r.zero(); m];
            for i in 0..m {
                for j in 0..m - i {
                    p[i + j] = r.add(p[i + j], r.mul(a[i], powers[i].apply(b[j])));
                }
            }
            from_digits(&p, n)
        },
    )
}

/// `c0 + c1*x + c2*x^2` with zero terms dropped.
pub(crate) fn poly_label(r: &FiniteRing, c: &[Elem]) -> String {
    let terms: Vec<String> = c
        .iter()
        .enumerate()
        .filter(|&(_, &a)| a != r.zero())
        .map(|(i, &a)| match i {
            0 => r.label(a),
            1 => format!("{}*x", r.label(a)),
            _ => format!("{}*x^{i}", r.label(a)),
        })
        .collect();
    if terms.is_empty() {
        r.label(r.zero())
    } else {
        terms.join(" + ")
    }
}
