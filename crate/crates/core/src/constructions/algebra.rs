use super::{check_cap, digits, from_digits, tabulate, ConstructionError};
use crate::ring::FiniteRing;

/// A finite-dimensional algebra over `Z_p` given by structure constants.
///
/// `products[i][j]` holds the coordinates of `b_i · b_j`. Elements of the
/// resulting ring are coordinate vectors, numbered by little-endian digit
/// expansion (coordinate 0 least significant).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PresentedAlgebra {
    pub name: String,
    pub modulus: usize,
    pub basis: Vec<String>,
    pub unit: Vec<usize>,
    pub products: Vec<Vec<Vec<usize>>>,
}

impl PresentedAlgebra {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Monomial algebra: `products[i][j]` is either a basis index or zero.
    /// The unit is basis element 0.
    pub fn monomial(name: &str, modulus: usize, basis: &[&str], rule: impl Fn(usize, usize) -> Option<usize>) -> Self {
        let d = basis.len();
        let unit_vec = |k: Option<usize>| -> Vec<usize> { (0..d).map(|t| usize::from(Some(t) == k)).collect() };
        PresentedAlgebra {
            name: name.to_string(),
            modulus,
            basis: basis.iter().map(|s| s.to_string()).collect(),
            unit: unit_vec(Some(0)),
            products: (0..d).map(|i| (0..d).map(|j| unit_vec(rule(i, j))).collect()).collect(),
        }
    }

    /// Two-generator truncation over `Z_2` with basis `1, x, x^2, y, y^2, yx`
    /// and relations `xy = 0`, `x^3 = y^3 = y^2x = yx^2 = 0`.
    pub fn two_generator_truncation() -> Self {
        // Monomials as words in x, y.
        let words = ["", "x", "xx", "y", "yy", "yx"];
        PresentedAlgebra::monomial("Z2<x,y>/T", 2, &["1", "x", "x^2", "y", "y^2", "yx"], |i, j| {
            let w = format!("{}{}", words[i], words[j]);
            words.iter().position(|&v| v == w)
        })
    }

    fn check_shape(&self) -> Result<(), ConstructionError> {
        let p = self.modulus;
        let d = self.dim();
        let bad = |msg: String| Err(ConstructionError::InvalidPresentation(msg));
        if p < 2 || (2..p).take_while(|q| q * q <= p).any(|q| p.is_multiple_of(q)) {
            return bad(format!("modulus {p} is not prime"));
        }
        if d == 0 {
            return bad("dimension must be at least 1".into());
        }
        if self.unit.len() != d || self.products.len() != d {
            return bad("unit or product table has the wrong length".into());
        }
        for row in &self.products {
            if row.len() != d || row.iter().any(|v| v.len() != d) {
                return bad("product table is not d x d x d".into());
            }
        }
        let coords = self.unit.iter().chain(self.products.iter().flatten().flatten());
        if let Some(c) = coords.into_iter().find(|&&c| c >= p) {
            return bad(format!("coordinate {c} is not reduced modulo {p}"));
        }
        Ok(())
    }

    fn mul_vec(&self, u: &[usize], v: &[usize]) -> Vec<usize> {
        let p = self.modulus;
        let mut out = vec![0; self.dim()];
        for (i, &ui) in u.iter().enumerate().filter(|(_, &c)| c != 0) {
            for (j, &vj) in v.iter().enumerate().filter(|(_, &c)| c != 0) {
                let s = ui * vj % p;
                for (o, &c) in out.iter_mut().zip(&self.products[i][j]) {
                    *o = (*o + s * c) % p;
                }
            }
        }
        out
    }

    fn basis_vec(&self, i: usize) -> Vec<usize> {
        (0..self.dim()).map(|t| usize::from(t == i)).collect()
    }

    fn label(&self, v: &[usize]) -> String {
        let terms: Vec<String> = v
            .iter()
            .zip(&self.basis)
            .filter(|(&c, _)| c != 0)
            .map(|(&c, b)| if c == 1 { b.clone() } else { format!("{c}*{b}") })
            .collect();
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join("+")
        }
    }

    /// Order, flat add and mul tables, and element names. Neither
    /// associativity nor the unit is checked here.
    pub(crate) fn tables(&self, order_cap: usize) -> Result<(usize, Vec<u32>, Vec<u32>, Vec<String>), ConstructionError> {
        self.check_shape()?;
        let (p, d) = (self.modulus, self.dim());
        let order = check_cap((p as u128).checked_pow(d as u32).unwrap_or(u128::MAX), order_cap)?;
        let vecs: Vec<Vec<usize>> = (0..order).map(|x| digits(x, p, d)).collect();
        let mut add = Vec::with_capacity(order * order);
        let mut mul = Vec::with_capacity(order * order);
        for u in &vecs {
            for v in &vecs {
                let s: Vec<usize> = u.iter().zip(v).map(|(a, b)| (a + b) % p).collect();
                add.push(from_digits(&s, p) as u32);
                mul.push(from_digits(&self.mul_vec(u, v), p) as u32);
            }
        }
        let names = vecs.iter().map(|v| self.label(v)).collect();
        Ok((order, add, mul, names))
    }
}

/// Builds the algebra after checking associativity on basis triples and
/// that `unit` is a two-sided identity on the basis.
pub fn structure_algebra(spec: &PresentedAlgebra, order_cap: usize) -> Result<FiniteRing, ConstructionError> {
    spec.check_shape()?;
    let d = spec.dim();
    for i in 0..d {
        for j in 0..d {
            let ij = &spec.products[i][j];
            for k in 0..d {
                let left = spec.mul_vec(ij, &spec.basis_vec(k));
                let right = spec.mul_vec(&spec.basis_vec(i), &spec.products[j][k]);
                if left != right {
                    return Err(ConstructionError::NotAssociative(i, j, k));
                }
            }
        }
    }
    for i in 0..d {
        let e = spec.basis_vec(i);
        if spec.mul_vec(&spec.unit, &e) != e || spec.mul_vec(&e, &spec.unit) != e {
            return Err(ConstructionError::NoUnit(i));
        }
    }
    let p = spec.modulus;
    let (order, _, _, names) = spec.tables(order_cap)?;
    let vecs: Vec<Vec<usize>> = (0..order).map(|x| digits(x, p, d)).collect();
    tabulate(
        spec.name.clone(),
        order,
        0,
        from_digits(&spec.unit, p),
        Some(names),
        |x, y| {
            let s: Vec<usize> = vecs[x].iter().zip(&vecs[y]).map(|(a, b)| (a + b) % p).collect();
            from_digits(&s, p)
        },
        |x, y| from_digits(&spec.mul_vec(&vecs[x], &vecs[y]), p),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::zmod;

    #[test]
    fn one_dimensional_is_prime_field() {
        let spec = PresentedAlgebra::monomial("F2", 2, &["1"], |_, _| Some(0));
        let r = structure_algebra(&spec, 4096).unwrap();
        assert!(r.same_tables(&zmod(2).unwrap()));
    }

    #[test]
    fn two_generator_truncation() {
        let spec = PresentedAlgebra::two_generator_truncation();
        let r = structure_algebra(&spec, 4096).unwrap();
        assert_eq!(r.order(), 64);
        let x = r.element_by_name("x").unwrap();
        let y = r.element_by_name("y").unwrap();
        let yx = r.element_by_name("yx").unwrap();
        for a in [x, y, yx] {
            assert!(r.is_nilpotent(a));
        }
        assert_eq!(r.mul(x, y), r.zero());
        assert_eq!(r.mul(y, x), yx);
        assert_eq!(r.label(r.mul(x, x)), "x^2");
        assert_eq!(r.mul(r.mul(y, y), x), r.zero());
        assert_eq!(r.one(), 1);
    }

    #[test]
    fn rejects_non_associative_constants() {
        // b1·b1 = b2 but b1·b2 = b1 while b2·b1 = 0.
        let spec = PresentedAlgebra::monomial("bad", 2, &["1", "a", "b"], |i, j| match (i, j) {
            (0, k) | (k, 0) => Some(k),
            (1, 1) => Some(2),
            (1, 2) => Some(1),
            _ => None,
        });
        assert!(matches!(structure_algebra(&spec, 4096), Err(ConstructionError::NotAssociative(..))));
    }

    #[test]
    fn rejects_missing_unit_and_bad_shapes() {
        let mut spec = PresentedAlgebra::monomial("F2", 2, &["1", "e"], |i, j| match (i, j) {
            (0, k) | (k, 0) => Some(k),
            _ => None,
        });
        spec.unit = vec![0, 1];
        assert!(matches!(structure_algebra(&spec, 4096), Err(ConstructionError::NoUnit(0))));
        spec.modulus = 4;
        assert!(matches!(structure_algebra(&spec, 4096), Err(ConstructionError::InvalidPresentation(_))));
    }
}
