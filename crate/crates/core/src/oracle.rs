//! Brute-force linear algebra on generator matrices.
//!
//! Everything here works on row spaces over `F_q` and never touches coset
//! tables, basic dual zeros or the hull formulas it is used to check.

use crate::cyclic::CyclicCode;
use crate::error::{Error, Result};
use crate::field::{Elem, Field};
use crate::matrix::GfMatrix;
use crate::poly::Poly;

/// `(n - deg g) x n` matrix with rows `x^i g(x)`.
pub fn generator_matrix(code: &CyclicCode) -> GfMatrix {
    shift_matrix(code.generator(), code.n())
}

/// Rows `x^i g(x)` for `i = 0 .. n - deg g - 1`.
pub fn shift_matrix(gen: &Poly, n: usize) -> GfMatrix {
    let deg = gen.degree().expect("generator is nonzero");
    let k = n.saturating_sub(deg);
    let mut m = GfMatrix::zeros(k, n);
    for i in 0..k {
        for (j, &c) in gen.coeffs().iter().enumerate() {
            m.set(i, i + j, c);
        }
    }
    m
}

/// Subspace computations over one field.
#[derive(Clone, Copy, Debug)]
pub struct Oracle<'a> {
    field: &'a Field,
}

impl<'a> Oracle<'a> {
    pub fn new(field: &'a Field) -> Self {
        Oracle { field }
    }

    pub fn dim(&self, a: &GfMatrix) -> usize {
        a.rank(self.field)
    }

    /// Basis of the Euclidean dual of the row space.
    pub fn dual(&self, a: &GfMatrix) -> GfMatrix {
        a.nullspace(self.field)
    }

    pub fn dual_dim(&self, a: &GfMatrix) -> usize {
        self.dim(&self.dual(a))
    }

    /// `dim(A ∩ B) = dim A + dim B - dim(A + B)`.
    pub fn intersect_dim(&self, a: &GfMatrix, b: &GfMatrix) -> Result<usize> {
        let sum = a.stack(b)?;
        Ok(self.dim(a) + self.dim(b) - self.dim(&sum))
    }

    /// `dim(C ∩ C⊥)`.
    pub fn hull_dim(&self, a: &GfMatrix) -> usize {
        self.intersect_dim(a, &self.dual(a))
            .expect("dual has the same width")
    }

    pub fn codes_equal(&self, a: &GfMatrix, b: &GfMatrix) -> Result<bool> {
        let sum = a.stack(b)?;
        let r = self.dim(&sum);
        Ok(self.dim(a) == r && self.dim(b) == r)
    }

    pub fn contains(&self, a: &GfMatrix, v: &[Elem]) -> Result<bool> {
        let row = GfMatrix::from_rows(a.cols(), [v.to_vec()])?;
        Ok(self.dim(&a.stack(&row)?) == self.dim(a))
    }

    /// `A ⊕ B` is the whole space.
    pub fn is_complementary_pair(&self, a: &GfMatrix, b: &GfMatrix) -> Result<bool> {
        if a.cols() != b.cols() {
            return Err(Error::DimensionMismatch);
        }
        Ok(self.dim(a) + self.dim(b) == a.cols() && self.intersect_dim(a, b)? == 0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclic::CodeSpace;

    #[test]
    fn generator_matrix_shapes() {
        let s = CodeSpace::new(2, 7).unwrap();
        let f = s.field();
        let o = Oracle::new(f);
        let zero = generator_matrix(&s.zero_code());
        assert_eq!((zero.rows(), zero.cols()), (0, 7));
        assert_eq!(o.dim(&generator_matrix(&s.full_code())), 7);
        let hamming = s
            .code_from_generator(&Poly::from_codes(&[1, 1, 0, 1]))
            .unwrap();
        let g = generator_matrix(&hamming);
        assert_eq!((g.rows(), o.dim(&g)), (4, 4));
        assert_eq!(o.dim(&o.dual(&g)), 3);
        assert_eq!(o.hull_dim(&g), 3);
        assert_eq!(o.intersect_dim(&g, &g).unwrap(), 4);
    }

    #[test]
    fn binary_length_9_codes_have_trivial_hull() {
        let s = CodeSpace::new(2, 9).unwrap();
        let o = Oracle::new(s.field());
        for code in s.all_codes().unwrap() {
            assert_eq!(o.hull_dim(&generator_matrix(&code)), 0);
        }
    }

    #[test]
    fn rank_matches_dimension_and_symmetry() {
        for (q, n) in [(3, 8), (4, 15), (5, 12)] {
            let s = CodeSpace::new(q, n).unwrap();
            let o = Oracle::new(s.field());
            let codes: Vec<_> = s.all_codes().unwrap().collect();
            for c in &codes {
                let g = generator_matrix(c);
                assert_eq!(o.dim(&g), c.dim());
                assert_eq!(o.dual_dim(&g), n - c.dim());
            }
            for c in codes.iter().step_by(3) {
                for d in codes.iter().step_by(5) {
                    let (a, b) = (generator_matrix(c), generator_matrix(d));
                    assert_eq!(
                        o.intersect_dim(&a, &b).unwrap(),
                        o.intersect_dim(&b, &a).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn equality_and_membership() {
        let f = Field::prime(2).unwrap();
        let o = Oracle::new(&f);
        let a = shift_matrix(&Poly::from_codes(&[1, 1]), 3);
        let b = GfMatrix::from_rows(
            3,
            [
                vec![Elem::ZERO, Elem::ONE, Elem::ONE],
                vec![Elem::ONE, Elem::ZERO, Elem::ONE],
            ],
        )
        .unwrap();
        assert!(o.codes_equal(&a, &b).unwrap());
        assert!(!o
            .contains(&a, &[Elem::ONE, Elem::ZERO, Elem::ZERO])
            .unwrap());
        assert_eq!(
            o.codes_equal(&a, &GfMatrix::zeros(1, 4)),
            Err(Error::DimensionMismatch)
        );
    }
}
