//! Dense matrices over a finite field with exact Gaussian elimination.

use crate::error::{Error, Result};
use crate::field::{Elem, Field};

/// Row-major matrix of field elements. The field is supplied per operation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GfMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Elem>,
}

impl GfMatrix {
    pub fn zeros(rows: usize, cols: usize) -> GfMatrix {
        GfMatrix {
            rows,
            cols,
            data: vec![Elem::ZERO; rows * cols],
        }
    }

    pub fn identity(n: usize) -> GfMatrix {
        let mut m = GfMatrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Elem::ONE);
        }
        m
    }

    /// Builds a matrix from rows that must all have length `cols`.
    pub fn from_rows(cols: usize, rows: impl IntoIterator<Item = Vec<Elem>>) -> Result<GfMatrix> {
        let mut data = Vec::new();
        let mut count = 0;
        for row in rows {
            if row.len() != cols {
                return Err(Error::DimensionMismatch);
            }
            data.extend(row);
            count += 1;
        }
        Ok(GfMatrix {
            rows: count,
            cols,
            data,
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> Elem {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Elem) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Elem] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_iter(&self) -> impl Iterator<Item = &[Elem]> {
        (0..self.rows).map(move |r| self.row(r))
    }

    /// Rows of `self` followed by rows of `other`.
    pub fn stack(&self, other: &GfMatrix) -> Result<GfMatrix> {
        if self.cols != other.cols {
            return Err(Error::DimensionMismatch);
        }
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Ok(GfMatrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        })
    }

    /// Reduced row echelon form (zero rows dropped) and its pivot columns.
    pub fn rref(&self, field: &Field) -> (GfMatrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut lead = 0;
        for col in 0..m.cols {
            if lead == m.rows {
                break;
            }
            let Some(pr) = (lead..m.rows).find(|&r| !m.get(r, col).is_zero()) else {
                continue;
            };
            m.swap_rows(lead, pr);
            let inv = field.inv(m.get(lead, col)).expect("pivot is nonzero");
            for c in col..m.cols {
                let v = field.mul(inv, m.get(lead, c));
                m.set(lead, c, v);
            }
            for r in 0..m.rows {
                if r == lead {
                    continue;
                }
                let k = m.get(r, col);
                if k.is_zero() {
                    continue;
                }
                for c in col..m.cols {
                    let v = field.sub(m.get(r, c), field.mul(k, m.get(lead, c)));
                    m.set(r, c, v);
                }
            }
            pivots.push(col);
            lead += 1;
        }
        m.rows = lead;
        m.data.truncate(lead * m.cols);
        (m, pivots)
    }

    pub fn rank(&self, field: &Field) -> usize {
        self.rref(field).1.len()
    }

    /// Basis (as rows) of `{x : M x^T = 0}`.
    pub fn nullspace(&self, field: &Field) -> GfMatrix {
        let (r, pivots) = self.rref(field);
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut out = GfMatrix::zeros(free.len(), self.cols);
        for (i, &fc) in free.iter().enumerate() {
            out.set(i, fc, Elem::ONE);
            for (pr, &pc) in pivots.iter().enumerate() {
                out.set(i, pc, field.neg(r.get(pr, fc)));
            }
        }
        out
    }

    /// `M v^T`.
    pub fn mul_vec(&self, field: &Field, v: &[Elem]) -> Result<Vec<Elem>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch);
        }
        Ok(self
            .row_iter()
            .map(|row| {
                row.iter()
                    .zip(v)
                    .fold(Elem::ZERO, |acc, (&a, &b)| field.add(acc, field.mul(a, b)))
            })
            .collect())
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(field: &Field, cols: usize, rows: &[&[u32]]) -> GfMatrix {
        let _ = field;
        GfMatrix::from_rows(
            cols,
            rows.iter()
                .map(|r| r.iter().map(|&c| Elem::from_code(c)).collect()),
        )
        .unwrap()
    }

    #[test]
    fn rank_of_zero_and_identity() {
        let f = Field::prime(3).unwrap();
        assert_eq!(GfMatrix::zeros(3, 4).rank(&f), 0);
        assert_eq!(GfMatrix::identity(5).rank(&f), 5);
        assert_eq!(GfMatrix::zeros(0, 4).rank(&f), 0);
    }

    #[test]
    fn rref_over_f3() {
        let f = Field::prime(3).unwrap();
        let a = m(&f, 3, &[&[1, 2, 0], &[2, 1, 0], &[0, 0, 2]]);
        // row 2 = 2 * row 1
        let (r, piv) = a.rref(&f);
        assert_eq!(piv, vec![0, 2]);
        assert_eq!(r, m(&f, 3, &[&[1, 2, 0], &[0, 0, 1]]));
    }

    #[test]
    fn nullspace_is_annihilated() {
        let f = Field::with_degree(2, 2).unwrap();
        let a = m(&f, 4, &[&[1, 2, 3, 0], &[0, 1, 1, 2]]);
        let n = a.nullspace(&f);
        assert_eq!(n.rows(), 2);
        assert_eq!(a.rank(&f) + n.rank(&f), 4);
        for row in n.row_iter() {
            assert!(a.mul_vec(&f, row).unwrap().iter().all(|x| x.is_zero()));
        }
    }

    #[test]
    fn shape_errors() {
        assert_eq!(
            GfMatrix::from_rows(2, vec![vec![Elem::ONE]]),
            Err(Error::DimensionMismatch)
        );
        assert_eq!(
            GfMatrix::zeros(1, 2).stack(&GfMatrix::zeros(1, 3)),
            Err(Error::DimensionMismatch)
        );
    }
}
