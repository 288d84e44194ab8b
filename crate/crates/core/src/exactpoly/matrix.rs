use num_bigint::BigInt;
use num_traits::One;

use super::IntPoly;
use crate::error::{Error, Result};

/// Rectangular grid of integer polynomials, stored row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<IntPoly>,
}

impl PolyMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<IntPoly>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::InvalidParameters(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        Ok(PolyMatrix {
            rows,
            cols,
            entries,
        })
    }

    pub fn from_rows(rows: Vec<Vec<IntPoly>>) -> Result<Self> {
        let n = rows.len();
        let m = rows.first().map_or(0, |r| r.len());
        if rows.iter().any(|r| r.len() != m) {
            return Err(Error::InvalidParameters("ragged matrix rows".into()));
        }
        Self::new(n, m, rows.into_iter().flatten().collect())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &IntPoly {
        &self.entries[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[IntPoly] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn ensure_square(&self) -> Result<usize> {
        if self.rows != self.cols {
            return Err(Error::Dimension {
                rows: self.rows,
                cols: self.cols,
            });
        }
        Ok(self.rows)
    }

    /// Exact determinant. Orders up to three use cofactor expansion, larger
    /// matrices fraction-free elimination.
    pub fn det_fraction_free(&self) -> Result<IntPoly> {
        let n = self.ensure_square()?;
        if n <= 3 {
            Ok(self.det_small(n))
        } else {
            self.det_bareiss()
        }
    }

    fn det_small(&self, n: usize) -> IntPoly {
        let a = |i, j| self.get(i, j);
        match n {
            0 => IntPoly::one(),
            1 => a(0, 0).clone(),
            2 => &(a(0, 0) * a(1, 1)) - &(a(0, 1) * a(1, 0)),
            3 => {
                let m0 = &(a(1, 1) * a(2, 2)) - &(a(1, 2) * a(2, 1));
                let m1 = &(a(1, 0) * a(2, 2)) - &(a(1, 2) * a(2, 0));
                let m2 = &(a(1, 0) * a(2, 1)) - &(a(1, 1) * a(2, 0));
                &(&(a(0, 0) * &m0) - &(a(0, 1) * &m1)) + &(a(0, 2) * &m2)
            }
            _ => unreachable!(),
        }
    }

    /// Bareiss elimination over `Z[x]`. At each step the pivot is the
    /// lowest-degree non-zero entry of the column; the division by the
    /// previous pivot is exact.
    pub fn det_bareiss(&self) -> Result<IntPoly> {
        let n = self.ensure_square()?;
        if n == 0 {
            return Ok(IntPoly::one());
        }
        let mut a = self.clone();
        let mut negate = false;
        let mut prev = IntPoly::constant(BigInt::one());
        for k in 0..n - 1 {
            let pivot = (k..n)
                .filter(|&i| !a.get(i, k).is_zero())
                .min_by_key(|&i| (a.get(i, k).degree(), i));
            let Some(p) = pivot else {
                return Ok(IntPoly::zero());
            };
            if p != k {
                a.swap_rows(p, k);
                negate = !negate;
            }
            let pk = a.get(k, k).clone();
            for i in k + 1..n {
                let aik = a.get(i, k).clone();
                for j in k + 1..n {
                    let num = &(&pk * a.get(i, j)) - &(&aik * a.get(k, j));
                    let q = num.div_exact(&prev).ok_or_else(|| {
                        Error::Structural("inexact division in fraction-free elimination".into())
                    })?;
                    a.entries[i * n + j] = q;
                }
                a.entries[i * n + k] = IntPoly::zero();
            }
            prev = pk;
        }
        let d = a.get(n - 1, n - 1).clone();
        Ok(if negate { -d } else { d })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    #[test]
    fn empty_determinant_is_one() {
        let m = PolyMatrix::new(0, 0, vec![]).unwrap();
        assert_eq!(m.det_fraction_free().unwrap(), IntPoly::one());
        assert_eq!(m.det_bareiss().unwrap(), IntPoly::one());
    }

    #[test]
    fn non_square_is_rejected() {
        let m = PolyMatrix::new(1, 2, vec![p(&[1]), p(&[2])]).unwrap();
        assert_eq!(
            m.det_fraction_free(),
            Err(Error::Dimension { rows: 1, cols: 2 })
        );
    }

    #[test]
    fn diagonal_matrix() {
        let d = [p(&[1, 1]), p(&[0, 2]), p(&[-3, 0, 1]), p(&[5]), p(&[0, 0, 0, 1])];
        let n = d.len();
        let mut entries = vec![IntPoly::zero(); n * n];
        for (i, e) in d.iter().enumerate() {
            entries[i * n + i] = e.clone();
        }
        let m = PolyMatrix::new(n, n, entries).unwrap();
        let expected = d.iter().fold(IntPoly::one(), |acc, e| &acc * e);
        assert_eq!(m.det_fraction_free().unwrap(), expected);
    }

    #[test]
    fn zero_column_gives_zero() {
        let m = PolyMatrix::from_rows(vec![
            vec![p(&[1]), IntPoly::zero(), p(&[2]), p(&[0, 1])],
            vec![p(&[3]), IntPoly::zero(), p(&[1]), p(&[1])],
            vec![p(&[0, 1]), IntPoly::zero(), p(&[4]), p(&[2])],
            vec![p(&[1, 1]), IntPoly::zero(), p(&[0, 0, 1]), p(&[7])],
        ])
        .unwrap();
        assert_eq!(m.det_fraction_free().unwrap(), IntPoly::zero());
    }

    #[test]
    fn bareiss_needs_pivoting() {
        // leading entry zero forces a row swap
        let m = PolyMatrix::from_rows(vec![
            vec![IntPoly::zero(), p(&[1])],
            vec![p(&[1]), IntPoly::zero()],
        ])
        .unwrap();
        assert_eq!(m.det_bareiss().unwrap(), p(&[-1]));
    }
}
