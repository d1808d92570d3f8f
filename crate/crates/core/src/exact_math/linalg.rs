use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::Rational;
use crate::error::{Error, Result};

/// Dense rectangular matrix over the rationals, stored by rows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: Vec<Vec<Rational>>,
    cols: usize,
}

impl RationalMatrix {
    /// Builds a matrix from rows. A matrix with no rows has zero columns.
    pub fn new(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if let Some(bad) = rows.iter().find(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch {
                expected: cols,
                found: bad.len(),
            });
        }
        Ok(Self { rows, cols })
    }

    /// Empty matrix with a fixed column count.
    pub fn with_columns(cols: usize) -> Self {
        Self {
            rows: Vec::new(),
            cols,
        }
    }

    pub fn from_integer_rows<I, R, T>(rows: I) -> Result<Self>
    where
        I: IntoIterator<Item = R>,
        R: IntoIterator<Item = T>,
        T: Into<BigInt>,
    {
        Self::new(
            rows.into_iter()
                .map(|r| r.into_iter().map(|x| Rational::from_integer(x.into())).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> &[Vec<Rational>] {
        &self.rows
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn num_cols(&self) -> usize {
        self.cols
    }

    pub fn rank(&self) -> usize {
        let mut work = self.rows.clone();
        reduce(&mut work, self.cols).len()
    }

    /// Returns some solution `x` of `self · x = rhs`, or `None` when the
    /// system is inconsistent. Free variables are set to zero.
    pub fn solve(&self, rhs: &[Rational]) -> Result<Option<Vec<Rational>>> {
        if rhs.len() != self.rows.len() {
            return Err(Error::DimensionMismatch {
                expected: self.rows.len(),
                found: rhs.len(),
            });
        }
        let mut aug: Vec<Vec<Rational>> = self
            .rows
            .iter()
            .zip(rhs)
            .map(|(row, b)| {
                let mut r = row.clone();
                r.push(b.clone());
                r
            })
            .collect();
        let pivots = reduce(&mut aug, self.cols + 1);
        if pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut x = vec![Rational::zero(); self.cols];
        for (row, &col) in pivots.iter().enumerate() {
            x[col] = aug[row][self.cols].clone();
        }
        Ok(Some(x))
    }

    /// Basis of the right kernel `{x : self · x = 0}`.
    pub fn null_space(&self) -> Vec<Vec<Rational>> {
        let mut work = self.rows.clone();
        let pivots = reduce(&mut work, self.cols);
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&fc| {
                let mut v = vec![Rational::zero(); self.cols];
                v[fc] = Rational::one();
                for (row, &pc) in pivots.iter().enumerate() {
                    v[pc] = -work[row][fc].clone();
                }
                v
            })
            .collect()
    }
}

/// Rank of a rational matrix.
pub fn matrix_rank(m: &RationalMatrix) -> usize {
    m.rank()
}

/// In-place reduced row echelon form over the first `cols` columns.
/// Returns the pivot column of each nonzero row, in order.
fn reduce(rows: &mut Vec<Vec<Rational>>, cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut next = 0;
    for col in 0..cols {
        if next == rows.len() {
            break;
        }
        let Some(found) = (next..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(found, next);
        let inv = rows[next][col].recip();
        for x in rows[next].iter_mut() {
            *x *= &inv;
        }
        for r in 0..rows.len() {
            if r == next || rows[r][col].is_zero() {
                continue;
            }
            let factor = rows[r][col].clone();
            let (pivot_row, target) = if r < next {
                let (a, b) = rows.split_at_mut(next);
                (&b[0], &mut a[r])
            } else {
                let (a, b) = rows.split_at_mut(r);
                (&a[next], &mut b[0])
            };
            for (t, p) in target.iter_mut().zip(pivot_row) {
                *t -= &factor * p;
            }
        }
        pivots.push(col);
        next += 1;
    }
    rows.truncate(next);
    pivots
}

/// Determinant of a square integer matrix by fraction-free (Bareiss) elimination.
pub fn determinant(matrix: &[Vec<BigInt>]) -> BigInt {
    let n = matrix.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut a = matrix.to_vec();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

/// For `d − 1` integer rows in dimension `d`, the vector of signed maximal
/// minors. It is orthogonal to every row, and zero exactly when the rows are
/// linearly dependent.
pub fn generalized_cross_product(rows: &[Vec<BigInt>], dim: usize) -> Vec<BigInt> {
    debug_assert_eq!(rows.len() + 1, dim);
    (0..dim)
        .map(|skip| {
            let minor: Vec<Vec<BigInt>> = rows
                .iter()
                .map(|r| {
                    r.iter()
                        .enumerate()
                        .filter(|&(j, _)| j != skip)
                        .map(|(_, x)| x.clone())
                        .collect()
                })
                .collect();
            let det = determinant(&minor);
            if skip % 2 == 0 {
                det
            } else {
                -det
            }
        })
        .collect()
}
