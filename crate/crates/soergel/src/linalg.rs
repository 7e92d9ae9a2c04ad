//! Dense exact linear algebra over the rationals.
//!
//! Small systems only: Gaussian elimination with exact `BigRational`
//! arithmetic, used for invariant decompositions and Hom-space solving.

use num::{BigRational, Zero};

pub type Q = BigRational;

/// A dense matrix in row-major order.
#[derive(Clone, Debug, PartialEq)]
pub struct Mat {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<Q>,
}

impl Mat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat {
            rows,
            cols,
            data: vec![Q::zero(); rows * cols],
        }
    }

    pub fn at(&self, r: usize, c: usize) -> &Q {
        &self.data[r * self.cols + c]
    }

    pub fn at_mut(&mut self, r: usize, c: usize) -> &mut Q {
        &mut self.data[r * self.cols + c]
    }

    /// Reduced row echelon form in place; returns pivot column indices.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row >= self.rows {
                break;
            }
            let Some(p) = (row..self.rows).find(|&r| !self.at(r, col).is_zero()) else {
                continue;
            };
            self.swap_rows(row, p);
            let inv = self.at(row, col).recip();
            for c in col..self.cols {
                let v = self.at(row, c) * &inv;
                *self.at_mut(row, c) = v;
            }
            for r in 0..self.rows {
                if r != row && !self.at(r, col).is_zero() {
                    let f = self.at(r, col).clone();
                    for c in col..self.cols {
                        let v = self.at(r, c) - &(self.at(row, c) * &f);
                        *self.at_mut(r, c) = v;
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub fn rank(mut self) -> usize {
        self.rref().len()
    }
}

/// Solves `A x = b`. Returns `None` if inconsistent, otherwise one solution
/// (free variables set to zero).
pub fn solve(a: &Mat, b: &[Q]) -> Option<Vec<Q>> {
    assert_eq!(a.rows, b.len());
    let mut aug = Mat::zeros(a.rows, a.cols + 1);
    for r in 0..a.rows {
        for c in 0..a.cols {
            *aug.at_mut(r, c) = a.at(r, c).clone();
        }
        *aug.at_mut(r, a.cols) = b[r].clone();
    }
    let pivots = aug.rref();
    if pivots.last() == Some(&a.cols) {
        return None; // pivot in the augmented column: inconsistent
    }
    let mut x = vec![Q::zero(); a.cols];
    for (r, &col) in pivots.iter().enumerate() {
        x[col] = aug.at(r, a.cols).clone();
    }
    Some(x)
}

/// Dimension of the solution space of `A x = 0`.
pub fn nullity(a: Mat) -> usize {
    let cols = a.cols;
    cols - a.rank()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::FromPrimitive;

    fn q(n: i64) -> Q {
        Q::from_i64(n).unwrap()
    }

    #[test]
    fn solve_and_rank() {
        // x + y = 3, x - y = 1  =>  x = 2, y = 1.
        let mut a = Mat::zeros(2, 2);
        *a.at_mut(0, 0) = q(1);
        *a.at_mut(0, 1) = q(1);
        *a.at_mut(1, 0) = q(1);
        *a.at_mut(1, 1) = q(-1);
        let x = solve(&a, &[q(3), q(1)]).unwrap();
        assert_eq!(x, vec![q(2), q(1)]);
        assert_eq!(a.clone().rank(), 2);
        assert_eq!(nullity(a), 0);

        // Inconsistent system.
        let mut b = Mat::zeros(2, 1);
        *b.at_mut(0, 0) = q(1);
        *b.at_mut(1, 0) = q(1);
        assert!(solve(&b, &[q(1), q(2)]).is_none());
    }
}
