//! Exact dense linear algebra over the rationals, just enough for rank
//! computations and solving small linear systems by Gaussian elimination.

use num_traits::Zero;

use crate::coeff::Coeff;

/// Dense row-major matrix of exact rationals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Coeff>,
}

/// Result of solving `A x = b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Solve {
    /// A solution, with free variables set to zero.
    Solution(Vec<Coeff>),
    /// The system is inconsistent.
    Inconsistent,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Coeff::zero(); rows * cols],
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Coeff {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Coeff) {
        self.data[r * self.cols + c] = v;
    }

    /// Row-reduces in place; returns the pivot columns.
    fn reduce(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let Some(pr) = (row..self.rows).find(|&r| !self.get(r, col).is_zero()) else {
                continue;
            };
            if pr != row {
                for c in 0..self.cols {
                    self.data.swap(pr * self.cols + c, row * self.cols + c);
                }
            }
            let inv = self.get(row, col).recip();
            for c in col..self.cols {
                let v = self.get(row, c) * &inv;
                self.set(row, c, v);
            }
            for r in 0..self.rows {
                if r == row || self.get(r, col).is_zero() {
                    continue;
                }
                let factor = self.get(r, col).clone();
                for c in col..self.cols {
                    let v = self.get(r, c) - &factor * self.get(row, c);
                    self.set(r, c, v);
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.reduce().len()
    }

    /// Solves `self * x = b` exactly. Free variables are set to zero, so the
    /// solution is deterministic.
    pub fn solve(&self, b: &[Coeff]) -> Solve {
        assert_eq!(b.len(), self.rows, "right-hand side length mismatch");
        let mut aug = Matrix::zeros(self.rows, self.cols + 1);
        for (r, rhs) in b.iter().enumerate() {
            for c in 0..self.cols {
                aug.set(r, c, self.get(r, c).clone());
            }
            aug.set(r, self.cols, rhs.clone());
        }
        let pivots = aug.reduce();
        if pivots.last() == Some(&self.cols) {
            return Solve::Inconsistent;
        }
        let mut x = vec![Coeff::zero(); self.cols];
        for (row, &col) in pivots.iter().enumerate() {
            x[col] = aug.get(row, self.cols).clone();
        }
        Solve::Solution(x)
    }
}
