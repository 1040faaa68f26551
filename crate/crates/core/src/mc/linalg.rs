//! Exact rational Gaussian elimination.

use num::{One, Zero};

use crate::Rational;

/// A dense matrix in row-major order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    pub rows: usize,
    pub cols: usize,
    data: Vec<Rational>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn get(&self, r: usize, c: usize) -> &Rational {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Rational) {
        self.data[r * self.cols + c] = v;
    }

    pub fn column(&self, c: usize) -> Vec<Rational> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn mul_vec(&self, x: &[Rational]) -> Vec<Rational> {
        (0..self.rows)
            .map(|r| {
                (0..self.cols)
                    .filter(|&c| !self.get(r, c).is_zero() && !x[c].is_zero())
                    .map(|c| self.get(r, c) * &x[c])
                    .fold(Rational::zero(), |a, b| a + b)
            })
            .collect()
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        let mut rhs = vec![Rational::zero(); self.rows];
        m.reduce(&mut rhs).len()
    }

    /// Reduced row echelon form in place, carrying `rhs` along. Returns the
    /// pivot columns in row order.
    fn reduce(&mut self, rhs: &mut [Rational]) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let Some(p) = (row..self.rows).find(|&r| !self.get(r, col).is_zero()) else {
                continue;
            };
            if p != row {
                for c in 0..self.cols {
                    self.data.swap(p * self.cols + c, row * self.cols + c);
                }
                rhs.swap(p, row);
            }
            let inv = Rational::one() / self.get(row, col);
            for c in col..self.cols {
                let v = self.get(row, c) * &inv;
                self.set(row, c, v);
            }
            rhs[row] = &rhs[row] * &inv;
            for r in 0..self.rows {
                if r == row || self.get(r, col).is_zero() {
                    continue;
                }
                let factor = self.get(r, col).clone();
                for c in col..self.cols {
                    if self.get(row, c).is_zero() {
                        continue;
                    }
                    let v = self.get(r, c) - &factor * self.get(row, c);
                    self.set(r, c, v);
                }
                let v = &rhs[r] - &factor * &rhs[row];
                rhs[r] = v;
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }
}

/// Solve `A x = b` exactly. Returns the reduced-echelon particular solution
/// (free variables set to zero), or `None` if the system is inconsistent.
pub fn solve(a: &Matrix, b: &[Rational]) -> Option<Vec<Rational>> {
    assert_eq!(a.rows, b.len(), "right-hand side length");
    let mut m = a.clone();
    let mut rhs = b.to_vec();
    let pivots = m.reduce(&mut rhs);
    if rhs[pivots.len()..].iter().any(|v| !v.is_zero()) {
        return None;
    }
    let mut x = vec![Rational::zero(); a.cols];
    for (r, &c) in pivots.iter().enumerate() {
        x[c] = rhs[r].clone();
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    fn matrix(rows: &[&[i64]]) -> Matrix {
        let mut m = Matrix::zeros(rows.len(), rows[0].len());
        for (r, row) in rows.iter().enumerate() {
            for (c, &v) in row.iter().enumerate() {
                m.set(r, c, q(v));
            }
        }
        m
    }

    #[test]
    fn square_system() {
        let a = matrix(&[&[2, 1], &[1, 3]]);
        let x = solve(&a, &[q(3), q(5)]).unwrap();
        assert_eq!(x, vec![Rational::new(4.into(), 5.into()), Rational::new(7.into(), 5.into())]);
    }

    #[test]
    fn free_variables_are_zero() {
        let a = matrix(&[&[1, 1, 0], &[0, 0, 1]]);
        let x = solve(&a, &[q(2), q(7)]).unwrap();
        assert_eq!(x, vec![q(2), q(0), q(7)]);
    }

    #[test]
    fn inconsistent_system() {
        let a = matrix(&[&[1, 1], &[2, 2]]);
        assert!(solve(&a, &[q(1), q(3)]).is_none());
        assert_eq!(a.rank(), 1);
    }

    #[test]
    fn solution_satisfies_system() {
        let a = matrix(&[&[1, -2, 3, 0], &[2, -4, 7, 1], &[0, 0, 1, 1]]);
        let b = [q(1), q(3), q(1)];
        let x = solve(&a, &b).unwrap();
        assert_eq!(a.mul_vec(&x), b.to_vec());
    }
}
