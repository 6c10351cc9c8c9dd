//! Small dense matrices over the scalar field: enough exact linear algebra
//! for metrics on 6- and 7-dimensional spaces.

use crate::scalar::Scalar;

/// Row-major dense matrix.
#[derive(Clone, PartialEq, Debug)]
pub struct Matrix<S: Scalar> {
    rows: usize,
    cols: usize,
    data: Vec<S>,
}

impl<S: Scalar> Matrix<S> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![S::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, S::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<S>>) -> Self {
        let r = rows.len();
        let c = rows.first().map(|x| x.len()).unwrap_or(0);
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c);
            data.extend(row);
        }
        Matrix { rows: r, cols: c, data }
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> S) -> Self {
        let mut m = Matrix::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m.set(i, j, f(i, j));
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> &S {
        &self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: S) {
        self.data[i * self.cols + j] = v;
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn scale(&self, s: &S) -> Self {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x.clone() * s.clone()).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(other.data.iter())
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&(-S::one())))
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows);
        let mut out: Matrix<S> = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k).clone();
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let v = out.get(i, j).clone() + a.clone() * other.get(k, j).clone();
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[S]) -> Vec<S> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut acc = S::zero();
                for j in 0..self.cols {
                    acc += self.get(i, j).clone() * v[j].clone();
                }
                acc
            })
            .collect()
    }

    /// Determinant by Gaussian elimination with partial pivoting
    /// (pivot choice by float magnitude; exact arithmetic for exact scalars).
    pub fn det(&self) -> S {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut a = self.clone();
        let mut det = S::one();
        for col in 0..n {
            let mut pivot = None;
            let mut best = 0.0f64;
            for row in col..n {
                let mag = a.get(row, col).to_f64().abs();
                if mag > best {
                    best = mag;
                    pivot = Some(row);
                }
            }
            let pivot = match pivot {
                Some(p) => p,
                None => return S::zero(),
            };
            if pivot != col {
                for j in 0..n {
                    let tmp = a.get(col, j).clone();
                    a.set(col, j, a.get(pivot, j).clone());
                    a.set(pivot, j, tmp);
                }
                det = -det;
            }
            let p = a.get(col, col).clone();
            if p.is_zero() {
                return S::zero();
            }
            det = det * p.clone();
            for row in (col + 1)..n {
                let factor = a.get(row, col).clone() / p.clone();
                if factor.is_zero() {
                    continue;
                }
                for j in col..n {
                    let v = a.get(row, j).clone() - factor.clone() * a.get(col, j).clone();
                    a.set(row, j, v);
                }
            }
        }
        det
    }

    /// Inverse by Gauss-Jordan; `None` if singular.
    pub fn inverse(&self) -> Option<Self> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut a = self.clone();
        let mut inv: Matrix<S> = Matrix::identity(n);
        for col in 0..n {
            let mut pivot = None;
            let mut best = 0.0f64;
            for row in col..n {
                let mag = a.get(row, col).to_f64().abs();
                if mag > best {
                    best = mag;
                    pivot = Some(row);
                }
            }
            let pivot = pivot?;
            if a.get(pivot, col).is_zero() {
                return None;
            }
            if pivot != col {
                for j in 0..n {
                    let tmp = a.get(col, j).clone();
                    a.set(col, j, a.get(pivot, j).clone());
                    a.set(pivot, j, tmp);
                    let tmp = inv.get(col, j).clone();
                    inv.set(col, j, inv.get(pivot, j).clone());
                    inv.set(pivot, j, tmp);
                }
            }
            let p = a.get(col, col).clone();
            for j in 0..n {
                a.set(col, j, a.get(col, j).clone() / p.clone());
                inv.set(col, j, inv.get(col, j).clone() / p.clone());
            }
            for row in 0..n {
                if row == col {
                    continue;
                }
                let factor = a.get(row, col).clone();
                if factor.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let v = a.get(row, j).clone() - factor.clone() * a.get(col, j).clone();
                    a.set(row, j, v);
                    let v = inv.get(row, j).clone() - factor.clone() * inv.get(col, j).clone();
                    inv.set(row, j, v);
                }
            }
        }
        Some(inv)
    }

    /// Solve `A x = b`; `None` if singular.
    pub fn solve(&self, b: &[S]) -> Option<Vec<S>> {
        self.inverse().map(|inv| inv.mul_vec(b))
    }

    /// Leading principal minors, for Sylvester positive-definiteness tests.
    pub fn leading_minors(&self) -> Vec<S> {
        assert_eq!(self.rows, self.cols);
        (1..=self.rows)
            .map(|k| {
                Matrix::from_fn(k, k, |i, j| self.get(i, j).clone()).det()
            })
            .collect()
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> Matrix<T> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rat;

    #[test]
    fn det_and_inverse() {
        let m = Matrix::from_rows(vec![
            vec![Rat::from_i64(2), Rat::from_i64(1)],
            vec![Rat::from_i64(1), Rat::from_i64(1)],
        ]);
        assert_eq!(m.det(), Rat::from_i64(1));
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), Matrix::identity(2));
    }

    #[test]
    fn singular() {
        let m = Matrix::from_rows(vec![
            vec![Rat::from_i64(1), Rat::from_i64(2)],
            vec![Rat::from_i64(2), Rat::from_i64(4)],
        ]);
        assert_eq!(m.det(), Rat::from_i64(0));
        assert!(m.inverse().is_none());
    }
}
