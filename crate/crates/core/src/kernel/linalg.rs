//! Exact Gaussian elimination over the rationals.

use num_traits::{One, Zero};

use super::scalar::Scalar;
use crate::{Error, Result};

/// Reduced row echelon form in place; returns the pivot columns.
pub fn rref(m: &mut [Vec<Scalar>], ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..ncols {
        if row == m.len() {
            break;
        }
        let Some(p) = (row..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(row, p);
        let inv = Scalar::one() / &m[row][col];
        for x in m[row].iter_mut() {
            *x = &*x * &inv;
        }
        let pivot_row = m[row].clone();
        for (r, other) in m.iter_mut().enumerate() {
            if r == row || other[col].is_zero() {
                continue;
            }
            let f = other[col].clone();
            for (x, y) in other.iter_mut().zip(pivot_row.iter()) {
                if !y.is_zero() {
                    *x = &*x - &f * y;
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    pivots
}

pub fn rank(rows: &[Vec<Scalar>], ncols: usize) -> usize {
    let mut m = rows.to_vec();
    rref(&mut m, ncols).len()
}

/// Basis of `{x : rows · x = 0}`, one vector per free column.
pub fn nullspace(rows: &[Vec<Scalar>], ncols: usize) -> Vec<Vec<Scalar>> {
    let mut m = rows.to_vec();
    let pivots = rref(&mut m, ncols);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Scalar::zero(); ncols];
            v[f] = Scalar::one();
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = -m[r][f].clone();
            }
            v
        })
        .collect()
}

/// Unique solution of `a · x = b`. `Singular` when the system is
/// inconsistent, `UnderDetermined` when it has a positive-dimensional
/// solution set.
pub fn solve(a: &[Vec<Scalar>], b: &[Scalar]) -> Result<Vec<Scalar>> {
    let n = a.first().map_or(0, Vec::len);
    let mut m: Vec<Vec<Scalar>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let pivots = rref(&mut m, n + 1);
    if pivots.contains(&n) {
        return Err(Error::Singular);
    }
    if pivots.len() < n {
        return Err(Error::UnderDetermined(n - pivots.len()));
    }
    Ok((0..n).map(|r| m[r][n].clone()).collect())
}

/// 3×3 rational matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mat3(pub [[Scalar; 3]; 3]);

impl Mat3 {
    pub fn identity() -> Self {
        Self::diagonal([Scalar::one(), Scalar::one(), Scalar::one()])
    }

    pub fn diagonal(d: [Scalar; 3]) -> Self {
        let mut m = Self::zero();
        for (i, x) in d.into_iter().enumerate() {
            m.0[i][i] = x;
        }
        m
    }

    pub fn zero() -> Self {
        Mat3(Default::default())
    }

    pub fn from_columns(cols: [[Scalar; 3]; 3]) -> Self {
        let mut m = Self::zero();
        for (j, col) in cols.into_iter().enumerate() {
            for (i, x) in col.into_iter().enumerate() {
                m.0[i][j] = x;
            }
        }
        m
    }

    pub fn det(&self) -> Scalar {
        let a = &self.0;
        &a[0][0] * (&a[1][1] * &a[2][2] - &a[1][2] * &a[2][1]) - &a[0][1] * (&a[1][0] * &a[2][2] - &a[1][2] * &a[2][0])
            + &a[0][2] * (&a[1][0] * &a[2][1] - &a[1][1] * &a[2][0])
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zero();
        for i in 0..3 {
            for j in 0..3 {
                t.0[i][j] = self.0[j][i].clone();
            }
        }
        t
    }

    /// Inverse by the adjugate.
    pub fn inverse(&self) -> Result<Self> {
        let d = self.det();
        if d.is_zero() {
            return Err(Error::Singular);
        }
        let a = &self.0;
        let mut inv = Self::zero();
        for i in 0..3 {
            for j in 0..3 {
                let (r0, r1) = ((j + 1) % 3, (j + 2) % 3);
                let (c0, c1) = ((i + 1) % 3, (i + 2) % 3);
                let cof = &a[r0][c0] * &a[r1][c1] - &a[r0][c1] * &a[r1][c0];
                inv.0[i][j] = cof / &d;
            }
        }
        Ok(inv)
    }

    pub fn mul(&self, other: &Mat3) -> Mat3 {
        let mut out = Self::zero();
        for i in 0..3 {
            for j in 0..3 {
                out.0[i][j] = (0..3).map(|k| &self.0[i][k] * &other.0[k][j]).sum();
            }
        }
        out
    }

    pub fn apply(&self, v: &[Scalar; 3]) -> [Scalar; 3] {
        [0, 1, 2].map(|i| (0..3).map(|k| &self.0[i][k] * &v[k]).sum())
    }
}
