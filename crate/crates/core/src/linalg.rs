//! Exact integer linear algebra: square integer matrices and the rank of
//! integer systems by fraction-free elimination.

use crate::error::{Error, Result};

/// Dense square integer matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mat {
    n: usize,
    data: Vec<i64>,
}

impl Mat {
    pub fn zeros(n: usize) -> Self {
        Mat {
            n,
            data: vec![0; n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Mat::zeros(n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn diag(d: &[i64]) -> Self {
        let mut m = Mat::zeros(d.len());
        for (i, &v) in d.iter().enumerate() {
            m.set(i, i, v);
        }
        m
    }

    /// The matrix unit `E_ij`.
    pub fn unit(n: usize, i: usize, j: usize) -> Self {
        let mut m = Mat::zeros(n);
        m.set(i, j, 1);
        m
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.data[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: i64) {
        self.data[i * self.n + j] = v;
    }

    pub fn entries(&self) -> &[i64] {
        &self.data
    }

    pub fn mul(&self, other: &Mat) -> Mat {
        let n = self.n;
        let mut out = Mat::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..n {
                    out.data[i * n + j] += a * other.get(k, j);
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Mat) -> Mat {
        Mat {
            n: self.n,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, other: &Mat) -> Mat {
        Mat {
            n: self.n,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn scale(&self, k: i64) -> Mat {
        Mat {
            n: self.n,
            data: self.data.iter().map(|a| a * k).collect(),
        }
    }

    pub fn transpose(&self) -> Mat {
        let mut out = Mat::zeros(self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                out.set(j, i, self.get(i, j));
            }
        }
        out
    }

    pub fn bracket(&self, other: &Mat) -> Mat {
        self.mul(other).sub(&other.mul(self))
    }

    pub fn trace(&self) -> i64 {
        (0..self.n).map(|i| self.get(i, i)).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&v| v == 0)
    }
}

fn gcd(mut a: i128, mut b: i128) -> i128 {
    a = a.abs();
    b = b.abs();
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

fn normalize(row: &mut [i128]) {
    let g = row.iter().fold(0, |g, &v| gcd(g, v));
    if g > 1 {
        for v in row.iter_mut() {
            *v /= g;
        }
    }
}

fn overflow() -> Error {
    Error::Consistency("integer overflow during exact elimination".into())
}

/// Rank over the rationals of an integer matrix given by rows.
pub fn rank(rows: &[Vec<i64>]) -> Result<usize> {
    let mut m: Vec<Vec<i128>> = rows
        .iter()
        .filter(|r| r.iter().any(|&v| v != 0))
        .map(|r| r.iter().map(|&v| v as i128).collect())
        .collect();
    let ncols = m.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for col in 0..ncols {
        if rank == m.len() {
            break;
        }
        let pivot = (rank..m.len())
            .filter(|&r| m[r][col] != 0)
            .min_by_key(|&r| m[r][col].abs());
        let Some(pivot) = pivot else { continue };
        m.swap(rank, pivot);
        let (head, tail) = m.split_at_mut(rank + 1);
        let prow = &head[rank];
        let a = prow[col];
        for row in tail.iter_mut() {
            let b = row[col];
            if b == 0 {
                continue;
            }
            for c in col..ncols {
                let v = row[c]
                    .checked_mul(a)
                    .and_then(|x| prow[c].checked_mul(b).and_then(|y| x.checked_sub(y)))
                    .ok_or_else(overflow)?;
                row[c] = v;
            }
            normalize(row);
        }
        rank += 1;
    }
    Ok(rank)
}

/// Dimension of the solution space of the homogeneous system.
pub fn nullity(rows: &[Vec<i64>], ncols: usize) -> Result<usize> {
    if rows.iter().any(|r| r.len() != ncols) {
        return Err(Error::Consistency("ragged equation system".into()));
    }
    Ok(ncols - rank(rows)?)
}
