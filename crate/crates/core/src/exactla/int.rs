use crate::error::arg;
use crate::Result;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Dense matrix of arbitrary-precision integers, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = BigInt::one();
        }
        m
    }

    pub fn from_rows<T: Into<BigInt> + Clone>(cols: usize, rows: &[Vec<T>]) -> Result<Self> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            if r.len() != cols {
                return arg(format!("row of length {} in a matrix with {cols} columns", r.len()));
            }
            data.extend(r.iter().cloned().map(Into::into));
        }
        Ok(IntMatrix { rows: rows.len(), cols, data })
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j * self.rows + i] = self.get(i, j).clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &IntMatrix) -> Result<IntMatrix> {
        if self.cols != other.rows {
            return arg(format!("cannot multiply {}×{} by {}×{}", self.rows, self.cols, other.rows, other.cols));
        }
        let mut c = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    c.data[i * other.cols + j] += a * other.get(k, j);
                }
            }
        }
        Ok(c)
    }

    /// Determinant of a square matrix by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> Result<BigInt> {
        if self.rows != self.cols {
            return arg("determinant of a non-square matrix");
        }
        let n = self.rows;
        let mut m = self.to_rows();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n {
            let Some(p) = (k..n).find(|&i| !m[i][k].is_zero()) else { return Ok(BigInt::zero()) };
            if p != k {
                m.swap(p, k);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (&m[i][j] * &m[k][k] - &m[i][k] * &m[k][j]) / &prev;
                    m[i][j] = v;
                }
            }
            prev = m[k][k].clone();
        }
        Ok(sign * &m[n - 1][n - 1])
    }
}

fn sub_multiple(rows: &mut [Vec<BigInt>], target: usize, src: usize, q: &BigInt) {
    if q.is_zero() {
        return;
    }
    let (t, s) = if target < src {
        let (a, b) = rows.split_at_mut(src);
        (&mut a[target], &b[0])
    } else {
        let (a, b) = rows.split_at_mut(target);
        (&mut b[0], &a[src])
    };
    for (x, y) in t.iter_mut().zip(s.iter()) {
        if !y.is_zero() {
            *x -= q * y;
        }
    }
}

/// Row-style Hermite normal form with a unimodular transform `u`, `u·a = h`.
///
/// Columns are cleared left to right by Euclidean row operations pivoting on the entry of
/// least absolute value; pivots are made positive and entries above each pivot reduced
/// into `[0, pivot)`. Returns `(h, u, rank)`; the zero rows of `h` are the last
/// `rows − rank`, so the matching rows of `u` span the integer left kernel of `a`.
pub fn hnf_with_transform(a: &IntMatrix) -> (IntMatrix, IntMatrix, usize) {
    let (m, n) = (a.rows, a.cols);
    let mut h = a.to_rows();
    let mut u = IntMatrix::identity(m).to_rows();
    let rank = hnf_rows(&mut h, Some(&mut u), n);
    (
        IntMatrix { rows: m, cols: n, data: h.concat() },
        IntMatrix { rows: m, cols: m, data: u.concat() },
        rank,
    )
}

fn hnf_rows(h: &mut [Vec<BigInt>], mut u: Option<&mut [Vec<BigInt>]>, ncols: usize) -> usize {
    let m = h.len();
    let mut r = 0;
    for c in 0..ncols {
        if r == m {
            break;
        }
        loop {
            let Some(k) = (r..m).filter(|&i| !h[i][c].is_zero()).min_by(|&i, &j| h[i][c].abs().cmp(&h[j][c].abs())) else {
                break;
            };
            h.swap(r, k);
            if let Some(u) = u.as_deref_mut() {
                u.swap(r, k);
            }
            let mut clear = true;
            for i in r + 1..m {
                if h[i][c].is_zero() {
                    continue;
                }
                let q = &h[i][c] / &h[r][c];
                sub_multiple(h, i, r, &q);
                if let Some(u) = u.as_deref_mut() {
                    sub_multiple(u, i, r, &q);
                }
                if !h[i][c].is_zero() {
                    clear = false;
                }
            }
            if clear {
                break;
            }
        }
        if h[r][c].is_zero() {
            continue;
        }
        if h[r][c].is_negative() {
            for x in h[r].iter_mut() {
                *x = -&*x;
            }
            if let Some(u) = u.as_deref_mut() {
                for x in u[r].iter_mut() {
                    *x = -&*x;
                }
            }
        }
        for i in 0..r {
            let q = h[i][c].div_floor(&h[r][c]);
            sub_multiple(h, i, r, &q);
            if let Some(u) = u.as_deref_mut() {
                sub_multiple(u, i, r, &q);
            }
        }
        r += 1;
    }
    r
}

/// Hermite normal form of the lattice spanned by `rows` (its nonzero rows only).
pub fn row_hnf(rows: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut h = rows.to_vec();
    let r = hnf_rows(&mut h, None, ncols);
    h.truncate(r);
    h
}

/// Whether two lists of integer vectors span the same lattice.
pub fn same_lattice(a: &[Vec<BigInt>], b: &[Vec<BigInt>]) -> bool {
    row_hnf(a) == row_hnf(b)
}
