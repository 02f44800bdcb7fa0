use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Incremental fraction-free row reduction over the integers, which computes ranks
/// over the rationals.
///
/// The stored rows are `D` times the reduced row echelon form, where `D` is the
/// determinant of the pivot block of the inserted rows. By Cramer's rule every stored
/// entry is a minor of the input, so entries stay bounded and every division is exact.
#[derive(Clone, Debug)]
pub struct RationalEchelon {
    ncols: usize,
    pivots: Vec<usize>,
    rows: Vec<Vec<BigInt>>,
    det: BigInt,
}

impl RationalEchelon {
    pub fn new(ncols: usize) -> Self {
        RationalEchelon { ncols, pivots: Vec::new(), rows: Vec::new(), det: BigInt::one() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    /// `D·v` minus its projection onto the stored rows: zero exactly when `v` is dependent.
    fn reduce(&self, v: &[BigInt]) -> Vec<BigInt> {
        let mut w: Vec<BigInt> = v.iter().map(|x| if x.is_zero() { BigInt::zero() } else { x * &self.det }).collect();
        for (row, &c) in self.rows.iter().zip(&self.pivots) {
            let a = &v[c];
            if a.is_zero() {
                continue;
            }
            for (x, y) in w.iter_mut().zip(row) {
                if !y.is_zero() {
                    *x -= a * y;
                }
            }
        }
        w
    }

    /// Insert a row; returns whether it raised the rank.
    pub fn insert(&mut self, v: Vec<BigInt>) -> bool {
        debug_assert_eq!(v.len(), self.ncols);
        let w = self.reduce(&v);
        let Some(c) = w.iter().position(|x| !x.is_zero()) else { return false };
        let d_new = w[c].clone();
        for row in self.rows.iter_mut() {
            let t = std::mem::take(&mut row[c]);
            for (x, y) in row.iter_mut().zip(&w) {
                let mut z = &*x * &d_new;
                if !t.is_zero() && !y.is_zero() {
                    z -= &t * y;
                }
                *x = z / &self.det;
            }
            row[c] = BigInt::zero();
        }
        self.rows.push(w);
        self.pivots.push(c);
        self.det = d_new;
        true
    }

    pub fn insert_i128(&mut self, v: &[i128]) -> bool {
        self.insert(v.iter().map(|&x| BigInt::from(x)).collect())
    }

    pub fn contains(&self, v: Vec<BigInt>) -> bool {
        self.reduce(&v).iter().all(Zero::is_zero)
    }

    /// The stored rows (an integral basis of the row space over the rationals).
    pub fn rows(&self) -> impl Iterator<Item = &[BigInt]> {
        self.rows.iter().map(|r| r.as_slice())
    }
}
