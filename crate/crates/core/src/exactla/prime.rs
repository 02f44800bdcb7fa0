use super::echelon::Echelon;
use super::fp::Fp;
use crate::error::{arg, Error};
use crate::Result;

/// Dense matrix over `F_p` with residues in `[0, p)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimeMatrix {
    fp: Fp,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

impl PrimeMatrix {
    pub fn zeros(fp: Fp, rows: usize, cols: usize) -> Self {
        PrimeMatrix { fp, rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(fp: Fp, n: usize) -> Self {
        let mut m = Self::zeros(fp, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1 % fp.p();
        }
        m
    }

    /// Rows of integers, reduced mod p.
    pub fn from_rows(fp: Fp, cols: usize, rows: &[Vec<i64>]) -> Result<Self> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            if r.len() != cols {
                return arg(format!("row of length {} in a matrix with {cols} columns", r.len()));
            }
            data.extend(r.iter().map(|&x| fp.from_i64(x)));
        }
        Ok(PrimeMatrix { fp, rows: rows.len(), cols, data })
    }

    pub fn field(&self) -> Fp {
        self.fp
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[u32] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.data[i * self.cols + j]
    }

    fn echelon(&self) -> Echelon {
        let mut e = Echelon::new(self.fp, self.cols);
        let refs: Vec<&[u32]> = (0..self.rows).map(|i| self.row(i)).collect();
        e.insert_batch(&refs);
        e
    }

    /// Rank and the row canonical form (the `rank` nonzero rows).
    pub fn rcf(&self) -> (usize, PrimeMatrix) {
        let e = self.echelon();
        let rows = e.rref();
        let data = rows.concat();
        (e.rank(), PrimeMatrix { fp: self.fp, rows: rows.len(), cols: self.cols, data })
    }

    pub fn rank(&self) -> usize {
        self.echelon().rank()
    }

    /// Canonical nullspace basis: one vector per free column of the row canonical form,
    /// that column 1 and the other free columns 0.
    pub fn nullspace_basis(&self) -> Vec<Vec<u32>> {
        let e = self.echelon();
        e.nullspace()
            .into_iter()
            .map(|v| {
                let mut d = vec![0u32; self.cols];
                for (c, x) in v {
                    d[c] = x;
                }
                d
            })
            .collect()
    }

    /// Whitespace-separated dump with a `rows cols p` header.
    pub fn dump(&self) -> String {
        let mut s = format!("{} {} {}\n", self.rows, self.cols, self.fp.p());
        for i in 0..self.rows {
            let line: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            s.push_str(&line.join(" "));
            s.push('\n');
        }
        s
    }

    pub fn parse(src: &str) -> Result<Self> {
        let mut lines = src.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
        let bad = |line: usize, msg: &str| Error::Parse { line: line + 1, msg: msg.to_string() };
        let (hl, header) = lines.next().ok_or_else(|| bad(0, "missing header"))?;
        let nums: Vec<u64> = header
            .split_whitespace()
            .map(|t| t.parse::<u64>().map_err(|_| bad(hl, "header must be `rows cols p`")))
            .collect::<Result<_>>()?;
        let [rows, cols, p] = nums[..] else { return Err(bad(hl, "header must be `rows cols p`")) };
        let fp = Fp::new(u32::try_from(p).map_err(|_| bad(hl, "prime too large"))?)?;
        let (rows, cols) = (rows as usize, cols as usize);
        let mut data = Vec::with_capacity(rows * cols);
        let mut seen = 0;
        for (ln, l) in lines {
            let before = data.len();
            for t in l.split_whitespace() {
                let x: i64 = t.parse().map_err(|_| bad(ln, "entry is not an integer"))?;
                data.push(fp.from_i64(x));
            }
            if data.len() - before != cols {
                return Err(bad(ln, "row length differs from header"));
            }
            seen += 1;
        }
        if seen != rows {
            return Err(bad(hl, "row count differs from header"));
        }
        Ok(PrimeMatrix { fp, rows, cols, data })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::SeededRng;

    #[test]
    fn trivial_rcf() {
        let fp = Fp::new(101).unwrap();
        let z = PrimeMatrix::zeros(fp, 3, 4);
        assert_eq!(z.rcf().0, 0);
        assert_eq!(z.nullspace_basis().len(), 4);
        let id = PrimeMatrix::identity(fp, 5);
        let (r, m) = id.rcf();
        assert_eq!(r, 5);
        assert_eq!(m, id);
        assert!(id.nullspace_basis().is_empty());
    }

    #[test]
    fn rcf_is_idempotent_and_nullspace_is_canonical() {
        let fp = Fp::new(101).unwrap();
        let mut rng = SeededRng::new(11);
        for _ in 0..20 {
            let rows: Vec<Vec<i64>> = (0..6).map(|_| (0..9).map(|_| rng.small_int(2)).collect()).collect();
            let m = PrimeMatrix::from_rows(fp, 9, &rows).unwrap();
            let (r, c) = m.rcf();
            let (r2, c2) = c.rcf();
            assert_eq!((r, &c), (r2, &c2));
            let ns = c.nullspace_basis();
            assert_eq!(ns.len(), 9 - r);
            let pivots: Vec<usize> = (0..r).map(|i| c.row(i).iter().position(|&x| x != 0).unwrap()).collect();
            let free: Vec<usize> = (0..9).filter(|j| !pivots.contains(j)).collect();
            for (v, &f) in ns.iter().zip(&free) {
                for &g in &free {
                    assert_eq!(v[g], u32::from(g == f));
                }
                for i in 0..m.rows() {
                    let dot = (0..9).fold(0, |s, j| fp.add(s, fp.mul(v[j], m.get(i, j))));
                    assert_eq!(dot, 0);
                }
            }
        }
    }

    #[test]
    fn dump_round_trip() {
        let fp = Fp::new(7).unwrap();
        let m = PrimeMatrix::from_rows(fp, 3, &[vec![1, -1, 9], vec![0, 3, 6]]).unwrap();
        let s = m.dump();
        assert_eq!(s, "2 3 7\n1 6 2\n0 3 6\n");
        assert_eq!(PrimeMatrix::parse(&s).unwrap(), m);
        assert!(PrimeMatrix::parse("2 3 7\n1 2 3\n").is_err());
        assert!(PrimeMatrix::parse("1 2 8\n1 2\n").is_err());
    }
}
