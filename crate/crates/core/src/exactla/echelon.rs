use super::fp::Fp;

const NO_ROW: u32 = u32::MAX;
/// Column block width for the reduction kernel; a block of accumulators stays in L2.
const COL_BLOCK: usize = 1024;
/// Vectors reduced together in one pass over the stored rows.
pub const BATCH: usize = 64;

/// Incremental reduced row echelon basis of a subspace of `F_p^n`.
///
/// Each stored row has a pivot 1 and zeros in every other pivot column, so only the
/// entries in the free (non-pivot) columns are kept: `rows` is `rank × free.len()`,
/// row-major, and shrinks in width as pivots are added.
#[derive(Clone, Debug)]
pub struct Echelon {
    fp: Fp,
    ncols: usize,
    pivots: Vec<usize>,
    pivot_row: Vec<u32>,
    free: Vec<usize>,
    rows: Vec<u32>,
}

#[inline(always)]
fn axpy4(acc: &mut [u32], c: [u32; 4], r0: &[u32], r1: &[u32], r2: &[u32], r3: &[u32]) {
    let n = acc.len();
    let (r0, r1, r2, r3) = (&r0[..n], &r1[..n], &r2[..n], &r3[..n]);
    for j in 0..n {
        acc[j] += c[0] * r0[j] + c[1] * r1[j] + c[2] * r2[j] + c[3] * r3[j];
    }
}

#[inline(always)]
fn axpy1(acc: &mut [u32], c: u32, r: &[u32]) {
    let n = acc.len();
    let r = &r[..n];
    for j in 0..n {
        acc[j] += c * r[j];
    }
}

/// `acc[k] += Σ_i coefs[k][i] · src_i` for each target, with `src_i` a row of `rows`
/// (row-major, given stride) restricted to columns `lo..hi`. Accumulators must hold
/// residues on entry; on exit they are reduced.
fn accumulate(fp: Fp, rows: &[u32], stride: usize, nrows: usize, coefs: &[&[u32]], accs: &mut [&mut [u32]]) {
    let per_reduce = (fp.lazy_bound() / 4).max(1);
    let width = accs.first().map_or(0, |a| a.len());
    let mut lo = 0;
    while lo < width {
        let hi = (lo + COL_BLOCK).min(width);
        let mut since = 0;
        let mut i = 0;
        while i < nrows {
            let g = (nrows - i).min(4);
            let row = |t: usize| &rows[(i + t) * stride + lo..(i + t) * stride + hi];
            for (acc, c) in accs.iter_mut().zip(coefs) {
                let c = &c[i..i + g];
                if c.iter().all(|&x| x == 0) {
                    continue;
                }
                let a = &mut acc[lo..hi];
                if g == 4 {
                    axpy4(a, [c[0], c[1], c[2], c[3]], row(0), row(1), row(2), row(3));
                } else {
                    for (t, &ct) in c.iter().enumerate() {
                        if ct != 0 {
                            axpy1(a, ct, row(t));
                        }
                    }
                }
            }
            i += g;
            since += 1;
            if since == per_reduce {
                for acc in accs.iter_mut() {
                    fp.reduce_slice(&mut acc[lo..hi]);
                }
                since = 0;
            }
        }
        for acc in accs.iter_mut() {
            fp.reduce_slice(&mut acc[lo..hi]);
        }
        lo = hi;
    }
}

impl Echelon {
    pub fn new(fp: Fp, ncols: usize) -> Self {
        Echelon { fp, ncols, pivots: Vec::new(), pivot_row: vec![NO_ROW; ncols], free: (0..ncols).collect(), rows: Vec::new() }
    }

    pub fn field(&self) -> Fp {
        self.fp
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Pivot columns in insertion order.
    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn free_columns(&self) -> &[usize] {
        &self.free
    }

    pub fn is_full(&self) -> bool {
        self.free.is_empty()
    }

    /// Residues of `vecs` modulo the stored subspace, in free-column coordinates.
    /// Every input must have length `ncols` with entries in `[0, p)`.
    pub fn residuals(&self, vecs: &[&[u32]]) -> Vec<Vec<u32>> {
        let nf = self.free.len();
        let mut out: Vec<Vec<u32>> = vecs
            .iter()
            .map(|v| {
                debug_assert_eq!(v.len(), self.ncols);
                self.free.iter().map(|&c| v[c]).collect()
            })
            .collect();
        if self.rank() == 0 || nf == 0 {
            return out;
        }
        let coefs: Vec<Vec<u32>> =
            vecs.iter().map(|v| self.pivots.iter().map(|&c| self.fp.neg(v[c])).collect()).collect();
        let coef_refs: Vec<&[u32]> = coefs.iter().map(|c| c.as_slice()).collect();
        let mut accs: Vec<&mut [u32]> = out.iter_mut().map(|v| v.as_mut_slice()).collect();
        accumulate(self.fp, &self.rows, nf, self.rank(), &coef_refs, &mut accs);
        out
    }

    pub fn contains(&self, v: &[u32]) -> bool {
        self.residuals(&[v])[0].iter().all(|&x| x == 0)
    }

    /// For each input, whether it lies in the stored subspace.
    pub fn contains_batch(&self, vecs: &[&[u32]]) -> Vec<bool> {
        let mut out = Vec::with_capacity(vecs.len());
        for chunk in vecs.chunks(BATCH) {
            out.extend(self.residuals(chunk).iter().map(|r| r.iter().all(|&x| x == 0)));
        }
        out
    }

    pub fn insert(&mut self, v: &[u32]) -> bool {
        self.insert_batch(&[v])[0]
    }

    pub fn insert_sparse(&mut self, v: &[(usize, u32)]) -> bool {
        let dense = self.densify(v);
        self.insert(&dense)
    }

    pub fn densify(&self, v: &[(usize, u32)]) -> Vec<u32> {
        let mut dense = vec![0u32; self.ncols];
        for &(c, x) in v {
            dense[c] = self.fp.add(dense[c], x % self.fp.p());
        }
        dense
    }

    /// Insert vectors in order; entry `k` of the result says whether vector `k` was
    /// independent of the subspace spanned so far (including earlier vectors of the batch).
    pub fn insert_batch(&mut self, vecs: &[&[u32]]) -> Vec<bool> {
        let mut out = Vec::with_capacity(vecs.len());
        for chunk in vecs.chunks(BATCH) {
            if self.is_full() {
                out.extend(std::iter::repeat_n(false, chunk.len()));
                continue;
            }
            out.extend(self.insert_chunk(chunk));
        }
        out
    }

    fn insert_chunk(&mut self, vecs: &[&[u32]]) -> Vec<bool> {
        let fp = self.fp;
        let p = fp.p();
        let res = self.residuals(vecs);
        let lazy = fp.lazy_bound().max(1);
        let mut new_rows: Vec<Vec<u32>> = Vec::new();
        let mut new_piv: Vec<usize> = Vec::new();
        let mut inserted = vec![false; vecs.len()];
        for (k, mut v) in res.into_iter().enumerate() {
            // rows of the batch are mutually reduced, so each coefficient is read once
            let mut pending = 0;
            for (row, &j) in new_rows.iter().zip(&new_piv) {
                let c = v[j] % p;
                if c != 0 {
                    axpy1(&mut v, p - c, row);
                    pending += 1;
                    if pending == lazy {
                        fp.reduce_slice(&mut v);
                        pending = 0;
                    }
                }
            }
            if pending > 0 {
                fp.reduce_slice(&mut v);
            }
            let Some(j0) = v.iter().position(|&x| x != 0) else { continue };
            let inv = fp.inv(v[j0]);
            for x in v.iter_mut() {
                *x *= inv;
            }
            fp.reduce_slice(&mut v);
            for row in new_rows.iter_mut() {
                let c = row[j0];
                if c != 0 {
                    axpy1(row, p - c, &v);
                    fp.reduce_slice(row);
                }
            }
            new_rows.push(v);
            new_piv.push(j0);
            inserted[k] = true;
        }
        if !new_rows.is_empty() {
            self.absorb(new_rows, new_piv);
        }
        inserted
    }

    /// Add mutually reduced rows (free-column coordinates, pivots at free positions
    /// `new_piv`), clear their pivot columns from the old rows and compact.
    fn absorb(&mut self, new_rows: Vec<Vec<u32>>, new_piv: Vec<usize>) {
        let fp = self.fp;
        let nf = self.free.len();
        let r = self.rank();
        let m = new_rows.len();
        if r > 0 {
            let flat: Vec<u32> = new_rows.iter().flatten().copied().collect();
            // old rows in groups, so that each pass over the new rows serves several targets
            for start in (0..r).step_by(BATCH) {
                let end = (start + BATCH).min(r);
                let coefs: Vec<Vec<u32>> = (start..end)
                    .map(|i| new_piv.iter().map(|&j| fp.neg(self.rows[i * nf + j])).collect())
                    .collect();
                let coef_refs: Vec<&[u32]> = coefs.iter().map(|c| c.as_slice()).collect();
                let block = &mut self.rows[start * nf..end * nf];
                let mut accs: Vec<&mut [u32]> = block.chunks_mut(nf).collect();
                accumulate(fp, &flat, nf, m, &coef_refs, &mut accs);
            }
        }
        let mut keep = vec![true; nf];
        for &j in &new_piv {
            keep[j] = false;
        }
        let kept: Vec<usize> = (0..nf).filter(|&j| keep[j]).collect();
        let nf2 = kept.len();
        for i in 0..r {
            for (t, &j) in kept.iter().enumerate() {
                self.rows[i * nf2 + t] = self.rows[i * nf + j];
            }
        }
        self.rows.truncate(r * nf2);
        self.rows.reserve(m * nf2);
        for row in &new_rows {
            self.rows.extend(kept.iter().map(|&j| row[j]));
        }
        for (t, &j) in new_piv.iter().enumerate() {
            let col = self.free[j];
            self.pivot_row[col] = (r + t) as u32;
            self.pivots.push(col);
        }
        self.free = kept.iter().map(|&j| self.free[j]).collect();
    }

    /// Row `i` (insertion order) as a full-length vector.
    pub fn row(&self, i: usize) -> Vec<u32> {
        let nf = self.free.len();
        let mut out = vec![0u32; self.ncols];
        out[self.pivots[i]] = 1;
        for (j, &c) in self.free.iter().enumerate() {
            out[c] = self.rows[i * nf + j];
        }
        out
    }

    /// The reduced row echelon form: full rows ordered by pivot column.
    pub fn rref(&self) -> Vec<Vec<u32>> {
        let mut order: Vec<usize> = (0..self.rank()).collect();
        order.sort_by_key(|&i| self.pivots[i]);
        order.into_iter().map(|i| self.row(i)).collect()
    }

    /// Canonical nullspace basis of the stored rows: one sparse vector per free column,
    /// with that column set to 1 and the other free columns 0. Ordered by free column.
    pub fn nullspace(&self) -> Vec<Vec<(usize, u32)>> {
        let nf = self.free.len();
        (0..nf).map(|j| self.null_vector(j)).collect()
    }

    /// Nullspace vector for free position `j`, sorted by column.
    pub fn null_vector(&self, j: usize) -> Vec<(usize, u32)> {
        let nf = self.free.len();
        let mut v = vec![(self.free[j], 1u32)];
        for (i, &pc) in self.pivots.iter().enumerate() {
            let x = self.rows[i * nf + j];
            if x != 0 {
                v.push((pc, self.fp.neg(x)));
            }
        }
        v.sort_unstable();
        v
    }

    pub fn nullity(&self) -> usize {
        self.free.len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::SeededRng;

    // plain Gaussian elimination, one vector at a time
    fn naive_rank(fp: Fp, rows: &[Vec<u32>]) -> usize {
        let mut m: Vec<Vec<u32>> = rows.to_vec();
        let cols = m.first().map_or(0, |r| r.len());
        let mut r = 0;
        for c in 0..cols {
            let Some(piv) = (r..m.len()).find(|&i| m[i][c] != 0) else { continue };
            m.swap(r, piv);
            let inv = fp.inv(m[r][c]);
            let pr: Vec<u32> = m[r].iter().map(|&x| fp.mul(x, inv)).collect();
            for i in 0..m.len() {
                if i != r && m[i][c] != 0 {
                    let f = m[i][c];
                    for j in 0..cols {
                        m[i][j] = fp.sub(m[i][j], fp.mul(f, pr[j]));
                    }
                }
            }
            m[r] = pr;
            r += 1;
        }
        r
    }

    fn random_low_rank(rng: &mut SeededRng, fp: Fp, n: usize, cols: usize, rank: usize) -> Vec<Vec<u32>> {
        let basis: Vec<Vec<u32>> = (0..rank).map(|_| (0..cols).map(|_| rng.residue(fp.p())).collect()).collect();
        (0..n)
            .map(|_| {
                let mut v = vec![0u32; cols];
                for b in &basis {
                    let c = rng.residue(fp.p());
                    for (x, &y) in v.iter_mut().zip(b) {
                        *x = fp.add(*x, fp.mul(c, y));
                    }
                }
                v
            })
            .collect()
    }

    #[test]
    fn rank_and_rref_match_naive() {
        let fp = Fp::new(101).unwrap();
        let mut rng = SeededRng::new(7);
        for &(n, cols, rank) in &[(10, 8, 5), (150, 140, 90), (300, 2100, 200), (70, 40, 40)] {
            let rows = random_low_rank(&mut rng, fp, n, cols, rank);
            let mut e = Echelon::new(fp, cols);
            let refs: Vec<&[u32]> = rows.iter().map(|r| r.as_slice()).collect();
            let ins = e.insert_batch(&refs);
            assert_eq!(e.rank(), naive_rank(fp, &rows));
            assert_eq!(ins.iter().filter(|&&b| b).count(), e.rank());
            // every input is in the span, the rref rows are reduced
            assert!(rows.iter().all(|r| e.contains(r)));
            let rref = e.rref();
            let piv: Vec<usize> = rref.iter().map(|r| r.iter().position(|&x| x != 0).unwrap()).collect();
            assert!(piv.windows(2).all(|w| w[0] < w[1]));
            for (i, r) in rref.iter().enumerate() {
                assert_eq!(r[piv[i]], 1);
                for (k, &pc) in piv.iter().enumerate() {
                    if k != i {
                        assert_eq!(r[pc], 0);
                    }
                }
            }
            // nullspace vectors are orthogonal to every row
            for v in e.nullspace() {
                for r in &rows {
                    let dot = v.iter().fold(0u32, |s, &(c, x)| fp.add(s, fp.mul(x, r[c])));
                    assert_eq!(dot, 0);
                }
            }
            assert_eq!(e.nullity() + e.rank(), cols);
        }
    }

    #[test]
    fn one_at_a_time_equals_batched() {
        let fp = Fp::new(32749).unwrap();
        let mut rng = SeededRng::new(3);
        let rows = random_low_rank(&mut rng, fp, 120, 90, 60);
        let mut a = Echelon::new(fp, 90);
        let mut b = Echelon::new(fp, 90);
        let refs: Vec<&[u32]> = rows.iter().map(|r| r.as_slice()).collect();
        let ia: Vec<bool> = rows.iter().map(|r| a.insert(r)).collect();
        let ib = b.insert_batch(&refs);
        assert_eq!(ia, ib);
        assert_eq!(a.rref(), b.rref());
        assert_eq!(a.rank(), 60);
    }

    #[test]
    fn trivial_cases() {
        let fp = Fp::new(101).unwrap();
        let mut e = Echelon::new(fp, 4);
        assert!(!e.insert(&[0, 0, 0, 0]));
        assert_eq!(e.nullspace().len(), 4);
        for i in 0..4 {
            let mut v = vec![0; 4];
            v[i] = 1;
            assert!(e.insert(&v));
        }
        assert!(e.is_full());
        assert!(!e.insert(&[1, 2, 3, 4]));
        assert!(e.nullspace().is_empty());
        assert!(!e.insert_sparse(&[]));
    }
}
