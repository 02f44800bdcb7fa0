use crate::exactla::{Echelon, Fp, BATCH};
use crate::freealg::{MonomialSpace, Poly};
use std::cmp::Ordering;
use std::collections::{HashSet, VecDeque};

/// A sparse vector over `F_p`: `(monomial, residue)` pairs.
pub type SparseVec = Vec<(usize, u32)>;

pub fn residues(fp: Fp, p: &Poly) -> SparseVec {
    p.terms.iter().map(|&(m, c)| (m, fp.from_i64(c))).filter(|&(_, x)| x != 0).collect()
}

/// Integer polynomial from residues, divided by its content.
///
/// The vector is first rescaled by the multiplier that makes some entry `1` and the
/// largest symmetric representative smallest (ties: smaller sum of squares), so an
/// identity with small integer coefficients comes back exactly from its reduction mod `p`.
pub fn lift_residues(space: &MonomialSpace, fp: Fp, v: &[(usize, u32)]) -> Poly {
    const MAX_MULTIPLIERS: usize = 512;
    let mut xs: Vec<u32> = v.iter().map(|&(_, x)| x).filter(|&x| x != 0).collect();
    xs.sort_unstable();
    xs.dedup();
    let cost = |l: u32| {
        v.iter().fold((0i64, 0i64), |(mx, sq), &(_, x)| {
            let y = fp.signed(fp.mul(l, x));
            (mx.max(y.abs()), sq + y * y)
        })
    };
    let best = xs
        .iter()
        .take(MAX_MULTIPLIERS)
        .map(|&x| fp.inv(x))
        .chain(std::iter::once(1))
        .min_by_key(|&l| (cost(l), l))
        .unwrap_or(1);
    Poly::from_pairs(space, v.iter().map(|&(m, x)| (m, fp.signed(fp.mul(best, x))))).primitive()
}

/// The `S_n`-submodule generated by a set of polynomials, over `F_p`.
///
/// A module is closed by spinning: the orbit vectors `π·g` are visited
/// breadth-first from the identity through the generators `(0 1)` and the `n`-cycle,
/// and only the images of vectors that were independent are queued. The resulting
/// span is invariant under both generators and so under all of `S_n`.
#[derive(Clone)]
pub struct ModuleSpan<'a> {
    space: &'a MonomialSpace,
    echelon: Echelon,
    gens: Vec<Vec<u8>>,
    /// `maps[g][m]` = image of monomial `m` under generator `g`, with sign.
    maps: Vec<Vec<(u32, bool)>>,
    cap: Option<usize>,
    attempts: usize,
}

impl<'a> ModuleSpan<'a> {
    pub fn new(space: &'a MonomialSpace, fp: Fp) -> Self {
        let n = space.degree();
        let mut gens = Vec::new();
        if n >= 2 {
            let mut swap: Vec<u8> = (0..n as u8).collect();
            swap.swap(0, 1);
            gens.push(swap);
            if n >= 3 {
                gens.push((0..n as u8).map(|i| (i + 1) % n as u8).collect());
            }
        }
        let maps = gens
            .iter()
            .map(|g| {
                (0..space.len())
                    .map(|m| {
                        let (m2, s) = space.act_monomial(g, m);
                        (m2 as u32, s < 0)
                    })
                    .collect()
            })
            .collect();
        ModuleSpan { space, echelon: Echelon::new(fp, space.len()), gens, maps, cap: None, attempts: 0 }
    }

    /// Stop spinning once the rank reaches `cap`. Only sound when `cap` is the
    /// dimension of a known module containing everything that will be added.
    pub fn with_cap(mut self, cap: usize) -> Self {
        self.cap = Some(cap);
        self
    }

    pub fn space(&self) -> &MonomialSpace {
        self.space
    }

    pub fn field(&self) -> Fp {
        self.echelon.field()
    }

    pub fn rank(&self) -> usize {
        self.echelon.rank()
    }

    pub fn echelon(&self) -> &Echelon {
        &self.echelon
    }

    /// Orbit vectors reduced so far.
    pub fn attempts(&self) -> usize {
        self.attempts
    }

    fn saturated(&self) -> bool {
        self.echelon.is_full() || self.cap.is_some_and(|c| self.rank() >= c)
    }

    pub fn contains(&self, v: &[(usize, u32)]) -> bool {
        self.echelon.contains(&self.echelon.densify(v))
    }

    pub fn contains_poly(&self, p: &Poly) -> bool {
        self.contains(&residues(self.field(), p))
    }

    fn apply(&self, g: usize, v: &[(usize, u32)]) -> SparseVec {
        let p = self.field().p();
        let map = &self.maps[g];
        let mut out: SparseVec = v
            .iter()
            .map(|&(m, x)| {
                let (m2, neg) = map[m];
                (m2 as usize, if neg { p - x } else { x })
            })
            .collect();
        out.sort_unstable();
        out
    }

    /// Add the submodule generated by `v`; returns the rank gained.
    pub fn add_module(&mut self, v: &[(usize, u32)]) -> usize {
        let start = self.rank();
        let n = self.space.degree();
        let id: Vec<u8> = (0..n as u8).collect();
        let mut seen: HashSet<Vec<u8>> = HashSet::from([id.clone()]);
        let mut queue: VecDeque<(Vec<u8>, SparseVec)> = VecDeque::from([(id, v.to_vec())]);
        while !queue.is_empty() && !self.saturated() {
            let batch: Vec<(Vec<u8>, SparseVec)> = queue.drain(..queue.len().min(BATCH)).collect();
            let dense: Vec<Vec<u32>> = batch.iter().map(|(_, w)| self.echelon.densify(w)).collect();
            let refs: Vec<&[u32]> = dense.iter().map(|d| d.as_slice()).collect();
            let flags = self.echelon.insert_batch(&refs);
            self.attempts += batch.len();
            for ((perm, w), inserted) in batch.into_iter().zip(flags) {
                if !inserted {
                    continue;
                }
                for g in 0..self.gens.len() {
                    let next: Vec<u8> = perm.iter().map(|&x| self.gens[g][x as usize]).collect();
                    if seen.insert(next.clone()) {
                        let image = self.apply(g, &w);
                        queue.push_back((next, image));
                    }
                }
            }
        }
        self.rank() - start
    }

    pub fn add_poly_module(&mut self, p: &Poly) -> usize {
        let v = residues(self.field(), p);
        self.add_module(&v)
    }

    /// Scan `candidates` in order and add the module of each one not yet contained.
    /// Returns `(candidate index, rank gained)` for every candidate that was used.
    /// Stops when the span is saturated.
    pub fn module_generators(&mut self, candidates: &[SparseVec]) -> Vec<(usize, usize)> {
        let mut used = Vec::new();
        let mut next = 0;
        while next < candidates.len() && !self.saturated() {
            let end = (next + BATCH).min(candidates.len());
            let dense: Vec<Vec<u32>> = candidates[next..end].iter().map(|c| self.echelon.densify(c)).collect();
            let refs: Vec<&[u32]> = dense.iter().map(|d| d.as_slice()).collect();
            let inside = self.echelon.contains_batch(&refs);
            match inside.iter().position(|&x| !x) {
                None => next = end,
                Some(k) => {
                    let idx = next + k;
                    let gained = self.add_module(&candidates[idx]);
                    used.push((idx, gained));
                    next = idx + 1;
                }
            }
        }
        used
    }
}

/// First candidate whose module, added to `baseline`, reaches rank `target` on its own.
pub fn single_generator(baseline: &ModuleSpan, candidates: &[SparseVec], target: usize) -> Option<usize> {
    let remaining = target.saturating_sub(baseline.rank());
    if remaining == 0 {
        return None;
    }
    for (i, c) in candidates.iter().enumerate() {
        if baseline.contains(c) {
            continue;
        }
        let mut span = baseline.clone();
        let gained = span.add_module(c);
        if gained >= remaining {
            return Some(i);
        }
    }
    None
}

/// Number of nonzero entries, then signed coefficients in monomial order.
pub fn identity_order(fp: Fp, a: &[(usize, u32)], b: &[(usize, u32)]) -> Ordering {
    a.len().cmp(&b.len()).then_with(|| {
        let (mut i, mut j) = (0, 0);
        loop {
            let (ca, cb) = (a.get(i).map(|e| e.0), b.get(j).map(|e| e.0));
            let col = match (ca, cb) {
                (None, None) => return Ordering::Equal,
                (Some(x), None) | (None, Some(x)) => x,
                (Some(x), Some(y)) => x.min(y),
            };
            let mut x = 0;
            if ca == Some(col) {
                x = fp.signed(a[i].1);
                i += 1;
            }
            let mut y = 0;
            if cb == Some(col) {
                y = fp.signed(b[j].1);
                j += 1;
            }
            if x != y {
                return x.cmp(&y);
            }
        }
    })
}

/// The canonical nullspace basis of an echelon, sorted by [`identity_order`].
pub fn sorted_nullspace(echelon: &Echelon) -> Vec<SparseVec> {
    let fp = echelon.field();
    let mut v = echelon.nullspace();
    v.sort_by(|a, b| identity_order(fp, a, b));
    v
}

/// Whether `p` lies in the module generated by `generators`.
pub fn span_membership(space: &MonomialSpace, fp: Fp, p: &Poly, generators: &[Poly]) -> bool {
    let mut span = ModuleSpan::new(space, fp);
    for g in generators {
        span.add_poly_module(g);
    }
    span.contains_poly(p)
}
