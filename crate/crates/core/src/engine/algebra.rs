use crate::error::Error;
use crate::exactla::Fp;
use crate::freealg::{MonomialSpace, Node, Tree};
use crate::sl2rep::{weight_index, StructureConstants, WEIGHTS};
use crate::Result;

pub const DIM: usize = 7;

pub type FpVec = [u32; DIM];
pub type IntVec = [i128; DIM];

/// The algebra `V(6)` with `[x,y] = α(x∧y)` and `(x,y,z) = scale · β(x∧y)·z`.
///
/// `bilinear[(p*7+q)*7+r]` is the coefficient of `v_r` in `[v_p, v_q]` and
/// `trilinear[((p*7+q)*7+r)*7+s]` the coefficient of `v_s` in `(v_p, v_q, v_r)`.
#[derive(Clone, Debug)]
pub struct AlgebraStructure {
    pub dim: usize,
    pub bilinear: Vec<i64>,
    pub trilinear: Vec<i64>,
    pub scale: i64,
    bin_terms: Vec<(u8, u8, u8, i64)>,
    ter_terms: Vec<(u8, u8, u8, u8, i64)>,
}

impl AlgebraStructure {
    pub fn new(scale: i64) -> Result<Self> {
        Ok(Self::from_constants(&StructureConstants::build(scale)?))
    }

    pub fn from_constants(sc: &StructureConstants) -> Self {
        let mut bilinear = vec![0i64; DIM * DIM * DIM];
        let mut trilinear = vec![0i64; DIM * DIM * DIM * DIM];
        let mut bin_terms = Vec::new();
        let mut ter_terms = Vec::new();
        for p in 0..DIM {
            for q in 0..DIM {
                let c = sc.bilinear[p][q];
                if c != 0 {
                    let t = weight_index(6, WEIGHTS[p] + WEIGHTS[q]).expect("bilinear product stays in V(6)");
                    bilinear[(p * DIM + q) * DIM + t] = c;
                    bin_terms.push((p as u8, q as u8, t as u8, c));
                }
                for r in 0..DIM {
                    let c = sc.trilinear[p][q][r];
                    if c != 0 {
                        let t = weight_index(6, WEIGHTS[p] + WEIGHTS[q] + WEIGHTS[r])
                            .expect("trilinear product stays in V(6)");
                        trilinear[((p * DIM + q) * DIM + r) * DIM + t] = c;
                        ter_terms.push((p as u8, q as u8, r as u8, t as u8, c));
                    }
                }
            }
        }
        AlgebraStructure { dim: DIM, bilinear, trilinear, scale: sc.scale, bin_terms, ter_terms }
    }

    pub fn bracket(&self, a: &IntVec, b: &IntVec) -> Result<IntVec> {
        let mut out = [0i128; DIM];
        for &(p, q, t, c) in &self.bin_terms {
            let (x, y) = (a[p as usize], b[q as usize]);
            if x == 0 || y == 0 {
                continue;
            }
            let v = x.checked_mul(y).and_then(|v| v.checked_mul(c as i128)).ok_or_else(overflow)?;
            out[t as usize] = out[t as usize].checked_add(v).ok_or_else(overflow)?;
        }
        Ok(out)
    }

    pub fn triple(&self, a: &IntVec, b: &IntVec, z: &IntVec) -> Result<IntVec> {
        let mut out = [0i128; DIM];
        for &(p, q, r, t, c) in &self.ter_terms {
            let (x, y, w) = (a[p as usize], b[q as usize], z[r as usize]);
            if x == 0 || y == 0 || w == 0 {
                continue;
            }
            let v = x
                .checked_mul(y)
                .and_then(|v| v.checked_mul(w))
                .and_then(|v| v.checked_mul(c as i128))
                .ok_or_else(overflow)?;
            out[t as usize] = out[t as usize].checked_add(v).ok_or_else(overflow)?;
        }
        Ok(out)
    }
}

fn overflow() -> Error {
    Error::Overflow("integer evaluation exceeded 128 bits".into())
}

/// Evaluate a monomial on integer argument vectors (variable `i` ↦ `args[i]`).
pub fn eval_monomial(t: &Tree, args: &[IntVec], alg: &AlgebraStructure) -> Result<IntVec> {
    match t {
        Tree::Leaf(v) => args
            .get(*v as usize)
            .copied()
            .ok_or_else(|| Error::Argument(format!("no argument for variable {v}"))),
        Tree::Bin(a, b) => alg.bracket(&eval_monomial(a, args, alg)?, &eval_monomial(b, args, alg)?),
        Tree::Ter(a, b, c) => alg.triple(
            &eval_monomial(a, args, alg)?,
            &eval_monomial(b, args, alg)?,
            &eval_monomial(c, args, alg)?,
        ),
    }
}

/// Evaluates every monomial of a space at once, over `F_p` or the integers.
pub struct Evaluator<'a> {
    space: &'a MonomialSpace,
    alg: &'a AlgebraStructure,
}

impl<'a> Evaluator<'a> {
    pub fn new(space: &'a MonomialSpace, alg: &'a AlgebraStructure) -> Self {
        Evaluator { space, alg }
    }

    /// `out[c][m]` = coordinate `c` of monomial `m` at `args`, over `F_p`.
    pub fn eval_fp(&self, fp: Fp, args: &[FpVec], out: &mut [Vec<u32>]) {
        let p = fp.p() as u64;
        let bin: Vec<(usize, usize, usize, u64)> =
            self.alg.bin_terms.iter().map(|&(a, b, t, c)| (a as usize, b as usize, t as usize, fp.from_i64(c) as u64)).collect();
        let ter: Vec<(usize, usize, usize, usize, u64)> = self
            .alg
            .ter_terms
            .iter()
            .map(|&(a, b, r, t, c)| (a as usize, b as usize, r as usize, t as usize, fp.from_i64(c) as u64))
            .collect();
        let mut vals = [[0u32; DIM]; 16];
        for ty in self.space.types() {
            for m in ty.offset..ty.offset + ty.count {
                let word = self.space.word(m);
                for (k, node) in ty.nodes.iter().enumerate() {
                    vals[k] = match *node {
                        Node::Leaf(pos) => args[word[pos as usize] as usize],
                        Node::Bin(x, y) => {
                            let (a, b) = (&vals[x as usize], &vals[y as usize]);
                            let mut acc = [0u64; DIM];
                            for &(i, j, t, c) in &bin {
                                acc[t] += (a[i] as u64 * b[j] as u64) % p * c;
                            }
                            acc.map(|x| (x % p) as u32)
                        }
                        Node::Ter(x, y, z) => {
                            let (a, b, w) = (&vals[x as usize], &vals[y as usize], &vals[z as usize]);
                            let mut acc = [0u64; DIM];
                            for &(i, j, r, t, c) in &ter {
                                acc[t] += (a[i] as u64 * b[j] as u64) % p * (w[r] as u64 * c % p);
                            }
                            acc.map(|x| (x % p) as u32)
                        }
                    };
                }
                let root = &vals[ty.nodes.len() - 1];
                for c in 0..DIM {
                    out[c][m] = root[c];
                }
            }
        }
    }

    /// Integer values of every monomial at `args`, with overflow reported as an error.
    pub fn eval_int(&self, args: &[IntVec]) -> Result<Vec<IntVec>> {
        let mut out = vec![[0i128; DIM]; self.space.len()];
        let mut vals = [[0i128; DIM]; 16];
        for ty in self.space.types() {
            for m in ty.offset..ty.offset + ty.count {
                let word = self.space.word(m);
                for (k, node) in ty.nodes.iter().enumerate() {
                    vals[k] = match *node {
                        Node::Leaf(pos) => args[word[pos as usize] as usize],
                        Node::Bin(x, y) => self.alg.bracket(&vals[x as usize], &vals[y as usize])?,
                        Node::Ter(x, y, z) => self.alg.triple(&vals[x as usize], &vals[y as usize], &vals[z as usize])?,
                    };
                }
                out[m] = vals[ty.nodes.len() - 1];
            }
        }
        Ok(out)
    }
}
