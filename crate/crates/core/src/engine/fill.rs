use super::algebra::{AlgebraStructure, Evaluator, FpVec, IntVec, DIM};
use crate::error::Error;
use crate::exactla::{Echelon, Fp, RationalEchelon, BATCH};
use crate::freealg::MonomialSpace;
use crate::rng::SeededRng;
use crate::Result;
use num_bigint::BigInt;

/// Iterations evaluated and inserted together; `DIM * FILL_BLOCK` rows fit one batch.
const FILL_BLOCK: usize = BATCH / DIM;

/// Outcome of fill-and-reduce over `F_p`.
#[derive(Clone, Debug)]
pub struct FillResult {
    pub echelon: Echelon,
    pub iterations: usize,
    /// Rank after each iteration.
    pub history: Vec<usize>,
}

impl FillResult {
    pub fn rank(&self) -> usize {
        self.echelon.rank()
    }

    pub fn nullity(&self) -> usize {
        self.echelon.nullity()
    }
}

/// Random evaluation of every monomial at vectors with uniform `F_p` components,
/// `DIM` rows per iteration, until the rank has not grown for `stall` consecutive
/// iterations (or the matrix reaches full rank).
///
/// Iterations are processed in blocks, but a block never extends past the point
/// where the stall could end, so the result equals one-iteration-at-a-time filling.
pub fn fill_and_reduce(space: &MonomialSpace, alg: &AlgebraStructure, fp: Fp, seed: u64, stall: usize) -> FillResult {
    let n = space.len();
    let d = space.degree();
    let ev = Evaluator::new(space, alg);
    let mut rng = SeededRng::new(seed);
    let mut echelon = Echelon::new(fp, n);
    let mut history = Vec::new();
    let mut since_increase = 0;
    let mut block_rows = vec![vec![0u32; n]; DIM * FILL_BLOCK];
    while since_increase < stall.max(1) && !echelon.is_full() {
        let block = FILL_BLOCK.min(stall.max(1) - since_increase);
        for it in 0..block {
            let args: Vec<FpVec> = (0..d).map(|_| std::array::from_fn(|_| rng.residue(fp.p()))).collect();
            ev.eval_fp(fp, &args, &mut block_rows[it * DIM..(it + 1) * DIM]);
        }
        let refs: Vec<&[u32]> = block_rows[..block * DIM].iter().map(|r| r.as_slice()).collect();
        let flags = echelon.insert_batch(&refs);
        let mut rank = history.last().copied().unwrap_or(0);
        for it in 0..block {
            let gained = flags[it * DIM..(it + 1) * DIM].iter().filter(|&&f| f).count();
            rank += gained;
            history.push(rank);
            if gained > 0 {
                since_increase = 0;
            } else {
                since_increase += 1;
            }
        }
        debug_assert_eq!(rank, echelon.rank());
    }
    FillResult { iterations: history.len(), echelon, history }
}

/// Integer evaluation rows from random arguments with components in `[-bound, bound]`.
#[derive(Clone, Debug)]
pub struct IntegerFill {
    /// Every sampled row.
    pub rows: Vec<Vec<i128>>,
    /// Indices of rows independent modulo a large prime (hence over the rationals).
    pub independent: Vec<usize>,
    pub iterations: usize,
}

/// Fill with integer arguments until the rank modulo `Fp::MAX_PRIME` has not grown
/// for `stall` iterations.
pub fn integer_fill(
    space: &MonomialSpace,
    alg: &AlgebraStructure,
    seed: u64,
    stall: usize,
    bound: i64,
) -> Result<IntegerFill> {
    let n = space.len();
    let d = space.degree();
    let ev = Evaluator::new(space, alg);
    let fp = Fp::new(Fp::MAX_PRIME)?;
    let mut rng = SeededRng::new(seed);
    let mut ech = Echelon::new(fp, n);
    let mut fill = IntegerFill { rows: Vec::new(), independent: Vec::new(), iterations: 0 };
    let mut since = 0;
    while since < stall.max(1) && !ech.is_full() {
        fill.iterations += 1;
        let args: Vec<IntVec> = (0..d).map(|_| std::array::from_fn(|_| rng.small_int(bound) as i128)).collect();
        let vals = ev.eval_int(&args)?;
        let rows: Vec<Vec<i128>> = (0..DIM).map(|c| vals.iter().map(|v| v[c]).collect()).collect();
        let reduced: Vec<Vec<u32>> = rows.iter().map(|r| r.iter().map(|&x| fp.from_i128(x)).collect()).collect();
        let refs: Vec<&[u32]> = reduced.iter().map(|r| r.as_slice()).collect();
        let flags = ech.insert_batch(&refs);
        let grew = flags.contains(&true);
        for (row, new) in rows.into_iter().zip(flags) {
            if new {
                fill.independent.push(fill.rows.len());
            }
            fill.rows.push(row);
        }
        since = if grew { 0 } else { since + 1 };
    }
    Ok(fill)
}

/// Exact rank over the rationals of the integer evaluation matrix, filling with
/// fraction-free elimination until the rank has not grown for `stall` iterations.
pub fn rational_rank(space: &MonomialSpace, alg: &AlgebraStructure, seed: u64, stall: usize, bound: i64) -> Result<usize> {
    check_rational_size(space)?;
    let ev = Evaluator::new(space, alg);
    let mut rng = SeededRng::new(seed);
    let mut ech = RationalEchelon::new(space.len());
    let mut since = 0;
    while since < stall.max(1) && ech.rank() < space.len() {
        let args: Vec<IntVec> =
            (0..space.degree()).map(|_| std::array::from_fn(|_| rng.small_int(bound) as i128)).collect();
        let vals = ev.eval_int(&args)?;
        let before = ech.rank();
        for c in 0..DIM {
            let row: Vec<BigInt> = vals.iter().map(|v| BigInt::from(v[c])).collect();
            ech.insert(row);
        }
        since = if ech.rank() > before { 0 } else { since + 1 };
    }
    Ok(ech.rank())
}

/// Largest space handled by the rational and lattice routines.
pub const RATIONAL_LIMIT: usize = 510;

pub(crate) fn check_rational_size(space: &MonomialSpace) -> Result<()> {
    if space.len() > RATIONAL_LIMIT {
        return Err(Error::TooLarge { cols: space.len(), limit: RATIONAL_LIMIT });
    }
    Ok(())
}
