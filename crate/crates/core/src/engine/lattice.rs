use super::algebra::AlgebraStructure;
use super::fill::{check_rational_size, integer_fill};
use crate::exactla::{hnf_with_transform, lll_reduce, row_hnf, Delta, IntMatrix};
use crate::freealg::MonomialSpace;
use crate::Result;
use num_bigint::BigInt;
use num_traits::Zero;

/// A reduced basis of the integer identities of `space`: the integer kernel of the
/// evaluation matrix, taken from the transform of a Hermite form, then LLL-reduced.
/// Vectors come sorted by square norm, then lexicographically.
///
/// Rows are selected by their rank modulo a large prime. The basis is then checked
/// exactly against every sampled row; a row it fails on is independent over the
/// rationals and joins the selection.
pub fn shortest_identities(
    space: &MonomialSpace,
    alg: &AlgebraStructure,
    seed: u64,
    stall: usize,
    delta: Delta,
) -> Result<Vec<Vec<BigInt>>> {
    check_rational_size(space)?;
    let fill = integer_fill(space, alg, seed, stall, 9)?;
    let n = space.len();
    let mut chosen = fill.independent.clone();
    loop {
        let basis = integer_kernel(n, &chosen.iter().map(|&i| fill.rows[i].clone()).collect::<Vec<_>>(), delta)?;
        let bad = fill.rows.iter().position(|r| basis.iter().any(|v| !dot(v, r).is_zero()));
        match bad {
            None => return Ok(basis),
            Some(i) => chosen.push(i),
        }
    }
}

fn dot(v: &[BigInt], r: &[i128]) -> BigInt {
    v.iter().zip(r).filter(|(a, &b)| b != 0 && !a.is_zero()).map(|(a, &b)| a * BigInt::from(b)).sum()
}

fn integer_kernel(n: usize, rows: &[Vec<i128>], delta: Delta) -> Result<Vec<Vec<BigInt>>> {
    if rows.is_empty() {
        return Ok(IntMatrix::identity(n).to_rows());
    }
    // u · Mᵀ = h, so the rows of u past the rank span the integer kernel of M
    let rows: Vec<Vec<BigInt>> = rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
    let mt = IntMatrix::from_rows(n, &rows)?.transpose();
    let (_, u, rank) = hnf_with_transform(&mt);
    let kernel: Vec<Vec<BigInt>> = (rank..n).map(|i| u.row(i).to_vec()).collect();
    if kernel.is_empty() {
        return Ok(kernel);
    }
    lll_reduce(&row_hnf(&kernel), delta)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freealg::OpSet;

    #[test]
    fn kernel_vectors_vanish_on_fresh_evaluations() {
        let space = MonomialSpace::new(4, OpSet::Binary).unwrap();
        let alg = AlgebraStructure::new(1).unwrap();
        let basis = shortest_identities(&space, &alg, 5, 20, Delta::default()).unwrap();
        assert_eq!(basis.len(), 5);
        let other = integer_fill(&space, &alg, 99, 20, 9).unwrap();
        for v in &basis {
            for r in &other.rows {
                assert!(dot(v, r).is_zero());
            }
        }
    }
}
