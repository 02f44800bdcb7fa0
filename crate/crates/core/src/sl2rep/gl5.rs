//! The 5×5 matrix model: `sl(2)` acts on `gl(5)` by commutators, `gl(5)` splits as
//! `V(0) ⊕ V(2) ⊕ V(4) ⊕ V(6) ⊕ V(8)`, and commutators of two matrices in the `V(6)`
//! summand project onto `V(6)` and `V(2)` proportionally to α and β.

use super::{invert, projection_tables, q, MorphismTable, Q, WEIGHTS};
use crate::error::Error;
use crate::Result;
use num_traits::{One, Zero};
use serde::Serialize;
use std::collections::BTreeMap;

const N: usize = 5;

type Mat = Vec<Q>;

fn zero() -> Mat {
    vec![Q::zero(); N * N]
}

fn mul(a: &Mat, b: &Mat) -> Mat {
    let mut c = zero();
    for i in 0..N {
        for k in 0..N {
            if a[i * N + k].is_zero() {
                continue;
            }
            for j in 0..N {
                c[i * N + j] += &a[i * N + k] * &b[k * N + j];
            }
        }
    }
    c
}

fn bracket(a: &Mat, b: &Mat) -> Mat {
    let ab = mul(a, b);
    let ba = mul(b, a);
    ab.into_iter().zip(ba).map(|(x, y)| x - y).collect()
}

/// Images of `H, E, F` in `gl(5)`.
pub(crate) fn hef() -> (Mat, Mat, Mat) {
    let (mut h, mut e, mut f) = (zero(), zero(), zero());
    for i in 0..N {
        h[i * N + i] = q(4 - 2 * i as i64);
        if i + 1 < N {
            e[i * N + i + 1] = q(i as i64 + 1);
            f[(i + 1) * N + i] = q(4 - i as i64);
        }
    }
    (h, e, f)
}

/// Weight basis of each summand `V(2k)`: `(ad F)^j (E^k / k!) / j!`.
pub(crate) fn summand_bases() -> Vec<Vec<Mat>> {
    let (_, e, f) = hef();
    let mut power = zero();
    for i in 0..N {
        power[i * N + i] = Q::one();
    }
    let mut out = Vec::new();
    for k in 0..N {
        if k > 0 {
            power = mul(&power, &e).into_iter().map(|x| x / q(k as i64)).collect();
        }
        let mut string = vec![power.clone()];
        for j in 1..=2 * k {
            let next = bracket(&f, string.last().unwrap()).into_iter().map(|x| x / q(j as i64)).collect();
            string.push(next);
        }
        out.push(string);
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Gl5Report {
    /// Projected commutators onto `V(6)` equal `lambda_alpha · α`.
    pub lambda_alpha: String,
    /// Projected commutators onto `V(2)` equal `lambda_beta · β`.
    pub lambda_beta: String,
    /// Highest weights of the summands of `Λ²V(4)`.
    pub ext_square_v4: Vec<usize>,
}

/// Decomposition of `Λ²V(n)` by peeling highest weights off its character.
pub fn ext_square_decomposition(n: usize) -> Vec<usize> {
    let mut mult: BTreeMap<i64, i64> = BTreeMap::new();
    for a in 0..=n {
        for b in a + 1..=n {
            *mult.entry(2 * n as i64 - 2 * (a + b) as i64).or_default() += 1;
        }
    }
    let mut out = Vec::new();
    while let Some((&top, _)) = mult.iter().rev().find(|(_, &m)| m > 0) {
        out.push(top as usize);
        let mut w = top;
        while w >= -top {
            *mult.get_mut(&w).expect("character is symmetric") -= 1;
            w -= 2;
        }
    }
    out
}

fn uniform_ratio(projected: &[Vec<Q>], table: &MorphismTable, name: &str) -> Result<Q> {
    let mut lambda: Option<Q> = None;
    for p in 0..7 {
        for r in 0..7 {
            let x = &projected[p][r];
            let t = table.entries[p][r];
            if t == 0 {
                if !x.is_zero() {
                    return Err(Error::CrossCheck(format!("{name}: nonzero projection where the table is zero at ({p},{r})")));
                }
                continue;
            }
            let ratio = x / q(t);
            match &lambda {
                None => lambda = Some(ratio),
                Some(l) if *l != ratio => {
                    return Err(Error::CrossCheck(format!("{name}: ratio {ratio} at ({p},{r}) differs from {l}")));
                }
                _ => {}
            }
        }
    }
    match lambda {
        Some(l) if !l.is_zero() => Ok(l),
        _ => Err(Error::CrossCheck(format!("{name}: projection vanishes identically"))),
    }
}

/// Recompute α and β from commutators in `gl(5)` and check they agree with the tables
/// up to uniform nonzero scalars.
pub fn gl5_crosscheck() -> Result<Gl5Report> {
    let bases = summand_bases();
    // ambient coordinates: column c is the c-th summand basis matrix, summands in order V(0)..V(8)
    let cols: Vec<&Mat> = bases.iter().flatten().collect();
    let m: Vec<Vec<Q>> = (0..N * N).map(|r| cols.iter().map(|c| c[r].clone()).collect()).collect();
    let inv = invert(&m).ok_or_else(|| Error::CrossCheck("summand bases do not span gl(5)".into()))?;
    let offsets: Vec<usize> = bases.iter().scan(0, |acc, b| {
        let o = *acc;
        *acc += b.len();
        Some(o)
    }).collect();

    let v6 = &bases[3];
    let mut alpha_proj = vec![vec![Q::zero(); 7]; 7];
    let mut beta_proj = vec![vec![Q::zero(); 7]; 7];
    for p in 0..7 {
        for r in 0..7 {
            let c = bracket(&v6[p], &v6[r]);
            let coords: Vec<Q> =
                inv.iter().map(|row| row.iter().zip(&c).map(|(a, b)| a * b).fold(Q::zero(), |s, x| s + x)).collect();
            let w = WEIGHTS[p] + WEIGHTS[r];
            for (k, &o) in offsets.iter().enumerate() {
                let top = 2 * k as i64;
                for j in 0..=2 * k {
                    let x = &coords[o + j];
                    if x.is_zero() {
                        continue;
                    }
                    let wt = top - 2 * j as i64;
                    if wt != w {
                        return Err(Error::CrossCheck(format!("commutator ({p},{r}) leaves its weight space")));
                    }
                    match k {
                        3 => alpha_proj[p][r] = x.clone(),
                        1 => beta_proj[p][r] = x.clone(),
                        _ => {
                            return Err(Error::CrossCheck(format!(
                                "commutator ({p},{r}) has a component in V({top})"
                            )))
                        }
                    }
                }
            }
        }
    }
    let (alpha, beta) = projection_tables();
    let la = uniform_ratio(&alpha_proj, &alpha, "alpha")?;
    let lb = uniform_ratio(&beta_proj, &beta, "beta")?;
    Ok(Gl5Report { lambda_alpha: la.to_string(), lambda_beta: lb.to_string(), ext_square_v4: ext_square_decomposition(4) })
}
