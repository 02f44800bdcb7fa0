use crate::error::arg;
use crate::Result;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

/// Reduction parameter `δ = num/den` with `1/4 < δ < 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Delta {
    pub num: i64,
    pub den: i64,
}

impl Default for Delta {
    fn default() -> Self {
        Delta { num: 3, den: 4 }
    }
}

fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).fold(BigInt::zero(), |s, (x, y)| if x.is_zero() || y.is_zero() { s } else { s + x * y })
}

pub fn square_norm(v: &[BigInt]) -> BigInt {
    dot(v, v)
}

fn redi(b: &mut [Vec<BigInt>], lam: &mut [Vec<BigInt>], d: &[BigInt], k: usize, l: usize) {
    let two: BigInt = &lam[k][l] * 2u32;
    if two.abs() > d[l + 1] {
        // nearest integer to lam/d
        let q = (&two + &d[l + 1]).div_floor(&(&d[l + 1] * 2u32));
        let bl = b[l].clone();
        for (x, y) in b[k].iter_mut().zip(&bl) {
            if !y.is_zero() {
                *x -= &q * y;
            }
        }
        lam[k][l] -= &q * &d[l + 1];
        for i in 0..l {
            let t = &q * &lam[l][i];
            lam[k][i] -= t;
        }
    }
}

/// LLL reduction, returned sorted by squared norm (ties broken lexicographically).
pub fn lll_reduce(basis: &[Vec<BigInt>], delta: Delta) -> Result<Vec<Vec<BigInt>>> {
    let b = lll_ordered(basis, delta)?;
    let mut keyed: Vec<(BigInt, Vec<BigInt>)> = b.into_iter().map(|v| (square_norm(&v), v)).collect();
    keyed.sort();
    Ok(keyed.into_iter().map(|(_, v)| v).collect())
}

/// LLL reduction with exact integral Gram–Schmidt data: `d[i]` are the leading Gram
/// determinants and `lam[k][j] = d[j+1] μ[k][j]`, so no rationals are ever stored.
/// The result is in reduction order.
fn lll_ordered(basis: &[Vec<BigInt>], delta: Delta) -> Result<Vec<Vec<BigInt>>> {
    if !(4 * delta.num > delta.den && delta.num < delta.den && delta.den > 0) {
        return arg(format!("LLL parameter {}/{} outside (1/4, 1)", delta.num, delta.den));
    }
    let n = basis.len();
    if n == 0 {
        return Ok(Vec::new());
    }
    let dim = basis[0].len();
    if basis.iter().any(|b| b.len() != dim) {
        return arg("LLL basis vectors of different lengths");
    }
    let (a, bq) = (BigInt::from(delta.num), BigInt::from(delta.den));
    let mut b: Vec<Vec<BigInt>> = basis.to_vec();
    // d[0] = 1, d[i+1] for basis index i
    let mut d: Vec<BigInt> = vec![BigInt::zero(); n + 1];
    d[0] = BigInt::from(1);
    let mut lam: Vec<Vec<BigInt>> = vec![vec![BigInt::zero(); n]; n];
    d[1] = square_norm(&b[0]);
    if d[1].is_zero() {
        return arg("LLL input is linearly dependent");
    }
    let mut k = 1usize;
    let mut kmax = 0usize;

    while k < n {
        if k > kmax {
            kmax = k;
            for j in 0..=k {
                let mut u = dot(&b[k], &b[j]);
                for i in 0..j {
                    u = (&d[i + 1] * &u - &lam[k][i] * &lam[j][i]) / &d[i];
                }
                if j < k {
                    lam[k][j] = u;
                } else {
                    if u.is_zero() {
                        return arg("LLL input is linearly dependent");
                    }
                    d[k + 1] = u;
                }
            }
        }
        redi(&mut b, &mut lam, &d, k, k - 1);
        // Lovász: den·d_k·d_{k-2} < num·d_{k-1}² − den·λ²  ⇒ swap
        let lhs = &bq * &d[k + 1] * &d[k - 1];
        let rhs = &a * &d[k] * &d[k] - &bq * &lam[k][k - 1] * &lam[k][k - 1];
        if lhs < rhs {
            b.swap(k, k - 1);
            for j in 0..k - 1 {
                let t = lam[k][j].clone();
                lam[k][j] = lam[k - 1][j].clone();
                lam[k - 1][j] = t;
            }
            let l = lam[k][k - 1].clone();
            let nb = (&d[k - 1] * &d[k + 1] + &l * &l) / &d[k];
            for i in k + 1..=kmax {
                let t = lam[i][k].clone();
                lam[i][k] = (&d[k + 1] * &lam[i][k - 1] - &l * &t) / &d[k];
                lam[i][k - 1] = (&nb * &t + &l * &lam[i][k]) / &d[k + 1];
            }
            d[k] = nb;
            if k > 1 {
                k -= 1;
            }
        } else {
            for l in (0..k - 1).rev() {
                redi(&mut b, &mut lam, &d, k, l);
            }
            k += 1;
        }
    }
    Ok(b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::int::same_lattice;
    use crate::rng::SeededRng;
    use num_rational::BigRational;
    use num_traits::One;

    fn big(rows: &[Vec<i64>]) -> Vec<Vec<BigInt>> {
        rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
    }

    // exact rational Gram–Schmidt coefficients of a basis
    fn gram_schmidt(b: &[Vec<BigInt>]) -> (Vec<Vec<BigRational>>, Vec<BigRational>) {
        let n = b.len();
        let q = |x: &BigInt| BigRational::from_integer(x.clone());
        let mut star: Vec<Vec<BigRational>> = Vec::new();
        let mut norms = Vec::new();
        let mut mu = vec![vec![BigRational::zero(); n]; n];
        for i in 0..n {
            let mut v: Vec<BigRational> = b[i].iter().map(q).collect();
            for j in 0..i {
                let num = b[i].iter().zip(&star[j]).fold(BigRational::zero(), |s, (x, y)| s + q(x) * y);
                mu[i][j] = num / &norms[j];
                for (x, y) in v.iter_mut().zip(&star[j]) {
                    *x -= &mu[i][j] * y;
                }
            }
            norms.push(v.iter().fold(BigRational::zero(), |s, x| s + x * x));
            star.push(v);
        }
        (mu, norms)
    }

    fn check_reduced(b: &[Vec<BigInt>], delta: Delta) {
        let (mu, norms) = gram_schmidt(b);
        let half = BigRational::new(BigInt::one(), BigInt::from(2));
        let dl = BigRational::new(BigInt::from(delta.num), BigInt::from(delta.den));
        for i in 0..b.len() {
            for j in 0..i {
                assert!(mu[i][j].abs() <= half, "size reduction fails at ({i},{j})");
            }
            if i > 0 {
                let m = &mu[i][i - 1];
                assert!((&dl - m * m) * &norms[i - 1] <= norms[i], "Lovász fails at {i}");
            }
        }
    }

    #[test]
    fn two_dimensional_example() {
        let out = lll_reduce(&big(&[vec![1, 0], vec![4, 1]]), Delta::default()).unwrap();
        let mut abs: Vec<Vec<BigInt>> = out.iter().map(|v| v.iter().map(|x| x.abs()).collect()).collect();
        abs.sort();
        assert_eq!(abs, big(&[vec![0, 1], vec![1, 0]]));
    }

    #[test]
    fn orthogonal_basis_unchanged() {
        let b = big(&[vec![0, 3, 0], vec![2, 0, 0], vec![0, 0, 5]]);
        let out = lll_reduce(&b, Delta::default()).unwrap();
        assert_eq!(out, big(&[vec![2, 0, 0], vec![0, 3, 0], vec![0, 0, 5]]));
    }

    #[test]
    fn dependent_input_rejected() {
        assert!(lll_reduce(&big(&[vec![1, 2], vec![2, 4]]), Delta::default()).is_err());
        assert!(lll_reduce(&big(&[vec![1, 2]]), Delta { num: 1, den: 4 }).is_err());
    }

    // brute force: the shortest nonzero vector of a small 2D lattice found in a box
    #[test]
    fn finds_shortest_in_plane() {
        let mut rng = SeededRng::new(5);
        for _ in 0..30 {
            let (a, b, c, d) = (rng.small_int(30), rng.small_int(30), rng.small_int(30), rng.small_int(30));
            if a * d - b * c == 0 {
                continue;
            }
            let basis = big(&[vec![a, b], vec![c, d]]);
            let out = lll_reduce(&basis, Delta { num: 99, den: 100 }).unwrap();
            assert!(same_lattice(&basis, &out));
            let mut best: Option<i64> = None;
            for x in -40i64..=40 {
                for y in -40i64..=40 {
                    if x == 0 && y == 0 {
                        continue;
                    }
                    let (u, v) = (x * a + y * c, x * b + y * d);
                    let n = u * u + v * v;
                    best = Some(best.map_or(n, |m| m.min(n)));
                }
            }
            // in dimension 2, LLL with δ close to 1 returns a shortest vector
            assert_eq!(square_norm(&out[0]), BigInt::from(best.unwrap()));
        }
    }

    #[test]
    fn lll_conditions_and_lattice_equality() {
        let mut rng = SeededRng::new(9);
        for t in 0..15 {
            let n = 2 + t % 5;
            let dim = n + t % 3;
            let basis: Vec<Vec<BigInt>> = loop {
                let cand: Vec<Vec<i64>> = (0..n).map(|_| (0..dim).map(|_| rng.small_int(50)).collect()).collect();
                let b = big(&cand);
                let (_, norms) = gram_schmidt(&b);
                if norms.iter().all(|x| !x.is_zero()) {
                    break b;
                }
            };
            let out = lll_reduce(&basis, Delta::default()).unwrap();
            assert_eq!(out.len(), n);
            assert!(same_lattice(&basis, &out));
            assert!(out.windows(2).all(|w| square_norm(&w[0]) <= square_norm(&w[1])));
            check_reduced(&lll_ordered(&basis, Delta::default()).unwrap(), Delta::default());
            check_reduced(&lll_ordered(&basis, Delta { num: 99, den: 100 }).unwrap(), Delta { num: 99, den: 100 });
        }
    }
}
