//! The sl(2)-module `V(6)`, the decomposition `Λ²V(6) ≅ V(10) ⊕ V(6) ⊕ V(2)`, and the
//! equivariant projections `α: Λ²V(6) → V(6)` and `β: Λ²V(6) → V(2)` that define the
//! bilinear and trilinear products.
//!
//! Weights are stored in descending order, so array index `i` of `V(n)` is the weight
//! `n - 2i`. Everything here is exact over the rationals.

mod gl5;

pub use gl5::{ext_square_decomposition, gl5_crosscheck, Gl5Report};

use crate::error::arg;
use crate::Result;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

pub type Q = BigRational;

pub(crate) fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

/// Weights of `V(6)` in table order.
pub const WEIGHTS: [i64; 7] = [6, 4, 2, 0, -2, -4, -6];

/// Array index of weight `w` in `V(n)`, if it is a weight of `V(n)`.
pub fn weight_index(n: usize, w: i64) -> Option<usize> {
    let n = n as i64;
    if w.abs() > n || (n - w) % 2 != 0 {
        None
    } else {
        Some(((n - w) / 2) as usize)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Gen {
    H,
    E,
    F,
}

/// Element of the irreducible module `V(n)` in the basis `v_n, v_{n-2}, ..., v_{-n}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IrrepElement {
    pub n: usize,
    pub coeffs: Vec<Q>,
}

impl IrrepElement {
    pub fn zero(n: usize) -> Self {
        IrrepElement { n, coeffs: vec![Q::zero(); n + 1] }
    }

    /// The basis vector at array index `i` (weight `n - 2i`).
    pub fn basis(n: usize, i: usize) -> Self {
        let mut x = Self::zero(n);
        x.coeffs[i] = Q::one();
        x
    }
}

/// `g · x` in `V(n)`:
/// `H v_{n-2i} = (n-2i) v_{n-2i}`, `E v_{n-2i} = (n-i+1) v_{n-2i+2}`,
/// `F v_{n-2i} = (i+1) v_{n-2i-2}`.
pub fn irrep_action(n: usize, g: Gen, x: &IrrepElement) -> Result<IrrepElement> {
    if x.n != n || x.coeffs.len() != n + 1 {
        return arg(format!("element of V({}) acted on as V({n})", x.n));
    }
    let mut out = IrrepElement::zero(n);
    for (i, c) in x.coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let i64_ = i as i64;
        let n64 = n as i64;
        match g {
            Gen::H => out.coeffs[i] += c * q(n64 - 2 * i64_),
            Gen::E => {
                if i > 0 {
                    out.coeffs[i - 1] += c * q(n64 - i64_ + 1);
                }
            }
            Gen::F => {
                if i < n {
                    out.coeffs[i + 1] += c * q(i64_ + 1);
                }
            }
        }
    }
    Ok(out)
}

/// Single-term action on a basis vector: `g · v_(index i)` as (target index, coefficient).
pub(crate) fn basis_action(n: usize, g: Gen, i: usize) -> Option<(usize, i64)> {
    let (n, i) = (n as i64, i as i64);
    match g {
        Gen::H => (n - 2 * i != 0).then_some((i as usize, n - 2 * i)),
        Gen::E => (i > 0).then(|| ((i - 1) as usize, n - i + 1)),
        Gen::F => (i < n).then(|| ((i + 1) as usize, i + 1)),
    }
}

/// Position of `v_a ∧ v_b` (array indices `a < b`) in the tensor basis of `Λ²V(n)`,
/// ordered by `a` then `b`.
pub fn pair_index(n: usize, a: usize, b: usize) -> usize {
    debug_assert!(a < b && b <= n);
    let dim = n + 1;
    a * dim - a * (a + 1) / 2 + (b - a - 1)
}

/// Element of `Λ²V(n)` in the tensor basis `v_i ∧ v_j`, `i > j` as weights.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtSquareElement {
    pub n: usize,
    pub coeffs: Vec<Q>,
}

impl ExtSquareElement {
    pub fn zero(n: usize) -> Self {
        ExtSquareElement { n, coeffs: vec![Q::zero(); n * (n + 1) / 2] }
    }

    /// `v_(a) ∧ v_(b)` by array index, reordered with a sign if needed.
    pub fn wedge(n: usize, a: usize, b: usize) -> Self {
        let mut x = Self::zero(n);
        x.add_wedge(a, b, &Q::one());
        x
    }

    fn add_wedge(&mut self, a: usize, b: usize, c: &Q) {
        if a == b {
            return;
        }
        if a < b {
            self.coeffs[pair_index(self.n, a, b)] += c;
        } else {
            self.coeffs[pair_index(self.n, b, a)] -= c;
        }
    }

    /// Iterate over `(a, b, coefficient)` with `a < b`.
    pub fn terms(&self) -> impl Iterator<Item = (usize, usize, &Q)> + '_ {
        let n = self.n;
        (0..=n)
            .flat_map(move |a| (a + 1..=n).map(move |b| (a, b)))
            .zip(self.coeffs.iter())
            .filter(|(_, c)| !c.is_zero())
            .map(|((a, b), c)| (a, b, c))
    }
}

/// `g · x` by the derivation rule `g(x ∧ y) = gx ∧ y + x ∧ gy`.
pub fn wedge_action(g: Gen, x: &ExtSquareElement) -> ExtSquareElement {
    let n = x.n;
    let mut out = ExtSquareElement::zero(n);
    for (a, b, c) in x.terms() {
        if let Some((a2, k)) = basis_action(n, g, a) {
            out.add_wedge(a2, b, &(c * q(k)));
        }
        if let Some((b2, k)) = basis_action(n, g, b) {
            out.add_wedge(a, b2, &(c * q(k)));
        }
    }
    out
}

/// Kernel of a rational matrix (rows × cols), one basis vector per free column.
pub(crate) fn rational_kernel(mut m: Vec<Vec<Q>>, cols: usize) -> Vec<Vec<Q>> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..m.len() {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in 0..cols {
                    let d = &f * &m[r][j];
                    m[i][j] -= d;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Q::zero(); cols];
            v[f] = Q::one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = -m[row][f].clone();
            }
            v
        })
        .collect()
}

/// Scale a rational vector to coprime integers whose first nonzero entry is positive.
pub(crate) fn primitive_integers(v: &[Q]) -> Vec<BigInt> {
    let lcm = v.iter().fold(BigInt::one(), |l, x| l.lcm(x.denom()));
    let ints: Vec<BigInt> = v.iter().map(|x| (x * Q::from_integer(lcm.clone())).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    if g.is_zero() {
        return ints;
    }
    let sign = ints.iter().find(|x| !x.is_zero()).map(|x| x.signum()).unwrap_or_else(BigInt::one);
    ints.into_iter().map(|x| x / &g * &sign).collect()
}

/// Highest weight vector of weight `w` in `Λ²V(n)`: the primitive integral solution
/// of `E x = 0` inside the `w`-weight space, which must be one-dimensional.
fn highest_weight_vector(n: usize, w: i64) -> ExtSquareElement {
    let pairs: Vec<(usize, usize)> = (0..=n)
        .flat_map(|a| (a + 1..=n).map(move |b| (a, b)))
        .filter(|&(a, b)| (n as i64 - 2 * a as i64) + (n as i64 - 2 * b as i64) == w)
        .collect();
    let images: Vec<ExtSquareElement> =
        pairs.iter().map(|&(a, b)| wedge_action(Gen::E, &ExtSquareElement::wedge(n, a, b))).collect();
    let dim = n * (n + 1) / 2;
    let m: Vec<Vec<Q>> = (0..dim).map(|r| images.iter().map(|im| im.coeffs[r].clone()).collect()).collect();
    let ker = rational_kernel(m, pairs.len());
    assert_eq!(ker.len(), 1, "highest weight space of weight {w} is not a line");
    let ints = primitive_integers(&ker[0]);
    let mut x = ExtSquareElement::zero(n);
    for (&(a, b), c) in pairs.iter().zip(ints) {
        x.coeffs[pair_index(n, a, b)] = Q::from_integer(c);
    }
    x
}

/// Full weight basis of the summand generated by `hw` (of highest weight `top`):
/// `x_i = F^i x_0 / i!`.
fn divided_power_string(hw: ExtSquareElement, top: usize) -> Vec<ExtSquareElement> {
    let mut out = vec![hw];
    for i in 1..=top {
        let mut next = wedge_action(Gen::F, out.last().unwrap());
        let k = q(i as i64);
        for c in next.coeffs.iter_mut() {
            *c /= &k;
        }
        out.push(next);
    }
    out
}

/// The module basis `s_10..s_-10, t_6..t_-6, u_2, u_0, u_-2` of `Λ²V(6)`.
pub fn module_basis() -> Vec<ExtSquareElement> {
    let mut out = Vec::with_capacity(21);
    for top in [10usize, 6, 2] {
        out.extend(divided_power_string(highest_weight_vector(6, top as i64), top));
    }
    out
}

/// Which projection a table describes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Target {
    Alpha,
    Beta,
}

/// `entries[p][q] = c` means `v_p ∧ v_q ↦ c · (target basis vector of weight p + q)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MorphismTable {
    pub entries: [[i64; 7]; 7],
    pub target: Target,
}

/// Exact inverse of a square rational matrix (row-major), or `None` if singular.
pub(crate) fn invert(m: &[Vec<Q>]) -> Option<Vec<Vec<Q>>> {
    let n = m.len();
    let mut a: Vec<Vec<Q>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { Q::one() } else { Q::zero() }));
            r
        })
        .collect();
    for c in 0..n {
        let p = (c..n).find(|&i| !a[i][c].is_zero())?;
        a.swap(c, p);
        let inv = a[c][c].recip();
        for x in a[c].iter_mut() {
            *x *= &inv;
        }
        for i in 0..n {
            if i != c && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                for j in 0..2 * n {
                    let d = &f * &a[c][j];
                    a[i][j] -= d;
                }
            }
        }
    }
    Some(a.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// The projections α and β, read from the inverse of the transition matrix whose
/// columns are the module basis in tensor coordinates, scaled to coprime integers.
pub fn projection_tables() -> (MorphismTable, MorphismTable) {
    let basis = module_basis();
    let a: Vec<Vec<Q>> = (0..21).map(|r| basis.iter().map(|b| b.coeffs[r].clone()).collect()).collect();
    let inv = invert(&a).expect("transition matrix from the module basis is singular");
    let table = |first_row: usize, top: i64, target| {
        let mut raw = vec![vec![Q::zero(); 7]; 7];
        for p in 0..7 {
            for qq in p + 1..7 {
                let w = WEIGHTS[p] + WEIGHTS[qq];
                if w.abs() > top {
                    continue;
                }
                let row = first_row + ((top - w) / 2) as usize;
                let c = inv[row][pair_index(6, p, qq)].clone();
                raw[qq][p] = -c.clone();
                raw[p][qq] = c;
            }
        }
        let flat: Vec<Q> = raw.into_iter().flatten().collect();
        // keep the sign of the raw projection: scale by a positive factor only
        let lcm = flat.iter().fold(BigInt::one(), |l, x| l.lcm(x.denom()));
        let ints: Vec<BigInt> = flat.iter().map(|x| (x * Q::from_integer(lcm.clone())).to_integer()).collect();
        let g = ints.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
        let mut entries = [[0i64; 7]; 7];
        for (k, x) in ints.iter().enumerate() {
            entries[k / 7][k % 7] = i64::try_from(x / &g).expect("table entry fits in i64");
        }
        MorphismTable { entries, target }
    };
    (table(11, 6, Target::Alpha), table(18, 2, Target::Beta))
}

/// `entries[p][q][r]` is the coefficient of `v_{p+q+r}` in the trilinear product
/// `(v_p, v_q, v_r) = scale · β(v_p ∧ v_q) · v_r`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TrilinearTable {
    pub entries: [[[i64; 7]; 7]; 7],
    pub scale: i64,
}

/// Compose β with the action of `V(2) ≅ sl(2)` on `V(6)`, where the weight vectors
/// `u_2, u_0, u_-2` of `V(2)` act as `-E, H, F`.
pub fn trilinear_table(scale: i64) -> Result<TrilinearTable> {
    if scale == 0 {
        return arg("trilinear scale must be nonzero");
    }
    let (_, beta) = projection_tables();
    let mut entries = [[[0i64; 7]; 7]; 7];
    for p in 0..7 {
        for qq in 0..7 {
            let c = beta.entries[p][qq];
            if c == 0 {
                continue;
            }
            let (g, sign) = match WEIGHTS[p] + WEIGHTS[qq] {
                2 => (Gen::E, -1),
                0 => (Gen::H, 1),
                -2 => (Gen::F, 1),
                w => unreachable!("β has no component of weight {w}"),
            };
            for r in 0..7 {
                if let Some((_, k)) = basis_action(6, g, r) {
                    entries[p][qq][r] = scale * sign * c * k;
                }
            }
        }
    }
    Ok(TrilinearTable { entries, scale })
}

/// Structure constants as emitted to disk.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StructureConstants {
    pub dim: usize,
    pub weights: [i64; 7],
    pub bilinear: [[i64; 7]; 7],
    pub trilinear: [[[i64; 7]; 7]; 7],
    pub scale: i64,
}

impl StructureConstants {
    pub fn build(scale: i64) -> Result<Self> {
        let (alpha, _) = projection_tables();
        let tri = trilinear_table(scale)?;
        Ok(StructureConstants { dim: 7, weights: WEIGHTS, bilinear: alpha.entries, trilinear: tri.entries, scale })
    }

    /// Compact JSON followed by a newline.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string(self).expect("integer tables always serialize");
        s.push('\n');
        s
    }
}
