use super::space::MonomialSpace;
use super::tree::Tree;
use super::OpSet;
use crate::error::arg;
use crate::Result;
use std::collections::BTreeMap;

/// A multilinear polynomial with integer coefficients, as a sparse coefficient
/// vector over the normal-form monomials of one space.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly {
    pub degree: usize,
    pub opset: OpSet,
    /// Sorted by monomial index, no zero coefficients.
    pub terms: Vec<(usize, i64)>,
}

impl Poly {
    pub fn zero(space: &MonomialSpace) -> Poly {
        Poly { degree: space.degree(), opset: space.opset(), terms: Vec::new() }
    }

    /// Collects `(monomial, coefficient)` pairs, merging repeats and dropping zeros.
    pub fn from_pairs(space: &MonomialSpace, pairs: impl IntoIterator<Item = (usize, i64)>) -> Poly {
        let mut acc: BTreeMap<usize, i64> = BTreeMap::new();
        for (m, c) in pairs {
            *acc.entry(m).or_insert(0) += c;
        }
        Poly {
            degree: space.degree(),
            opset: space.opset(),
            terms: acc.into_iter().filter(|&(_, c)| c != 0).collect(),
        }
    }

    /// Sum of `coefficient * tree` over arbitrary (not necessarily normal) trees.
    pub fn from_trees<'a>(
        space: &MonomialSpace,
        terms: impl IntoIterator<Item = (i64, &'a Tree)>,
    ) -> Result<Poly> {
        let mut pairs = Vec::new();
        for (c, t) in terms {
            let (m, s) = space.locate(t)?;
            pairs.push((m, c * s));
        }
        Ok(Poly::from_pairs(space, pairs))
    }

    pub fn from_dense(space: &MonomialSpace, coeffs: &[i64]) -> Poly {
        Poly::from_pairs(space, coeffs.iter().enumerate().map(|(m, &c)| (m, c)))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn to_dense(&self, space: &MonomialSpace) -> Vec<i64> {
        let mut v = vec![0; space.len()];
        for &(m, c) in &self.terms {
            v[m] = c;
        }
        v
    }

    pub fn scale(&self, k: i64) -> Poly {
        Poly {
            degree: self.degree,
            opset: self.opset,
            terms: if k == 0 { Vec::new() } else { self.terms.iter().map(|&(m, c)| (m, c * k)).collect() },
        }
    }

    pub fn square_norm(&self) -> i64 {
        self.terms.iter().map(|&(_, c)| c * c).sum()
    }

    /// Divide out the content and make the first coefficient positive.
    pub fn primitive(&self) -> Poly {
        let g = self.terms.iter().fold(0i64, |g, &(_, c)| num_integer::gcd(g, c));
        if g == 0 {
            return self.clone();
        }
        let g = if self.terms[0].1 < 0 { -g } else { g };
        Poly { degree: self.degree, opset: self.opset, terms: self.terms.iter().map(|&(m, c)| (m, c / g)).collect() }
    }

    /// The permuted polynomial `x_i -> x_{perm[i]}`; a left action of the symmetric group.
    pub fn act(&self, space: &MonomialSpace, perm: &[u8]) -> Result<Poly> {
        self.check(space)?;
        if perm.len() != self.degree {
            return arg(format!("permutation of {} letters applied in degree {}", perm.len(), self.degree));
        }
        Ok(Poly::from_pairs(
            space,
            self.terms.iter().map(|&(m, c)| {
                let (m2, s) = space.act_monomial(perm, m);
                (m2, c * s)
            }),
        ))
    }

    /// Re-express in a larger space of the same degree (e.g. binary into mixed).
    pub fn embed(&self, from: &MonomialSpace, to: &MonomialSpace) -> Result<Poly> {
        self.check(from)?;
        if from.degree() != to.degree() || !to.opset().contains(from.opset()) {
            return arg(format!(
                "cannot embed {} degree {} into {} degree {}",
                from.opset(), from.degree(), to.opset(), to.degree()
            ));
        }
        let trees: Vec<(i64, Tree)> = self.terms.iter().map(|&(m, c)| (c, from.tree(m))).collect();
        Poly::from_trees(to, trees.iter().map(|(c, t)| (*c, t)))
    }

    pub(crate) fn check(&self, space: &MonomialSpace) -> Result<()> {
        if self.degree != space.degree() || self.opset != space.opset() {
            return arg(format!(
                "polynomial lives in {} degree {}, space is {} degree {}",
                self.opset, self.degree, space.opset(), space.degree()
            ));
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LiftMode {
    /// `n` internal brackets `x_i -> [x_i, x_{n+1}]` and the external `[I, x_{n+1}]`.
    Binary,
    /// `n` internal products `x_i -> (x_i, x_{n+1}, x_{n+2})` and the external
    /// `(I, x_{n+1}, x_{n+2})`, `(x_{n+1}, x_{n+2}, I)`. The third placement
    /// `(x_{n+1}, I, x_{n+2})` is the negative of the first and is not produced.
    Ternary,
}

/// Liftings of `p` (living in `from`) to the space `to` of degree `n+1` or `n+2`.
pub fn lift(p: &Poly, from: &MonomialSpace, mode: LiftMode, to: &MonomialSpace) -> Result<Vec<Poly>> {
    p.check(from)?;
    let n = from.degree();
    let extra = match mode {
        LiftMode::Binary => 1,
        LiftMode::Ternary => 2,
    };
    if to.degree() != n + extra {
        return arg(format!("lifting degree {n} by {extra} cannot land in degree {}", to.degree()));
    }
    let x = n as u8;
    let wrap = |t: Tree| match mode {
        LiftMode::Binary => Tree::bin(t, Tree::leaf(x)),
        LiftMode::Ternary => Tree::ter(t, Tree::leaf(x), Tree::leaf(x + 1)),
    };
    let terms: Vec<(i64, Tree)> = p.terms.iter().map(|&(m, c)| (c, from.tree(m))).collect();
    let mut out = Vec::new();
    for i in 0..n as u8 {
        let sub: Vec<(i64, Tree)> = terms
            .iter()
            .map(|(c, t)| (*c, t.substitute(&|v| if v == i { wrap(Tree::leaf(v)) } else { Tree::leaf(v) })))
            .collect();
        out.push(Poly::from_trees(to, sub.iter().map(|(c, t)| (*c, t)))?);
    }
    let outer: Vec<(i64, Tree)> = terms.iter().map(|(c, t)| (*c, wrap(t.clone()))).collect();
    out.push(Poly::from_trees(to, outer.iter().map(|(c, t)| (*c, t)))?);
    if mode == LiftMode::Ternary {
        let outer: Vec<(i64, Tree)> = terms
            .iter()
            .map(|(c, t)| (*c, Tree::ter(Tree::leaf(x), Tree::leaf(x + 1), t.clone())))
            .collect();
        out.push(Poly::from_trees(to, outer.iter().map(|(c, t)| (*c, t)))?);
    }
    Ok(out)
}
