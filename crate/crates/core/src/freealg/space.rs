use super::shape::{enumerate_types, Shape};
use super::tree::Tree;
use super::OpSet;
use crate::error::arg;
use crate::Result;
use std::collections::HashMap;

const NONE: u32 = u32::MAX;

/// Postorder node of a flattened association type. Children are node indices.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Node {
    Leaf(u8),
    Bin(u8, u8),
    Ter(u8, u8, u8),
}

/// Precomputed data for one association type of a space.
#[derive(Clone, Debug)]
pub struct TypeInfo {
    pub shape: Shape,
    /// Postorder; the root is last.
    pub nodes: Vec<Node>,
    /// Swappable sibling pairs with identical shapes: (start of first leaf block,
    /// start of second, block length), innermost first.
    pub swaps: Vec<(u8, u8, u8)>,
    pub offset: usize,
    pub count: usize,
}

/// Normal-form multilinear monomials of one degree for one operation set, grouped
/// by type in standard order and lexicographic by leaf word within a type.
#[derive(Clone, Debug)]
pub struct MonomialSpace {
    degree: usize,
    opset: OpSet,
    types: Vec<TypeInfo>,
    by_shape: HashMap<Shape, usize>,
    words: Vec<[u8; 8]>,
    type_of: Vec<u16>,
    /// `type * n! + rank(word)` -> monomial index.
    lookup: Vec<u32>,
    nfact: usize,
}

impl MonomialSpace {
    pub fn new(degree: usize, opset: OpSet) -> Result<Self> {
        let shapes = enumerate_types(degree, opset)?;
        let nfact: usize = (1..=degree).product();
        let mut types = Vec::with_capacity(shapes.len());
        let mut words = Vec::new();
        let mut type_of = Vec::new();
        let mut lookup = vec![NONE; nfact * shapes.len()];
        let mut by_shape = HashMap::new();
        for (ti, shape) in shapes.into_iter().enumerate() {
            let mut nodes = Vec::new();
            let mut swaps = Vec::new();
            let mut leaf = 0u8;
            flatten(&shape, &mut nodes, &mut swaps, &mut leaf);
            let offset = words.len();
            let mut w: Vec<u8> = (0..degree as u8).collect();
            loop {
                if swaps.iter().all(|&(s1, s2, _)| w[s1 as usize] < w[s2 as usize]) {
                    let mut arr = [0u8; 8];
                    arr[..degree].copy_from_slice(&w);
                    lookup[ti * nfact + perm_rank(&w)] = words.len() as u32;
                    words.push(arr);
                    type_of.push(ti as u16);
                }
                if !next_permutation(&mut w) {
                    break;
                }
            }
            let count = words.len() - offset;
            debug_assert_eq!(count, shape.monomial_count());
            by_shape.insert(shape.clone(), ti);
            types.push(TypeInfo { shape, nodes, swaps, offset, count });
        }
        Ok(MonomialSpace { degree, opset, types, by_shape, words, type_of, lookup, nfact })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn opset(&self) -> OpSet {
        self.opset
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn types(&self) -> &[TypeInfo] {
        &self.types
    }

    pub fn type_index(&self, shape: &Shape) -> Option<usize> {
        self.by_shape.get(shape).copied()
    }

    pub fn type_of(&self, m: usize) -> usize {
        self.type_of[m] as usize
    }

    pub fn word(&self, m: usize) -> &[u8] {
        &self.words[m][..self.degree]
    }

    pub fn tree(&self, m: usize) -> Tree {
        Tree::from_shape(&self.types[self.type_of(m)].shape, self.word(m))
    }

    /// Bring `word` (a permutation of the variables placed on the leaves of type
    /// `ty`) to normal form in place; returns the monomial index and the sign.
    pub fn normalize(&self, ty: usize, word: &mut [u8]) -> (usize, i64) {
        let mut sign = 1;
        for &(s1, s2, len) in &self.types[ty].swaps {
            let (s1, s2, len) = (s1 as usize, s2 as usize, len as usize);
            if word[s1] > word[s2] {
                for k in 0..len {
                    word.swap(s1 + k, s2 + k);
                }
                sign = -sign;
            }
        }
        let idx = self.lookup[ty * self.nfact + perm_rank(word)];
        debug_assert_ne!(idx, NONE);
        (idx as usize, sign)
    }

    /// Image of monomial `m` under the variable substitution `x_i -> x_{perm[i]}`.
    pub fn act_monomial(&self, perm: &[u8], m: usize) -> (usize, i64) {
        let mut w = [0u8; 8];
        for (dst, &v) in w.iter_mut().zip(self.word(m)) {
            *dst = perm[v as usize];
        }
        self.normalize(self.type_of(m), &mut w[..self.degree])
    }

    /// Locate an arbitrary multilinear tree of this degree.
    pub fn locate(&self, t: &Tree) -> Result<(usize, i64)> {
        let (c, sign) = t.canonical();
        let shape = c.shape();
        let Some(ty) = self.type_index(&shape) else {
            return arg(format!("type {shape} is not in the {} degree-{} space", self.opset, self.degree));
        };
        let mut w = c.word();
        if w.len() != self.degree {
            return arg(format!("term {t} has degree {}, expected {}", w.len(), self.degree));
        }
        let mut seen = 0u32;
        for &v in &w {
            if v as usize >= self.degree || seen & (1 << v) != 0 {
                return arg(format!("term {t} is not multilinear in the first {} variables", self.degree));
            }
            seen |= 1 << v;
        }
        let (idx, s2) = self.normalize(ty, &mut w);
        debug_assert_eq!(s2, 1);
        Ok((idx, sign))
    }
}

fn flatten(shape: &Shape, nodes: &mut Vec<Node>, swaps: &mut Vec<(u8, u8, u8)>, leaf: &mut u8) -> u8 {
    match shape {
        Shape::Leaf => {
            nodes.push(Node::Leaf(*leaf));
            *leaf += 1;
        }
        Shape::Bin(y, z) => {
            let s1 = *leaf;
            let a = flatten(y, nodes, swaps, leaf);
            let s2 = *leaf;
            let b = flatten(z, nodes, swaps, leaf);
            if y == z {
                swaps.push((s1, s2, s2 - s1));
            }
            nodes.push(Node::Bin(a, b));
        }
        Shape::Ter(y, z, w) => {
            let s1 = *leaf;
            let a = flatten(y, nodes, swaps, leaf);
            let s2 = *leaf;
            let b = flatten(z, nodes, swaps, leaf);
            let c = flatten(w, nodes, swaps, leaf);
            if y == z {
                swaps.push((s1, s2, s2 - s1));
            }
            nodes.push(Node::Ter(a, b, c));
        }
    }
    (nodes.len() - 1) as u8
}

/// Lehmer rank of a permutation of `0..n`.
pub(crate) fn perm_rank(w: &[u8]) -> usize {
    let n = w.len();
    let mut rank = 0;
    for i in 0..n {
        let smaller = w[i + 1..].iter().filter(|&&x| x < w[i]).count();
        rank = rank * (n - i) + smaller;
    }
    rank
}

pub(crate) fn next_permutation(w: &mut [u8]) -> bool {
    let n = w.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && w[i - 1] >= w[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while w[j] <= w[i - 1] {
        j -= 1;
    }
    w.swap(i - 1, j);
    w[i..].reverse();
    true
}

/// All permutations of `0..n` in lexicographic order.
pub fn all_permutations(n: usize) -> Vec<Vec<u8>> {
    let mut w: Vec<u8> = (0..n as u8).collect();
    let mut out = vec![w.clone()];
    while next_permutation(&mut w) {
        out.push(w.clone());
    }
    out
}
