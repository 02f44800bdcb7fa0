use super::shape::{standard_cmp, Shape};
use std::cmp::Ordering;
use std::fmt;

/// A monomial with explicit variables at the leaves (0 = `a`, 1 = `b`, ...).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Tree {
    Leaf(u8),
    Bin(Box<Tree>, Box<Tree>),
    Ter(Box<Tree>, Box<Tree>, Box<Tree>),
}

impl Tree {
    pub fn leaf(v: u8) -> Tree {
        Tree::Leaf(v)
    }

    pub fn bin(a: Tree, b: Tree) -> Tree {
        Tree::Bin(Box::new(a), Box::new(b))
    }

    pub fn ter(a: Tree, b: Tree, c: Tree) -> Tree {
        Tree::Ter(Box::new(a), Box::new(b), Box::new(c))
    }

    pub fn shape(&self) -> Shape {
        match self {
            Tree::Leaf(_) => Shape::Leaf,
            Tree::Bin(a, b) => Shape::Bin(Box::new(a.shape()), Box::new(b.shape())),
            Tree::Ter(a, b, c) => {
                Shape::Ter(Box::new(a.shape()), Box::new(b.shape()), Box::new(c.shape()))
            }
        }
    }

    pub fn degree(&self) -> usize {
        match self {
            Tree::Leaf(_) => 1,
            Tree::Bin(a, b) => a.degree() + b.degree(),
            Tree::Ter(a, b, c) => a.degree() + b.degree() + c.degree(),
        }
    }

    pub fn first_symbol(&self) -> u8 {
        match self {
            Tree::Leaf(v) => *v,
            Tree::Bin(a, _) | Tree::Ter(a, _, _) => a.first_symbol(),
        }
    }

    /// Variables in leaf order.
    pub fn word(&self) -> Vec<u8> {
        let mut w = Vec::with_capacity(8);
        self.collect(&mut w);
        w
    }

    fn collect(&self, w: &mut Vec<u8>) {
        match self {
            Tree::Leaf(v) => w.push(*v),
            Tree::Bin(a, b) => {
                a.collect(w);
                b.collect(w);
            }
            Tree::Ter(a, b, c) => {
                a.collect(w);
                b.collect(w);
                c.collect(w);
            }
        }
    }

    /// Replace every leaf `v` by `f(v)`.
    pub fn substitute(&self, f: &impl Fn(u8) -> Tree) -> Tree {
        match self {
            Tree::Leaf(v) => f(*v),
            Tree::Bin(a, b) => Tree::bin(a.substitute(f), b.substitute(f)),
            Tree::Ter(a, b, c) => Tree::ter(a.substitute(f), b.substitute(f), c.substitute(f)),
        }
    }

    /// Rebuild a tree from a shape and the variables in leaf order.
    pub fn from_shape(shape: &Shape, word: &[u8]) -> Tree {
        let mut it = word.iter().copied();
        let t = Self::fill(shape, &mut it);
        debug_assert!(it.next().is_none());
        t
    }

    fn fill(shape: &Shape, it: &mut impl Iterator<Item = u8>) -> Tree {
        match shape {
            Shape::Leaf => Tree::Leaf(it.next().expect("word shorter than shape")),
            Shape::Bin(y, z) => {
                let a = Self::fill(y, it);
                Tree::bin(a, Self::fill(z, it))
            }
            Shape::Ter(y, z, w) => {
                let a = Self::fill(y, it);
                let b = Self::fill(z, it);
                Tree::ter(a, b, Self::fill(w, it))
            }
        }
    }

    /// Normal form under anticommutativity and ternary skew-symmetry, with the sign
    /// picked up along the way.
    pub fn canonical(&self) -> (Tree, i64) {
        match self {
            Tree::Leaf(v) => (Tree::Leaf(*v), 1),
            Tree::Bin(a, b) => {
                let (a, sa) = a.canonical();
                let (b, sb) = b.canonical();
                if out_of_order(&a, &b) {
                    (Tree::bin(b, a), -sa * sb)
                } else {
                    (Tree::bin(a, b), sa * sb)
                }
            }
            Tree::Ter(a, b, c) => {
                let (a, sa) = a.canonical();
                let (b, sb) = b.canonical();
                let (c, sc) = c.canonical();
                if out_of_order(&a, &b) {
                    (Tree::ter(b, a, c), -sa * sb * sc)
                } else {
                    (Tree::ter(a, b, c), sa * sb * sc)
                }
            }
        }
    }
}

fn out_of_order(x: &Tree, y: &Tree) -> bool {
    match standard_cmp(&x.shape(), &y.shape()) {
        Ordering::Greater => true,
        Ordering::Less => false,
        Ordering::Equal => x.first_symbol() > y.first_symbol(),
    }
}

pub(crate) fn var_name(v: u8) -> char {
    (b'a' + v) as char
}

impl fmt::Display for Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tree::Leaf(v) => write!(f, "{}", var_name(*v)),
            Tree::Bin(a, b) => write!(f, "[{a},{b}]"),
            Tree::Ter(a, b, c) => write!(f, "({a},{b},{c})"),
        }
    }
}
