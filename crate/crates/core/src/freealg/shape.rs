use super::{OpSet, MAX_DEGREE};
use crate::error::arg;
use crate::Result;
use serde::Serialize;
use std::cmp::Ordering;
use std::fmt;

/// An association type: a rooted ordered tree whose internal nodes are the
/// anticommutative binary product or the ternary product skew in its first two slots.
///
/// Shapes are kept canonical: the two swappable children of a node appear in
/// [`standard_cmp`] order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Shape {
    Leaf,
    Bin(Box<Shape>, Box<Shape>),
    Ter(Box<Shape>, Box<Shape>, Box<Shape>),
}

impl Shape {
    pub fn bin(y: Shape, z: Shape) -> Shape {
        if standard_cmp(&y, &z) == Ordering::Greater {
            Shape::Bin(Box::new(z), Box::new(y))
        } else {
            Shape::Bin(Box::new(y), Box::new(z))
        }
    }

    pub fn ter(y: Shape, z: Shape, w: Shape) -> Shape {
        if standard_cmp(&y, &z) == Ordering::Greater {
            Shape::Ter(Box::new(z), Box::new(y), Box::new(w))
        } else {
            Shape::Ter(Box::new(y), Box::new(z), Box::new(w))
        }
    }

    pub fn degree(&self) -> usize {
        match self {
            Shape::Leaf => 1,
            Shape::Bin(y, z) => y.degree() + z.degree(),
            Shape::Ter(y, z, w) => y.degree() + z.degree() + w.degree(),
        }
    }

    pub fn binary_nodes(&self) -> usize {
        match self {
            Shape::Leaf => 0,
            Shape::Bin(y, z) => 1 + y.binary_nodes() + z.binary_nodes(),
            Shape::Ter(y, z, w) => y.binary_nodes() + z.binary_nodes() + w.binary_nodes(),
        }
    }

    pub fn ternary_nodes(&self) -> usize {
        match self {
            Shape::Leaf => 0,
            Shape::Bin(y, z) => y.ternary_nodes() + z.ternary_nodes(),
            Shape::Ter(y, z, w) => 1 + y.ternary_nodes() + z.ternary_nodes() + w.ternary_nodes(),
        }
    }

    /// The least operation set this shape lives in (`None` for a bare leaf).
    pub fn opset(&self) -> Option<OpSet> {
        match (self.binary_nodes() > 0, self.ternary_nodes() > 0) {
            (false, false) => None,
            (true, false) => Some(OpSet::Binary),
            (false, true) => Some(OpSet::Ternary),
            (true, true) => Some(OpSet::Mixed),
        }
    }

    /// Number of nodes whose swappable children have identical shapes; each halves
    /// the number of normal-form monomials of this type.
    pub fn symmetric_nodes(&self) -> usize {
        match self {
            Shape::Leaf => 0,
            Shape::Bin(y, z) => usize::from(y == z) + y.symmetric_nodes() + z.symmetric_nodes(),
            Shape::Ter(y, z, w) => {
                usize::from(y == z) + y.symmetric_nodes() + z.symmetric_nodes() + w.symmetric_nodes()
            }
        }
    }

    /// Multilinear monomials of this type: `n! / 2^s`.
    pub fn monomial_count(&self) -> usize {
        let n = self.degree();
        (1..=n).product::<usize>() >> self.symmetric_nodes()
    }
}

/// Pattern notation with dashes for the variables, e.g. `[[-,-],(-,-,-)]`.
impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Shape::Leaf => f.write_str("-"),
            Shape::Bin(y, z) => write!(f, "[{y},{z}]"),
            Shape::Ter(y, z, w) => write!(f, "({y},{z},{w})"),
        }
    }
}

/// The standard order on association types (`Less` = precedes).
///
/// Higher degree precedes lower degree. At equal degree binary roots precede ternary
/// roots; `[y,z]` compares `y` then `z`. A ternary root `(y,z,w)` first compares
/// `max(deg y, deg w)` (larger first), then `y`, `z`, `w` in turn.
pub fn standard_cmp(a: &Shape, b: &Shape) -> Ordering {
    let (da, db) = (a.degree(), b.degree());
    if da != db {
        return db.cmp(&da);
    }
    match (a, b) {
        (Shape::Leaf, Shape::Leaf) => Ordering::Equal,
        (Shape::Bin(y1, z1), Shape::Bin(y2, z2)) => {
            standard_cmp(y1, y2).then_with(|| standard_cmp(z1, z2))
        }
        (Shape::Ter(y1, z1, w1), Shape::Ter(y2, z2, w2)) => {
            let m1 = y1.degree().max(w1.degree());
            let m2 = y2.degree().max(w2.degree());
            m2.cmp(&m1)
                .then_with(|| standard_cmp(y1, y2))
                .then_with(|| standard_cmp(z1, z2))
                .then_with(|| standard_cmp(w1, w2))
        }
        (Shape::Bin(..), Shape::Ter(..)) => Ordering::Less,
        (Shape::Ter(..), Shape::Bin(..)) => Ordering::Greater,
        // a leaf has degree 1 and nothing else does
        _ => unreachable!("shapes of equal degree with a leaf"),
    }
}

/// All canonical shapes of each degree `0..=max` admitted by `opset`, unsorted.
fn shapes_by_degree(max: usize, opset: OpSet) -> Vec<Vec<Shape>> {
    let mut by_deg: Vec<Vec<Shape>> = vec![Vec::new(); max + 1];
    if max >= 1 {
        by_deg[1].push(Shape::Leaf);
    }
    for n in 2..=max {
        let mut out = Vec::new();
        if opset.allows_binary() {
            for dy in (1..n).rev() {
                let dz = n - dy;
                if dz > dy {
                    continue;
                }
                for y in &by_deg[dy] {
                    for z in &by_deg[dz] {
                        if standard_cmp(y, z) != Ordering::Greater {
                            out.push(Shape::Bin(Box::new(y.clone()), Box::new(z.clone())));
                        }
                    }
                }
            }
        }
        if opset.allows_ternary() {
            for dy in 1..n {
                for dz in 1..=dy.min(n - dy - 1) {
                    let dw = n - dy - dz;
                    if dw == 0 {
                        continue;
                    }
                    for y in &by_deg[dy] {
                        for z in &by_deg[dz] {
                            if standard_cmp(y, z) == Ordering::Greater {
                                continue;
                            }
                            for w in &by_deg[dw] {
                                out.push(Shape::Ter(
                                    Box::new(y.clone()),
                                    Box::new(z.clone()),
                                    Box::new(w.clone()),
                                ));
                            }
                        }
                    }
                }
            }
        }
        by_deg[n] = out;
    }
    by_deg
}

/// Association types of `degree` admitted by `opset`, in standard order.
pub fn enumerate_types(degree: usize, opset: OpSet) -> Result<Vec<Shape>> {
    if degree == 0 || degree > MAX_DEGREE {
        return arg(format!("degree {degree} outside 1..={MAX_DEGREE}"));
    }
    if opset == OpSet::Ternary && degree.is_multiple_of(2) {
        return arg(format!("ternary monomials need odd degree, got {degree}"));
    }
    let mut v = shapes_by_degree(degree, opset).swap_remove(degree);
    v.sort_by(standard_cmp);
    Ok(v)
}

/// One row of the type / monomial count table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TypeCounts {
    pub degree: usize,
    pub binary: usize,
    pub ternary: usize,
    /// Types using both products.
    pub mixed: usize,
    pub total: usize,
    /// Multilinear monomials over all `total` types.
    pub monomials: usize,
}

/// Type and monomial counts for degrees `1..=max_degree`, by direct enumeration.
pub fn count_types(max_degree: usize) -> Result<Vec<TypeCounts>> {
    if max_degree > MAX_DEGREE {
        return arg(format!("degree {max_degree} above {MAX_DEGREE}"));
    }
    let all = shapes_by_degree(max_degree, OpSet::Mixed);
    Ok((1..=max_degree)
        .map(|n| {
            let mut row = TypeCounts { degree: n, binary: 0, ternary: 0, mixed: 0, total: 0, monomials: 0 };
            for s in &all[n] {
                match s.opset() {
                    Some(OpSet::Binary) => row.binary += 1,
                    Some(OpSet::Ternary) => row.ternary += 1,
                    Some(OpSet::Mixed) => row.mixed += 1,
                    None => {}
                }
                row.total += 1;
                row.monomials += s.monomial_count();
            }
            row
        })
        .collect())
}
