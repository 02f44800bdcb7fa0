//! Identity text format: one term per line, `<integer-coefficient> <monomial>`, where
//! monomials are written with `[x,y]` and `(x,y,z)` over the letters `a`..`g`.
//! Blank lines and `#` comments are ignored.

use super::space::MonomialSpace;
use super::tree::Tree;
use super::{OpSet, Poly, MAX_DEGREE};
use crate::{Error, Result};

/// A parsed identity: coefficient / monomial pairs of one degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TermList {
    pub degree: usize,
    pub terms: Vec<(i64, Tree)>,
}

impl TermList {
    /// Least operation set containing every term.
    pub fn opset(&self) -> OpSet {
        self.terms
            .iter()
            .filter_map(|(_, t)| t.shape().opset())
            .reduce(OpSet::join)
            .unwrap_or(OpSet::Binary)
    }

    pub fn to_poly(&self, space: &MonomialSpace) -> Result<Poly> {
        Poly::from_trees(space, self.terms.iter().map(|(c, t)| (*c, t)))
    }
}

pub fn parse_terms(src: &str) -> Result<TermList> {
    let mut terms = Vec::new();
    let mut degree = None;
    for (i, raw) in src.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let err = |msg: String| Error::Parse { line: line_no, msg };
        let (coef, mono) = line
            .split_once(char::is_whitespace)
            .ok_or_else(|| err(format!("expected `<coefficient> <monomial>`, got {line:?}")))?;
        let coef: i64 = coef.parse().map_err(|_| err(format!("bad coefficient {coef:?}")))?;
        let mono: Vec<u8> = mono.bytes().filter(|b| !b.is_ascii_whitespace()).collect();
        let mut pos = 0;
        let tree = parse_tree(&mono, &mut pos).map_err(err)?;
        if pos != mono.len() {
            return Err(err(format!("trailing input after monomial at column {pos}")));
        }
        let d = tree.degree();
        let mut seen = [false; MAX_DEGREE];
        for v in tree.word() {
            let v = v as usize;
            if v >= d || seen[v] {
                return Err(err(format!("term {tree} is not multilinear in the first {d} letters")));
            }
            seen[v] = true;
        }
        match degree {
            None => degree = Some(d),
            Some(d0) if d0 != d => return Err(err(format!("degree {d} differs from earlier terms ({d0})"))),
            _ => {}
        }
        terms.push((coef, tree));
    }
    let degree = degree.ok_or(Error::Parse { line: 0, msg: "no terms".into() })?;
    Ok(TermList { degree, terms })
}

fn parse_tree(s: &[u8], pos: &mut usize) -> std::result::Result<Tree, String> {
    let Some(&c) = s.get(*pos) else {
        return Err("unexpected end of monomial".into());
    };
    match c {
        b'a'..=b'g' => {
            *pos += 1;
            Ok(Tree::Leaf(c - b'a'))
        }
        b'[' | b'(' => {
            *pos += 1;
            let (arity, close) = if c == b'[' { (2, b']') } else { (3, b')') };
            let mut kids = Vec::with_capacity(3);
            for k in 0..arity {
                if k > 0 {
                    expect(s, pos, b',')?;
                }
                kids.push(parse_tree(s, pos)?);
            }
            expect(s, pos, close)?;
            let mut it = kids.into_iter();
            let (a, b) = (it.next().unwrap(), it.next().unwrap());
            Ok(match it.next() {
                None => Tree::bin(a, b),
                Some(c) => Tree::ter(a, b, c),
            })
        }
        other => Err(format!("unexpected character {:?} at column {}", other as char, *pos)),
    }
}

fn expect(s: &[u8], pos: &mut usize, want: u8) -> std::result::Result<(), String> {
    if s.get(*pos) == Some(&want) {
        *pos += 1;
        Ok(())
    } else {
        Err(format!("expected {:?} at column {}", want as char, *pos))
    }
}

/// Canonical printing: normal-form monomials in index order, one per line.
pub fn format_terms(p: &Poly, space: &MonomialSpace) -> String {
    let mut out = String::new();
    for &(m, c) in &p.terms {
        out.push_str(&format!("{c} {}\n", space.tree(m)));
    }
    out
}
