use super::corpus::corpus_record;
use crate::freealg::{lift, LiftMode, MonomialSpace, OpSet, Poly};
use crate::Result;
use std::collections::HashSet;

use LiftMode::{Binary as B, Ternary as T};

/// Lower-degree identities and the lifting sequences that carry them to `degree`.
pub fn consequence_plan(opset: OpSet, degree: usize) -> Vec<(&'static str, Vec<LiftMode>)> {
    match (opset, degree) {
        (OpSet::Binary, 5) => vec![("malcev", vec![B])],
        (OpSet::Binary, 6) => vec![("malcev", vec![B, B]), ("k18", vec![B])],
        (OpSet::Binary, 7) => vec![("malcev", vec![B, B, B]), ("k18", vec![B, B])],
        (OpSet::Ternary, 7) => vec![("ternary_derivation", vec![T])],
        (OpSet::Mixed, 4) => vec![("mixed_jacobi", vec![B])],
        (OpSet::Mixed, 5) => vec![
            ("mixed_jacobi", vec![B, B]),
            ("mixed_jacobi", vec![T]),
            ("malcev", vec![B]),
            ("ly_a", vec![B]),
            ("ly_b", vec![B]),
        ],
        (OpSet::Mixed, 6) => vec![
            ("mixed_jacobi", vec![B, B, B]),
            ("mixed_jacobi", vec![B, T]),
            ("mixed_jacobi", vec![T, B]),
            ("malcev", vec![B, B]),
            ("malcev", vec![T]),
            ("ly_a", vec![B, B]),
            ("ly_a", vec![T]),
            ("ly_b", vec![B, B]),
            ("ly_b", vec![T]),
            ("k18", vec![B]),
            ("ternary_derivation", vec![B]),
            ("m31", vec![B]),
        ],
        _ => Vec::new(),
    }
}

/// Known identities of the same degree that count as already found.
pub fn same_degree_identities(opset: OpSet, degree: usize) -> Vec<&'static str> {
    match (opset, degree) {
        (OpSet::Mixed, 5) => vec!["k18", "ternary_derivation"],
        _ => Vec::new(),
    }
}

/// Every lifting of `p` along `modes`, with intermediate spaces of `opset`.
pub fn lift_chain(p: &Poly, from: &MonomialSpace, modes: &[LiftMode], opset: OpSet) -> Result<Vec<Poly>> {
    let mut polys = vec![p.clone()];
    let mut space = from.clone();
    for &mode in modes {
        let extra = if mode == B { 1 } else { 2 };
        let next = MonomialSpace::new(space.degree() + extra, opset)?;
        let mut out = Vec::new();
        for q in &polys {
            out.extend(lift(q, &space, mode, &next)?);
        }
        polys = out;
        space = next;
    }
    Ok(polys)
}

/// The lifted polynomials of the plan in `space`: (distinct nonzero polynomials,
/// number produced before removing duplicates).
pub fn consequence_polys(space: &MonomialSpace) -> Result<(Vec<Poly>, usize)> {
    let mut raw = 0;
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for (name, modes) in consequence_plan(space.opset(), space.degree()) {
        let rec = corpus_record(name)?;
        let home = MonomialSpace::new(rec.degree, rec.opset)?;
        for p in lift_chain(&rec.poly(&home)?, &home, &modes, space.opset())? {
            raw += 1;
            if !p.is_zero() && seen.insert(p.clone()) {
                out.push(p);
            }
        }
    }
    Ok((out, raw))
}
