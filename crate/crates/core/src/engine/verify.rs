use super::algebra::{eval_monomial, AlgebraStructure, IntVec, DIM};
use crate::exactla::Fp;
use crate::freealg::{TermList, Tree};
use crate::rng::SeededRng;
use crate::Result;
use serde::Serialize;

/// Arguments at which an identity failed, and its (nonzero) value there.
#[derive(Clone, Debug, Serialize)]
pub struct Witness {
    pub trial: usize,
    pub args: Vec<Vec<i64>>,
    pub value: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub trials: usize,
    pub holds: bool,
    pub witness: Option<Witness>,
}

/// Exact evaluation of `identity` at `trials` random integer argument tuples with
/// components in `[-bound, bound]`; stops at the first nonzero value.
pub fn verify_identity_integer(
    identity: &TermList,
    alg: &AlgebraStructure,
    trials: usize,
    seed: u64,
    bound: i64,
) -> Result<VerifyReport> {
    let mut rng = SeededRng::new(seed);
    for trial in 0..trials {
        let args: Vec<IntVec> =
            (0..identity.degree).map(|_| std::array::from_fn(|_| rng.small_int(bound) as i128)).collect();
        let mut total = [0i128; DIM];
        for (c, t) in &identity.terms {
            let v = eval_monomial(t, &args, alg)?;
            for k in 0..DIM {
                total[k] += *c as i128 * v[k];
            }
        }
        if total.iter().any(|&x| x != 0) {
            return Ok(VerifyReport {
                trials: trial + 1,
                holds: false,
                witness: Some(Witness {
                    trial,
                    args: args.iter().map(|a| a.iter().map(|&x| x as i64).collect()).collect(),
                    value: total.iter().map(|x| x.to_string()).collect(),
                }),
            });
        }
    }
    Ok(VerifyReport { trials, holds: true, witness: None })
}

/// Like [`verify_identity_integer`], but with uniform arguments in `F_p`, every product
/// reduced mod `p`. Witness coordinates are symmetric residues.
pub fn verify_identity_modular(identity: &TermList, alg: &AlgebraStructure, trials: usize, seed: u64, fp: Fp) -> Result<VerifyReport> {
    let mut rng = SeededRng::new(seed);
    let sym = |v: IntVec| -> IntVec { v.map(|x| fp.signed(fp.from_i128(x)) as i128) };
    for trial in 0..trials {
        let args: Vec<IntVec> =
            (0..identity.degree).map(|_| std::array::from_fn(|_| fp.signed(rng.residue(fp.p())) as i128)).collect();
        let mut total = [0i128; DIM];
        for (c, t) in &identity.terms {
            let v = eval_mod(t, &args, alg, &sym)?;
            for k in 0..DIM {
                total[k] += *c as i128 * v[k];
            }
        }
        let total = sym(total);
        if total.iter().any(|&x| x != 0) {
            return Ok(VerifyReport {
                trials: trial + 1,
                holds: false,
                witness: Some(Witness {
                    trial,
                    args: args.iter().map(|a| a.iter().map(|&x| x as i64).collect()).collect(),
                    value: total.iter().map(|x| x.to_string()).collect(),
                }),
            });
        }
    }
    Ok(VerifyReport { trials, holds: true, witness: None })
}

fn eval_mod(t: &Tree, args: &[IntVec], alg: &AlgebraStructure, sym: &impl Fn(IntVec) -> IntVec) -> Result<IntVec> {
    let v = match t {
        Tree::Leaf(_) => eval_monomial(t, args, alg)?,
        Tree::Bin(a, b) => alg.bracket(&eval_mod(a, args, alg, sym)?, &eval_mod(b, args, alg, sym)?)?,
        Tree::Ter(a, b, c) => alg.triple(&eval_mod(a, args, alg, sym)?, &eval_mod(b, args, alg, sym)?, &eval_mod(c, args, alg, sym)?)?,
    };
    Ok(sym(v))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freealg::parse_terms;

    #[test]
    fn anticommutativity_holds_and_a_bare_product_fails() {
        let alg = AlgebraStructure::new(1).unwrap();
        let anti = parse_terms("1 [a,b]\n1 [b,a]").unwrap();
        let r = verify_identity_integer(&anti, &alg, 50, 1, 9).unwrap();
        assert!(r.holds);
        assert_eq!(r.trials, 50);
        let jac = parse_terms("1 [[a,b],c]\n1 [[b,c],a]\n1 [[c,a],b]").unwrap();
        let r = verify_identity_integer(&jac, &alg, 50, 1, 9).unwrap();
        assert!(!r.holds);
        let w = r.witness.unwrap();
        assert_eq!(w.args.len(), 3);
        assert!(w.value.iter().any(|v| v != "0"));
    }

    #[test]
    fn modular_agrees_with_integer_on_the_corpus() {
        let fp = Fp::new(32749).unwrap();
        for rec in crate::engine::corpus() {
            let list = parse_terms(&rec.text).unwrap();
            let alg = AlgebraStructure::new(crate::engine::default_scale(list.opset())).unwrap();
            assert!(verify_identity_modular(&list, &alg, 20, 3, fp).unwrap().holds, "{}", rec.name);
        }
        let jac = parse_terms("1 [[a,b],c]\n1 [[b,c],a]\n1 [[c,a],b]").unwrap();
        let alg = AlgebraStructure::new(1).unwrap();
        assert!(!verify_identity_modular(&jac, &alg, 20, 3, fp).unwrap().holds);
    }
}
