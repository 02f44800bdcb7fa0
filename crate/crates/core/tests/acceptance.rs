//! Acceptance criteria 1-10. Runs as a plain binary and prints one line per criterion.

#![allow(clippy::needless_range_loop)]

use malcev_core::engine::*;
use malcev_core::exactla::{hnf_with_transform, lll_reduce, same_lattice, Delta, Fp, IntMatrix};
use malcev_core::freealg::{count_types, MonomialSpace, OpSet, Poly};
use malcev_core::rng::SeededRng;
use malcev_core::sl2rep::*;
use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::time::Instant;

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)*) => {
        if !$cond {
            return Err(format!($($fmt)*));
        }
    };
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

const ALPHA: [[i64; 7]; 7] = [
    [0, 0, 0, 20, 10, 4, 1],
    [0, 0, -60, -20, 0, 6, 4],
    [0, 60, 0, -20, -15, 0, 10],
    [-20, 20, 20, 0, -20, -20, 20],
    [-10, 0, 15, 20, 0, -60, 0],
    [-4, -6, 0, 20, 60, 0, 0],
    [-1, -4, -10, -20, 0, 0, 0],
];

const BETA: [[i64; 7]; 7] = [
    [0, 0, 0, 0, 0, 2, 1],
    [0, 0, 0, 0, -10, -4, 2],
    [0, 0, 0, 20, 5, -10, 0],
    [0, 0, -20, 0, 20, 0, 0],
    [0, 10, -5, -20, 0, 0, 0],
    [-2, 4, 10, 0, 0, 0, 0],
    [-1, -2, 0, 0, 0, 0, 0],
];

// indexed [third argument][first][second]
const TRILINEAR_BY_THIRD: [[[i64; 7]; 7]; 7] = [
    [
        [   0,    0,    0,    0,    0,    0,    6],
        [   0,    0,    0,    0,    0,  -24,    2],
        [   0,    0,    0,    0,   30,  -10,    0],
        [   0,    0,    0,    0,   20,    0,    0],
        [   0,    0,  -30,  -20,    0,    0,    0],
        [   0,   24,   10,    0,    0,    0,    0],
        [  -6,   -2,    0,    0,    0,    0,    0],
    ],
    [
        [   0,    0,    0,    0,    0,  -12,    4],
        [   0,    0,    0,    0,   60,  -16,    4],
        [   0,    0,    0, -120,   20,  -20,    0],
        [   0,    0,  120,    0,   40,    0,    0],
        [   0,  -60,  -20,  -40,    0,    0,    0],
        [  12,   16,   20,    0,    0,    0,    0],
        [  -4,   -4,    0,    0,    0,    0,    0],
    ],
    [
        [   0,    0,    0,    0,    0,  -10,    2],
        [   0,    0,    0,    0,   50,   -8,    6],
        [   0,    0,    0, -100,   10,  -30,    0],
        [   0,    0,  100,    0,   60,    0,    0],
        [   0,  -50,  -10,  -60,    0,    0,    0],
        [  10,    8,   30,    0,    0,    0,    0],
        [  -2,   -6,    0,    0,    0,    0,    0],
    ],
    [
        [   0,    0,    0,    0,    0,   -8,    0],
        [   0,    0,    0,    0,   40,    0,    8],
        [   0,    0,    0,  -80,    0,  -40,    0],
        [   0,    0,   80,    0,   80,    0,    0],
        [   0,  -40,    0,  -80,    0,    0,    0],
        [   8,    0,   40,    0,    0,    0,    0],
        [   0,   -8,    0,    0,    0,    0,    0],
    ],
    [
        [   0,    0,    0,    0,    0,   -6,   -2],
        [   0,    0,    0,    0,   30,    8,   10],
        [   0,    0,    0,  -60,  -10,  -50,    0],
        [   0,    0,   60,    0,  100,    0,    0],
        [   0,  -30,   10, -100,    0,    0,    0],
        [   6,   -8,   50,    0,    0,    0,    0],
        [   2,  -10,    0,    0,    0,    0,    0],
    ],
    [
        [   0,    0,    0,    0,    0,   -4,   -4],
        [   0,    0,    0,    0,   20,   16,   12],
        [   0,    0,    0,  -40,  -20,  -60,    0],
        [   0,    0,   40,    0,  120,    0,    0],
        [   0,  -20,   20, -120,    0,    0,    0],
        [   4,  -16,   60,    0,    0,    0,    0],
        [   4,  -12,    0,    0,    0,    0,    0],
    ],
    [
        [   0,    0,    0,    0,    0,   -2,   -6],
        [   0,    0,    0,    0,   10,   24,    0],
        [   0,    0,    0,  -20,  -30,    0,    0],
        [   0,    0,   20,    0,    0,    0,    0],
        [   0,  -10,   30,    0,    0,    0,    0],
        [   2,  -24,    0,    0,    0,    0,    0],
        [   6,    0,    0,    0,    0,    0,    0],
    ],
];


// (coefficient, weight i, weight j) of v_i ∧ v_j for each module basis vector
const MODULE_BASIS: [&[(i64, i64, i64)]; 21] = [
    &[(1, 6, 4)],
    &[(2, 6, 2)],
    &[(3, 6, 0), (1, 4, 2)],
    &[(4, 6, -2), (2, 4, 0)],
    &[(5, 6, -4), (3, 4, -2), (1, 2, 0)],
    &[(6, 6, -6), (4, 4, -4), (2, 2, -2)],
    &[(5, 4, -6), (3, 2, -4), (1, 0, -2)],
    &[(4, 2, -6), (2, 0, -4)],
    &[(3, 0, -6), (1, -2, -4)],
    &[(2, -2, -6)],
    &[(1, -4, -6)],
    &[(3, 6, 0), (-2, 4, 2)],
    &[(12, 6, -2), (-3, 4, 0)],
    &[(30, 6, -4), (-3, 2, 0)],
    &[(60, 6, -6), (10, 4, -4), (-4, 2, -2)],
    &[(30, 4, -6), (-3, 0, -2)],
    &[(12, 2, -6), (-3, 0, -4)],
    &[(3, 0, -6), (-2, -2, -4)],
    &[(15, 6, -4), (-5, 4, -2), (3, 2, 0)],
    &[(90, 6, -6), (-10, 4, -4), (2, 2, -2)],
    &[(15, 4, -6), (-5, 2, -4), (3, 0, -2)],
];

fn structure_constants() -> Outcome {
    let sc = StructureConstants::build(1).map_err(err)?;
    ensure!(sc.bilinear == ALPHA, "bilinear table differs");
    let (_, beta) = projection_tables();
    ensure!(beta.entries == BETA, "beta table differs");
    let t = trilinear_table(1).map_err(err)?;
    for p in 0..7 {
        for r in 0..7 {
            for s in 0..7 {
                ensure!(t.entries[p][r][s] == TRILINEAR_BY_THIRD[s][p][r], "trilinear entry ({p},{r},{s}) differs");
            }
        }
    }
    Ok("49 + 49 + 343 entries equal".into())
}

fn module_basis_table() -> Outcome {
    let basis = module_basis();
    ensure!(basis.len() == 21, "{} basis vectors", basis.len());
    for (k, (got, terms)) in basis.iter().zip(MODULE_BASIS).enumerate() {
        let mut want = ExtSquareElement::zero(6);
        for &(c, i, j) in terms {
            let (a, b) = (weight_index(6, i).unwrap(), weight_index(6, j).unwrap());
            want.coeffs[pair_index(6, a, b)] = Q::from_integer(c.into());
        }
        ensure!(*got == want, "basis vector {} differs", k + 1);
    }
    Ok("21 vectors equal".into())
}

fn gl5() -> Outcome {
    let r = gl5_crosscheck().map_err(err)?;
    ensure!(r.lambda_alpha != "0" && r.lambda_beta != "0", "zero scalar");
    Ok(format!("lambda_alpha = {}, lambda_beta = {}", r.lambda_alpha, r.lambda_beta))
}

fn counts() -> Outcome {
    let rows = count_types(7).map_err(err)?;
    let types: Vec<usize> = rows.iter().map(|r| r.total).collect();
    let monos: Vec<usize> = rows.iter().map(|r| r.monomials).collect();
    ensure!(types == [1, 1, 2, 5, 13, 38, 113], "types {types:?}");
    ensure!(monos == [1, 1, 6, 45, 510, 7245, 126630], "monomials {monos:?}");
    let per_type = |d, o| -> Result<Vec<usize>, String> {
        Ok(MonomialSpace::new(d, o).map_err(err)?.types().iter().map(|t| t.count).collect())
    };
    ensure!(per_type(5, OpSet::Binary)? == [60, 15, 30], "binary degree 5 types");
    ensure!(per_type(7, OpSet::Ternary)? == [2520, 1260, 1260, 630, 630, 1260], "ternary degree 7 types");
    ensure!(per_type(4, OpSet::Mixed)? == [12, 12, 3, 12, 6], "mixed degree 4 types");
    Ok(format!("types {types:?}, monomials {monos:?}"))
}

fn search(ops: OpSet, degree: usize) -> Result<SearchReport, String> {
    let r = run_search(&SearchConfig::new(degree, ops)).map_err(err)?;
    ensure!(r.mismatches.is_empty(), "{ops} degree {degree}: {:?}", r.mismatches);
    Ok(r)
}

fn summary(r: &SearchReport) -> String {
    format!(
        "{}{}: {}/{}/{}/{}",
        &r.config.opset.to_string()[..1],
        r.config.degree,
        r.rank,
        r.nullity,
        r.known_rank,
        r.new_dim
    )
}

fn record_poly(name: &str, space: &MonomialSpace) -> Result<Poly, String> {
    corpus_record(name).and_then(|r| r.poly(space)).map_err(err)
}

fn refs(v: &[Poly]) -> Vec<&Poly> {
    v.iter().collect()
}

/// Rank of the module of `polys` over `baseline`.
fn rank_with(baseline: &ModuleSpan, polys: &[&Poly]) -> usize {
    let mut s = baseline.clone();
    for p in polys {
        s.add_poly_module(p);
    }
    s.rank()
}

fn big_residues(fp: Fp, v: &[BigInt]) -> SparseVec {
    let p = BigInt::from(fp.p());
    v.iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(m, x)| (m, ((x % &p + &p) % &p).to_u32().unwrap()))
        .filter(|&(_, x)| x != 0)
        .collect()
}

fn binary_pipeline() -> Outcome {
    let fp = Fp::new(101).unwrap();
    let mut lines = Vec::new();

    let s4 = MonomialSpace::new(4, OpSet::Binary).map_err(err)?;
    let (r4, base4) = run_search_in(&s4, &SearchConfig::new(4, OpSet::Binary)).map_err(err)?;
    ensure!(r4.mismatches.is_empty(), "degree 4: {:?}", r4.mismatches);
    let g = r4.generators[0].poly(&s4).map_err(err)?;
    ensure!(rank_with(&base4, &[&g]) == 5, "recovered identity does not generate the nullspace");
    let m = record_poly("malcev", &s4)?;
    ensure!(rank_with(&base4, &[&g, &m]) == 5, "recovered identity is not the Malcev identity");
    lines.push(summary(&r4));

    let s5 = MonomialSpace::new(5, OpSet::Binary).map_err(err)?;
    let (r5, base5) = run_search_in(&s5, &SearchConfig::new(5, OpSet::Binary)).map_err(err)?;
    ensure!(r5.mismatches.is_empty(), "degree 5: {:?}", r5.mismatches);
    ensure!(r5.consequence_rank == 61, "Malcev consequences {}", r5.consequence_rank);
    // the short generator comes from the reduced lattice basis, scanned by norm
    let alg = AlgebraStructure::new(1).map_err(err)?;
    let lll = shortest_identities(&s5, &alg, 1, 100, Delta::default()).map_err(err)?;
    ensure!(lll.len() == 71, "lattice basis of size {}", lll.len());
    let cands: Vec<SparseVec> = lll.iter().map(|v| big_residues(fp, v)).collect();
    let mut scan = base5.clone();
    let used = scan.module_generators(&cands);
    ensure!(used.len() == 1 && scan.rank() == 71, "lattice scan used {used:?}, rank {}", scan.rank());
    let gen = &lll[used[0].0];
    let gen_poly = Poly::from_pairs(&s5, gen.iter().enumerate().map(|(m, x)| (m, x.to_i64().unwrap())));
    // the generator found is equivalent to the 18-term identity with unit coefficients
    let k = corpus_record("k18").map_err(err)?;
    ensure!(k.terms == 18 && k.list.terms.iter().all(|(c, _)| c.abs() == 1), "k18 is not an 18-term ±1 identity");
    let holds = verify_identity_integer(&k.list, &alg, 1000, 3, 9).map_err(err)?.holds;
    ensure!(holds, "k18 fails over the integers");
    let kp = k.poly(&s5).map_err(err)?;
    ensure!(
        rank_with(&base5, &[&kp]) == 71 && rank_with(&base5, &[&kp, &gen_poly]) == 71,
        "generator not equivalent to the 18-term identity"
    );
    lines.push(format!(
        "{} (one generator, {} terms, equivalent to the 18-term ±1 identity)",
        summary(&r5),
        gen_poly.len()
    ));

    for d in [6, 7] {
        let r = search(OpSet::Binary, d)?;
        ensure!(r.new_dim == 0, "degree {d} new {}", r.new_dim);
        lines.push(summary(&r));
    }
    Ok(lines.join("; "))
}

fn lemma_h_k() -> Outcome {
    let fp = Fp::new(101).unwrap();
    let s5 = MonomialSpace::new(5, OpSet::Binary).map_err(err)?;
    let (cons, _) = consequence_polys(&s5).map_err(err)?;
    let h = record_poly("filippov_h", &s5)?;
    let k = record_poly("k18", &s5)?;
    let with = |p: &Poly| -> Vec<Poly> { std::iter::once(p.clone()).chain(cons.iter().cloned()).collect() };
    ensure!(span_membership(&s5, fp, &h, &with(&k)), "h not in span(k, Malcev consequences)");
    ensure!(span_membership(&s5, fp, &k, &with(&h)), "k not in span(h, Malcev consequences)");
    ensure!(!span_membership(&s5, fp, &k, &cons), "k already follows from the Malcev identity");
    Ok("h ∈ span(k, M) and k ∈ span(h, M); k ∉ span(M)".into())
}

fn ternary_pipeline() -> Outcome {
    let s5 = MonomialSpace::new(5, OpSet::Ternary).map_err(err)?;
    let (r5, base5) = run_search_in(&s5, &SearchConfig::new(5, OpSet::Ternary)).map_err(err)?;
    ensure!(r5.mismatches.is_empty(), "degree 5: {:?}", r5.mismatches);
    let single = r5.single_generator.as_ref().or(r5.generators.first()).ok_or("no generator")?;
    let g = single.poly(&s5).map_err(err)?;
    let der = record_poly("ternary_derivation", &s5)?;
    ensure!(rank_with(&base5, &[&der]) == 30 && rank_with(&base5, &[&g]) == 30, "derivation identity does not generate");

    let s7 = MonomialSpace::new(7, OpSet::Ternary).map_err(err)?;
    let (r7, base7) = run_search_in(&s7, &SearchConfig::new(7, OpSet::Ternary)).map_err(err)?;
    ensure!(r7.mismatches.is_empty(), "degree 7: {:?}", r7.mismatches);
    let t = corpus_record("t141").map_err(err)?;
    let v = verify_identity_integer(&t.list, &AlgebraStructure::new(1).map_err(err)?, 1000, 7, 9).map_err(err)?;
    ensure!(v.holds, "141-term identity fails: {:?}", v.witness);
    let gain = rank_with(&base7, &[&t.poly(&s7).map_err(err)?]) - base7.rank();
    ensure!(gain == 42, "141-term identity adds {gain}");
    Ok(format!("{}; {}; 141-term identity holds in 1000 trials and adds {gain}", summary(&r5), summary(&r7)))
}

const MIXED_RCF: [[i64; 6]; 5] = [
    [1, 0, 0, 0, 0, -1],
    [0, 1, 0, 0, 0, 1],
    [0, 0, 1, 0, 0, -1],
    [0, 0, 0, 1, 0, -1],
    [0, 0, 0, 0, 1, 1],
];

fn mixed_pipeline() -> Outcome {
    let fp = Fp::new(101).unwrap();
    let alg = AlgebraStructure::new(-30).map_err(err)?;
    let mut lines = Vec::new();

    let s3 = MonomialSpace::new(3, OpSet::Mixed).map_err(err)?;
    let fill = fill_and_reduce(&s3, &alg, fp, 1, 100);
    let want: Vec<Vec<u32>> = MIXED_RCF.iter().map(|r| r.iter().map(|&x| fp.from_i64(x)).collect()).collect();
    ensure!(fill.echelon.rref() == want, "row canonical form differs");
    let r3 = search(OpSet::Mixed, 3)?;
    let j = record_poly("mixed_jacobi", &s3)?;
    ensure!(r3.generators.len() == 1 && r3.generators[0].poly(&s3).map_err(err)? == j, "generator is not the mixed Jacobi identity");
    lines.push(summary(&r3));

    let s4 = MonomialSpace::new(4, OpSet::Mixed).map_err(err)?;
    let (r4, base4) = run_search_in(&s4, &SearchConfig::new(4, OpSet::Mixed)).map_err(err)?;
    ensure!(r4.mismatches.is_empty(), "degree 4: {:?}", r4.mismatches);
    let known: Vec<Poly> = ["malcev", "ly_a", "ly_b"].iter().map(|n| record_poly(n, &s4)).collect::<Result<_, _>>()?;
    let found: Vec<Poly> = r4.generators.iter().map(|g| g.poly(&s4)).collect::<Result<_, _>>().map_err(err)?;
    let all: Vec<Poly> = known.iter().chain(&found).cloned().collect();
    ensure!(
        rank_with(&base4, &refs(&known)) == 24 && rank_with(&base4, &refs(&all)) == 24,
        "three generators not equivalent to the Malcev and two degree-4 identities"
    );
    lines.push(format!("{} via {} generators", summary(&r4), r4.generators.len()));

    let s5 = MonomialSpace::new(5, OpSet::Mixed).map_err(err)?;
    let (r5, base5) = run_search_in(&s5, &SearchConfig::new(5, OpSet::Mixed)).map_err(err)?;
    ensure!(r5.mismatches.is_empty(), "degree 5: {:?}", r5.mismatches);
    ensure!(r5.consequence_rank == 341 && r5.known_rank == 367, "consequences {}/{}", r5.consequence_rank, r5.known_rank);
    let single = r5.single_generator.as_ref().ok_or("no single generator")?.poly(&s5).map_err(err)?;
    let m31 = record_poly("m31", &s5)?;
    ensure!(
        rank_with(&base5, &[&single]) == 387 && rank_with(&base5, &[&m31]) == 387,
        "generator not equivalent to the 31-term identity"
    );
    lines.push(summary(&r5));

    let r6 = search(OpSet::Mixed, 6)?;
    ensure!(r6.lifted == 300, "{} liftings", r6.lifted);
    lines.push(format!("{} from {} liftings", summary(&r6), r6.lifted));
    Ok(lines.join("; "))
}

fn properties() -> Outcome {
    // every shipped identity holds in 1000 integer trials
    for rec in corpus() {
        let alg = AlgebraStructure::new(default_scale(rec.opset)).map_err(err)?;
        let v = verify_identity_integer(&rec.list, &alg, 1000, 11, 9).map_err(err)?;
        ensure!(v.holds, "{} fails: {:?}", rec.name, v.witness);
    }
    let fp = Fp::new(101).unwrap();
    let mut runs = 0;
    for (ops, degrees) in [(OpSet::Binary, vec![2, 3, 4, 5]), (OpSet::Ternary, vec![3, 5]), (OpSet::Mixed, vec![3, 4, 5])] {
        for d in degrees {
            let space = MonomialSpace::new(d, ops).map_err(err)?;
            let alg = AlgebraStructure::new(default_scale(ops)).map_err(err)?;
            let ranks: Vec<usize> = (1..=3).map(|seed| fill_and_reduce(&space, &alg, fp, seed, 100).rank()).collect();
            ensure!(ranks.iter().all(|&r| r == ranks[0]), "{ops} {d}: ranks {ranks:?} across seeds");
            let q = rational_rank(&space, &alg, 1, 30, 9).map_err(err)?;
            ensure!(q == ranks[0], "{ops} {d}: rank {} over F_101, {q} over Q", ranks[0]);
            runs += 1;
        }
    }
    // lattice reduction keeps the lattice; Hermite transforms are unimodular
    let mut rng = SeededRng::new(2024);
    for _ in 0..100 {
        let (r, c) = ((3 + rng.small_int(1)) as usize, (3 + rng.small_int(1)) as usize);
        let rows: Vec<Vec<BigInt>> = (0..r).map(|_| (0..c).map(|_| BigInt::from(rng.small_int(9))).collect()).collect();
        let a = IntMatrix::from_rows(c, &rows).map_err(err)?;
        let (h, u, _) = hnf_with_transform(&a);
        ensure!(u.mul(&a).map_err(err)? == h, "u·a differs from h");
        let det = leibniz(&u.to_rows());
        ensure!(det.abs().is_one(), "transform determinant {det}");
        let independent = (0..r.min(c)).map(|i| rows[i].clone()).collect::<Vec<_>>();
        if leibniz_rank_full(&independent) {
            let red = lll_reduce(&independent, Delta::default()).map_err(err)?;
            ensure!(same_lattice(&red, &independent), "LLL changed the lattice");
        }
    }
    Ok(format!("corpus holds; ranks agree across 3 seeds and with Q on {runs} runs; 100 HNF/LLL checks"))
}

// brute-force determinant by permutation expansion
fn leibniz(m: &[Vec<BigInt>]) -> BigInt {
    let n = m.len();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut total = BigInt::zero();
    loop {
        let inversions = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).filter(|&(i, j)| perm[i] > perm[j]).count();
        let mut term = if inversions % 2 == 0 { BigInt::one() } else { -BigInt::one() };
        for i in 0..n {
            term *= &m[i][perm[i]];
        }
        total += term;
        let Some(i) = (1..n).rev().find(|&i| perm[i - 1] < perm[i]) else { break };
        let j = (i..n).rev().find(|&j| perm[j] > perm[i - 1]).unwrap();
        perm.swap(i - 1, j);
        perm[i..].reverse();
    }
    total
}

// rows independent iff some maximal minor is nonzero; here rows <= cols and we try the leading square block
// and, failing that, all column subsets
fn leibniz_rank_full(rows: &[Vec<BigInt>]) -> bool {
    let (r, c) = (rows.len(), rows[0].len());
    let mut cols: Vec<usize> = (0..r).collect();
    loop {
        let sub: Vec<Vec<BigInt>> = rows.iter().map(|row| cols.iter().map(|&j| row[j].clone()).collect()).collect();
        if !leibniz(&sub).is_zero() {
            return true;
        }
        // next r-subset of 0..c
        let Some(i) = (0..r).rev().find(|&i| cols[i] < c - r + i) else { return false };
        cols[i] += 1;
        for k in i + 1..r {
            cols[k] = cols[k - 1] + 1;
        }
    }
}

fn seed_dependence() -> Outcome {
    // Row indices of particular nullspace vectors are not reproducible; the searches
    // compare subspaces by dimension. What is checked here is that the dimensions do
    // not move with the seed, and where the rank stops growing.
    let stall = SearchConfig::new(4, OpSet::Binary).stall;
    let mut reach = Vec::new();
    for seed in 1..=3 {
        let mut cfg = SearchConfig::new(4, OpSet::Binary);
        cfg.seed = seed;
        let r = run_search(&cfg).map_err(err)?;
        ensure!(r.rank == 10 && r.new_dim == 5, "seed {seed}: {}", summary(&r));
        reach.push(r.iterations - cfg.stall);
    }
    ensure!(reach.iter().all(|&k| k == 2), "rank 10 reached after iterations {reach:?}, expected 2");
    Ok(format!("seeds 1..3: rank 10 after iteration {reach:?}, then {stall} stable iterations; dimensions equal"))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("structure constants", structure_constants),
        ("module basis", module_basis_table),
        ("gl(5) cross-check", gl5),
        ("type and monomial counts", counts),
        ("binary pipeline", binary_pipeline),
        ("h and k generate the same consequences", lemma_h_k),
        ("ternary pipeline", ternary_pipeline),
        ("mixed pipeline", mixed_pipeline),
        ("property suites", properties),
        ("seed-dependent quantities", seed_dependence),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(run).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {:>2} PASS {name} ({secs:.1}s): {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL {name} ({secs:.1}s): {why}", i + 1);
            }
        }
    }
    if failed > 0 {
        println!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
}
