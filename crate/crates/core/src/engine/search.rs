use super::algebra::AlgebraStructure;
use super::corpus::{corpus_record, IdentityRecord};
use super::fill::fill_and_reduce;
use super::module::{lift_residues, single_generator, sorted_nullspace, ModuleSpan, SparseVec};
use super::plans::{consequence_polys, same_degree_identities};
use super::verify::verify_identity_integer;
use crate::error::arg;
use crate::exactla::Fp;
use crate::freealg::{MonomialSpace, OpSet, MAX_DEGREE};
use crate::Result;
use serde::Serialize;
use std::time::Instant;

#[derive(Clone, Debug, Serialize)]
pub struct SearchConfig {
    pub degree: usize,
    pub opset: OpSet,
    pub prime: u32,
    pub seed: u64,
    pub stall: usize,
    pub scale: i64,
}

impl SearchConfig {
    /// Prime 101, stall 100, scale 1 (or -30 when the binary and ternary products mix).
    pub fn new(degree: usize, opset: OpSet) -> Self {
        SearchConfig { degree, opset, prime: 101, seed: 1, stall: 100, scale: default_scale(opset) }
    }
}

pub fn default_scale(opset: OpSet) -> i64 {
    if opset == OpSet::Mixed {
        -30
    } else {
        1
    }
}

/// Published dimensions for one run.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Expected {
    pub monomials: usize,
    pub rank: usize,
    pub nullity: usize,
    pub consequence_rank: usize,
    pub known_rank: usize,
    pub new_dim: usize,
    pub generators: Option<usize>,
}

const fn ex(monomials: usize, rank: usize, cons: usize, known: usize, generators: Option<usize>) -> Expected {
    let nullity = monomials - rank;
    Expected { monomials, rank, nullity, consequence_rank: cons, known_rank: known, new_dim: nullity - known, generators }
}

pub fn expected(opset: OpSet, degree: usize) -> Option<Expected> {
    Some(match (opset, degree) {
        (OpSet::Binary, 4) => ex(15, 10, 0, 0, Some(1)),
        (OpSet::Binary, 5) => ex(105, 34, 61, 61, Some(1)),
        (OpSet::Binary, 6) => ex(945, 120, 825, 825, Some(0)),
        (OpSet::Binary, 7) => ex(10395, 454, 9941, 9941, Some(0)),
        (OpSet::Ternary, 5) => ex(90, 60, 0, 0, Some(1)),
        (OpSet::Ternary, 7) => ex(7560, 2793, 4410, 4410, None),
        (OpSet::Mixed, 3) => ex(6, 5, 0, 0, Some(1)),
        (OpSet::Mixed, 4) => ex(45, 21, 10, 10, Some(3)),
        (OpSet::Mixed, 5) => ex(510, 123, 341, 367, Some(1)),
        (OpSet::Mixed, 6) => ex(7245, 751, 6480, 6480, None),
        _ => return None,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct SearchReport {
    pub config: SearchConfig,
    pub monomials: usize,
    pub rank: usize,
    pub nullity: usize,
    pub iterations: usize,
    /// Polynomials lifted from lower degree (before and after removing duplicates).
    pub lifted: usize,
    pub lifted_distinct: usize,
    pub consequence_rank: usize,
    /// Consequences together with the known identities of this degree.
    pub known_rank: usize,
    pub new_dim: usize,
    pub generators: Vec<IdentityRecord>,
    /// Rank gained by each generator, in order.
    pub generator_gains: Vec<usize>,
    /// A nullspace vector generating all new identities by itself, looked for when
    /// the in-order scan needs more than one.
    pub single_generator: Option<IdentityRecord>,
    /// Left out of the JSON so that equal configurations give identical reports.
    #[serde(skip)]
    pub wall_seconds: f64,
    pub expected: Option<Expected>,
    pub mismatches: Vec<String>,
}

/// Largest space in which a single generator is searched for.
const SINGLE_SEARCH_LIMIT: usize = 1000;

impl SearchReport {
    /// Size of the smallest generating set found.
    pub fn generator_count(&self) -> usize {
        if self.single_generator.is_some() {
            1
        } else {
            self.generators.len()
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// Fill-and-reduce, consequences of lower-degree identities, and module generators
/// for the remaining identities.
pub fn run_search(cfg: &SearchConfig) -> Result<SearchReport> {
    if !(2..=MAX_DEGREE).contains(&cfg.degree) {
        return arg(format!("degree must lie in 2..={MAX_DEGREE}"));
    }
    let space = MonomialSpace::new(cfg.degree, cfg.opset)?;
    Ok(run_search_in(&space, cfg)?.0)
}

/// [`run_search`] in a prepared space; also returns the span of the consequences
/// and known identities, before any new generator was added.
pub fn run_search_in<'a>(space: &'a MonomialSpace, cfg: &SearchConfig) -> Result<(SearchReport, ModuleSpan<'a>)> {
    if space.degree() != cfg.degree || space.opset() != cfg.opset {
        return arg(format!("search for {} degree {} in a {} degree-{} space", cfg.opset, cfg.degree, space.opset(), space.degree()));
    }
    let start = Instant::now();
    let fp = Fp::new(cfg.prime)?;
    let alg = AlgebraStructure::new(cfg.scale)?;
    if space.is_empty() {
        return arg(format!("there are no {} monomials of degree {}", cfg.opset, cfg.degree));
    }
    let fill = fill_and_reduce(space, &alg, fp, cfg.seed, cfg.stall);
    let nullity = fill.nullity();

    let (mut span, lifted_distinct, lifted_raw) = consequence_span(space, fp, Some(nullity))?;
    let consequence_rank = span.rank();
    for name in same_degree_identities(cfg.opset, cfg.degree) {
        span.add_poly_module(&corpus_record(name)?.poly(space)?);
    }
    let known_rank = span.rank();

    let baseline = span.clone();
    let mut generators = Vec::new();
    let mut gains = Vec::new();
    let mut single = None;
    if known_rank < nullity {
        let candidates = sorted_nullspace(&fill.echelon);
        for (k, (idx, gain)) in span.module_generators(&candidates).into_iter().enumerate() {
            let name = format!("{}{}_new{}", cfg.opset, cfg.degree, k + 1);
            generators.push(lifted_record(&name, space, fp, &candidates[idx], &alg, cfg.seed));
            gains.push(gain);
        }
        if generators.len() > 1 && space.len() <= SINGLE_SEARCH_LIMIT {
            single = single_generator(&baseline, &candidates, nullity).map(|idx| {
                let name = format!("{}{}_single", cfg.opset, cfg.degree);
                lifted_record(&name, space, fp, &candidates[idx], &alg, cfg.seed)
            });
        }
    }

    let mut report = SearchReport {
        config: cfg.clone(),
        monomials: space.len(),
        rank: fill.rank(),
        nullity,
        iterations: fill.iterations,
        lifted: lifted_raw,
        lifted_distinct,
        consequence_rank,
        known_rank,
        new_dim: nullity - known_rank,
        generators,
        generator_gains: gains,
        single_generator: single,
        wall_seconds: start.elapsed().as_secs_f64(),
        expected: expected(cfg.opset, cfg.degree),
        mismatches: Vec::new(),
    };
    report.mismatches = mismatches(&report);
    Ok((report, baseline))
}

/// A nullspace vector as an identity record. The source says whether the integer lift
/// also vanishes over the integers (checked on random arguments), or only mod `p`.
fn lifted_record(name: &str, space: &MonomialSpace, fp: Fp, v: &SparseVec, alg: &AlgebraStructure, seed: u64) -> IdentityRecord {
    let mut rec = IdentityRecord::from_poly(name, "", space, &lift_residues(space, fp, v));
    let exact = verify_identity_integer(&rec.list, alg, 20, seed, 9).is_ok_and(|r| r.holds);
    rec.source = if exact { "nullspace search, holds over Z".into() } else { format!("nullspace search, holds mod {}", fp.p()) };
    rec
}

/// The module of consequences lifted from lower degree, with the number of
/// distinct and of all lifted polynomials. `cap` is passed to [`ModuleSpan::with_cap`].
pub fn consequence_span(space: &MonomialSpace, fp: Fp, cap: Option<usize>) -> Result<(ModuleSpan<'_>, usize, usize)> {
    let (lifted, raw) = consequence_polys(space)?;
    let mut span = ModuleSpan::new(space, fp);
    if let Some(c) = cap {
        span = span.with_cap(c);
    }
    for p in &lifted {
        span.add_poly_module(p);
    }
    Ok((span, lifted.len(), raw))
}

fn mismatches(r: &SearchReport) -> Vec<String> {
    let Some(e) = r.expected else { return Vec::new() };
    let mut out = Vec::new();
    let mut check = |what: &str, got: usize, want: usize| {
        if got != want {
            out.push(format!("{what}: got {got}, published {want}"));
        }
    };
    check("monomials", r.monomials, e.monomials);
    check("rank", r.rank, e.rank);
    check("nullspace", r.nullity, e.nullity);
    check("consequences", r.consequence_rank, e.consequence_rank);
    check("consequences with known identities", r.known_rank, e.known_rank);
    check("new identities", r.new_dim, e.new_dim);
    if let Some(g) = e.generators {
        check("generators", r.generator_count(), g);
    }
    out
}
