//! Fill-and-reduce over `F_p`, consequence spaces of lifted identities, module
//! generators for new identities, exact integer verification and the lattice
//! search for short identities.

mod algebra;
mod corpus;
mod fill;
mod lattice;
mod module;
mod plans;
mod search;
mod verify;

pub use algebra::{eval_monomial, AlgebraStructure, Evaluator, FpVec, IntVec, DIM};
pub use corpus::{corpus, corpus_record, IdentityRecord};
pub use fill::{fill_and_reduce, integer_fill, rational_rank, FillResult, IntegerFill, RATIONAL_LIMIT};
pub use lattice::shortest_identities;
pub use module::{identity_order, lift_residues, residues, single_generator, sorted_nullspace, span_membership, ModuleSpan, SparseVec};
pub use plans::{consequence_plan, consequence_polys, lift_chain, same_degree_identities};
pub use search::{consequence_span, default_scale, expected, run_search, run_search_in, Expected, SearchConfig, SearchReport};
pub use verify::{verify_identity_integer, verify_identity_modular, VerifyReport, Witness};
