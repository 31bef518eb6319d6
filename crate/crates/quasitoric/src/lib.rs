//! Exact arithmetic for quasi-toric relations among homogeneous trivariate
//! forms over cyclotomic fields.
//!
//! A *quasi-toric relation* of type `(p0, p1, p2)` for a coefficient triple
//! `(F0, F1, F2)` is a triple of nonzero forms `(h0, h1, h2)` with
//!
//! ```text
//! F0 * h0^p0 + F1 * h1^p1 + F2 * h2^p2 = 0.
//! ```
//!
//! The crate provides, with exact rational-cyclotomic arithmetic throughout:
//!
//! - [`poly`]: arithmetic on scalars in Q(zeta_n) and homogeneous forms in
//!   `x0, x1, x2`, including parsing, printing, GCDs, exact division,
//!   square-free splitting, and m-th roots;
//! - [`types`]: the multiplicative decomposition of a type triple and the
//!   associated reduced type and weights;
//! - [`relation`]: problem instances, relation verification, and the
//!   equivalence relation `u^{w_i} g_i = v^{w_i} h_i` with explicit
//!   witnesses;
//! - [`correspond`]: transport of relations between a type and its reduced
//!   type, and the dictionary between reduced relations and rational points
//!   on an associated plane curve;
//! - [`families`]: decision and sampling procedures for the two infinite
//!   family constructions on reduced types;
//! - [`search`]: bounded brute-force enumeration over coefficient grids and
//!   completion of the determined component in the `(1, p, p)` case;
//! - [`document`]: the TOML document formats used on disk;
//! - [`cli`]: the `qtr` command-line interface as a library function.

pub mod cli;
pub mod correspond;
pub mod document;
pub mod families;
pub mod poly;
pub mod relation;
pub mod search;
pub mod types;

pub use correspond::{CorrespondError, CurvePoint, CurveSpec};
pub use families::{
    FamilyCase, FamilyError, FamilyMember, FamilyParameters, FamilySample,
    FamilyStatus, FamilyVerdict,
};
pub use poly::{Form, FormError, FormRatio, Mono, Scalar};
pub use relation::{
    EquivalenceWitness, ProblemInstance, ProblemViolation, Relation, RelationError,
};
pub use search::{SearchError, SearchOutcome, SearchSpec};
pub use types::{TypeDecomposition, TypeError, TypeTriple};
