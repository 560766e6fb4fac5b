//! Fuzzy-set operation algebra with a statement DSL and a mechanical
//! verifier for inclusion relations.
//!
//! The pieces, bottom up:
//!
//! * [`set`] — membership degrees, finite universes, fuzzy sets, and
//!   ε-relaxed inclusion/equality.
//! * [`ops`] — the pointwise operations (union, intersection, algebraic and
//!   bounded sum/product, bounded difference/quotient, scaling, powers) and
//!   their scalar kernels.
//! * [`dsl`] — a small expression language for set terms, relation
//!   statements (`lhs <= rhs given … equality_iff …`), and degree
//!   constraints, with a canonical printer.
//! * [`registry`] — a fixed catalog of inclusion relations and scalar
//!   inequalities, stored as DSL text, with parameter instantiation.
//! * [`verify`] — grid and random checking in degree space, equality-claim
//!   probing, witness search, and a full-catalog suite with deterministic
//!   reports.
//! * [`file`] — the JSON sets-file format used by the CLI.
//!
//! Because every operation is pointwise, a relation between set expressions
//! holds on all fuzzy sets over all universes exactly when the corresponding
//! kernel inequality holds on all degree tuples; the verifier exploits that
//! reduction and enumerates degree space directly.

pub mod dsl;
pub mod file;
pub mod ops;
pub mod registry;
pub mod set;
pub mod verify;

pub use dsl::{Expr, Relation, RelationStatement};
pub use ops::{BinaryOp, OpError, QuotientMode};
pub use set::{FuzzySet, MembershipDegree, SetError, Tolerance, Universe};
