//! Exact classification of finite two-generator p-groups of nilpotency
//! class two, their capability and 2-capability, and their 2-nilpotent
//! multipliers — computed both from tabulated closed forms and from first
//! principles (free-nilpotent collection plus integer-lattice Smith normal
//! form), with the two routes cross-checked.
//!
//! Modules:
//! - [`hall`]: normal-form arithmetic in the free group of rank 2 modulo γ₅,
//!   over the basic-commutator basis (collection engine).
//! - [`word`]: word syntax for generators and nested commutators, plus the
//!   relator-file grammar.
//! - [`lattice`]: Smith/Hermite normal forms over big integers and abelian
//!   invariants of lattice quotients.
//! - [`oracle`]: the from-scratch 2-nilpotent multiplier of any class-≤2
//!   two-generator presentation.
//! - [`groups`]: finite arithmetic in a parameter-tuple group (normal forms
//!   aⁱbʲcᵏ, orders, center, central quotients).
//! - [`theory`]: canonical forms, family tags, catalogue labels G1–G7 /
//!   K1–K14, capability predicates, closed multiplier forms, epicenter
//!   witnesses and membership tests.
//! - [`report`]: deterministic verification sweeps with JSONL/CSV output.

#![forbid(unsafe_code)]
// Error values carry the offending parameters/elements for diagnostics;
// they only travel on cold paths.
#![allow(clippy::result_large_err)]

pub mod groups;
pub mod hall;
pub mod lattice;
pub mod oracle;
pub mod report;
pub mod theory;
pub mod word;

pub use groups::{GroupElement, GroupParams};
pub use lattice::{AbelianInvariants, IntLattice};
pub use oracle::Presentation;
pub use theory::{Classification, Family, Label};
pub use word::{Generator, Word};
