//! Functional graphs of polynomial maps `x -> x^n * h(x^((q-1)/m))` over finite fields.
//!
//! The crate predicts the complete functional graph of such a map from the
//! dynamics of its companion map `psi_f(x) = x^n * h(x)^((q-1)/m)` on the
//! m-th roots of unity, and checks every prediction against a brute-force
//! iteration oracle.
//!
//! Module map:
//!
//! - [`field`]: prime fields and small extension fields, discrete logs.
//! - [`poly`]: dense polynomials, the `x^n h(x^s)` decomposition, iteration.
//! - [`number_theory`]: Möbius function, multiplicative order, iterated gcd.
//! - [`graph`]: rooted trees in canonical form, elementary trees, graph summaries.
//! - [`oracle`]: exhaustive tabulation and functional graph extraction.
//! - [`structure`]: the companion-map dynamics and the closed-form predictions.
//! - [`report`], [`corpus`], [`dot`], [`commands`]: verification reports,
//!   instance generation, Graphviz output and the command-line front end.

pub mod commands;
pub mod corpus;
pub mod dot;
pub mod field;
pub mod graph;
pub mod number_theory;
pub mod oracle;
pub mod poly;
pub mod report;
pub mod structure;

pub use field::{FieldCtx, FieldElement, FieldError};
pub use graph::{Component, GraphSummary, RootedTree};
pub use poly::{IndexedForm, Polynomial};
pub use structure::{predict_full, MuMDynamics, PredictError};
