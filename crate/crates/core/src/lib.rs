//! Exact chromatic polynomials and coefficient bounds for small graphs.
//!
//! The crate has three layers:
//!
//! * a graph layer ([`graph`], [`generate`], [`cycles`]) with loopless
//!   multigraphs, stable edge ids, deletion/contraction, and exhaustive
//!   circuit censuses;
//! * a polynomial layer ([`poly`], [`chromatic`]) computing chromatic
//!   polynomials by deletion–contraction, by brute-force coloring, and by
//!   broken-circuit subset enumeration, all with arbitrary-precision
//!   coefficients;
//! * a bounds layer ([`binomial`], [`bounds`]) with the classical and the
//!   improved upper bounds on coefficient magnitudes, plus [`corpus`] and
//!   [`verify`] harnesses that measure every claim against the exact values.
//!
//! Everything is deterministic: random graphs are seeded, reports serialize
//! with sorted keys, and repeated runs produce byte-identical output.

#![forbid(unsafe_code)]

pub mod binomial;
pub mod bounds;
pub mod chromatic;
pub mod corpus;
pub mod cycles;
pub mod error;
pub mod generate;
pub mod graph;
pub mod poly;
pub mod verify;

pub use bounds::{bound_report, BoundParams, BoundReport, BoundRow, EdgeChoice, SelectionMode};
pub use chromatic::{chromatic_polynomial, Solver};
pub use corpus::{Budgets, CorpusGraph, CorpusSpec, RandomSpec};
pub use cycles::{CycleCensus, Girth, MinorCensusReport};
pub use error::{Error, Result};
pub use graph::{Edge, EdgeId, Graph};
pub use poly::ChromaticPolynomial;
pub use verify::{run_suite, sweep, Suite, SuiteOutcome, SweepSummary, Witness};
