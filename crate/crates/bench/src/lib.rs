//! Benchmark-only crate: see `benches/kernels.rs`. The library target exists
//! so the package builds on its own; all substance lives in `chromatic-core`.
