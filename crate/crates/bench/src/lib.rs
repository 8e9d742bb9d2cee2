//! Criterion benchmarks for the core crate; see `benches/combinatorics.rs`.
