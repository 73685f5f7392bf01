//! Benchmark-only crate; see `benches/statistics.rs`.
