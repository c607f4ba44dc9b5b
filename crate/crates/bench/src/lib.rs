//! Benchmark-only package; see `benches/pipelines.rs`.
