//! Criterion benchmarks for the certificate pipeline; see `benches/pipeline.rs`.
