//! Criterion benchmarks for the exact-rank kernels; see `benches/`.
