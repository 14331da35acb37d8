//! Criterion benchmarks for the exact kernels live under `benches/`.
