//! Criterion benchmarks for the paritydeg kernels; see `benches/`.
