//! Criterion benchmarks for termspace-core live in `benches/`.
