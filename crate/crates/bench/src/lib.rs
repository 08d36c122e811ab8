//! Criterion benchmarks for `lascoux-core`; see `benches/`.
