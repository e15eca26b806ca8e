//! Criterion benchmarks for topolab live under `benches/`.
