//! Criterion benchmarks for `tiptree-core` live in `benches/`.
