//! Benchmarks for slicereg-core live under `benches/`.
