//! Benchmarks for `stringy-core` live in `benches/`; run them with
//! `cargo bench -p stringy-bench`.
