//! Restricted integer partitions, their q-series generating functions, and a
//! harness that checks closed forms against brute-force enumeration.

pub mod cli;
pub mod closed_forms;
pub mod dsl;
pub mod enumeration;
pub mod identities;
pub mod qobjects;
pub mod series;
