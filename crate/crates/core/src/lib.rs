//! Deterministic pattern-avoiding stack sorting for sock sequences.
//!
//! - [`sock`]: sequences, patterns, set partitions, multisets, containment.
//! - [`sorter`]: the σ-avoiding stack machine and witness constructions.
//! - [`enumeration`]: exhaustive pattern sweeps, sortability counts, cycles.
//! - [`series`]: exact power series and the generating functions for `s(n)`
//!   and `s(n, r)`.

pub mod enumeration;
pub mod error;
pub mod series;
pub mod sock;
pub mod sorter;

pub use error::{Error, Result};
pub use sock::{SetPartition, Sock, SockMultiset, SockPattern, SockSequence};
