//! Exact enumeration and verification of reduced words in free quasigroups.
//!
//! * [`euclid`]: division-algorithm traces indexing the exact recursion.
//! * [`enumeration`]: arbitrary-precision peri-Catalan numbers `P^s_n`.
//! * [`freewords`]: quasigroup terms, triality, and brute-force oracles.
//! * [`asymptotics`]: log-space recursion and growth diagnostics.

pub mod asymptotics;
pub mod cli;
pub mod enumeration;
pub mod error;
pub mod freewords;
pub mod euclid;

pub use error::{Error, Result};
