//! Quantum K-theory of flag manifolds, computed combinatorially.
//!
//! The crate builds root systems and Weyl groups, the quantum Bruhat graph
//! and its parabolic and degree-filtered variants, quantum
//! Lakshmibai-Seshadri paths and their quantum Bruhat path models, the
//! Chevalley formula in `QK_T(G/P)`, and K-theoretic Gromov-Witten
//! invariants by three independent routes.

pub mod error;
pub mod rootsys;
pub mod weyl;
pub mod qbg;
pub mod flag;
pub mod qls;
pub mod ring;
pub mod invariants;
pub mod checks;
pub mod cli;

pub use error::{Error, Result};
