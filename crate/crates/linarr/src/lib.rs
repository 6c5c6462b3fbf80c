//! Exact-arithmetic toolkit for the graded module of derivations of a
//! complex line arrangement: syzygy dimensions and generators, local
//! derivations attached to multiple points, deletion-restriction maps,
//! line covers of the multiple points, and a verification harness that
//! checks the structural identities on catalog and user-supplied inputs.

pub mod arrangement;
pub mod cover;
pub mod delres;
pub mod error;
pub mod harness;
pub mod linalg;
pub mod localder;
pub mod polyring;
pub mod report;
pub mod scalars;
pub mod syzygy;

pub use error::{Error, Result};
