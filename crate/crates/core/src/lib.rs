//! Exact computation in the group of polynomial automorphisms of the plane
//! with Jacobian 1, using its structure as an amalgamated product of the
//! symplectic affine group and the triangular (Jonquières) group over their
//! intersection.

pub mod amalgam;
pub mod cli;
pub mod error;
pub mod exactnum;
pub mod paperlab;
pub mod planeauto;

pub use error::{Error, Result};
