//! Exact computations for Pappus marked boxes, their morphed deformations
//! and the duality curves of the modular group representations they define.

pub mod boxes;
pub mod duality;
pub mod error;
pub mod export;
pub mod kernel;
pub mod lemmas;
pub mod morph;
pub mod poly;
pub mod scalar;

pub use error::{Error, Result};
pub use kernel::{Hom, HomLine, HomPoint, Mat3, ProjMap};
pub use poly::MultiPoly;
pub use scalar::Scalar;
