//! Seifert surgeries on the trefoil and the seiferters around them.
//!
//! The crate computes base orbifolds of twisted torus-knot surgeries from
//! boundary homology, classifies the results, decides hyperbolicity from
//! known rule tables and builds finite pieces of the Seifert surgery
//! network.

pub mod claims;
pub mod classify;
pub mod error;
pub mod fraction;
pub mod homology;
pub mod network;
pub mod seiferter;
pub mod sfs;
pub mod sweep;
pub mod torus_surgery;

pub use error::{Error, Result};
pub use fraction::Fraction;
pub use homology::CurveClass;
pub use seiferter::{KnotDesc, NamedKnot, SeiferterDesc, SurgeryVertex};
pub use sfs::{OrbifoldTriple, SfsClass};
pub use torus_surgery::TorusKnot;
