//! Exact Kauffman skein calculus.

pub mod bmw;
pub mod coeff;
pub mod error;
pub mod handlebody;
pub mod linalg;
pub mod matching;
pub mod relations;
pub mod skein;
pub mod tangle;
pub mod young;

pub use coeff::{LaurentPoly, RatFunc};
pub use error::{Result, SkeinError};
pub use matching::BrauerMatching;
pub use skein::{Engine, SkeinElement};
pub use tangle::{Slice, TangleWord};
pub use young::{UpDownTableau, YoungDiagram};
