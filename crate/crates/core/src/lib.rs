//! Exact computer algebra for free group algebras inside filtered rings.
//!
//! The crate is organised bottom-up:
//!
//! * [`exactnum`]: integers, rationals, prime fields and valuations on the integers.
//! * [`freeobj`]: words in free monoids and free groups.
//! * [`ncseries`]: truncated noncommutative power series with a weighted-degree filtration.
//! * [`fox`]: the Magnus–Fox embedding of a free group algebra and the Magnus ordering.
//! * [`ogroup`]: concrete bi-ordered groups, Archimedean classes and convex jumps.
//! * [`metab`]: the free metabelian group of rank two and its rational group algebra.
//! * [`filtered`]: filtered ring models, leading terms and the freeness certifiers.
//!
//! Every certifier works at an explicit finite scale and records that scale in
//! its [`Certificate`].

pub mod certificate;
pub mod error;
pub mod exactnum;
pub mod filtered;
pub mod fox;
pub mod freeobj;
pub mod linalg;
pub mod metab;
pub mod ncseries;
pub mod ogroup;

pub use certificate::{Certificate, Status};
pub use error::{Error, Result};
pub use exactnum::{BigInt, CoefficientRing, Eta, Extended, Rational};
pub use freeobj::{Alphabet, GroupWord, Letter, Word};
