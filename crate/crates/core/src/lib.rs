//! Graded ideals of finite graded commutative rings.
//!
//! The crate builds finite rings graded by finite abelian groups, enumerates
//! their graded ideals, decides graded (weakly) S-primary and related
//! properties with replayable certificates, and audits a catalogue of
//! statements about these properties by exhaustive search over a corpus of
//! small rings. Exact Gaussian-integer and integer-polynomial arithmetic is
//! provided for a handful of facts about `Z[i]` and `Z[X]`.

pub mod classify;
pub mod cli;
pub mod error;
pub mod euclid;
pub mod ideal;
pub mod localization;
pub mod morphism;
pub mod mult_set;
pub mod ring;
pub mod theorems;

pub use error::{Error, Result};
pub use ideal::Ideal;
pub use localization::Localization;
pub use morphism::GradedHom;
pub use mult_set::MultSet;
pub use ring::{Elem, Grade, GradeGroup, GradedRing, RingSpec};
