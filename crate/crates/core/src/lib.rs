//! Exact-arithmetic toolkit for finite dimensional quiver algebras:
//! structure constants over `Q`, `Q(zeta_n)` and `F_p`, Frobenius forms
//! and Nakayama automorphisms, skew group / smash / trivial extension
//! constructions, Dynkin type recognition via the Tits form, and the
//! finite-generation classification for self-injective radical-cube-zero
//! algebras.

pub mod algebra;
pub mod build;
pub mod constructions;
pub mod cycles;
pub mod error;
pub mod fg;
pub mod frobenius;
pub mod graphs;
pub mod group;
pub mod idempotents;
pub mod linalg;
pub mod quiver;
pub mod radical;
pub mod scalar;

pub use algebra::{Algebra, AlgebraMorphism, Element};
pub use build::{build_algebra, Presentation, Relation};
pub use error::{Error, Result};
pub use fg::{decide_fg, FgAnswer, FgOptions, FgVerdict};
pub use graphs::GraphType;
pub use quiver::{Arrow, BasisLabel, Quiver};
pub use scalar::{FieldDescriptor, Scalar};
