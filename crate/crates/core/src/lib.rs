//! Exact computations with the Frobenius category of monomorphisms between
//! free modules over `S = k[x]` localized at `(x)` whose cokernels are killed
//! by a fixed non-unit `omega`, the equivalent category of matrix
//! factorizations of `omega`, and the stable module category of
//! `R = S/(omega)` modelling its singularity category.
//!
//! Layers, bottom up:
//!
//! - [`field`], [`poly`], [`scalar`]: exact arithmetic in k and S.
//! - [`linalg`]: matrices over S, Smith normal form, exact and mod-omega solvers.
//! - [`moncat`]: objects, morphisms and conflations of the monomorphism
//!   category, presentations, null-homotopies, shift, cone and stable Homs.
//! - [`paircat`]: matrix factorizations, the comparison functor and
//!   Krull-Schmidt decomposition.
//! - [`singcat`]: modules over R, the cokernel functor and its checks.
//! - [`cli`]: JSON/text I/O and command dispatch used by the `stablemon` binary.

pub mod cli;
pub mod error;
pub mod field;
pub mod linalg;
pub mod moncat;
pub mod paircat;
pub mod poly;
pub mod scalar;
pub mod singcat;
pub mod text;

pub use error::{Error, Result};
pub use field::FieldSpec;
pub use linalg::LocalMatrix;
pub use moncat::{Conflation, HomotopyWitness, MonMorphism, MonObject};
pub use paircat::{PairHomotopyWitness, PairMorphism, PairObject};
pub use poly::Poly;
pub use scalar::{LocalScalar, OmegaSpec};
pub use singcat::{RModuleObject, StableHomReport};
