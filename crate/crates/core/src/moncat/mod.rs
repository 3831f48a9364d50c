//! The monomorphism category of free S-modules with cokernels killed by
//! omega, its exact (Frobenius) structure and its stable category.

pub mod axioms;
pub mod exact;
pub mod frobenius;
mod morphism;
mod object;
pub mod random;
pub mod stable;

pub use exact::{
    cokernel_of_inflation, conflation_of_deflation, conflation_of_inflation, find_retraction,
    find_section, kernel_of_deflation, pullback_deflation, pushout_inflation, Conflation,
    Pullback, Pushout,
};
pub use frobenius::{injective_presentation, projective_presentation};
pub use morphism::MonMorphism;
pub use object::{Ambient, MonObject};
pub use stable::{
    cone, factor_through_projective, is_null_homotopic, is_projective_object, shift,
    shift_morphism, stable_hom_dimension, stable_hom_space, witness_from_factorization, Cone,
    HomotopyWitness, ProjectiveFactorization, StableHomSpace,
};
