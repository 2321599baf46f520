//! Kl- and EM-morphisms of monads, the transformations between them, and
//! Kleisli liftings.

mod em;
mod kl;
mod lifting;
mod transform;

pub use em::{check_em_classical, check_em_noiter, check_emm, check_emu, EMMorphismCell};
pub use kl::{
    check_kl_classical, check_kl_morphism_cat, check_kl_noiter, check_klm, check_klu, compose_kl,
    KlMorphismCell,
};
pub use lifting::{
    check_lifting, family_from_lifting, kleisli_lifting_from_family, lifting_candidate, KleisliLifting,
};
pub use transform::{
    check_em_transformation_classical, check_em_transformation_noiter, check_kl_transformation_classical,
    check_kl_transformation_noiter, EMTransformationCell, KlTransformationCell,
};

#[cfg(test)]
mod tests;
