//! Distributive laws of a monad `S` over a monad `T` on the same category,
//! in monoidal, extension, algebra and mixed presentations.

mod algext;
mod alpha;
mod cell;
mod monoidal;
mod noiter;

pub use algext::{
    check_distlaw_algebra_ext, check_distlaw_inbetween_2cat, check_distlaw_inbetween_cat, DistLawAlgebraExt,
};
pub use alpha::{alpha_to_lambda, check_alpha_conditions, lambda_to_alpha, AlgebraFormLaw};
pub use cell::DistLawCell;
pub use monoidal::{check_distlaw_monoidal, compose_monads};
pub use noiter::{
    check_distlaw_noiter_2cat, check_distlaw_noiter_2cat_with, check_distlaw_noiter_cat,
    check_distlaw_noiter_cat_with, derive_naturality, DistLawProbes, Naturality,
};
