//! Monads in monoidal and extension form, the conversions between them,
//! pasting and extension operators, Kleisli categories, and algebras in
//! extension form.

mod algebra;
mod convert;
mod extensive;
mod kleisli;
mod monoidal;
mod pasting;

pub use algebra::{check_ext_algebra, record_algebra_morphism, ExtAlgebra};
pub use convert::{to_extensive, to_monoidal, Monad};
pub use extensive::{check_extensive_laws, extensive_keys, MonadExtensive};
pub use kleisli::{kleisli_category, KleisliCategory};
pub use monoidal::{check_monoidal_laws, MonadMonoidal};
pub use pasting::{
    left_ext_monad, left_pasting_apply, right_ext_monad, right_pasting_apply, PastingCell,
};
