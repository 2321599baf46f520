use crate::error::{Error, Result};
use crate::fincat::{compose, Arr, NatTrans};
use crate::monadcore::Monad;

/// A candidate distributive law of `S` over `T`: a family `λ a: S T a -> T S a`.
///
/// The family is stored raw; naturality is something the checkers test, not
/// something the type guarantees.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistLawCell {
    s: Monad,
    t: Monad,
    lambda: NatTrans,
}

impl DistLawCell {
    pub fn new(s: Monad, t: Monad, lambda: NatTrans) -> Result<Self> {
        if s.base() != t.base() {
            return Err(Error::shape("both monads must live on the same category"));
        }
        if *lambda.src() != compose(s.functor(), t.functor())?
            || *lambda.dst() != compose(t.functor(), s.functor())?
        {
            return Err(Error::shape("lambda must be a family S T a -> T S a"));
        }
        if !lambda.is_typed() {
            return Err(Error::shape("lambda components are not typed S T a -> T S a"));
        }
        Ok(DistLawCell { s, t, lambda })
    }

    pub fn from_components(s: Monad, t: Monad, components: Vec<Arr>) -> Result<Self> {
        let lambda = NatTrans::new(
            compose(s.functor(), t.functor())?,
            compose(t.functor(), s.functor())?,
            components,
        )?;
        DistLawCell::new(s, t, lambda)
    }

    /// The identity family for `S` over the identity monad.
    pub fn over_identity(s: &Monad) -> Self {
        DistLawCell {
            s: s.clone(),
            t: Monad::identity(s.base()),
            lambda: NatTrans::identity(s.functor()),
        }
    }

    /// The identity family for the identity monad over `T`.
    pub fn identity_over(t: &Monad) -> Self {
        DistLawCell {
            s: Monad::identity(t.base()),
            t: t.clone(),
            lambda: NatTrans::identity(t.functor()),
        }
    }

    pub fn s(&self) -> &Monad {
        &self.s
    }

    pub fn t(&self) -> &Monad {
        &self.t
    }

    pub fn lambda(&self) -> &NatTrans {
        &self.lambda
    }

    pub fn at(&self, a: crate::fincat::Obj) -> Arr {
        self.lambda.at(a)
    }
}
