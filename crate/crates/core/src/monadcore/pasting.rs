//! Pasting operators and the extension operators of a monad.
//!
//! A 2-cell `m: ts ⇒ u` determines a left pasting operator
//! `ϑ: f ⇒ sg  ↦  mg · tϑ : tf ⇒ ug` and a right pasting operator
//! `ϰ: h ⇒ kt  ↦  km · ϰs : hs ⇒ ku`. With `m = μ` these are the left and
//! right extension operators of the monad.

use super::extensive::MonadExtensive;
use super::monoidal::MonadMonoidal;
use crate::error::{Error, Result};
use crate::fincat::{compose, vcomp, whisker_left, whisker_right, Functor, NatTrans};

/// Configuration `s: a → b`, `t: b → c`, `u: a → c` with `m: ts ⇒ u`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PastingCell {
    s: Functor,
    t: Functor,
    u: Functor,
    m: NatTrans,
}

impl PastingCell {
    pub fn new(s: Functor, t: Functor, u: Functor, m: NatTrans) -> Result<Self> {
        let ts = compose(&t, &s)?;
        if *m.src() != ts || *m.dst() != u {
            return Err(Error::shape("pasting cell must be a 2-cell ts => u"));
        }
        Ok(PastingCell { s, t, u, m })
    }

    /// The configuration `(T, T, T, μ)` of a monad.
    pub fn of_monad(monad: &MonadMonoidal) -> Self {
        let t = monad.functor().clone();
        PastingCell {
            s: t.clone(),
            t: t.clone(),
            u: t,
            m: monad.mult().clone(),
        }
    }

    pub fn s(&self) -> &Functor {
        &self.s
    }

    pub fn t(&self) -> &Functor {
        &self.t
    }

    pub fn u(&self) -> &Functor {
        &self.u
    }

    pub fn cell(&self) -> &NatTrans {
        &self.m
    }
}

/// `ϑ^# = m g · t ϑ` for `ϑ: f ⇒ s g`.
pub fn left_pasting_apply(cell: &PastingCell, theta: &NatTrans, g: &Functor) -> Result<NatTrans> {
    if *theta.dst() != compose(&cell.s, g)? {
        return Err(Error::shape("left pasting: 2-cell codomain is not s∘g"));
    }
    vcomp(&whisker_right(&cell.m, g)?, &whisker_left(&cell.t, theta)?)
}

/// `ϰ^# = k m · ϰ s` for `ϰ: h ⇒ k t`.
pub fn right_pasting_apply(cell: &PastingCell, kappa: &NatTrans, k: &Functor) -> Result<NatTrans> {
    if *kappa.dst() != compose(k, &cell.t)? {
        return Err(Error::shape("right pasting: 2-cell codomain is not k∘t"));
    }
    vcomp(&whisker_left(k, &cell.m)?, &whisker_right(kappa, &cell.s)?)
}

/// `ϑ^T := μ g · T ϑ : T f ⇒ T g` for `ϑ: f ⇒ T g`.
pub fn left_ext_monad(monad: &MonadMonoidal, theta: &NatTrans, g: &Functor) -> Result<NatTrans> {
    left_pasting_apply(&PastingCell::of_monad(monad), theta, g)
}

/// `ϰ^T := k μ · ϰ T : h T ⇒ k T` for `ϰ: h ⇒ k T`.
pub fn right_ext_monad(monad: &MonadMonoidal, kappa: &NatTrans, k: &Functor) -> Result<NatTrans> {
    right_pasting_apply(&PastingCell::of_monad(monad), kappa, k)
}

impl MonadExtensive {
    /// Left extension of `ϑ: f ⇒ T g` read off the tables componentwise:
    /// the component at `x` is `(ϑ_x)^T` keyed by `g x`.
    pub fn left_extend(&self, theta: &NatTrans, g: &Functor) -> Result<NatTrans> {
        let t = self.functor()?;
        if *theta.dst() != compose(&t, g)? {
            return Err(Error::shape("left extension: 2-cell codomain is not T∘g"));
        }
        let components = theta
            .source_category()
            .objects()
            .map(|x| {
                self.ext(g.obj(x), theta.at(x))
                    .ok_or_else(|| Error::shape("extension table incomplete"))
            })
            .collect::<Result<Vec<_>>>()?;
        NatTrans::new(compose(&t, theta.src())?, compose(&t, g)?, components)
    }

    /// Right extension of `ϰ: h ⇒ k T`, component `k((1_{Ta})^T) ∘ ϰ_{Ta}`.
    pub fn right_extend(&self, kappa: &NatTrans, k: &Functor) -> Result<NatTrans> {
        let t = self.functor()?;
        if *kappa.dst() != compose(k, &t)? {
            return Err(Error::shape("right extension: 2-cell codomain is not k∘T"));
        }
        let cat = kappa.target_category();
        let components = self
            .base()
            .objects()
            .map(|a| {
                let mu = self.mu(a).ok_or_else(|| Error::shape("extension table incomplete"))?;
                cat.try_compose(k.arr(mu), kappa.at(self.obj(a)))
                    .ok_or_else(|| Error::shape("right extension components do not compose"))
            })
            .collect::<Result<Vec<_>>>()?;
        NatTrans::new(compose(kappa.src(), &t)?, compose(k, &t)?, components)
    }
}
