use std::collections::BTreeMap;
use std::sync::Arc;

use super::extensive::{check_extensive_laws, extensive_keys, MonadExtensive};
use super::monoidal::{check_monoidal_laws, MonadMonoidal};
use crate::error::{Error, Result};
use crate::fincat::{compose, Arr, FinCategory, Functor, NatTrans, Obj};

/// `f^T := μ b ∘ T f` for every `f: a -> T b`.
pub fn to_extensive(m: &MonadMonoidal) -> Result<MonadExtensive> {
    let report = check_monoidal_laws(m);
    if !report.holds() {
        return Err(Error::Invalid { what: "monoidal monad", failed: report.failed_names() });
    }
    let cat = m.base();
    let ext: BTreeMap<(Obj, Arr), Arr> = extensive_keys(cat, m.functor().obj_map())
        .into_iter()
        .map(|(b, f)| ((b, f), cat.compose(m.mu(b), m.arr(f))))
        .collect();
    MonadExtensive::new(
        cat.clone(),
        m.functor().obj_map().to_vec(),
        m.unit().components().to_vec(),
        ext,
    )
}

/// `T f := (η b ∘ f)^T` and `μ a := (1_{Ta})^T`.
pub fn to_monoidal(m: &MonadExtensive) -> Result<MonadMonoidal> {
    let report = check_extensive_laws(m);
    if !report.holds() {
        return Err(Error::Invalid { what: "extensive monad", failed: report.failed_names() });
    }
    let cat = m.base();
    let functor = m.functor()?;
    let unit = NatTrans::new(Functor::identity(cat), functor.clone(), m.unit_family().to_vec())?;
    let mu = cat
        .objects()
        .map(|a| m.mu(a).expect("complete table"))
        .collect();
    let mult = NatTrans::new(compose(&functor, &functor)?, functor.clone(), mu)?;
    MonadMonoidal::new(functor, unit, mult)
}

/// A validated monad carrying both presentations.
///
/// Classical checkers read the monoidal side, no-iteration checkers the
/// extension tables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Monad {
    monoidal: MonadMonoidal,
    extensive: MonadExtensive,
}

impl Monad {
    pub fn from_monoidal(m: MonadMonoidal) -> Result<Self> {
        let extensive = to_extensive(&m)?;
        Ok(Monad { monoidal: m, extensive })
    }

    pub fn from_extensive(m: MonadExtensive) -> Result<Self> {
        let monoidal = to_monoidal(&m)?;
        Ok(Monad { monoidal, extensive: m })
    }

    pub fn identity(cat: &Arc<FinCategory>) -> Self {
        Monad {
            monoidal: MonadMonoidal::identity(cat),
            extensive: MonadExtensive::identity(cat),
        }
    }

    pub fn monoidal(&self) -> &MonadMonoidal {
        &self.monoidal
    }

    pub fn extensive(&self) -> &MonadExtensive {
        &self.extensive
    }

    pub fn base(&self) -> &Arc<FinCategory> {
        self.monoidal.base()
    }

    pub fn functor(&self) -> &Functor {
        self.monoidal.functor()
    }

    pub fn obj(&self, a: Obj) -> Obj {
        self.monoidal.obj(a)
    }

    pub fn arr(&self, f: Arr) -> Arr {
        self.monoidal.arr(f)
    }

    pub fn eta(&self, a: Obj) -> Arr {
        self.monoidal.eta(a)
    }

    pub fn mu(&self, a: Obj) -> Arr {
        self.monoidal.mu(a)
    }

    /// Table lookup `f^T` for `f: a -> T b`.
    pub fn ext(&self, b: Obj, f: Arr) -> Option<Arr> {
        self.extensive.ext(b, f)
    }
}
