use std::sync::Arc;

use crate::error::{Error, Result};
use crate::fincat::{check_functor, check_nat_trans, compose, Arr, FinCategory, Functor, NatTrans, Obj};
use crate::report::{Check, Report};

/// A monad `(T, η, μ)` on a finite category.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonadMonoidal {
    functor: Functor,
    unit: NatTrans,
    mult: NatTrans,
}

impl MonadMonoidal {
    /// Checks only the shapes `η: 1 ⇒ T` and `μ: TT ⇒ T`.
    pub fn new(functor: Functor, unit: NatTrans, mult: NatTrans) -> Result<Self> {
        if !functor.is_endo() {
            return Err(Error::shape("monad functor must be an endofunctor"));
        }
        let id = Functor::identity(functor.source());
        if *unit.src() != id || *unit.dst() != functor {
            return Err(Error::shape("unit must be a 2-cell 1 => T"));
        }
        let tt = compose(&functor, &functor)?;
        if *mult.src() != tt || *mult.dst() != functor {
            return Err(Error::shape("multiplication must be a 2-cell TT => T"));
        }
        Ok(MonadMonoidal { functor, unit, mult })
    }

    pub fn identity(cat: &Arc<FinCategory>) -> Self {
        let id = Functor::identity(cat);
        let cell = NatTrans::identity(&id);
        MonadMonoidal {
            functor: id,
            unit: cell.clone(),
            mult: cell,
        }
    }

    pub fn base(&self) -> &Arc<FinCategory> {
        self.functor.source()
    }

    pub fn functor(&self) -> &Functor {
        &self.functor
    }

    pub fn unit(&self) -> &NatTrans {
        &self.unit
    }

    pub fn mult(&self) -> &NatTrans {
        &self.mult
    }

    pub fn obj(&self, a: Obj) -> Obj {
        self.functor.obj(a)
    }

    pub fn arr(&self, f: Arr) -> Arr {
        self.functor.arr(f)
    }

    pub fn eta(&self, a: Obj) -> Arr {
        self.unit.at(a)
    }

    pub fn mu(&self, a: Obj) -> Arr {
        self.mult.at(a)
    }
}

/// Functor laws, naturality of `η` and `μ`, both unit triangles and the
/// associativity square, each at every object.
pub fn check_monoidal_laws(m: &MonadMonoidal) -> Report {
    let cat = m.base();
    let mut report = Report::new();
    report.absorb("monoidal", check_functor(&m.functor));
    report.absorb("monoidal.unit", check_nat_trans(&m.unit));
    report.absorb("monoidal.mult", check_nat_trans(&m.mult));

    let mut left = Check::new("monoidal.left_unit");
    let mut right = Check::new("monoidal.right_unit");
    let mut assoc = Check::new("monoidal.associativity");
    for a in cat.objects() {
        let ta = m.obj(a);
        let id_ta = Some(cat.identity(ta));
        let name = cat.object_name(a);
        // μ·ηT = 1_T
        left.record(cat.path(&[m.mu(a), m.eta(ta)]) == id_ta, || format!("a={name}"));
        // μ·Tη = 1_T
        right.record(cat.path(&[m.mu(a), m.arr(m.eta(a))]) == id_ta, || format!("a={name}"));
        // μ·Tμ = μ·μT
        let lhs = cat.path(&[m.mu(a), m.arr(m.mu(a))]);
        let rhs = cat.path(&[m.mu(a), m.mu(ta)]);
        assoc.record(lhs.is_some() && lhs == rhs, || format!("a={name}"));
    }
    report.push(left);
    report.push(right);
    report.push(assoc);
    report
}
