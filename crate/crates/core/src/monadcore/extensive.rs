use std::collections::BTreeMap;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::fincat::{Arr, FinCategory, Functor, NatTrans, Obj};
use crate::report::{Check, Report};

/// A monad as a Kleisli triple: object map, unit family and extension tables.
///
/// The extension operation is stored per key `(b, f)` with `f: a -> T b`.
/// Keying by `b` matters when `T` identifies objects: the same arrow `f` may
/// lie in `Hom(a, T b)` for several `b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonadExtensive {
    base: Arc<FinCategory>,
    obj_map: Vec<Obj>,
    unit: Vec<Arr>,
    ext: BTreeMap<(Obj, Arr), Arr>,
}

impl MonadExtensive {
    pub fn new(
        base: Arc<FinCategory>,
        obj_map: Vec<Obj>,
        unit: Vec<Arr>,
        ext: BTreeMap<(Obj, Arr), Arr>,
    ) -> Result<Self> {
        let (n_obj, n_arr) = (base.num_objects(), base.num_arrows());
        if obj_map.len() != n_obj || unit.len() != n_obj {
            return Err(Error::shape("object map and unit need one entry per object"));
        }
        if let Some(o) = obj_map.iter().find(|o| o.0 >= n_obj) {
            return Err(Error::OutOfRange { what: "object", index: o.0 });
        }
        if let Some(f) = unit.iter().find(|f| f.0 >= n_arr) {
            return Err(Error::OutOfRange { what: "arrow", index: f.0 });
        }
        for (&(b, f), &g) in &ext {
            if b.0 >= n_obj {
                return Err(Error::OutOfRange { what: "object", index: b.0 });
            }
            for x in [f, g] {
                if x.0 >= n_arr {
                    return Err(Error::OutOfRange { what: "arrow", index: x.0 });
                }
            }
        }
        Ok(MonadExtensive { base, obj_map, unit, ext })
    }

    pub fn identity(cat: &Arc<FinCategory>) -> Self {
        let ext = cat
            .arrows()
            .map(|f| ((cat.cod(f), f), f))
            .collect();
        MonadExtensive {
            base: cat.clone(),
            obj_map: cat.objects().collect(),
            unit: cat.objects().map(|a| cat.identity(a)).collect(),
            ext,
        }
    }

    pub fn base(&self) -> &Arc<FinCategory> {
        &self.base
    }

    pub fn obj(&self, a: Obj) -> Obj {
        self.obj_map[a.0]
    }

    pub fn obj_map(&self) -> &[Obj] {
        &self.obj_map
    }

    pub fn eta(&self, a: Obj) -> Arr {
        self.unit[a.0]
    }

    pub fn unit_family(&self) -> &[Arr] {
        &self.unit
    }

    pub fn table(&self) -> &BTreeMap<(Obj, Arr), Arr> {
        &self.ext
    }

    /// `f^T` for `f: a -> T b`.
    pub fn ext(&self, b: Obj, f: Arr) -> Option<Arr> {
        self.ext.get(&(b, f)).copied()
    }

    /// All keys `(b, f)` with `f: a -> T b`, ordered by `b` then `f`.
    pub fn keys(&self) -> Vec<(Obj, Arr)> {
        extensive_keys(&self.base, &self.obj_map)
    }

    /// `T` on arrows, `T f := (η b ∘ f)^T`.
    pub fn arr(&self, f: Arr) -> Option<Arr> {
        let b = self.base.cod(f);
        let eta_f = self.base.try_compose(self.eta(b), f)?;
        self.ext(b, eta_f)
    }

    /// `μ a := (1_{Ta})^T`.
    pub fn mu(&self, a: Obj) -> Option<Arr> {
        self.ext(a, self.base.identity(self.obj(a)))
    }

    /// The underlying endofunctor, built from the extension tables.
    pub fn functor(&self) -> Result<Functor> {
        let arr_map = self
            .base
            .arrows()
            .map(|f| {
                self.arr(f).ok_or_else(|| {
                    Error::shape(format!("extension table misses T({})", self.base.arrow_name(f)))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Functor::new(self.base.clone(), self.base.clone(), self.obj_map.clone(), arr_map)
    }

    /// The unit as a 2-cell `1 ⇒ T`.
    pub fn unit_cell(&self) -> Result<NatTrans> {
        NatTrans::new(Functor::identity(&self.base), self.functor()?, self.unit.clone())
    }
}

pub fn extensive_keys(cat: &FinCategory, obj_map: &[Obj]) -> Vec<(Obj, Arr)> {
    let mut keys = Vec::new();
    for b in cat.objects() {
        let tb = obj_map[b.0];
        for f in cat.arrows().filter(|&f| cat.cod(f) == tb) {
            keys.push((b, f));
        }
    }
    keys
}

/// The three Kleisli-triple axioms, exhaustively over the finite hom-sets.
pub fn check_extensive_laws(m: &MonadExtensive) -> Report {
    let cat = &m.base;
    let mut report = Report::new();

    let mut unit_typed = Check::new("extensive.unit_typed");
    for a in cat.objects() {
        let e = m.eta(a);
        unit_typed.record(cat.dom(e) == a && cat.cod(e) == m.obj(a), || {
            format!("a={} eta={}", cat.object_name(a), cat.describe(e))
        });
    }
    let typed = unit_typed.passed();
    report.push(unit_typed);

    let keys = m.keys();
    let mut table = Check::new("extensive.table");
    for &(b, f) in &keys {
        let a = cat.dom(f);
        match m.ext(b, f) {
            Some(g) => table.record(cat.dom(g) == m.obj(a) && cat.cod(g) == m.obj(b), || {
                format!("b={} f={} ext={}", cat.object_name(b), cat.arrow_name(f), cat.describe(g))
            }),
            None => table.fail(format!("b={} f={} missing", cat.object_name(b), cat.arrow_name(f))),
        }
    }
    for &(b, f) in m.ext.keys() {
        if cat.cod(f) != m.obj(b) {
            table.fail(format!("b={} f={} extraneous", cat.object_name(b), cat.arrow_name(f)));
        }
    }
    let complete = table.passed();
    report.push(table);
    if !(typed && complete) {
        return report;
    }

    let mut ax1 = Check::new("extensive.axiom1");
    for a in cat.objects() {
        ax1.record(m.ext(a, m.eta(a)) == Some(cat.identity(m.obj(a))), || {
            format!("a={}", cat.object_name(a))
        });
    }
    report.push(ax1);

    let mut ax2 = Check::new("extensive.axiom2");
    for &(b, f) in &keys {
        let a = cat.dom(f);
        let lhs = m.ext(b, f).and_then(|ft| cat.try_compose(ft, m.eta(a)));
        ax2.record(lhs == Some(f), || {
            format!("b={} f={}", cat.object_name(b), cat.arrow_name(f))
        });
    }
    report.push(ax2);

    let mut ax3 = Check::new("extensive.axiom3");
    for &(b, f) in &keys {
        let ft = m.ext(b, f).expect("complete table");
        for c in cat.objects() {
            for &g in cat.hom(b, m.obj(c)) {
                let gt = m.ext(c, g).expect("complete table");
                let lhs = cat.try_compose(gt, ft);
                let rhs = cat.try_compose(gt, f).and_then(|gtf| m.ext(c, gtf));
                ax3.record(lhs.is_some() && lhs == rhs, || {
                    format!(
                        "b={} f={} c={} g={}",
                        cat.object_name(b),
                        cat.arrow_name(f),
                        cat.object_name(c),
                        cat.arrow_name(g)
                    )
                });
            }
        }
    }
    report.push(ax3);
    report
}
