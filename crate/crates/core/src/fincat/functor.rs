use std::sync::Arc;

use super::category::{Arr, FinCategory, Obj};
use crate::error::{Error, Result};
use crate::report::{Check, Report};

/// A functor given by its object and arrow tables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Functor {
    source: Arc<FinCategory>,
    target: Arc<FinCategory>,
    obj_map: Vec<Obj>,
    arr_map: Vec<Arr>,
}

impl Functor {
    pub fn new(
        source: Arc<FinCategory>,
        target: Arc<FinCategory>,
        obj_map: Vec<Obj>,
        arr_map: Vec<Arr>,
    ) -> Result<Self> {
        if obj_map.len() != source.num_objects() {
            return Err(Error::shape(format!(
                "object map has {} entries, source has {} objects",
                obj_map.len(),
                source.num_objects()
            )));
        }
        if arr_map.len() != source.num_arrows() {
            return Err(Error::shape(format!(
                "arrow map has {} entries, source has {} arrows",
                arr_map.len(),
                source.num_arrows()
            )));
        }
        if let Some(o) = obj_map.iter().find(|o| o.0 >= target.num_objects()) {
            return Err(Error::OutOfRange { what: "object", index: o.0 });
        }
        if let Some(f) = arr_map.iter().find(|f| f.0 >= target.num_arrows()) {
            return Err(Error::OutOfRange { what: "arrow", index: f.0 });
        }
        Ok(Functor {
            source,
            target,
            obj_map,
            arr_map,
        })
    }

    pub fn identity(cat: &Arc<FinCategory>) -> Self {
        Functor {
            source: cat.clone(),
            target: cat.clone(),
            obj_map: cat.objects().collect(),
            arr_map: cat.arrows().collect(),
        }
    }

    /// The functor from the terminal category picking out `a`.
    pub fn constant(point: &Arc<FinCategory>, cat: &Arc<FinCategory>, a: Obj) -> Self {
        Functor {
            source: point.clone(),
            target: cat.clone(),
            obj_map: vec![a; point.num_objects()],
            arr_map: vec![cat.identity(a); point.num_arrows()],
        }
    }

    pub fn source(&self) -> &Arc<FinCategory> {
        &self.source
    }

    pub fn target(&self) -> &Arc<FinCategory> {
        &self.target
    }

    pub fn is_endo(&self) -> bool {
        self.source == self.target
    }

    pub fn obj(&self, a: Obj) -> Obj {
        self.obj_map[a.0]
    }

    pub fn arr(&self, f: Arr) -> Arr {
        self.arr_map[f.0]
    }

    pub fn obj_map(&self) -> &[Obj] {
        &self.obj_map
    }

    pub fn arr_map(&self) -> &[Arr] {
        &self.arr_map
    }

    /// `self ∘ first`.
    pub fn after(&self, first: &Functor) -> Result<Functor> {
        compose(self, first)
    }
}

/// The composite `g ∘ f`.
pub fn compose(g: &Functor, f: &Functor) -> Result<Functor> {
    if f.target != g.source {
        return Err(Error::shape("functors are not composable"));
    }
    Ok(Functor {
        source: f.source.clone(),
        target: g.target.clone(),
        obj_map: f.obj_map.iter().map(|&a| g.obj(a)).collect(),
        arr_map: f.arr_map.iter().map(|&x| g.arr(x)).collect(),
    })
}

/// Checks typing, identity preservation and composition preservation.
pub fn check_functor(func: &Functor) -> Report {
    let src = &func.source;
    let tgt = &func.target;
    let mut report = Report::new();

    let mut typed = Check::new("functor.typed");
    for f in src.arrows() {
        let image = func.arr(f);
        typed.record(
            tgt.dom(image) == func.obj(src.dom(f)) && tgt.cod(image) == func.obj(src.cod(f)),
            || format!("arrow={} image={}", src.describe(f), tgt.describe(image)),
        );
    }
    report.push(typed);

    let mut ids = Check::new("functor.identities");
    for a in src.objects() {
        ids.record(func.arr(src.identity(a)) == tgt.identity(func.obj(a)), || {
            format!("object={}", src.object_name(a))
        });
    }
    report.push(ids);

    let mut comp = Check::new("functor.composition");
    for (g, f) in src.composable_pairs() {
        let lhs = src.try_compose(g, f).map(|gf| func.arr(gf));
        let rhs = tgt.try_compose(func.arr(g), func.arr(f));
        comp.record(lhs.is_some() && lhs == rhs, || {
            format!("g={} f={}", src.arrow_name(g), src.arrow_name(f))
        });
    }
    report.push(comp);
    report
}
