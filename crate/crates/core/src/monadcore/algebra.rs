use std::collections::BTreeMap;

use super::extensive::MonadExtensive;
use crate::error::{Error, Result};
use crate::fincat::{Arr, Obj};
use crate::report::{Check, Report};

/// An algebra in extension form: a carrier `c` and an operation sending each
/// `f: x -> c` to `f^op: S x -> c`.
///
/// Laws: `f^op ∘ η x = f`, and `(g^op ∘ f)^op = g^op ∘ f^S` for
/// `f: x -> S y`, `g: y -> c`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtAlgebra {
    monad: MonadExtensive,
    carrier: Obj,
    op: BTreeMap<Arr, Arr>,
}

impl ExtAlgebra {
    pub fn new(monad: MonadExtensive, carrier: Obj, op: BTreeMap<Arr, Arr>) -> Result<Self> {
        let cat = monad.base();
        if carrier.0 >= cat.num_objects() {
            return Err(Error::OutOfRange { what: "object", index: carrier.0 });
        }
        for (&f, &g) in &op {
            for x in [f, g] {
                if x.0 >= cat.num_arrows() {
                    return Err(Error::OutOfRange { what: "arrow", index: x.0 });
                }
            }
        }
        Ok(ExtAlgebra { monad, carrier, op })
    }

    /// The free algebra on `a`: carrier `S a`, operation `(-)^S`.
    pub fn free(monad: &MonadExtensive, a: Obj) -> Self {
        let cat = monad.base();
        let carrier = monad.obj(a);
        let op = cat
            .arrows()
            .filter(|&f| cat.cod(f) == carrier)
            .filter_map(|f| monad.ext(a, f).map(|g| (f, g)))
            .collect();
        ExtAlgebra { monad: monad.clone(), carrier, op }
    }

    /// The algebra induced by a structure arrow `action: S c -> c`,
    /// `f ↦ action ∘ S f`.
    pub fn from_action(monad: &MonadExtensive, carrier: Obj, action: Arr) -> Self {
        let cat = monad.base();
        let op = cat
            .arrows()
            .filter(|&f| cat.cod(f) == carrier)
            .filter_map(|f| {
                let sf = monad.arr(f)?;
                cat.try_compose(action, sf).map(|g| (f, g))
            })
            .collect();
        ExtAlgebra { monad: monad.clone(), carrier, op }
    }

    pub fn monad(&self) -> &MonadExtensive {
        &self.monad
    }

    pub fn carrier(&self) -> Obj {
        self.carrier
    }

    pub fn op(&self, f: Arr) -> Option<Arr> {
        self.op.get(&f).copied()
    }

    pub fn table(&self) -> &BTreeMap<Arr, Arr> {
        &self.op
    }
}

pub fn check_ext_algebra(alg: &ExtAlgebra) -> Report {
    let s = &alg.monad;
    let cat = s.base();
    let c = alg.carrier;
    let mut report = Report::new();

    let mut table = Check::new("algebra.table");
    for f in cat.arrows().filter(|&f| cat.cod(f) == c) {
        let x = cat.dom(f);
        match alg.op(f) {
            Some(g) => table.record(cat.dom(g) == s.obj(x) && cat.cod(g) == c, || {
                format!("f={} op={}", cat.describe(f), cat.describe(g))
            }),
            None => table.fail(format!("f={} missing", cat.describe(f))),
        }
    }
    for &f in alg.op.keys() {
        if cat.cod(f) != c {
            table.fail(format!("f={} extraneous", cat.describe(f)));
        }
    }
    let complete = table.passed();
    report.push(table);
    if !complete {
        return report;
    }

    let mut unit = Check::new("algebra.unit");
    for f in cat.arrows().filter(|&f| cat.cod(f) == c) {
        let x = cat.dom(f);
        let lhs = alg.op(f).and_then(|g| cat.try_compose(g, s.eta(x)));
        unit.record(lhs == Some(f), || format!("f={}", cat.describe(f)));
    }
    report.push(unit);

    let mut ext = Check::new("algebra.extension");
    for g in cat.arrows().filter(|&g| cat.cod(g) == c) {
        let y = cat.dom(g);
        let g_op = alg.op(g).expect("complete table");
        for f in cat.arrows().filter(|&f| cat.cod(f) == s.obj(y)) {
            let lhs = cat.try_compose(g_op, f).and_then(|gf| alg.op(gf));
            let rhs = s.ext(y, f).and_then(|fs| cat.try_compose(g_op, fs));
            ext.record(lhs.is_some() && lhs == rhs, || {
                format!("f={} g={}", cat.describe(f), cat.describe(g))
            });
        }
    }
    report.push(ext);
    report
}

/// Records whether `m: A.carrier -> B.carrier` commutes with the operations:
/// `m ∘ f^A = (m ∘ f)^B` for every `f` into `A`'s carrier.
pub fn record_algebra_morphism(check: &mut Check, from: &ExtAlgebra, to: &ExtAlgebra, m: Arr, label: &str) {
    let cat = from.monad.base();
    for f in cat.arrows().filter(|&f| cat.cod(f) == from.carrier) {
        let lhs = from.op(f).and_then(|g| cat.try_compose(m, g));
        let rhs = cat.try_compose(m, f).and_then(|mf| to.op(mf));
        check.record(lhs.is_some() && lhs == rhs, || {
            format!("{label} m={} f={}", cat.arrow_name(m), cat.describe(f))
        });
    }
}
