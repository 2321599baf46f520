use std::collections::BTreeMap;

use super::cell::DistLawCell;
use super::noiter::{axiom2_2cat_checks, DistLawProbes};
use crate::error::{Error, Result};
use crate::fincat::{Arr, NatTrans, Obj};
use crate::monadcore::{check_ext_algebra, record_algebra_morphism, ExtAlgebra, Monad};
use crate::report::{Check, Report};

/// A distributive law presented as `S`-algebras: for every object `a` an
/// operation `f: x -> T S a  ↦  f^λ: S x -> T S a`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistLawAlgebraExt {
    s: Monad,
    t: Monad,
    algebras: Vec<ExtAlgebra>,
    lambda: Option<NatTrans>,
}

impl DistLawAlgebraExt {
    /// `tables[a]` is the operation on the carrier `T S a`. A stored `λ`, if
    /// given, is compared against the one extracted from the tables.
    pub fn new(
        s: Monad,
        t: Monad,
        tables: Vec<BTreeMap<Arr, Arr>>,
        lambda: Option<NatTrans>,
    ) -> Result<Self> {
        if s.base() != t.base() {
            return Err(Error::shape("both monads must live on the same category"));
        }
        let cat = s.base();
        if tables.len() != cat.num_objects() {
            return Err(Error::shape(format!(
                "expected {} operation tables, got {}",
                cat.num_objects(),
                tables.len()
            )));
        }
        let algebras = tables
            .into_iter()
            .zip(cat.objects())
            .map(|(op, a)| ExtAlgebra::new(s.extensive().clone(), t.obj(s.obj(a)), op))
            .collect::<Result<Vec<_>>>()?;
        Ok(DistLawAlgebraExt { s, t, algebras, lambda })
    }

    /// `f^λ := T μ' a ∘ λ S a ∘ S f`, keeping `λ` for comparison.
    pub fn from_lambda(d: &DistLawCell) -> Result<Self> {
        let (s, t) = (d.s(), d.t());
        let cat = s.base();
        let tables = cat
            .objects()
            .map(|a| {
                let tsa = t.obj(s.obj(a));
                let alpha = cat.compose(t.arr(s.mu(a)), d.at(s.obj(a)));
                cat.arrows()
                    .filter(|&f| cat.cod(f) == tsa)
                    .map(|f| (f, cat.compose(alpha, s.arr(f))))
                    .collect()
            })
            .collect();
        DistLawAlgebraExt::new(s.clone(), t.clone(), tables, Some(d.lambda().clone()))
    }

    pub fn s(&self) -> &Monad {
        &self.s
    }

    pub fn t(&self) -> &Monad {
        &self.t
    }

    pub fn algebra(&self, a: Obj) -> &ExtAlgebra {
        &self.algebras[a.0]
    }

    pub fn tables(&self) -> Vec<BTreeMap<Arr, Arr>> {
        self.algebras.iter().map(|x| x.table().clone()).collect()
    }

    pub fn stored_lambda(&self) -> Option<&NatTrans> {
        self.lambda.as_ref()
    }

    fn op(&self, a: Obj, f: Arr) -> Option<Arr> {
        self.algebras[a.0].op(f)
    }

    /// `λ a := ((η S a ∘ η' a)^T)^{λ a}`.
    pub fn extract_lambda(&self) -> Result<DistLawCell> {
        let (s, t) = (&self.s, &self.t);
        let cat = s.base();
        let components = cat
            .objects()
            .map(|a| {
                let sa = s.obj(a);
                t.ext(sa, cat.compose(t.eta(sa), s.eta(a)))
                    .and_then(|k| self.op(a, k))
                    .ok_or_else(|| Error::shape("operation table incomplete"))
            })
            .collect::<Result<Vec<_>>>()?;
        DistLawCell::from_components(s.clone(), t.clone(), components)
    }

    /// `λ a := (T η' a)^{λ a}`, the general form of the same extraction.
    fn lambda_by_functor(&self) -> Option<Vec<Arr>> {
        let (s, t) = (&self.s, &self.t);
        s.base()
            .objects()
            .map(|a| self.op(a, t.arr(s.eta(a))))
            .collect()
    }

    fn algebra_checks(&self, prefix: &str, r: &mut Report) -> bool {
        let cat = self.s.base();
        let mut ok = true;
        for a in cat.objects() {
            let rep = check_ext_algebra(&self.algebras[a.0]);
            ok &= rep.holds();
            r.absorb(&format!("{prefix}.algebra[{}]", cat.object_name(a)), rep);
        }
        ok
    }

    /// `T(γ^S)` is an algebra morphism for every `γ: x -> S y`.
    fn functor_morphisms(&self, name: &str) -> Check {
        let (s, t) = (self.s.extensive(), self.t.extensive());
        let cat = s.base();
        let mut c = Check::new(name);
        for (y, g) in s.keys() {
            let x = cat.dom(g);
            match s.ext(y, g).and_then(|gs| t.arr(gs)) {
                Some(m) => record_algebra_morphism(
                    &mut c,
                    &self.algebras[x.0],
                    &self.algebras[y.0],
                    m,
                    &format!("gamma={}", cat.describe(g)),
                ),
                None => c.fail(format!("gamma={} T(gamma^S) undefined", cat.describe(g))),
            }
        }
        c
    }

    fn stored_check(&self, name: &str, extracted: Option<&[Arr]>) -> Option<Check> {
        let stored = self.lambda.as_ref()?;
        let cat = self.s.base();
        let mut c = Check::new(name);
        for a in cat.objects() {
            c.record(extracted.map(|e| e[a.0]) == Some(stored.at(a)), || {
                cat.object_name(a).to_string()
            });
        }
        Some(c)
    }
}

/// The algebras are valid, and
///
/// * `T γ^S` is an algebra morphism for every `γ: x -> S y`
/// * `(T η' a ∘ η a)^{λ a} = η S a`
/// * `(κ^{λ v})^T` is an algebra morphism for every `κ: u -> T S v`
///
/// The 2-cell quantifications reduce to arrows here, so each is exhaustive.
pub fn check_distlaw_algebra_ext(x: &DistLawAlgebraExt) -> Report {
    let (s, t) = (x.s.extensive(), x.t.extensive());
    let cat = s.base();
    let mut r = Report::new();
    if !x.algebra_checks("algebra_ext", &mut r) {
        return r;
    }
    r.push(x.functor_morphisms("algebra_ext.cond1"));

    let mut cond2 = Check::new("algebra_ext.cond2");
    for a in cat.objects() {
        let lhs = t
            .arr(s.eta(a))
            .and_then(|te| cat.try_compose(te, t.eta(a)))
            .and_then(|k| x.op(a, k));
        cond2.record(lhs == Some(t.eta(s.obj(a))), || cat.object_name(a).to_string());
    }
    r.push(cond2);

    let mut cond3 = Check::new("algebra_ext.cond3");
    for v in cat.objects() {
        let tsv = t.obj(s.obj(v));
        for k in cat.arrows().filter(|&k| cat.cod(k) == tsv) {
            let u = cat.dom(k);
            match x.op(v, k).and_then(|kl| t.ext(s.obj(v), kl)) {
                Some(m) => record_algebra_morphism(
                    &mut cond3,
                    &x.algebras[u.0],
                    &x.algebras[v.0],
                    m,
                    &format!("kappa={}", cat.describe(k)),
                ),
                None => cond3.fail(format!("kappa={} extension undefined", cat.describe(k))),
            }
        }
    }
    r.push(cond3);

    let extracted = x.extract_lambda().ok().map(|d| d.lambda().components().to_vec());
    if let Some(c) = x.stored_check("algebra_ext.stored_lambda", extracted.as_deref()) {
        r.push(c);
    }
    r
}

/// The algebras are valid, `T γ^S` is an algebra morphism for every
/// `γ: x -> S y`, and `λ := (T η')^λ` satisfies `λ ∘ S η = η S` and the
/// pasting square for every `ϑ: f ⇒ T g` in `probes`.
pub fn check_distlaw_inbetween_2cat(x: &DistLawAlgebraExt, probes: &DistLawProbes) -> Report {
    let (s, t) = (&x.s, &x.t);
    let cat = s.base();
    let mut r = Report::new();
    if !x.algebra_checks("inbetween_2cat", &mut r) {
        return r;
    }
    r.push(x.functor_morphisms("inbetween_2cat.cond1"));

    let lambda = x.lambda_by_functor();
    let mut cond2 = Check::new("inbetween_2cat.cond2");
    match &lambda {
        Some(l) => {
            for a in cat.objects() {
                let lhs = cat.try_compose(l[a.0], s.arr(t.eta(a)));
                cond2.record(lhs == Some(t.eta(s.obj(a))), || cat.object_name(a).to_string());
            }
        }
        None => cond2.fail("lambda undefined"),
    }
    r.push(cond2);

    match lambda
        .clone()
        .ok_or_else(|| Error::shape("lambda undefined"))
        .and_then(|l| DistLawCell::from_components(s.clone(), t.clone(), l))
    {
        Ok(d) => {
            for c in axiom2_2cat_checks(&d, probes, "inbetween_2cat.cond3") {
                r.push(c);
            }
        }
        Err(e) => {
            let mut c = Check::new("inbetween_2cat.cond3");
            c.fail(e.to_string());
            r.push(c);
        }
    }

    if let Some(c) = x.stored_check("inbetween_2cat.stored_lambda", lambda.as_deref()) {
        r.push(c);
    }
    r
}

/// The objectwise conditions, read from the extension tables with
/// `λ a := ((η S a ∘ η' a)^T)^{λ a}`:
///
/// * every `(T S a, (-)^{λ a})` is an algebra
/// * `(η S a ∘ h^S)^T` is an algebra morphism for every `h: b -> S a`
/// * `λ a ∘ (η' T a ∘ η a)^S = η S a`
/// * `λ b ∘ (η' T b ∘ f^T)^S = (λ b ∘ (η' T b ∘ f)^S)^T ∘ λ a` for every `f: a -> T b`
pub fn check_distlaw_inbetween_cat(x: &DistLawAlgebraExt) -> Report {
    let (s, t) = (x.s.extensive(), x.t.extensive());
    let cat = s.base();
    let mut r = Report::new();
    if !x.algebra_checks("inbetween_cat", &mut r) {
        return r;
    }

    let mut cond2 = Check::new("inbetween_cat.cond2");
    for (a, h) in s.keys() {
        let b = cat.dom(h);
        let sa = s.obj(a);
        let m = s
            .ext(a, h)
            .and_then(|hs| cat.try_compose(t.eta(sa), hs))
            .and_then(|k| t.ext(sa, k));
        match m {
            Some(m) => record_algebra_morphism(
                &mut cond2,
                &x.algebras[b.0],
                &x.algebras[a.0],
                m,
                &format!("h={}", cat.describe(h)),
            ),
            None => cond2.fail(format!("h={} extension undefined", cat.describe(h))),
        }
    }
    r.push(cond2);

    let lambda: Option<Vec<Arr>> = cat
        .objects()
        .map(|a| {
            let sa = s.obj(a);
            t.ext(sa, cat.compose(t.eta(sa), s.eta(a))).and_then(|k| x.op(a, k))
        })
        .collect();
    let Some(lam) = lambda else {
        let mut c = Check::new("inbetween_cat.lambda");
        c.fail("lambda undefined");
        r.push(c);
        return r;
    };

    let mut cond3 = Check::new("inbetween_cat.cond3");
    for a in cat.objects() {
        let ta = t.obj(a);
        let lhs = s
            .ext(ta, cat.compose(s.eta(ta), t.eta(a)))
            .and_then(|e| cat.try_compose(lam[a.0], e));
        cond3.record(lhs == Some(t.eta(s.obj(a))), || cat.object_name(a).to_string());
    }
    r.push(cond3);

    let mut cond4 = Check::new("inbetween_cat.cond4");
    for (b, f) in t.keys() {
        let a = cat.dom(f);
        let tb = t.obj(b);
        let lhs = t
            .ext(b, f)
            .and_then(|ft| s.ext(tb, cat.compose(s.eta(tb), ft)))
            .and_then(|e| cat.try_compose(lam[b.0], e));
        let rhs = s
            .ext(tb, cat.compose(s.eta(tb), f))
            .and_then(|e| cat.try_compose(lam[b.0], e))
            .and_then(|k| t.ext(s.obj(b), k))
            .and_then(|e| cat.try_compose(e, lam[a.0]));
        cond4.record(lhs.is_some() && lhs == rhs, || {
            format!("a={} b={} f={}", cat.object_name(a), cat.object_name(b), cat.arrow_name(f))
        });
    }
    r.push(cond4);

    if let Some(c) = x.stored_check("inbetween_cat.stored_lambda", Some(&lam)) {
        r.push(c);
    }
    r
}
