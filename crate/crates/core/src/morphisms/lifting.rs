use super::kl::{check_kl_morphism_cat, KlMorphismCell};
use crate::error::{Error, Result};
use crate::fincat::{check_functor, compose, Functor, NatTrans};
use crate::monadcore::{kleisli_category, KleisliCategory, Monad};
use crate::report::{Check, Report};

/// A functor between Kleisli categories, together with both Kleisli
/// categories so that its arrows can be read back as base arrows.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KleisliLifting {
    pub source: KleisliCategory,
    pub target: KleisliCategory,
    pub functor: Functor,
}

/// `F̄ a = F a` and `F̄(f: a ⇝ b) = κ b ∘ F f`, with no law checks.
///
/// Fails only when the assignment is not even well typed.
pub fn lifting_candidate(m: &KlMorphismCell) -> Result<KleisliLifting> {
    let (t, s, f) = (m.source().extensive(), m.target().extensive(), m.functor());
    let src = kleisli_category(t)?;
    let dst = kleisli_category(s)?;
    let b_cat = s.base();
    let arr_map = src
        .category()
        .arrows()
        .map(|k| {
            let (b, arrow) = src.underlying(k);
            b_cat
                .try_compose(m.kappa().at(b), f.arr(arrow))
                .and_then(|g| dst.arrow(f.obj(b), g))
                .ok_or_else(|| Error::shape("kappa components do not compose with F"))
        })
        .collect::<Result<Vec<_>>>()?;
    let functor = Functor::new(
        src.category().clone(),
        dst.category().clone(),
        f.obj_map().to_vec(),
        arr_map,
    )?;
    Ok(KleisliLifting { source: src, target: dst, functor })
}

/// The Kleisli lifting of a Kl-morphism in extension form.
pub fn kleisli_lifting_from_family(m: &KlMorphismCell) -> Result<KleisliLifting> {
    let report = check_kl_morphism_cat(m);
    if !report.holds() {
        return Err(Error::Invalid { what: "Kl-morphism", failed: report.failed_names() });
    }
    lifting_candidate(m)
}

/// Functoriality of `F̄` and `F̄ ∘ J = J' ∘ F` on every arrow.
pub fn check_lifting(
    source: &Monad,
    target: &Monad,
    functor: &Functor,
    lifting: &KleisliLifting,
) -> Result<Report> {
    let mut r = Report::new();
    r.absorb("lifting", check_functor(&lifting.functor));
    let j = lifting.source.inclusion(source.extensive())?;
    let j2 = lifting.target.inclusion(target.extensive())?;
    let lhs = compose(&lifting.functor, &j)?;
    let rhs = compose(&j2, functor)?;
    let a_cat = source.base();
    let mut c = Check::new("lifting.commutes");
    for a in a_cat.objects() {
        c.record(lhs.obj(a) == rhs.obj(a), || format!("object={}", a_cat.object_name(a)));
    }
    for h in a_cat.arrows() {
        c.record(lhs.arr(h) == rhs.arr(h), || format!("arrow={}", a_cat.describe(h)));
    }
    r.push(c);
    Ok(r)
}

/// Recovers `κ a := F̄(1_{Ta}: Ta ⇝ a)` from a lifting of `F`.
pub fn family_from_lifting(
    source: &Monad,
    target: &Monad,
    functor: &Functor,
    lifting: &KleisliLifting,
) -> Result<KlMorphismCell> {
    let report = check_lifting(source, target, functor, lifting)?;
    if !report.holds() {
        return Err(Error::Invalid { what: "Kleisli lifting", failed: report.failed_names() });
    }
    let a_cat = source.base();
    let components = a_cat
        .objects()
        .map(|a| {
            let k = lifting
                .source
                .arrow(a, a_cat.identity(source.obj(a)))
                .ok_or_else(|| Error::shape("identity of Ta missing from the Kleisli category"))?;
            Ok(lifting.target.underlying(lifting.functor.arr(k)).1)
        })
        .collect::<Result<Vec<_>>>()?;
    let kappa = NatTrans::new(
        compose(functor, source.functor())?,
        compose(target.functor(), functor)?,
        components,
    )?;
    KlMorphismCell::new(source.clone(), target.clone(), functor.clone(), kappa)
}
