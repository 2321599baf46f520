use super::cell::DistLawCell;
use crate::error::{Error, Result};
use crate::fincat::{compose, NatTrans, check_nat_trans};
use crate::monadcore::MonadMonoidal;
use crate::report::{Check, Report};

/// Naturality of `λ` and the four compatibilities with units and
/// multiplications, each at every object:
///
/// * `λ ∘ S η = η S`
/// * `λ ∘ η' T = T η'`
/// * `λ ∘ S μ = μ S ∘ T λ ∘ λ T`
/// * `λ ∘ μ' T = T μ' ∘ λ S ∘ S λ`
pub fn check_distlaw_monoidal(d: &DistLawCell) -> Report {
    let (s, t) = (d.s(), d.t());
    let cat = s.base();
    let name = |a| cat.object_name(a).to_string();
    let mut r = Report::new();
    r.absorb("distlaw_monoidal.lambda", check_nat_trans(d.lambda()));

    let mut unit_t = Check::new("distlaw_monoidal.unit_t");
    let mut unit_s = Check::new("distlaw_monoidal.unit_s");
    let mut mult_t = Check::new("distlaw_monoidal.mult_t");
    let mut mult_s = Check::new("distlaw_monoidal.mult_s");
    for a in cat.objects() {
        let lam = d.at(a);
        unit_t.record(cat.path(&[lam, s.arr(t.eta(a))]) == Some(t.eta(s.obj(a))), || name(a));
        unit_s.record(cat.path(&[lam, s.eta(t.obj(a))]) == Some(t.arr(s.eta(a))), || name(a));

        let lhs = cat.path(&[lam, s.arr(t.mu(a))]);
        let rhs = cat.path(&[t.mu(s.obj(a)), t.arr(lam), d.at(t.obj(a))]);
        mult_t.record(lhs.is_some() && lhs == rhs, || name(a));

        let lhs = cat.path(&[lam, s.mu(t.obj(a))]);
        let rhs = cat.path(&[t.arr(s.mu(a)), d.at(s.obj(a)), s.arr(lam)]);
        mult_s.record(lhs.is_some() && lhs == rhs, || name(a));
    }
    for c in [unit_t, unit_s, mult_t, mult_s] {
        r.push(c);
    }
    r
}

/// The composite monad `T S` with unit `η S ∘ η'` and multiplication
/// `μ S ∘ T T μ' ∘ T λ S`.
pub fn compose_monads(d: &DistLawCell) -> Result<MonadMonoidal> {
    let report = check_distlaw_monoidal(d);
    if !report.holds() {
        return Err(Error::Invalid { what: "distributive law", failed: report.failed_names() });
    }
    let (s, t) = (d.s(), d.t());
    let cat = s.base();
    let ts = compose(t.functor(), s.functor())?;
    let unit = cat
        .objects()
        .map(|a| cat.compose(t.eta(s.obj(a)), s.eta(a)))
        .collect();
    let mult = cat
        .objects()
        .map(|a| {
            cat.path(&[t.mu(s.obj(a)), t.arr(t.arr(s.mu(a))), t.arr(d.at(s.obj(a)))])
                .ok_or_else(|| Error::shape("composite multiplication does not compose"))
        })
        .collect::<Result<Vec<_>>>()?;
    let unit = NatTrans::new(crate::fincat::Functor::identity(cat), ts.clone(), unit)?;
    let mult = NatTrans::new(compose(&ts, &ts)?, ts.clone(), mult)?;
    MonadMonoidal::new(ts, unit, mult)
}
