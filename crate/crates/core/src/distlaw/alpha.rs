use super::cell::DistLawCell;
use super::monoidal::check_distlaw_monoidal;
use crate::error::{Error, Result};
use crate::fincat::{check_nat_trans, compose, NatTrans};
use crate::monadcore::Monad;
use crate::report::{Check, Report};

/// An `S`-algebra structure `α: S T S ⇒ T S`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraFormLaw {
    s: Monad,
    t: Monad,
    alpha: NatTrans,
}

impl AlgebraFormLaw {
    pub fn new(s: Monad, t: Monad, alpha: NatTrans) -> Result<Self> {
        if s.base() != t.base() {
            return Err(Error::shape("both monads must live on the same category"));
        }
        let ts = compose(t.functor(), s.functor())?;
        if *alpha.src() != compose(s.functor(), &ts)? || *alpha.dst() != ts {
            return Err(Error::shape("alpha must be a 2-cell S T S => T S"));
        }
        if !alpha.is_typed() {
            return Err(Error::shape("alpha components are not typed S T S a -> T S a"));
        }
        Ok(AlgebraFormLaw { s, t, alpha })
    }

    pub fn s(&self) -> &Monad {
        &self.s
    }

    pub fn t(&self) -> &Monad {
        &self.t
    }

    pub fn alpha(&self) -> &NatTrans {
        &self.alpha
    }
}

/// Naturality, the `S`-algebra laws, and the three compatibility diagrams,
/// each at every object:
///
/// * `α ∘ η' T S = 1`
/// * `α ∘ S α = α ∘ μ' T S`
/// * `α ∘ S T μ' = T μ' ∘ α S`
/// * `α ∘ S η S = η S ∘ μ'`
/// * `μ S ∘ T α ∘ α T S ∘ S T η' T S = α ∘ S μ S`
pub fn check_alpha_conditions(x: &AlgebraFormLaw) -> Report {
    let (s, t, al) = (&x.s, &x.t, &x.alpha);
    let cat = s.base();
    let mut r = Report::new();
    r.absorb("alpha.alpha", check_nat_trans(al));
    let mut unit = Check::new("alpha.algebra_unit");
    let mut assoc = Check::new("alpha.algebra_assoc");
    let mut mult_s = Check::new("alpha.mult_s");
    let mut unit_t = Check::new("alpha.unit_t");
    let mut mult_t = Check::new("alpha.mult_t");
    for a in cat.objects() {
        let name = || cat.object_name(a).to_string();
        let (sa, tsa) = (s.obj(a), t.obj(s.obj(a)));
        let al_a = al.at(a);
        unit.record(cat.path(&[al_a, s.eta(tsa)]) == Some(cat.identity(tsa)), name);

        let lhs = cat.path(&[al_a, s.arr(al_a)]);
        let rhs = cat.path(&[al_a, s.mu(tsa)]);
        assoc.record(lhs.is_some() && lhs == rhs, name);

        let lhs = cat.path(&[al_a, s.arr(t.arr(s.mu(a)))]);
        let rhs = cat.path(&[t.arr(s.mu(a)), al.at(sa)]);
        mult_s.record(lhs.is_some() && lhs == rhs, name);

        let lhs = cat.path(&[al_a, s.arr(t.eta(sa))]);
        let rhs = cat.path(&[t.eta(sa), s.mu(a)]);
        unit_t.record(lhs.is_some() && lhs == rhs, name);

        let lhs = cat.path(&[
            t.mu(sa),
            t.arr(al_a),
            al.at(tsa),
            s.arr(t.arr(s.eta(tsa))),
        ]);
        let rhs = cat.path(&[al_a, s.arr(t.mu(sa))]);
        mult_t.record(lhs.is_some() && lhs == rhs, name);
    }
    for c in [unit, assoc, mult_s, unit_t, mult_t] {
        r.push(c);
    }
    r
}

/// `α := T μ' ∘ λ S`.
pub fn lambda_to_alpha(d: &DistLawCell) -> Result<AlgebraFormLaw> {
    let report = check_distlaw_monoidal(d);
    if !report.holds() {
        return Err(Error::Invalid { what: "distributive law", failed: report.failed_names() });
    }
    let (s, t) = (d.s(), d.t());
    let cat = s.base();
    let components = cat
        .objects()
        .map(|a| cat.compose(t.arr(s.mu(a)), d.at(s.obj(a))))
        .collect();
    let ts = compose(t.functor(), s.functor())?;
    let alpha = NatTrans::new(compose(s.functor(), &ts)?, ts, components)?;
    AlgebraFormLaw::new(s.clone(), t.clone(), alpha)
}

/// `λ := α ∘ S T η'`.
pub fn alpha_to_lambda(x: &AlgebraFormLaw) -> Result<DistLawCell> {
    let report = check_alpha_conditions(x);
    if !report.holds() {
        return Err(Error::Invalid { what: "algebra-form law", failed: report.failed_names() });
    }
    let (s, t) = (&x.s, &x.t);
    let cat = s.base();
    let components = cat
        .objects()
        .map(|a| cat.compose(x.alpha.at(a), s.arr(t.arr(s.eta(a)))))
        .collect();
    DistLawCell::from_components(s.clone(), t.clone(), components)
}
