use super::em::EMMorphismCell;
use super::kl::KlMorphismCell;
use crate::error::{Error, Result};
use crate::fincat::{check_nat_trans, compose, vcomp, whisker_left, whisker_right, NatTrans};
use crate::monadcore::{left_ext_monad, right_ext_monad};
use crate::probes::record_cells;
use crate::report::{Check, Report};

/// `χ: f' ⇒ S f` between Kl-morphisms `(f, φ)` and `(f', φ')` from `T` to `S`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KlTransformationCell {
    from: KlMorphismCell,
    to: KlMorphismCell,
    chi: NatTrans,
}

impl KlTransformationCell {
    pub fn new(from: KlMorphismCell, to: KlMorphismCell, chi: NatTrans) -> Result<Self> {
        if from.source() != to.source() || from.target() != to.target() {
            return Err(Error::shape("both morphisms must run between the same monads"));
        }
        if chi.src() != to.functor() || *chi.dst() != compose(from.target().functor(), from.functor())? {
            return Err(Error::shape("chi must be a 2-cell f' => S f"));
        }
        Ok(KlTransformationCell { from, to, chi })
    }

    /// `η' f` from a morphism to itself.
    pub fn unit(m: &KlMorphismCell) -> Result<Self> {
        let chi = whisker_right(m.target().monoidal().unit(), m.functor())?;
        KlTransformationCell::new(m.clone(), m.clone(), chi)
    }

    pub fn from(&self) -> &KlMorphismCell {
        &self.from
    }

    pub fn to(&self) -> &KlMorphismCell {
        &self.to
    }

    pub fn chi(&self) -> &NatTrans {
        &self.chi
    }
}

/// `μ' f ∘ S χ ∘ φ' = μ' f ∘ S φ ∘ χ T` at every object.
pub fn check_kl_transformation_classical(x: &KlTransformationCell) -> Report {
    let (t, s) = (x.from.source(), x.from.target());
    let (f, phi, phi2) = (x.from.functor(), x.from.kappa(), x.to.kappa());
    let cat = s.base();
    let mut r = Report::new();
    r.absorb("kl_transformation_classical.chi", check_nat_trans(&x.chi));
    let mut c = Check::new("kl_transformation_classical.square");
    for a in t.base().objects() {
        let mu = s.mu(f.obj(a));
        let lhs = cat.path(&[mu, s.arr(x.chi.at(a)), phi2.at(a)]);
        let rhs = cat.path(&[mu, s.arr(phi.at(a)), x.chi.at(t.obj(a))]);
        c.record(lhs.is_some() && lhs == rhs, || format!("a={}", t.base().object_name(a)));
    }
    r.push(c);
    r
}

/// `χ^S · φ' = φ^S · χ T`, with `(-)^S` the left extension operator of `S`.
pub fn check_kl_transformation_noiter(x: &KlTransformationCell) -> Report {
    let (t, s) = (x.from.source().monoidal(), x.from.target().monoidal());
    let f = x.from.functor();
    let mut r = Report::new();
    r.absorb("kl_transformation_noiter.chi", check_nat_trans(&x.chi));
    let lhs = left_ext_monad(s, &x.chi, f).and_then(|e| vcomp(&e, x.to.kappa()));
    let rhs = left_ext_monad(s, x.from.kappa(), f)
        .and_then(|e| vcomp(&e, &whisker_right(&x.chi, t.functor())?));
    let mut c = Check::new("kl_transformation_noiter.square");
    record_cells(&mut c, lhs, rhs, || "chi".into());
    r.push(c);
    r
}

/// `ϱ: f ⇒ f' T` between EM-morphisms `(f, φ)` and `(f', φ')` from `T` to `S`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EMTransformationCell {
    from: EMMorphismCell,
    to: EMMorphismCell,
    rho: NatTrans,
}

impl EMTransformationCell {
    pub fn new(from: EMMorphismCell, to: EMMorphismCell, rho: NatTrans) -> Result<Self> {
        if from.source() != to.source() || from.target() != to.target() {
            return Err(Error::shape("both morphisms must run between the same monads"));
        }
        if rho.src() != from.functor() || *rho.dst() != compose(to.functor(), from.source().functor())? {
            return Err(Error::shape("rho must be a 2-cell f => f' T"));
        }
        Ok(EMTransformationCell { from, to, rho })
    }

    /// `f η` from a morphism to itself.
    pub fn unit(m: &EMMorphismCell) -> Result<Self> {
        let rho = whisker_left(m.functor(), m.source().monoidal().unit())?;
        EMTransformationCell::new(m.clone(), m.clone(), rho)
    }

    pub fn from(&self) -> &EMMorphismCell {
        &self.from
    }

    pub fn to(&self) -> &EMMorphismCell {
        &self.to
    }

    pub fn rho(&self) -> &NatTrans {
        &self.rho
    }
}

/// `f' μ ∘ ϱ T ∘ φ = f' μ ∘ φ' T ∘ S ϱ` at every object.
pub fn check_em_transformation_classical(x: &EMTransformationCell) -> Report {
    let (t, s) = (x.from.source(), x.from.target());
    let (f2, phi, phi2) = (x.to.functor(), x.from.phi(), x.to.phi());
    let cat = s.base();
    let mut r = Report::new();
    r.absorb("em_transformation_classical.rho", check_nat_trans(&x.rho));
    let mut c = Check::new("em_transformation_classical.square");
    for a in t.base().objects() {
        let mu = f2.arr(t.mu(a));
        let lhs = cat.path(&[mu, x.rho.at(t.obj(a)), phi.at(a)]);
        let rhs = cat.path(&[mu, phi2.at(t.obj(a)), s.arr(x.rho.at(a))]);
        c.record(lhs.is_some() && lhs == rhs, || format!("a={}", t.base().object_name(a)));
    }
    r.push(c);
    r
}

/// `ϱ^T · φ = φ'^T · S ϱ`, with `(-)^T` the right extension operator of `T`.
pub fn check_em_transformation_noiter(x: &EMTransformationCell) -> Report {
    let (t, s) = (x.from.source().monoidal(), x.from.target().monoidal());
    let f2 = x.to.functor();
    let mut r = Report::new();
    r.absorb("em_transformation_noiter.rho", check_nat_trans(&x.rho));
    let lhs = right_ext_monad(t, &x.rho, f2).and_then(|e| vcomp(&e, x.from.phi()));
    let rhs = right_ext_monad(t, x.to.phi(), f2)
        .and_then(|e| vcomp(&e, &whisker_left(s.functor(), &x.rho)?));
    let mut c = Check::new("em_transformation_noiter.square");
    record_cells(&mut c, lhs, rhs, || "rho".into());
    r.push(c);
    r
}
