//! Cross-checks between presentations over exhaustively enumerated
//! candidates, reported as count tables.

use std::sync::Arc;

use serde::Serialize;

use super::enumerate::{
    enumerate_algebra_op_tables, enumerate_alpha_candidates, enumerate_distlaw_candidates,
    enumerate_endofunctors, enumerate_families, enumerate_monads, enumerate_monads_extensive,
    enumerate_monads_monoidal, Limits,
};
use super::instances::{closure_monad, closure_operators, Poset};
use crate::distlaw::{
    check_alpha_conditions, check_distlaw_algebra_ext, check_distlaw_inbetween_2cat,
    check_distlaw_inbetween_cat, check_distlaw_monoidal, check_distlaw_noiter_2cat_with,
    check_distlaw_noiter_cat_with, derive_naturality, lambda_to_alpha, AlgebraFormLaw, DistLawAlgebraExt,
    DistLawCell, DistLawProbes, Naturality,
};
use crate::error::Result;
use crate::fincat::{compose, FinCategory};
use crate::monadcore::{to_extensive, to_monoidal, Monad};
use crate::morphisms::{
    check_em_classical, check_em_noiter, check_kl_classical, check_kl_morphism_cat, check_kl_noiter,
    EMMorphismCell, KlMorphismCell,
};

/// One row of a comparison table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Comparison {
    pub name: String,
    pub candidates: usize,
    pub positive: usize,
    pub disagreements: Vec<String>,
}

impl Comparison {
    fn new(name: &str) -> Self {
        Comparison { name: name.into(), candidates: 0, positive: 0, disagreements: Vec::new() }
    }

    fn record(&mut self, positive: bool, agree: bool, witness: impl FnOnce() -> String) {
        self.candidates += 1;
        self.positive += usize::from(positive);
        if !agree && self.disagreements.len() < 16 {
            self.disagreements.push(witness());
        }
    }

    pub fn agrees(&self) -> bool {
        self.disagreements.is_empty()
    }
}

/// Monoidal and extensive monads: equal counts, and each conversion lands in
/// the other list and converts back.
pub fn compare_monad_forms(cat: &Arc<FinCategory>, limits: &Limits) -> Result<Comparison> {
    let mut c = Comparison::new("monad-forms");
    let mono = enumerate_monads_monoidal(cat, limits)?;
    let ext = enumerate_monads_extensive(cat, limits)?;
    if mono.len() != ext.len() {
        c.disagreements.push(format!("counts monoidal={} extensive={}", mono.len(), ext.len()));
    }
    for (i, m) in mono.iter().enumerate() {
        let e = to_extensive(m)?;
        c.record(true, ext.contains(&e) && to_monoidal(&e)? == *m, || format!("monoidal #{i}"));
    }
    for (i, e) in ext.iter().enumerate() {
        let m = to_monoidal(e)?;
        c.record(true, mono.contains(&m) && to_extensive(&m)? == *e, || format!("extensive #{i}"));
    }
    Ok(c)
}

/// Every comparison over distributive-law candidates for every ordered pair
/// of monads on `cat`.
pub fn compare_distlaws(cat: &Arc<FinCategory>, limits: &Limits) -> Result<Vec<Comparison>> {
    let monads = enumerate_monads(cat, limits)?;
    let mut three = Comparison::new("distlaw-forms");
    let mut alpha = Comparison::new("lambda-alpha");
    let mut algebra = Comparison::new("algebra-forms");
    let mut natural = Comparison::new("derived-naturality");
    for (i, s) in monads.iter().enumerate() {
        for (j, t) in monads.iter().enumerate() {
            let probes = DistLawProbes::new(s, t, limits)?;
            let mut valid = Vec::new();
            for l in enumerate_distlaw_candidates(s, t, limits)? {
                let d = DistLawCell::new(s.clone(), t.clone(), l)?;
                let a = check_distlaw_monoidal(&d).holds();
                let b = check_distlaw_noiter_2cat_with(&d, &probes).holds();
                let c = check_distlaw_noiter_cat_with(&d, &probes).holds();
                let w = || format!("S=#{i} T=#{j} lambda={:?} monoidal={a} 2cat={b} cat={c}", d.lambda().components());
                three.record(a, a == b && a == c, w);
                match derive_naturality(&d) {
                    Naturality::Derived(_) => natural.record(true, true, String::new),
                    Naturality::NotApplicable(_) => natural.record(false, true, String::new),
                    Naturality::Violated(r) => natural.record(true, false, || r.failed_names()),
                }
                if a {
                    valid.push(d);
                }
            }
            let alphas: Vec<AlgebraFormLaw> = enumerate_alpha_candidates(s, t, limits)?
                .into_iter()
                .map(|x| AlgebraFormLaw::new(s.clone(), t.clone(), x))
                .collect::<Result<Vec<_>>>()?
                .into_iter()
                .filter(|x| check_alpha_conditions(x).holds())
                .collect();
            for d in &valid {
                let x = lambda_to_alpha(d)?;
                alpha.record(true, alphas.contains(&x), || format!("S=#{i} T=#{j} lambda without alpha"));
            }
            if alphas.len() != valid.len() {
                alpha.disagreements.push(format!("S=#{i} T=#{j} {} alpha vs {} lambda", alphas.len(), valid.len()));
            }
            for tables in enumerate_algebra_op_tables(s, t, limits)? {
                let x = DistLawAlgebraExt::new(s.clone(), t.clone(), tables.clone(), None)?;
                let expected = match x.extract_lambda() {
                    Ok(d) => valid.contains(&d) && DistLawAlgebraExt::from_lambda(&d)?.tables() == tables,
                    Err(_) => false,
                };
                let a = check_distlaw_algebra_ext(&x).holds();
                let b = check_distlaw_inbetween_2cat(&x, &probes).holds();
                let c = check_distlaw_inbetween_cat(&x).holds();
                algebra.record(expected, a == expected && b == expected && c == expected, || {
                    format!("S=#{i} T=#{j} expected={expected} algebra={a} 2cat={b} cat={c}")
                });
            }
        }
    }
    Ok(vec![three, alpha, algebra, natural])
}

/// Classical and no-iteration predicates on every Kl- and EM-candidate
/// between monads on `cat`, with endofunctors as the underlying functors.
pub fn compare_morphisms(cat: &Arc<FinCategory>, limits: &Limits) -> Result<Vec<Comparison>> {
    let monads = enumerate_monads(cat, limits)?;
    let functors = enumerate_endofunctors(cat, limits)?;
    let mut kl = Comparison::new("kl-morphism-forms");
    let mut em = Comparison::new("em-morphism-forms");
    for t in &monads {
        for s in &monads {
            for f in &functors {
                let ft = compose(f, t.functor())?;
                let sf = compose(s.functor(), f)?;
                for kappa in enumerate_families(&ft, &sf, limits)? {
                    let m = KlMorphismCell::new(t.clone(), s.clone(), f.clone(), kappa)?;
                    let a = check_kl_classical(&m).holds();
                    let b = check_kl_noiter(&m, limits)?.holds();
                    let c = check_kl_morphism_cat(&m).holds();
                    kl.record(a, a == b && a == c, || {
                        format!("kappa={:?} classical={a} noiter={b} cat={c}", m.kappa().components())
                    });
                }
                for phi in enumerate_families(&sf, &ft, limits)? {
                    let m = EMMorphismCell::new(t.clone(), s.clone(), f.clone(), phi)?;
                    let a = check_em_classical(&m).holds();
                    let b = check_em_noiter(&m, limits)?.holds();
                    em.record(a, a == b, || {
                        format!("phi={:?} classical={a} noiter={b}", m.phi().components())
                    });
                }
            }
        }
    }
    Ok(vec![kl, em])
}

/// For closure operators `s, t` on a poset: a law exists iff `s t x <= t s x`
/// for every `x`, and it is unique.
pub fn compare_poset_laws(p: &Poset, cat: &Arc<FinCategory>, limits: &Limits) -> Result<Comparison> {
    let mut c = Comparison::new("poset-laws");
    let ops = closure_operators(p);
    let monads = ops
        .iter()
        .map(|op| Monad::from_monoidal(closure_monad(cat, op)?))
        .collect::<Result<Vec<_>>>()?;
    for (s, sm) in ops.iter().zip(&monads) {
        for (t, tm) in ops.iter().zip(&monads) {
            let predicted = (0..p.len()).all(|x| p.leq(s[t[x]], t[s[x]]));
            let mut found = 0;
            for l in enumerate_distlaw_candidates(sm, tm, limits)? {
                if check_distlaw_monoidal(&DistLawCell::new(sm.clone(), tm.clone(), l)?).holds() {
                    found += 1;
                }
            }
            c.record(predicted, found == usize::from(predicted), || {
                format!("s={s:?} t={t:?} predicted={predicted} found={found}")
            });
        }
    }
    Ok(c)
}
