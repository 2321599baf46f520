//! One pass/fail line per acceptance criterion. Exits non-zero if any fails.

use std::process::ExitCode;
use std::sync::Arc;
use std::time::Instant;

use noiter::distlaw::{
    alpha_to_lambda, check_alpha_conditions, check_distlaw_algebra_ext, check_distlaw_inbetween_2cat,
    check_distlaw_inbetween_cat, check_distlaw_monoidal, check_distlaw_noiter_2cat_with,
    check_distlaw_noiter_cat_with, compose_monads, derive_naturality, lambda_to_alpha, AlgebraFormLaw,
    DistLawAlgebraExt, DistLawCell, DistLawProbes,
};
use noiter::fincat::{compose, FinCategory};
use noiter::monadcore::{check_monoidal_laws, to_extensive, to_monoidal, Monad};
use noiter::morphisms::{
    check_em_classical, check_em_noiter, check_em_transformation_classical, check_em_transformation_noiter,
    check_kl_classical, check_kl_morphism_cat, check_kl_noiter, check_kl_transformation_classical,
    check_kl_transformation_noiter, check_lifting, family_from_lifting, kleisli_lifting_from_family,
    lifting_candidate, EMMorphismCell, EMTransformationCell, KlMorphismCell, KlTransformationCell,
};
use noiter::oracle::{
    chain_category, closure_monad, closure_operators, enumerate_algebra_op_tables, enumerate_alpha_candidates,
    enumerate_distlaw_candidates, enumerate_endofunctors, enumerate_families, enumerate_functors,
    enumerate_monads, enumerate_monads_extensive, enumerate_monads_monoidal, monoid_category, monoid_tables,
    poset_category, posets, Limits,
};
use noiter::Result;

struct Outcome {
    ok: bool,
    detail: String,
}

fn run(n: usize, title: &str, f: impl FnOnce() -> Result<Outcome>) -> bool {
    let start = Instant::now();
    let (ok, detail) = match f() {
        Ok(o) => (o.ok, o.detail),
        Err(e) => (false, format!("error: {e}")),
    };
    println!(
        "criterion {n} {}: {title} ({detail}; {:.1}s)",
        if ok { "pass" } else { "FAIL" },
        start.elapsed().as_secs_f64()
    );
    ok
}

fn named(name: String, cat: FinCategory) -> (String, Arc<FinCategory>) {
    (name, Arc::new(cat))
}

/// Chains up to 3 and monoids of order up to 2.
fn small_instances() -> Vec<(String, Arc<FinCategory>)> {
    let mut out: Vec<_> = (1..=3).map(|n| named(format!("chain{n}"), chain_category(n))).collect();
    for n in 1..=2 {
        for (i, t) in monoid_tables(n).into_iter().enumerate() {
            out.push(named(format!("monoid{n}.{i}"), monoid_category(&t).expect("monoid")));
        }
    }
    out
}

struct Pair {
    label: String,
    s: Monad,
    t: Monad,
    probes: DistLawProbes,
}

fn monad_pairs(limits: &Limits) -> Result<Vec<Pair>> {
    let mut out = Vec::new();
    for (name, cat) in small_instances() {
        let monads = enumerate_monads(&cat, limits)?;
        for (i, s) in monads.iter().enumerate() {
            for (j, t) in monads.iter().enumerate() {
                out.push(Pair {
                    label: format!("{name} S={i} T={j}"),
                    s: s.clone(),
                    t: t.clone(),
                    probes: DistLawProbes::new(s, t, limits)?,
                });
            }
        }
    }
    Ok(out)
}

fn valid_lambdas(pair: &Pair, limits: &Limits) -> Result<Vec<DistLawCell>> {
    Ok(enumerate_distlaw_candidates(&pair.s, &pair.t, limits)?
        .into_iter()
        .map(|l| DistLawCell::new(pair.s.clone(), pair.t.clone(), l))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .filter(|d| check_distlaw_monoidal(d).holds())
        .collect())
}

fn criterion1(limits: &Limits) -> Result<Outcome> {
    let mut cats: Vec<(String, Arc<FinCategory>)> =
        (0..=4).map(|n| named(format!("chain{n}"), chain_category(n))).collect();
    for n in 0..=4 {
        for (i, p) in posets(n).iter().enumerate() {
            cats.push(named(format!("poset{n}.{i}"), poset_category(p)));
        }
    }
    for n in 1..=3 {
        for (i, t) in monoid_tables(n).into_iter().enumerate() {
            cats.push(named(format!("monoid{n}.{i}"), monoid_category(&t)?));
        }
    }
    let mut bad = Vec::new();
    let mut total = 0;
    for (name, cat) in &cats {
        let mono = enumerate_monads_monoidal(cat, limits)?;
        let ext = enumerate_monads_extensive(cat, limits)?;
        total += mono.len();
        if mono.len() != ext.len() {
            bad.push(format!("{name}: {} vs {}", mono.len(), ext.len()));
            continue;
        }
        for m in &mono {
            if to_monoidal(&to_extensive(m)?)? != *m || !ext.contains(&to_extensive(m)?) {
                bad.push(format!("{name}: monoidal roundtrip"));
            }
        }
        for e in &ext {
            if to_extensive(&to_monoidal(e)?)? != *e || !mono.contains(&to_monoidal(e)?) {
                bad.push(format!("{name}: extensive roundtrip"));
            }
        }
    }
    Ok(Outcome {
        ok: bad.is_empty(),
        detail: format!("{} categories, {total} monads, mismatches {:?}", cats.len(), bad),
    })
}

fn criterion2(pairs: &[Pair], limits: &Limits) -> Result<Outcome> {
    let (mut total, mut valid) = (0, 0);
    let mut bad = Vec::new();
    for p in pairs {
        for l in enumerate_distlaw_candidates(&p.s, &p.t, limits)? {
            let d = DistLawCell::new(p.s.clone(), p.t.clone(), l)?;
            let a = check_distlaw_monoidal(&d).holds();
            let b = check_distlaw_noiter_2cat_with(&d, &p.probes).holds();
            let c = check_distlaw_noiter_cat_with(&d, &p.probes).holds();
            total += 1;
            valid += usize::from(a);
            if a != b || a != c {
                bad.push(format!("{} {:?} monoidal={a} 2cat={b} cat={c}", p.label, d.lambda().components()));
            }
        }
    }
    Ok(Outcome {
        ok: bad.is_empty(),
        detail: format!("{} pairs, {total} candidates, {valid} valid, discrepancies {:?}", pairs.len(), bad),
    })
}

fn criterion3(pairs: &[Pair], limits: &Limits) -> Result<Outcome> {
    let mut bad = Vec::new();
    let (mut nl, mut na) = (0, 0);
    for p in pairs {
        let lambdas = valid_lambdas(p, limits)?;
        let alphas: Vec<AlgebraFormLaw> = enumerate_alpha_candidates(&p.s, &p.t, limits)?
            .into_iter()
            .map(|a| AlgebraFormLaw::new(p.s.clone(), p.t.clone(), a))
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .filter(|a| check_alpha_conditions(a).holds())
            .collect();
        nl += lambdas.len();
        na += alphas.len();
        if lambdas.len() != alphas.len() {
            bad.push(format!("{}: {} lambdas vs {} alphas", p.label, lambdas.len(), alphas.len()));
        }
        for d in &lambdas {
            let a = lambda_to_alpha(d)?;
            if !check_alpha_conditions(&a).holds() || !alphas.contains(&a) || alpha_to_lambda(&a)? != *d {
                bad.push(format!("{}: lambda {:?}", p.label, d.lambda().components()));
            }
        }
        for a in &alphas {
            let d = alpha_to_lambda(a)?;
            if !check_distlaw_monoidal(&d).holds() || lambda_to_alpha(&d)? != *a {
                bad.push(format!("{}: alpha {:?}", p.label, a.alpha().components()));
            }
        }
    }
    Ok(Outcome {
        ok: bad.is_empty(),
        detail: format!("{nl} valid lambda, {na} valid alpha, mismatches {:?}", bad),
    })
}

fn criterion4(pairs: &[Pair], limits: &Limits) -> Result<Outcome> {
    let mut bad = Vec::new();
    let mut total = 0;
    for p in pairs {
        for tables in enumerate_algebra_op_tables(&p.s, &p.t, limits)? {
            total += 1;
            let x = DistLawAlgebraExt::new(p.s.clone(), p.t.clone(), tables.clone(), None)?;
            // the structure is a law iff it is the image of a valid λ
            let expected = match x.extract_lambda() {
                Ok(d) => {
                    check_distlaw_monoidal(&d).holds() && DistLawAlgebraExt::from_lambda(&d)?.tables() == tables
                }
                Err(_) => false,
            };
            let a = check_distlaw_algebra_ext(&x).holds();
            let b = check_distlaw_inbetween_2cat(&x, &p.probes).holds();
            let c = check_distlaw_inbetween_cat(&x).holds();
            if a != expected || b != expected || c != expected {
                bad.push(format!("{} expected={expected} algebra={a} 2cat={b} cat={c}", p.label));
            }
        }
        for d in valid_lambdas(p, limits)? {
            let x = DistLawAlgebraExt::from_lambda(&d)?;
            if x.extract_lambda()? != d
                || !check_distlaw_algebra_ext(&x).holds()
                || !check_distlaw_inbetween_2cat(&x, &p.probes).holds()
                || !check_distlaw_inbetween_cat(&x).holds()
            {
                bad.push(format!("{} image of {:?}", p.label, d.lambda().components()));
            }
        }
    }
    Ok(Outcome {
        ok: bad.is_empty(),
        detail: format!("{total} operation tables, mismatches {:?}", bad),
    })
}

fn criterion5(limits: &Limits) -> Result<Outcome> {
    let mut bad = Vec::new();
    let mut counts = [0usize; 6];
    for (name, cat) in small_instances() {
        let monads = enumerate_monads(&cat, limits)?;
        let functors = enumerate_endofunctors(&cat, limits)?;
        for t in &monads {
            for s in &monads {
                let mut kls = Vec::new();
                let mut ems = Vec::new();
                for f in &functors {
                    let ft = compose(f, t.functor())?;
                    let sf = compose(s.functor(), f)?;
                    for kappa in enumerate_families(&ft, &sf, limits)? {
                        let m = KlMorphismCell::new(t.clone(), s.clone(), f.clone(), kappa)?;
                        let a = check_kl_classical(&m).holds();
                        let b = check_kl_noiter(&m, limits)?.holds();
                        let c = check_kl_morphism_cat(&m).holds();
                        counts[0] += 1;
                        if a != b || a != c {
                            bad.push(format!("{name} kl classical={a} noiter={b} cat={c}"));
                        }
                        // functoriality of the candidate lifting matches the cat axioms
                        if let Ok(l) = lifting_candidate(&m) {
                            let lifts = check_lifting(t, s, f, &l)?.holds();
                            if lifts != c {
                                bad.push(format!("{name} lifting functorial={lifts} cat={c}"));
                            }
                        }
                        if a {
                            let l = kleisli_lifting_from_family(&m)?;
                            if family_from_lifting(t, s, f, &l)? != m {
                                bad.push(format!("{name} lifting roundtrip"));
                            }
                            kls.push(m);
                        }
                    }
                    for phi in enumerate_families(&sf, &ft, limits)? {
                        let m = EMMorphismCell::new(t.clone(), s.clone(), f.clone(), phi)?;
                        let a = check_em_classical(&m).holds();
                        let b = check_em_noiter(&m, limits)?.holds();
                        counts[1] += 1;
                        if a != b {
                            bad.push(format!("{name} em classical={a} noiter={b}"));
                        }
                        if a {
                            ems.push(m);
                        }
                    }
                    // liftings found by enumeration roundtrip the other way
                    let kt = noiter::monadcore::kleisli_category(t.extensive())?;
                    let ks = noiter::monadcore::kleisli_category(s.extensive())?;
                    for g in enumerate_functors(kt.category(), ks.category(), limits)? {
                        if g.obj_map() != f.obj_map() {
                            continue;
                        }
                        let l = noiter::morphisms::KleisliLifting {
                            source: kt.clone(),
                            target: ks.clone(),
                            functor: g,
                        };
                        if check_lifting(t, s, f, &l)?.holds() {
                            counts[2] += 1;
                            let m = family_from_lifting(t, s, f, &l)?;
                            if kleisli_lifting_from_family(&m)? != l {
                                bad.push(format!("{name} lifting inverse roundtrip"));
                            }
                        }
                    }
                }
                for from in &kls {
                    for to in &kls {
                        let sf = compose(s.functor(), from.functor())?;
                        for chi in enumerate_families(to.functor(), &sf, limits)? {
                            let x = KlTransformationCell::new(from.clone(), to.clone(), chi)?;
                            let a = check_kl_transformation_classical(&x).holds();
                            let b = check_kl_transformation_noiter(&x).holds();
                            counts[3] += 1;
                            if a != b {
                                bad.push(format!("{name} kl-transformation classical={a} noiter={b}"));
                            }
                        }
                    }
                }
                for from in &ems {
                    for to in &ems {
                        let f2t = compose(to.functor(), t.functor())?;
                        for rho in enumerate_families(from.functor(), &f2t, limits)? {
                            let x = EMTransformationCell::new(from.clone(), to.clone(), rho)?;
                            let a = check_em_transformation_classical(&x).holds();
                            let b = check_em_transformation_noiter(&x).holds();
                            counts[4] += 1;
                            if a != b {
                                bad.push(format!("{name} em-transformation classical={a} noiter={b}"));
                            }
                        }
                    }
                }
                counts[5] += kls.len() + ems.len();
            }
        }
    }
    bad.truncate(10);
    Ok(Outcome {
        ok: bad.is_empty(),
        detail: format!(
            "{} kappa, {} phi, {} liftings, {} chi, {} rho, {} valid morphisms, mismatches {:?}",
            counts[0], counts[1], counts[2], counts[3], counts[4], counts[5], bad
        ),
    })
}

fn poset_pairs() -> Result<Vec<(String, Arc<FinCategory>, Vec<usize>, Vec<usize>, Monad, Monad)>> {
    let mut out = Vec::new();
    for n in 0..=4 {
        for (i, p) in posets(n).iter().enumerate() {
            let cat = Arc::new(poset_category(p));
            let ops = closure_operators(p);
            let monads = ops
                .iter()
                .map(|c| Monad::from_monoidal(closure_monad(&cat, c)?))
                .collect::<Result<Vec<_>>>()?;
            for (si, s) in ops.iter().enumerate() {
                for (ti, t) in ops.iter().enumerate() {
                    out.push((
                        format!("poset{n}.{i} s={s:?} t={t:?}"),
                        cat.clone(),
                        s.clone(),
                        t.clone(),
                        monads[si].clone(),
                        monads[ti].clone(),
                    ));
                }
            }
        }
    }
    Ok(out)
}

fn criterion6(pairs: &[Pair], limits: &Limits) -> Result<Outcome> {
    let mut bad = Vec::new();
    let (mut total, mut applicable) = (0, 0);
    let mut check = |d: DistLawCell, label: &str| {
        total += 1;
        match derive_naturality(&d) {
            noiter::distlaw::Naturality::Derived(_) => applicable += 1,
            noiter::distlaw::Naturality::NotApplicable(_) => {}
            noiter::distlaw::Naturality::Violated(r) => {
                applicable += 1;
                bad.push(format!("{label}: {}", r.failed_names()));
            }
        }
    };
    for p in pairs {
        for l in enumerate_distlaw_candidates(&p.s, &p.t, limits)? {
            check(DistLawCell::new(p.s.clone(), p.t.clone(), l)?, &p.label);
        }
    }
    for (label, _, _, _, s, t) in poset_pairs()? {
        for l in enumerate_distlaw_candidates(&s, &t, limits)? {
            check(DistLawCell::new(s.clone(), t.clone(), l)?, &label);
        }
    }
    Ok(Outcome {
        ok: bad.is_empty(),
        detail: format!("{total} families, {applicable} satisfy axioms 1-2, violations {:?}", bad),
    })
}

fn criterion7(limits: &Limits) -> Result<Outcome> {
    let mut bad = Vec::new();
    let (mut total, mut with_law) = (0, 0);
    for (label, cat, s, t, sm, tm) in poset_pairs()? {
        total += 1;
        let predicted = cat.objects().all(|x| !cat.hom(noiter::fincat::Obj(s[t[x.0]]), noiter::fincat::Obj(t[s[x.0]])).is_empty());
        let valid: Vec<_> = enumerate_distlaw_candidates(&sm, &tm, limits)?
            .into_iter()
            .map(|l| DistLawCell::new(sm.clone(), tm.clone(), l))
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .filter(|d| check_distlaw_monoidal(d).holds())
            .collect();
        with_law += usize::from(predicted);
        if valid.len() != usize::from(predicted) {
            bad.push(format!("{label}: predicted {predicted}, found {}", valid.len()));
        }
    }
    bad.truncate(10);
    Ok(Outcome {
        ok: bad.is_empty(),
        detail: format!("{total} closure pairs, {with_law} with a law, mismatches {:?}", bad),
    })
}

fn criterion8(pairs: &[Pair], limits: &Limits) -> Result<Outcome> {
    let mut bad = Vec::new();
    let mut total = 0;
    let mut laws: Vec<(String, DistLawCell)> = Vec::new();
    for p in pairs {
        laws.extend(valid_lambdas(p, limits)?.into_iter().map(|d| (p.label.clone(), d)));
    }
    for (label, _, _, _, s, t) in poset_pairs()? {
        let pair = Pair { label: label.clone(), probes: DistLawProbes::new(&s, &t, limits)?, s, t };
        laws.extend(valid_lambdas(&pair, limits)?.into_iter().map(|d| (label.clone(), d)));
    }
    for (label, d) in laws {
        total += 1;
        let m = compose_monads(&d)?;
        if !check_monoidal_laws(&m).holds() {
            bad.push(label);
        }
    }
    Ok(Outcome {
        ok: bad.is_empty(),
        detail: format!("{total} composite monads, failures {:?}", bad),
    })
}

fn main() -> ExitCode {
    let limits = Limits::from_env();
    let mut ok = true;
    ok &= run(1, "monoidal and extensive monads correspond", || criterion1(&limits));
    let pairs = match monad_pairs(&limits) {
        Ok(p) => p,
        Err(e) => {
            println!("setup FAIL: {e}");
            return ExitCode::FAILURE;
        }
    };
    ok &= run(2, "three distributive-law checkers agree", || criterion2(&pairs, &limits));
    ok &= run(3, "lambda and alpha correspond", || criterion3(&pairs, &limits));
    ok &= run(4, "algebra and in-between forms agree", || criterion4(&pairs, &limits));
    ok &= run(5, "morphism and transformation checkers agree; liftings roundtrip", || criterion5(&limits));
    ok &= run(6, "naturality derived from axioms 1-2", || criterion6(&pairs, &limits));
    ok &= run(7, "poset laws exist iff st <= ts, uniquely", || criterion7(&limits));
    ok &= run(8, "composite monads satisfy the monad laws", || criterion8(&pairs, &limits));
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
