//! Kleisli morphisms between monads on a two-element chain: the classical
//! axioms, the no-iteration form and the Kleisli lifting all agree.

use std::sync::Arc;

use noiter::fincat::compose;
use noiter::morphisms::{
    check_kl_classical, check_kl_morphism_cat, check_kl_noiter, compose_kl, kleisli_lifting_from_family,
    KlMorphismCell,
};
use noiter::oracle::{chain_category, enumerate_endofunctors, enumerate_families, enumerate_monads, Limits};

fn main() -> noiter::Result<()> {
    let limits = Limits::default();
    let cat = Arc::new(chain_category(2));
    let monads = enumerate_monads(&cat, &limits)?;
    let functors = enumerate_endofunctors(&cat, &limits)?;
    let mut valid = Vec::new();
    let mut total = 0;
    for t in &monads {
        for s in &monads {
            for f in &functors {
                let ft = compose(f, t.functor())?;
                let sf = compose(s.functor(), f)?;
                for kappa in enumerate_families(&ft, &sf, &limits)? {
                    let m = KlMorphismCell::new(t.clone(), s.clone(), f.clone(), kappa)?;
                    let a = check_kl_classical(&m).holds();
                    assert_eq!(a, check_kl_noiter(&m, &limits)?.holds());
                    assert_eq!(a, check_kl_morphism_cat(&m).holds());
                    total += 1;
                    if a {
                        kleisli_lifting_from_family(&m)?;
                        valid.push(m);
                    }
                }
            }
        }
    }
    println!("{} monads, {total} candidate families, {} Kleisli morphisms", monads.len(), valid.len());

    let mut composites = 0;
    for first in &valid {
        for second in valid.iter().filter(|s| s.source() == first.target()) {
            assert!(check_kl_classical(&compose_kl(second, first)?).holds());
            composites += 1;
        }
    }
    println!("{composites} composites, all valid");
    Ok(())
}
