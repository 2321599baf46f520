//! Distributive laws between closure operators on a three-element chain.
//! A law exists exactly when st <= ts, and the composite is the closure ts.

use std::sync::Arc;

use noiter::distlaw::{
    check_distlaw_monoidal, check_distlaw_noiter_2cat, check_distlaw_noiter_cat, compose_monads, DistLawCell,
};
use noiter::monadcore::Monad;
use noiter::oracle::{chain_category, closure_monad, closure_operators, enumerate_distlaw_candidates, Limits, Poset};

fn main() -> noiter::Result<()> {
    let limits = Limits::default();
    let p = Poset::chain(3);
    let cat = Arc::new(chain_category(3));
    let ops = closure_operators(&p);
    for s in &ops {
        for t in &ops {
            let sm = Monad::from_monoidal(closure_monad(&cat, s)?)?;
            let tm = Monad::from_monoidal(closure_monad(&cat, t)?)?;
            let mut law = None;
            for lam in enumerate_distlaw_candidates(&sm, &tm, &limits)? {
                let d = DistLawCell::new(sm.clone(), tm.clone(), lam)?;
                let ok = check_distlaw_monoidal(&d).holds();
                assert_eq!(ok, check_distlaw_noiter_2cat(&d, &limits)?.holds());
                assert_eq!(ok, check_distlaw_noiter_cat(&d, &limits)?.holds());
                if ok {
                    law = Some(d);
                }
            }
            match law {
                Some(d) => {
                    let ts = compose_monads(&d)?;
                    let map: Vec<usize> = ts.functor().obj_map().iter().map(|o| o.0).collect();
                    println!("s={s:?} t={t:?} law, composite {map:?}");
                }
                None => println!("s={s:?} t={t:?} none"),
            }
        }
    }
    Ok(())
}
