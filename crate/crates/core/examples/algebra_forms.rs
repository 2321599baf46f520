//! The same distributive law as a lambda, an alpha and a table of S-algebra
//! structures on free T-algebras.

use std::sync::Arc;

use noiter::distlaw::{
    alpha_to_lambda, check_alpha_conditions, check_distlaw_algebra_ext, check_distlaw_inbetween_cat,
    check_distlaw_monoidal, lambda_to_alpha, DistLawAlgebraExt, DistLawCell,
};
use noiter::monadcore::Monad;
use noiter::oracle::{chain_category, closure_monad, enumerate_distlaw_candidates, Limits};

fn main() -> noiter::Result<()> {
    let cat = Arc::new(chain_category(3));
    let s = Monad::from_monoidal(closure_monad(&cat, &[1, 1, 2])?)?;
    let t = Monad::from_monoidal(closure_monad(&cat, &[2, 2, 2])?)?;
    let d = enumerate_distlaw_candidates(&s, &t, &Limits::default())?
        .into_iter()
        .map(|lam| DistLawCell::new(s.clone(), t.clone(), lam))
        .collect::<noiter::Result<Vec<_>>>()?
        .into_iter()
        .find(|d| check_distlaw_monoidal(d).holds())
        .expect("st <= ts here");

    let a = lambda_to_alpha(&d)?;
    println!("alpha conditions hold: {}", check_alpha_conditions(&a).holds());
    assert_eq!(alpha_to_lambda(&a)?, d);

    let x = DistLawAlgebraExt::from_lambda(&d)?;
    for (obj, ops) in x.tables().iter().enumerate() {
        println!("object {obj}: {} operation entries", ops.len());
    }
    print!("{}", check_distlaw_algebra_ext(&x).to_lines());
    assert!(check_distlaw_inbetween_cat(&x).holds());
    assert_eq!(x.extract_lambda()?, d);
    Ok(())
}
