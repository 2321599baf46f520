//! Closure operators on a three-element chain, as monads in both presentations.

use std::sync::Arc;

use noiter::monadcore::{check_extensive_laws, check_monoidal_laws, kleisli_category, to_extensive, Monad};
use noiter::oracle::{chain_category, closure_monad, closure_operators, Poset};

fn main() -> noiter::Result<()> {
    let chain = Poset::chain(3);
    let cat = Arc::new(chain_category(3));
    for op in closure_operators(&chain) {
        let m = closure_monad(&cat, &op)?;
        let e = to_extensive(&m)?;
        let kl = kleisli_category(&e)?;
        println!(
            "closure {op:?}: monoidal={} extensive={} kleisli arrows={}",
            check_monoidal_laws(&m).holds(),
            check_extensive_laws(&e).holds(),
            kl.category().num_arrows(),
        );
    }

    // Inflationary but not idempotent, so no monad.
    match closure_monad(&cat, &[1, 2, 2]) {
        Ok(m) => println!("(1,2,2): monad={}", Monad::from_monoidal(m).is_ok()),
        Err(e) => println!("(1,2,2): rejected, {e}"),
    }
    Ok(())
}
