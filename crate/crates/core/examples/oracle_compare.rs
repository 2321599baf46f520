//! Cross-checks every presentation against the others over small posets and monoids.

use std::sync::Arc;

use noiter::oracle::{
    compare_distlaws, compare_monad_forms, compare_morphisms, compare_poset_laws, monoid_category, monoid_tables,
    poset_category, posets, Comparison, Limits,
};

fn show(label: &str, c: &Comparison) {
    println!(
        "{label:<10} {:<20} candidates={:<6} positive={:<5} {}",
        c.name,
        c.candidates,
        c.positive,
        if c.agrees() { "agree" } else { "DISAGREE" }
    );
}

fn main() -> noiter::Result<()> {
    let limits = Limits::default();
    for (i, p) in posets(3).iter().enumerate() {
        let cat = Arc::new(poset_category(p));
        let label = format!("poset:3:{i}");
        show(&label, &compare_monad_forms(&cat, &limits)?);
        show(&label, &compare_poset_laws(p, &cat, &limits)?);
    }
    for (i, t) in monoid_tables(2).iter().enumerate() {
        let cat = Arc::new(monoid_category(t)?);
        let label = format!("monoid:2:{i}");
        for c in compare_distlaws(&cat, &limits)?.iter().chain(&compare_morphisms(&cat, &limits)?) {
            show(&label, c);
        }
    }
    Ok(())
}
