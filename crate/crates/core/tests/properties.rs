use std::sync::Arc;

use noiter::cli::{monad_document, SpecDocument};
use noiter::distlaw::{check_distlaw_monoidal, DistLawCell};
use noiter::fincat::FinCategory;
use noiter::monadcore::{to_extensive, to_monoidal, Monad};
use noiter::oracle::{
    closure_monad, closure_operators, enumerate_distlaw_candidates, enumerate_monads, monoid_category,
    monoid_tables, poset_category, posets, Limits,
};
use proptest::prelude::*;
use proptest::sample::Index;

/// A poset on up to three elements or a monoid of order up to three.
fn category(kind: bool, n: usize, i: Index) -> Arc<FinCategory> {
    if kind {
        let ps = posets(n);
        Arc::new(poset_category(i.get(&ps)))
    } else {
        let ts = monoid_tables(n);
        Arc::new(monoid_category(i.get(&ts)).unwrap())
    }
}

fn monad(c: &Arc<FinCategory>, j: Index) -> Monad {
    let ms = enumerate_monads(c, &Limits::default()).unwrap();
    j.get(&ms).clone()
}

proptest! {
    #[test]
    fn forms_roundtrip(kind: bool, n in 1usize..=3, i: Index, j: Index) {
        let c = category(kind, n, i);
        let m = monad(&c, j);
        let e = to_extensive(m.monoidal()).unwrap();
        prop_assert_eq!(&e, m.extensive());
        prop_assert_eq!(&to_monoidal(&e).unwrap(), m.monoidal());
    }

    #[test]
    fn documents_reparse(kind: bool, n in 1usize..=3, i: Index, j: Index, ext: bool) {
        let c = category(kind, n, i);
        let doc = monad_document(&monad(&c, j), ext);
        let text = doc.to_text();
        let back = SpecDocument::parse(&text).unwrap();
        prop_assert_eq!(&back, &doc);
        prop_assert_eq!(back.to_text(), text);
    }

    #[test]
    fn closure_laws_follow_the_order(n in 1usize..=3, i: Index, a: Index, b: Index) {
        let ps = posets(n);
        let p = i.get(&ps);
        let c = Arc::new(poset_category(p));
        let ops = closure_operators(p);
        let (s, t) = (a.get(&ops), b.get(&ops));
        let sm = Monad::from_monoidal(closure_monad(&c, s).unwrap()).unwrap();
        let tm = Monad::from_monoidal(closure_monad(&c, t).unwrap()).unwrap();
        let valid = enumerate_distlaw_candidates(&sm, &tm, &Limits::default())
            .unwrap()
            .into_iter()
            .filter(|lam| check_distlaw_monoidal(&DistLawCell::new(sm.clone(), tm.clone(), lam.clone()).unwrap()).holds())
            .count();
        let below = (0..n).all(|x| p.leq(s[t[x]], t[s[x]]));
        prop_assert_eq!(valid, usize::from(below));
    }
}
