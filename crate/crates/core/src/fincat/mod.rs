//! Finite categories, functors and natural transformations as explicit
//! tables, with vertical composition and whiskering.

mod category;
mod functor;
mod nat;
mod probe;

pub use category::{check_category, ArrowData, Arr, FinCategory, Obj};
pub use functor::{check_functor, compose, Functor};
pub use nat::{check_nat_trans, vcomp, vcomp_all, whisker_left, whisker_right, NatTrans};
pub use probe::{composites, Labeled};

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::oracle::{chain_category, enumerate_2cells, enumerate_functors, monoid_category, Limits};

    fn chain(n: usize) -> Arc<FinCategory> {
        Arc::new(chain_category(n))
    }

    fn monotone(src: &Arc<FinCategory>, tgt: &Arc<FinCategory>, map: &[usize]) -> Functor {
        let obj: Vec<Obj> = map.iter().map(|&i| Obj(i)).collect();
        let arr = src
            .arrows()
            .map(|f| {
                let (a, b) = (obj[src.dom(f).0], obj[src.cod(f).0]);
                tgt.hom(a, b).first().copied().unwrap_or(Arr(0))
            })
            .collect();
        Functor::new(src.clone(), tgt.clone(), obj, arr).unwrap()
    }

    #[test]
    fn identity_functor_is_valid() {
        let c = chain(3);
        assert!(check_functor(&Functor::identity(&c)).holds());
    }

    #[test]
    fn monotone_map_2_chain_to_3_chain_is_a_functor() {
        let (c2, c3) = (chain(2), chain(3));
        for map in [[0, 0], [0, 1], [0, 2], [1, 2], [2, 2]] {
            let f = monotone(&c2, &c3, &map);
            assert!(check_functor(&f).holds(), "{map:?}");
        }
    }

    #[test]
    fn identity_sent_to_non_identity_is_named() {
        let m = Arc::new(monoid_category(&[vec![0, 1], vec![1, 0]]).unwrap());
        let f = Functor::new(m.clone(), m.clone(), vec![Obj(0)], vec![Arr(1), Arr(1)]).unwrap();
        let r = check_functor(&f);
        let ids = r.get("functor.identities").unwrap();
        assert!(!ids.passed());
        assert_eq!(ids.witnesses, vec!["object=*".to_string()]);
    }

    #[test]
    fn identity_nat_trans_is_valid() {
        let c = chain(3);
        let f = monotone(&c, &c, &[1, 1, 2]);
        assert!(check_nat_trans(&NatTrans::identity(&f)).holds());
    }

    #[test]
    fn poset_2cells_exist_iff_pointwise_below() {
        let c = chain(3);
        let funcs = enumerate_functors(&c, &c, &Limits::default()).unwrap();
        for f in &funcs {
            for g in &funcs {
                let cells = enumerate_2cells(f, g, &Limits::default()).unwrap();
                let below = c.objects().all(|a| f.obj(a) <= g.obj(a));
                assert_eq!(cells.len(), usize::from(below));
                for cell in &cells {
                    assert!(check_nat_trans(cell).holds());
                }
            }
        }
    }

    #[test]
    fn wrong_codomain_is_a_typing_error_before_naturality() {
        let c = chain(2);
        let id = Functor::identity(&c);
        let top = monotone(&c, &c, &[1, 1]);
        // components must be 0<=1 and 1<=1; swap in 0<=0 at object 0
        let bad = NatTrans::new(
            id.clone(),
            top,
            vec![c.find_arrow("0<=0").unwrap(), c.find_arrow("1<=1").unwrap()],
        )
        .unwrap();
        let r = check_nat_trans(&bad);
        assert!(!r.get("nat.typed").unwrap().passed());
        assert!(r.get("nat.naturality").is_none());
    }

    #[test]
    fn vcomp_with_identity_and_poset_uniqueness() {
        let c = chain(3);
        let f = monotone(&c, &c, &[0, 1, 1]);
        let g = monotone(&c, &c, &[1, 1, 2]);
        let h = monotone(&c, &c, &[2, 2, 2]);
        let lim = Limits::default();
        let fg = enumerate_2cells(&f, &g, &lim).unwrap().remove(0);
        let gh = enumerate_2cells(&g, &h, &lim).unwrap().remove(0);
        let fh = enumerate_2cells(&f, &h, &lim).unwrap().remove(0);
        assert_eq!(vcomp(&NatTrans::identity(&g), &fg).unwrap(), fg);
        assert_eq!(vcomp(&gh, &fg).unwrap(), fh);
        assert!(vcomp(&fg, &gh).is_err());
    }

    #[test]
    fn whiskering_by_identity_is_identity() {
        let c = chain(3);
        let f = monotone(&c, &c, &[0, 1, 1]);
        let g = monotone(&c, &c, &[1, 1, 2]);
        let cell = enumerate_2cells(&f, &g, &Limits::default()).unwrap().remove(0);
        let id = Functor::identity(&c);
        assert_eq!(whisker_left(&id, &cell).unwrap(), cell);
        assert_eq!(whisker_right(&cell, &id).unwrap(), cell);
    }

    #[test]
    fn whiskering_in_a_monoid_is_multiplication_by_image() {
        // Z/3: the automorphism x -> 2x and the 2-cell 1 => 1 given by element 1
        let z3: Vec<Vec<usize>> = (0..3).map(|i| (0..3).map(|j| (i + j) % 3).collect()).collect();
        let m = Arc::new(monoid_category(&z3).unwrap());
        let double = Functor::new(
            m.clone(),
            m.clone(),
            vec![Obj(0)],
            (0..3).map(|i| Arr((2 * i) % 3)).collect(),
        )
        .unwrap();
        let id = Functor::identity(&m);
        let cell = NatTrans::new(id.clone(), id.clone(), vec![Arr(1)]).unwrap();
        assert!(check_nat_trans(&cell).holds());
        assert_eq!(whisker_left(&double, &cell).unwrap().at(Obj(0)), Arr(2));
        assert_eq!(whisker_right(&cell, &double).unwrap().at(Obj(0)), Arr(1));
    }

    #[test]
    fn composites_dedupe_equal_functors() {
        let c = chain(3);
        let id = Functor::identity(&c);
        let top = monotone(&c, &c, &[2, 2, 2]);
        let words = composites(&[("1", &id), ("T", &top)], 2);
        let labels: Vec<&str> = words.iter().map(|w| w.label.as_str()).collect();
        assert_eq!(labels, vec!["1", "T"]);
    }
}
