//! Exhaustive enumerators. Every enumerator computes its candidate count up
//! front and refuses, rather than truncates, when it exceeds the cap.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::fincat::{check_functor, compose, Arr, FinCategory, Functor, NatTrans, Obj};
use crate::monadcore::{check_extensive_laws, check_monoidal_laws, MonadExtensive, MonadMonoidal, Monad};

pub const DEFAULT_MAX_CANDIDATES: usize = 10_000;
pub const CAP_ENV_VAR: &str = "NOITER_MAX_CANDIDATES";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub max_candidates: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { max_candidates: DEFAULT_MAX_CANDIDATES }
    }
}

impl Limits {
    pub fn new(max_candidates: usize) -> Self {
        Limits { max_candidates }
    }

    /// Reads the cap from `NOITER_MAX_CANDIDATES`, falling back to the default.
    pub fn from_env() -> Self {
        std::env::var(CAP_ENV_VAR)
            .ok()
            .and_then(|v| v.parse().ok())
            .map(Limits::new)
            .unwrap_or_default()
    }

    fn admit(&self, what: impl FnOnce() -> String, needed: u128) -> Result<()> {
        if needed > self.max_candidates as u128 {
            Err(Error::CapExceeded { what: what(), needed, cap: self.max_candidates })
        } else {
            Ok(())
        }
    }
}

/// Mixed-radix odometer over `choices`, last position fastest.
fn product<T: Copy>(choices: &[Vec<T>]) -> Vec<Vec<T>> {
    if choices.iter().any(Vec::is_empty) {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut idx = vec![0usize; choices.len()];
    loop {
        out.push(idx.iter().zip(choices).map(|(&i, c)| c[i]).collect());
        let mut pos = choices.len();
        loop {
            if pos == 0 {
                return out;
            }
            pos -= 1;
            idx[pos] += 1;
            if idx[pos] < choices[pos].len() {
                break;
            }
            idx[pos] = 0;
        }
    }
}

fn count<T>(choices: &[Vec<T>]) -> u128 {
    choices
        .iter()
        .map(|c| c.len() as u128)
        .fold(1u128, |acc, n| acc.saturating_mul(n))
}

/// All functors `A -> B`, ordered by object map then arrow map.
pub fn enumerate_functors(
    a: &Arc<FinCategory>,
    b: &Arc<FinCategory>,
    limits: &Limits,
) -> Result<Vec<Functor>> {
    let obj_choices: Vec<Vec<Obj>> = a.objects().map(|_| b.objects().collect()).collect();
    limits.admit(|| "functor object maps".into(), count(&obj_choices))?;
    let obj_maps = product(&obj_choices);
    let mut per_map = Vec::with_capacity(obj_maps.len());
    let mut total = obj_maps.len() as u128;
    for obj in &obj_maps {
        let arr_choices: Vec<Vec<Arr>> = a
            .arrows()
            .map(|f| {
                let (x, y) = (obj[a.dom(f).0], obj[a.cod(f).0]);
                if a.is_identity(f) {
                    vec![b.identity(x)]
                } else {
                    b.hom(x, y).to_vec()
                }
            })
            .collect();
        total = total.saturating_add(count(&arr_choices));
        per_map.push(arr_choices);
    }
    limits.admit(|| "functor candidates".into(), total)?;
    let mut out = Vec::new();
    for (obj, arr_choices) in obj_maps.into_iter().zip(per_map) {
        for arr in product(&arr_choices) {
            let f = Functor::new(a.clone(), b.clone(), obj.clone(), arr)?;
            if check_functor(&f).holds() {
                out.push(f);
            }
        }
    }
    Ok(out)
}

pub fn enumerate_endofunctors(c: &Arc<FinCategory>, limits: &Limits) -> Result<Vec<Functor>> {
    enumerate_functors(c, c, limits)
}

/// Every well-typed component family `F ⇒ G`, natural or not.
pub fn enumerate_families(f: &Functor, g: &Functor, limits: &Limits) -> Result<Vec<NatTrans>> {
    let src = f.source();
    let tgt = f.target();
    let choices: Vec<Vec<Arr>> =
        src.objects().map(|a| tgt.hom(f.obj(a), g.obj(a)).to_vec()).collect();
    limits.admit(|| "component families".into(), count(&choices))?;
    product(&choices)
        .into_iter()
        .map(|cs| NatTrans::new(f.clone(), g.clone(), cs))
        .collect()
}

/// Every natural transformation `F ⇒ G`.
pub fn enumerate_2cells(f: &Functor, g: &Functor, limits: &Limits) -> Result<Vec<NatTrans>> {
    Ok(enumerate_families(f, g, limits)?
        .into_iter()
        .filter(NatTrans::is_natural)
        .collect())
}

/// All `(T, η, μ)` satisfying the monoidal laws.
pub fn enumerate_monads_monoidal(c: &Arc<FinCategory>, limits: &Limits) -> Result<Vec<MonadMonoidal>> {
    let id = Functor::identity(c);
    let mut out = Vec::new();
    for t in enumerate_endofunctors(c, limits)? {
        let tt = compose(&t, &t)?;
        let units = enumerate_2cells(&id, &t, limits)?;
        if units.is_empty() {
            continue;
        }
        let mults = enumerate_2cells(&tt, &t, limits)?;
        for eta in &units {
            for mu in &mults {
                let m = MonadMonoidal::new(t.clone(), eta.clone(), mu.clone())?;
                if check_monoidal_laws(&m).holds() {
                    out.push(m);
                }
            }
        }
    }
    Ok(out)
}

/// All Kleisli triples, searched directly over object maps, unit families
/// and extension tables, with no reference to functors or multiplications.
pub fn enumerate_monads_extensive(c: &Arc<FinCategory>, limits: &Limits) -> Result<Vec<MonadExtensive>> {
    let obj_choices: Vec<Vec<Obj>> = c.objects().map(|_| c.objects().collect()).collect();
    limits.admit(|| "extensive object maps".into(), count(&obj_choices))?;
    let mut out = Vec::new();
    for obj in product(&obj_choices) {
        let unit_choices: Vec<Vec<Arr>> =
            c.objects().map(|a| c.hom(a, obj[a.0]).to_vec()).collect();
        limits.admit(|| "unit families".into(), count(&unit_choices))?;
        for unit in product(&unit_choices) {
            let keys = crate::monadcore::extensive_keys(c, &obj);
            // axioms 1 and 2 restrict each entry independently
            let ext_choices: Vec<Vec<Arr>> = keys
                .iter()
                .map(|&(b, f)| {
                    let a = c.dom(f);
                    if a == b && f == unit[a.0] {
                        vec![c.identity(obj[a.0])]
                    } else {
                        c.hom(obj[a.0], obj[b.0])
                            .iter()
                            .copied()
                            .filter(|&g| c.try_compose(g, unit[a.0]) == Some(f))
                            .collect()
                    }
                })
                .collect();
            limits.admit(|| "extension tables".into(), count(&ext_choices))?;
            for values in product(&ext_choices) {
                let ext: BTreeMap<(Obj, Arr), Arr> = keys.iter().copied().zip(values).collect();
                let m = MonadExtensive::new(c.clone(), obj.clone(), unit.clone(), ext)?;
                if check_extensive_laws(&m).holds() {
                    out.push(m);
                }
            }
        }
    }
    Ok(out)
}

/// All monads on `c`, each carrying both presentations.
pub fn enumerate_monads(c: &Arc<FinCategory>, limits: &Limits) -> Result<Vec<Monad>> {
    enumerate_monads_monoidal(c, limits)?
        .into_iter()
        .map(Monad::from_monoidal)
        .collect()
}

/// Every well-typed family `λ a: S T a -> T S a`, natural or not.
pub fn enumerate_distlaw_candidates(s: &Monad, t: &Monad, limits: &Limits) -> Result<Vec<NatTrans>> {
    let st = compose(s.functor(), t.functor())?;
    let ts = compose(t.functor(), s.functor())?;
    enumerate_families(&st, &ts, limits)
}

/// Every natural transformation `S T S ⇒ T S`.
pub fn enumerate_alpha_candidates(s: &Monad, t: &Monad, limits: &Limits) -> Result<Vec<NatTrans>> {
    let ts = compose(t.functor(), s.functor())?;
    let sts = compose(s.functor(), &ts)?;
    enumerate_2cells(&sts, &ts, limits)
}

/// Every family of per-object operation tables `f: x -> T S a  ↦  S x -> T S a`.
pub fn enumerate_algebra_op_tables(
    s: &Monad,
    t: &Monad,
    limits: &Limits,
) -> Result<Vec<Vec<BTreeMap<Arr, Arr>>>> {
    let c = s.base();
    let mut keys = Vec::new();
    let mut choices = Vec::new();
    for a in c.objects() {
        let tsa = t.obj(s.obj(a));
        for f in c.arrows().filter(|&f| c.cod(f) == tsa) {
            keys.push((a, f));
            choices.push(c.hom(s.obj(c.dom(f)), tsa).to_vec());
        }
    }
    limits.admit(|| "algebra operation tables".into(), count(&choices))?;
    Ok(product(&choices)
        .into_iter()
        .map(|values| {
            let mut tables = vec![BTreeMap::new(); c.num_objects()];
            for (&(a, f), g) in keys.iter().zip(values) {
                tables[a.0].insert(f, g);
            }
            tables
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn odometer_counts_and_orders() {
        let p = product(&[vec![0, 1], vec![5, 6, 7]]);
        assert_eq!(p.len(), 6);
        assert_eq!(p[0], vec![0, 5]);
        assert_eq!(p[1], vec![0, 6]);
        assert_eq!(p[5], vec![1, 7]);
        assert!(product::<u8>(&[vec![1], vec![]]).is_empty());
        assert_eq!(product::<u8>(&[]), vec![Vec::<u8>::new()]);
    }

    #[test]
    fn cap_is_refused_not_truncated() {
        let c = Arc::new(super::super::chain_category(4));
        let err = enumerate_endofunctors(&c, &Limits::new(10)).unwrap_err();
        assert!(matches!(err, Error::CapExceeded { needed: 256, cap: 10, .. }));
    }
}
