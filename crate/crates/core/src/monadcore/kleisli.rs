use std::collections::HashMap;
use std::sync::Arc;

use super::extensive::MonadExtensive;
use crate::error::{Error, Result};
use crate::fincat::{Arr, ArrowData, FinCategory, Functor, Obj};

/// The Kleisli category of a monad in extension form.
///
/// A Kleisli arrow `a ⇝ b` is a base arrow `f: a -> T b` together with `b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KleisliCategory {
    category: Arc<FinCategory>,
    arrows: Vec<(Obj, Arr)>,
    index: HashMap<(Obj, Arr), Arr>,
}

impl KleisliCategory {
    pub fn category(&self) -> &Arc<FinCategory> {
        &self.category
    }

    /// Kleisli arrow for `f: a -> T b`.
    pub fn arrow(&self, b: Obj, f: Arr) -> Option<Arr> {
        self.index.get(&(b, f)).copied()
    }

    /// The pair `(b, f: a -> T b)` behind a Kleisli arrow.
    pub fn underlying(&self, k: Arr) -> (Obj, Arr) {
        self.arrows[k.0]
    }
}

/// Objects of the base; `Hom(a, b) = Hom(a, T b)`; identity `η`;
/// `g ∘ f = g^T ∘ f`.
pub fn kleisli_category(m: &MonadExtensive) -> Result<KleisliCategory> {
    let cat = m.base();
    let mut arrows = Vec::new();
    let mut data = Vec::new();
    for a in cat.objects() {
        for b in cat.objects() {
            for &f in cat.hom(a, m.obj(b)) {
                data.push(ArrowData {
                    name: format!("{}~{}", cat.arrow_name(f), cat.object_name(b)),
                    dom: a,
                    cod: b,
                });
                arrows.push((b, f));
            }
        }
    }
    let index: HashMap<(Obj, Arr), Arr> =
        arrows.iter().enumerate().map(|(i, &k)| (k, Arr(i))).collect();
    let identities = cat
        .objects()
        .map(|a| {
            index
                .get(&(a, m.eta(a)))
                .copied()
                .ok_or_else(|| Error::shape("unit component is not typed a -> Ta"))
        })
        .collect::<Result<Vec<_>>>()?;
    let mut comp = Vec::new();
    for (fi, &(b, f)) in arrows.iter().enumerate() {
        for (gi, &(c, g)) in arrows.iter().enumerate() {
            if cat.dom(g) != b {
                continue;
            }
            let composite = m
                .ext(c, g)
                .and_then(|gt| cat.try_compose(gt, f))
                .and_then(|h| index.get(&(c, h)).copied())
                .ok_or_else(|| Error::shape("extension table incomplete"))?;
            comp.push((Arr(gi), Arr(fi), composite));
        }
    }
    let category = FinCategory::new(cat.object_names().to_vec(), data, identities, comp)?;
    Ok(KleisliCategory {
        category: Arc::new(category),
        arrows,
        index,
    })
}

impl KleisliCategory {
    /// The canonical inclusion `h ↦ η b ∘ h` of the base.
    pub fn inclusion(&self, m: &MonadExtensive) -> Result<Functor> {
        let cat = m.base();
        let arr_map = cat
            .arrows()
            .map(|h| {
                let b = cat.cod(h);
                cat.try_compose(m.eta(b), h)
                    .and_then(|eh| self.arrow(b, eh))
                    .ok_or_else(|| Error::shape("unit component is not typed a -> Ta"))
            })
            .collect::<Result<Vec<_>>>()?;
        Functor::new(cat.clone(), self.category.clone(), cat.objects().collect(), arr_map)
    }
}
