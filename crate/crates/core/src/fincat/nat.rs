use std::sync::Arc;

use super::category::{Arr, FinCategory, Obj};
use super::functor::{compose, Functor};
use crate::error::{Error, Result};
use crate::report::{Check, Report};

/// A family of components `src(a) -> dst(a)` between parallel functors.
///
/// Naturality is not enforced on construction: some families (distributive
/// law candidates in particular) are deliberately stored raw so naturality
/// can be derived or refuted by the checkers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NatTrans {
    src: Functor,
    dst: Functor,
    components: Vec<Arr>,
}

impl NatTrans {
    pub fn new(src: Functor, dst: Functor, components: Vec<Arr>) -> Result<Self> {
        if src.source() != dst.source() || src.target() != dst.target() {
            return Err(Error::shape("functors are not parallel"));
        }
        if components.len() != src.source().num_objects() {
            return Err(Error::shape(format!(
                "{} components for {} objects",
                components.len(),
                src.source().num_objects()
            )));
        }
        if let Some(c) = components.iter().find(|c| c.0 >= src.target().num_arrows()) {
            return Err(Error::OutOfRange { what: "arrow", index: c.0 });
        }
        Ok(NatTrans {
            src,
            dst,
            components,
        })
    }

    pub fn identity(func: &Functor) -> Self {
        let tgt = func.target();
        NatTrans {
            src: func.clone(),
            dst: func.clone(),
            components: func
                .source()
                .objects()
                .map(|a| tgt.identity(func.obj(a)))
                .collect(),
        }
    }

    pub fn src(&self) -> &Functor {
        &self.src
    }

    pub fn dst(&self) -> &Functor {
        &self.dst
    }

    pub fn source_category(&self) -> &Arc<FinCategory> {
        self.src.source()
    }

    pub fn target_category(&self) -> &Arc<FinCategory> {
        self.src.target()
    }

    pub fn at(&self, a: Obj) -> Arr {
        self.components[a.0]
    }

    pub fn components(&self) -> &[Arr] {
        &self.components
    }

    /// Every component has type `src(a) -> dst(a)`.
    pub fn is_typed(&self) -> bool {
        let tgt = self.target_category();
        self.source_category().objects().all(|a| {
            let c = self.at(a);
            tgt.dom(c) == self.src.obj(a) && tgt.cod(c) == self.dst.obj(a)
        })
    }

    pub fn is_natural(&self) -> bool {
        check_nat_trans(self).holds()
    }
}

/// Component typing first, then one naturality square per source arrow.
pub fn check_nat_trans(alpha: &NatTrans) -> Report {
    let src_cat = alpha.source_category();
    let tgt = alpha.target_category();
    let mut report = Report::new();

    let mut typed = Check::new("nat.typed");
    for a in src_cat.objects() {
        let c = alpha.at(a);
        typed.record(
            tgt.dom(c) == alpha.src.obj(a) && tgt.cod(c) == alpha.dst.obj(a),
            || format!("object={} component={}", src_cat.object_name(a), tgt.describe(c)),
        );
    }
    let well_typed = typed.passed();
    report.push(typed);
    if !well_typed {
        return report;
    }

    let mut nat = Check::new("nat.naturality");
    for h in src_cat.arrows() {
        let (c, d) = (src_cat.dom(h), src_cat.cod(h));
        let lhs = tgt.try_compose(alpha.at(d), alpha.src.arr(h));
        let rhs = tgt.try_compose(alpha.dst.arr(h), alpha.at(c));
        nat.record(lhs.is_some() && lhs == rhs, || {
            format!("arrow={}", src_cat.describe(h))
        });
    }
    report.push(nat);
    report
}

/// Vertical composite `β · α`.
pub fn vcomp(beta: &NatTrans, alpha: &NatTrans) -> Result<NatTrans> {
    if alpha.dst != beta.src {
        return Err(Error::shape("vertical composite of non-matching 2-cells"));
    }
    let tgt = alpha.target_category();
    let components = alpha
        .source_category()
        .objects()
        .map(|a| {
            tgt.try_compose(beta.at(a), alpha.at(a)).ok_or_else(|| {
                Error::shape(format!(
                    "components at {} do not compose",
                    alpha.source_category().object_name(a)
                ))
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(NatTrans {
        src: alpha.src.clone(),
        dst: beta.dst.clone(),
        components,
    })
}

/// Vertical composite of a chain listed outermost first: `[γ, β, α]` is `γ·β·α`.
pub fn vcomp_all(cells: &[&NatTrans]) -> Result<NatTrans> {
    let (last, rest) = cells
        .split_last()
        .ok_or_else(|| Error::shape("empty vertical composite"))?;
    rest.iter()
        .rev()
        .try_fold((*last).clone(), |acc, next| vcomp(next, &acc))
}

/// `Gα`, with components `G(α_a)`.
pub fn whisker_left(g: &Functor, alpha: &NatTrans) -> Result<NatTrans> {
    if g.source() != alpha.target_category() {
        return Err(Error::shape("left whisker: category mismatch"));
    }
    Ok(NatTrans {
        src: compose(g, &alpha.src)?,
        dst: compose(g, &alpha.dst)?,
        components: alpha.components.iter().map(|&c| g.arr(c)).collect(),
    })
}

/// `αH`, with components `α_{H a}`.
pub fn whisker_right(alpha: &NatTrans, h: &Functor) -> Result<NatTrans> {
    if h.target() != alpha.source_category() {
        return Err(Error::shape("right whisker: category mismatch"));
    }
    Ok(NatTrans {
        src: compose(&alpha.src, h)?,
        dst: compose(&alpha.dst, h)?,
        components: h.obj_map().iter().map(|&x| alpha.at(x)).collect(),
    })
}
