//! Probe families for axioms quantified over 2-cells.
//!
//! An axiom of the form "for every 2-cell `ϑ: g ⇒ t h`" is evaluated on a
//! finite, deterministic family: the generator instance named by the caller,
//! every 2-cell between composites of the supplied generator functors, and
//! every pointwise 2-cell out of the terminal category (one per arrow
//! `a -> t b`).

use std::sync::Arc;

use crate::error::Result;
use crate::fincat::{compose, FinCategory, Functor, Labeled, NatTrans};
use crate::oracle::{enumerate_2cells, Limits};
use crate::report::Check;

/// Maximum word length of probe composites.
pub const PROBE_DEPTH: usize = 2;

#[derive(Debug, Clone)]
pub struct Probe {
    pub label: String,
    /// `g` in `ϑ: g ⇒ t h` (or `ϑ: g ⇒ h s`).
    pub lower: Functor,
    /// `h` in `ϑ: g ⇒ t h` (or `ϑ: g ⇒ h s`).
    pub upper: Functor,
    pub cell: NatTrans,
}

/// 2-cells `g ⇒ t ∘ h` for `g, h` ranging over `functors` with
/// `h: X -> dom t` and `g: X -> cod t`.
pub fn left_probes(functors: &[Labeled], t: &Functor, limits: &Limits) -> Result<Vec<Probe>> {
    let mut out = Vec::new();
    for h in functors.iter().filter(|h| h.functor.target() == t.source()) {
        let th = compose(t, &h.functor)?;
        for g in functors
            .iter()
            .filter(|g| g.functor.source() == h.functor.source() && g.functor.target() == t.target())
        {
            for (i, cell) in enumerate_2cells(&g.functor, &th, limits)?.into_iter().enumerate() {
                out.push(Probe {
                    label: format!("g={} h={} cell={}", g.label, h.label, i),
                    lower: g.functor.clone(),
                    upper: h.functor.clone(),
                    cell,
                });
            }
        }
    }
    Ok(out)
}

/// 2-cells `g ⇒ h ∘ s` for `g, h` ranging over `functors` with
/// `h: cod s -> Y` and `g: dom s -> Y`.
pub fn right_probes(functors: &[Labeled], s: &Functor, limits: &Limits) -> Result<Vec<Probe>> {
    let mut out = Vec::new();
    for h in functors.iter().filter(|h| h.functor.source() == s.target()) {
        let hs = compose(&h.functor, s)?;
        for g in functors
            .iter()
            .filter(|g| g.functor.source() == s.source() && g.functor.target() == h.functor.target())
        {
            for (i, cell) in enumerate_2cells(&g.functor, &hs, limits)?.into_iter().enumerate() {
                out.push(Probe {
                    label: format!("g={} h={} cell={}", g.label, h.label, i),
                    lower: g.functor.clone(),
                    upper: h.functor.clone(),
                    cell,
                });
            }
        }
    }
    Ok(out)
}

/// One probe per arrow `f: a -> t b`, as a 2-cell between functors out of
/// the terminal category.
pub fn pointwise_left_probes(t: &Functor) -> Result<Vec<Probe>> {
    let cat = t.source();
    let point = Arc::new(FinCategory::terminal());
    let mut out = Vec::new();
    for b in cat.objects() {
        let const_b = Functor::constant(&point, cat, b);
        let tb = compose(t, &const_b)?;
        for a in cat.objects() {
            let const_a = Functor::constant(&point, t.target(), a);
            for &f in t.target().hom(a, t.obj(b)) {
                out.push(Probe {
                    label: format!("point f={}", t.target().describe(f)),
                    lower: const_a.clone(),
                    upper: const_b.clone(),
                    cell: NatTrans::new(const_a.clone(), tb.clone(), vec![f])?,
                });
            }
        }
    }
    Ok(out)
}

/// Records one instance comparing two pasted 2-cells componentwise.
pub fn record_cells(
    check: &mut Check,
    lhs: Result<NatTrans>,
    rhs: Result<NatTrans>,
    label: impl Fn() -> String,
) {
    match (lhs, rhs) {
        (Ok(l), Ok(r)) => {
            let cat = l.source_category().clone();
            let bad = cat
                .objects()
                .find(|&x| l.at(x) != r.at(x) || l.src() != r.src() || l.dst() != r.dst());
            check.record(bad.is_none(), || {
                format!("{} at={}", label(), cat.object_name(bad.expect("failure")))
            });
        }
        (Err(e), _) | (_, Err(e)) => check.fail(format!("{} error={}", label(), e)),
    }
}
