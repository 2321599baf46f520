//! Conversion between documents and library values.

use std::collections::{BTreeMap, HashSet};
use std::sync::Arc;

use super::schema::*;
use crate::distlaw::{AlgebraFormLaw, DistLawAlgebraExt, DistLawCell};
use crate::error::{Error, Result};
use crate::report::{Check, Report};
use crate::fincat::{compose, Arr, ArrowData, FinCategory, Functor, NatTrans, Obj};
use crate::monadcore::{Monad, MonadExtensive, MonadMonoidal};
use crate::morphisms::{
    EMMorphismCell, EMTransformationCell, KlMorphismCell, KlTransformationCell,
};

fn unresolved(name: &str, context: impl Into<String>) -> Error {
    Error::Unresolved { name: name.to_string(), context: context.into() }
}

fn obj(cat: &FinCategory, name: &str, ctx: &str) -> Result<Obj> {
    cat.find_object(name).ok_or_else(|| unresolved(name, format!("{ctx}: no such object")))
}

fn arr(cat: &FinCategory, name: &str, ctx: &str) -> Result<Arr> {
    cat.find_arrow(name).ok_or_else(|| unresolved(name, format!("{ctx}: no such arrow")))
}

pub fn decode_category(doc: &CategoryDoc) -> Result<Arc<FinCategory>> {
    let index: BTreeMap<&str, usize> =
        doc.objects.iter().enumerate().map(|(i, n)| (n.as_str(), i)).collect();
    let o = |name: &str, ctx: &str| {
        index
            .get(name)
            .map(|&i| Obj(i))
            .ok_or_else(|| unresolved(name, format!("{ctx}: no such object")))
    };
    let arrows = doc
        .arrows
        .iter()
        .map(|a| {
            Ok(ArrowData {
                name: a.name.clone(),
                dom: o(&a.dom, &format!("arrow {}", a.name))?,
                cod: o(&a.cod, &format!("arrow {}", a.name))?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let arrow_index: BTreeMap<&str, usize> =
        doc.arrows.iter().enumerate().map(|(i, a)| (a.name.as_str(), i)).collect();
    let a = |name: &str, ctx: &str| {
        arrow_index
            .get(name)
            .map(|&i| Arr(i))
            .ok_or_else(|| unresolved(name, format!("{ctx}: no such arrow")))
    };
    for k in doc.identities.keys() {
        o(k, "identities")?;
    }
    let identities = doc
        .objects
        .iter()
        .map(|x| {
            let name = doc
                .identities
                .get(x)
                .ok_or_else(|| Error::Shape(format!("identities: object {x} has no identity")))?;
            a(name, "identities")
        })
        .collect::<Result<Vec<_>>>()?;
    let mut comp = Vec::new();
    for (i, f) in arrows.iter().enumerate() {
        comp.push((identities[f.cod.0], Arr(i), Arr(i)));
        comp.push((Arr(i), identities[f.dom.0], Arr(i)));
    }
    for [g, f, h] in &doc.composites {
        comp.push((a(g, "composites")?, a(f, "composites")?, a(h, "composites")?));
    }
    Ok(Arc::new(FinCategory::new(doc.objects.clone(), arrows, identities, comp)?))
}

pub fn encode_category(cat: &FinCategory) -> CategoryDoc {
    let mut composites = Vec::new();
    for g in cat.arrows().filter(|&g| !cat.is_identity(g)) {
        for f in cat.arrows().filter(|&f| !cat.is_identity(f)) {
            if let Some(h) = cat.table_entry(g, f) {
                composites.push([
                    cat.arrow_name(g).to_string(),
                    cat.arrow_name(f).to_string(),
                    cat.arrow_name(h).to_string(),
                ]);
            }
        }
    }
    CategoryDoc {
        objects: cat.object_names().to_vec(),
        arrows: cat
            .arrows()
            .map(|f| ArrowDoc {
                name: cat.arrow_name(f).to_string(),
                dom: cat.object_name(cat.dom(f)).to_string(),
                cod: cat.object_name(cat.cod(f)).to_string(),
            })
            .collect(),
        identities: cat
            .objects()
            .map(|x| (cat.object_name(x).to_string(), cat.arrow_name(cat.identity(x)).to_string()))
            .collect(),
        composites,
    }
}

fn total_map<K: Copy, V>(
    keys: impl Iterator<Item = K>,
    key_name: impl Fn(K) -> String,
    map: &BTreeMap<String, String>,
    ctx: &str,
    resolve: impl Fn(&str) -> Result<V>,
) -> Result<Vec<V>> {
    let mut used = HashSet::new();
    let out = keys
        .map(|k| {
            let name = key_name(k);
            let v = map
                .get(&name)
                .ok_or_else(|| Error::Shape(format!("{ctx}: no entry for {name}")))?;
            used.insert(name);
            resolve(v)
        })
        .collect::<Result<Vec<_>>>()?;
    if let Some(extra) = map.keys().find(|k| !used.contains(*k)) {
        return Err(unresolved(extra, format!("{ctx}: key is not in the domain")));
    }
    Ok(out)
}

pub fn decode_functor_map(
    source: &Arc<FinCategory>,
    target: &Arc<FinCategory>,
    doc: &FunctorMapDoc,
    ctx: &str,
) -> Result<Functor> {
    let objs = total_map(
        source.objects(),
        |x| source.object_name(x).to_string(),
        &doc.objects,
        &format!("{ctx}.objects"),
        |v| obj(target, v, ctx),
    )?;
    let arrs = total_map(
        source.arrows(),
        |f| source.arrow_name(f).to_string(),
        &doc.arrows,
        &format!("{ctx}.arrows"),
        |v| arr(target, v, ctx),
    )?;
    Functor::new(source.clone(), target.clone(), objs, arrs)
}

pub fn encode_functor_map(f: &Functor) -> FunctorMapDoc {
    let (s, t) = (f.source(), f.target());
    FunctorMapDoc {
        objects: s
            .objects()
            .map(|x| (s.object_name(x).to_string(), t.object_name(f.obj(x)).to_string()))
            .collect(),
        arrows: s
            .arrows()
            .map(|a| (s.arrow_name(a).to_string(), t.arrow_name(f.arr(a)).to_string()))
            .collect(),
    }
}

pub fn decode_components(src: Functor, dst: Functor, doc: &Components, ctx: &str) -> Result<NatTrans> {
    let (s, t) = (src.source().clone(), src.target().clone());
    let cs = total_map(
        s.objects(),
        |x| s.object_name(x).to_string(),
        doc,
        ctx,
        |v| arr(&t, v, ctx),
    )?;
    NatTrans::new(src, dst, cs)
}

pub fn encode_components(n: &NatTrans) -> Components {
    let (s, t) = (n.source_category(), n.target_category());
    s.objects()
        .map(|x| (s.object_name(x).to_string(), t.arrow_name(n.at(x)).to_string()))
        .collect()
}

pub fn decode_monoidal(cat: &Arc<FinCategory>, body: &MonoidalBody) -> Result<MonadMonoidal> {
    let t = decode_functor_map(cat, cat, &body.functor, "functor")?;
    let unit = decode_components(Functor::identity(cat), t.clone(), &body.unit, "unit")?;
    let mult = decode_components(compose(&t, &t)?, t.clone(), &body.mult, "mult")?;
    MonadMonoidal::new(t, unit, mult)
}

pub fn encode_monoidal(m: &MonadMonoidal) -> MonoidalBody {
    MonoidalBody {
        functor: encode_functor_map(m.functor()),
        unit: encode_components(m.unit()),
        mult: encode_components(m.mult()),
    }
}

pub fn decode_extensive(cat: &Arc<FinCategory>, body: &ExtensiveBody) -> Result<MonadExtensive> {
    let objs = total_map(
        cat.objects(),
        |x| cat.object_name(x).to_string(),
        &body.objects,
        "objects",
        |v| obj(cat, v, "objects"),
    )?;
    let unit = total_map(
        cat.objects(),
        |x| cat.object_name(x).to_string(),
        &body.unit,
        "unit",
        |v| arr(cat, v, "unit"),
    )?;
    let mut ext = BTreeMap::new();
    for e in &body.extension {
        let key = (obj(cat, &e.target, "extension")?, arr(cat, &e.arrow, "extension")?);
        if ext.insert(key, arr(cat, &e.value, "extension")?).is_some() {
            return Err(Error::Duplicate(format!("extension entry {} -> T {}", e.arrow, e.target)));
        }
    }
    MonadExtensive::new(cat.clone(), objs, unit, ext)
}

pub fn encode_extensive(m: &MonadExtensive) -> ExtensiveBody {
    let cat = m.base();
    ExtensiveBody {
        objects: cat
            .objects()
            .map(|x| (cat.object_name(x).to_string(), cat.object_name(m.obj(x)).to_string()))
            .collect(),
        unit: cat
            .objects()
            .map(|x| (cat.object_name(x).to_string(), cat.arrow_name(m.eta(x)).to_string()))
            .collect(),
        extension: m
            .table()
            .iter()
            .map(|(&(b, f), &g)| ExtEntry {
                target: cat.object_name(b).to_string(),
                arrow: cat.arrow_name(f).to_string(),
                value: cat.arrow_name(g).to_string(),
            })
            .collect(),
    }
}

/// A nested monad, validated.
pub fn decode_monad(cat: &Arc<FinCategory>, body: &MonadBody) -> Result<Monad> {
    match body {
        MonadBody::Monoidal(b) => Monad::from_monoidal(decode_monoidal(cat, b)?),
        MonadBody::Extensive(b) => Monad::from_extensive(decode_extensive(cat, b)?),
    }
}

pub fn encode_monad(m: &Monad) -> MonadBody {
    MonadBody::Monoidal(encode_monoidal(m.monoidal()))
}

fn morphism_parts(
    doc_source: &CategoryDoc,
    doc_target: &CategoryDoc,
    source: &MonadBody,
    target: &MonadBody,
) -> Result<(Monad, Monad)> {
    let a = decode_category(doc_source)?;
    let b = decode_category(doc_target)?;
    Ok((decode_monad(&a, source)?, decode_monad(&b, target)?))
}

pub fn decode_kl_morphism(doc: &MorphismDoc) -> Result<KlMorphismCell> {
    let (t, s) = morphism_parts(&doc.source_category, &doc.target_category, &doc.source, &doc.target)?;
    decode_kl_arm(&t, &s, &doc.functor, &doc.cell)
}

fn decode_kl_arm(t: &Monad, s: &Monad, functor: &FunctorMapDoc, cell: &Components) -> Result<KlMorphismCell> {
    let f = decode_functor_map(t.base(), s.base(), functor, "functor")?;
    let kappa = decode_components(compose(&f, t.functor())?, compose(s.functor(), &f)?, cell, "cell")?;
    KlMorphismCell::new(t.clone(), s.clone(), f, kappa)
}

fn decode_em_arm(t: &Monad, s: &Monad, functor: &FunctorMapDoc, cell: &Components) -> Result<EMMorphismCell> {
    let f = decode_functor_map(t.base(), s.base(), functor, "functor")?;
    let phi = decode_components(compose(s.functor(), &f)?, compose(&f, t.functor())?, cell, "cell")?;
    EMMorphismCell::new(t.clone(), s.clone(), f, phi)
}

pub fn decode_em_morphism(doc: &MorphismDoc) -> Result<EMMorphismCell> {
    let (t, s) = morphism_parts(&doc.source_category, &doc.target_category, &doc.source, &doc.target)?;
    decode_em_arm(&t, &s, &doc.functor, &doc.cell)
}

pub fn encode_kl_morphism(m: &KlMorphismCell) -> MorphismDoc {
    MorphismDoc {
        source_category: encode_category(m.source().base()),
        target_category: encode_category(m.target().base()),
        source: encode_monad(m.source()),
        target: encode_monad(m.target()),
        functor: encode_functor_map(m.functor()),
        cell: encode_components(m.kappa()),
    }
}

pub fn encode_em_morphism(m: &EMMorphismCell) -> MorphismDoc {
    MorphismDoc {
        source_category: encode_category(m.source().base()),
        target_category: encode_category(m.target().base()),
        source: encode_monad(m.source()),
        target: encode_monad(m.target()),
        functor: encode_functor_map(m.functor()),
        cell: encode_components(m.phi()),
    }
}

pub fn decode_kl_transformation(doc: &TransformationDoc) -> Result<KlTransformationCell> {
    let (t, s) = morphism_parts(&doc.source_category, &doc.target_category, &doc.source, &doc.target)?;
    let from = decode_kl_arm(&t, &s, &doc.from.functor, &doc.from.cell)?;
    let to = decode_kl_arm(&t, &s, &doc.to.functor, &doc.to.cell)?;
    let chi = decode_components(
        to.functor().clone(),
        compose(s.functor(), from.functor())?,
        &doc.cell,
        "cell",
    )?;
    KlTransformationCell::new(from, to, chi)
}

pub fn decode_em_transformation(doc: &TransformationDoc) -> Result<EMTransformationCell> {
    let (t, s) = morphism_parts(&doc.source_category, &doc.target_category, &doc.source, &doc.target)?;
    let from = decode_em_arm(&t, &s, &doc.from.functor, &doc.from.cell)?;
    let to = decode_em_arm(&t, &s, &doc.to.functor, &doc.to.cell)?;
    let rho = decode_components(
        from.functor().clone(),
        compose(to.functor(), t.functor())?,
        &doc.cell,
        "cell",
    )?;
    EMTransformationCell::new(from, to, rho)
}

pub fn encode_kl_transformation(x: &KlTransformationCell) -> TransformationDoc {
    let m = x.from();
    TransformationDoc {
        source_category: encode_category(m.source().base()),
        target_category: encode_category(m.target().base()),
        source: encode_monad(m.source()),
        target: encode_monad(m.target()),
        from: MorphismArm { functor: encode_functor_map(m.functor()), cell: encode_components(m.kappa()) },
        to: MorphismArm {
            functor: encode_functor_map(x.to().functor()),
            cell: encode_components(x.to().kappa()),
        },
        cell: encode_components(x.chi()),
    }
}

pub fn encode_em_transformation(x: &EMTransformationCell) -> TransformationDoc {
    let m = x.from();
    TransformationDoc {
        source_category: encode_category(m.source().base()),
        target_category: encode_category(m.target().base()),
        source: encode_monad(m.source()),
        target: encode_monad(m.target()),
        from: MorphismArm { functor: encode_functor_map(m.functor()), cell: encode_components(m.phi()) },
        to: MorphismArm {
            functor: encode_functor_map(x.to().functor()),
            cell: encode_components(x.to().phi()),
        },
        cell: encode_components(x.rho()),
    }
}

fn pair(cat: &CategoryDoc, s: &MonadBody, t: &MonadBody) -> Result<(Monad, Monad)> {
    let c = decode_category(cat)?;
    Ok((decode_monad(&c, s)?, decode_monad(&c, t)?))
}

pub fn decode_distlaw(doc: &DistLawDoc) -> Result<DistLawCell> {
    let (s, t) = pair(&doc.category, &doc.s, &doc.t)?;
    let lambda = decode_components(
        compose(s.functor(), t.functor())?,
        compose(t.functor(), s.functor())?,
        &doc.lambda,
        "lambda",
    )?;
    DistLawCell::new(s, t, lambda)
}

/// Component typing of the family in a distributive-law document, checked
/// before the law itself so that an ill-typed family is reported with the
/// objects where no arrow `S T x -> T S x` was given.
pub fn distlaw_typing(doc: &DistLawDoc) -> Result<Report> {
    let (s, t) = pair(&doc.category, &doc.s, &doc.t)?;
    let cat = s.base().clone();
    let cs = total_map(
        cat.objects(),
        |x| cat.object_name(x).to_string(),
        &doc.lambda,
        "lambda",
        |v| arr(&cat, v, "lambda"),
    )?;
    let mut check = Check::new("lambda.typed");
    for (x, &c) in cat.objects().zip(&cs) {
        let (st, ts) = (s.obj(t.obj(x)), t.obj(s.obj(x)));
        check.record(cat.dom(c) == st && cat.cod(c) == ts, || {
            let hom = if cat.hom(st, ts).is_empty() { "empty" } else { "inhabited" };
            format!(
                "x={} component={} expected={}->{} hom={hom}",
                cat.object_name(x),
                cat.arrow_name(c),
                cat.object_name(st),
                cat.object_name(ts)
            )
        });
    }
    let mut r = Report::new();
    r.push(check);
    Ok(r)
}

pub fn encode_distlaw(d: &DistLawCell) -> DistLawDoc {
    DistLawDoc {
        category: encode_category(d.s().base()),
        s: encode_monad(d.s()),
        t: encode_monad(d.t()),
        lambda: encode_components(d.lambda()),
    }
}

pub fn decode_alpha(doc: &AlphaDoc) -> Result<AlgebraFormLaw> {
    let (s, t) = pair(&doc.category, &doc.s, &doc.t)?;
    let ts = compose(t.functor(), s.functor())?;
    let alpha = decode_components(compose(s.functor(), &ts)?, ts, &doc.alpha, "alpha")?;
    AlgebraFormLaw::new(s, t, alpha)
}

pub fn encode_alpha(a: &AlgebraFormLaw) -> AlphaDoc {
    AlphaDoc {
        category: encode_category(a.s().base()),
        s: encode_monad(a.s()),
        t: encode_monad(a.t()),
        alpha: encode_components(a.alpha()),
    }
}

pub fn decode_algebra_ext(doc: &AlgebraExtDoc) -> Result<DistLawAlgebraExt> {
    let (s, t) = pair(&doc.category, &doc.s, &doc.t)?;
    let cat = s.base().clone();
    for k in doc.operations.keys() {
        obj(&cat, k, "operations")?;
    }
    let tables = cat
        .objects()
        .map(|a| {
            let name = cat.object_name(a);
            let ops = doc
                .operations
                .get(name)
                .ok_or_else(|| Error::Shape(format!("operations: no table for {name}")))?;
            ops.iter()
                .map(|(f, g)| Ok((arr(&cat, f, "operations")?, arr(&cat, g, "operations")?)))
                .collect::<Result<BTreeMap<_, _>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    let lambda = match &doc.lambda {
        Some(l) => Some(decode_components(
            compose(s.functor(), t.functor())?,
            compose(t.functor(), s.functor())?,
            l,
            "lambda",
        )?),
        None => None,
    };
    DistLawAlgebraExt::new(s, t, tables, lambda)
}

pub fn encode_algebra_ext(x: &DistLawAlgebraExt) -> AlgebraExtDoc {
    let cat = x.s().base();
    AlgebraExtDoc {
        category: encode_category(cat),
        s: encode_monad(x.s()),
        t: encode_monad(x.t()),
        operations: cat
            .objects()
            .map(|a| {
                let ops = x
                    .algebra(a)
                    .table()
                    .iter()
                    .map(|(&f, &g)| (cat.arrow_name(f).to_string(), cat.arrow_name(g).to_string()))
                    .collect();
                (cat.object_name(a).to_string(), ops)
            })
            .collect(),
        lambda: x.stored_lambda().map(encode_components),
    }
}

/// Builds the document for a monad in the requested form.
pub fn monad_document(m: &Monad, extensive: bool) -> SpecDocument {
    let category = encode_category(m.base());
    if extensive {
        let b = encode_extensive(m.extensive());
        SpecDocument::new(Payload::MonadExtensive(MonadExtensiveDoc {
            category,
            objects: b.objects,
            unit: b.unit,
            extension: b.extension,
        }))
    } else {
        let b = encode_monoidal(m.monoidal());
        SpecDocument::new(Payload::MonadMonoidal(MonadMonoidalDoc {
            category,
            functor: b.functor,
            unit: b.unit,
            mult: b.mult,
        }))
    }
}

pub fn monoidal_document(m: &MonadMonoidal) -> SpecDocument {
    let b = encode_monoidal(m);
    SpecDocument::new(Payload::MonadMonoidal(MonadMonoidalDoc {
        category: encode_category(m.base()),
        functor: b.functor,
        unit: b.unit,
        mult: b.mult,
    }))
}

pub fn extensive_document(m: &MonadExtensive) -> SpecDocument {
    let b = encode_extensive(m);
    SpecDocument::new(Payload::MonadExtensive(MonadExtensiveDoc {
        category: encode_category(m.base()),
        objects: b.objects,
        unit: b.unit,
        extension: b.extension,
    }))
}

pub fn decode_functor(doc: &FunctorDoc) -> Result<Functor> {
    let a = decode_category(&doc.source)?;
    let b = decode_category(&doc.target)?;
    decode_functor_map(&a, &b, &doc.map, "map")
}

pub fn encode_functor(f: &Functor) -> FunctorDoc {
    FunctorDoc {
        source: encode_category(f.source()),
        target: encode_category(f.target()),
        map: encode_functor_map(f),
    }
}

pub fn decode_nattrans(doc: &NatTransDoc) -> Result<NatTrans> {
    let a = decode_category(&doc.source)?;
    let b = decode_category(&doc.target)?;
    let from = decode_functor_map(&a, &b, &doc.from, "from")?;
    let to = decode_functor_map(&a, &b, &doc.to, "to")?;
    decode_components(from, to, &doc.components, "components")
}

pub fn encode_nattrans(n: &NatTrans) -> NatTransDoc {
    NatTransDoc {
        source: encode_category(n.source_category()),
        target: encode_category(n.target_category()),
        from: encode_functor_map(n.src()),
        to: encode_functor_map(n.dst()),
        components: encode_components(n),
    }
}
