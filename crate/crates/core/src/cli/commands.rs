//! Subcommand implementations. Each returns the text to print and an exit
//! status; all file and stream I/O stays in this module and `schema`.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use serde::Serialize;

use super::codec::*;
use super::family::{parse_family, Instance};
use super::schema::{load, save, DocError, MonoidalBody, Payload, SpecDocument};
use crate::distlaw::{
    alpha_to_lambda, check_alpha_conditions, check_distlaw_algebra_ext, check_distlaw_inbetween_2cat,
    check_distlaw_inbetween_cat, check_distlaw_monoidal, check_distlaw_noiter_2cat,
    check_distlaw_noiter_cat, compose_monads, derive_naturality, lambda_to_alpha, DistLawAlgebraExt,
    DistLawCell, DistLawProbes, Naturality,
};
use crate::error::Error;
use crate::fincat::{check_category, check_functor, check_nat_trans};
use crate::monadcore::{check_extensive_laws, check_monoidal_laws, Monad};
use crate::morphisms::{
    check_em_classical, check_em_noiter, check_em_transformation_classical, check_em_transformation_noiter,
    check_kl_classical, check_kl_morphism_cat, check_kl_noiter, check_kl_transformation_classical,
    check_kl_transformation_noiter, check_lifting, compose_kl, lifting_candidate,
};
use crate::oracle::{
    closure_monad, closure_operators, compare_distlaws, compare_monad_forms, compare_morphisms,
    compare_poset_laws, enumerate_distlaw_candidates, enumerate_endofunctors, enumerate_monads,
    enumerate_monads_extensive, Comparison, Limits,
};
use crate::report::Report;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Text,
    Json,
}

/// What a command printed and how it exits.
#[derive(Debug, Default)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Outcome {
    fn error(e: &DocError) -> Self {
        let code = match e {
            DocError::Model(Error::Invalid { .. }) => EXIT_FAIL,
            _ => EXIT_USAGE,
        };
        Outcome { stderr: format!("error: {e}\n"), code, ..Default::default() }
    }

    fn usage(msg: impl Into<String>) -> Self {
        Outcome { stderr: format!("error: {}\n", msg.into()), code: EXIT_USAGE, ..Default::default() }
    }
}

fn finish(result: Result<Outcome, DocError>) -> Outcome {
    result.unwrap_or_else(|e| Outcome::error(&e))
}

#[derive(Serialize)]
struct JsonReport<'a> {
    kind: &'a str,
    form: &'a str,
    verdict: &'a str,
    checks: &'a [crate::report::Check],
}

fn render(report: &Report, kind: &str, form: &str, format: ReportFormat) -> Outcome {
    let verdict = if report.holds() { "valid" } else { "invalid" };
    let stdout = match format {
        ReportFormat::Text => format!("kind={kind} form={form}\n{}", report.to_lines()),
        ReportFormat::Json => {
            let j = JsonReport { kind, form, verdict, checks: &report.checks };
            let mut s = serde_json::to_string_pretty(&j).expect("reports serialize");
            s.push('\n');
            s
        }
    };
    Outcome { stdout, code: if report.holds() { EXIT_OK } else { EXIT_FAIL }, ..Default::default() }
}

/// Forms accepted by `check` for each document kind; the first is the default.
pub fn forms_for(kind: &str) -> &'static [&'static str] {
    match kind {
        "monad-monoidal" | "monad-extensive" => &["own", "monoidal", "extensive"],
        "kl-morphism" => &["all", "classical", "noiter", "cat", "lifting"],
        "em-morphism" | "kl-transformation" | "em-transformation" => &["all", "classical", "noiter"],
        "distlaw" => &["all", "monoidal", "noiter-2cat", "noiter-cat", "algebra", "inbetween-2cat", "inbetween-cat", "naturality"],
        "algebra-ext" => &["all", "algebra", "inbetween-2cat", "inbetween-cat"],
        _ => &["all"],
    }
}

fn kind_matches(requested: &str, found: &str) -> bool {
    requested == found || (requested == "monad" && found.starts_with("monad-"))
}

pub fn run_check(kind: &str, path: &Path, form: Option<&str>, format: ReportFormat, limits: &Limits) -> Outcome {
    finish((|| {
        let doc = load(path)?;
        let found = doc.kind();
        if !kind_matches(kind, found) {
            return Err(DocError::WrongKind { expected: kind.into(), found: found.into() });
        }
        let allowed = forms_for(found);
        let form = form.unwrap_or(allowed[0]);
        if !allowed.contains(&form) {
            return Ok(Outcome::usage(format!(
                "form `{form}` does not apply to `{found}`; expected one of {}",
                allowed.join(", ")
            )));
        }
        let report = check_document(&doc, form, limits)?;
        Ok(render(&report, found, form, format))
    })())
}

fn wants(form: &str, name: &str) -> bool {
    form == "all" || form == name
}

/// Runs the checkers selected by `form` on a loaded document.
pub fn check_document(doc: &SpecDocument, form: &str, limits: &Limits) -> Result<Report, DocError> {
    let mut r = Report::new();
    match &doc.payload {
        Payload::Category(c) => r = check_category(&*decode_category(c)?),
        Payload::Functor(f) => r = check_functor(&decode_functor(f)?),
        Payload::NatTrans(n) => r = check_nat_trans(&decode_nattrans(n)?),
        Payload::MonadMonoidal(d) => {
            let cat = decode_category(&d.category)?;
            let body = MonoidalBody { functor: d.functor.clone(), unit: d.unit.clone(), mult: d.mult.clone() };
            let m = decode_monoidal(&cat, &body)?;
            r = match form {
                "extensive" => check_extensive_laws(Monad::from_monoidal(m)?.extensive()),
                _ => check_monoidal_laws(&m),
            };
        }
        Payload::MonadExtensive(d) => {
            let cat = decode_category(&d.category)?;
            let m = decode_extensive(&cat, &extensive_body(d))?;
            r = match form {
                "monoidal" => check_monoidal_laws(Monad::from_extensive(m)?.monoidal()),
                _ => check_extensive_laws(&m),
            };
        }
        Payload::KlMorphism(d) => {
            let m = decode_kl_morphism(d)?;
            if wants(form, "classical") {
                r.extend(check_kl_classical(&m));
            }
            if wants(form, "noiter") {
                r.extend(check_kl_noiter(&m, limits)?);
            }
            if wants(form, "cat") {
                r.extend(check_kl_morphism_cat(&m));
            }
            if wants(form, "lifting") {
                let l = lifting_candidate(&m)?;
                r.extend(check_lifting(m.source(), m.target(), m.functor(), &l)?);
            }
        }
        Payload::EmMorphism(d) => {
            let m = decode_em_morphism(d)?;
            if wants(form, "classical") {
                r.extend(check_em_classical(&m));
            }
            if wants(form, "noiter") {
                r.extend(check_em_noiter(&m, limits)?);
            }
        }
        Payload::KlTransformation(d) => {
            let x = decode_kl_transformation(d)?;
            if wants(form, "classical") {
                r.extend(check_kl_transformation_classical(&x));
            }
            if wants(form, "noiter") {
                r.extend(check_kl_transformation_noiter(&x));
            }
        }
        Payload::EmTransformation(d) => {
            let x = decode_em_transformation(d)?;
            if wants(form, "classical") {
                r.extend(check_em_transformation_classical(&x));
            }
            if wants(form, "noiter") {
                r.extend(check_em_transformation_noiter(&x));
            }
        }
        Payload::DistLaw(doc) => {
            let typing = distlaw_typing(doc)?;
            if !typing.holds() {
                return Ok(typing);
            }
            let d = decode_distlaw(doc)?;
            if wants(form, "monoidal") {
                r.extend(check_distlaw_monoidal(&d));
            }
            if wants(form, "noiter-2cat") {
                r.extend(check_distlaw_noiter_2cat(&d, limits)?);
            }
            if wants(form, "noiter-cat") {
                r.extend(check_distlaw_noiter_cat(&d, limits)?);
            }
            if wants(form, "algebra") || form.starts_with("inbetween") {
                let x = DistLawAlgebraExt::from_lambda(&d)?;
                if wants(form, "algebra") {
                    r.extend(check_distlaw_algebra_ext(&x));
                }
                if wants(form, "inbetween-2cat") {
                    let probes = DistLawProbes::new(d.s(), d.t(), limits)?;
                    r.extend(check_distlaw_inbetween_2cat(&x, &probes));
                }
                if wants(form, "inbetween-cat") {
                    r.extend(check_distlaw_inbetween_cat(&x));
                }
            }
            if wants(form, "naturality") {
                match derive_naturality(&d) {
                    Naturality::Derived(rep) | Naturality::Violated(rep) => r.extend(rep),
                    Naturality::NotApplicable(rep) if form == "naturality" => r.extend(rep),
                    Naturality::NotApplicable(_) => {}
                }
            }
        }
        Payload::Alpha(a) => r = check_alpha_conditions(&decode_alpha(a)?),
        Payload::AlgebraExt(a) => {
            let x = decode_algebra_ext(a)?;
            if wants(form, "algebra") {
                r.extend(check_distlaw_algebra_ext(&x));
            }
            if wants(form, "inbetween-2cat") {
                let probes = DistLawProbes::new(x.s(), x.t(), limits)?;
                r.extend(check_distlaw_inbetween_2cat(&x, &probes));
            }
            if wants(form, "inbetween-cat") {
                r.extend(check_distlaw_inbetween_cat(&x));
            }
        }
    }
    Ok(r)
}

fn extensive_body(d: &super::schema::MonadExtensiveDoc) -> super::schema::ExtensiveBody {
    super::schema::ExtensiveBody {
        objects: d.objects.clone(),
        unit: d.unit.clone(),
        extension: d.extension.clone(),
    }
}

fn monad_of(doc: &SpecDocument) -> Result<Option<Monad>, DocError> {
    Ok(match &doc.payload {
        Payload::MonadMonoidal(d) => {
            let cat = decode_category(&d.category)?;
            let body = MonoidalBody { functor: d.functor.clone(), unit: d.unit.clone(), mult: d.mult.clone() };
            Some(Monad::from_monoidal(decode_monoidal(&cat, &body)?)?)
        }
        Payload::MonadExtensive(d) => {
            let cat = decode_category(&d.category)?;
            Some(Monad::from_extensive(decode_extensive(&cat, &extensive_body(d))?)?)
        }
        _ => None,
    })
}

fn distlaw_of(doc: &SpecDocument) -> Result<Option<DistLawCell>, DocError> {
    Ok(match &doc.payload {
        Payload::DistLaw(d) => Some(decode_distlaw(d)?),
        Payload::Alpha(a) => Some(alpha_to_lambda(&decode_alpha(a)?)?),
        Payload::AlgebraExt(a) => {
            let x = decode_algebra_ext(a)?;
            let report = check_distlaw_algebra_ext(&x);
            if !report.holds() {
                return Err(Error::Invalid { what: "algebra-form law", failed: report.failed_names() }.into());
            }
            Some(x.extract_lambda()?)
        }
        _ => None,
    })
}

fn emit(doc: &SpecDocument, out: Option<&Path>) -> Result<Outcome, DocError> {
    match out {
        Some(p) => {
            save(doc, p)?;
            Ok(Outcome::default())
        }
        None => Ok(Outcome { stdout: doc.to_text(), ..Default::default() }),
    }
}

pub const CONVERT_TARGETS: &[&str] = &["extensive", "monoidal", "alpha", "lambda", "algebra"];

/// Converts between presentations. Conversions require the input to pass the
/// checker of its own form.
pub fn run_convert(path: &Path, to: &str, out: Option<&Path>) -> Outcome {
    finish((|| {
        let doc = load(path)?;
        let mismatch = || DocError::WrongKind {
            expected: match to {
                "extensive" | "monoidal" => "monad-monoidal or monad-extensive".into(),
                "alpha" | "algebra" => "distlaw, alpha or algebra-ext".into(),
                _ => "alpha, algebra-ext or distlaw".into(),
            },
            found: doc.kind().into(),
        };
        let result = match to {
            "extensive" | "monoidal" => {
                let m = monad_of(&doc)?.ok_or_else(mismatch)?;
                monad_document(&m, to == "extensive")
            }
            "lambda" | "alpha" | "algebra" => {
                let d = distlaw_of(&doc)?.ok_or_else(mismatch)?;
                let report = check_distlaw_monoidal(&d);
                if !report.holds() {
                    return Err(Error::Invalid { what: "distributive law", failed: report.failed_names() }.into());
                }
                match to {
                    "lambda" => SpecDocument::new(Payload::DistLaw(encode_distlaw(&d))),
                    "alpha" => SpecDocument::new(Payload::Alpha(encode_alpha(&lambda_to_alpha(&d)?))),
                    _ => SpecDocument::new(Payload::AlgebraExt(encode_algebra_ext(&DistLawAlgebraExt::from_lambda(&d)?))),
                }
            }
            other => {
                return Ok(Outcome::usage(format!(
                    "unknown conversion target `{other}`; expected one of {}",
                    CONVERT_TARGETS.join(", ")
                )))
            }
        };
        emit(&result, out)
    })())
}

/// One document: the composite monad of a distributive law in any of its
/// forms. Two documents: the composite of two Kl-morphisms, second after first.
pub fn run_compose(paths: &[PathBuf], extensive: bool, out: Option<&Path>) -> Outcome {
    finish((|| {
        let result = match paths {
            [p] => {
                let doc = load(p)?;
                let d = distlaw_of(&doc)?.ok_or_else(|| DocError::WrongKind {
                    expected: "distlaw, alpha or algebra-ext".into(),
                    found: doc.kind().into(),
                })?;
                let m = Monad::from_monoidal(compose_monads(&d)?)?;
                monad_document(&m, extensive)
            }
            [first, second] => {
                let kl = |p: &PathBuf| -> Result<_, DocError> {
                    match load(p)?.payload {
                        Payload::KlMorphism(d) => Ok(decode_kl_morphism(&d)?),
                        other => Err(DocError::WrongKind { expected: "kl-morphism".into(), found: other.kind().into() }),
                    }
                };
                let (f, g) = (kl(first)?, kl(second)?);
                SpecDocument::new(Payload::KlMorphism(encode_kl_morphism(&compose_kl(&g, &f)?)))
            }
            _ => return Ok(Outcome::usage("compose takes one law document or two kl-morphism documents")),
        };
        emit(&result, out)
    })())
}

pub const ENUMERATE_TARGETS: &[&str] =
    &["functors", "monads", "monads-extensive", "closure-operators", "distlaws"];

fn file_label(label: &str) -> String {
    label.chars().map(|c| if c.is_ascii_alphanumeric() { c } else { '-' }).collect()
}

/// Counts (and optionally writes out) every structure of one sort on each
/// instance of a family.
pub fn run_enumerate(what: &str, family: &str, out_dir: Option<&Path>, limits: &Limits) -> Outcome {
    if !ENUMERATE_TARGETS.contains(&what) {
        return Outcome::usage(format!("cannot enumerate `{what}`; expected one of {}", ENUMERATE_TARGETS.join(", ")));
    }
    finish((|| {
        let instances = parse_family(family)?;
        if let Some(dir) = out_dir {
            std::fs::create_dir_all(dir).map_err(|source| DocError::Io { path: dir.to_path_buf(), source })?;
        }
        let mut stdout = String::new();
        let mut total = 0usize;
        for inst in &instances {
            let docs = enumerate_one(what, inst, limits)?;
            total += docs.len();
            writeln!(stdout, "family={family} instance={} what={what} count={}", inst.label, docs.len()).unwrap();
            if let Some(dir) = out_dir {
                for (k, d) in docs.iter().enumerate() {
                    let name = format!("{}-{what}-{k}.json", file_label(&inst.label));
                    save(d, &dir.join(name))?;
                }
            }
        }
        writeln!(stdout, "family={family} what={what} instances={} total={total}", instances.len()).unwrap();
        Ok(Outcome { stdout, ..Default::default() })
    })())
}

fn enumerate_one(what: &str, inst: &Instance, limits: &Limits) -> Result<Vec<SpecDocument>, DocError> {
    let cat = &inst.category;
    Ok(match what {
        "functors" => enumerate_endofunctors(cat, limits)?
            .iter()
            .map(|f| SpecDocument::new(Payload::Functor(encode_functor(f))))
            .collect(),
        "monads" => enumerate_monads(cat, limits)?.iter().map(|m| monad_document(m, false)).collect(),
        "monads-extensive" => enumerate_monads_extensive(cat, limits)?.iter().map(extensive_document).collect(),
        "closure-operators" => {
            let p = inst.poset.as_ref().ok_or_else(|| DocError::Payload {
                kind: "family".into(),
                message: format!("`{}` is not a poset", inst.label),
            })?;
            closure_operators(p)
                .iter()
                .map(|op| Ok(monoidal_document(&closure_monad(cat, op)?)))
                .collect::<Result<Vec<_>, DocError>>()?
        }
        _ => {
            let monads = enumerate_monads(cat, limits)?;
            let mut docs = Vec::new();
            for s in &monads {
                for t in &monads {
                    for l in enumerate_distlaw_candidates(s, t, limits)? {
                        let d = DistLawCell::new(s.clone(), t.clone(), l)?;
                        if check_distlaw_monoidal(&d).holds() {
                            docs.push(SpecDocument::new(Payload::DistLaw(encode_distlaw(&d))));
                        }
                    }
                }
            }
            docs
        }
    })
}

pub const COMPARISONS: &[&str] = &["all", "forms", "distlaws", "morphisms", "posets"];

#[derive(Serialize)]
struct JsonRow<'a> {
    instance: &'a str,
    #[serde(flatten)]
    row: &'a Comparison,
}

/// Runs the cross-presentation comparisons on every instance of a family and
/// prints a count table; exits 1 on any disagreement.
pub fn run_oracle_compare(family: &str, only: &str, format: ReportFormat, limits: &Limits) -> Outcome {
    if !COMPARISONS.contains(&only) {
        return Outcome::usage(format!("unknown comparison `{only}`; expected one of {}", COMPARISONS.join(", ")));
    }
    finish((|| {
        let instances = parse_family(family)?;
        let mut rows = Vec::new();
        for inst in &instances {
            let cat = &inst.category;
            if wants(only, "forms") {
                rows.push((inst.label.clone(), compare_monad_forms(cat, limits)?));
            }
            if wants(only, "distlaws") {
                rows.extend(compare_distlaws(cat, limits)?.into_iter().map(|c| (inst.label.clone(), c)));
            }
            if wants(only, "morphisms") {
                rows.extend(compare_morphisms(cat, limits)?.into_iter().map(|c| (inst.label.clone(), c)));
            }
            if let (true, Some(p)) = (wants(only, "posets"), &inst.poset) {
                rows.push((inst.label.clone(), compare_poset_laws(p, cat, limits)?));
            }
        }
        let agree = rows.iter().all(|(_, c)| c.agrees());
        let stdout = match format {
            ReportFormat::Text => {
                let mut s = String::new();
                for (label, c) in &rows {
                    writeln!(
                        s,
                        "instance={label} comparison={} candidates={} positive={} disagreements={}",
                        c.name,
                        c.candidates,
                        c.positive,
                        c.disagreements.len()
                    )
                    .unwrap();
                    for w in &c.disagreements {
                        writeln!(s, "disagreement instance={label} comparison={} {w}", c.name).unwrap();
                    }
                }
                writeln!(s, "verdict={}", if agree { "agree" } else { "disagree" }).unwrap();
                s
            }
            ReportFormat::Json => {
                let rows: Vec<JsonRow> = rows.iter().map(|(l, c)| JsonRow { instance: l, row: c }).collect();
                let mut s = serde_json::to_string_pretty(&rows).expect("rows serialize");
                s.push('\n');
                s
            }
        };
        Ok(Outcome { stdout, code: if agree { EXIT_OK } else { EXIT_FAIL }, ..Default::default() })
    })())
}
