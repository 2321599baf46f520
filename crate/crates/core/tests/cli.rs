use std::fs;
use std::path::{Path, PathBuf};
use std::process::Command;
use std::sync::Arc;

use noiter::cli::{
    encode_category, encode_distlaw, execute, load, monad_document, save, Outcome, Payload, SpecDocument,
};
use noiter::distlaw::{check_distlaw_monoidal, DistLawCell};
use noiter::fincat::FinCategory;
use noiter::monadcore::Monad;
use noiter::oracle::{
    chain_category, closure_monad, closure_operators, enumerate_distlaw_candidates, Limits, Poset,
};
use tempfile::TempDir;

fn run(args: &[&str]) -> Outcome {
    execute(std::iter::once("noiter").chain(args.iter().copied()))
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn write(dir: &TempDir, name: &str, doc: &SpecDocument) -> PathBuf {
    let p = dir.path().join(name);
    save(doc, &p).unwrap();
    p
}

fn chain3() -> Arc<FinCategory> {
    Arc::new(chain_category(3))
}

fn closure(c: &Arc<FinCategory>, op: &[usize]) -> Monad {
    Monad::from_monoidal(closure_monad(c, op).unwrap()).unwrap()
}

fn distlaw_doc(d: &DistLawCell) -> SpecDocument {
    SpecDocument::new(Payload::DistLaw(encode_distlaw(d)))
}

#[test]
fn terminal_category_roundtrips() {
    let dir = TempDir::new().unwrap();
    let doc = SpecDocument::new(Payload::Category(encode_category(&FinCategory::terminal())));
    let p = write(&dir, "terminal.json", &doc);
    assert_eq!(load(&p).unwrap(), doc);
    assert_eq!(SpecDocument::parse(&doc.to_text()).unwrap().to_text(), doc.to_text());
    let out = run(&["check", "category", path_str(&p)]);
    assert_eq!(out.code, 0, "{}", out.stderr);
}

#[test]
fn closure_monad_checks_in_both_forms() {
    let c = chain3();
    let m = closure(&c, &[1, 1, 2]);
    let dir = TempDir::new().unwrap();
    for (name, ext) in [("monoidal.json", false), ("extensive.json", true)] {
        let p = write(&dir, name, &monad_document(&m, ext));
        for form in ["monoidal", "extensive"] {
            let out = run(&["check", "monad", path_str(&p), "--form", form]);
            assert_eq!(out.code, 0, "{name} {form}: {}{}", out.stdout, out.stderr);
            assert!(out.stdout.contains("verdict=valid"));
        }
    }
}

#[test]
fn unresolved_arrow_is_a_usage_error() {
    let dir = TempDir::new().unwrap();
    let p = dir.path().join("bad.json");
    fs::write(
        &p,
        r#"{"version": 1, "kind": "category", "payload": {
            "objects": ["a"],
            "arrows": [{"name": "1a", "dom": "a", "cod": "a"}],
            "identities": {"a": "1a"},
            "composites": [["1a", "zz", "1a"]]
        }}"#,
    )
    .unwrap();
    let out = run(&["check", "category", path_str(&p)]);
    assert_eq!(out.code, 2);
    assert!(out.stderr.contains("zz"), "{}", out.stderr);
}

#[test]
fn truncated_document_is_a_usage_error() {
    let dir = TempDir::new().unwrap();
    let p = dir.path().join("cut.json");
    fs::write(&p, r#"{"version": 1, "kind": "category", "payload": {"objects": ["#).unwrap();
    let out = run(&["check", "category", path_str(&p)]);
    assert_eq!(out.code, 2);
    assert!(out.stderr.contains("line"), "{}", out.stderr);
}

#[test]
fn identity_law_exits_zero() {
    let c = chain3();
    let dir = TempDir::new().unwrap();
    let d = DistLawCell::over_identity(&closure(&c, &[1, 1, 2]));
    let p = write(&dir, "law.json", &distlaw_doc(&d));
    let out = run(&["check", "distlaw", path_str(&p)]);
    assert_eq!(out.code, 0, "{}{}", out.stdout, out.stderr);
    let json = run(&["check", "distlaw", path_str(&p), "--report", "json"]);
    let v: serde_json::Value = serde_json::from_str(&json.stdout).unwrap();
    assert_eq!(v["verdict"], "valid");
}

#[test]
fn closure_pair_without_a_law_reports_the_object() {
    // s = (0,2,2), t = (1,1,2): st(0) = 2 but ts(0) = 1, so no arrow st(0) -> ts(0).
    let c = chain3();
    let (s, t) = (closure(&c, &[0, 2, 2]), closure(&c, &[1, 1, 2]));
    let mut doc = encode_distlaw(&DistLawCell::over_identity(&s));
    doc.t = encode_distlaw(&DistLawCell::over_identity(&t)).s;
    let cat = encode_category(&c);
    let top = &cat.identities[&cat.objects[2]];
    doc.lambda = cat.objects.iter().map(|o| (o.clone(), top.clone())).collect();
    let dir = TempDir::new().unwrap();
    let p = write(&dir, "no-law.json", &SpecDocument::new(Payload::DistLaw(doc)));
    let out = run(&["check", "distlaw", path_str(&p)]);
    assert_eq!(out.code, 1, "{}{}", out.stdout, out.stderr);
    assert!(out.stdout.contains(&format!("x={}", cat.objects[0])), "{}", out.stdout);
}

#[test]
fn convert_identity_monad_to_extensive() {
    let c = chain3();
    let dir = TempDir::new().unwrap();
    let p = write(&dir, "id.json", &monad_document(&Monad::identity(&c), false));
    let q = dir.path().join("id-ext.json");
    let out = run(&["convert", path_str(&p), "--to", "extensive", "-o", path_str(&q)]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    let doc = load(&q).unwrap();
    assert_eq!(doc.kind(), "monad-extensive");
    assert_eq!(doc, monad_document(&Monad::identity(&c), true));
    assert_eq!(run(&["check", "monad", path_str(&q)]).code, 0);
}

#[test]
fn lambda_alpha_lambda_is_byte_identical() {
    let c = chain3();
    let l = Limits::default();
    let ops = closure_operators(&Poset::chain(3));
    let dir = TempDir::new().unwrap();
    let mut converted = 0;
    for s in &ops {
        for t in &ops {
            let (sm, tm) = (closure(&c, s), closure(&c, t));
            for lam in enumerate_distlaw_candidates(&sm, &tm, &l).unwrap() {
                let d = DistLawCell::new(sm.clone(), tm.clone(), lam).unwrap();
                if !check_distlaw_monoidal(&d).holds() {
                    continue;
                }
                let p = write(&dir, "lambda.json", &distlaw_doc(&d));
                let a = dir.path().join("alpha.json");
                let b = dir.path().join("back.json");
                assert_eq!(run(&["convert", path_str(&p), "--to", "alpha", "-o", path_str(&a)]).code, 0);
                assert_eq!(run(&["check", "alpha", path_str(&a)]).code, 0);
                assert_eq!(run(&["convert", path_str(&a), "--to", "lambda", "-o", path_str(&b)]).code, 0);
                assert_eq!(fs::read(&p).unwrap(), fs::read(&b).unwrap());
                converted += 1;
            }
        }
    }
    assert!(converted > 0);
}

#[test]
fn algebra_form_roundtrip_checks() {
    let c = chain3();
    let d = DistLawCell::over_identity(&closure(&c, &[2, 2, 2]));
    let dir = TempDir::new().unwrap();
    let p = write(&dir, "law.json", &distlaw_doc(&d));
    let a = dir.path().join("alg.json");
    assert_eq!(run(&["convert", path_str(&p), "--to", "algebra", "-o", path_str(&a)]).code, 0);
    let out = run(&["check", "algebra-ext", path_str(&a)]);
    assert_eq!(out.code, 0, "{}{}", out.stdout, out.stderr);
}

#[test]
fn compose_writes_a_valid_monad() {
    let c = chain3();
    let d = DistLawCell::over_identity(&closure(&c, &[1, 1, 2]));
    let dir = TempDir::new().unwrap();
    let p = write(&dir, "law.json", &distlaw_doc(&d));
    let q = dir.path().join("composite.json");
    let out = run(&["compose", path_str(&p), "--extensive", "-o", path_str(&q)]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    assert_eq!(load(&q).unwrap().kind(), "monad-extensive");
    assert_eq!(run(&["check", "monad", path_str(&q)]).code, 0);
}

#[test]
fn enumerate_matches_closure_count() {
    let expected = closure_operators(&Poset::chain(3)).len();
    assert_eq!(expected, 4);
    let dir = TempDir::new().unwrap();
    let out = run(&["enumerate", "monads", "chain:3", "--out-dir", path_str(dir.path())]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    assert!(out.stdout.contains(&format!("count={expected}")), "{}", out.stdout);
    let files: Vec<_> = fs::read_dir(dir.path()).unwrap().collect();
    assert_eq!(files.len(), expected);
    for f in files {
        let p = f.unwrap().path();
        assert_eq!(run(&["check", "monad", path_str(&p)]).code, 0);
    }
}

#[test]
fn candidate_cap_is_enforced() {
    let out = run(&["--max-candidates", "1", "enumerate", "monads", "chain:3"]);
    assert_eq!(out.code, 2, "{}", out.stdout);
}

#[test]
fn oracle_compare_agrees_on_chains() {
    let out = run(&["oracle", "compare", "chain:2"]);
    assert_eq!(out.code, 0, "{}", out.stdout);
    assert!(out.stdout.contains("verdict=agree"));
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_noiter");
    let dir = TempDir::new().unwrap();
    let p = write(&dir, "id.json", &monad_document(&Monad::identity(&chain3()), false));
    let ok = Command::new(bin).args(["check", "monad", path_str(&p)]).output().unwrap();
    assert_eq!(ok.status.code(), Some(0));
    let bad = Command::new(bin).args(["check", "monad", "/nonexistent.json"]).output().unwrap();
    assert_eq!(bad.status.code(), Some(2));
    let usage = Command::new(bin).arg("frobnicate").output().unwrap();
    assert_eq!(usage.status.code(), Some(2));
}

#[test]
fn ill_typed_unit_fails_with_a_witness() {
    // The identity at 0 is not a map 0 -> T0 = 2.
    let c = chain3();
    let doc = monad_document(&closure(&c, &[2, 2, 2]), false);
    let Payload::MonadMonoidal(mut body) = doc.payload else { unreachable!() };
    let cat = encode_category(&c);
    body.unit.insert(cat.objects[0].clone(), cat.identities[&cat.objects[0]].clone());
    let dir = TempDir::new().unwrap();
    let p = write(&dir, "bad-unit.json", &SpecDocument::new(Payload::MonadMonoidal(body)));
    let out = run(&["check", "monad", path_str(&p)]);
    assert_eq!(out.code, 1, "{}{}", out.stdout, out.stderr);
    assert!(out.stdout.contains("check=monoidal.unit.nat.typed object=0"), "{}", out.stdout);
}
