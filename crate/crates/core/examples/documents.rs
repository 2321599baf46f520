//! Writes a monad document, converts it, and checks it through the command-line entry point.

use std::sync::Arc;

use noiter::cli::{execute, load, monad_document, save};
use noiter::monadcore::Monad;
use noiter::oracle::{chain_category, closure_monad};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let dir = std::env::temp_dir().join(format!("noiter-example-{}", std::process::id()));
    std::fs::create_dir_all(&dir)?;
    let cat = Arc::new(chain_category(3));
    let m = Monad::from_monoidal(closure_monad(&cat, &[1, 1, 2])?)?;

    let src = dir.join("closure.json");
    save(&monad_document(&m, false), &src)?;
    let ext = dir.join("closure-ext.json");
    let args = ["noiter", "convert", src.to_str().unwrap(), "--to", "extensive", "-o", ext.to_str().unwrap()];
    let out = execute(args);
    assert_eq!(out.code, 0, "{}", out.stderr);
    println!("{}", load(&ext)?.to_text());

    let out = execute(["noiter", "check", "monad", ext.to_str().unwrap()]);
    print!("{}", out.stdout);
    println!("exit code {}", out.code);
    std::fs::remove_dir_all(&dir)?;
    Ok(())
}
