//! Instance families named on the command line.

use std::path::Path;
use std::sync::Arc;

use super::codec::decode_category;
use super::schema::{load, DocError, Payload};
use crate::fincat::FinCategory;
use crate::oracle::{
    chain_category, cyclic_table, monoid_category, monoid_tables, parallel_pair, poset_category, posets, Poset,
};

#[derive(Debug, Clone)]
pub struct Instance {
    pub label: String,
    pub category: Arc<FinCategory>,
    pub poset: Option<Poset>,
}

impl Instance {
    fn plain(label: String, cat: FinCategory) -> Self {
        Instance { label, category: Arc::new(cat), poset: None }
    }

    fn poset(label: String, p: Poset) -> Self {
        Instance { label, category: Arc::new(poset_category(&p)), poset: Some(p) }
    }
}

pub const FAMILY_HELP: &str = "terminal | empty | parallel | chain:N | cyclic:N | poset:N:I | posets:N | monoids:N | file:PATH";

fn number(s: &str, spec: &str) -> Result<usize, DocError> {
    s.parse().map_err(|_| DocError::Payload {
        kind: "family".into(),
        message: format!("`{spec}`: `{s}` is not a number"),
    })
}

/// Parses a family such as `chain:3` or `posets:4` into its instances.
pub fn parse_family(spec: &str) -> Result<Vec<Instance>, DocError> {
    let bad = |message: String| DocError::Payload { kind: "family".into(), message };
    let parts: Vec<&str> = spec.splitn(3, ':').collect();
    let out = match parts.as_slice() {
        ["terminal"] => vec![Instance::plain("terminal".into(), FinCategory::terminal())],
        ["empty"] => vec![Instance::plain("empty".into(), FinCategory::empty())],
        ["parallel"] => vec![Instance::plain("parallel".into(), parallel_pair())],
        ["chain", n] => {
            let n = number(n, spec)?;
            vec![Instance { poset: Some(Poset::chain(n)), ..Instance::plain(format!("chain:{n}"), chain_category(n)) }]
        }
        ["cyclic", n] => {
            let n = number(n, spec)?;
            if n == 0 {
                return Err(bad("cyclic:0 has no elements".into()));
            }
            vec![Instance::plain(format!("cyclic:{n}"), monoid_category(&cyclic_table(n))?)]
        }
        ["poset", n, i] => {
            let (n, i) = (number(n, spec)?, number(i, spec)?);
            let all = posets(n);
            let total = all.len();
            let p = all
                .into_iter()
                .nth(i)
                .ok_or_else(|| bad(format!("there are {total} posets on {n} elements")))?;
            vec![Instance::poset(format!("poset:{n}:{i}"), p)]
        }
        ["posets", n] => {
            let n = number(n, spec)?;
            posets(n)
                .into_iter()
                .enumerate()
                .map(|(i, p)| Instance::poset(format!("poset:{n}:{i}"), p))
                .collect()
        }
        ["monoids", n] => {
            let n = number(n, spec)?;
            monoid_tables(n)
                .into_iter()
                .enumerate()
                .map(|(i, t)| Ok(Instance::plain(format!("monoid:{n}:{i}"), monoid_category(&t)?)))
                .collect::<Result<Vec<_>, DocError>>()?
        }
        ["file", rest @ ..] if !rest.is_empty() => {
            let path = rest.join(":");
            let doc = load(Path::new(&path))?;
            match doc.payload {
                Payload::Category(c) => {
                    vec![Instance { label: path, category: decode_category(&c)?, poset: None }]
                }
                _ => {
                    return Err(DocError::WrongKind { expected: "category".into(), found: doc.kind().into() })
                }
            }
        }
        _ => return Err(bad(format!("unknown family `{spec}`; expected {FAMILY_HELP}"))),
    };
    Ok(out)
}
