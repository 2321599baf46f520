use super::functor::{compose, Functor};

/// A functor tagged with the word of generators that produced it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Labeled {
    pub label: String,
    pub functor: Functor,
}

/// All well-typed composites of the generators of length `1..=max_len`.
///
/// A word `AB` denotes `A ∘ B`. Results are ordered by length, then by
/// generator order, and duplicates (equal as functors) keep the first label.
pub fn composites(generators: &[(&str, &Functor)], max_len: usize) -> Vec<Labeled> {
    let mut out: Vec<Labeled> = Vec::new();
    let mut frontier: Vec<Labeled> = generators
        .iter()
        .map(|(l, f)| Labeled { label: l.to_string(), functor: (*f).clone() })
        .collect();
    for len in 1..=max_len {
        let mut next = Vec::new();
        for word in &frontier {
            if !out.iter().any(|o| o.functor == word.functor) {
                out.push(word.clone());
            }
            if len < max_len {
                for (l, g) in generators {
                    if let Ok(h) = compose(&word.functor, g) {
                        next.push(Labeled { label: format!("{}{}", word.label, l), functor: h });
                    }
                }
            }
        }
        frontier = next;
    }
    out
}
