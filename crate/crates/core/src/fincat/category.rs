use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::report::{Check, Report};

/// Object identifier, an index into [`FinCategory::objects`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Obj(pub usize);

/// Arrow identifier, an index into the arrow table of a [`FinCategory`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Arr(pub usize);

impl fmt::Display for Obj {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

impl fmt::Display for Arr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "@{}", self.0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArrowData {
    pub name: String,
    pub dom: Obj,
    pub cod: Obj,
}

/// A finite category stored as explicit tables.
///
/// Construction only resolves references; the category laws are checked by
/// [`check_category`], so a `FinCategory` may hold law-breaking data.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinCategory {
    objects: Vec<String>,
    arrows: Vec<ArrowData>,
    identities: Vec<Arr>,
    /// Dense table, row `g`, column `f`.
    comp: Vec<Option<Arr>>,
    /// Sorted arrows per `(dom, cod)`, row-major.
    homs: Vec<Vec<Arr>>,
}

impl FinCategory {
    pub fn new(
        objects: Vec<String>,
        arrows: Vec<ArrowData>,
        identities: Vec<Arr>,
        composites: impl IntoIterator<Item = (Arr, Arr, Arr)>,
    ) -> Result<Self> {
        let n_obj = objects.len();
        let n_arr = arrows.len();
        let mut seen = HashMap::new();
        for name in &objects {
            if seen.insert(name.as_str(), ()).is_some() {
                return Err(Error::Duplicate(name.clone()));
            }
        }
        let mut seen = HashMap::new();
        for a in &arrows {
            if seen.insert(a.name.as_str(), ()).is_some() {
                return Err(Error::Duplicate(a.name.clone()));
            }
            for o in [a.dom, a.cod] {
                if o.0 >= n_obj {
                    return Err(Error::OutOfRange { what: "object", index: o.0 });
                }
            }
        }
        if identities.len() != n_obj {
            return Err(Error::shape(format!(
                "{} identities for {} objects",
                identities.len(),
                n_obj
            )));
        }
        for id in &identities {
            if id.0 >= n_arr {
                return Err(Error::OutOfRange { what: "arrow", index: id.0 });
            }
        }
        let mut comp = vec![None; n_arr * n_arr];
        for (g, f, h) in composites {
            for x in [g, f, h] {
                if x.0 >= n_arr {
                    return Err(Error::OutOfRange { what: "arrow", index: x.0 });
                }
            }
            let slot = &mut comp[g.0 * n_arr + f.0];
            match slot {
                Some(prev) if *prev != h => {
                    return Err(Error::shape(format!(
                        "conflicting composites for ({}, {})",
                        arrows[g.0].name, arrows[f.0].name
                    )))
                }
                _ => *slot = Some(h),
            }
        }
        let mut homs = vec![Vec::new(); n_obj * n_obj];
        for (i, a) in arrows.iter().enumerate() {
            homs[a.dom.0 * n_obj + a.cod.0].push(Arr(i));
        }
        Ok(FinCategory {
            objects,
            arrows,
            identities,
            comp,
            homs,
        })
    }

    /// The category with no objects.
    pub fn empty() -> Self {
        FinCategory::new(Vec::new(), Vec::new(), Vec::new(), []).expect("empty category")
    }

    /// One object, one identity arrow.
    pub fn terminal() -> Self {
        FinCategory::new(
            vec!["*".into()],
            vec![ArrowData { name: "id*".into(), dom: Obj(0), cod: Obj(0) }],
            vec![Arr(0)],
            [(Arr(0), Arr(0), Arr(0))],
        )
        .expect("terminal category")
    }

    pub fn num_objects(&self) -> usize {
        self.objects.len()
    }

    pub fn num_arrows(&self) -> usize {
        self.arrows.len()
    }

    pub fn objects(&self) -> impl Iterator<Item = Obj> + Clone {
        (0..self.objects.len()).map(Obj)
    }

    pub fn arrows(&self) -> impl Iterator<Item = Arr> + Clone {
        (0..self.arrows.len()).map(Arr)
    }

    pub fn arrow(&self, f: Arr) -> &ArrowData {
        &self.arrows[f.0]
    }

    pub fn dom(&self, f: Arr) -> Obj {
        self.arrows[f.0].dom
    }

    pub fn cod(&self, f: Arr) -> Obj {
        self.arrows[f.0].cod
    }

    pub fn identity(&self, a: Obj) -> Arr {
        self.identities[a.0]
    }

    pub fn is_identity(&self, f: Arr) -> bool {
        self.identities[self.dom(f).0] == f
    }

    pub fn hom(&self, a: Obj, b: Obj) -> &[Arr] {
        &self.homs[a.0 * self.objects.len() + b.0]
    }

    pub fn object_name(&self, a: Obj) -> &str {
        &self.objects[a.0]
    }

    pub fn arrow_name(&self, f: Arr) -> &str {
        &self.arrows[f.0].name
    }

    pub fn object_names(&self) -> &[String] {
        &self.objects
    }

    pub fn find_object(&self, name: &str) -> Option<Obj> {
        self.objects.iter().position(|o| o == name).map(Obj)
    }

    pub fn find_arrow(&self, name: &str) -> Option<Arr> {
        self.arrows.iter().position(|a| a.name == name).map(Arr)
    }

    /// The raw table entry for `g ∘ f`, regardless of composability.
    pub fn table_entry(&self, g: Arr, f: Arr) -> Option<Arr> {
        self.comp[g.0 * self.arrows.len() + f.0]
    }

    /// `g ∘ f` when `cod f = dom g` and the table has an entry.
    pub fn try_compose(&self, g: Arr, f: Arr) -> Option<Arr> {
        if self.cod(f) != self.dom(g) {
            return None;
        }
        self.table_entry(g, f)
    }

    /// `g ∘ f`; panics when the pair is not composable.
    pub fn compose(&self, g: Arr, f: Arr) -> Arr {
        self.try_compose(g, f).unwrap_or_else(|| {
            panic!(
                "arrows {} and {} are not composable",
                self.arrow_name(g),
                self.arrow_name(f)
            )
        })
    }

    /// Composite of a path listed in application order reversed:
    /// `[h, g, f]` is `h ∘ g ∘ f`.
    pub fn path(&self, arrows: &[Arr]) -> Option<Arr> {
        let (&last, rest) = arrows.split_last()?;
        rest.iter()
            .rev()
            .try_fold(last, |acc, &next| self.try_compose(next, acc))
    }

    /// All composable `(g, f)` pairs, `f` first.
    pub fn composable_pairs(&self) -> impl Iterator<Item = (Arr, Arr)> + '_ {
        self.arrows().flat_map(move |f| {
            self.arrows()
                .filter(move |&g| self.dom(g) == self.cod(f))
                .map(move |g| (g, f))
        })
    }

    /// Names of an arrow and its type, for witnesses.
    pub fn describe(&self, f: Arr) -> String {
        let a = self.arrow(f);
        format!(
            "{}:{}->{}",
            a.name,
            self.object_name(a.dom),
            self.object_name(a.cod)
        )
    }
}

/// Checks the category laws exhaustively.
pub fn check_category(cat: &FinCategory) -> Report {
    let mut report = Report::new();

    let mut ids = Check::new("category.identity_typed");
    for a in cat.objects() {
        let id = cat.identity(a);
        ids.record(cat.dom(id) == a && cat.cod(id) == a, || {
            format!("object={} identity={}", cat.object_name(a), cat.describe(id))
        });
    }
    report.push(ids);

    let mut defined = Check::new("category.comp_defined");
    let mut typed = Check::new("category.comp_typed");
    for f in cat.arrows() {
        for g in cat.arrows() {
            let composable = cat.cod(f) == cat.dom(g);
            let entry = cat.table_entry(g, f);
            defined.record(composable == entry.is_some(), || {
                format!(
                    "g={} f={} composable={} entry={}",
                    cat.arrow_name(g),
                    cat.arrow_name(f),
                    composable,
                    entry.is_some()
                )
            });
            if let (true, Some(h)) = (composable, entry) {
                typed.record(cat.dom(h) == cat.dom(f) && cat.cod(h) == cat.cod(g), || {
                    format!(
                        "g={} f={} result={}",
                        cat.arrow_name(g),
                        cat.arrow_name(f),
                        cat.describe(h)
                    )
                });
            }
        }
    }
    report.push(defined);
    report.push(typed);

    let mut left = Check::new("category.left_unit");
    let mut right = Check::new("category.right_unit");
    for f in cat.arrows() {
        let id_cod = cat.identity(cat.cod(f));
        let id_dom = cat.identity(cat.dom(f));
        left.record(cat.try_compose(id_cod, f) == Some(f), || {
            format!("f={}", cat.describe(f))
        });
        right.record(cat.try_compose(f, id_dom) == Some(f), || {
            format!("f={}", cat.describe(f))
        });
    }
    report.push(left);
    report.push(right);

    let mut assoc = Check::new("category.associativity");
    for (g, f) in cat.composable_pairs() {
        for h in cat.arrows().filter(|&h| cat.dom(h) == cat.cod(g)) {
            let lhs = cat
                .try_compose(g, f)
                .and_then(|gf| cat.try_compose(h, gf));
            let rhs = cat
                .try_compose(h, g)
                .and_then(|hg| cat.try_compose(hg, f));
            assoc.record(lhs.is_some() && lhs == rhs, || {
                format!(
                    "h={} g={} f={}",
                    cat.arrow_name(h),
                    cat.arrow_name(g),
                    cat.arrow_name(f)
                )
            });
        }
    }
    report.push(assoc);
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chain3() -> FinCategory {
        // 0 <= 1 <= 2, six arrows
        let pairs = [(0, 0), (0, 1), (0, 2), (1, 1), (1, 2), (2, 2)];
        let arrows: Vec<ArrowData> = pairs
            .iter()
            .map(|&(i, j)| ArrowData { name: format!("{i}<={j}"), dom: Obj(i), cod: Obj(j) })
            .collect();
        let idx = |i: usize, j: usize| Arr(pairs.iter().position(|&p| p == (i, j)).unwrap());
        let mut comp = Vec::new();
        for &(i, j) in &pairs {
            for &(j2, k) in &pairs {
                if j == j2 {
                    comp.push((idx(j, k), idx(i, j), idx(i, k)));
                }
            }
        }
        FinCategory::new(
            (0..3).map(|i| i.to_string()).collect(),
            arrows,
            vec![idx(0, 0), idx(1, 1), idx(2, 2)],
            comp,
        )
        .unwrap()
    }

    #[test]
    fn terminal_is_valid() {
        assert!(check_category(&FinCategory::terminal()).holds());
    }

    #[test]
    fn empty_is_valid() {
        assert!(check_category(&FinCategory::empty()).holds());
    }

    #[test]
    fn chain3_is_valid_with_ten_associativity_triples() {
        let c = chain3();
        assert_eq!(c.num_arrows(), 6);
        let r = check_category(&c);
        assert!(r.holds(), "{r}");
        // composable triples x<=y<=z<=w over 3 elements: C(3+3,4)=... count by brute force
        let mut triples = 0;
        for (g, f) in c.composable_pairs() {
            triples += c.arrows().filter(|&h| c.dom(h) == c.cod(g)).count();
            let _ = f;
        }
        assert_eq!(r.get("category.associativity").unwrap().instances, triples);
        assert_eq!(triples, 15);
    }

    #[test]
    fn broken_associativity_names_the_triple() {
        // objects a, b; arrows id_a, id_b, f: a->b, e, e2: b->b with e∘e = e2, e∘e2 = e,
        // e2∘e = e2 (broken: should be e by associativity of e∘(e∘e) vs (e∘e)∘e)
        let objects = vec!["a".to_string(), "b".to_string()];
        let arrows = vec![
            ArrowData { name: "ida".into(), dom: Obj(0), cod: Obj(0) },
            ArrowData { name: "idb".into(), dom: Obj(1), cod: Obj(1) },
            ArrowData { name: "e".into(), dom: Obj(1), cod: Obj(1) },
            ArrowData { name: "e2".into(), dom: Obj(1), cod: Obj(1) },
        ];
        let (ida, idb, e, e2) = (Arr(0), Arr(1), Arr(2), Arr(3));
        let mut comp = vec![(ida, ida, ida)];
        for x in [idb, e, e2] {
            comp.push((idb, x, x));
            comp.push((x, idb, x));
        }
        // Z/3-like table {1, e, e2} with e*e = e2, e*e2 = 1 would be valid; perturb e2*e.
        comp.push((e, e, e2));
        comp.push((e, e2, idb));
        comp.push((e2, e, e));
        comp.push((e2, e2, e));
        let c = FinCategory::new(objects, arrows, vec![ida, idb], comp).unwrap();
        let r = check_category(&c);
        assert!(!r.holds());
        let assoc = r.get("category.associativity").unwrap();
        assert!(!assoc.passed());
        assert!(assoc.witnesses.iter().any(|w| w.contains("e")));
        assert!(r.get("category.left_unit").unwrap().passed());
    }

    #[test]
    fn dangling_references_are_structural_errors() {
        let err = FinCategory::new(
            vec!["a".into()],
            vec![ArrowData { name: "id".into(), dom: Obj(0), cod: Obj(3) }],
            vec![Arr(0)],
            [],
        )
        .unwrap_err();
        assert_eq!(err, Error::OutOfRange { what: "object", index: 3 });
        let err = FinCategory::new(
            vec!["a".into()],
            vec![ArrowData { name: "id".into(), dom: Obj(0), cod: Obj(0) }],
            vec![Arr(0)],
            [(Arr(0), Arr(0), Arr(7))],
        )
        .unwrap_err();
        assert_eq!(err, Error::OutOfRange { what: "arrow", index: 7 });
    }

    #[test]
    fn missing_composite_is_a_law_failure() {
        let c = FinCategory::new(
            vec!["a".into()],
            vec![ArrowData { name: "id".into(), dom: Obj(0), cod: Obj(0) }],
            vec![Arr(0)],
            [],
        )
        .unwrap();
        let r = check_category(&c);
        assert!(!r.get("category.comp_defined").unwrap().passed());
    }

    #[test]
    fn path_composes_right_to_left() {
        let c = chain3();
        let a01 = c.find_arrow("0<=1").unwrap();
        let a12 = c.find_arrow("1<=2").unwrap();
        let a02 = c.find_arrow("0<=2").unwrap();
        assert_eq!(c.path(&[a12, a01]), Some(a02));
        assert_eq!(c.path(&[a01, a12]), None);
        assert_eq!(c.path(&[]), None);
    }
}
