use std::sync::Arc;

use crate::error::{Error, Result};
use crate::fincat::{Arr, ArrowData, FinCategory, Functor, NatTrans, Obj};
use crate::monadcore::MonadMonoidal;

/// A finite partial order on `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poset {
    n: usize,
    leq: Vec<bool>,
}

impl Poset {
    /// Validates reflexivity, antisymmetry and transitivity.
    pub fn new(n: usize, leq: impl Fn(usize, usize) -> bool) -> Result<Self> {
        let table: Vec<bool> = (0..n * n).map(|k| leq(k / n.max(1), k % n.max(1))).collect();
        let p = Poset { n, leq: table };
        for x in 0..n {
            if !p.leq(x, x) {
                return Err(Error::Invalid { what: "order", failed: format!("reflexivity at {x}") });
            }
            for y in 0..n {
                if x != y && p.leq(x, y) && p.leq(y, x) {
                    return Err(Error::Invalid {
                        what: "order",
                        failed: format!("antisymmetry at ({x}, {y})"),
                    });
                }
                for z in 0..n {
                    if p.leq(x, y) && p.leq(y, z) && !p.leq(x, z) {
                        return Err(Error::Invalid {
                            what: "order",
                            failed: format!("transitivity at ({x}, {y}, {z})"),
                        });
                    }
                }
            }
        }
        Ok(p)
    }

    pub fn chain(n: usize) -> Self {
        Poset::new(n, |x, y| x <= y).expect("total order")
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.leq[x * self.n + y]
    }
}

/// The poset as a category: one arrow `x<=y` exactly when `x ≤ y`.
pub fn poset_category(p: &Poset) -> FinCategory {
    let n = p.len();
    let mut arrows = Vec::new();
    let mut index = vec![None; n * n];
    for x in 0..n {
        for y in 0..n {
            if p.leq(x, y) {
                index[x * n + y] = Some(Arr(arrows.len()));
                arrows.push(ArrowData { name: format!("{x}<={y}"), dom: Obj(x), cod: Obj(y) });
            }
        }
    }
    let at = |x: usize, y: usize| index[x * n + y].expect("comparable");
    let mut comp = Vec::new();
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if p.leq(x, y) && p.leq(y, z) {
                    comp.push((at(y, z), at(x, y), at(x, z)));
                }
            }
        }
    }
    FinCategory::new(
        (0..n).map(|x| x.to_string()).collect(),
        arrows,
        (0..n).map(|x| at(x, x)).collect(),
        comp,
    )
    .expect("poset category")
}

/// `0 ≤ 1 ≤ … ≤ n-1`.
pub fn chain_category(n: usize) -> FinCategory {
    poset_category(&Poset::chain(n))
}

/// One-object category of a monoid given by its multiplication table;
/// `table[g][f]` is the product `g·f`, i.e. `g ∘ f`.
pub fn monoid_category(table: &[Vec<usize>]) -> Result<FinCategory> {
    let n = table.len();
    if table.iter().any(|row| row.len() != n || row.iter().any(|&x| x >= n)) {
        return Err(Error::shape("multiplication table must be square over 0..n"));
    }
    let unit = (0..n)
        .find(|&e| (0..n).all(|x| table[e][x] == x && table[x][e] == x))
        .ok_or_else(|| Error::Invalid { what: "monoid table", failed: "no unit element".into() })?;
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if table[table[x][y]][z] != table[x][table[y][z]] {
                    return Err(Error::Invalid {
                        what: "monoid table",
                        failed: format!("associativity at ({x}, {y}, {z})"),
                    });
                }
            }
        }
    }
    let arrows = (0..n)
        .map(|i| ArrowData { name: format!("m{i}"), dom: Obj(0), cod: Obj(0) })
        .collect();
    let mut comp = Vec::new();
    for g in 0..n {
        for f in 0..n {
            comp.push((Arr(g), Arr(f), Arr(table[g][f])));
        }
    }
    FinCategory::new(vec!["*".into()], arrows, vec![Arr(unit)], comp)
}

/// `Z/n` under addition.
pub fn cyclic_table(n: usize) -> Vec<Vec<usize>> {
    (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect()
}

/// Two objects with two parallel arrows `f, g: 0 -> 1`.
pub fn parallel_pair() -> FinCategory {
    let arrows = vec![
        ArrowData { name: "id0".into(), dom: Obj(0), cod: Obj(0) },
        ArrowData { name: "id1".into(), dom: Obj(1), cod: Obj(1) },
        ArrowData { name: "f".into(), dom: Obj(0), cod: Obj(1) },
        ArrowData { name: "g".into(), dom: Obj(0), cod: Obj(1) },
    ];
    let (i0, i1, f, g) = (Arr(0), Arr(1), Arr(2), Arr(3));
    let comp = [
        (i0, i0, i0),
        (i1, i1, i1),
        (f, i0, f),
        (g, i0, g),
        (i1, f, f),
        (i1, g, g),
    ];
    FinCategory::new(vec!["0".into(), "1".into()], arrows, vec![i0, i1], comp)
        .expect("parallel pair")
}

/// Every partial order on `0..n`, in lexicographic order of the strict
/// upper-triangle choices.
pub fn posets(n: usize) -> Vec<Poset> {
    let pairs: Vec<(usize, usize)> =
        (0..n).flat_map(|x| (x + 1..n).map(move |y| (x, y))).collect();
    let mut out = Vec::new();
    let total = 3usize.pow(pairs.len() as u32);
    for code in 0..total {
        let mut rel = vec![false; n * n];
        for x in 0..n {
            rel[x * n + x] = true;
        }
        let mut c = code;
        for &(x, y) in &pairs {
            match c % 3 {
                1 => rel[x * n + y] = true,
                2 => rel[y * n + x] = true,
                _ => {}
            }
            c /= 3;
        }
        if let Ok(p) = Poset::new(n, |x, y| rel[x * n + y]) {
            out.push(p);
        }
    }
    out
}

/// Every multiplication table on `0..n` with unit `0` that is associative.
pub fn monoid_tables(n: usize) -> Vec<Vec<Vec<usize>>> {
    if n == 0 {
        return Vec::new();
    }
    let free: Vec<(usize, usize)> =
        (1..n).flat_map(|x| (1..n).map(move |y| (x, y))).collect();
    let total = n.pow(free.len() as u32);
    let mut out = Vec::new();
    for code in 0..total {
        let mut t = vec![vec![0; n]; n];
        for x in 0..n {
            t[0][x] = x;
            t[x][0] = x;
        }
        let mut c = code;
        for &(x, y) in &free {
            t[x][y] = c % n;
            c /= n;
        }
        let assoc = (0..n).all(|x| {
            (0..n).all(|y| (0..n).all(|z| t[t[x][y]][z] == t[x][t[y][z]]))
        });
        if assoc {
            out.push(t);
        }
    }
    out
}

/// All monotone, inflationary, idempotent self-maps, in lexicographic order.
pub fn closure_operators(p: &Poset) -> Vec<Vec<usize>> {
    let n = p.len();
    let mut out = Vec::new();
    let total = n.checked_pow(n as u32).unwrap_or(0).max(usize::from(n == 0));
    for code in 0..total {
        let mut c = code;
        let mut map = vec![0; n];
        for slot in map.iter_mut().rev() {
            *slot = c % n;
            c /= n;
        }
        let monotone = (0..n).all(|x| (0..n).all(|y| !p.leq(x, y) || p.leq(map[x], map[y])));
        let inflationary = (0..n).all(|x| p.leq(x, map[x]));
        let idempotent = (0..n).all(|x| map[map[x]] == map[x]);
        if monotone && inflationary && idempotent {
            out.push(map);
        }
    }
    out
}

/// A closure operator on a poset category as a monad: `η` and `μ` are the
/// unique comparison arrows.
pub fn closure_monad(cat: &Arc<FinCategory>, closure: &[usize]) -> Result<MonadMonoidal> {
    let only = |a: Obj, b: Obj| {
        cat.hom(a, b).first().copied().ok_or_else(|| {
            Error::Invalid {
                what: "closure operator",
                failed: format!("{} is not below {}", cat.object_name(a), cat.object_name(b)),
            }
        })
    };
    let obj: Vec<Obj> = closure.iter().map(|&x| Obj(x)).collect();
    let arr = cat
        .arrows()
        .map(|f| only(obj[cat.dom(f).0], obj[cat.cod(f).0]))
        .collect::<Result<Vec<_>>>()?;
    let t = Functor::new(cat.clone(), cat.clone(), obj.clone(), arr)?;
    let eta = cat.objects().map(|a| only(a, obj[a.0])).collect::<Result<Vec<_>>>()?;
    let mu = cat
        .objects()
        .map(|a| only(obj[obj[a.0].0], obj[a.0]))
        .collect::<Result<Vec<_>>>()?;
    let unit = NatTrans::new(Functor::identity(cat), t.clone(), eta)?;
    let mult = NatTrans::new(t.after(&t)?, t.clone(), mu)?;
    MonadMonoidal::new(t, unit, mult)
}
