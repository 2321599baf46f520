use super::cell::DistLawCell;
use crate::error::Result;
use crate::fincat::{check_nat_trans, composites, compose, vcomp, whisker_left, whisker_right, Functor, NatTrans};
use crate::monadcore::Monad;
use crate::oracle::Limits;
use crate::probes::{left_probes, pointwise_left_probes, record_cells, right_probes, Probe, PROBE_DEPTH};
use crate::report::{Check, Report};

/// The 2-cells over which the quantified axioms are evaluated for one pair of
/// monads. Building the family is the expensive part, so it is shared by
/// every candidate `λ` for the pair.
#[derive(Debug, Clone)]
pub struct DistLawProbes {
    /// `ϑ: f ⇒ T g`, generator `ϑ = 1_T` first.
    pub left: Vec<Probe>,
    /// Pointwise `f: a -> T b` seen as 2-cells out of the terminal category.
    pub pointwise: Vec<Probe>,
    /// `ϰ: h ⇒ k S` between composites of `{1, S, T}`, generator `ϰ = 1_S` first.
    pub right: Vec<Probe>,
    /// `κ: H ⇒ K S` between composites of `{1, S, T, ST, TS}`, generator first.
    pub right_cat: Vec<Probe>,
}

impl DistLawProbes {
    pub fn new(s: &Monad, t: &Monad, limits: &Limits) -> Result<Self> {
        let (sf, tf) = (s.functor(), t.functor());
        let id = Functor::identity(s.base());
        let st = compose(sf, tf)?;
        let ts = compose(tf, sf)?;

        let small = composites(&[("1", &id), ("S", sf), ("T", tf)], PROBE_DEPTH);
        let mut left = vec![Probe {
            label: "generator theta=1_T".into(),
            lower: tf.clone(),
            upper: id.clone(),
            cell: NatTrans::identity(tf),
        }];
        left.extend(left_probes(&small, tf, limits)?);
        let gen_s = Probe {
            label: "generator kappa=1_S".into(),
            lower: sf.clone(),
            upper: id.clone(),
            cell: NatTrans::identity(sf),
        };
        let mut right = vec![gen_s.clone()];
        right.extend(right_probes(&small, sf, limits)?);

        let large = composites(
            &[("1", &id), ("S", sf), ("T", tf), ("(ST)", &st), ("(TS)", &ts)],
            PROBE_DEPTH,
        );
        let mut right_cat = vec![gen_s];
        right_cat.extend(right_probes(&large, sf, limits)?);

        Ok(DistLawProbes {
            left,
            pointwise: pointwise_left_probes(tf)?,
            right,
            right_cat,
        })
    }
}

fn unit_checks(d: &DistLawCell, prefix: &str) -> Vec<Check> {
    let (s, t) = (d.s().extensive(), d.t().extensive());
    let cat = s.base();
    let mut unit_t = Check::new(format!("{prefix}.axiom1.unit_t"));
    let mut unit_s = Check::new(format!("{prefix}.axiom1.unit_s"));
    for a in cat.objects() {
        let lam = d.at(a);
        let name = || cat.object_name(a).to_string();
        // λ a ∘ S η a = η S a
        let lhs = s.arr(t.eta(a)).and_then(|f| cat.try_compose(lam, f));
        unit_t.record(lhs.is_some() && lhs == Some(t.eta(s.obj(a))), name);
        // λ a ∘ η' T a = T η' a
        let lhs = cat.try_compose(lam, s.eta(t.obj(a)));
        unit_s.record(lhs.is_some() && lhs == t.arr(s.eta(a)), name);
    }
    vec![unit_t, unit_s]
}

fn axiom2_2cat(d: &DistLawCell, p: &Probe) -> (Result<NatTrans>, Result<NatTrans>) {
    let (s, t) = (d.s().functor(), d.t().extensive());
    let (g, theta) = (&p.upper, &p.cell);
    // λ g · S ϑ^T
    let lhs = (|| {
        let ext = t.left_extend(theta, g)?;
        vcomp(&whisker_right(d.lambda(), g)?, &whisker_left(s, &ext)?)
    })();
    // (λ g · S ϑ)^T · λ f
    let rhs = (|| {
        let inner = vcomp(&whisker_right(d.lambda(), g)?, &whisker_left(s, theta)?)?;
        let ext = t.left_extend(&inner, &compose(s, g)?)?;
        vcomp(&ext, &whisker_right(d.lambda(), &p.lower)?)
    })();
    (lhs, rhs)
}

fn axiom3_2cat(d: &DistLawCell, p: &Probe) -> (Result<NatTrans>, Result<NatTrans>) {
    let (s, t) = (d.s().extensive(), d.t().functor());
    let (h, k, kappa) = (&p.lower, &p.upper, &p.cell);
    // k λ · ϰ^S T
    let lhs = (|| {
        let ext = s.right_extend(kappa, k)?;
        vcomp(&whisker_left(k, d.lambda())?, &whisker_right(&ext, t)?)
    })();
    // (k λ · ϰ T)^S · h λ
    let rhs = (|| {
        let inner = vcomp(&whisker_left(k, d.lambda())?, &whisker_right(kappa, t)?)?;
        let ext = s.right_extend(&inner, &compose(k, t)?)?;
        vcomp(&ext, &whisker_left(h, d.lambda())?)
    })();
    (lhs, rhs)
}

fn split<'a>(probes: &'a [Probe]) -> (&'a Probe, &'a [Probe]) {
    (&probes[0], &probes[1..])
}

pub(crate) fn axiom2_2cat_checks(d: &DistLawCell, probes: &DistLawProbes, prefix: &str) -> Vec<Check> {
    let (gen, rest) = split(&probes.left);
    [
        ("generator", std::slice::from_ref(gen)),
        ("probes", rest),
        ("pointwise", &probes.pointwise[..]),
    ]
    .into_iter()
    .map(|(name, family)| {
        let mut c = Check::new(format!("{prefix}.{name}"));
        for p in family {
            let (l, rr) = axiom2_2cat(d, p);
            record_cells(&mut c, l, rr, || p.label.clone());
        }
        c
    })
    .collect()
}

/// Naturality, the unit triangles, and the two pasting squares
///
/// * `λ g · S ϑ^T = (λ g · S ϑ)^T · λ f` for `ϑ: f ⇒ T g`
/// * `k λ · ϰ^S T = (k λ · ϰ T)^S · h λ` for `ϰ: h ⇒ k S`
///
/// with the extension operators read from the extension tables, evaluated
/// over `probes`.
pub fn check_distlaw_noiter_2cat_with(d: &DistLawCell, probes: &DistLawProbes) -> Report {
    let mut r = Report::new();
    r.absorb("noiter_2cat.lambda", check_nat_trans(d.lambda()));
    for c in unit_checks(d, "noiter_2cat") {
        r.push(c);
    }

    for c in axiom2_2cat_checks(d, probes, "noiter_2cat.axiom2") {
        r.push(c);
    }

    let (gen, rest) = split(&probes.right);
    for (name, family) in [
        ("noiter_2cat.axiom3.generator", std::slice::from_ref(gen)),
        ("noiter_2cat.axiom3.probes", rest),
    ] {
        let mut c = Check::new(name);
        for p in family {
            let (l, rr) = axiom3_2cat(d, p);
            record_cells(&mut c, l, rr, || p.label.clone());
        }
        r.push(c);
    }
    r
}

pub fn check_distlaw_noiter_2cat(d: &DistLawCell, limits: &Limits) -> Result<Report> {
    let probes = DistLawProbes::new(d.s(), d.t(), limits)?;
    Ok(check_distlaw_noiter_2cat_with(d, &probes))
}

/// `λ b ∘ S f^T = (λ b ∘ S f)^T ∘ λ a` for every `f: a -> T b`, from the tables.
fn axiom2_cat(d: &DistLawCell) -> Check {
    let (s, t) = (d.s().extensive(), d.t().extensive());
    let cat = s.base();
    let mut c = Check::new("noiter_cat.axiom2");
    for (b, f) in t.keys() {
        let a = cat.dom(f);
        let lhs = t
            .ext(b, f)
            .and_then(|ft| s.arr(ft))
            .and_then(|sft| cat.try_compose(d.at(b), sft));
        let rhs = s
            .arr(f)
            .and_then(|sf| cat.try_compose(d.at(b), sf))
            .and_then(|k| t.ext(s.obj(b), k))
            .and_then(|e| cat.try_compose(e, d.at(a)));
        c.record(lhs.is_some() && lhs == rhs, || {
            format!("a={} b={} f={}", cat.object_name(a), cat.object_name(b), cat.arrow_name(f))
        });
    }
    c
}

/// `K λ a ∘ K μ' T a ∘ κ S T a = K T μ' a ∘ K λ S a ∘ κ T S a ∘ H λ a`.
fn axiom3_cat(d: &DistLawCell, name: &str, probes: &[Probe]) -> Check {
    let (s, t) = (d.s().extensive(), d.t().extensive());
    let cat = s.base();
    let mut c = Check::new(name);
    for p in probes {
        let (h, k, kappa) = (&p.lower, &p.upper, &p.cell);
        let y = k.target();
        for a in cat.objects() {
            let (sa, ta) = (s.obj(a), t.obj(a));
            let lhs = s
                .mu(ta)
                .and_then(|mu| y.path(&[k.arr(d.at(a)), k.arr(mu), kappa.at(s.obj(ta))]));
            let rhs = s.mu(a).and_then(|mu| t.arr(mu)).and_then(|tmu| {
                y.path(&[k.arr(tmu), k.arr(d.at(sa)), kappa.at(t.obj(sa)), h.arr(d.at(a))])
            });
            c.record(lhs.is_some() && lhs == rhs, || {
                format!("{} a={}", p.label, cat.object_name(a))
            });
        }
    }
    c
}

/// The unit triangles, the square for every `f: a -> T b`, and the square for
/// every `κ: H ⇒ K S`, evaluated objectwise on the extension tables. `λ` is
/// not assumed natural.
pub fn check_distlaw_noiter_cat_with(d: &DistLawCell, probes: &DistLawProbes) -> Report {
    let mut r = Report::new();
    for c in unit_checks(d, "noiter_cat") {
        r.push(c);
    }
    r.push(axiom2_cat(d));
    let (gen, rest) = split(&probes.right_cat);
    r.push(axiom3_cat(d, "noiter_cat.axiom3.generator", std::slice::from_ref(gen)));
    r.push(axiom3_cat(d, "noiter_cat.axiom3.probes", rest));
    r
}

pub fn check_distlaw_noiter_cat(d: &DistLawCell, limits: &Limits) -> Result<Report> {
    let probes = DistLawProbes::new(d.s(), d.t(), limits)?;
    Ok(check_distlaw_noiter_cat_with(d, &probes))
}

/// Outcome of replaying the derivation of naturality from axioms 1 and 2.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Naturality {
    /// Every step of the chain held for every arrow.
    Derived(Report),
    /// Axioms 1 and 2 do not hold, so the derivation does not apply.
    NotApplicable(Report),
    /// The axioms hold but some step failed.
    Violated(Report),
}

impl Naturality {
    pub fn report(&self) -> &Report {
        match self {
            Naturality::Derived(r) | Naturality::NotApplicable(r) | Naturality::Violated(r) => r,
        }
    }

    pub fn is_derived(&self) -> bool {
        matches!(self, Naturality::Derived(_))
    }
}

/// For every `h: c -> d` replays
///
/// ```text
/// λd ∘ STh = λd ∘ S(ηd ∘ h)^T
///          = (λd ∘ Sηd ∘ Sh)^T ∘ λc
///          = (ηSd ∘ Sh)^T ∘ λc
///          = TSh ∘ λc
/// ```
///
/// recording each link separately.
pub fn derive_naturality(d: &DistLawCell) -> Naturality {
    let mut pre = Report::new();
    for c in unit_checks(d, "derive_naturality.pre") {
        pre.push(c);
    }
    let mut ax2 = axiom2_cat(d);
    ax2.name = "derive_naturality.pre.axiom2".into();
    pre.push(ax2);
    if !pre.holds() {
        return Naturality::NotApplicable(pre);
    }

    let (s, t) = (d.s().extensive(), d.t().extensive());
    let cat = s.base();
    let mut steps: Vec<Check> = (1..=4)
        .map(|i| Check::new(format!("derive_naturality.step{i}")))
        .collect();
    let mut nat = Check::new("derive_naturality.naturality");
    for h in cat.arrows() {
        let (c, dd) = (cat.dom(h), cat.cod(h));
        let eh = cat.compose(t.eta(dd), h);
        let sh = s.arr(h);
        let chain = [
            t.arr(h).and_then(|th| s.arr(th)).and_then(|x| cat.try_compose(d.at(dd), x)),
            t.ext(dd, eh).and_then(|e| s.arr(e)).and_then(|x| cat.try_compose(d.at(dd), x)),
            s.arr(t.eta(dd))
                .zip(sh)
                .and_then(|(se, sh)| cat.path(&[d.at(dd), se, sh]))
                .and_then(|k| t.ext(s.obj(dd), k))
                .and_then(|e| cat.try_compose(e, d.at(c))),
            sh.and_then(|sh| cat.try_compose(t.eta(s.obj(dd)), sh))
                .and_then(|k| t.ext(s.obj(dd), k))
                .and_then(|e| cat.try_compose(e, d.at(c))),
            sh.and_then(|sh| t.arr(sh)).and_then(|x| cat.try_compose(x, d.at(c))),
        ];
        for (i, step) in steps.iter_mut().enumerate() {
            step.record(chain[i].is_some() && chain[i] == chain[i + 1], || cat.describe(h));
        }
        nat.record(chain[0].is_some() && chain[0] == chain[4], || cat.describe(h));
    }
    let mut r = pre;
    for c in steps {
        r.push(c);
    }
    r.push(nat);
    if r.holds() {
        Naturality::Derived(r)
    } else {
        Naturality::Violated(r)
    }
}
