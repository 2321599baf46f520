use crate::error::{Error, Result};
use crate::fincat::{check_nat_trans, composites, compose, whisker_left, whisker_right, vcomp, Functor, NatTrans};
use crate::monadcore::{left_ext_monad, Monad};
use crate::oracle::Limits;
use crate::probes::{left_probes, pointwise_left_probes, record_cells, Probe, PROBE_DEPTH};
use crate::report::{Check, Report};

/// A functor `F: A -> B` with `κ: F T ⇒ S F`, from a monad `T` on `A` to a
/// monad `S` on `B`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KlMorphismCell {
    source: Monad,
    target: Monad,
    functor: Functor,
    kappa: NatTrans,
}

impl KlMorphismCell {
    pub fn new(source: Monad, target: Monad, functor: Functor, kappa: NatTrans) -> Result<Self> {
        if functor.source() != source.base() || functor.target() != target.base() {
            return Err(Error::shape("functor must run from the source base to the target base"));
        }
        if *kappa.src() != compose(&functor, source.functor())?
            || *kappa.dst() != compose(target.functor(), &functor)?
        {
            return Err(Error::shape("kappa must be a 2-cell F T => S F"));
        }
        Ok(KlMorphismCell { source, target, functor, kappa })
    }

    /// `(1, 1_T)` on a single monad.
    pub fn identity(monad: &Monad) -> Self {
        KlMorphismCell {
            source: monad.clone(),
            target: monad.clone(),
            functor: Functor::identity(monad.base()),
            kappa: NatTrans::identity(monad.functor()),
        }
    }

    pub fn source(&self) -> &Monad {
        &self.source
    }

    pub fn target(&self) -> &Monad {
        &self.target
    }

    pub fn functor(&self) -> &Functor {
        &self.functor
    }

    pub fn kappa(&self) -> &NatTrans {
        &self.kappa
    }
}

/// `κ ∘ F η = η' F` at every object.
pub fn check_klu(m: &KlMorphismCell) -> Report {
    let (t, s, f) = (&m.source, &m.target, &m.functor);
    let a_cat = t.base();
    let b_cat = s.base();
    let mut c = Check::new("klu");
    for a in a_cat.objects() {
        let lhs = b_cat.path(&[m.kappa.at(a), f.arr(t.eta(a))]);
        c.record(lhs == Some(s.eta(f.obj(a))), || format!("a={}", a_cat.object_name(a)));
    }
    let mut r = Report::new();
    r.push(c);
    r
}

/// `μ' F ∘ S κ ∘ κ T = κ ∘ F μ` at every object.
pub fn check_klm(m: &KlMorphismCell) -> Report {
    let (t, s, f) = (&m.source, &m.target, &m.functor);
    let a_cat = t.base();
    let b_cat = s.base();
    let mut c = Check::new("klm");
    for a in a_cat.objects() {
        let lhs = b_cat.path(&[s.mu(f.obj(a)), s.arr(m.kappa.at(a)), m.kappa.at(t.obj(a))]);
        let rhs = b_cat.path(&[m.kappa.at(a), f.arr(t.mu(a))]);
        c.record(lhs.is_some() && lhs == rhs, || format!("a={}", a_cat.object_name(a)));
    }
    let mut r = Report::new();
    r.push(c);
    r
}

/// Naturality of `κ` together with KlU and KlM.
pub fn check_kl_classical(m: &KlMorphismCell) -> Report {
    let mut r = Report::new();
    r.absorb("kl_classical.kappa", check_nat_trans(&m.kappa));
    r.absorb("kl_classical", check_klu(m));
    r.absorb("kl_classical", check_klm(m));
    r
}

fn kl_square(m: &KlMorphismCell, probe: &Probe) -> (Result<NatTrans>, Result<NatTrans>) {
    let (t, s, f) = (m.source.monoidal(), m.target.monoidal(), &m.functor);
    let (g, h, theta) = (&probe.lower, &probe.upper, &probe.cell);
    // κh · F(ϑ^T)
    let lhs = (|| {
        let ext = left_ext_monad(t, theta, h)?;
        vcomp(&whisker_right(&m.kappa, h)?, &whisker_left(f, &ext)?)
    })();
    // (κh · Fϑ)^S · κg
    let rhs = (|| {
        let inner = vcomp(&whisker_right(&m.kappa, h)?, &whisker_left(f, theta)?)?;
        let ext = left_ext_monad(s, &inner, &compose(f, h)?)?;
        vcomp(&ext, &whisker_right(&m.kappa, g)?)
    })();
    (lhs, rhs)
}

/// KlU plus the no-iteration square `κh · Fϑ^T = (κh · Fϑ)^S · κg`, with the
/// extension operators computed by pasting with `μ`, `μ'`. The square is
/// evaluated at the generator `ϑ = 1_T`, on 2-cells between composites of
/// `{1, T, S, F}`, and pointwise on every `f: a -> T b`.
pub fn check_kl_noiter(m: &KlMorphismCell, limits: &Limits) -> Result<Report> {
    let mut r = Report::new();
    r.absorb("kl_noiter.kappa", check_nat_trans(&m.kappa));
    r.absorb("kl_noiter", check_klu(m));

    let t = m.source.functor();
    let id_a = Functor::identity(m.source.base());
    let generator = Probe {
        label: "generator theta=1_T".into(),
        lower: t.clone(),
        upper: id_a.clone(),
        cell: NatTrans::identity(t),
    };
    let mut gen = Check::new("kl_noiter.square.generator");
    let (l, rr) = kl_square(m, &generator);
    record_cells(&mut gen, l, rr, || generator.label.clone());
    r.push(gen);

    let id_b = Functor::identity(m.target.base());
    let gens = [
        ("1", &id_a),
        ("1'", &id_b),
        ("T", t),
        ("S", m.target.functor()),
        ("F", &m.functor),
    ];
    let words = composites(&gens, PROBE_DEPTH);
    let mut probes = Check::new("kl_noiter.square.probes");
    for p in left_probes(&words, t, limits)? {
        let (l, rr) = kl_square(m, &p);
        record_cells(&mut probes, l, rr, || p.label.clone());
    }
    r.push(probes);

    let mut points = Check::new("kl_noiter.square.pointwise");
    for p in pointwise_left_probes(t)? {
        let (l, rr) = kl_square(m, &p);
        record_cells(&mut points, l, rr, || p.label.clone());
    }
    r.push(points);
    Ok(r)
}

/// The two axioms of a Kl-morphism in extension form, evaluated on the
/// extension tables: `κ a ∘ F η a = η' F a` and, for every `f: a -> T b`,
/// `κ b ∘ F f^T = (κ b ∘ F f)^S ∘ κ a`. Naturality of `κ` is not assumed.
pub fn check_kl_morphism_cat(m: &KlMorphismCell) -> Report {
    let (t, s, f) = (m.source.extensive(), m.target.extensive(), &m.functor);
    let a_cat = t.base();
    let b_cat = s.base();
    let mut r = Report::new();

    let mut ax1 = Check::new("kl_cat.axiom1");
    let mut ax2 = Check::new("kl_cat.axiom2");
    for a in a_cat.objects() {
        let lhs = b_cat.path(&[m.kappa.at(a), f.arr(t.eta(a))]);
        ax1.record(lhs == Some(s.eta(f.obj(a))), || format!("a={}", a_cat.object_name(a)));
    }
    for (b, arrow) in t.keys() {
        let a = a_cat.dom(arrow);
        let lhs = t.ext(b, arrow).and_then(|ft| b_cat.try_compose(m.kappa.at(b), f.arr(ft)));
        let rhs = b_cat
            .try_compose(m.kappa.at(b), f.arr(arrow))
            .and_then(|k| s.ext(f.obj(b), k))
            .and_then(|ext| b_cat.try_compose(ext, m.kappa.at(a)));
        ax2.record(lhs.is_some() && lhs == rhs, || {
            format!("a={} b={} f={}", a_cat.object_name(a), a_cat.object_name(b), a_cat.arrow_name(arrow))
        });
    }
    r.push(ax1);
    r.push(ax2);
    r
}

/// Pastes `(G, κ')` after `(F, κ)` into `(G F, κ' F · G κ)`.
pub fn compose_kl(second: &KlMorphismCell, first: &KlMorphismCell) -> Result<KlMorphismCell> {
    if first.target != second.source {
        return Err(Error::shape("morphisms do not meet at a common monad"));
    }
    let functor = compose(&second.functor, &first.functor)?;
    let kappa = vcomp(
        &whisker_right(&second.kappa, &first.functor)?,
        &whisker_left(&second.functor, &first.kappa)?,
    )?;
    KlMorphismCell::new(first.source.clone(), second.target.clone(), functor, kappa)
}
