use crate::error::{Error, Result};
use crate::fincat::{check_nat_trans, composites, compose, whisker_left, whisker_right, vcomp, Functor, NatTrans};
use crate::monadcore::{right_ext_monad, Monad};
use crate::oracle::Limits;
use crate::probes::{record_cells, right_probes, Probe, PROBE_DEPTH};
use crate::report::{Check, Report};

/// A functor `F: A -> B` with `φ: S F ⇒ F T`, where `T` is a monad on `A`
/// and `S` a monad on `B`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EMMorphismCell {
    source: Monad,
    target: Monad,
    functor: Functor,
    phi: NatTrans,
}

impl EMMorphismCell {
    pub fn new(source: Monad, target: Monad, functor: Functor, phi: NatTrans) -> Result<Self> {
        if functor.source() != source.base() || functor.target() != target.base() {
            return Err(Error::shape("functor must run from the source base to the target base"));
        }
        if *phi.src() != compose(target.functor(), &functor)?
            || *phi.dst() != compose(&functor, source.functor())?
        {
            return Err(Error::shape("phi must be a 2-cell S F => F T"));
        }
        Ok(EMMorphismCell { source, target, functor, phi })
    }

    pub fn identity(monad: &Monad) -> Self {
        EMMorphismCell {
            source: monad.clone(),
            target: monad.clone(),
            functor: Functor::identity(monad.base()),
            phi: NatTrans::identity(monad.functor()),
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

    pub fn phi(&self) -> &NatTrans {
        &self.phi
    }
}

/// `φ ∘ η' F = F η` at every object.
pub fn check_emu(m: &EMMorphismCell) -> Report {
    let (t, s, f) = (&m.source, &m.target, &m.functor);
    let a_cat = t.base();
    let b_cat = s.base();
    let mut c = Check::new("emu");
    for a in a_cat.objects() {
        let lhs = b_cat.path(&[m.phi.at(a), s.eta(f.obj(a))]);
        c.record(lhs == Some(f.arr(t.eta(a))), || format!("a={}", a_cat.object_name(a)));
    }
    let mut r = Report::new();
    r.push(c);
    r
}

/// `F μ ∘ φ T ∘ S φ = φ ∘ μ' F` at every object.
pub fn check_emm(m: &EMMorphismCell) -> Report {
    let (t, s, f) = (&m.source, &m.target, &m.functor);
    let a_cat = t.base();
    let b_cat = s.base();
    let mut c = Check::new("emm");
    for a in a_cat.objects() {
        let lhs = b_cat.path(&[f.arr(t.mu(a)), m.phi.at(t.obj(a)), s.arr(m.phi.at(a))]);
        let rhs = b_cat.path(&[m.phi.at(a), s.mu(f.obj(a))]);
        c.record(lhs.is_some() && lhs == rhs, || format!("a={}", a_cat.object_name(a)));
    }
    let mut r = Report::new();
    r.push(c);
    r
}

/// Naturality of `φ` together with EMU and EMM.
pub fn check_em_classical(m: &EMMorphismCell) -> Report {
    let mut r = Report::new();
    r.absorb("em_classical.phi", check_nat_trans(&m.phi));
    r.absorb("em_classical", check_emu(m));
    r.absorb("em_classical", check_emm(m));
    r
}

fn em_square(m: &EMMorphismCell, probe: &Probe) -> (Result<NatTrans>, Result<NatTrans>) {
    let (t, s, f) = (m.source.monoidal(), m.target.monoidal(), &m.functor);
    let (g, h, theta) = (&probe.lower, &probe.upper, &probe.cell);
    // hφ · ϑ^S F
    let lhs = (|| {
        let ext = right_ext_monad(s, theta, h)?;
        vcomp(&whisker_left(h, &m.phi)?, &whisker_right(&ext, f)?)
    })();
    // (hφ · ϑF)^T · gφ
    let rhs = (|| {
        let inner = vcomp(&whisker_left(h, &m.phi)?, &whisker_right(theta, f)?)?;
        let ext = right_ext_monad(t, &inner, &compose(h, f)?)?;
        vcomp(&ext, &whisker_left(g, &m.phi)?)
    })();
    (lhs, rhs)
}

/// EMU plus the no-iteration square `hφ · ϑ^S F = (hφ · ϑF)^T · gφ` for
/// `ϑ: g ⇒ h S`, with right extension operators computed by pasting. The
/// square is evaluated at the generator `ϑ = 1_S` and on 2-cells between
/// composites of `{1, S, T, F}`.
pub fn check_em_noiter(m: &EMMorphismCell, limits: &Limits) -> Result<Report> {
    let mut r = Report::new();
    r.absorb("em_noiter.phi", check_nat_trans(&m.phi));
    r.absorb("em_noiter", check_emu(m));

    let s = m.target.functor();
    let id_b = Functor::identity(m.target.base());
    let generator = Probe {
        label: "generator theta=1_S".into(),
        lower: s.clone(),
        upper: id_b.clone(),
        cell: NatTrans::identity(s),
    };
    let mut gen = Check::new("em_noiter.square.generator");
    let (l, rr) = em_square(m, &generator);
    record_cells(&mut gen, l, rr, || generator.label.clone());
    r.push(gen);

    let id_a = Functor::identity(m.source.base());
    let gens = [
        ("1", &id_a),
        ("1'", &id_b),
        ("T", m.source.functor()),
        ("S", s),
        ("F", &m.functor),
    ];
    let words = composites(&gens, PROBE_DEPTH);
    let mut probes = Check::new("em_noiter.square.probes");
    for p in right_probes(&words, s, limits)? {
        let (l, rr) = em_square(m, &p);
        record_cells(&mut probes, l, rr, || p.label.clone());
    }
    r.push(probes);
    Ok(r)
}
