//! The JSON document format. Every document is
//! `{"version": 1, "kind": "...", "payload": {...}}`, and payloads refer to
//! objects and arrows by name.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub const SCHEMA_VERSION: u64 = 1;

pub type Components = BTreeMap<String, String>;

#[derive(Debug, Error)]
pub enum DocError {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax { line: usize, column: usize, message: String },
    #[error("unsupported schema version {found} (expected {SCHEMA_VERSION})")]
    Version { found: u64 },
    #[error("unknown document kind `{0}`")]
    UnknownKind(String),
    #[error("malformed `{kind}` payload: {message}")]
    Payload { kind: String, message: String },
    #[error("expected a `{expected}` document, found `{found}`")]
    WrongKind { expected: String, found: String },
    #[error(transparent)]
    Model(#[from] crate::Error),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ArrowDoc {
    pub name: String,
    pub dom: String,
    pub cod: String,
}

/// Composites are listed as `[g, f, g∘f]`; composites with an identity may
/// be omitted.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CategoryDoc {
    pub objects: Vec<String>,
    pub arrows: Vec<ArrowDoc>,
    pub identities: BTreeMap<String, String>,
    #[serde(default)]
    pub composites: Vec<[String; 3]>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FunctorMapDoc {
    pub objects: BTreeMap<String, String>,
    pub arrows: BTreeMap<String, String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FunctorDoc {
    pub source: CategoryDoc,
    pub target: CategoryDoc,
    pub map: FunctorMapDoc,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct NatTransDoc {
    pub source: CategoryDoc,
    pub target: CategoryDoc,
    pub from: FunctorMapDoc,
    pub to: FunctorMapDoc,
    pub components: Components,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MonoidalBody {
    pub functor: FunctorMapDoc,
    pub unit: Components,
    pub mult: Components,
}

/// `value = arrow^T`, where `arrow: a -> T target`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExtEntry {
    pub target: String,
    pub arrow: String,
    pub value: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExtensiveBody {
    pub objects: BTreeMap<String, String>,
    pub unit: Components,
    pub extension: Vec<ExtEntry>,
}

/// A monad nested in a larger document.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "form", rename_all = "lowercase")]
pub enum MonadBody {
    Monoidal(MonoidalBody),
    Extensive(ExtensiveBody),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MonadMonoidalDoc {
    pub category: CategoryDoc,
    pub functor: FunctorMapDoc,
    pub unit: Components,
    pub mult: Components,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MonadExtensiveDoc {
    pub category: CategoryDoc,
    pub objects: BTreeMap<String, String>,
    pub unit: Components,
    pub extension: Vec<ExtEntry>,
}

/// `cell` is `κ: F T ⇒ S F` for Kl-morphisms and `φ: S F ⇒ F T` for
/// EM-morphisms.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MorphismDoc {
    pub source_category: CategoryDoc,
    pub target_category: CategoryDoc,
    pub source: MonadBody,
    pub target: MonadBody,
    pub functor: FunctorMapDoc,
    pub cell: Components,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MorphismArm {
    pub functor: FunctorMapDoc,
    pub cell: Components,
}

/// `cell` is `χ: f' ⇒ S f` for Kl-transformations and `ϱ: f ⇒ f' T` for
/// EM-transformations, where `from = (f, φ)` and `to = (f', φ')`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TransformationDoc {
    pub source_category: CategoryDoc,
    pub target_category: CategoryDoc,
    pub source: MonadBody,
    pub target: MonadBody,
    pub from: MorphismArm,
    pub to: MorphismArm,
    pub cell: Components,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DistLawDoc {
    pub category: CategoryDoc,
    pub s: MonadBody,
    pub t: MonadBody,
    pub lambda: Components,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlphaDoc {
    pub category: CategoryDoc,
    pub s: MonadBody,
    pub t: MonadBody,
    pub alpha: Components,
}

/// `operations[a][f] = f^λ` for every `f: x -> T S a`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraExtDoc {
    pub category: CategoryDoc,
    pub s: MonadBody,
    pub t: MonadBody,
    pub operations: BTreeMap<String, BTreeMap<String, String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lambda: Option<Components>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Payload {
    Category(CategoryDoc),
    Functor(FunctorDoc),
    NatTrans(NatTransDoc),
    MonadMonoidal(MonadMonoidalDoc),
    MonadExtensive(MonadExtensiveDoc),
    KlMorphism(MorphismDoc),
    EmMorphism(MorphismDoc),
    KlTransformation(TransformationDoc),
    EmTransformation(TransformationDoc),
    DistLaw(DistLawDoc),
    Alpha(AlphaDoc),
    AlgebraExt(AlgebraExtDoc),
}

pub const KINDS: &[&str] = &[
    "category",
    "functor",
    "nattrans",
    "monad-monoidal",
    "monad-extensive",
    "kl-morphism",
    "em-morphism",
    "kl-transformation",
    "em-transformation",
    "distlaw",
    "alpha",
    "algebra-ext",
];

impl Payload {
    pub fn kind(&self) -> &'static str {
        match self {
            Payload::Category(_) => "category",
            Payload::Functor(_) => "functor",
            Payload::NatTrans(_) => "nattrans",
            Payload::MonadMonoidal(_) => "monad-monoidal",
            Payload::MonadExtensive(_) => "monad-extensive",
            Payload::KlMorphism(_) => "kl-morphism",
            Payload::EmMorphism(_) => "em-morphism",
            Payload::KlTransformation(_) => "kl-transformation",
            Payload::EmTransformation(_) => "em-transformation",
            Payload::DistLaw(_) => "distlaw",
            Payload::Alpha(_) => "alpha",
            Payload::AlgebraExt(_) => "algebra-ext",
        }
    }

    fn to_value(&self) -> serde_json::Value {
        let v = match self {
            Payload::Category(p) => serde_json::to_value(p),
            Payload::Functor(p) => serde_json::to_value(p),
            Payload::NatTrans(p) => serde_json::to_value(p),
            Payload::MonadMonoidal(p) => serde_json::to_value(p),
            Payload::MonadExtensive(p) => serde_json::to_value(p),
            Payload::KlMorphism(p) | Payload::EmMorphism(p) => serde_json::to_value(p),
            Payload::KlTransformation(p) | Payload::EmTransformation(p) => serde_json::to_value(p),
            Payload::DistLaw(p) => serde_json::to_value(p),
            Payload::Alpha(p) => serde_json::to_value(p),
            Payload::AlgebraExt(p) => serde_json::to_value(p),
        };
        v.expect("payloads serialize")
    }

    fn from_value(kind: &str, value: serde_json::Value) -> Result<Self, DocError> {
        fn de<T: DeserializeOwned>(kind: &str, v: serde_json::Value) -> Result<T, DocError> {
            serde_json::from_value(v).map_err(|e| DocError::Payload {
                kind: kind.to_string(),
                message: e.to_string(),
            })
        }
        Ok(match kind {
            "category" => Payload::Category(de(kind, value)?),
            "functor" => Payload::Functor(de(kind, value)?),
            "nattrans" => Payload::NatTrans(de(kind, value)?),
            "monad-monoidal" => Payload::MonadMonoidal(de(kind, value)?),
            "monad-extensive" => Payload::MonadExtensive(de(kind, value)?),
            "kl-morphism" => Payload::KlMorphism(de(kind, value)?),
            "em-morphism" => Payload::EmMorphism(de(kind, value)?),
            "kl-transformation" => Payload::KlTransformation(de(kind, value)?),
            "em-transformation" => Payload::EmTransformation(de(kind, value)?),
            "distlaw" => Payload::DistLaw(de(kind, value)?),
            "alpha" => Payload::Alpha(de(kind, value)?),
            "algebra-ext" => Payload::AlgebraExt(de(kind, value)?),
            other => return Err(DocError::UnknownKind(other.to_string())),
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpecDocument {
    pub version: u64,
    pub payload: Payload,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct Envelope {
    version: u64,
    kind: String,
    payload: serde_json::Value,
}

impl SpecDocument {
    pub fn new(payload: Payload) -> Self {
        SpecDocument { version: SCHEMA_VERSION, payload }
    }

    pub fn kind(&self) -> &'static str {
        self.payload.kind()
    }

    pub fn parse(text: &str) -> Result<Self, DocError> {
        let env: Envelope = serde_json::from_str(text).map_err(|e| DocError::Syntax {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })?;
        if env.version != SCHEMA_VERSION {
            return Err(DocError::Version { found: env.version });
        }
        let payload = Payload::from_value(&env.kind, env.payload)?;
        Ok(SpecDocument { version: env.version, payload })
    }

    /// Pretty-printed JSON with a trailing newline.
    pub fn to_text(&self) -> String {
        let env = Envelope {
            version: self.version,
            kind: self.kind().to_string(),
            payload: self.payload.to_value(),
        };
        let mut s = serde_json::to_string_pretty(&env).expect("documents serialize");
        s.push('\n');
        s
    }
}

pub fn load(path: &Path) -> Result<SpecDocument, DocError> {
    let text = std::fs::read_to_string(path).map_err(|source| DocError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    SpecDocument::parse(&text)
}

pub fn save(doc: &SpecDocument, path: &Path) -> Result<(), DocError> {
    std::fs::write(path, doc.to_text()).map_err(|source| DocError::Io {
        path: path.to_path_buf(),
        source,
    })
}
