//! JSON family documents.
//!
//! ```json
//! {
//!   "format_version": "1",
//!   "universe": ["a", "b"],
//!   "sets": [
//!     { "name": "K1", "values": { "a": {"mu": "0.25", "rho": "0.20", "sigma": "0.30"}, ... } }
//!   ]
//! }
//! ```
//!
//! Grades travel as decimal strings. [`save_family`] writes members in
//! canonical order with two-space indentation, so saving a loaded document
//! again reproduces it byte for byte.

use std::fmt;

use serde::de::{MapAccess, Visitor};
use serde::ser::SerializeMap;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::error::Error;
use crate::family::Family;
use crate::pfs::{MembershipTriple, PictureFuzzySet, SumCheck, Universe};

pub const FORMAT_VERSION: &str = "1";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DocumentError {
    #[error("malformed JSON at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("schema error: {0}")]
    Schema(String),
    #[error("set {set:?}{}: {source}", .element.as_ref().map(|e| format!(", element {e:?}")).unwrap_or_default())]
    Validation {
        set: String,
        element: Option<String>,
        source: Error,
    },
}

impl DocumentError {
    /// `ParseError`, `SchemaError` or `ValidationError`.
    pub fn kind(&self) -> &'static str {
        match self {
            DocumentError::Parse { .. } => "ParseError",
            DocumentError::Schema(_) => "SchemaError",
            DocumentError::Validation { .. } => "ValidationError",
        }
    }
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct FamilyDocument {
    format_version: String,
    universe: Vec<String>,
    sets: Vec<SetEntry>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct SetEntry {
    name: String,
    values: Entries,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TripleEntry {
    mu: String,
    rho: String,
    sigma: String,
}

/// A JSON object kept as an ordered list so repeated keys can be reported.
#[derive(Debug)]
struct Entries(Vec<(String, TripleEntry)>);

impl Serialize for Entries {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.0.len()))?;
        for (k, v) in &self.0 {
            map.serialize_entry(k, v)?;
        }
        map.end()
    }
}

impl<'de> Deserialize<'de> for Entries {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        struct EntriesVisitor;

        impl<'de> Visitor<'de> for EntriesVisitor {
            type Value = Entries;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("a map from element label to {mu, rho, sigma}")
            }

            fn visit_map<A: MapAccess<'de>>(self, mut access: A) -> Result<Entries, A::Error> {
                let mut out = Vec::new();
                while let Some((k, v)) = access.next_entry::<String, TripleEntry>()? {
                    out.push((k, v));
                }
                Ok(Entries(out))
            }
        }

        deserializer.deserialize_map(EntriesVisitor)
    }
}

pub fn load_family(bytes: &[u8]) -> Result<Family, DocumentError> {
    load_family_with(bytes, SumCheck::Strict)
}

/// [`load_family`] with a choice of grade sum check.
pub fn load_family_with(bytes: &[u8], check: SumCheck) -> Result<Family, DocumentError> {
    let text = std::str::from_utf8(bytes).map_err(|e| DocumentError::Parse {
        line: 0,
        column: 0,
        message: format!("input is not UTF-8: {e}"),
    })?;
    let doc: FamilyDocument = serde_json::from_str(text).map_err(|e| {
        use serde_json::error::Category;
        match e.classify() {
            Category::Data => DocumentError::Schema(e.to_string()),
            _ => DocumentError::Parse {
                line: e.line(),
                column: e.column(),
                message: e.to_string(),
            },
        }
    })?;

    if doc.format_version != FORMAT_VERSION {
        return Err(DocumentError::Schema(format!(
            "unsupported format_version {:?}, expected {FORMAT_VERSION:?}",
            doc.format_version
        )));
    }
    let universe = Universe::new(doc.universe.iter().cloned())
        .map_err(|e| DocumentError::Schema(format!("universe: {e}")))?;

    let mut family = Family::new(&universe);
    for entry in doc.sets {
        let invalid = |element: Option<&str>, source: Error| DocumentError::Validation {
            set: entry.name.clone(),
            element: element.map(str::to_string),
            source,
        };
        let mut rows: Vec<Option<(&str, &str, &str)>> = vec![None; universe.len()];
        for (label, t) in &entry.values.0 {
            let i = universe
                .index_of(label)
                .ok_or_else(|| invalid(Some(label), Error::UnknownElement(label.clone())))?;
            if rows[i].is_some() {
                return Err(invalid(Some(label), Error::DuplicateElement(label.clone())));
            }
            rows[i] = Some((&t.mu, &t.rho, &t.sigma));
        }
        let mut triples = Vec::with_capacity(universe.len());
        for (label, row) in universe.labels().iter().zip(&rows) {
            let (mu, rho, sigma) =
                row.ok_or_else(|| invalid(Some(label), Error::MissingElement(label.clone())))?;
            let triple = MembershipTriple::parse_with(mu, rho, sigma, check).map_err(|e| {
                let e = match e {
                    Error::GradeSumExceeded { sum, .. } => Error::GradeSumExceeded {
                        element: label.clone(),
                        sum,
                    },
                    other => other,
                };
                invalid(Some(label), e)
            })?;
            triples.push(triple);
        }
        let set = PictureFuzzySet::new(&universe, triples).map_err(|e| invalid(None, e))?;
        family
            .insert(entry.name.clone(), set)
            .map_err(|e| invalid(None, e))?;
    }
    Ok(family)
}

/// Canonical document text, terminated by a newline.
pub fn save_family(family: &Family) -> String {
    let canonical = family.canonicalized();
    let labels = canonical.universe().labels();
    let doc = FamilyDocument {
        format_version: FORMAT_VERSION.to_string(),
        universe: labels.to_vec(),
        sets: canonical
            .iter()
            .map(|m| SetEntry {
                name: m.name.clone(),
                values: Entries(
                    labels
                        .iter()
                        .zip(m.set.triples())
                        .map(|(l, t)| {
                            (
                                l.clone(),
                                TripleEntry {
                                    mu: t.mu().to_string(),
                                    rho: t.rho().to_string(),
                                    sigma: t.sigma().to_string(),
                                },
                            )
                        })
                        .collect(),
                ),
            })
            .collect(),
    };
    let mut text = serde_json::to_string_pretty(&doc).expect("document serialization cannot fail");
    text.push('\n');
    text
}
