use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::poly::{parse_poly, ModVec};

use super::morphism::GradedMorphism;
use super::presentation::GradedPresentation;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RelationDoc {
    pub degree: i64,
    pub entries: Vec<String>,
}

/// Serialized form of a [`GradedPresentation`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PresentationDoc {
    pub field: FieldSpec,
    pub nvars: usize,
    pub gens: Vec<i64>,
    #[serde(default)]
    pub rels: Vec<RelationDoc>,
}

/// Serialized form of a [`GradedMorphism`]; `matrix` is row-major,
/// target generators by source generators.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MorphismDoc {
    pub source: PresentationDoc,
    pub target: PresentationDoc,
    pub matrix: Vec<Vec<String>>,
}

impl GradedPresentation {
    pub fn to_doc(&self) -> PresentationDoc {
        PresentationDoc {
            field: self.field(),
            nvars: self.nvars(),
            gens: self.gens().to_vec(),
            rels: self
                .relations()
                .iter()
                .map(|r| RelationDoc {
                    degree: r.degree,
                    entries: r.vector.coords().iter().map(ToString::to_string).collect(),
                })
                .collect(),
        }
    }

    pub fn from_doc(doc: &PresentationDoc) -> Result<Self> {
        let mut rels = Vec::with_capacity(doc.rels.len());
        for (i, r) in doc.rels.iter().enumerate() {
            if r.entries.len() != doc.gens.len() {
                return Err(Error::InvalidPresentation(format!(
                    "relation {i} has {} entries for {} generators",
                    r.entries.len(),
                    doc.gens.len()
                )));
            }
            let coords = r
                .entries
                .iter()
                .map(|s| parse_poly(s, doc.field, doc.nvars))
                .collect::<Result<Vec<_>>>()?;
            rels.push((r.degree, ModVec::from_coords(coords)));
        }
        GradedPresentation::new(doc.field, doc.nvars, doc.gens.clone(), rels)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_doc()).expect("serializable")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let doc: PresentationDoc =
            serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        Self::from_doc(&doc)
    }
}

impl GradedMorphism {
    pub fn to_doc(&self) -> MorphismDoc {
        MorphismDoc {
            source: self.source().to_doc(),
            target: self.target().to_doc(),
            matrix: self
                .matrix()
                .iter()
                .map(|row| row.iter().map(ToString::to_string).collect())
                .collect(),
        }
    }

    pub fn from_doc(doc: &MorphismDoc) -> Result<Self> {
        let source = GradedPresentation::from_doc(&doc.source)?;
        let target = GradedPresentation::from_doc(&doc.target)?;
        let rows: Vec<Vec<&str>> = doc
            .matrix
            .iter()
            .map(|r| r.iter().map(String::as_str).collect())
            .collect();
        let refs: Vec<&[&str]> = rows.iter().map(Vec::as_slice).collect();
        GradedMorphism::parse(source, target, &refs)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_doc()).expect("serializable")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let doc: MorphismDoc =
            serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        Self::from_doc(&doc)
    }
}
