//! JSON fibration documents.

use std::path::Path;

use lefsig_core::{effective_dimension, Chirality, MonodromyWord, SurfaceSignature, VanishingCycle};
use serde::{Deserialize, Serialize};

use crate::error::{CliError, CliResult};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FibrationDocument {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub genus: u32,
    pub boundary: u32,
    pub cycles: Vec<CycleEntry>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CycleEntry {
    pub vector: Vec<i64>,
    #[serde(default = "right_handed", skip_serializing_if = "is_right_handed")]
    pub chirality: i64,
}

fn right_handed() -> i64 {
    1
}

fn is_right_handed(c: &i64) -> bool {
    *c == 1
}

/// Deserializes JSON text, reporting the path of the offending field.
pub fn parse_json<T: serde::de::DeserializeOwned>(text: &str, file: &str) -> CliResult<T> {
    let de = &mut serde_json::Deserializer::from_str(text);
    serde_path_to_error::deserialize(de).map_err(|e| {
        let path = e.path().to_string();
        let inner = e.into_inner();
        let message = if path == "." { inner.to_string() } else { format!("field `{path}`: {inner}") };
        CliError::Parse { file: file.to_owned(), message }
    })
}

pub fn read_text(path: &Path) -> CliResult<String> {
    std::fs::read_to_string(path).map_err(|source| CliError::Read { path: path.to_owned(), source })
}

impl FibrationDocument {
    pub fn load(path: &Path) -> CliResult<Self> {
        parse_json(&read_text(path)?, &path.display().to_string())
    }

    /// Checks every field and builds the word.
    pub fn to_word(&self) -> CliResult<MonodromyWord> {
        let surface = SurfaceSignature::new(self.genus, self.boundary);
        let dim = effective_dimension(surface);
        let mut cycles = Vec::with_capacity(self.cycles.len());
        for (i, c) in self.cycles.iter().enumerate() {
            if c.vector.len() != dim {
                return Err(CliError::Invalid(format!(
                    "field `cycles[{i}].vector`: expected {dim} entries for genus {} and boundary {}, found {}",
                    self.genus,
                    self.boundary,
                    c.vector.len()
                )));
            }
            let chirality = Chirality::from_sign(c.chirality).map_err(|_| {
                CliError::Invalid(format!("field `cycles[{i}].chirality`: must be 1 or -1, found {}", c.chirality))
            })?;
            cycles.push(VanishingCycle::new(c.vector.clone(), chirality));
        }
        Ok(MonodromyWord::new(surface, cycles)?)
    }

    pub fn from_word(word: &MonodromyWord, name: Option<String>) -> Self {
        let surface = word.surface();
        FibrationDocument {
            name,
            genus: surface.genus,
            boundary: surface.boundary,
            cycles: word
                .cycles()
                .iter()
                .map(|c| CycleEntry { vector: c.class.clone(), chirality: c.chirality.sign() })
                .collect(),
        }
    }

    /// Canonical text: fixed field order, default chirality omitted, one
    /// trailing newline.
    pub fn to_canonical_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("document serializes");
        s.push('\n');
        s
    }
}
