//! Matrix files for the `maslov` and `meyer` commands.
//!
//! `{"dimension": d, "matrices": [m_1, m_2, ...]}`, each matrix a list of rows
//! whose entries are integers or strings such as `"-3/4"`.

use std::path::Path;

use lefsig_core::{Rational, RationalMatrix};
use serde::Deserialize;

use crate::document::{parse_json, read_text};
use crate::error::{CliError, CliResult};

#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
pub enum Entry {
    Integer(i64),
    Text(String),
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatrixDocument {
    pub dimension: usize,
    pub matrices: Vec<Vec<Vec<Entry>>>,
}

impl Entry {
    fn to_rational(&self, field: &str) -> CliResult<Rational> {
        match self {
            Entry::Integer(n) => Ok(Rational::from_integer((*n).into())),
            Entry::Text(s) => s.trim().parse::<Rational>().map_err(|_| {
                CliError::Invalid(format!("field `{field}`: `{s}` is not an integer or a fraction p/q with q != 0"))
            }),
        }
    }
}

impl MatrixDocument {
    pub fn load(path: &Path) -> CliResult<Self> {
        parse_json(&read_text(path)?, &path.display().to_string())
    }

    /// Converts matrix `index`; every row must have `width` entries.
    pub fn matrix(&self, index: usize, width: usize) -> CliResult<RationalMatrix> {
        let rows = &self.matrices[index];
        let mut out = Vec::with_capacity(rows.len());
        for (r, row) in rows.iter().enumerate() {
            if row.len() != width {
                return Err(CliError::Invalid(format!(
                    "field `matrices[{index}][{r}]`: expected {width} entries, found {}",
                    row.len()
                )));
            }
            let parsed = row
                .iter()
                .enumerate()
                .map(|(c, e)| e.to_rational(&format!("matrices[{index}][{r}][{c}]")))
                .collect::<CliResult<Vec<_>>>()?;
            out.push(parsed);
        }
        if out.is_empty() {
            return Ok(RationalMatrix::zeros(0, width));
        }
        Ok(RationalMatrix::from_rows(out)?)
    }

    /// Requires an even dimension and exactly `count` matrices.
    pub fn expect_shape(&self, count: usize) -> CliResult<()> {
        if !self.dimension.is_multiple_of(2) {
            return Err(CliError::Invalid(format!("field `dimension`: must be even, found {}", self.dimension)));
        }
        if self.matrices.len() != count {
            return Err(CliError::Invalid(format!(
                "field `matrices`: expected {count} matrices, found {}",
                self.matrices.len()
            )));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fractions_and_integers() {
        let doc: MatrixDocument =
            parse_json(r#"{"dimension":2,"matrices":[[[1,"-3/6"],["2", 0]]]}"#, "m").unwrap();
        let m = doc.matrix(0, 2).unwrap();
        assert_eq!(m[(0, 1)], Rational::new((-1).into(), 2.into()));
        assert_eq!(m[(1, 0)], Rational::from_integer(2.into()));
    }

    #[test]
    fn bad_entries_are_located() {
        let doc: MatrixDocument = parse_json(r#"{"dimension":2,"matrices":[[[1,"1/0"]]]}"#, "m").unwrap();
        let err = doc.matrix(0, 2).unwrap_err().to_string();
        assert!(err.contains("matrices[0][0][1]"), "{err}");
        let err = doc.matrix(0, 3).unwrap_err().to_string();
        assert!(err.contains("expected 3 entries"), "{err}");
        let odd: MatrixDocument = parse_json(r#"{"dimension":3,"matrices":[]}"#, "m").unwrap();
        assert!(odd.expect_shape(0).unwrap_err().to_string().contains("even"));
    }
}
