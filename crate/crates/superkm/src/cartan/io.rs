//! The `.diagram` file format:
//! `{ "name": "<optional>", "parity": [1,0], "matrix": [["0","1"],["-1","2"]] }`.

use super::{CartanError, Diagram};
use crate::scalars::{parse_scalar, Scalar, ScalarError};
use serde::{Deserialize, Serialize};
use std::path::Path;

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DiagramFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub parity: Vec<u8>,
    pub matrix: Vec<Vec<String>>,
}

#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("malformed diagram file: {0}")]
    Json(#[from] serde_json::Error),
    #[error("entry ({row},{col}) \"{text}\": {source}")]
    Entry {
        row: usize,
        col: usize,
        text: String,
        source: ScalarError,
    },
    #[error(transparent)]
    Cartan(#[from] CartanError),
}

impl DiagramFile {
    pub fn from_diagram(d: &Diagram) -> DiagramFile {
        DiagramFile {
            name: d.name().map(str::to_string),
            parity: d.parities().to_vec(),
            matrix: d
                .matrix()
                .iter()
                .map(|r| r.iter().map(|v| v.to_string()).collect())
                .collect(),
        }
    }

    pub fn to_diagram(&self) -> Result<Diagram, FormatError> {
        Ok(self.to_diagram_with_scales()?.0)
    }

    /// Also returns the factor each row was multiplied by during normalization.
    pub fn to_diagram_with_scales(&self) -> Result<(Diagram, Vec<Scalar>), FormatError> {
        let mut m = Vec::with_capacity(self.matrix.len());
        for (row, r) in self.matrix.iter().enumerate() {
            let mut out = Vec::with_capacity(r.len());
            for (col, text) in r.iter().enumerate() {
                let v = parse_scalar(text).map_err(|source| FormatError::Entry {
                    row: row + 1,
                    col: col + 1,
                    text: text.clone(),
                    source,
                })?;
                out.push(v);
            }
            m.push(out);
        }
        let (d, scales) = Diagram::normalize_with_scales(m, self.parity.clone())?;
        let d = match &self.name {
            Some(n) => d.with_name(n.clone()),
            None => d,
        };
        Ok((d, scales))
    }

    pub fn parse(text: &str) -> Result<DiagramFile, FormatError> {
        Ok(serde_json::from_str(text)?)
    }

    /// Stable layout: one matrix row per line.
    pub fn render(&self) -> String {
        let q = |s: &str| serde_json::to_string(s).expect("string serializes");
        let mut out = String::from("{\n");
        if let Some(n) = &self.name {
            out.push_str(&format!("  \"name\": {},\n", q(n)));
        }
        let par: Vec<String> = self.parity.iter().map(|p| p.to_string()).collect();
        out.push_str(&format!(
            "  \"parity\": [{}],\n  \"matrix\": [\n",
            par.join(", ")
        ));
        let rows: Vec<String> = self
            .matrix
            .iter()
            .map(|r| {
                format!(
                    "    [{}]",
                    r.iter().map(|s| q(s)).collect::<Vec<_>>().join(", ")
                )
            })
            .collect();
        out.push_str(&rows.join(",\n"));
        out.push_str("\n  ]\n}\n");
        out
    }
}

pub fn read_diagram(path: impl AsRef<Path>) -> Result<Diagram, FormatError> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|source| FormatError::Io {
        path: path.display().to_string(),
        source,
    })?;
    DiagramFile::parse(&text)?.to_diagram()
}

pub fn write_diagram(d: &Diagram) -> String {
    DiagramFile::from_diagram(d).render()
}
