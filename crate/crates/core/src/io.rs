//! The `.cx2` file format: a JSON document with a format version, named
//! vertices, faces as vertex-name cycles, and an optional rotation block.
//!
//! ```json
//! {
//!   "version": 1,
//!   "vertices": ["a", "b", "c"],
//!   "faces": [
//!     ["a", "b", "c"]
//!   ],
//!   "rotation": {
//!     "a->b": [0]
//!   }
//! }
//! ```
//!
//! Rotation keys name a directed edge and map to the cycle of face indices
//! around it. Edges in at most two faces may be left out. The emitter writes
//! every edge in at least three faces, tail first by vertex order.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::Path;

use serde::Deserialize;
use thiserror::Error;

use crate::complex::{Complex2, ComplexError, DirectedEdge};
use crate::rotation::{validate_rotation, RotationError, RotationSystem};

pub const FORMAT_VERSION: u32 = 1;

#[derive(Debug, Error)]
pub enum IoError {
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax { line: usize, column: usize, message: String },
    #[error("unsupported format version {0}")]
    UnsupportedVersion(u32),
    #[error("rotation key `{0}` does not name an edge as `u->v`")]
    BadRotationKey(String),
    #[error(transparent)]
    Complex(#[from] ComplexError),
    #[error(transparent)]
    Rotation(#[from] RotationError),
    #[error("{path}: {source}")]
    File { path: String, source: std::io::Error },
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawDocument {
    version: u32,
    vertices: Vec<String>,
    faces: Vec<Vec<String>>,
    #[serde(default)]
    rotation: Option<BTreeMap<String, Vec<usize>>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cx2Document {
    pub complex: Complex2,
    pub rotation: Option<RotationSystem>,
}

impl Cx2Document {
    pub fn new(complex: Complex2) -> Self {
        Cx2Document { complex, rotation: None }
    }
}

pub fn parse(text: &str) -> Result<Cx2Document, IoError> {
    let raw: RawDocument = serde_json::from_str(text).map_err(|e| IoError::Syntax {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    if raw.version != FORMAT_VERSION {
        return Err(IoError::UnsupportedVersion(raw.version));
    }
    let complex = Complex2::build(&raw.vertices, &raw.faces)?;
    let rotation = match raw.rotation {
        None => None,
        Some(block) => {
            let mut cycles = BTreeMap::new();
            for (key, cycle) in block {
                let edge = split_key(&complex, &key).ok_or(IoError::BadRotationKey(key))?;
                cycles.insert(edge, cycle);
            }
            Some(validate_rotation(&complex, &cycles)?)
        }
    };
    Ok(Cx2Document { complex, rotation })
}

/// Splits `u->v` at the one arrow that leaves two vertex names on either side.
fn split_key(x: &Complex2, key: &str) -> Option<DirectedEdge> {
    let mut found = None;
    for (i, _) in key.match_indices("->") {
        if let (Some(t), Some(h)) = (x.vertex(&key[..i]), x.vertex(&key[i + 2..])) {
            if found.replace(DirectedEdge::new(t, h)).is_some() {
                return None;
            }
        }
    }
    found
}

pub fn emit(doc: &Cx2Document) -> String {
    let x = &doc.complex;
    let quote = |s: &str| serde_json::to_string(s).expect("strings serialize");
    let mut out = String::new();
    out.push_str("{\n");
    let _ = writeln!(out, "  \"version\": {FORMAT_VERSION},");
    let names: Vec<String> = x.names().iter().map(|n| quote(n)).collect();
    let _ = writeln!(out, "  \"vertices\": [{}],", names.join(", "));
    out.push_str("  \"faces\": [");
    for (i, face) in x.faces().iter().enumerate() {
        let names: Vec<String> = face.iter().map(|&v| quote(x.name(v))).collect();
        let sep = if i + 1 < x.face_count() { "," } else { "" };
        let _ = write!(out, "\n    [{}]{sep}", names.join(", "));
    }
    out.push_str(if x.face_count() == 0 { "]" } else { "\n  ]" });
    if let Some(sigma) = &doc.rotation {
        out.push_str(",\n  \"rotation\": {");
        let heavy: Vec<usize> = (0..x.edge_count()).filter(|&e| x.faces_on_edge(e).len() >= 3).collect();
        for (i, &e) in heavy.iter().enumerate() {
            let (a, b) = x.edge(e);
            let key = quote(&format!("{}->{}", x.name(a), x.name(b)));
            let cycle: Vec<String> = sigma.edge_cycle(e).iter().map(usize::to_string).collect();
            let sep = if i + 1 < heavy.len() { "," } else { "" };
            let _ = write!(out, "\n    {key}: [{}]{sep}", cycle.join(", "));
        }
        out.push_str(if heavy.is_empty() { "}" } else { "\n  }" });
    }
    out.push_str("\n}\n");
    out
}

pub fn read_file(path: &Path) -> Result<Cx2Document, IoError> {
    let text =
        std::fs::read_to_string(path).map_err(|source| IoError::File { path: path.display().to_string(), source })?;
    parse(&text)
}

pub fn write_file(path: &Path, doc: &Cx2Document) -> Result<(), IoError> {
    std::fs::write(path, emit(doc)).map_err(|source| IoError::File { path: path.display().to_string(), source })
}
