//! JSON codecs for proof scripts and Cayley-table models.
//!
//! Encoders are byte-deterministic: fixed key order, sorted checkpoint
//! names, two-space indentation and a trailing newline.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::models::{CayleyPair, ModelDoc, ModelError};
use crate::rewrite::{Move, MoveKind, ProofScript};
use crate::term::{format_term, parse_term, Path, TermError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("malformed document at line {line}, column {column}: {message}")]
    Malformed {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("move {index}: unknown move kind {kind:?} (expected \"row\" or \"col\")")]
    UnknownMoveKind { index: usize, kind: String },
    #[error("move {index}: {field} must be at least 1")]
    ZeroIndex { index: usize, field: &'static str },
    #[error("checkpoint {name:?} at {at} is beyond the {moves} moves of the script")]
    CheckpointOutOfRange { name: String, at: usize, moves: usize },
    #[error("start term: {0}")]
    Term(#[from] TermError),
    #[error("model: {0}")]
    Model(#[from] ModelError),
}

impl From<serde_json::Error> for FormatError {
    fn from(e: serde_json::Error) -> Self {
        FormatError::Malformed {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        }
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct MoveDoc {
    kind: String,
    path: Vec<usize>,
    index: usize,
    split_first: usize,
    split_second: usize,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ScriptDoc {
    start: String,
    moves: Vec<MoveDoc>,
    checkpoints: BTreeMap<String, usize>,
}

fn to_pretty<T: Serialize>(value: &T) -> Vec<u8> {
    let mut out = serde_json::to_vec_pretty(value).expect("plain data serializes");
    out.push(b'\n');
    out
}

pub fn encode_script(script: &ProofScript) -> Vec<u8> {
    let doc = ScriptDoc {
        start: format_term(&script.start),
        moves: script
            .moves
            .iter()
            .map(|m| MoveDoc {
                kind: match m.kind {
                    MoveKind::RowMerge => "row",
                    MoveKind::ColMerge => "col",
                }
                .to_string(),
                path: m.path.0.clone(),
                index: m.index,
                split_first: m.split_first,
                split_second: m.split_second,
            })
            .collect(),
        checkpoints: script.checkpoints.clone(),
    };
    to_pretty(&doc)
}

pub fn decode_script(bytes: &[u8]) -> Result<ProofScript, FormatError> {
    let doc: ScriptDoc = serde_json::from_slice(bytes)?;
    let start = parse_term(&doc.start)?;
    let mut moves = Vec::with_capacity(doc.moves.len());
    for (i, m) in doc.moves.into_iter().enumerate() {
        let index = i + 1;
        let kind = match m.kind.as_str() {
            "row" => MoveKind::RowMerge,
            "col" => MoveKind::ColMerge,
            _ => return Err(FormatError::UnknownMoveKind { index, kind: m.kind }),
        };
        if m.path.contains(&0) {
            return Err(FormatError::ZeroIndex { index, field: "path" });
        }
        if m.index == 0 {
            return Err(FormatError::ZeroIndex { index, field: "index" });
        }
        moves.push(Move {
            kind,
            path: Path(m.path),
            index: m.index,
            split_first: m.split_first,
            split_second: m.split_second,
        });
    }
    for (name, &at) in &doc.checkpoints {
        if at > moves.len() {
            return Err(FormatError::CheckpointOutOfRange {
                name: name.clone(),
                at,
                moves: moves.len(),
            });
        }
    }
    Ok(ProofScript {
        start,
        moves,
        checkpoints: doc.checkpoints,
    })
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ModelIn {
    n: usize,
    h: Vec<Vec<usize>>,
    v: Vec<Vec<usize>>,
}

pub fn encode_model(m: &CayleyPair) -> Vec<u8> {
    let mut out = serde_json::to_vec(&ModelDoc::from(m)).expect("plain data serializes");
    out.push(b'\n');
    out
}

pub fn decode_model(bytes: &[u8]) -> Result<CayleyPair, FormatError> {
    let doc: ModelIn = serde_json::from_slice(bytes)?;
    Ok(CayleyPair::new(doc.n, doc.h, doc.v)?)
}
