use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Vertex label. Simple families use integers, cubes use bitstrings and
/// Cartesian products use tuples with one entry per factor.
///
/// The derived ordering is the canonical vertex order used everywhere.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(untagged)]
pub enum VertexLabel {
    Int(i64),
    Bits(String),
    Tuple(Vec<VertexLabel>),
}

impl VertexLabel {
    pub fn bits(s: impl Into<String>) -> Result<Self> {
        let s = s.into();
        if s.chars().all(|c| c == '0' || c == '1') {
            Ok(VertexLabel::Bits(s))
        } else {
            Err(Error::Parse(format!(
                "bitstring label {s:?} contains characters other than 0/1"
            )))
        }
    }

    pub fn pair(a: VertexLabel, b: VertexLabel) -> Self {
        VertexLabel::Tuple(vec![a, b])
    }

    pub fn as_bits(&self) -> Option<&str> {
        match self {
            VertexLabel::Bits(s) => Some(s),
            _ => None,
        }
    }

    pub fn as_int(&self) -> Option<i64> {
        match self {
            VertexLabel::Int(i) => Some(*i),
            _ => None,
        }
    }

    /// Checks the bitstring alphabet recursively; used after deserialization.
    pub fn validate(&self) -> Result<()> {
        match self {
            VertexLabel::Int(_) => Ok(()),
            VertexLabel::Bits(s) => {
                if s.chars().all(|c| c == '0' || c == '1') {
                    Ok(())
                } else {
                    Err(Error::Parse(format!(
                        "bitstring label {s:?} contains characters other than 0/1"
                    )))
                }
            }
            VertexLabel::Tuple(items) => items.iter().try_for_each(VertexLabel::validate),
        }
    }
}

impl From<i64> for VertexLabel {
    fn from(i: i64) -> Self {
        VertexLabel::Int(i)
    }
}

impl From<usize> for VertexLabel {
    fn from(i: usize) -> Self {
        VertexLabel::Int(i as i64)
    }
}

/// Text form: `3`, `b0101`, `(0,(1,2))`.
impl fmt::Display for VertexLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VertexLabel::Int(i) => write!(f, "{i}"),
            VertexLabel::Bits(s) => write!(f, "b{s}"),
            VertexLabel::Tuple(items) => {
                f.write_str("(")?;
                for (i, item) in items.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{item}")?;
                }
                f.write_str(")")
            }
        }
    }
}

impl FromStr for VertexLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bytes = s.trim().as_bytes();
        let mut pos = 0;
        let label = parse_label(bytes, &mut pos)?;
        if pos != bytes.len() {
            return Err(Error::Parse(format!("trailing input in label {s:?}")));
        }
        Ok(label)
    }
}

fn parse_label(b: &[u8], pos: &mut usize) -> Result<VertexLabel> {
    let err = |msg: &str, at: usize| Error::Parse(format!("{msg} at byte {at}"));
    match b.get(*pos) {
        None => Err(err("unexpected end of label", *pos)),
        Some(b'(') => {
            *pos += 1;
            let mut items = Vec::new();
            if b.get(*pos) == Some(&b')') {
                *pos += 1;
                return Ok(VertexLabel::Tuple(items));
            }
            loop {
                items.push(parse_label(b, pos)?);
                match b.get(*pos) {
                    Some(b',') => *pos += 1,
                    Some(b')') => {
                        *pos += 1;
                        return Ok(VertexLabel::Tuple(items));
                    }
                    _ => return Err(err("expected ',' or ')'", *pos)),
                }
            }
        }
        Some(b'b') => {
            *pos += 1;
            let start = *pos;
            while matches!(b.get(*pos), Some(b'0') | Some(b'1')) {
                *pos += 1;
            }
            let s = std::str::from_utf8(&b[start..*pos]).expect("ascii");
            Ok(VertexLabel::Bits(s.to_string()))
        }
        Some(_) => {
            let start = *pos;
            if b.get(*pos) == Some(&b'-') {
                *pos += 1;
            }
            while matches!(b.get(*pos), Some(c) if c.is_ascii_digit()) {
                *pos += 1;
            }
            let s = std::str::from_utf8(&b[start..*pos]).expect("ascii");
            s.parse::<i64>()
                .map(VertexLabel::Int)
                .map_err(|_| err("expected integer, bitstring or tuple", start))
        }
    }
}
