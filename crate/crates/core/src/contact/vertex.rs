use std::fmt;
use std::str::FromStr;

use thiserror::Error;

/// Structured vertex label.
///
/// The derived order (A, B, secondaries by index, sewing vertices by
/// gadget then chain position, free names) is the canonical order used by
/// every file format.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum VertexId {
    A,
    B,
    /// Secondary vertex, 1-based.
    Alpha(u32),
    /// Sewing vertex `j` of gadget `i`, both 1-based.
    Sew(u32, u32),
    Free(String),
}

impl VertexId {
    pub fn free(name: impl Into<String>) -> Self {
        VertexId::Free(name.into())
    }

    pub fn is_hub(&self) -> bool {
        matches!(self, VertexId::A | VertexId::B)
    }

    pub fn is_secondary(&self) -> bool {
        matches!(self, VertexId::Alpha(_))
    }

    pub fn is_sewing(&self) -> bool {
        matches!(self, VertexId::Sew(..))
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VertexId::A => f.write_str("a"),
            VertexId::B => f.write_str("b"),
            VertexId::Alpha(i) => write!(f, "alpha:{i}"),
            VertexId::Sew(i, j) => write!(f, "sew:{i}:{j}"),
            VertexId::Free(name) => write!(f, "free:{name}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid vertex id {0:?}")]
pub struct VertexIdError(pub String);

fn index(s: &str, whole: &str) -> Result<u32, VertexIdError> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return Err(VertexIdError(whole.to_owned()));
    }
    match s.parse::<u32>() {
        Ok(v) if v >= 1 => Ok(v),
        _ => Err(VertexIdError(whole.to_owned())),
    }
}

impl FromStr for VertexId {
    type Err = VertexIdError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || VertexIdError(s.to_owned());
        match s {
            "a" => return Ok(VertexId::A),
            "b" => return Ok(VertexId::B),
            _ => {}
        }
        if let Some(rest) = s.strip_prefix("alpha:") {
            let i = index(rest, s)?;
            if i > 20 {
                return Err(bad());
            }
            return Ok(VertexId::Alpha(i));
        }
        if let Some(rest) = s.strip_prefix("sew:") {
            let (i, j) = rest.split_once(':').ok_or_else(bad)?;
            let i = index(i, s)?;
            if i > 19 {
                return Err(bad());
            }
            return Ok(VertexId::Sew(i, index(j, s)?));
        }
        if let Some(name) = s.strip_prefix("free:") {
            if name.is_empty() || name.chars().any(char::is_whitespace) {
                return Err(bad());
            }
            return Ok(VertexId::Free(name.to_owned()));
        }
        Err(bad())
    }
}
