//! Error and three-valued answer types shared across the crate.

use crate::kappa_family::Violation;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// The symbolic algebra cannot force an answer; the caller must not
    /// proceed as if one had been given.
    #[error("indeterminate: {0}")]
    Indeterminate(String),

    #[error("operands belong to different universes")]
    UniverseMismatch,

    #[error("undeclared atom `{0}`")]
    UndeclaredAtom(String),

    #[error("carrier size {got} exceeds cap {cap}")]
    SizeCap { got: usize, cap: usize },

    #[error("{0}")]
    Violation(#[from] Violation),

    #[error("operation requires a finite bispace")]
    FiniteOnly,

    #[error("unknown claim `{0}`")]
    UnknownClaim(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("internal invariant violation: {0}")]
    Internal(String),
}

/// Three-valued answer for comparisons over symbolic sets. Indeterminate is
/// a value, not a failure: it records that the classification algebra does
/// not force either answer.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Tri {
    True,
    False,
    Indeterminate,
}

impl Tri {
    pub fn and(self, other: Tri) -> Tri {
        match (self, other) {
            (Tri::False, _) | (_, Tri::False) => Tri::False,
            (Tri::True, Tri::True) => Tri::True,
            _ => Tri::Indeterminate,
        }
    }

    pub fn or(self, other: Tri) -> Tri {
        match (self, other) {
            (Tri::True, _) | (_, Tri::True) => Tri::True,
            (Tri::False, Tri::False) => Tri::False,
            _ => Tri::Indeterminate,
        }
    }

    pub fn negate(self) -> Tri {
        match self {
            Tri::True => Tri::False,
            Tri::False => Tri::True,
            Tri::Indeterminate => Tri::Indeterminate,
        }
    }

    pub fn is_true(self) -> bool {
        self == Tri::True
    }

    pub fn is_false(self) -> bool {
        self == Tri::False
    }

    /// Collapse to `bool`, failing on an unforced answer.
    pub fn decided(self, what: &str) -> Result<bool> {
        match self {
            Tri::True => Ok(true),
            Tri::False => Ok(false),
            Tri::Indeterminate => Err(Error::Indeterminate(what.to_string())),
        }
    }
}

impl From<bool> for Tri {
    fn from(b: bool) -> Tri {
        if b {
            Tri::True
        } else {
            Tri::False
        }
    }
}
