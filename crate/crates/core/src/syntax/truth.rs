//! Three-valued Łukasiewicz truth values.

use std::fmt;

use serde::Serialize;

/// A truth value of three-valued Łukasiewicz logic.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum TruthValue {
    True,
    Unknown,
    False,
}

impl TruthValue {
    pub const ALL: [TruthValue; 3] = [TruthValue::True, TruthValue::Unknown, TruthValue::False];

    // Degrees: false = 0, unknown = 1/2, true = 1, scaled by two.
    fn degree(self) -> u8 {
        match self {
            TruthValue::False => 0,
            TruthValue::Unknown => 1,
            TruthValue::True => 2,
        }
    }

    fn from_degree(d: u8) -> Self {
        match d {
            0 => TruthValue::False,
            1 => TruthValue::Unknown,
            _ => TruthValue::True,
        }
    }

    pub fn from_bool(b: bool) -> Self {
        if b {
            TruthValue::True
        } else {
            TruthValue::False
        }
    }

    pub fn negate(self) -> Self {
        Self::from_degree(2 - self.degree())
    }

    pub fn and(self, other: Self) -> Self {
        Self::from_degree(self.degree().min(other.degree()))
    }

    pub fn or(self, other: Self) -> Self {
        Self::from_degree(self.degree().max(other.degree()))
    }

    /// `self ← body`: min(1, 1 - body + self).
    pub fn implied_by(self, body: Self) -> Self {
        Self::from_degree((2 + self.degree()).saturating_sub(body.degree()).min(2))
    }

    pub fn equiv(self, other: Self) -> Self {
        self.implied_by(other).and(other.implied_by(self))
    }

    pub fn is_true(self) -> bool {
        self == TruthValue::True
    }

    pub fn is_false(self) -> bool {
        self == TruthValue::False
    }

    pub fn symbol(self) -> &'static str {
        match self {
            TruthValue::True => "TRUE",
            TruthValue::False => "FALSE",
            TruthValue::Unknown => "UNKNOWN",
        }
    }
}

impl fmt::Display for TruthValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

impl std::ops::Not for TruthValue {
    type Output = TruthValue;

    fn not(self) -> TruthValue {
        self.negate()
    }
}
