//! The root system C2: ±α, ±β, ±(α+β), ±(2α+β).

use std::fmt;

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Root {
    Alpha,
    Beta,
    AlphaBeta,
    TwoAlphaBeta,
    NegAlpha,
    NegBeta,
    NegAlphaBeta,
    NegTwoAlphaBeta,
}

impl Root {
    pub const ALL: [Root; 8] = [
        Root::Alpha,
        Root::Beta,
        Root::AlphaBeta,
        Root::TwoAlphaBeta,
        Root::NegAlpha,
        Root::NegBeta,
        Root::NegAlphaBeta,
        Root::NegTwoAlphaBeta,
    ];

    pub fn index(self) -> usize {
        self as usize
    }

    /// `(a, b)` with the root equal to `a·α + b·β`.
    pub fn coefficients(self) -> (i32, i32) {
        match self {
            Root::Alpha => (1, 0),
            Root::Beta => (0, 1),
            Root::AlphaBeta => (1, 1),
            Root::TwoAlphaBeta => (2, 1),
            Root::NegAlpha => (-1, 0),
            Root::NegBeta => (0, -1),
            Root::NegAlphaBeta => (-1, -1),
            Root::NegTwoAlphaBeta => (-2, -1),
        }
    }

    pub fn from_coefficients(a: i32, b: i32) -> Option<Root> {
        Root::ALL.into_iter().find(|r| r.coefficients() == (a, b))
    }

    pub fn opposite(self) -> Root {
        let (a, b) = self.coefficients();
        Root::from_coefficients(-a, -b).expect("root system is symmetric")
    }

    /// ±β and ±(2α+β).
    pub fn is_long(self) -> bool {
        matches!(self, Root::Beta | Root::TwoAlphaBeta | Root::NegBeta | Root::NegTwoAlphaBeta)
    }

    /// `i·self + j·other` if that is a root.
    pub fn combine(self, i: i32, other: Root, j: i32) -> Option<Root> {
        let (a, b) = self.coefficients();
        let (c, d) = other.coefficients();
        Root::from_coefficients(i * a + j * c, i * b + j * d)
    }

    /// Short ASCII name used in check ids and reports.
    pub fn name(self) -> &'static str {
        match self {
            Root::Alpha => "a",
            Root::Beta => "b",
            Root::AlphaBeta => "a+b",
            Root::TwoAlphaBeta => "2a+b",
            Root::NegAlpha => "-a",
            Root::NegBeta => "-b",
            Root::NegAlphaBeta => "-(a+b)",
            Root::NegTwoAlphaBeta => "-(2a+b)",
        }
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}
