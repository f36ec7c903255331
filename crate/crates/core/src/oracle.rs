//! Dehornoy handle reduction: a word-problem solver for B_n that shares no
//! code path with the Garside engine, used to cross-check it.

use crate::braid::{BraidLetter, BraidWord};
use crate::error::{Error, Result};

pub const DEFAULT_BUDGET: u64 = 10_000_000;

/// Sign of a handle-free word: the lowest generator present occurs with
/// one sign only.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SigmaOrdering {
    Trivial,
    Positive,
    Negative,
}

#[derive(Debug, Clone, Copy)]
pub struct HandleReducer {
    budget: u64,
}

impl Default for HandleReducer {
    fn default() -> Self {
        Self { budget: DEFAULT_BUDGET }
    }
}

impl HandleReducer {
    pub fn with_budget(budget: u64) -> Self {
        Self { budget }
    }

    /// Reduces handles until none remain. Always reduces the handle whose
    /// closing letter is leftmost; such a handle never contains a nested
    /// handle, so every step is a permitted reduction.
    pub fn reduce(&self, word: &BraidWord) -> Result<BraidWord> {
        let mut w: Vec<i32> = word.signed();
        let mut steps: u64 = 0;
        let mut r = 0;
        while r < w.len() {
            let closing = w[r];
            let i = closing.abs();
            let mut opening = None;
            for l in (0..r).rev() {
                let j = w[l].abs();
                if j < i {
                    break;
                }
                if j == i {
                    if w[l] == -closing {
                        opening = Some(l);
                    }
                    break;
                }
            }
            let Some(l) = opening else {
                r += 1;
                continue;
            };

            steps += 1 + (r - l) as u64;
            if steps > self.budget {
                return Err(Error::BudgetExceeded { budget: self.budget });
            }

            // σᵢ^e · v · σᵢ^{−e} with v over σ_{i+1}.. becomes v with each
            // σ_{i+1}^d replaced by σ_{i+1}^{−e} σᵢ^d σ_{i+1}^{e}.
            let e = w[l].signum();
            let mut replacement = Vec::with_capacity(3 * (r - l));
            for &x in &w[l + 1..r] {
                if x.abs() == i + 1 {
                    replacement.extend([-e * (i + 1), x.signum() * i, e * (i + 1)]);
                } else {
                    replacement.push(x);
                }
            }
            w.splice(l..=r, replacement);
            r = l;
        }
        let letters = w.iter().map(|&k| BraidLetter::new(k.unsigned_abs(), k > 0)).collect();
        Ok(BraidWord::from_letters(word.strands(), letters).expect("indices preserved"))
    }

    pub fn is_trivial(&self, word: &BraidWord) -> Result<bool> {
        Ok(self.reduce(word)?.is_empty())
    }

    /// `u = v` iff `u·v⁻¹` reduces to the empty word.
    pub fn equal(&self, u: &BraidWord, v: &BraidWord) -> Result<bool> {
        self.is_trivial(&u.multiply(&v.inverse())?)
    }
}

/// Classifies a handle-free word by the sign of its lowest generator.
pub fn classify(reduced: &BraidWord) -> SigmaOrdering {
    match reduced.letters().iter().min_by_key(|l| l.index) {
        None => SigmaOrdering::Trivial,
        Some(l) if l.positive => SigmaOrdering::Positive,
        Some(_) => SigmaOrdering::Negative,
    }
}

pub fn handle_reduce(word: &BraidWord) -> Result<BraidWord> {
    HandleReducer::default().reduce(word)
}

pub fn oracle_equal(u: &BraidWord, v: &BraidWord) -> Result<bool> {
    HandleReducer::default().equal(u, v)
}
