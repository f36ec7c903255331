//! Braid words over the Artin generators σ₁..σ_{n−1} of B_n, their text
//! grammar, and the Garside word-problem solver.

mod garside;
mod perm;

pub use garside::{normal_form, GarsideNormalForm};
pub use perm::Permutation;

use std::fmt;

use crate::error::{Error, Result};

/// σᵢ or σᵢ⁻¹.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BraidLetter {
    pub index: u32,
    pub positive: bool,
}

impl BraidLetter {
    pub fn new(index: u32, positive: bool) -> Self {
        Self { index, positive }
    }

    /// `k` for σ_k, `-k` for σ_k⁻¹.
    pub fn signed(self) -> i32 {
        if self.positive {
            self.index as i32
        } else {
            -(self.index as i32)
        }
    }

    pub fn inverse(self) -> Self {
        Self { index: self.index, positive: !self.positive }
    }
}

/// A free word in the generators of B_n. The empty word is the identity.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<BraidLetter>,
}

impl BraidWord {
    /// The empty word on `strands` strands.
    pub fn identity(strands: usize) -> Result<Self> {
        if strands < 2 {
            return Err(Error::InvalidStrands(strands));
        }
        Ok(Self { strands, letters: Vec::new() })
    }

    pub fn from_letters(strands: usize, letters: Vec<BraidLetter>) -> Result<Self> {
        let mut word = Self::identity(strands)?;
        for letter in &letters {
            if letter.index == 0 || letter.index as usize >= strands {
                return Err(Error::IndexOutOfRange { index: letter.index, strands });
            }
        }
        word.letters = letters;
        Ok(word)
    }

    /// Builds a word from signed indices: `k > 0` is σ_k, `k < 0` is σ_{−k}⁻¹.
    pub fn from_signed(strands: usize, signed: &[i32]) -> Result<Self> {
        let letters = signed
            .iter()
            .map(|&k| {
                if k == 0 {
                    Err(Error::IndexOutOfRange { index: 0, strands })
                } else {
                    Ok(BraidLetter::new(k.unsigned_abs(), k > 0))
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_letters(strands, letters)
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[BraidLetter] {
        &self.letters
    }

    pub fn signed(&self) -> Vec<i32> {
        self.letters.iter().map(|l| l.signed()).collect()
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn is_positive(&self) -> bool {
        self.letters.iter().all(|l| l.positive)
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.strands != other.strands {
            return Err(Error::StrandMismatch { left: self.strands, right: other.strands });
        }
        Ok(())
    }

    /// Concatenation, with no simplification.
    pub fn multiply(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.letters);
        letters.extend_from_slice(&other.letters);
        Ok(Self { strands: self.strands, letters })
    }

    /// Concatenation of a sequence of words sharing a strand count.
    pub fn product<'a>(strands: usize, words: impl IntoIterator<Item = &'a BraidWord>) -> Result<Self> {
        let mut acc = Self::identity(strands)?;
        for w in words {
            acc.check_same(w)?;
            acc.letters.extend_from_slice(&w.letters);
        }
        Ok(acc)
    }

    pub fn inverse(&self) -> Self {
        let letters = self.letters.iter().rev().map(|l| l.inverse()).collect();
        Self { strands: self.strands, letters }
    }

    /// `w^k` as a word; negative powers use the inverse word.
    pub fn pow(&self, k: i64) -> Self {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut letters = Vec::with_capacity(base.len() * k.unsigned_abs() as usize);
        for _ in 0..k.unsigned_abs() {
            letters.extend_from_slice(&base.letters);
        }
        Self { strands: self.strands, letters }
    }

    /// `c · self · c⁻¹`, unreduced.
    pub fn conjugate(&self, by: &Self) -> Result<Self> {
        self.check_same(by)?;
        let mut letters = Vec::with_capacity(self.len() + 2 * by.len());
        letters.extend_from_slice(&by.letters);
        letters.extend_from_slice(&self.letters);
        letters.extend(by.letters.iter().rev().map(|l| l.inverse()));
        Ok(Self { strands: self.strands, letters })
    }

    /// The commutator `[self, other] = self · other · self⁻¹ · other⁻¹`.
    pub fn commutator(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        Self::product(self.strands, [self, other, &self.inverse(), &other.inverse()])
    }

    /// Cancels adjacent σᵢσᵢ⁻¹ and σᵢ⁻¹σᵢ until none remain.
    pub fn free_reduce(&self) -> Self {
        let mut out: Vec<BraidLetter> = Vec::with_capacity(self.len());
        for &letter in &self.letters {
            match out.last() {
                Some(&last) if last == letter.inverse() => {
                    out.pop();
                }
                _ => out.push(letter),
            }
        }
        Self { strands: self.strands, letters: out }
    }

    /// The underlying permutation in S_n.
    pub fn permutation(&self) -> Permutation {
        let mut p = Permutation::identity(self.strands);
        for l in &self.letters {
            p.swap_positions(l.index as usize - 1);
        }
        p
    }

    /// Group equality in B_n, decided by comparing Garside normal forms.
    pub fn equal(&self, other: &Self) -> Result<bool> {
        self.check_same(other)?;
        Ok(normal_form(self) == normal_form(other))
    }

    pub fn is_trivial(&self) -> bool {
        normal_form(self).is_identity()
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, l) in self.letters.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            if l.positive {
                write!(f, "s{}", l.index)?;
            } else {
                write!(f, "s{}^-1", l.index)?;
            }
        }
        Ok(())
    }
}

/// The positive half-twist
/// `(σ₁⋯σ_{n−1})(σ₁⋯σ_{n−2})⋯(σ₁σ₂)σ₁` of length n(n−1)/2.
pub fn delta(strands: usize) -> Result<BraidWord> {
    let mut letters = Vec::with_capacity(strands * strands.saturating_sub(1) / 2);
    for top in (1..strands).rev() {
        letters.extend((1..=top).map(|i| BraidLetter::new(i as u32, true)));
    }
    BraidWord::from_letters(strands, letters)
}

/// Parses whitespace-separated tokens `s<k>`, `s<k>^<e>` or bare signed
/// integers (`k` is σ_k, `-k` is σ_k⁻¹). Exponents are expanded.
pub fn parse_braid(text: &str, strands: usize) -> Result<BraidWord> {
    if strands < 2 {
        return Err(Error::InvalidStrands(strands));
    }
    let mut letters = Vec::new();
    let mut offset = 0;
    for token in text.split_whitespace() {
        let start = offset + text[offset..].find(token).unwrap_or(0);
        offset = start + token.len();
        let (index, exponent) = parse_token(token, start)?;
        if index as usize >= strands {
            return Err(Error::IndexOutOfRange { index, strands });
        }
        let letter = BraidLetter::new(index, exponent > 0);
        letters.extend(std::iter::repeat_n(letter, exponent.unsigned_abs() as usize));
    }
    BraidWord::from_letters(strands, letters)
}

fn syntax(position: usize, message: impl Into<String>) -> Error {
    Error::Syntax { position, message: message.into() }
}

fn parse_token(token: &str, start: usize) -> Result<(u32, i64)> {
    if let Some(rest) = token.strip_prefix('s') {
        let (index_text, exp_text) = match rest.split_once('^') {
            Some((i, e)) => (i, Some(e)),
            None => (rest, None),
        };
        if index_text.is_empty() || !index_text.bytes().all(|b| b.is_ascii_digit()) {
            return Err(syntax(start + 1, format!("expected generator index in {token:?}")));
        }
        let index: u32 =
            index_text.parse().map_err(|_| syntax(start + 1, format!("generator index too large in {token:?}")))?;
        if index == 0 {
            return Err(syntax(start + 1, "generator index must be at least 1"));
        }
        let exponent = match exp_text {
            None => 1,
            Some(e) => {
                let at = start + 2 + index_text.len();
                parse_signed(e).ok_or_else(|| syntax(at, format!("expected nonzero exponent in {token:?}")))?
            }
        };
        Ok((index, exponent))
    } else {
        let k = parse_signed(token).ok_or_else(|| syntax(start, format!("unexpected token {token:?}")))?;
        let index = u32::try_from(k.unsigned_abs())
            .map_err(|_| syntax(start, format!("generator index too large in {token:?}")))?;
        Ok((index, k.signum()))
    }
}

fn parse_signed(text: &str) -> Option<i64> {
    let digits = text.strip_prefix(['+', '-']).unwrap_or(text);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    let v: i64 = text.parse().ok()?;
    (v != 0).then_some(v)
}
