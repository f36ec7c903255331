use std::fmt;

use super::{BraidLetter, BraidWord};

/// A permutation of the strand positions, read as a positive permutation
/// braid (every pair of strands crosses at most once).
///
/// `images[j]` is the starting position of the strand that ends at
/// position `j`; `inverse` is kept in sync so both descent sets are O(1).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u32>,
    inverse: Vec<u32>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        let images: Vec<u32> = (0..n as u32).collect();
        Self { inverse: images.clone(), images }
    }

    /// The half-twist permutation `i ↦ n+1−i`.
    pub fn reversal(n: usize) -> Self {
        let images: Vec<u32> = (0..n as u32).rev().collect();
        Self { inverse: images.clone(), images }
    }

    /// Builds from 1-based images; `None` unless a bijection of {1..n}.
    pub fn from_images(one_based: &[u32]) -> Option<Self> {
        let n = one_based.len();
        let mut inverse = vec![u32::MAX; n];
        for (j, &v) in one_based.iter().enumerate() {
            let v = v.checked_sub(1)? as usize;
            if v >= n || inverse[v] != u32::MAX {
                return None;
            }
            inverse[v] = j as u32;
        }
        let images = one_based.iter().map(|v| v - 1).collect();
        Some(Self { images, inverse })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// 1-based images.
    pub fn images(&self) -> Vec<u32> {
        self.images.iter().map(|v| v + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(j, &v)| j as u32 == v)
    }

    pub fn is_reversal(&self) -> bool {
        let n = self.images.len() as u32;
        self.images.iter().enumerate().all(|(j, &v)| v == n - 1 - j as u32)
    }

    /// Right multiplication by σ_{k+1}.
    pub(crate) fn swap_positions(&mut self, k: usize) {
        self.images.swap(k, k + 1);
        let (a, b) = (self.images[k] as usize, self.images[k + 1] as usize);
        self.inverse[a] = k as u32;
        self.inverse[b] = k as u32 + 1;
    }

    /// Left multiplication by σ_{k+1} (relabels strands k and k+1).
    pub(crate) fn swap_values(&mut self, k: usize) {
        self.inverse.swap(k, k + 1);
        let (a, b) = (self.inverse[k] as usize, self.inverse[k + 1] as usize);
        self.images[a] = k as u32;
        self.images[b] = k as u32 + 1;
    }

    /// σ_{k+1} right-divides the permutation braid.
    pub(crate) fn right_descent(&self, k: usize) -> bool {
        self.images[k] > self.images[k + 1]
    }

    /// σ_{k+1} left-divides the permutation braid.
    pub(crate) fn left_descent(&self, k: usize) -> bool {
        self.inverse[k] > self.inverse[k + 1]
    }

    /// 1-based indices i with σᵢ right-dividing the braid.
    pub fn finishing_set(&self) -> Vec<u32> {
        (0..self.degree().saturating_sub(1)).filter(|&k| self.right_descent(k)).map(|k| k as u32 + 1).collect()
    }

    /// 1-based indices i with σᵢ left-dividing the braid.
    pub fn starting_set(&self) -> Vec<u32> {
        (0..self.degree().saturating_sub(1)).filter(|&k| self.left_descent(k)).map(|k| k as u32 + 1).collect()
    }

    /// Number of inversions, equal to the length of the permutation braid.
    pub fn length(&self) -> usize {
        let n = self.images.len();
        let mut count = 0;
        for a in 0..n {
            for b in a + 1..n {
                if self.images[a] > self.images[b] {
                    count += 1;
                }
            }
        }
        count
    }

    /// The permutation of the braid `self · other`.
    pub fn product(&self, other: &Self) -> Self {
        let images: Vec<u32> = other.images.iter().map(|&j| self.images[j as usize]).collect();
        let mut inverse = vec![0; images.len()];
        for (j, &v) in images.iter().enumerate() {
            inverse[v as usize] = j as u32;
        }
        Self { images, inverse }
    }

    /// Conjugation by the half-twist: σᵢ ↦ σ_{n−i}.
    pub fn flip(&self) -> Self {
        let n = self.images.len() as u32;
        let images: Vec<u32> = (0..n).map(|j| n - 1 - self.images[(n - 1 - j) as usize]).collect();
        let mut inverse = vec![0; images.len()];
        for (j, &v) in images.iter().enumerate() {
            inverse[v as usize] = j as u32;
        }
        Self { images, inverse }
    }

    /// The right complement `self⁻¹ · Δ`, a permutation braid of
    /// complementary length.
    pub fn right_complement(&self) -> Self {
        let n = self.images.len() as u32;
        let images: Vec<u32> = (0..n).map(|j| self.inverse[(n - 1 - j) as usize]).collect();
        let mut inverse = vec![0; images.len()];
        for (j, &v) in images.iter().enumerate() {
            inverse[v as usize] = j as u32;
        }
        Self { images, inverse }
    }

    /// The left complement `Δ · self⁻¹`.
    pub fn left_complement(&self) -> Self {
        let n = self.images.len() as u32;
        let images: Vec<u32> = self.inverse.iter().map(|&v| n - 1 - v).collect();
        let mut inverse = vec![0; images.len()];
        for (j, &v) in images.iter().enumerate() {
            inverse[v as usize] = j as u32;
        }
        Self { images, inverse }
    }

    /// A positive word for the permutation braid, peeling the lowest
    /// left divisor each time.
    pub fn to_word(&self) -> BraidWord {
        let n = self.degree();
        let mut rest = self.clone();
        let mut letters = Vec::with_capacity(self.length());
        'outer: loop {
            for k in 0..n.saturating_sub(1) {
                if rest.left_descent(k) {
                    letters.push(BraidLetter::new(k as u32 + 1, true));
                    rest.swap_values(k);
                    continue 'outer;
                }
            }
            break;
        }
        BraidWord::from_letters(n.max(2), letters).expect("indices below degree")
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (k, v) in self.images.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{}", v + 1)?;
        }
        f.write_str("]")
    }
}
