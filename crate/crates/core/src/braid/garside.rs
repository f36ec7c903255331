use std::fmt;

use super::{delta, BraidWord, Permutation};

/// Left normal form `Δ^infimum · A₁ ⋯ A_r`, with every Aᵢ a proper
/// nontrivial permutation braid and every pair (Aᵢ, Aᵢ₊₁) left-weighted.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GarsideNormalForm {
    strands: usize,
    infimum: i64,
    factors: Vec<Permutation>,
}

impl GarsideNormalForm {
    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn infimum(&self) -> i64 {
        self.infimum
    }

    pub fn supremum(&self) -> i64 {
        self.infimum + self.factors.len() as i64
    }

    pub fn factors(&self) -> &[Permutation] {
        &self.factors
    }

    pub fn is_identity(&self) -> bool {
        self.infimum == 0 && self.factors.is_empty()
    }

    /// Descent-set condition S(Aᵢ₊₁) ⊆ F(Aᵢ) for every consecutive pair.
    pub fn is_left_weighted(&self) -> bool {
        self.factors.windows(2).all(|pair| is_left_weighted(&pair[0], &pair[1]))
    }

    /// Image in S_n.
    pub fn permutation(&self) -> Permutation {
        let mut p = if self.infimum.rem_euclid(2) == 1 {
            Permutation::reversal(self.strands)
        } else {
            Permutation::identity(self.strands)
        };
        for f in &self.factors {
            p = p.product(f);
        }
        p
    }

    /// A word for the element: Δ^infimum followed by positive factor words.
    pub fn to_word(&self) -> BraidWord {
        let d = delta(self.strands).expect("normal forms have at least two strands");
        let mut parts = vec![d.pow(self.infimum)];
        parts.extend(self.factors.iter().map(Permutation::to_word));
        BraidWord::product(self.strands, &parts).expect("same strand count")
    }
}

impl fmt::Display for GarsideNormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "inf {}", self.infimum)?;
        for factor in &self.factors {
            write!(f, " | {}", factor.to_word())?;
        }
        Ok(())
    }
}

fn is_left_weighted(a: &Permutation, b: &Permutation) -> bool {
    (0..a.degree() - 1).all(|k| !b.left_descent(k) || a.right_descent(k))
}

/// Moves generators from the front of `b` to the back of `a` until the pair
/// is left-weighted. Returns whether anything moved.
fn left_weight(a: &mut Permutation, b: &mut Permutation) -> bool {
    let gaps = a.degree() - 1;
    let mut changed = false;
    loop {
        match (0..gaps).find(|&k| b.left_descent(k) && !a.right_descent(k)) {
            Some(k) => {
                a.swap_positions(k);
                b.swap_values(k);
                changed = true;
            }
            None => return changed,
        }
    }
}

/// Appends a permutation braid to a left-weighted sequence and restores
/// left-weightedness with one backward sweep.
fn push_factor(factors: &mut Vec<Permutation>, x: Permutation) {
    factors.push(x);
    let mut j = factors.len() - 1;
    while j > 0 {
        let (head, tail) = factors.split_at_mut(j);
        if !left_weight(&mut head[j - 1], &mut tail[0]) {
            break;
        }
        j -= 1;
    }
}

/// The Garside left normal form of the element represented by `word`.
pub fn normal_form(word: &BraidWord) -> GarsideNormalForm {
    let n = word.strands();
    let total_inverses = word.letters().iter().filter(|l| !l.positive).count();

    // σᵢ⁻¹ = Δ⁻¹·(Δσᵢ⁻¹); each Δ⁻¹ is pushed to the far left, flipping every
    // factor it passes.
    let mut inverses_to_right = total_inverses;
    let mut factors: Vec<Permutation> = Vec::with_capacity(word.len());
    for letter in word.letters() {
        let mut sigma = Permutation::identity(n);
        sigma.swap_positions(letter.index as usize - 1);
        let simple = if letter.positive {
            sigma
        } else {
            inverses_to_right -= 1;
            sigma.left_complement()
        };
        let simple = if inverses_to_right % 2 == 1 { simple.flip() } else { simple };
        push_factor(&mut factors, simple);
    }

    let leading_deltas = factors.iter().take_while(|f| f.is_reversal()).count();
    let trailing_ids = factors[leading_deltas..].iter().rev().take_while(|f| f.is_identity()).count();
    let end = factors.len() - trailing_ids;
    let factors = factors[leading_deltas..end].to_vec();

    GarsideNormalForm { strands: n, infimum: leading_deltas as i64 - total_inverses as i64, factors }
}
