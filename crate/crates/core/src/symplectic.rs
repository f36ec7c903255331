//! 4×4 matrices over an exact ring, the symplectic group Sp₄(R) for the
//! form J = [[0, I₂], [−I₂, 0]], and the root-subgroup matrices X_γ(u).

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::ring::{Ring, RingElem};
use crate::root::Root;

/// A 4×4 matrix over `ring`; entries are canonical representatives.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Matrix4 {
    ring: Ring,
    entries: [[RingElem; 4]; 4],
}

impl Matrix4 {
    pub fn identity(ring: &Ring) -> Self {
        let mut m = Self::zero(ring);
        for k in 0..4 {
            m.entries[k][k] = BigInt::one();
        }
        m
    }

    pub fn zero(ring: &Ring) -> Self {
        Self { ring: ring.clone(), entries: Default::default() }
    }

    pub fn from_rows(ring: &Ring, rows: [[i64; 4]; 4]) -> Self {
        let mut m = Self::zero(ring);
        for (r, row) in rows.iter().enumerate() {
            for (c, &v) in row.iter().enumerate() {
                m.entries[r][c] = ring.from_i64(v);
            }
        }
        m
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn entry(&self, row: usize, col: usize) -> &RingElem {
        &self.entries[row][col]
    }

    fn check_ring(&self, other: &Self) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch { left: self.ring.to_string(), right: other.ring.to_string() });
        }
        Ok(())
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        Ok(self.mul_unchecked(other))
    }

    fn mul_unchecked(&self, other: &Self) -> Self {
        let mut out = Self::zero(&self.ring);
        for r in 0..4 {
            for c in 0..4 {
                let mut acc = BigInt::zero();
                for k in 0..4 {
                    if !self.entries[r][k].is_zero() && !other.entries[k][c].is_zero() {
                        acc += &self.entries[r][k] * &other.entries[k][c];
                    }
                }
                out.entries[r][c] = self.ring.reduce(acc);
            }
        }
        out
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::zero(&self.ring);
        for r in 0..4 {
            for c in 0..4 {
                out.entries[c][r] = self.entries[r][c].clone();
            }
        }
        out
    }

    /// The standard alternating form [[0, I₂], [−I₂, 0]].
    pub fn standard_form(ring: &Ring) -> Self {
        Self::from_rows(ring, [[0, 0, 1, 0], [0, 0, 0, 1], [-1, 0, 0, 0], [0, -1, 0, 0]])
    }

    /// Mᵀ J M = J.
    pub fn is_symplectic(&self) -> bool {
        let j = Self::standard_form(&self.ring);
        self.transpose().mul_unchecked(&j).mul_unchecked(self) == j
    }

    /// Determinant by cofactor expansion along the first row.
    pub fn determinant(&self) -> RingElem {
        let e = &self.entries;
        let minor3 = |skip: usize| -> BigInt {
            let cols: Vec<usize> = (0..4).filter(|&c| c != skip).collect();
            let m = |r: usize, k: usize| &e[r][cols[k]];
            m(1, 0) * (m(2, 1) * m(3, 2) - m(2, 2) * m(3, 1)) - m(1, 1) * (m(2, 0) * m(3, 2) - m(2, 2) * m(3, 0))
                + m(1, 2) * (m(2, 0) * m(3, 1) - m(2, 1) * m(3, 0))
        };
        let mut det = BigInt::zero();
        for (c, x) in e[0].iter().enumerate() {
            let term = x * minor3(c);
            if c % 2 == 0 {
                det += term;
            } else {
                det -= term;
            }
        }
        self.ring.reduce(det)
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(&self.ring)
    }
}

/// Row-major, entries separated by spaces, rows by newlines.
impl fmt::Display for Matrix4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (r, row) in self.entries.iter().enumerate() {
            if r > 0 {
                f.write_str("\n")?;
            }
            let cells: Vec<String> = row.iter().map(|v| v.to_string()).collect();
            f.write_str(&cells.join(" "))?;
        }
        Ok(())
    }
}

/// An element of Sp₄(R).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SymplecticMatrix(Matrix4);

impl TryFrom<Matrix4> for SymplecticMatrix {
    type Error = Error;

    fn try_from(m: Matrix4) -> Result<Self> {
        if m.is_symplectic() {
            Ok(Self(m))
        } else {
            Err(Error::NotSymplectic)
        }
    }
}

impl SymplecticMatrix {
    pub fn identity(ring: &Ring) -> Self {
        Self(Matrix4::identity(ring))
    }

    pub fn matrix(&self) -> &Matrix4 {
        &self.0
    }

    pub fn ring(&self) -> &Ring {
        self.0.ring()
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        Ok(Self(self.0.mul(&other.0)?))
    }

    /// M⁻¹ = −J Mᵀ J, valid over any commutative ring.
    pub fn inverse(&self) -> Self {
        let ring = self.ring();
        let j = Matrix4::standard_form(ring);
        let jt = j.transpose();
        Self(jt.mul_unchecked(&self.0.transpose()).mul_unchecked(&j))
    }

    pub fn pow(&self, k: i64) -> Self {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut acc = Self::identity(self.ring());
        let mut sq = base;
        let mut e = k.unsigned_abs();
        while e > 0 {
            if e & 1 == 1 {
                acc = Self(acc.0.mul_unchecked(&sq.0));
            }
            sq = Self(sq.0.mul_unchecked(&sq.0));
            e >>= 1;
        }
        acc
    }

    /// `[M, N] = M N M⁻¹ N⁻¹`.
    pub fn commutator(&self, other: &Self) -> Result<Self> {
        self.mul(other)?.mul(&self.inverse())?.mul(&other.inverse())
    }

    pub fn is_identity(&self) -> bool {
        self.0.is_identity()
    }

    pub fn transpose(&self) -> Self {
        Self(self.0.transpose())
    }
}

impl fmt::Display for SymplecticMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Off-diagonal entries of X_γ(1) − I.
fn root_pattern(root: Root) -> &'static [(usize, usize, i64)] {
    match root {
        Root::Alpha => &[(0, 1, 1), (3, 2, -1)],
        Root::NegAlpha => &[(1, 0, 1), (2, 3, -1)],
        Root::Beta => &[(1, 3, 1)],
        Root::NegBeta => &[(3, 1, 1)],
        Root::AlphaBeta => &[(0, 3, 1), (1, 2, 1)],
        Root::NegAlphaBeta => &[(2, 1, 1), (3, 0, 1)],
        Root::TwoAlphaBeta => &[(0, 2, 1)],
        Root::NegTwoAlphaBeta => &[(2, 0, 1)],
    }
}

/// X_γ(u): the identity plus `u` times the off-diagonal pattern of X_γ.
pub fn x_matrix(root: Root, u: &RingElem, ring: &Ring) -> SymplecticMatrix {
    let mut m = Matrix4::identity(ring);
    for &(r, c, sign) in root_pattern(root) {
        m.entries[r][c] = ring.mul(&ring.from_i64(sign), u);
    }
    SymplecticMatrix(m)
}

/// X_γ = X_γ(1).
pub fn x_generator(root: Root, ring: &Ring) -> SymplecticMatrix {
    x_matrix(root, &ring.one(), ring)
}

/// W_γ = X_γ · X_{−γ}⁻¹ · X_γ.
pub fn w_matrix(root: Root, ring: &Ring) -> SymplecticMatrix {
    let x = x_generator(root, ring);
    let y = x_generator(root.opposite(), ring).inverse();
    SymplecticMatrix(x.0.mul_unchecked(&y.0).mul_unchecked(&x.0))
}

/// One factor `x_{iγ+jδ}(c·uⁱvʲ)` of a Chevalley commutator formula.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize)]
pub struct CommutatorTerm {
    pub i: u32,
    pub j: u32,
    pub root: Root,
    pub c: i64,
}

/// Positive (i, j) with iγ+jδ a root, ordered by i+j then i.
pub fn commutator_candidates(gamma: Root, delta: Root) -> Vec<(u32, u32, Root)> {
    let mut out = Vec::new();
    for total in 2..=4u32 {
        for i in 1..total {
            let j = total - i;
            if let Some(r) = gamma.combine(i as i32, delta, j as i32) {
                out.push((i, j, r));
            }
        }
    }
    out
}

/// Evaluates `Π X_{root}(c·uⁱvʲ)` in the listed order.
pub fn commutator_product(terms: &[CommutatorTerm], u: &RingElem, v: &RingElem, ring: &Ring) -> SymplecticMatrix {
    terms.iter().fold(SymplecticMatrix::identity(ring), |acc, t| {
        let param = ring.mul(&ring.mul(&ring.from_i64(t.c), &ring.pow(u, t.i)), &ring.pow(v, t.j));
        SymplecticMatrix(acc.0.mul_unchecked(&x_matrix(t.root, &param, ring).0))
    })
}

/// Finds the integers c with `[X_γ(u), X_δ(v)] = Π X_{iγ+jδ}(c·uⁱvʲ)`.
///
/// Every candidate constant in −3..=3 is tried for each admissible (i, j);
/// the unique assignment satisfying the identity at every point of the
/// grid u, v ∈ {−2..2} over Z is returned, zero terms dropped.
pub fn derive_structure_constants(gamma: Root, delta: Root) -> Result<Vec<CommutatorTerm>> {
    if gamma.opposite() == delta {
        return Err(Error::NoSolution { gamma: gamma.to_string(), delta: delta.to_string() });
    }
    let ring = Ring::Integers;
    let candidates = commutator_candidates(gamma, delta);
    let grid: Vec<(RingElem, RingElem)> =
        (-2..=2i64).flat_map(|u| (-2..=2i64).map(move |v| (BigInt::from(u), BigInt::from(v)))).collect();
    let targets: Vec<SymplecticMatrix> = grid
        .iter()
        .map(|(u, v)| x_matrix(gamma, u, &ring).commutator(&x_matrix(delta, v, &ring)).expect("same ring"))
        .collect();

    let range: Vec<i64> = (-3..=3).collect();
    let mut solutions = Vec::new();
    let mut choice = vec![0usize; candidates.len()];
    loop {
        let terms: Vec<CommutatorTerm> = candidates
            .iter()
            .zip(&choice)
            .map(|(&(i, j, root), &k)| CommutatorTerm { i, j, root, c: range[k] })
            .collect();
        let fits = grid.iter().zip(&targets).all(|((u, v), target)| commutator_product(&terms, u, v, &ring) == *target);
        if fits {
            solutions.push(terms.into_iter().filter(|t| t.c != 0).collect::<Vec<_>>());
        }
        // odometer over the candidate constants
        let mut pos = 0;
        loop {
            if pos == choice.len() {
                return match solutions.len() {
                    1 => Ok(solutions.pop().expect("one solution")),
                    _ => Err(Error::NoSolution { gamma: gamma.to_string(), delta: delta.to_string() }),
                };
            }
            choice[pos] += 1;
            if choice[pos] < range.len() {
                break;
            }
            choice[pos] = 0;
            pos += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z() -> Ring {
        Ring::Integers
    }

    #[test]
    fn x_alpha_matches_display() {
        let expected = Matrix4::from_rows(&z(), [[1, 1, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, -1, 1]]);
        assert_eq!(x_generator(Root::Alpha, &z()).matrix(), &expected);
        let expected = Matrix4::from_rows(&z(), [[1, 0, 0, 0], [0, 1, 0, 0], [0, 1, 1, 0], [1, 0, 0, 1]]);
        assert_eq!(x_generator(Root::NegAlphaBeta, &z()).matrix(), &expected);
    }

    #[test]
    fn zero_parameter_is_identity() {
        for r in Root::ALL {
            assert!(x_matrix(r, &BigInt::zero(), &z()).is_identity());
        }
    }

    #[test]
    fn negative_root_is_transpose() {
        for ring in [z(), Ring::IntegersMod(7)] {
            for r in Root::ALL {
                for u in [-3i64, 1, 2, 5] {
                    let u = ring.from_i64(u);
                    assert_eq!(x_matrix(r.opposite(), &u, &ring), x_matrix(r, &u, &ring).transpose());
                }
            }
        }
    }

    #[test]
    fn symplectic_predicate() {
        for r in Root::ALL {
            assert!(x_generator(r, &z()).matrix().is_symplectic());
        }
        assert!(Matrix4::identity(&z()).is_symplectic());
        let d = Matrix4::from_rows(&z(), [[2, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]]);
        assert!(!d.is_symplectic());
        assert_eq!(SymplecticMatrix::try_from(d), Err(Error::NotSymplectic));
    }

    #[test]
    fn commutators() {
        let xa = x_generator(Root::Alpha, &z());
        let xb = x_generator(Root::Beta, &z());
        let x2ab = x_generator(Root::TwoAlphaBeta, &z());
        let xab = x_generator(Root::AlphaBeta, &z());
        assert!(xa.commutator(&x2ab).unwrap().is_identity());
        assert_eq!(xa.commutator(&xb).unwrap(), xab.mul(&x2ab).unwrap());
        assert!(xa.commutator(&SymplecticMatrix::identity(&z())).unwrap().is_identity());
        let other = x_generator(Root::Alpha, &Ring::IntegersMod(3));
        assert!(matches!(xa.mul(&other), Err(Error::RingMismatch { .. })));
    }

    #[test]
    fn inverse_and_determinant() {
        let m = x_generator(Root::Alpha, &z())
            .mul(&x_generator(Root::NegAlphaBeta, &z()))
            .unwrap()
            .mul(&w_matrix(Root::Beta, &z()))
            .unwrap();
        assert!(m.mul(&m.inverse()).unwrap().is_identity());
        assert!(m.inverse().mul(&m).unwrap().is_identity());
        assert_eq!(m.matrix().determinant(), BigInt::one());
        let d = Matrix4::from_rows(&z(), [[2, 0, 0, 0], [0, 3, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]]);
        assert_eq!(d.determinant(), BigInt::from(6));
    }

    #[test]
    fn weyl_matrices() {
        let w = w_matrix(Root::TwoAlphaBeta, &z());
        assert!(w.pow(4).is_identity());
        assert!(!w.pow(2).is_identity());
        for r in Root::ALL {
            assert!(w_matrix(r, &z()).mul(&w_matrix(r.opposite(), &z())).unwrap().is_identity());
            assert!(w_matrix(r, &z()).matrix().is_symplectic());
        }
    }

    #[test]
    fn pow_handles_signs() {
        let x = x_generator(Root::Beta, &z());
        assert_eq!(x.pow(3), x_matrix(Root::Beta, &BigInt::from(3), &z()));
        assert_eq!(x.pow(-2), x_matrix(Root::Beta, &BigInt::from(-2), &z()));
        assert!(x.pow(0).is_identity());
    }

    #[test]
    fn display_is_row_major() {
        let m = x_generator(Root::Alpha, &z());
        assert_eq!(m.to_string(), "1 1 0 0\n0 1 0 0\n0 0 1 0\n0 0 -1 1");
    }

    #[test]
    fn structure_constants_examples() {
        let t = derive_structure_constants(Root::Alpha, Root::Beta).unwrap();
        assert_eq!(
            t,
            vec![
                CommutatorTerm { i: 1, j: 1, root: Root::AlphaBeta, c: 1 },
                CommutatorTerm { i: 2, j: 1, root: Root::TwoAlphaBeta, c: 1 },
            ]
        );
        let t = derive_structure_constants(Root::Alpha, Root::AlphaBeta).unwrap();
        assert_eq!(t, vec![CommutatorTerm { i: 1, j: 1, root: Root::TwoAlphaBeta, c: 2 }]);
        assert!(derive_structure_constants(Root::Beta, Root::TwoAlphaBeta).unwrap().is_empty());
        assert!(derive_structure_constants(Root::Beta, Root::NegBeta).is_err());
    }
}
