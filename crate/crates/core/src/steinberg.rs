//! Formal words in the Steinberg generators x_γ(u), the two 24-relator
//! catalogs for St(C₂), and their evaluation under an assignment of the
//! generators into a concrete group.

use std::fmt;

use serde::Serialize;

use crate::error::Result;
use crate::report::{EngineLabel, Entry};
use crate::ring::{Ring, RingElem};
use crate::root::Root;
use crate::symplectic::{x_matrix, SymplecticMatrix};

/// `c · uⁱ · vʲ` with formal parameters u, v.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Monomial {
    pub coeff: i64,
    pub u_pow: u32,
    pub v_pow: u32,
}

const fn mono(coeff: i64, u_pow: u32, v_pow: u32) -> Monomial {
    Monomial { coeff, u_pow, v_pow }
}

const fn int(coeff: i64) -> Monomial {
    mono(coeff, 0, 0)
}

impl Monomial {
    pub fn eval(&self, u: &RingElem, v: &RingElem, ring: &Ring) -> RingElem {
        let c = ring.from_i64(self.coeff);
        ring.mul(&ring.mul(&c, &ring.pow(u, self.u_pow)), &ring.pow(v, self.v_pow))
    }

    pub fn is_constant(&self) -> bool {
        self.u_pow == 0 && self.v_pow == 0
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut vars = String::new();
        for (name, k) in [("u", self.u_pow), ("v", self.v_pow)] {
            match k {
                0 => {}
                1 => vars.push_str(name),
                _ => vars.push_str(&format!("{name}^{k}")),
            }
        }
        match (self.coeff, vars.is_empty()) {
            (c, true) => write!(f, "{c}"),
            (1, false) => f.write_str(&vars),
            (-1, false) => write!(f, "-{vars}"),
            (c, false) => write!(f, "{c}{vars}"),
        }
    }
}

/// One letter `x_root(param)` of a relator template.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct TemplateLetter {
    pub root: Root,
    pub param: Monomial,
}

const fn x(root: Root, param: Monomial) -> TemplateLetter {
    TemplateLetter { root, param }
}

/// `x_root(param)`; the inverse of a letter is the letter with negated
/// parameter.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SteinbergLetter {
    pub root: Root,
    pub param: RingElem,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct SteinbergWord(pub Vec<SteinbergLetter>);

impl SteinbergWord {
    /// The word `x_γ` for each root in turn, each with parameter 1.
    pub fn generators(roots: &[Root], ring: &Ring) -> Self {
        Self(roots.iter().map(|&root| SteinbergLetter { root, param: ring.one() }).collect())
    }

    pub fn letter(root: Root, param: RingElem) -> Self {
        Self(vec![SteinbergLetter { root, param }])
    }

    pub fn inverse(&self, ring: &Ring) -> Self {
        Self(self.0.iter().rev().map(|l| SteinbergLetter { root: l.root, param: ring.neg(&l.param) }).collect())
    }

    pub fn concat(&self, other: &Self) -> Self {
        Self(self.0.iter().chain(&other.0).cloned().collect())
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for SteinbergWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (k, l) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "x_{}({})", l.root, l.param)?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum RelatorKind {
    Unparametrized,
    Parametrized,
}

/// `[x_γ(p), x_δ(q)] = rhs`, with p = q = 1 for the unparametrized
/// catalog and p = u, q = v for the parametrized one.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Relator {
    pub id: &'static str,
    pub anchor: &'static str,
    pub kind: RelatorKind,
    pub gamma: Root,
    pub delta: Root,
    pub rhs: Vec<TemplateLetter>,
}

impl Relator {
    fn left_params(&self) -> (Monomial, Monomial) {
        match self.kind {
            RelatorKind::Unparametrized => (int(1), int(1)),
            RelatorKind::Parametrized => (mono(1, 1, 0), mono(1, 0, 1)),
        }
    }

    /// The commutator side as a four-letter template.
    pub fn lhs(&self) -> Vec<TemplateLetter> {
        let (p, q) = self.left_params();
        let neg = |m: Monomial| Monomial { coeff: -m.coeff, ..m };
        vec![x(self.gamma, p), x(self.delta, q), x(self.gamma, neg(p)), x(self.delta, neg(q))]
    }

    pub fn instantiate(&self, u: &RingElem, v: &RingElem, ring: &Ring) -> (SteinbergWord, SteinbergWord) {
        let inst = |letters: &[TemplateLetter]| {
            SteinbergWord(
                letters.iter().map(|t| SteinbergLetter { root: t.root, param: t.param.eval(u, v, ring) }).collect(),
            )
        };
        (inst(&self.lhs()), inst(&self.rhs))
    }

    /// The relator word `lhs · rhs⁻¹` at (u, v).
    pub fn word(&self, u: &RingElem, v: &RingElem, ring: &Ring) -> SteinbergWord {
        let (l, r) = self.instantiate(u, v, ring);
        l.concat(&r.inverse(ring))
    }

    pub fn lhs_text(&self) -> String {
        let (p, q) = self.left_params();
        format!("[{}, {}]", letter_text(&x(self.gamma, p), self.kind), letter_text(&x(self.delta, q), self.kind))
    }

    pub fn rhs_text(&self) -> String {
        if self.rhs.is_empty() {
            return "1".into();
        }
        self.rhs.iter().map(|t| letter_text(t, self.kind)).collect::<Vec<_>>().join(" ")
    }
}

fn letter_text(t: &TemplateLetter, kind: RelatorKind) -> String {
    match kind {
        RelatorKind::Parametrized => format!("x_{}({})", t.root, t.param),
        RelatorKind::Unparametrized => match t.param.coeff {
            1 => format!("x_{}", t.root),
            c => format!("x_{}^{}", t.root, c),
        },
    }
}

/// A row of the exported catalog table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RelatorRow {
    pub id: String,
    pub lhs: String,
    pub rhs: String,
    pub kind: RelatorKind,
}

impl From<&Relator> for RelatorRow {
    fn from(r: &Relator) -> Self {
        Self { id: r.id.into(), lhs: r.lhs_text(), rhs: r.rhs_text(), kind: r.kind }
    }
}

use Root::{
    Alpha as A, AlphaBeta as AB, Beta as B, NegAlpha as NA, NegAlphaBeta as NAB, NegBeta as NB,
    NegTwoAlphaBeta as N2AB, TwoAlphaBeta as TAB,
};

fn unparam(id: &'static str, gamma: Root, delta: Root, rhs: Vec<TemplateLetter>) -> Relator {
    Relator { id, anchor: "St(C2,Z) presentation", kind: RelatorKind::Unparametrized, gamma, delta, rhs }
}

fn param(id: &'static str, gamma: Root, delta: Root, rhs: Vec<TemplateLetter>) -> Relator {
    Relator { id, anchor: "St(C2,R) presentation", kind: RelatorKind::Parametrized, gamma, delta, rhs }
}

/// The 24 relators of St(C₂, Z) in the generators x_γ = x_γ(1).
pub fn unparametrized_catalog() -> Vec<Relator> {
    vec![
        unparam("P2.1-x1a", A, TAB, vec![]),
        unparam("P2.1-x1b", B, AB, vec![]),
        unparam("P2.1-x1c", B, TAB, vec![]),
        unparam("P2.1-x1d", AB, TAB, vec![]),
        unparam("P2.1-x2a", A, NB, vec![]),
        unparam("P2.1-x2b", B, NA, vec![]),
        unparam("P2.1-x2c", B, N2AB, vec![]),
        unparam("P2.1-x2d", NB, TAB, vec![]),
        unparam("P2.1-x3a", NA, N2AB, vec![]),
        unparam("P2.1-x3b", NB, NAB, vec![]),
        unparam("P2.1-x3c", NB, N2AB, vec![]),
        unparam("P2.1-x3d", NAB, N2AB, vec![]),
        unparam("P2.1-x4", A, B, vec![x(AB, int(1)), x(TAB, int(1))]),
        unparam("P2.1-x5", A, AB, vec![x(TAB, int(2))]),
        unparam("P2.1-x6a", A, NAB, vec![x(NB, int(-2))]),
        unparam("P2.1-x7", A, N2AB, vec![x(NB, int(1)), x(NAB, int(-1))]),
        unparam("P2.1-x8", B, NAB, vec![x(NA, int(1)), x(N2AB, int(1))]),
        unparam("P2.1-x9", AB, NA, vec![x(B, int(-2))]),
        unparam("P2.1-x10", AB, NB, vec![x(A, int(1)), x(TAB, int(-1))]),
        unparam("P2.1-x11", AB, N2AB, vec![x(NA, int(1)), x(B, int(-1))]),
        unparam("P2.1-x12", TAB, NA, vec![x(AB, int(-1)), x(B, int(-1))]),
        unparam("P2.1-x13", TAB, NAB, vec![x(A, int(1)), x(NB, int(1))]),
        unparam("P2.1-x14", NA, NB, vec![x(NAB, int(-1)), x(N2AB, int(1))]),
        unparam("P2.1-x15", NA, NAB, vec![x(N2AB, int(-2))]),
    ]
}

/// The 24 relators of St(C₂, R) in the generators x_γ(u), u in R.
pub fn parametrized_catalog() -> Vec<Relator> {
    vec![
        param("A-B1a", A, TAB, vec![]),
        param("A-B1b", B, AB, vec![]),
        param("A-B1c", B, TAB, vec![]),
        param("A-B1d", AB, TAB, vec![]),
        param("A-B2a", A, NB, vec![]),
        param("A-B2b", B, NA, vec![]),
        param("A-B2c", B, N2AB, vec![]),
        param("A-B2d", NB, TAB, vec![]),
        param("A-B3a", NA, N2AB, vec![]),
        param("A-B3b", NB, NAB, vec![]),
        param("A-B3c", NB, N2AB, vec![]),
        param("A-B3d", NAB, N2AB, vec![]),
        param("A-B4", A, B, vec![x(AB, mono(1, 1, 1)), x(TAB, mono(1, 2, 1))]),
        param("A-B5", A, AB, vec![x(TAB, mono(2, 1, 1))]),
        param("A-B6", A, NAB, vec![x(NB, mono(-2, 1, 1))]),
        param("A-B7", A, N2AB, vec![x(NB, mono(1, 2, 1)), x(NAB, mono(-1, 1, 1))]),
        param("A-B8", B, NAB, vec![x(NA, mono(1, 1, 1)), x(N2AB, mono(1, 1, 2))]),
        param("A-B9", AB, NA, vec![x(B, mono(-2, 1, 1))]),
        param("A-B10", AB, NB, vec![x(A, mono(1, 1, 1)), x(TAB, mono(-1, 2, 1))]),
        param("A-B11", AB, N2AB, vec![x(NA, mono(1, 1, 1)), x(B, mono(-1, 2, 1))]),
        param("A-B12", TAB, NA, vec![x(AB, mono(-1, 1, 1)), x(B, mono(-1, 1, 2))]),
        param("A-B13", TAB, NAB, vec![x(A, mono(1, 1, 1)), x(NB, mono(1, 1, 2))]),
        param("A-B14", NA, NB, vec![x(NAB, mono(-1, 1, 1)), x(N2AB, mono(1, 2, 1))]),
        param("A-B15", NA, NAB, vec![x(N2AB, mono(-2, 1, 1))]),
    ]
}

pub fn relator_catalog(kind: RelatorKind) -> Vec<Relator> {
    match kind {
        RelatorKind::Unparametrized => unparametrized_catalog(),
        RelatorKind::Parametrized => parametrized_catalog(),
    }
}

/// Machine-readable table of a catalog.
pub fn catalog_table(kind: RelatorKind) -> Vec<RelatorRow> {
    relator_catalog(kind).iter().map(RelatorRow::from).collect()
}

/// Images of the generators x_γ(u) in a target group. Checks never mutate
/// the assignment.
pub trait Assignment {
    type Elem: Clone;

    fn ring(&self) -> &Ring;
    fn label(&self) -> EngineLabel;
    fn identity(&self) -> Self::Elem;
    fn generator(&self, root: Root, param: &RingElem) -> Result<Self::Elem>;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn inverse(&self, a: &Self::Elem) -> Self::Elem;
    fn equal(&self, a: &Self::Elem, b: &Self::Elem) -> Result<bool>;
    fn describe(&self, a: &Self::Elem) -> String;
}

/// Left-to-right product of the images of the letters.
pub fn evaluate<T: Assignment + ?Sized>(word: &SteinbergWord, target: &T) -> Result<T::Elem> {
    let mut acc = target.identity();
    for l in &word.0 {
        acc = target.mul(&acc, &target.generator(l.root, &l.param)?);
    }
    Ok(acc)
}

/// The Weyl element w_γ = x_γ · x_{−γ}⁻¹ · x_γ in the target.
pub fn weyl_element<T: Assignment + ?Sized>(root: Root, target: &T) -> Result<T::Elem> {
    let ring = target.ring();
    let word = SteinbergWord(vec![
        SteinbergLetter { root, param: ring.one() },
        SteinbergLetter { root: root.opposite(), param: ring.from_i64(-1) },
        SteinbergLetter { root, param: ring.one() },
    ]);
    evaluate(&word, target)
}

/// Evaluates both sides of `r` at every sample (once at u = v = 1 for
/// unparametrized relators) and reports the first violation.
pub fn check_relator<T: Assignment + ?Sized>(r: &Relator, target: &T, samples: &[(RingElem, RingElem)]) -> Entry {
    let ring = target.ring();
    let unit = [(ring.one(), ring.one())];
    let points: &[(RingElem, RingElem)] = match r.kind {
        RelatorKind::Unparametrized => &unit,
        RelatorKind::Parametrized => samples,
    };
    let entry = Entry::new(r.id, r.anchor, target.label());
    for (u, v) in points {
        let (lhs, rhs) = r.instantiate(u, v, ring);
        let outcome = evaluate(&lhs, target).and_then(|l| {
            let rv = evaluate(&rhs, target)?;
            Ok((target.equal(&l, &rv)?, l, rv))
        });
        match outcome {
            Ok((true, _, _)) => {}
            Ok((false, l, rv)) => {
                return entry.fail(format!(
                    "u={u} v={v}\nlhs:\n{}\nrhs:\n{}",
                    target.describe(&l),
                    target.describe(&rv)
                ))
            }
            Err(e) => return entry.fail(format!("u={u} v={v}: {e}")),
        }
    }
    entry
}

/// `w_γ · x_δ · w_γ⁻¹ = x_{δ'}^ε`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WeylIdentity {
    pub w: Root,
    pub x: Root,
    pub image: Root,
    pub sign: i64,
}

const fn wx(w: Root, x: Root, image: Root, sign: i64) -> WeylIdentity {
    WeylIdentity { w, x, image, sign }
}

/// The 24 conjugation identities for w_β, w_{2α+β}, w_α, w_{α+β}.
pub const WEYL_TABLE: [WeylIdentity; 24] = [
    wx(B, A, AB, -1),
    wx(B, NA, NAB, -1),
    wx(B, AB, A, 1),
    wx(B, NAB, NA, 1),
    wx(B, TAB, TAB, 1),
    wx(B, N2AB, N2AB, 1),
    wx(TAB, B, B, 1),
    wx(TAB, NB, NB, 1),
    wx(TAB, A, NAB, -1),
    wx(TAB, NAB, A, 1),
    wx(TAB, AB, NA, 1),
    wx(TAB, NA, AB, -1),
    wx(A, B, TAB, 1),
    wx(A, NB, N2AB, 1),
    wx(A, AB, AB, -1),
    wx(A, NAB, NAB, -1),
    wx(A, TAB, B, 1),
    wx(A, N2AB, NB, 1),
    wx(AB, A, A, -1),
    wx(AB, NA, NA, -1),
    wx(AB, B, N2AB, -1),
    wx(AB, N2AB, B, -1),
    wx(AB, TAB, NB, -1),
    wx(AB, NB, TAB, -1),
];

impl WeylIdentity {
    pub fn id(&self) -> String {
        let sign = if self.sign < 0 { "^-1" } else { "" };
        format!("weyl[w_{} x_{} = x_{}{}]", self.w, self.x, self.image, sign)
    }
}

pub fn check_weyl_identity<T: Assignment + ?Sized>(id: &WeylIdentity, target: &T) -> Entry {
    let entry = Entry::new(id.id(), "Weyl conjugation table", target.label());
    let ring = target.ring();
    let outcome = (|| {
        let w = weyl_element(id.w, target)?;
        let lhs = target.mul(&target.mul(&w, &target.generator(id.x, &ring.one())?), &target.inverse(&w));
        let rhs = target.generator(id.image, &ring.from_i64(id.sign))?;
        Ok::<_, crate::Error>((target.equal(&lhs, &rhs)?, lhs, rhs))
    })();
    match outcome {
        Ok((true, _, _)) => entry,
        Ok((false, l, r)) => entry.fail(format!("lhs:\n{}\nrhs:\n{}", target.describe(&l), target.describe(&r))),
        Err(e) => entry.fail(e.to_string()),
    }
}

/// All 24 Weyl conjugation identities, in table order.
pub fn check_weyl_table<T: Assignment + ?Sized>(target: &T) -> Vec<Entry> {
    WEYL_TABLE.iter().map(|id| check_weyl_identity(id, target)).collect()
}

/// `w_γ · w_{−γ} = 1` for every root.
pub fn check_w_inverse<T: Assignment + ?Sized>(target: &T) -> Vec<Entry> {
    Root::ALL
        .iter()
        .map(|&root| {
            let entry = Entry::new(format!("w-inverse[{root}]"), "w_g = w_-g^-1", target.label());
            let outcome = weyl_element(root, target).and_then(|w| {
                let w_neg = weyl_element(root.opposite(), target)?;
                let prod = target.mul(&w, &w_neg);
                Ok((target.equal(&prod, &target.identity())?, prod))
            });
            match outcome {
                Ok((true, _)) => entry,
                Ok((false, p)) => entry.fail(format!("w_g w_-g =\n{}", target.describe(&p))),
                Err(e) => entry.fail(e.to_string()),
            }
        })
        .collect()
}

/// π: x_γ(u) ↦ X_γ(u·scale_γ). All scales are 1 for the genuine π; other
/// scales give deliberately corrupted assignments.
#[derive(Debug, Clone)]
pub struct MatrixAssignment {
    ring: Ring,
    scales: [i64; 8],
}

impl MatrixAssignment {
    pub fn new(ring: Ring) -> Self {
        Self { ring, scales: [1; 8] }
    }

    pub fn with_scale(mut self, root: Root, scale: i64) -> Self {
        self.scales[root.index()] = scale;
        self
    }
}

impl Assignment for MatrixAssignment {
    type Elem = SymplecticMatrix;

    fn ring(&self) -> &Ring {
        &self.ring
    }

    fn label(&self) -> EngineLabel {
        EngineLabel::MatrixShadow
    }

    fn identity(&self) -> SymplecticMatrix {
        SymplecticMatrix::identity(&self.ring)
    }

    fn generator(&self, root: Root, param: &RingElem) -> Result<SymplecticMatrix> {
        let scaled = self.ring.mul(param, &self.ring.from_i64(self.scales[root.index()]));
        Ok(x_matrix(root, &scaled, &self.ring))
    }

    fn mul(&self, a: &SymplecticMatrix, b: &SymplecticMatrix) -> SymplecticMatrix {
        a.mul(b).expect("one ring per assignment")
    }

    fn inverse(&self, a: &SymplecticMatrix) -> SymplecticMatrix {
        a.inverse()
    }

    fn equal(&self, a: &SymplecticMatrix, b: &SymplecticMatrix) -> Result<bool> {
        Ok(a == b)
    }

    fn describe(&self, a: &SymplecticMatrix) -> String {
        a.to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symplectic::{derive_structure_constants, x_generator};

    #[test]
    fn catalogs_have_24_relators() {
        assert_eq!(unparametrized_catalog().len(), 24);
        assert_eq!(parametrized_catalog().len(), 24);
        let mut ids: Vec<&str> = unparametrized_catalog().iter().chain(&parametrized_catalog()).map(|r| r.id).collect();
        ids.sort_unstable();
        ids.dedup();
        assert_eq!(ids.len(), 48);
    }

    #[test]
    fn named_relators() {
        let cat = unparametrized_catalog();
        let x5 = cat.iter().find(|r| r.id == "P2.1-x5").unwrap();
        assert_eq!(x5.lhs_text(), "[x_a, x_a+b]");
        assert_eq!(x5.rhs_text(), "x_2a+b^2");
        let cat = parametrized_catalog();
        let b9 = cat.iter().find(|r| r.id == "A-B9").unwrap();
        assert_eq!(b9.lhs_text(), "[x_a+b(u), x_-a(v)]");
        assert_eq!(b9.rhs_text(), "x_b(-2uv)");
        let b7 = cat.iter().find(|r| r.id == "A-B7").unwrap();
        assert_eq!(b7.rhs_text(), "x_-b(u^2v) x_-(a+b)(-uv)");
    }

    #[test]
    fn specialization_is_word_identical() {
        let z = Ring::Integers;
        for (p, u) in parametrized_catalog().iter().zip(unparametrized_catalog()) {
            assert_eq!((p.gamma, p.delta), (u.gamma, u.delta), "{}", p.id);
            let one = z.one();
            assert_eq!(p.instantiate(&one, &one, &z), u.instantiate(&one, &one, &z), "{} vs {}", p.id, u.id);
        }
    }

    #[test]
    fn symbol_closure() {
        for r in parametrized_catalog() {
            for t in &r.rhs {
                let expected = r.gamma.combine(t.param.u_pow as i32, r.delta, t.param.v_pow as i32);
                assert_eq!(expected, Some(t.root), "{}", r.id);
            }
            assert_ne!(r.gamma.opposite(), r.delta);
        }
    }

    #[test]
    fn evaluate_basics() {
        let z = Ring::Integers;
        let pi = MatrixAssignment::new(z.clone());
        assert!(evaluate(&SteinbergWord::default(), &pi).unwrap().is_identity());
        let w = SteinbergWord::generators(&[TAB], &z);
        assert_eq!(evaluate(&w, &pi).unwrap(), x_generator(TAB, &z));
    }

    #[test]
    fn presentation_holds_under_pi() {
        let pi = MatrixAssignment::new(Ring::Integers);
        for r in unparametrized_catalog() {
            let e = check_relator(&r, &pi, &[]);
            assert!(e.passed(), "{}: {:?}", r.id, e.counterexample);
        }
    }

    #[test]
    fn corrupted_assignment_fails_x4() {
        let bad = MatrixAssignment::new(Ring::Integers).with_scale(B, 2);
        let x4 = unparametrized_catalog().into_iter().find(|r| r.id == "P2.1-x4").unwrap();
        let e = check_relator(&x4, &bad, &[]);
        assert!(!e.passed());
        assert!(e.counterexample.unwrap().contains("lhs:"));
    }

    #[test]
    fn weyl_examples() {
        let pi = MatrixAssignment::new(Ring::Integers);
        for id in [wx(B, TAB, TAB, 1), wx(A, B, TAB, 1), wx(AB, A, A, -1)] {
            assert!(check_weyl_identity(&id, &pi).passed());
        }
        assert!(!check_weyl_identity(&wx(A, B, TAB, -1), &pi).passed());
    }

    #[test]
    fn catalog_constants_match_derivation() {
        for r in parametrized_catalog() {
            let mut derived = derive_structure_constants(r.gamma, r.delta).unwrap();
            let mut listed: Vec<_> =
                r.rhs.iter().map(|t| (t.param.u_pow, t.param.v_pow, t.root, t.param.coeff)).collect();
            let mut got: Vec<_> = derived.drain(..).map(|t| (t.i, t.j, t.root, t.c)).collect();
            listed.sort();
            got.sort();
            assert_eq!(listed, got, "{}", r.id);
        }
    }

    #[test]
    fn monomial_display() {
        assert_eq!(mono(-2, 1, 1).to_string(), "-2uv");
        assert_eq!(mono(1, 2, 1).to_string(), "u^2v");
        assert_eq!(mono(-1, 1, 2).to_string(), "-uv^2");
        assert_eq!(int(3).to_string(), "3");
    }
}
