//! The maps f: B₆ → St(C₂,Z), f̄ = π∘f: B₆ → Sp₄(Z) and φ: St(C₂,Z) → B₆/N,
//! the relator β generating N, and the checks relating them.

use num_traits::ToPrimitive;
use rand::Rng;

use crate::braid::{delta, parse_braid, BraidWord};
use crate::engine::Engine;
use crate::error::{Error, Result};
use crate::report::{EngineLabel, Entry};
use crate::ring::{Ring, RingElem};
use crate::root::Root;
use crate::steinberg::{evaluate, unparametrized_catalog, Assignment, SteinbergLetter, SteinbergWord};
use crate::symplectic::{w_matrix, x_generator, SymplecticMatrix};

pub const STRANDS: usize = 6;

/// Parses a fixed B₆ word.
pub fn b6(text: &str) -> BraidWord {
    parse_braid(text, STRANDS).expect("built-in B6 word")
}

/// σ₁σ₃⁻¹σ₅.
pub fn sigma_135() -> BraidWord {
    b6("s1 s3^-1 s5")
}

/// σ₁σ₂σ₁.
pub fn sigma_121() -> BraidWord {
    b6("s1 s2 s1")
}

/// σ₄σ₅σ₄.
pub fn sigma_454() -> BraidWord {
    b6("s4 s5 s4")
}

/// The half-twist of B₆.
pub fn delta6() -> BraidWord {
    delta(STRANDS).expect("six strands")
}

fn cat(parts: &[&BraidWord]) -> BraidWord {
    BraidWord::product(STRANDS, parts.iter().copied()).expect("B6 words")
}

fn conj(w: &BraidWord, by: &BraidWord) -> BraidWord {
    w.conjugate(by).expect("B6 words")
}

fn comm(a: &BraidWord, b: &BraidWord) -> BraidWord {
    a.commutator(b).expect("B6 words")
}

/// β = (σ₁σ₂σ₁)²(σ₁σ₃⁻¹σ₅)(σ₁σ₂σ₁)⁻²(σ₁σ₃⁻¹σ₅).
pub fn relator_beta() -> BraidWord {
    let p = sigma_121();
    let a = sigma_135();
    cat(&[&p.pow(2), &a, &p.pow(-2), &a])
}

/// f(σᵢ) for i = 1..5.
pub fn f_image(i: u32) -> SteinbergWord {
    let ring = Ring::Integers;
    let l = |root, k: i64| SteinbergLetter { root, param: ring.from_i64(k) };
    SteinbergWord(match i {
        1 => vec![l(Root::TwoAlphaBeta, 1)],
        2 => vec![l(Root::NegTwoAlphaBeta, -1)],
        3 => vec![l(Root::Beta, 1), l(Root::AlphaBeta, -1), l(Root::TwoAlphaBeta, 1)],
        4 => vec![l(Root::NegBeta, -1)],
        5 => vec![l(Root::Beta, 1)],
        _ => panic!("B6 has generators 1..5, got {i}"),
    })
}

/// f applied letter by letter, σᵢ⁻¹ going to the inverse image.
pub fn f_word(w: &BraidWord) -> SteinbergWord {
    let ring = Ring::Integers;
    let mut out = SteinbergWord::default();
    for l in w.letters() {
        let img = f_image(l.index);
        out = out.concat(&if l.positive { img } else { img.inverse(&ring) });
    }
    out
}

/// f̄ = π∘f on a braid word.
pub fn f_bar(w: &BraidWord) -> SymplecticMatrix {
    let ring = Ring::Integers;
    let images: Vec<SymplecticMatrix> = (1..=5)
        .map(|i| evaluate(&f_image(i), &crate::steinberg::MatrixAssignment::new(ring.clone())).expect("π is total"))
        .collect();
    let inverses: Vec<SymplecticMatrix> = images.iter().map(SymplecticMatrix::inverse).collect();
    w.letters().iter().fold(SymplecticMatrix::identity(&ring), |acc, l| {
        let m = if l.positive { &images[l.index as usize - 1] } else { &inverses[l.index as usize - 1] };
        acc.mul(m).expect("same ring")
    })
}

/// φ(x_γ) as a word in B₆.
pub fn phi_image(root: Root) -> BraidWord {
    let a = sigma_135();
    match root {
        Root::Alpha => conj(&a, &b6("s5 s4")),
        Root::Beta => b6("s5"),
        Root::AlphaBeta => a,
        Root::TwoAlphaBeta => b6("s1"),
        Root::NegAlpha => conj(&a, &b6("s1 s2")),
        Root::NegBeta => b6("s4^-1"),
        Root::NegAlphaBeta => conj(&b6("s1^-1 s3 s5^-1"), &b6("s1 s2 s5 s4")),
        Root::NegTwoAlphaBeta => b6("s2^-1"),
    }
}

/// The assignment x_γ(t) ↦ φ(x_γ)^t into B₆, with equality decided by a
/// braid engine.
#[derive(Debug, Clone)]
pub struct PhiAssignment {
    images: Vec<BraidWord>,
    engine: Engine,
    ring: Ring,
}

impl PhiAssignment {
    pub fn new(engine: Engine) -> Self {
        Self { images: Root::ALL.iter().map(|&r| phi_image(r)).collect(), engine, ring: Ring::Integers }
    }

    pub fn image(&self, root: Root) -> &BraidWord {
        &self.images[root.index()]
    }
}

impl Assignment for PhiAssignment {
    type Elem = BraidWord;

    fn ring(&self) -> &Ring {
        &self.ring
    }

    fn label(&self) -> EngineLabel {
        EngineLabel::ExactB6
    }

    fn identity(&self) -> BraidWord {
        BraidWord::identity(STRANDS).expect("six strands")
    }

    fn generator(&self, root: Root, param: &RingElem) -> Result<BraidWord> {
        let k = param.to_i64().ok_or_else(|| Error::NonIntegerParameter(param.to_string()))?;
        Ok(self.image(root).pow(k))
    }

    fn mul(&self, a: &BraidWord, b: &BraidWord) -> BraidWord {
        a.multiply(b).expect("B6 words")
    }

    fn inverse(&self, a: &BraidWord) -> BraidWord {
        a.inverse()
    }

    fn equal(&self, a: &BraidWord, b: &BraidWord) -> Result<bool> {
        self.engine.equal(a, b)
    }

    fn describe(&self, a: &BraidWord) -> String {
        a.to_string()
    }
}

/// (φ∘f)(σᵢ) by substituting φ-images into f(σᵢ), unreduced.
pub fn phi_of_f(i: u32) -> BraidWord {
    evaluate(&f_image(i), &PhiAssignment::new(Engine::Garside)).expect("integer parameters")
}

fn matrix_entry(id: String, anchor: &str, lhs: &SymplecticMatrix, rhs: &SymplecticMatrix) -> Entry {
    Entry::new(id, anchor, EngineLabel::MatrixShadow).require(lhs == rhs, || format!("lhs:\n{lhs}\nrhs:\n{rhs}"))
}

fn identity_entry(id: impl Into<String>, anchor: &str, m: &SymplecticMatrix) -> Entry {
    Entry::new(id, anchor, EngineLabel::MatrixShadow)
        .require(m.is_identity(), || format!("expected identity, got:\n{m}"))
}

fn braid_entry(id: impl Into<String>, anchor: &str, engine: Engine, lhs: &BraidWord, rhs: &BraidWord) -> Entry {
    let entry = Entry::new(id, anchor, EngineLabel::ExactB6);
    match engine.equal(lhs, rhs) {
        Ok(true) => entry,
        Ok(false) => entry.fail(format!("distinct in B6\nlhs: {lhs}\nrhs: {rhs}")),
        Err(e) => entry.fail(e.to_string()),
    }
}

/// The ten defining relations of B₆ as (id, lhs, rhs).
pub fn braid_relations() -> Vec<(String, BraidWord, BraidWord)> {
    let mut out = Vec::new();
    for i in 1..=5u32 {
        for j in i + 1..=5 {
            let (lhs, rhs) = if j - i > 1 {
                (b6(&format!("s{i} s{j}")), b6(&format!("s{j} s{i}")))
            } else {
                (b6(&format!("s{i} s{j} s{i}")), b6(&format!("s{j} s{i} s{j}")))
            };
            out.push((format!("s{i}~s{j}"), lhs, rhs));
        }
    }
    out
}

/// The ten braid relations hold among the matrices f̄(σᵢ).
pub fn verify_f_braid_relations() -> Vec<Entry> {
    braid_relations()
        .into_iter()
        .map(|(id, l, r)| matrix_entry(format!("f-braid[{id}]"), "f respects braid relations", &f_bar(&l), &f_bar(&r)))
        .collect()
}

/// Each X_γ is f̄ of an explicit braid word: five directly from the images
/// of f, the other three recovered through the relations x10, x11, x14.
pub fn verify_f_surjectivity() -> Vec<Entry> {
    let z = Ring::Integers;
    let a = sigma_135();
    let x_alpha = cat(&[&comm(&a, &b6("s4^-1")), &b6("s1")]);
    let x_neg_alpha = cat(&[&comm(&a, &b6("s2^-1")), &b6("s5")]);
    let x_neg_alpha_beta = cat(&[&b6("s2^-1"), &comm(&x_neg_alpha, &b6("s4^-1")).inverse()]);
    let witnesses = [
        (Root::Beta, b6("s5")),
        (Root::AlphaBeta, a.clone()),
        (Root::TwoAlphaBeta, b6("s1")),
        (Root::NegBeta, b6("s4^-1")),
        (Root::NegTwoAlphaBeta, b6("s2^-1")),
        (Root::Alpha, x_alpha),
        (Root::NegAlpha, x_neg_alpha),
        (Root::NegAlphaBeta, x_neg_alpha_beta),
    ];
    witnesses
        .iter()
        .map(|(root, w)| {
            matrix_entry(format!("f-surjective[{root}]"), "image of f generates", &f_bar(w), &x_generator(*root, &z))
        })
        .collect()
}

/// f̄(β) = I, f̄(σ₁σ₂σ₁) = W_{2α+β}, f̄(σ₁σ₃⁻¹σ₅) = X_{α+β}, and f̄ kills a
/// random conjugate of β.
pub fn verify_f_beta_trivial<R: Rng + ?Sized>(rng: &mut R) -> Vec<Entry> {
    let z = Ring::Integers;
    let beta = relator_beta();
    let c = random_word(rng, 12);
    vec![
        identity_entry("beta[f(beta)=1]", "f(N) = 1", &f_bar(&beta)),
        matrix_entry(
            "beta[f(s1s2s1)=w_2a+b]".into(),
            "f(s1 s2 s1) = w_2a+b",
            &f_bar(&sigma_121()),
            &w_matrix(Root::TwoAlphaBeta, &z),
        ),
        matrix_entry(
            "beta[f(s1s3^-1s5)=x_a+b]".into(),
            "f(s1 s3^-1 s5) = x_a+b",
            &f_bar(&sigma_135()),
            &x_generator(Root::AlphaBeta, &z),
        ),
        identity_entry("beta[f(c beta c^-1)=1]", "f(N) = 1", &f_bar(&conj(&beta, &c))),
    ]
}

/// A uniformly random word in σ₁^{±1}..σ₅^{±1}.
pub fn random_word<R: Rng + ?Sized>(rng: &mut R, len: usize) -> BraidWord {
    let signed: Vec<i32> = (0..len)
        .map(|_| {
            let i = rng.gen_range(1..=5);
            if rng.gen_bool(0.5) {
                i
            } else {
                -i
            }
        })
        .collect();
    BraidWord::from_signed(STRANDS, &signed).expect("indices in range")
}

/// (φ∘f)(σᵢ) = σᵢ in B₆, and f̄ agrees on both sides.
pub fn verify_phi_f_identity(engine: Engine) -> Vec<Entry> {
    (1..=5u32)
        .map(|i| {
            let sigma = b6(&format!("s{i}"));
            let composed = phi_of_f(i);
            let entry = braid_entry(format!("phi-f[s{i}]"), "phi o f = id", engine, &composed, &sigma);
            let (lhs, rhs) = (f_bar(&composed), f_bar(&sigma));
            let entry = entry.require(lhs == rhs, || format!("f-bar images differ\nlhs:\n{lhs}\nrhs:\n{rhs}"));
            Entry { engine: EngineLabel::Both, ..entry }
        })
        .collect()
}

/// f̄(φ(x_γ)) = X_γ for every root.
pub fn verify_f_phi_shadow() -> Vec<Entry> {
    let z = Ring::Integers;
    Root::ALL
        .iter()
        .map(|&root| {
            matrix_entry(format!("f-phi[{root}]"), "f o phi = pi", &f_bar(&phi_image(root)), &x_generator(root, &z))
        })
        .collect()
}

/// The four B₆ equalities used for the relations x4, x5, x6a and x9, as
/// (id, lhs, rhs).
pub fn lemma_44_equalities() -> Vec<(&'static str, BraidWord, BraidWord)> {
    let phi = |r| phi_image(r);
    let a = sigma_135();
    let p = sigma_121();
    let q = sigma_454();
    let c = b6("s5 s4 s1 s2 s1 s2 s3");
    let gamma = cat(&[&a, &p.pow(-2), &a, &p.pow(2)]);

    let l1 =
        cat(&[&comm(&phi(Root::Alpha), &phi(Root::Beta)).inverse(), &phi(Root::AlphaBeta), &phi(Root::TwoAlphaBeta)]);
    let r1 = cat(&[&q.pow(2), &a, &q.pow(-2), &a]);
    let l2 = cat(&[&comm(&phi(Root::Alpha), &phi(Root::AlphaBeta)).inverse(), &phi(Root::TwoAlphaBeta).pow(2)]);
    let r2 = cat(&[&a, &q.pow(2), &a, &q.pow(-2)]);
    let l3 = cat(&[&comm(&phi(Root::Alpha), &phi(Root::NegAlphaBeta)), &phi(Root::NegBeta).pow(2)]);
    let r3 = conj(&gamma.inverse(), &c);
    let l4 = cat(&[&comm(&phi(Root::AlphaBeta), &phi(Root::NegAlpha)), &phi(Root::Beta).pow(2)]);
    let r4 = cat(&[&a, &p.pow(2), &a, &p.pow(-2)]);
    vec![("lemma44-1", l1, r1), ("lemma44-2", l2, r2), ("lemma44-3", l3, r3), ("lemma44-4", l4, r4)]
}

/// Each equality is decided independently by the Garside engine and by
/// handle reduction; the entry fails unless both say "equal".
pub fn verify_lemma_44() -> Vec<Entry> {
    lemma_44_equalities()
        .into_iter()
        .map(|(id, l, r)| {
            let entry = Entry::new(id, "B6 equalities for x4 x5 x6a x9", EngineLabel::ExactB6);
            let garside = Engine::Garside.equal(&l, &r);
            let oracle = Engine::Oracle.equal(&l, &r);
            match (garside, oracle) {
                (Ok(true), Ok(true)) => entry,
                (g, o) => entry.fail(format!("garside: {g:?}, handle reduction: {o:?}\nlhs: {l}\nrhs: {r}")),
            }
        })
        .collect()
}

/// Evidence that a φ-image relator lies in N without being trivial in B₆.
#[derive(Debug, Clone)]
pub struct ModNWitness {
    pub relator_id: &'static str,
    /// The expression the argument works with.
    pub expression: BraidWord,
    /// The expression's displayed equal form.
    pub display: BraidWord,
    /// `display = Π cₖ β^{eₖ} cₖ⁻¹`.
    pub conjugates: Vec<(BraidWord, i64)>,
    /// The relator word equals `c · expression^e · c⁻¹`.
    pub link: (BraidWord, i64),
}

impl ModNWitness {
    pub fn product_of_conjugates(&self) -> BraidWord {
        let beta = relator_beta();
        let parts: Vec<BraidWord> = self.conjugates.iter().map(|(c, e)| conj(&beta.pow(*e), c)).collect();
        BraidWord::product(STRANDS, &parts).expect("B6 words")
    }

    pub fn linked_expression(&self) -> BraidWord {
        conj(&self.expression.pow(self.link.1), &self.link.0)
    }
}

/// The six relators whose φ-images hold only modulo N.
pub const MOD_N_RELATORS: [&str; 6] = ["P2.1-x4", "P2.1-x5", "P2.1-x6a", "P2.1-x9", "P2.1-x12", "P2.1-x15"];

pub fn mod_n_witnesses() -> Vec<ModNWitness> {
    use Root::*;
    let phi = |r| phi_image(r);
    let e = BraidWord::identity(STRANDS).expect("six strands");
    let a = sigma_135();
    let p = sigma_121();
    let q = sigma_454();
    let d = delta6();
    let c = b6("s5 s4 s1 s2 s1 s2 s3");
    let gamma = cat(&[&a, &p.pow(-2), &a, &p.pow(2)]);

    let l4 = comm(&phi(Alpha), &phi(Beta));
    let e4 = cat(&[&l4.inverse(), &phi(AlphaBeta), &phi(TwoAlphaBeta)]);
    let l5 = comm(&phi(Alpha), &phi(AlphaBeta));
    let e5 = cat(&[&l5.inverse(), &phi(TwoAlphaBeta).pow(2)]);
    let e6 = cat(&[&comm(&phi(Alpha), &phi(NegAlphaBeta)), &phi(NegBeta).pow(2)]);
    let e9 = cat(&[&comm(&phi(AlphaBeta), &phi(NegAlpha)), &phi(Beta).pow(2)]);
    let e12 = cat(&[&comm(&phi(TwoAlphaBeta), &phi(NegAlpha)), &phi(AlphaBeta), &phi(Beta)]);
    let e15 = cat(&[&comm(&phi(NegAlpha), &phi(NegAlphaBeta)), &phi(NegTwoAlphaBeta).pow(2)]);
    let cp = cat(&[&c, &p.pow(-2)]);

    vec![
        ModNWitness {
            relator_id: "P2.1-x4",
            display: cat(&[&q.pow(2), &a, &q.pow(-2), &a]),
            conjugates: vec![(d.clone(), 1)],
            link: (l4, -1),
            expression: e4,
        },
        ModNWitness {
            relator_id: "P2.1-x5",
            display: cat(&[&a, &q.pow(2), &a, &q.pow(-2)]),
            conjugates: vec![(cat(&[&d, &a]), 1)],
            link: (l5, -1),
            expression: e5,
        },
        ModNWitness {
            relator_id: "P2.1-x6a",
            display: conj(&gamma.inverse(), &c),
            conjugates: vec![(cp.clone(), -1)],
            link: (e.clone(), 1),
            expression: e6.clone(),
        },
        ModNWitness {
            relator_id: "P2.1-x9",
            display: cat(&[&a, &p.pow(2), &a, &p.pow(-2)]),
            conjugates: vec![(a.clone(), 1)],
            link: (e.clone(), 1),
            expression: e9,
        },
        ModNWitness {
            relator_id: "P2.1-x12",
            display: conj(&cat(&[&comm(&phi(Beta), &phi(Alpha)), &phi(AlphaBeta), &phi(TwoAlphaBeta)]), &d),
            conjugates: vec![(d.pow(2), 1)],
            link: (e.clone(), 1),
            expression: e12,
        },
        ModNWitness {
            relator_id: "P2.1-x15",
            display: conj(&e6, &d),
            conjugates: vec![(cat(&[&d, &cp]), -1)],
            link: (e, 1),
            expression: e15,
        },
    ]
}

type Step<'a> = (&'static str, Box<dyn Fn() -> Result<bool> + 'a>);

fn check_mod_n(w: &ModNWitness, relator: &BraidWord, engine: Engine) -> Entry {
    let entry = Entry::new(w.relator_id, "phi-image relator lies in N", EngineLabel::ModNWitness);
    let steps: [Step; 4] = [
        ("relator is nontrivial in B6", Box::new(|| Ok(!engine.is_trivial(relator)?))),
        ("expression equals its displayed form", Box::new(|| engine.equal(&w.expression, &w.display))),
        (
            "displayed form is a product of conjugates of beta",
            Box::new(|| engine.equal(&w.display, &w.product_of_conjugates())),
        ),
        ("relator is conjugate to the expression", Box::new(|| engine.equal(relator, &w.linked_expression()))),
    ];
    for (what, step) in steps {
        match step() {
            Ok(true) => {}
            Ok(false) => return entry.fail(format!("{what}: failed\nrelator: {relator}")),
            Err(e) => return entry.fail(format!("{what}: {e}")),
        }
    }
    entry
}

/// The φ-image of each of the 24 relators of St(C₂,Z): 18 must be trivial
/// in B₆, the six in [`MOD_N_RELATORS`] must be nontrivial there and equal
/// to a product of conjugates of β^{±1}.
pub fn verify_phi_relations(engine: Engine) -> Vec<Entry> {
    let phi = PhiAssignment::new(engine);
    let z = Ring::Integers;
    let one = z.one();
    let witnesses = mod_n_witnesses();
    unparametrized_catalog()
        .iter()
        .map(|r| {
            let word = match evaluate(&r.word(&one, &one, &z), &phi) {
                Ok(w) => w,
                Err(e) => return Entry::new(r.id, r.anchor, EngineLabel::ExactB6).fail(e.to_string()),
            };
            match witnesses.iter().find(|w| w.relator_id == r.id) {
                Some(w) => check_mod_n(w, &word, engine),
                None => {
                    let entry = Entry::new(r.id, "phi-image relator holds in B6", EngineLabel::ExactB6);
                    match engine.is_trivial(&word) {
                        Ok(true) => entry,
                        Ok(false) => entry.fail(format!("nontrivial in B6: {word}")),
                        Err(e) => entry.fail(e.to_string()),
                    }
                }
            }
        })
        .collect()
}

/// Half-twist identities in B₆: mirror conjugation, centrality of Δ², the
/// symmetries of the φ-images, and the C₃ Artin relations of the
/// Δ-invariant braids σ₁σ₅, σ₂σ₄, σ₃.
pub fn verify_delta_facts(engine: Engine) -> Vec<Entry> {
    use Root::*;
    let d = delta6();
    let d2 = d.pow(2);
    let mut out = Vec::new();
    for i in 1..=5u32 {
        let s = b6(&format!("s{i}"));
        out.push(braid_entry(
            format!("delta[s{i}->s{}]", 6 - i),
            "D s_i D^-1 = s_6-i",
            engine,
            &conj(&s, &d),
            &b6(&format!("s{}", 6 - i)),
        ));
    }
    for i in 1..=5u32 {
        let s = b6(&format!("s{i}"));
        out.push(braid_entry(
            format!("delta2-central[s{i}]"),
            "D^2 is central",
            engine,
            &cat(&[&d2, &s]),
            &cat(&[&s, &d2]),
        ));
    }
    let a = sigma_135();
    out.push(braid_entry("delta[s1s3^-1s5]", "D fixes s1 s3^-1 s5", engine, &conj(&a, &d), &b6("s5 s3^-1 s1")));
    out.push(braid_entry("delta[s5s3^-1s1=s1s3^-1s5]", "D fixes s1 s3^-1 s5", engine, &b6("s5 s3^-1 s1"), &a));
    out.push(braid_entry(
        "delta[s1s2s1->s5s4s5]",
        "D swaps s1s2s1 and s4s5s4",
        engine,
        &conj(&sigma_121(), &d),
        &b6("s5 s4 s5"),
    ));
    out.push(braid_entry("delta[s5s4s5=s4s5s4]", "D swaps s1s2s1 and s4s5s4", engine, &b6("s5 s4 s5"), &sigma_454()));
    let symmetries = [
        ("b", Beta, TwoAlphaBeta),
        ("-b", NegBeta, NegTwoAlphaBeta),
        ("a", Alpha, NegAlpha),
        ("a+b", AlphaBeta, AlphaBeta),
        ("-(a+b)", NegAlphaBeta, NegAlphaBeta),
    ];
    for (name, from, to) in symmetries {
        out.push(braid_entry(
            format!("delta-phi[{name}]"),
            "D phi(x_g) D^-1 = phi(x_g')",
            engine,
            &conj(&phi_image(from), &d),
            &phi_image(to),
        ));
    }
    let (b1, b2, b3) = (b6("s1 s5"), b6("s2 s4"), b6("s3"));
    for (name, w) in [("b1", &b1), ("b2", &b2), ("b3", &b3)] {
        out.push(braid_entry(format!("delta-fixes[{name}]"), "centralizer of D", engine, &conj(w, &d), w));
    }
    out.push(braid_entry(
        "c3[b1b2b1=b2b1b2]",
        "C3 Artin relations",
        engine,
        &cat(&[&b1, &b2, &b1]),
        &cat(&[&b2, &b1, &b2]),
    ));
    out.push(braid_entry("c3[b1b3=b3b1]", "C3 Artin relations", engine, &cat(&[&b1, &b3]), &cat(&[&b3, &b1])));
    out.push(braid_entry(
        "c3[b2b3b2b3=b3b2b3b2]",
        "C3 Artin relations",
        engine,
        &cat(&[&b2, &b3, &b2, &b3]),
        &cat(&[&b3, &b2, &b3, &b2]),
    ));
    out
}

/// f(Δ²) = w_β¹² = w_{2α+β}¹² = f((σ₄σ₅σ₄)¹²) = f((σ₁σ₂σ₁)¹²), all of which
/// are the identity in Sp₄(Z).
pub fn verify_remark_45() -> Vec<Entry> {
    let z = Ring::Integers;
    let wb = w_matrix(Root::Beta, &z);
    let w2 = w_matrix(Root::TwoAlphaBeta, &z);
    let f_d2 = f_bar(&delta6().pow(2));
    vec![
        identity_entry("remark45[f(D^2)=1]", "f(D^2) = w^12", &f_d2),
        identity_entry("remark45[w_b^12=1]", "f(D^2) = w^12", &wb.pow(12)),
        identity_entry("remark45[w_2a+b^12=1]", "f(D^2) = w^12", &w2.pow(12)),
        identity_entry("remark45[f(s4s5s4)^12=1]", "f(D^2) = w^12", &f_bar(&sigma_454().pow(12))),
        identity_entry("remark45[f(s1s2s1)^12=1]", "f(D^2) = w^12", &f_bar(&sigma_121().pow(12))),
        matrix_entry("remark45[f(D^2)=w_b^12]".into(), "f(D^2) = w^12", &f_d2, &wb.pow(12)),
        identity_entry("remark45[w_b^4=1]", "kernel generator", &wb.pow(4)),
        Entry::new("remark45[w_b^2!=1]", "kernel generator", EngineLabel::MatrixShadow)
            .require(!wb.pow(2).is_identity(), || "w_b^2 is the identity".into()),
    ]
}

/// w_γ⁴ = I but w_γ² ≠ I for the long roots 2α+β and β.
pub fn verify_kernel_order() -> Vec<Entry> {
    let z = Ring::Integers;
    [Root::TwoAlphaBeta, Root::Beta]
        .iter()
        .flat_map(|&root| {
            let w = w_matrix(root, &z);
            [
                identity_entry(format!("kernel[w_{root}^4=1]"), "kernel generator", &w.pow(4)),
                Entry::new(format!("kernel[w_{root}^2!=1]"), "kernel generator", EngineLabel::MatrixShadow)
                    .require(!w.pow(2).is_identity(), || format!("w_{root}^2 is the identity")),
            ]
        })
        .collect()
}

/// Every relator of the twelve-relation presentation of Sp₄(Z) maps to I.
pub fn verify_corollary_42() -> Vec<Entry> {
    let mut out = vec![
        identity_entry("cor42[f((s1s2s1)^4)=1]", "Sp4(Z) presentation", &f_bar(&sigma_121().pow(4))),
        identity_entry("cor42[f(beta)=1]", "Sp4(Z) presentation", &f_bar(&relator_beta())),
    ];
    for (id, l, r) in braid_relations() {
        let relator = cat(&[&l, &r.inverse()]);
        out.push(identity_entry(format!("cor42[{id}]"), "Sp4(Z) presentation", &f_bar(&relator)));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn beta_letters() {
        assert_eq!(
            relator_beta().to_string(),
            "s1 s2 s1 s1 s2 s1 s1 s3^-1 s5 s1^-1 s2^-1 s1^-1 s1^-1 s2^-1 s1^-1 s1 s3^-1 s5"
        );
    }

    #[test]
    fn f_bar_examples() {
        let z = Ring::Integers;
        assert_eq!(f_bar(&b6("s1")), x_generator(Root::TwoAlphaBeta, &z));
        assert_eq!(f_bar(&sigma_135()), x_generator(Root::AlphaBeta, &z));
        assert!(f_bar(&b6("")).is_identity());
        assert_eq!(f_bar(&b6("s2 s3 s2")), f_bar(&b6("s3 s2 s3")));
        assert_eq!(f_bar(&b6("s1 s3")), f_bar(&b6("s3 s1")));
        assert!(f_bar(&b6("s1 s2 s1 s2^-1 s1^-1 s2^-1")).is_identity());
    }

    #[test]
    fn phi_f_composition() {
        assert_eq!(phi_of_f(1), b6("s1"));
        assert_eq!(phi_of_f(3), b6("s5 s5^-1 s3 s1^-1 s1"));
        assert_eq!(phi_of_f(3).free_reduce(), b6("s3"));
    }

    #[test]
    fn phi_images() {
        assert_eq!(phi_image(Root::Beta), b6("s5"));
        assert_eq!(phi_image(Root::NegBeta), b6("s4^-1"));
        assert_eq!(phi_image(Root::Alpha), b6("s5 s4 s1 s3^-1 s5 s4^-1 s5^-1"));
    }

    #[test]
    fn phi_assignment_rejects_huge_parameters() {
        let phi = PhiAssignment::new(Engine::Garside);
        let huge = num_bigint::BigInt::from(i64::MAX) * 4;
        assert!(matches!(phi.generator(Root::Beta, &huge), Err(Error::NonIntegerParameter(_))));
    }

    #[test]
    fn exact_relator_examples() {
        let engine = Engine::Both;
        let a = sigma_135();
        assert!(engine.is_trivial(&comm(&b6("s5"), &a)).unwrap());
        assert!(engine.is_trivial(&comm(&phi_image(Root::Alpha), &phi_image(Root::NegBeta))).unwrap());
    }

    #[test]
    fn x4_witness_is_delta_conjugate_of_beta() {
        let w = &mod_n_witnesses()[0];
        let d = delta6();
        assert!(Engine::Both.equal(&w.expression, &conj(&relator_beta(), &d)).unwrap());
    }

    #[test]
    fn mod_n_check_rejects_bad_witnesses() {
        let w = mod_n_witnesses().remove(0);
        let relator = conj(&w.expression.pow(w.link.1), &w.link.0);
        assert!(check_mod_n(&w, &relator, Engine::Both).passed());

        let wrong_sign = ModNWitness { conjugates: vec![(delta6(), -1)], ..w.clone() };
        assert!(!check_mod_n(&wrong_sign, &relator, Engine::Both).passed());

        let trivial = b6("s1 s1^-1");
        let entry = check_mod_n(&w, &trivial, Engine::Both);
        assert!(entry.counterexample.unwrap().starts_with("relator is nontrivial"));
    }

    #[test]
    fn corrupted_image_breaks_phi_f() {
        let wrong = b6("s1 s2");
        assert!(!braid_entry("x", "a", Engine::Both, &wrong, &b6("s2 s1")).passed());
        assert!(!identity_entry("x", "a", &f_bar(&b6("s1"))).passed());
    }
}
