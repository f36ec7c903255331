//! Suite selection and the one-shot verification run.

use std::fmt;
use std::str::FromStr;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::engine::Engine;
use crate::error::{Error, Result};
use crate::homs;
use crate::report::{EngineLabel, Entry, Header, Report};
use crate::ring::{Ring, RingElem};
use crate::root::Root;
use crate::steinberg::{
    check_relator, check_w_inverse, check_weyl_table, parametrized_catalog, unparametrized_catalog, MatrixAssignment,
};
use crate::symplectic::{commutator_product, derive_structure_constants, x_matrix, CommutatorTerm};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    All,
    Presentation,
    Appendix,
    Weyl,
    FRelations,
    Beta,
    Lemma44,
    PhiRelations,
    PhiF,
    Delta,
    Remark45,
    Corollary42,
}

impl Suite {
    /// Every concrete suite, in report order.
    pub const CONCRETE: [Suite; 11] = [
        Suite::Presentation,
        Suite::Appendix,
        Suite::Weyl,
        Suite::FRelations,
        Suite::Beta,
        Suite::Lemma44,
        Suite::PhiRelations,
        Suite::PhiF,
        Suite::Delta,
        Suite::Remark45,
        Suite::Corollary42,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::All => "all",
            Suite::Presentation => "presentation",
            Suite::Appendix => "appendix",
            Suite::Weyl => "weyl",
            Suite::FRelations => "f-relations",
            Suite::Beta => "beta",
            Suite::Lemma44 => "lemma44",
            Suite::PhiRelations => "phi-relations",
            Suite::PhiF => "phi-f",
            Suite::Delta => "delta",
            Suite::Remark45 => "remark45",
            Suite::Corollary42 => "corollary42",
        }
    }

    fn expand(self) -> Vec<Suite> {
        match self {
            Suite::All => Suite::CONCRETE.to_vec(),
            s => vec![s],
        }
    }

    fn stream(self) -> u64 {
        Suite::CONCRETE.iter().position(|&s| s == self).unwrap_or(0) as u64
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        std::iter::once(Suite::All).chain(Suite::CONCRETE).find(|suite| suite.name() == s).ok_or_else(|| {
            let names: Vec<&str> = std::iter::once(Suite::All).chain(Suite::CONCRETE).map(Suite::name).collect();
            format!("unknown suite {s:?} (expected one of {})", names.join(", "))
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunConfig {
    pub strands: usize,
    pub rings: Vec<Ring>,
    pub samples: usize,
    pub seed: u64,
    pub engine: Engine,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            strands: homs::STRANDS,
            rings: vec![Ring::Integers, Ring::IntegersMod(5)],
            samples: 100,
            seed: 0,
            engine: Engine::Both,
        }
    }
}

impl RunConfig {
    fn validate(&self) -> Result<()> {
        if self.strands != homs::STRANDS {
            return Err(Error::UnsupportedStrands { got: self.strands, required: homs::STRANDS });
        }
        if self.samples == 0 {
            return Err(Error::InvalidConfig("sample count must be at least 1".into()));
        }
        if self.rings.is_empty() {
            return Err(Error::InvalidConfig("at least one ring is required".into()));
        }
        Ok(())
    }

    fn rng(&self, suite: Suite) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(suite.stream());
        rng
    }
}

/// Runs the selected suites sequentially; entries appear in the fixed
/// order of [`Suite::CONCRETE`].
pub fn run(suite: Suite, config: &RunConfig) -> Result<Report> {
    config.validate()?;
    let mut entries = Vec::new();
    for s in suite.expand() {
        entries.extend(run_one(s, config));
    }
    Ok(Report {
        header: Header {
            suite: suite.name().into(),
            strands: config.strands,
            rings: config.rings.iter().map(Ring::to_string).collect(),
            samples: config.samples,
            seed: config.seed,
            engine: config.engine.to_string(),
        },
        entries,
    })
}

fn run_one(suite: Suite, config: &RunConfig) -> Vec<Entry> {
    let engine = config.engine;
    match suite {
        Suite::All => unreachable!("expanded by run"),
        Suite::Presentation => {
            let pi = MatrixAssignment::new(Ring::Integers);
            unparametrized_catalog().iter().map(|r| check_relator(r, &pi, &[])).collect()
        }
        Suite::Appendix => appendix(config),
        Suite::Weyl => {
            let pi = MatrixAssignment::new(Ring::Integers);
            let mut out = check_weyl_table(&pi);
            out.extend(check_w_inverse(&pi));
            out.extend(homs::verify_kernel_order());
            out
        }
        Suite::FRelations => {
            let mut out = homs::verify_f_braid_relations();
            out.extend(homs::verify_f_surjectivity());
            out
        }
        Suite::Beta => homs::verify_f_beta_trivial(&mut config.rng(suite)),
        Suite::Lemma44 => homs::verify_lemma_44(),
        Suite::PhiRelations => homs::verify_phi_relations(engine),
        Suite::PhiF => {
            let mut out = homs::verify_phi_f_identity(engine);
            out.extend(homs::verify_f_phi_shadow());
            out
        }
        Suite::Delta => homs::verify_delta_facts(engine),
        Suite::Remark45 => homs::verify_remark_45(),
        Suite::Corollary42 => homs::verify_corollary_42(),
    }
}

/// Draws `n` sample pairs (u, v) from the ring.
pub fn sample_pairs(ring: &Ring, n: usize, rng: &mut ChaCha8Rng) -> Vec<(RingElem, RingElem)> {
    (0..n).map(|_| (ring.sample(rng), ring.sample(rng))).collect()
}

fn tagged(entry: Entry, ring: &Ring) -> Entry {
    Entry { check_id: format!("{}[{ring}]", entry.check_id), ..entry }
}

fn appendix(config: &RunConfig) -> Vec<Entry> {
    let mut rng = config.rng(Suite::Appendix);
    let catalog = parametrized_catalog();
    let mut out = Vec::new();
    for ring in &config.rings {
        let samples = sample_pairs(ring, config.samples, &mut rng);
        let pi = MatrixAssignment::new(ring.clone());
        out.extend(catalog.iter().map(|r| tagged(check_relator(r, &pi, &samples), ring)));
        for root in Root::ALL {
            out.push(tagged(one_parameter_law(root, ring, &samples), ring));
        }
    }
    let samples = sample_pairs(&Ring::Integers, config.samples, &mut rng);
    for r in &catalog {
        out.push(structure_constants(r.id, r.gamma, r.delta, &catalog_terms(r), &samples));
    }
    out
}

/// x_γ(u)·x_γ(v) = x_γ(u+v).
fn one_parameter_law(root: Root, ring: &Ring, samples: &[(RingElem, RingElem)]) -> Entry {
    let entry = Entry::new(format!("one-parameter[{root}]"), "x(u) x(v) = x(u+v)", EngineLabel::MatrixShadow);
    for (u, v) in samples {
        let lhs = x_matrix(root, u, ring).mul(&x_matrix(root, v, ring)).expect("same ring");
        let rhs = x_matrix(root, &ring.add(u, v), ring);
        if lhs != rhs {
            return entry.fail(format!("u={u} v={v}\nlhs:\n{lhs}\nrhs:\n{rhs}"));
        }
    }
    entry
}

fn catalog_terms(r: &crate::steinberg::Relator) -> Vec<CommutatorTerm> {
    r.rhs
        .iter()
        .map(|l| CommutatorTerm { i: l.param.u_pow, j: l.param.v_pow, root: l.root, c: l.param.coeff })
        .collect()
}

fn sorted(mut terms: Vec<CommutatorTerm>) -> Vec<CommutatorTerm> {
    terms.sort_by_key(|t| (t.i + t.j, t.i, t.root.index(), t.c));
    terms
}

/// The constants found by search agree with the catalog and satisfy the
/// commutator identity on samples outside the search grid.
fn structure_constants(
    id: &str,
    gamma: Root,
    delta: Root,
    catalog: &[CommutatorTerm],
    samples: &[(RingElem, RingElem)],
) -> Entry {
    let z = Ring::Integers;
    let entry =
        Entry::new(format!("structure-constants[{id}]"), "Chevalley commutator formula", EngineLabel::MatrixShadow);
    let derived = match derive_structure_constants(gamma, delta) {
        Ok(d) => d,
        Err(e) => return entry.fail(e.to_string()),
    };
    if sorted(derived.clone()) != sorted(catalog.to_vec()) {
        return entry.fail(format!("derived {derived:?}\ncatalog {catalog:?}"));
    }
    for (u, v) in samples {
        let lhs = x_matrix(gamma, u, &z).commutator(&x_matrix(delta, v, &z)).expect("same ring");
        let rhs = commutator_product(&derived, u, v, &z);
        if lhs != rhs {
            return entry.fail(format!("u={u} v={v}\nlhs:\n{lhs}\nrhs:\n{rhs}"));
        }
    }
    entry
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for s in std::iter::once(Suite::All).chain(Suite::CONCRETE) {
            assert_eq!(s.name().parse::<Suite>(), Ok(s));
        }
        assert!("everything".parse::<Suite>().is_err());
    }

    #[test]
    fn rejects_other_strand_counts() {
        let config = RunConfig { strands: 4, ..RunConfig::default() };
        assert!(matches!(run(Suite::Beta, &config), Err(Error::UnsupportedStrands { got: 4, .. })));
    }
}
