//! Acceptance run: one PASS/FAIL line per criterion, exact comparisons only.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use sp4braid::braid::{normal_form, BraidWord};
use sp4braid::engine::Engine;
use sp4braid::homs::{self, random_word};
use sp4braid::oracle::oracle_equal;
use sp4braid::report::{EngineLabel, Entry, Report};
use sp4braid::ring::Ring;
use sp4braid::steinberg::parametrized_catalog;
use sp4braid::symplectic::derive_structure_constants;
use sp4braid::verify::{run, RunConfig, Suite};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn report(suite: Suite, config: &RunConfig) -> Result<Report, String> {
    run(suite, config).map_err(|e| e.to_string())
}

fn all_pass(entries: &[Entry]) -> Result<(), String> {
    match entries.iter().find(|e| !e.passed()) {
        None => Ok(()),
        Some(e) => Err(format!("{} failed: {}", e.check_id, e.counterexample.as_deref().unwrap_or(""))),
    }
}

fn with_prefix<'a>(entries: &'a [Entry], prefix: &str) -> Vec<&'a Entry> {
    entries.iter().filter(|e| e.check_id.starts_with(prefix)).collect()
}

fn pass_count(entries: &[&Entry]) -> usize {
    entries.iter().filter(|e| e.passed()).count()
}

fn within(elapsed: Duration, limit: Duration) -> Result<(), String> {
    if elapsed <= limit {
        Ok(())
    } else {
        Err(format!("took {elapsed:?}, limit {limit:?}"))
    }
}

fn presentation() -> Outcome {
    let start = Instant::now();
    let r = report(Suite::Presentation, &RunConfig::default())?;
    within(start.elapsed(), Duration::from_secs(1))?;
    all_pass(&r.entries)?;
    if r.entries.len() != 24 {
        return Err(format!("{} relators, expected 24", r.entries.len()));
    }
    Ok("24/24 relators hold in Sp4(Z)".into())
}

fn appendix() -> Outcome {
    let rings: Vec<Ring> =
        ["int", "zmod:2", "zmod:3", "zmod:4", "zmod:5", "zmod:12"].iter().map(|s| s.parse().unwrap()).collect();
    let config = RunConfig { rings: rings.clone(), samples: 100, seed: 0, ..RunConfig::default() };
    let start = Instant::now();
    let r = report(Suite::Appendix, &config)?;
    within(start.elapsed(), Duration::from_secs(5))?;
    all_pass(&r.entries)?;
    for ring in &rings {
        let n = r
            .entries
            .iter()
            .filter(|e| e.check_id.starts_with("A-B") && e.check_id.ends_with(&format!("[{ring}]")))
            .count();
        if n != 24 {
            return Err(format!("{n} parametrized relators over {ring}, expected 24"));
        }
    }
    let constants = with_prefix(&r.entries, "structure-constants[");
    if constants.len() != 24 || pass_count(&constants) != 24 {
        return Err("structure constants do not cover all 24 relators".into());
    }
    let catalog = parametrized_catalog();
    for id in ["A-B5", "A-B6", "A-B9", "A-B15"] {
        let r = catalog.iter().find(|r| r.id == id).ok_or_else(|| format!("missing {id}"))?;
        let terms = derive_structure_constants(r.gamma, r.delta).map_err(|e| e.to_string())?;
        if !terms.iter().any(|t| t.c.abs() == 2) {
            return Err(format!("{id}: no derived constant with |c| = 2"));
        }
    }
    Ok(format!("24 relators x {} rings x 100 samples; constants reproduced", rings.len()))
}

fn weyl() -> Outcome {
    let r = report(Suite::Weyl, &RunConfig::default())?;
    let table = with_prefix(&r.entries, "weyl[");
    let inverse = with_prefix(&r.entries, "w-inverse[");
    if table.len() != 24 || pass_count(&table) != 24 {
        return Err(format!("{}/{} Weyl identities pass", pass_count(&table), table.len()));
    }
    if inverse.len() != 8 || pass_count(&inverse) != 8 {
        return Err(format!("{}/{} w_g w_-g = I pass", pass_count(&inverse), inverse.len()));
    }
    Ok("24/24 conjugation identities, 8/8 w_g w_-g = I".into())
}

fn kernel_order() -> Outcome {
    let r = report(Suite::Weyl, &RunConfig::default())?;
    let kernel = with_prefix(&r.entries, "kernel[");
    let owned: Vec<Entry> = kernel.iter().map(|&e| e.clone()).collect();
    all_pass(&owned)?;
    if kernel.len() != 4 {
        return Err(format!("{} kernel entries, expected 4", kernel.len()));
    }
    Ok("w^4 = I, w^2 != I for 2a+b and b".into())
}

fn f_relations() -> Outcome {
    let r = report(Suite::FRelations, &RunConfig::default())?;
    all_pass(&r.entries)?;
    let braid = with_prefix(&r.entries, "f-braid[");
    if braid.len() != 10 {
        return Err(format!("{} braid relations, expected 10", braid.len()));
    }
    Ok("10/10 braid relations among f(s_i)".into())
}

fn beta_triviality() -> Outcome {
    let config = RunConfig::default();
    let beta = report(Suite::Beta, &config)?;
    all_pass(&beta.entries)?;
    let cor = report(Suite::Corollary42, &config)?;
    all_pass(&cor.entries)?;
    let remark = report(Suite::Remark45, &config)?;
    all_pass(&remark.entries)?;
    let has = |r: &Report, id: &str| r.entries.iter().any(|e| e.check_id == id);
    for (r, id) in [
        (&beta, "beta[f(beta)=1]"),
        (&beta, "beta[f(s1s2s1)=w_2a+b]"),
        (&cor, "cor42[f((s1s2s1)^4)=1]"),
        (&remark, "remark45[f(D^2)=1]"),
    ] {
        if !has(r, id) {
            return Err(format!("missing {id}"));
        }
    }
    Ok("f(beta) = I, f(s1s2s1) = w_2a+b, f((s1s2s1)^4) = I, f(D^2) = I".into())
}

fn four_b6_equalities() -> Outcome {
    for (id, l, r) in homs::lemma_44_equalities() {
        let g = l.equal(&r).map_err(|e| e.to_string())?;
        let o = oracle_equal(&l, &r).map_err(|e| e.to_string())?;
        if !(g && o) {
            return Err(format!("{id}: garside {g}, handle reduction {o}"));
        }
    }
    let r = report(Suite::Lemma44, &RunConfig::default())?;
    all_pass(&r.entries)?;
    Ok("4/4 equalities under both engines".into())
}

fn phi_relations() -> Outcome {
    let r = report(Suite::PhiRelations, &RunConfig::default())?;
    all_pass(&r.entries)?;
    let exact = r.entries.iter().filter(|e| e.engine == EngineLabel::ExactB6).count();
    let mod_n: Vec<&str> =
        r.entries.iter().filter(|e| e.engine == EngineLabel::ModNWitness).map(|e| e.check_id.as_str()).collect();
    if r.entries.len() != 24 || exact != 18 || mod_n != homs::MOD_N_RELATORS {
        return Err(format!("{} entries, {exact} exact, mod N: {mod_n:?}", r.entries.len()));
    }
    Ok("18 exact in B6, 6 in N via witnesses".into())
}

fn phi_f() -> Outcome {
    let r = report(Suite::PhiF, &RunConfig::default())?;
    all_pass(&r.entries)?;
    let composed = with_prefix(&r.entries, "phi-f[");
    if composed.len() != 5 {
        return Err(format!("{} generators checked, expected 5", composed.len()));
    }
    Ok("(phi o f)(s_i) = s_i for i = 1..5".into())
}

fn delta_facts() -> Outcome {
    let r = report(Suite::Delta, &RunConfig::default())?;
    all_pass(&r.entries)?;
    let ids: Vec<&str> = r.entries.iter().map(|e| e.check_id.as_str()).collect();
    let mut expected: Vec<String> = (1..=5).map(|i| format!("delta[s{i}->s{}]", 6 - i)).collect();
    expected.extend((1..=5).map(|i| format!("delta2-central[s{i}]")));
    expected.extend(["b", "-b", "a", "a+b", "-(a+b)"].map(|g| format!("delta-phi[{g}]")));
    expected.extend(["c3[b1b2b1=b2b1b2]", "c3[b1b3=b3b1]", "c3[b2b3b2b3=b3b2b3b2]"].map(String::from));
    if let Some(missing) = expected.iter().find(|id| !ids.contains(&id.as_str())) {
        return Err(format!("missing {missing}"));
    }
    Ok(format!("{} identities exact in B6", r.entries.len()))
}

fn splice(w: &BraidWord, at: usize, relator: &[i32]) -> BraidWord {
    let mut signed = w.signed();
    signed.splice(at..at, relator.iter().copied());
    BraidWord::from_signed(w.strands(), &signed).unwrap()
}

fn random_relator(rng: &mut ChaCha8Rng) -> Vec<i32> {
    let i: i32 = rng.gen_range(1..=5);
    let j: i32 = rng.gen_range(1..=5);
    let r = if i == j {
        vec![i, -i]
    } else if (i - j).abs() == 1 {
        vec![i, j, i, -j, -i, -j]
    } else {
        vec![i, j, -i, -j]
    };
    if rng.gen_bool(0.5) {
        r.iter().rev().map(|x| -x).collect()
    } else {
        r
    }
}

fn engine_cross_validation() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let pairs = 1000;
    let mut equal_pairs = 0;
    for k in 0..pairs {
        let len = rng.gen_range(0..=40);
        let u = random_word(&mut rng, len);
        let v = if k % 2 == 0 {
            let mut v = u.clone();
            for _ in 0..rng.gen_range(1..=3) {
                let at = rng.gen_range(0..=v.len());
                v = splice(&v, at, &random_relator(&mut rng));
            }
            if normal_form(&v) != normal_form(&u) {
                return Err(format!("relator insertion changed the normal form of {u}"));
            }
            v
        } else {
            let len = rng.gen_range(0..=40);
            random_word(&mut rng, len)
        };
        let g = Engine::Garside.equal(&u, &v).map_err(|e| e.to_string())?;
        let o = Engine::Oracle.equal(&u, &v).map_err(|e| e.to_string())?;
        if g != o {
            return Err(format!("engines disagree on {u} vs {v}"));
        }
        equal_pairs += usize::from(g);
        let uu = u.multiply(&u.inverse()).unwrap();
        if !Engine::Garside.is_trivial(&uu).unwrap() || !Engine::Oracle.is_trivial(&uu).unwrap() {
            return Err(format!("w w^-1 not trivial for {u}"));
        }
    }
    Ok(format!("{pairs} pairs ({equal_pairs} equal), engines agree"))
}

fn determinism() -> Outcome {
    let config = RunConfig { seed: 42, ..RunConfig::default() };
    let first = report(Suite::All, &config)?.to_structured();
    let second = report(Suite::All, &config)?.to_structured();
    if first != second {
        return Err("structured reports differ".into());
    }
    let lines = first.lines().count();
    Ok(format!("{lines} identical lines"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 12] = [
        ("presentation relators under pi over Z", presentation),
        ("parametrized relators over Z, Z/2, Z/3, Z/4, Z/5, Z/12", appendix),
        ("Weyl conjugation table", weyl),
        ("kernel generator order", kernel_order),
        ("braid relations among f(s_i)", f_relations),
        ("beta triviality", beta_triviality),
        ("four B6 equalities, both engines", four_b6_equalities),
        ("phi-image relators: 18 exact / 6 mod N", phi_relations),
        ("phi o f identity", phi_f),
        ("half-twist facts", delta_facts),
        ("engine cross-validation", engine_cross_validation),
        ("determinism of structured reports", determinism),
    ];
    let mut failed = 0;
    for (k, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("PASS  {:>2}. {name}: {detail}", k + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL  {:>2}. {name}: {why}", k + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
