use proptest::prelude::*;

use sp4braid::braid::{delta, normal_form, BraidWord, Permutation};
use sp4braid::homs::f_bar;
use sp4braid::oracle::{classify, handle_reduce, SigmaOrdering};

fn word(strands: usize, max_len: usize) -> impl Strategy<Value = BraidWord> {
    let n = strands as i32 - 1;
    prop::collection::vec((1..=n, any::<bool>()), 0..=max_len).prop_map(move |letters| {
        let signed: Vec<i32> = letters.into_iter().map(|(i, pos)| if pos { i } else { -i }).collect();
        BraidWord::from_signed(strands, &signed).unwrap()
    })
}

fn b6(max_len: usize) -> impl Strategy<Value = BraidWord> {
    word(6, max_len)
}

/// A braid relator on `strands` strands built from generator `i` and a
/// choice of partner.
fn relator(strands: usize, i: i32, partner: i32) -> BraidWord {
    let j = partner;
    let signed: Vec<i32> = if i == j {
        vec![i, -i]
    } else if (i - j).abs() == 1 {
        vec![i, j, i, -j, -i, -j]
    } else {
        vec![i, j, -i, -j]
    };
    BraidWord::from_signed(strands, &signed).unwrap()
}

fn splice(w: &BraidWord, at: usize, r: &BraidWord) -> BraidWord {
    let at = at % (w.len() + 1);
    let mut letters = w.letters()[..at].to_vec();
    letters.extend_from_slice(r.letters());
    letters.extend_from_slice(&w.letters()[at..]);
    BraidWord::from_letters(w.strands(), letters).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn relator_insertion_preserves_normal_form(w in b6(30), at in 0usize..64, i in 1i32..=5, j in 1i32..=5) {
        let r = relator(6, i, j);
        prop_assert_eq!(normal_form(&w), normal_form(&splice(&w, at, &r)));
    }

    #[test]
    fn normal_forms_are_left_weighted_and_faithful(w in b6(40)) {
        let nf = normal_form(&w);
        prop_assert!(nf.is_left_weighted());
        prop_assert!(nf.factors().iter().all(|f| !f.is_identity() && !f.is_reversal()));
        prop_assert_eq!(normal_form(&nf.to_word()), nf.clone());
        prop_assert_eq!(nf.permutation(), w.permutation());
    }

    #[test]
    fn inverse_law(w in b6(40)) {
        let ww = w.multiply(&w.inverse()).unwrap();
        prop_assert!(normal_form(&ww).is_identity());
        prop_assert!(handle_reduce(&ww).unwrap().is_empty());
    }

    #[test]
    fn permutation_is_a_homomorphism(u in word(7, 20), v in word(7, 20)) {
        let uv = u.multiply(&v).unwrap();
        prop_assert_eq!(uv.permutation(), Permutation::product(&u.permutation(), &v.permutation()));
    }

    #[test]
    fn delta_squared_is_central(w in word(5, 25)) {
        let d2 = delta(5).unwrap().pow(2);
        let lhs = d2.multiply(&w).unwrap();
        let rhs = w.multiply(&d2).unwrap();
        prop_assert_eq!(normal_form(&lhs), normal_form(&rhs));
    }

    #[test]
    fn engines_agree(u in b6(20), v in b6(20)) {
        let garside = u.equal(&v).unwrap();
        let oracle = sp4braid::oracle::oracle_equal(&u, &v).unwrap();
        prop_assert_eq!(garside, oracle);
    }

    #[test]
    fn sigma_ordering_trichotomy(w in word(4, 20)) {
        let reduced = handle_reduce(&w).unwrap();
        let inverse = handle_reduce(&w.inverse()).unwrap();
        match classify(&reduced) {
            SigmaOrdering::Trivial => {
                prop_assert!(normal_form(&w).is_identity());
                prop_assert_eq!(classify(&inverse), SigmaOrdering::Trivial);
            }
            SigmaOrdering::Positive => prop_assert_eq!(classify(&inverse), SigmaOrdering::Negative),
            SigmaOrdering::Negative => prop_assert_eq!(classify(&inverse), SigmaOrdering::Positive),
        }
    }

    #[test]
    fn handle_reduction_is_idempotent(w in word(5, 30)) {
        let once = handle_reduce(&w).unwrap();
        prop_assert_eq!(handle_reduce(&once).unwrap(), once);
    }

    #[test]
    fn f_bar_is_a_homomorphism(u in b6(15), v in b6(15)) {
        let uv = u.multiply(&v).unwrap();
        prop_assert_eq!(f_bar(&uv), f_bar(&u).mul(&f_bar(&v)).unwrap());
        prop_assert_eq!(f_bar(&u.inverse()), f_bar(&u).inverse());
    }

    #[test]
    fn f_bar_kills_braid_relators(w in b6(10), at in 0usize..16, i in 1i32..=5, j in 1i32..=5) {
        prop_assert_eq!(f_bar(&splice(&w, at, &relator(6, i, j))), f_bar(&w));
    }
}
