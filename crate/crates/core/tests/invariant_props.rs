mod common;

use ccomplex::{
    epsilon, full_substitution_word, invariants::gcd, linking_numbers, magnus_expand, mu3, mu3_all, mu3_detail,
    pairwise_linking, substitution_word, GroupLetter, GroupWord, TripleLinking,
};
use common::*;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn arb_word(max_len: usize) -> impl Strategy<Value = GroupWord> {
    prop::collection::vec((1usize..=4, any::<bool>()), 0..=max_len).prop_map(|v| {
        GroupWord::new(
            v.into_iter()
                .map(|(var, pos)| GroupLetter::new(var, if pos { 1 } else { -1 }))
                .collect(),
        )
    })
}

proptest! {
    #[test]
    fn magnus_matches_term_expansion(w in arb_word(40)) {
        prop_assert_eq!(magnus_expand(&w), expanded_magnus(&w));
    }

    #[test]
    fn magnus_matches_untruncated_product(w in arb_word(7)) {
        prop_assert_eq!(magnus_expand(&w), untruncated_magnus(&w));
    }

    #[test]
    fn magnus_is_multiplicative(a in arb_word(15), b in arb_word(15)) {
        let mut ab = a.letters().to_vec();
        ab.extend_from_slice(b.letters());
        prop_assert_eq!(magnus_expand(&GroupWord::new(ab)), &magnus_expand(&a) * &magnus_expand(&b));
    }

    #[test]
    fn degree_one_is_exponent_sum(w in arb_word(30)) {
        let m = magnus_expand(&w);
        prop_assert_eq!(m.constant(), 1);
        for v in 1..=4 {
            prop_assert_eq!(m.linear(v), w.exponent_sum(v));
        }
    }

    #[test]
    fn degree_one_is_linking(d in arb_descriptor(5, 12)) {
        for k in 1..=d.components() {
            let m = magnus_expand(&full_substitution_word(&d, k).unwrap());
            for j in (1..=d.components()).filter(|&j| j != k) {
                prop_assert_eq!(m.linear(j), pairwise_linking(&d, k, j).unwrap());
                prop_assert_eq!(m.linear(j), linking_from_word(&d, k, j));
            }
        }
    }

    #[test]
    fn linking_is_symmetric(d in arb_descriptor(5, 12)) {
        for ((i, j), lk) in linking_numbers(&d) {
            prop_assert_eq!(pairwise_linking(&d, j, i).unwrap(), lk);
            prop_assert_eq!(linking_from_word(&d, j, i), lk);
        }
    }

    #[test]
    fn scoped_word_is_restriction_of_full(d in arb_descriptor(5, 12)) {
        prop_assume!(d.components() >= 3);
        let scope = [1, 2, 3];
        for k in scope {
            let full = full_substitution_word(&d, k).unwrap();
            let restricted: Vec<GroupLetter> = full
                .letters()
                .iter()
                .filter(|l| l.var <= 3)
                .copied()
                .collect();
            prop_assert_eq!(substitution_word(&d, k, scope).unwrap(), GroupWord::new(restricted));
        }
    }

    #[test]
    fn basepoint_invariance(d in arb_descriptor(5, 12), k in 1usize..=5, s in 0i64..12) {
        let k = k.min(d.components());
        let shifted = d.cyclic_shift(k, s).unwrap();
        prop_assert_eq!(mu3_all(&shifted), mu3_all(&d));
        prop_assert_eq!(linking_numbers(&shifted), linking_numbers(&d));
    }

    #[test]
    fn basepoint_invariance_is_exact_without_linking(d in arb_unlinked(5, 6), k in 1usize..=5, s in 0i64..12) {
        let k = k.min(d.components());
        let shifted = d.cyclic_shift(k, s).unwrap();
        for (t, m) in mu3_all(&d) {
            prop_assert_eq!(m.modulus, 0);
            prop_assert_eq!(mu3(&shifted, t.0, t.1, t.2).unwrap(), m);
        }
    }

    #[test]
    fn relabel_invariance(d in arb_descriptor(5, 12), seed in any::<u64>()) {
        let (e, _) = scramble(&d, seed);
        prop_assert_eq!(mu3_all(&e), mu3_all(&d));
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let r = d.relabel(&random_relabeling(&d, &mut rng)).unwrap();
        for (t, _) in mu3_all(&d) {
            prop_assert_eq!(mu3_detail(&r, t.0, t.1, t.2).unwrap(), mu3_detail(&d, t.0, t.1, t.2).unwrap());
        }
    }

    #[test]
    fn triple_value_depends_only_on_sublink(d in arb_descriptor(6, 14)) {
        for ((i, j, k), m) in mu3_all(&d) {
            prop_assert_eq!(mu3(&d.sublink(&[i, j, k]).unwrap(), 1, 2, 3).unwrap(), m);
        }
    }

    #[test]
    fn modulus_is_gcd_of_linking(d in arb_descriptor(5, 12)) {
        for ((i, j, k), m) in mu3_all(&d) {
            let l = |a, b| pairwise_linking(&d, a, b).unwrap();
            prop_assert_eq!(m.modulus, gcd(gcd(l(i, j), l(i, k)), l(j, k)));
            if m.modulus > 0 {
                prop_assert!((0..m.modulus).contains(&m.value));
            }
            let det = mu3_detail(&d, i, j, k).unwrap();
            prop_assert!(TripleLinking::congruent(det.e123 + det.e312 + det.e231, m.value, m.modulus));
        }
    }

    #[test]
    fn symmetric_part_of_epsilon(d in arb_descriptor(4, 10)) {
        prop_assume!(d.components() >= 3);
        let (i, j, k) = (1, 2, 3);
        let l = |a, b| pairwise_linking(&d, a, b).unwrap();
        prop_assert_eq!(epsilon(&d, i, j, k).unwrap() + epsilon(&d, j, i, k).unwrap(), l(i, k) * l(j, k));
    }
}

#[test]
fn fixture_values() {
    let b = borromean();
    assert_eq!(mu3(&b, 1, 2, 3).unwrap().value, 1);
    assert_eq!(mu3(&doubled_borromean(), 1, 2, 3).unwrap().value, 2);
    assert_eq!(mu3(&unlink(3), 1, 2, 3).unwrap().value, 0);
    let d = mu3_detail(&b, 1, 2, 3).unwrap();
    assert_eq!((d.e123, d.e312, d.e231), (0, 0, 1));
    assert_eq!(
        magnus_expand(&substitution_word(&b, 1, [1, 2, 3]).unwrap()).to_string(),
        "1 + h2h3 - h3h2"
    );
    assert!(mu3(&b, 2, 1, 3).is_err());
    assert!(mu3(&b, 1, 1, 3).is_err());
    assert!(mu3(&b, 1, 2, 4).is_err());
    assert!(pairwise_linking(&b, 2, 2).is_err());
}
