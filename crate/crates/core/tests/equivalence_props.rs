mod common;

use ccomplex::{
    decide_equivalent, decide_equivalent_bruteforce, prop_mu123_check, random_descriptor, stabilize,
    EquivalenceCertificate, Refutation, Verdict,
};
use common::*;
use proptest::prelude::*;

proptest! {
    #[test]
    fn reflexive_with_identity_certificate(d in arb_descriptor(4, 8)) {
        let cert = decide_equivalent(&d, &d).into_yes().unwrap();
        prop_assert!(cert.verify(&d, &d));
        prop_assert_eq!(cert, EquivalenceCertificate::identity(&d));
    }

    #[test]
    fn scrambled_copies_are_equivalent(d in arb_descriptor(4, 10), seed in any::<u64>()) {
        let (e, _) = scramble(&d, seed);
        let cert = decide_equivalent(&d, &e).into_yes().unwrap();
        prop_assert!(cert.verify(&d, &e));
    }

    #[test]
    fn symmetric(d in arb_descriptor(3, 6), seed in any::<u64>()) {
        let e = if seed % 2 == 0 { scramble(&d, seed).0 } else { shuffle_words(&d, seed) };
        let forward = decide_equivalent(&d, &e);
        let backward = decide_equivalent(&e, &d);
        prop_assert_eq!(forward.is_yes(), backward.is_yes());
        if let Verdict::Yes(cert) = forward {
            prop_assert!(cert.inverse(&d).verify(&e, &d));
        }
    }

    #[test]
    fn transitive(d in arb_descriptor(4, 8), s1 in any::<u64>(), s2 in any::<u64>()) {
        let (e, _) = scramble(&d, s1);
        let (f, _) = scramble(&e, s2);
        let de = decide_equivalent(&d, &e).into_yes().unwrap();
        let ef = decide_equivalent(&e, &f).into_yes().unwrap();
        prop_assert!(de.then(&ef, &d).verify(&d, &f));
        prop_assert!(decide_equivalent(&d, &f).is_yes());
    }

    #[test]
    fn agrees_with_bruteforce(d in arb_descriptor(4, 6), seed in any::<u64>()) {
        let e = match seed % 3 {
            0 => scramble(&d, seed).0,
            1 => shuffle_words(&d, seed),
            _ => random_descriptor(d.components(), d.clasp_count(), seed),
        };
        let fast = decide_equivalent(&d, &e);
        let slow = decide_equivalent_bruteforce(&d, &e, 8).unwrap();
        prop_assert_eq!(fast.is_yes(), slow.is_yes());
        prop_assert_eq!(fast.yes(), slow.yes());
    }

    #[test]
    fn equivalent_implies_equal_invariants(d in arb_descriptor(4, 6), seed in any::<u64>()) {
        let e = shuffle_words(&d, seed);
        if decide_equivalent(&d, &e).is_yes() {
            prop_assert!(prop_mu123_check(&d, &e).unwrap().all_pass());
            prop_assert_eq!(d.genus(), e.genus());
        }
    }

    #[test]
    fn genus_difference_refutes(d in arb_descriptor(3, 6)) {
        let e = stabilize(&d, 1).unwrap();
        let refuted = matches!(decide_equivalent(&d, &e), Verdict::No(Refutation::Genus { component: 1, .. }));
        prop_assert!(refuted);
    }
}

#[test]
fn census_mismatch_refutes() {
    let a = cc(&[0, 0], &["a+ b+", "a+ b+"]);
    let b = cc(&[0, 0], &["a+ b-", "a+ b-"]);
    assert!(matches!(decide_equivalent(&a, &b), Verdict::No(Refutation::ClaspCount { .. })));
}

#[test]
fn word_order_matters() {
    // Same census, words are not rotations of each other under one relabeling.
    let a = cc(&[0, 0, 0], &["a+ b+", "a+ c+", "b+ c+"]);
    let b = cc(&[0, 0, 0], &["a+ b+", "c+ a+", "b+ c+"]);
    let verdict = decide_equivalent(&a, &b);
    let slow = decide_equivalent_bruteforce(&a, &b, 8).unwrap();
    assert_eq!(verdict.is_yes(), slow.is_yes());
}

#[test]
fn bruteforce_bound() {
    let d = random_descriptor(3, 9, 1);
    assert!(decide_equivalent_bruteforce(&d, &d, 8).is_err());
    assert!(decide_equivalent_bruteforce(&d, &d, 9).unwrap().is_yes());
}
