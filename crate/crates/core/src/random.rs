//! Seeded random descriptors for fuzzing and property tests.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::descriptor::{validate, RawClasp, RawDescriptor};
use crate::CComplexDescriptor;

fn build(n: usize, clasps: Vec<(usize, usize, i64)>, rng: &mut impl Rng) -> CComplexDescriptor {
    let mut words: Vec<Vec<String>> = vec![Vec::new(); n];
    let mut raw_clasps = Vec::with_capacity(clasps.len());
    for (idx, (a, b, sign)) in clasps.into_iter().enumerate() {
        let label = format!("c{}", idx + 1);
        for end in [a, b] {
            let word = &mut words[end - 1];
            let at = rng.gen_range(0..=word.len());
            word.insert(at, label.clone());
        }
        raw_clasps.push(RawClasp {
            label,
            sign,
            ends: (a as i64, b as i64),
        });
    }
    validate(&RawDescriptor {
        components: n,
        genus: vec![0; n],
        clasps: raw_clasps,
        words,
    })
    .expect("generated data satisfies the axioms")
}

fn random_pair(n: usize, rng: &mut impl Rng) -> (usize, usize) {
    let a = rng.gen_range(1..=n);
    let mut b = rng.gen_range(1..n);
    if b >= a {
        b += 1;
    }
    (a.min(b), a.max(b))
}

/// A genus-zero descriptor with `clasp_count` clasps labeled `c1, c2, ...`.
/// Each clasp gets a uniform pair of distinct components, a uniform sign and
/// uniform insertion points in both words. Deterministic in `seed`. With a
/// single component no clasps can exist and none are generated.
///
/// Panics if `n == 0`.
pub fn random_descriptor(n: usize, clasp_count: usize, seed: u64) -> CComplexDescriptor {
    assert!(n >= 1, "a C-complex needs at least one component");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let count = if n < 2 { 0 } else { clasp_count };
    let clasps = (0..count)
        .map(|_| {
            let (a, b) = random_pair(n, &mut rng);
            let sign = if rng.gen::<bool>() { 1 } else { -1 };
            (a, b, sign)
        })
        .collect();
    build(n, clasps, &mut rng)
}

/// Like [`random_descriptor`] but every pairwise linking number is zero:
/// clasps come in `pairs` opposite-sign couples on the same component pair,
/// placed independently in the words.
pub fn random_descriptor_unlinked(n: usize, pairs: usize, seed: u64) -> CComplexDescriptor {
    assert!(n >= 1, "a C-complex needs at least one component");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let count = if n < 2 { 0 } else { pairs };
    let mut clasps = Vec::with_capacity(2 * count);
    for _ in 0..count {
        let (a, b) = random_pair(n, &mut rng);
        clasps.push((a, b, 1));
        clasps.push((a, b, -1));
    }
    build(n, clasps, &mut rng)
}
