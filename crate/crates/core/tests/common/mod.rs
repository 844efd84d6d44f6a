//! Test-only oracles, independent of the library's computation paths.
#![allow(dead_code)]

use std::collections::{BTreeMap, HashMap};

use ccomplex::{
    CComplexDescriptor, ClaspLabel, GroupLetter, GroupWord, RawDescriptor, TruncatedSeries,
};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn cc(genus: &[u64], words: &[&str]) -> CComplexDescriptor {
    CComplexDescriptor::from_claspwords(genus, words).unwrap()
}

pub fn borromean() -> CComplexDescriptor {
    cc(&[0, 0, 0], &["c1- c3- c2+ c4+", "c1- c2+", "c3- c4+"])
}

pub fn doubled_borromean() -> CComplexDescriptor {
    cc(
        &[0, 0, 0],
        &[
            "c1- c3- c2+ c4+ c5- c7- c6+ c8+",
            "c1- c2+ c5- c6+",
            "c3- c4+ c7- c8+",
        ],
    )
}

pub fn unlink(n: usize) -> CComplexDescriptor {
    CComplexDescriptor::split(&vec![0; n]).unwrap()
}

/// Series of a single letter as a full noncommutative polynomial:
/// `1 + h` or `1 - h + h^2` (higher terms of the inverse cannot reach degree two).
fn letter_poly(l: GroupLetter) -> Vec<(Vec<usize>, i64)> {
    if l.exp > 0 {
        vec![(vec![], 1), (vec![l.var], 1)]
    } else {
        vec![(vec![], 1), (vec![l.var], -1), (vec![l.var, l.var], 1)]
    }
}

/// Multiplies the letter polynomials without any truncation, then keeps the
/// part of degree at most two. Exponential in the word length.
pub fn untruncated_magnus(w: &GroupWord) -> TruncatedSeries {
    let mut acc: HashMap<Vec<usize>, i64> = HashMap::from([(vec![], 1)]);
    for &l in w.letters() {
        let mut next: HashMap<Vec<usize>, i64> = HashMap::new();
        for (mono, c) in &acc {
            for (m2, c2) in letter_poly(l) {
                let mut m = mono.clone();
                m.extend(m2);
                *next.entry(m).or_insert(0) += c * c2;
            }
        }
        next.retain(|_, c| *c != 0);
        acc = next;
    }
    to_series(acc)
}

/// Expands the product term by term: every monomial of degree at most two is
/// obtained by choosing a non-constant term from at most two factors.
pub fn expanded_magnus(w: &GroupWord) -> TruncatedSeries {
    let letters = w.letters();
    let mut terms: HashMap<Vec<usize>, i64> = HashMap::from([(vec![], 1)]);
    for (p, lp) in letters.iter().enumerate() {
        *terms.entry(vec![lp.var]).or_insert(0) += lp.exp as i64;
        if lp.exp < 0 {
            *terms.entry(vec![lp.var, lp.var]).or_insert(0) += 1;
        }
        for lq in &letters[p + 1..] {
            *terms.entry(vec![lp.var, lq.var]).or_insert(0) += (lp.exp as i64) * (lq.exp as i64);
        }
    }
    to_series(terms)
}

fn to_series(terms: HashMap<Vec<usize>, i64>) -> TruncatedSeries {
    let constant = terms.get(&Vec::new()).copied().unwrap_or(0);
    let mut s = TruncatedSeries::constant_term(constant);
    for (mono, c) in terms {
        match mono.as_slice() {
            [i] => s.set_linear(*i, s.linear(*i) + c),
            [i, j] => s.set_quadratic(*i, *j, s.quadratic(*i, *j) + c),
            _ => {}
        }
    }
    s
}

/// Descriptors from the crate's seeded generator.
pub fn arb_descriptor(max_n: usize, max_clasps: usize) -> impl Strategy<Value = CComplexDescriptor> {
    (1..=max_n, 0..=max_clasps, any::<u64>())
        .prop_map(|(n, m, seed)| ccomplex::random_descriptor(n, m, seed))
}

pub fn arb_unlinked(max_n: usize, max_pairs: usize) -> impl Strategy<Value = CComplexDescriptor> {
    (3..=max_n, 0..=max_pairs, any::<u64>())
        .prop_map(|(n, m, seed)| ccomplex::random_descriptor_unlinked(n, m, seed))
}

/// A random relabeling onto fresh names `z<k>`.
pub fn random_relabeling(d: &CComplexDescriptor, rng: &mut impl Rng) -> BTreeMap<ClaspLabel, ClaspLabel> {
    let mut targets: Vec<usize> = (0..d.clasp_count()).collect();
    targets.shuffle(rng);
    d.clasps()
        .zip(targets)
        .map(|(c, t)| (c.label.clone(), ClaspLabel::new(format!("z{t}")).unwrap()))
        .collect()
}

/// Applies a random relabeling and random rotations; returns the result and
/// the rotations applied.
pub fn scramble(d: &CComplexDescriptor, seed: u64) -> (CComplexDescriptor, Vec<usize>) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = d.clone();
    let mut shifts = Vec::new();
    for k in 1..=d.components() {
        let len = d.word(k).len();
        let s = if len == 0 { 0 } else { rng.gen_range(0..len) };
        shifts.push(s);
        out = out.cyclic_shift(k, s as i64).unwrap();
    }
    let map = random_relabeling(&out, &mut rng);
    (out.relabel(&map).unwrap(), shifts)
}

/// Same clasps, same ends, each word independently shuffled.
pub fn shuffle_words(d: &CComplexDescriptor, seed: u64) -> CComplexDescriptor {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut raw: RawDescriptor = d.to_raw();
    for w in &mut raw.words {
        w.shuffle(&mut rng);
    }
    ccomplex::validate(&raw).unwrap()
}

/// Signed clasps between `i` and `j`, read off word `i` alone.
pub fn linking_from_word(d: &CComplexDescriptor, i: usize, j: usize) -> i64 {
    d.letters(i)
        .filter(|c| c.partner(i) == j)
        .map(|c| c.sign.value())
        .sum()
}

type ClaspType = (usize, usize, i64);

/// Every descriptor with `n` components, genus zero and exactly `k` clasps,
/// grouped by clasp census. Labels `c1..ck` follow the census order, so
/// two descriptors from different groups are never equivalent.
pub fn enumerate_by_census(n: usize, k: usize) -> Vec<Vec<CComplexDescriptor>> {
    let mut types = Vec::new();
    for a in 1..=n {
        for b in a + 1..=n {
            types.push((a, b, 1i64));
            types.push((a, b, -1i64));
        }
    }
    let mut groups = Vec::new();
    let mut census = Vec::new();
    census_rec(&types, 0, k, &mut census, &mut |c| groups.push(census_group(n, c)));
    groups
}

fn census_rec(
    types: &[ClaspType],
    from: usize,
    left: usize,
    acc: &mut Vec<ClaspType>,
    out: &mut dyn FnMut(&[ClaspType]),
) {
    if left == 0 {
        out(acc);
        return;
    }
    for t in from..types.len() {
        acc.push(types[t]);
        census_rec(types, t, left - 1, acc, out);
        acc.pop();
    }
}

fn permutations(items: &[String]) -> Vec<Vec<String>> {
    if items.is_empty() {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let head = rest.remove(i);
        for mut tail in permutations(&rest) {
            tail.insert(0, head.clone());
            out.push(tail);
        }
    }
    out
}

fn census_group(n: usize, census: &[ClaspType]) -> Vec<CComplexDescriptor> {
    let mut incident: Vec<Vec<String>> = vec![Vec::new(); n];
    let mut clasps = Vec::new();
    for (idx, &(a, b, sign)) in census.iter().enumerate() {
        let label = format!("c{}", idx + 1);
        incident[a - 1].push(label.clone());
        incident[b - 1].push(label.clone());
        clasps.push(ccomplex::descriptor::RawClasp {
            label,
            sign,
            ends: (a as i64, b as i64),
        });
    }
    let per_word: Vec<Vec<Vec<String>>> = incident.iter().map(|w| permutations(w)).collect();
    let mut out = Vec::new();
    let mut idx = vec![0usize; n];
    loop {
        let raw = RawDescriptor {
            components: n,
            genus: vec![0; n],
            clasps: clasps.clone(),
            words: (0..n).map(|c| per_word[c][idx[c]].clone()).collect(),
        };
        out.push(ccomplex::validate(&raw).unwrap());
        let mut c = n;
        loop {
            if c == 0 {
                return out;
            }
            c -= 1;
            idx[c] += 1;
            if idx[c] < per_word[c].len() {
                break;
            }
            idx[c] = 0;
        }
    }
}

/// Every legal move with small parameters: all transpositions, cancel pairs
/// at a few insertion points, and every stabilization.
pub fn legal_moves(d: &CComplexDescriptor, rng: &mut impl Rng) -> Vec<ccomplex::Move> {
    use ccomplex::Move;
    let n = d.components();
    let mut out = Vec::new();
    for k in 1..=n {
        let labels = d.word(k).labels();
        let len = labels.len();
        if len >= 2 {
            for p in 1..=len {
                let a = d.clasp(&labels[p - 1]).unwrap().partner(k);
                let b = d.clasp(&labels[p % len]).unwrap().partner(k);
                if a == b {
                    out.push(Move::Transpose { component: k, position: p });
                }
            }
        }
        out.push(Move::Stabilize { component: k });
    }
    for i in 1..=n {
        for j in 1..=n {
            if i != j {
                out.push(Move::CancelPair {
                    first: i,
                    second: j,
                    first_position: rng.gen_range(0..=d.word(i).len()),
                    second_position: rng.gen_range(0..=d.word(j).len()),
                });
            }
        }
    }
    out
}
