//! Link invariants read off a C-complex: pairwise linking numbers and
//! Milnor's triple linking numbers.
//!
//! For a triple of components, each claspword is turned into a free-group
//! word by replacing every clasp with the generator of its partner
//! component (carrying the clasp sign as exponent). The triple linking
//! number is `e(1,2,3) + e(3,1,2) + e(2,3,1)`, where `e(i,j,k)` is the
//! coefficient of `h_i h_j` in the Magnus expansion of the word of `k`.
//! It is well defined modulo the gcd of the three pairwise linking numbers.

use std::fmt;

use serde::Serialize;

use crate::descriptor::CComplexDescriptor;
use crate::error::{Error, Result};
use crate::series::{magnus_expand, GroupLetter, GroupWord};

pub fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Signed clasp count between components `i` and `j`.
pub fn pairwise_linking(d: &CComplexDescriptor, i: usize, j: usize) -> Result<i64> {
    d.check_index(i)?;
    d.check_index(j)?;
    if i == j {
        return Err(Error::EqualIndices(i));
    }
    let ends = (i.min(j), i.max(j));
    Ok(d.clasps()
        .filter(|c| c.ends == ends)
        .map(|c| c.sign.value())
        .sum())
}

/// All linking numbers `lk(i, j)` with `i < j`, in lexicographic order.
pub fn linking_numbers(d: &CComplexDescriptor) -> Vec<((usize, usize), i64)> {
    let n = d.components();
    let mut out = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for i in 1..=n {
        for j in i + 1..=n {
            out.push(((i, j), 0));
        }
    }
    for c in d.clasps() {
        let (a, b) = c.ends;
        // Position of (a, b) in the lexicographic pair list.
        let idx = (a - 1) * (2 * n - a) / 2 + (b - a - 1);
        out[idx].1 += c.sign.value();
    }
    out
}

/// The word of component `k` with each clasp replaced by the generator of
/// its partner. Variables are positions (1-based) within `scope`; clasps
/// whose partner lies outside `scope` are dropped.
pub fn substitution_word(d: &CComplexDescriptor, k: usize, scope: [usize; 3]) -> Result<GroupWord> {
    for (pos, &s) in scope.iter().enumerate() {
        d.check_index(s)?;
        if scope[..pos].contains(&s) {
            return Err(Error::RepeatedIndex(s));
        }
    }
    d.check_index(k)?;
    if !scope.contains(&k) {
        return Err(Error::NotInScope { component: k });
    }
    let letters = d
        .letters(k)
        .filter_map(|c| {
            let partner = c.partner(k);
            scope
                .iter()
                .position(|&s| s == partner)
                .map(|pos| GroupLetter::new(pos + 1, c.sign.value() as i8))
        })
        .collect();
    Ok(GroupWord::new(letters))
}

/// Substitution word of component `k` over all components, with absolute
/// component indices as variables.
pub fn full_substitution_word(d: &CComplexDescriptor, k: usize) -> Result<GroupWord> {
    d.check_index(k)?;
    Ok(GroupWord::new(
        d.letters(k)
            .map(|c| GroupLetter::new(c.partner(k), c.sign.value() as i8))
            .collect(),
    ))
}

fn sorted_scope(d: &CComplexDescriptor, i: usize, j: usize, k: usize) -> Result<[usize; 3]> {
    for x in [i, j, k] {
        d.check_index(x)?;
    }
    if i == j || i == k {
        return Err(Error::RepeatedIndex(i));
    }
    if j == k {
        return Err(Error::RepeatedIndex(j));
    }
    let mut scope = [i, j, k];
    scope.sort_unstable();
    Ok(scope)
}

/// Coefficient of `h_i h_j` in the Magnus expansion of the substitution
/// word of `k`, taken over the sorted scope `{i, j, k}`.
pub fn epsilon(d: &CComplexDescriptor, i: usize, j: usize, k: usize) -> Result<i64> {
    let scope = sorted_scope(d, i, j, k)?;
    let pos = |x: usize| scope.iter().position(|&s| s == x).unwrap() + 1;
    let m = magnus_expand(&substitution_word(d, k, scope)?);
    Ok(m.quadratic(pos(i), pos(j)))
}

/// A triple linking number: an integer known modulo `modulus`.
///
/// When `modulus > 0`, `value` is the least nonnegative residue. When
/// `modulus == 0` (all three linking numbers vanish), `value` is exact.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct TripleLinking {
    pub value: i64,
    pub modulus: i64,
}

impl TripleLinking {
    pub fn new(value: i64, modulus: i64) -> Self {
        let modulus = modulus.abs();
        let value = if modulus == 0 {
            value
        } else {
            value.rem_euclid(modulus)
        };
        TripleLinking { value, modulus }
    }

    /// Whether two integers agree as residues modulo `modulus` (0 = exact).
    pub fn congruent(a: i64, b: i64, modulus: i64) -> bool {
        if modulus == 0 {
            a == b
        } else {
            (a - b).rem_euclid(modulus) == 0
        }
    }
}

impl fmt::Display for TripleLinking {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.modulus == 0 {
            write!(f, "{}", self.value)
        } else {
            write!(f, "{} mod {}", self.value, self.modulus)
        }
    }
}

/// The three epsilon terms behind a triple linking number, on the sublink.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct TripleDetail {
    pub triple: (usize, usize, usize),
    pub e123: i64,
    pub e312: i64,
    pub e231: i64,
    pub linking: (i64, i64, i64),
    pub mu: TripleLinking,
}

fn check_strict(d: &CComplexDescriptor, i: usize, j: usize, k: usize) -> Result<()> {
    for x in [i, j, k] {
        d.check_index(x)?;
    }
    if !(i < j && j < k) {
        return Err(Error::NotStrictlyOrdered(i, j, k));
    }
    Ok(())
}

/// `mu3` together with its epsilon terms and the sublink's linking numbers.
pub fn mu3_detail(d: &CComplexDescriptor, i: usize, j: usize, k: usize) -> Result<TripleDetail> {
    check_strict(d, i, j, k)?;
    let sub = d.sublink(&[i, j, k])?;
    let e123 = epsilon(&sub, 1, 2, 3)?;
    let e312 = epsilon(&sub, 3, 1, 2)?;
    let e231 = epsilon(&sub, 2, 3, 1)?;
    let l12 = pairwise_linking(&sub, 1, 2)?;
    let l13 = pairwise_linking(&sub, 1, 3)?;
    let l23 = pairwise_linking(&sub, 2, 3)?;
    let modulus = gcd(gcd(l12, l13), l23);
    Ok(TripleDetail {
        triple: (i, j, k),
        e123,
        e312,
        e231,
        linking: (l12, l13, l23),
        mu: TripleLinking::new(e123 + e312 + e231, modulus),
    })
}

/// Milnor's triple linking number of components `i < j < k`.
pub fn mu3(d: &CComplexDescriptor, i: usize, j: usize, k: usize) -> Result<TripleLinking> {
    mu3_detail(d, i, j, k).map(|t| t.mu)
}

/// `mu3` for every triple `i < j < k`, in lexicographic order. Empty for
/// fewer than three components.
pub fn mu3_all(d: &CComplexDescriptor) -> Vec<((usize, usize, usize), TripleLinking)> {
    let n = d.components();
    let mut out = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            for k in j + 1..=n {
                let mu = mu3(d, i, j, k).expect("indices are in range and ordered");
                out.push(((i, j, k), mu));
            }
        }
    }
    out
}
