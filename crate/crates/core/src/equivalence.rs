//! Equivalence of C-complexes.
//!
//! Two descriptors are equivalent when, component by component, the genera
//! agree and the claspwords agree up to a cyclic rotation and one global
//! sign- and end-preserving relabeling of the clasps. Component indices are
//! matched to themselves.
//!
//! The decider fixes rotations component by component. A chosen rotation
//! pairs clasp labels letter by letter; since every clasp sits in exactly
//! two words, those pairings pin the rotation of the partner word whenever
//! it is reached later. Conflicts backtrack.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::descriptor::{CComplexDescriptor, ClaspLabel};
use crate::error::{Error, Result};
use crate::verdict::Verdict;

/// Label bijection plus per-component left rotations taking `F` to `G`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct EquivalenceCertificate {
    /// Maps labels of `F` to labels of `G`.
    pub label_map: BTreeMap<ClaspLabel, ClaspLabel>,
    /// `shifts[k - 1]` rotates word `k` of `F` left before relabeling.
    pub shifts: Vec<usize>,
}

impl EquivalenceCertificate {
    pub fn identity(d: &CComplexDescriptor) -> Self {
        EquivalenceCertificate {
            label_map: d.clasps().map(|c| (c.label.clone(), c.label.clone())).collect(),
            shifts: vec![0; d.components()],
        }
    }

    /// Rotates then relabels `f`.
    pub fn apply(&self, f: &CComplexDescriptor) -> Result<CComplexDescriptor> {
        if self.shifts.len() != f.components() {
            return Err(Error::WrongComponentCount {
                expected: f.components(),
                found: self.shifts.len(),
            });
        }
        let mut out = f.clone();
        for (idx, &s) in self.shifts.iter().enumerate() {
            out = out.cyclic_shift(idx + 1, s as i64)?;
        }
        out.relabel(&self.label_map)
    }

    /// Replays the certificate and checks it lands exactly on `g`.
    pub fn verify(&self, f: &CComplexDescriptor, g: &CComplexDescriptor) -> bool {
        self.apply(f).map(|h| &h == g).unwrap_or(false)
    }

    /// The certificate taking `G` back to `F`.
    pub fn inverse(&self, f: &CComplexDescriptor) -> Self {
        let label_map = self
            .label_map
            .iter()
            .map(|(a, b)| (b.clone(), a.clone()))
            .collect();
        let shifts = self
            .shifts
            .iter()
            .enumerate()
            .map(|(idx, &s)| {
                let len = f.word(idx + 1).len();
                if len == 0 {
                    0
                } else {
                    (len - s % len) % len
                }
            })
            .collect();
        EquivalenceCertificate { label_map, shifts }
    }

    /// `self` (F to G) followed by `next` (G to H).
    pub fn then(&self, next: &Self, f: &CComplexDescriptor) -> Self {
        let label_map = self
            .label_map
            .iter()
            .map(|(a, b)| (a.clone(), next.label_map[b].clone()))
            .collect();
        let shifts = self
            .shifts
            .iter()
            .zip(&next.shifts)
            .enumerate()
            .map(|(idx, (&s, &t))| {
                let len = f.word(idx + 1).len();
                if len == 0 {
                    0
                } else {
                    (s + t) % len
                }
            })
            .collect();
        EquivalenceCertificate { label_map, shifts }
    }
}

impl fmt::Display for EquivalenceCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (idx, s) in self.shifts.iter().enumerate() {
            writeln!(f, "shift {}={}", idx + 1, s)?;
        }
        for (a, b) in &self.label_map {
            writeln!(f, "map {a} -> {b}")?;
        }
        Ok(())
    }
}

/// Why two descriptors are not equivalent.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "reason", rename_all = "snake_case")]
pub enum Refutation {
    ComponentCount { left: usize, right: usize },
    Genus { component: usize, left: u64, right: u64 },
    ClaspCount {
        pair: (usize, usize),
        sign: i64,
        left: usize,
        right: usize,
    },
    /// No rotation tuple yields a consistent relabeling.
    Exhausted,
}

impl fmt::Display for Refutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Refutation::ComponentCount { left, right } => {
                write!(f, "component counts differ: {left} vs {right}")
            }
            Refutation::Genus {
                component,
                left,
                right,
            } => write!(f, "genus of component {component} differs: {left} vs {right}"),
            Refutation::ClaspCount {
                pair,
                sign,
                left,
                right,
            } => write!(
                f,
                "number of {} clasps between components {} and {} differs: {left} vs {right}",
                if *sign > 0 { "positive" } else { "negative" },
                pair.0,
                pair.1
            ),
            Refutation::Exhausted => f.write_str("no rotation and relabeling matches the claspwords"),
        }
    }
}

pub type EquivalenceVerdict = Verdict<EquivalenceCertificate, Refutation>;

fn genus_check(f: &CComplexDescriptor, g: &CComplexDescriptor) -> Option<Refutation> {
    if f.components() != g.components() {
        return Some(Refutation::ComponentCount {
            left: f.components(),
            right: g.components(),
        });
    }
    f.genus()
        .iter()
        .zip(g.genus())
        .enumerate()
        .find(|(_, (a, b))| a != b)
        .map(|(idx, (&left, &right))| Refutation::Genus {
            component: idx + 1,
            left,
            right,
        })
}

fn clasp_census(d: &CComplexDescriptor) -> BTreeMap<((usize, usize), i64), usize> {
    let mut census = BTreeMap::new();
    for c in d.clasps() {
        *census.entry((c.ends, c.sign.value())).or_insert(0) += 1;
    }
    census
}

/// Partial label bijection built up during the search.
struct Matching<'a> {
    f: &'a CComplexDescriptor,
    g: &'a CComplexDescriptor,
    forward: BTreeMap<&'a ClaspLabel, &'a ClaspLabel>,
    backward: BTreeMap<&'a ClaspLabel, &'a ClaspLabel>,
}

impl<'a> Matching<'a> {
    /// Pairs word `k` of `f` rotated by `s` with word `k` of `g`. On success
    /// returns the newly added pairs; on conflict leaves the matching as it was.
    fn try_rotation(&mut self, k: usize, s: usize) -> Option<Vec<&'a ClaspLabel>> {
        let fw = self.f.word(k).labels();
        let gw = self.g.word(k).labels();
        let len = fw.len();
        let mut added = Vec::new();
        for t in 0..len {
            let a = &fw[(s + t) % len];
            let b = &gw[t];
            let ok = match (self.forward.get(a), self.backward.get(b)) {
                (Some(&x), Some(&y)) => x == b && y == a,
                (None, None) => {
                    let (ca, cb) = (self.f.clasp(a).unwrap(), self.g.clasp(b).unwrap());
                    if ca.sign == cb.sign && ca.ends == cb.ends {
                        self.forward.insert(a, b);
                        self.backward.insert(b, a);
                        added.push(a);
                        true
                    } else {
                        false
                    }
                }
                _ => false,
            };
            if !ok {
                self.undo(&added);
                return None;
            }
        }
        Some(added)
    }

    fn undo(&mut self, added: &[&'a ClaspLabel]) {
        for a in added {
            if let Some(b) = self.forward.remove(a) {
                self.backward.remove(b);
            }
        }
    }

    fn certificate(&self, shifts: Vec<usize>) -> EquivalenceCertificate {
        EquivalenceCertificate {
            label_map: self
                .forward
                .iter()
                .map(|(a, b)| ((*a).clone(), (*b).clone()))
                .collect(),
            shifts,
        }
    }
}

fn search(m: &mut Matching<'_>, shifts: &mut Vec<usize>, k: usize) -> bool {
    let n = m.f.components();
    if k > n {
        return true;
    }
    let fw = m.f.word(k).labels();
    let gw = m.g.word(k).labels();
    let len = fw.len();
    if len == 0 {
        shifts.push(0);
        if search(m, shifts, k + 1) {
            return true;
        }
        shifts.pop();
        return false;
    }
    // A clasp of this word already paired by an earlier component forces
    // the rotation.
    let forced = fw.iter().enumerate().find_map(|(pos, a)| {
        m.forward.get(a).map(|b| {
            let target = gw.iter().position(|x| x == *b);
            target.map(|t| (pos + len - t) % len)
        })
    });
    let candidates: Vec<usize> = match forced {
        Some(Some(s)) => vec![s],
        Some(None) => Vec::new(),
        None => (0..len).collect(),
    };
    for s in candidates {
        if let Some(added) = m.try_rotation(k, s) {
            shifts.push(s);
            if search(m, shifts, k + 1) {
                return true;
            }
            shifts.pop();
            m.undo(&added);
        }
    }
    false
}

/// Decides equivalence, returning the lexicographically least certificate
/// (rotation tuple first, then label map) or the first failed condition.
pub fn decide_equivalent(f: &CComplexDescriptor, g: &CComplexDescriptor) -> EquivalenceVerdict {
    if let Some(r) = genus_check(f, g) {
        return Verdict::No(r);
    }
    let (cf, cg) = (clasp_census(f), clasp_census(g));
    for key in cf.keys().chain(cg.keys()) {
        let (left, right) = (
            cf.get(key).copied().unwrap_or(0),
            cg.get(key).copied().unwrap_or(0),
        );
        if left != right {
            return Verdict::No(Refutation::ClaspCount {
                pair: key.0,
                sign: key.1,
                left,
                right,
            });
        }
    }
    let mut m = Matching {
        f,
        g,
        forward: BTreeMap::new(),
        backward: BTreeMap::new(),
    };
    let mut shifts = Vec::with_capacity(f.components());
    if search(&mut m, &mut shifts, 1) {
        Verdict::Yes(m.certificate(shifts))
    } else {
        Verdict::No(Refutation::Exhausted)
    }
}

pub const DEFAULT_BRUTEFORCE_BOUND: usize = 8;

/// Reference decider: tries every rotation tuple in lexicographic order and
/// checks the letterwise-forced relabeling globally. Refuses inputs with
/// more than `bound` clasps on either side.
pub fn decide_equivalent_bruteforce(
    f: &CComplexDescriptor,
    g: &CComplexDescriptor,
    bound: usize,
) -> Result<EquivalenceVerdict> {
    for d in [f, g] {
        if d.clasp_count() > bound {
            return Err(Error::BoundExceeded {
                bound,
                found: d.clasp_count(),
            });
        }
    }
    if let Some(r) = genus_check(f, g) {
        return Ok(Verdict::No(r));
    }
    let n = f.components();
    if (1..=n).any(|k| f.word(k).len() != g.word(k).len()) || f.clasp_count() != g.clasp_count() {
        return Ok(Verdict::No(Refutation::Exhausted));
    }
    let radix: Vec<usize> = (1..=n).map(|k| f.word(k).len().max(1)).collect();
    let mut shifts = vec![0usize; n];
    loop {
        if let Some(cert) = forced_map(f, g, &shifts) {
            return Ok(Verdict::Yes(cert));
        }
        // Odometer increment, last component fastest.
        let mut idx = n;
        loop {
            if idx == 0 {
                return Ok(Verdict::No(Refutation::Exhausted));
            }
            idx -= 1;
            shifts[idx] += 1;
            if shifts[idx] < radix[idx] {
                break;
            }
            shifts[idx] = 0;
        }
    }
}

fn forced_map(
    f: &CComplexDescriptor,
    g: &CComplexDescriptor,
    shifts: &[usize],
) -> Option<EquivalenceCertificate> {
    let mut map: BTreeMap<ClaspLabel, ClaspLabel> = BTreeMap::new();
    for (idx, &s) in shifts.iter().enumerate() {
        let k = idx + 1;
        let fw = f.word(k).labels();
        let gw = g.word(k).labels();
        for t in 0..fw.len() {
            let a = &fw[(s + t) % fw.len()];
            let b = &gw[t];
            match map.get(a) {
                Some(prev) if prev != b => return None,
                Some(_) => {}
                None => {
                    map.insert(a.clone(), b.clone());
                }
            }
        }
    }
    let mut image: Vec<&ClaspLabel> = map.values().collect();
    image.sort();
    image.dedup();
    if image.len() != map.len() || map.len() != f.clasp_count() {
        return None;
    }
    for (a, b) in &map {
        let (ca, cb) = (f.clasp(a)?, g.clasp(b)?);
        if ca.sign != cb.sign || ca.ends != cb.ends {
            return None;
        }
    }
    Some(EquivalenceCertificate {
        label_map: map,
        shifts: shifts.to_vec(),
    })
}
