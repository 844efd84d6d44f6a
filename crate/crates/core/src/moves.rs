//! Modifications of a C-complex that keep the underlying link's invariants,
//! and the two-component normal form built from them.
//!
//! * [`transpose`] swaps two consecutive clasps of one word that share a
//!   partner component `j`, at the cost of one genus on `j`.
//! * [`add_cancel_pair`] inserts a positive and a negative clasp between two
//!   components, adjacent in both words.
//! * [`stabilize`] adds a handle to one surface.
//!
//! Positions in words are 1-based for letters and 0-based for insertion
//! points (the number of letters before the insertion).

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::descriptor::{CComplexDescriptor, ClaspLabel, Sign, SignedClasp};
use crate::equivalence::{decide_equivalent, EquivalenceCertificate};
use crate::error::{Error, Result};
use crate::invariants::pairwise_linking;
use crate::obstruction::LinkingMismatch;
use crate::verdict::Verdict;

/// Swaps the letters at cyclic positions `position` and `position + 1` of
/// word `component`. Both clasps must have the same partner `j`; the genus
/// of `j` goes up by one.
pub fn transpose(d: &CComplexDescriptor, component: usize, position: usize) -> Result<CComplexDescriptor> {
    d.check_index(component)?;
    let len = d.word(component).len();
    if len < 2 || position == 0 || position > len {
        return Err(Error::PositionOutOfRange {
            component,
            position,
            len,
        });
    }
    let (p, q) = (position - 1, position % len);
    let word = d.word(component).labels();
    let (first, second) = (d.clasp(&word[p]).unwrap(), d.clasp(&word[q]).unwrap());
    let (fp, sp) = (first.partner(component), second.partner(component));
    if fp != sp {
        return Err(Error::DifferentPartners {
            first: first.label.to_string(),
            second: second.label.to_string(),
            first_partner: fp,
            second_partner: sp,
        });
    }
    let mut out = d.clone();
    out.word_mut(component).labels_mut().swap(p, q);
    out.genus_mut()[fp - 1] += 1;
    Ok(out)
}

/// The first `count` labels `d1, d2, ...` not used in `d`.
pub fn fresh_labels(d: &CComplexDescriptor, count: usize) -> Vec<ClaspLabel> {
    (1..)
        .map(|i| ClaspLabel::new(format!("d{i}")).unwrap())
        .filter(|l| d.clasp(l).is_none())
        .take(count)
        .collect()
}

/// Inserts a canceling pair of clasps `d+ d'-` between components `i` and
/// `j`, at insertion point `p` of word `i` and `q` of word `j`.
pub fn add_cancel_pair(
    d: &CComplexDescriptor,
    i: usize,
    j: usize,
    p: usize,
    q: usize,
) -> Result<CComplexDescriptor> {
    d.check_index(i)?;
    d.check_index(j)?;
    if i == j {
        return Err(Error::EqualIndices(i));
    }
    for (component, position) in [(i, p), (j, q)] {
        let len = d.word(component).len();
        if position > len {
            return Err(Error::PositionOutOfRange {
                component,
                position,
                len,
            });
        }
    }
    let labels = fresh_labels(d, 2);
    let (pos, neg) = (labels[0].clone(), labels[1].clone());
    let mut out = d.clone();
    for (label, sign) in [(&pos, Sign::Positive), (&neg, Sign::Negative)] {
        out.insert_clasp(SignedClasp {
            label: label.clone(),
            sign,
            ends: (i.min(j), i.max(j)),
        });
    }
    for (component, at) in [(i, p), (j, q)] {
        let word = out.word_mut(component).labels_mut();
        word.insert(at, neg.clone());
        word.insert(at, pos.clone());
    }
    Ok(out)
}

/// Raises the genus of component `i` by one.
pub fn stabilize(d: &CComplexDescriptor, i: usize) -> Result<CComplexDescriptor> {
    d.check_index(i)?;
    let mut out = d.clone();
    out.genus_mut()[i - 1] += 1;
    Ok(out)
}

/// One step of a transcript.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Move {
    Transpose {
        component: usize,
        position: usize,
    },
    CancelPair {
        first: usize,
        second: usize,
        first_position: usize,
        second_position: usize,
    },
    Stabilize {
        component: usize,
    },
    Relabel {
        map: BTreeMap<ClaspLabel, ClaspLabel>,
    },
}

impl Move {
    pub fn apply(&self, d: &CComplexDescriptor) -> Result<CComplexDescriptor> {
        match self {
            Move::Transpose {
                component,
                position,
            } => transpose(d, *component, *position),
            Move::CancelPair {
                first,
                second,
                first_position,
                second_position,
            } => add_cancel_pair(d, *first, *second, *first_position, *second_position),
            Move::Stabilize { component } => stabilize(d, *component),
            Move::Relabel { map } => d.relabel(map),
        }
    }
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Move::Transpose {
                component,
                position,
            } => write!(f, "transpose {component},{position}"),
            Move::CancelPair {
                first,
                second,
                first_position,
                second_position,
            } => write!(f, "cancel-pair {first},{second},{first_position},{second_position}"),
            Move::Stabilize { component } => write!(f, "stabilize {component}"),
            Move::Relabel { map } => {
                f.write_str("relabel")?;
                for (a, b) in map {
                    write!(f, " {a}->{b}")?;
                }
                Ok(())
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct MoveRecord {
    #[serde(rename = "move")]
    pub step: Move,
    /// Fingerprints of the descriptor before and after the move.
    pub before: u64,
    pub after: u64,
}

/// An ordered log of moves with descriptor fingerprints.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct MoveTranscript {
    records: Vec<MoveRecord>,
}

impl MoveTranscript {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn records(&self) -> &[MoveRecord] {
        &self.records
    }

    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }

    /// Applies `step` to `d`, records it and returns the result.
    pub fn perform(&mut self, d: &CComplexDescriptor, step: Move) -> Result<CComplexDescriptor> {
        let out = step.apply(d)?;
        self.records.push(MoveRecord {
            step,
            before: d.fingerprint(),
            after: out.fingerprint(),
        });
        Ok(out)
    }

    pub fn extend(&mut self, other: &MoveTranscript) {
        self.records.extend(other.records.iter().cloned());
    }

    /// Re-applies every move from `initial`, checking each fingerprint.
    pub fn replay(&self, initial: &CComplexDescriptor) -> Result<CComplexDescriptor> {
        let mut cur = initial.clone();
        for (index, rec) in self.records.iter().enumerate() {
            if cur.fingerprint() != rec.before {
                return Err(Error::ReplayMismatch { index });
            }
            cur = rec.step.apply(&cur)?;
            if cur.fingerprint() != rec.after {
                return Err(Error::ReplayMismatch { index });
            }
        }
        Ok(cur)
    }
}

impl fmt::Display for MoveTranscript {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for rec in &self.records {
            writeln!(f, "{} before={:016x} after={:016x}", rec.step, rec.before, rec.after)?;
        }
        Ok(())
    }
}

fn require_two(d: &CComplexDescriptor) -> Result<()> {
    if d.components() != 2 {
        return Err(Error::WrongComponentCount {
            expected: 2,
            found: d.components(),
        });
    }
    Ok(())
}

/// Both words read the same labels, all positive clasps before all negative ones.
pub fn is_canonical_2comp(d: &CComplexDescriptor) -> bool {
    if d.components() != 2 || d.word(1) != d.word(2) {
        return false;
    }
    let signs: Vec<Sign> = d.letters(1).map(|c| c.sign).collect();
    signs.windows(2).all(|w| !(w[0] == Sign::Negative && w[1] == Sign::Positive))
}

/// Bubble-sorts word `component` by `key` with non-wrapping transpositions.
fn sort_word_by<K: Ord>(
    mut cur: CComplexDescriptor,
    component: usize,
    transcript: &mut MoveTranscript,
    key: impl Fn(&CComplexDescriptor, &ClaspLabel) -> K,
) -> Result<CComplexDescriptor> {
    loop {
        let word = cur.word(component).labels();
        let Some(p) = (0..word.len().saturating_sub(1))
            .find(|&p| key(&cur, &word[p]) > key(&cur, &word[p + 1]))
        else {
            return Ok(cur);
        };
        cur = transcript.perform(
            &cur,
            Move::Transpose {
                component,
                position: p + 1,
            },
        )?;
    }
}

/// Brings a two-component descriptor to the form where both words read
/// `c1+ ... cm+ c(m+1)- ... ck-`, using transpositions (each raising the
/// partner's genus) and a final relabeling. Already canonical input is
/// returned unchanged with an empty transcript.
pub fn canonicalize_2comp(d: &CComplexDescriptor) -> Result<(CComplexDescriptor, MoveTranscript)> {
    require_two(d)?;
    let mut transcript = MoveTranscript::new();
    if is_canonical_2comp(d) {
        return Ok((d.clone(), transcript));
    }
    let cur = sort_word_by(d.clone(), 1, &mut transcript, |d, l| d.clasp(l).unwrap().sign)?;
    let rank: BTreeMap<ClaspLabel, usize> = cur
        .word(1)
        .iter()
        .enumerate()
        .map(|(i, l)| (l.clone(), i))
        .collect();
    let cur = sort_word_by(cur, 2, &mut transcript, |_, l| rank[l])?;
    let map: BTreeMap<ClaspLabel, ClaspLabel> = cur
        .word(1)
        .iter()
        .enumerate()
        .map(|(i, l)| (l.clone(), ClaspLabel::new(format!("c{}", i + 1)).unwrap()))
        .collect();
    let cur = if map.iter().all(|(a, b)| a == b) {
        cur
    } else {
        transcript.perform(&cur, Move::Relabel { map })?
    };
    debug_assert!(is_canonical_2comp(&cur));
    Ok((cur, transcript))
}

/// One side of a pair made equivalent by [`make_equivalent_pair`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NormalizedSide {
    pub descriptor: CComplexDescriptor,
    /// Moves taking the input to canonical form.
    pub canonicalization: MoveTranscript,
    /// Canceling pairs and stabilizations applied afterwards.
    pub equalization: MoveTranscript,
}

impl NormalizedSide {
    pub fn transcript(&self) -> MoveTranscript {
        let mut t = self.canonicalization.clone();
        t.extend(&self.equalization);
        t
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EquivalentPair {
    pub left: NormalizedSide,
    pub right: NormalizedSide,
    /// Takes `left.descriptor` to `right.descriptor`.
    pub certificate: EquivalenceCertificate,
}

fn positive_count(d: &CComplexDescriptor) -> usize {
    d.clasps().filter(|c| c.sign == Sign::Positive).count()
}

/// For two-component descriptors with equal linking numbers, builds
/// equivalent descriptors reachable from each by moves. Otherwise reports
/// the linking mismatch.
pub fn make_equivalent_pair(
    d: &CComplexDescriptor,
    e: &CComplexDescriptor,
) -> Result<Verdict<EquivalentPair, LinkingMismatch>> {
    require_two(d)?;
    require_two(e)?;
    let (lk_d, lk_e) = (pairwise_linking(d, 1, 2)?, pairwise_linking(e, 1, 2)?);
    if lk_d != lk_e {
        return Ok(Verdict::No(LinkingMismatch {
            pair: (1, 2),
            left: lk_d,
            right: lk_e,
        }));
    }
    let (cd, td) = canonicalize_2comp(d)?;
    let (ce, te) = canonicalize_2comp(e)?;
    let target_pos = positive_count(&cd).max(positive_count(&ce));
    let target_genus = [
        cd.genus()[0].max(ce.genus()[0]),
        cd.genus()[1].max(ce.genus()[1]),
    ];
    let equalize = |mut cur: CComplexDescriptor| -> Result<(CComplexDescriptor, MoveTranscript)> {
        let mut t = MoveTranscript::new();
        for m in positive_count(&cur)..target_pos {
            cur = t.perform(
                &cur,
                Move::CancelPair {
                    first: 1,
                    second: 2,
                    first_position: m,
                    second_position: m,
                },
            )?;
        }
        for (idx, &g) in target_genus.iter().enumerate() {
            while cur.genus()[idx] < g {
                cur = t.perform(&cur, Move::Stabilize { component: idx + 1 })?;
            }
        }
        Ok((cur, t))
    };
    let (fd, ed) = equalize(cd)?;
    let (fe, ee) = equalize(ce)?;
    let certificate = decide_equivalent(&fd, &fe)
        .into_yes()
        .expect("normalized two-component descriptors with equal linking are equivalent");
    Ok(Verdict::Yes(EquivalentPair {
        left: NormalizedSide {
            descriptor: fd,
            canonicalization: td,
            equalization: ed,
        },
        right: NormalizedSide {
            descriptor: fe,
            canonicalization: te,
            equalization: ee,
        },
        certificate,
    }))
}
