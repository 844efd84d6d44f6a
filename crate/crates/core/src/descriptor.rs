//! The abstract C-complex: per-component genus, signed clasps and claspwords.
//!
//! A [`CComplexDescriptor`] is only obtainable through validation, so every
//! value of the type satisfies the C-complex axioms:
//!
//! * every clasp joins two distinct components;
//! * every clasp is read exactly once in the claspword of each of its two
//!   ends and nowhere else.
//!
//! Component indices are 1-based throughout the public API. Claspwords are
//! stored with an implicit basepoint; every comparison done elsewhere in the
//! crate treats them cyclically.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::hash::{Hash, Hasher};

use serde::{Serialize, Serializer};

use crate::error::{Error, Result, ValidationError};

/// Name of a clasp, a nonempty token over `[A-Za-z0-9_]`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ClaspLabel(String);

impl ClaspLabel {
    pub fn new(name: impl Into<String>) -> Result<Self, ValidationError> {
        let name = name.into();
        if is_label_token(&name) {
            Ok(ClaspLabel(name))
        } else {
            Err(ValidationError::InvalidLabel(name))
        }
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

pub(crate) fn is_label_token(s: &str) -> bool {
    !s.is_empty() && s.bytes().all(|b| b.is_ascii_alphanumeric() || b == b'_')
}

impl fmt::Display for ClaspLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl Serialize for ClaspLabel {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.0)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    pub fn from_int(value: i64) -> Option<Sign> {
        match value {
            1 => Some(Sign::Positive),
            -1 => Some(Sign::Negative),
            _ => None,
        }
    }

    pub fn value(self) -> i64 {
        match self {
            Sign::Positive => 1,
            Sign::Negative => -1,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Sign::Positive => '+',
            Sign::Negative => '-',
        }
    }
}

impl Serialize for Sign {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_i64(self.value())
    }
}

/// A clasp between two distinct components, with its sign.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct SignedClasp {
    pub label: ClaspLabel,
    pub sign: Sign,
    /// Unordered end pair, stored with `ends.0 < ends.1`.
    pub ends: (usize, usize),
}

impl SignedClasp {
    pub fn touches(&self, component: usize) -> bool {
        self.ends.0 == component || self.ends.1 == component
    }

    /// The end that is not `component`. Assumes `component` is an end.
    pub fn partner(&self, component: usize) -> usize {
        if self.ends.0 == component {
            self.ends.1
        } else {
            self.ends.0
        }
    }
}

/// The sequence of clasps met along one boundary component.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct ClaspWord(Vec<ClaspLabel>);

impl ClaspWord {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn labels(&self) -> &[ClaspLabel] {
        &self.0
    }

    pub fn iter(&self) -> std::slice::Iter<'_, ClaspLabel> {
        self.0.iter()
    }

    pub fn position(&self, label: &ClaspLabel) -> Option<usize> {
        self.0.iter().position(|l| l == label)
    }

    pub(crate) fn labels_mut(&mut self) -> &mut Vec<ClaspLabel> {
        &mut self.0
    }
}

impl<'a> IntoIterator for &'a ClaspWord {
    type Item = &'a ClaspLabel;
    type IntoIter = std::slice::Iter<'a, ClaspLabel>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

/// Unvalidated descriptor data, as produced by a parser or by hand.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RawDescriptor {
    pub components: usize,
    pub genus: Vec<i64>,
    pub clasps: Vec<RawClasp>,
    pub words: Vec<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RawClasp {
    pub label: String,
    pub sign: i64,
    pub ends: (i64, i64),
}

impl RawDescriptor {
    /// Builds raw data from signed claspwords, inferring each clasp's ends
    /// from the two words that contain it. Word `k` (0-based position in
    /// `words`) belongs to component `k + 1`.
    pub fn from_signed_words(
        genus: Vec<i64>,
        words: Vec<Vec<(String, Sign)>>,
    ) -> Result<RawDescriptor, ValidationError> {
        struct Seen {
            sign: Sign,
            comps: Vec<usize>,
        }
        let mut order: Vec<String> = Vec::new();
        let mut seen: BTreeMap<String, Seen> = BTreeMap::new();
        for (idx, word) in words.iter().enumerate() {
            let component = idx + 1;
            for (label, sign) in word {
                if !is_label_token(label) {
                    return Err(ValidationError::InvalidLabel(label.clone()));
                }
                match seen.get_mut(label) {
                    None => {
                        order.push(label.clone());
                        seen.insert(
                            label.clone(),
                            Seen {
                                sign: *sign,
                                comps: vec![component],
                            },
                        );
                    }
                    Some(entry) => {
                        if entry.comps.contains(&component) {
                            return Err(ValidationError::SelfClasp {
                                label: label.clone(),
                                component,
                            });
                        }
                        if entry.comps.len() >= 2 {
                            return Err(ValidationError::ExtraOccurrence {
                                label: label.clone(),
                                component,
                            });
                        }
                        if entry.sign != *sign {
                            return Err(ValidationError::SignMismatch {
                                label: label.clone(),
                            });
                        }
                        entry.comps.push(component);
                    }
                }
            }
        }
        let mut clasps = Vec::with_capacity(order.len());
        for label in order {
            let entry = &seen[&label];
            if entry.comps.len() < 2 {
                // The only word containing it is one end; the other end is unknown.
                return Err(ValidationError::MissingOccurrence {
                    label,
                    component: entry.comps[0],
                });
            }
            clasps.push(RawClasp {
                label,
                sign: entry.sign.value(),
                ends: (entry.comps[0] as i64, entry.comps[1] as i64),
            });
        }
        Ok(RawDescriptor {
            components: words.len(),
            genus,
            clasps,
            words: words
                .into_iter()
                .map(|w| w.into_iter().map(|(l, _)| l).collect())
                .collect(),
        })
    }
}

/// A validated abstract C-complex.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CComplexDescriptor {
    genus: Vec<u64>,
    clasps: BTreeMap<ClaspLabel, SignedClasp>,
    words: Vec<ClaspWord>,
}

/// Checks every C-complex axiom and returns the validated descriptor.
pub fn validate(raw: &RawDescriptor) -> Result<CComplexDescriptor, ValidationError> {
    use ValidationError as V;

    let n = raw.components;
    if n == 0 {
        return Err(V::NoComponents);
    }
    if raw.genus.len() != n {
        return Err(V::GenusLength {
            expected: n,
            found: raw.genus.len(),
        });
    }
    let mut genus = Vec::with_capacity(n);
    for (i, &g) in raw.genus.iter().enumerate() {
        if g < 0 {
            return Err(V::NegativeGenus {
                component: i + 1,
                genus: g,
            });
        }
        genus.push(g as u64);
    }
    if raw.words.len() != n {
        return Err(V::WordCount {
            expected: n,
            found: raw.words.len(),
        });
    }

    let mut clasps = BTreeMap::new();
    for rc in &raw.clasps {
        let label = ClaspLabel::new(rc.label.clone())?;
        if clasps.contains_key(&label) {
            return Err(V::DuplicateLabel(rc.label.clone()));
        }
        let sign = Sign::from_int(rc.sign).ok_or_else(|| V::InvalidSign {
            label: rc.label.clone(),
            sign: rc.sign,
        })?;
        for end in [rc.ends.0, rc.ends.1] {
            if end < 1 || end > n as i64 {
                return Err(V::EndOutOfRange {
                    label: rc.label.clone(),
                    end,
                    n,
                });
            }
        }
        let (a, b) = (rc.ends.0 as usize, rc.ends.1 as usize);
        if a == b {
            return Err(V::SelfClasp {
                label: rc.label.clone(),
                component: a,
            });
        }
        clasps.insert(
            label.clone(),
            SignedClasp {
                label,
                sign,
                ends: (a.min(b), a.max(b)),
            },
        );
    }

    let mut words = Vec::with_capacity(n);
    for (idx, raw_word) in raw.words.iter().enumerate() {
        let component = idx + 1;
        let mut in_word = BTreeSet::new();
        let mut word = Vec::with_capacity(raw_word.len());
        for name in raw_word {
            let label = ClaspLabel::new(name.clone())?;
            let clasp = clasps.get(&label).ok_or_else(|| V::UnknownLabel {
                label: name.clone(),
                component,
            })?;
            if !clasp.touches(component) || !in_word.insert(label.clone()) {
                return Err(V::ExtraOccurrence {
                    label: name.clone(),
                    component,
                });
            }
            word.push(label);
        }
        words.push(ClaspWord(word));
    }

    for clasp in clasps.values() {
        for end in [clasp.ends.0, clasp.ends.1] {
            if words[end - 1].position(&clasp.label).is_none() {
                return Err(V::MissingOccurrence {
                    label: clasp.label.to_string(),
                    component: end,
                });
            }
        }
    }

    Ok(CComplexDescriptor {
        genus,
        clasps,
        words,
    })
}

impl CComplexDescriptor {
    /// Builds a descriptor from signed claspwords written in the text
    /// format's letter syntax, e.g. `["c1- c3- c2+ c4+", "c1- c2+", "c3- c4+"]`.
    pub fn from_claspwords(genus: &[u64], words: &[&str]) -> Result<Self, ValidationError> {
        let mut signed = Vec::with_capacity(words.len());
        for w in words {
            let mut letters = Vec::new();
            for tok in w.split_whitespace() {
                letters.push(
                    crate::text::parse_letter(tok)
                        .ok_or_else(|| ValidationError::InvalidLabel(tok.to_string()))?,
                );
            }
            signed.push(letters);
        }
        let raw = RawDescriptor::from_signed_words(
            genus.iter().map(|&g| g as i64).collect(),
            signed,
        )?;
        validate(&raw)
    }

    /// The descriptor with `n` components, the given genera and no clasps.
    pub fn split(genus: &[u64]) -> Result<Self, ValidationError> {
        if genus.is_empty() {
            return Err(ValidationError::NoComponents);
        }
        Ok(CComplexDescriptor {
            genus: genus.to_vec(),
            clasps: BTreeMap::new(),
            words: vec![ClaspWord::default(); genus.len()],
        })
    }

    pub fn components(&self) -> usize {
        self.words.len()
    }

    pub fn genus(&self) -> &[u64] {
        &self.genus
    }

    pub fn clasps(&self) -> impl ExactSizeIterator<Item = &SignedClasp> {
        self.clasps.values()
    }

    pub fn clasp_count(&self) -> usize {
        self.clasps.len()
    }

    pub fn clasp(&self, label: &ClaspLabel) -> Option<&SignedClasp> {
        self.clasps.get(label)
    }

    /// Claspword of component `k` (1-based). Panics if `k` is out of range.
    pub fn word(&self, k: usize) -> &ClaspWord {
        &self.words[k - 1]
    }

    pub fn words(&self) -> &[ClaspWord] {
        &self.words
    }

    /// The clasps of word `k` in reading order.
    pub fn letters(&self, k: usize) -> impl Iterator<Item = &SignedClasp> + '_ {
        self.words[k - 1].iter().map(move |l| &self.clasps[l])
    }

    pub fn check_index(&self, k: usize) -> Result<()> {
        if k == 0 || k > self.components() {
            Err(Error::IndexOutOfRange {
                index: k,
                n: self.components(),
            })
        } else {
            Ok(())
        }
    }

    /// Stable fingerprint of the descriptor, derived from its text serialization.
    pub fn fingerprint(&self) -> u64 {
        let mut h = std::collections::hash_map::DefaultHasher::new();
        crate::text::serialize(self).hash(&mut h);
        h.finish()
    }

    pub fn to_raw(&self) -> RawDescriptor {
        RawDescriptor {
            components: self.components(),
            genus: self.genus.iter().map(|&g| g as i64).collect(),
            clasps: self
                .clasps
                .values()
                .map(|c| RawClasp {
                    label: c.label.to_string(),
                    sign: c.sign.value(),
                    ends: (c.ends.0 as i64, c.ends.1 as i64),
                })
                .collect(),
            words: self
                .words
                .iter()
                .map(|w| w.iter().map(|l| l.to_string()).collect())
                .collect(),
        }
    }

    /// Renames clasps by the bijection `map`, which must be defined on
    /// exactly this descriptor's labels.
    pub fn relabel(&self, map: &BTreeMap<ClaspLabel, ClaspLabel>) -> Result<Self> {
        if map.len() != self.clasps.len() {
            return Err(Error::NonBijective(format!(
                "map has {} entries for {} clasps",
                map.len(),
                self.clasps.len()
            )));
        }
        let mut image = BTreeSet::new();
        for (from, to) in map {
            if !self.clasps.contains_key(from) {
                return Err(Error::NonBijective(format!("{from} is not a clasp")));
            }
            if !image.insert(to) {
                return Err(Error::NonBijective(format!("{to} is hit twice")));
            }
        }
        let clasps = self
            .clasps
            .values()
            .map(|c| {
                let label = map[&c.label].clone();
                (
                    label.clone(),
                    SignedClasp {
                        label,
                        sign: c.sign,
                        ends: c.ends,
                    },
                )
            })
            .collect();
        let words = self
            .words
            .iter()
            .map(|w| ClaspWord(w.iter().map(|l| map[l].clone()).collect()))
            .collect();
        Ok(CComplexDescriptor {
            genus: self.genus.clone(),
            clasps,
            words,
        })
    }

    /// Rotates word `k` left by `offset` letters (a basepoint change).
    pub fn cyclic_shift(&self, k: usize, offset: i64) -> Result<Self> {
        self.check_index(k)?;
        let mut out = self.clone();
        let word = &mut out.words[k - 1].0;
        if !word.is_empty() {
            let s = offset.rem_euclid(word.len() as i64) as usize;
            word.rotate_left(s);
        }
        Ok(out)
    }

    /// Restricts to the components listed in `selection`, renumbered by
    /// their position in it. Clasps with an end outside the selection are
    /// dropped along with their letters.
    pub fn sublink(&self, selection: &[usize]) -> Result<Self> {
        let mut new_index = vec![0usize; self.components() + 1];
        for (pos, &k) in selection.iter().enumerate() {
            self.check_index(k)?;
            if new_index[k] != 0 {
                return Err(Error::DuplicateIndex(k));
            }
            new_index[k] = pos + 1;
        }
        if selection.is_empty() {
            return Err(Error::Invalid(ValidationError::NoComponents));
        }
        let clasps: BTreeMap<_, _> = self
            .clasps
            .values()
            .filter(|c| new_index[c.ends.0] != 0 && new_index[c.ends.1] != 0)
            .map(|c| {
                let (a, b) = (new_index[c.ends.0], new_index[c.ends.1]);
                (
                    c.label.clone(),
                    SignedClasp {
                        label: c.label.clone(),
                        sign: c.sign,
                        ends: (a.min(b), a.max(b)),
                    },
                )
            })
            .collect();
        let words = selection
            .iter()
            .map(|&k| {
                ClaspWord(
                    self.words[k - 1]
                        .iter()
                        .filter(|l| clasps.contains_key(*l))
                        .cloned()
                        .collect(),
                )
            })
            .collect();
        Ok(CComplexDescriptor {
            genus: selection.iter().map(|&k| self.genus[k - 1]).collect(),
            clasps,
            words,
        })
    }

    pub(crate) fn genus_mut(&mut self) -> &mut Vec<u64> {
        &mut self.genus
    }

    pub(crate) fn word_mut(&mut self, k: usize) -> &mut ClaspWord {
        &mut self.words[k - 1]
    }

    pub(crate) fn insert_clasp(&mut self, clasp: SignedClasp) {
        self.clasps.insert(clasp.label.clone(), clasp);
    }
}

impl fmt::Display for CComplexDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::text::serialize(self))
    }
}

impl Serialize for CComplexDescriptor {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct View<'a> {
            components: usize,
            genus: &'a [u64],
            clasps: Vec<&'a SignedClasp>,
            words: Vec<Vec<String>>,
        }
        View {
            components: self.components(),
            genus: &self.genus,
            clasps: self.clasps.values().collect(),
            words: (1..=self.components())
                .map(|k| {
                    self.letters(k)
                        .map(|c| format!("{}{}", c.label, c.sign.symbol()))
                        .collect()
                })
                .collect(),
        }
        .serialize(s)
    }
}
