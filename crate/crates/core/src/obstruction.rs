//! Deciding when two links admit equivalent C-complexes.
//!
//! * Two components: equivalent C-complexes exist iff the linking numbers
//!   agree ([`theorem1_decide`], constructive).
//! * Any number of components with all linking numbers zero: they exist iff
//!   every triple linking number agrees ([`theorem2_decide`]).
//! * In general, agreement of linking numbers and of triple linking numbers
//!   modulo the gcd is only necessary ([`prop_mu123_check`]).

use std::fmt;

use serde::Serialize;

use crate::descriptor::CComplexDescriptor;
use crate::error::{Error, Result, Side};
use crate::invariants::{gcd, linking_numbers, mu3_all, TripleLinking};
use crate::moves::{make_equivalent_pair, EquivalentPair};
use crate::verdict::Verdict;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct LinkingMismatch {
    pub pair: (usize, usize),
    pub left: i64,
    pub right: i64,
}

impl fmt::Display for LinkingMismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "lk({},{}): {} \u{2260} {}",
            self.pair.0, self.pair.1, self.left, self.right
        )
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Mu3Mismatch {
    pub triple: (usize, usize, usize),
    pub left: i64,
    pub right: i64,
}

impl fmt::Display for Mu3Mismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (i, j, k) = self.triple;
        write!(f, "({i},{j},{k}): {} \u{2260} {}", self.left, self.right)
    }
}

/// Two-component decision. A YES carries the constructed equivalent pair.
pub fn theorem1_decide(
    d: &CComplexDescriptor,
    e: &CComplexDescriptor,
) -> Result<Verdict<EquivalentPair, LinkingMismatch>> {
    make_equivalent_pair(d, e)
}

fn require_vanishing(d: &CComplexDescriptor, side: Side) -> Result<()> {
    match linking_numbers(d).into_iter().find(|(_, lk)| *lk != 0) {
        Some((pair, value)) => Err(Error::NonvanishingLinking { side, pair, value }),
        None => Ok(()),
    }
}

/// Decision for links whose pairwise linking numbers all vanish. YES lists
/// the agreed triple linking numbers; NO lists every disagreeing triple.
/// No witness C-complexes are built.
#[allow(clippy::type_complexity)]
pub fn theorem2_decide(
    d: &CComplexDescriptor,
    e: &CComplexDescriptor,
) -> Result<Verdict<Vec<((usize, usize, usize), i64)>, Vec<Mu3Mismatch>>> {
    if d.components() != e.components() {
        return Err(Error::WrongComponentCount {
            expected: d.components(),
            found: e.components(),
        });
    }
    require_vanishing(d, Side::Left)?;
    require_vanishing(e, Side::Right)?;
    let (md, me) = (mu3_all(d), mu3_all(e));
    let mismatches: Vec<Mu3Mismatch> = md
        .iter()
        .zip(&me)
        .filter(|((_, a), (_, b))| a.value != b.value)
        .map(|((t, a), (_, b))| Mu3Mismatch {
            triple: *t,
            left: a.value,
            right: b.value,
        })
        .collect();
    if mismatches.is_empty() {
        Ok(Verdict::Yes(md.into_iter().map(|(t, mu)| (t, mu.value)).collect()))
    } else {
        Ok(Verdict::No(mismatches))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct PairCheck {
    pub pair: (usize, usize),
    pub left: i64,
    pub right: i64,
    pub pass: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct TripleCheck {
    pub triple: (usize, usize, usize),
    pub left: TripleLinking,
    pub right: TripleLinking,
    /// The modulus the two values were compared under.
    pub modulus: i64,
    pub pass: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckOutcome {
    Obstructed,
    /// Necessary conditions hold; this is not a proof of equivalence.
    NoObstructionFound,
}

impl fmt::Display for CheckOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CheckOutcome::Obstructed => "obstructed",
            CheckOutcome::NoObstructionFound => "no obstruction found",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Mu123Report {
    pub linking: Vec<PairCheck>,
    pub triples: Vec<TripleCheck>,
}

impl Mu123Report {
    pub fn outcome(&self) -> CheckOutcome {
        if self.linking.iter().all(|c| c.pass) && self.triples.iter().all(|c| c.pass) {
            CheckOutcome::NoObstructionFound
        } else {
            CheckOutcome::Obstructed
        }
    }

    pub fn all_pass(&self) -> bool {
        self.outcome() == CheckOutcome::NoObstructionFound
    }
}

/// Necessary conditions for equivalent C-complexes: equal linking numbers
/// and triple linking numbers congruent modulo the gcd of the linking
/// numbers involved.
pub fn prop_mu123_check(d: &CComplexDescriptor, e: &CComplexDescriptor) -> Result<Mu123Report> {
    if d.components() != e.components() {
        return Err(Error::ComponentCountMismatch {
            left: d.components(),
            right: e.components(),
        });
    }
    let linking = linking_numbers(d)
        .into_iter()
        .zip(linking_numbers(e))
        .map(|((pair, left), (_, right))| PairCheck {
            pair,
            left,
            right,
            pass: left == right,
        })
        .collect();
    let triples = mu3_all(d)
        .into_iter()
        .zip(mu3_all(e))
        .map(|((triple, left), (_, right))| {
            let modulus = gcd(left.modulus, right.modulus);
            TripleCheck {
                triple,
                left,
                right,
                modulus,
                pass: TripleLinking::congruent(left.value, right.value, modulus),
            }
        })
        .collect();
    Ok(Mu123Report { linking, triples })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cc(genus: &[u64], words: &[&str]) -> CComplexDescriptor {
        CComplexDescriptor::from_claspwords(genus, words).unwrap()
    }

    fn borromean() -> CComplexDescriptor {
        cc(&[0, 0, 0], &["c1- c3- c2+ c4+", "c1- c2+", "c3- c4+"])
    }

    #[test]
    fn theorem1_cases() {
        let a = cc(&[0, 0], &["a+ b+ c-", "c- b+ a+"]);
        let b = cc(&[2, 0], &["x+", "x+"]);
        let v = theorem1_decide(&a, &b).unwrap();
        let pair = v.yes().unwrap();
        assert!(pair.certificate.verify(&pair.left.descriptor, &pair.right.descriptor));

        let u = CComplexDescriptor::split(&[0, 0]).unwrap();
        let three = cc(&[0, 0], &["a+ b+ c+", "a+ b+ c+"]);
        assert_eq!(
            theorem1_decide(&u, &three).unwrap(),
            Verdict::No(LinkingMismatch {
                pair: (1, 2),
                left: 0,
                right: 3
            })
        );
        assert!(theorem1_decide(&a, &a).unwrap().is_yes());
        assert!(theorem1_decide(&borromean(), &a).is_err());
    }

    #[test]
    fn borromean_is_not_the_unlink() {
        let u = CComplexDescriptor::split(&[0, 0, 0]).unwrap();
        let v = theorem2_decide(&borromean(), &u).unwrap();
        let mismatch = v.no().unwrap();
        assert_eq!(
            mismatch,
            &[Mu3Mismatch {
                triple: (1, 2, 3),
                left: 1,
                right: 0
            }]
        );
        assert_eq!(mismatch[0].to_string(), "(1,2,3): 1 \u{2260} 0");
    }

    #[test]
    fn theorem2_relabel_and_doubling() {
        let b = borromean();
        let r = cc(&[0, 0, 0], &["z- x- y+ w+", "z- y+", "x- w+"]);
        assert!(theorem2_decide(&b, &r).unwrap().is_yes());
        let doubled = cc(
            &[0, 0, 0],
            &["c1- c3- c2+ c4+ c5- c7- c6+ c8+", "c1- c2+ c5- c6+", "c3- c4+ c7- c8+"],
        );
        let v = theorem2_decide(&doubled, &b).unwrap();
        assert_eq!(v.no().unwrap()[0].left, 2);
        assert_eq!(v.no().unwrap()[0].right, 1);
    }

    #[test]
    fn theorem2_refuses_linked_input() {
        let linked = cc(&[0, 0, 0], &["a+", "a+", ""]);
        assert_eq!(
            theorem2_decide(&borromean(), &linked),
            Err(Error::NonvanishingLinking {
                side: Side::Right,
                pair: (1, 2),
                value: 1
            })
        );
        assert!(matches!(
            theorem2_decide(&borromean(), &CComplexDescriptor::split(&[0, 0]).unwrap()),
            Err(Error::WrongComponentCount { .. })
        ));
    }

    #[test]
    fn prop_check_reports() {
        let u = CComplexDescriptor::split(&[0, 0, 0]).unwrap();
        let report = prop_mu123_check(&borromean(), &u).unwrap();
        assert_eq!(report.outcome(), CheckOutcome::Obstructed);
        assert!(!report.triples[0].pass);
        assert!(report.linking.iter().all(|c| c.pass));

        let b = borromean();
        assert!(prop_mu123_check(&b, &b).unwrap().all_pass());
        assert!(matches!(
            prop_mu123_check(&b, &CComplexDescriptor::split(&[0]).unwrap()),
            Err(Error::ComponentCountMismatch { .. })
        ));
    }

    #[test]
    fn prop_check_compares_mod_gcd() {
        // lk12 = 2 on both sides; the epsilon sums differ by 2.
        let a = cc(&[0, 0, 0], &["a+ b+", "a+ b+", ""]);
        let b = cc(&[0, 0, 0], &["p- a+ b+ q+", "a+ b+", "p- q+"]);
        assert_eq!(crate::invariants::mu3_detail(&b, 1, 2, 3).unwrap().e231, 2);
        let report = prop_mu123_check(&a, &b).unwrap();
        assert_eq!(report.triples[0].modulus, 2);
        assert!(report.all_pass());
    }
}
