//! A combinatorial engine for C-complexes of links.
//!
//! A C-complex is described abstractly by its component genera and its
//! claspwords ([`CComplexDescriptor`]). From that data the crate computes
//! pairwise linking numbers and Milnor triple linking numbers (through a
//! degree-two Magnus expansion), decides equivalence of C-complexes, applies
//! the genus-trading moves on claspwords, and decides when two links admit
//! equivalent C-complexes.
//!
//! ```
//! use ccomplex::{parse, mu3, TripleLinking};
//!
//! let borromean = parse(
//!     "ccomplex v1\ncomponents 3\ngenus 0 0 0\n\
//!      word 1: c1- c3- c2+ c4+\nword 2: c1- c2+\nword 3: c3- c4+\n",
//! )
//! .unwrap();
//! assert_eq!(mu3(&borromean, 1, 2, 3).unwrap(), TripleLinking::new(1, 0));
//! ```

pub mod descriptor;
pub mod equivalence;
pub mod error;
pub mod invariants;
pub mod moves;
pub mod obstruction;
pub mod random;
pub mod series;
pub mod text;
pub mod verdict;

pub use descriptor::{
    validate, CComplexDescriptor, ClaspLabel, ClaspWord, RawClasp, RawDescriptor, Sign, SignedClasp,
};
pub use equivalence::{
    decide_equivalent, decide_equivalent_bruteforce, EquivalenceCertificate, EquivalenceVerdict,
    Refutation, DEFAULT_BRUTEFORCE_BOUND,
};
pub use error::{Error, Result, Side, ValidationError};
pub use invariants::{
    epsilon, full_substitution_word, linking_numbers, mu3, mu3_all, mu3_detail, pairwise_linking,
    substitution_word, TripleDetail, TripleLinking,
};
pub use moves::{
    add_cancel_pair, canonicalize_2comp, is_canonical_2comp, make_equivalent_pair, stabilize,
    transpose, EquivalentPair, Move, MoveRecord, MoveTranscript, NormalizedSide,
};
pub use obstruction::{
    prop_mu123_check, theorem1_decide, theorem2_decide, CheckOutcome, LinkingMismatch,
    Mu123Report, Mu3Mismatch,
};
pub use random::{random_descriptor, random_descriptor_unlinked};
pub use series::{magnus_expand, GroupLetter, GroupWord, TruncatedSeries};
pub use text::{parse, serialize, ParseError, ParseErrorKind};
pub use verdict::Verdict;
