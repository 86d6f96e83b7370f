//! The class Av(2143, 4231): membership, exhaustive enumeration, simple
//! member classification, the three-letter encoding of the grid class D, and
//! the structural membership test built from inflation rules.

mod enumerate;
mod inflation;
mod simple;
mod words;

use thiserror::Error;

use crate::perm::{perm, Permutation};

pub use enumerate::{
    count_report, enumerate_class, members_by_length, simple_members, simple_members_by_length,
    CountMethod, CountReport, CountRow,
};
pub use inflation::{
    check_inflation, inflation_profile, is_member_structural, BlockClass, InflationProfile,
};
pub use simple::{classify_simple, Regions, SimpleType};
pub use words::{
    b_encodable, count_words, decode_word, encode_d, enumerate_words, valid_simple_word, Letter,
    Word,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassError {
    #[error("{0} has length below 4")]
    TooShort(Permutation),
    #[error("{0} is not simple")]
    NotSimple(Permutation),
    #[error("{0} is not in Av(2143, 4231)")]
    NotMember(Permutation),
    #[error("{0} is not in the grid class D")]
    NotInD(Permutation),
    #[error("simple member {0} matches none of the known forms")]
    Unclassifiable(Permutation),
    #[error(
        "type of {perm} from D-membership ({by_grid}) disagrees with its cell sizes ({by_regions})"
    )]
    InconsistentType {
        perm: Permutation,
        by_grid: u8,
        by_regions: u8,
    },
    #[error("{0:?} has no word encoding")]
    NoWordsForKind(SimpleType),
    #[error("invalid letter `{0}`")]
    InvalidLetter(char),
    #[error("empty word")]
    EmptyWord,
}

/// 2143 and 4231.
pub fn basis() -> [Permutation; 2] {
    [perm("2143"), perm("4231")]
}

/// Basis of E = Av(2143, 312), the allowed inflations of a first point.
pub fn class_e_basis() -> [Permutation; 2] {
    [perm("2143"), perm("312")]
}

/// Basis of F = Av(2143, 231), the allowed inflations of a last point.
pub fn class_f_basis() -> [Permutation; 2] {
    [perm("2143"), perm("231")]
}

pub fn is_member(p: &Permutation) -> bool {
    p.avoids_all(&basis())
}
