//! Three-letter encoding of the grid class D (cells increasing, decreasing,
//! increasing from top to bottom). Reading left to right, `a` marks a point of
//! the bottom cell, `b` the middle cell and `c` the top cell.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use super::{ClassError, SimpleType};
use crate::grid::{CellType, GriddingMatrix};
use crate::perm::Permutation;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    A,
    B,
    C,
}

impl Letter {
    pub const ALL: [Letter; 3] = [Letter::A, Letter::B, Letter::C];

    pub fn as_char(self) -> char {
        match self {
            Letter::A => 'a',
            Letter::B => 'b',
            Letter::C => 'c',
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Word(pub Vec<Letter>);

impl Word {
    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// No factor `aa`, `bb` or `cc`.
    pub fn has_no_repeated_letter(&self) -> bool {
        self.0.windows(2).all(|w| w[0] != w[1])
    }

    fn starts_with(&self, prefix: &[Letter]) -> bool {
        self.0.starts_with(prefix)
    }

    fn ends_with(&self, suffix: &[Letter]) -> bool {
        self.0.ends_with(suffix)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.iter().try_for_each(|l| write!(f, "{}", l.as_char()))
    }
}

impl FromStr for Word {
    type Err = ClassError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        s.trim()
            .chars()
            .map(|ch| match ch {
                'a' => Ok(Letter::A),
                'b' => Ok(Letter::B),
                'c' => Ok(Letter::C),
                other => Err(ClassError::InvalidLetter(other)),
            })
            .collect::<Result<Vec<_>, _>>()
            .map(Word)
    }
}

// In a single column a gridding is just two value cuts: values <= low go to
// the bottom cell, values in (low, high] to the middle, the rest to the top.
fn is_d_split(p: &Permutation, low: usize, high: usize) -> bool {
    let d = GriddingMatrix::class_d();
    let mut last: [Option<usize>; 3] = [None; 3];
    p.values().iter().all(|&v| {
        let row = if v > high {
            0
        } else if v > low {
            1
        } else {
            2
        };
        let ok = match d.cell(row, 0) {
            CellType::Increasing => last[row].is_none_or(|u| u < v),
            CellType::Decreasing => last[row].is_none_or(|u| u > v),
            _ => unreachable!("D has only monotone cells"),
        };
        last[row] = Some(v);
        ok
    })
}

fn d_splits(p: &Permutation) -> impl Iterator<Item = (usize, usize)> + '_ {
    let n = p.len();
    (0..=n)
        .flat_map(move |low| (low..=n).map(move |high| (low, high)))
        .filter(move |&(low, high)| is_d_split(p, low, high))
}

/// For each position, whether some D-gridding puts that point in the middle
/// cell.
pub fn b_encodable(p: &Permutation) -> Vec<bool> {
    let mut out = vec![false; p.len()];
    for (low, high) in d_splits(p) {
        for (i, &v) in p.values().iter().enumerate() {
            if v > low && v <= high {
                out[i] = true;
            }
        }
    }
    out
}

/// Encodes a member of D under the gridding with the largest middle cell
/// (lowest middle cell among ties).
pub fn encode_d(p: &Permutation) -> Result<Word, ClassError> {
    let (low, high) = d_splits(p)
        .max_by_key(|&(low, high)| (high - low, std::cmp::Reverse(low)))
        .ok_or_else(|| ClassError::NotInD(p.clone()))?;
    Ok(Word(
        p.values()
            .iter()
            .map(|&v| {
                if v > high {
                    Letter::C
                } else if v > low {
                    Letter::B
                } else {
                    Letter::A
                }
            })
            .collect(),
    ))
}

/// The member of D with the given encoding: `a` points take the lowest values
/// increasingly, `b` points the middle values decreasingly and `c` points the
/// top values increasingly.
pub fn decode_word(w: &Word) -> Result<Permutation, ClassError> {
    if w.is_empty() {
        return Err(ClassError::EmptyWord);
    }
    let count = |l: Letter| w.0.iter().filter(|&&x| x == l).count();
    let (na, nb) = (count(Letter::A), count(Letter::B));
    let mut next_a = 1;
    let mut next_b = na + nb;
    let mut next_c = na + nb + 1;
    let values =
        w.0.iter()
            .map(|l| match l {
                Letter::A => {
                    next_a += 1;
                    next_a - 1
                }
                Letter::B => {
                    next_b -= 1;
                    next_b + 1
                }
                Letter::C => {
                    next_c += 1;
                    next_c - 1
                }
            })
            .collect();
    Ok(Permutation::from_vec_unchecked(values))
}

/// Word length used for a simple permutation of length `n` of this kind, or
/// `None` for kinds without words or lengths too short.
fn word_length(kind: SimpleType, n: usize) -> Option<usize> {
    match kind {
        SimpleType::Type1 => Some(n),
        SimpleType::Type2 | SimpleType::Type3 => n.checked_sub(4),
        SimpleType::Type4 => n.checked_sub(8),
        _ => None,
    }
}

/// Whether `w` is a valid encoding for a simple permutation of the given
/// kind. Type 1 words start `ba` and end `cb`; type 2 keeps only the end
/// condition, type 3 only the start condition and type 4 neither. Words of
/// types 2 to 4 cover only the points between the fixed outer points.
pub fn valid_simple_word(w: &Word, kind: SimpleType) -> bool {
    use Letter::*;
    if !w.has_no_repeated_letter() {
        return false;
    }
    let starts = w.starts_with(&[B, A]);
    let ends = w.ends_with(&[C, B]);
    match kind {
        SimpleType::Type1 => starts && ends,
        SimpleType::Type2 => ends,
        SimpleType::Type3 => starts,
        SimpleType::Type4 => true,
        _ => false,
    }
}

/// All valid words for simple permutations of length `n` of the given kind.
pub fn enumerate_words(kind: SimpleType, n: usize) -> Result<Vec<Word>, ClassError> {
    let len = match (kind.index(), kind.is_inverse_type()) {
        (Some(_), false) => word_length(kind, n),
        _ => return Err(ClassError::NoWordsForKind(kind)),
    };
    let Some(len) = len else {
        return Ok(Vec::new());
    };
    // words without a repeated letter, built letter by letter
    let mut words: Vec<Vec<Letter>> = vec![Vec::new()];
    for _ in 0..len {
        let mut next = Vec::with_capacity(words.len() * 3);
        for w in &words {
            for l in Letter::ALL {
                if w.last() != Some(&l) {
                    let mut longer = w.clone();
                    longer.push(l);
                    next.push(longer);
                }
            }
        }
        words = next;
    }
    Ok(words
        .into_iter()
        .map(Word)
        .filter(|w| valid_simple_word(w, kind))
        .collect())
}

/// Number of simple permutations of length `n` of the given kind, from the
/// closed counting rules: `t(4) = t(5) = 1`, `t(n) = t(n-1) + 2·t(n-2)` for
/// type 1; `2^(n-6)` from `n = 6` for types 2 and 3; 1 at `n = 8` then
/// `3·2^(n-9)` for type 4.
pub fn count_words(kind: SimpleType, n: usize) -> Result<BigUint, ClassError> {
    match kind {
        SimpleType::Type1 => {
            if n < 4 {
                return Ok(BigUint::zero());
            }
            let (mut prev, mut cur) = (BigUint::one(), BigUint::one());
            for _ in 6..=n {
                let next = &cur + &prev * 2u32;
                prev = std::mem::replace(&mut cur, next);
            }
            Ok(cur)
        }
        SimpleType::Type2 | SimpleType::Type3 => Ok(if n >= 6 {
            BigUint::one() << (n - 6)
        } else {
            BigUint::zero()
        }),
        SimpleType::Type4 => Ok(match n {
            8 => BigUint::one(),
            n if n >= 9 => BigUint::from(3u32) << (n - 9),
            _ => BigUint::zero(),
        }),
        other => Err(ClassError::NoWordsForKind(other)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::perm;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn encode_examples() {
        assert_eq!(encode_d(&perm("51647283")).unwrap(), w("bacbcacb"));
        assert_eq!(encode_d(&perm("3142")).unwrap(), w("bacb"));
        assert_eq!(encode_d(&perm("1")).unwrap(), w("b"));
        assert_eq!(
            encode_d(&perm("2143")),
            Err(ClassError::NotInD(perm("2143")))
        );
    }

    #[test]
    fn decode_examples() {
        assert_eq!(decode_word(&w("bacb")).unwrap(), perm("3142"));
        assert_eq!(decode_word(&w("babcb")).unwrap(), perm("41352"));
        assert_eq!(decode_word(&w("b")).unwrap(), perm("1"));
        assert_eq!(decode_word(&w("bacbcacb")).unwrap(), perm("51647283"));
        assert_eq!(decode_word(&Word::default()), Err(ClassError::EmptyWord));
        assert_eq!("abx".parse::<Word>(), Err(ClassError::InvalidLetter('x')));
    }

    #[test]
    fn b_encodable_points() {
        assert_eq!(b_encodable(&perm("3142")), vec![true, false, false, true]);
    }

    #[test]
    fn validity_examples() {
        assert!(valid_simple_word(&w("bacb"), SimpleType::Type1));
        assert!(!valid_simple_word(&w("bacca"), SimpleType::Type1));
        assert!(valid_simple_word(&w("cb"), SimpleType::Type2));
        assert!(!valid_simple_word(&w("cb"), SimpleType::Type3));
        assert!(valid_simple_word(&w("ba"), SimpleType::Type3));
        assert!(valid_simple_word(&Word::default(), SimpleType::Type4));
        assert!(!valid_simple_word(&w("bacb"), SimpleType::InvType1));
    }

    #[test]
    fn closed_counts() {
        let t1: Vec<u64> = (4..=9)
            .map(|n| {
                count_words(SimpleType::Type1, n)
                    .unwrap()
                    .try_into()
                    .unwrap()
            })
            .collect();
        assert_eq!(t1, [1, 1, 3, 5, 11, 21]);
        assert_eq!(count_words(SimpleType::Type2, 6).unwrap(), BigUint::one());
        assert_eq!(
            count_words(SimpleType::Type3, 8).unwrap(),
            BigUint::from(4u32)
        );
        assert_eq!(count_words(SimpleType::Type4, 8).unwrap(), BigUint::one());
        assert_eq!(
            count_words(SimpleType::Type4, 10).unwrap(),
            BigUint::from(6u32)
        );
        assert!(count_words(SimpleType::Sporadic42513, 5).is_err());
    }

    #[test]
    fn enumerated_words_match_closed_counts() {
        for kind in [
            SimpleType::Type1,
            SimpleType::Type2,
            SimpleType::Type3,
            SimpleType::Type4,
        ] {
            for n in 4..=13 {
                let words = enumerate_words(kind, n).unwrap();
                assert_eq!(
                    BigUint::from(words.len()),
                    count_words(kind, n).unwrap(),
                    "{kind} {n}"
                );
            }
        }
        assert_eq!(
            enumerate_words(SimpleType::Type1, 4).unwrap(),
            vec![w("bacb")]
        );
        assert_eq!(
            enumerate_words(SimpleType::Type1, 5).unwrap(),
            vec![w("babcb")]
        );
        assert_eq!(
            enumerate_words(SimpleType::Type4, 8).unwrap(),
            vec![Word::default()]
        );
    }
}
