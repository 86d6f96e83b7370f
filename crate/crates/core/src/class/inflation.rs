use std::fmt;

use super::simple::{classify_simple, Regions, SimpleType};
use super::{class_e_basis, class_f_basis, ClassError};
use crate::perm::{perm, Decomposition, Permutation};

/// The set of permutations a single skeleton point may be inflated by.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BlockClass {
    /// Only the singleton.
    Fixed,
    /// Av(21).
    Incr,
    /// Av(12).
    Decr,
    /// Av(2143, 312).
    ClassE,
    /// Av(2143, 231).
    ClassF,
}

impl BlockClass {
    pub fn admits(self, block: &Permutation) -> bool {
        match self {
            BlockClass::Fixed => block.len() == 1,
            BlockClass::Incr => block.is_increasing(),
            BlockClass::Decr => block.is_decreasing(),
            BlockClass::ClassE => block.avoids_all(&class_e_basis()),
            BlockClass::ClassF => block.avoids_all(&class_f_basis()),
        }
    }

    /// The class of inverses of members of `self`.
    pub fn inverse(self) -> BlockClass {
        match self {
            BlockClass::ClassE => BlockClass::ClassF,
            BlockClass::ClassF => BlockClass::ClassE,
            other => other,
        }
    }

    /// The class of reverse-complements of members of `self`.
    pub fn reverse_complement(self) -> BlockClass {
        // 312 and 231 are exchanged; 2143 and monotone classes are fixed
        self.inverse()
    }
}

impl fmt::Display for BlockClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BlockClass::Fixed => "fixed",
            BlockClass::Incr => "Av(21)",
            BlockClass::Decr => "Av(12)",
            BlockClass::ClassE => "E",
            BlockClass::ClassF => "F",
        })
    }
}

/// One allowed block class per point of a simple skeleton, in position order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct InflationProfile(pub Vec<BlockClass>);

impl InflationProfile {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn classes(&self) -> &[BlockClass] {
        &self.0
    }

    pub fn admits(&self, blocks: &[Permutation]) -> bool {
        blocks.len() == self.len() && self.0.iter().zip(blocks).all(|(c, b)| c.admits(b))
    }

    /// Profile of `p⁻¹` given this profile of `p`.
    fn inverse_for(&self, p: &Permutation) -> InflationProfile {
        let mut out = vec![BlockClass::Fixed; p.len()];
        for (i, &v) in p.values().iter().enumerate() {
            out[v - 1] = self.0[i].inverse();
        }
        InflationProfile(out)
    }

    fn reverse_complement(&self) -> InflationProfile {
        InflationProfile(
            self.0
                .iter()
                .rev()
                .map(|c| c.reverse_complement())
                .collect(),
        )
    }
}

impl fmt::Display for InflationProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

/// Allowed inflations of each point of a simple member of length at least 4.
pub fn inflation_profile(p: &Permutation) -> Result<InflationProfile, ClassError> {
    use BlockClass::*;
    let kind = classify_simple(p)?;
    Ok(match kind {
        SimpleType::Sporadic42513 => InflationProfile(vec![ClassE, Fixed, Incr, ClassF, Incr]),
        SimpleType::Sporadic35142 => {
            InflationProfile(vec![ClassE, Fixed, Incr, ClassF, Incr]).reverse_complement()
        }
        k if k.is_inverse_type() => {
            let q = p.inverse();
            profile_3142(&q).inverse_for(&q)
        }
        _ => profile_3142(p),
    })
}

// Rules for extremal pattern 3142. The leftmost point takes E unless cell A
// is occupied, in which case the A point takes E, ℓ is only monotone and the
// first point of B cannot be inflated; symmetrically for r, G and the last
// point of F. Cell D takes decreasing blocks and everything else increasing.
fn profile_3142(p: &Permutation) -> InflationProfile {
    use BlockClass::*;
    let r = Regions::of(p).expect("classified as a type, so extremal pattern is 3142");
    let mut out = vec![Incr; p.len()];
    for &i in &r.d {
        out[i] = Decr;
    }
    match r.a.first() {
        Some(&a) => {
            out[a] = ClassE;
            out[r.b[0]] = Fixed;
        }
        None => out[r.left] = ClassE,
    }
    match r.g.first() {
        Some(&g) => {
            out[g] = ClassF;
            out[*r.f.last().expect("occupied G needs a point of F")] = Fixed;
        }
        None => out[r.right] = ClassF,
    }
    InflationProfile(out)
}

/// Whether an inflation of a simple member stays in the class.
pub fn check_inflation(d: &Decomposition) -> Result<bool, ClassError> {
    Ok(inflation_profile(&d.skeleton)?.admits(&d.blocks))
}

/// Membership decided from the substitution decomposition and the inflation
/// rules, without searching for 2143 or 4231 directly.
pub fn is_member_structural(p: &Permutation) -> bool {
    if p.len() == 1 {
        return true;
    }
    let d = p.decompose();
    let (first, rest) = (&d.blocks[0], d.blocks.get(1));
    if d.skeleton == perm("12") {
        let rest = rest.unwrap();
        if first.len() == 1 {
            is_member_structural(rest)
        } else {
            // first block contains 21, so the rest must avoid 21 to keep 2143 out
            rest.is_increasing() && is_member_structural(first)
        }
    } else if d.skeleton == perm("21") {
        BlockClass::ClassE.admits(first) && BlockClass::ClassF.admits(rest.unwrap())
    } else {
        check_inflation(&d).unwrap_or(false)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::class::is_member;
    use BlockClass::*;

    #[test]
    fn profile_examples() {
        assert_eq!(
            inflation_profile(&perm("3142")).unwrap().classes(),
            &[ClassE, Incr, Incr, ClassF]
        );
        assert_eq!(
            inflation_profile(&perm("42513")).unwrap().classes(),
            &[ClassE, Fixed, Incr, ClassF, Incr]
        );
        assert_eq!(
            inflation_profile(&perm("35142")).unwrap().classes(),
            &[Incr, ClassE, Incr, Fixed, ClassF]
        );
        // 2413 is the inverse of 3142: its leftmost point is 3142's lowest
        assert_eq!(
            inflation_profile(&perm("2413")).unwrap().classes(),
            &[Incr, ClassE, ClassF, Incr]
        );
        assert!(inflation_profile(&perm("2143")).is_err());
    }

    #[test]
    fn check_inflation_examples() {
        let d = perm("871329456").decompose();
        assert_eq!(check_inflation(&d), Ok(false));
        assert!(!is_member(&perm("871329456")));

        let d = perm("425613").decompose();
        assert_eq!(d.skeleton, perm("42513"));
        assert_eq!(check_inflation(&d), Ok(true));
    }

    #[test]
    fn structural_examples() {
        assert!(!is_member_structural(&perm("4231")));
        assert!(!is_member_structural(&perm("2143")));
        assert!(is_member_structural(&perm("536124")));
        assert!(is_member_structural(&perm("123456")));
        assert!(is_member_structural(&perm("1")));
    }

    #[test]
    fn structural_matches_avoidance_up_to_seven() {
        for n in 1..=7 {
            for p in crate::perm::permutations_of_length(n) {
                assert_eq!(is_member_structural(&p), is_member(&p), "{p}");
            }
        }
    }
}
