use std::fmt;

use super::{is_member, ClassError};
use crate::grid::GriddingMatrix;
use crate::perm::{perm, Permutation};

/// Kind of a simple member of length at least 4.
///
/// `TypeK` members have extremal pattern 3142; `InvTypeK` members are their
/// inverses (extremal pattern 2413).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SimpleType {
    Sporadic42513,
    Sporadic35142,
    Type1,
    Type2,
    Type3,
    Type4,
    InvType1,
    InvType2,
    InvType3,
    InvType4,
}

impl SimpleType {
    pub const ALL: [SimpleType; 10] = [
        SimpleType::Sporadic42513,
        SimpleType::Sporadic35142,
        SimpleType::Type1,
        SimpleType::Type2,
        SimpleType::Type3,
        SimpleType::Type4,
        SimpleType::InvType1,
        SimpleType::InvType2,
        SimpleType::InvType3,
        SimpleType::InvType4,
    ];

    /// `k` for `TypeK` and `InvTypeK`.
    pub fn index(self) -> Option<u8> {
        use SimpleType::*;
        match self {
            Type1 | InvType1 => Some(1),
            Type2 | InvType2 => Some(2),
            Type3 | InvType3 => Some(3),
            Type4 | InvType4 => Some(4),
            Sporadic42513 | Sporadic35142 => None,
        }
    }

    pub fn is_inverse_type(self) -> bool {
        use SimpleType::*;
        matches!(self, InvType1 | InvType2 | InvType3 | InvType4)
    }

    pub fn from_index(k: u8, inverse: bool) -> SimpleType {
        use SimpleType::*;
        match (k, inverse) {
            (1, false) => Type1,
            (2, false) => Type2,
            (3, false) => Type3,
            (4, false) => Type4,
            (1, true) => InvType1,
            (2, true) => InvType2,
            (3, true) => InvType3,
            (4, true) => InvType4,
            _ => panic!("simple types are numbered 1..=4"),
        }
    }

    /// Kind of the inverse permutation.
    pub fn inverse(self) -> SimpleType {
        match self.index() {
            Some(k) => SimpleType::from_index(k, !self.is_inverse_type()),
            // both sporadics are involutions
            None => self,
        }
    }

    /// Kind of the reverse-complement image.
    pub fn reverse_complement(self) -> SimpleType {
        use SimpleType::*;
        match self {
            Sporadic42513 => Sporadic35142,
            Sporadic35142 => Sporadic42513,
            other => {
                let k = other.index().unwrap();
                let k = match k {
                    2 => 3,
                    3 => 2,
                    k => k,
                };
                SimpleType::from_index(k, other.is_inverse_type())
            }
        }
    }

    pub fn as_str(self) -> &'static str {
        use SimpleType::*;
        match self {
            Sporadic42513 => "sporadic-42513",
            Sporadic35142 => "sporadic-35142",
            Type1 => "type1",
            Type2 => "type2",
            Type3 => "type3",
            Type4 => "type4",
            InvType1 => "inv-type1",
            InvType2 => "inv-type2",
            InvType3 => "inv-type3",
            InvType4 => "inv-type4",
        }
    }
}

impl fmt::Display for SimpleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Cells of a permutation whose extremal points form 3142, relative to the
/// leftmost point ℓ, lowest d, highest u and rightmost r. Column bands are
/// (ℓ, d), (d, u), (u, r) by position; row bands are below r, between r and
/// ℓ, and above ℓ by value. Every list holds 0-based positions in
/// increasing order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Regions {
    pub left: usize,
    pub lowest: usize,
    pub highest: usize,
    pub right: usize,
    /// Left column, top row.
    pub a: Vec<usize>,
    /// Middle column, top row.
    pub b: Vec<usize>,
    /// Left column, middle row.
    pub c: Vec<usize>,
    /// Middle column, middle row.
    pub d: Vec<usize>,
    /// Right column, middle row.
    pub e: Vec<usize>,
    /// Middle column, bottom row.
    pub f: Vec<usize>,
    /// Right column, bottom row.
    pub g: Vec<usize>,
    /// Left-bottom and right-top cells.
    pub other: Vec<usize>,
}

impl Regions {
    /// `None` unless the extremal pattern is 3142.
    pub fn of(p: &Permutation) -> Option<Regions> {
        if p.extremal_pattern()? != perm("3142") {
            return None;
        }
        let n = p.len();
        let (left, right) = (0, n - 1);
        let lowest = p.position_of(1);
        let highest = p.position_of(n);
        let (vl, vr) = (p.at(left), p.at(right));
        let mut r = Regions {
            left,
            lowest,
            highest,
            right,
            a: vec![],
            b: vec![],
            c: vec![],
            d: vec![],
            e: vec![],
            f: vec![],
            g: vec![],
            other: vec![],
        };
        for i in 0..n {
            if [left, lowest, highest, right].contains(&i) {
                continue;
            }
            let v = p.at(i);
            let col = if i < lowest {
                0
            } else if i < highest {
                1
            } else {
                2
            };
            let row = if v < vr {
                0
            } else if v < vl {
                1
            } else {
                2
            };
            let cell = match (col, row) {
                (0, 2) => &mut r.a,
                (1, 2) => &mut r.b,
                (0, 1) => &mut r.c,
                (1, 1) => &mut r.d,
                (2, 1) => &mut r.e,
                (1, 0) => &mut r.f,
                (2, 0) => &mut r.g,
                _ => &mut r.other,
            };
            cell.push(i);
        }
        Some(r)
    }

    /// The shape every simple member with this extremal pattern has: cells
    /// C, E and the corners empty, at most one point in each of A and G, B
    /// and F increasing, D decreasing.
    pub fn has_simple_member_shape(&self, p: &Permutation) -> bool {
        let monotone = |cells: &[usize], increasing: bool| {
            cells
                .windows(2)
                .all(|w| (p.at(w[0]) < p.at(w[1])) == increasing)
        };
        self.c.is_empty()
            && self.e.is_empty()
            && self.other.is_empty()
            && self.a.len() <= 1
            && self.g.len() <= 1
            && monotone(&self.b, true)
            && monotone(&self.f, true)
            && monotone(&self.d, false)
    }

    /// Type from the sizes of cells A and G: (0,0), (1,0), (0,1), (1,1).
    pub fn type_index(&self) -> u8 {
        match (self.a.is_empty(), self.g.is_empty()) {
            (true, true) => 1,
            (false, true) => 2,
            (true, false) => 3,
            (false, false) => 4,
        }
    }
}

/// Classifies a simple member of length at least 4.
pub fn classify_simple(p: &Permutation) -> Result<SimpleType, ClassError> {
    if p.len() < 4 {
        return Err(ClassError::TooShort(p.clone()));
    }
    if !p.is_simple() {
        return Err(ClassError::NotSimple(p.clone()));
    }
    if !is_member(p) {
        return Err(ClassError::NotMember(p.clone()));
    }
    let pattern = p
        .extremal_pattern()
        .expect("extremal points of a simple permutation are distinct");
    match pattern.values() {
        [3, 4, 1, 2] => {
            if *p == perm("42513") {
                Ok(SimpleType::Sporadic42513)
            } else if *p == perm("35142") {
                Ok(SimpleType::Sporadic35142)
            } else {
                Err(ClassError::Unclassifiable(p.clone()))
            }
        }
        [3, 1, 4, 2] => classify_3142(p).map(|k| SimpleType::from_index(k, false)),
        [2, 4, 1, 3] => classify_3142(&p.inverse()).map(|k| SimpleType::from_index(k, true)),
        _ => Err(ClassError::Unclassifiable(p.clone())),
    }
}

// Type 1: in D. Type 2: not, but without its first point. Type 3: without its
// last point. Type 4: only without both.
fn classify_3142(p: &Permutation) -> Result<u8, ClassError> {
    let regions = Regions::of(p).ok_or_else(|| ClassError::Unclassifiable(p.clone()))?;
    if !regions.has_simple_member_shape(p) {
        return Err(ClassError::Unclassifiable(p.clone()));
    }
    let d = GriddingMatrix::class_d();
    let n = p.len();
    let in_d = |q: Option<Permutation>| q.is_some_and(|q| d.contains(&q));
    let by_grid = if d.contains(p) {
        1
    } else if in_d(p.delete(0)) {
        2
    } else if in_d(p.delete(n - 1)) {
        3
    } else if in_d(p.delete_positions(&[0, n - 1])) {
        4
    } else {
        return Err(ClassError::Unclassifiable(p.clone()));
    };
    let by_regions = regions.type_index();
    if by_grid != by_regions {
        return Err(ClassError::InconsistentType {
            perm: p.clone(),
            by_grid,
            by_regions,
        });
    }
    Ok(by_grid)
}
