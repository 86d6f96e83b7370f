use num_bigint::BigInt;
use rayon::prelude::*;

use super::{basis, ClassError};
use crate::genfunc::{named, GfError, GfName};
use crate::perm::Permutation;

/// Members of `Av(basis)` grouped by length; entry `k` holds length `k + 1`.
///
/// Length `n` members are produced from length `n - 1` members by inserting
/// the new maximum at every position. Deleting the maximum of a member gives a
/// member, so nothing is missed, and each child has exactly one parent and
/// insertion point, so nothing is produced twice. Output order is independent
/// of the number of worker threads.
pub fn members_by_length(basis: &[Permutation], n_max: usize) -> Vec<Vec<Permutation>> {
    let mut out: Vec<Vec<Permutation>> = Vec::with_capacity(n_max);
    if n_max == 0 {
        return out;
    }
    out.push(vec![Permutation::identity(1)]);
    for n in 2..=n_max {
        let next = out[n - 2]
            .par_iter()
            .flat_map_iter(|p| (0..n).map(move |i| p.insert_max(i)))
            .filter(|q| q.avoids_all(basis))
            .collect();
        out.push(next);
    }
    out
}

/// Simple members of length `n >= 4`, in lexicographic order.
pub fn simple_members(n: usize) -> Result<Vec<Permutation>, ClassError> {
    if n < 4 {
        return Err(ClassError::TooShort(Permutation::identity(n.max(1))));
    }
    let mut all = members_by_length(&basis(), n).pop().unwrap_or_default();
    all.retain(Permutation::is_simple);
    all.sort_unstable();
    Ok(all)
}

/// Simple members of every length `4..=n_max`; entry `k` holds length `k + 4`.
pub fn simple_members_by_length(n_max: usize) -> Vec<Vec<Permutation>> {
    members_by_length(&basis(), n_max)
        .into_iter()
        .skip(3)
        .map(|level| {
            let mut simples: Vec<_> = level.into_iter().filter(Permutation::is_simple).collect();
            simples.sort_unstable();
            simples
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CountMethod {
    BruteForce,
    GeneratingFunction,
    Both,
}

impl CountMethod {
    pub fn as_str(self) -> &'static str {
        match self {
            CountMethod::BruteForce => "brute",
            CountMethod::GeneratingFunction => "gf",
            CountMethod::Both => "both",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountRow {
    pub length: usize,
    pub brute: Option<BigInt>,
    pub gf: Option<BigInt>,
    /// Present only when both counts were computed.
    pub agrees: Option<bool>,
}

impl CountRow {
    pub fn count(&self) -> &BigInt {
        self.brute
            .as_ref()
            .or(self.gf.as_ref())
            .expect("row carries at least one count")
    }
}

/// Per-length counts for lengths `1..=n_max`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountReport {
    pub method: CountMethod,
    pub rows: Vec<CountRow>,
}

impl CountReport {
    pub fn all_agree(&self) -> bool {
        self.rows.iter().all(|r| r.agrees != Some(false))
    }
}

/// Brute-force member counts of Av(2143, 4231) for lengths `1..=n_max`.
pub fn enumerate_class(n_max: usize) -> CountReport {
    count_report(n_max, CountMethod::BruteForce).expect("brute force needs no series")
}

pub fn count_report(n_max: usize, method: CountMethod) -> Result<CountReport, GfError> {
    let brute: Option<Vec<BigInt>> = matches!(method, CountMethod::BruteForce | CountMethod::Both)
        .then(|| {
            members_by_length(&basis(), n_max)
                .iter()
                .map(|level| BigInt::from(level.len()))
                .collect()
        });
    let gf: Option<Vec<BigInt>> = match method {
        CountMethod::GeneratingFunction | CountMethod::Both => Some(
            named(GfName::F)
                .series(n_max)?
                .into_iter()
                .skip(1)
                .collect(),
        ),
        CountMethod::BruteForce => None,
    };
    let rows = (1..=n_max)
        .map(|length| {
            let b = brute.as_ref().map(|v| v[length - 1].clone());
            let g = gf.as_ref().map(|v| v[length - 1].clone());
            let agrees = match (&b, &g) {
                (Some(b), Some(g)) => Some(b == g),
                _ => None,
            };
            CountRow {
                length,
                brute: b,
                gf: g,
                agrees,
            }
        })
        .collect();
    Ok(CountReport { method, rows })
}
