//! End-to-end consistency checks: brute-force enumeration against the
//! generating functions, the structural membership test against pattern
//! avoidance, and the round trips of the decomposition and the encoding.

use std::fmt;

use num_bigint::{BigInt, BigUint};

use crate::class::{
    basis, class_e_basis, class_f_basis, classify_simple, count_words, decode_word, encode_d,
    is_member, is_member_structural, members_by_length, ClassError, SimpleType,
};
use crate::genfunc::{inflation_gf, named, pipeline_f, GfError, GfName, RationalGF};
use crate::perm::{permutations_of_length, Permutation};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    fn new(name: &'static str, outcome: Result<String, String>) -> Check {
        let (passed, detail) = match outcome {
            Ok(detail) => (true, detail),
            Err(detail) => (false, detail),
        };
        Check {
            name,
            passed,
            detail,
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{status} {}: {}", self.name, self.detail)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    pub to: usize,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

/// Runs every check up to length `to` against the built-in closed form of
/// the class generating function.
pub fn run(to: usize) -> Report {
    run_with(to, &named(GfName::F))
}

/// Runs every check with `f` standing in for the closed form of the class
/// generating function.
pub fn run_with(to: usize, f: &RationalGF) -> Report {
    let members = members_by_length(&basis(), to);
    let checks = vec![
        Check::new("class-counts", class_counts(&members, f)),
        Check::new("auxiliary-counts", auxiliary_counts(to)),
        Check::new("simple-counts", simple_counts(&members)),
        Check::new("simple-types", simple_types(&members)),
        Check::new("structural-membership", structural_membership(to)),
        Check::new("decomposition-roundtrip", decomposition_roundtrip(to)),
        Check::new("encoding-roundtrip", encoding_roundtrip(&members)),
        Check::new("gf-identities", gf_identities(f)),
    ];
    Report { to, checks }
}

fn compare_series(
    what: &str,
    brute: &[BigInt],
    series: &[BigInt],
    first: usize,
) -> Result<(), String> {
    for (k, (b, s)) in brute.iter().zip(series).enumerate() {
        if b != s {
            return Err(format!(
                "{what} series mismatch at length {}: brute force {b}, series {s}",
                k + first
            ));
        }
    }
    Ok(())
}

fn series_from(g: &RationalGF, first: usize, last: usize) -> Result<Vec<BigInt>, String> {
    let coeffs = g.series(last).map_err(|e| e.to_string())?;
    Ok(coeffs.into_iter().skip(first).collect())
}

fn class_counts(members: &[Vec<Permutation>], f: &RationalGF) -> Result<String, String> {
    let brute: Vec<BigInt> = members.iter().map(|l| BigInt::from(l.len())).collect();
    let series = series_from(f, 1, members.len())?;
    compare_series("f", &brute, &series, 1)?;
    Ok(format!("lengths 1..={} agree with f", members.len()))
}

fn auxiliary_counts(to: usize) -> Result<String, String> {
    let series = series_from(&named(GfName::E), 1, to)?;
    for (label, b) in [("E", class_e_basis()), ("F", class_f_basis())] {
        let brute: Vec<BigInt> = members_by_length(&b, to)
            .iter()
            .map(|l| BigInt::from(l.len()))
            .collect();
        compare_series(&format!("e against {label}"), &brute, &series, 1)?;
    }
    Ok(format!("E and F agree with e for lengths 1..={to}"))
}

fn simple_counts(members: &[Vec<Permutation>]) -> Result<String, String> {
    if members.len() < 4 {
        return Ok("nothing to check below length 4".into());
    }
    let brute: Vec<BigInt> = members[3..]
        .iter()
        .map(|l| BigInt::from(l.iter().filter(|p| p.is_simple()).count()))
        .collect();
    let series = series_from(&named(GfName::S), 4, members.len())?;
    compare_series("s", &brute, &series, 4)?;
    Ok(format!("lengths 4..={} agree with s", members.len()))
}

// Every simple member has a type, and the number of each type 1..4 (and of
// its inverse type) matches the closed word counts.
fn simple_types(members: &[Vec<Permutation>]) -> Result<String, String> {
    for (k, level) in members.iter().enumerate().skip(3) {
        let n = k + 1;
        let mut tally = [0usize; SimpleType::ALL.len()];
        for p in level.iter().filter(|p| p.is_simple()) {
            let kind = classify_simple(p).map_err(|e| e.to_string())?;
            tally[SimpleType::ALL.iter().position(|&t| t == kind).unwrap()] += 1;
        }
        for (kind, &found) in SimpleType::ALL.iter().zip(&tally) {
            let expected = match kind.index() {
                Some(_) => {
                    let base = if kind.is_inverse_type() {
                        kind.inverse()
                    } else {
                        *kind
                    };
                    count_words(base, n).map_err(|e| e.to_string())?
                }
                None => BigUint::from(u8::from(n == 5)),
            };
            if BigUint::from(found) != expected {
                return Err(format!(
                    "length {n}: {found} of {kind}, expected {expected}"
                ));
            }
        }
    }
    Ok("every simple member classified; tallies match word counts".into())
}

fn structural_membership(to: usize) -> Result<String, String> {
    let mut total = 0usize;
    for n in 1..=to {
        for p in permutations_of_length(n) {
            if is_member_structural(&p) != is_member(&p) {
                return Err(format!("structural test disagrees on {p}"));
            }
            total += 1;
        }
    }
    Ok(format!("{total} permutations agree"))
}

fn decomposition_roundtrip(to: usize) -> Result<String, String> {
    for n in 1..=to.min(7) {
        for p in permutations_of_length(n) {
            let d = p.decompose();
            if d.inflate() != p {
                return Err(format!("decomposition of {p} does not reassemble"));
            }
        }
    }
    Ok(format!("lengths 1..={}", to.min(7)))
}

fn encoding_roundtrip(members: &[Vec<Permutation>]) -> Result<String, String> {
    let mut total = 0usize;
    for p in members
        .iter()
        .flatten()
        .filter(|p| p.len() >= 4 && p.is_simple())
    {
        let w = match encode_d(p) {
            Ok(w) => w,
            Err(ClassError::NotInD(_)) => continue,
            Err(e) => return Err(e.to_string()),
        };
        let back = decode_word(&w).map_err(|e| e.to_string())?;
        if &back != p {
            return Err(format!("{p} encodes to {w}, which decodes to {back}"));
        }
        total += 1;
    }
    Ok(format!("{total} simple members of D"))
}

fn gf_identities(f: &RationalGF) -> Result<String, String> {
    let err = |e: GfError| e.to_string();
    let pipe = pipeline_f().map_err(err)?;
    let x = RationalGF::x();
    let d = named(GfName::D);
    let e = named(GfName::E);
    let mut failures = Vec::new();
    let mut expect = |label: &str, lhs: &RationalGF, rhs: &RationalGF| {
        if lhs != rhs {
            failures.push(label.to_string());
        }
    };
    expect("assembled f = f", &pipe.f, f);
    expect(
        "f_skew = e_notskew * e",
        &named(GfName::FSkew),
        &(&pipe.e_notskew * &e),
    );
    expect("e_notskew", &named(GfName::ENotSkew), &pipe.e_notskew);
    expect(
        "sporadic = 2x e^2 d^2",
        &named(GfName::Sporadic),
        &pipe.sporadic,
    );
    let s_parts = [GfName::S1, GfName::S2, GfName::S3, GfName::S4]
        .into_iter()
        .fold(RationalGF::zero(), |acc, k| &acc + &named(k));
    expect(
        "s = 2x^5 + 2(s1 + s2 + s3 + s4)",
        &named(GfName::S),
        &(&RationalGF::monomial(2, 5) + &s_parts.scale(2)),
    );
    for (k, name) in [GfName::F1, GfName::F2, GfName::F3, GfName::F4]
        .into_iter()
        .enumerate()
    {
        expect(
            name.as_str(),
            &named(name),
            &inflation_gf(k + 1).map_err(err)?,
        );
    }
    expect(
        "f_plus relation",
        &pipe.f_plus,
        &pipe.f_plus_affine.eval(&pipe.f),
    );
    // f⊕ = x·f + (f − f⊕ − x)·d
    let rhs = &(&x * &pipe.f) + &(&(&(&pipe.f - &pipe.f_plus) - &x) * &d);
    expect("f_plus defining relation", &pipe.f_plus, &rhs);
    if failures.is_empty() {
        Ok("all identities hold".into())
    } else {
        Err(format!("failed: {}", failures.join("; ")))
    }
}
