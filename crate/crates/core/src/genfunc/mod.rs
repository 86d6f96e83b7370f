//! Exact rational generating functions and the formula library for the
//! class and its pieces.

mod poly;
mod rational;

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

pub use poly::IntPolynomial;
pub use rational::{solve_fixed_point, truncated_product, truncated_substitution, RationalGF};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GfError {
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("division by the zero function")]
    DivisionByZero,
    #[error("substituted function has a nonzero constant term")]
    NonzeroConstantTerm,
    #[error("denominator has zero constant term; no power series expansion")]
    ZeroConstantDenominator,
    #[error("coefficient of x^{0} is not an integer")]
    NonIntegralCoefficient(usize),
    #[error("unknown generating function `{0}`")]
    UnknownName(String),
}

/// Names of the closed forms in the library.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GfName {
    /// Monotone permutations.
    D,
    /// Av(2143, 312); also counts Av(2143, 231).
    E,
    /// Skew indecomposable members of Av(2143, 312).
    ENotSkew,
    /// Skew decomposable members of the class.
    FSkew,
    S1,
    S2,
    S3,
    S4,
    F1,
    F2,
    F3,
    F4,
    /// Inflations of 42513 and 35142.
    Sporadic,
    /// Simple members of length at least 4.
    S,
    /// The whole class.
    F,
}

impl GfName {
    pub const ALL: [GfName; 15] = [
        GfName::D,
        GfName::E,
        GfName::ENotSkew,
        GfName::FSkew,
        GfName::S1,
        GfName::S2,
        GfName::S3,
        GfName::S4,
        GfName::F1,
        GfName::F2,
        GfName::F3,
        GfName::F4,
        GfName::Sporadic,
        GfName::S,
        GfName::F,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            GfName::D => "d",
            GfName::E => "e",
            GfName::ENotSkew => "e_notskew",
            GfName::FSkew => "f_skew",
            GfName::S1 => "s1",
            GfName::S2 => "s2",
            GfName::S3 => "s3",
            GfName::S4 => "s4",
            GfName::F1 => "f1",
            GfName::F2 => "f2",
            GfName::F3 => "f3",
            GfName::F4 => "f4",
            GfName::Sporadic => "sporadic",
            GfName::S => "s",
            GfName::F => "f",
        }
    }
}

impl fmt::Display for GfName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for GfName {
    type Err = GfError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        GfName::ALL
            .into_iter()
            .find(|n| n.as_str() == s)
            .ok_or_else(|| GfError::UnknownName(s.to_string()))
    }
}

fn p(coeffs: &[i64]) -> IntPolynomial {
    IntPolynomial::from_i64(coeffs)
}

fn ratio(num: IntPolynomial, den: IntPolynomial) -> RationalGF {
    RationalGF::new(num, den).expect("nonzero denominator")
}

fn product(factors: &[IntPolynomial]) -> IntPolynomial {
    factors.iter().fold(IntPolynomial::one(), |acc, f| &acc * f)
}

/// The closed form for `name`.
pub fn named(name: GfName) -> RationalGF {
    let one_minus_x = p(&[1, -1]);
    let one_minus_2x = p(&[1, -2]);
    let one_minus_3x = p(&[1, -3]);
    let one_plus_x = p(&[1, 1]);
    let fib = p(&[1, -3, 1]);
    let x = IntPolynomial::x();
    let mono = |k| IntPolynomial::monomial(1, k);
    match name {
        GfName::D => ratio(x, one_minus_x),
        GfName::E => ratio(&x * &one_minus_x, fib),
        GfName::ENotSkew => ratio(&x * &one_minus_x.pow(2), fib),
        GfName::FSkew => ratio(&mono(2) * &one_minus_x.pow(3), fib.pow(2)),
        GfName::S1 => ratio(mono(4), &one_minus_2x * &one_plus_x),
        GfName::S2 | GfName::S3 => ratio(mono(6), one_minus_2x),
        GfName::S4 => ratio(&mono(8) * &one_plus_x, one_minus_2x),
        GfName::F1 => ratio(&mono(4) * &one_minus_x.pow(2), &one_minus_3x * &fib.pow(2)),
        GfName::F2 | GfName::F3 => ratio(mono(6), &one_minus_3x * &fib.pow(2)),
        GfName::F4 => ratio(
            mono(8),
            product(&[one_minus_3x, one_minus_x.pow(2), fib.pow(2)]),
        ),
        GfName::Sporadic => ratio(IntPolynomial::monomial(2, 5), fib.pow(2)),
        GfName::S => ratio(
            &IntPolynomial::monomial(2, 4) * &p(&[1, 1, 1, 0, 1, 2, 1]),
            &one_minus_2x * &one_plus_x,
        ),
        GfName::F => ratio(
            p(&[0, 1, -11, 51, -127, 186, -165, 87, -23, 3]),
            product(&[one_minus_3x, one_minus_x.pow(4), fib.pow(2)]),
        ),
    }
}

/// `slope·f + intercept` for the not-yet-known class function `f`.
#[derive(Debug, Clone)]
pub struct Affine {
    pub slope: RationalGF,
    pub intercept: RationalGF,
}

impl Affine {
    pub fn eval(&self, f: &RationalGF) -> RationalGF {
        &(&self.slope * f) + &self.intercept
    }
}

/// Every intermediate of the assembly of `f` from its pieces.
#[derive(Debug, Clone)]
pub struct Pipeline {
    pub e_notskew: RationalGF,
    pub f_skew: RationalGF,
    pub sporadic: RationalGF,
    /// `f_1..f_4`, built by substituting `d` into the simple-permutation
    /// functions and correcting for the points with restricted inflations.
    pub inflations: [RationalGF; 4],
    /// Sum decomposable members as an affine function of `f`.
    pub f_plus_affine: Affine,
    pub f_plus: RationalGF,
    pub f: RationalGF,
}

/// `f_k = s_k(d) · x^j · e² / d^m` with `(j, m)` = (0,2), (1,3), (1,3), (2,4).
pub fn inflation_gf(kind: usize) -> Result<RationalGF, GfError> {
    let (s, j, m) = match kind {
        1 => (GfName::S1, 0, 2),
        2 => (GfName::S2, 1, 3),
        3 => (GfName::S3, 1, 3),
        4 => (GfName::S4, 2, 4),
        _ => panic!("simple types are numbered 1..=4"),
    };
    let d = named(GfName::D);
    let e = named(GfName::E);
    let substituted = named(s).compose(&d)?;
    let correction = (&RationalGF::monomial(1, j) * &e.pow(2)).checked_div(&d.pow(m))?;
    Ok(&substituted * &correction)
}

/// Builds `f` from its decomposition without using its closed form.
pub fn pipeline_f() -> Result<Pipeline, GfError> {
    let x = RationalGF::x();
    let d = named(GfName::D);
    let e = named(GfName::E);

    // e≠ = x + x·e + (e - e≠)·d
    let e_notskew = solve_fixed_point(&(&(&x + &(&x * &e)) + &(&e * &d)), &(-&d))?;
    let f_skew = &e_notskew * &e;
    let sporadic = &(&x * &e.pow(2)) * &d.pow(2);
    let sporadic = sporadic.scale(2);
    let inflations = [
        inflation_gf(1)?,
        inflation_gf(2)?,
        inflation_gf(3)?,
        inflation_gf(4)?,
    ];

    // f⊕ = x·f + (f - f⊕ - x)·d, i.e. f⊕ = A + B·f⊕ with A = (x + d)·f - x·d
    // and B = -d; A is affine in f.
    let scale = RationalGF::one().checked_div(&(&RationalGF::one() + &d))?;
    let f_plus_affine = Affine {
        slope: &(&x + &d) * &scale,
        intercept: &(-&(&x * &d)) * &scale,
    };

    // f = x + f⊕ + f⊖ + sporadic + 2(f1 + f2 + f3 + f4)
    let mut known = &(&x + &f_skew) + &sporadic;
    let inflation_sum = inflations
        .iter()
        .fold(RationalGF::zero(), |acc, g| &acc + g);
    known = &known + &inflation_sum.scale(2);
    let f = solve_fixed_point(&(&known + &f_plus_affine.intercept), &f_plus_affine.slope)?;
    let f_plus = f_plus_affine.eval(&f);

    Ok(Pipeline {
        e_notskew,
        f_skew,
        sporadic,
        inflations,
        f_plus_affine,
        f_plus,
        f,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&c| BigInt::from(c)).collect()
    }

    #[test]
    fn names_round_trip() {
        for name in GfName::ALL {
            assert_eq!(name.as_str().parse::<GfName>().unwrap(), name);
        }
        assert!("g".parse::<GfName>().is_err());
    }

    #[test]
    fn known_series() {
        assert_eq!(
            named(GfName::D).series(5).unwrap(),
            ints(&[0, 1, 1, 1, 1, 1])
        );
        assert_eq!(
            named(GfName::E).series(6).unwrap(),
            ints(&[0, 1, 2, 5, 13, 34, 89])
        );
        let s = named(GfName::S).series(10).unwrap();
        assert_eq!(s[4..], ints(&[2, 4, 10, 18, 40, 80, 162])[..]);
        assert_eq!(named(GfName::F).series(4).unwrap(), ints(&[0, 1, 2, 6, 22]));
    }

    #[test]
    fn division_series() {
        // e/d = (1-x)^2 / (1-3x+x^2): 1, 1, 3, 8
        let q = named(GfName::E).checked_div(&named(GfName::D)).unwrap();
        assert_eq!(q.series(3).unwrap(), ints(&[1, 1, 3, 8]));
        // coefficientwise oracle: q·d = e
        let prod = truncated_product(
            &q.series(10).unwrap(),
            &named(GfName::D).series(10).unwrap(),
            10,
        );
        assert_eq!(prod, named(GfName::E).series(10).unwrap());
    }

    #[test]
    fn identities() {
        let e = named(GfName::E);
        let d = named(GfName::D);
        assert_eq!(named(GfName::FSkew), &named(GfName::ENotSkew) * &e);
        assert_eq!(named(GfName::S2), named(GfName::S3));
        assert_eq!(named(GfName::F2), named(GfName::F3));
        assert_ne!(d, e);
        let simple_sum = [GfName::S1, GfName::S2, GfName::S3, GfName::S4]
            .into_iter()
            .fold(RationalGF::zero(), |acc, n| &acc + &named(n));
        assert_eq!(
            named(GfName::S),
            &RationalGF::monomial(2, 5) + &simple_sum.scale(2)
        );
        let sporadic = (&(&RationalGF::x() * &e.pow(2)) * &d.pow(2)).scale(2);
        assert_eq!(named(GfName::Sporadic), sporadic);
    }

    #[test]
    fn inflation_functions_match_closed_forms() {
        for (k, name) in [GfName::F1, GfName::F2, GfName::F3, GfName::F4]
            .into_iter()
            .enumerate()
        {
            assert_eq!(inflation_gf(k + 1).unwrap(), named(name), "f{}", k + 1);
        }
    }

    #[test]
    fn pipeline_reproduces_closed_form() {
        let pipe = pipeline_f().unwrap();
        assert_eq!(pipe.f, named(GfName::F));
        assert_eq!(pipe.e_notskew, named(GfName::ENotSkew));
        assert_eq!(pipe.f_skew, named(GfName::FSkew));
        assert_eq!(pipe.sporadic, named(GfName::Sporadic));
        assert_eq!(pipe.f.series(4).unwrap(), ints(&[0, 1, 2, 6, 22]));

        // f⊕ satisfies its defining relation
        let x = RationalGF::x();
        let d = named(GfName::D);
        let rhs = &(&x * &pipe.f) + &(&(&(&pipe.f - &pipe.f_plus) - &x) * &d);
        assert_eq!(pipe.f_plus, rhs);
    }

    #[test]
    fn corrupted_numerator_is_detected() {
        let f = named(GfName::F);
        let mut coeffs = f.numerator().coeffs().to_vec();
        coeffs[3] += 1;
        let bad = RationalGF::new(IntPolynomial::new(coeffs), f.denominator().clone()).unwrap();
        assert_ne!(bad, pipeline_f().unwrap().f);
        assert_ne!(bad.series(5).unwrap(), f.series(5).unwrap());
    }
}
