use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::poly::IntPolynomial;
use super::GfError;

/// A ratio of integer polynomials. Never reduced to lowest terms; equality is
/// decided by cross-multiplication.
#[derive(Debug, Clone)]
pub struct RationalGF {
    num: IntPolynomial,
    den: IntPolynomial,
}

impl RationalGF {
    pub fn new(num: IntPolynomial, den: IntPolynomial) -> Result<Self, GfError> {
        if den.is_zero() {
            return Err(GfError::ZeroDenominator);
        }
        Ok(RationalGF { num, den })
    }

    pub fn polynomial(p: IntPolynomial) -> Self {
        RationalGF {
            num: p,
            den: IntPolynomial::one(),
        }
    }

    pub fn zero() -> Self {
        RationalGF::polynomial(IntPolynomial::zero())
    }

    pub fn one() -> Self {
        RationalGF::polynomial(IntPolynomial::one())
    }

    pub fn x() -> Self {
        RationalGF::polynomial(IntPolynomial::x())
    }

    /// `c·x^k`
    pub fn monomial(c: i64, k: usize) -> Self {
        RationalGF::polynomial(IntPolynomial::monomial(c, k))
    }

    pub fn numerator(&self) -> &IntPolynomial {
        &self.num
    }

    pub fn denominator(&self) -> &IntPolynomial {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn scale(&self, c: i64) -> Self {
        RationalGF {
            num: self.num.scale(&BigInt::from(c)),
            den: self.den.clone(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        RationalGF {
            num: self.num.pow(k),
            den: self.den.pow(k),
        }
    }

    pub fn checked_div(&self, rhs: &RationalGF) -> Result<Self, GfError> {
        if rhs.is_zero() {
            return Err(GfError::DivisionByZero);
        }
        Ok(RationalGF {
            num: &self.num * &rhs.den,
            den: &self.den * &rhs.num,
        })
    }

    /// `self(inner(x))`. The inner function must vanish at zero so that the
    /// substitution is a well-defined power series.
    pub fn compose(&self, inner: &RationalGF) -> Result<Self, GfError> {
        if !inner.num.constant_term().is_zero() {
            return Err(GfError::NonzeroConstantTerm);
        }
        // p(P/Q) = Σ p_i P^i Q^(k-i) / Q^k with k = max degree
        let k = self
            .num
            .degree()
            .unwrap_or(0)
            .max(self.den.degree().unwrap_or(0));
        let homogenize = |p: &IntPolynomial| {
            let mut acc = IntPolynomial::zero();
            let mut p_pow = IntPolynomial::one();
            for (i, c) in p.coeffs().iter().enumerate() {
                if !c.is_zero() {
                    let term = &p_pow * &inner.den.pow((k - i) as u32);
                    acc = &acc + &term.scale(c);
                }
                p_pow = &p_pow * &inner.num;
            }
            acc
        };
        RationalGF::new(homogenize(&self.num), homogenize(&self.den))
    }

    /// Numerator and denominator with the largest shared power of `x`
    /// divided out.
    fn without_common_x_power(&self) -> (IntPolynomial, IntPolynomial) {
        let lowest = |p: &IntPolynomial| p.coeffs().iter().position(|c| !c.is_zero());
        let k = match (lowest(&self.num), lowest(&self.den)) {
            (Some(a), Some(b)) => a.min(b),
            _ => 0,
        };
        let shift = |p: &IntPolynomial| IntPolynomial::new(p.coeffs()[k..].to_vec());
        (shift(&self.num), shift(&self.den))
    }

    /// Coefficients of `x^0..=x^n`, from the linear recurrence given by the
    /// denominator.
    pub fn series(&self, n: usize) -> Result<Vec<BigInt>, GfError> {
        if self.num.is_zero() {
            return Ok(vec![BigInt::zero(); n + 1]);
        }
        let (num, den) = self.without_common_x_power();
        let d0 = den.constant_term();
        if d0.is_zero() {
            return Err(GfError::ZeroConstantDenominator);
        }
        let den = den.coeffs();
        let mut out: Vec<BigInt> = Vec::with_capacity(n + 1);
        for k in 0..=n {
            let mut acc = num.coeff(k);
            for j in 1..den.len().min(k + 1) {
                acc -= &den[j] * &out[k - j];
            }
            if !(&acc % &d0).is_zero() {
                return Err(GfError::NonIntegralCoefficient(k));
            }
            out.push(acc / &d0);
        }
        Ok(out)
    }
}

impl PartialEq for RationalGF {
    fn eq(&self, other: &Self) -> bool {
        &self.num * &other.den == &other.num * &self.den
    }
}

impl Eq for RationalGF {}

impl Add for &RationalGF {
    type Output = RationalGF;

    fn add(self, rhs: &RationalGF) -> RationalGF {
        if self.den == rhs.den {
            return RationalGF {
                num: &self.num + &rhs.num,
                den: self.den.clone(),
            };
        }
        RationalGF {
            num: &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            den: &self.den * &rhs.den,
        }
    }
}

impl Sub for &RationalGF {
    type Output = RationalGF;

    fn sub(self, rhs: &RationalGF) -> RationalGF {
        self + &(-rhs)
    }
}

impl Mul for &RationalGF {
    type Output = RationalGF;

    fn mul(self, rhs: &RationalGF) -> RationalGF {
        RationalGF {
            num: &self.num * &rhs.num,
            den: &self.den * &rhs.den,
        }
    }
}

impl Neg for &RationalGF {
    type Output = RationalGF;

    fn neg(self) -> RationalGF {
        RationalGF {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl From<IntPolynomial> for RationalGF {
    fn from(p: IntPolynomial) -> Self {
        RationalGF::polynomial(p)
    }
}

impl fmt::Display for RationalGF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == IntPolynomial::one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

/// Solves `g = a + b·g`, i.e. `g = a / (1 - b)`.
pub fn solve_fixed_point(a: &RationalGF, b: &RationalGF) -> Result<RationalGF, GfError> {
    a.checked_div(&(&RationalGF::one() - b))
}

/// Truncated power-series multiplication, used to cross-check rational
/// arithmetic coefficientwise.
pub fn truncated_product(a: &[BigInt], b: &[BigInt], n: usize) -> Vec<BigInt> {
    (0..=n)
        .map(|k| {
            (0..=k)
                .filter(|&i| i < a.len() && k - i < b.len())
                .map(|i| &a[i] * &b[k - i])
                .fold(BigInt::zero(), |acc, t| acc + t)
        })
        .collect()
}

/// `Σ a_i · inner^i` truncated at degree `n`; `inner` must have zero constant
/// term.
pub fn truncated_substitution(outer: &[BigInt], inner: &[BigInt], n: usize) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); n + 1];
    let mut power = vec![BigInt::zero(); n + 1];
    power[0] = BigInt::one();
    for a in outer.iter().take(n + 1) {
        for (o, p) in out.iter_mut().zip(&power) {
            *o += a * p;
        }
        power = truncated_product(&power, inner, n);
    }
    out
}
