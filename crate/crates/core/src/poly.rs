//! Polynomials in two formal generators `x_A`, `x_B` with exact rational
//! coefficients, graded so that each generator has degree `-2`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::Mul;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// An element of `Q[x_A, x_B]`. Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct EulerPolynomial {
    /// `(i, j) ↦ coefficient of x_A^i x_B^j`.
    terms: BTreeMap<(u32, u32), BigRational>,
}

impl EulerPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, 0, BigRational::one())
    }

    pub fn monomial(i: u32, j: u32, coeff: BigRational) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert((i, j), coeff);
        }
        EulerPolynomial { terms }
    }

    /// `p x_A + q x_B`.
    pub fn linear(p: i64, q: i64) -> Self {
        let mut out = Self::zero();
        out.add_term(1, 0, BigRational::from_integer(p.into()));
        out.add_term(0, 1, BigRational::from_integer(q.into()));
        out
    }

    fn add_term(&mut self, i: u32, j: u32, coeff: BigRational) {
        if coeff.is_zero() {
            return;
        }
        let slot = self.terms.entry((i, j)).or_insert_with(BigRational::zero);
        *slot += coeff;
        if slot.is_zero() {
            self.terms.remove(&(i, j));
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        *self == Self::one()
    }

    pub fn coeff(&self, i: u32, j: u32) -> BigRational {
        self.terms.get(&(i, j)).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = ((u32, u32), &BigRational)> {
        self.terms.iter().map(|(&k, v)| (k, v))
    }

    /// Total degree in the generators if the polynomial is nonzero and
    /// homogeneous.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut degrees = self.terms.keys().map(|&(i, j)| i + j);
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }

    /// Cohomological degree `-2 · (total degree)` for homogeneous elements.
    pub fn grading(&self) -> Option<i64> {
        self.homogeneous_degree().map(|d| -2 * d as i64)
    }

    pub fn pow(&self, k: u64) -> Self {
        (0..k).fold(Self::one(), |acc, _| &acc * self)
    }
}

impl Mul for &EulerPolynomial {
    type Output = EulerPolynomial;

    fn mul(self, rhs: &EulerPolynomial) -> EulerPolynomial {
        let mut out = EulerPolynomial::zero();
        for (&(i, j), a) in &self.terms {
            for (&(k, l), b) in &rhs.terms {
                out.add_term(i + k, j + l, a * b);
            }
        }
        out
    }
}

impl Mul for EulerPolynomial {
    type Output = EulerPolynomial;

    fn mul(self, rhs: EulerPolynomial) -> EulerPolynomial {
        &self * &rhs
    }
}

impl fmt::Display for EulerPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        // Highest total degree first, then by power of x_A.
        let mut keys: Vec<_> = self.terms.keys().copied().collect();
        keys.sort_by_key(|&(i, j)| std::cmp::Reverse((i + j, i)));
        for (n, (i, j)) in keys.into_iter().enumerate() {
            let c = &self.terms[&(i, j)];
            let negative = c.is_negative();
            match (n, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let abs = c.abs();
            let is_unit = abs.is_one();
            let monomial = match (i, j) {
                (0, 0) => String::new(),
                _ => {
                    let factor = |name: &str, e: u32| match e {
                        0 => None,
                        1 => Some(name.to_string()),
                        _ => Some(format!("{name}^{e}")),
                    };
                    [factor("x_A", i), factor("x_B", j)].into_iter().flatten().collect::<Vec<_>>().join("*")
                }
            };
            if monomial.is_empty() {
                write!(f, "{abs}")?;
            } else if is_unit {
                f.write_str(&monomial)?;
            } else {
                write!(f, "{abs}*{monomial}")?;
            }
        }
        Ok(())
    }
}

/// Integer coefficient as a rational.
pub fn int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}
