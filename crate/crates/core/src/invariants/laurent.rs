//! Laurent polynomials in one variable `A` with exact coefficients.

use num_traits::{One, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{AddAssign, Mul, Neg};

/// Coefficient ring for [`LaurentPoly`]: any exact integer-like type.
pub trait Coefficient:
    Clone + Eq + Zero + One + Neg<Output = Self> + AddAssign + Mul<Output = Self> + fmt::Display
{
}

impl<T> Coefficient for T where
    T: Clone + Eq + Zero + One + Neg<Output = Self> + AddAssign + Mul<Output = Self> + fmt::Display
{
}

/// A Laurent polynomial `Σ c_k A^k`, stored sparsely with no zero
/// coefficients; term order is ascending in the exponent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaurentPoly<C> {
    terms: BTreeMap<i64, C>,
}

impl<C: Coefficient> LaurentPoly<C> {
    pub fn zero() -> Self {
        LaurentPoly {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::monomial(C::one(), 0)
    }

    /// The single term `c·A^k`; the zero polynomial when `c = 0`.
    pub fn monomial(coeff: C, exp: i64) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(exp, coeff);
        }
        LaurentPoly { terms }
    }

    /// The loop value `δ = -A² - A⁻²`.
    pub fn delta() -> Self {
        let mut p = Self::zero();
        p.add_term(-C::one(), 2);
        p.add_term(-C::one(), -2);
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }

    /// Terms in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &C)> {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn add_term(&mut self, coeff: C, exp: i64) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.get_mut(&exp) {
            Some(c) => {
                *c += coeff;
                if c.is_zero() {
                    self.terms.remove(&exp);
                }
            }
            None => {
                self.terms.insert(exp, coeff);
            }
        }
    }

    /// Adds `other · A^shift` into `self`.
    pub fn add_shifted(&mut self, other: &Self, shift: i64) {
        for (e, c) in other.terms() {
            self.add_term(c.clone(), e + shift);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_shifted(other, 0);
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (e1, c1) in self.terms() {
            for (e2, c2) in other.terms() {
                out.add_term(c1.clone() * c2.clone(), e1 + e2);
            }
        }
        out
    }

    /// Multiplies by the single term `c·A^k`.
    pub fn mul_monomial(&self, coeff: C, exp: i64) -> Self {
        let mut out = Self::zero();
        for (e, c) in self.terms() {
            out.add_term(c.clone() * coeff.clone(), e + exp);
        }
        out
    }

    pub fn neg(&self) -> Self {
        let mut out = Self::zero();
        for (e, c) in self.terms() {
            out.add_term(-c.clone(), e);
        }
        out
    }

    pub fn pow(&self, n: usize) -> Self {
        let mut out = Self::one();
        for _ in 0..n {
            out = out.mul(self);
        }
        out
    }
}

/// Canonical text: terms ascending, e.g. `-A^-4 + 1 + 2A^6`.
impl<C: Coefficient> fmt::Display for LaurentPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (exp, coeff) in self.terms() {
            let text = coeff.to_string();
            let (negative, magnitude) = match text.strip_prefix('-') {
                Some(rest) => (true, rest.to_string()),
                None => (false, text),
            };
            if first {
                if negative {
                    write!(f, "-")?;
                }
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            first = false;
            let coeff_is_unit = magnitude == "1";
            if exp == 0 {
                write!(f, "{magnitude}")?;
            } else {
                if !coeff_is_unit {
                    write!(f, "{magnitude}")?;
                }
                if exp == 1 {
                    write!(f, "A")?;
                } else {
                    write!(f, "A^{exp}")?;
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type P = LaurentPoly<i64>;

    #[test]
    fn delta_is_minus_a2_minus_a_minus2() {
        assert_eq!(P::delta().to_string(), "-A^-2 - A^2");
    }

    #[test]
    fn display_examples() {
        assert_eq!(P::zero().to_string(), "0");
        assert_eq!(P::one().to_string(), "1");
        let mut p = P::monomial(-1, -4);
        p.add_term(1, 0);
        p.add_term(2, 6);
        assert_eq!(p.to_string(), "-A^-4 + 1 + 2A^6");
        assert_eq!(P::monomial(3, 1).to_string(), "3A");
        assert_eq!(P::monomial(-1, 3).to_string(), "-A^3");
    }

    #[test]
    fn arithmetic_cancels_zero_terms() {
        let p = P::monomial(2, 3);
        let q = P::monomial(-2, 3);
        assert!(p.add(&q).is_zero());
        assert_eq!(p.mul(&q), P::monomial(-4, 6));
        assert!(P::delta().mul_monomial(1, 2).add(&P::delta().neg().mul_monomial(1, 2)).is_zero());
    }

    #[test]
    fn pow_matches_repeated_mul() {
        let d = P::delta();
        assert_eq!(d.pow(0), P::one());
        assert_eq!(d.pow(3), d.mul(&d).mul(&d));
    }
}
