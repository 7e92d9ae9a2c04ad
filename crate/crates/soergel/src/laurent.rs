//! Laurent polynomials in one variable `t` with integer coefficients.
//!
//! These are the scalars of the Hecke algebra and of graded ranks: exact,
//! sparse, ordered by exponent.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

/// A Laurent polynomial `sum c_k t^k` with `c_k` in `Z`.
///
/// Zero coefficients are never stored; the zero polynomial has an empty
/// coefficient map.
#[derive(Clone, PartialEq, Eq, Default, Hash, PartialOrd, Ord)]
pub struct Laurent {
    coeffs: BTreeMap<i64, i64>,
}

impl Laurent {
    pub fn zero() -> Self {
        Laurent::default()
    }

    pub fn one() -> Self {
        Laurent::monomial(0, 1)
    }

    /// `c * t^k`.
    pub fn monomial(exp: i64, c: i64) -> Self {
        let mut coeffs = BTreeMap::new();
        if c != 0 {
            coeffs.insert(exp, c);
        }
        Laurent { coeffs }
    }

    /// `t^k`.
    pub fn t_pow(exp: i64) -> Self {
        Laurent::monomial(exp, 1)
    }

    pub fn from_int(c: i64) -> Self {
        Laurent::monomial(0, c)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, exp: i64) -> i64 {
        self.coeffs.get(&exp).copied().unwrap_or(0)
    }

    /// Iterate over `(exponent, coefficient)` pairs in increasing exponent
    /// order.
    pub fn iter(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.coeffs.iter().map(|(&e, &c)| (e, c))
    }

    /// The bar involution `t -> t^-1`.
    pub fn bar(&self) -> Self {
        Laurent {
            coeffs: self.iter().map(|(e, c)| (-e, c)).collect(),
        }
    }

    fn insert(&mut self, exp: i64, c: i64) {
        if c == 0 {
            return;
        }
        let entry = self.coeffs.entry(exp).or_insert(0);
        *entry += c;
        if *entry == 0 {
            self.coeffs.remove(&exp);
        }
    }
}

impl AddAssign<&Laurent> for Laurent {
    fn add_assign(&mut self, rhs: &Laurent) {
        for (e, c) in rhs.iter() {
            self.insert(e, c);
        }
    }
}

impl SubAssign<&Laurent> for Laurent {
    fn sub_assign(&mut self, rhs: &Laurent) {
        for (e, c) in rhs.iter() {
            self.insert(e, -c);
        }
    }
}

impl Add for &Laurent {
    type Output = Laurent;
    fn add(self, rhs: &Laurent) -> Laurent {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &Laurent {
    type Output = Laurent;
    fn sub(self, rhs: &Laurent) -> Laurent {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Mul for &Laurent {
    type Output = Laurent;
    fn mul(self, rhs: &Laurent) -> Laurent {
        let mut out = Laurent::zero();
        for (e1, c1) in self.iter() {
            for (e2, c2) in rhs.iter() {
                out.insert(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl MulAssign<&Laurent> for Laurent {
    fn mul_assign(&mut self, rhs: &Laurent) {
        *self = &*self * rhs;
    }
}

impl Neg for &Laurent {
    type Output = Laurent;
    fn neg(self) -> Laurent {
        Laurent {
            coeffs: self.iter().map(|(e, c)| (e, -c)).collect(),
        }
    }
}

impl fmt::Display for Laurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        // Highest exponent first reads most naturally.
        for (idx, (&e, &c)) in self.coeffs.iter().rev().enumerate() {
            let (sign, mag) = if c < 0 { ("-", -c) } else { ("+", c) };
            if idx == 0 {
                if sign == "-" {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            match (e, mag) {
                (0, m) => write!(f, "{m}")?,
                (1, 1) => write!(f, "t")?,
                (1, m) => write!(f, "{m}*t")?,
                (e, 1) => write!(f, "t^{e}")?,
                (e, m) => write!(f, "{m}*t^{e}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Laurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_and_bar() {
        let a = &Laurent::t_pow(1) + &Laurent::t_pow(-1); // t + t^-1
        let sq = &a * &a;
        assert_eq!(sq.coeff(2), 1);
        assert_eq!(sq.coeff(0), 2);
        assert_eq!(sq.coeff(-2), 1);
        assert_eq!(a.bar(), a);
        let b = &Laurent::t_pow(2) - &Laurent::one();
        assert_eq!(b.bar(), &Laurent::t_pow(-2) - &Laurent::one());
    }

    #[test]
    fn display() {
        let b = &(&Laurent::t_pow(2) - &Laurent::one()) - &Laurent::monomial(-1, 2);
        assert_eq!(b.to_string(), "t^2 - 1 - 2*t^-1");
        assert_eq!(Laurent::zero().to_string(), "0");
    }
}
