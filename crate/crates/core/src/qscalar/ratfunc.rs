//! The field ℚ(s) as reduced fractions of Laurent polynomials.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use num_rational::BigRational;
use num_traits::One;

use super::poly::{dense_divrem, dense_gcd, dense_mul, Laurent};

/// `num / den` with `den` a monic ordinary polynomial with nonzero constant
/// term, coprime to `num`. Powers of `s` always live in `num`, so equal field
/// elements have identical representations.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RatFunc {
    num: Laurent,
    den: Vec<BigRational>,
}

impl PartialOrd for RatFunc {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for RatFunc {
    fn cmp(&self, other: &Self) -> Ordering {
        self.den
            .len()
            .cmp(&other.den.len())
            .then_with(|| self.den.cmp(&other.den))
            .then_with(|| self.num.cmp(&other.num))
    }
}

impl Default for RatFunc {
    fn default() -> Self {
        RatFunc::zero()
    }
}

impl From<Laurent> for RatFunc {
    fn from(num: Laurent) -> Self {
        RatFunc { num, den: vec![BigRational::one()] }
    }
}

impl RatFunc {
    pub fn zero() -> Self {
        Laurent::zero().into()
    }

    pub fn one() -> Self {
        Laurent::one().into()
    }

    pub fn constant(c: BigRational) -> Self {
        Laurent::constant(c).into()
    }

    pub fn monomial(c: BigRational, exp: i32) -> Self {
        Laurent::monomial(c, exp).into()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.is_polynomial() && self.num.is_one()
    }

    /// True when the denominator is 1, i.e. this is a Laurent polynomial.
    pub fn is_polynomial(&self) -> bool {
        self.den.len() == 1
    }

    pub fn numer(&self) -> &Laurent {
        &self.num
    }

    /// Denominator as a Laurent polynomial.
    pub fn denom(&self) -> Laurent {
        Laurent::from_parts(0, self.den.clone())
    }

    /// Builds `num / den` and reduces. Panics on a zero denominator.
    pub fn from_fraction(num: Laurent, den: Laurent) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return RatFunc::zero();
        }
        let (dlow, dcoeffs) = den.into_dense();
        let (nlow, ncoeffs) = num.into_dense();
        let low = nlow - dlow;
        if dcoeffs.len() == 1 {
            let c = &dcoeffs[0];
            let coeffs = ncoeffs.iter().map(|x| x / c).collect();
            return Laurent::from_parts(low, coeffs).into();
        }
        let g = dense_gcd(&ncoeffs, &dcoeffs);
        let (mut n, mut d) = if g.len() > 1 {
            (dense_divrem(&ncoeffs, &g).0, dense_divrem(&dcoeffs, &g).0)
        } else {
            (ncoeffs, dcoeffs)
        };
        let lead = d.last().unwrap().clone();
        if !lead.is_one() {
            for c in n.iter_mut() {
                *c /= &lead;
            }
            for c in d.iter_mut() {
                *c /= &lead;
            }
        }
        RatFunc { num: Laurent::from_parts(low, n), den: d }
    }

    pub fn add(&self, other: &RatFunc) -> RatFunc {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        if self.den == other.den {
            if self.is_polynomial() {
                return self.num.add(&other.num).into();
            }
            return RatFunc::from_fraction(self.num.add(&other.num), self.denom());
        }
        let num = self.num.mul(&other.denom()).add(&other.num.mul(&self.denom()));
        let den = dense_mul(&self.den, &other.den);
        RatFunc::from_fraction(num, Laurent::from_parts(0, den))
    }

    pub fn neg(&self) -> RatFunc {
        RatFunc { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn sub(&self, other: &RatFunc) -> RatFunc {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &RatFunc) -> RatFunc {
        if self.is_zero() || other.is_zero() {
            return RatFunc::zero();
        }
        if self.is_polynomial() && other.is_polynomial() {
            return self.num.mul(&other.num).into();
        }
        RatFunc::from_fraction(
            self.num.mul(&other.num),
            Laurent::from_parts(0, dense_mul(&self.den, &other.den)),
        )
    }

    pub fn inv(&self) -> Option<RatFunc> {
        if self.is_zero() {
            return None;
        }
        Some(RatFunc::from_fraction(self.denom(), self.num.clone()))
    }

    pub fn div(&self, other: &RatFunc) -> Option<RatFunc> {
        Some(self.mul(&other.inv()?))
    }

    pub fn pow(&self, n: i32) -> RatFunc {
        let base = if n < 0 { self.inv().expect("inverse of zero") } else { self.clone() };
        let mut acc = RatFunc::one();
        for _ in 0..n.unsigned_abs() {
            acc = acc.mul(&base);
        }
        acc
    }

    /// `s ↦ 1/s`
    pub fn invert_variable(&self) -> RatFunc {
        RatFunc::from_fraction(self.num.invert_variable(), self.denom().invert_variable())
    }

    pub fn eval(&self, s0: f64) -> f64 {
        self.num.eval(s0) / self.denom().eval(s0)
    }

    /// `c · s^e` if this element is a single monomial.
    pub fn as_monomial(&self) -> Option<(&BigRational, i32)> {
        if self.is_polynomial() {
            self.num.as_monomial()
        } else {
            None
        }
    }

    pub fn as_constant(&self) -> Option<&BigRational> {
        match self.as_monomial() {
            Some((c, 0)) => Some(c),
            _ if self.is_zero() => None,
            _ => None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::super::poly::rat;
    use super::*;

    fn lp(low: i32, c: &[i64]) -> Laurent {
        Laurent::from_parts(low, c.iter().map(|&x| rat(x, 1)).collect())
    }

    #[test]
    fn fractions_reduce_to_canonical_form() {
        // (s^2 - 1)/(s - 1) = s + 1
        let f = RatFunc::from_fraction(lp(0, &[-1, 0, 1]), lp(0, &[-1, 1]));
        assert_eq!(f, RatFunc::from(lp(0, &[1, 1])));
        // (2 s^3)/(4 s) = s^2/2
        let g = RatFunc::from_fraction(lp(3, &[2]), lp(1, &[4]));
        assert_eq!(g, RatFunc::monomial(rat(1, 2), 2));
    }

    #[test]
    fn field_operations_round_trip() {
        let a = RatFunc::from_fraction(lp(0, &[1, 2]), lp(0, &[3, 0, 1]));
        let b = RatFunc::from_fraction(lp(-1, &[1, 0, 1]), lp(0, &[1, 1]));
        let c = a.div(&b).unwrap().mul(&b);
        assert_eq!(c, a);
        assert!(a.sub(&a).is_zero());
        assert_eq!(a.invert_variable().invert_variable(), a);
    }
}
