//! Laurent polynomials in `s = q^{1/2}` with rational coefficients, and the
//! dense univariate helpers (division, gcd) the fraction field needs.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// `Σ coeffs[k] · s^(low + k)`, normalized so that the first and last
/// coefficients are nonzero. The zero polynomial has no coefficients and `low = 0`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Laurent {
    low: i32,
    coeffs: Vec<BigRational>,
}

impl PartialOrd for Laurent {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Laurent {
    fn cmp(&self, other: &Self) -> Ordering {
        self.low
            .cmp(&other.low)
            .then_with(|| self.coeffs.len().cmp(&other.coeffs.len()))
            .then_with(|| self.coeffs.cmp(&other.coeffs))
    }
}

impl Laurent {
    pub fn zero() -> Self {
        Laurent::default()
    }

    pub fn one() -> Self {
        Laurent::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Laurent::monomial(c, 0)
    }

    /// `c · s^exp`
    pub fn monomial(c: BigRational, exp: i32) -> Self {
        if c.is_zero() {
            return Laurent::zero();
        }
        Laurent { low: exp, coeffs: vec![c] }
    }

    pub fn from_parts(low: i32, coeffs: Vec<BigRational>) -> Self {
        let mut p = Laurent { low, coeffs };
        p.normalize();
        p
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
        let lead = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead > 0 {
            self.coeffs.drain(..lead);
            self.low += lead as i32;
        }
        if self.coeffs.is_empty() {
            self.low = 0;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.low == 0 && self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn low(&self) -> i32 {
        self.low
    }

    /// Highest exponent present; `low - 1` for zero.
    pub fn high(&self) -> i32 {
        self.low + self.coeffs.len() as i32 - 1
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, exp: i32) -> BigRational {
        let k = exp - self.low;
        if k < 0 || k as usize >= self.coeffs.len() {
            BigRational::zero()
        } else {
            self.coeffs[k as usize].clone()
        }
    }

    /// Single term `c · s^e`, if this is one.
    pub fn as_monomial(&self) -> Option<(&BigRational, i32)> {
        (self.coeffs.len() == 1).then(|| (&self.coeffs[0], self.low))
    }

    /// Iterator over `(exponent, coefficient)` with nonzero coefficients, increasing exponent.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i32, &BigRational)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(k, c)| (self.low + k as i32, c))
    }

    pub fn add(&self, other: &Laurent) -> Laurent {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let low = self.low.min(other.low);
        let high = self.high().max(other.high());
        let mut coeffs = vec![BigRational::zero(); (high - low + 1) as usize];
        for (k, c) in self.coeffs.iter().enumerate() {
            coeffs[(self.low - low) as usize + k] += c;
        }
        for (k, c) in other.coeffs.iter().enumerate() {
            coeffs[(other.low - low) as usize + k] += c;
        }
        Laurent::from_parts(low, coeffs)
    }

    pub fn neg(&self) -> Laurent {
        Laurent { low: self.low, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn sub(&self, other: &Laurent) -> Laurent {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Laurent) -> Laurent {
        if self.is_zero() || other.is_zero() {
            return Laurent::zero();
        }
        if let Some((c, e)) = other.as_monomial() {
            return self.scale_shift(c, e);
        }
        if let Some((c, e)) = self.as_monomial() {
            return other.scale_shift(c, e);
        }
        let mut coeffs = vec![BigRational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Laurent::from_parts(self.low + other.low, coeffs)
    }

    /// `c · s^e · self`
    pub fn scale_shift(&self, c: &BigRational, e: i32) -> Laurent {
        if c.is_zero() || self.is_zero() {
            return Laurent::zero();
        }
        let coeffs = if c.is_one() {
            self.coeffs.clone()
        } else {
            self.coeffs.iter().map(|x| x * c).collect()
        };
        Laurent { low: self.low + e, coeffs }
    }

    pub fn shift(&self, e: i32) -> Laurent {
        if self.is_zero() {
            return Laurent::zero();
        }
        Laurent { low: self.low + e, coeffs: self.coeffs.clone() }
    }

    pub fn pow(&self, n: u32) -> Laurent {
        let mut acc = Laurent::one();
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    /// `s ↦ 1/s`
    pub fn invert_variable(&self) -> Laurent {
        if self.is_zero() {
            return Laurent::zero();
        }
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        Laurent { low: -self.high(), coeffs }
    }

    pub fn eval(&self, s0: f64) -> f64 {
        if self.is_zero() {
            return 0.0;
        }
        let mut acc = 0.0;
        for c in self.coeffs.iter().rev() {
            acc = acc * s0 + rat_to_f64(c);
        }
        acc * powi(s0, self.low)
    }

    /// Coefficient vector of the ordinary polynomial `s^{-low} · self`.
    pub(crate) fn into_dense(self) -> (i32, Vec<BigRational>) {
        (self.low, self.coeffs)
    }
}

pub(crate) fn rat_to_f64(c: &BigRational) -> f64 {
    c.to_f64().unwrap_or_else(|| {
        // fall back to a scaled division for huge numerators/denominators
        let n = c.numer().to_f64().unwrap_or(f64::NAN);
        let d = c.denom().to_f64().unwrap_or(f64::NAN);
        n / d
    })
}

pub(crate) fn powi(x: f64, e: i32) -> f64 {
    let mut base = if e < 0 { 1.0 / x } else { x };
    let mut n = e.unsigned_abs();
    let mut acc = 1.0;
    while n > 0 {
        if n & 1 == 1 {
            acc *= base;
        }
        base *= base;
        n >>= 1;
    }
    acc
}

// Dense polynomials: index = degree, no trailing zeros.

pub(crate) fn trim(p: &mut Vec<BigRational>) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

pub(crate) fn dense_mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(&mut out);
    out
}

/// Quotient and remainder of `a / b`, `b` nonzero.
pub(crate) fn dense_divrem(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let mut rem: Vec<BigRational> = a.to_vec();
    trim(&mut rem);
    let db = b.len() - 1;
    let lead = &b[db];
    if rem.len() < b.len() {
        return (Vec::new(), rem);
    }
    let mut quot = vec![BigRational::zero(); rem.len() - db];
    while rem.len() > db && !rem.is_empty() {
        let shift = rem.len() - 1 - db;
        let factor = rem.last().unwrap() / lead;
        for (k, bc) in b.iter().enumerate() {
            let t = &factor * bc;
            rem[shift + k] -= t;
        }
        quot[shift] = factor;
        rem.pop();
        trim(&mut rem);
    }
    trim(&mut quot);
    (quot, rem)
}

/// Monic gcd.
pub(crate) fn dense_gcd(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    trim(&mut x);
    trim(&mut y);
    while !y.is_empty() {
        let (_, r) = dense_divrem(&x, &y);
        x = y;
        y = r;
    }
    if let Some(l) = x.last().cloned() {
        for c in x.iter_mut() {
            *c /= &l;
        }
    }
    x
}

pub(crate) fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub(crate) fn is_perfect_square(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let r = n.sqrt();
    (&r * &r == *n).then_some(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn l(low: i32, c: &[i64]) -> Laurent {
        Laurent::from_parts(low, c.iter().map(|&x| rat(x, 1)).collect())
    }

    #[test]
    fn normalization_strips_zeros() {
        let p = l(-2, &[0, 0, 3, 0]);
        assert_eq!(p.low(), 0);
        assert_eq!(p.coeffs().len(), 1);
        assert!(l(5, &[0, 0]).is_zero());
    }

    #[test]
    fn product_and_inversion() {
        // (s^-1 + s)(s^-1 - s) = s^-2 - s^2
        let a = l(-1, &[1, 0, 1]);
        let b = l(-1, &[1, 0, -1]);
        assert_eq!(a.mul(&b), l(-2, &[1, 0, 0, 0, -1]));
        assert_eq!(a.invert_variable(), a);
        assert_eq!(b.invert_variable(), b.neg());
    }

    #[test]
    fn gcd_of_shared_factor() {
        // (x-1)(x+2) and (x-1)(x-3)
        let a = vec![rat(-2, 1), rat(1, 1), rat(1, 1)];
        let b = vec![rat(3, 1), rat(-4, 1), rat(1, 1)];
        assert_eq!(dense_gcd(&a, &b), vec![rat(-1, 1), rat(1, 1)]);
    }

    #[test]
    fn eval_laurent() {
        let p = l(-1, &[1, 0, 1]);
        assert!((p.eval(0.5) - 2.5).abs() < 1e-15);
    }
}
