//! Integer Laurent polynomials in `s = q^{1/2}`.
//!
//! Every coefficient produced while straightening words or reducing by the
//! quantum determinant lies in ℤ[s, s⁻¹]: the commutation rules have integer
//! coefficients and the determinant reduction only divides by `±s^k`. Keeping
//! that inner arithmetic in machine integers is much cheaper than going through
//! the big-rational field.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use smallvec::SmallVec;

use crate::error::{Error, Result};
use crate::qscalar::{Laurent, RatFunc};

#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct ZPoly {
    low: i32,
    coeffs: SmallVec<[i128; 4]>,
}

fn overflow() -> Error {
    Error::ResourceLimit("coefficient overflow in the rewriting layer".into())
}

impl ZPoly {
    pub fn zero() -> Self {
        ZPoly::default()
    }

    pub fn one() -> Self {
        ZPoly::monomial(1, 0)
    }

    pub fn monomial(c: i128, exp: i32) -> Self {
        if c == 0 {
            return ZPoly::zero();
        }
        let mut coeffs = SmallVec::new();
        coeffs.push(c);
        ZPoly { low: exp, coeffs }
    }

    /// `q - q^{-1}`
    pub fn q_minus_qinv() -> Self {
        let mut p = ZPoly { low: -2, coeffs: SmallVec::from_slice(&[-1, 0, 0, 0, 1]) };
        p.normalize();
        p
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn normalize(&mut self) {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
        let lead = self.coeffs.iter().take_while(|c| **c == 0).count();
        if lead > 0 {
            self.coeffs.drain(..lead);
            self.low += lead as i32;
        }
        if self.coeffs.is_empty() {
            self.low = 0;
        }
    }

    pub fn as_monomial(&self) -> Option<(i128, i32)> {
        (self.coeffs.len() == 1).then(|| (self.coeffs[0], self.low))
    }

    /// `self += c · s^e · other`
    pub fn add_scaled(&mut self, other: &ZPoly, c: i128, e: i32) -> Result<()> {
        if other.is_zero() || c == 0 {
            return Ok(());
        }
        let olow = other.low + e;
        if self.is_zero() {
            self.low = olow;
            self.coeffs.clear();
            for x in &other.coeffs {
                self.coeffs.push(x.checked_mul(c).ok_or_else(overflow)?);
            }
            return Ok(());
        }
        let low = self.low.min(olow);
        let high = (self.low + self.coeffs.len() as i32).max(olow + other.coeffs.len() as i32);
        if low < self.low {
            let pad = (self.low - low) as usize;
            self.coeffs.insert_many(0, core::iter::repeat_n(0, pad));
            self.low = low;
        }
        self.coeffs.resize((high - low) as usize, 0);
        for (k, x) in other.coeffs.iter().enumerate() {
            let idx = (olow - low) as usize + k;
            let t = x.checked_mul(c).ok_or_else(overflow)?;
            self.coeffs[idx] = self.coeffs[idx].checked_add(t).ok_or_else(overflow)?;
        }
        self.normalize();
        Ok(())
    }

    pub fn add_assign(&mut self, other: &ZPoly) -> Result<()> {
        self.add_scaled(other, 1, 0)
    }

    pub fn mul(&self, other: &ZPoly) -> Result<ZPoly> {
        if self.is_zero() || other.is_zero() {
            return Ok(ZPoly::zero());
        }
        let mut coeffs: SmallVec<[i128; 4]> = SmallVec::from_elem(0, self.coeffs.len() + other.coeffs.len() - 1);
        for (i, a) in self.coeffs.iter().enumerate() {
            if *a == 0 {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                let t = a.checked_mul(*b).ok_or_else(overflow)?;
                coeffs[i + j] = coeffs[i + j].checked_add(t).ok_or_else(overflow)?;
            }
        }
        let mut p = ZPoly { low: self.low + other.low, coeffs };
        p.normalize();
        Ok(p)
    }

    pub fn scaled(&self, c: i128, e: i32) -> Result<ZPoly> {
        let mut out = ZPoly::zero();
        out.add_scaled(self, c, e)?;
        Ok(out)
    }

    pub fn to_laurent(&self) -> Laurent {
        let coeffs: Vec<BigRational> =
            self.coeffs.iter().map(|c| BigRational::from_integer(BigInt::from(*c))).collect();
        Laurent::from_parts(self.low, coeffs)
    }

    pub fn to_ratfunc(&self) -> RatFunc {
        self.to_laurent().into()
    }
}
