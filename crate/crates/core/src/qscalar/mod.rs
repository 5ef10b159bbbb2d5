//! Exact scalars in ℚ(q^{1/2}) with formal square-root atoms, and the q-analogues
//! built on top of them.
//!
//! All exponents are stored in the base variable `s = q^{1/2}`, so `q^{a/2}` is
//! the monomial `s^a`. A [`QScalar`] is a finite sum `Σ c_R · Π_{r∈R} √r`
//! over sets `R` of radical atoms; each atom is a radical-free element and a
//! product `√r · √r` collapses to `r`.

mod poly;
mod ratfunc;
pub mod text;

use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub use poly::Laurent;
pub use ratfunc::RatFunc;

use crate::error::{Error, Result};
use poly::is_perfect_square;
pub(crate) use poly::rat;

/// Sorted set of distinct radical atoms.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct Radicals(Vec<RatFunc>);

impl Radicals {
    pub fn atoms(&self) -> &[RatFunc] {
        &self.0
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Product of two atom sets: returns the surviving atoms and the product of
    /// the atoms that paired up.
    fn combine(&self, other: &Radicals) -> (Radicals, RatFunc) {
        let mut out = Vec::with_capacity(self.0.len() + other.0.len());
        let mut factor = RatFunc::one();
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            match self.0[i].cmp(&other.0[j]) {
                core::cmp::Ordering::Less => {
                    out.push(self.0[i].clone());
                    i += 1;
                }
                core::cmp::Ordering::Greater => {
                    out.push(other.0[j].clone());
                    j += 1;
                }
                core::cmp::Ordering::Equal => {
                    factor = factor.mul(&self.0[i]);
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.0[i..]);
        out.extend_from_slice(&other.0[j..]);
        (Radicals(out), factor)
    }
}

/// Exact element of ℚ(q^{1/2})[√r₁, √r₂, …].
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct QScalar {
    parts: Vec<(Radicals, RatFunc)>,
}

impl From<RatFunc> for QScalar {
    fn from(r: RatFunc) -> Self {
        if r.is_zero() {
            QScalar::zero()
        } else {
            QScalar { parts: alloc::vec![(Radicals::default(), r)] }
        }
    }
}

impl From<Laurent> for QScalar {
    fn from(l: Laurent) -> Self {
        RatFunc::from(l).into()
    }
}

impl From<i64> for QScalar {
    fn from(n: i64) -> Self {
        QScalar::rational(n, 1)
    }
}

/// Outcome of comparing two scalars.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Equality {
    /// Canonical forms coincide.
    Equal,
    /// Canonical forms differ and no radicals are involved, so the values differ.
    Different,
    /// Radical atoms did not cancel; numeric sampling agreed to 1e-12.
    NumericallyEqual,
    /// Radical atoms did not cancel; numeric sampling found a difference.
    NumericallyDifferent,
}

impl Equality {
    pub fn holds(self) -> bool {
        matches!(self, Equality::Equal | Equality::NumericallyEqual)
    }
}

/// Sample points used when radicals prevent an exact decision.
pub const SAMPLE_POINTS: [f64; 3] = [0.317, 0.5821, 0.8713];

impl QScalar {
    pub fn zero() -> Self {
        QScalar { parts: Vec::new() }
    }

    pub fn one() -> Self {
        RatFunc::one().into()
    }

    pub fn rational(n: i64, d: i64) -> Self {
        RatFunc::constant(rat(n, d)).into()
    }

    pub fn from_big_rational(c: BigRational) -> Self {
        RatFunc::constant(c).into()
    }

    /// `q^{half/2}`, i.e. `s^half`.
    pub fn q_half_pow(half: i32) -> Self {
        RatFunc::monomial(BigRational::one(), half).into()
    }

    /// `q^k`
    pub fn q_pow(k: i32) -> Self {
        QScalar::q_half_pow(2 * k)
    }

    /// `c · q^{half/2}`
    pub fn monomial(c: BigRational, half: i32) -> Self {
        RatFunc::monomial(c, half).into()
    }

    pub fn is_zero(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.parts.len() == 1 && self.parts[0].0.is_empty() && self.parts[0].1.is_one()
    }

    pub fn is_radical_free(&self) -> bool {
        self.parts.iter().all(|(r, _)| r.is_empty())
    }

    pub fn parts(&self) -> &[(Radicals, RatFunc)] {
        &self.parts
    }

    /// The underlying field element when no radicals are present.
    pub fn as_ratfunc(&self) -> Option<RatFunc> {
        match self.parts.as_slice() {
            [] => Some(RatFunc::zero()),
            [(r, c)] if r.is_empty() => Some(c.clone()),
            _ => None,
        }
    }

    fn from_parts(mut parts: Vec<(Radicals, RatFunc)>) -> Self {
        parts.sort_by(|a, b| a.0.cmp(&b.0));
        let mut out: Vec<(Radicals, RatFunc)> = Vec::with_capacity(parts.len());
        for (r, c) in parts {
            match out.last_mut() {
                Some((lr, lc)) if *lr == r => *lc = lc.add(&c),
                _ => out.push((r, c)),
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        QScalar { parts: out }
    }

    pub fn add(&self, other: &QScalar) -> QScalar {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        if self.parts.len() == 1 && other.parts.len() == 1 && self.parts[0].0 == other.parts[0].0 {
            let c = self.parts[0].1.add(&other.parts[0].1);
            if c.is_zero() {
                return QScalar::zero();
            }
            return QScalar { parts: alloc::vec![(self.parts[0].0.clone(), c)] };
        }
        let mut parts = self.parts.clone();
        parts.extend(other.parts.iter().cloned());
        QScalar::from_parts(parts)
    }

    pub fn neg(&self) -> QScalar {
        QScalar { parts: self.parts.iter().map(|(r, c)| (r.clone(), c.neg())).collect() }
    }

    pub fn sub(&self, other: &QScalar) -> QScalar {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &QScalar) -> QScalar {
        if self.is_zero() || other.is_zero() {
            return QScalar::zero();
        }
        if self.parts.len() == 1 && other.parts.len() == 1 {
            let (ra, ca) = &self.parts[0];
            let (rb, cb) = &other.parts[0];
            if ra.is_empty() && rb.is_empty() {
                return QScalar { parts: alloc::vec![(Radicals::default(), ca.mul(cb))] };
            }
        }
        let mut parts = Vec::with_capacity(self.parts.len() * other.parts.len());
        for (ra, ca) in &self.parts {
            for (rb, cb) in &other.parts {
                if ra.is_empty() && rb.is_empty() {
                    parts.push((Radicals::default(), ca.mul(cb)));
                } else {
                    let (r, f) = ra.combine(rb);
                    parts.push((r, ca.mul(cb).mul(&f)));
                }
            }
        }
        QScalar::from_parts(parts)
    }

    pub fn mul_ratfunc(&self, f: &RatFunc) -> QScalar {
        if f.is_zero() {
            return QScalar::zero();
        }
        QScalar { parts: self.parts.iter().map(|(r, c)| (r.clone(), c.mul(f))).collect() }
    }

    /// Inverse of a single radical monomial `c·√r₁⋯√r_k`; sums of distinct
    /// radical monomials are not inverted.
    pub fn inv(&self) -> Result<QScalar> {
        match self.parts.as_slice() {
            [(r, c)] => {
                let mut denom = c.clone();
                for a in r.atoms() {
                    denom = denom.mul(a);
                }
                let inv = denom.inv().ok_or(Error::NotInvertible)?;
                Ok(QScalar { parts: alloc::vec![(r.clone(), inv)] })
            }
            _ => Err(Error::NotInvertible),
        }
    }

    pub fn div(&self, other: &QScalar) -> Result<QScalar> {
        Ok(self.mul(&other.inv()?))
    }

    pub fn pow(&self, n: i32) -> Result<QScalar> {
        let base = if n < 0 { self.inv()? } else { self.clone() };
        let mut acc = QScalar::one();
        for _ in 0..n.unsigned_abs() {
            acc = acc.mul(&base);
        }
        Ok(acc)
    }

    /// Formal square root of a radical-free scalar. Monomials `c²·q^k` are
    /// taken exactly; anything else becomes a radical atom.
    pub fn sqrt(&self) -> Result<QScalar> {
        let r = self
            .as_ratfunc()
            .ok_or_else(|| Error::Precondition(format!("sqrt of a scalar carrying radicals: {self}")))?;
        if r.is_zero() {
            return Ok(QScalar::zero());
        }
        if let Some((c, e)) = r.as_monomial() {
            if e % 2 == 0 && c.is_positive() {
                if let (Some(n), Some(d)) = (is_perfect_square(c.numer()), is_perfect_square(c.denom())) {
                    return Ok(QScalar::monomial(BigRational::new(n, d), e / 2));
                }
            }
        }
        Ok(QScalar { parts: alloc::vec![(Radicals(alloc::vec![r]), RatFunc::one())] })
    }

    /// `q ↦ q^{-1}` (equivalently `s ↦ 1/s`), applied to coefficients and atoms.
    pub fn invert_q(&self) -> QScalar {
        let parts = self
            .parts
            .iter()
            .map(|(r, c)| {
                let mut atoms: Vec<RatFunc> = r.atoms().iter().map(|a| a.invert_variable()).collect();
                atoms.sort();
                (Radicals(atoms), c.invert_variable())
            })
            .collect();
        QScalar::from_parts(parts)
    }

    /// Numeric value at `q = q0 ∈ (0,1)`.
    pub fn eval(&self, q0: f64) -> Result<f64> {
        check_q(q0)?;
        Ok(self.eval_unchecked(q0))
    }

    pub(crate) fn eval_unchecked(&self, q0: f64) -> f64 {
        let s0 = libm::sqrt(q0);
        self.parts
            .iter()
            .map(|(r, c)| {
                let mut v = c.eval(s0);
                for a in r.atoms() {
                    v *= libm::sqrt(a.eval(s0));
                }
                v
            })
            .sum()
    }

    /// Exact comparison, with numeric sampling only when unmatched radicals remain.
    pub fn compare(&self, other: &QScalar) -> Equality {
        let d = self.sub(other);
        if d.is_zero() {
            return Equality::Equal;
        }
        if d.is_radical_free() {
            return Equality::Different;
        }
        let same = SAMPLE_POINTS.iter().all(|&q0| {
            let scale = 1.0f64.max(libm::fabs(self.eval_unchecked(q0))).max(libm::fabs(other.eval_unchecked(q0)));
            libm::fabs(d.eval_unchecked(q0)) <= 1e-12 * scale
        });
        if same {
            Equality::NumericallyEqual
        } else {
            Equality::NumericallyDifferent
        }
    }

    /// Rational constant value, if this is one.
    pub fn as_rational(&self) -> Option<BigRational> {
        if self.is_zero() {
            return Some(BigRational::zero());
        }
        let r = self.as_ratfunc()?;
        match r.as_monomial() {
            Some((c, 0)) => Some(c.clone()),
            _ => None,
        }
    }

    /// Integer value, if this is one.
    pub fn as_integer(&self) -> Option<BigInt> {
        let c = self.as_rational()?;
        c.is_integer().then(|| c.to_integer())
    }
}

pub(crate) fn check_q(q0: f64) -> Result<()> {
    if q0 > 0.0 && q0 < 1.0 {
        Ok(())
    } else {
        Err(Error::QOutOfRange(format!("{q0}")))
    }
}

impl fmt::Display for QScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&text::format_scalar(self))
    }
}

impl core::ops::Add for &QScalar {
    type Output = QScalar;
    fn add(self, rhs: &QScalar) -> QScalar {
        QScalar::add(self, rhs)
    }
}

impl core::ops::Sub for &QScalar {
    type Output = QScalar;
    fn sub(self, rhs: &QScalar) -> QScalar {
        QScalar::sub(self, rhs)
    }
}

impl core::ops::Mul for &QScalar {
    type Output = QScalar;
    fn mul(self, rhs: &QScalar) -> QScalar {
        QScalar::mul(self, rhs)
    }
}

impl core::ops::Neg for &QScalar {
    type Output = QScalar;
    fn neg(self) -> QScalar {
        QScalar::neg(self)
    }
}

// ---------------------------------------------------------------------------
// q-analogues

/// `[x]_q = (q^x - q^{-x})/(q - q^{-1})`, expanded as `q^{x-1} + q^{x-3} + … + q^{1-x}`.
pub fn q_int(x: i64) -> QScalar {
    if x == 0 {
        return QScalar::zero();
    }
    let n = x.unsigned_abs() as i32;
    let sign = if x < 0 { -1 } else { 1 };
    // exponents of q: n-1, n-3, ..., 1-n; in s they are doubled
    let coeffs = (0..(4 * (n - 1) + 1))
        .map(|k| if k % 4 == 0 { rat(sign, 1) } else { BigRational::zero() })
        .collect();
    Laurent::from_parts(-2 * (n - 1), coeffs).into()
}

/// `[n]_q! = [1]_q ⋯ [n]_q`, `[0]_q! = 1`.
pub fn q_factorial(n: i64) -> Result<QScalar> {
    if n < 0 {
        return Err(Error::NegativeArgument { what: "q_factorial", value: n });
    }
    let mut acc = QScalar::one();
    for k in 1..=n {
        acc = acc.mul(&q_int(k));
    }
    Ok(acc)
}

/// Gaussian binomial `[n]!/([m]![n-m]!)`.
pub fn q_binomial(n: i64, m: i64) -> Result<QScalar> {
    if n < 0 || m < 0 || m > n {
        return Err(Error::Precondition(format!("q_binomial needs 0 <= m <= n, got n={n}, m={m}")));
    }
    let den = q_factorial(m)?.mul(&q_factorial(n - m)?);
    q_factorial(n)?.div(&den)
}

/// `[j,k,l]_q! = q^{-(jk+kl+lj)} [j+k+l]!/([j]![k]![l]!)`.
pub fn q_trinomial(j: i64, k: i64, l: i64) -> Result<QScalar> {
    for (v, _) in [(j, 0), (k, 1), (l, 2)] {
        if v < 0 {
            return Err(Error::NegativeArgument { what: "q_trinomial", value: v });
        }
    }
    let den = q_factorial(j)?.mul(&q_factorial(k)?).mul(&q_factorial(l)?);
    let e = -(j * k + k * l + l * j) as i32;
    Ok(QScalar::q_pow(e).mul(&q_factorial(j + k + l)?.div(&den)?))
}

/// `eval` with the domain check on `q0`.
pub fn eval_numeric(x: &QScalar, q0: f64) -> Result<f64> {
    x.eval(q0)
}
