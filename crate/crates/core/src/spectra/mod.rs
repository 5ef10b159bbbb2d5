//! Closed-form spectra: the Dirac operator on CP²_q and the gauged Laplacians
//! on the monopole bundles, plus summability diagnostics.

use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::qscalar::{check_q, q_int, QScalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    Kernel,
    /// `±√(2[n][n+2]/[2])`.
    APlus,
    AMinus,
    /// `±√([n+1][n+2])`.
    BPlus,
    BMinus,
    /// `λ_{n,N}` for the given charge.
    Laplacian(i32),
}

impl Family {
    pub fn sign(self) -> i32 {
        match self {
            Family::APlus | Family::BPlus => 1,
            Family::AMinus | Family::BMinus => -1,
            _ => 0,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Kernel => f.write_str("kernel"),
            Family::APlus => f.write_str("A+"),
            Family::AMinus => f.write_str("A-"),
            Family::BPlus => f.write_str("B+"),
            Family::BMinus => f.write_str("B-"),
            Family::Laplacian(n) => write!(f, "laplacian(N={n})"),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SpectrumEntry {
    pub family: Family,
    pub n: i64,
    pub eigenvalue: QScalar,
    /// `None` where the multiplicity is not known in closed form.
    pub multiplicity: Option<u64>,
    pub numeric: Option<f64>,
}

/// `2[n][n+2]/[2]`, the square of the family A eigenvalue.
pub fn dirac_a_squared(n: i64) -> QScalar {
    let num = QScalar::from(2).mul(&q_int(n)).mul(&q_int(n + 2));
    num.div(&q_int(2)).expect("[2] is invertible")
}

/// `[n+1][n+2]`, the square of the family B eigenvalue.
pub fn dirac_b_squared(n: i64) -> QScalar {
    q_int(n + 1).mul(&q_int(n + 2))
}

pub fn multiplicity_a(n: u64) -> u64 {
    (n + 1).pow(3)
}

pub fn multiplicity_b(n: u64) -> u64 {
    n * (n + 3) * (2 * n + 3) / 2
}

/// Sum of the multiplicities at level `n` over both families and both signs.
pub fn level_multiplicity(n: u64) -> u64 {
    2 * multiplicity_a(n) + 2 * multiplicity_b(n)
}

fn numeric(x: &QScalar, q0: Option<f64>) -> Result<Option<f64>> {
    q0.map(|q| x.eval(q)).transpose()
}

/// Kernel plus the four families for `1 ≤ n ≤ n_max`.
pub fn dirac_spectrum(n_max: i64, q0: Option<f64>) -> Result<Vec<SpectrumEntry>> {
    if n_max < 1 {
        return Err(Error::Precondition(alloc::format!("n_max must be at least 1, got {n_max}")));
    }
    let mut out = alloc::vec![SpectrumEntry {
        family: Family::Kernel,
        n: 0,
        eigenvalue: QScalar::zero(),
        multiplicity: Some(1),
        numeric: numeric(&QScalar::zero(), q0)?,
    }];
    for n in 1..=n_max {
        let a = dirac_a_squared(n).sqrt()?;
        let b = dirac_b_squared(n).sqrt()?;
        let (ma, mb) = (multiplicity_a(n as u64), multiplicity_b(n as u64));
        for (family, value, mult) in [
            (Family::APlus, a.clone(), ma),
            (Family::AMinus, a.neg(), ma),
            (Family::BPlus, b.clone(), mb),
            (Family::BMinus, b.neg(), mb),
        ] {
            let numeric = numeric(&value, q0)?;
            out.push(SpectrumEntry { family, n, eigenvalue: value, multiplicity: Some(mult), numeric });
        }
    }
    Ok(out)
}

/// `λ_{n,N} = (1+q^{-3})[n][n+N+2] + [2][N]` for `N ≥ 0` and
/// `(1+q^{-3})[n+2][n-N] + [2][N]` for `N ≤ 0`.
pub fn laplacian_eigenvalue(n: i64, charge: i64) -> QScalar {
    let pre = QScalar::one().add(&QScalar::q_pow(-3));
    let first = if charge >= 0 {
        q_int(n).mul(&q_int(n + charge + 2))
    } else {
        q_int(n + 2).mul(&q_int(n - charge))
    };
    pre.mul(&first).add(&q_int(2).mul(&q_int(charge)))
}

pub fn laplacian_spectrum(charge: i32, n_max: i64, q0: Option<f64>) -> Result<Vec<SpectrumEntry>> {
    if n_max < 0 {
        return Err(Error::Precondition(alloc::format!("n_max must be nonnegative, got {n_max}")));
    }
    (0..=n_max)
        .map(|n| {
            let value = laplacian_eigenvalue(n, charge as i64);
            Ok(SpectrumEntry {
                family: Family::Laplacian(charge),
                n,
                numeric: numeric(&value, q0)?,
                eigenvalue: value,
                multiplicity: None,
            })
        })
        .collect()
}

/// Levels `n` at which `λ_{n,N}` differs from `λ_{n,-N}`, and from
/// `λ_{n,-N}` with `q ↦ q^{-1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AsymmetryReport {
    pub charge: i32,
    pub swap_witnesses: Vec<i64>,
    pub inverted_witnesses: Vec<i64>,
}

impl AsymmetryReport {
    pub fn found(&self) -> bool {
        !self.swap_witnesses.is_empty() && !self.inverted_witnesses.is_empty()
    }
}

pub fn check_asymmetry(charge: i32, n_max: i64) -> Result<AsymmetryReport> {
    if charge == 0 {
        return Err(Error::Precondition("asymmetry needs N != 0".into()));
    }
    let mut report = AsymmetryReport { charge, swap_witnesses: Vec::new(), inverted_witnesses: Vec::new() };
    for n in 0..=n_max {
        let a = laplacian_eigenvalue(n, charge as i64);
        let b = laplacian_eigenvalue(n, -(charge as i64));
        if a != b {
            report.swap_witnesses.push(n);
        }
        if a != b.invert_q() {
            report.inverted_witnesses.push(n);
        }
    }
    Ok(report)
}

/// `log [x]_q` for `x ≥ 1`, stable for large `x`.
fn log_q_int(x: f64, q: f64) -> f64 {
    -x * libm::log(q) + libm::log1p(-libm::pow(q, 2.0 * x)) - libm::log(1.0 / q - q)
}

/// `log(1 + e^l)`.
fn log1p_exp(l: f64) -> f64 {
    if l > 0.0 {
        l + libm::log1p(libm::exp(-l))
    } else {
        libm::log1p(libm::exp(l))
    }
}

/// Partial sums of `Tr (1+D²)^{-ε}` with a tail bound.
#[derive(Clone, Debug, PartialEq)]
pub struct Summability {
    pub epsilon: f64,
    pub q0: f64,
    pub n_max: u64,
    /// Partial sums after levels `0..=n_max` (level 0 is the kernel).
    pub partial_sums: Vec<f64>,
    /// Ratios of successive level contributions.
    pub term_ratios: Vec<f64>,
    /// Bound on `Σ_{n > n_max}`, present when the majorant is geometric
    /// from `n_max + 1` on.
    pub tail_bound: Option<f64>,
}

impl Summability {
    pub fn total(&self) -> f64 {
        *self.partial_sums.last().unwrap_or(&0.0)
    }

    pub fn certified(&self) -> bool {
        self.tail_bound.is_some()
    }
}

/// Uses `[m] ≥ q^{1-m}` and `[2] ≤ 2q^{-1}`, so every eigenvalue at level `n`
/// has `1+λ² ≥ q^{1-2n}`. With `M(n)` the level multiplicity, which has
/// positive coefficients, `M(n+1)/M(n) ≤ (1+1/n)³`, so from `n₀ = n_max+1`
/// the majorant `M(n) q^{ε(2n-1)}` decreases at least geometrically with
/// ratio `r = (1+1/n₀)³ q^{2ε}` once `r < 1`.
pub fn summability_partial(epsilon: f64, n_max: u64, q0: f64) -> Result<Summability> {
    check_q(q0)?;
    if !(epsilon > 0.0) {
        return Err(Error::Precondition(alloc::format!("epsilon must be positive, got {epsilon}")));
    }
    let mut sums = alloc::vec![1.0];
    let mut ratios = Vec::new();
    let mut prev = 1.0;
    let log2 = libm::log(2.0);
    for n in 1..=n_max {
        let nf = n as f64;
        let la = log2 + log_q_int(nf, q0) + log_q_int(nf + 2.0, q0) - log_q_int(2.0, q0);
        let lb = log_q_int(nf + 1.0, q0) + log_q_int(nf + 2.0, q0);
        let term = 2.0 * multiplicity_a(n) as f64 * libm::exp(-epsilon * log1p_exp(la))
            + 2.0 * multiplicity_b(n) as f64 * libm::exp(-epsilon * log1p_exp(lb));
        if n > 1 {
            ratios.push(term / prev);
        }
        prev = term;
        let last = *sums.last().unwrap();
        sums.push(last + term);
    }
    let n0 = (n_max + 1) as f64;
    let r = libm::pow(1.0 + 1.0 / n0, 3.0) * libm::pow(q0, 2.0 * epsilon);
    let tail_bound = (r < 1.0).then(|| {
        let first = level_multiplicity(n_max + 1) as f64 * libm::pow(q0, epsilon * (2.0 * n0 - 1.0));
        first / (1.0 - r)
    });
    Ok(Summability { epsilon, q0, n_max, partial_sums: sums, term_ratios: ratios, tail_bound })
}

/// Doubles `n_max` from `start` until the tail bound is below `tol`.
pub fn summability_certified(epsilon: f64, q0: f64, tol: f64, start: u64, max_levels: u64) -> Result<Summability> {
    let mut n = start.max(1);
    loop {
        let s = summability_partial(epsilon, n, q0)?;
        if s.tail_bound.is_some_and(|t| t < tol) {
            return Ok(s);
        }
        if n >= max_levels {
            return Err(Error::NoConvergence(alloc::format!(
                "tail of Tr(1+D^2)^-{epsilon} at q0={q0} not below {tol} within {max_levels} levels"
            )));
        }
        n = (2 * n).min(max_levels);
    }
}

#[cfg(test)]
mod tests;
