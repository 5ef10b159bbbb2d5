//! The three Fredholm modules of CP²_q evaluated on projections: the character
//! `χ_0`, the representation `χ_1` on a truncated `ℓ²(ℕ)`, the literal `π_±`
//! pair, and the q-valued Chern numbers.
//!
//! Everything is evaluated on `p`-polynomials, i.e. combinations of words in
//! the generators `p_ij`, obtained from algebra elements by
//! [`crate::geom::balanced_to_p`].

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::geom::{balanced_to_p, build_projection, build_psi, split_radicals, PWord};
use crate::ncalg::{Algebra, NCPoly};
use crate::qscalar::{check_q, q_int, QScalar};

/// A combination of `p`-words with exact coefficients.
pub type PPoly = Vec<(PWord, QScalar)>;

/// Writes an invariant element as a `p`-polynomial with words of length at
/// most `max_len`. Radical coefficients are split off and carried along.
pub fn p_expansion(alg: &Algebra, a: &NCPoly, max_len: usize) -> Result<PPoly> {
    let mut acc: BTreeMap<PWord, QScalar> = BTreeMap::new();
    for (root, part) in split_radicals(&alg.normal_form(a)?) {
        for (w, c) in balanced_to_p(alg, &part, max_len)? {
            let e = acc.entry(w).or_insert_with(QScalar::zero);
            *e = e.add(&root.mul(&QScalar::from(c)));
        }
    }
    Ok(acc.into_iter().filter(|(_, c)| !c.is_zero()).collect())
}

/// `p`-polynomial of `Tr P_N`.
pub fn projection_trace(alg: &Algebra, charge: i32) -> Result<PPoly> {
    let p = build_projection(alg, &build_psi(alg, charge)?)?;
    p_expansion(alg, &p.trace(), charge.unsigned_abs() as usize)
}

/// `x ↦ x^*` on `p`-polynomials: words reversed, `p_ij ↦ p_ji`. The
/// coefficients are real.
pub fn p_star(x: &PPoly) -> PPoly {
    x.iter().map(|(w, c)| (w.iter().rev().map(|&(i, j)| (j, i)).collect(), c.clone())).collect()
}

/// `χ_0(p_ij) = δ_{i3} δ_{j3}`, exactly.
pub fn rep_chi0(x: &PPoly) -> QScalar {
    let mut acc = QScalar::zero();
    for (w, c) in x {
        if w.iter().all(|&g| g == (3, 3)) {
            acc = acc.add(c);
        }
    }
    acc
}

/// The generators of `χ_1`, optionally cut off as in the literal `π_+`: with
/// `limit = Some(k)`, `p_22` vanishes on `|n⟩` for `n > k` and `p_23` for
/// `n ≥ k`.
#[derive(Clone, Copy, Debug)]
struct Generators {
    q: f64,
    limit: Option<usize>,
}

impl Generators {
    fn d22(&self, n: usize) -> f64 {
        match self.limit {
            Some(k) if n > k => 0.0,
            _ => libm::pow(self.q, 2.0 * n as f64),
        }
    }

    /// Coefficient of `|n+1⟩` in `p_23 |n⟩`.
    fn w23(&self, n: usize) -> f64 {
        match self.limit {
            Some(k) if n >= k => 0.0,
            _ => {
                let t = libm::pow(self.q, (n + 1) as f64);
                t * libm::sqrt(1.0 - t * t)
            }
        }
    }

    /// `p_g` applied to a window `v` of coefficients of `|lo⟩, |lo+1⟩, …`.
    /// Components leaving the window are dropped.
    fn apply(&self, g: (u8, u8), v: &[f64], lo: usize) -> Vec<f64> {
        let len = v.len();
        let mut out = alloc::vec![0.0; len];
        match g {
            (2, 2) => (0..len).for_each(|i| out[i] = self.d22(lo + i) * v[i]),
            (3, 3) => (0..len).for_each(|i| out[i] = (1.0 - self.q * self.q * self.d22(lo + i)) * v[i]),
            (2, 3) => (0..len.saturating_sub(1)).for_each(|i| out[i + 1] = self.w23(lo + i) * v[i]),
            (3, 2) => (1..len).for_each(|i| out[i - 1] = self.w23(lo + i - 1) * v[i]),
            _ => {}
        }
        out
    }

    /// `⟨m| x |k⟩` for `m` in the returned window `[lo, lo + len)`, exact
    /// because the window covers every state a word can reach.
    fn column(&self, x: &PPoly, k: usize, reach: usize) -> (usize, Vec<f64>) {
        let lo = k.saturating_sub(reach);
        let len = k - lo + reach + 1;
        let mut acc = alloc::vec![0.0; len];
        for (w, c) in x {
            let mut v = alloc::vec![0.0; len];
            v[k - lo] = 1.0;
            for &g in w.iter().rev() {
                v = self.apply(g, &v, lo);
            }
            let c = c.eval_unchecked(self.q);
            acc.iter_mut().zip(&v).for_each(|(a, b)| *a += c * b);
        }
        (lo, acc)
    }
}

fn reach(x: &PPoly) -> usize {
    x.iter().map(|(w, _)| w.len()).max().unwrap_or(0)
}

/// `Σ_w |c_w| |w|`, the constant in `|⟨n|(χ_1-χ_0)(x)|n⟩| ≤ C q^n`.
///
/// Writing `χ_1(w) - χ_0(w)` as a telescoping sum, each term is
/// `χ_1(prefix) (χ_1-χ_0)(p_ij) χ_0(suffix)`; here `‖χ_1(p_ij)‖ ≤ 1`,
/// `|χ_0(p_ij)| ≤ 1` and `‖(χ_1-χ_0)(p_ij)|n⟩‖ ≤ q^n`.
fn tail_constant(x: &PPoly, q: f64) -> f64 {
    x.iter().map(|(w, c)| libm::fabs(c.eval_unchecked(q)) * w.len() as f64).sum()
}

/// `χ_1(x)` on `span{|0⟩..|cutoff⟩}`.
#[derive(Clone, Debug)]
pub struct TruncatedOperator {
    /// Row-major `(cutoff+1)²` entries `⟨m|χ_1(x)|n⟩`.
    pub matrix: Vec<Vec<f64>>,
    pub cutoff: usize,
    pub q0: f64,
    pub chi0: f64,
    /// Bound on `|Σ_{n > cutoff} ⟨n|(χ_1-χ_0)(x)|n⟩|`.
    pub tail_bound: f64,
}

impl TruncatedOperator {
    pub fn dim(&self) -> usize {
        self.matrix.len()
    }

    /// `Σ_{n ≤ cutoff} ⟨n|(χ_1-χ_0)(x)|n⟩`.
    pub fn trace_difference(&self) -> f64 {
        (0..self.dim()).map(|n| self.matrix[n][n] - self.chi0).sum()
    }
}

pub fn rep_chi1(x: &PPoly, cutoff: usize, q0: f64) -> Result<TruncatedOperator> {
    check_q(q0)?;
    if cutoff < 4 {
        return Err(Error::Precondition(format!("cutoff must be at least 4, got {cutoff}")));
    }
    let g = Generators { q: q0, limit: None };
    let r = reach(x);
    let d = cutoff + 1;
    let mut matrix = alloc::vec![alloc::vec![0.0; d]; d];
    for k in 0..d {
        let (lo, col) = g.column(x, k, r);
        for (i, v) in col.into_iter().enumerate() {
            if lo + i < d {
                matrix[lo + i][k] = v;
            }
        }
    }
    let tail_bound = tail_constant(x, q0) * libm::pow(q0, (cutoff + 1) as f64) / (1.0 - q0);
    Ok(TruncatedOperator { matrix, cutoff, q0, chi0: rep_chi0(x).eval_unchecked(q0), tail_bound })
}

/// `⟨n|(χ_1-χ_0)(x)|n⟩` for `n ≤ n_max`.
pub fn diagonal_profile(x: &PPoly, n_max: usize, q0: f64) -> Result<Vec<f64>> {
    check_q(q0)?;
    let g = Generators { q: q0, limit: None };
    let chi0 = rep_chi0(x).eval_unchecked(q0);
    let r = reach(x);
    Ok((0..=n_max)
        .map(|k| {
            let (lo, col) = g.column(x, k, r);
            col[k - lo] - chi0
        })
        .collect())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PairingKind {
    Rank,
    Charge,
    Instanton,
}

impl PairingKind {
    pub fn name(self) -> &'static str {
        match self {
            PairingKind::Rank => "rank",
            PairingKind::Charge => "charge",
            PairingKind::Instanton => "instanton",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct PairingResult {
    pub kind: PairingKind,
    pub charge: i32,
    pub q0: Option<f64>,
    /// Cutoffs used: one for `χ_1`, two (`ℓ`-levels, `n`) for `π_±`.
    pub cutoff: Vec<usize>,
    pub raw: f64,
    pub nearest_integer: i64,
    pub residual: f64,
    pub tail_bound: Option<f64>,
    pub certified: bool,
}

fn result(kind: PairingKind, charge: i32, q0: Option<f64>, cutoff: Vec<usize>, raw: f64) -> PairingResult {
    let nearest = libm::round(raw) as i64;
    PairingResult {
        kind,
        charge,
        q0,
        cutoff,
        raw,
        nearest_integer: nearest,
        residual: libm::fabs(raw - nearest as f64),
        tail_bound: None,
        certified: false,
    }
}

/// `Tr χ_0(P_N)`, exact.
pub fn rank_pairing(alg: &Algebra, charge: i32) -> Result<PairingResult> {
    let v = rep_chi0(&projection_trace(alg, charge)?);
    let exact = v
        .as_integer()
        .and_then(|n| i64::try_from(n).ok())
        .ok_or_else(|| Error::Precondition(format!("Tr χ_0(P_{charge}) = {v} is not an integer")))?;
    let mut r = result(PairingKind::Rank, charge, None, Vec::new(), exact as f64);
    r.certified = true;
    Ok(r)
}

/// Largest cutoff tried by [`charge_pairing`].
pub const MAX_CUTOFF: usize = 1 << 14;

/// `Tr (χ_1-χ_0)(P_N)` with the cutoff doubled from 16 until the change and
/// the tail bound are both below `tol/10`.
pub fn charge_pairing(alg: &Algebra, charge: i32, q0: f64, tol: f64) -> Result<PairingResult> {
    check_q(q0)?;
    let x = projection_trace(alg, charge)?;
    charge_pairing_of(&x, charge, q0, tol)
}

pub fn charge_pairing_of(x: &PPoly, charge: i32, q0: f64, tol: f64) -> Result<PairingResult> {
    if !(tol > 0.0) {
        return Err(Error::Precondition(format!("tolerance must be positive, got {tol}")));
    }
    let c = tail_constant(x, q0);
    let mut cutoff = 16;
    let mut prev: Option<f64> = None;
    loop {
        let profile = diagonal_profile(x, cutoff, q0)?;
        let raw: f64 = profile.iter().sum();
        let tail = c * libm::pow(q0, (cutoff + 1) as f64) / (1.0 - q0);
        let settled = prev.is_some_and(|p| libm::fabs(raw - p) < tol / 10.0);
        if settled && tail < tol / 10.0 {
            let mut r = result(PairingKind::Charge, charge, Some(q0), alloc::vec![cutoff], raw);
            r.tail_bound = Some(tail);
            r.certified = r.residual < tol;
            return Ok(r);
        }
        if cutoff >= MAX_CUTOFF {
            return Err(Error::NoConvergence(format!(
                "charge pairing for N={charge} at q0={q0} not settled by cutoff {cutoff}"
            )));
        }
        prev = Some(raw);
        cutoff *= 2;
    }
}

/// `Σ_{n ≤ cutoff} ⟨n|(χ_1-χ_0)(x)|n⟩` at a fixed cutoff. Certified when
/// the tail bound and the distance to the nearest integer together stay
/// below `tol`.
pub fn charge_pairing_at(x: &PPoly, charge: i32, q0: f64, cutoff: usize, tol: f64) -> Result<PairingResult> {
    if !(tol > 0.0) {
        return Err(Error::Precondition(format!("tolerance must be positive, got {tol}")));
    }
    let raw: f64 = diagonal_profile(x, cutoff, q0)?.iter().sum();
    let tail = tail_constant(x, q0) * libm::pow(q0, (cutoff + 1) as f64) / (1.0 - q0);
    let mut r = result(PairingKind::Charge, charge, Some(q0), alloc::vec![cutoff], raw);
    r.tail_bound = Some(tail);
    r.certified = r.residual + tail < tol;
    Ok(r)
}

/// `½N(N+1)`, the value of the third pairing on `[P_N]`.
pub fn instanton_reference(charge: i64) -> i64 {
    charge * (charge + 1) / 2
}

/// `Σ_{ℓ-levels k ≤ k_max} Σ_{n ≤ n_max} ⟨n|(π_+-π_-)(Tr P_N)|n⟩` with `π_±`
/// taken literally from their displays on `|ℓ,m⟩`, `k = 2ℓ`, `n = ℓ+m`.
/// The displayed `π_+` is only fixed modulo trace class, so the result is not
/// an integer in general and is never certified.
pub fn approximate_pi_pairing(alg: &Algebra, charge: i32, k_max: usize, n_max: usize, q0: f64) -> Result<PairingResult> {
    check_q(q0)?;
    let x = projection_trace(alg, charge)?;
    let r = reach(&x);
    let minus = Generators { q: q0, limit: None };
    let mut raw = 0.0;
    for k in 0..=k_max {
        let plus = Generators { q: q0, limit: Some(k) };
        for n in 0..=n_max {
            let (lo, a) = plus.column(&x, n, r);
            let (_, b) = minus.column(&x, n, r);
            raw += a[n - lo] - b[n - lo];
        }
    }
    Ok(result(PairingKind::Instanton, charge, Some(q0), alloc::vec![k_max, n_max], raw))
}

pub type IntMatrix = [[i64; 3]; 3];

/// Rows: rank, charge and instanton reference; columns: `[1]`, `[P_{-1}]`,
/// `[P_1]`. The charge row comes from certified numeric pairings.
pub fn pairing_matrix(alg: &Algebra, q0: f64, tol: f64) -> Result<IntMatrix> {
    let mut m = [[0i64; 3]; 3];
    for (col, charge) in [0, -1, 1].into_iter().enumerate() {
        m[0][col] = rank_pairing(alg, charge)?.nearest_integer;
        let c = charge_pairing(alg, charge, q0, tol)?;
        if !c.certified {
            return Err(Error::NoConvergence(format!("charge pairing for N={charge} has residual {}", c.residual)));
        }
        m[1][col] = c.nearest_integer;
        m[2][col] = instanton_reference(charge as i64);
    }
    Ok(m)
}

pub fn det3(m: &IntMatrix) -> i64 {
    m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
}

/// Inverse over ℤ, present iff the determinant is `±1`.
pub fn inverse3(m: &IntMatrix) -> Option<IntMatrix> {
    let d = det3(m);
    if d != 1 && d != -1 {
        return None;
    }
    let mut inv = [[0i64; 3]; 3];
    for (i, row) in inv.iter_mut().enumerate() {
        for (j, e) in row.iter_mut().enumerate() {
            // cofactor of (j, i)
            let (r0, r1) = ((j + 1) % 3, (j + 2) % 3);
            let (c0, c1) = ((i + 1) % 3, (i + 2) % 3);
            *e = (m[r0][c0] * m[r1][c1] - m[r0][c1] * m[r1][c0]) * d;
        }
    }
    Some(inv)
}

/// `q^{N-1}[N]`, the factor in `∇_N² = q^{N-1}[N] ∇_1²`.
pub fn curvature_factor(charge: i32) -> QScalar {
    QScalar::q_pow(charge - 1).mul(&q_int(charge as i64))
}

/// `⟨τ_2, ch²(P_N, σ^N)⟩` divided by its value at `N = 1`:
/// `q^{-2N} c_N / (q^{-2} c_1)` with `c_N` the curvature factor. The
/// constant `φ∘π(∇_1²)` cancels.
pub fn qchern2(charge: i32) -> QScalar {
    let num = QScalar::q_pow(-2 * charge).mul(&curvature_factor(charge));
    num.div(&QScalar::q_pow(-2).mul(&curvature_factor(1))).expect("c_1 = 1")
}

/// `⟨τ_4, ch⁴(P_N, σ^N)⟩` divided by its value at `N = 1`:
/// `q^{-2N} c_N² / (q^{-2} c_1²)`. The constant `∫ ∇_1² ∧ ∇_1²` cancels.
pub fn qchern4(charge: i32) -> QScalar {
    let c = curvature_factor(charge);
    let num = QScalar::q_pow(-2 * charge).mul(&c).mul(&c);
    num.div(&QScalar::q_pow(-2)).expect("q^-2 is invertible")
}
