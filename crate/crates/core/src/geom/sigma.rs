//! The representations σ^N carried by the components of Ψ_N, the covariance
//! identity for P_N and the equivariant pairing with the Haar state.

use alloc::format;
use alloc::vec::Vec;

use super::{HaarContext, MonopoleVector, ProjectionMatrix, WordIndex};
use crate::error::{Error, Result};
use crate::linalg::Echelon;
use crate::ncalg::{Algebra, NCPoly};
use crate::qscalar::QScalar;
use crate::uq::{act_left, UqElement, UqGen};

pub type QMatrix = Vec<Vec<QScalar>>;

/// `K = (K_1 K_2)^{-4}`.
pub fn modular_element() -> UqElement {
    let mut w = Vec::new();
    for _ in 0..4 {
        w.push(UqGen::K1Inv);
        w.push(UqGen::K2Inv);
    }
    UqElement::word(&w)
}

/// The matrix `M(h)` of the left action on the components:
/// `h ▷ ψ_a = Σ_b M(h)_{ba} ψ_b`. It satisfies `M(hh') = M(h) M(h')`.
pub fn action_matrix(alg: &Algebra, psi: &MonopoleVector, h: &UqElement) -> Result<QMatrix> {
    let r = psi.len();
    let mut index = WordIndex::default();
    let mut ech = Echelon::new();
    for m in &psi.monomials {
        ech.insert(index.vector(m)?);
    }
    let mut out = alloc::vec![alloc::vec![QScalar::zero(); r]; r];
    for a in 0..r {
        let image = act_left(alg, h, &psi.monomials[a])?;
        let v = index.vector(&image)?;
        let combo = ech
            .solve(&v)
            .ok_or_else(|| Error::NotClosed(format!("{image} is not a combination of the components")))?;
        for (b, c) in combo {
            let ratio = psi.coefficients[a].div(&psi.coefficients[b])?;
            out[b][a] = ratio.mul(&QScalar::from(c));
        }
    }
    Ok(out)
}

pub fn mat_mul(a: &QMatrix, b: &QMatrix) -> QMatrix {
    let r = a.len();
    let mut out = alloc::vec![alloc::vec![QScalar::zero(); r]; r];
    for i in 0..r {
        for k in 0..r {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..r {
                out[i][j] = out[i][j].add(&a[i][k].mul(&b[k][j]));
            }
        }
    }
    out
}

/// `σ^N(h) = M(h)`, so that `σ^N(h)^t Ψ_N = h ▷ Ψ_N`. Of the candidates
/// built from `M`, `S`, `S^{-1}` and the transpose, this is the one for which
/// the covariance identity holds.
pub fn sigma_matrix(alg: &Algebra, psi: &MonopoleVector, h: &UqElement) -> Result<QMatrix> {
    action_matrix(alg, psi, h)
}

/// `(h₍₁₎ ▷ e) σ(h₍₂₎)^t = σ(h)^t e` entrywise for `h` in the generators of
/// U_q(su(3)). Returns the first failing generator and entry.
pub fn check_covariance(
    alg: &Algebra,
    psi: &MonopoleVector,
    p: &ProjectionMatrix,
) -> Result<Option<(UqGen, usize, usize)>> {
    covariance_with(alg, psi, p, sigma_matrix)
}

fn covariance_with(
    alg: &Algebra,
    psi: &MonopoleVector,
    p: &ProjectionMatrix,
    sigma: impl Fn(&Algebra, &MonopoleVector, &UqElement) -> Result<QMatrix>,
) -> Result<Option<(UqGen, usize, usize)>> {
    let r = p.size();
    for g in UqGen::ALL {
        let h = UqElement::gen(g);
        let sh = sigma(alg, psi, &h)?;
        let mut lhs = alloc::vec![alloc::vec![NCPoly::zero(); r]; r];
        for (left, right, c) in h.coproduct() {
            let s2 = sigma(alg, psi, &UqElement::word(&right))?;
            let l = UqElement::word(&left);
            for a in 0..r {
                for d in 0..r {
                    let moved = act_left(alg, &l, &p.entries[a][d])?.scale(&c);
                    if moved.is_zero() {
                        continue;
                    }
                    for b in 0..r {
                        if !s2[b][d].is_zero() {
                            lhs[a][b] = lhs[a][b].add(&moved.scale(&s2[b][d]));
                        }
                    }
                }
            }
        }
        for a in 0..r {
            for b in 0..r {
                let mut rhs = NCPoly::zero();
                for d in 0..r {
                    if !sh[d][a].is_zero() {
                        rhs = rhs.add(&p.entries[d][b].scale(&sh[d][a]));
                    }
                }
                if lhs[a][b] != rhs {
                    return Ok(Some((g, a, b)));
                }
            }
        }
    }
    Ok(None)
}

/// `φ(Tr(P_N σ^N(K)^t))` with `K = (K_1 K_2)^{-4}`.
pub fn equivariant_ch0(
    alg: &Algebra,
    haar: &mut HaarContext,
    psi: &MonopoleVector,
    p: &ProjectionMatrix,
) -> Result<QScalar> {
    let s = sigma_matrix(alg, psi, &modular_element())?;
    let r = p.size();
    let mut acc = NCPoly::zero();
    for a in 0..r {
        for b in 0..r {
            if !s[a][b].is_zero() {
                acc = acc.add(&p.entries[a][b].scale(&s[a][b]));
            }
        }
    }
    haar.haar(alg, &acc)
}
