//! Exact symbolic and certified-numeric workbench for the quantum projective
//! plane CP²_q.
//!
//! The crate is `no_std` (with `alloc`). Layers, bottom to top:
//!
//! - [`qscalar`]: exact arithmetic in ℚ(q^{1/2}) with paired square-root atoms,
//!   q-integers, q-factorials, q-binomials and trinomials.
//! - [`ncalg`]: the *-algebra A(SU_q(3)) on generators `u^i_j`, normal forms,
//!   the star, zero tests and a local-confluence report.
//! - [`uq`]: words in U_q(su(3)) with coproduct, counit, antipode, and the left,
//!   right and twisted actions on the algebra.
//! - [`geom`]: monopole vectors Ψ_N, projections P_N, the Haar state, σ^N and
//!   the equivariant pairing.
//! - [`dolbeault`]: ∂, ∂̄, the q-wedge on (0,1)-forms, the involution J and the
//!   decomposition of 1-forms.
//! - [`spectra`]: closed-form Dirac and gauged Laplacian spectra.
//! - [`khomology`]: truncated Fredholm-module representations and the integer
//!   and q-valued characteristic pairings.
#![no_std]
#![allow(clippy::needless_range_loop, clippy::neg_cmp_op_on_partial_ord)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod dolbeault;
pub mod error;
pub mod geom;
pub mod linalg;
pub mod ncalg;
pub mod khomology;
pub mod qscalar;
pub mod spectra;
pub mod uq;

#[cfg(test)]
mod testutil;

pub use error::{Error, Result};
pub use qscalar::{q_binomial, q_factorial, q_int, q_trinomial, Equality, QScalar};
