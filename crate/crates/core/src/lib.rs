//! Exact integer algorithms for symplectic involutions.
//!
//! Every involution `S` in `Sp(2g, Z)` is symplectically conjugate to
//! `diag(a, a)` with `a = diag(I_p, −I_m, t × [[0,1],[1,0]])`, `g = p + m + 2t`.
//! [`canonical::canonicalize`] computes `(p, m, t)` together with an explicit
//! conjugating matrix; the supporting modules provide Smith and skew
//! Frobenius forms, Comessatti's form for involutions of `Z^n`, the
//! cohomological cross-check, Riemann surface quotient bookkeeping, and
//! seeded instance generators.

pub mod canonical;
pub mod cohomology;
pub mod comessatti;
pub mod error;
pub mod matrix;
pub mod normal_forms;
pub mod surface;
pub mod testgen;

pub use canonical::{canonicalize, invariants_from_gl, stable_lagrangians, CanonicalForm, TransformReport};
pub use error::{Error, Result};
pub use matrix::{IntMatrix, SymplecticForm, SymplecticInvolution};
