//! Affine Hecke algebras of type C with unequal parameters.
//!
//! The crate is layered bottom-up:
//!
//! * [`exactalg`]: exact rationals, sparse Laurent polynomials in `v, z1..zm`
//!   (with `q = v^2`), fractions of those, series and rational reconstruction.
//! * [`weyl`]: affine Weyl groups of type C, reduced words, weighted lengths,
//!   flip counts, positivity and coset combinatorics.
//! * [`hecke`]: Iwahori-Hecke algebras in the `T_w` basis, spherical
//!   idempotents, Bernstein-type elements and Levi embeddings.
//! * [`psmod`]: principal-series modules, intertwiners, c-functions,
//!   Jacquet restriction and Aubert duality.
//! * [`padic`]: a floating-point oracle over `Q_p` for Weil constants,
//!   Gauss-sum integrals and the rank-one intertwining series.
//!
//! Data-parallel loops go through [`par`], which uses rayon when the
//! `parallel` feature is enabled and plain iterators otherwise.

pub mod exactalg;
pub mod hecke;
pub mod padic;
pub mod par;
pub mod psmod;
pub mod weyl;
