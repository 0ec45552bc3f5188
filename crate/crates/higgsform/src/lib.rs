//! Exact computational playground for wedge-type Higgs fields on the
//! complexified exterior algebra of a complex torus.
//!
//! A holomorphic form `ϖ` of odd degree `k` turns `E = ⊕_p Λ^{(p,0)}` into
//! a Higgs bundle via `θ(Z)φ = (i(Z)ϖ)∧φ`. This crate implements that
//! operator and everything the surrounding theory needs to be checked bit
//! for bit: the sparse exterior algebra over Gaussian rationals, hermitian
//! metrics and their musical/adjoint calculus, the trace operator `T_h`
//! with its eigenvalue tables, pointwise curvature assembly and Bochner
//! forms, slope computations with the stability obstruction verdict, and a
//! one-character flat-torus spectral model in which all the Kähler
//! identities and both Nakano-type inequalities reduce to finite exact
//! matrices.
//!
//! Every coefficient in the crate is a complex number with `BigRational`
//! parts; there is no floating point and every test asserts equality, not
//! closeness.

pub mod curvature;
pub mod exterior;
pub mod higgs;
pub mod metric;
pub mod report;
pub mod sampling;
pub mod scalar;
pub mod slope;
pub mod spectral;
pub mod suites;
