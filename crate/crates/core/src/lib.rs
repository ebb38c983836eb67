//! Exact verification of sign counts for affine SL(N) intersection forms.
//!
//! For a point `λ'` of the open simplex the crate compares the signs of
//! `cos(π q_i(λ'))` with the signs of the products `g_i(λ')`, locates the
//! point in its chamber, and predicts both sign vectors from the chamber
//! label. On the affine side it builds the regular fusion graphs of
//! SL(N) at level `h - N` and compares the signature of their intersection
//! form `2I + Σ_p G_p` with interval counts of the rationals `q^{(R)}_λ`.
//!
//! All sign decisions use exact rational arithmetic. Floating point is only
//! used for advisory values and independent cross-checks.
//!
//! | module | contents |
//! |---|---|
//! | [`point`] | `p`, `q`, `g` at a parameter point, single-point sign check |
//! | [`regions`] | chamber labels, wall pairing, sign prediction |
//! | [`affine`] | integrable weights, `σ`, `τ`, `q^{(R)}`, eigenvalues |
//! | [`fusion`] | fusion graphs, axioms, intersection form, signatures |
//! | [`campaign`] | seeded sampling and verification campaigns |
//! | [`report`] | JSON/CSV/text output |

pub mod affine;
pub mod campaign;
pub mod config;
pub mod error;
pub mod fusion;
pub mod point;
pub mod rational;
pub mod regions;
pub mod report;
pub mod sign;

pub use error::{Error, Result};
pub use point::ParamPoint;
pub use rational::Rational;
pub use sign::{Sign, SignCounts};
