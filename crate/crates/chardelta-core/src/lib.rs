//! Exact computation with characters of small finite groups.
//!
//! The crate enumerates finite groups from generators (permutations, matrices
//! over finite fields, matrices over cyclotomic fields), computes their
//! complex character tables with exact cyclotomic values, and measures how
//! often two characters agree.  Everything downstream of the generators is
//! exact: rationals are arbitrary precision, character values live in
//! `Q(zeta_N)`, and no decision is ever made with floating point.
//!
//! Module map:
//!
//! * [`rational`], [`cyclotomic`] — the value types.
//! * [`fq`] — finite fields `F_q` and their quadratic extensions.
//! * [`group`] — group enumeration, conjugacy classes, subgroups.
//! * [`chartab`] — character tables (Dixon's modular method), induction,
//!   inner products.
//! * [`distinguish`] — agreement densities, primitivity, trace histograms,
//!   bound audits.
//! * [`sl2`] — symbolic character tables of `SL(2,q)` and `PSL(2,q)` and
//!   their closed-form agreement densities.
//! * [`serre`] — the sign-twist pair on a Heisenberg-by-`C2` group that
//!   meets the `1/(2n^2)` bound.
//! * [`atlas`] — curated generator data for the small linear groups the
//!   toolkit certifies, with a validation harness.
//! * [`paperchecks`] — the one-shot verification report.

pub mod atlas;
pub mod chartab;
pub mod cyclotomic;
pub mod distinguish;
pub mod error;
pub mod fq;
pub mod group;
pub mod paperchecks;
pub mod rational;
pub mod report;
pub mod serre;
pub mod sl2;

pub use cyclotomic::Cyclotomic;
pub use error::Error;
pub use rational::Rational;
