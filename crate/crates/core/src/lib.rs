//! Exact homological bookkeeping for geometric transitions between
//! Calabi–Yau threefolds.
//!
//! A geometric transition `T(Y, Ȳ, Ỹ)` contracts a smooth Calabi–Yau
//! threefold `Y` onto a singular `Ȳ` and smooths `Ȳ` to `Ỹ`. For conifold,
//! small and type II transitions the change in Betti numbers is governed by
//! four integers `(k′, k″, c′, c″)`, the *homological type*. This crate
//! computes that quadruple from local data (exceptional loci, Milnor
//! numbers), fills out the Betti table of the triple from a single smooth
//! corner, and checks the result against Euler-characteristic and duality
//! identities.
//!
//! All arithmetic is exact: polynomials have rational coefficients and
//! ranks are computed by fraction-free elimination over the integers.

pub mod error;
pub mod exceptional;
pub mod golden;
pub mod hodge;
pub mod milnor;
pub mod polyring;
pub mod report;
pub mod scenario;
pub mod transition;

pub use error::{Error, Result};
pub use exceptional::{DelPezzoModel, DelPezzoVariant, DualGraph, RootClass, SmallExceptionalLocus};
pub use hodge::{BettiVector, CY3Hodge, CISpec, WPSHypersurfaceSpec};
pub use milnor::{CompleteIntersectionGerm, HypersurfaceGerm, MilnorFiberData, SingularityGerm};
pub use polyring::{Monomial, Rational, WeightSystem, WeightedPoly};
pub use report::{Format, ReportRecord};
pub use transition::{Corner, HomologicalType, TransitionTable};
