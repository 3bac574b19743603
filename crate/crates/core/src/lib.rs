//! Exact algebra for a polynomial link-homotopy invariant of 6-component
//! links.
//!
//! The conjugations and partial conjugations that relate string links with
//! the same closure act on the vector of triple linking numbers `μ(rst)` by
//! translations whose coordinates are linear in the linking numbers `l(i,j)`
//! ([`action`]). At `k = 6` eighteen of these vectors together with the
//! quadratic reversal vector form a 19 x 20 polynomial matrix whose signed
//! maximal minors `Ω` are perpendicular to every translation
//! ([`polylinalg`]). The pairing `μ · Ω(l)` is then a link-homotopy
//! invariant that changes sign when every component is reversed.
//!
//! [`braid`] computes `l` and `μ` of pure-braid words independently, which
//! gives an end-to-end check of the whole construction.

pub mod action;
pub mod braid;
pub mod certificate;
pub mod commands;
pub mod error;
pub mod mpoly;
pub mod polylinalg;

pub use error::{Error, Result};
pub use mpoly::{Monomial, PairVar, Poly};
