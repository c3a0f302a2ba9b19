//! Exact quantum arithmetic and highest-weight combinatorics for the
//! general linear Lie superalgebra `gl(m|n)` at a root of unity.
//!
//! The crate is organised bottom-up:
//!
//! * [`qarith`] — Laurent polynomials in `v` with integer coefficients,
//!   quantum integers and symmetric Gaussian binomials, cyclotomic
//!   evaluation at a root of unity, and the digit criterion for
//!   (non)vanishing of Gaussian binomials.
//! * [`weights`] — integer weights split into an even and an odd block,
//!   partitions, dominance orders, and the enumeration helpers used by
//!   the classification routines.
//! * [`symhecke`] — the symmetric group, its Hecke algebra with
//!   parameter `q^2`, parabolic double cosets, and the matrix
//!   combinatorics connecting cosets to exponent matrices.
//! * [`mullclass`] — the residue count `j_l`, the polynomial
//!   highest-weight criterion with explicit non-membership witnesses,
//!   and the rim-based Mullineux symbol map.
//! * [`serganova`] — the odd-reflection walk on dominant weights, the
//!   induced twist on weights, and the Mullineux map computed through
//!   that walk.
//! * [`pbw`] — divided-power root vectors for `gl(m|n)`, straightening
//!   rules for products of root vectors, and formal evaluation against
//!   a highest-weight vector, together with the word-identity checkers
//!   built on top of it.

pub mod mullclass;
pub mod pbw;
pub mod qarith;
pub mod serganova;
pub mod symhecke;
pub mod weights;
