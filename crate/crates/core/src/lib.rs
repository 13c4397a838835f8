//! Exact computation of the area polynomials of triangulated quadrilaterals.
//!
//! The crate is `no_std` and needs only `alloc`. It covers exact rationals
//! with the 2-adic valuation ([`exact`]), sparse polynomials with Gröbner
//! bases and elimination ([`poly`]), combinatorial triangulations and the
//! conversion of geometric dissections into them ([`complex`]), symbolic and
//! numeric doubled areas ([`areamap`]), computation and verification of the
//! trapezoid polynomial `z_T` and parallelogram polynomial `p_T`
//! ([`variety`]), and 2-adic coloring certificates ([`monsky`]).
#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod areamap;
pub mod complex;
pub mod corpus;
pub mod exact;
pub mod geometry;
pub mod linalg;
pub mod monsky;
pub mod poly;
pub mod variety;

pub use exact::{val2, Rational, Valuation};
pub use poly::{Monomial, MonomialOrder, Polynomial, Ring};
