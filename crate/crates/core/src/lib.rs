//! Computational geometry of amoebas of Laurent polynomials.
//!
//! The crate covers the polyhedral and analytic objects attached to a
//! Laurent polynomial f on the complex torus:
//!
//! - [`laurent`]: the polynomial data model, text parser, and overflow-safe
//!   torus evaluation;
//! - [`polytope`]: exact Newton polytope combinatorics and the
//!   vertex/boundary/interior regime classification of the support;
//! - [`tropical`]: liftings, regular subdivisions of the Newton polytope,
//!   plane corner loci, and the lower-hull redundancy criterion;
//! - [`ronkin`]: quadrature for the Ronkin function, its gradients (orders
//!   of complement components), spine constants, and dominance thresholds;
//! - [`amoeba`]: amoeba rasters by fiber root-solving, lopsidedness
//!   certificates, complement components, and solidness verdicts;
//! - [`degeneration`]: rescaled-amoeba convergence, subdivision
//!   stabilization, and solidness sweeps across a degeneration family.
//!
//! Lifting heights and the LP layer are generic over [`scalar::Scalar`]:
//! `f64` for measured data, [`Rational`] for exact combinatorics.

pub mod amoeba;
pub mod degeneration;
pub mod error;
pub mod laurent;
pub mod linprog;
pub mod polytope;
pub mod report;
pub mod ronkin;
pub mod scalar;
pub mod svg;
pub mod tropical;

pub use error::{Error, Result};
pub use laurent::{LatticePoint, LaurentPolynomial, TorusPoint};

pub type Complex64 = num_complex::Complex<f64>;
pub type Rational = num_rational::BigRational;

/// Lifting with measured (floating) heights.
pub type LiftingF64 = tropical::Lifting<f64>;
/// Lifting with exact rational heights.
pub type LiftingQ = tropical::Lifting<Rational>;
/// Plane corner locus over f64.
pub type SpineComplex = tropical::PolyhedralComplex<f64>;
