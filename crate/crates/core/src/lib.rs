//! Exact Castelnuovo-Mumford regularity of homogeneous ideals.
//!
//! Monomial ideals are handled combinatorially ([`homology`], with the
//! [`taylor`] oracle); general homogeneous ideals go through Gröbner bases and
//! Schreyer resolutions ([`groebner`], [`resolution`]). The [`harness`]
//! module checks regularity inequalities for products, intersections and
//! colons of monomial complete intersections on seeded random instances, and
//! evaluates the binomial family where those inequalities fail.

pub mod betti;
pub mod error;
pub mod field;
pub mod groebner;
pub mod harness;
pub mod homology;
pub mod ideal;
pub mod linalg;
pub mod monomial;
pub mod poly;
pub mod resolution;
pub mod taylor;

pub use betti::{BettiEntry, BettiTable};
pub use error::{Error, Result};
pub use field::{Field, FieldSpec, PrimeField, Rationals};
pub use monomial::{default_var_names, minimalize, Monomial, MonomialIdeal};
pub use groebner::GroebnerBasis;
pub use ideal::PolyIdeal;
pub use poly::{PolyRing, Polynomial, RingSpec, TermOrder};
pub use resolution::{free_resolution, graded_betti, minimal_resolution, regularity_poly, Resolution};
