//! Exactly verifiable seminorms on the homology of finite pair complexes.
//!
//! The crate computes, entirely in rational arithmetic:
//!
//! - l1 seminorms on relative homology classes and their dual sup-norm
//!   values on bounded cochains, with machine-checked equality certificates
//!   ([`seminorm`]);
//! - weighted mapping-cone seminorms of the inclusion of a subcomplex and
//!   norm comparison reports for the induced comparison map ([`cone`]);
//! - geodesic straightening on flat tori and cylinders, with the prism
//!   homotopy witnessing that straightening is chain homotopic to the
//!   identity ([`geometry`]);
//! - finitely supported measure chains, their total variation, and the
//!   discretization map back to straight chains ([`measure`]);
//! - bounded cohomology of finite groups and pairs via the standard
//!   resolution, with the explicit averaging and evaluation maps between
//!   the standard and model resolutions ([`group`]).
//!
//! The [`suite`] module bundles the exact property checks behind the
//! `relhom suite` command; everything asserts rational equality, never
//! approximate closeness.

pub mod complex;
pub mod cone;
pub mod error;
pub mod generators;
pub mod geometry;
pub mod group;
pub mod lp;
pub mod measure;
pub mod rational;
pub mod seminorm;
pub mod suite;

pub use complex::{Chain, ChainComplexPair, Cochain, HomologyClass, PairDescription};
pub use cone::{build_cone, norm_comparison_report, ConeChain, ConeCochain, ConeComplex};
pub use error::{Error, Result};
pub use geometry::{build_net, ModelSpace, Net, StraightChain, StraightSimplex};
pub use group::{bounded_cohomology, FiniteGroup, GSetModel, TupleCochain};
pub use lp::{lp_solve, Direction, LpProblem, LpStatus, Sense};
pub use measure::{iota, theta, MeasureChain};
pub use rational::{Rational, RationalMatrix};
pub use seminorm::{duality_certificate, dual_linf_value, kronecker, l1_seminorm, SeminormCertificate};
