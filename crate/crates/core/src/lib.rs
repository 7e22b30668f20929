//! Order-theoretic Gelfand duality at desk scale.
//!
//! Finite posets and their cones of isotone functions on one side; finite
//! dimensional algebras carrying an isotone cone ("isocone") on the other.
//! The commutative case is the diagonal algebra of a poset, and the first
//! noncommutative case, `M₂(ℂ)`, is handled completely through Bloch-sphere
//! geometry.

pub mod acceptance;
pub mod duality;
pub mod fixtures;
pub mod gps;
pub mod hermitian;
pub mod isotone_cone;
pub mod m2;
pub mod poset;
pub mod rng;

pub use isotone_cone::{ConeError, IsotoneCone, LatticeExpr, RealFunction};
pub use poset::{FinitePoset, FinitePreorder, PosetError};
