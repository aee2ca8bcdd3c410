//! Finite Hecke pairs `(G, H)`: coset enumeration, the Hecke algebra with its
//! right-coset convolution and involution, the two regular representations,
//! and the unitary intertwining them.
//!
//! The algebra and representation layers are generic over [`Scalar`]. Exact
//! verification uses [`QComplex`] (complex numbers with `BigRational` parts);
//! [`C64`] is provided for floating point experiments.

pub mod codec;
pub mod cosets;
pub mod error;
pub mod group;
pub mod harness;
pub mod hecke;
pub mod norm;
pub mod pair;
pub mod perm;
pub mod repr;
pub mod roster;
pub mod rule;
pub mod scalar;

use num_complex::Complex;

pub use cosets::{CosetBijection, CosetSpace, DoubleCosetSpace, Side};
pub use error::{Error, Result};
pub use group::{FiniteGroup, GroupConfig, Subgroup, DEFAULT_GROUP_CAP};
pub use hecke::{
    convolve, identity_element, involution, oracle_group_convolve, structure_constants, HeckeElement,
    StructureConstants,
};
pub use norm::operator_norm;
pub use pair::HeckePair;
pub use perm::Permutation;
pub use repr::{
    apply_left_action, check_intertwining, intertwiner_u, left_action_matrix, right_action_matrix, CosetVector,
    IntertwiningReport, RepMatrix,
};
pub use scalar::{Real, Scalar};

/// Exact rationals.
pub type Q = num_rational::BigRational;
/// Exact complex rationals, the coefficient field used for certification.
pub type QComplex = Complex<Q>;
pub type C64 = Complex<f64>;

pub type ExactHeckeElement = HeckeElement<QComplex>;
pub type ExactRepMatrix = RepMatrix<QComplex>;
pub type ExactCosetVector = CosetVector<QComplex>;
pub type FloatHeckeElement = HeckeElement<C64>;
pub type FloatRepMatrix = RepMatrix<C64>;
