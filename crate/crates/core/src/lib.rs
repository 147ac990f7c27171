//! Exact decompositions of quaternion algebras with involution over
//! iterated Laurent series fields `F((t₁))…((tₙ))`.
//!
//! The core is generic over the base field `F` (see [`scalar::BaseField`]);
//! the aliases below fix `F = ℚ`.

pub mod armature;
pub mod decompose;
pub mod gauge;
pub mod harness;
pub mod linalg;
pub mod oracle;
pub mod quaternion;
pub mod scalar;

pub use scalar::{BaseField, Fp, Rational};

/// Element of `ℚ(t₁,…,tₙ)`.
pub type Scalar = scalar::LaurentScalar<Rational>;
pub type Quaternion = quaternion::QuatElem<Rational>;
pub type QuaternionAlgebra = quaternion::QuatAlg<Rational>;
pub type Involution = quaternion::QuatInvolution<Rational>;
pub type Element = armature::ArmatureElement<Rational>;
pub type Presentation = armature::ArmaturePresentation<Rational>;
pub type Gauge = gauge::ArmatureGauge<Rational>;
pub type Witness = decompose::DecompositionWitness<Rational>;
