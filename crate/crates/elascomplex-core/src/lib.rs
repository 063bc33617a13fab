//! Exact-arithmetic verification kernel for the three dimensional elasticity
//! complex and its finite element discretization on tetrahedral meshes.
//!
//! Everything here is computed over arbitrary precision rationals: polynomial
//! tensor calculus, operator matrices between polynomial spaces, rank and
//! kernel computations by fraction-free elimination, trace identities on faces
//! and edges of simplices, bubble spaces, finite element degrees of freedom,
//! and global mesh assembly. A check passes when a residual is exactly zero or
//! a rank equals an exact integer, never "up to tolerance".
//!
//! The crate is `no_std` (with `alloc`); IO, the CLI and file formats live in
//! the companion `elascomplex` binary crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod assembly;
pub mod bubbles;
pub mod complexes;
pub mod elements;
pub mod frames;
pub mod linalg;
pub mod mesh;
pub mod poly;
pub mod rat;
pub mod report;
pub mod simplex;
pub mod spaces;
pub mod surface;
pub mod tensor;
pub mod traces;

use alloc::string::String;
use core::fmt;

/// Errors surfaced by the verification kernel.
///
/// Mathematically impossible situations (e.g. `inc` of a symmetric tensor
/// coming out asymmetric) panic instead: they indicate a bug in this crate,
/// not bad input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Differentiation axis outside `1..=vars`.
    AxisOutOfRange { axis: usize, vars: usize },
    /// Mixed 2-variable and 3-variable polynomials in one operation.
    VarMismatch { left: usize, right: usize },
    /// Simplex vertices are affinely dependent.
    DegenerateSimplex,
    /// A degree parameter below the documented threshold of a check.
    DegreeTooLow { what: &'static str, k: i64, min: i64 },
    /// An operator image failed to lie in the span of the target basis.
    ImageNotInSpan { op: &'static str },
    /// A mesh failed a conformity or validity check.
    BadMesh(String),
    /// A computed dimension disagreed with its closed-form value.
    DimensionMismatch { what: &'static str, expected: usize, actual: usize },
    /// Evaluating a shared degree of freedom from two adjacent cells gave
    /// different values.
    DofNotSingleValued { detail: String },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::AxisOutOfRange { axis, vars } => {
                write!(f, "axis {axis} out of range for {vars} variables")
            }
            Error::VarMismatch { left, right } => {
                write!(f, "variable count mismatch: {left} vs {right}")
            }
            Error::DegenerateSimplex => write!(f, "degenerate simplex"),
            Error::DegreeTooLow { what, k, min } => {
                write!(f, "{what}: degree {k} below threshold {min}")
            }
            Error::ImageNotInSpan { op } => {
                write!(f, "image of {op} not contained in the target space")
            }
            Error::BadMesh(s) => write!(f, "bad mesh: {s}"),
            Error::DimensionMismatch { what, expected, actual } => {
                write!(f, "{what}: dimension {actual}, expected {expected}")
            }
            Error::DofNotSingleValued { detail } => {
                write!(f, "degree of freedom not single-valued: {detail}")
            }
        }
    }
}

pub type Result<T> = core::result::Result<T, Error>;
