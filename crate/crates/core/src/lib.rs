//! Numerical laboratory for Born-Infeld-type Lagrangians built from matrix
//! determinant and trace prescriptions.
//!
//! The crate covers four layers:
//!
//! * [`liealg`] — compact Lie algebra representations as anti-Hermitian
//!   matrices, with structure constants and trace tensors extracted
//!   numerically from the generators.
//! * [`lagrangians`] — the abelian Born-Infeld model and its non-abelian and
//!   noncommutative generalizations (determinant, symmetrized-trace and
//!   closed-form routes, each pair usable as the other's oracle).
//! * [`nc_calculus`] — gauge data on `C^inf(R^d) ⊗ M_n`: curvature blocks,
//!   the generalized Yang-Mills density and the classification of its flat
//!   vacua by su(2) representations.
//! * [`soliton`] / [`scalar_dynamics`] — reduced field equations: radial
//!   shooting for the su(2) magnetic sector, homogeneous scalar dynamics with
//!   singular-curve analysis, and FRW fixed points.
//!
//! All numerical kernels are generic over the floating point type through the
//! [`Scalar`] trait; `f64` aliases for the main types live at the crate root.

use std::fmt;
use std::iter::Sum;
use std::ops::{AddAssign, DivAssign, MulAssign, SubAssign};

use num_traits::{Float, FloatConst, FromPrimitive};

pub mod cmatrix;
pub mod lagrangians;
pub mod liealg;
pub mod nc_calculus;
pub mod numerics;
pub mod sample;
pub mod scalar_dynamics;
pub mod soliton;

/// Floating point scalar the numerical kernels are generic over.
///
/// Implemented for `f32` and `f64`. Structure-constant checks and default
/// tolerances scale with `epsilon()`, so the same construction code works at
/// both precisions.
pub trait Scalar:
    Float
    + FloatConst
    + FromPrimitive
    + AddAssign
    + SubAssign
    + MulAssign
    + DivAssign
    + Sum
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + 'static
{
    /// Conversion from an `f64` literal.
    fn of(x: f64) -> Self {
        Self::from_f64(x).expect("f64 conversion")
    }

    /// Lossy conversion to `f64`, for diagnostics.
    fn lossy_f64(self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }

    /// Tolerance for exact algebraic identities (closure, Jacobi, ...):
    /// a few hundred epsilon.
    fn structure_tol() -> Self {
        Self::epsilon() * Self::of(500.0)
    }
}

impl Scalar for f32 {}
impl Scalar for f64 {}

pub use cmatrix::{kron, CMat};
pub use lagrangians::{FieldSample, HatLift, Metric, Signature};
pub use liealg::LieBasis;
pub use nc_calculus::{NCConnection, NCCurvature};
pub use scalar_dynamics::{FixedPointReport, PhaseState, Stability};
pub use soliton::{ShootConfig, ShootResult, SolitonProfile};

/// `f64` concretizations of the main domain types.
pub type LieBasis64 = LieBasis<f64>;
pub type FieldSample64 = FieldSample<f64>;
pub type Metric64 = Metric<f64>;
pub type NCConnection64 = NCConnection<f64>;
pub type SolitonProfile64 = SolitonProfile<f64>;
pub type ShootResult64 = ShootResult<f64>;
pub type PhaseState64 = PhaseState<f64>;
pub type FixedPointReport64 = FixedPointReport<f64>;
