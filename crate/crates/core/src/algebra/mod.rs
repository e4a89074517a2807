//! Exact hypercomplex arithmetic: H, H_C = H ⊗ C and R₃ ≅ H ⊕ H.

mod quat;
mod r3;
pub mod scalar;
mod so3;

use thiserror::Error;

pub use quat::{bform, conj_by_unit, CQuat, CoordText, Quat, Quaternion};
pub use r3::R3Elem;
pub use scalar::{Field, GRat, Rat, Ring, Scalar};
pub use so3::{aut_to_matrix, So3Matrix};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum AlgebraError {
    /// Nonzero element of zero norm (null cone of H_C).
    #[error("element is a zero divisor (nonzero with vanishing norm)")]
    ZeroDivisor,
    #[error("cannot invert zero")]
    ZeroInverse,
    #[error("argument has a nonzero center part; expected an element of W ⊗ C")]
    NotInW,
}
