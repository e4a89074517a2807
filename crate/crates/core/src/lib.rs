//! Exact computation with slice regular functions over the quaternions H and
//! the Clifford algebra R₃ ≅ H ⊕ H, represented by polynomial stem functions.
//!
//! * [`algebra`]: rationals, Gaussian rationals, H, H_C = H ⊗ C, R₃.
//! * [`poly`]: univariate polynomials, GCD, divisors helpers, nullspaces.
//! * [`stem`]: stem polynomials, star product, trace, norm, central divisor.
//! * [`equiv`]: invariant bundles, equivalence decisions, orbits, intertwiners.
//! * [`series`]: truncated stem power series and their numeric evaluation.

pub mod algebra;
pub mod equiv;
pub mod poly;
pub mod series;
pub mod stem;

pub use algebra::{CQuat, GRat, Quat, Quaternion, R3Elem, Rat};
pub use equiv::{equivalent, invariants, EquivVerdict, InvariantBundle};
pub use poly::Poly;
pub use series::TruncSeries;
pub use stem::{Divisor, R3StemPoly, StemPoly};
