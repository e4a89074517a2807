use std::fmt;

use num_traits::One;

use crate::algebra::GRat;
use crate::poly::{Poly, PolyError};

/// Effective divisor on C, stored as the monic polynomial vanishing exactly
/// on it (with multiplicities). The empty divisor is the constant 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Divisor {
    gcd_poly: Poly<GRat>,
}

impl Divisor {
    /// Normalizes `p` to monic; the zero polynomial has no divisor.
    pub fn from_poly(p: Poly<GRat>) -> Result<Self, PolyError> {
        if p.degree().is_none() {
            return Err(PolyError::ZeroPolynomial);
        }
        Ok(Divisor { gcd_poly: p.monic() })
    }

    pub fn empty() -> Self {
        Divisor {
            gcd_poly: Poly::one(),
        }
    }

    pub fn poly(&self) -> &Poly<GRat> {
        &self.gcd_poly
    }

    pub fn into_poly(self) -> Poly<GRat> {
        self.gcd_poly
    }

    pub fn is_empty(&self) -> bool {
        self.gcd_poly.is_one()
    }

    /// Total multiplicity.
    pub fn degree(&self) -> usize {
        self.gcd_poly.degree().unwrap_or(0)
    }

    pub fn multiplicity_at(&self, z0: &GRat) -> usize {
        self.gcd_poly
            .vanishing_order(z0)
            .expect("divisor polynomial is nonzero")
    }
}

impl fmt::Display for Divisor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.gcd_poly.fmt(f)
    }
}
