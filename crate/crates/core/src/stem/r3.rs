//! Stem functions for R₃ ≅ H ⊕ H, handled as pairs of quaternionic stems.

use crate::algebra::{R3Elem, Rat};
use crate::poly::Poly;

use super::{Divisor, StemError, StemPoly};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct R3StemPoly {
    pub first: StemPoly,
    pub second: StemPoly,
}

/// Central divisor of each component; a slice preserving component reports
/// its own error.
pub type R3Cdiv = (Result<Divisor, StemError>, Result<Divisor, StemError>);

impl R3StemPoly {
    pub fn new(first: StemPoly, second: StemPoly) -> Self {
        R3StemPoly { first, second }
    }

    pub fn star(&self, other: &Self) -> Self {
        R3StemPoly::new(self.first.star(&other.first), self.second.star(&other.second))
    }

    pub fn conj(&self) -> Self {
        R3StemPoly::new(self.first.conj(), self.second.conj())
    }

    pub fn trace(&self) -> (Poly<Rat>, Poly<Rat>) {
        (self.first.trace(), self.second.trace())
    }

    pub fn norm(&self) -> (Poly<Rat>, Poly<Rat>) {
        (self.first.norm(), self.second.norm())
    }

    pub fn cdiv(&self) -> R3Cdiv {
        (self.first.cdiv(), self.second.cdiv())
    }

    pub fn swap(&self) -> Self {
        R3StemPoly::new(self.second.clone(), self.first.clone())
    }

    /// Componentwise evaluation at any point of H ⊕ H (the extension of the
    /// slice function to all of R₃).
    pub fn eval(&self, p: &R3Elem<Rat>) -> R3Elem<Rat> {
        R3Elem::new(self.first.eval_slice(&p.first), self.second.eval_slice(&p.second))
    }

    /// Evaluation restricted to the quadratic cone, where the slice function
    /// is classically defined.
    pub fn eval_on_cone(&self, p: &R3Elem<Rat>) -> Option<R3Elem<Rat>> {
        p.in_quadratic_cone().then(|| self.eval(p))
    }

    pub fn is_slice_preserving(&self) -> (bool, bool) {
        (self.first.is_slice_preserving(), self.second.is_slice_preserving())
    }
}

impl From<(StemPoly, StemPoly)> for R3StemPoly {
    fn from((first, second): (StemPoly, StemPoly)) -> Self {
        R3StemPoly::new(first, second)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::scalar::{rat, ratio};
    use crate::algebra::{Quat, Quaternion};
    use num_traits::{One, Zero};

    fn g_half() -> StemPoly {
        Poly::new(vec![
            Quaternion::i(),
            Quaternion::zero(),
            Quat::new(rat(0), ratio(1, 2), rat(0), rat(0)),
        ])
    }

    #[test]
    fn componentwise_cdiv() {
        let f = R3StemPoly::new(Poly::constant(Quaternion::i()), g_half());
        let (a, b) = f.cdiv();
        assert!(a.unwrap().is_empty());
        let two_plus_z2 = Poly::new(vec![rat(2), rat(0), rat(1)]).to_grat();
        assert_eq!(b.unwrap().poly(), &two_plus_z2);
    }

    #[test]
    fn componentwise_norm() {
        let f = R3StemPoly::new(StemPoly::one(), StemPoly::var());
        assert_eq!(f.norm(), (Poly::one(), Poly::monomial(rat(1), 2)));
    }

    #[test]
    fn componentwise_eval() {
        let z2 = Poly::monomial(Quaternion::one(), 2);
        let f = R3StemPoly::new(z2.clone(), z2);
        let at = R3Elem::new(Quaternion::j(), Quaternion::k());
        let minus_one = -Quaternion::one();
        assert_eq!(f.eval(&at), R3Elem::new(minus_one.clone(), minus_one));
        assert!(f.eval_on_cone(&at).is_some());
        let off_cone = R3Elem::new(Quaternion::from_ints(1, 1, 0, 0), Quaternion::from_ints(1, 2, 0, 0));
        assert!(f.eval_on_cone(&off_cone).is_none());
    }

    #[test]
    fn slice_preserving_component_reported() {
        let f = R3StemPoly::new(StemPoly::one(), Poly::constant(Quaternion::j()));
        let (a, b) = f.cdiv();
        assert_eq!(a, Err(StemError::SlicePreserving));
        assert!(b.is_ok());
    }
}
