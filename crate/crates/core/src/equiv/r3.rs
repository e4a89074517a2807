//! Equivalence for R₃ = H ⊕ H.
//!
//! The identity component of Aut(R₃ ⊗ C) is Aut(H_C) × Aut(H_C) acting
//! componentwise; the full group adds the swap of the two summands.

use crate::stem::R3StemPoly;

use super::{equivalent, EquivVerdict};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Pairing {
    Direct,
    Swapped,
}

impl Pairing {
    pub fn as_str(self) -> &'static str {
        match self {
            Pairing::Direct => "direct",
            Pairing::Swapped => "swapped",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct R3Verdict {
    /// Verdicts for `(F₁, H₁)` and `(F₂, H₂)`.
    pub direct: [EquivVerdict; 2],
    /// Verdicts for `(F₁, H₂)` and `(F₂, H₁)`, computed only when swapping
    /// is allowed.
    pub swapped: Option<[EquivVerdict; 2]>,
}

impl R3Verdict {
    /// The first pairing under which both components are equivalent.
    pub fn pairing(&self) -> Option<Pairing> {
        let ok = |v: &[EquivVerdict; 2]| v.iter().all(|x| x.equivalent);
        if ok(&self.direct) {
            Some(Pairing::Direct)
        } else if self.swapped.as_ref().is_some_and(ok) {
            Some(Pairing::Swapped)
        } else {
            None
        }
    }

    pub fn equivalent(&self) -> bool {
        self.pairing().is_some()
    }
}

pub fn r3_equivalent(f: &R3StemPoly, h: &R3StemPoly, allow_swap: bool) -> R3Verdict {
    let direct = [equivalent(&f.first, &h.first), equivalent(&f.second, &h.second)];
    let swapped = allow_swap.then(|| [equivalent(&f.first, &h.second), equivalent(&f.second, &h.first)]);
    R3Verdict { direct, swapped }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::scalar::{rat, ratio};
    use crate::algebra::{Quat, Quaternion};
    use crate::poly::Poly;
    use crate::stem::StemPoly;
    use num_traits::Zero;

    fn worked_f() -> StemPoly {
        Poly::new(vec![Quaternion::i(), Quaternion::j(), Quat::new(rat(0), rat(0), rat(0), ratio(1, 2))])
    }

    fn worked_g() -> StemPoly {
        Poly::new(vec![Quaternion::i(), Quaternion::zero(), Quat::new(rat(0), ratio(1, 2), rat(0), rat(0))])
    }

    #[test]
    fn identical_pairs() {
        let f = R3StemPoly::new(worked_f(), worked_g());
        let v = r3_equivalent(&f, &f, false);
        assert_eq!(v.pairing(), Some(Pairing::Direct));
    }

    #[test]
    fn swap_detection() {
        let f = R3StemPoly::new(worked_f(), worked_g());
        let h = f.swap();
        assert!(!r3_equivalent(&f, &h, false).equivalent());
        let v = r3_equivalent(&f, &h, true);
        assert_eq!(v.pairing(), Some(Pairing::Swapped));
    }

    #[test]
    fn constant_units_componentwise() {
        let f = R3StemPoly::new(Poly::constant(Quaternion::i()), Poly::constant(Quaternion::j()));
        let h = R3StemPoly::new(Poly::constant(Quaternion::i()), Poly::constant(Quaternion::i()));
        assert!(r3_equivalent(&f, &h, false).equivalent());
    }
}
