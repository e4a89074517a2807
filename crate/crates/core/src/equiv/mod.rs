//! Invariants of stem polynomials and the equivalence decisions built on them.
//!
//! Two stems `F`, `H` are equivalent when `F(z) = φ(z)(H(z))` for a holomorphic
//! family of automorphisms `φ(z)` of H_C. For functions that are not slice
//! preserving this is decided by comparing trace, norm and central divisor;
//! for slice preserving input only equality remains, since automorphisms fix
//! the center.

mod intertwine;
mod orbit;
mod r3;

use std::fmt;

use thiserror::Error;

use crate::algebra::Rat;
use crate::poly::Poly;
use crate::stem::{Divisor, StemError, StemPoly};

pub use intertwine::{
    find_intertwiner, find_intertwiners, verify_conjugator, ConjugatorReport, IntertwinerSpace,
};
pub use orbit::{
    classify_orbit, orbit_equivalent, orbit_relation, pointwise_orbit_scan, Isotropy, OrbitClass,
    OrbitKind, OrbitMismatch, ScanFailure, ScanReport,
};
pub use r3::{r3_equivalent, Pairing, R3Verdict};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum EquivError {
    #[error("orbit comparison needs nonzero elements")]
    ZeroInput,
    #[error("conjugator must be nonzero")]
    ZeroAlpha,
}

/// Central divisor slot of an [`InvariantBundle`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CentralDivisor {
    Divisor(Divisor),
    /// The source function is slice preserving; no divisor is defined.
    SlicePreserving,
}

impl fmt::Display for CentralDivisor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CentralDivisor::Divisor(d) => d.fmt(f),
            CentralDivisor::SlicePreserving => f.write_str("slice-preserving"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantBundle {
    pub trace: Poly<Rat>,
    pub norm: Poly<Rat>,
    pub central_divisor: CentralDivisor,
}

pub fn invariants(f: &StemPoly) -> InvariantBundle {
    let central_divisor = match f.cdiv() {
        Ok(d) => CentralDivisor::Divisor(d),
        Err(StemError::SlicePreserving) => CentralDivisor::SlicePreserving,
        Err(e) => unreachable!("cdiv of a non-slice-preserving stem failed: {e}"),
    };
    InvariantBundle {
        trace: f.trace(),
        norm: f.norm(),
        central_divisor,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Branch {
    NotSlicePreserving,
    SlicePreservingIdentical,
}

impl Branch {
    pub fn as_str(self) -> &'static str {
        match self {
            Branch::NotSlicePreserving => "not-slice-preserving",
            Branch::SlicePreservingIdentical => "slice-preserving-identical",
        }
    }
}

/// First invariant on which two stems disagree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Mismatch {
    Trace,
    Norm,
    Cdiv,
    Identity,
}

impl Mismatch {
    pub fn as_str(self) -> &'static str {
        match self {
            Mismatch::Trace => "trace",
            Mismatch::Norm => "norm",
            Mismatch::Cdiv => "cdiv",
            Mismatch::Identity => "identity",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct EquivVerdict {
    pub equivalent: bool,
    pub branch: Branch,
    /// `None` exactly when `equivalent` holds.
    pub reason: Option<Mismatch>,
}

impl EquivVerdict {
    fn from_reason(branch: Branch, reason: Option<Mismatch>) -> Self {
        EquivVerdict {
            equivalent: reason.is_none(),
            branch,
            reason,
        }
    }
}

/// Decides equivalence of `f` and `h` under holomorphic families of
/// automorphisms of H_C.
pub fn equivalent(f: &StemPoly, h: &StemPoly) -> EquivVerdict {
    if f.is_slice_preserving() || h.is_slice_preserving() {
        let reason = (f != h).then_some(Mismatch::Identity);
        return EquivVerdict::from_reason(Branch::SlicePreservingIdentical, reason);
    }
    let (a, b) = (invariants(f), invariants(h));
    let reason = if a.trace != b.trace {
        Some(Mismatch::Trace)
    } else if a.norm != b.norm {
        Some(Mismatch::Norm)
    } else if a.central_divisor != b.central_divisor {
        Some(Mismatch::Cdiv)
    } else {
        None
    };
    EquivVerdict::from_reason(Branch::NotSlicePreserving, reason)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::scalar::{rat, ratio};
    use crate::algebra::{Quat, Quaternion};
    use num_traits::Zero;

    fn worked_f() -> StemPoly {
        Poly::new(vec![
            Quaternion::i(),
            Quaternion::j(),
            Quat::new(rat(0), rat(0), rat(0), ratio(1, 2)),
        ])
    }

    fn worked_g() -> StemPoly {
        Poly::new(vec![
            Quaternion::i(),
            Quaternion::zero(),
            Quat::new(rat(0), ratio(1, 2), rat(0), rat(0)),
        ])
    }

    fn rp(c: &[i64]) -> Poly<Rat> {
        Poly::new(c.iter().map(|&x| rat(x)).collect())
    }

    #[test]
    fn invariant_examples() {
        let b = invariants(&worked_f());
        assert!(b.trace.is_zero());
        assert_eq!(b.norm, Poly::new(vec![rat(1), rat(0), rat(1), rat(0), ratio(1, 4)]));
        assert_eq!(b.central_divisor, CentralDivisor::Divisor(Divisor::empty()));

        let sp = StemPoly::from_central(&rp(&[1, 0, 1]));
        let b = invariants(&sp);
        assert_eq!(b.trace, rp(&[2, 0, 2]));
        assert_eq!(b.norm, rp(&[1, 0, 2, 0, 1]));
        assert_eq!(b.central_divisor, CentralDivisor::SlicePreserving);

        let b = invariants(&Poly::constant(Quaternion::i()));
        assert_eq!((b.trace, b.norm), (rp(&[]), rp(&[1])));
    }

    #[test]
    fn worked_pair_differs_in_cdiv() {
        let v = equivalent(&worked_f(), &worked_g());
        assert!(!v.equivalent);
        assert_eq!(v.branch, Branch::NotSlicePreserving);
        assert_eq!(v.reason, Some(Mismatch::Cdiv));
    }

    #[test]
    fn constant_conjugate_is_equivalent() {
        let alpha = Quaternion::from_ints(1, 0, 0, 1);
        let inv = alpha.inverse().unwrap();
        let f = worked_f();
        let conj = Poly::constant(alpha).star(&f).star(&Poly::constant(inv));
        assert_ne!(conj, f);
        let v = equivalent(&f, &conj);
        assert!(v.equivalent, "{v:?}");
    }

    #[test]
    fn slice_preserving_branch() {
        let sp = StemPoly::from_central(&rp(&[1, 0, 1]));
        let v = equivalent(&sp, &sp.clone());
        assert!(v.equivalent);
        assert_eq!(v.branch, Branch::SlicePreservingIdentical);

        let v = equivalent(&sp, &worked_f());
        assert_eq!(v.reason, Some(Mismatch::Identity));
        assert_eq!(v.branch, Branch::SlicePreservingIdentical);
    }

    #[test]
    fn trace_reported_before_norm() {
        let f = Poly::constant(Quaternion::i());
        let h = Poly::constant(Quaternion::from_ints(1, 1, 0, 0));
        assert_eq!(equivalent(&f, &h).reason, Some(Mismatch::Trace));
        let h2 = Poly::constant(Quaternion::from_ints(0, 2, 0, 0));
        assert_eq!(equivalent(&f, &h2).reason, Some(Mismatch::Norm));
    }
}
