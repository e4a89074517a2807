//! Pointwise orbits of SO(3, C) = Aut(H_C) acting on H_C.
//!
//! The group fixes the center and acts on W ⊗ C through the bilinear form
//! `B`. Its orbits in W ⊗ C are `{0}`, the punctured null cone
//! `{B(v,v) = 0} \ {0}` and the quadrics `{B(v,v) = λ}` for `λ ≠ 0`.

use num_traits::Zero;

use crate::algebra::{bform, CQuat, GRat};
use crate::stem::StemPoly;

use super::EquivError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OrbitKind {
    /// W-part zero: a fixed point of the whole group.
    CenterFixed,
    /// W-part nonzero with `B(v″, v″) = 0`.
    NullCone,
    Generic,
}

/// Isotropy group of a point, up to isomorphism.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Isotropy {
    FullGroup,
    /// Additive group `(C, +)`.
    AdditiveC,
    /// Multiplicative group `C*`.
    TorusCstar,
}

impl OrbitKind {
    pub fn as_str(self) -> &'static str {
        match self {
            OrbitKind::CenterFixed => "center-fixed",
            OrbitKind::NullCone => "null-cone",
            OrbitKind::Generic => "generic",
        }
    }
}

impl Isotropy {
    pub fn as_str(self) -> &'static str {
        match self {
            Isotropy::FullGroup => "full-group",
            Isotropy::AdditiveC => "additive-C",
            Isotropy::TorusCstar => "torus-C*",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitClass {
    pub kind: OrbitKind,
    /// `B(v″, v″)`; nonzero exactly for generic points.
    pub lambda: GRat,
    pub isotropy: Isotropy,
}

fn w_square(v: &CQuat) -> GRat {
    bform(&v.w_part(), &v.w_part()).expect("w_part has no center component")
}

pub fn classify_orbit(v: &CQuat) -> OrbitClass {
    let lambda = w_square(v);
    let (kind, isotropy) = if v.is_central() {
        (OrbitKind::CenterFixed, Isotropy::FullGroup)
    } else if lambda.is_zero() {
        (OrbitKind::NullCone, Isotropy::AdditiveC)
    } else {
        (OrbitKind::Generic, Isotropy::TorusCstar)
    };
    OrbitClass {
        kind,
        lambda,
        isotropy,
    }
}

/// Why two points of H_C lie in different orbits.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OrbitMismatch {
    /// Center parts (equivalently traces) differ.
    Center,
    /// `B(p″, p″) ≠ B(q″, q″)` (equivalently norms, given equal centers).
    Form,
    /// One point is central, the other sits on the null cone with the same
    /// trace and norm.
    CentralVersusNullCone,
    /// Exactly one point is zero.
    ZeroVersusNonzero,
}

impl OrbitMismatch {
    pub fn as_str(self) -> &'static str {
        match self {
            OrbitMismatch::Center => "trace",
            OrbitMismatch::Form => "norm",
            OrbitMismatch::CentralVersusNullCone => "central-vs-null-cone",
            OrbitMismatch::ZeroVersusNonzero => "zero-vs-nonzero",
        }
    }
}

/// Orbit comparison including zero, which forms an orbit on its own.
pub fn orbit_relation(p: &CQuat, q: &CQuat) -> Result<(), OrbitMismatch> {
    if p.is_zero() != q.is_zero() {
        return Err(OrbitMismatch::ZeroVersusNonzero);
    }
    if p.re() != q.re() {
        return Err(OrbitMismatch::Center);
    }
    if w_square(p) != w_square(q) {
        return Err(OrbitMismatch::Form);
    }
    // equal trace and norm do not separate a central point from a null-cone
    // point with the same center; no automorphism moves the center
    if p.is_central() != q.is_central() {
        return Err(OrbitMismatch::CentralVersusNullCone);
    }
    Ok(())
}

/// Whether some automorphism of H_C maps `p` to `q`.
///
/// Stricter than comparing trace and norm alone: `1` and `1 + i + ιj` share
/// both, yet the first is central and the second is not, so they are
/// reported as inequivalent.
pub fn orbit_equivalent(p: &CQuat, q: &CQuat) -> Result<bool, EquivError> {
    if p.is_zero() || q.is_zero() {
        return Err(EquivError::ZeroInput);
    }
    Ok(orbit_relation(p, q).is_ok())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScanFailure {
    pub z: GRat,
    pub reason: OrbitMismatch,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScanReport {
    pub checked: usize,
    pub failures: Vec<ScanFailure>,
}

impl ScanReport {
    pub fn all_pass(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Compares `F(z)` and `H(z)` orbitwise at every sample. A failure certifies
/// that `F` and `H` are not equivalent.
pub fn pointwise_orbit_scan(f: &StemPoly, h: &StemPoly, samples: &[GRat]) -> ScanReport {
    let failures = samples
        .iter()
        .filter_map(|z| {
            orbit_relation(&f.eval_stem(z), &h.eval_stem(z))
                .err()
                .map(|reason| ScanFailure {
                    z: z.clone(),
                    reason,
                })
        })
        .collect();
    ScanReport {
        checked: samples.len(),
        failures,
    }
}
