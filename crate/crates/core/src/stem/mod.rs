//! Polynomial stem functions and their calculus.
//!
//! A stem polynomial `F(z) = Σ z^k a_k` with quaternion coefficients is at the
//! same time the entire slice regular function `f(q) = Σ q^k a_k` (coefficients
//! on the right) and the holomorphic map `C → H_C`, `z ↦ Σ z^k ⊗ a_k`. Since
//! `z` is central in H_C, the pointwise product of stem functions is the
//! coefficient convolution `Poly` already implements; that is the star product.

mod divisor;
mod r3;

use num_traits::{One, Zero};
use thiserror::Error;

use crate::algebra::scalar::ratio;
use crate::algebra::{CQuat, GRat, Quat, Quaternion, Rat, Scalar};
use crate::poly::{Poly, PolyError};

pub use divisor::Divisor;
pub use r3::{R3Cdiv, R3StemPoly};

/// Stem polynomial with real quaternion coefficients.
pub type StemPoly = Poly<Quaternion>;
/// Stem polynomial with H_C coefficients; arises after dividing out a
/// central divisor with non-real roots.
pub type CStemPoly = Poly<CQuat>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum StemError {
    #[error("function is slice preserving; its central divisor is undefined")]
    SlicePreserving,
    #[error("function is identically zero")]
    ZeroFunction,
    #[error("function must have zero trace")]
    TraceNotZero,
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// Center / W decomposition `F = (F′, F″)` of a stem polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitStem<S: Scalar> {
    pub center: Poly<S>,
    /// Components of `F″` over `i, j, k`.
    pub w: [Poly<S>; 3],
}

impl<S: Scalar> SplitStem<S> {
    pub fn reassemble(&self) -> Poly<Quat<S>> {
        let parts = [&self.center, &self.w[0], &self.w[1], &self.w[2]];
        let len = parts.iter().map(|p| p.len()).max().unwrap_or(0);
        Poly::new(
            (0..len)
                .map(|k| Quat {
                    c: std::array::from_fn(|n| parts[n].coeff(k)),
                })
                .collect(),
        )
    }

    /// `B(F″, F″) = w₁² + w₂² + w₃²`.
    pub fn w_square(&self) -> Poly<S> {
        self.w.iter().fold(Poly::zero(), |acc, p| &acc + &(p * p))
    }
}

impl<S: Scalar> Poly<Quat<S>> {
    /// Embeds a scalar polynomial as a central stem polynomial.
    pub fn from_central(p: &Poly<S>) -> Self {
        p.map(|c| Quat::scalar(c.clone()))
    }

    /// `F ★ G`: the stem of the pointwise product `F(z)·G(z)`.
    pub fn star(&self, other: &Self) -> Self {
        self * other
    }

    /// `F^c`: coefficientwise quaternionic conjugation.
    pub fn conj(&self) -> Self {
        self.map(Quat::conj)
    }

    /// `Tr(F) = F + F^c`.
    pub fn trace(&self) -> Poly<S> {
        self.map(Quat::trace)
    }

    /// `Nm(F) = F ★ F^c`, central.
    pub fn norm(&self) -> Poly<S> {
        let prod = self.star(&self.conj());
        debug_assert!(prod.coeffs().iter().all(Quat::is_central));
        prod.map(|q| q.re().clone())
    }

    /// `F̂ = ½(F − F^c)`, the trace-free part.
    pub fn hat(&self) -> Self {
        let half = S::from_rat(ratio(1, 2));
        (self - &self.conj()).map(|q| q.scale(&half))
    }

    pub fn split(&self) -> SplitStem<S> {
        let comp = |n: usize| self.map(|q| q.c[n].clone());
        SplitStem {
            center: comp(0),
            w: [comp(1), comp(2), comp(3)],
        }
    }

    /// Values lie in the center `R ⊗ C` of H_C, i.e. `F″ ≡ 0`.
    pub fn is_slice_preserving(&self) -> bool {
        self.coeffs().iter().all(Quat::is_central)
    }

    /// Divisor of `F″`: monic gcd of its three components.
    pub fn cdiv(&self) -> Result<Divisor, StemError> {
        if self.is_slice_preserving() {
            return Err(StemError::SlicePreserving);
        }
        let split = self.split();
        let mut g = Poly::<GRat>::zero();
        for w in &split.w {
            g = g.gcd(&w.to_grat()).or_else(|e| match e {
                PolyError::BothZero => Ok(Poly::zero()),
                other => Err(other),
            })?;
        }
        Ok(Divisor::from_poly(g)?)
    }

    /// `F(z0) = Σ z0^k a_k` in H_C.
    pub fn eval_stem(&self, z0: &GRat) -> CQuat {
        let lifted: Poly<CQuat> = self.map(Quat::to_cquat);
        lifted.eval(&CQuat::scalar(z0.clone()))
    }

    /// Scalar multiple with the scalar polynomial written on the left.
    pub fn scale_poly(&self, p: &Poly<S>) -> Self {
        &Self::from_central(p) * self
    }

    pub fn to_cstem(&self) -> CStemPoly {
        self.map(Quat::to_cquat)
    }
}

impl StemPoly {
    /// Slice evaluation `f(q) = Σ q^k a_k`.
    pub fn eval_slice(&self, q: &Quaternion) -> Quaternion {
        self.eval(q)
    }

    /// Slice evaluation through the stem function.
    ///
    /// Writes `q = x + v` with `v` imaginary and `|v|² = s`. Expanding
    /// `(x + ιy)^k = A_k + ι·y·B_k` with `A_k, B_k` polynomials in `x` and
    /// `s = y²` gives `F(x + ιy) = P + ιQ` with `P = Σ A_k a_k`,
    /// `Q = y·Σ B_k a_k`, and `f(q) = P + J·Q = Σ A_k a_k + v·Σ B_k a_k` for
    /// `v = yJ`. No square root of `s` is ever taken.
    pub fn eval_slice_via_stem(&self, q: &Quaternion) -> Quaternion {
        let x = q.re().clone();
        let v = q.w_part();
        let s = v.norm();
        let (mut a, mut b) = (Rat::one(), Rat::zero());
        let mut p_sum = Quaternion::zero();
        let mut b_sum = Quaternion::zero();
        for coeff in self.coeffs() {
            p_sum += &coeff.scale(&a);
            b_sum += &coeff.scale(&b);
            let next_a = x.clone() * a.clone() - s.clone() * b.clone();
            let next_b = a + x.clone() * b;
            a = next_a;
            b = next_b;
        }
        p_sum + &v * &b_sum
    }

    /// `F = λ·F̃` with `λ` the monic generator of `cdiv(F)` and `cdiv(F̃)`
    /// empty. Requires `Tr(F) = 0`.
    pub fn remove_central_divisor(&self) -> Result<(Poly<GRat>, CStemPoly), StemError> {
        if self.is_zero() {
            return Err(StemError::ZeroFunction);
        }
        if !self.trace().is_zero() {
            return Err(StemError::TraceNotZero);
        }
        let lambda = self.cdiv()?.into_poly();
        let split = self.to_cstem().split();
        let mut quotient = split.clone();
        for (w, out) in split.w.iter().zip(quotient.w.iter_mut()) {
            let (q, r) = w.div_rem(&lambda)?;
            debug_assert!(r.is_zero());
            *out = q;
        }
        quotient.center = Poly::zero();
        Ok((lambda, quotient.reassemble()))
    }
}
