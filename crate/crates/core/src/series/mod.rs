//! Truncated stem power series `Σ_{k<N} z^k a_k mod z^N`.
//!
//! Coefficients stay exact; only evaluation goes through floating point (see
//! [`numeric`]). Each series carries a bound on the coefficients it has
//! dropped so evaluations can report a truncation error.

pub mod numeric;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::algebra::{Quaternion, Rat};
use crate::poly::Poly;
use crate::stem::StemPoly;

pub use numeric::{
    approximate_roots, check_conjugation_identity, default_samples, eval_numeric, CQuatF,
    ConjugationReport, NumericValue, SampleCheck,
};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SeriesError {
    #[error("truncation order must be at least 1")]
    ZeroOrder,
    #[error("conjugator is nearly singular at z = {z}: |Nm| = {norm:e}")]
    NearSingularSample { z: num_complex::Complex64, norm: f64 },
}

/// Bound on the coefficients beyond the truncation order.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum TailBound {
    /// The series is a polynomial of degree below the order.
    Exact,
    /// `|a_k| ≤ scale·rate^k / k!` for every `k`.
    Factorial { scale: f64, rate: f64 },
    Unknown,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SeriesKind {
    Cos,
    Sin,
    Exp,
    /// `cos(z/2)`
    CosHalf,
    /// `sin(z/2)`
    SinHalf,
}

#[derive(Clone, Debug, PartialEq)]
pub struct TruncSeries {
    /// Exactly `order` entries.
    coeffs: Vec<Quaternion>,
    tail: TailBound,
}

fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

fn quat_abs(q: &Quaternion) -> f64 {
    crate::algebra::scalar::rat_to_f64(&q.norm()).sqrt()
}

impl TruncSeries {
    pub fn new(mut coeffs: Vec<Quaternion>, order: usize, tail: TailBound) -> Result<Self, SeriesError> {
        if order == 0 {
            return Err(SeriesError::ZeroOrder);
        }
        coeffs.resize(order, Quaternion::zero());
        Ok(TruncSeries { coeffs, tail })
    }

    /// Taylor series of an elementary scalar function at 0.
    pub fn build(kind: SeriesKind, order: usize) -> Result<Self, SeriesError> {
        let (rate_num, rate_den) = match kind {
            SeriesKind::CosHalf | SeriesKind::SinHalf => (1, 2),
            _ => (1, 1),
        };
        let coeffs = (0..order)
            .map(|k| {
                let sign = match kind {
                    SeriesKind::Exp => 1,
                    SeriesKind::Cos | SeriesKind::CosHalf if k % 2 == 0 => {
                        if (k / 2) % 2 == 0 { 1 } else { -1 }
                    }
                    SeriesKind::Sin | SeriesKind::SinHalf if k % 2 == 1 => {
                        if (k / 2) % 2 == 0 { 1 } else { -1 }
                    }
                    _ => 0,
                };
                let den = factorial(k) * BigInt::from(rate_den).pow(k as u32);
                let num = BigInt::from(sign) * BigInt::from(rate_num);
                Quaternion::scalar(Rat::new(num, den))
            })
            .collect();
        let tail = TailBound::Factorial {
            scale: 1.0,
            rate: rate_num as f64 / rate_den as f64,
        };
        TruncSeries::new(coeffs, order, tail)
    }

    pub fn from_stem(p: &StemPoly, order: usize) -> Result<Self, SeriesError> {
        let tail = if p.len() <= order {
            TailBound::Exact
        } else {
            TailBound::Unknown
        };
        TruncSeries::new(p.truncate(order).into_coeffs(), order, tail)
    }

    pub fn constant(q: Quaternion, order: usize) -> Result<Self, SeriesError> {
        TruncSeries::from_stem(&Poly::constant(q), order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[Quaternion] {
        &self.coeffs
    }

    pub fn tail(&self) -> TailBound {
        self.tail
    }

    /// The stored coefficients as a stem polynomial.
    pub fn to_stem(&self) -> StemPoly {
        Poly::new(self.coeffs.clone())
    }

    /// Every stored coefficient vanishes.
    pub fn is_zero_mod_order(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    fn factorial_form(&self) -> Option<(f64, f64)> {
        match self.tail {
            TailBound::Exact => {
                let scale = self
                    .coeffs
                    .iter()
                    .enumerate()
                    .map(|(k, a)| quat_abs(a) * (1..=k).map(|m| m as f64).product::<f64>())
                    .fold(0.0, f64::max);
                Some((scale, 1.0))
            }
            TailBound::Factorial { scale, rate } => Some((scale, rate)),
            TailBound::Unknown => None,
        }
    }

    fn combine_sum(&self, other: &Self) -> TailBound {
        match (self.tail, other.tail) {
            (TailBound::Exact, TailBound::Exact) if self.order() == other.order() => TailBound::Exact,
            _ => match (self.factorial_form(), other.factorial_form()) {
                (Some((c1, s1)), Some((c2, s2))) => TailBound::Factorial {
                    scale: c1 + c2,
                    rate: s1.max(s2),
                },
                _ => TailBound::Unknown,
            },
        }
    }

    fn degree(&self) -> Option<usize> {
        self.coeffs.iter().rposition(|a| !a.is_zero())
    }

    pub fn add(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        TruncSeries {
            coeffs: (0..order).map(|k| &self.coeffs[k] + &other.coeffs[k]).collect(),
            tail: self.combine_sum(other),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        TruncSeries {
            coeffs: self.coeffs.iter().map(|a| -a).collect(),
            tail: self.tail,
        }
    }

    /// Star product modulo `z^min(order)`.
    pub fn star(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let coeffs = (0..order)
            .map(|n| {
                (0..=n).fold(Quaternion::zero(), |acc, k| {
                    acc + &self.coeffs[k] * &other.coeffs[n - k]
                })
            })
            .collect();
        let fits = match (self.degree(), other.degree()) {
            (Some(a), Some(b)) => a + b < order,
            _ => true,
        };
        let tail = match (self.tail, other.tail) {
            (TailBound::Exact, TailBound::Exact) if fits => TailBound::Exact,
            _ => match (self.factorial_form(), other.factorial_form()) {
                (Some((c1, s1)), Some((c2, s2))) => TailBound::Factorial {
                    scale: c1 * c2,
                    rate: s1 + s2,
                },
                _ => TailBound::Unknown,
            },
        };
        TruncSeries { coeffs, tail }
    }

    pub fn conj(&self) -> Self {
        TruncSeries {
            coeffs: self.coeffs.iter().map(Quaternion::conj).collect(),
            tail: self.tail,
        }
    }

    /// `Tr = S + S^c`, with central coefficients.
    pub fn trace(&self) -> Self {
        self.add(&self.conj())
    }

    /// `Nm = S ★ S^c`, with central coefficients.
    pub fn norm(&self) -> Self {
        self.star(&self.conj())
    }

    /// Multiplies every coefficient on the right by a constant quaternion.
    pub fn scale_right(&self, q: &Quaternion) -> Self {
        let r = quat_abs(q);
        let tail = match self.tail {
            TailBound::Factorial { scale, rate } => TailBound::Factorial {
                scale: scale * r,
                rate,
            },
            t => t,
        };
        TruncSeries {
            coeffs: self.coeffs.iter().map(|a| a * q).collect(),
            tail,
        }
    }
}
