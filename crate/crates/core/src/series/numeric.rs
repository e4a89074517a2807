//! Double-precision evaluation of truncated series and the numeric checks
//! built on it. Every comparison here carries an explicit tolerance.

use num_complex::Complex64;
use num_traits::{One, Zero};

use crate::algebra::{GRat, Quat, Scalar};
use crate::poly::Poly;

use super::{SeriesError, TailBound, TruncSeries};

/// Element of H_C over double-precision complex scalars.
pub type CQuatF = Quat<Complex64>;

#[derive(Clone, Debug, PartialEq)]
pub struct NumericValue {
    pub value: CQuatF,
    /// Upper bound on `|Σ_{k≥N} q^k a_k|`; infinite when unknown.
    pub tail_bound: f64,
}

/// Euclidean length over the eight real coordinates.
pub fn cquatf_abs(q: &CQuatF) -> f64 {
    q.c.iter().map(Complex64::norm_sqr).sum::<f64>().sqrt()
}

fn cquatf_dist(a: &CQuatF, b: &CQuatF) -> f64 {
    cquatf_abs(&(a - b))
}

/// A radius `r` with `|q^k| ≤ r^k` for all `k ≥ 1`.
///
/// The euclidean length is multiplicative on H and on central elements of
/// H_C; in general `|xy| ≤ √2·|x|·|y|`.
fn power_radius(q: &CQuatF) -> f64 {
    let abs = cquatf_abs(q);
    let real_quaternion = q.c.iter().all(|c| c.im == 0.0);
    let central = q.c[1..].iter().all(|c| c.is_zero());
    if real_quaternion || central {
        abs
    } else {
        std::f64::consts::SQRT_2 * abs
    }
}

fn tail_bound(tail: TailBound, order: usize, radius: f64) -> f64 {
    match tail {
        TailBound::Exact => 0.0,
        TailBound::Unknown => f64::INFINITY,
        TailBound::Factorial { scale, rate } => {
            let x = rate * radius;
            let n = order as f64;
            if x >= n + 1.0 {
                return f64::INFINITY;
            }
            // scale·x^N/N! · Σ_m (x/(N+1))^m
            let lead = (1..=order).fold(scale, |acc, k| acc * x / k as f64);
            lead / (1.0 - x / (n + 1.0))
        }
    }
}

/// `Σ_{k<N} q^k a_k` by Horner's rule, with the truncation error bound.
///
/// A complex number `z` is evaluated as the central element `z·1`, which
/// gives the stem function `F(z)`.
pub fn eval_numeric(s: &TruncSeries, q: &CQuatF) -> NumericValue {
    let value = s.coeffs().iter().rev().fold(CQuatF::zero(), |acc, a| {
        a.map(Scalar::to_complex64) + q * &acc
    });
    NumericValue {
        value,
        tail_bound: tail_bound(s.tail(), s.order(), power_radius(q)),
    }
}

/// Result of checking `Hc(z)⁻¹·F(z)·Hc(z) ≈ G(z)` at one sample.
#[derive(Clone, Debug, PartialEq)]
pub struct SampleCheck {
    pub z: Complex64,
    /// Largest coordinate distance between the conjugated `F(z)` and `G(z)`.
    pub residual: f64,
    pub trace_residual: f64,
    pub norm_residual: f64,
    /// Largest truncation bound among the three evaluations.
    pub tail_bound: f64,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ConjugationReport {
    pub tol: f64,
    pub samples: Vec<SampleCheck>,
}

impl ConjugationReport {
    pub fn all_pass(&self) -> bool {
        self.samples.iter().all(|s| s.pass)
    }

    pub fn max_residual(&self) -> f64 {
        self.samples.iter().map(|s| s.residual).fold(0.0, f64::max)
    }
}

/// The fixed evaluation grid: `0.3, 1.0, −0.7, 0.5+0.5ι, −1.2ι`.
pub fn default_samples() -> Vec<Complex64> {
    vec![
        Complex64::new(0.3, 0.0),
        Complex64::new(1.0, 0.0),
        Complex64::new(-0.7, 0.0),
        Complex64::new(0.5, 0.5),
        Complex64::new(0.0, -1.2),
    ]
}

fn inverse(q: &CQuatF) -> CQuatF {
    let n = q.norm();
    q.conj().scale(&(Complex64::one() / n))
}

/// Checks `Hc(z)⁻¹·F(z)·Hc(z) = G(z)` together with trace and norm
/// agreement of `F(z)` and `G(z)` at each sample, within `tol`.
pub fn check_conjugation_identity(
    f: &TruncSeries,
    g: &TruncSeries,
    hc: &TruncSeries,
    samples: &[Complex64],
    tol: f64,
) -> Result<ConjugationReport, SeriesError> {
    let mut checks = Vec::with_capacity(samples.len());
    for &z in samples {
        let at = CQuatF::scalar(z);
        let (fv, gv, hv) = (eval_numeric(f, &at), eval_numeric(g, &at), eval_numeric(hc, &at));
        let hn = hv.value.norm().norm();
        if hn < tol {
            return Err(SeriesError::NearSingularSample { z, norm: hn });
        }
        let conjugated = &inverse(&hv.value) * &fv.value * &hv.value;
        let residual = cquatf_dist(&conjugated, &gv.value);
        let trace_residual = (fv.value.trace() - gv.value.trace()).norm();
        let norm_residual = (fv.value.norm() - gv.value.norm()).norm();
        let tail = fv.tail_bound.max(gv.tail_bound).max(hv.tail_bound);
        let pass = residual <= tol && trace_residual <= tol && norm_residual <= tol && tail <= tol;
        checks.push(SampleCheck {
            z,
            residual,
            trace_residual,
            norm_residual,
            tail_bound: tail,
            pass,
        });
    }
    Ok(ConjugationReport {
        tol,
        samples: checks,
    })
}

/// Numeric roots of a nonzero polynomial with their exact multiplicities.
///
/// The multiplicities come from an exact square-free decomposition; each
/// square-free factor is then solved by Durand–Kerner iteration. Display
/// only; no exact claim is attached to the returned values.
pub fn approximate_roots(p: &Poly<GRat>) -> Vec<(Complex64, usize)> {
    let Ok(parts) = p.squarefree_decomposition() else {
        return Vec::new();
    };
    let mut out = Vec::new();
    for (factor, mult) in parts {
        let coeffs: Vec<Complex64> = factor.coeffs().iter().map(Scalar::to_complex64).collect();
        for r in durand_kerner(&coeffs) {
            out.push((r, mult));
        }
    }
    out.sort_by(|a, b| {
        (a.0.re, a.0.im)
            .partial_cmp(&(b.0.re, b.0.im))
            .unwrap_or(std::cmp::Ordering::Equal)
    });
    out
}

/// Roots of a monic polynomial given by ascending coefficients.
fn durand_kerner(coeffs: &[Complex64]) -> Vec<Complex64> {
    let n = coeffs.len().saturating_sub(1);
    if n == 0 {
        return Vec::new();
    }
    let eval = |x: Complex64| coeffs.iter().rev().fold(Complex64::zero(), |acc, &c| acc * x + c);
    let seed = Complex64::new(0.4, 0.9);
    let mut roots: Vec<Complex64> = (0..n).map(|k| seed.powu(k as u32 + 1)).collect();
    for _ in 0..1000 {
        let mut delta: f64 = 0.0;
        for k in 0..n {
            let denom = (0..n)
                .filter(|&m| m != k)
                .fold(Complex64::one(), |acc, m| acc * (roots[k] - roots[m]));
            let step = eval(roots[k]) / denom;
            roots[k] -= step;
            delta = delta.max(step.norm());
        }
        if delta < 1e-15 {
            break;
        }
    }
    roots
}
