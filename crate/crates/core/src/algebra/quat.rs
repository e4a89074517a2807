//! Quaternions over a scalar ring, covering H (rational coordinates),
//! H_C = H ⊗ C (Gaussian-rational coordinates) and a float carrier for
//! numeric work.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::scalar::{fmt_grat, fmt_rat, Field, GRat, Rat, Ring, Scalar};
use super::AlgebraError;

/// `c[0] + c[1]·i + c[2]·j + c[3]·k` with `i² = j² = k² = −1`, `ij = k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Quat<S> {
    pub c: [S; 4],
}

/// Real quaternion with rational coordinates.
pub type Quaternion = Quat<Rat>;
/// Element of H_C: coordinates over `(1, i, j, k)` with Gaussian-rational entries.
pub type CQuat = Quat<GRat>;

impl<S> Quat<S> {
    pub const fn new(c0: S, c1: S, c2: S, c3: S) -> Self {
        Quat { c: [c0, c1, c2, c3] }
    }

    pub fn re(&self) -> &S {
        &self.c[0]
    }
}

impl<S: Ring> Quat<S> {
    pub fn scalar(s: S) -> Self {
        Quat::new(s, S::zero(), S::zero(), S::zero())
    }

    pub fn i() -> Self {
        Quat::new(S::zero(), S::one(), S::zero(), S::zero())
    }

    pub fn j() -> Self {
        Quat::new(S::zero(), S::zero(), S::one(), S::zero())
    }

    pub fn k() -> Self {
        Quat::new(S::zero(), S::zero(), S::zero(), S::one())
    }

    /// Basis element `1, i, j, k` for `n = 0..4`.
    pub fn unit(n: usize) -> Self {
        let mut q = Self::zero();
        q.c[n] = S::one();
        q
    }

    /// Quaternionic conjugation; fixes scalars (including `ι`).
    pub fn conj(&self) -> Self {
        Quat::new(
            self.c[0].clone(),
            -self.c[1].clone(),
            -self.c[2].clone(),
            -self.c[3].clone(),
        )
    }

    pub fn trace(&self) -> S {
        self.c[0].clone() + self.c[0].clone()
    }

    /// `x·x^c = c0² + c1² + c2² + c3²`, central.
    pub fn norm(&self) -> S {
        self.c
            .iter()
            .fold(S::zero(), |acc, x| acc + x.clone() * x.clone())
    }

    /// Center / W decomposition: `x = center·1 + wpart`.
    pub fn split(&self) -> (S, Self) {
        (self.c[0].clone(), self.w_part())
    }

    pub fn w_part(&self) -> Self {
        Quat::new(
            S::zero(),
            self.c[1].clone(),
            self.c[2].clone(),
            self.c[3].clone(),
        )
    }

    pub fn is_central(&self) -> bool {
        self.c[1..].iter().all(Zero::is_zero)
    }

    pub fn scale(&self, s: &S) -> Self {
        Quat {
            c: self.c.clone().map(|x| x * s.clone()),
        }
    }

    pub fn map<T>(&self, f: impl Fn(&S) -> T) -> Quat<T> {
        Quat {
            c: [f(&self.c[0]), f(&self.c[1]), f(&self.c[2]), f(&self.c[3])],
        }
    }

    /// Sum of products of the W coordinates; meaningful on W ⊗ C only.
    fn w_dot(&self, other: &Self) -> S {
        (1..4).fold(S::zero(), |acc, n| {
            acc + self.c[n].clone() * other.c[n].clone()
        })
    }
}

impl<S: Field> Quat<S> {
    /// `x^c / Nm(x)`.
    pub fn inverse(&self) -> Result<Self, AlgebraError> {
        if self.is_zero() {
            return Err(AlgebraError::ZeroInverse);
        }
        let n = self.norm();
        if n.is_zero() {
            return Err(AlgebraError::ZeroDivisor);
        }
        let inv = S::one() / n;
        Ok(self.conj().scale(&inv))
    }
}

impl<S: Scalar> Quat<S> {
    pub fn to_cquat(&self) -> CQuat {
        self.map(Scalar::to_grat)
    }

    /// Complex conjugation `ι ↦ −ι` applied to every coordinate.
    pub fn complex_conj(&self) -> Self {
        self.map(Scalar::complex_conj)
    }
}

impl Quaternion {
    pub fn from_ints(c0: i64, c1: i64, c2: i64, c3: i64) -> Self {
        use super::scalar::rat;
        Quat::new(rat(c0), rat(c1), rat(c2), rat(c3))
    }
}

impl CQuat {
    /// Splits `x = a + ι·b` into its real quaternion parts.
    pub fn real_imag(&self) -> (Quaternion, Quaternion) {
        (self.map(|g| g.re.clone()), self.map(|g| g.im.clone()))
    }

    pub fn from_real_imag(a: &Quaternion, b: &Quaternion) -> Self {
        Quat {
            c: std::array::from_fn(|n| GRat::new(a.c[n].clone(), b.c[n].clone())),
        }
    }
}

/// The C-bilinear form on W ⊗ C extending the euclidean product.
pub fn bform<S: Ring>(v: &Quat<S>, w: &Quat<S>) -> Result<S, AlgebraError> {
    if !v.c[0].is_zero() || !w.c[0].is_zero() {
        return Err(AlgebraError::NotInW);
    }
    Ok(v.w_dot(w))
}

/// Inner automorphism `x ↦ αxα⁻¹`.
pub fn conj_by_unit<S: Field>(alpha: &Quat<S>, x: &Quat<S>) -> Result<Quat<S>, AlgebraError> {
    let inv = alpha.inverse()?;
    Ok(alpha * x * &inv)
}

fn quat_mul<S: Ring>(a: &Quat<S>, b: &Quat<S>) -> Quat<S> {
    let [a0, a1, a2, a3] = &a.c;
    let [b0, b1, b2, b3] = &b.c;
    let m = |x: &S, y: &S| x.clone() * y.clone();
    Quat::new(
        m(a0, b0) - m(a1, b1) - m(a2, b2) - m(a3, b3),
        m(a0, b1) + m(a1, b0) + m(a2, b3) - m(a3, b2),
        m(a0, b2) - m(a1, b3) + m(a2, b0) + m(a3, b1),
        m(a0, b3) + m(a1, b2) - m(a2, b1) + m(a3, b0),
    )
}

impl<S: Ring> Zero for Quat<S> {
    fn zero() -> Self {
        Quat::new(S::zero(), S::zero(), S::zero(), S::zero())
    }
    fn is_zero(&self) -> bool {
        self.c.iter().all(Zero::is_zero)
    }
}

impl<S: Ring> One for Quat<S> {
    fn one() -> Self {
        Quat::scalar(S::one())
    }
}

impl<S: Ring> Add for Quat<S> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        &self + &rhs
    }
}

impl<S: Ring> Add<&Quat<S>> for &Quat<S> {
    type Output = Quat<S>;
    fn add(self, rhs: &Quat<S>) -> Quat<S> {
        Quat {
            c: std::array::from_fn(|n| self.c[n].clone() + rhs.c[n].clone()),
        }
    }
}

impl<S: Ring> AddAssign<&Quat<S>> for Quat<S> {
    fn add_assign(&mut self, rhs: &Quat<S>) {
        *self = &*self + rhs;
    }
}

impl<S: Ring> Sub for Quat<S> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        &self - &rhs
    }
}

impl<S: Ring> Sub<&Quat<S>> for &Quat<S> {
    type Output = Quat<S>;
    fn sub(self, rhs: &Quat<S>) -> Quat<S> {
        Quat {
            c: std::array::from_fn(|n| self.c[n].clone() - rhs.c[n].clone()),
        }
    }
}

impl<S: Ring> Neg for Quat<S> {
    type Output = Self;
    fn neg(self) -> Self {
        Quat {
            c: self.c.map(|x| -x),
        }
    }
}

impl<S: Ring> Neg for &Quat<S> {
    type Output = Quat<S>;
    fn neg(self) -> Quat<S> {
        -self.clone()
    }
}

impl<S: Ring> Mul for Quat<S> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        quat_mul(&self, &rhs)
    }
}

impl<S: Ring> Mul<&Quat<S>> for &Quat<S> {
    type Output = Quat<S>;
    fn mul(self, rhs: &Quat<S>) -> Quat<S> {
        quat_mul(self, rhs)
    }
}

impl<S: Ring> Mul<&Quat<S>> for Quat<S> {
    type Output = Quat<S>;
    fn mul(self, rhs: &Quat<S>) -> Quat<S> {
        quat_mul(&self, rhs)
    }
}

/// Rendering of a coordinate in quaternion text.
pub trait CoordText {
    fn coord_text(&self) -> String;
    fn coord_is_zero(&self) -> bool;
    /// Whether the text starts with a minus sign that may be pulled out.
    fn coord_is_negative(&self) -> bool;
    fn coord_abs_text(&self) -> String;
}

impl CoordText for Rat {
    fn coord_text(&self) -> String {
        fmt_rat(self)
    }
    fn coord_is_zero(&self) -> bool {
        self.is_zero()
    }
    fn coord_is_negative(&self) -> bool {
        self < &Rat::zero()
    }
    fn coord_abs_text(&self) -> String {
        fmt_rat(&num_traits::Signed::abs(self))
    }
}

impl CoordText for GRat {
    fn coord_text(&self) -> String {
        fmt_grat(self)
    }
    fn coord_is_zero(&self) -> bool {
        self.is_zero()
    }
    fn coord_is_negative(&self) -> bool {
        // only pure reals or pure ι-multiples carry a bare leading sign
        let neg = |r: &Rat| r < &Rat::zero();
        (self.im.is_zero() && neg(&self.re)) || (self.re.is_zero() && neg(&self.im))
    }
    fn coord_abs_text(&self) -> String {
        if self.coord_is_negative() {
            fmt_grat(&-self.clone())
        } else {
            fmt_grat(self)
        }
    }
}

impl<S: Ring + CoordText> Quat<S> {
    /// Sum text such as `1 - 2*i + 1/2*k`, without enclosing parentheses.
    pub fn sum_text(&self) -> String {
        const UNITS: [&str; 4] = ["", "i", "j", "k"];
        let mut out = String::new();
        for (n, x) in self.c.iter().enumerate() {
            if x.coord_is_zero() {
                continue;
            }
            let neg = x.coord_is_negative();
            let mag = x.coord_abs_text();
            let term = match (n, mag.as_str()) {
                (0, _) => mag,
                (_, "1") => UNITS[n].to_string(),
                _ => format!("{}*{}", mag, UNITS[n]),
            };
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            out.push_str(&term);
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

impl<S: Ring + CoordText> fmt::Display for Quat<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.sum_text())
    }
}
