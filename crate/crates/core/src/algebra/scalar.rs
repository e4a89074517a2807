//! Exact scalars: arbitrary-precision rationals and Gaussian rationals.
//!
//! `GRat` values are written `re + ι·im`, where `ι` is the imaginary unit of
//! the complex tensor factor. It commutes with the quaternion units and is
//! rendered as `E` in text.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::{Complex, Complex64};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub type Rat = BigRational;
pub type GRat = Complex<Rat>;

/// Unital ring, not necessarily commutative.
pub trait Ring:
    Clone
    + PartialEq
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
}

impl<T> Ring for T where
    T: Clone
        + PartialEq
        + Zero
        + One
        + Add<Output = T>
        + Sub<Output = T>
        + Mul<Output = T>
        + Neg<Output = T>
{
}

/// Commutative ring with division by nonzero elements.
pub trait Field: Ring + Div<Output = Self> {}

impl<T> Field for T where T: Ring + Div<Output = T> {}

/// An exact scalar field embedded in the Gaussian rationals.
pub trait Scalar: Field + fmt::Debug + fmt::Display + Send + Sync {
    fn from_rat(r: Rat) -> Self;
    fn to_grat(&self) -> GRat;
    /// Complex conjugation `ι ↦ −ι`; the identity on `Rat`.
    fn complex_conj(&self) -> Self;
    fn to_complex64(&self) -> Complex64 {
        let g = self.to_grat();
        Complex64::new(rat_to_f64(&g.re), rat_to_f64(&g.im))
    }
}

impl Scalar for Rat {
    fn from_rat(r: Rat) -> Self {
        r
    }
    fn to_grat(&self) -> GRat {
        GRat::new(self.clone(), Rat::zero())
    }
    fn complex_conj(&self) -> Self {
        self.clone()
    }
}

impl Scalar for GRat {
    fn from_rat(r: Rat) -> Self {
        GRat::new(r, Rat::zero())
    }
    fn to_grat(&self) -> GRat {
        self.clone()
    }
    fn complex_conj(&self) -> Self {
        self.conj()
    }
}

pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// `n/d`; panics when `d == 0`.
pub fn ratio(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

pub fn grat(re: Rat, im: Rat) -> GRat {
    GRat::new(re, im)
}

/// Gaussian rational with integer parts.
pub fn gint(re: i64, im: i64) -> GRat {
    GRat::new(rat(re), rat(im))
}

/// The commuting unit `ι`.
pub fn iota() -> GRat {
    gint(0, 1)
}

pub fn rat_to_f64(r: &Rat) -> f64 {
    r.to_f64().unwrap_or_else(|| {
        // numerator or denominator overflowed f64 on its own
        let n = r.numer().to_f64().unwrap_or(f64::INFINITY);
        let d = r.denom().to_f64().unwrap_or(f64::INFINITY);
        n / d
    })
}

/// Text form of a rational; integers print without a denominator.
pub fn fmt_rat(r: &Rat) -> String {
    r.to_string()
}

/// Text form of a Gaussian rational using `E` for `ι`.
pub fn fmt_grat(g: &GRat) -> String {
    match (g.re.is_zero(), g.im.is_zero()) {
        (_, true) => fmt_rat(&g.re),
        (true, false) => fmt_iota_part(&g.im, true),
        (false, false) => {
            let sign = if g.im.is_negative() { " - " } else { " + " };
            format!("({}{}{})", fmt_rat(&g.re), sign, fmt_iota_part(&g.im.abs(), false))
        }
    }
}

fn fmt_iota_part(im: &Rat, signed: bool) -> String {
    let body = |m: &Rat| {
        if m.is_one() {
            "E".to_string()
        } else {
            format!("{}*E", fmt_rat(m))
        }
    };
    if signed && im.is_negative() {
        format!("-{}", body(&im.abs()))
    } else {
        body(im)
    }
}
