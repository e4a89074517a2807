//! Dense univariate polynomials and exact linear algebra.
//!
//! `Poly<T>` works over any ring `T`, commutative or not. Products keep the
//! written factor order coefficient by coefficient, which is exactly what the
//! star product of stem polynomials needs. Division, GCD and the divisor
//! helpers need a field.

mod linalg;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};
use thiserror::Error;

use crate::algebra::{CoordText, GRat, Quat, Rat, Ring, Scalar};

pub use linalg::Matrix;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("gcd of two zero polynomials is undefined")]
    BothZero,
    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,
}

/// `Σ coeffs[k]·z^k`, never stored with a trailing zero coefficient.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly<T> {
    coeffs: Vec<T>,
}

impl<T: Ring> Poly<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn constant(c: T) -> Self {
        Poly::new(vec![c])
    }

    /// `c·z^d`.
    pub fn monomial(c: T, d: usize) -> Self {
        let mut coeffs = vec![T::zero(); d];
        coeffs.push(c);
        Poly::new(coeffs)
    }

    /// The variable `z`.
    pub fn var() -> Self {
        Poly::monomial(T::one(), 1)
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.coeffs
    }

    /// Coefficient of `z^k`, zero beyond the degree.
    pub fn coeff(&self, k: usize) -> T {
        self.coeffs.get(k).cloned().unwrap_or_else(T::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> Option<&T> {
        self.coeffs.last()
    }

    pub fn map<U: Ring>(&self, f: impl Fn(&T) -> U) -> Poly<U> {
        Poly::new(self.coeffs.iter().map(f).collect())
    }

    /// Multiplies every coefficient by `c` on the left.
    pub fn scale_left(&self, c: &T) -> Self {
        self.map(|a| c.clone() * a.clone())
    }

    /// Multiplies every coefficient by `c` on the right.
    pub fn scale_right(&self, c: &T) -> Self {
        self.map(|a| a.clone() * c.clone())
    }

    /// Horner evaluation of `Σ x^k·a_k` with the argument on the left.
    pub fn eval(&self, x: &T) -> T {
        self.coeffs
            .iter()
            .rev()
            .fold(T::zero(), |acc, a| a.clone() + x.clone() * acc)
    }

    /// Drops every coefficient of degree `>= n`.
    pub fn truncate(&self, n: usize) -> Self {
        Poly::new(self.coeffs.iter().take(n).cloned().collect())
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Poly::one(), |acc, _| &acc * self)
    }
}

impl<T: Ring> Zero for Poly<T> {
    fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl<T: Ring> One for Poly<T> {
    fn one() -> Self {
        Poly::constant(T::one())
    }
}

impl<T: Ring> Add<&Poly<T>> for &Poly<T> {
    type Output = Poly<T>;
    fn add(self, rhs: &Poly<T>) -> Poly<T> {
        let n = self.len().max(rhs.len());
        Poly::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl<T: Ring> Sub<&Poly<T>> for &Poly<T> {
    type Output = Poly<T>;
    fn sub(self, rhs: &Poly<T>) -> Poly<T> {
        let n = self.len().max(rhs.len());
        Poly::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl<T: Ring> Mul<&Poly<T>> for &Poly<T> {
    type Output = Poly<T>;
    fn mul(self, rhs: &Poly<T>) -> Poly<T> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![T::zero(); self.len() + rhs.len() - 1];
        for (a_idx, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (b_idx, b) in rhs.coeffs.iter().enumerate() {
                let slot = &mut out[a_idx + b_idx];
                *slot = slot.clone() + a.clone() * b.clone();
            }
        }
        Poly::new(out)
    }
}

impl<T: Ring> Neg for &Poly<T> {
    type Output = Poly<T>;
    fn neg(self) -> Poly<T> {
        self.map(|a| -a.clone())
    }
}

macro_rules! forward_by_value {
    ($($tr:ident $m:ident),*) => {$(
        impl<T: Ring> $tr for Poly<T> {
            type Output = Poly<T>;
            fn $m(self, rhs: Poly<T>) -> Poly<T> {
                (&self).$m(&rhs)
            }
        }
    )*};
}

forward_by_value!(Add add, Sub sub, Mul mul);

impl<T: Ring> Neg for Poly<T> {
    type Output = Poly<T>;
    fn neg(self) -> Poly<T> {
        -&self
    }
}

impl<S: Scalar> Poly<S> {
    /// Long division: `self = q·divisor + r` with `deg r < deg divisor`.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self), PolyError> {
        let lead = divisor.leading().ok_or(PolyError::DivisionByZero)?;
        let lead_inv = S::one() / lead.clone();
        let dd = divisor.len() - 1;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Poly::zero(), self.clone()));
        }
        let mut quot = vec![S::zero(); rem.len() - dd];
        for shift in (0..quot.len()).rev() {
            let c = rem[shift + dd].clone() * lead_inv.clone();
            if c.is_zero() {
                continue;
            }
            for (n, d) in divisor.coeffs.iter().enumerate() {
                rem[shift + n] = rem[shift + n].clone() - c.clone() * d.clone();
            }
            quot[shift] = c;
        }
        rem.truncate(dd);
        Ok((Poly::new(quot), Poly::new(rem)))
    }

    /// Scales to leading coefficient one; the zero polynomial stays zero.
    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Poly::zero(),
            Some(l) => {
                let inv = S::one() / l.clone();
                self.scale_right(&inv)
            }
        }
    }

    /// Monic greatest common divisor, `gcd(a, 0) = monic(a)`.
    ///
    /// Euclid with a monic remainder at every step, which keeps rational
    /// coefficient growth in check at the sizes used here.
    pub fn gcd(&self, other: &Self) -> Result<Self, PolyError> {
        if self.is_zero() && other.is_zero() {
            return Err(PolyError::BothZero);
        }
        let (mut a, mut b) = (self.monic(), other.monic());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b)?;
            a = b;
            b = r.monic();
        }
        Ok(a)
    }

    /// Formal derivative.
    pub fn derivative(&self) -> Self {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, a)| a.clone() * S::from_rat(Rat::from_integer(k.into())))
                .collect(),
        )
    }

    pub fn to_grat(&self) -> Poly<GRat> {
        self.map(Scalar::to_grat)
    }

    /// Evaluation at a Gaussian-rational point.
    pub fn eval_at(&self, z0: &GRat) -> GRat {
        self.to_grat().eval(z0)
    }

    /// Largest `m` such that `(z − z0)^m` divides the polynomial.
    pub fn vanishing_order(&self, z0: &GRat) -> Result<usize, PolyError> {
        if self.is_zero() {
            return Err(PolyError::ZeroPolynomial);
        }
        let mut p = self.to_grat();
        let mut order = 0;
        loop {
            let (q, r) = synthetic_division(&p, z0);
            if !r.is_zero() {
                return Ok(order);
            }
            order += 1;
            p = q;
        }
    }

    /// Yun's square-free decomposition of a nonzero polynomial: monic
    /// factors `f_m`, pairwise coprime and square-free, with
    /// `monic(self) = Π f_m^m`. Trivial factors are omitted.
    pub fn squarefree_decomposition(&self) -> Result<Vec<(Self, usize)>, PolyError> {
        if self.is_zero() {
            return Err(PolyError::ZeroPolynomial);
        }
        let f = self.monic();
        let mut out = Vec::new();
        if f.degree() == Some(0) {
            return Ok(out);
        }
        let df = f.derivative();
        let a0 = f.gcd(&df)?;
        let mut b = f.div_rem(&a0)?.0;
        let mut c = df.div_rem(&a0)?.0;
        let mut d = &c - &b.derivative();
        let mut m = 1;
        while b.degree().is_some_and(|deg| deg > 0) {
            let a = b.gcd(&d)?;
            if a.degree().is_some_and(|deg| deg > 0) {
                out.push((a.clone(), m));
            }
            b = b.div_rem(&a)?.0;
            c = d.div_rem(&a)?.0;
            d = &c - &b.derivative();
            m += 1;
        }
        Ok(out)
    }
}

/// Division by `z − z0`, returning quotient and the (constant) remainder.
fn synthetic_division(p: &Poly<GRat>, z0: &GRat) -> (Poly<GRat>, GRat) {
    let mut acc = GRat::zero();
    let mut quot = Vec::with_capacity(p.len());
    for a in p.coeffs.iter().rev() {
        acc = a.clone() + acc * z0.clone();
        quot.push(acc.clone());
    }
    let rem = quot.pop().unwrap_or_else(GRat::zero);
    quot.reverse();
    (Poly::new(quot), rem)
}

/// Coefficient text used by the polynomial renderer.
pub trait CoeffText {
    /// Text of the coefficient and whether it must be grouped in parentheses
    /// before multiplying by a power of `z`.
    fn coeff_text(&self) -> (String, bool);
    fn coeff_is_negative(&self) -> bool;
    fn coeff_neg_text(&self) -> (String, bool);
    fn coeff_is_one(&self) -> bool;
}

macro_rules! scalar_coeff_text {
    ($($t:ty),*) => {$(
        impl CoeffText for $t {
            fn coeff_text(&self) -> (String, bool) {
                // a parenthesised Gaussian rational is already grouped
                (self.coord_text(), false)
            }
            fn coeff_is_negative(&self) -> bool {
                self.coord_is_negative()
            }
            fn coeff_neg_text(&self) -> (String, bool) {
                (self.coord_abs_text(), false)
            }
            fn coeff_is_one(&self) -> bool {
                self.is_one()
            }
        }
    )*};
}

scalar_coeff_text!(Rat, GRat);

impl<S: Scalar + CoordText> CoeffText for Quat<S> {
    fn coeff_text(&self) -> (String, bool) {
        (self.sum_text(), true)
    }
    fn coeff_is_negative(&self) -> bool {
        false
    }
    fn coeff_neg_text(&self) -> (String, bool) {
        self.coeff_text()
    }
    fn coeff_is_one(&self) -> bool {
        self.is_one()
    }
}

impl<T: Ring + CoeffText> fmt::Display for Poly<T> {
    /// Ascending powers, e.g. `4 + 3*z^2 + 1/2*z^4` or `(i) + (j)*z`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let neg = a.coeff_is_negative();
            let (text, grouped) = if neg { a.coeff_neg_text() } else { a.coeff_text() };
            let body = if grouped { format!("({text})") } else { text };
            let power = match k {
                0 => String::new(),
                1 => "z".to_string(),
                _ => format!("z^{k}"),
            };
            let term = if k == 0 {
                body
            } else if !grouped && (a.coeff_is_one() || (neg && body == "1")) {
                power
            } else {
                format!("{body}*{power}")
            };
            match (first, neg) {
                (true, true) => write!(f, "-{term}")?,
                (true, false) => f.write_str(&term)?,
                (false, true) => write!(f, " - {term}")?,
                (false, false) => write!(f, " + {term}")?,
            }
            first = false;
        }
        Ok(())
    }
}
