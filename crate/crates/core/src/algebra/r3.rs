//! The Clifford algebra R₃ in direct-sum coordinates H ⊕ H.
//!
//! With `ω± = ½(e₁e₂e₃ ± 1)` one has `R₃ = ω₊H ⊕ ω₋H`; every element is
//! handled through its pair of quaternion components.

use std::ops::{Add, Mul};

use super::quat::Quat;
use super::scalar::{Field, Rat, Ring};
use super::AlgebraError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct R3Elem<S> {
    pub first: Quat<S>,
    pub second: Quat<S>,
}

impl<S: Ring> R3Elem<S> {
    pub fn new(first: Quat<S>, second: Quat<S>) -> Self {
        R3Elem { first, second }
    }

    pub fn conj(&self) -> Self {
        R3Elem::new(self.first.conj(), self.second.conj())
    }

    pub fn trace(&self) -> (S, S) {
        (self.first.trace(), self.second.trace())
    }

    pub fn norm(&self) -> (S, S) {
        (self.first.norm(), self.second.norm())
    }

    /// The outer automorphism `(x₁, x₂) ↦ (x₂, x₁)`.
    pub fn swap(&self) -> Self {
        R3Elem::new(self.second.clone(), self.first.clone())
    }
}

impl<S: Field> R3Elem<S> {
    pub fn inverse(&self) -> Result<Self, AlgebraError> {
        Ok(R3Elem::new(self.first.inverse()?, self.second.inverse()?))
    }
}

impl R3Elem<Rat> {
    /// Membership in the quadratic cone: trace and norm are real in R₃,
    /// i.e. both components share their quaternionic trace and norm.
    pub fn in_quadratic_cone(&self) -> bool {
        self.first.trace() == self.second.trace() && self.first.norm() == self.second.norm()
    }
}

impl<S: Ring> Add for &R3Elem<S> {
    type Output = R3Elem<S>;
    fn add(self, rhs: Self) -> R3Elem<S> {
        R3Elem::new(&self.first + &rhs.first, &self.second + &rhs.second)
    }
}

impl<S: Ring> Mul for &R3Elem<S> {
    type Output = R3Elem<S>;
    fn mul(self, rhs: Self) -> R3Elem<S> {
        R3Elem::new(&self.first * &rhs.first, &self.second * &rhs.second)
    }
}
