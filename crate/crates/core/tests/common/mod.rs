#![allow(dead_code)]

use num_bigint::BigInt;
use proptest::prelude::*;
use slicereg_core::algebra::{CQuat, GRat, Quat, Quaternion, Rat};
use slicereg_core::poly::Poly;
use slicereg_core::StemPoly;

/// Rationals with numerator and denominator bounded by 9.
pub fn small_rat() -> impl Strategy<Value = Rat> {
    (-9i64..=9, 1i64..=9).prop_map(|(n, d)| Rat::new(BigInt::from(n), BigInt::from(d)))
}

pub fn small_grat() -> impl Strategy<Value = GRat> {
    (small_rat(), small_rat()).prop_map(|(a, b)| GRat::new(a, b))
}

pub fn quaternion() -> impl Strategy<Value = Quaternion> {
    [small_rat(), small_rat(), small_rat(), small_rat()].prop_map(|c| Quat { c })
}

pub fn nonzero_quaternion() -> impl Strategy<Value = Quaternion> {
    quaternion().prop_filter("nonzero", |q| q.c.iter().any(|x| *x != Rat::from_integer(0.into())))
}

pub fn cquat() -> impl Strategy<Value = CQuat> {
    [small_grat(), small_grat(), small_grat(), small_grat()].prop_map(|c| Quat { c })
}

pub fn invertible_cquat() -> impl Strategy<Value = CQuat> {
    cquat().prop_filter("invertible", |q| q.inverse().is_ok())
}

pub fn stem(max_deg: usize) -> impl Strategy<Value = StemPoly> {
    prop::collection::vec(quaternion(), 0..=max_deg + 1).prop_map(Poly::new)
}

pub fn rat_poly(max_deg: usize) -> impl Strategy<Value = Poly<Rat>> {
    prop::collection::vec(small_rat(), 0..=max_deg + 1).prop_map(Poly::new)
}
