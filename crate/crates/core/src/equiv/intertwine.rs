//! Exact search for intertwiners `α` with `α ★ F = H ★ α`.
//!
//! Where `α(z)` is invertible this reads `F(z) = α(z)⁻¹·H(z)·α(z)`. The
//! equation is linear in the coefficients of `α`, so the solutions of degree
//! at most `dmax` are the kernel of a rational matrix.

use num_traits::{One, Signed, Zero};

use crate::algebra::{Quaternion, Rat};
use crate::poly::{Matrix, Poly};
use crate::stem::StemPoly;

use super::EquivError;

/// Which coefficients `α` may use.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum IntertwinerSpace {
    #[default]
    All,
    /// Only `i, j, k` components, i.e. `Tr(α) = 0`.
    TraceFree,
}

/// Basis of `{α : deg α ≤ dmax, α ★ F = H ★ α}` over Q.
pub fn find_intertwiner(f: &StemPoly, h: &StemPoly, dmax: usize) -> Vec<StemPoly> {
    find_intertwiners(f, h, dmax, IntertwinerSpace::All)
}

/// Like [`find_intertwiner`], restricted to `space`.
///
/// Each basis vector is scaled so that its lowest-degree nonzero coefficient
/// has first nonzero coordinate (in the order `1, i, j, k`) equal to 1.
pub fn find_intertwiners(
    f: &StemPoly,
    h: &StemPoly,
    dmax: usize,
    space: IntertwinerSpace,
) -> Vec<StemPoly> {
    let units: &[usize] = match space {
        IntertwinerSpace::All => &[0, 1, 2, 3],
        IntertwinerSpace::TraceFree => &[1, 2, 3],
    };
    let unknowns: Vec<StemPoly> = (0..=dmax)
        .flat_map(|d| units.iter().map(move |&u| Poly::monomial(Quaternion::unit(u), d)))
        .collect();
    let max_deg = f.degree().unwrap_or(0).max(h.degree().unwrap_or(0));
    let rows = 4 * (dmax + max_deg + 1);
    let mut system = Matrix::<Rat>::zeros(rows, unknowns.len());
    for (col, e) in unknowns.iter().enumerate() {
        let residual = &e.star(f) - &h.star(e);
        for (deg, coeff) in residual.coeffs().iter().enumerate() {
            for (n, x) in coeff.c.iter().enumerate() {
                system.set(4 * deg + n, col, x.clone());
            }
        }
    }
    system
        .nullspace()
        .into_iter()
        .map(|v| {
            let alpha = unknowns
                .iter()
                .zip(&v)
                .filter(|(_, c)| !c.is_zero())
                .fold(StemPoly::zero(), |acc, (e, c)| &acc + &e.scale_right(&Quaternion::scalar(c.clone())));
            let alpha = normalize(&alpha);
            assert_eq!(alpha.star(f), h.star(&alpha), "nullspace vector is not an intertwiner");
            alpha
        })
        .collect()
}

fn normalize(alpha: &StemPoly) -> StemPoly {
    let lead = alpha
        .coeffs()
        .iter()
        .flat_map(|q| q.c.iter())
        .find(|x| !x.is_zero())
        .cloned()
        .expect("nullspace vectors are nonzero");
    let inv = Quaternion::scalar(Rat::one() / lead);
    alpha.scale_right(&inv)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjugatorReport {
    /// `α ★ F = H ★ α` holds exactly.
    pub intertwines: bool,
    pub norm_alpha: Poly<Rat>,
    /// `Nm(α)` is a nonzero constant, so `α` is a unit among stem
    /// polynomials on all of C.
    pub invertible_on_c: bool,
    /// When `α` is invertible: whether `F = α⁻¹ ★ H ★ α` holds exactly.
    pub conjugation_identity: Option<bool>,
}

impl ConjugatorReport {
    pub fn verified(&self) -> bool {
        self.intertwines && self.conjugation_identity != Some(false)
    }
}

pub fn verify_conjugator(
    f: &StemPoly,
    h: &StemPoly,
    alpha: &StemPoly,
) -> Result<ConjugatorReport, EquivError> {
    if alpha.is_zero() {
        return Err(EquivError::ZeroAlpha);
    }
    let intertwines = alpha.star(f) == h.star(alpha);
    let norm_alpha = alpha.norm();
    let invertible_on_c = norm_alpha.degree() == Some(0);
    let conjugation_identity = invertible_on_c.then(|| {
        let n = norm_alpha.coeff(0);
        debug_assert!(n.is_positive());
        // α⁻¹ = α^c / Nm(α)
        let inv = alpha.conj().scale_right(&Quaternion::scalar(Rat::one() / n));
        inv.star(h).star(alpha) == *f
    });
    Ok(ConjugatorReport {
        intertwines,
        norm_alpha,
        invertible_on_c,
        conjugation_identity,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::scalar::{rat, ratio};
    use crate::algebra::Quat;

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

    /// (2 + ½z²)i + zj + ½z²k
    fn worked_alpha() -> StemPoly {
        Poly::new(vec![
            Quaternion::from_ints(0, 2, 0, 0),
            Quaternion::j(),
            Quat::new(rat(0), ratio(1, 2), rat(0), ratio(1, 2)),
        ])
    }

    fn in_span(target: &StemPoly, basis: &[StemPoly], dmax: usize) -> bool {
        // rank test on flattened coordinates
        let flat = |p: &StemPoly| -> Vec<Rat> {
            (0..=dmax).flat_map(|d| p.coeff(d).c.into_iter()).collect()
        };
        let mut rows: Vec<Vec<Rat>> = basis.iter().map(flat).collect();
        let r0 = Matrix::from_rows(rows.clone()).rank();
        rows.push(flat(target));
        Matrix::from_rows(rows).rank() == r0
    }

    #[test]
    fn worked_pair_full_space() {
        let basis = find_intertwiner(&worked_f(), &worked_g(), 2);
        assert_eq!(basis.len(), 4);
        assert!(in_span(&worked_alpha(), &basis, 2));
    }

    #[test]
    fn worked_pair_trace_free_space_is_a_line() {
        let basis = find_intertwiners(&worked_f(), &worked_g(), 2, IntertwinerSpace::TraceFree);
        assert_eq!(basis.len(), 1);
        let half = Quaternion::scalar(ratio(1, 2));
        assert_eq!(basis[0], worked_alpha().scale_right(&half));
    }

    #[test]
    fn identity_is_an_intertwiner_of_equal_stems() {
        let basis = find_intertwiner(&worked_f(), &worked_f(), 0);
        assert!(in_span(&StemPoly::one(), &basis, 0));
    }

    #[test]
    fn constant_units() {
        let i = Poly::constant(Quaternion::i());
        let j = Poly::constant(Quaternion::j());
        let basis = find_intertwiner(&i, &j, 0);
        assert_eq!(basis.len(), 2);
        // α·i = j·α is solved by i + j and 1 + k
        assert!(in_span(&Poly::constant(Quaternion::from_ints(0, 1, 1, 0)), &basis, 0));
        assert!(in_span(&Poly::constant(Quaternion::from_ints(1, 0, 0, 1)), &basis, 0));
        assert!(!in_span(&Poly::constant(Quaternion::from_ints(0, 1, -1, 0)), &basis, 0));
    }

    #[test]
    fn verify_worked_alpha() {
        let r = verify_conjugator(&worked_f(), &worked_g(), &worked_alpha()).unwrap();
        assert!(r.intertwines);
        assert_eq!(r.norm_alpha, Poly::new(vec![rat(4), rat(0), rat(3), rat(0), ratio(1, 2)]));
        assert!(!r.invertible_on_c);
        assert_eq!(r.conjugation_identity, None);
    }

    #[test]
    fn verify_trivial_cases() {
        let i = Poly::constant(Quaternion::i());
        let j = Poly::constant(Quaternion::j());
        let r = verify_conjugator(&i, &i, &StemPoly::one()).unwrap();
        assert!(r.intertwines && r.invertible_on_c);
        assert_eq!(r.conjugation_identity, Some(true));
        assert!(!verify_conjugator(&j, &i, &StemPoly::one()).unwrap().intertwines);
        assert_eq!(verify_conjugator(&i, &i, &StemPoly::zero()), Err(EquivError::ZeroAlpha));
    }

    #[test]
    fn constant_unit_conjugator_verifies() {
        let alpha = Quaternion::from_ints(1, 2, 0, -1);
        let h = worked_f();
        let f = Poly::constant(alpha.inverse().unwrap()).star(&h).star(&Poly::constant(alpha.clone()));
        let r = verify_conjugator(&f, &h, &Poly::constant(alpha)).unwrap();
        assert!(r.intertwines && r.invertible_on_c);
        assert_eq!(r.conjugation_identity, Some(true));
    }
}
