use std::fmt;

use num_traits::{One, Zero};

use super::quat::{conj_by_unit, CQuat};
use super::scalar::{fmt_grat, GRat};
use super::AlgebraError;

/// Action of an inner automorphism on W ⊗ C in the basis `(i, j, k)`.
///
/// Only produced by [`aut_to_matrix`]; kept for inspection.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct So3Matrix {
    /// `entries[row][col]`; column `n` is the image of the `n`-th basis vector.
    pub entries: [[GRat; 3]; 3],
}

impl So3Matrix {
    pub fn identity() -> Self {
        So3Matrix {
            entries: std::array::from_fn(|r| {
                std::array::from_fn(|c| if r == c { GRat::one() } else { GRat::zero() })
            }),
        }
    }

    pub fn transpose(&self) -> Self {
        So3Matrix {
            entries: std::array::from_fn(|r| std::array::from_fn(|c| self.entries[c][r].clone())),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        So3Matrix {
            entries: std::array::from_fn(|r| {
                std::array::from_fn(|c| {
                    (0..3).fold(GRat::zero(), |acc, m| {
                        acc + self.entries[r][m].clone() * other.entries[m][c].clone()
                    })
                })
            }),
        }
    }

    pub fn det(&self) -> GRat {
        let e = |r: usize, c: usize| self.entries[r][c].clone();
        e(0, 0) * (e(1, 1) * e(2, 2) - e(1, 2) * e(2, 1))
            - e(0, 1) * (e(1, 0) * e(2, 2) - e(1, 2) * e(2, 0))
            + e(0, 2) * (e(1, 0) * e(2, 1) - e(1, 1) * e(2, 0))
    }

    /// `MᵀM = I` and `det M = 1`, checked exactly.
    pub fn is_special_orthogonal(&self) -> bool {
        self.transpose().mul(self) == Self::identity() && self.det().is_one()
    }
}

impl fmt::Display for So3Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.entries {
            let cells: Vec<String> = row.iter().map(fmt_grat).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

/// Matrix of `x ↦ αxα⁻¹` restricted to W ⊗ C.
pub fn aut_to_matrix(alpha: &CQuat) -> Result<So3Matrix, AlgebraError> {
    let images = [
        conj_by_unit(alpha, &CQuat::unit(1))?,
        conj_by_unit(alpha, &CQuat::unit(2))?,
        conj_by_unit(alpha, &CQuat::unit(3))?,
    ];
    let entries = std::array::from_fn(|row| std::array::from_fn(|col| images[col].c[row + 1].clone()));
    Ok(So3Matrix { entries })
}
