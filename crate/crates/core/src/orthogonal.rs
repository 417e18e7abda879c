//! Exact orthogonal maps of the generating space and their extension to the
//! whole algebra.

use num_traits::{One, Zero};

use crate::blade::Blade;
use crate::error::{CliffordError, Result};
use crate::linalg::determinant;
use crate::multivector::{Multivector, Rational};
use crate::signature::Signature;

/// A rational n x n matrix M with M^T q M = q, acting on generators by
/// e_j -> sum_k M[k][j] e_k.  The determinant of such a map is +1 or -1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrthogonalMap {
    n: usize,
    rows: Vec<Vec<Rational>>,
}

impl OrthogonalMap {
    /// Validates M^T q M = q exactly.
    pub fn new(sig: &Signature, rows: Vec<Vec<Rational>>) -> Result<Self> {
        let n = sig.n();
        if rows.len() != n || rows.iter().any(|r| r.len() != n) {
            return Err(CliffordError::BadMatrixShape {
                rows: rows.len(),
                cols: rows.first().map_or(0, Vec::len),
                expected: n,
            });
        }
        for i in 0..n {
            for j in 0..n {
                // (M^T q M)[i][j] = sum_k eps_k M[k][i] M[k][j]
                let mut acc = Rational::zero();
                for k in 0..n {
                    let term = &rows[k][i] * &rows[k][j];
                    if sig.eps(k + 1) > 0 {
                        acc += term;
                    } else {
                        acc -= term;
                    }
                }
                let expected = if i == j {
                    Rational::from_integer(sig.eps(i + 1).into())
                } else {
                    Rational::zero()
                };
                if acc != expected {
                    return Err(CliffordError::NotOrthogonal {
                        row: i,
                        col: j,
                        value: acc.to_string(),
                        expected: expected.to_string(),
                    });
                }
            }
        }
        Ok(OrthogonalMap { n, rows })
    }

    pub fn identity(sig: &Signature) -> Self {
        let n = sig.n();
        let rows = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        if i == j {
                            Rational::one()
                        } else {
                            Rational::zero()
                        }
                    })
                    .collect()
            })
            .collect();
        OrthogonalMap { n, rows }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn entry(&self, i: usize, j: usize) -> &Rational {
        &self.rows[i][j]
    }

    pub fn rows(&self) -> &[Vec<Rational>] {
        &self.rows
    }

    pub fn det(&self) -> Rational {
        determinant(&self.rows)
    }

    /// Image of the generator e_j (1-based) as a multivector.
    pub fn generator_image(&self, j: usize) -> Multivector {
        Multivector::from_terms((0..self.n).map(|k| {
            (
                Blade::from_mask_unchecked(1 << k),
                self.rows[k][j - 1].clone(),
            )
        }))
    }

    /// Algebra automorphism induced by the map: blades go to products of the
    /// generator images, extended linearly.
    pub fn apply(&self, sig: &Signature, x: &Multivector) -> Multivector {
        debug_assert_eq!(self.n, sig.n());
        let mut out = Multivector::zero();
        for (blade, coeff) in x.terms() {
            let mut image = Multivector::scalar(coeff.clone());
            for j in blade.indices() {
                image = image.product(sig, &self.generator_image(j));
            }
            out = out.add(&image);
        }
        out
    }
}
