//! Dense exact linear algebra over rationals and other exact fields.
//!
//! Pivoting is always "first nonzero in column order", so results are
//! deterministic.  The nullspace routine clears denominators and runs
//! one-step fraction-free (Bareiss) elimination over integers; every
//! intermediate entry is a minor of the scaled input, so divisions are
//! exact.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::multivector::Rational;

pub trait FieldScalar:
    Clone
    + PartialEq
    + Zero
    + One
    + std::ops::Neg<Output = Self>
    + std::ops::Sub<Output = Self>
    + std::ops::Div<Output = Self>
{
}

impl<T> FieldScalar for T where
    T: Clone
        + PartialEq
        + Zero
        + One
        + std::ops::Neg<Output = Self>
        + std::ops::Sub<Output = Self>
        + std::ops::Div<Output = Self>
{
}

/// Reduced row echelon form in place; returns the pivot columns.
pub fn rref<T: FieldScalar>(m: &mut [Vec<T>]) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..cols {
        if row == rows {
            break;
        }
        let Some(pivot_row) = (row..rows).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(row, pivot_row);
        let lead = m[row][col].clone();
        for j in col..cols {
            m[row][j] = m[row][j].clone() / lead.clone();
        }
        for i in 0..rows {
            if i != row && !m[i][col].is_zero() {
                let factor = m[i][col].clone();
                for j in col..cols {
                    let delta = factor.clone() * m[row][j].clone();
                    m[i][j] = m[i][j].clone() - delta;
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    pivots
}

pub fn rank<T: FieldScalar>(m: &[Vec<T>]) -> usize {
    let mut work: Vec<Vec<T>> = m.to_vec();
    rref(&mut work).len()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SolveError {
    Inconsistent,
    Underdetermined,
}

/// Unique solution of `a x = rhs` (rows x cols, rows >= cols allowed).
pub fn solve_unique<T: FieldScalar>(
    a: &[Vec<T>],
    rhs: &[T],
) -> std::result::Result<Vec<T>, SolveError> {
    assert_eq!(a.len(), rhs.len(), "rhs length must match row count");
    let cols = a.first().map_or(0, Vec::len);
    let mut work: Vec<Vec<T>> = a
        .iter()
        .zip(rhs)
        .map(|(row, b)| {
            let mut v = row.clone();
            v.push(b.clone());
            v
        })
        .collect();
    let pivots = rref(&mut work);
    if pivots.last() == Some(&cols) {
        return Err(SolveError::Inconsistent);
    }
    if pivots.len() < cols {
        return Err(SolveError::Underdetermined);
    }
    let mut solution = vec![T::zero(); cols];
    for (row, &col) in pivots.iter().enumerate() {
        solution[col] = work[row][cols].clone();
    }
    Ok(solution)
}

/// Fraction-free row echelon form of an integer matrix; returns pivot
/// columns.  Entries of the result are minors of the input.
pub fn bareiss_echelon(m: &mut [Vec<BigInt>]) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut prev = BigInt::one();
    let mut row = 0;
    for col in 0..cols {
        if row == rows {
            break;
        }
        let Some(pivot_row) = (row..rows).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(row, pivot_row);
        for i in row + 1..rows {
            for j in col + 1..cols {
                let num = &m[row][col] * &m[i][j] - &m[i][col] * &m[row][j];
                let (q, r) = num.div_rem(&prev);
                debug_assert!(r.is_zero(), "fraction-free step must divide exactly");
                m[i][j] = q;
            }
            m[i][col] = BigInt::zero();
        }
        prev = m[row][col].clone();
        pivots.push(col);
        row += 1;
    }
    pivots
}

/// Canonical nullspace basis of a rational matrix with `cols` columns.
/// One basis vector per free column, in ascending free-column order, with a
/// unit entry at that column; this matches the basis read off a reduced row
/// echelon form.
pub fn nullspace(rows: &[Vec<Rational>], cols: usize) -> Vec<Vec<Rational>> {
    let mut scaled: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|row| {
            assert_eq!(row.len(), cols, "ragged matrix");
            let lcm = row
                .iter()
                .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
            row.iter()
                .map(|v| v.numer() * (&lcm / v.denom()))
                .collect()
        })
        .collect();
    let pivots = bareiss_echelon(&mut scaled);

    let is_pivot = {
        let mut flags = vec![false; cols];
        for &c in &pivots {
            flags[c] = true;
        }
        flags
    };
    let mut basis = Vec::new();
    for free in (0..cols).filter(|&c| !is_pivot[c]) {
        let mut v = vec![Rational::zero(); cols];
        v[free] = Rational::one();
        for (row, &pc) in pivots.iter().enumerate().rev() {
            let mut acc = Rational::zero();
            for j in pc + 1..cols {
                if !v[j].is_zero() && !scaled[row][j].is_zero() {
                    acc += Rational::from_integer(scaled[row][j].clone()) * &v[j];
                }
            }
            if !acc.is_zero() {
                v[pc] = -acc / Rational::from_integer(scaled[row][pc].clone());
            }
        }
        basis.push(v);
    }
    basis
}

/// Determinant of a square rational matrix.
pub fn determinant(m: &[Vec<Rational>]) -> Rational {
    let n = m.len();
    let mut work: Vec<Vec<Rational>> = m.to_vec();
    let mut det = Rational::one();
    for col in 0..n {
        let Some(pivot_row) = (col..n).find(|&i| !work[i][col].is_zero()) else {
            return Rational::zero();
        };
        if pivot_row != col {
            work.swap(col, pivot_row);
            det = -det;
        }
        let lead = work[col][col].clone();
        det *= &lead;
        for i in col + 1..n {
            if work[i][col].is_zero() {
                continue;
            }
            let factor = work[i][col].clone() / lead.clone();
            for j in col..n {
                let delta = &factor * &work[col][j].clone();
                work[i][j] -= delta;
            }
        }
    }
    det
}
