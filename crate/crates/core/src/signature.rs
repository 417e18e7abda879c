//! Metric signatures (r, s).
//!
//! The algebra Cl(r,s) is generated by e_1, ..., e_{r+s} subject to
//! u^2 = -u^T q u with q = I_r (+) (-I_s).  Writing eps_j for the diagonal
//! of q, the generators satisfy e_j^2 = -eps_j: the first r generators
//! square to -1, the remaining s to +1.

use crate::error::{CliffordError, Result};

/// Default cap on r+s.  Elements carry 2^(r+s) coefficients, so this bounds
/// memory and runtime for the dense solvers.
pub const DEFAULT_MAX_N: usize = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Signature {
    r: usize,
    s: usize,
}

impl Signature {
    pub fn new(r: usize, s: usize) -> Result<Self> {
        Self::with_max(r, s, DEFAULT_MAX_N)
    }

    /// Like [`Signature::new`] with an explicit cap on r+s.
    pub fn with_max(r: usize, s: usize, max_n: usize) -> Result<Self> {
        let n = r + s;
        if n > max_n {
            return Err(CliffordError::DimensionCapExceeded { n, max: max_n });
        }
        Ok(Signature { r, s })
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn s(&self) -> usize {
        self.s
    }

    /// Number of generators, r + s.
    pub fn n(&self) -> usize {
        self.r + self.s
    }

    /// Dimension of the full algebra, 2^(r+s).
    pub fn algebra_dim(&self) -> usize {
        1usize << self.n()
    }

    /// Diagonal entry of q for the 1-based generator index j.
    ///
    /// Panics if j is out of range; use [`Signature::check_index`] first for
    /// untrusted input.
    pub fn eps(&self, j: usize) -> i8 {
        assert!(j >= 1 && j <= self.n(), "generator index {j} out of range");
        if j <= self.r {
            1
        } else {
            -1
        }
    }

    /// Square of the generator e_j, which is -eps_j.
    pub fn generator_square(&self, j: usize) -> i8 {
        -self.eps(j)
    }

    pub fn check_index(&self, j: usize) -> Result<()> {
        if j >= 1 && j <= self.n() {
            Ok(())
        } else {
            Err(CliffordError::IndexOutOfRange {
                index: j,
                n: self.n(),
            })
        }
    }
}

impl std::fmt::Display for Signature {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Cl({},{})", self.r, self.s)
    }
}
