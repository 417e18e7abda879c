//! Basis blades encoded as bitmasks.
//!
//! Bit j-1 of the mask is set iff the generator e_j occurs in the blade, so
//! masks run over 0..2^n and the scalar blade is the empty mask.  Products
//! reorder the concatenated index lists by counting inversions and contract
//! repeated generators through e_j^2 = -eps_j.

use crate::error::{CliffordError, Result};
use crate::signature::Signature;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Blade(u32);

impl Blade {
    pub const SCALAR: Blade = Blade(0);

    /// Blade from a raw mask, validated against the signature.
    pub fn from_mask(mask: u32, sig: &Signature) -> Result<Blade> {
        if (mask as u64) >= (1u64 << sig.n()) {
            let bad = 32 - mask.leading_zeros() as usize;
            return Err(CliffordError::IndexOutOfRange {
                index: bad,
                n: sig.n(),
            });
        }
        Ok(Blade(mask))
    }

    /// Blade from a strictly increasing list of 1-based indices.
    pub fn from_indices(indices: &[usize], sig: &Signature) -> Result<Blade> {
        let mut mask = 0u32;
        let mut prev = 0usize;
        for &j in indices {
            sig.check_index(j)?;
            if j <= prev {
                return Err(CliffordError::IndicesNotIncreasing { prev, next: j });
            }
            prev = j;
            mask |= 1 << (j - 1);
        }
        Ok(Blade(mask))
    }

    /// Unchecked constructor for masks produced internally.
    pub(crate) fn from_mask_unchecked(mask: u32) -> Blade {
        Blade(mask)
    }

    pub fn mask(self) -> u32 {
        self.0
    }

    pub fn grade(self) -> u32 {
        self.0.count_ones()
    }

    pub fn contains(self, j: usize) -> bool {
        j >= 1 && j <= 32 && self.0 & (1 << (j - 1)) != 0
    }

    /// Ascending 1-based indices of the generators in this blade.
    pub fn indices(self) -> impl Iterator<Item = usize> {
        let mask = self.0;
        (1..=32usize).filter(move |j| mask & (1 << (j - 1)) != 0)
    }

    /// Complementary blade within Cl(r,s).
    pub fn complement(self, sig: &Signature) -> Blade {
        let full = (1u32 << sig.n()) - 1;
        Blade(self.0 ^ full)
    }
}

/// Product of two basis blades: returns the sign (always +1 or -1) and the
/// resulting blade, whose mask is the symmetric difference of the inputs.
pub fn blade_mul(sig: &Signature, a: Blade, b: Blade) -> (i8, Blade) {
    debug_assert!((a.0 as u64) < (1u64 << sig.n()));
    debug_assert!((b.0 as u64) < (1u64 << sig.n()));

    // Inversions between the two sorted index lists: for each j in b, count
    // the indices of a strictly above j.
    let mut swaps = 0u32;
    let mut shifted = a.0 >> 1;
    while shifted != 0 {
        swaps += (shifted & b.0).count_ones();
        shifted >>= 1;
    }

    // Repeated generators contract via e_j^2 = -eps_j, so each common index
    // with eps_j = +1 flips the sign.
    let common_positive = (a.0 & b.0) & low_mask(sig.r());
    let total = swaps + common_positive.count_ones();

    let sign = if total % 2 == 0 { 1 } else { -1 };
    (sign, Blade(a.0 ^ b.0))
}

fn low_mask(k: usize) -> u32 {
    if k >= 32 {
        u32::MAX
    } else {
        (1u32 << k) - 1
    }
}

/// The volume element omega = e_1 e_2 ... e_n as a blade.
pub fn volume_element(sig: &Signature) -> Blade {
    Blade(low_mask(sig.n()))
}

/// Sign of omega^2, computed two independent ways: directly via [`blade_mul`]
/// and by the parity rule in r, s.  A disagreement is an internal fault.
pub fn omega_squared(sig: &Signature) -> Result<i8> {
    let direct = omega_squared_direct(sig);
    let rule = omega_squared_rule(sig);
    if direct != rule {
        return Err(CliffordError::Internal(format!(
            "omega^2 mismatch for {sig}: product gives {direct}, parity rule gives {rule}"
        )));
    }
    Ok(direct)
}

fn omega_squared_direct(sig: &Signature) -> i8 {
    let omega = volume_element(sig);
    let (sign, rest) = blade_mul(sig, omega, omega);
    debug_assert_eq!(rest, Blade::SCALAR);
    sign
}

fn omega_squared_rule(sig: &Signature) -> i8 {
    let n = sig.n() % 4;
    let negative = if sig.s() % 2 == 1 {
        n == 0 || n == 3
    } else {
        n == 1 || n == 2
    };
    if negative {
        -1
    } else {
        1
    }
}
