//! Multivectors: finite rational combinations of basis blades.

use std::collections::BTreeMap;

use num_traits::{One, Signed, Zero};

use crate::blade::{blade_mul, volume_element, Blade};
use crate::signature::Signature;

/// Exact scalar type used throughout: arbitrary-precision rationals kept in
/// lowest terms with positive denominator.
pub type Rational = num::BigRational;

/// Rational from an integer numerator/denominator pair.
pub fn rat(numer: i64, denom: i64) -> Rational {
    Rational::new(numer.into(), denom.into())
}

/// An element of Cl(r,s).  Terms are keyed by blade mask, so iteration order
/// (and every derived output) is deterministic; zero coefficients are never
/// stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Multivector {
    terms: BTreeMap<Blade, Rational>,
}

impl Multivector {
    pub fn zero() -> Self {
        Multivector::default()
    }

    pub fn scalar(value: Rational) -> Self {
        Multivector::term(Blade::SCALAR, value)
    }

    pub fn from_int(value: i64) -> Self {
        Multivector::scalar(Rational::from_integer(value.into()))
    }

    pub fn one() -> Self {
        Multivector::from_int(1)
    }

    /// The unit blade e_I.
    pub fn unit(blade: Blade) -> Self {
        Multivector::term(blade, Rational::one())
    }

    pub fn term(blade: Blade, coeff: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(blade, coeff);
        }
        Multivector { terms }
    }

    /// The volume element omega = e_1 ... e_n.
    pub fn omega(sig: &Signature) -> Self {
        Multivector::unit(volume_element(sig))
    }

    /// Accumulates terms, summing duplicates and dropping zeros.
    pub fn from_terms<I: IntoIterator<Item = (Blade, Rational)>>(iter: I) -> Self {
        let mut out = Multivector::zero();
        for (blade, coeff) in iter {
            out.add_term(blade, coeff);
        }
        out
    }

    fn add_term(&mut self, blade: Blade, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(blade).or_insert_with(Rational::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&blade);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending blade-mask order.
    pub fn terms(&self) -> impl Iterator<Item = (Blade, &Rational)> {
        self.terms.iter().map(|(b, c)| (*b, c))
    }

    /// Terms ordered by (grade, mask); the order used for display.
    pub fn terms_by_grade(&self) -> Vec<(Blade, &Rational)> {
        let mut out: Vec<_> = self.terms().collect();
        out.sort_by_key(|(b, _)| (b.grade(), b.mask()));
        out
    }

    pub fn coeff(&self, blade: Blade) -> Rational {
        self.terms.get(&blade).cloned().unwrap_or_else(Rational::zero)
    }

    /// True when every blade fits inside the given signature.
    pub fn valid_for(&self, sig: &Signature) -> bool {
        let dim = 1u64 << sig.n();
        self.terms.keys().all(|b| (b.mask() as u64) < dim)
    }

    pub fn add(&self, other: &Multivector) -> Multivector {
        let mut out = self.clone();
        for (blade, coeff) in other.terms() {
            out.add_term(blade, coeff.clone());
        }
        out
    }

    pub fn sub(&self, other: &Multivector) -> Multivector {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Multivector {
        Multivector {
            terms: self
                .terms
                .iter()
                .map(|(b, c)| (*b, -c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, factor: &Rational) -> Multivector {
        if factor.is_zero() {
            return Multivector::zero();
        }
        Multivector {
            terms: self
                .terms
                .iter()
                .map(|(b, c)| (*b, c * factor))
                .collect(),
        }
    }

    /// Geometric product in Cl(r,s).
    pub fn product(&self, sig: &Signature, other: &Multivector) -> Multivector {
        debug_assert!(self.valid_for(sig) && other.valid_for(sig));
        let mut out = Multivector::zero();
        for (a, ca) in self.terms() {
            for (b, cb) in other.terms() {
                let (sign, blade) = blade_mul(sig, a, b);
                let mut coeff = ca * cb;
                if sign < 0 {
                    coeff = -coeff;
                }
                out.add_term(blade, coeff);
            }
        }
        out
    }

    /// Dense coefficient vector of length 2^n, indexed by blade mask.
    pub fn to_dense(&self, sig: &Signature) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); sig.algebra_dim()];
        for (blade, coeff) in self.terms() {
            out[blade.mask() as usize] = coeff.clone();
        }
        out
    }

    pub fn from_dense(coeffs: &[Rational]) -> Multivector {
        Multivector::from_terms(
            coeffs
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (Blade::from_mask_unchecked(i as u32), c.clone())),
        )
    }

    /// Largest absolute numerator/denominator, used to keep randomly
    /// generated test data small.
    pub fn coeff_magnitude(&self) -> Rational {
        self.terms
            .values()
            .map(|c| c.abs())
            .max()
            .unwrap_or_else(Rational::zero)
    }
}
