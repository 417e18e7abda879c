//! The subspace of Cl(r,s) annihilated by every so(r,s) generator, and the
//! equivariant solutions of x^2 = -1 and x^2 = x inside it.
//!
//! A generator L_{jk} kills a blade e_I exactly when I contains both or
//! neither of j, k, and otherwise sends it to a signed blade; distinct
//! blades have distinct images under a fixed L_{jk}.  The joint kernel is
//! therefore spanned by the blades that survive every pair, which for
//! n >= 2 leaves exactly the scalars and the volume element.

use num_traits::{One, Signed, Zero};

use crate::blade::{omega_squared, volume_element, Blade};
use crate::error::{CliffordError, Result};
use crate::lie::generators;
use crate::linalg::nullspace;
use crate::multivector::{Multivector, Rational};
use crate::signature::Signature;

/// Cap for the dense brute-force solver; 2^6 columns per generator matrix.
pub const BRUTE_FORCE_MAX_N: usize = 6;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantBasis {
    vectors: Vec<Multivector>,
}

impl InvariantBasis {
    pub fn dim(&self) -> usize {
        self.vectors.len()
    }

    pub fn vectors(&self) -> &[Multivector] {
        &self.vectors
    }
}

/// Basis of the joint kernel of all so(r,s) generators, computed by the
/// blade-survival rule.  Echelon by construction: one unit blade per basis
/// vector, ascending mask order.
pub fn invariant_subspace(sig: &Signature) -> InvariantBasis {
    let pairs = generators(sig);
    let dim = sig.algebra_dim();
    let mut vectors = Vec::new();
    for mask in 0..dim as u32 {
        let blade = Blade::from_mask_unchecked(mask);
        let survives = pairs.iter().all(|l| {
            let (j, k) = l.indices();
            blade.contains(j) == blade.contains(k)
        });
        if survives {
            vectors.push(Multivector::unit(blade));
        }
    }
    InvariantBasis { vectors }
}

/// Independent check of [`invariant_subspace`]: stacks every generator's
/// 2^n x 2^n action matrix and extracts the nullspace by fraction-free
/// elimination.  Only feasible for n <= [`BRUTE_FORCE_MAX_N`].
pub fn brute_force_invariants(sig: &Signature) -> Result<InvariantBasis> {
    if sig.n() > BRUTE_FORCE_MAX_N {
        return Err(CliffordError::DimensionCapExceeded {
            n: sig.n(),
            max: BRUTE_FORCE_MAX_N,
        });
    }
    let dim = sig.algebra_dim();
    let mut stacked: Vec<Vec<Rational>> = Vec::new();
    for l in generators(sig) {
        let op = l.action_matrix(sig);
        let mut rows = vec![vec![Rational::zero(); dim]; dim];
        for (c, r, v) in op.entries() {
            rows[r][c] = v.clone();
        }
        stacked.extend(rows);
    }
    let vectors = nullspace(&stacked, dim)
        .into_iter()
        .map(|v| Multivector::from_dense(&v))
        .collect();
    Ok(InvariantBasis { vectors })
}

/// True iff every generator annihilates x.
pub fn is_equivariant(sig: &Signature, x: &Multivector) -> bool {
    generators(sig)
        .iter()
        .all(|l| l.act_on_multivector(sig, x).is_zero())
}

/// All invariant solutions of x^2 = -1, sorted by (scalar coefficient,
/// volume coefficient).  Nonempty exactly when omega^2 = -1, in which case
/// the solutions are -omega and +omega.
pub fn find_equivariant_complex_structures(sig: &Signature) -> Result<Vec<Multivector>> {
    solve_invariant_quadratic(sig, &Rational::zero(), &-Rational::one())
}

/// All invariant solutions of x^2 = x, sorted the same way.
pub fn find_equivariant_idempotents(sig: &Signature) -> Result<Vec<Multivector>> {
    solve_invariant_quadratic(sig, &Rational::one(), &Rational::zero())
}

/// Solutions of x^2 = alpha x + beta with x in the invariant subspace.
///
/// For n >= 1 the invariant subspace is spanned by 1 and omega (for n = 1
/// the whole algebra is such a span), so with x = c + d omega and
/// omega^2 = w the system reduces to c^2 + d^2 w = alpha c + beta together
/// with 2 c d = alpha d.
fn solve_invariant_quadratic(
    sig: &Signature,
    alpha: &Rational,
    beta: &Rational,
) -> Result<Vec<Multivector>> {
    let mut pairs: Vec<(Rational, Rational)> = Vec::new();

    // d = 0 branch: c^2 - alpha c - beta = 0.
    for c in quadratic_roots(alpha, beta) {
        pairs.push((c, Rational::zero()));
    }

    if sig.n() >= 1 {
        let w = omega_squared(sig)?;
        // d != 0 branch: c = alpha/2 and d^2 = w (alpha^2/4 + beta).
        let c = alpha / Rational::from_integer(2.into());
        let mut d_squared = &c * &c + beta;
        if w < 0 {
            d_squared = -d_squared;
        }
        if let Some(d) = rational_sqrt(&d_squared) {
            if !d.is_zero() {
                pairs.push((c.clone(), -d.clone()));
                pairs.push((c, d));
            }
        }
    }

    pairs.sort();
    pairs.dedup();
    let omega = volume_element(sig);
    Ok(pairs
        .into_iter()
        .map(|(c, d)| {
            Multivector::scalar(c).add(&Multivector::term(omega, d))
        })
        .collect())
}

/// Rational roots of t^2 - alpha t - beta = 0, ascending.
fn quadratic_roots(alpha: &Rational, beta: &Rational) -> Vec<Rational> {
    let four = Rational::from_integer(4.into());
    let two = Rational::from_integer(2.into());
    let disc = alpha * alpha + four * beta;
    match rational_sqrt(&disc) {
        None => Vec::new(),
        Some(sq) if sq.is_zero() => vec![alpha / &two],
        Some(sq) => vec![(alpha - &sq) / &two, (alpha + &sq) / &two],
    }
}

/// Exact square root of a nonnegative rational, if it is a perfect square.
fn rational_sqrt(value: &Rational) -> Option<Rational> {
    if value.is_negative() {
        return None;
    }
    if value.is_zero() {
        return Some(Rational::zero());
    }
    let numer = num_integer::Roots::sqrt(value.numer());
    let denom = num_integer::Roots::sqrt(value.denom());
    if &(&numer * &numer) == value.numer() && &(&denom * &denom) == value.denom() {
        Some(Rational::new(numer, denom))
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multivector::rat;

    fn sig(r: usize, s: usize) -> Signature {
        Signature::new(r, s).unwrap()
    }

    #[test]
    fn invariants_are_scalars_and_volume() {
        let s = sig(3, 1);
        let basis = invariant_subspace(&s);
        assert_eq!(
            basis.vectors(),
            &[Multivector::one(), Multivector::omega(&s)]
        );

        // Low dimensions: everything is invariant.
        assert_eq!(invariant_subspace(&sig(0, 0)).dim(), 1);
        assert_eq!(invariant_subspace(&sig(1, 0)).dim(), 2);
    }

    #[test]
    fn brute_force_agrees_with_fast_path() {
        for (r, s) in [(0usize, 0usize), (1, 0), (0, 2), (2, 1), (3, 1), (2, 2)] {
            let g = sig(r, s);
            assert_eq!(
                brute_force_invariants(&g).unwrap(),
                invariant_subspace(&g),
                "mismatch for Cl({r},{s})"
            );
        }
    }

    #[test]
    fn brute_force_declines_large_signatures() {
        assert_eq!(
            brute_force_invariants(&sig(7, 0)).unwrap_err(),
            CliffordError::DimensionCapExceeded { n: 7, max: 6 }
        );
    }

    #[test]
    fn complex_structures_exist_iff_volume_squares_negative() {
        let s31 = sig(3, 1);
        let omega = Multivector::omega(&s31);
        assert_eq!(
            find_equivariant_complex_structures(&s31).unwrap(),
            vec![omega.neg(), omega.clone()]
        );
        assert_eq!(find_equivariant_complex_structures(&sig(4, 0)).unwrap(), vec![]);

        // One-generator algebras.
        let s10 = sig(1, 0);
        let e1 = Multivector::omega(&s10);
        assert_eq!(
            find_equivariant_complex_structures(&s10).unwrap(),
            vec![e1.neg(), e1]
        );
        assert_eq!(find_equivariant_complex_structures(&sig(0, 1)).unwrap(), vec![]);
        assert_eq!(find_equivariant_complex_structures(&sig(0, 0)).unwrap(), vec![]);
    }

    #[test]
    fn solutions_square_to_minus_one() {
        for (r, s) in [(3usize, 1usize), (1, 3), (0, 2), (2, 0), (5, 0)] {
            let g = sig(r, s);
            for x in find_equivariant_complex_structures(&g).unwrap() {
                assert_eq!(x.product(&g, &x), Multivector::from_int(-1));
                assert!(is_equivariant(&g, &x));
            }
        }
    }

    #[test]
    fn idempotent_sets_follow_volume_square() {
        // omega^2 = -1: only the trivial idempotents.
        assert_eq!(
            find_equivariant_idempotents(&sig(3, 1)).unwrap(),
            vec![Multivector::zero(), Multivector::one()]
        );

        // omega^2 = +1: two extra halves.
        let s11 = sig(1, 1);
        let omega = Multivector::omega(&s11);
        let half = |sign: i64| {
            Multivector::scalar(rat(1, 2)).add(&omega.scale(&rat(sign, 2)))
        };
        assert_eq!(
            find_equivariant_idempotents(&s11).unwrap(),
            vec![Multivector::zero(), half(-1), half(1), Multivector::one()]
        );

        assert_eq!(
            find_equivariant_idempotents(&sig(0, 0)).unwrap(),
            vec![Multivector::zero(), Multivector::one()]
        );

        // All of them really are idempotent.
        for (r, s) in [(1usize, 1usize), (0, 1), (4, 0), (2, 2)] {
            let g = sig(r, s);
            for p in find_equivariant_idempotents(&g).unwrap() {
                assert_eq!(p.product(&g, &p), p);
                assert!(is_equivariant(&g, &p));
            }
        }
    }

    #[test]
    fn equivariance_detects_non_invariants() {
        let s = sig(2, 0);
        let e1 = Multivector::unit(Blade::from_indices(&[1], &s).unwrap());
        assert!(!is_equivariant(&s, &e1));
        assert!(is_equivariant(&s, &Multivector::omega(&s)));
        assert!(is_equivariant(&s, &Multivector::one()));
    }
}
