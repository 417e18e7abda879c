//! The so(r,s) action on Cl(r,s).
//!
//! The standard generators L_{jk} = (E_{jk} - E_{kj}) q act on generators by
//!
//! ```text
//! L_{jk} e_j = -eps_j e_k,   L_{jk} e_k = eps_k e_j,   L_{jk} e_i = 0 otherwise
//! ```
//!
//! and extend to blades as derivations (Leibniz rule over the factors).

use num_traits::{One, Zero};

use crate::blade::Blade;
use crate::error::Result;
use crate::multivector::{rat, Multivector, Rational};
use crate::operator::LinearOperator;
use crate::orthogonal::OrthogonalMap;
use crate::signature::Signature;

/// The generator L_{jk} with 1 <= j < k <= n.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LieGenerator {
    j: usize,
    k: usize,
}

impl LieGenerator {
    pub fn new(sig: &Signature, j: usize, k: usize) -> Result<Self> {
        sig.check_index(j)?;
        sig.check_index(k)?;
        if j >= k {
            return Err(crate::error::CliffordError::IndicesNotIncreasing { prev: j, next: k });
        }
        Ok(LieGenerator { j, k })
    }

    pub fn indices(&self) -> (usize, usize) {
        (self.j, self.k)
    }

    /// Action on a single generator e_i.
    pub fn act_on_vector(&self, sig: &Signature, i: usize) -> Result<Multivector> {
        sig.check_index(i)?;
        let image = if i == self.j {
            signed_unit(self.k, -sig.eps(self.j))
        } else if i == self.k {
            signed_unit(self.j, sig.eps(self.k))
        } else {
            Multivector::zero()
        };
        Ok(image)
    }

    /// Derivation action on a blade: replace each factor by its image in
    /// turn and multiply back together.  The result is zero or a single
    /// signed blade.
    pub fn act_on_blade(&self, sig: &Signature, blade: Blade) -> Multivector {
        let indices: Vec<usize> = blade.indices().collect();
        let mut out = Multivector::zero();
        for (pos, &i) in indices.iter().enumerate() {
            if i != self.j && i != self.k {
                continue;
            }
            let mut term = Multivector::one();
            for (q, &other) in indices.iter().enumerate() {
                let factor = if q == pos {
                    self.act_on_vector(sig, other).expect("index validated")
                } else {
                    Multivector::unit(Blade::from_mask_unchecked(1 << (other - 1)))
                };
                term = term.product(sig, &factor);
            }
            out = out.add(&term);
        }
        out
    }

    pub fn act_on_multivector(&self, sig: &Signature, x: &Multivector) -> Multivector {
        let mut out = Multivector::zero();
        for (blade, coeff) in x.terms() {
            out = out.add(&self.act_on_blade(sig, blade).scale(coeff));
        }
        out
    }

    /// Matrix of the action on the full 2^n-dimensional algebra.
    pub fn action_matrix(&self, sig: &Signature) -> LinearOperator {
        LinearOperator::from_blade_images(sig, |b| self.act_on_blade(sig, b))
    }

    /// The generator as an n x n matrix acting on the generating space.
    pub fn vector_matrix(&self, sig: &Signature) -> Vec<Vec<Rational>> {
        let n = sig.n();
        let mut rows = vec![vec![Rational::zero(); n]; n];
        for col in 1..=n {
            let image = self.act_on_vector(sig, col).expect("index in range");
            for (blade, coeff) in image.terms() {
                let row = blade.indices().next().expect("vector blade") - 1;
                rows[row][col - 1] = coeff.clone();
            }
        }
        rows
    }
}

fn signed_unit(index: usize, sign: i8) -> Multivector {
    let blade = Blade::from_mask_unchecked(1 << (index - 1));
    Multivector::term(blade, Rational::from_integer(sign.into()))
}

/// All generators L_{jk}, j < k, in lexicographic order.
pub fn generators(sig: &Signature) -> Vec<LieGenerator> {
    let n = sig.n();
    let mut out = Vec::new();
    for j in 1..=n {
        for k in j + 1..=n {
            out.push(LieGenerator { j, k });
        }
    }
    out
}

/// Left multiplication x * (.) as an operator on the algebra.
pub fn left_mul_operator(sig: &Signature, x: &Multivector) -> LinearOperator {
    LinearOperator::from_blade_images(sig, |b| x.product(sig, &Multivector::unit(b)))
}

/// Right multiplication (.) * x as an operator on the algebra.
pub fn right_mul_operator(sig: &Signature, x: &Multivector) -> LinearOperator {
    LinearOperator::from_blade_images(sig, |b| Multivector::unit(b).product(sig, x))
}

/// Whether an n x n rational matrix M lies in so(r,s), i.e. (qM)^T = -qM.
pub fn check_so_membership(sig: &Signature, m: &[Vec<Rational>]) -> bool {
    let n = sig.n();
    if m.len() != n || m.iter().any(|row| row.len() != n) {
        return false;
    }
    for i in 0..n {
        for j in 0..n {
            // (qM)[i][j] = eps_i M[i][j]
            let lhs = scaled(&m[i][j], sig.eps(i + 1));
            let rhs = scaled(&m[j][i], -sig.eps(j + 1));
            if lhs != rhs {
                return false;
            }
        }
    }
    true
}

fn scaled(v: &Rational, sign: i8) -> Rational {
    if sign >= 0 {
        v.clone()
    } else {
        -v.clone()
    }
}

/// Exact special orthogonal maps for the signature: plane rotations built
/// from the (3,4,5) triple in like-sign planes, boosts from (3,4,5) in
/// mixed-sign planes, quarter turns, paired sign flips, and 3-cycles inside
/// each definite block.  All have determinant +1; the list is empty for
/// n < 2.
pub fn sample_so_elements(sig: &Signature) -> Vec<OrthogonalMap> {
    let n = sig.n();
    if n < 2 {
        return Vec::new();
    }
    let r = sig.r();
    let mut out = vec![OrthogonalMap::identity(sig)];
    let like_sign = |j: usize, k: usize| (j <= r) == (k <= r);

    for j in 1..=n {
        for k in j + 1..=n {
            if like_sign(j, k) {
                out.push(plane_map(
                    sig,
                    j,
                    k,
                    [rat(3, 5), rat(-4, 5), rat(4, 5), rat(3, 5)],
                ));
                // Quarter turn e_j -> e_k, e_k -> -e_j.
                out.push(plane_map(sig, j, k, [rat(0, 1), rat(-1, 1), rat(1, 1), rat(0, 1)]));
            } else {
                out.push(plane_map(
                    sig,
                    j,
                    k,
                    [rat(5, 3), rat(4, 3), rat(4, 3), rat(5, 3)],
                ));
            }
            // Flipping two axes at once keeps the determinant at +1.
            out.push(plane_map(sig, j, k, [rat(-1, 1), rat(0, 1), rat(0, 1), rat(-1, 1)]));
        }
    }

    for (lo, hi) in [(1, r), (r + 1, n)] {
        if hi + 1 - lo >= 3 {
            let (a, b, c) = (lo, lo + 1, lo + 2);
            out.push(cycle_map(sig, a, b, c));
        }
    }
    out
}

/// Exact orthogonal maps with determinant -1, used as negative tests for
/// orientation behaviour.  Empty for n < 1.
pub fn sample_improper_elements(sig: &Signature) -> Vec<OrthogonalMap> {
    let n = sig.n();
    if n < 1 {
        return Vec::new();
    }
    let r = sig.r();
    let mut out = Vec::new();
    for j in 1..=n {
        // Single axis flip.
        let mut rows = identity_rows(n);
        rows[j - 1][j - 1] = rat(-1, 1);
        out.push(OrthogonalMap::new(sig, rows).expect("axis flip is orthogonal"));
    }
    for j in 1..=n {
        for k in j + 1..=n {
            if (j <= r) == (k <= r) {
                // Transposition of two like-sign axes.
                let mut rows = identity_rows(n);
                rows[j - 1][j - 1] = rat(0, 1);
                rows[k - 1][k - 1] = rat(0, 1);
                rows[j - 1][k - 1] = rat(1, 1);
                rows[k - 1][j - 1] = rat(1, 1);
                out.push(OrthogonalMap::new(sig, rows).expect("swap is orthogonal"));
            }
        }
    }
    out
}

fn identity_rows(n: usize) -> Vec<Vec<Rational>> {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { Rational::one() } else { Rational::zero() })
                .collect()
        })
        .collect()
}

/// Identity outside the (j,k) plane; `block` is row-major [a, b; c, d].
fn plane_map(sig: &Signature, j: usize, k: usize, block: [Rational; 4]) -> OrthogonalMap {
    let mut rows = identity_rows(sig.n());
    let [a, b, c, d] = block;
    rows[j - 1][j - 1] = a;
    rows[j - 1][k - 1] = b;
    rows[k - 1][j - 1] = c;
    rows[k - 1][k - 1] = d;
    OrthogonalMap::new(sig, rows).expect("plane block preserves the form")
}

/// The 3-cycle e_a -> e_b -> e_c -> e_a on like-sign axes.
fn cycle_map(sig: &Signature, a: usize, b: usize, c: usize) -> OrthogonalMap {
    let mut rows = identity_rows(sig.n());
    for idx in [a, b, c] {
        rows[idx - 1][idx - 1] = Rational::zero();
    }
    rows[b - 1][a - 1] = Rational::one();
    rows[c - 1][b - 1] = Rational::one();
    rows[a - 1][c - 1] = Rational::one();
    OrthogonalMap::new(sig, rows).expect("like-sign cycle preserves the form")
}
