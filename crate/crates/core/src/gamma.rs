//! Complex module structure on Cl(r,s) and gamma matrix extraction.
//!
//! A complex structure here is right multiplication by an element j with
//! j^2 = -1; it commutes with every left multiplication, so left
//! multiplication by algebra elements becomes complex-linear.  Idempotents
//! p = p^2 carry the left submodule Cl.p, and when that submodule is closed
//! under the complex structure, left multiplication by the generators
//! restricts to complex matrices on it.

use num_traits::{Signed, Zero};

use crate::blade::{blade_mul, volume_element, Blade};
use crate::complex::{ComplexMatrix, GaussianRational};
use crate::error::{CliffordError, Result};
use crate::expr::{format_multivector, FormatStyle};
use crate::lie::{left_mul_operator, right_mul_operator};
use crate::linalg::{rank, rref, solve_unique, SolveError};
use crate::multivector::{rat, Multivector, Rational};
use crate::operator::LinearOperator;
use crate::signature::Signature;

/// Right multiplication by j = J(1) with j^2 = -1.  J(x) = x j.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComplexStructure {
    sig: Signature,
    j: Multivector,
}

impl ComplexStructure {
    pub fn sig(&self) -> &Signature {
        &self.sig
    }

    /// The defining element J(1).
    pub fn j(&self) -> &Multivector {
        &self.j
    }

    pub fn apply(&self, x: &Multivector) -> Multivector {
        x.product(&self.sig, &self.j)
    }

    pub fn operator(&self) -> LinearOperator {
        right_mul_operator(&self.sig, &self.j)
    }

    /// +1 if j = omega, -1 if j = -omega, None otherwise.
    pub fn volume_sign(&self) -> Option<i8> {
        let omega = Multivector::omega(&self.sig);
        if self.j == omega {
            Some(1)
        } else if self.j == omega.neg() {
            Some(-1)
        } else {
            None
        }
    }
}

/// Validates j^2 = -1 and the operator identities: right multiplication by j
/// squares to minus the identity and commutes with left multiplication by
/// every generator.
pub fn make_complex_structure(sig: &Signature, j: Multivector) -> Result<ComplexStructure> {
    let square = j.product(sig, &j);
    if square != Multivector::from_int(-1) {
        return Err(CliffordError::NotComplexStructure {
            square: format_multivector(sig, &square, FormatStyle::Text),
        });
    }
    let op = right_mul_operator(sig, &j);
    if op.compose(&op) != LinearOperator::identity(sig.algebra_dim()).neg() {
        return Err(CliffordError::Internal(
            "right multiplication square disagrees with element square".into(),
        ));
    }
    for a in 1..=sig.n() {
        let e_a = Multivector::unit(Blade::from_indices(&[a], sig)?);
        let left = left_mul_operator(sig, &e_a);
        if left.compose(&op) != op.compose(&left) {
            return Err(CliffordError::Internal(
                "right multiplication fails to commute with a left multiplication".into(),
            ));
        }
    }
    Ok(ComplexStructure { sig: *sig, j })
}

/// Where a blade's coefficient lands in canonical complex coordinates.
#[derive(Debug, Clone)]
struct Slot {
    index: usize,
    imaginary: bool,
    sign: i8,
}

#[derive(Debug, Clone)]
enum BasisKind {
    /// One blade per complementary pair; coordinates read off term by term.
    Canonical { slots: Vec<Slot> },
    /// Reduced echelon rows over the canonical coordinates of a submodule.
    Echelon {
        slots: Vec<Slot>,
        pivots: Vec<usize>,
        rows: Vec<Vec<GaussianRational>>,
    },
    /// Arbitrary elements; coordinates via a dense real solve.
    General,
}

/// Basis of a subspace over the complex scalars i = right multiplication
/// by j.  The real span of {v, vj} over the elements v has dimension twice
/// the element count.
#[derive(Debug, Clone)]
pub struct ComplexBasis {
    sig: Signature,
    j: Multivector,
    elements: Vec<Multivector>,
    kind: BasisKind,
}

impl ComplexBasis {
    pub fn sig(&self) -> &Signature {
        &self.sig
    }

    pub fn j(&self) -> &Multivector {
        &self.j
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[Multivector] {
        &self.elements
    }

    /// Basis from explicit elements; checks complex-linear independence.
    pub fn from_elements(
        structure: &ComplexStructure,
        elements: Vec<Multivector>,
    ) -> Result<ComplexBasis> {
        let sig = structure.sig;
        let mut rows = Vec::with_capacity(2 * elements.len());
        for v in &elements {
            rows.push(v.to_dense(&sig));
            rows.push(structure.apply(v).to_dense(&sig));
        }
        if rank(&rows) != 2 * elements.len() {
            return Err(CliffordError::DependentBasis);
        }
        Ok(ComplexBasis {
            sig,
            j: structure.j.clone(),
            elements,
            kind: BasisKind::General,
        })
    }
}

fn canonical_representatives(sig: &Signature) -> Vec<Blade> {
    let n = sig.n() as u32;
    let mut reps: Vec<Blade> = (0..sig.algebra_dim() as u32)
        .filter(|mask| {
            let grade = mask.count_ones();
            2 * grade < n || (2 * grade == n && mask & 1 == 1)
        })
        .map(Blade::from_mask_unchecked)
        .collect();
    reps.sort_by_key(|b| (b.grade(), b.mask()));
    reps
}

fn slot_table(sig: &Signature, reps: &[Blade], volume_sign: i8) -> Vec<Slot> {
    let omega = volume_element(sig);
    let mut slots = vec![
        Slot {
            index: 0,
            imaginary: false,
            sign: 0
        };
        sig.algebra_dim()
    ];
    for (t, &rep) in reps.iter().enumerate() {
        let (sign, comp) = blade_mul(sig, rep, omega);
        slots[rep.mask() as usize] = Slot {
            index: t,
            imaginary: false,
            sign: 1,
        };
        slots[comp.mask() as usize] = Slot {
            index: t,
            imaginary: true,
            sign: volume_sign * sign,
        };
    }
    slots
}

fn canonical_coords(slots: &[Slot], m: usize, x: &Multivector) -> Vec<GaussianRational> {
    let mut out = vec![GaussianRational::zero(); m];
    for (blade, coeff) in x.terms() {
        let slot = &slots[blade.mask() as usize];
        let signed = if slot.sign < 0 {
            -coeff.clone()
        } else {
            coeff.clone()
        };
        let z = &mut out[slot.index];
        if slot.imaginary {
            z.im += signed;
        } else {
            z.re += signed;
        }
    }
    out
}

/// Blade basis with one representative per complementary pair {I, Ic}:
/// the one with |I| < n/2, or the one containing index 1 when |I| = n/2.
/// Requires J(1) = +/-omega, which pairs each blade with its complement.
pub fn canonical_complex_basis(structure: &ComplexStructure) -> Result<ComplexBasis> {
    let sign = structure
        .volume_sign()
        .ok_or(CliffordError::NotVolumeStructure)?;
    let sig = structure.sig;
    let reps = canonical_representatives(&sig);
    let slots = slot_table(&sig, &reps, sign);
    Ok(ComplexBasis {
        sig,
        j: structure.j.clone(),
        elements: reps.into_iter().map(Multivector::unit).collect(),
        kind: BasisKind::Canonical { slots },
    })
}

/// Coordinates of x in the basis: x = sum (a_k + i b_k) v_k with
/// i v_k = v_k j.
pub fn complex_coordinates(basis: &ComplexBasis, x: &Multivector) -> Result<Vec<GaussianRational>> {
    debug_assert!(x.valid_for(&basis.sig));
    match &basis.kind {
        BasisKind::Canonical { slots } => Ok(canonical_coords(slots, basis.elements.len(), x)),
        BasisKind::Echelon { slots, pivots, rows } => {
            let half = basis.sig.algebra_dim() / 2;
            let canon = canonical_coords(slots, half, x);
            let coords: Vec<GaussianRational> =
                pivots.iter().map(|&p| canon[p].clone()).collect();
            let mut residual = canon;
            for (c, row) in coords.iter().zip(rows) {
                if c.is_zero() {
                    continue;
                }
                for (entry, slot) in row.iter().zip(residual.iter_mut()) {
                    if !entry.is_zero() {
                        *slot = slot.clone() - c.clone() * entry.clone();
                    }
                }
            }
            if residual.iter().any(|z| !z.is_zero()) {
                return Err(CliffordError::NotInSpan);
            }
            Ok(coords)
        }
        BasisKind::General => general_coords(basis, x),
    }
}

fn general_coords(basis: &ComplexBasis, x: &Multivector) -> Result<Vec<GaussianRational>> {
    let sig = &basis.sig;
    let dim = sig.algebra_dim();
    let m = basis.elements.len();
    let mut cols: Vec<Vec<Rational>> = Vec::with_capacity(2 * m);
    for v in &basis.elements {
        cols.push(v.to_dense(sig));
        cols.push(v.product(sig, &basis.j).to_dense(sig));
    }
    let rows: Vec<Vec<Rational>> = (0..dim)
        .map(|r| cols.iter().map(|c| c[r].clone()).collect())
        .collect();
    let solution = solve_unique(&rows, &x.to_dense(sig)).map_err(|e| match e {
        SolveError::Inconsistent => CliffordError::NotInSpan,
        SolveError::Underdetermined => CliffordError::DependentBasis,
    })?;
    Ok((0..m)
        .map(|t| GaussianRational::new(solution[2 * t].clone(), solution[2 * t + 1].clone()))
        .collect())
}

/// Matrix of left multiplication by x in the given basis: column k holds the
/// coordinates of x v_k.
pub fn complex_rep_matrix(basis: &ComplexBasis, x: &Multivector) -> Result<ComplexMatrix> {
    let m = basis.elements.len();
    let mut out = ComplexMatrix::zeros(m);
    for (k, v) in basis.elements.iter().enumerate() {
        let coords = complex_coordinates(basis, &x.product(&basis.sig, v))?;
        for (i, z) in coords.into_iter().enumerate() {
            *out.at_mut(i, k) = z;
        }
    }
    Ok(out)
}

/// Idempotent element p = p^2; right multiplication by p projects onto the
/// left submodule Cl.p.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Projection {
    p: Multivector,
}

impl Projection {
    pub fn multivector(&self) -> &Multivector {
        &self.p
    }

    /// 1 - p, the projection onto the complementary summand.
    pub fn complement(&self) -> Projection {
        Projection {
            p: Multivector::one().sub(&self.p),
        }
    }
}

pub fn make_idempotent(sig: &Signature, p: Multivector) -> Result<Projection> {
    let defect = p.product(sig, &p).sub(&p);
    if !defect.is_zero() {
        return Err(CliffordError::NotIdempotent {
            defect: format_multivector(sig, &defect, FormatStyle::Text),
        });
    }
    Ok(Projection { p })
}

/// Cl.p is closed under right multiplication by j exactly when (pj)p = pj.
fn check_j_closure(structure: &ComplexStructure, projection: &Projection) -> Result<()> {
    let sig = &structure.sig;
    let pj = projection.p.product(sig, &structure.j);
    if pj.product(sig, &projection.p) != pj {
        return Err(CliffordError::NotJClosed);
    }
    Ok(())
}

/// Complex dimension of Cl.p: the real rank of right multiplication by p is
/// its trace, 2^n times the scalar coefficient of p.
fn module_dimension(sig: &Signature, projection: &Projection) -> Result<usize> {
    let trace = projection.p.coeff(Blade::SCALAR)
        * Rational::from_integer(sig.algebra_dim().into());
    let half = trace / rat(2, 1);
    if !half.is_integer() || half.is_negative() {
        return Err(CliffordError::Internal(
            "idempotent trace is not an even nonnegative integer".into(),
        ));
    }
    Ok(half.to_integer().try_into().map_err(|_| {
        CliffordError::Internal("module dimension exceeds addressable size".into())
    })?)
}

/// Deterministic complex basis of Cl.p: reduced echelon form, in canonical
/// coordinates, of the blade images under right multiplication by p.
pub fn image_basis(structure: &ComplexStructure, projection: &Projection) -> Result<ComplexBasis> {
    check_j_closure(structure, projection)?;
    if projection.p == Multivector::one() {
        return canonical_complex_basis(structure);
    }
    let sign = structure
        .volume_sign()
        .ok_or(CliffordError::NotVolumeStructure)?;
    let sig = structure.sig;
    let reps = canonical_representatives(&sig);
    let slots = slot_table(&sig, &reps, sign);
    let half = reps.len();
    let mut rows: Vec<Vec<GaussianRational>> = Vec::new();
    for mask in 0..sig.algebra_dim() as u32 {
        let image = Multivector::unit(Blade::from_mask_unchecked(mask)).product(&sig, &projection.p);
        if !image.is_zero() {
            rows.push(canonical_coords(&slots, half, &image));
        }
    }
    let pivots = rref(&mut rows);
    rows.truncate(pivots.len());
    if rows.len() != module_dimension(&sig, projection)? {
        return Err(CliffordError::Internal(
            "echelon rank disagrees with idempotent trace".into(),
        ));
    }
    let elements = rows
        .iter()
        .map(|row| {
            let mut element = Multivector::zero();
            for (z, &rep) in row.iter().zip(&reps) {
                if z.re != Rational::zero() {
                    element = element.add(&Multivector::term(rep, z.re.clone()));
                }
                if z.im != Rational::zero() {
                    let rep_j = Multivector::unit(rep).product(&sig, &structure.j);
                    element = element.add(&rep_j.scale(&z.im));
                }
            }
            element
        })
        .collect();
    Ok(ComplexBasis {
        sig,
        j: structure.j.clone(),
        elements,
        kind: BasisKind::Echelon { slots, pivots, rows },
    })
}

fn validate_module_basis(
    structure: &ComplexStructure,
    projection: &Projection,
    basis: &ComplexBasis,
) -> Result<()> {
    if basis.j != structure.j {
        return Err(CliffordError::Internal(
            "basis was built for a different complex structure".into(),
        ));
    }
    let sig = &structure.sig;
    let expected = module_dimension(sig, projection)?;
    if basis.len() != expected {
        return Err(CliffordError::BadBasisSize {
            got: basis.len(),
            expected,
        });
    }
    for v in basis.elements() {
        if v.product(sig, &projection.p) != *v {
            return Err(CliffordError::NotInSpan);
        }
    }
    let mut rows = Vec::with_capacity(2 * basis.len());
    for v in basis.elements() {
        rows.push(v.to_dense(sig));
        rows.push(structure.apply(v).to_dense(sig));
    }
    if rank(&rows) != 2 * basis.len() {
        return Err(CliffordError::DependentBasis);
    }
    Ok(())
}

/// Matrices of left multiplication by e_1, ..., e_n on Cl.p.  With the
/// default (echelon) basis the output is deterministic; an explicit basis
/// must span Cl.p over the complex scalars.
pub fn gamma_matrices(
    structure: &ComplexStructure,
    projection: &Projection,
    basis: Option<&ComplexBasis>,
) -> Result<Vec<ComplexMatrix>> {
    let computed;
    let basis = match basis {
        Some(b) => {
            check_j_closure(structure, projection)?;
            validate_module_basis(structure, projection, b)?;
            b
        }
        None => {
            computed = image_basis(structure, projection)?;
            &computed
        }
    };
    let sig = &structure.sig;
    (1..=sig.n())
        .map(|a| {
            let e_a = Multivector::unit(Blade::from_indices(&[a], sig)?);
            complex_rep_matrix(basis, &e_a)
        })
        .collect()
}

/// gamma_a gamma_b + gamma_b gamma_a = -2 q_ab I, so each gamma_a squares
/// to -eps_a I and distinct gammas anticommute.
pub fn verify_clifford_relations(sig: &Signature, matrices: &[ComplexMatrix]) -> Result<bool> {
    if matrices.len() != sig.n() {
        return Err(CliffordError::BadMatrixFamily {
            expected: sig.n(),
            detail: format!("{} matrices", matrices.len()),
        });
    }
    let m = matrices.first().map_or(0, ComplexMatrix::size);
    if let Some(bad) = matrices.iter().find(|g| g.size() != m) {
        return Err(CliffordError::BadMatrixFamily {
            expected: sig.n(),
            detail: format!("sizes {}x{0} and {1}x{1}", m, bad.size()),
        });
    }
    let identity = ComplexMatrix::identity(m);
    for a in 0..matrices.len() {
        for b in a..matrices.len() {
            let anti = matrices[a].anticommutator(&matrices[b]);
            let expected = if a == b {
                identity.scale(&GaussianRational::from_int(-2 * i64::from(sig.eps(a + 1)), 0))
            } else {
                ComplexMatrix::zeros(m)
            };
            if anti != expected {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Simple component type of the algebra in the classical classification.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MatrixAlgebraTag {
    R,
    C,
    H,
    RplusR,
    HplusH,
}

impl MatrixAlgebraTag {
    pub fn label(self) -> &'static str {
        match self {
            MatrixAlgebraTag::R => "R",
            MatrixAlgebraTag::C => "C",
            MatrixAlgebraTag::H => "H",
            MatrixAlgebraTag::RplusR => "R⊕R",
            MatrixAlgebraTag::HplusH => "H⊕H",
        }
    }

    /// Real dimension contributed per matrix entry (doubled again for the
    /// two-block sums).
    fn unit_dimension(self) -> usize {
        match self {
            MatrixAlgebraTag::R => 1,
            MatrixAlgebraTag::C => 2,
            MatrixAlgebraTag::H => 4,
            MatrixAlgebraTag::RplusR => 2,
            MatrixAlgebraTag::HplusH => 8,
        }
    }
}

impl std::fmt::Display for MatrixAlgebraTag {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.label())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AlgebraClass {
    pub tag: MatrixAlgebraTag,
    pub size: usize,
}

impl AlgebraClass {
    pub fn real_dimension(&self) -> usize {
        self.tag.unit_dimension() * self.size * self.size
    }
}

impl std::fmt::Display for AlgebraClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.size == 1 {
            write!(f, "{}", self.tag)
        } else {
            write!(f, "{}({})", self.tag, self.size)
        }
    }
}

/// Classical classification of Cl(r,s) as a matrix algebra (or sum of two)
/// over R, C, or H, keyed on (s - r) mod 8.  Under this signature convention
/// the first r generators square to -1, so e.g. Cl(1,0) = C and
/// Cl(0,1) = R⊕R.
pub fn classify_matrix_algebra(r: usize, s: usize) -> AlgebraClass {
    let n = r + s;
    let k = (s % 8 + 8 - r % 8) % 8;
    let (tag, doubled_exponent) = match k {
        0 | 2 => (MatrixAlgebraTag::R, n),
        1 => (MatrixAlgebraTag::RplusR, n - 1),
        3 | 7 => (MatrixAlgebraTag::C, n - 1),
        4 | 6 => (MatrixAlgebraTag::H, n - 2),
        _ => (MatrixAlgebraTag::HplusH, n - 3),
    };
    AlgebraClass {
        tag,
        size: 1 << (doubled_exponent / 2),
    }
}

/// The standard Pauli matrices (sigma_1, sigma_2, sigma_3).
pub fn pauli_matrices() -> [ComplexMatrix; 3] {
    [
        ComplexMatrix::from_int_rows(&[&[(0, 0), (1, 0)], &[(1, 0), (0, 0)]]),
        ComplexMatrix::from_int_rows(&[&[(0, 0), (0, -1)], &[(0, 1), (0, 0)]]),
        ComplexMatrix::from_int_rows(&[&[(1, 0), (0, 0)], &[(0, 0), (-1, 0)]]),
    ]
}

/// Idempotents (1 +/- e_I)/2 over all blades with e_I^2 = +1, in ascending
/// mask order with + before -.  The empty blade contributes 1 and 0.
pub fn candidate_idempotents(sig: &Signature) -> Vec<Projection> {
    let mut out = Vec::new();
    for mask in 0..sig.algebra_dim() as u32 {
        let blade = Blade::from_mask_unchecked(mask);
        let (sign, _) = blade_mul(sig, blade, blade);
        if sign != 1 {
            continue;
        }
        for half in [rat(1, 2), rat(-1, 2)] {
            let p = Multivector::from_terms([(Blade::SCALAR, rat(1, 2)), (blade, half)]);
            out.push(make_idempotent(sig, p).expect("(1 +/- e_I)/2 with e_I^2 = 1 is idempotent"));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use num_traits::One;

    use super::*;
    use crate::expr::parse_multivector;
    use crate::invariants::find_equivariant_idempotents;

    fn sig(r: usize, s: usize) -> Signature {
        Signature::new(r, s).unwrap()
    }

    fn parse(sig: &Signature, text: &str) -> Multivector {
        parse_multivector(sig, text).unwrap()
    }

    fn volume_structure(s: &Signature) -> ComplexStructure {
        make_complex_structure(s, Multivector::omega(s)).unwrap()
    }

    #[test]
    fn structure_validation() {
        let s02 = sig(0, 2);
        assert!(make_complex_structure(&s02, parse(&s02, "e12")).is_ok());
        let s31 = sig(3, 1);
        assert!(make_complex_structure(&s31, parse(&s31, "e1234")).is_ok());
        let s40 = sig(4, 0);
        let err = make_complex_structure(&s40, parse(&s40, "e1234")).unwrap_err();
        assert!(matches!(err, CliffordError::NotComplexStructure { .. }));
    }

    #[test]
    fn canonical_basis_elements() {
        let s31 = sig(3, 1);
        let basis = canonical_complex_basis(&volume_structure(&s31)).unwrap();
        let names: Vec<String> = basis
            .elements()
            .iter()
            .map(|v| format_multivector(&s31, v, FormatStyle::Text))
            .collect();
        assert_eq!(names, ["1", "e1", "e2", "e3", "e4", "e12", "e13", "e14"]);

        let s02 = sig(0, 2);
        let basis = canonical_complex_basis(&volume_structure(&s02)).unwrap();
        assert_eq!(basis.len(), 2);
        assert_eq!(basis.elements()[0], Multivector::one());
        assert_eq!(basis.elements()[1], parse(&s02, "e1"));

        let s10 = sig(1, 0);
        let basis = canonical_complex_basis(&volume_structure(&s10)).unwrap();
        assert_eq!(basis.len(), 1);
        assert_eq!(basis.elements()[0], Multivector::one());
    }

    #[test]
    fn canonical_basis_requires_volume_element() {
        let s11 = sig(1, 1);
        let j = parse(&s11, "e1");
        let structure = make_complex_structure(&s11, j).unwrap();
        assert_eq!(
            canonical_complex_basis(&structure).unwrap_err(),
            CliffordError::NotVolumeStructure
        );
    }

    #[test]
    fn coordinates_identify_dual_blades() {
        let s02 = sig(0, 2);
        let basis = canonical_complex_basis(&volume_structure(&s02)).unwrap();
        let coords = complex_coordinates(&basis, &parse(&s02, "e2")).unwrap();
        assert_eq!(coords, [GaussianRational::zero(), GaussianRational::i()]);
        let coords = complex_coordinates(&basis, &Multivector::one()).unwrap();
        assert_eq!(
            coords,
            [GaussianRational::one(), GaussianRational::zero()]
        );

        let s31 = sig(3, 1);
        let basis = canonical_complex_basis(&volume_structure(&s31)).unwrap();
        let coords = complex_coordinates(&basis, &parse(&s31, "e234")).unwrap();
        for (t, z) in coords.iter().enumerate() {
            if t == 1 {
                assert_eq!(z.clone() * z.clone(), GaussianRational::from_int(-1, 0));
                assert!(z.re.is_zero());
            } else {
                assert!(z.is_zero());
            }
        }
    }

    #[test]
    fn rank_two_rep_matrices_are_pinned() {
        let s02 = sig(0, 2);
        let basis = canonical_complex_basis(&volume_structure(&s02)).unwrap();
        let rho1 = complex_rep_matrix(&basis, &parse(&s02, "e1")).unwrap();
        let rho2 = complex_rep_matrix(&basis, &parse(&s02, "e2")).unwrap();
        assert_eq!(
            rho1,
            ComplexMatrix::from_int_rows(&[&[(0, 0), (1, 0)], &[(1, 0), (0, 0)]])
        );
        assert_eq!(
            rho2,
            ComplexMatrix::from_int_rows(&[&[(0, 0), (0, -1)], &[(0, 1), (0, 0)]])
        );
        let one = complex_rep_matrix(&basis, &Multivector::one()).unwrap();
        assert_eq!(one, ComplexMatrix::identity(2));
        assert!(verify_clifford_relations(&s02, &[rho1, rho2]).unwrap());
    }

    #[test]
    fn idempotent_validation() {
        let s31 = sig(3, 1);
        assert!(make_idempotent(&s31, parse(&s31, "1/2 - 1/2*e14")).is_ok());
        assert!(make_idempotent(&s31, Multivector::one()).is_ok());
        let err = make_idempotent(&s31, parse(&s31, "e1")).unwrap_err();
        assert!(matches!(err, CliffordError::NotIdempotent { .. }));
    }

    #[test]
    fn image_basis_dimensions() {
        let s31 = sig(3, 1);
        let structure = volume_structure(&s31);
        let p = make_idempotent(&s31, parse(&s31, "1/2 - 1/2*e14")).unwrap();
        let basis = image_basis(&structure, &p).unwrap();
        assert_eq!(basis.len(), 4);
        let complement = image_basis(&structure, &p.complement()).unwrap();
        assert_eq!(complement.len(), 4);
        for v in basis.elements() {
            assert_eq!(v.product(&s31, p.multivector()), *v);
        }
    }

    #[test]
    fn image_basis_degenerate_cases() {
        let s31 = sig(3, 1);
        let structure = volume_structure(&s31);
        let full = make_idempotent(&s31, Multivector::one()).unwrap();
        let basis = image_basis(&structure, &full).unwrap();
        let canonical = canonical_complex_basis(&structure).unwrap();
        assert_eq!(basis.elements(), canonical.elements());
        let zero = make_idempotent(&s31, Multivector::zero()).unwrap();
        assert!(image_basis(&structure, &zero).unwrap().is_empty());
    }

    #[test]
    fn explicit_basis_yields_pinned_gammas() {
        let s31 = sig(3, 1);
        let structure = volume_structure(&s31);
        let p = make_idempotent(&s31, parse(&s31, "1/2 - 1/2*e14")).unwrap();
        // Real forms of {1 - e14, e12 - i e13, e1 + e4, e2 - i e3} with
        // i acting as right multiplication by e1234.
        let elements = ["1 - e14", "e12 - e24", "e1 + e4", "e2 + e124"]
            .iter()
            .map(|t| parse(&s31, t))
            .collect();
        let basis = ComplexBasis::from_elements(&structure, elements).unwrap();
        let gammas = gamma_matrices(&structure, &p, Some(&basis)).unwrap();
        let expected = [
            ComplexMatrix::from_int_rows(&[
                &[(0, 0), (0, 0), (-1, 0), (0, 0)],
                &[(0, 0), (0, 0), (0, 0), (1, 0)],
                &[(1, 0), (0, 0), (0, 0), (0, 0)],
                &[(0, 0), (-1, 0), (0, 0), (0, 0)],
            ]),
            ComplexMatrix::from_int_rows(&[
                &[(0, 0), (0, 0), (0, 0), (-1, 0)],
                &[(0, 0), (0, 0), (-1, 0), (0, 0)],
                &[(0, 0), (1, 0), (0, 0), (0, 0)],
                &[(1, 0), (0, 0), (0, 0), (0, 0)],
            ]),
            ComplexMatrix::from_int_rows(&[
                &[(0, 0), (0, 0), (0, 0), (0, 1)],
                &[(0, 0), (0, 0), (0, -1), (0, 0)],
                &[(0, 0), (0, -1), (0, 0), (0, 0)],
                &[(0, 1), (0, 0), (0, 0), (0, 0)],
            ]),
            ComplexMatrix::from_int_rows(&[
                &[(0, 0), (0, 0), (1, 0), (0, 0)],
                &[(0, 0), (0, 0), (0, 0), (1, 0)],
                &[(1, 0), (0, 0), (0, 0), (0, 0)],
                &[(0, 0), (1, 0), (0, 0), (0, 0)],
            ]),
        ];
        assert_eq!(gammas.len(), 4);
        for (got, want) in gammas.iter().zip(&expected) {
            assert_eq!(got, want);
        }
        assert!(verify_clifford_relations(&s31, &gammas).unwrap());

        let mut swapped = gammas;
        swapped.swap(0, 3);
        assert!(!verify_clifford_relations(&s31, &swapped).unwrap());
    }

    #[test]
    fn default_basis_gammas_satisfy_relations() {
        let s31 = sig(3, 1);
        let structure = volume_structure(&s31);
        let p = make_idempotent(&s31, parse(&s31, "1/2 - 1/2*e14")).unwrap();
        let gammas = gamma_matrices(&structure, &p, None).unwrap();
        assert!(verify_clifford_relations(&s31, &gammas).unwrap());
        for g in &gammas {
            assert_eq!(g.size(), 4);
        }
    }

    #[test]
    fn rep_is_homomorphism_on_full_module() {
        let s31 = sig(3, 1);
        let structure = volume_structure(&s31);
        let basis = canonical_complex_basis(&structure).unwrap();
        let x = parse(&s31, "1 + 2*e1 - 1/3*e234");
        let y = parse(&s31, "e12 - 5*e4");
        let lhs = complex_rep_matrix(&basis, &x.product(&s31, &y)).unwrap();
        let rhs = complex_rep_matrix(&basis, &x)
            .unwrap()
            .mul(&complex_rep_matrix(&basis, &y).unwrap());
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn explicit_basis_is_validated() {
        let s31 = sig(3, 1);
        let structure = volume_structure(&s31);
        let p = make_idempotent(&s31, parse(&s31, "1/2 - 1/2*e14")).unwrap();

        let short = ComplexBasis::from_elements(&structure, vec![parse(&s31, "1 - e14")]).unwrap();
        assert!(matches!(
            gamma_matrices(&structure, &p, Some(&short)).unwrap_err(),
            CliffordError::BadBasisSize { got: 1, expected: 4 }
        ));

        let outside = ComplexBasis::from_elements(
            &structure,
            ["1 - e14", "e12 - e24", "e1 + e4", "e2"]
                .iter()
                .map(|t| parse(&s31, t))
                .collect(),
        )
        .unwrap();
        assert_eq!(
            gamma_matrices(&structure, &p, Some(&outside)).unwrap_err(),
            CliffordError::NotInSpan
        );

        // 1 - e14 and its i-multiple are complex-dependent.
        let dependent = ComplexBasis::from_elements(
            &structure,
            vec![parse(&s31, "1 - e14"), parse(&s31, "e23 - e1234")],
        );
        assert_eq!(dependent.unwrap_err(), CliffordError::DependentBasis);
    }

    #[test]
    fn closure_can_fail() {
        // In (0,2) the candidates (1 +/- e_1)/2 and (1 +/- e_2)/2 are
        // idempotent but their images are not closed under right
        // multiplication by e12; only 1 and 0 survive the closure check.
        let s02 = sig(0, 2);
        let structure = volume_structure(&s02);
        let mut closed = 0;
        let mut rejected = 0;
        for p in candidate_idempotents(&s02) {
            match image_basis(&structure, &p) {
                Ok(basis) => {
                    closed += 1;
                    assert!(basis.len() == 2 || basis.is_empty());
                    let gammas = gamma_matrices(&structure, &p, None).unwrap();
                    assert!(verify_clifford_relations(&s02, &gammas).unwrap());
                }
                Err(CliffordError::NotJClosed) => rejected += 1,
                Err(other) => panic!("unexpected error {other}"),
            }
        }
        assert_eq!((closed, rejected), (2, 4));
    }

    #[test]
    fn classification_table() {
        let quaternions = classify_matrix_algebra(2, 0);
        assert_eq!(quaternions.tag, MatrixAlgebraTag::H);
        assert_eq!(quaternions.size, 1);

        let reals2 = classify_matrix_algebra(0, 2);
        assert_eq!(reals2.tag, MatrixAlgebraTag::R);
        assert_eq!(reals2.size, 2);

        assert_eq!(classify_matrix_algebra(1, 0).tag, MatrixAlgebraTag::C);
        assert_eq!(classify_matrix_algebra(0, 1).tag, MatrixAlgebraTag::RplusR);
        assert_eq!(classify_matrix_algebra(0, 0).tag, MatrixAlgebraTag::R);
        assert_eq!(classify_matrix_algebra(5, 0).tag, MatrixAlgebraTag::C);
        assert_eq!(classify_matrix_algebra(0, 5).tag, MatrixAlgebraTag::HplusH);

        for n in 0..=8 {
            for r in 0..=n {
                let class = classify_matrix_algebra(r, n - r);
                assert_eq!(class.real_dimension(), 1 << n, "Cl({r},{})", n - r);
            }
        }
    }

    #[test]
    fn display_of_classes() {
        assert_eq!(classify_matrix_algebra(2, 0).to_string(), "H");
        assert_eq!(classify_matrix_algebra(0, 2).to_string(), "R(2)");
        assert_eq!(classify_matrix_algebra(0, 1).to_string(), "R⊕R");
    }

    #[test]
    fn pauli_constants_square_to_identity() {
        let [s1, s2, s3] = pauli_matrices();
        let identity = ComplexMatrix::identity(2);
        for s in [&s1, &s2, &s3] {
            assert_eq!(s.mul(s), identity);
        }
        // sigma_1 sigma_2 = i sigma_3
        assert_eq!(s1.mul(&s2), s3.scale(&GaussianRational::i()));
    }

    #[test]
    fn candidate_family_members_are_idempotent() {
        let s31 = sig(3, 1);
        let candidates = candidate_idempotents(&s31);
        assert!(candidates.contains(&make_idempotent(&s31, Multivector::one()).unwrap()));
        assert!(candidates.contains(&make_idempotent(&s31, Multivector::zero()).unwrap()));
        assert!(candidates
            .contains(&make_idempotent(&s31, parse(&s31, "1/2 - 1/2*e14")).unwrap()));
        for p in &candidates {
            let q = p.multivector();
            assert_eq!(q.product(&s31, q), *q);
        }
    }

    #[test]
    fn only_trivial_equivariant_projections_when_omega_squares_to_minus_one() {
        let s31 = sig(3, 1);
        let points = find_equivariant_idempotents(&s31).unwrap();
        assert_eq!(points, vec![Multivector::zero(), Multivector::one()]);
    }
}
