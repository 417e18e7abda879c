//! Deterministic self-check suites: exhaustive sweeps where the domain is
//! small, seeded randomized identities elsewhere.  Every suite reports a
//! named pass/fail with a counterexample on failure.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::blade::{omega_squared, Blade};
use crate::expr::{format_multivector, FormatStyle};
use crate::gamma::{
    canonical_complex_basis, candidate_idempotents, complex_rep_matrix, gamma_matrices,
    image_basis, make_complex_structure, verify_clifford_relations,
};
use crate::error::CliffordError;
use crate::invariants::{
    brute_force_invariants, find_equivariant_complex_structures, invariant_subspace,
    BRUTE_FORCE_MAX_N,
};
use crate::lie::{
    generators, left_mul_operator, right_mul_operator, sample_improper_elements,
    sample_so_elements,
};
use crate::multivector::{rat, Multivector, Rational};
use crate::signature::Signature;

pub const DEFAULT_CASES: usize = 200;
pub const DEFAULT_SEED: u64 = 0x436c_1ff0;

#[derive(Debug, Clone, Copy)]
pub struct VerifyOptions {
    /// Largest r+s swept.
    pub max_n: usize,
    /// Randomized cases per suite.
    pub cases: usize,
    pub seed: u64,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            max_n: 6,
            cases: DEFAULT_CASES,
            seed: DEFAULT_SEED,
        }
    }
}

#[derive(Debug, Clone)]
pub struct CheckReport {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl CheckReport {
    fn pass(name: &'static str, detail: String) -> Self {
        CheckReport {
            name,
            passed: true,
            detail,
        }
    }

    fn fail(name: &'static str, detail: String) -> Self {
        CheckReport {
            name,
            passed: false,
            detail,
        }
    }
}

pub fn all_passed(reports: &[CheckReport]) -> bool {
    reports.iter().all(|r| r.passed)
}

/// All signatures with r+s <= max_n, by total dimension then r.
pub fn signatures_up_to(max_n: usize) -> Vec<Signature> {
    let mut out = Vec::new();
    for n in 0..=max_n {
        for r in 0..=n {
            if let Ok(sig) = Signature::new(r, n - r) {
                out.push(sig);
            }
        }
    }
    out
}

fn suite_rng(options: &VerifyOptions, index: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(options.seed ^ index.wrapping_mul(0x9E37_79B9_7F4A_7C15))
}

fn random_multivector(rng: &mut ChaCha8Rng, sig: &Signature) -> Multivector {
    let dim = sig.algebra_dim() as u32;
    let terms = rng.gen_range(1..=4.min(dim as usize));
    Multivector::from_terms((0..terms).map(|_| {
        let mask = rng.gen_range(0..dim);
        let numer = rng.gen_range(-9..=9);
        let denom = rng.gen_range(1..=4);
        (Blade::from_mask_unchecked(mask), rat(numer, denom))
    }))
}

fn show(sig: &Signature, x: &Multivector) -> String {
    format_multivector(sig, x, FormatStyle::Text)
}

/// Equivariant complex structures exist exactly when omega squares to -1,
/// and then equal {+omega, -omega}.
pub fn check_structure_sweep(max_n: usize) -> CheckReport {
    const NAME: &str = "equivariant structure sweep";
    let mut count = 0;
    for sig in signatures_up_to(max_n) {
        let solutions = match find_equivariant_complex_structures(&sig) {
            Ok(v) => v,
            Err(e) => return CheckReport::fail(NAME, format!("{sig}: {e}")),
        };
        let square = match omega_squared(&sig) {
            Ok(v) => v,
            Err(e) => return CheckReport::fail(NAME, format!("{sig}: {e}")),
        };
        let n = sig.n();
        let rule = if sig.s() % 2 == 1 {
            n % 4 == 0 || n % 4 == 3
        } else {
            n % 4 == 1 || n % 4 == 2
        };
        if rule != (square == -1) {
            return CheckReport::fail(
                NAME,
                format!("{sig}: mod-4 existence rule disagrees with omega^2 = {square}"),
            );
        }
        let omega = Multivector::omega(&sig);
        let expected = if square == -1 {
            vec![omega.neg(), omega]
        } else {
            Vec::new()
        };
        if solutions != expected {
            let shown: Vec<String> = solutions.iter().map(|x| show(&sig, x)).collect();
            return CheckReport::fail(NAME, format!("{sig}: solutions {{{}}}", shown.join(", ")));
        }
        count += 1;
    }
    CheckReport::pass(NAME, format!("{count} signatures"))
}

/// The blade-product computation of omega^2 agrees with the mod-4 rule
/// (omega_squared computes both and faults on mismatch).
pub fn check_omega_dual(max_n: usize) -> CheckReport {
    const NAME: &str = "omega square dual computation";
    let mut count = 0;
    for sig in signatures_up_to(max_n) {
        if let Err(e) = omega_squared(&sig) {
            return CheckReport::fail(NAME, format!("{sig}: {e}"));
        }
        count += 1;
    }
    CheckReport::pass(NAME, format!("{count} signatures"))
}

/// Invariant subspace is span{1, omega} for n >= 2 and everything below,
/// matching the dense nullspace oracle where that is feasible.
pub fn check_invariant_dimensions(max_n: usize) -> CheckReport {
    const NAME: &str = "invariant subspace dimensions";
    for sig in signatures_up_to(max_n) {
        let fast = invariant_subspace(&sig);
        let expected_dim = if sig.n() >= 2 { 2 } else { sig.algebra_dim() };
        if fast.dim() != expected_dim {
            return CheckReport::fail(
                NAME,
                format!("{sig}: dimension {} (expected {expected_dim})", fast.dim()),
            );
        }
        if sig.n() <= BRUTE_FORCE_MAX_N {
            let brute = match brute_force_invariants(&sig) {
                Ok(b) => b,
                Err(e) => return CheckReport::fail(NAME, format!("{sig}: {e}")),
            };
            if brute.vectors() != fast.vectors() {
                return CheckReport::fail(NAME, format!("{sig}: oracle basis differs"));
            }
        }
    }
    CheckReport::pass(
        NAME,
        format!("{} signatures", signatures_up_to(max_n).len()),
    )
}

pub fn check_associativity(options: &VerifyOptions) -> CheckReport {
    const NAME: &str = "product associativity";
    let sigs = signatures_up_to(options.max_n);
    let mut rng = suite_rng(options, 1);
    for case in 0..options.cases {
        let sig = sigs[case % sigs.len()];
        let x = random_multivector(&mut rng, &sig);
        let y = random_multivector(&mut rng, &sig);
        let z = random_multivector(&mut rng, &sig);
        let left = x.product(&sig, &y).product(&sig, &z);
        let right = x.product(&sig, &y.product(&sig, &z));
        if left != right {
            return CheckReport::fail(
                NAME,
                format!(
                    "{sig}: x={}, y={}, z={}",
                    show(&sig, &x),
                    show(&sig, &y),
                    show(&sig, &z)
                ),
            );
        }
    }
    CheckReport::pass(NAME, format!("{} cases", options.cases))
}

/// Generator relations: e_j^2 = -eps_j and e_j e_k = -e_k e_j for j != k.
pub fn check_anticommutation(max_n: usize) -> CheckReport {
    const NAME: &str = "generator anticommutation";
    let mut count = 0;
    for sig in signatures_up_to(max_n) {
        for j in 1..=sig.n() {
            let ej = Multivector::unit(Blade::from_indices(&[j], &sig).unwrap());
            let square = ej.product(&sig, &ej);
            if square != Multivector::from_int(-i64::from(sig.eps(j))) {
                return CheckReport::fail(
                    NAME,
                    format!("{sig}: e{j}^2 = {}", show(&sig, &square)),
                );
            }
            for k in (j + 1)..=sig.n() {
                let ek = Multivector::unit(Blade::from_indices(&[k], &sig).unwrap());
                let jk = ej.product(&sig, &ek);
                let kj = ek.product(&sig, &ej);
                if jk != kj.neg() {
                    return CheckReport::fail(NAME, format!("{sig}: e{j} e{k} commute"));
                }
                count += 1;
            }
            count += 1;
        }
    }
    CheckReport::pass(NAME, format!("{count} generator pairs"))
}

/// Every so(r,s) generator acts as a derivation: L(xy) = (Lx)y + x(Ly).
pub fn check_leibniz(options: &VerifyOptions) -> CheckReport {
    const NAME: &str = "derivation (Leibniz) rule";
    let sigs: Vec<Signature> = signatures_up_to(options.max_n)
        .into_iter()
        .filter(|s| s.n() >= 2)
        .collect();
    if sigs.is_empty() {
        return CheckReport::pass(NAME, "no signatures with n >= 2".into());
    }
    let mut rng = suite_rng(options, 2);
    for case in 0..options.cases {
        let sig = sigs[case % sigs.len()];
        let gens = generators(&sig);
        let gen = &gens[rng.gen_range(0..gens.len())];
        let x = random_multivector(&mut rng, &sig);
        let y = random_multivector(&mut rng, &sig);
        let lhs = gen.act_on_multivector(&sig, &x.product(&sig, &y));
        let rhs = gen
            .act_on_multivector(&sig, &x)
            .product(&sig, &y)
            .add(&x.product(&sig, &gen.act_on_multivector(&sig, &y)));
        if lhs != rhs {
            let (j, k) = gen.indices();
            return CheckReport::fail(
                NAME,
                format!(
                    "{sig}: L{j}{k} on x={}, y={}",
                    show(&sig, &x),
                    show(&sig, &y)
                ),
            );
        }
    }
    CheckReport::pass(NAME, format!("{} cases", options.cases))
}

/// A blade is annihilated by L_jk exactly when it contains both or neither
/// of j, k; in particular 1 and omega are invariant.
pub fn check_blade_survival(max_n: usize) -> CheckReport {
    const NAME: &str = "blade annihilation pattern";
    let mut count = 0;
    for sig in signatures_up_to(max_n) {
        for gen in generators(&sig) {
            let (j, k) = gen.indices();
            for mask in 0..sig.algebra_dim() as u32 {
                let blade = Blade::from_mask_unchecked(mask);
                let killed = gen.act_on_blade(&sig, blade).is_zero();
                let expected = blade.contains(j) == blade.contains(k);
                if killed != expected {
                    return CheckReport::fail(
                        NAME,
                        format!("{sig}: L{j}{k} on mask {mask:#b}"),
                    );
                }
                count += 1;
            }
        }
    }
    CheckReport::pass(NAME, format!("{count} blade/generator pairs"))
}

/// Sampled group elements act as algebra automorphisms and scale omega by
/// their determinant.
pub fn check_group_invariance(options: &VerifyOptions) -> CheckReport {
    const NAME: &str = "orthogonal group action";
    let mut rng = suite_rng(options, 3);
    let mut pool = Vec::new();
    for sig in signatures_up_to(options.max_n) {
        for map in sample_so_elements(&sig)
            .into_iter()
            .chain(sample_improper_elements(&sig))
        {
            pool.push((sig, map));
        }
    }
    if pool.is_empty() {
        return CheckReport::pass(NAME, "no sampled elements".into());
    }
    for case in 0..options.cases {
        let (sig, map) = &pool[case % pool.len()];
        let x = random_multivector(&mut rng, sig);
        let y = random_multivector(&mut rng, sig);
        let product_then_act = map.apply(sig, &x.product(sig, &y));
        let act_then_product = map.apply(sig, &x).product(sig, &map.apply(sig, &y));
        if product_then_act != act_then_product {
            return CheckReport::fail(
                NAME,
                format!("{sig}: map is not multiplicative on x={}", show(sig, &x)),
            );
        }
        let omega = Multivector::omega(sig);
        if map.apply(sig, &omega) != omega.scale(&map.det()) {
            return CheckReport::fail(NAME, format!("{sig}: omega not scaled by det"));
        }
    }
    CheckReport::pass(NAME, format!("{} cases", options.cases))
}

/// Left and right multiplication operators always commute.
pub fn check_commutation(options: &VerifyOptions) -> CheckReport {
    const NAME: &str = "left/right multiplication commutation";
    let sigs = signatures_up_to(options.max_n);
    let mut rng = suite_rng(options, 4);
    for case in 0..options.cases {
        let sig = sigs[case % sigs.len()];
        let x = random_multivector(&mut rng, &sig);
        let y = random_multivector(&mut rng, &sig);
        let left = left_mul_operator(&sig, &x);
        let right = right_mul_operator(&sig, &y);
        if left.compose(&right) != right.compose(&left) {
            return CheckReport::fail(
                NAME,
                format!("{sig}: x={}, y={}", show(&sig, &x), show(&sig, &y)),
            );
        }
    }
    CheckReport::pass(NAME, format!("{} cases", options.cases))
}

/// On the full module the complex representation is a ring homomorphism.
pub fn check_rep_homomorphism(options: &VerifyOptions) -> CheckReport {
    const NAME: &str = "representation homomorphism";
    let mut bases = Vec::new();
    for sig in signatures_up_to(options.max_n) {
        if omega_squared(&sig) != Ok(-1) {
            continue;
        }
        let structure = match make_complex_structure(&sig, Multivector::omega(&sig)) {
            Ok(s) => s,
            Err(e) => return CheckReport::fail(NAME, format!("{sig}: {e}")),
        };
        match canonical_complex_basis(&structure) {
            Ok(b) => bases.push((sig, b)),
            Err(e) => return CheckReport::fail(NAME, format!("{sig}: {e}")),
        }
    }
    if bases.is_empty() {
        return CheckReport::pass(NAME, "no admissible signatures".into());
    }
    let mut rng = suite_rng(options, 5);
    for case in 0..options.cases {
        let (sig, basis) = &bases[case % bases.len()];
        let x = random_multivector(&mut rng, sig);
        let y = random_multivector(&mut rng, sig);
        let rep = |v: &Multivector| complex_rep_matrix(basis, v);
        let composite = match rep(&x.product(sig, &y)) {
            Ok(m) => m,
            Err(e) => return CheckReport::fail(NAME, format!("{sig}: {e}")),
        };
        let factored = match (rep(&x), rep(&y)) {
            (Ok(a), Ok(b)) => a.mul(&b),
            (Err(e), _) | (_, Err(e)) => {
                return CheckReport::fail(NAME, format!("{sig}: {e}"))
            }
        };
        if composite != factored {
            return CheckReport::fail(
                NAME,
                format!("{sig}: x={}, y={}", show(sig, &x), show(sig, &y)),
            );
        }
    }
    CheckReport::pass(NAME, format!("{} cases", options.cases))
}

/// Gamma relations for every J-closed candidate idempotent, plus the
/// dimension split between a summand and its complement.
pub fn check_gamma_sweep(max_n: usize) -> CheckReport {
    const NAME: &str = "gamma relations sweep";
    let cap = max_n.min(6);
    let mut sets = 0;
    for sig in signatures_up_to(cap) {
        if omega_squared(&sig) != Ok(-1) {
            continue;
        }
        let structure = match make_complex_structure(&sig, Multivector::omega(&sig)) {
            Ok(s) => s,
            Err(e) => return CheckReport::fail(NAME, format!("{sig}: {e}")),
        };
        for p in candidate_idempotents(&sig) {
            let basis = match image_basis(&structure, &p) {
                Ok(b) => b,
                Err(CliffordError::NotJClosed) => continue,
                Err(e) => return CheckReport::fail(NAME, format!("{sig}: {e}")),
            };
            let complement = match image_basis(&structure, &p.complement()) {
                Ok(b) => b,
                Err(CliffordError::NotJClosed) => {
                    return CheckReport::fail(
                        NAME,
                        format!("{sig}: complement of a closed image is not closed"),
                    )
                }
                Err(e) => return CheckReport::fail(NAME, format!("{sig}: {e}")),
            };
            if basis.len() + complement.len() != sig.algebra_dim() / 2 {
                return CheckReport::fail(
                    NAME,
                    format!(
                        "{sig}: dimensions {} + {} != {}",
                        basis.len(),
                        complement.len(),
                        sig.algebra_dim() / 2
                    ),
                );
            }
            let gammas = match gamma_matrices(&structure, &p, None) {
                Ok(g) => g,
                Err(e) => return CheckReport::fail(NAME, format!("{sig}: {e}")),
            };
            match verify_clifford_relations(&sig, &gammas) {
                Ok(true) => sets += 1,
                Ok(false) => {
                    return CheckReport::fail(
                        NAME,
                        format!(
                            "{sig}: relations fail for p = {}",
                            show(&sig, p.multivector())
                        ),
                    )
                }
                Err(e) => return CheckReport::fail(NAME, format!("{sig}: {e}")),
            }
        }
    }
    CheckReport::pass(NAME, format!("{sets} gamma sets"))
}

/// Is omega invariant under every sampled proper rotation, and negated by
/// improper ones exactly when det = -1 (already covered pointwise by the
/// group suite; this pins the determinant values themselves).
pub fn check_sample_determinants(max_n: usize) -> CheckReport {
    const NAME: &str = "sample determinant split";
    let one = Rational::from_integer(1.into());
    for sig in signatures_up_to(max_n) {
        for map in sample_so_elements(&sig) {
            if map.det() != one {
                return CheckReport::fail(NAME, format!("{sig}: proper sample with det != 1"));
            }
        }
        for map in sample_improper_elements(&sig) {
            if map.det() != -one.clone() {
                return CheckReport::fail(NAME, format!("{sig}: improper sample with det != -1"));
            }
        }
    }
    CheckReport::pass(NAME, "all sampled maps".into())
}

pub fn run_all(options: &VerifyOptions) -> Vec<CheckReport> {
    vec![
        check_structure_sweep(options.max_n),
        check_omega_dual(options.max_n),
        check_invariant_dimensions(options.max_n),
        check_associativity(options),
        check_anticommutation(options.max_n),
        check_leibniz(options),
        check_blade_survival(options.max_n),
        check_group_invariance(options),
        check_sample_determinants(options.max_n),
        check_commutation(options),
        check_rep_homomorphism(options),
        check_gamma_sweep(options.max_n),
    ]
}
