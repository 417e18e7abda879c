//! cliffeq: exact computations in the real Clifford algebra Cl(r,s).
//!
//! One subcommand per query; every command accepts --format text|json|latex
//! and produces byte-identical output for identical inputs.  Exit codes:
//! 0 success, 1 domain error (non-idempotent input, missing complex
//! structure, closure failure), 2 usage or parse error.

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use cliffeq_core::expr::{format_blade, format_multivector, parse_multivector, FormatStyle};
use cliffeq_core::gamma::{
    classify_matrix_algebra, gamma_matrices, image_basis, make_complex_structure, make_idempotent,
    ComplexBasis, MatrixAlgebraTag,
};
use cliffeq_core::invariants::{
    find_equivariant_complex_structures, find_equivariant_idempotents, invariant_subspace,
};
use cliffeq_core::lie::LieGenerator;
use cliffeq_core::verify::{run_all, VerifyOptions, DEFAULT_CASES, DEFAULT_SEED};
use cliffeq_core::{
    omega_squared, CliffordError, Multivector, Signature, DEFAULT_MAX_N,
};

const NO_STRUCTURE_MESSAGE: &str = "no equivariant complex structure exists (ω²=+1)";

#[derive(Parser)]
#[command(
    name = "cliffeq",
    version,
    about = "Exact Clifford algebra engine: invariants, complex structures, gamma matrices"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the square of the volume element omega = e_1...e_n
    Omega(SigArgs),
    /// Classify Cl(r,s) as a matrix algebra over R, C, or H
    Classify(SigArgs),
    /// Basis of the subspace annihilated by every so(r,s) generator
    Invariants(SigArgs),
    /// Equivariant complex structures J(1), if any
    Jstruct(SigArgs),
    /// Equivariant idempotents
    Idempotents(SigArgs),
    /// Gamma matrices of left multiplication on an idempotent summand
    Gamma(GammaArgs),
    /// Multiply two elements
    Mul(MulArgs),
    /// Apply an so(r,s) generator to an element, or print its matrix
    Act(ActArgs),
    /// Run the self-check suites
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Text,
    Json,
    Latex,
}

#[derive(Args)]
struct SigArgs {
    /// Number of generators squaring to -1
    r: usize,
    /// Number of generators squaring to +1
    s: usize,
    #[arg(long, value_enum, default_value = "text")]
    format: OutputFormat,
}

#[derive(Args)]
struct GammaArgs {
    r: usize,
    s: usize,
    /// Idempotent p defining the summand Cl.p (default: 1, the full module)
    #[arg(long, allow_hyphen_values = true)]
    idempotent: Option<String>,
    /// Comma-separated complex basis of the summand (default: echelon basis)
    #[arg(long, allow_hyphen_values = true)]
    basis: Option<String>,
    #[arg(long, value_enum, default_value = "text")]
    format: OutputFormat,
}

#[derive(Args)]
struct MulArgs {
    r: usize,
    s: usize,
    #[arg(allow_hyphen_values = true)]
    x: String,
    #[arg(allow_hyphen_values = true)]
    y: String,
    #[arg(long, value_enum, default_value = "text")]
    format: OutputFormat,
}

#[derive(Args)]
struct ActArgs {
    r: usize,
    s: usize,
    /// Generator L_{j,k} as "j,k" with j < k
    #[arg(long)]
    generator: String,
    /// Element to act on; omitted, the full action matrix is printed
    #[arg(allow_hyphen_values = true)]
    expr: Option<String>,
    #[arg(long, value_enum, default_value = "text")]
    format: OutputFormat,
}

#[derive(Args)]
struct VerifyArgs {
    /// Largest r+s swept (default 6)
    #[arg(long = "max-n")]
    max_n: Option<usize>,
    /// Randomized cases per suite
    #[arg(long)]
    cases: Option<usize>,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long, value_enum, default_value = "text")]
    format: OutputFormat,
}

struct Failure {
    code: i32,
    message: String,
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: 2,
        message: message.into(),
    }
}

fn classify_error(e: CliffordError) -> Failure {
    let code = match e {
        CliffordError::Parse { .. }
        | CliffordError::IndexOutOfRange { .. }
        | CliffordError::IndicesNotIncreasing { .. }
        | CliffordError::DimensionCapExceeded { .. }
        | CliffordError::Json { .. } => 2,
        _ => 1,
    };
    Failure {
        code,
        message: e.to_string(),
    }
}

fn main() {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(output) => print!("{output}"),
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            std::process::exit(failure.code);
        }
    }
}

fn run(command: Command) -> Result<String, Failure> {
    match command {
        Command::Omega(args) => omega(args),
        Command::Classify(args) => classify(args),
        Command::Invariants(args) => invariants(args),
        Command::Jstruct(args) => jstruct(args),
        Command::Idempotents(args) => idempotents(args),
        Command::Gamma(args) => gamma(args),
        Command::Mul(args) => mul(args),
        Command::Act(args) => act(args),
        Command::Verify(args) => verify(args),
    }
}

fn dimension_cap() -> Result<usize, Failure> {
    match std::env::var("CLIFFEQ_MAX_N") {
        Ok(value) => value
            .parse()
            .map_err(|_| usage(format!("CLIFFEQ_MAX_N must be an integer, got {value:?}"))),
        Err(std::env::VarError::NotPresent) => Ok(DEFAULT_MAX_N),
        Err(e) => Err(usage(format!("CLIFFEQ_MAX_N: {e}"))),
    }
}

fn signature(r: usize, s: usize) -> Result<Signature, Failure> {
    let cap = dimension_cap()?;
    Signature::with_max(r, s, cap).map_err(classify_error)
}

fn parse(sig: &Signature, text: &str) -> Result<Multivector, Failure> {
    parse_multivector(sig, text).map_err(classify_error)
}

fn render(sig: &Signature, x: &Multivector, format: OutputFormat) -> String {
    let style = match format {
        OutputFormat::Latex => FormatStyle::Latex,
        _ => FormatStyle::Text,
    };
    format_multivector(sig, x, style)
}

fn json_line(value: Value) -> String {
    format!("{value}\n")
}

fn omega(args: SigArgs) -> Result<String, Failure> {
    let sig = signature(args.r, args.s)?;
    let square = omega_squared(&sig).map_err(classify_error)?;
    Ok(match args.format {
        OutputFormat::Text => format!(
            "{sig}: omega = {}, omega^2 = {square}\n",
            render(&sig, &Multivector::omega(&sig), args.format)
        ),
        OutputFormat::Json => json_line(json!({
            "r": sig.r(),
            "s": sig.s(),
            "omega_squared": square,
        })),
        OutputFormat::Latex => format!(
            "\\omega = {}, \\quad \\omega^2 = {square}\n",
            render(&sig, &Multivector::omega(&sig), args.format)
        ),
    })
}

fn latex_tag(tag: MatrixAlgebraTag) -> &'static str {
    match tag {
        MatrixAlgebraTag::R => "\\mathbb{R}",
        MatrixAlgebraTag::C => "\\mathbb{C}",
        MatrixAlgebraTag::H => "\\mathbb{H}",
        MatrixAlgebraTag::RplusR => "\\mathbb{R}\\oplus\\mathbb{R}",
        MatrixAlgebraTag::HplusH => "\\mathbb{H}\\oplus\\mathbb{H}",
    }
}

fn classify(args: SigArgs) -> Result<String, Failure> {
    let sig = signature(args.r, args.s)?;
    let class = classify_matrix_algebra(sig.r(), sig.s());
    Ok(match args.format {
        OutputFormat::Text => format!(
            "{sig} = {class}, real dimension {}\n",
            class.real_dimension()
        ),
        OutputFormat::Json => json_line(json!({
            "r": sig.r(),
            "s": sig.s(),
            "tag": class.tag.label(),
            "size": class.size,
            "real_dimension": class.real_dimension(),
        })),
        OutputFormat::Latex => {
            let tag = latex_tag(class.tag);
            if class.size == 1 {
                format!("{tag}\n")
            } else {
                format!("{tag}({})\n", class.size)
            }
        }
    })
}

fn invariants(args: SigArgs) -> Result<String, Failure> {
    let sig = signature(args.r, args.s)?;
    let basis = invariant_subspace(&sig);
    Ok(match args.format {
        OutputFormat::Text | OutputFormat::Latex => {
            let mut out = format!("invariant subspace of {sig}: dimension {}\n", basis.dim());
            for v in basis.vectors() {
                out.push_str(&render(&sig, v, args.format));
                out.push('\n');
            }
            out
        }
        OutputFormat::Json => json_line(json!({
            "r": sig.r(),
            "s": sig.s(),
            "dimension": basis.dim(),
            "basis": basis
                .vectors()
                .iter()
                .map(|v| render(&sig, v, OutputFormat::Text))
                .collect::<Vec<_>>(),
        })),
    })
}

fn jstruct(args: SigArgs) -> Result<String, Failure> {
    let sig = signature(args.r, args.s)?;
    let solutions = find_equivariant_complex_structures(&sig).map_err(classify_error)?;
    if args.format == OutputFormat::Json {
        return Ok(json_line(json!({
            "r": sig.r(),
            "s": sig.s(),
            "exists": !solutions.is_empty(),
            "solutions": solutions
                .iter()
                .map(|v| render(&sig, v, OutputFormat::Text))
                .collect::<Vec<_>>(),
        })));
    }
    if solutions.is_empty() {
        return Ok(format!("{NO_STRUCTURE_MESSAGE}\n"));
    }
    let mut out = String::new();
    for v in &solutions {
        out.push_str(&format!("J(1) = {}\n", render(&sig, v, args.format)));
    }
    Ok(out)
}

fn idempotents(args: SigArgs) -> Result<String, Failure> {
    let sig = signature(args.r, args.s)?;
    let points = find_equivariant_idempotents(&sig).map_err(classify_error)?;
    Ok(match args.format {
        OutputFormat::Text | OutputFormat::Latex => {
            let mut out = String::new();
            for p in &points {
                out.push_str(&render(&sig, p, args.format));
                out.push('\n');
            }
            out
        }
        OutputFormat::Json => json_line(json!({
            "r": sig.r(),
            "s": sig.s(),
            "idempotents": points
                .iter()
                .map(|p| render(&sig, p, OutputFormat::Text))
                .collect::<Vec<_>>(),
        })),
    })
}

/// Splits a comma-separated list of expressions, ignoring commas inside
/// bracketed blade index lists.
fn split_basis(input: &str) -> Vec<String> {
    let mut parts = Vec::new();
    let mut depth = 0usize;
    let mut current = String::new();
    for c in input.chars() {
        match c {
            '[' => {
                depth += 1;
                current.push(c);
            }
            ']' => {
                depth = depth.saturating_sub(1);
                current.push(c);
            }
            ',' if depth == 0 => parts.push(std::mem::take(&mut current)),
            _ => current.push(c),
        }
    }
    parts.push(current);
    parts
}

fn gamma(args: GammaArgs) -> Result<String, Failure> {
    let sig = signature(args.r, args.s)?;
    if omega_squared(&sig).map_err(classify_error)? != -1 {
        return Err(Failure {
            code: 1,
            message: NO_STRUCTURE_MESSAGE.into(),
        });
    }
    let structure =
        make_complex_structure(&sig, Multivector::omega(&sig)).map_err(classify_error)?;
    let p_element = match &args.idempotent {
        Some(text) => parse(&sig, text)?,
        None => Multivector::one(),
    };
    let projection = make_idempotent(&sig, p_element).map_err(classify_error)?;
    let basis = match &args.basis {
        Some(list) => {
            let elements = split_basis(list)
                .iter()
                .map(|text| parse(&sig, text))
                .collect::<Result<Vec<_>, _>>()?;
            ComplexBasis::from_elements(&structure, elements).map_err(classify_error)?
        }
        None => image_basis(&structure, &projection).map_err(classify_error)?,
    };
    let matrices = gamma_matrices(&structure, &projection, Some(&basis)).map_err(classify_error)?;
    Ok(match args.format {
        OutputFormat::Text => {
            let mut out = format!(
                "{sig}, p = {}: module dimension {}\n",
                render(&sig, projection.multivector(), args.format),
                basis.len()
            );
            for (a, matrix) in matrices.iter().enumerate() {
                out.push_str(&format!("gamma_{} =\n{}\n", a + 1, matrix.text()));
            }
            out
        }
        OutputFormat::Json => json_line(json!({
            "r": sig.r(),
            "s": sig.s(),
            "idempotent": render(&sig, projection.multivector(), OutputFormat::Text),
            "module_dimension": basis.len(),
            "basis": basis
                .elements()
                .iter()
                .map(|v| render(&sig, v, OutputFormat::Text))
                .collect::<Vec<_>>(),
            "matrices": matrices.iter().map(|m| m.to_json()).collect::<Vec<_>>(),
        })),
        OutputFormat::Latex => {
            let mut out = String::new();
            for (a, matrix) in matrices.iter().enumerate() {
                out.push_str(&format!("\\gamma_{{{}}} = {}\n", a + 1, matrix.latex()));
            }
            out
        }
    })
}

fn mul(args: MulArgs) -> Result<String, Failure> {
    let sig = signature(args.r, args.s)?;
    let x = parse(&sig, &args.x)?;
    let y = parse(&sig, &args.y)?;
    let product = x.product(&sig, &y);
    Ok(match args.format {
        OutputFormat::Text | OutputFormat::Latex => {
            format!("{}\n", render(&sig, &product, args.format))
        }
        OutputFormat::Json => json_line(json!({
            "r": sig.r(),
            "s": sig.s(),
            "result": render(&sig, &product, OutputFormat::Text),
        })),
    })
}

fn parse_generator(sig: &Signature, text: &str) -> Result<LieGenerator, Failure> {
    let parts: Vec<&str> = text.split(',').collect();
    if parts.len() != 2 {
        return Err(usage(format!("--generator expects \"j,k\", got {text:?}")));
    }
    let index = |part: &str| -> Result<usize, Failure> {
        part.trim()
            .parse()
            .map_err(|_| usage(format!("--generator index {part:?} is not an integer")))
    };
    LieGenerator::new(sig, index(parts[0])?, index(parts[1])?).map_err(classify_error)
}

fn act(args: ActArgs) -> Result<String, Failure> {
    let sig = signature(args.r, args.s)?;
    let generator = parse_generator(&sig, &args.generator)?;
    let (j, k) = generator.indices();
    if let Some(text) = &args.expr {
        let x = parse(&sig, text)?;
        let image = generator.act_on_multivector(&sig, &x);
        return Ok(match args.format {
            OutputFormat::Text | OutputFormat::Latex => {
                format!("{}\n", render(&sig, &image, args.format))
            }
            OutputFormat::Json => json_line(json!({
                "r": sig.r(),
                "s": sig.s(),
                "generator": [j, k],
                "result": render(&sig, &image, OutputFormat::Text),
            })),
        });
    }
    let operator = generator.action_matrix(&sig);
    Ok(match args.format {
        OutputFormat::Text | OutputFormat::Latex => {
            let style = match args.format {
                OutputFormat::Latex => FormatStyle::Latex,
                _ => FormatStyle::Text,
            };
            let mut out = String::new();
            for mask in 0..sig.algebra_dim() as u32 {
                let blade = cliffeq_core::Blade::from_mask(mask, &sig).map_err(classify_error)?;
                let image = generator.act_on_blade(&sig, blade);
                if !image.is_zero() {
                    out.push_str(&format!(
                        "L{j}{k}({}) = {}\n",
                        format_blade(&sig, blade, style),
                        render(&sig, &image, args.format)
                    ));
                }
            }
            if out.is_empty() {
                out.push_str("0\n");
            }
            out
        }
        OutputFormat::Json => json_line(json!({
            "r": sig.r(),
            "s": sig.s(),
            "generator": [j, k],
            "operator": operator.to_json(),
        })),
    })
}

fn verify(args: VerifyArgs) -> Result<String, Failure> {
    let cap = dimension_cap()?;
    let max_n = args.max_n.unwrap_or(6);
    if max_n > cap {
        return Err(usage(format!("--max-n {max_n} exceeds the cap {cap}")));
    }
    let options = VerifyOptions {
        max_n,
        cases: args.cases.unwrap_or(DEFAULT_CASES),
        seed: args.seed.unwrap_or(DEFAULT_SEED),
    };
    let reports = run_all(&options);
    let failed = reports.iter().filter(|r| !r.passed).count();
    if args.format == OutputFormat::Json {
        let payload = json_line(json!({
            "max_n": options.max_n,
            "cases": options.cases,
            "seed": options.seed,
            "passed": failed == 0,
            "checks": reports
                .iter()
                .map(|r| json!({
                    "name": r.name,
                    "passed": r.passed,
                    "detail": r.detail,
                }))
                .collect::<Vec<_>>(),
        }));
        if failed > 0 {
            print!("{payload}");
            return Err(Failure {
                code: 1,
                message: format!("{failed} of {} checks failed", reports.len()),
            });
        }
        return Ok(payload);
    }
    let mut out = String::new();
    for report in &reports {
        if report.passed {
            out.push_str(&format!("ok   {} ({})\n", report.name, report.detail));
        } else {
            out.push_str(&format!("FAIL {}: {}\n", report.name, report.detail));
        }
    }
    if failed > 0 {
        print!("{out}");
        return Err(Failure {
            code: 1,
            message: format!("{failed} of {} checks failed", reports.len()),
        });
    }
    out.push_str("all checks passed\n");
    Ok(out)
}
