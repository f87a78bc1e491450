//! Command-line driver: build algebras, compute derivation spaces, run the
//! verification suites.
//!
//! Exit codes: 0 ok, 1 construction or axiom failure, 2 usage error,
//! 3 verification failure.

use std::fs;
use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use cayley_core::algebra::{check_identities, CayleyAlgebra};
use cayley_core::construct::{cd_octonions, split_cayley};
use cayley_core::derivation::DerivationSpaces;
use cayley_core::field::{FieldElement, FieldSpec};
use cayley_core::report::{algebra_to_json, cayley_from_json, VerificationReport};
use cayley_core::sample::SampleSpec;
use cayley_core::suite::{format_matrix, Subject, Suite};

#[derive(Parser)]
#[command(name = "cayley", version, about = "Exact derivation spaces of Cayley algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Emit the structure-constant JSON of an algebra.
    Build {
        #[command(flatten)]
        algebra: AlgebraArgs,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Print dimensions of Der, so(C,n) and LocDer.
    Der {
        #[command(flatten)]
        algebra: AlgebraArgs,
        /// Include basis matrices.
        #[arg(long)]
        emit_basis: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Run verification suites and print a report.
    Verify {
        #[command(flatten)]
        algebra: AlgebraArgs,
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = 200)]
        samples: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum AlgebraKind {
    Split,
    Cd,
}

#[derive(Args)]
struct AlgebraArgs {
    /// Read the algebra from a JSON file (`-` for stdin) instead of building it.
    #[arg(short, long, conflicts_with_all = ["algebra", "mu", "field"])]
    input: Option<String>,
    #[arg(long, value_enum)]
    algebra: Option<AlgebraKind>,
    /// Cayley-Dickson parameters, comma separated.
    #[arg(long, allow_hyphen_values = true)]
    mu: Option<String>,
    /// `q` or `gf:<p>`.
    #[arg(long)]
    field: Option<FieldSpec>,
}

enum Failure {
    Usage(String),
    Construction(String),
    Verification,
}

impl Failure {
    fn report(self) -> ExitCode {
        match self {
            Failure::Usage(msg) => {
                eprintln!("error: {msg}");
                ExitCode::from(2)
            }
            Failure::Construction(msg) => {
                eprintln!("error: {msg}");
                ExitCode::from(1)
            }
            Failure::Verification => ExitCode::from(3),
        }
    }
}

fn parse_mu(spec: FieldSpec, text: &str) -> Result<[FieldElement; 3], Failure> {
    let parts = text
        .split(',')
        .map(|s| spec.parse_element(s.trim()))
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| Failure::Usage(e.to_string()))?;
    parts
        .try_into()
        .map_err(|_| Failure::Usage("--mu takes exactly three parameters".into()))
}

/// The algebra and its report identifier.
fn load(args: &AlgebraArgs) -> Result<(CayleyAlgebra, String), Failure> {
    if let Some(path) = &args.input {
        let text = if path == "-" {
            let mut s = String::new();
            std::io::stdin()
                .read_to_string(&mut s)
                .map_err(|e| Failure::Construction(e.to_string()))?;
            s
        } else {
            fs::read_to_string(path).map_err(|e| Failure::Construction(format!("{path}: {e}")))?
        };
        let c = cayley_from_json(&text).map_err(|e| Failure::Construction(e.to_string()))?;
        return Ok((c, "input".into()));
    }
    let spec = args.field.unwrap_or(FieldSpec::Rational);
    match args.algebra.unwrap_or(AlgebraKind::Split) {
        AlgebraKind::Split => {
            if args.mu.is_some() {
                return Err(Failure::Usage("--mu applies only to --algebra cd".into()));
            }
            Ok((split_cayley(spec), "split".into()))
        }
        AlgebraKind::Cd => {
            let mus = parse_mu(spec, args.mu.as_deref().unwrap_or("-1,-1,-1"))?;
            let id = format!("cd({})", mus.iter().map(|m| m.to_string()).collect::<Vec<_>>().join(","));
            let c = cd_octonions(spec, mus).map_err(|e| Failure::Construction(e.to_string()))?;
            Ok((c, id))
        }
    }
}

fn emit(text: &str, output: &Option<PathBuf>) -> Result<(), Failure> {
    match output {
        Some(path) => fs::write(path, text).map_err(|e| Failure::Construction(format!("{}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn der(algebra: &AlgebraArgs, emit_basis: bool, format: Format, output: &Option<PathBuf>) -> Result<(), Failure> {
    let (c, _) = load(algebra)?;
    let gate = check_identities(&c, &SampleSpec::default().pairs(c.spec(), 8));
    if let Some(f) = gate.failure {
        return Err(Failure::Construction(format!(
            "not a Cayley algebra: {} fails at x = {}, y = {}",
            f.identity,
            cayley_core::linalg::format_vector(&f.x),
            cayley_core::linalg::format_vector(&f.y)
        )));
    }
    let s = DerivationSpaces::compute(&c);
    let spaces = [("der", &s.der), ("so", &s.skew), ("locder", &s.locder)];
    let text = match format {
        Format::Text => {
            let mut out = format!("der={} so={} locder={}\n", s.der.dim(), s.skew.dim(), s.locder.dim());
            if emit_basis {
                for (name, space) in spaces {
                    for (k, m) in space.basis_maps().iter().enumerate() {
                        out.push_str(&format!("{name}[{k}] = {}\n", format_matrix(m)));
                    }
                }
            }
            out
        }
        Format::Json => {
            let mut doc = serde_json::Map::new();
            for (name, space) in spaces {
                doc.insert(name.into(), space.dim().into());
            }
            doc.insert("so_c0".into(), s.so_c0.dim().into());
            if emit_basis {
                let mut bases = serde_json::Map::new();
                for (name, space) in spaces {
                    let maps: Vec<Vec<Vec<String>>> = space
                        .basis_maps()
                        .iter()
                        .map(|m| m.row_vectors().iter().map(|r| r.iter().map(|x| x.to_string()).collect()).collect())
                        .collect();
                    bases.insert(name.into(), serde_json::to_value(maps).expect("strings serialize"));
                }
                doc.insert("bases".into(), bases.into());
            }
            serde_json::to_string_pretty(&doc).expect("plain data serializes") + "\n"
        }
    };
    emit(&text, output)
}

fn verify(
    algebra: &AlgebraArgs,
    suite: &str,
    samples: SampleSpec,
    format: Format,
    output: &Option<PathBuf>,
) -> Result<(), Failure> {
    let suites: Vec<Suite> = if suite == "all" {
        Suite::ALL.to_vec()
    } else {
        vec![Suite::from_key(suite).ok_or_else(|| Failure::Usage(format!("unknown suite {suite:?}")))?]
    };
    let (c, id) = load(algebra)?;
    let report = VerificationReport::run(&Subject::new(c), &id, &suites, &samples);
    let text = match format {
        Format::Text => report.to_text(),
        Format::Json => report.to_json() + "\n",
    };
    emit(&text, output)?;
    if report.failed() {
        Err(Failure::Verification)
    } else {
        Ok(())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Build { algebra, output } => {
            load(algebra).and_then(|(c, _)| emit(&(algebra_to_json(&c) + "\n"), output))
        }
        Command::Der {
            algebra,
            emit_basis,
            format,
            output,
        } => der(algebra, *emit_basis, *format, output),
        Command::Verify {
            algebra,
            suite,
            seed,
            samples,
            format,
            output,
        } => verify(algebra, suite, SampleSpec::new(*seed, *samples), *format, output),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => f.report(),
    }
}
