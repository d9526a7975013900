use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use schubert_ic::decomposition::{stalk_table, summand_table};
use schubert_ic::schur::{lr_multiply, pieri_column, pieri_row, render_terms, RingSpec, SchurVector};
use schubert_ic::verify::{Fault, VerifyOptions};
use schubert_ic::{Partition, SchubertInput};
use schubert_ic_cli::input::{enum_limit_from_env, parse_input};
use schubert_ic_cli::report::{render_perverse, render_summands, Report};
use schubert_ic_cli::sweep::run_sweep;
use schubert_ic_cli::CliError;

/// Intersection cohomology and Decomposition Theorem data for special
/// Schubert varieties S = {V ∈ Gr_k(C^l) : dim(V ∩ C^j) ≥ i}.
#[derive(Debug, Parser)]
#[command(name = "schubert", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

/// `i j k l`, also accepted as `(i,j,k,l)`.
#[derive(Debug, clap::Args)]
struct InputArgs {
    #[arg(required = true, num_args = 1..=4, allow_negative_numbers = true, value_name = "I J K L")]
    input: Vec<String>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
    Latex,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum InjectedFault {
    GaussianRecurrence,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check the constraints 0 < i < k <= j < l and k - i < l - j.
    Validate(InputArgs),
    /// Full report: invariants, IH, summands, perverse table, stalks, checks.
    Analyze {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Write the report here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Intersection cohomology Poincaré polynomials I_p.
    Ih {
        #[command(flatten)]
        input: InputArgs,
        #[arg(short)]
        p: Option<i64>,
    },
    /// IC stalk polynomials of Δ_p along Δ_q.
    Stalks {
        #[command(flatten)]
        input: InputArgs,
        #[arg(short)]
        p: Option<i64>,
        #[arg(short)]
        q: Option<i64>,
    },
    /// Perverse cohomology table of the top resolution.
    Perverse(InputArgs),
    /// Decomposition summands of each resolution π_p.
    Summands {
        #[command(flatten)]
        input: InputArgs,
        #[arg(short)]
        p: Option<i64>,
    },
    /// Products in H^*(Gr) truncated to a rows × cols rectangle.
    Ring {
        #[arg(long)]
        rows: usize,
        #[arg(long)]
        cols: usize,
        #[command(subcommand)]
        op: RingOp,
    },
    /// Run every check over all valid inputs with l <= max-l.
    Verify {
        #[arg(long, default_value_t = 10, value_parser = clap::value_parser!(i64).range(1..))]
        max_l: i64,
        /// Worker threads; output does not depend on this.
        #[arg(long, value_parser = clap::value_parser!(u16).range(1..))]
        jobs: Option<u16>,
        /// Write one row per (input, check) to this CSV file.
        #[arg(long)]
        csv: Option<PathBuf>,
        #[arg(long, value_enum, hide = true)]
        inject_fault: Option<InjectedFault>,
    },
}

#[derive(Debug, Subcommand)]
enum RingOp {
    /// σ_λ · σ_μ by Littlewood-Richardson.
    Mult { lambda: String, mu: String },
    /// σ_λ · σ_(m).
    PieriRow { lambda: String, m: usize },
    /// σ_λ · σ_(1^m).
    PieriCol { lambda: String, m: usize },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            if !matches!(e, CliError::Verify(_)) {
                eprintln!("error: {e}");
            }
            ExitCode::from(e.exit_code())
        }
    }
}

fn options() -> Result<VerifyOptions, CliError> {
    Ok(VerifyOptions {
        limit: enum_limit_from_env()?,
        fault: None,
    })
}

fn emit(text: &str) -> Result<(), CliError> {
    let mut stdout = io::stdout().lock();
    stdout
        .write_all(text.as_bytes())
        .and_then(|()| stdout.flush())
        .map_err(|source| CliError::Io {
            path: PathBuf::from("<stdout>"),
            source,
        })
}

fn write_file(path: &Path, text: &str) -> Result<(), CliError> {
    fs::write(path, text).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn input(args: &InputArgs) -> Result<SchubertInput, CliError> {
    parse_input(&args.input)
}

fn partition(text: &str) -> Result<Partition, CliError> {
    Ok(text.parse::<Partition>()?)
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Validate(args) => {
            let s = input(&args)?;
            emit(&format!("valid {s}: r = {}, c = {}, {}\n", s.r(), s.c(), s.regime()))
        }
        Command::Analyze { input: args, format, out } => {
            let s = input(&args)?;
            let report = Report::build(&s, &options()?);
            let text = match format {
                Format::Text => report.render_text(),
                Format::Json => report.render_json(),
                Format::Latex => report.render_latex(),
            };
            match out {
                Some(path) => write_file(&path, &text)?,
                None => emit(&text)?,
            }
            let failed: Vec<&str> = report.failed_checks().map(|c| c.name).collect();
            if failed.is_empty() {
                Ok(())
            } else {
                eprintln!("failed checks: {}", failed.join(", "));
                Err(CliError::Verify(failed.join(", ")))
            }
        }
        Command::Ih { input: args, p } => {
            let s = input(&args)?;
            let table = schubert_ic::decomposition::ih_recursion(&s);
            match p {
                Some(p) => {
                    s.check_stratum(p)?;
                    emit(&format!("{}\n", table.ih(p)))
                }
                None => emit(
                    &(1..=s.strata())
                        .map(|p| format!("I_{p} = {}\n", table.ih(p)))
                        .collect::<String>(),
                ),
            }
        }
        Command::Stalks { input: args, p, q } => {
            let s = input(&args)?;
            if let (Some(p), Some(q)) = (p, q) {
                return emit(&format!("{}\n", stalk_table(&s, p, q)?));
            }
            if let Some(p) = p {
                s.check_stratum(p)?;
            }
            if let Some(q) = q {
                s.check_stratum(q)?;
            }
            let mut out = String::new();
            for pp in 2..=s.strata() {
                for qq in 1..pp {
                    if p.is_none_or(|x| x == pp) && q.is_none_or(|x| x == qq) {
                        out.push_str(&format!("({pp},{qq}): {}\n", stalk_table(&s, pp, qq)?));
                    }
                }
            }
            emit(&out)
        }
        Command::Perverse(args) => {
            let s = input(&args)?;
            emit(&render_perverse(&schubert_ic::decomposition::perverse_table(&s)))
        }
        Command::Summands { input: args, p } => {
            let s = input(&args)?;
            let tables = match p {
                Some(p) => vec![summand_table(&s, p)?],
                None => (1..=s.strata())
                    .map(|p| summand_table(&s, p))
                    .collect::<Result<Vec<_>, _>>()?,
            };
            emit(&render_summands(&tables))
        }
        Command::Ring { rows, cols, op } => {
            let spec = RingSpec::new(rows, cols);
            let product = match op {
                RingOp::Mult { lambda, mu } => {
                    let a = SchurVector::basis(spec, partition(&lambda)?)?;
                    let b = SchurVector::basis(spec, partition(&mu)?)?;
                    lr_multiply(spec, &a, &b)?
                }
                RingOp::PieriRow { lambda, m } => pieri_row(spec, &partition(&lambda)?, m)?,
                RingOp::PieriCol { lambda, m } => pieri_column(spec, &partition(&lambda)?, m)?,
            };
            emit(&format!("{}\n", render_terms(&product)))
        }
        Command::Verify {
            max_l,
            jobs,
            csv,
            inject_fault,
        } => {
            let mut opts = options()?;
            opts.fault = inject_fault.map(|InjectedFault::GaussianRecurrence| Fault::GaussianRecurrence);
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(jobs.map_or(0, usize::from))
                .build()
                .map_err(|e| CliError::Input(format!("cannot start worker pool: {e}")))?;
            let sweep = pool.install(|| run_sweep(max_l, &opts));
            if let Some(path) = csv {
                let file = fs::File::create(&path).map_err(|source| CliError::Io { path, source })?;
                sweep.write_csv(io::BufWriter::new(file))?;
            }
            emit(&sweep.summary())?;
            if sweep.passed() {
                Ok(())
            } else {
                Err(CliError::Verify(String::from("see summary")))
            }
        }
    }
}
