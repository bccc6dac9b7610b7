//! Command-line front end: plane construction and validation, statement
//! checking, counterexample search, implication-lattice verification,
//! translation chains and incidence-matrix import/export.
//!
//! Exit status: 0 on success (verdict holds, task done, nothing found);
//! 1 when a check fails or a counterexample is found; 2 on usage or input
//! errors.

use clap::{Args, Parser, Subcommand, ValueEnum};
use planelab_core::chain::{parse_rat_pair, parse_triangle};
use planelab_core::*;
use std::fmt::Write as _;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "planelab",
    about = "Exact incidence-geometry laboratory: plane models, configuration statements, counterexample search",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Kv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    Auto,
    Exhaustive,
    Sampled,
}

#[derive(Args)]
struct CheckArgs {
    /// Library plane: pg2..pg16, moulton, hall9.
    #[arg(long)]
    plane: String,
    /// Statement tag: D, HD, LD, wLD, cwLD, wD, cD, P, PB, pP, sPP, LP.
    /// Required for `check`, ignored by `scan`.
    #[arg(long)]
    statement: Option<String>,
    #[arg(long, value_enum, default_value_t = Mode::Auto)]
    mode: Mode,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Sampled-instance budget.
    #[arg(long, default_value_t = 10_000)]
    budget: u64,
    /// Worker threads (0 = all cores).
    #[arg(long, default_value_t = 0)]
    jobs: usize,
    /// Instance cap under which auto mode goes exhaustive.
    #[arg(long, default_value_t = 10_000_000)]
    exhaustive_cap: u128,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Subcommand)]
enum Command {
    /// Build or validate plane models.
    Plane {
        #[command(subcommand)]
        action: PlaneAction,
    },
    /// Check one statement on one plane.
    Check(CheckArgs),
    /// Check all twelve statements on one plane.
    Scan(CheckArgs),
    /// Build truth vectors for several planes and verify the implication
    /// lattice.
    Implications {
        /// Comma-separated plane names.
        #[arg(long)]
        planes: String,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 10_000)]
        budget: u64,
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        #[arg(long, default_value_t = 10_000_000)]
        exhaustive_cap: u128,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Search for a counterexample with a seeded deterministic sampler.
    Counterexample {
        #[arg(long)]
        plane: String,
        #[arg(long)]
        statement: String,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 1_000_000)]
        budget: u64,
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Build and verify a triangle translation chain.
    Chain {
        /// Base triangle "ax,ay;bx,by;cx,cy" (exact rationals).
        #[arg(long, allow_hyphen_values = true)]
        triangle: String,
        /// Target translation "tx,ty".
        #[arg(long, allow_hyphen_values = true)]
        target: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Export a finite plane's incidence matrix.
    Export {
        #[arg(long)]
        plane: String,
        #[arg(long)]
        out: std::path::PathBuf,
    },
    /// Load a matrix, dualize it, write the transpose.
    Dualize {
        #[arg(long = "in")]
        input: std::path::PathBuf,
        #[arg(long)]
        out: std::path::PathBuf,
    },
}

#[derive(Subcommand)]
enum PlaneAction {
    /// Construct a library plane and report its parameters.
    Build {
        #[command(subcommand)]
        model: PlaneModel,
    },
    /// Validate the incidence axioms of a matrix file.
    Validate {
        #[arg(long = "in")]
        input: std::path::PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Subcommand)]
enum PlaneModel {
    /// Desarguesian plane over GF(q).
    Pg {
        #[arg(long)]
        q: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// The rational Moulton plane.
    Moulton {
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// The Hall plane of order 9.
    Hall9 {
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<ExitCode> {
    match command {
        Command::Plane { action } => plane_command(action),
        Command::Check(args) => check_command(args, false),
        Command::Scan(args) => check_command(args, true),
        Command::Implications {
            planes,
            seed,
            budget,
            jobs,
            exhaustive_cap,
            format,
        } => implications_command(&planes, seed, budget, jobs, exhaustive_cap, format),
        Command::Counterexample {
            plane,
            statement,
            seed,
            budget,
            jobs,
            format,
        } => counterexample_command(&plane, &statement, seed, budget, jobs, format),
        Command::Chain {
            triangle,
            target,
            format,
        } => chain_command(&triangle, &target, format),
        Command::Export { plane, out } => {
            let plane = library_plane(&plane)?;
            let structure = plane.structure().ok_or(Error::NotFinite)?;
            let text = export_incidence_matrix(structure);
            write_file(&out, &text)?;
            println!(
                "wrote {} ({} points, {} lines)",
                out.display(),
                structure.n_points(),
                structure.n_lines()
            );
            Ok(ExitCode::SUCCESS)
        }
        Command::Dualize { input, out } => {
            let text = read_file(&input)?;
            let structure = load_incidence_matrix(&text)?;
            let dual = structure.dualize()?;
            write_file(&out, &export_incidence_matrix(&dual))?;
            println!(
                "wrote {} ({} points, {} lines)",
                out.display(),
                dual.n_points(),
                dual.n_lines()
            );
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn read_file(path: &std::path::Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Parse {
        line: 0,
        column: 0,
        message: format!("{}: {}", path.display(), e),
    })
}

fn write_file(path: &std::path::Path, text: &str) -> Result<()> {
    std::fs::write(path, text).map_err(|e| Error::Parse {
        line: 0,
        column: 0,
        message: format!("{}: {}", path.display(), e),
    })
}

fn plane_summary(plane: &PlaneHandle, format: Format) -> String {
    let mut out = String::new();
    match format {
        Format::Kv => {
            let _ = writeln!(out, "plane={}", plane.descriptor());
            match plane.structure() {
                Some(s) => {
                    let report = s.validate_axioms();
                    let _ = writeln!(out, "points={}", s.n_points());
                    let _ = writeln!(out, "lines={}", s.n_lines());
                    let _ = writeln!(out, "points_per_line={}", s.points_on_line(0).len());
                    let _ = writeln!(out, "pi1={}", report.pi1_ok);
                    let _ = writeln!(out, "pi2={}", report.pi2_ok);
                    let _ = writeln!(out, "pi3={}", report.pi3_ok);
                }
                None => {
                    let _ = writeln!(out, "points=infinite");
                    let _ = writeln!(out, "lines=infinite");
                }
            }
        }
        Format::Text => match plane.structure() {
            Some(s) => {
                let report = s.validate_axioms();
                let _ = writeln!(
                    out,
                    "{}: {} points, {} lines, {} points per line; axioms {}",
                    plane.descriptor(),
                    s.n_points(),
                    s.n_lines(),
                    s.points_on_line(0).len(),
                    if report.all_ok() { "ok" } else { "VIOLATED" }
                );
            }
            None => {
                let _ = writeln!(
                    out,
                    "{}: generative plane over exact rationals (infinitely many points)",
                    plane.descriptor()
                );
            }
        },
    }
    out
}

fn plane_command(action: PlaneAction) -> Result<ExitCode> {
    match action {
        PlaneAction::Build { model } => {
            let (plane, format) = match model {
                PlaneModel::Pg { q, format } => (build_pg(q)?, format),
                PlaneModel::Moulton { format } => (build_moulton(), format),
                PlaneModel::Hall9 { format } => (build_hall9()?, format),
            };
            print!("{}", plane_summary(&plane, format));
            Ok(ExitCode::SUCCESS)
        }
        PlaneAction::Validate { input, format } => {
            let text = read_file(&input)?;
            let structure = load_incidence_matrix(&text)?;
            let report = structure.validate_axioms();
            match format {
                Format::Kv => {
                    println!("points={}", structure.n_points());
                    println!("lines={}", structure.n_lines());
                    println!("pi1={}", report.pi1_ok);
                    println!("pi2={}", report.pi2_ok);
                    println!("pi3={}", report.pi3_ok);
                    println!("violations={}", report.violations_total);
                    for (i, v) in report.violations.iter().enumerate() {
                        println!("violation.{}={:?}", i, v);
                    }
                }
                Format::Text => {
                    println!(
                        "{} points, {} lines: PI1 {}, PI2 {}, PI3 {} ({} violations)",
                        structure.n_points(),
                        structure.n_lines(),
                        report.pi1_ok,
                        report.pi2_ok,
                        report.pi3_ok,
                        report.violations_total
                    );
                    for v in &report.violations {
                        println!("  {:?}", v);
                    }
                }
            }
            Ok(if report.all_ok() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
    }
}

fn resolve_check_mode(
    plane: &PlaneHandle,
    statement: Statement,
    mode: Mode,
    seed: u64,
    budget: u64,
    exhaustive_cap: u128,
) -> Result<CheckMode> {
    match mode {
        Mode::Exhaustive => {
            if !plane.is_finite() {
                return Err(Error::ExhaustiveOnInfinitePlane);
            }
            Ok(CheckMode::Exhaustive)
        }
        Mode::Sampled => Ok(CheckMode::Sampled { seed, budget }),
        Mode::Auto => Ok(lattice::resolve_mode(
            plane,
            statement,
            VectorMode::Auto {
                seed,
                budget,
                exhaustive_cap,
            },
        )),
    }
}

fn print_report(plane: &PlaneHandle, report: &CheckReport, format: Format) {
    match format {
        Format::Kv => print!("{}", report.to_kv(plane)),
        Format::Text => {
            println!(
                "{} on {}: {} ({} mode, {} instances, {} degenerate skipped, {} violations)",
                report.statement.tag(),
                report.plane,
                report.verdict,
                report.mode,
                report.instances_checked,
                report.degenerate_skipped,
                report.violations_total
            );
            if report.center_on_side > 0 {
                println!(
                    "  center on a side line in {} instances (counted, not excluded)",
                    report.center_on_side
                );
            }
            for w in &report.witnesses {
                println!("  witness ({}):", w.failed_conclusion);
                for line in w.to_kv(plane).lines() {
                    println!("    {}", line);
                }
            }
        }
    }
}

fn check_command(args: CheckArgs, scan_all: bool) -> Result<ExitCode> {
    let plane = library_plane(&args.plane)?;
    let opts = CheckOptions {
        jobs: args.jobs,
        ..CheckOptions::default()
    };
    let statements: Vec<Statement> = if scan_all {
        Statement::ALL.to_vec()
    } else {
        let tag = args
            .statement
            .as_deref()
            .ok_or_else(|| Error::UnknownStatement("missing --statement".into()))?;
        vec![tag.parse()?]
    };
    let mut any_fails = false;
    for st in statements {
        let mode = resolve_check_mode(
            &plane,
            st,
            args.mode,
            args.seed,
            args.budget,
            args.exhaustive_cap,
        )?;
        let report = check_statement_opts(&plane, st, mode, &opts)?;
        any_fails |= report.verdict == Verdict::Fails;
        print_report(&plane, &report, args.format);
    }
    Ok(if any_fails {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    })
}

fn implications_command(
    planes: &str,
    seed: u64,
    budget: u64,
    jobs: usize,
    exhaustive_cap: u128,
    format: Format,
) -> Result<ExitCode> {
    let opts = CheckOptions {
        jobs,
        ..CheckOptions::default()
    };
    let mut vectors = Vec::new();
    for name in planes.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let plane = library_plane(name)?;
        let vector = truth_vector_opts(
            &plane,
            VectorMode::Auto {
                seed,
                budget,
                exhaustive_cap,
            },
            &opts,
        )?;
        vectors.push(vector);
    }
    let report = check_lattice(&vectors);
    match format {
        Format::Kv => print!("{}", consistency_kv(&vectors, &report)),
        Format::Text => print!("{}", render_consistency(&vectors, &report)),
    }
    Ok(if report.violations.is_empty() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn counterexample_command(
    plane: &str,
    statement: &str,
    seed: u64,
    budget: u64,
    jobs: usize,
    format: Format,
) -> Result<ExitCode> {
    let plane = library_plane(plane)?;
    let statement: Statement = statement.parse()?;
    let opts = CheckOptions {
        jobs,
        ..CheckOptions::default()
    };
    match find_counterexample_opts(&plane, statement, budget, seed, &opts)? {
        Some(witness) => {
            match format {
                Format::Kv => print!("{}", witness.to_kv(&plane)),
                Format::Text => {
                    println!(
                        "counterexample to {} on {} ({}):",
                        statement.tag(),
                        plane.descriptor(),
                        witness.failed_conclusion
                    );
                    for line in witness.to_kv(&plane).lines() {
                        println!("  {}", line);
                    }
                }
            }
            Ok(ExitCode::from(1))
        }
        None => {
            match format {
                Format::Kv => println!("witness=absent"),
                Format::Text => println!(
                    "no counterexample to {} on {} within budget {}",
                    statement.tag(),
                    plane.descriptor(),
                    budget
                ),
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn chain_command(triangle: &str, target: &str, format: Format) -> Result<ExitCode> {
    let base = parse_triangle(triangle).ok_or_else(|| Error::Parse {
        line: 0,
        column: 0,
        message: format!(
            "invalid triangle `{triangle}` (expected ax,ay;bx,by;cx,cy with rational entries and a nonzero area)"
        ),
    })?;
    let target = parse_rat_pair(target).ok_or_else(|| Error::Parse {
        line: 0,
        column: 0,
        message: format!("invalid target `{target}` (expected tx,ty)"),
    })?;
    let chain = build_chain(&base, &target)?;
    let report = verify_chain(&chain);
    match format {
        Format::Kv => {
            print!("{}", chain_to_kv(&chain));
            println!("verified={}", report.ok);
            println!("length_bound={}", length_bound(&base, &target));
        }
        Format::Text => {
            println!(
                "chain of {} steps (bound {}), verified: {}",
                report.length,
                length_bound(&base, &target),
                report.ok
            );
            print!("{}", chain_to_kv(&chain));
        }
    }
    Ok(ExitCode::SUCCESS)
}
