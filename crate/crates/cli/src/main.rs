//! `crenrich` — command-line front end for the enriched triangular
//! interpolation toolkit: error tables on a mesh, convergence studies over
//! grid sequences, and a numeric verification battery for the element
//! algebra.

mod verify;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use crenrich::experiments::{
    convergence_study, error_table, table_emit, ErrorReport, TableFormat, TestFunction,
};
use crenrich::meshkit::load_triangle_mesh;
use crenrich::operators::Scheme;
use crenrich::quadrature::TriangleRuleConfig;
use crenrich::{Error, TriMesh};

/// Exit codes: 0 success, 1 numeric or verification failure, 2 invalid
/// configuration, 3 mesh file problems.
struct CliError {
    code: u8,
    message: String,
}

impl CliError {
    fn config(message: impl Into<String>) -> Self {
        CliError {
            code: 2,
            message: message.into(),
        }
    }

    fn mesh(message: impl Into<String>) -> Self {
        CliError {
            code: 3,
            message: message.into(),
        }
    }
}

impl From<Error> for CliError {
    fn from(err: Error) -> Self {
        let code = match err {
            Error::Parse { .. } => 3,
            Error::Numeric(_) => 1,
            _ => 2,
        };
        CliError {
            code,
            message: err.to_string(),
        }
    }
}

#[derive(Parser)]
#[command(
    name = "crenrich",
    version,
    about = "Edge-mean triangular interpolation with quadratic enrichments",
    propagate_version = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// L1 interpolation errors for each scheme/function pair on one mesh.
    Table(TableArgs),
    /// Errors and observed convergence orders over a grid sequence.
    Converge(ConvergeArgs),
    /// Numeric verification battery for the element algebra.
    Verify(VerifyArgs),
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct MeshSource {
    /// Structured n x n unit-square grid (2 n^2 triangles).
    #[arg(long, value_name = "N")]
    grid: Option<usize>,
    /// Triangle-format mesh given as a .node and a .ele path.
    #[arg(long, num_args = 2, value_names = ["NODE", "ELE"])]
    mesh: Option<Vec<PathBuf>>,
}

#[derive(Args)]
struct QuadArgs {
    /// Gauss node count for the segment functionals.
    #[arg(long, value_name = "K", default_value_t = 16)]
    quad_order: usize,
    /// Refinement level of the triangle rule: 4^K subcells per triangle.
    #[arg(long, value_name = "K", default_value_t = 2)]
    subdiv: usize,
}

#[derive(Args)]
struct OutputArgs {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Md)]
    format: Format,
    /// Write the result to this file instead of standard output.
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Md,
}

#[derive(Args)]
struct TableArgs {
    #[command(flatten)]
    source: MeshSource,
    /// Comma-separated schemes: cr, c-alpha:VALUE, e-beta:VALUE; the
    /// parameter defaults to 1 when omitted.
    #[arg(
        long,
        visible_alias = "scheme",
        value_delimiter = ',',
        default_value = "cr,c-alpha:1,e-beta:1",
        value_name = "LIST"
    )]
    schemes: Vec<String>,
    /// Comma-separated test functions f1..f6; ranges like f2..f4 expand.
    #[arg(
        long,
        visible_alias = "function",
        value_delimiter = ',',
        default_value = "f1..f6",
        value_name = "LIST"
    )]
    functions: Vec<String>,
    #[command(flatten)]
    quad: QuadArgs,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct ConvergeArgs {
    /// Strictly increasing grid sizes, e.g. 19,99.
    #[arg(long, value_delimiter = ',', required = true, value_name = "N1,N2,...")]
    grids: Vec<usize>,
    /// Comma-separated schemes: cr, c-alpha:VALUE, e-beta:VALUE; the
    /// parameter defaults to 1 when omitted.
    #[arg(
        long,
        visible_alias = "scheme",
        value_delimiter = ',',
        default_value = "cr,c-alpha:1,e-beta:1",
        value_name = "LIST"
    )]
    schemes: Vec<String>,
    /// Comma-separated test functions f1..f6; ranges expand.
    #[arg(
        long,
        visible_alias = "function",
        value_delimiter = ',',
        default_value = "f1..f6",
        value_name = "LIST"
    )]
    functions: Vec<String>,
    #[command(flatten)]
    quad: QuadArgs,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct VerifyArgs {
    /// Extra vertex-to-edge-midpoint family exponents to test on top of the
    /// built-in sweep.
    #[arg(
        long,
        value_delimiter = ',',
        value_name = "LIST",
        allow_hyphen_values = true
    )]
    alpha: Vec<f64>,
    /// Extra vertex-to-centroid family exponents.
    #[arg(
        long,
        value_delimiter = ',',
        value_name = "LIST",
        allow_hyphen_values = true
    )]
    beta: Vec<f64>,
    /// Gauss node count for the segment functionals.
    #[arg(long, value_name = "K", default_value_t = 16)]
    quad_order: usize,
    /// Negative control: corrupt one closed-form constant, which must make
    /// the corresponding check fail.
    #[arg(long, hide = true)]
    inject_sigma_error: bool,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            // Help and version requests land here too; clap distinguishes
            // them through the exit code (0 vs 2).
            let code = u8::try_from(err.exit_code()).unwrap_or(2);
            let _ = err.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {}", err.message);
            ExitCode::from(err.code)
        }
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Table(args) => cmd_table(args),
        Command::Converge(args) => cmd_converge(args),
        Command::Verify(args) => cmd_verify(args),
    }
}

fn cmd_table(args: TableArgs) -> Result<(), CliError> {
    let schemes = parse_schemes(&args.schemes, args.quad.quad_order)?;
    let functions = parse_functions(&args.functions)?;
    let quad = triangle_rule(&args.quad)?;
    let (label, mesh) = acquire_mesh(&args.source)?;
    let report = error_table(&mesh, &label, &schemes, &functions, &quad)?;
    emit(&report, &args.output)
}

fn cmd_converge(args: ConvergeArgs) -> Result<(), CliError> {
    let schemes = parse_schemes(&args.schemes, args.quad.quad_order)?;
    let functions = parse_functions(&args.functions)?;
    let quad = triangle_rule(&args.quad)?;
    let report = convergence_study(&args.grids, &schemes, &functions, &quad)?;
    emit(&report, &args.output)
}

fn cmd_verify(args: VerifyArgs) -> Result<(), CliError> {
    let config = verify::VerifyConfig {
        extra_alphas: args.alpha,
        extra_betas: args.beta,
        quad_order: args.quad_order,
        inject_sigma_error: args.inject_sigma_error,
    };
    let outcomes = verify::run_battery(&config)?;
    let mut failed = 0usize;
    for outcome in &outcomes {
        println!("{outcome}");
        if !outcome.passed() {
            failed += 1;
        }
    }
    if failed == 0 {
        println!("verification: all {} checks passed", outcomes.len());
        Ok(())
    } else {
        println!("verification: {failed} of {} checks failed", outcomes.len());
        Err(CliError {
            code: 1,
            message: format!("{failed} verification check(s) failed"),
        })
    }
}

fn triangle_rule(args: &QuadArgs) -> Result<TriangleRuleConfig, CliError> {
    Ok(TriangleRuleConfig::new(5, args.subdiv)?)
}

fn parse_schemes(items: &[String], quad_order: usize) -> Result<Vec<Scheme<f64>>, CliError> {
    items
        .iter()
        .map(|item| parse_scheme(item, quad_order))
        .collect()
}

fn parse_scheme(item: &str, quad_order: usize) -> Result<Scheme<f64>, CliError> {
    let (name, param) = match item.split_once(':') {
        Some((name, value)) => (name.trim(), Some(value.trim())),
        None => (item.trim(), None),
    };
    let parse_param = |value: Option<&str>| -> Result<f64, CliError> {
        match value {
            None => Ok(1.0),
            Some(text) => text.parse().map_err(|_| {
                CliError::config(format!("invalid scheme parameter {text:?} in {item:?}"))
            }),
        }
    };
    let scheme = match name {
        "cr" => {
            if param.is_some() {
                return Err(CliError::config(format!(
                    "scheme cr takes no parameter, got {item:?}"
                )));
            }
            Scheme::cr()
        }
        "c-alpha" => Scheme::c_alpha(parse_param(param)?)?,
        "e-beta" => Scheme::e_beta(parse_param(param)?)?,
        _ => {
            return Err(CliError::config(format!(
                "unknown scheme {item:?}; expected cr, c-alpha[:VALUE] or e-beta[:VALUE]"
            )))
        }
    };
    Ok(scheme.with_dof_quadrature_order(quad_order)?)
}

fn parse_functions(items: &[String]) -> Result<Vec<TestFunction>, CliError> {
    let index_of = |f: TestFunction| {
        TestFunction::ALL
            .iter()
            .position(|&g| g == f)
            .expect("member of ALL")
    };
    let mut out: Vec<TestFunction> = Vec::new();
    let mut push = |f: TestFunction| {
        if !out.contains(&f) {
            out.push(f);
        }
    };
    for item in items {
        match item.split_once("..") {
            Some((lo, hi)) => {
                let lo = TestFunction::from_name(lo)?;
                let hi = TestFunction::from_name(hi)?;
                let (a, b) = (index_of(lo), index_of(hi));
                if a > b {
                    return Err(CliError::config(format!("empty function range {item:?}")));
                }
                for f in &TestFunction::ALL[a..=b] {
                    push(*f);
                }
            }
            None => push(TestFunction::from_name(item)?),
        }
    }
    Ok(out)
}

fn acquire_mesh(source: &MeshSource) -> Result<(String, TriMesh), CliError> {
    if let Some(n) = source.grid {
        return Ok((format!("grid{n}"), crenrich::meshkit::uniform_grid_mesh(n)?));
    }
    let paths = source
        .mesh
        .as_ref()
        .expect("clap enforces exactly one mesh source");
    let read = |path: &PathBuf| {
        std::fs::read_to_string(path)
            .map_err(|e| CliError::mesh(format!("cannot read {}: {e}", path.display())))
    };
    let node_text = read(&paths[0])?;
    let ele_text = read(&paths[1])?;
    let mesh = load_triangle_mesh(&node_text, &ele_text)
        .map_err(|e| CliError::mesh(format!("{}: {e}", paths[0].display())))?;
    let label = paths[0]
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| "mesh".to_string());
    Ok((label, mesh))
}

fn emit(report: &ErrorReport<f64>, output: &OutputArgs) -> Result<(), CliError> {
    let format = match output.format {
        Format::Csv => TableFormat::Csv,
        Format::Md => TableFormat::Markdown,
    };
    let text = table_emit(report, format);
    match &output.out {
        None => {
            print!("{text}");
            Ok(())
        }
        Some(path) => std::fs::write(path, text).map_err(|e| CliError {
            code: 1,
            message: format!("cannot write {}: {e}", path.display()),
        }),
    }
}
