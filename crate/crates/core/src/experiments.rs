//! Error measurement harness: the six classical interpolation test
//! functions, L1 interpolation errors over a mesh, refinement studies with
//! empirical convergence orders, and deterministic CSV/Markdown rendering of
//! the results.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::meshkit::{uniform_grid_mesh, Point2, TriMesh};
use crate::operators::{interpolate_global, Scheme};
use crate::quadrature::{integrate_on_triangle, TriangleRuleConfig};
use crate::scalar::Real;

/// The six classical smooth test functions on the unit square used by the
/// error studies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TestFunction {
    /// `sin(2 pi x) cos(2 pi y) / 2`
    F1,
    /// `1 / (x^2 + y^2 + 8)`
    F2,
    /// `exp(-81/16 ((x-1/2)^2 + (y-1/2)^2)) / 3`
    F3,
    /// `sqrt(64 - 81 ((x-1/2)^2 + (y-1/2)^2)) / 9 - 1/2`
    F4,
    /// `exp(x + y)`
    F5,
    /// `1 / (x^2 + y^2 + 25)`
    F6,
}

impl TestFunction {
    pub const ALL: [TestFunction; 6] = [
        TestFunction::F1,
        TestFunction::F2,
        TestFunction::F3,
        TestFunction::F4,
        TestFunction::F5,
        TestFunction::F6,
    ];

    /// Evaluates the function at a point (meaningful on `[0, 1]^2`).
    pub fn eval<T: Real>(&self, p: Point2<T>) -> T {
        let x = p.x;
        let y = p.y;
        let half = T::of(0.5);
        match self {
            TestFunction::F1 => {
                let tau = T::of(std::f64::consts::TAU);
                half * (tau * x).sin() * (tau * y).cos()
            }
            TestFunction::F2 => (x * x + y * y + T::of(8.0)).recip(),
            TestFunction::F3 => {
                let dx = x - half;
                let dy = y - half;
                ((-T::of(81.0 / 16.0)) * (dx * dx + dy * dy)).exp() / T::of(3.0)
            }
            TestFunction::F4 => {
                let dx = x - half;
                let dy = y - half;
                (T::of(64.0) - T::of(81.0) * (dx * dx + dy * dy)).sqrt() / T::of(9.0) - half
            }
            TestFunction::F5 => (x + y).exp(),
            TestFunction::F6 => (x * x + y * y + T::of(25.0)).recip(),
        }
    }

    /// The conventional name `f1` .. `f6`.
    pub fn name(&self) -> &'static str {
        match self {
            TestFunction::F1 => "f1",
            TestFunction::F2 => "f2",
            TestFunction::F3 => "f3",
            TestFunction::F4 => "f4",
            TestFunction::F5 => "f5",
            TestFunction::F6 => "f6",
        }
    }

    /// Parses `f1` .. `f6` (case-insensitive).
    pub fn from_name(name: &str) -> Result<Self> {
        let lower = name.trim().to_ascii_lowercase();
        Self::ALL
            .iter()
            .copied()
            .find(|f| f.name() == lower)
            .ok_or_else(|| {
                Error::argument(format!(
                    "unknown test function {name:?}, expected one of f1..f6"
                ))
            })
    }
}

impl std::fmt::Display for TestFunction {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// L1 distance between `f` and its piecewise interpolant:
/// `sum_T int_T |f - Pi_T f| dA`, cells summed in index order.
pub fn l1_error<T, F>(
    mesh: &TriMesh<T>,
    scheme: &Scheme<T>,
    f: F,
    quad: &TriangleRuleConfig,
) -> Result<T>
where
    T: Real,
    F: Fn(Point2<T>) -> T,
{
    let approximant = interpolate_global(mesh, scheme, &f)?;
    let mut total = T::zero();
    for i in 0..mesh.triangle_count() {
        let tri = mesh.triangle(i);
        let local = approximant.local(i);
        let diff = |p: Point2<T>| (f(p) - local.eval_bary(&tri.barycentric_at(p))).abs();
        total = total + integrate_on_triangle(&tri, diff, quad);
    }
    Ok(total)
}

/// One measured error value.
#[derive(Debug, Clone, PartialEq)]
pub struct ErrorRecord<T> {
    /// Mesh identifier, e.g. `grid19` or a file stem.
    pub mesh_label: String,
    /// Number of triangles `N`.
    pub triangle_count: usize,
    /// Scheme the error was measured for.
    pub scheme: Scheme<T>,
    /// Test function.
    pub function: TestFunction,
    /// L1 interpolation error.
    pub l1_error: T,
    /// Empirical convergence order with respect to the previous refinement
    /// level, present only in refinement studies.
    pub order: Option<T>,
}

/// Result set of an error study, renderable as CSV or Markdown.
#[derive(Debug, Clone, PartialEq)]
pub struct ErrorReport<T> {
    pub records: Vec<ErrorRecord<T>>,
}

/// Measures the L1 interpolation error of every scheme/function combination
/// on one mesh. Records appear scheme-major in the given order.
pub fn error_table<T: Real>(
    mesh: &TriMesh<T>,
    mesh_label: &str,
    schemes: &[Scheme<T>],
    functions: &[TestFunction],
    quad: &TriangleRuleConfig,
) -> Result<ErrorReport<T>> {
    if schemes.is_empty() || functions.is_empty() {
        return Err(Error::argument(
            "error table needs at least one scheme and one function",
        ));
    }
    let mut records = Vec::with_capacity(schemes.len() * functions.len());
    for scheme in schemes {
        for &function in functions {
            let err = l1_error(mesh, scheme, |p| function.eval(p), quad)?;
            records.push(ErrorRecord {
                mesh_label: mesh_label.to_string(),
                triangle_count: mesh.triangle_count(),
                scheme: *scheme,
                function,
                l1_error: err,
                order: None,
            });
        }
    }
    Ok(ErrorReport { records })
}

/// Runs [`error_table`] on a sequence of structured grids of increasing
/// resolution and attaches empirical convergence orders
/// `log(E_prev / E_cur) / log(n_cur / n_prev)` to every record beyond the
/// first level.
pub fn convergence_study<T: Real>(
    grid_sizes: &[usize],
    schemes: &[Scheme<T>],
    functions: &[TestFunction],
    quad: &TriangleRuleConfig,
) -> Result<ErrorReport<T>> {
    if grid_sizes.len() < 2 {
        return Err(Error::argument(
            "a convergence study needs at least two grid sizes",
        ));
    }
    if grid_sizes.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::argument("grid sizes must be strictly increasing"));
    }
    let mut records: Vec<ErrorRecord<T>> = Vec::new();
    let mut previous: Vec<(usize, T)> = Vec::new(); // (grid n, error) per combo
    for (level, &n) in grid_sizes.iter().enumerate() {
        let mesh = uniform_grid_mesh::<T>(n)?;
        let table = error_table(&mesh, &format!("grid{n}"), schemes, functions, quad)?;
        for (combo, mut record) in table.records.into_iter().enumerate() {
            if level == 0 {
                previous.push((n, record.l1_error));
            } else {
                let (n_prev, e_prev) = previous[combo];
                let ratio = T::of(n) / T::of(n_prev);
                record.order = Some((e_prev / record.l1_error).ln() / ratio.ln());
                previous[combo] = (n, record.l1_error);
            }
            records.push(record);
        }
    }
    Ok(ErrorReport { records })
}

/// Output format for [`table_emit`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableFormat {
    Csv,
    Markdown,
}

/// Renders a report deterministically.
///
/// CSV is one row per record with columns
/// `mesh,N,scheme,param,function,l1_error` plus `order` when any record has
/// one. Markdown pivots: a single-mesh report becomes one table with
/// functions as rows and schemes as columns; a multi-mesh report lists one
/// row per scheme/function pair with an error column per mesh and an order
/// column after each refinement. Errors are printed with four significant
/// digits.
pub fn table_emit<T: Real>(report: &ErrorReport<T>, format: TableFormat) -> String {
    match format {
        TableFormat::Csv => emit_csv(report),
        TableFormat::Markdown => emit_markdown(report),
    }
}

fn scheme_param_string<T: Real>(scheme: &Scheme<T>) -> String {
    match scheme.family() {
        None => String::new(),
        Some(fam) => format!("{}", fam.exponent()),
    }
}

fn emit_csv<T: Real>(report: &ErrorReport<T>) -> String {
    let with_order = report.records.iter().any(|r| r.order.is_some());
    let mut out = String::from("mesh,N,scheme,param,function,l1_error");
    if with_order {
        out.push_str(",order");
    }
    out.push('\n');
    for r in &report.records {
        let _ = write!(
            out,
            "{},{},{},{},{},{:.3e}",
            r.mesh_label,
            r.triangle_count,
            r.scheme.kind_name(),
            scheme_param_string(&r.scheme),
            r.function,
            r.l1_error
        );
        if with_order {
            out.push(',');
            if let Some(order) = r.order {
                let _ = write!(out, "{order:.3}");
            }
        }
        out.push('\n');
    }
    out
}

fn push_unique(list: &mut Vec<String>, item: &str) {
    if !list.iter().any(|x| x == item) {
        list.push(item.to_string());
    }
}

fn emit_markdown<T: Real>(report: &ErrorReport<T>) -> String {
    let mut meshes: Vec<String> = Vec::new();
    let mut schemes: Vec<String> = Vec::new();
    let mut functions: Vec<String> = Vec::new();
    for r in &report.records {
        push_unique(&mut meshes, &r.mesh_label);
        push_unique(&mut schemes, &r.scheme.label());
        push_unique(&mut functions, r.function.name());
    }
    let find = |mesh: &str, scheme: &str, function: &str| {
        report.records.iter().find(|r| {
            r.mesh_label == mesh && r.scheme.label() == scheme && r.function.name() == function
        })
    };

    let mut out = String::new();
    if meshes.len() == 1 {
        let mesh = &meshes[0];
        let n = report.records[0].triangle_count;
        let _ = writeln!(out, "L1 interpolation errors on {mesh} (N = {n})");
        let _ = writeln!(out);
        let _ = write!(out, "| function |");
        for s in &schemes {
            let _ = write!(out, " {s} |");
        }
        let _ = writeln!(out);
        let _ = write!(out, "| --- |");
        for _ in &schemes {
            let _ = write!(out, " --- |");
        }
        let _ = writeln!(out);
        for f in &functions {
            let _ = write!(out, "| {f} |");
            for s in &schemes {
                match find(mesh, s, f) {
                    Some(r) => {
                        let _ = write!(out, " {:.3e} |", r.l1_error);
                    }
                    None => {
                        let _ = write!(out, " - |");
                    }
                }
            }
            let _ = writeln!(out);
        }
    } else {
        let _ = writeln!(out, "L1 interpolation errors under refinement");
        let _ = writeln!(out);
        let _ = write!(out, "| scheme | function |");
        for (i, m) in meshes.iter().enumerate() {
            let _ = write!(out, " {m} |");
            if i > 0 {
                let _ = write!(out, " order |");
            }
        }
        let _ = writeln!(out);
        let _ = write!(out, "| --- | --- |");
        for i in 0..meshes.len() {
            let _ = write!(out, " --- |");
            if i > 0 {
                let _ = write!(out, " --- |");
            }
        }
        let _ = writeln!(out);
        for s in &schemes {
            for f in &functions {
                let _ = write!(out, "| {s} | {f} |");
                for (i, m) in meshes.iter().enumerate() {
                    match find(m, s, f) {
                        Some(r) => {
                            let _ = write!(out, " {:.3e} |", r.l1_error);
                            if i > 0 {
                                match r.order {
                                    Some(o) => {
                                        let _ = write!(out, " {o:.2} |");
                                    }
                                    None => {
                                        let _ = write!(out, " - |");
                                    }
                                }
                            }
                        }
                        None => {
                            let _ = write!(out, " - |");
                            if i > 0 {
                                let _ = write!(out, " - |");
                            }
                        }
                    }
                }
                let _ = writeln!(out);
            }
        }
    }
    out
}
