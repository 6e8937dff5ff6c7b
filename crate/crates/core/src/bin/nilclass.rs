use std::collections::BTreeMap;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use nilclass::catalog::{
    catalog_dump, certificates::verify_json, real_algebra, reproduce_table, spec, FamilyIIParams,
    FamilyIParams, Manifest, TableId, TableReport,
};
use nilclass::complex::{classify_j_type, realify, standard_map, ComplexStructEqs};
use nilclass::invariants::{betti_all, casimir_count_seeded, fingerprint, Fingerprint};
use nilclass::kernel::quadext::SQRT23;
use nilclass::kernel::{
    Complex, ComplexField, Conjugate, EvalScalar, Field, Gauss, QuadExt, Radicands, Rational, Scalar, DEFAULT_SEED,
    DEFAULT_TRIALS,
};
use nilclass::lie::LieAlgebra;
use nilclass::parse::{eval_str, parse_algebra, parse_eqs, parse_map, print_algebra, Env};
use nilclass::Error;

#[derive(Parser)]
#[command(name = "nilclass", version, about = "Exact checks for nilpotent Lie algebras and their complex structures")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
    /// Parameter bindings, `k=v,...`; values are rational expressions.
    #[arg(long, global = true, default_value = "")]
    params: String,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Seed for the randomized generic-rank test.
    #[arg(long, global = true, env = "NILCLASS_SEED", default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Sample manifest for `tables`; the built-in one otherwise.
    #[arg(long, global = true)]
    samples: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

/// `ALGEBRA` is abbreviated notation, a catalog name (`g4`, `n4`, `m1`) or a file holding either.
/// `EQS` is complex equations (`dw1 = ...`), `family1`/`family2`, or a file.
#[derive(Subcommand)]
enum Cmd {
    /// Jacobi identity for an algebra, or d^2 = 0 for complex equations.
    Check { input: String },
    /// Ascending and descending central series.
    Series { algebra: String },
    /// All Betti numbers.
    Betti { algebra: String },
    /// Number of functionally independent Casimir invariants.
    Casimir { algebra: String },
    /// Invariants used to separate algebras: types, b1..b3, Casimir count, derived dimension.
    Fingerprint { algebra: String },
    /// Type of the complex structure given by complex equations.
    Jtype { eqs: String },
    /// Real structure constants and J from complex equations.
    Realify {
        eqs: String,
        /// `w<k> = ...` lines in `e1..e2n`; the standard map otherwise.
        #[arg(long)]
        map: Option<String>,
    },
    /// Verify a certificate file (one certificate or a list); `builtin` runs the shipped suite.
    Certify { file: String },
    /// Reproduce a table: T1 T2 T3 T4 T5 T8 T9 A B, or `all`.
    Tables { table: String },
    /// Dump the catalog.
    Catalog,
}

/// Input problems exit with 2; failed verifications return `Ok(false)` and exit with 1.
enum Fail {
    Input(String),
}

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail::Input(e.to_string())
    }
}

type Out = Result<bool, Fail>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Fail::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

/// Writes to stdout; a closed pipe is not an error.
fn write_out(s: &str) {
    let _ = std::io::stdout().lock().write_all(s.as_bytes());
}

fn emit<T: Serialize>(cli: &Cli, value: &T, text: impl FnOnce() -> String) -> Result<(), Fail> {
    match cli.format {
        Format::Json => {
            let s = serde_json::to_string_pretty(value).map_err(|e| Fail::Input(e.to_string()))?;
            write_out(&format!("{s}\n"));
        }
        Format::Text => write_out(&text()),
    }
    Ok(())
}

fn params(cli: &Cli) -> Result<Vec<(String, Rational)>, Fail> {
    let mut out = Vec::new();
    for kv in cli.params.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let (k, v) = kv
            .split_once('=')
            .ok_or_else(|| Fail::Input(format!("bad --params entry `{kv}`, expected k=v")))?;
        out.push((k.trim().to_string(), eval_str::<Rational>(v, &Env::new(None))?));
    }
    Ok(out)
}

fn env<S: EvalScalar>(ps: &[(String, Rational)], ctx: Radicands) -> Env<S> {
    let mut env = Env::new(ctx);
    for (k, v) in ps {
        env.bind(k, S::from_rational(v));
    }
    env
}

/// Reads `src` from disk when it names an existing file.
fn text(src: &str) -> Result<String, Fail> {
    let p = Path::new(src);
    if p.is_file() {
        std::fs::read_to_string(p).map_err(|e| Fail::Input(format!("{src}: {e}")))
    } else {
        Ok(src.to_string())
    }
}

fn algebra(cli: &Cli, src: &str) -> Result<LieAlgebra<Rational>, Fail> {
    let ps = params(cli)?;
    let src = text(src)?;
    let src = src.trim();
    if src.starts_with('(') {
        return Ok(parse_algebra(src, &env(&ps, None))?);
    }
    spec(src)?;
    let named: Vec<(&str, Rational)> = ps.iter().map(|(k, v)| (k.as_str(), v.clone())).collect();
    Ok(real_algebra(src, &named)?)
}

fn is_complex(src: &str) -> bool {
    matches!(src.trim(), "family1" | "family2") || src.contains("dw")
}

fn flag(ps: &BTreeMap<&str, &Rational>, names: &[&str]) -> Result<i64, Fail> {
    let v = names
        .iter()
        .find_map(|n| ps.get(n))
        .ok_or_else(|| Fail::Input(format!("missing parameter `{}`", names[0])))?;
    if !v.is_integer() {
        return Err(Fail::Input(format!("`{}` must be an integer", names[0])));
    }
    Ok(v.to_integer().try_into().map_err(|_| Fail::Input(format!("`{}` out of range", names[0])))?)
}

fn complex_eqs<S: EvalScalar + Conjugate>(cli: &Cli, src: &str, ctx: Radicands) -> Result<ComplexStructEqs<S>, Fail> {
    let ps = params(cli)?;
    let map: BTreeMap<&str, &Rational> = ps.iter().map(|(k, v)| (k.as_str(), v)).collect();
    let get = |n: &str| map.get(n).map(|v| (*v).clone());
    let byte = |v: i64| -> Result<u8, Fail> { u8::try_from(v).map_err(|_| Fail::Input("flags must be 0 or 1".into())) };
    match src.trim() {
        "family1" => {
            let p = FamilyIParams::new(
                byte(flag(&map, &["eps", "e"])?)?,
                byte(flag(&map, &["nu", "n"])?)?,
                flag(&map, &["delta", "d"])? as i8,
                get("a"),
                get("b"),
            )?;
            if p.a.is_none() || p.b.is_none() {
                return Err(Fail::Input("family1 needs numeric a and b".into()));
            }
            Ok(p.eqs()?)
        }
        "family2" => {
            let p = FamilyIIParams::new(
                byte(flag(&map, &["eps", "e"])?)?,
                byte(flag(&map, &["mu", "m"])?)?,
                byte(flag(&map, &["nu", "n"])?)?,
                get("a"),
                get("b"),
            )?;
            if p.a.is_none() || p.b.is_none() {
                return Err(Fail::Input("family2 needs numeric a and b".into()));
            }
            Ok(p.eqs()?)
        }
        _ => Ok(parse_eqs(&text(src)?, &env(&ps, ctx))?),
    }
}

#[derive(Serialize)]
struct Residual {
    index: usize,
    form: String,
}

#[derive(Serialize)]
struct CheckReport {
    kind: &'static str,
    passes: bool,
    residuals: Vec<Residual>,
}

fn check(cli: &Cli, input: &str) -> Out {
    let src = text(input)?;
    let report = if is_complex(&src) {
        let eqs: ComplexStructEqs<Gauss> = complex_eqs(cli, &src, None)?;
        let residuals: Vec<Residual> = eqs
            .validate()
            .into_iter()
            .map(|(k, f)| Residual {
                index: k + 1,
                form: f.render_with(|b| nilclass::exterior::complex_mono(b, eqs.n())),
            })
            .collect();
        CheckReport {
            kind: "integrability",
            passes: residuals.is_empty(),
            residuals,
        }
    } else {
        let g = algebra(cli, &src)?;
        let r = g.jacobi_check();
        let residuals: Vec<Residual> = r
            .d2_residuals
            .iter()
            .map(|(k, f)| Residual {
                index: k + 1,
                form: f.render_real(),
            })
            .collect();
        CheckReport {
            kind: "jacobi",
            passes: r.passes(),
            residuals,
        }
    };
    let var = if report.kind == "jacobi" { "e" } else { "w" };
    emit(cli, &report, || {
        let mut s = format!("{}: {}\n", report.kind, if report.passes { "ok" } else { "FAIL" });
        for r in &report.residuals {
            s.push_str(&format!("  d^2 {var}{} = {}\n", r.index, r.form));
        }
        s
    })?;
    Ok(report.passes)
}

#[derive(Serialize)]
struct SeriesReport {
    nilpotent: bool,
    ascending_type: Vec<usize>,
    descending_type: Vec<usize>,
    center_dim: usize,
}

fn tuple(v: &[usize]) -> String {
    nilclass::catalog::tables::tuple(v)
}

fn series(cli: &Cli, src: &str) -> Out {
    let g = algebra(cli, src)?;
    let asc = g.ascending_series();
    let r = SeriesReport {
        nilpotent: asc.nilpotent,
        ascending_type: asc.type_tuple(),
        descending_type: g.descending_type(),
        center_dim: g.center().dim(),
    };
    emit(cli, &r, || {
        format!(
            "nilpotent: {}\nascending: {}\ndescending: {}\ncenter: {}\n",
            r.nilpotent,
            tuple(&r.ascending_type),
            tuple(&r.descending_type),
            r.center_dim
        )
    })?;
    Ok(true)
}

fn betti(cli: &Cli, src: &str) -> Out {
    let b = betti_all(&algebra(cli, src)?);
    #[derive(Serialize)]
    struct R<'a> {
        betti: &'a [usize],
    }
    emit(cli, &R { betti: &b }, || format!("{}\n", tuple(&b)))?;
    Ok(true)
}

fn casimir(cli: &Cli, src: &str) -> Out {
    let n = casimir_count_seeded(&algebra(cli, src)?, DEFAULT_TRIALS, cli.seed)?;
    #[derive(Serialize)]
    struct R {
        casimir: usize,
        seed: u64,
    }
    emit(cli, &R { casimir: n, seed: cli.seed }, || format!("{n}\n"))?;
    Ok(true)
}

fn fingerprint_cmd(cli: &Cli, src: &str) -> Out {
    let g = algebra(cli, src)?;
    let f = Fingerprint {
        casimir: casimir_count_seeded(&g, DEFAULT_TRIALS, cli.seed)?,
        ..fingerprint(&g)?
    };
    emit(cli, &f, || {
        format!(
            "ascending: {}\ndescending: {}\nbetti: {}\ncasimir: {}\nderived: {}\n",
            tuple(&f.ascending_type),
            tuple(&f.descending_type),
            tuple(&f.betti),
            f.casimir,
            f.dim_derived
        )
    })?;
    Ok(true)
}

#[derive(Serialize)]
#[serde(bound(serialize = "R: Scalar"))]
struct RealifyReport<R: Scalar> {
    algebra: LieAlgebra<R>,
    j: Vec<Vec<String>>,
    integrable: bool,
    j_type: &'static str,
}

fn realify_with<S>(cli: &Cli, src: &str, map: Option<&str>, ctx: Radicands) -> Result<RealifyReport<S::Real>, Fail>
where
    S: ComplexField + EvalScalar,
    S::Real: Field,
{
    let eqs: ComplexStructEqs<S> = complex_eqs(cli, src, ctx)?;
    let n = eqs.n();
    let rows = match map {
        Some(m) => parse_map(&text(m)?, "w", "e", 2 * n, &env(&params(cli)?, ctx))?,
        None => standard_map(n),
    };
    let r = realify(&eqs, &rows)?;
    Ok(RealifyReport {
        j_type: classify_j_type(&r.algebra, &r.j).label(),
        integrable: eqs.is_valid() && r.algebra.jacobi_check().passes(),
        j: r.j.to_rows().iter().map(|row| row.iter().map(|c| c.render()).collect()).collect(),
        algebra: r.algebra,
    })
}

fn show_realified<R: Scalar>(cli: &Cli, r: &RealifyReport<R>) -> Out {
    emit(cli, r, || {
        let mut s = format!("{}\nintegrable: {}\nJ-type: {}\nJ:\n", print_algebra(&r.algebra), r.integrable, r.j_type);
        for row in &r.j {
            s.push_str(&format!("  [{}]\n", row.join(", ")));
        }
        s
    })?;
    Ok(r.integrable)
}

/// Tries the Gaussian rationals first and falls back to `Q(sqrt 2, sqrt 3)(i)` for radicals.
fn realify_cmd(cli: &Cli, src: &str, map: Option<&str>) -> Out {
    let src = text(src)?;
    match realify_with::<Gauss>(cli, &src, map, None) {
        Err(Fail::Input(msg)) if msg.contains("radicand") => {
            show_realified(cli, &realify_with::<Complex<QuadExt>>(cli, &src, map, SQRT23)?)
        }
        other => show_realified(cli, &other?),
    }
}

fn jtype(cli: &Cli, src: &str) -> Out {
    let eqs: ComplexStructEqs<Gauss> = complex_eqs(cli, &text(src)?, None)?;
    let r = realify(&eqs, &standard_map(eqs.n()))?;
    #[derive(Serialize)]
    struct R {
        j_type: &'static str,
        center_dim: usize,
        ascending_type: Vec<usize>,
    }
    let out = R {
        j_type: classify_j_type(&r.algebra, &r.j).label(),
        center_dim: r.algebra.center().dim(),
        ascending_type: r.algebra.ascending_type(),
    };
    emit(cli, &out, || format!("{}\n", out.j_type))?;
    Ok(true)
}

fn certify(cli: &Cli, file: &str) -> Out {
    let verdicts = if file == "builtin" {
        nilclass::catalog::certificates::certificates()
            .iter()
            .map(nilclass::catalog::certificates::verify)
            .collect::<Result<Vec<_>, _>>()?
    } else {
        let src = std::fs::read_to_string(file).map_err(|e| Fail::Input(format!("{file}: {e}")))?;
        verify_json(&src)?
    };
    let pass = verdicts.iter().all(|v| v.passed);
    emit(cli, &verdicts, || {
        let mut s = String::new();
        for v in &verdicts {
            s.push_str(&format!("{} {}\n", if v.passed { "ok  " } else { "FAIL" }, v.id));
            for r in v.residuals.iter().chain(&v.shape_errors) {
                s.push_str(&format!("  {r}\n"));
            }
        }
        s
    })?;
    Ok(pass)
}

fn tables(cli: &Cli, which: &str) -> Out {
    let manifest = match &cli.samples {
        Some(p) => Manifest::from_json(&std::fs::read_to_string(p).map_err(|e| Fail::Input(format!("{}: {e}", p.display())))?)?,
        None => Manifest::builtin(),
    };
    let ids: Vec<TableId> = if which.eq_ignore_ascii_case("all") {
        TableId::ALL.to_vec()
    } else {
        vec![which.parse()?]
    };
    let reports: Vec<TableReport> = ids
        .iter()
        .map(|t| reproduce_table(*t, &manifest, cli.seed))
        .collect::<Result<_, _>>()?;
    let pass = reports.iter().all(|r| r.pass);
    let text = || reports.iter().map(|r| r.render_text()).collect::<String>();
    if reports.len() == 1 {
        emit(cli, &reports[0], text)?;
    } else {
        emit(cli, &reports, text)?;
    }
    Ok(pass)
}

fn run(cli: &Cli) -> Out {
    match &cli.cmd {
        Cmd::Check { input } => check(cli, input),
        Cmd::Series { algebra } => series(cli, algebra),
        Cmd::Betti { algebra } => betti(cli, algebra),
        Cmd::Casimir { algebra } => casimir(cli, algebra),
        Cmd::Fingerprint { algebra } => fingerprint_cmd(cli, algebra),
        Cmd::Jtype { eqs } => jtype(cli, eqs),
        Cmd::Realify { eqs, map } => realify_cmd(cli, eqs, map.as_deref()),
        Cmd::Certify { file } => certify(cli, file),
        Cmd::Tables { table } => tables(cli, table),
        Cmd::Catalog => {
            let d = catalog_dump();
            let s = serde_json::to_string_pretty(&d).map_err(|e| Fail::Input(e.to_string()))?;
            write_out(&format!("{s}\n"));
            Ok(true)
        }
    }
}
