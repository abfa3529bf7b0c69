//! The `quadric` command line: construct, classify, resolve, rao, decompose
//! and verify-complex.
//!
//! Exit codes: 0 on success, 1 when a mathematical check fails, 2 on bad
//! input.

mod input;

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::curves::{
    classify_curve, classify_curve_with_resolution, decompose, ClassificationReport, CurveError, CurveSpec, SpecError,
};
use crate::homology::{
    buchsbaum_eisenbud_check, complex_from_fixture, complex_to_fixture, composition_witness, duality_check,
    is_minimal_complex, koszul_complex, rao_in_window, rao_module, FreeComplex, HomologyError,
};
use crate::ideal::{is_regular_sequence, Ideal, IdealError};
use crate::poly::{FieldSpec, MonomialOrder};

pub use input::{looks_like_spec, parse_field, parse_ideal_fixture, parse_window, Input};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliOutput {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl CliError {
    pub fn input(message: impl Into<String>) -> Self {
        CliError { code: EXIT_INPUT, message: message.into() }
    }

    pub fn check(message: impl Into<String>) -> Self {
        CliError { code: EXIT_CHECK_FAILED, message: message.into() }
    }
}

fn homology_code(e: &HomologyError) -> i32 {
    match e {
        HomologyError::Fixture(_) | HomologyError::FieldMismatch => EXIT_INPUT,
        _ => EXIT_CHECK_FAILED,
    }
}

impl From<HomologyError> for CliError {
    fn from(e: HomologyError) -> Self {
        CliError { code: homology_code(&e), message: e.to_string() }
    }
}

impl From<CurveError> for CliError {
    fn from(e: CurveError) -> Self {
        match e {
            CurveError::Homology(h) => h.into(),
            other => CliError::input(other.to_string()),
        }
    }
}

impl From<SpecError> for CliError {
    fn from(e: SpecError) -> Self {
        match e {
            SpecError::Invalid(c) => c.into(),
            other => CliError::input(other.to_string()),
        }
    }
}

impl From<IdealError> for CliError {
    fn from(e: IdealError) -> Self {
        CliError::input(e.to_string())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Parser, Debug)]
#[command(name = "quadric", version, about = "Ideals, resolutions and Rao modules of curves on quadric surfaces")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Coefficient field: `q` for the rationals or `p=<odd prime>`.
    #[arg(long, global = true, default_value = "q")]
    field: String,
    /// Monomial order for printed Gröbner bases: grevlex, lex or elim:<k>.
    #[arg(long, global = true, default_value = "grevlex")]
    order: String,
    /// Window `lo:hi` of Rao-module degrees; the two outer degrees at each
    /// end must vanish.
    #[arg(long, global = true, allow_hyphen_values = true)]
    window: Option<String>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Run the command on every file in a directory, in filename order.
    #[arg(long, global = true)]
    batch: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the generators of a curve ideal.
    Construct {
        #[command(flatten)]
        spec: SpecArgs,
        /// Print the reduced Gröbner basis in `--order` instead.
        #[arg(long)]
        groebner: bool,
    },
    /// Report quadric rank, ACM property, μ, degree, genus and Rao module.
    Classify {
        #[command(flatten)]
        spec: SpecArgs,
        /// Minimal free resolution of the ideal, as a complex fixture.
        #[arg(long)]
        resolution: Option<PathBuf>,
    },
    /// Build and certify a minimal free resolution.
    Resolve {
        #[command(flatten)]
        spec: SpecArgs,
        /// Print the resolution as a complex fixture.
        #[arg(long)]
        fixture: bool,
    },
    /// Hartshorne-Rao module table and its duality check.
    Rao {
        #[command(flatten)]
        spec: SpecArgs,
        #[arg(long)]
        resolution: Option<PathBuf>,
    },
    /// Compare the sum/product, determinantal and intersection forms of a
    /// multiline ideal.
    Decompose {
        #[command(flatten)]
        spec: SpecArgs,
    },
    /// Certify a complex fixture with the Buchsbaum-Eisenbud criterion.
    VerifyComplex { path: Option<PathBuf> },
}

#[derive(Args, Clone, Debug, Default)]
struct SpecArgs {
    /// Curve spec (key=value lines) or ideal file (one generator per line).
    path: Option<PathBuf>,
    #[arg(long)]
    family: Option<String>,
    #[arg(long)]
    d: Option<u32>,
    #[arg(long = "A", visible_alias = "a")]
    a: Option<String>,
    #[arg(long = "B", visible_alias = "b")]
    b: Option<String>,
    #[arg(long = "F", visible_alias = "f")]
    f: Option<String>,
    #[arg(long = "G", visible_alias = "g")]
    g: Option<String>,
    #[arg(long = "h")]
    h: Option<String>,
    /// Multiline parameters, e.g. `(0:1)*2,(1:0)*1`.
    #[arg(long)]
    lines: Option<String>,
    #[arg(long)]
    ruling: Option<String>,
}

impl SpecArgs {
    /// Spec text assembled from the inline flags.
    fn inline_text(&self) -> Option<String> {
        let family = self.family.as_ref()?;
        let mut text = format!("family={family}\n");
        let d = self.d.map(|d| d.to_string());
        for (k, v) in [
            ("d", &d),
            ("A", &self.a),
            ("B", &self.b),
            ("F", &self.f),
            ("G", &self.g),
            ("h", &self.h),
            ("lines", &self.lines),
            ("ruling", &self.ruling),
        ] {
            if let Some(v) = v {
                let _ = writeln!(text, "{k}={v}");
            }
        }
        Some(text)
    }

    fn load(&self, path: Option<&Path>, field: FieldSpec) -> Result<Input, CliError> {
        match path.or(self.path.as_deref()) {
            Some(p) => Input::from_text(&read(p)?, field),
            None => match self.inline_text() {
                Some(text) => Input::from_text(&text, field),
                None => Err(CliError::input("give an input file or --family with its parameters")),
            },
        }
    }
}

fn read(p: &Path) -> Result<String, CliError> {
    fs::read_to_string(p).map_err(|e| CliError::input(format!("{}: {e}", p.display())))
}

struct Options {
    field: FieldSpec,
    order: MonomialOrder,
    window: Option<(i32, i32)>,
}

struct Outcome {
    code: i32,
    text: String,
    json: Value,
}

impl Outcome {
    fn ok(text: String, json: Value) -> Self {
        Outcome { code: EXIT_OK, text, json }
    }
}

fn load_complex(p: &Path, field: FieldSpec) -> Result<FreeComplex, CliError> {
    Ok(complex_from_fixture(&read(p)?, field)?)
}

/// A resolution for the input: an explicit fixture, the family's predicted
/// one, or the Koszul complex of a complete intersection.
fn resolution_for(input: &Input, explicit: Option<&Path>, field: FieldSpec) -> Result<Option<FreeComplex>, CliError> {
    if let Some(p) = explicit {
        return Ok(Some(load_complex(p, field)?));
    }
    match input {
        Input::Spec(s) => Ok(s.resolution().transpose()?),
        Input::Ideal(i) => {
            if !i.is_homogeneous() {
                return Ok(None);
            }
            let gens = i.minimal_generator_count()?.generators;
            if gens.len() == 2 && is_regular_sequence(&gens) {
                Ok(Some(koszul_complex(field, &gens)?))
            } else {
                Ok(None)
            }
        }
    }
}

fn generator_list(ideal: &Ideal) -> Vec<String> {
    ideal.generators().iter().map(|g| g.to_string()).collect()
}

fn construct(input: &Input, groebner: bool, opts: &Options) -> Outcome {
    let ideal = input.ideal();
    let gens: Vec<String> = if groebner {
        ideal.groebner_basis(opts.order).iter().map(|g| g.to_string()).collect()
    } else {
        generator_list(&ideal)
    };
    Outcome::ok(format!("{}\n", gens.join(", ")), json!({ "generators": gens }))
}

fn report_text(r: &ClassificationReport) -> String {
    let rank = r.quadric_rank.map_or("none".to_string(), |q| q.to_string());
    let acm = r.acm.map_or("undetermined".to_string(), |a| a.to_string());
    let rao = r.rao_dims.as_ref().map_or("not computed".to_string(), |d| {
        let parts: Vec<String> = d.iter().map(|(j, n)| format!("{j}: {n}")).collect();
        format!("{{{}}}", parts.join(", "))
    });
    format!(
        "contains_quadric: {}\nquadric_rank: {rank}\nextremal: {}\nacm: {acm}\nmu: {}\ndegree: {}\narithmetic_genus: {}\nrao_dims: {rao}\n",
        r.contains_quadric, r.extremal, r.mu, r.degree, r.arithmetic_genus
    )
}

fn classify(input: &Input, explicit: Option<&Path>, opts: &Options) -> Result<Outcome, CliError> {
    let ideal = input.ideal();
    let report = match resolution_for(input, explicit, opts.field)? {
        Some(res) if explicit.is_some() || matches!(input, Input::Spec(_)) => {
            classify_curve_with_resolution(&ideal, &res)?
        }
        _ => classify_curve(&ideal)?,
    };
    let json = serde_json::to_value(&report).expect("plain data");
    Ok(Outcome::ok(report_text(&report), json))
}

fn resolve(input: &Input, fixture: bool, opts: &Options) -> Result<Outcome, CliError> {
    let res = resolution_for(input, None, opts.field)?
        .ok_or_else(|| CliError::input("no explicit resolution is known for this input"))?;
    if fixture {
        let text = complex_to_fixture(&res);
        let json = serde_json::from_str(&text).expect("fixture is JSON");
        return Ok(Outcome::ok(format!("{text}\n"), json));
    }
    let ideal = input.ideal();
    let is_complex = composition_witness(&res).is_none();
    let minimal = is_minimal_complex(&res);
    let cert = if is_complex { Some(buchsbaum_eisenbud_check(&res)?) } else { None };
    let exact = cert.as_ref().is_some_and(|c| c.passed());
    let generated = Ideal::new(opts.field, res.map(1).entries()[0].clone())?.equals(&ideal);
    let betti = res.betti_table();

    let verdict = |b: bool| if b { "ok" } else { "FAIL" };
    let mut text = format!("{betti}\n");
    let _ = writeln!(text, "complex: {}", verdict(is_complex));
    let _ = writeln!(text, "minimal: {}", verdict(minimal));
    let _ = writeln!(text, "exact: {}", verdict(exact));
    let _ = writeln!(text, "resolves the ideal: {}", verdict(generated));
    if let Some(c) = &cert {
        text.push_str(&c.to_string());
    }
    let json = json!({
        "modules": res.modules().iter().map(|m| m.twists()).collect::<Vec<_>>(),
        "ranks": betti.ranks(),
        "complex": is_complex,
        "minimal": minimal,
        "exact": exact,
        "resolves_ideal": generated,
        "failure": cert.as_ref().and_then(|c| c.failure()).map(|f| f.to_string()),
    });
    let code = if is_complex && minimal && exact && generated { EXIT_OK } else { EXIT_CHECK_FAILED };
    Ok(Outcome { code, text, json })
}

fn rao(input: &Input, explicit: Option<&Path>, opts: &Options) -> Result<Outcome, CliError> {
    let ideal = input.ideal();
    let res = resolution_for(input, explicit, opts.field)?
        .ok_or_else(|| CliError::input("no resolution available; pass --resolution <complex fixture>"))?;
    let mut table = rao_module(&ideal, &res)?;
    if let Some(w) = opts.window {
        table = rao_in_window(&res, w)?;
    }
    let degree = ideal.hilbert_data()?.degree;
    let shift = (degree - 2) as i32;
    let dual = duality_check(&table, shift);
    let text = format!(
        "rao module: {table}\ntotal dimension: {}\nduality M(j) = M({shift} - j): {}\n",
        table.total_dimension(),
        if dual { "ok" } else { "FAIL" }
    );
    let json = json!({
        "rao_dims": table.dims(),
        "total_dimension": table.total_dimension(),
        "duality_shift": shift,
        "duality": dual,
    });
    Ok(Outcome { code: if dual { EXIT_OK } else { EXIT_CHECK_FAILED }, text, json })
}

fn decompose_cmd(input: &Input) -> Result<Outcome, CliError> {
    let Input::Spec(CurveSpec::Multiline(spec)) = input else {
        return Err(CliError::input("decompose needs a multiline spec"));
    };
    let d = decompose(spec);
    let inter: Vec<String> =
        d.intersection.groebner_basis(MonomialOrder::Grevlex).iter().map(|g| g.to_string()).collect();
    let (det_ok, int_ok) = (d.determinantal_agrees(), d.intersection_agrees());
    let verdict = |b: bool| if b { "equal" } else { "DIFFERENT" };
    let text = format!(
        "sum/product: {}\ndeterminantal: {}\nintersection: {}\ndeterminantal vs sum/product: {}\nintersection vs sum/product: {}\n",
        generator_list(&d.sum_product).join(", "),
        generator_list(&d.determinantal).join(", "),
        inter.join(", "),
        verdict(det_ok),
        verdict(int_ok),
    );
    let json = json!({
        "sum_product": generator_list(&d.sum_product),
        "determinantal": generator_list(&d.determinantal),
        "intersection": inter,
        "determinantal_equal": det_ok,
        "intersection_equal": int_ok,
    });
    Ok(Outcome { code: if det_ok && int_ok { EXIT_OK } else { EXIT_CHECK_FAILED }, text, json })
}

fn verify(path: &Path, opts: &Options) -> Result<Outcome, CliError> {
    let c = load_complex(path, opts.field)?;
    if let Some(w) = composition_witness(&c) {
        return Err(CliError::check(w.to_string()));
    }
    let cert = buchsbaum_eisenbud_check(&c)?;
    let minimal = is_minimal_complex(&c);
    let mut text = cert.to_string();
    let _ = writeln!(text, "minimal: {minimal}");
    let failure = cert.failure().map(|f| f.to_string());
    match &failure {
        Some(f) => {
            let _ = writeln!(text, "not exact: {f}");
        }
        None => text.push_str("exact\n"),
    }
    let json = json!({ "exact": cert.passed(), "minimal": minimal, "failure": failure });
    Ok(Outcome { code: if cert.passed() { EXIT_OK } else { EXIT_CHECK_FAILED }, text, json })
}

fn run_one(cmd: &Command, path: Option<&Path>, opts: &Options) -> Result<Outcome, CliError> {
    match cmd {
        Command::Construct { spec, groebner } => Ok(construct(&spec.load(path, opts.field)?, *groebner, opts)),
        Command::Classify { spec, resolution } => classify(&spec.load(path, opts.field)?, resolution.as_deref(), opts),
        Command::Resolve { spec, fixture } => resolve(&spec.load(path, opts.field)?, *fixture, opts),
        Command::Rao { spec, resolution } => rao(&spec.load(path, opts.field)?, resolution.as_deref(), opts),
        Command::Decompose { spec } => decompose_cmd(&spec.load(path, opts.field)?),
        Command::VerifyComplex { path: own } => {
            let p = path.or(own.as_deref()).ok_or_else(|| CliError::input("verify-complex needs a fixture path"))?;
            verify(p, opts)
        }
    }
}

fn render(out: &Outcome, format: Format) -> String {
    match format {
        Format::Text => out.text.clone(),
        Format::Json => format!("{}\n", serde_json::to_string(&out.json).expect("plain data")),
    }
}

fn run_batch(cmd: &Command, dir: &Path, opts: &Options, format: Format) -> CliOutput {
    let mut files: Vec<PathBuf> = match fs::read_dir(dir) {
        Ok(entries) => entries.filter_map(|e| e.ok().map(|e| e.path())).filter(|p| p.is_file()).collect(),
        Err(e) => {
            return CliOutput { code: EXIT_INPUT, stdout: String::new(), stderr: format!("{}: {e}\n", dir.display()) }
        }
    };
    files.sort();
    let (mut code, mut stdout, mut stderr) = (EXIT_OK, String::new(), String::new());
    let mut items = Vec::new();
    for f in &files {
        let name = f.file_name().map(|n| n.to_string_lossy().into_owned()).unwrap_or_default();
        match run_one(cmd, Some(f), opts) {
            Ok(out) => {
                code = code.max(out.code);
                match format {
                    Format::Text => {
                        let _ = write!(stdout, "== {name} ==\n{}", out.text);
                    }
                    Format::Json => items.push(json!({ "file": name, "code": out.code, "result": out.json })),
                }
            }
            Err(e) => {
                code = code.max(e.code);
                let _ = writeln!(stderr, "{name}: {}", e.message);
                if format == Format::Json {
                    items.push(json!({ "file": name, "code": e.code, "error": e.message }));
                }
            }
        }
    }
    if format == Format::Json {
        stdout = format!("{}\n", serde_json::to_string(&items).expect("plain data"));
    }
    CliOutput { code, stdout, stderr }
}

/// Runs the command line `args` (program name first) and collects the exit
/// code and both output streams.
pub fn run<I, T>(args: I) -> CliOutput
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let msg = e.to_string();
            return if e.use_stderr() {
                CliOutput { code, stdout: String::new(), stderr: msg }
            } else {
                CliOutput { code, stdout: msg, stderr: String::new() }
            };
        }
    };
    let opts = (|| -> Result<Options, CliError> {
        let order = MonomialOrder::parse(&cli.order)
            .ok_or_else(|| CliError::input(format!("unknown order {:?}; use grevlex, lex or elim:<k>", cli.order)))?;
        Ok(Options {
            field: parse_field(&cli.field)?,
            order,
            window: cli.window.as_deref().map(parse_window).transpose()?,
        })
    })();
    let opts = match opts {
        Ok(o) => o,
        Err(e) => return CliOutput { code: e.code, stdout: String::new(), stderr: format!("error: {}\n", e.message) },
    };
    if let Some(dir) = &cli.batch {
        return run_batch(&cli.command, dir, &opts, cli.format);
    }
    match run_one(&cli.command, None, &opts) {
        Ok(out) => CliOutput { code: out.code, stdout: render(&out, cli.format), stderr: String::new() },
        Err(e) => CliOutput { code: e.code, stdout: String::new(), stderr: format!("error: {}\n", e.message) },
    }
}
