//! Command-line surface: `compute`, `classify`, `verify`, and `table`.
//!
//! Input documents are JSON with a `dimension`, an optional `tolerance`,
//! and exactly four object descriptors. Reports are printed as text or,
//! with `--json`, as machine-readable JSON whose numbers carry 17
//! significant digits so they round-trip f64 exactly.
//!
//! Exit codes: 0 success, 1 parse or validation failure, 2 classification
//! failure, 3 indeterminate (0/0) value.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::io::Read;
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::crossratio::{
    affine_ratio, classical_pair_measure, classify, cross_ratio, pair_measure, Classification,
    Configuration, CrossRatioError, CrossRatioResult,
};
use crate::ga::{BladeIndex, Multivector, Signature};
use crate::objects::{GeometricObject, Role, DEFAULT_TOL};
use crate::pencils::{min_dim, sample};
use crate::transforms::{random_motor, sandwich};
use crate::xreal::ExtendedReal;

pub const EXIT_OK: u8 = 0;
pub const EXIT_PARSE: u8 = 1;
pub const EXIT_CLASSIFY: u8 = 2;
pub const EXIT_INDETERMINATE: u8 = 3;

/// One object descriptor of an input document.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum ObjectSpec {
    Point { coords: Vec<f64>, weight: f64 },
    IdealPoint { direction: Vec<f64> },
    Hyperplane { normal: Vec<f64>, offset: f64 },
    Flat { blades: BTreeMap<String, f64> },
    Raw { blades: BTreeMap<String, f64> },
}

/// A four-object input document.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InputDocument {
    pub dimension: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tolerance: Option<f64>,
    pub objects: Vec<ObjectSpec>,
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("invalid JSON at line {line}, column {column}: {message}")]
    Json { line: usize, column: usize, message: String },
    #[error("invalid document: {0}")]
    Document(String),
    #[error("{0}")]
    Geometry(String),
    #[error("indeterminate 0/0 cross-ratio")]
    Indeterminate,
    #[error("verification failed: {0} trial(s) outside tolerance")]
    VerifyFailed(usize),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Io { .. } | CliError::Json { .. } | CliError::Document(_) => EXIT_PARSE,
            CliError::Geometry(_) => EXIT_CLASSIFY,
            CliError::Indeterminate => EXIT_INDETERMINATE,
            CliError::VerifyFailed(_) => EXIT_CLASSIFY,
        }
    }
}

fn geometry_error(e: CrossRatioError) -> CliError {
    match e {
        CrossRatioError::Indeterminate => CliError::Indeterminate,
        other => CliError::Geometry(other.to_string()),
    }
}

impl InputDocument {
    pub fn parse(text: &str) -> Result<InputDocument, CliError> {
        let doc: InputDocument = serde_json::from_str(text).map_err(|e| CliError::Json {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })?;
        doc.validate()?;
        Ok(doc)
    }

    fn validate(&self) -> Result<(), CliError> {
        if !(1..=Signature::MAX_DIM).contains(&self.dimension) {
            return Err(CliError::Document(format!(
                "dimension must be in 1..={}, got {}",
                Signature::MAX_DIM,
                self.dimension
            )));
        }
        if self.objects.len() != 4 {
            return Err(CliError::Document(format!(
                "exactly four objects required, got {}",
                self.objects.len()
            )));
        }
        if let Some(t) = self.tolerance {
            if !(t.is_finite() && t > 0.0) {
                return Err(CliError::Document("tolerance must be finite and positive".into()));
            }
        }
        let sig = Signature::new(self.dimension);
        for (k, spec) in self.objects.iter().enumerate() {
            let coords: Option<&Vec<f64>> = match spec {
                ObjectSpec::Point { coords, .. } => Some(coords),
                ObjectSpec::IdealPoint { direction } => Some(direction),
                ObjectSpec::Hyperplane { normal, .. } => Some(normal),
                ObjectSpec::Flat { blades } | ObjectSpec::Raw { blades } => {
                    for name in blades.keys() {
                        BladeIndex::parse(name, sig)
                            .map_err(|e| CliError::Document(format!("object {k}: {e}")))?;
                    }
                    None
                }
            };
            if let Some(c) = coords {
                if c.len() != self.dimension {
                    return Err(CliError::Document(format!(
                        "object {k}: expected {} coordinates, got {}",
                        self.dimension,
                        c.len()
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn tolerance(&self) -> f64 {
        self.tolerance.unwrap_or(DEFAULT_TOL)
    }

    /// Build the four geometric objects.
    pub fn objects(&self) -> Result<[GeometricObject; 4], CliError> {
        let sig = Signature::new(self.dimension);
        let tol = self.tolerance();
        let mut out = Vec::with_capacity(4);
        for (k, spec) in self.objects.iter().enumerate() {
            let obj = match spec {
                ObjectSpec::Point { coords, weight } => crate::objects::point(sig, coords, *weight),
                ObjectSpec::IdealPoint { direction } => crate::objects::ideal_point(sig, direction),
                ObjectSpec::Hyperplane { normal, offset } => {
                    crate::objects::hyperplane(sig, normal, *offset)
                }
                ObjectSpec::Flat { blades } | ObjectSpec::Raw { blades } => {
                    let mv = Multivector::from_terms(
                        sig,
                        blades.iter().map(|(name, &c)| {
                            (BladeIndex::parse(name, sig).expect("validated"), c)
                        }),
                    );
                    let obj = GeometricObject::new(mv, tol);
                    if let (Ok(o), ObjectSpec::Flat { .. }) = (&obj, spec) {
                        if !matches!(o.role(), Role::Flat(_)) {
                            return Err(CliError::Geometry(format!(
                                "object {k}: grade {} is not an intermediate flat",
                                o.grade()
                            )));
                        }
                    }
                    obj
                }
            }
            .map_err(|e| CliError::Geometry(format!("object {k}: {e}")))?;
            out.push(obj);
        }
        Ok(out.try_into().expect("validated length"))
    }
}

/// Format a float as a JSON number with 17 significant digits, enough to
/// round-trip any f64 exactly.
fn json_f64(x: f64) -> String {
    format!("{x:.16e}")
}

fn json_string(s: &str) -> String {
    serde_json::to_string(s).expect("strings serialize")
}

/// The operator block of a report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OperatorReport {
    pub dualize_operands: bool,
    pub product: String,
    pub display: String,
}

impl OperatorReport {
    fn of(cfg: Configuration) -> OperatorReport {
        let op = cfg.operator();
        OperatorReport {
            dualize_operands: op.dualize_operands,
            product: format!("{:?}", op.product),
            display: op.to_string(),
        }
    }
}

/// Machine-readable result of `compute`. Round-trips losslessly through
/// [`ReportDocument::parse`].
#[derive(Clone, Debug, PartialEq)]
pub struct ReportDocument {
    pub value: ExtendedReal,
    pub dimension: usize,
    pub configuration: String,
    pub operator: OperatorReport,
    pub common_blade: BTreeMap<String, f64>,
    pub max_residual: f64,
    pub permutation: [usize; 4],
}

impl ReportDocument {
    fn from_result(result: &CrossRatioResult, dimension: usize) -> ReportDocument {
        let cfg: Configuration = result.configuration;
        ReportDocument {
            value: result.value,
            dimension,
            configuration: cfg.name().to_string(),
            operator: OperatorReport::of(cfg),
            common_blade: result
                .common_blade
                .terms()
                .map(|(b, c)| (b.name(), c))
                .collect(),
            max_residual: result.max_residual,
            permutation: result.permutation,
        }
    }

    /// Serialize with 17-significant-digit numbers.
    pub fn to_json(&self) -> String {
        let mut s = String::from("{\n");
        match self.value {
            ExtendedReal::Finite(v) => {
                let _ = writeln!(s, "  \"value\": {},", json_f64(v));
            }
            ExtendedReal::PosInf => s.push_str("  \"value\": \"+inf\",\n"),
            ExtendedReal::NegInf => s.push_str("  \"value\": \"-inf\",\n"),
        }
        let _ = writeln!(s, "  \"dimension\": {},", self.dimension);
        let _ = writeln!(s, "  \"configuration\": {},", json_string(&self.configuration));
        let _ = writeln!(
            s,
            "  \"operator\": {{\"dualize_operands\": {}, \"product\": {}, \"display\": {}}},",
            self.operator.dualize_operands,
            json_string(&self.operator.product),
            json_string(&self.operator.display)
        );
        s.push_str("  \"common_blade\": {");
        for (i, (name, coeff)) in self.common_blade.iter().enumerate() {
            if i > 0 {
                s.push_str(", ");
            }
            let _ = write!(s, "{}: {}", json_string(name), json_f64(*coeff));
        }
        s.push_str("},\n");
        let _ = writeln!(s, "  \"max_residual\": {},", json_f64(self.max_residual));
        let _ = writeln!(
            s,
            "  \"permutation\": [{}, {}, {}, {}]",
            self.permutation[0], self.permutation[1], self.permutation[2], self.permutation[3]
        );
        s.push('}');
        s
    }

    pub fn parse(text: &str) -> Result<ReportDocument, CliError> {
        #[derive(Deserialize)]
        #[serde(deny_unknown_fields)]
        struct Raw {
            value: serde_json::Value,
            dimension: usize,
            configuration: String,
            operator: OperatorReport,
            common_blade: BTreeMap<String, f64>,
            max_residual: f64,
            permutation: [usize; 4],
        }
        let raw: Raw = serde_json::from_str(text).map_err(|e| CliError::Json {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })?;
        let value = match &raw.value {
            serde_json::Value::Number(n) => ExtendedReal::Finite(
                n.as_f64().ok_or_else(|| CliError::Document("value out of f64 range".into()))?,
            ),
            serde_json::Value::String(s) if s == "+inf" => ExtendedReal::PosInf,
            serde_json::Value::String(s) if s == "-inf" => ExtendedReal::NegInf,
            other => return Err(CliError::Document(format!("bad value field: {other}"))),
        };
        Ok(ReportDocument {
            value,
            dimension: raw.dimension,
            configuration: raw.configuration,
            operator: raw.operator,
            common_blade: raw.common_blade,
            max_residual: raw.max_residual,
            permutation: raw.permutation,
        })
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "value          = {}", self.value);
        let _ = writeln!(s, "dimension      = {}", self.dimension);
        let _ = writeln!(s, "configuration  = {}", self.configuration);
        let _ = writeln!(s, "operator       = {}", self.operator.display);
        let blade: Vec<String> =
            self.common_blade.iter().map(|(n, c)| format!("{c:+.6} {n}")).collect();
        let _ = writeln!(s, "common blade   = {}", blade.join(" "));
        let _ = writeln!(s, "max residual   = {:.3e}", self.max_residual);
        let _ = writeln!(
            s,
            "permutation    = [{}, {}, {}, {}]",
            self.permutation[0], self.permutation[1], self.permutation[2], self.permutation[3]
        );
        s
    }
}

#[derive(Parser, Debug)]
#[command(
    name = "pga-crossratio",
    about = "Cross-ratios of points, hyperplanes, and flats in n-dimensional plane-based geometric algebra",
    version
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Compute the cross-ratio of the four objects in a JSON document
    Compute {
        /// Input path; stdin when omitted or "-"
        #[arg(long)]
        input: Option<PathBuf>,
        /// Relative tolerance override
        #[arg(long)]
        tol: Option<f64>,
        /// Emit the machine-readable JSON report
        #[arg(long)]
        json: bool,
    },
    /// Classify the four objects without computing a value
    Classify {
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long)]
        tol: Option<f64>,
        #[arg(long)]
        json: bool,
    },
    /// Run the randomized verification suites against the classical oracles
    Verify {
        /// Euclidean dimension (at least 2)
        #[arg(long, default_value_t = 3)]
        dim: usize,
        /// Trials per suite
        #[arg(long, default_value_t = 1000)]
        trials: usize,
        /// RNG seed (always echoed in the report)
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Restrict to one configuration, or "all"
        #[arg(long, default_value = "all")]
        config: String,
        /// Relative tolerance for oracle and invariance comparisons
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
        #[arg(long)]
        json: bool,
    },
    /// Print the operator table driving configuration dispatch
    Table {
        #[arg(long, default_value_t = 3)]
        dim: usize,
    },
}

/// Entry point used by the binary; returns the process exit code.
pub fn run<I, T>(args: I) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            // clap prints help/version on stdout with success status
            let code = if e.use_stderr() { EXIT_PARSE } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    match dispatch(cli) {
        Ok(()) => EXIT_OK,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

fn dispatch(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Compute { input, tol, json } => cmd_compute(input, tol, json),
        Command::Classify { input, tol, json } => cmd_classify(input, tol, json),
        Command::Verify { dim, trials, seed, config, tol, json } => {
            cmd_verify(dim, trials, seed, &config, tol, json)
        }
        Command::Table { dim } => {
            cmd_table(dim);
            Ok(())
        }
    }
}

fn read_input(path: Option<&PathBuf>) -> Result<String, CliError> {
    match path {
        Some(p) if p.as_os_str() != "-" => std::fs::read_to_string(p).map_err(|e| CliError::Io {
            path: p.display().to_string(),
            source: e,
        }),
        _ => {
            let mut buf = String::new();
            std::io::stdin()
                .read_to_string(&mut buf)
                .map_err(|e| CliError::Io { path: "<stdin>".into(), source: e })?;
            Ok(buf)
        }
    }
}

fn load(input: Option<&PathBuf>, tol_override: Option<f64>) -> Result<(InputDocument, f64), CliError> {
    let text = read_input(input)?;
    let doc = InputDocument::parse(&text)?;
    let tol = tol_override.unwrap_or_else(|| doc.tolerance());
    Ok((doc, tol))
}

fn cmd_compute(input: Option<PathBuf>, tol: Option<f64>, json: bool) -> Result<(), CliError> {
    let (doc, tol) = load(input.as_ref(), tol)?;
    let objects = doc.objects()?;
    // three finite points plus one ideal point take the affine path, which
    // moves the ideal point to slot 4 and reports the permutation
    let is_affine = objects.iter().all(|o| o.role() == Role::Point)
        && objects.iter().filter(|o| o.is_ideal(tol)).count() == 1;
    let result = if is_affine {
        affine_ratio(&objects, tol).map_err(geometry_error)?
    } else {
        cross_ratio(&objects, tol).map_err(geometry_error)?
    };
    let report = ReportDocument::from_result(&result, doc.dimension);
    if json {
        println!("{}", report.to_json());
    } else {
        print!("{}", report.to_text());
    }
    Ok(())
}

fn cmd_classify(input: Option<PathBuf>, tol: Option<f64>, json: bool) -> Result<(), CliError> {
    let (doc, tol) = load(input.as_ref(), tol)?;
    let objects = doc.objects()?;
    let Classification { configuration, common_blade, max_residual } =
        classify(&objects, tol).map_err(geometry_error)?;
    if json {
        let mut s = String::from("{\n");
        let _ = writeln!(s, "  \"configuration\": {},", json_string(configuration.name()));
        let op = OperatorReport::of(configuration);
        let _ = writeln!(
            s,
            "  \"operator\": {{\"dualize_operands\": {}, \"product\": {}, \"display\": {}}},",
            op.dualize_operands,
            json_string(&op.product),
            json_string(&op.display)
        );
        s.push_str("  \"common_blade\": {");
        for (i, (b, c)) in common_blade.terms().enumerate() {
            if i > 0 {
                s.push_str(", ");
            }
            let _ = write!(s, "{}: {}", json_string(&b.name()), json_f64(c));
        }
        s.push_str("},\n");
        let _ = writeln!(s, "  \"max_residual\": {}", json_f64(max_residual));
        s.push('}');
        println!("{s}");
    } else {
        println!("configuration  = {configuration}");
        println!("operator       = {}", configuration.operator());
        println!("max residual   = {max_residual:.3e}");
    }
    Ok(())
}

fn cmd_table(dim: usize) {
    let n = dim;
    println!("Pairwise measurement operators for dimension n = {n}");
    println!();
    println!(
        "{:<14} {:<7} {:<38} {:<26} {}",
        "object", "grade", "support/configuration", "object-type operator", "unified operator"
    );
    for cfg in Configuration::ALL {
        let grade = match cfg.grade_label() {
            "n" => n.to_string(),
            "1" => "1".to_string(),
            _ => {
                if n >= 3 {
                    format!("2..={}", n - 1)
                } else {
                    "(none)".to_string()
                }
            }
        };
        println!(
            "{:<14} {:<7} {:<38} {:<26} {}",
            cfg.object_label(),
            grade,
            cfg.support_label(),
            cfg.classical_operator().to_string(),
            cfg.operator()
        );
    }
}

/// Outcome of one verification suite.
#[derive(Clone, Debug)]
pub struct SuiteReport {
    pub suite: &'static str,
    pub configuration: Configuration,
    pub trials: usize,
    pub failures: usize,
    pub worst_residual: f64,
}

fn value_residual(got: &ExtendedReal, expected: &ExtendedReal) -> f64 {
    match (got, expected) {
        (ExtendedReal::Finite(a), ExtendedReal::Finite(b)) => (a - b).abs() / b.abs().max(1.0),
        (a, b) if a == b => 0.0,
        _ => f64::INFINITY,
    }
}

/// Run the verification suites: oracle equivalence, duality preservation,
/// operator collapse, motor invariance, and representative independence.
pub fn run_verification(
    dim: usize,
    trials: usize,
    seed: u64,
    configs: &[Configuration],
    tol: f64,
) -> Vec<SuiteReport> {
    let sig = Signature::new(dim);
    let mut reports = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    for &cfg in configs {
        if dim < min_dim(cfg) {
            continue;
        }

        // oracle equivalence: the algebraic value against the classical one
        let mut worst: f64 = 0.0;
        let mut failures = 0;
        for _ in 0..trials {
            let s = sample(cfg, sig, &mut rng);
            let r = match cross_ratio(&s.objects, tol) {
                Ok(r) => r,
                Err(_) => {
                    failures += 1;
                    continue;
                }
            };
            let res = value_residual(&r.value, &s.expected);
            worst = worst.max(res);
            if res > tol {
                failures += 1;
            }
        }
        reports.push(SuiteReport { suite: "oracle", configuration: cfg, trials, failures, worst_residual: worst });

        // duality preservation: same value on the Hodge duals
        let mut worst: f64 = 0.0;
        let mut failures = 0;
        for _ in 0..trials {
            let s = sample(cfg, sig, &mut rng);
            let duals: [GeometricObject; 4] = std::array::from_fn(|i| s.objects[i].dual());
            let pair = (cross_ratio(&s.objects, tol), cross_ratio(&duals, tol));
            let (Ok(a), Ok(b)) = pair else {
                failures += 1;
                continue;
            };
            if b.configuration != cfg.dual_partner() {
                failures += 1;
                continue;
            }
            let res = value_residual(&b.value, &a.value);
            worst = worst.max(res);
            if res > tol {
                failures += 1;
            }
        }
        reports.push(SuiteReport { suite: "duality", configuration: cfg, trials, failures, worst_residual: worst });

        // operator collapse: object-type and unified measures coincide
        let mut worst: f64 = 0.0;
        let mut failures = 0;
        for _ in 0..trials {
            let s = sample(cfg, sig, &mut rng);
            for i in 0..4 {
                for j in (i + 1)..4 {
                    let unified = pair_measure(&s.objects[i], &s.objects[j], cfg);
                    let classical = classical_pair_measure(&s.objects[i], &s.objects[j], cfg);
                    let diff = (&unified - &classical).norm_inf();
                    let scale = unified.norm_inf().max(classical.norm_inf()).max(1.0);
                    let res = diff / scale;
                    worst = worst.max(res);
                    if res > 1e-12 {
                        failures += 1;
                    }
                }
            }
        }
        reports.push(SuiteReport { suite: "collapse", configuration: cfg, trials, failures, worst_residual: worst });

        // motor invariance
        let mut worst: f64 = 0.0;
        let mut failures = 0;
        for _ in 0..trials {
            let s = sample(cfg, sig, &mut rng);
            let motor = random_motor(rng.gen(), sig);
            let moved: [GeometricObject; 4] = std::array::from_fn(|i| sandwich(&motor, &s.objects[i]));
            let pair = (cross_ratio(&s.objects, tol), cross_ratio(&moved, tol));
            let (Ok(a), Ok(b)) = pair else {
                failures += 1;
                continue;
            };
            let res = value_residual(&b.value, &a.value);
            worst = worst.max(res);
            if res > tol {
                failures += 1;
            }
        }
        reports.push(SuiteReport { suite: "motor", configuration: cfg, trials, failures, worst_residual: worst });

        // representative independence, at the tighter 1e-12 bound
        let mut worst: f64 = 0.0;
        let mut failures = 0;
        for _ in 0..trials {
            let s = sample(cfg, sig, &mut rng);
            let rescaled: [GeometricObject; 4] = std::array::from_fn(|i| {
                let mut f = rng.gen_range(0.2..5.0);
                if rng.gen_bool(0.5) {
                    f = -f;
                }
                s.objects[i].rescale(f)
            });
            let pair = (cross_ratio(&s.objects, tol), cross_ratio(&rescaled, tol));
            let (Ok(a), Ok(b)) = pair else {
                failures += 1;
                continue;
            };
            let res = value_residual(&b.value, &a.value);
            worst = worst.max(res);
            if res > 1e-12 {
                failures += 1;
            }
        }
        reports.push(SuiteReport {
            suite: "representative",
            configuration: cfg,
            trials,
            failures,
            worst_residual: worst,
        });
    }
    reports
}

fn cmd_verify(
    dim: usize,
    trials: usize,
    seed: u64,
    config: &str,
    tol: f64,
    json: bool,
) -> Result<(), CliError> {
    if dim < 2 {
        return Err(CliError::Document(format!("verify requires dim >= 2, got {dim}")));
    }
    if !(dim <= Signature::MAX_DIM) {
        return Err(CliError::Document(format!("dim must be at most {}", Signature::MAX_DIM)));
    }
    let configs: Vec<Configuration> = if config == "all" {
        Configuration::ALL.to_vec()
    } else {
        vec![config
            .parse::<Configuration>()
            .map_err(CliError::Document)?]
    };
    let reports = run_verification(dim, trials, seed, &configs, tol);
    let total_failures: usize = reports.iter().map(|r| r.failures).sum();

    if json {
        let mut s = String::from("{\n");
        let _ = writeln!(s, "  \"seed\": {seed},");
        let _ = writeln!(s, "  \"dim\": {dim},");
        let _ = writeln!(s, "  \"trials\": {trials},");
        let _ = writeln!(s, "  \"tol\": {},", json_f64(tol));
        s.push_str("  \"suites\": [\n");
        for (i, r) in reports.iter().enumerate() {
            let _ = write!(
                s,
                "    {{\"suite\": {}, \"configuration\": {}, \"trials\": {}, \"failures\": {}, \"worst_residual\": {}}}",
                json_string(r.suite),
                json_string(r.configuration.name()),
                r.trials,
                r.failures,
                json_f64(r.worst_residual)
            );
            s.push_str(if i + 1 < reports.len() { ",\n" } else { "\n" });
        }
        s.push_str("  ],\n");
        let _ = writeln!(s, "  \"passed\": {}", total_failures == 0);
        s.push('}');
        println!("{s}");
    } else {
        println!("seed = {seed}, dim = {dim}, trials = {trials}, tol = {tol:e}");
        println!();
        println!(
            "{:<16} {:<30} {:>7} {:>9} {:>12}",
            "suite", "configuration", "trials", "failures", "worst"
        );
        for r in &reports {
            println!(
                "{:<16} {:<30} {:>7} {:>9} {:>12.3e}",
                r.suite,
                r.configuration.name(),
                r.trials,
                r.failures,
                r.worst_residual
            );
        }
        println!();
        if total_failures == 0 {
            println!("all suites passed");
        } else {
            println!("{total_failures} failure(s)");
        }
    }
    if total_failures == 0 {
        Ok(())
    } else {
        Err(CliError::VerifyFailed(total_failures))
    }
}
