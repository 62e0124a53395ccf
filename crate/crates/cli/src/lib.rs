//! Command-line front end for `engelkit`.
//!
//! [`run`] takes the argument list and returns the exit status together with
//! everything written to standard output and standard error, so the binary is a
//! thin wrapper and tests can drive commands in-process.
//!
//! Exit status: 0 computed (whatever the verdict), 1 usage or parse error,
//! 2 validation failure, 3 an internal equivalence failed (always a bug).

pub mod format;
pub mod report;

use std::ffi::OsString;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use engelkit::catalog::{self, NAMES};
use engelkit::engel::{
    check_forall_nilpotent, engel_flag, engelian_ascent, uniform_exponent_check, witness_search, AscentOutcome,
    FlagOutcome,
};
use engelkit::lattice::{is_nilpotent, lower_central_series};
use engelkit::roots::{
    cartan_iff_zero_root, restrict, weight_decomposition, weight_space, zero_root_subalgebra, NilpotentSubalgebra,
    RootSpaceDecomposition, Weight,
};
use engelkit::{
    is_nilpotent_endo, validate_algebra, validate_module, LieAlgebra, LieModule, ScalarRing, Submodule,
};
use serde_json::{json, Map, Value};
use sha2::{Digest, Sha256};

use crate::format::{parse, InputError, Presentation};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_THEOREM: i32 = 3;

pub const DEFAULT_BUDGET: usize = 1000;

/// Random samples drawn for the uniform exponent check in `engel` reports.
pub const UNIFORM_SAMPLES: usize = 20;

#[derive(Parser, Debug)]
#[command(name = "engelkit", version, about = "Exact nilpotency certificates for Lie algebras and their modules")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check the Lie axioms of the algebra and the module, and declared sub-objects.
    Validate(InputArgs),
    /// Lower central series of the module.
    Lcs(InputArgs),
    /// Nilpotency verdict with a re-checkable certificate.
    Nilpotent(InputArgs),
    /// Whether every element acts nilpotently, with a refuting element when not.
    Engel(InputArgs),
    /// Flag of submodules triangularizing every action at once.
    Flag(InputArgs),
    /// Ascent through sub-algebras of the image of the action.
    Ascent(InputArgs),
    /// Weight spaces of the module over a nilpotent sub-algebra.
    Weights(InputArgs),
    /// Root spaces and the zero root sub-algebra.
    Roots(InputArgs),
    /// Compare `H = L⁰` with `H` being a Cartan sub-algebra.
    Cartan(InputArgs),
    /// List the built-in examples or write one as a presentation file.
    Catalog(CatalogArgs),
}

#[derive(Args, Debug)]
struct InputArgs {
    /// Presentation file (JSON).
    file: PathBuf,
    /// Coefficient ring overriding the file's: Q, Z or GF(p).
    #[arg(long)]
    ring: Option<String>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Random candidates tried by the witness search.
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: usize,
    /// Write the report here instead of standard output.
    #[arg(long)]
    output: Option<PathBuf>,
    /// Name of a sub-algebra block, used as `H`.
    #[arg(long)]
    subalgebra: Option<String>,
    /// A weight, as comma-separated scalars or the name of a weights block. Repeatable.
    #[arg(long, allow_hyphen_values = true)]
    weight: Vec<String>,
}

#[derive(Args, Debug)]
struct CatalogArgs {
    name: Option<String>,
    #[arg(long)]
    size: Option<usize>,
    #[arg(long, default_value = "Q")]
    ring: String,
    /// Include the natural matrix module instead of defaulting to the adjoint.
    #[arg(long)]
    natural: bool,
    #[arg(long)]
    output: Option<PathBuf>,
}

/// Exit status and captured output of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn fail(code: i32, message: impl Into<String>) -> Self {
        let mut stderr = message.into();
        if !stderr.ends_with('\n') {
            stderr.push('\n');
        }
        Outcome { code, stdout: String::new(), stderr }
    }
}

enum Failure {
    Usage(String),
    Input(InputError),
}

impl From<engelkit::Error> for Failure {
    fn from(e: engelkit::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<InputError> for Failure {
    fn from(e: InputError) -> Self {
        Failure::Input(e)
    }
}

struct Computed {
    verdict: Value,
    certificate: Value,
    code: i32,
    violation: Option<String>,
}

impl Computed {
    fn ok(verdict: Value, certificate: Value) -> Self {
        Computed { verdict, certificate, code: EXIT_OK, violation: None }
    }

    fn check(mut self, holds: bool, message: &str) -> Self {
        if !holds && self.violation.is_none() {
            self.violation = Some(message.to_string());
            self.code = EXIT_THEOREM;
        }
        self
    }
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                    Outcome { code: EXIT_OK, stdout: text, stderr: String::new() }
                }
                _ => Outcome::fail(EXIT_USAGE, text),
            };
        }
    };
    let (name, args) = match cli.command {
        Command::Catalog(args) => return run_catalog(&args),
        Command::Validate(a) => ("validate", a),
        Command::Lcs(a) => ("lcs", a),
        Command::Nilpotent(a) => ("nilpotent", a),
        Command::Engel(a) => ("engel", a),
        Command::Flag(a) => ("flag", a),
        Command::Ascent(a) => ("ascent", a),
        Command::Weights(a) => ("weights", a),
        Command::Roots(a) => ("roots", a),
        Command::Cartan(a) => ("cartan", a),
    };
    run_command(name, &args)
}

fn digest(bytes: &[u8]) -> String {
    format!("sha256:{}", hex::encode(Sha256::digest(bytes)))
}

fn run_command(name: &str, args: &InputArgs) -> Outcome {
    let started = Instant::now();
    let text = match std::fs::read_to_string(&args.file) {
        Ok(t) => t,
        Err(e) => return Outcome::fail(EXIT_USAGE, format!("cannot read {}: {e}", args.file.display())),
    };
    let ring = match args.ring.as_deref().map(str::parse::<ScalarRing>).transpose() {
        Ok(r) => r,
        Err(e) => return Outcome::fail(EXIT_USAGE, format!("--ring: {e}")),
    };
    let presentation = match parse(&text, ring) {
        Ok(p) => p,
        Err(e) => return Outcome::fail(EXIT_USAGE, e.to_string()),
    };
    let result = if name == "validate" {
        Ok(validate(&presentation))
    } else {
        match presentation.build() {
            Ok((algebra, module)) => dispatch(name, args, &presentation, &algebra, &module),
            Err(e) => return Outcome::fail(EXIT_INVALID, e.to_string()),
        }
    };
    let computed = match result {
        Ok(c) => c,
        Err(Failure::Usage(m)) => return Outcome::fail(EXIT_USAGE, format!("{name}: {m}")),
        Err(Failure::Input(e)) => {
            let code = if matches!(e, InputError::Validation { .. }) { EXIT_INVALID } else { EXIT_USAGE };
            return Outcome::fail(code, e.to_string());
        }
    };
    let mut parameters = Map::new();
    parameters.insert("seed".into(), json!(args.seed));
    parameters.insert("budget".into(), json!(args.budget));
    parameters.insert("subalgebra".into(), json!(args.subalgebra));
    parameters.insert("weights".into(), json!(args.weight));
    let elapsed = started.elapsed().as_secs_f64() * 1000.0;
    let report = json!({
        "tool": "engelkit",
        "version": env!("CARGO_PKG_VERSION"),
        "command": name,
        "input_digest": digest(text.as_bytes()),
        "ring": presentation.ring.to_string(),
        "parameters": Value::Object(parameters),
        "verdict": computed.verdict,
        "certificate": computed.certificate,
        "timings": { "total_ms": (elapsed * 1000.0).round() / 1000.0 },
    });
    let mut out = serde_json::to_string_pretty(&report).expect("JSON values serialize");
    out.push('\n');
    let mut outcome = Outcome { code: computed.code, stdout: String::new(), stderr: String::new() };
    if let Some(v) = &computed.violation {
        outcome.stderr = format!("THEOREM VIOLATION: {v}\n");
    } else if computed.code == EXIT_INVALID {
        outcome.stderr = "validation failed\n".into();
    }
    match &args.output {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &out) {
                return Outcome::fail(EXIT_USAGE, format!("cannot write {}: {e}", path.display()));
            }
        }
        None => outcome.stdout = out,
    }
    outcome
}

fn dispatch(
    name: &str,
    args: &InputArgs,
    p: &Presentation,
    algebra: &LieAlgebra,
    module: &LieModule,
) -> Result<Computed, Failure> {
    match name {
        "lcs" => Ok(lcs(module)),
        "nilpotent" => Ok(nilpotent(module)),
        "engel" => engel(args, module),
        "flag" => flag(module),
        "ascent" => ascent(module),
        "weights" => weights(args, p, algebra, module),
        "roots" => roots(args, p, algebra),
        "cartan" => cartan(args, p, algebra),
        other => Err(Failure::Usage(format!("unknown command {other}"))),
    }
}

fn validate(p: &Presentation) -> Computed {
    let algebra_report = validate_algebra(&p.table);
    let mut verdict = Map::new();
    let mut certificate = Map::new();
    let mut passed = algebra_report.passed();
    verdict.insert("algebra".into(), json!(algebra_report.passed()));
    certificate.insert("algebra".into(), report::validation(&algebra_report));
    let algebra = if passed { LieAlgebra::new(p.names.clone(), p.table.clone()).ok() } else { None };
    match &algebra {
        Some(a) => {
            let (rank, action) = match &p.module {
                Some(block) => (block.rank, block.action.clone()),
                None => (a.rank(), a.adjoint().action().to_vec()),
            };
            let module_report = validate_module(a, rank, &action).expect("shapes checked while parsing");
            passed &= module_report.passed();
            verdict.insert("module".into(), json!(module_report.passed()));
            certificate.insert("module".into(), report::validation(&module_report));
            let mut subalgebras = Map::new();
            for (name, gens) in &p.subalgebras {
                let closed = Submodule::span(a.ring(), a.rank(), gens.clone())
                    .and_then(|s| a.subalgebra(&s))
                    .is_ok();
                passed &= closed;
                subalgebras.insert(name.clone(), json!(closed));
            }
            verdict.insert("subalgebras_closed".into(), Value::Object(subalgebras));
            if module_report.passed() {
                let module = LieModule::new(a.clone(), rank, action).expect("validated");
                let mut submodules = Map::new();
                for (name, gens) in &p.submodules {
                    let invariant = Submodule::span(a.ring(), rank, gens.clone())
                        .and_then(|s| engelkit::lattice::LieSubmodule::new(&module, s))
                        .is_ok();
                    passed &= invariant;
                    submodules.insert(name.clone(), json!(invariant));
                }
                verdict.insert("submodules_invariant".into(), Value::Object(submodules));
            }
        }
        None => {
            verdict.insert("module".into(), Value::Null);
            certificate.insert("module".into(), Value::Null);
        }
    }
    verdict.insert("passed".into(), json!(passed));
    let code = if passed { EXIT_OK } else { EXIT_INVALID };
    Computed { verdict: Value::Object(verdict), certificate: Value::Object(certificate), code, violation: None }
}

fn lcs(module: &LieModule) -> Computed {
    let chain = lower_central_series(module);
    let ranks: Vec<usize> = chain.terms.iter().map(Submodule::rank).collect();
    let verdict = json!({
        "nilpotent": chain.is_nilpotent(),
        "class": chain.class(),
        "series": report::lcs_verdict(chain.verdict),
        "ranks": ranks,
    });
    Computed::ok(verdict, report::chain(&chain))
}

fn nilpotent(module: &LieModule) -> Computed {
    let cert = is_nilpotent(module);
    let verified = cert.verify(module);
    let class = match &cert {
        engelkit::lattice::Nilpotency::Nilpotent { class, .. } => Some(*class),
        _ => None,
    };
    let verdict = json!({ "nilpotent": cert.is_nilpotent(), "class": class, "certificate_verified": verified });
    Computed::ok(verdict, report::nilpotency(&cert)).check(verified, "nilpotency certificate does not re-verify")
}

fn engel(args: &InputArgs, module: &LieModule) -> Result<Computed, Failure> {
    let verdict = check_forall_nilpotent(module, args.budget, args.seed);
    let mut basis_indices = Vec::new();
    for a in module.action() {
        basis_indices.push(is_nilpotent_endo(a)?.index());
    }
    let mut certificate = Map::new();
    certificate.insert("lcs".into(), report::nilpotency(&verdict.certificate));
    certificate.insert("basis_nilpotency_indices".into(), json!(basis_indices));
    certificate.insert("budget".into(), json!(args.budget));
    let mut consistent = true;
    if verdict.holds {
        let uniform = uniform_exponent_check(module, UNIFORM_SAMPLES, args.seed)?;
        consistent &= uniform.holds;
        certificate.insert("uniform_exponent".into(), report::uniform(&uniform));
        certificate.insert("witness".into(), Value::Null);
        certificate.insert("witness_search".into(), json!("skipped"));
    } else {
        certificate.insert("uniform_exponent".into(), Value::Null);
        match &verdict.witness {
            Some(w) => {
                consistent &= w.verify(module);
                certificate.insert("witness".into(), report::witness(w));
                certificate.insert("witness_search".into(), json!("found"));
            }
            None => {
                // distinguish an exhausted budget from other errors
                let status = match witness_search(module, args.budget, args.seed) {
                    Err(engelkit::Error::Exhausted { .. }) => "exhausted",
                    _ => "failed",
                };
                certificate.insert("witness".into(), Value::Null);
                certificate.insert("witness_search".into(), json!(status));
            }
        }
    }
    let out = json!({ "nilpotent": verdict.holds, "all_elements_act_nilpotently": verdict.holds });
    Ok(Computed::ok(out, Value::Object(certificate))
        .check(consistent, "uniform exponent or witness contradicts the lcs verdict"))
}

fn flag(module: &LieModule) -> Result<Computed, Failure> {
    let nilpotent = is_nilpotent(module).is_nilpotent();
    let outcome = engel_flag(module)?;
    Ok(match outcome {
        FlagOutcome::Flag(f) => {
            let verified = f.verify(module);
            let verdict = json!({ "nilpotent": nilpotent, "flag": "constructed", "length": f.flag.len() - 1 });
            Computed::ok(verdict, json!({ "flag": report::flag(&f, module) }))
                .check(nilpotent, "flag constructed for a module whose lcs does not terminate")
                .check(verified, "constructed flag does not re-verify")
        }
        FlagOutcome::Refuted(r) => {
            let verdict = json!({ "nilpotent": nilpotent, "flag": "refuted", "step": r.step });
            Computed::ok(verdict, json!({ "refutation": report::refutation(&r) }))
                .check(!nilpotent, "flag construction failed on a nilpotent module")
        }
    })
}

fn ascent(module: &LieModule) -> Result<Computed, Failure> {
    let nilpotent = is_nilpotent(module).is_nilpotent();
    let outcome = engelian_ascent(module)?;
    Ok(match outcome {
        AscentOutcome::Complete(chain) => {
            let image = &chain.reduction.module;
            let steps: Vec<Value> = chain.steps.iter().map(|s| report::ascent_step(s, image)).collect();
            let basis: Vec<Value> = image.action().iter().map(format::matrix_json).collect();
            let verified = chain.verify();
            let verdict = json!({
                "nilpotent": nilpotent,
                "complete": true,
                "length": chain.steps.len(),
                "image_rank": chain.reduction.algebra.rank(),
            });
            Computed::ok(verdict, json!({ "image_basis": basis, "steps": steps, "failure": null }))
                .check(verified, "ascent chain does not re-verify")
        }
        AscentOutcome::Failed(f) => {
            let image = &f.reduction.module;
            let steps: Vec<Value> = f.steps.iter().map(|s| report::ascent_step(s, image)).collect();
            let basis: Vec<Value> = image.action().iter().map(format::matrix_json).collect();
            let verdict = json!({
                "nilpotent": nilpotent,
                "complete": false,
                "length": f.steps.len(),
                "image_rank": f.reduction.algebra.rank(),
            });
            let failure = json!({ "k": report::submodule(&f.k), "quotient_lcs": report::chain(&f.chain) });
            Computed::ok(verdict, json!({ "image_basis": basis, "steps": steps, "failure": failure }))
                .check(!nilpotent, "ascent stalled on a nilpotent module")
        }
    })
}

fn subalgebra(args: &InputArgs, p: &Presentation, algebra: &LieAlgebra) -> Result<(String, NilpotentSubalgebra), Failure> {
    let name = args
        .subalgebra
        .clone()
        .ok_or_else(|| Failure::Usage("--subalgebra is required".into()))?;
    let gens = p
        .subalgebras
        .get(&name)
        .ok_or_else(|| Failure::Usage(format!("no sub-algebra named {name:?} in the input")))?;
    let carrier = Submodule::span(algebra.ring(), algebra.rank(), gens.clone())?;
    Ok((name, NilpotentSubalgebra::new(algebra, carrier)?))
}

fn labels(name: &str, h: &NilpotentSubalgebra) -> Vec<String> {
    (0..h.rank()).map(|i| format!("{name}[{i}]")).collect()
}

fn supplied_weights(args: &InputArgs, p: &Presentation, h: &NilpotentSubalgebra) -> Result<Option<Vec<Weight>>, Failure> {
    if args.weight.is_empty() {
        return Ok(None);
    }
    let ring = p.ring;
    let mut out = Vec::new();
    for w in &args.weight {
        if let Some(list) = p.weights.get(w) {
            out.extend(list.iter().map(|v| Weight { values: v.clone() }));
            continue;
        }
        let values = w
            .split(',')
            .map(|s| ring.parse_scalar(s.trim()))
            .collect::<engelkit::Result<Vec<_>>>()
            .map_err(|e| Failure::Usage(format!("--weight {w:?}: {e}")))?;
        out.push(Weight { values });
    }
    if let Some(bad) = out.iter().find(|w| w.values.len() != h.rank()) {
        return Err(Failure::Usage(format!(
            "weights need {} values, found {}",
            h.rank(),
            bad.values.len()
        )));
    }
    Ok(Some(out))
}

/// Over a field: the decomposition. Over Z: the spaces of the supplied weights, or of the zero weight.
fn decompose(
    hm: &engelkit::roots::HModule,
    supplied: Option<Vec<Weight>>,
) -> Result<RootSpaceDecomposition, Failure> {
    if hm.module.ring().is_field() {
        return Ok(weight_decomposition(hm, supplied.as_deref())?);
    }
    let candidates = supplied.unwrap_or_else(|| vec![Weight::zero(&hm.subalgebra)]);
    let mut weights = Vec::new();
    let mut total = Submodule::zero(hm.module.ring(), hm.module.rank());
    for w in candidates {
        let space = weight_space(hm, &w)?;
        if !space.is_zero() && !weights.iter().any(|(seen, _): &(Weight, Submodule)| *seen == w) {
            total = total.sum(&space)?;
            weights.push((w, space));
        }
    }
    let spanned_rank = total.rank();
    Ok(RootSpaceDecomposition { weights, spanned_rank, splits: spanned_rank == hm.module.rank() })
}

fn independent(d: &RootSpaceDecomposition) -> bool {
    let mut total: Option<Submodule> = None;
    let mut rank = 0;
    for (_, s) in &d.weights {
        rank += s.rank();
        total = Some(match total {
            None => s.clone(),
            Some(t) => t.sum(s).expect("same ambient"),
        });
    }
    total.map_or(0, |t| t.rank()) == rank
}

fn weights(args: &InputArgs, p: &Presentation, algebra: &LieAlgebra, module: &LieModule) -> Result<Computed, Failure> {
    let (name, h) = subalgebra(args, p, algebra)?;
    let supplied = supplied_weights(args, p, &h)?;
    let hm = restrict(module, &h)?;
    let d = decompose(&hm, supplied)?;
    let labels = labels(&name, &h);
    let verdict = json!({ "weights": d.weights.len(), "spanned_rank": d.spanned_rank, "splits": d.splits });
    let certificate = json!({
        "subalgebra": { "name": name, "basis": format::vectors_json(h.carrier().basis()) },
        "decomposition": report::decomposition(&d, &labels),
    });
    let sound = !module.ring().is_field() || independent(&d);
    Ok(Computed::ok(verdict, certificate).check(sound, "weight spaces for distinct weights overlap"))
}

fn roots(args: &InputArgs, p: &Presentation, algebra: &LieAlgebra) -> Result<Computed, Failure> {
    let (name, h) = subalgebra(args, p, algebra)?;
    let supplied = supplied_weights(args, p, &h)?;
    let zero = zero_root_subalgebra(algebra, &h)?;
    let hm = restrict(&algebra.adjoint(), &h)?;
    let decomposition = if supplied.is_some() || h.rank() <= 1 || !algebra.ring().is_field() {
        Some(decompose(&hm, supplied)?)
    } else {
        None
    };
    let contains_h = h.carrier().is_contained_in(&zero.carrier)?;
    let labels = labels(&name, &h);
    let verdict = json!({
        "zero_root_rank": zero.carrier.rank(),
        "zero_root_equals_h": zero.carrier == *h.carrier(),
        "h_in_zero_root": contains_h,
    });
    let certificate = json!({
        "subalgebra": { "name": name, "basis": format::vectors_json(h.carrier().basis()) },
        "zero_root": report::submodule(&zero.carrier),
        "decomposition": decomposition.as_ref().map(|d| report::decomposition(d, &labels)),
    });
    let sound = decomposition.as_ref().is_none_or(|d| !algebra.ring().is_field() || independent(d));
    Ok(Computed::ok(verdict, certificate)
        .check(contains_h, "H is not contained in the zero root space")
        .check(sound, "root spaces for distinct weights overlap"))
}

fn cartan(args: &InputArgs, p: &Presentation, algebra: &LieAlgebra) -> Result<Computed, Failure> {
    let (name, h) = subalgebra(args, p, algebra)?;
    let r = cartan_iff_zero_root(algebra, &h)?;
    let zero_nilpotent = r.zero_weight_nilpotency.is_nilpotent();
    let verdict = json!({
        "is_cartan": r.is_cartan,
        "zero_root_equals_h": r.zero_root_equals_h,
        "equivalent": r.equivalent(),
        "h_in_zero_root": r.h_in_zero_root,
        "zero_root_nilpotent_over_h": zero_nilpotent,
    });
    let mut certificate = report::cartan(&r);
    certificate["subalgebra"] = json!({ "name": name, "basis": format::vectors_json(h.carrier().basis()) });
    Ok(Computed::ok(verdict, certificate)
        .check(r.equivalent(), "H = L⁰ and H Cartan disagree")
        .check(r.h_in_zero_root, "H is not contained in L⁰")
        .check(zero_nilpotent, "L⁰ is not nilpotent as an H-module"))
}

/// The catalog entry as a presentation file, including its named sub-algebras.
pub fn catalog_presentation(name: &str, ring: ScalarRing, size: Option<usize>, natural: bool) -> engelkit::Result<Presentation> {
    let entry = catalog::catalog(name, ring, size)?;
    let module = if natural {
        Some(entry.natural.as_ref().ok_or(engelkit::Error::Precondition("this entry has no natural module"))?)
    } else {
        None
    };
    let mut p = Presentation::from_parts(&entry.algebra, module);
    for (label, carrier) in &entry.subalgebras {
        p.subalgebras.insert(label.clone(), carrier.basis().to_vec());
    }
    Ok(p)
}

fn run_catalog(args: &CatalogArgs) -> Outcome {
    let ring = match args.ring.parse::<ScalarRing>() {
        Ok(r) => r,
        Err(e) => return Outcome::fail(EXIT_USAGE, format!("--ring: {e}")),
    };
    let Some(name) = &args.name else {
        let report = json!({ "tool": "engelkit", "version": env!("CARGO_PKG_VERSION"), "command": "catalog", "entries": NAMES });
        let mut out = serde_json::to_string_pretty(&report).expect("JSON values serialize");
        out.push('\n');
        return Outcome { code: EXIT_OK, stdout: out, stderr: String::new() };
    };
    let p = match catalog_presentation(name, ring, args.size, args.natural) {
        Ok(p) => p,
        Err(e) => return Outcome::fail(EXIT_USAGE, format!("catalog: {e}")),
    };
    let text = p.emit();
    match &args.output {
        None => Outcome { code: EXIT_OK, stdout: text, stderr: String::new() },
        Some(path) => {
            if let Err(e) = std::fs::write(path, &text) {
                return Outcome::fail(EXIT_USAGE, format!("cannot write {}: {e}", path.display()));
            }
            let report = json!({
                "tool": "engelkit",
                "version": env!("CARGO_PKG_VERSION"),
                "command": "catalog",
                "entry": name,
                "ring": ring.to_string(),
                "written": path.display().to_string(),
                "digest": digest(text.as_bytes()),
            });
            let mut out = serde_json::to_string_pretty(&report).expect("JSON values serialize");
            out.push('\n');
            Outcome { code: EXIT_OK, stdout: out, stderr: String::new() }
        }
    }
}

/// Replaces the `timings` field of a report so reports can be compared byte for byte.
pub fn mask_timings(report: &str) -> String {
    match serde_json::from_str::<Value>(report) {
        Ok(mut v) => {
            if let Some(obj) = v.as_object_mut() {
                if obj.contains_key("timings") {
                    obj.insert("timings".into(), json!("masked"));
                }
            }
            let mut out = serde_json::to_string_pretty(&v).expect("JSON values serialize");
            out.push('\n');
            out
        }
        Err(_) => report.to_string(),
    }
}
