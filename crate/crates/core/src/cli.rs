//! Command-line front end: JSON envelopes, command dispatch and exit codes.
//!
//! Every command prints one JSON object `{status, payload, diagnostics}`,
//! except `demo`, which prints a text table. Exit codes: 0 ok, 1 invalid
//! input, 2 parse error, 3 violation.

use std::fmt::Write as _;
use std::io::Read;

use clap::Parser;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::linalg::LocalMatrix;
use crate::moncat::{
    self, axioms, injective_presentation, is_null_homotopic, kernel_of_deflation,
    projective_presentation, pullback_deflation, pushout_inflation, random, Conflation,
    MonMorphism, MonObject,
};
use crate::paircat::{self, PairMorphism, PairObject};
use crate::scalar::OmegaSpec;
use crate::singcat::{self, RModuleObject};
use crate::text::{parse_matrix, parse_scalar};

pub const COMMANDS: [&str; 20] = [
    "validate",
    "sigma",
    "pair-of",
    "invert-pair",
    "shift",
    "cone",
    "decompose",
    "coker",
    "stable-hom",
    "is-projective",
    "is-nullhomotopic",
    "pushout",
    "pullback",
    "kernel",
    "present-proj",
    "present-inj",
    "density-preimage",
    "check-t",
    "axioms",
    "demo",
];

/// Settings shared by all commands.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SessionConfig {
    pub field: FieldSpec,
    /// Default omega for inputs that do not carry one, and for generated data.
    pub omega: Option<String>,
    pub seed: u64,
    pub trials: usize,
    pub size_bound: usize,
    pub n: Option<u32>,
}

impl Default for SessionConfig {
    fn default() -> Self {
        SessionConfig {
            field: FieldSpec::Rationals,
            omega: None,
            seed: 0,
            trials: 100,
            size_bound: 2,
            n: None,
        }
    }
}

impl SessionConfig {
    fn omega(&self) -> Result<OmegaSpec> {
        let text = self.omega.as_deref().unwrap_or("x^2");
        OmegaSpec::new(parse_scalar(self.field, text)?)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Ok,
    InvalidInput,
    Violation,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CommandResult {
    pub status: Status,
    pub payload: Value,
    pub diagnostics: Vec<String>,
    #[serde(skip)]
    pub exit_code: i32,
    /// Text output replacing the JSON envelope (`demo` only).
    #[serde(skip)]
    pub text: Option<String>,
}

impl CommandResult {
    fn ok(payload: Value) -> Self {
        CommandResult {
            status: Status::Ok,
            payload,
            diagnostics: Vec::new(),
            exit_code: 0,
            text: None,
        }
    }

    fn error(e: &Error) -> Self {
        CommandResult {
            status: Status::InvalidInput,
            payload: Value::Null,
            diagnostics: vec![e.to_string()],
            exit_code: if matches!(e, Error::Parse { .. }) { 2 } else { 1 },
            text: None,
        }
    }

    /// What the binary prints.
    pub fn render(&self) -> String {
        match &self.text {
            Some(t) => t.clone(),
            None => {
                let mut s = serde_json::to_string_pretty(self).expect("serializable");
                s.push('\n');
                s
            }
        }
    }
}

/// A parsed input value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Input {
    Mon(MonObject),
    Pair(PairObject),
    MonMorphism(MonMorphism),
    PairMorphism(PairMorphism),
    Module(RModuleObject),
}

impl Input {
    fn kind(&self) -> &'static str {
        match self {
            Input::Mon(_) => "mon-object",
            Input::Pair(_) => "pair-object",
            Input::MonMorphism(_) => "mon-morphism",
            Input::PairMorphism(_) => "pair-morphism",
            Input::Module(_) => "r-module",
        }
    }
}

fn json_error(e: &serde_json::Error) -> Error {
    Error::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    }
}

/// Parses one envelope, or a JSON array of envelopes.
pub fn parse_inputs(text: &str, field: FieldSpec, default_omega: Option<&str>) -> Result<Vec<Input>> {
    let value: Value = serde_json::from_str(text).map_err(|e| json_error(&e))?;
    match value {
        Value::Array(items) => items
            .iter()
            .map(|v| parse_value(v, field, default_omega))
            .collect(),
        v => Ok(vec![parse_value(&v, field, default_omega)?]),
    }
}

/// Parses a single envelope.
pub fn parse_input(text: &str, field: FieldSpec) -> Result<Input> {
    let value: Value = serde_json::from_str(text).map_err(|e| json_error(&e))?;
    parse_value(&value, field, None)
}

fn envelope_error(message: impl Into<String>) -> Error {
    Error::Parse {
        line: 1,
        column: 1,
        message: message.into(),
    }
}

fn get_str<'a>(obj: &'a Map<String, Value>, key: &str) -> Result<Option<&'a str>> {
    match obj.get(key) {
        None => Ok(None),
        Some(Value::String(s)) => Ok(Some(s)),
        Some(_) => Err(envelope_error(format!("{key:?} must be a string"))),
    }
}

struct Context {
    field: FieldSpec,
    omega: Option<OmegaSpec>,
}

fn context(
    obj: &Map<String, Value>,
    field: FieldSpec,
    default_omega: Option<&str>,
) -> Result<Context> {
    let field = match get_str(obj, "field")? {
        Some(f) => FieldSpec::parse(f)?,
        None => field,
    };
    let omega = match get_str(obj, "omega")?.or(default_omega) {
        Some(text) => Some(OmegaSpec::new(parse_scalar(field, text)?)?),
        None => None,
    };
    Ok(Context { field, omega })
}

fn require_omega(ctx: &Context) -> Result<&OmegaSpec> {
    ctx.omega
        .as_ref()
        .ok_or_else(|| envelope_error("missing \"omega\" (pass it in the input or with --omega)"))
}

fn matrix_at(obj: &Map<String, Value>, key: &str, field: FieldSpec) -> Result<LocalMatrix> {
    let text = get_str(obj, key)?.ok_or_else(|| envelope_error(format!("missing {key:?}")))?;
    parse_matrix(field, text)
}

fn parse_value(v: &Value, field: FieldSpec, default_omega: Option<&str>) -> Result<Input> {
    let obj = v
        .as_object()
        .ok_or_else(|| envelope_error("expected a JSON object"))?;
    if obj.contains_key("exponents") {
        let n = obj
            .get("n")
            .and_then(Value::as_u64)
            .ok_or_else(|| envelope_error("\"n\" must be a nonnegative integer"))?;
        let exps = obj["exponents"]
            .as_array()
            .and_then(|a| a.iter().map(|e| e.as_u64().map(|e| e as u32)).collect())
            .ok_or_else(|| envelope_error("\"exponents\" must be a list of integers"))?;
        return Ok(Input::Module(RModuleObject::new(n as u32, exps)?));
    }
    let ctx = context(obj, field, default_omega)?;
    if obj.contains_key("psi0") || obj.contains_key("psi1") {
        let w = require_omega(&ctx)?.clone();
        let omega_text = w.to_string();
        let end = |key: &str| -> Result<Input> {
            match obj.get(key) {
                Some(Value::String(f)) => Ok(Input::Mon(MonObject::new(parse_matrix(ctx.field, f)?, &w)?)),
                Some(Value::Object(_)) => parse_value(&obj[key], ctx.field, Some(&omega_text)),
                _ => Err(envelope_error(format!("missing {key:?}"))),
            }
        };
        let (source, target) = (end("source")?, end("target")?);
        let psi1 = matrix_at(obj, "psi1", ctx.field)?;
        let psi0 = matrix_at(obj, "psi0", ctx.field)?;
        return match (source, target) {
            (Input::Mon(s), Input::Mon(t)) => {
                Ok(Input::MonMorphism(MonMorphism::new(&s, &t, psi1, psi0)?))
            }
            (Input::Pair(s), Input::Pair(t)) => {
                Ok(Input::PairMorphism(PairMorphism::new(&s, &t, psi1, psi0)?))
            }
            _ => Err(envelope_error("source and target must be objects of the same kind")),
        };
    }
    if obj.contains_key("rho1") || obj.contains_key("rho0") {
        let w = require_omega(&ctx)?;
        let rho1 = matrix_at(obj, "rho1", ctx.field)?;
        let rho0 = matrix_at(obj, "rho0", ctx.field)?;
        return Ok(Input::Pair(paircat::pair_make(rho1, rho0, w)?));
    }
    if obj.contains_key("f") {
        let w = require_omega(&ctx)?;
        return Ok(Input::Mon(MonObject::new(matrix_at(obj, "f", ctx.field)?, w)?));
    }
    Err(envelope_error(
        "unrecognised envelope: expected keys f, rho1/rho0, psi1/psi0 or n/exponents",
    ))
}

fn with_header(field: FieldSpec, omega: &OmegaSpec, mut body: Map<String, Value>) -> Value {
    if field != FieldSpec::Rationals {
        body.insert("field".into(), json!(field.to_string()));
    }
    body.insert("omega".into(), json!(omega.to_string()));
    Value::Object(body)
}

pub fn mon_json(x: &MonObject) -> Value {
    let mut m = Map::new();
    m.insert("f".into(), json!(x.matrix().to_string()));
    with_header(x.field(), x.omega(), m)
}

pub fn pair_json(p: &PairObject) -> Value {
    let mut m = Map::new();
    m.insert("rho1".into(), json!(p.rho1().to_string()));
    m.insert("rho0".into(), json!(p.rho0().to_string()));
    with_header(p.omega().field(), p.omega(), m)
}

pub fn mon_morphism_json(m: &MonMorphism) -> Value {
    let mut body = Map::new();
    body.insert("source".into(), json!(m.source().matrix().to_string()));
    body.insert("target".into(), json!(m.target().matrix().to_string()));
    body.insert("psi1".into(), json!(m.psi1().to_string()));
    body.insert("psi0".into(), json!(m.psi0().to_string()));
    with_header(m.source().field(), m.source().omega(), body)
}

pub fn pair_morphism_json(m: &PairMorphism) -> Value {
    let end = |p: &PairObject| json!({"rho1": p.rho1().to_string(), "rho0": p.rho0().to_string()});
    let mut body = Map::new();
    body.insert("source".into(), end(m.source()));
    body.insert("target".into(), end(m.target()));
    body.insert("psi1".into(), json!(m.psi1().to_string()));
    body.insert("psi0".into(), json!(m.psi0().to_string()));
    with_header(m.source().omega().field(), m.source().omega(), body)
}

pub fn module_json(m: &RModuleObject) -> Value {
    serde_json::to_value(m).expect("serializable")
}

/// Prints any input in its envelope form; parsing the result gives it back.
pub fn input_json(input: &Input) -> Value {
    match input {
        Input::Mon(x) => mon_json(x),
        Input::Pair(p) => pair_json(p),
        Input::MonMorphism(m) => mon_morphism_json(m),
        Input::PairMorphism(m) => pair_morphism_json(m),
        Input::Module(m) => module_json(m),
    }
}

fn conflation_json(c: &Conflation) -> Value {
    json!({
        "left": mon_json(&c.left),
        "middle": mon_json(&c.middle),
        "right": mon_json(&c.right),
        "inflation": mon_morphism_json(&c.inflation),
        "deflation": mon_morphism_json(&c.deflation),
    })
}

fn wrong_inputs(command: &str, expected: &str, inputs: &[Input]) -> Error {
    let got: Vec<&str> = inputs.iter().map(Input::kind).collect();
    Error::InvalidInput(format!("{command} expects {expected}, got [{}]", got.join(", ")))
}

/// Runs one command on already parsed inputs.
pub fn run_command(cfg: &SessionConfig, command: &str, inputs: &[Input]) -> CommandResult {
    match dispatch(cfg, command, inputs) {
        Ok(r) => r,
        Err(e) => CommandResult::error(&e),
    }
}

fn dispatch(cfg: &SessionConfig, command: &str, inputs: &[Input]) -> Result<CommandResult> {
    if cfg.trials == 0 || cfg.size_bound == 0 {
        return Err(Error::InvalidInput(
            "--trials and --size-bound must be at least 1".into(),
        ));
    }
    let wrong = |expected: &str| wrong_inputs(command, expected, inputs);
    let payload = match (command, inputs) {
        ("validate", [x]) => {
            let mut v = json!({"valid": true, "kind": x.kind()});
            match x {
                Input::Mon(x) => v["exponents"] = json!(x.exponents()),
                Input::Pair(p) => v["exponents"] = json!(paircat::pair_decompose(p)),
                Input::Module(m) => v["exponents"] = json!(m.exponents),
                _ => {}
            }
            v
        }
        ("validate", _) => return Err(wrong("one input")),
        ("sigma", [Input::Mon(x)]) => json!(x.sigma().to_string()),
        ("sigma", _) => return Err(wrong("one mon-object")),
        ("pair-of", [Input::Mon(x)]) => pair_json(&paircat::functor_f(x)),
        ("pair-of", [Input::MonMorphism(m)]) => pair_morphism_json(&paircat::functor_f_morphism(m)),
        ("pair-of", _) => return Err(wrong("one mon-object or mon-morphism")),
        ("invert-pair", [Input::Pair(p)]) => mon_json(&paircat::functor_f_inverse(p)),
        ("invert-pair", [Input::PairMorphism(m)]) => {
            mon_morphism_json(&paircat::functor_f_inverse_morphism(m))
        }
        ("invert-pair", _) => return Err(wrong("one pair-object or pair-morphism")),
        ("shift", [Input::Mon(x)]) => mon_json(&moncat::shift(x)),
        ("shift", [Input::Pair(p)]) => pair_json(&paircat::pair_shift(p)),
        ("shift", [Input::MonMorphism(m)]) => mon_morphism_json(&moncat::shift_morphism(m)?),
        ("shift", [Input::PairMorphism(m)]) => pair_morphism_json(&paircat::pair_shift_morphism(m)),
        ("shift", [Input::Module(m)]) => {
            module_json(&singcat::rmod_syzygy(m, singcat::SyzygyDirection::OmegaInverse))
        }
        ("shift", _) => return Err(wrong("one object or morphism")),
        ("cone", [Input::MonMorphism(m)]) => {
            let c = moncat::cone(m)?;
            json!({
                "object": mon_json(&c.object),
                "fromTarget": mon_morphism_json(&c.from_target),
                "toShift": mon_morphism_json(&c.to_shift),
            })
        }
        ("cone", [Input::PairMorphism(m)]) => json!({"object": pair_json(&paircat::pair_cone(m)?)}),
        ("cone", _) => return Err(wrong("one morphism")),
        ("decompose", [Input::Pair(p)]) => json!(paircat::pair_decompose(p)),
        ("decompose", [Input::Mon(x)]) => json!(paircat::pair_decompose(&paircat::functor_f(x))),
        ("decompose", _) => return Err(wrong("one object")),
        ("coker", [Input::Mon(x)]) => module_json(&singcat::functor_t(x)),
        ("coker", [Input::Pair(p)]) => {
            module_json(&singcat::functor_t(&paircat::functor_f_inverse(p)))
        }
        ("coker", _) => return Err(wrong("one object")),
        ("stable-hom", [Input::Mon(x), Input::Mon(y)]) => {
            json!({"dimension": moncat::stable_hom_dimension(x, y)?})
        }
        ("stable-hom", [Input::Pair(p), Input::Pair(q)]) => {
            json!({"dimension": paircat::pair_stable_hom_dimension(p, q)?})
        }
        ("stable-hom", [Input::Module(m), Input::Module(n)]) => {
            json!({"dimension": singcat::rmod_stable_hom_dimension(m, n)?})
        }
        ("stable-hom", _) => return Err(wrong("two objects of the same kind")),
        ("is-projective", [Input::Mon(x)]) => json!(moncat::is_projective_object(x)?),
        ("is-projective", [Input::Pair(p)]) => json!(paircat::pair_is_contractible(p)?),
        ("is-projective", [Input::Module(m)]) => json!(m.is_stably_zero()),
        ("is-projective", _) => return Err(wrong("one object")),
        ("is-nullhomotopic", [Input::MonMorphism(m)]) => match is_null_homotopic(m)? {
            Some(w) => json!({"nullHomotopic": true, "witness": {
                "s0": w.s0.to_string(), "s1": w.s1.to_string()}}),
            None => json!({"nullHomotopic": false, "witness": null}),
        },
        ("is-nullhomotopic", [Input::PairMorphism(m)]) => match paircat::pair_is_null_homotopic(m)? {
            Some(w) => json!({"nullHomotopic": true, "witness": {
                "s0": w.s0.to_string(), "s1": w.s1.to_string()}}),
            None => json!({"nullHomotopic": false, "witness": null}),
        },
        ("is-nullhomotopic", _) => return Err(wrong("one morphism")),
        ("pushout", [Input::MonMorphism(phi), Input::MonMorphism(theta)]) => {
            let po = pushout_inflation(phi, theta)?;
            json!({
                "object": mon_json(&po.object),
                "fromTarget": mon_morphism_json(&po.from_target),
                "fromOther": mon_morphism_json(&po.from_other),
            })
        }
        ("pushout", _) => return Err(wrong("an inflation and a morphism from its source")),
        ("pullback", [Input::MonMorphism(phi), Input::MonMorphism(theta)]) => {
            let pb = pullback_deflation(phi, theta)?;
            json!({
                "object": mon_json(&pb.object),
                "toSource": mon_morphism_json(&pb.to_source),
                "toOther": mon_morphism_json(&pb.to_other),
            })
        }
        ("pullback", _) => return Err(wrong("a deflation and a morphism into its target")),
        ("kernel", [Input::MonMorphism(d)]) => {
            let (k, incl) = kernel_of_deflation(d)?;
            json!({"object": mon_json(&k), "inclusion": mon_morphism_json(&incl)})
        }
        ("kernel", _) => return Err(wrong("one deflation")),
        ("present-proj", [Input::Mon(x)]) => conflation_json(&projective_presentation(x)?),
        ("present-proj", _) => return Err(wrong("one mon-object")),
        ("present-inj", [Input::Mon(x)]) => conflation_json(&injective_presentation(x)?),
        ("present-inj", _) => return Err(wrong("one mon-object")),
        ("density-preimage", [Input::Module(m)]) => {
            let w = match &cfg.omega {
                Some(_) => cfg.omega()?,
                None => OmegaSpec::x_pow(cfg.field, m.n)?,
            };
            mon_json(&singcat::density_preimage(m, &w)?)
        }
        ("density-preimage", _) => return Err(wrong("one r-module")),
        ("check-t", [Input::Mon(x), Input::Mon(y)]) => {
            let r = singcat::check_t_full_faithful(x, y)?;
            let status = if r.agree { Status::Ok } else { Status::Violation };
            return Ok(with_status(status, serde_json::to_value(r).expect("serializable")));
        }
        ("check-t", []) => return check_t_random(cfg),
        ("check-t", _) => return Err(wrong("two mon-objects, or no input for random pairs")),
        ("axioms", []) => {
            let w = cfg.omega()?;
            let report = axioms::axiom_suite(cfg.seed, cfg.trials, &w, cfg.size_bound);
            let status = if report.passed() { Status::Ok } else { Status::Violation };
            return Ok(with_status(status, serde_json::to_value(report).expect("serializable")));
        }
        ("axioms", _) => return Err(wrong("no input")),
        ("demo", []) => return demo(cfg),
        ("demo", _) => return Err(wrong("no input")),
        (other, _) => return Err(Error::UnknownCommand(other.to_string())),
    };
    Ok(CommandResult::ok(payload))
}

fn with_status(status: Status, payload: Value) -> CommandResult {
    let mut r = CommandResult::ok(payload);
    if status == Status::Violation {
        r.status = status;
        r.exit_code = 3;
        r.diagnostics.push("counterexample found".into());
    }
    r
}

fn check_t_random(cfg: &SessionConfig) -> Result<CommandResult> {
    let w = cfg.omega()?;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut rows = Vec::new();
    let mut all = true;
    for _ in 0..cfg.trials {
        let x = random::random_object(&mut rng, &w, cfg.size_bound);
        let y = random::random_object(&mut rng, &w, cfg.size_bound);
        let r = singcat::check_t_full_faithful(&x, &y)?;
        all &= r.agree;
        rows.push(json!({
            "x": mon_json(&x),
            "y": mon_json(&y),
            "report": r,
        }));
    }
    let status = if all { Status::Ok } else { Status::Violation };
    Ok(with_status(status, json!(rows)))
}

/// Indecomposables `(x^a, x^(n-a))`, `0 < a < n`, and their stable Hom
/// dimensions, computed on the pair side.
pub fn demo_table(field: FieldSpec, n: u32) -> Result<(String, Vec<Vec<usize>>)> {
    let w = OmegaSpec::x_pow(field, n)?;
    let atoms: Vec<PairObject> = (1..n)
        .map(|a| MonObject::from_exponents(&[a], &w).map(|x| paircat::functor_f(&x)))
        .collect::<Result<_>>()?;
    let mut dims = Vec::new();
    for p in &atoms {
        let row = atoms
            .iter()
            .map(|q| paircat::pair_stable_hom_dimension(p, q))
            .collect::<Result<Vec<_>>>()?;
        dims.push(row);
    }
    let mut out = String::new();
    let _ = writeln!(out, "omega = {w} over {field}");
    let _ = writeln!(out, "indecomposable matrix factorizations:");
    for (a, p) in (1..n).zip(&atoms) {
        let _ = writeln!(out, "  X{a} = ({}, {})", p.rho1(), p.rho0());
    }
    let _ = writeln!(out, "stable Hom dimensions dim Hom(Xa, Xb):");
    let header: String = (1..n).map(|b| format!("{:>5}", format!("X{b}"))).collect();
    let _ = writeln!(out, "     {header}");
    for (a, row) in (1..n).zip(&dims) {
        let cells: String = row.iter().map(|d| format!("{d:>5}")).collect();
        let _ = writeln!(out, "{:>5}{cells}", format!("X{a}"));
    }
    let rows: Vec<String> = dims
        .iter()
        .map(|r| format!("[{}]", r.iter().map(|d| d.to_string()).collect::<Vec<_>>().join(",")))
        .collect();
    let _ = writeln!(out, "matrix: [{}]", rows.join(","));
    Ok((out, dims))
}

fn demo(cfg: &SessionConfig) -> Result<CommandResult> {
    let n = match cfg.n {
        Some(n) => n,
        None => cfg.omega()?.n(),
    };
    let (text, dims) = demo_table(cfg.field, n)?;
    let mut r = CommandResult::ok(json!(dims));
    r.text = Some(text);
    Ok(r)
}

#[derive(Parser, Debug)]
#[command(name = "stablemon", about = "Exact computations with monomorphism categories and matrix factorizations over k[x] localized at x")]
pub struct Args {
    /// One of: validate, sigma, pair-of, invert-pair, shift, cone, decompose,
    /// coker, stable-hom, is-projective, is-nullhomotopic, pushout, pullback,
    /// kernel, present-proj, present-inj, density-preimage, check-t, axioms,
    /// demo.
    pub command: String,
    /// Input files with JSON envelopes; `-` reads standard input.
    pub inputs: Vec<String>,
    /// `rational` or `fp:<p>`.
    #[arg(long, default_value = "rational")]
    pub field: String,
    /// Default omega, e.g. `x^3` or `(x^2)/(1+x)`.
    #[arg(long)]
    pub omega: Option<String>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 100)]
    pub trials: usize,
    #[arg(long = "size-bound", default_value_t = 2)]
    pub size_bound: usize,
    /// Nilpotency order for `demo`.
    #[arg(long)]
    pub n: Option<u32>,
}

/// Commands that read no input unless files are given.
fn reads_stdin_by_default(command: &str) -> bool {
    !matches!(command, "axioms" | "demo" | "check-t")
}

/// Full pipeline behind the binary: parses arguments, reads inputs, runs the
/// command. Returns the printed text and the exit code.
pub fn run(args: &[String], stdin: &mut dyn Read) -> (String, i32) {
    let args = match Args::try_parse_from(args) {
        Ok(a) => a,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            return (e.to_string(), code);
        }
    };
    let r = run_args(&args, stdin);
    (r.render(), r.exit_code)
}

pub fn run_args(args: &Args, stdin: &mut dyn Read) -> CommandResult {
    let field = match FieldSpec::parse(&args.field) {
        Ok(f) => f,
        Err(e) => return CommandResult::error(&e),
    };
    let cfg = SessionConfig {
        field,
        omega: args.omega.clone(),
        seed: args.seed,
        trials: args.trials,
        size_bound: args.size_bound,
        n: args.n,
    };
    if !COMMANDS.contains(&args.command.as_str()) {
        return CommandResult::error(&Error::UnknownCommand(args.command.clone()));
    }
    let mut sources = args.inputs.clone();
    if sources.is_empty() && reads_stdin_by_default(&args.command) {
        sources.push("-".into());
    }
    let mut inputs = Vec::new();
    for src in &sources {
        let text = if src == "-" {
            let mut s = String::new();
            if let Err(e) = stdin.read_to_string(&mut s) {
                return CommandResult::error(&Error::InvalidInput(format!("stdin: {e}")));
            }
            s
        } else {
            match std::fs::read_to_string(src) {
                Ok(s) => s,
                Err(e) => return CommandResult::error(&Error::InvalidInput(format!("{src}: {e}"))),
            }
        };
        match parse_inputs(&text, cfg.field, cfg.omega.as_deref()) {
            Ok(mut v) => inputs.append(&mut v),
            Err(e) => return CommandResult::error(&e),
        }
    }
    run_command(&cfg, &args.command, &inputs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str], stdin: &str) -> (String, i32) {
        let mut args: Vec<String> = args.iter().map(|s| s.to_string()).collect();
        args.insert(0, "stablemon".into());
        run(&args, &mut stdin.as_bytes())
    }

    fn payload(out: &str) -> Value {
        serde_json::from_str::<Value>(out).unwrap()["payload"].clone()
    }

    #[test]
    fn parse_examples() {
        let q = FieldSpec::Rationals;
        let x = parse_input(r#"{"omega":"x^2","f":"[[x]]"}"#, q).unwrap();
        assert!(matches!(x, Input::Mon(_)));
        let p = parse_input(r#"{"omega":"x^2","rho1":"[[x]]","rho0":"[[x]]"}"#, q).unwrap();
        assert!(matches!(p, Input::Pair(_)));
        assert_eq!(
            parse_input(r#"{"omega":"x^2","f":"[[x,1]]"}"#, q),
            Err(Error::NotSquare { rows: 1, cols: 2 })
        );
        assert!(matches!(parse_input("{", q), Err(Error::Parse { .. })));
    }

    #[test]
    fn sigma_command() {
        let (out, code) = run_str(&["sigma"], r#"{"omega":"x^2","f":"[[x]]"}"#);
        assert_eq!(code, 0);
        assert_eq!(payload(&out), json!("[[x]]"));
    }

    #[test]
    fn exit_codes() {
        assert_eq!(run_str(&["sigma"], r#"{"omega":"x","f":"[[x, -1],[0, x]]"}"#).1, 1);
        assert_eq!(run_str(&["sigma"], "not json").1, 2);
        assert_eq!(run_str(&["frobnicate"], "").1, 1);
        assert_eq!(run_str(&["axioms", "--trials", "3"], "").1, 0);
    }

    #[test]
    fn violations_exit_with_three() {
        let r = with_status(Status::Violation, json!(null));
        assert_eq!((r.exit_code, r.status), (3, Status::Violation));
        assert!(r.render().contains("\"violation\""));
    }

    #[test]
    fn demo_matrix() {
        let (_, dims) = demo_table(FieldSpec::Rationals, 4).unwrap();
        assert_eq!(dims, vec![vec![1, 1, 1], vec![1, 2, 1], vec![1, 1, 1]]);
    }
}
