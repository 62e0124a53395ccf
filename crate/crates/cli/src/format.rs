//! JSON presentation files.
//!
//! ```json
//! {
//!   "ring": "Q",
//!   "algebra": { "rank": 3, "basis": ["e", "f", "z"], "brackets": [[0, 1, 2, "1"]] },
//!   "module": { "rank": 2, "action": [[["0", "1"], ["0", "0"]], ...] },
//!   "subalgebras": { "center": [["0", "0", "1"]] },
//!   "submodules": { "top": [["1", "0"], ["0", "1"]] },
//!   "weights": { "h": [["2"], ["-2"]] }
//! }
//! ```
//!
//! Only `ring` and `algebra` are required. Bracket entries `[i, j, k, c]` set the
//! coefficient of `e_k` in `[e_i, e_j]` and need `i < j`; repeating `(i, j, k)` is
//! an error. Without a `module` block the adjoint module is used. Scalars are
//! strings (`"3"`, `"-1/2"`) or JSON integers.

use std::collections::BTreeMap;
use std::fmt;

use engelkit::{BracketTable, LieAlgebra, LieModule, Matrix, Scalar, ScalarRing, ValidationReport, Vector};
use serde_json::{json, Map, Value};

/// Ranks above this are rejected while parsing.
pub const MAX_RANK: usize = 64;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleBlock {
    pub rank: usize,
    pub action: Vec<Matrix>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    pub ring: ScalarRing,
    pub names: Vec<String>,
    pub table: BracketTable,
    pub module: Option<ModuleBlock>,
    pub subalgebras: BTreeMap<String, Vec<Vector>>,
    pub submodules: BTreeMap<String, Vec<Vector>>,
    pub weights: BTreeMap<String, Vec<Vector>>,
}

#[derive(Clone, Debug)]
pub enum InputError {
    Syntax { line: usize, column: usize, message: String },
    Invalid { location: String, message: String },
    Validation { block: &'static str, report: ValidationReport },
}

impl InputError {
    fn invalid(location: impl Into<String>, message: impl Into<String>) -> Self {
        InputError::Invalid { location: location.into(), message: message.into() }
    }
}

impl fmt::Display for InputError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InputError::Syntax { line, column, message } => {
                write!(f, "syntax error at line {line}, column {column}: {message}")
            }
            InputError::Invalid { location, message } => write!(f, "invalid input at {location}: {message}"),
            InputError::Validation { block, report } => write!(f, "{block} block fails validation: {report}"),
        }
    }
}

impl std::error::Error for InputError {}

type Parsed<T> = Result<T, InputError>;

fn object<'a>(value: &'a Value, at: &str) -> Parsed<&'a Map<String, Value>> {
    value.as_object().ok_or_else(|| InputError::invalid(at, "expected an object"))
}

fn array<'a>(value: &'a Value, at: &str) -> Parsed<&'a Vec<Value>> {
    value.as_array().ok_or_else(|| InputError::invalid(at, "expected an array"))
}

fn index(value: &Value, at: &str, bound: usize) -> Parsed<usize> {
    let n = value
        .as_u64()
        .ok_or_else(|| InputError::invalid(at, "expected a non-negative integer"))?;
    usize::try_from(n)
        .ok()
        .filter(|&n| n < bound)
        .ok_or_else(|| InputError::invalid(at, format!("{n} is out of range (must be below {bound})")))
}

fn rank(value: Option<&Value>, at: &str) -> Parsed<usize> {
    let value = value.ok_or_else(|| InputError::invalid(at, "missing rank"))?;
    index(value, at, MAX_RANK + 1)
}

fn check_keys(map: &Map<String, Value>, at: &str, allowed: &[&str]) -> Parsed<()> {
    match map.keys().find(|k| !allowed.contains(&k.as_str())) {
        Some(k) => Err(InputError::invalid(format!("{at}.{k}"), "unknown key")),
        None => Ok(()),
    }
}

fn scalar(ring: ScalarRing, value: &Value, at: &str) -> Parsed<Scalar> {
    match value {
        Value::String(s) => ring.parse_scalar(s).map_err(|e| InputError::invalid(at, e.to_string())),
        Value::Number(n) => n
            .as_i64()
            .map(|v| ring.from_i64(v))
            .ok_or_else(|| InputError::invalid(at, "numbers must be 64-bit integers; use a string")),
        _ => Err(InputError::invalid(at, "expected a scalar string or integer")),
    }
}

fn vector(ring: ScalarRing, value: &Value, at: &str, len: usize) -> Parsed<Vector> {
    let items = array(value, at)?;
    if items.len() != len {
        return Err(InputError::invalid(at, format!("expected {len} entries, found {}", items.len())));
    }
    items.iter().enumerate().map(|(i, v)| scalar(ring, v, &format!("{at}[{i}]"))).collect()
}

fn vectors(ring: ScalarRing, value: &Value, at: &str, len: usize) -> Parsed<Vec<Vector>> {
    let items = array(value, at)?;
    if items.len() > 4 * MAX_RANK {
        return Err(InputError::invalid(at, "too many vectors"));
    }
    items.iter().enumerate().map(|(i, v)| vector(ring, v, &format!("{at}[{i}]"), len)).collect()
}

fn named_vectors(
    ring: ScalarRing,
    value: Option<&Value>,
    at: &str,
    len: impl Fn(&str) -> Parsed<usize>,
) -> Parsed<BTreeMap<String, Vec<Vector>>> {
    let mut out = BTreeMap::new();
    if let Some(value) = value {
        for (name, v) in object(value, at)? {
            let loc = format!("{at}.{name}");
            out.insert(name.clone(), vectors(ring, v, &loc, len(&loc)?)?);
        }
    }
    Ok(out)
}

/// Parses a presentation; `ring` replaces the file's ring when given.
pub fn parse(text: &str, ring: Option<ScalarRing>) -> Parsed<Presentation> {
    let root: Value = serde_json::from_str(text).map_err(|e| InputError::Syntax {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    let top = object(&root, "$")?;
    check_keys(top, "$", &["ring", "algebra", "module", "subalgebras", "submodules", "weights"])?;
    let declared = top.get("ring").ok_or_else(|| InputError::invalid("$.ring", "missing ring"))?;
    let declared = declared.as_str().ok_or_else(|| InputError::invalid("$.ring", "expected a string"))?;
    let file_ring: ScalarRing = declared.parse().map_err(|e: engelkit::Error| InputError::invalid("$.ring", e.to_string()))?;
    let ring = ring.unwrap_or(file_ring);

    let alg = object(top.get("algebra").ok_or_else(|| InputError::invalid("$.algebra", "missing algebra"))?, "$.algebra")?;
    check_keys(alg, "$.algebra", &["rank", "basis", "brackets"])?;
    let n = rank(alg.get("rank"), "$.algebra.rank")?;
    let names = match alg.get("basis") {
        None => (0..n).map(|i| format!("x{i}")).collect(),
        Some(v) => {
            let items = array(v, "$.algebra.basis")?;
            if items.len() != n {
                return Err(InputError::invalid("$.algebra.basis", format!("expected {n} names, found {}", items.len())));
            }
            items
                .iter()
                .enumerate()
                .map(|(i, s)| {
                    s.as_str()
                        .map(str::to_string)
                        .ok_or_else(|| InputError::invalid(format!("$.algebra.basis[{i}]"), "expected a string"))
                })
                .collect::<Parsed<Vec<String>>>()?
        }
    };
    let mut table = BracketTable::new(ring, n);
    let mut seen = std::collections::BTreeSet::new();
    if let Some(entries) = alg.get("brackets") {
        for (e, entry) in array(entries, "$.algebra.brackets")?.iter().enumerate() {
            let at = format!("$.algebra.brackets[{e}]");
            let quad = array(entry, &at)?;
            if quad.len() != 4 {
                return Err(InputError::invalid(at, "expected [i, j, k, c]"));
            }
            let i = index(&quad[0], &format!("{at}[0]"), n)?;
            let j = index(&quad[1], &format!("{at}[1]"), n)?;
            let k = index(&quad[2], &format!("{at}[2]"), n)?;
            let c = scalar(ring, &quad[3], &format!("{at}[3]"))?;
            if i >= j {
                return Err(InputError::invalid(at, format!("entries need i < j, found ({i}, {j})")));
            }
            if !seen.insert((i, j, k)) {
                return Err(InputError::invalid(at, format!("duplicate entry for ({i}, {j}, {k})")));
            }
            if !c.is_zero() {
                table
                    .set_coefficient(i, j, k, c)
                    .map_err(|err| InputError::invalid(at.clone(), err.to_string()))?;
            }
        }
    }

    let module = match top.get("module") {
        None => None,
        Some(v) => {
            let block = object(v, "$.module")?;
            check_keys(block, "$.module", &["rank", "action"])?;
            let m = rank(block.get("rank"), "$.module.rank")?;
            let action = block.get("action").ok_or_else(|| InputError::invalid("$.module.action", "missing action"))?;
            let mats = array(action, "$.module.action")?;
            if mats.len() != n {
                return Err(InputError::invalid(
                    "$.module.action",
                    format!("expected one matrix per basis element ({n}), found {}", mats.len()),
                ));
            }
            let action = mats
                .iter()
                .enumerate()
                .map(|(a, rows)| {
                    let at = format!("$.module.action[{a}]");
                    let rows = vectors(ring, rows, &at, m)?;
                    if rows.len() != m {
                        return Err(InputError::invalid(at, format!("expected {m} rows, found {}", rows.len())));
                    }
                    Matrix::from_rows(ring, m, rows).map_err(|e| InputError::invalid(at, e.to_string()))
                })
                .collect::<Parsed<Vec<Matrix>>>()?;
            Some(ModuleBlock { rank: m, action })
        }
    };
    let module_rank = module.as_ref().map_or(n, |b| b.rank);
    let subalgebras = named_vectors(ring, top.get("subalgebras"), "$.subalgebras", |_| Ok(n))?;
    let submodules = named_vectors(ring, top.get("submodules"), "$.submodules", |_| Ok(module_rank))?;
    let mut weights = BTreeMap::new();
    if let Some(value) = top.get("weights") {
        for (name, v) in object(value, "$.weights")? {
            let at = format!("$.weights.{name}");
            let list = array(v, &at)?;
            let len = list.first().and_then(Value::as_array).map_or(0, Vec::len);
            weights.insert(name.clone(), vectors(ring, v, &at, len)?);
        }
    }
    Ok(Presentation { ring, names, table, module, subalgebras, submodules, weights })
}

impl Presentation {
    /// Validates the algebra and module blocks.
    pub fn build(&self) -> Parsed<(LieAlgebra, LieModule)> {
        let algebra = LieAlgebra::new(self.names.clone(), self.table.clone()).map_err(|e| validation("algebra", e))?;
        let module = match &self.module {
            None => algebra.adjoint(),
            Some(block) => LieModule::new(algebra.clone(), block.rank, block.action.clone())
                .map_err(|e| validation("module", e))?,
        };
        Ok((algebra, module))
    }

    /// Presentation of a validated algebra and, optionally, a module over it.
    pub fn from_parts(algebra: &LieAlgebra, module: Option<&LieModule>) -> Self {
        Presentation {
            ring: algebra.ring(),
            names: algebra.names().to_vec(),
            table: algebra.table(),
            module: module.map(|m| ModuleBlock { rank: m.rank(), action: m.action().to_vec() }),
            subalgebras: BTreeMap::new(),
            submodules: BTreeMap::new(),
            weights: BTreeMap::new(),
        }
    }

    pub fn to_json(&self) -> Value {
        let mut brackets = Vec::new();
        for (&(i, j), coeffs) in self.table.entries() {
            for (k, c) in coeffs.iter().enumerate() {
                if !c.is_zero() {
                    brackets.push(json!([i, j, k, c.to_string()]));
                }
            }
        }
        let mut root = Map::new();
        root.insert("ring".into(), json!(self.ring.to_string()));
        root.insert(
            "algebra".into(),
            json!({ "rank": self.names.len(), "basis": self.names, "brackets": brackets }),
        );
        if let Some(block) = &self.module {
            let action: Vec<Value> = block.action.iter().map(matrix_json).collect();
            root.insert("module".into(), json!({ "rank": block.rank, "action": action }));
        }
        let named = |map: &BTreeMap<String, Vec<Vector>>| -> Value {
            Value::Object(map.iter().map(|(k, vs)| (k.clone(), vectors_json(vs))).collect())
        };
        if !self.subalgebras.is_empty() {
            root.insert("subalgebras".into(), named(&self.subalgebras));
        }
        if !self.submodules.is_empty() {
            root.insert("submodules".into(), named(&self.submodules));
        }
        if !self.weights.is_empty() {
            root.insert("weights".into(), named(&self.weights));
        }
        Value::Object(root)
    }

    /// Pretty JSON with sorted keys and a trailing newline.
    pub fn emit(&self) -> String {
        let mut text = serde_json::to_string_pretty(&self.to_json()).expect("JSON values serialize");
        text.push('\n');
        text
    }
}

fn validation(block: &'static str, error: engelkit::Error) -> InputError {
    match error {
        engelkit::Error::Validation(report) => InputError::Validation { block, report },
        other => InputError::invalid(format!("$.{block}"), other.to_string()),
    }
}

pub fn scalar_json(s: &Scalar) -> Value {
    Value::String(s.to_string())
}

pub fn vector_json(v: &[Scalar]) -> Value {
    Value::Array(v.iter().map(scalar_json).collect())
}

pub fn vectors_json(vs: &[Vector]) -> Value {
    Value::Array(vs.iter().map(|v| vector_json(v)).collect())
}

pub fn matrix_json(m: &Matrix) -> Value {
    vectors_json(&m.row_vectors())
}

#[cfg(test)]
mod tests {
    use super::*;
    use engelkit::catalog;

    #[test]
    fn catalog_presentations_round_trip() {
        let q = ScalarRing::RATIONALS;
        let heis = catalog::heisenberg(q);
        let p = Presentation::from_parts(&heis, None);
        let text = p.emit();
        assert_eq!(parse(&text, None).unwrap(), p);
        let (sl2, natural) = catalog::sl2(ScalarRing::prime_field(3).unwrap()).unwrap();
        let p = Presentation::from_parts(&sl2, Some(&natural));
        assert_eq!(parse(&p.emit(), None).unwrap(), p);
    }

    #[test]
    fn composite_modulus_is_rejected() {
        let err = parse(r#"{"ring": "GF(4)", "algebra": {"rank": 0}}"#, None).unwrap_err();
        assert!(err.to_string().contains("4 is not prime"), "{err}");
    }

    #[test]
    fn diagnostics_are_located() {
        let err = parse("{\n  \"ring\": \"Q\",\n  \"algebra\": {\"rank\": 2,}\n}", None).unwrap_err();
        assert!(matches!(err, InputError::Syntax { line: 3, .. }), "{err:?}");
        let err = parse(r#"{"ring": "Q", "algebra": {"rank": 2, "brackets": [[1, 0, 0, "1"]]}}"#, None).unwrap_err();
        assert!(err.to_string().contains("$.algebra.brackets[0]"), "{err}");
        let text = r#"{"ring": "Q", "algebra": {"rank": 2, "brackets": [[0, 1, 0, "1"], [0, 1, 0, "2"]]}}"#;
        assert!(parse(text, None).unwrap_err().to_string().contains("duplicate"));
        let err = parse(r#"{"ring": "Q", "algebra": {"rank": 2, "brackets": [[0, 1, 0, "1/0"]]}}"#, None).unwrap_err();
        assert!(err.to_string().contains("$.algebra.brackets[0][3]"), "{err}");
    }

    #[test]
    fn corrupted_sl2_names_the_triple() {
        let (sl2, _) = catalog::sl2(ScalarRing::RATIONALS).unwrap();
        let text = Presentation::from_parts(&sl2, None).emit().replace("[\n        0,\n        1,\n        0,\n        \"-2\"", "[\n        0,\n        1,\n        0,\n        \"2\"");
        let p = parse(&text, None).unwrap();
        match p.build().unwrap_err() {
            InputError::Validation { block, report } => {
                assert_eq!(block, "algebra");
                assert_eq!(report.violations[0].location(), vec![0, 1, 2]);
            }
            other => panic!("unexpected {other:?}"),
        }
    }
}
