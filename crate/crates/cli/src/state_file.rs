//! JSON state files.
//!
//! ```json
//! {"dims": [2, 2], "mixture": [{"w": 0.3, "i": 0, "j": 0}, {"w": 0.7, "i": 1, "j": 1}]}
//! {"dims": [2, 2], "matrix": [[[0.5, 0], [0, 0], [0, 0], [0.5, 0]], ...]}
//! ```
//!
//! Optional keys: `basisA` / `basisB` (list of basis columns, each a list of
//! `[re, im]` pairs; default computational) and `labelsA` / `labelsB`
//! (distinct reals naming the outcomes).

use std::path::Path;

use num_complex::Complex64;
use qcorr::{make_classical_mixture, BipartiteState, ComplexMatrix, MixtureTerm, ProjectiveBasis};
use serde_json::{json, Map, Value};

use crate::error::CliError;

const KEYS: [&str; 7] = [
    "dims", "mixture", "matrix", "basisA", "basisB", "labelsA", "labelsB",
];

#[derive(Debug, Clone, PartialEq)]
pub enum StateBody {
    Mixture(Vec<MixtureTerm>),
    Matrix(ComplexMatrix),
}

/// A parsed and validated state file.
#[derive(Debug, Clone)]
pub struct StateSpec {
    pub dims: (usize, usize),
    pub body: StateBody,
    pub basis_a: Option<ComplexMatrix>,
    pub basis_b: Option<ComplexMatrix>,
    pub labels_a: Option<Vec<f64>>,
    pub labels_b: Option<Vec<f64>>,
    state: BipartiteState,
    measurement_a: ProjectiveBasis,
    measurement_b: ProjectiveBasis,
}

impl StateSpec {
    pub fn from_mixture(
        dim_a: usize,
        dim_b: usize,
        terms: Vec<MixtureTerm>,
    ) -> Result<Self, CliError> {
        Self::assemble(
            (dim_a, dim_b),
            StateBody::Mixture(terms),
            None,
            None,
            None,
            None,
        )
    }

    fn assemble(
        dims: (usize, usize),
        body: StateBody,
        basis_a: Option<ComplexMatrix>,
        basis_b: Option<ComplexMatrix>,
        labels_a: Option<Vec<f64>>,
        labels_b: Option<Vec<f64>>,
    ) -> Result<Self, CliError> {
        let (dim_a, dim_b) = dims;
        let state = match &body {
            StateBody::Mixture(terms) => make_classical_mixture(dim_a, dim_b, terms)?,
            StateBody::Matrix(m) => BipartiteState::new(dim_a, dim_b, m.clone())?,
        };
        let measurement = |basis: &Option<ComplexMatrix>,
                           labels: &Option<Vec<f64>>,
                           dim: usize,
                           name: &str| {
            let b = match basis {
                Some(u) if u.dim() != dim => {
                    return Err(CliError::Validation {
                        invariant: "basis dimension".into(),
                        detail: format!("{name} has dimension {}, subsystem has {dim}", u.dim()),
                    })
                }
                Some(u) => ProjectiveBasis::from_unitary(u)?,
                None => ProjectiveBasis::computational(dim),
            };
            match labels {
                Some(l) => Ok(b.with_labels(l.clone())?),
                None => Ok(b),
            }
        };
        let measurement_a = measurement(&basis_a, &labels_a, dim_a, "basisA")?;
        let measurement_b = measurement(&basis_b, &labels_b, dim_b, "basisB")?;
        Ok(Self {
            dims,
            body,
            basis_a,
            basis_b,
            labels_a,
            labels_b,
            state,
            measurement_a,
            measurement_b,
        })
    }

    pub fn state(&self) -> &BipartiteState {
        &self.state
    }

    pub fn basis_a(&self) -> &ProjectiveBasis {
        &self.measurement_a
    }

    pub fn basis_b(&self) -> &ProjectiveBasis {
        &self.measurement_b
    }

    pub fn to_json(&self) -> Value {
        let mut obj = Map::new();
        obj.insert("dims".into(), json!([self.dims.0, self.dims.1]));
        match &self.body {
            StateBody::Mixture(terms) => {
                obj.insert(
                    "mixture".into(),
                    serde_json::to_value(terms).expect("terms serialize"),
                );
            }
            StateBody::Matrix(m) => {
                let rows: Vec<Value> = (0..m.dim())
                    .map(|i| (0..m.dim()).map(|j| complex_json(m[(i, j)])).collect())
                    .collect();
                obj.insert("matrix".into(), Value::Array(rows));
            }
        }
        for (key, basis) in [("basisA", &self.basis_a), ("basisB", &self.basis_b)] {
            if let Some(u) = basis {
                let cols: Vec<Value> = (0..u.dim())
                    .map(|j| u.column(j).into_iter().map(complex_json).collect())
                    .collect();
                obj.insert(key.into(), Value::Array(cols));
            }
        }
        for (key, labels) in [("labelsA", &self.labels_a), ("labelsB", &self.labels_b)] {
            if let Some(l) = labels {
                obj.insert(key.into(), json!(l));
            }
        }
        Value::Object(obj)
    }
}

fn complex_json(z: Complex64) -> Value {
    json!([z.re, z.im])
}

fn schema(pointer: impl Into<String>, message: impl Into<String>) -> CliError {
    CliError::Schema {
        pointer: pointer.into(),
        message: message.into(),
    }
}

fn as_usize(v: &Value, ptr: &str) -> Result<usize, CliError> {
    v.as_u64()
        .map(|n| n as usize)
        .ok_or_else(|| schema(ptr, "expected a non-negative integer"))
}

fn as_f64(v: &Value, ptr: &str) -> Result<f64, CliError> {
    v.as_f64().ok_or_else(|| schema(ptr, "expected a number"))
}

fn as_array<'a>(v: &'a Value, ptr: &str) -> Result<&'a Vec<Value>, CliError> {
    v.as_array().ok_or_else(|| schema(ptr, "expected an array"))
}

fn parse_complex(v: &Value, ptr: &str) -> Result<Complex64, CliError> {
    match as_array(v, ptr)?.as_slice() {
        [re, im] => Ok(Complex64::new(
            as_f64(re, &format!("{ptr}/0"))?,
            as_f64(im, &format!("{ptr}/1"))?,
        )),
        _ => Err(schema(ptr, "expected a [re, im] pair")),
    }
}

/// Square array of `[re, im]` pairs; `columns` selects the outer index as column.
fn parse_complex_square(v: &Value, ptr: &str, columns: bool) -> Result<ComplexMatrix, CliError> {
    let outer = as_array(v, ptr)?;
    let mut vectors = Vec::with_capacity(outer.len());
    for (k, inner) in outer.iter().enumerate() {
        let p = format!("{ptr}/{k}");
        let entries = as_array(inner, &p)?;
        if entries.len() != outer.len() {
            return Err(schema(
                p,
                format!("expected {} entries, found {}", outer.len(), entries.len()),
            ));
        }
        let parsed = entries
            .iter()
            .enumerate()
            .map(|(l, z)| parse_complex(z, &format!("{p}/{l}")))
            .collect::<Result<Vec<_>, _>>()?;
        vectors.push(parsed);
    }
    if vectors.is_empty() {
        return Err(schema(ptr, "must not be empty"));
    }
    let m = if columns {
        ComplexMatrix::from_columns(&vectors)
    } else {
        ComplexMatrix::from_rows(vectors)
    };
    m.map_err(|e| schema(ptr, e.to_string()))
}

fn parse_term(v: &Value, ptr: &str) -> Result<MixtureTerm, CliError> {
    let obj = v
        .as_object()
        .ok_or_else(|| schema(ptr, "expected an object"))?;
    if let Some(k) = obj.keys().find(|k| !["w", "i", "j"].contains(&k.as_str())) {
        return Err(schema(format!("{ptr}/{k}"), "unknown key"));
    }
    let field = |k: &str| {
        obj.get(k)
            .ok_or_else(|| schema(format!("{ptr}/{k}"), "missing"))
    };
    Ok(MixtureTerm::new(
        as_f64(field("w")?, &format!("{ptr}/w"))?,
        as_usize(field("i")?, &format!("{ptr}/i"))?,
        as_usize(field("j")?, &format!("{ptr}/j"))?,
    ))
}

fn parse_labels(v: &Value, ptr: &str) -> Result<Vec<f64>, CliError> {
    as_array(v, ptr)?
        .iter()
        .enumerate()
        .map(|(k, x)| as_f64(x, &format!("{ptr}/{k}")))
        .collect()
}

pub fn parse_state_value(v: &Value) -> Result<StateSpec, CliError> {
    let obj = v
        .as_object()
        .ok_or_else(|| schema("", "expected a JSON object"))?;
    if let Some(k) = obj.keys().find(|k| !KEYS.contains(&k.as_str())) {
        return Err(schema(format!("/{k}"), "unknown key"));
    }
    let dims = match obj.get("dims").map(|d| as_array(d, "/dims")).transpose()? {
        Some(d) if d.len() == 2 => (as_usize(&d[0], "/dims/0")?, as_usize(&d[1], "/dims/1")?),
        Some(_) => return Err(schema("/dims", "expected [dimA, dimB]")),
        None => return Err(schema("/dims", "missing")),
    };
    if dims.0 == 0 || dims.1 == 0 {
        return Err(schema("/dims", "dimensions must be positive"));
    }
    let body = match (obj.get("mixture"), obj.get("matrix")) {
        (Some(m), None) => StateBody::Mixture(
            as_array(m, "/mixture")?
                .iter()
                .enumerate()
                .map(|(k, t)| parse_term(t, &format!("/mixture/{k}")))
                .collect::<Result<_, _>>()?,
        ),
        (None, Some(m)) => StateBody::Matrix(parse_complex_square(m, "/matrix", false)?),
        (Some(_), Some(_)) => {
            return Err(schema(
                "",
                "exactly one of \"mixture\" or \"matrix\" is allowed",
            ))
        }
        (None, None) => return Err(schema("", "one of \"mixture\" or \"matrix\" is required")),
    };
    let basis = |key: &str| {
        obj.get(key)
            .map(|b| parse_complex_square(b, &format!("/{key}"), true))
            .transpose()
    };
    let labels = |key: &str| {
        obj.get(key)
            .map(|l| parse_labels(l, &format!("/{key}")))
            .transpose()
    };
    StateSpec::assemble(
        dims,
        body,
        basis("basisA")?,
        basis("basisB")?,
        labels("labelsA")?,
        labels("labelsB")?,
    )
}

pub fn parse_state_str(text: &str) -> Result<StateSpec, CliError> {
    let v: Value =
        serde_json::from_str(text).map_err(|e| schema("", format!("invalid JSON: {e}")))?;
    parse_state_value(&v)
}

pub fn parse_state_file(path: &Path) -> Result<StateSpec, CliError> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    parse_state_str(&text)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn schema_pointer(text: &str) -> String {
        match parse_state_str(text) {
            Err(CliError::Schema { pointer, .. }) => pointer,
            other => panic!("expected schema error, got {other:?}"),
        }
    }

    fn invariant(text: &str) -> String {
        match parse_state_str(text) {
            Err(CliError::Validation { invariant, .. }) => invariant,
            other => panic!("expected validation error, got {other:?}"),
        }
    }

    #[test]
    fn parses_qubit_mixture() {
        let spec = parse_state_str(
            r#"{"dims":[2,2],"mixture":[{"w":0.3,"i":0,"j":0},{"w":0.7,"i":1,"j":1}]}"#,
        )
        .unwrap();
        assert_eq!(spec.dims, (2, 2));
        let m = spec.state().matrix();
        assert_eq!(m[(0, 0)].re, 0.3);
        assert_eq!(m[(3, 3)].re, 0.7);
    }

    #[test]
    fn parses_dense_matrix_with_basis() {
        let h = std::f64::consts::FRAC_1_SQRT_2;
        let text = format!(
            r#"{{"dims":[1,2],"matrix":[[[0.5,0],[0,-0.5]],[[0,0.5],[0.5,0]]],
                "basisB":[[[{h},0],[{h},0]],[[{h},0],[{m},0]]],"labelsB":[1,-1]}}"#,
            m = -h
        );
        let spec = parse_state_str(&text).unwrap();
        assert_eq!(spec.basis_b().labels(), Some(&[1.0, -1.0][..]));
        assert_eq!(spec.state().matrix()[(1, 0)], Complex64::new(0.0, 0.5));
    }

    #[test]
    fn schema_errors_carry_pointers() {
        assert_eq!(schema_pointer(r#"[1]"#), "");
        assert_eq!(schema_pointer(r#"{"mixture":[]}"#), "/dims");
        assert_eq!(schema_pointer(r#"{"dims":[2]}"#), "/dims");
        assert_eq!(schema_pointer(r#"{"dims":[2,2]}"#), "");
        assert_eq!(
            schema_pointer(r#"{"dims":[2,2],"mixture":[{"w":1,"i":0}]}"#),
            "/mixture/0/j"
        );
        assert_eq!(
            schema_pointer(r#"{"dims":[2,2],"mixture":[{"w":"x","i":0,"j":0}]}"#),
            "/mixture/0/w"
        );
        assert_eq!(
            schema_pointer(r#"{"dims":[1,1],"matrix":[[[1]]]}"#),
            "/matrix/0/0"
        );
        assert_eq!(
            schema_pointer(r#"{"dims":[1,2],"matrix":[[[1,0]],[[0,0]]]}"#),
            "/matrix/0"
        );
        assert_eq!(
            schema_pointer(r#"{"dims":[1,1],"matrix":[[[1,0]]],"extra":1}"#),
            "/extra"
        );
        assert_eq!(
            schema_pointer(r#"{"dims":[1,1],"matrix":[[[1,0]]],"mixture":[]}"#),
            ""
        );
    }

    #[test]
    fn validation_errors_name_invariants() {
        assert_eq!(
            invariant(r#"{"dims":[2,2],"mixture":[{"w":0.3,"i":0,"j":0},{"w":0.6,"i":1,"j":1}]}"#),
            "unit trace"
        );
        assert_eq!(
            invariant(r#"{"dims":[1,2],"matrix":[[[1.5,0],[0,0]],[[0,0],[-0.5,0]]]}"#),
            "positive semidefinite"
        );
        assert_eq!(
            invariant(r#"{"dims":[1,2],"matrix":[[[0.5,0],[0.2,0]],[[0,0],[0.5,0]]]}"#),
            "Hermitian"
        );
        assert_eq!(
            invariant(r#"{"dims":[2,2],"mixture":[{"w":0.5,"i":0,"j":0},{"w":0.5,"i":0,"j":0}]}"#),
            "distinct terms"
        );
        assert_eq!(
            invariant(r#"{"dims":[2,2],"mixture":[{"w":1,"i":0,"j":5}]}"#),
            "index range"
        );
        assert_eq!(
            invariant(
                r#"{"dims":[1,2],"mixture":[{"w":1,"i":0,"j":0}],"basisB":[[[1,0],[0,0]],[[1,0],[0,0]]]}"#
            ),
            "orthonormal basis"
        );
        assert_eq!(
            invariant(
                r#"{"dims":[1,2],"mixture":[{"w":1,"i":0,"j":0}],"basisA":[[[1,0],[0,0]],[[0,0],[1,0]]]}"#
            ),
            "basis dimension"
        );
    }

    #[test]
    fn json_round_trip() {
        let spec = StateSpec::from_mixture(3, 3, qcorr::fixtures::qutrit_terms()).unwrap();
        let back = parse_state_value(&spec.to_json()).unwrap();
        assert_eq!(back.body, spec.body);
        assert_eq!(back.state(), spec.state());
    }
}
