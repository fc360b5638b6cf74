//! JSON result documents written to stdout.

use cquat::{CMatrix, CQMatrix, CQuat, Complex64};
use serde::Serialize;
use serde_json::{json, Value};

#[derive(Debug, Clone, Serialize)]
pub struct InputInfo {
    pub path: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
    pub rows: usize,
    pub cols: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct ResultDocument {
    pub operation: &'static str,
    pub version: &'static str,
    pub inputs: Vec<InputInfo>,
    pub ok: bool,
    pub tolerance: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub payload: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub failure: Option<String>,
}

impl ResultDocument {
    pub fn new(operation: &'static str, inputs: Vec<InputInfo>, tolerance: Option<f64>) -> Self {
        ResultDocument {
            operation,
            version: env!("CARGO_PKG_VERSION"),
            inputs,
            ok: true,
            tolerance,
            payload: None,
            failure: None,
        }
    }

    pub fn with_payload(mut self, payload: Value) -> Self {
        self.payload = Some(payload);
        self
    }

    pub fn failed(mut self, why: impl Into<String>) -> Self {
        self.ok = false;
        self.failure = Some(why.into());
        self
    }
}

/// `[re, im]`
pub fn complex(c: Complex64) -> Value {
    json!([c.re, c.im])
}

/// `[t, x, y, z]`
pub fn quat(q: CQuat) -> Value {
    json!(q.to_array())
}

pub fn quat_vec(v: &[CQuat]) -> Value {
    Value::Array(v.iter().map(|q| quat(*q)).collect())
}

/// Rows of `[t, x, y, z]` entries.
pub fn qmatrix(m: &CQMatrix) -> Value {
    Value::Array((0..m.rows()).map(|i| quat_vec(m.row(i))).collect())
}

/// Rows of `[re, im]` entries.
pub fn cmatrix(m: &CMatrix) -> Value {
    Value::Array(
        (0..m.rows())
            .map(|i| Value::Array(m.row(i).iter().map(|c| complex(*c)).collect()))
            .collect(),
    )
}
