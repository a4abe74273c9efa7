//! Closed-form solutions of `∇u = f(u)` used as test subjects.

use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};

/// Source term `f` of the equation a field solves.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
#[serde(tag = "kind", content = "value", rename_all = "lowercase")]
pub enum SourceTerm {
    Zero,
    Constant(f64),
    /// `f(u) = u`
    Linear,
}

impl SourceTerm {
    pub fn eval(self, u: f64) -> f64 {
        match self {
            SourceTerm::Zero => 0.0,
            SourceTerm::Constant(c) => c,
            SourceTerm::Linear => u,
        }
    }
}

impl fmt::Display for SourceTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SourceTerm::Zero => write!(f, "0"),
            SourceTerm::Constant(c) => write!(f, "{c}"),
            SourceTerm::Linear => write!(f, "u"),
        }
    }
}

type Evaluator = Arc<dyn Fn(f64, f64, f64) -> f64 + Send + Sync>;

/// A labelled function of `(x, y, z)` together with the source term it solves.
#[derive(Clone)]
pub struct ScalarField {
    label: String,
    source: SourceTerm,
    eval: Evaluator,
}

impl ScalarField {
    pub fn new(label: impl Into<String>, source: SourceTerm, eval: impl Fn(f64, f64, f64) -> f64 + Send + Sync + 'static) -> Self {
        Self { label: label.into(), source, eval: Arc::new(eval) }
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn source(&self) -> SourceTerm {
        self.source
    }

    pub fn eval(&self, p: [f64; 3]) -> f64 {
        (self.eval)(p[0], p[1], p[2])
    }

    /// `p ↦ self(map(p))` with a new label.
    pub fn compose(&self, label: String, map: impl Fn([f64; 3]) -> [f64; 3] + Send + Sync + 'static) -> Self {
        let inner = self.eval.clone();
        Self {
            label,
            source: self.source,
            eval: Arc::new(move |x, y, z| {
                let q = map([x, y, z]);
                inner(q[0], q[1], q[2])
            }),
        }
    }
}

impl fmt::Debug for ScalarField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ScalarField").field("label", &self.label).field("source", &self.source).finish()
    }
}

/// Names accepted by [`family`].
pub const FAMILIES: [&str; 4] = ["xy", "x2-y2", "r2", "exp-x"];

/// Built-in solution by name.
pub fn family(name: &str) -> Result<ScalarField> {
    Ok(match name {
        "xy" => ScalarField::new("x*y", SourceTerm::Zero, |x, y, _| x * y),
        "x2-y2" => ScalarField::new("x^2 - y^2", SourceTerm::Zero, |x, y, _| x * x - y * y),
        "r2" => ScalarField::new("x^2 + y^2 + z^2", SourceTerm::Constant(6.0), |x, y, z| x * x + y * y + z * z),
        "exp-x" => ScalarField::new("exp(x)", SourceTerm::Linear, |x, _, _| x.exp()),
        other => {
            return Err(Error::InvalidArgument(format!(
                "unknown family '{other}', expected one of {}",
                FAMILIES.join(", ")
            )))
        }
    })
}
