use std::sync::OnceLock;

use serde::ser::SerializeTuple;
use serde::{Deserialize, Serialize, Serializer};

use crate::adjoint::{adjoint_closed_form, Mat6, TrigPoly, TrigPolyMatrix};
use crate::algebra::{bracket, AlgebraElement};
use crate::error::{Error, Result};
use crate::scalar::Rational;

/// One factor `Ad(exp(s X_i))` of a composed adjoint action.
#[derive(Clone, Copy, Debug, PartialEq, Deserialize)]
#[serde(from = "(usize, f64)")]
pub struct WordStep {
    pub generator: usize,
    pub param: f64,
}

impl From<(usize, f64)> for WordStep {
    fn from((generator, param): (usize, f64)) -> Self {
        Self { generator, param }
    }
}

impl Serialize for WordStep {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut t = serializer.serialize_tuple(2)?;
        t.serialize_element(&self.generator)?;
        t.serialize_element(&self.param)?;
        t.end()
    }
}

/// Sequence of adjoint factors; the first step acts first.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct AdjointWord {
    steps: Vec<WordStep>,
}

impl AdjointWord {
    pub fn new(steps: impl IntoIterator<Item = (usize, f64)>) -> Result<Self> {
        let steps: Vec<WordStep> = steps.into_iter().map(WordStep::from).collect();
        for step in &steps {
            crate::adjoint::matrix::check_generator(step.generator)?;
            if !step.param.is_finite() {
                return Err(Error::NonFiniteParameter(step.param));
            }
        }
        Ok(Self { steps })
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn steps(&self) -> &[WordStep] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Appends a step, skipping it when the parameter is exactly zero.
    pub(crate) fn push(&mut self, generator: usize, param: f64) {
        debug_assert!((1..=6).contains(&generator));
        if param != 0.0 {
            self.steps.push(WordStep { generator, param });
        }
    }

    /// `self` followed by `next`.
    pub fn then(&self, next: &AdjointWord) -> AdjointWord {
        let mut steps = self.steps.clone();
        steps.extend_from_slice(&next.steps);
        AdjointWord { steps }
    }

    pub fn inverse(&self) -> AdjointWord {
        AdjointWord {
            steps: self.steps.iter().rev().map(|s| WordStep { generator: s.generator, param: -s.param }).collect(),
        }
    }

    /// Product of the evaluated step matrices.
    pub fn matrix(&self) -> Mat6<f64> {
        self.steps
            .iter()
            .fold(Mat6::identity(), |acc, s| acc.mul(&evaluate_generator(s.generator, s.param)))
    }
}

fn closed_forms() -> &'static [TrigPolyMatrix; 6] {
    static FORMS: OnceLock<[TrigPolyMatrix; 6]> = OnceLock::new();
    FORMS.get_or_init(|| std::array::from_fn(|k| adjoint_closed_form(k + 1).expect("se(3) generators have closed forms")))
}

/// Cached exact matrix of `Ad(exp(s X_i))`.
pub fn closed_form(i: usize) -> &'static TrigPolyMatrix {
    &closed_forms()[i - 1]
}

fn evaluate_generator(i: usize, sigma: f64) -> Mat6<f64> {
    closed_form(i).evaluate(sigma)
}

/// Applies the steps of `w` to `x` in order.
pub fn apply_word(w: &AdjointWord, x: &AlgebraElement<f64>) -> AlgebraElement<f64> {
    w.steps
        .iter()
        .fold(x.clone(), |acc, s| evaluate_generator(s.generator, s.param).apply(&acc))
}

/// `w·[x, y] − [w·x, w·y]`; vanishes because `Ad` is an automorphism.
pub fn automorphism_defect(w: &AdjointWord, x: &AlgebraElement<f64>, y: &AlgebraElement<f64>) -> AlgebraElement<f64> {
    apply_word(w, &bracket(x, y)) - bracket(&apply_word(w, x), &apply_word(w, y))
}

/// Exact automorphism defect of a single symbolic factor `Ad(exp(s X_i))`,
/// reduced modulo `C² + S² = 1`.
pub fn automorphism_defect_symbolic(
    i: usize,
    x: &AlgebraElement<Rational>,
    y: &AlgebraElement<Rational>,
) -> Result<AlgebraElement<TrigPoly>> {
    crate::adjoint::matrix::check_generator(i)?;
    let m = closed_form(i);
    let lift = |e: &AlgebraElement<Rational>| e.map(|q| TrigPoly::constant(q.clone()));
    let (x, y) = (lift(x), lift(y));
    Ok(m.apply(&bracket(&x, &y)) - bracket(&m.apply(&x), &m.apply(&y)))
}
