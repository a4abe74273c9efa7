//! Closure and commutator checks for the published 2-, 3- and 4-d representatives.

use serde::Serialize;

use crate::algebra::{bracket, closure_check, in_span, is_abelian, AlgebraElement, Closure, SubalgebraBasis};
use crate::scalar::{format_rational, int, Rational};
use num_traits::Zero;

/// Parameter grid used by the report.
pub fn default_grid() -> Vec<Rational> {
    [-2, 0, 1, 3].into_iter().map(int).collect()
}

fn e(i: usize) -> AlgebraElement<Rational> {
    AlgebraElement::basis(i)
}

fn plus(i: usize, a: &Rational, j: usize) -> AlgebraElement<Rational> {
    e(i) + e(j).scale(a)
}

/// The six published 2-d representatives, plus the variant of the last one
/// used in the proof text.
pub const TWO_DIM_CASES: [&str; 7] = ["A2_1", "A2_2", "A2_3", "A2_4", "A2_5", "A2_6", "A2_6_proof_variant"];

/// Generators of a named 2-d case at parameter `a`.
pub fn two_dim_generators(case: &str, a: &Rational) -> Option<[AlgebraElement<Rational>; 2]> {
    Some(match case {
        "A2_1" => [e(2), e(5)],
        "A2_2" => [e(3), e(6)],
        "A2_3" => [e(1), plus(2, a, 4)],
        "A2_4" => [e(1), plus(3, a, 4)],
        "A2_5" => [e(2), plus(3, a, 5)],
        "A2_6" => [e(3), plus(1, a, 4)],
        "A2_6_proof_variant" => [e(3), plus(1, a, 6)],
        _ => return None,
    })
}

/// `[generators[i], generators[j]] = value` outside the span (zero-based).
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BracketWitness {
    pub i: usize,
    pub j: usize,
    pub value: AlgebraElement<Rational>,
    pub display: String,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SubalgebraVerdict {
    pub case: String,
    #[serde(serialize_with = "crate::scalar::serialize_rational")]
    pub a: Rational,
    pub generators: Vec<AlgebraElement<Rational>>,
    pub independent: bool,
    pub closed: bool,
    pub abelian: bool,
    pub witness: Option<BracketWitness>,
}

fn verdict(case: &str, a: &Rational, generators: Vec<AlgebraElement<Rational>>) -> SubalgebraVerdict {
    let basis = SubalgebraBasis::new(generators.clone());
    let (independent, closed, abelian, witness) = match &basis {
        Ok(b) => {
            let witness = match closure_check(b) {
                Closure::Closed => None,
                Closure::Witness { i, j, value } => {
                    let display = value.to_string();
                    Some(BracketWitness { i, j, value, display })
                }
            };
            (true, witness.is_none(), is_abelian(b), witness)
        }
        Err(_) => (false, false, false, None),
    };
    SubalgebraVerdict { case: case.to_string(), a: a.clone(), generators, independent, closed, abelian, witness }
}

/// Checks every 2-d case on every grid value.
pub fn verify_2d_list(grid: &[Rational]) -> Vec<SubalgebraVerdict> {
    let mut out = Vec::new();
    for case in TWO_DIM_CASES {
        for a in grid {
            let gens = two_dim_generators(case, a).expect("known case");
            out.push(verdict(case, a, gens.to_vec()));
        }
    }
    out
}

/// Published commutator table of A3 in the basis `(X, Y, Z)`; entry `(i, j)`
/// holds the coordinates of `[basis_i, basis_j]`.
pub fn printed_table_a3(a: &Rational) -> Vec<Vec<Vec<Rational>>> {
    let mut t = vec![vec![vec![Rational::zero(); 3]; 3]; 3];
    t[0][1][2] = -a.clone();
    t[1][0][2] = a.clone();
    t
}

/// Published commutator table of A4 in the basis `(X1, X2, X3, X4)`.
pub fn printed_table_a4() -> Vec<Vec<Vec<Rational>>> {
    let mut t = vec![vec![vec![Rational::zero(); 4]; 4]; 4];
    t[1][3][2] = int(1);
    t[2][3][1] = int(-1);
    t[3][1][2] = int(-1);
    t[3][2][1] = int(1);
    t
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TableMismatch {
    pub i: usize,
    pub j: usize,
    pub printed: Vec<String>,
    pub computed: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct HigherVerdict {
    pub case: String,
    #[serde(serialize_with = "crate::scalar::serialize_rational")]
    pub a: Rational,
    pub generators: Vec<AlgebraElement<Rational>>,
    pub closed: bool,
    pub abelian: bool,
    pub witness: Option<BracketWitness>,
    /// Coordinates of each bracket in the subalgebra basis; absent when not closed.
    pub table: Option<Vec<Vec<Vec<String>>>>,
    pub mismatches: Vec<TableMismatch>,
}

fn strings(v: &[Rational]) -> Vec<String> {
    v.iter().map(format_rational).collect()
}

fn higher(case: &str, a: &Rational, generators: Vec<AlgebraElement<Rational>>, printed: Vec<Vec<Vec<Rational>>>) -> HigherVerdict {
    let v = verdict(case, a, generators.clone());
    let basis = SubalgebraBasis::new(generators.clone()).expect("published bases are independent");
    let mut mismatches = Vec::new();
    let table = v.closed.then(|| {
        let n = generators.len();
        let mut rows = Vec::with_capacity(n);
        for i in 0..n {
            let mut row = Vec::with_capacity(n);
            for j in 0..n {
                let coords = in_span(&bracket(&generators[i], &generators[j]), &basis).expect("closed");
                if coords != printed[i][j] {
                    mismatches.push(TableMismatch { i, j, printed: strings(&printed[i][j]), computed: strings(&coords) });
                }
                row.push(strings(&coords));
            }
            rows.push(row);
        }
        rows
    });
    HigherVerdict {
        case: case.to_string(),
        a: a.clone(),
        generators,
        closed: v.closed,
        abelian: v.abelian,
        witness: v.witness,
        table,
        mismatches,
    }
}

/// A3 on every grid value, then A4.
pub fn verify_3d_4d(grid: &[Rational]) -> Vec<HigherVerdict> {
    let mut out: Vec<_> = grid
        .iter()
        .map(|a| higher("A3", a, vec![plus(1, a, 4), e(2), e(3)], printed_table_a3(a)))
        .collect();
    out.push(higher("A4", &Rational::zero(), (1..=4).map(e).collect(), printed_table_a4()));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_dim_examples() {
        let all = verify_2d_list(&default_grid());
        for v in &all {
            let nonzero = !v.a.is_zero();
            match v.case.as_str() {
                "A2_6" if nonzero => {
                    assert!(!v.closed);
                    let w = v.witness.as_ref().unwrap();
                    assert_eq!(w.value, e(2).scale(&-v.a.clone()));
                }
                _ => assert!(v.closed && v.abelian && v.independent, "{v:?}"),
            }
        }
    }

    #[test]
    fn a3_table_differs_only_at_xz() {
        let v = verify_3d_4d(&[int(1)]);
        assert!(v[0].closed);
        let m: Vec<_> = v[0].mismatches.iter().map(|m| (m.i, m.j)).collect();
        assert_eq!(m, vec![(0, 2), (2, 0)]);
        assert_eq!(v[0].mismatches[0].computed, vec!["0", "1", "0"]);
        assert!(v[1].closed && v[1].mismatches.is_empty());
    }

    #[test]
    fn a3_at_zero_is_abelian() {
        let v = verify_3d_4d(&[int(0)]);
        assert!(v[0].abelian && v[0].mismatches.is_empty());
    }
}
