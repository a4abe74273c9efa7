use crate::algebra::{bracket, AlgebraElement};
use crate::error::{Error, Result};
use crate::linalg;
use crate::scalar::Field;

/// Linearly independent generators of a subspace of se(3).
#[derive(Clone, Debug, PartialEq)]
pub struct SubalgebraBasis<T> {
    generators: Vec<AlgebraElement<T>>,
}

impl<T: Field> SubalgebraBasis<T> {
    pub fn new(generators: Vec<AlgebraElement<T>>) -> Result<Self> {
        if generators.is_empty() || generators.len() > 6 {
            return Err(Error::BasisSize(generators.len()));
        }
        check_independent(&generators)?;
        Ok(Self { generators })
    }

    pub fn generators(&self) -> &[AlgebraElement<T>] {
        &self.generators
    }

    pub fn dim(&self) -> usize {
        self.generators.len()
    }
}

fn check_independent<T: Field>(generators: &[AlgebraElement<T>]) -> Result<()> {
    let rows: Vec<Vec<T>> = generators.iter().map(|g| g.coeffs().to_vec()).collect();
    let rank = linalg::rank(&rows);
    if rank < generators.len() {
        return Err(Error::DependentBasis { rank, len: generators.len() });
    }
    Ok(())
}

/// Table whose `(i, j)` entry is `[basis[i], basis[j]]`.
pub fn commutator_table<T: Field>(basis: &[AlgebraElement<T>]) -> Result<Vec<Vec<AlgebraElement<T>>>> {
    check_independent(basis)?;
    Ok(basis
        .iter()
        .map(|x| basis.iter().map(|y| bracket(x, y)).collect())
        .collect())
}

/// Coordinates of `x` in `basis`, if `x` lies in its span.
pub fn in_span<T: Field>(x: &AlgebraElement<T>, basis: &SubalgebraBasis<T>) -> Option<Vec<T>> {
    let columns: Vec<Vec<T>> = basis.generators.iter().map(|g| g.coeffs().to_vec()).collect();
    linalg::solve_columns(&columns, x.coeffs())
}

/// Outcome of a bracket-closure test.
#[derive(Clone, Debug, PartialEq)]
pub enum Closure<T> {
    Closed,
    /// `[generators[i], generators[j]] = value` leaves the span (zero-based).
    Witness { i: usize, j: usize, value: AlgebraElement<T> },
}

impl<T> Closure<T> {
    pub fn is_closed(&self) -> bool {
        matches!(self, Closure::Closed)
    }
}

/// Checks that every pairwise bracket stays in the span; reports the first
/// failing pair in `(i, j)` lexicographic order.
pub fn closure_check<T: Field>(basis: &SubalgebraBasis<T>) -> Closure<T> {
    let gens = &basis.generators;
    for i in 0..gens.len() {
        for j in i + 1..gens.len() {
            let value = bracket(&gens[i], &gens[j]);
            if in_span(&value, basis).is_none() {
                return Closure::Witness { i, j, value };
            }
        }
    }
    Closure::Closed
}

/// Whether every pairwise bracket vanishes.
pub fn is_abelian<T: Field>(basis: &SubalgebraBasis<T>) -> bool {
    let gens = &basis.generators;
    let scale = gens.iter().flat_map(|g| g.coeffs().iter()).map(Field::magnitude).fold(0.0, f64::max);
    gens.iter().enumerate().all(|(i, x)| {
        gens[i + 1..]
            .iter()
            .all(|y| bracket(x, y).coeffs().iter().all(|c| c.is_negligible(scale * scale)))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, rational, Rational};

    fn e(i: usize) -> AlgebraElement<Rational> {
        AlgebraElement::basis(i)
    }

    fn basis(gens: Vec<AlgebraElement<Rational>>) -> SubalgebraBasis<Rational> {
        SubalgebraBasis::new(gens).unwrap()
    }

    #[test]
    fn span_membership() {
        assert_eq!(in_span(&e(3), &basis(vec![e(3), e(6)])), Some(vec![int(1), int(0)]));
        assert_eq!(in_span(&e(2), &basis(vec![e(1), e(3)])), None);
        let x = AlgebraElement::from_ints([2, 0, 0, 3, 0, 0]);
        let b = basis(vec![e(1) + e(4), e(1) - e(4)]);
        assert_eq!(in_span(&x, &b), Some(vec![rational(5, 2), rational(-1, 2)]));
    }

    #[test]
    fn span_membership_floats_uses_tolerance() {
        let b = SubalgebraBasis::new(vec![AlgebraElement::<f64>::basis(1), AlgebraElement::basis(2)]).unwrap();
        let near = AlgebraElement::new([1.0, 2.0, 1e-12, 0.0, 0.0, 0.0]);
        assert!(in_span(&near, &b).is_some());
        let far = AlgebraElement::new([1.0, 2.0, 1e-3, 0.0, 0.0, 0.0]);
        assert!(in_span(&far, &b).is_none());
    }

    #[test]
    fn dependent_basis_is_rejected() {
        let err = SubalgebraBasis::new(vec![e(1), e(1).scale(&int(2))]).unwrap_err();
        assert_eq!(err, Error::DependentBasis { rank: 1, len: 2 });
        assert_eq!(SubalgebraBasis::<Rational>::new(vec![]).unwrap_err(), Error::BasisSize(0));
        assert!(commutator_table(&[e(1), e(2), e(1) + e(2)]).is_err());
    }

    #[test]
    fn commutator_table_examples() {
        let table = commutator_table(&[e(1), e(2), e(3), e(4)]).unwrap();
        assert_eq!(table[1][3], e(3));
        let a = int(2);
        let x = e(1) + e(4).scale(&a);
        let table = commutator_table(&[x, e(2), e(3)]).unwrap();
        assert_eq!(table[0][1], e(3).scale(&int(-2)));
        assert_eq!(table[0][2], e(2).scale(&int(2)));
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(table[i][j].clone() + table[j][i].clone(), AlgebraElement::zero());
            }
        }
    }

    #[test]
    fn closure_examples() {
        assert!(closure_check(&basis(vec![e(1), e(2), e(3), e(4)])).is_closed());
        assert_eq!(
            closure_check(&basis(vec![e(2), e(4)])),
            Closure::Witness { i: 0, j: 1, value: e(3) }
        );
        assert_eq!(
            closure_check(&basis(vec![e(3), e(1) + e(4)])),
            Closure::Witness { i: 0, j: 1, value: -e(2) }
        );
        let translations = basis(vec![e(1), e(2), e(3)]);
        assert!(closure_check(&translations).is_closed());
        assert!(is_abelian(&translations));
        assert!(!is_abelian(&basis(vec![e(1), e(2), e(3), e(4)])));
    }
}
