use crate::algebra::AlgebraElement;
use crate::scalar::Ring;

/// Commutator table of se(3) as published: entry `[i][j]` encodes
/// `[X_{i+1}, X_{j+1}]` as a signed basis index (`-3` means `−X_3`, `0` means 0).
pub const PRINTED_COMMUTATOR_TABLE: [[i8; 6]; 6] = [
    [0, 0, 0, 0, -3, 2],
    [0, 0, 0, 3, 0, -1],
    [0, 0, 0, -2, 1, 0],
    [0, -3, 2, 0, -6, 5],
    [3, 0, -1, 6, 0, -4],
    [-2, 1, 0, -5, 4, 0],
];

/// Structure constants `c^k_ij` with `[X_i, X_j] = Σ_k c^k_ij X_k`.
///
/// The se(3) constants are integers, stored as `i8`; every bracket in the
/// crate is computed from this table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureConstants {
    c: [[[i8; 6]; 6]; 6],
}

impl StructureConstants {
    pub const SE3: StructureConstants = StructureConstants::from_signed_table(&PRINTED_COMMUTATOR_TABLE);

    /// Builds constants from a table of signed basis indices.
    pub const fn from_signed_table(table: &[[i8; 6]; 6]) -> Self {
        let mut c = [[[0i8; 6]; 6]; 6];
        let mut i = 0;
        while i < 6 {
            let mut j = 0;
            while j < 6 {
                let entry = table[i][j];
                if entry != 0 {
                    let k = (entry.unsigned_abs() - 1) as usize;
                    c[i][j][k] = entry.signum();
                }
                j += 1;
            }
            i += 1;
        }
        Self { c }
    }

    /// `c^k_ij` with zero-based indices.
    pub fn get(&self, i: usize, j: usize, k: usize) -> i64 {
        self.c[i][j][k] as i64
    }

    pub fn is_antisymmetric(&self) -> bool {
        (0..6).all(|i| (0..6).all(|j| (0..6).all(|k| self.c[i][j][k] == -self.c[j][i][k])))
    }

    pub fn bracket<T: Ring>(&self, x: &AlgebraElement<T>, y: &AlgebraElement<T>) -> AlgebraElement<T> {
        let (xs, ys) = (x.coeffs(), y.coeffs());
        let mut out: [T; 6] = std::array::from_fn(|_| T::zero());
        for i in 0..6 {
            if xs[i].is_zero() {
                continue;
            }
            for j in 0..6 {
                if ys[j].is_zero() {
                    continue;
                }
                for (k, slot) in out.iter_mut().enumerate() {
                    match self.c[i][j][k] {
                        0 => {}
                        1 => *slot = slot.clone() + xs[i].clone() * ys[j].clone(),
                        -1 => *slot = slot.clone() - xs[i].clone() * ys[j].clone(),
                        c => {
                            *slot = slot.clone() + T::from_int(c as i64) * xs[i].clone() * ys[j].clone()
                        }
                    }
                }
            }
        }
        AlgebraElement::new(out)
    }
}

/// Lie bracket in se(3).
pub fn bracket<T: Ring>(x: &AlgebraElement<T>, y: &AlgebraElement<T>) -> AlgebraElement<T> {
    StructureConstants::SE3.bracket(x, y)
}

/// `[x,[y,z]] + [y,[z,x]] + [z,[x,y]]`.
pub fn jacobi_defect<T: Ring>(x: &AlgebraElement<T>, y: &AlgebraElement<T>, z: &AlgebraElement<T>) -> AlgebraElement<T> {
    bracket(x, &bracket(y, z)) + bracket(y, &bracket(z, x)) + bracket(z, &bracket(x, y))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rational;

    fn e(i: usize) -> AlgebraElement<Rational> {
        AlgebraElement::basis(i)
    }

    #[test]
    fn matches_printed_entries() {
        assert_eq!(bracket(&e(1), &e(5)), -e(3));
        assert_eq!(bracket(&e(4), &e(5)), -e(6));
        assert_eq!(bracket(&e(6), &e(1)), -e(2));
        assert!(bracket(&e(4), &e(4)).is_zero());
    }

    #[test]
    fn bilinear_expansion() {
        assert_eq!(bracket(&(e(4) + e(5)), &e(6)), e(5) - e(4));
    }

    #[test]
    fn constants_are_antisymmetric() {
        assert!(StructureConstants::SE3.is_antisymmetric());
    }

    #[test]
    fn jacobi_on_basis_triples() {
        assert!(jacobi_defect(&e(1), &e(4), &e(5)).is_zero());
        assert!(jacobi_defect(&e(2), &e(2), &e(6)).is_zero());
        for i in 1..=6 {
            for j in 1..=6 {
                for k in 1..=6 {
                    assert!(jacobi_defect(&e(i), &e(j), &e(k)).is_zero(), "({i},{j},{k})");
                }
            }
        }
    }
}
