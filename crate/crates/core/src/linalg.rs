//! Dense elimination over a [`Field`], shared by span queries and the
//! linear-ansatz solver.

use crate::scalar::Field;

/// Row-reduces `rows` in place to reduced echelon form, pivoting only in the
/// first `pivot_cols` columns. Returns the pivot column of each pivot row.
///
/// Pivots are chosen by largest magnitude within the column; for floats an
/// entry is treated as zero when it is below the tower tolerance relative to
/// the largest input entry.
pub fn row_reduce<T: Field>(rows: &mut [Vec<T>], pivot_cols: usize) -> Vec<usize> {
    let scale = rows
        .iter()
        .flat_map(|r| r.iter())
        .map(Field::magnitude)
        .fold(0.0_f64, f64::max);
    let nrows = rows.len();
    let mut pivots = Vec::new();
    let mut next = 0;
    for col in 0..pivot_cols {
        if next == nrows {
            break;
        }
        let best = (next..nrows)
            .filter(|&r| !rows[r][col].is_negligible(scale))
            .max_by(|&a, &b| {
                rows[a][col]
                    .magnitude()
                    .partial_cmp(&rows[b][col].magnitude())
                    .unwrap_or(std::cmp::Ordering::Equal)
            });
        let Some(best) = best else {
            for row in rows.iter_mut().skip(next) {
                row[col] = T::zero();
            }
            continue;
        };
        rows.swap(next, best);
        let inv = T::one() / rows[next][col].clone();
        for entry in rows[next].iter_mut() {
            *entry = entry.clone() * inv.clone();
        }
        let pivot_row = rows[next].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r == next || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (entry, p) in row.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *entry = entry.clone() - factor.clone() * p.clone();
                }
            }
            row[col] = T::zero();
        }
        pivots.push(col);
        next += 1;
    }
    for row in rows.iter_mut() {
        for entry in row.iter_mut() {
            if entry.is_negligible(scale) {
                *entry = T::zero();
            }
        }
    }
    pivots
}

/// Rank of a list of row vectors.
pub fn rank<T: Field>(rows: &[Vec<T>]) -> usize {
    let Some(width) = rows.first().map(Vec::len) else {
        return 0;
    };
    let mut work = rows.to_vec();
    row_reduce(&mut work, width).len()
}

/// Solves `a * c = b` for `c`, where `a` is given column-wise. Returns `None`
/// when the system is inconsistent; free variables are set to zero.
pub fn solve_columns<T: Field>(columns: &[Vec<T>], rhs: &[T]) -> Option<Vec<T>> {
    let n = columns.len();
    let mut rows: Vec<Vec<T>> = (0..rhs.len())
        .map(|r| {
            let mut row: Vec<T> = columns.iter().map(|c| c[r].clone()).collect();
            row.push(rhs[r].clone());
            row
        })
        .collect();
    let pivots = row_reduce(&mut rows, n);
    if rows.iter().skip(pivots.len()).any(|row| !row[n].is_zero()) {
        return None;
    }
    let mut solution = vec![T::zero(); n];
    for (row, &col) in pivots.iter().enumerate() {
        solution[col] = rows[row][n].clone();
    }
    Some(solution)
}

/// Affine solution set of a linear system: `particular + span(homogeneous)`.
#[derive(Clone, Debug, PartialEq)]
pub struct AffineSolution<T> {
    pub particular: Vec<T>,
    pub homogeneous: Vec<Vec<T>>,
}

/// Solves the system given as augmented rows `[a | b]` with `unknowns`
/// coefficient columns. The homogeneous basis is in reduced echelon form and
/// the particular solution is reduced against it, so the result is canonical.
pub fn solve_affine<T: Field>(mut rows: Vec<Vec<T>>, unknowns: usize) -> Option<AffineSolution<T>> {
    let pivots = row_reduce(&mut rows, unknowns);
    if rows.iter().skip(pivots.len()).any(|row| !row[unknowns].is_zero()) {
        return None;
    }
    let mut particular = vec![T::zero(); unknowns];
    for (row, &col) in pivots.iter().enumerate() {
        particular[col] = rows[row][unknowns].clone();
    }
    let free: Vec<usize> = (0..unknowns).filter(|c| !pivots.contains(c)).collect();
    let mut homogeneous = Vec::with_capacity(free.len());
    for &f in &free {
        let mut v = vec![T::zero(); unknowns];
        v[f] = T::one();
        for (row, &col) in pivots.iter().enumerate() {
            v[col] = -rows[row][f].clone();
        }
        homogeneous.push(v);
    }
    // Each basis vector is 1 at its own free column and 0 at the others;
    // the particular solution is 0 at every free column.
    Some(AffineSolution { particular, homogeneous })
}

/// Determinant of a square float matrix by partial-pivot LU.
pub fn determinant(matrix: &[[f64; 6]; 6]) -> f64 {
    let mut m = *matrix;
    let mut det = 1.0;
    for col in 0..6 {
        let pivot = (col..6)
            .max_by(|&a, &b| m[a][col].abs().partial_cmp(&m[b][col].abs()).unwrap())
            .unwrap();
        if m[pivot][col] == 0.0 {
            return 0.0;
        }
        if pivot != col {
            m.swap(pivot, col);
            det = -det;
        }
        det *= m[col][col];
        for r in col + 1..6 {
            let factor = m[r][col] / m[col][col];
            for c in col..6 {
                m[r][c] -= factor * m[col][c];
            }
        }
    }
    det
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, rational, Rational};

    fn q(rows: &[&[i64]]) -> Vec<Vec<Rational>> {
        rows.iter().map(|r| r.iter().map(|&v| int(v)).collect()).collect()
    }

    #[test]
    fn rank_detects_dependence() {
        assert_eq!(rank(&q(&[&[1, 2, 3], &[2, 4, 6]])), 1);
        assert_eq!(rank(&q(&[&[1, 0, 0], &[0, 1, 0]])), 2);
        assert_eq!(rank::<Rational>(&[]), 0);
        assert_eq!(rank(&[vec![1.0, 1.0], vec![1.0, 1.0 + 1e-13]]), 1);
    }

    #[test]
    fn solves_two_by_two() {
        // 2 X1 + 3 X4 in basis {X1 + X4, X1 - X4} -> (5/2, -1/2)
        let cols = q(&[&[1, 1], &[1, -1]]);
        let c = solve_columns(&cols, &[int(2), int(3)]).unwrap();
        assert_eq!(c, vec![rational(5, 2), rational(-1, 2)]);
    }

    #[test]
    fn inconsistent_system_has_no_solution() {
        let cols = q(&[&[1, 0, 0]]);
        assert!(solve_columns(&cols, &[int(0), int(1), int(0)]).is_none());
    }

    #[test]
    fn affine_solution_spans_kernel() {
        // x + y = 1 over two unknowns.
        let sol = solve_affine(q(&[&[1, 1, 1]]), 2).unwrap();
        assert_eq!(sol.particular, vec![int(1), int(0)]);
        assert_eq!(sol.homogeneous, vec![vec![int(-1), int(1)]]);
    }

    #[test]
    fn determinant_of_permutation() {
        let mut m = [[0.0; 6]; 6];
        for i in 0..6 {
            m[i][(i + 1) % 6] = 1.0;
        }
        assert!((determinant(&m) + 1.0).abs() < 1e-15);
    }
}
