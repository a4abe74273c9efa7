//! The published matrices of `Ad(exp(s X_i))`, kept as a comparison target.

use serde::Serialize;

use crate::adjoint::{closed_form, Mat6, TrigPoly, TrigPolyMatrix};
use crate::error::Result;

const PRINTED: [[[&str; 6]; 6]; 6] = [
    [
        ["1", "0", "0", "0", "0", "0"],
        ["0", "1", "0", "0", "0", "0"],
        ["0", "0", "1", "0", "0", "0"],
        ["0", "0", "0", "1", "0", "0"],
        ["0", "0", "s", "0", "1", "0"],
        ["0", "-s", "0", "0", "0", "1"],
    ],
    [
        ["1", "0", "0", "0", "0", "0"],
        ["0", "1", "0", "0", "0", "0"],
        ["0", "0", "1", "0", "0", "0"],
        ["0", "0", "-s", "1", "0", "0"],
        ["0", "0", "0", "0", "1", "0"],
        ["s", "0", "0", "0", "0", "1"],
    ],
    [
        ["1", "0", "0", "0", "0", "0"],
        ["0", "1", "0", "0", "0", "0"],
        ["0", "0", "1", "0", "0", "0"],
        ["0", "s", "0", "1", "0", "0"],
        ["-s", "0", "0", "0", "1", "0"],
        ["0", "0", "0", "0", "0", "1"],
    ],
    [
        ["1", "0", "0", "0", "0", "0"],
        ["0", "C", "S", "0", "0", "0"],
        ["0", "S", "C", "0", "0", "0"],
        ["0", "0", "0", "1", "0", "0"],
        ["0", "0", "0", "0", "C", "S"],
        ["0", "0", "0", "0", "-S", "C"],
    ],
    [
        ["C", "0", "-S", "0", "0", "0"],
        ["0", "1", "0", "0", "0", "0"],
        ["S", "0", "C", "0", "0", "0"],
        ["0", "0", "0", "C", "0", "-S"],
        ["0", "0", "0", "0", "1", "0"],
        ["0", "0", "0", "S", "0", "C"],
    ],
    [
        ["C", "S", "0", "0", "0", "0"],
        ["-S", "C", "0", "0", "0", "0"],
        ["0", "0", "1", "0", "0", "0"],
        ["0", "0", "0", "C", "S", "0"],
        ["0", "0", "0", "-S", "C", "0"],
        ["0", "0", "0", "0", "0", "1"],
    ],
];

fn entry(text: &str) -> TrigPoly {
    let (neg, body) = match text.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, text),
    };
    let p = match body {
        "0" => TrigPoly::default(),
        "1" => num_traits::One::one(),
        "s" => TrigPoly::param(),
        "C" => TrigPoly::cos(),
        "S" => TrigPoly::sin(),
        other => unreachable!("unexpected printed entry {other}"),
    };
    if neg {
        -p
    } else {
        p
    }
}

/// Published matrix for generator `i` in `1..=6`.
pub fn printed_adjoint_matrix(i: usize) -> Result<TrigPolyMatrix> {
    crate::adjoint::matrix::check_generator(i)?;
    Ok(Mat6::from_rows(std::array::from_fn(|r| std::array::from_fn(|c| entry(PRINTED[i - 1][r][c])))))
}

/// A cell where the published matrix and the series-derived one differ.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EntryDiscrepancy {
    pub generator: usize,
    /// One-based row and column.
    pub row: usize,
    pub col: usize,
    pub printed: String,
    pub computed: String,
}

/// Compares the published matrix against the closed form, cell by cell.
pub fn compare_with_printed(i: usize) -> Result<Vec<EntryDiscrepancy>> {
    let printed = printed_adjoint_matrix(i)?;
    let computed = closed_form(i);
    let mut out = Vec::new();
    for r in 0..6 {
        for c in 0..6 {
            if printed.get(r, c) != computed.get(r, c) {
                out.push(EntryDiscrepancy {
                    generator: i,
                    row: r + 1,
                    col: c + 1,
                    printed: printed.get(r, c).to_string(),
                    computed: computed.get(r, c).to_string(),
                });
            }
        }
    }
    Ok(out)
}
