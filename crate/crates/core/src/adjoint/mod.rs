//! Adjoint action of SE(3) on se(3).

mod matrix;
mod printed;
mod trigpoly;
mod word;

pub use matrix::{ad_matrix, adjoint_closed_form, adjoint_series, Mat6, TrigPolyMatrix};
pub use printed::{compare_with_printed, printed_adjoint_matrix, EntryDiscrepancy};
pub use trigpoly::{TrigMonomial, TrigPoly};
pub use word::{apply_word, automorphism_defect, automorphism_defect_symbolic, closed_form, AdjointWord, WordStep};

/// Default truncation order of the Lie series.
pub const SERIES_ORDER: usize = 30;
