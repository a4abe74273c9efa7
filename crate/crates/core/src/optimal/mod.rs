//! Optimal systems of subalgebras of se(3) and the adjoint orbit machinery behind them.

mod classify;
mod equivalence;
mod five_dim;
mod screw;
mod subalgebras;

pub use classify::{classify_1d_paper, pattern_case, CaseTag, OneDimRepresentative, Route};
pub use equivalence::{equivalence_search, Equivalence};
pub use five_dim::{
    closure_residual, five_dim_scan, five_dim_search, grid_covectors, hyperplane_closure_exact, kernel_basis,
    FiveDimScan, CLOSURE_THRESHOLD,
};
pub use screw::{canonicalize_screw, ScrewForm, ScrewKind};
pub use subalgebras::{
    default_grid, printed_table_a3, printed_table_a4, two_dim_generators, verify_2d_list, verify_3d_4d,
    BracketWitness, HigherVerdict, SubalgebraVerdict, TableMismatch, TWO_DIM_CASES,
};
