//! Exact polynomial calculus on the second-order jet space of `u(x, y, z)`.

mod ansatz;
mod field;
mod parse;
mod poly;
mod solve;

pub use ansatz::{ansatz_residuals, AnsatzResiduals, SymmetryAnsatz};
pub use field::{
    bracket_fields, decompose, defining_equations, first_order_explicit, invariance_residual, laplacian, on_shell,
    recompute_commutator_table, satisfies_defining_equations, second_prolongation, DefiningResidual, FMode,
    PointVectorField, Prolongation, POINT_VARS,
};
pub use parse::parse_polynomial;
pub use poly::{Dir, JetPolynomial, Monomial, Var, NVARS};
pub use solve::{solve_phi_for_xi, spatial_monomials, AdmissiblePhi, DEFAULT_DEGREE};
