//! Numerical checks that the se(3) flows map solutions of `∇u = f(u)` to solutions.

mod field;
mod flow;
mod transform;

pub use field::{family, ScalarField, SourceTerm, FAMILIES};
pub use flow::{closed_form_map, flow_point, flow_vs_closed_form, FlowResult, FLOW_STEP};
pub use transform::{
    convergence_ratio, pde_residual, transform_solution, verify_invariance, InvarianceReport, BOX, FD_STEP,
};
