//! Exact arithmetic in se(3) over the basis
//! `X1 = ∂x, X2 = ∂y, X3 = ∂z, X4 = y∂z − z∂y, X5 = z∂x − x∂z, X6 = x∂y − y∂x`.

mod element;
mod structure;
mod subalgebra;

pub use element::AlgebraElement;
pub use structure::{bracket, jacobi_defect, StructureConstants, PRINTED_COMMUTATOR_TABLE};
pub use subalgebra::{closure_check, commutator_table, in_span, is_abelian, Closure, SubalgebraBasis};

/// Dimension of se(3).
pub const DIM: usize = 6;
