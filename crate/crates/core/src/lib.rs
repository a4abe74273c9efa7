//! Verification engine for the point symmetries of `∇u = f(u)` and the
//! optimal system of subalgebras of se(3).

pub mod adjoint;
pub mod algebra;
pub mod claims;
pub mod cli;
pub mod error;
pub mod jet;
pub mod linalg;
pub mod optimal;
pub mod scalar;
pub mod solutions;

pub use error::{Error, Result};
