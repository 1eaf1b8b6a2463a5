//! Exact arithmetic: cyclotomic numbers, polynomials and rational functions
//! in one or several variables, and matrices over them.

mod cyclotomic;
mod field;
pub mod json;
mod matrix;
mod multipoly;
mod ratfunc;
mod unipoly;

pub use cyclotomic::{euler_phi, Cyclotomic};
pub use field::{AlgebraError, Field, ParamField};
pub use matrix::Mat;
pub use multipoly::{Mono, MultiCtx, MultiPoly, MultiRatFunc};
pub use ratfunc::RatFunc;
pub use unipoly::UniPoly;
