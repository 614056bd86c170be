//! Exact scalars, sparse polynomials, weight systems and the polynomial parser.

mod hessian;
mod monomial;
mod parse;
mod polynomial;
mod weights;

pub use hessian::{determinant, hessian_determinant};
pub use monomial::{Monomial, MAX_EXPONENT};
pub use parse::parse_polynomial;
pub use polynomial::Polynomial;
pub use weights::{
    central_charge, charge, is_quasi_homogeneous, weighted_degree, weighted_homogeneous_degree, WeightSystem,
};
