//! Gröbner bases, normal forms and standard-monomial bases of quotient rings.

mod groebner;
mod order;
mod quotient;

pub use groebner::{groebner, groebner_with_budget, ideal_contains, normal_form, GroebnerBasis, DEFAULT_BUDGET};
pub use order::{MonomialOrder, OrderKind};
pub use quotient::{graded_dimensions, quotient_is_finite, standard_monomials, QuotientBasis};
