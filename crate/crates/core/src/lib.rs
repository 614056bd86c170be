//! Exact computer algebra for nondegenerate quasi-homogeneous singularities.
//!
//! The crate builds the Milnor ring of a polynomial `f`, its residue pairing,
//! the graded Frobenius subring `⊕_a R_f^{d·a}` that models the primitive
//! middle cohomology of the hypersurface `{f = 0}`, Higgs fields of marginal
//! deformations and the Gauss–Manin monodromy spectrum. Everything that is
//! rational is computed in exact arithmetic; a small numeric layer evaluates
//! one-variable oscillatory integrals.

pub mod error;
pub mod higgs;
pub mod hodge;
pub mod ideal;
pub mod linalg;
pub mod milnor;
pub mod monodromy;
pub mod oscillatory;
pub mod poly;
pub mod residue;
pub mod scalar;

pub use error::{Error, ParseError, Result};
pub use hodge::{BridgeConstants, GradedSubring, HodgeNumbers};
pub use ideal::{GroebnerBasis, MonomialOrder, OrderKind, QuotientBasis};
pub use milnor::{DeformationClass, MilnorRing, ModuliReport, SteenbrinkReport};
pub use monodromy::MonodromySpectrum;
pub use poly::{parse_polynomial, Monomial, Polynomial, WeightSystem};
pub use residue::ResiduePairing;
pub use scalar::{GaussRational, Rational};
pub use higgs::HiggsField;
