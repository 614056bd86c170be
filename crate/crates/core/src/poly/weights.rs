use num_traits::{One, Signed, Zero};

use super::{Monomial, Polynomial};
use crate::error::Error;
use crate::scalar::{int, Rational};

/// Rational weights `q_1..q_N` under which `f(λ^{q_i} z_i) = λ f(z)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightSystem {
    weights: Vec<Rational>,
    degree: u32,
}

impl WeightSystem {
    pub fn new(weights: Vec<Rational>, degree: u32) -> Result<Self, Error> {
        if degree == 0 {
            return Err(Error::InvalidInput("degree must be positive".into()));
        }
        if weights.is_empty() || weights.iter().any(|q| !q.is_positive()) {
            return Err(Error::InvalidInput("weights must be positive".into()));
        }
        Ok(Self { weights, degree })
    }

    /// Equal weights `1/d` for a degree-`d` homogeneous polynomial.
    pub fn homogeneous(nvars: usize, degree: u32) -> Self {
        assert!(degree > 0 && nvars > 0);
        Self {
            weights: vec![Rational::new(1.into(), degree.into()); nvars],
            degree,
        }
    }

    pub fn weights(&self) -> &[Rational] {
        &self.weights
    }

    pub fn nvars(&self) -> usize {
        self.weights.len()
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    /// True when every weight equals `1/d`.
    pub fn is_homogeneous(&self) -> bool {
        let q = Rational::new(1.into(), self.degree.into());
        self.weights.iter().all(|w| *w == q)
    }

    pub fn sum(&self) -> Rational {
        self.weights.iter().fold(Rational::zero(), |acc, q| acc + q)
    }
}

/// `Σ q_i I_i`.
pub fn weighted_degree(m: &Monomial, w: &WeightSystem) -> Rational {
    assert_eq!(m.nvars(), w.nvars(), "variable count mismatch");
    m.exponents()
        .iter()
        .zip(w.weights())
        .fold(Rational::zero(), |acc, (&e, q)| acc + q * int(e as i64))
}

/// Charge of `z^I dz_1 ∧ … ∧ dz_N`: `Σ q_i (I_i + 1)`.
pub fn charge(m: &Monomial, w: &WeightSystem) -> Rational {
    weighted_degree(m, w) + w.sum()
}

/// `ĉ = Σ_i (1 − 2 q_i)`, summed over the variables.
pub fn central_charge(w: &WeightSystem) -> Rational {
    w.weights()
        .iter()
        .fold(Rational::zero(), |acc, q| acc + Rational::one() - q * int(2))
}

/// Common weighted degree of all terms, or `None` if `p` is zero or mixed.
pub fn weighted_homogeneous_degree(p: &Polynomial, w: &WeightSystem) -> Option<Rational> {
    let mut degs = p.monomials().map(|m| weighted_degree(m, w));
    let first = degs.next()?;
    degs.all(|d| d == first).then_some(first)
}

pub fn is_quasi_homogeneous(f: &Polynomial, w: &WeightSystem) -> bool {
    !f.is_zero() && f.monomials().all(|m| weighted_degree(m, w).is_one())
}
