//! Gauss–Manin eigenvalues on the monomial basis of the Brieskorn lattice.
//!
//! For quasi-homogeneous `f` the class `[z^α dz]` is an eigenvector of
//! `z∇_z` with eigenvalue `⟨α+1, w⟩ − 1`; the monodromy acts by
//! `exp(2πi⟨α+1, w⟩)`.

use std::collections::BTreeSet;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::hodge::GradedSubring;
use crate::milnor::MilnorRing;
use crate::poly::{central_charge, charge, weighted_degree, Monomial};
use crate::scalar::{int, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpectrumEntry {
    pub monomial: Monomial,
    /// `⟨α+1, w⟩ − 1`.
    pub exponent: Rational,
    /// Monodromy eigenvalue `exp(2πi·angle)`, `angle ∈ [0, 1)`.
    pub angle: Rational,
    pub invariant: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonodromySpectrum {
    pub entries: Vec<SpectrumEntry>,
}

impl MonodromySpectrum {
    pub fn invariant_dim(&self) -> usize {
        self.entries.iter().filter(|e| e.invariant).count()
    }

    pub fn invariant_monomials(&self) -> Vec<Monomial> {
        self.entries.iter().filter(|e| e.invariant).map(|e| e.monomial.clone()).collect()
    }

    fn exponents_sorted(&self) -> Vec<Rational> {
        let mut v: Vec<Rational> = self.entries.iter().map(|e| e.exponent.clone()).collect();
        v.sort();
        v
    }

    /// Multiset of exponents is invariant under `x ↦ center_sum − x`.
    pub fn symmetric_under_reflection(&self, center_sum: &Rational) -> bool {
        reflection_symmetric(self.exponents_sorted(), center_sum)
    }
}

fn reflection_symmetric(mut v: Vec<Rational>, center_sum: &Rational) -> bool {
    v.sort();
    let mut r: Vec<Rational> = v.iter().map(|x| center_sum - x).collect();
    r.sort();
    v == r
}

fn frac(q: &Rational) -> Rational {
    q - q.floor()
}

pub fn monodromy_spectrum(milnor: &MilnorRing) -> MonodromySpectrum {
    let w = milnor.weights();
    let entries = milnor
        .basis()
        .monomials()
        .iter()
        .map(|m| {
            let exponent = charge(m, w) - int(1);
            let angle = frac(&exponent);
            SpectrumEntry {
                monomial: m.clone(),
                invariant: angle.is_zero(),
                exponent,
                angle,
            }
        })
        .collect();
    MonodromySpectrum { entries }
}

/// Invariant monomials versus the graded-subring basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvarianceReport {
    pub invariant_dim: usize,
    pub subring_dim: usize,
    pub sets_equal: bool,
    /// Invariant monomials whose degree is not a multiple of `d` (should be empty).
    pub congruence_violations: usize,
    pub realness: &'static str,
}

pub const REALNESS_NOTE: &str =
    "not re-derived: invariant classes span the eigenvalue-1 eigenspace of a real monodromy operator";

pub fn invariance_realness_report(milnor: &MilnorRing, sub: &GradedSubring) -> InvarianceReport {
    let spec = monodromy_spectrum(milnor);
    let inv: BTreeSet<Monomial> = spec.invariant_monomials().into_iter().collect();
    let subring: BTreeSet<Monomial> = sub.levels().iter().flatten().cloned().collect();
    let d = sub.degree() as u64;
    InvarianceReport {
        invariant_dim: inv.len(),
        subring_dim: subring.len(),
        sets_equal: inv == subring,
        congruence_violations: inv.iter().filter(|m| !m.degree().is_multiple_of(d)).count(),
        realness: REALNESS_NOTE,
    }
}

/// Congruence and duality statements about the spectrum of a homogeneous `f`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpectrumChecks {
    pub nvars: usize,
    pub degree: u32,
    pub central_charge: Rational,
    /// Basis monomials where `deg ≡ 0 mod d` disagrees with invariance.
    pub congruence_zero_mismatches: usize,
    /// Basis monomials where `deg ≡ −N mod d` disagrees with invariance.
    pub congruence_shifted_mismatches: usize,
    /// Exponents symmetric under `x ↦ ĉ − x`.
    pub exponents_symmetric_c_hat: bool,
    /// Exponents symmetric under `x ↦ (N − 2) − x`.
    pub exponents_symmetric_n_minus_2: bool,
    /// Weighted degrees `⟨α, w⟩` symmetric under `x ↦ ĉ − x`.
    pub weighted_degrees_symmetric_c_hat: bool,
}

pub fn spectrum_checks(milnor: &MilnorRing) -> Result<SpectrumChecks> {
    let d = milnor.degree().ok_or(Error::NotHomogeneous)?;
    let n = milnor.nvars();
    let spec = monodromy_spectrum(milnor);
    let c_hat = central_charge(milnor.weights());
    let dd = d as i64;
    let mut zero = 0;
    let mut shifted = 0;
    for e in &spec.entries {
        let deg = e.monomial.degree() as i64;
        zero += usize::from((deg % dd == 0) != e.invariant);
        shifted += usize::from(((deg + n as i64) % dd == 0) != e.invariant);
    }
    let wdeg: Vec<Rational> = spec.entries.iter().map(|e| weighted_degree(&e.monomial, milnor.weights())).collect();
    Ok(SpectrumChecks {
        nvars: n,
        degree: d,
        congruence_zero_mismatches: zero,
        congruence_shifted_mismatches: shifted,
        exponents_symmetric_c_hat: spec.symmetric_under_reflection(&c_hat),
        exponents_symmetric_n_minus_2: spec.symmetric_under_reflection(&int(n as i64 - 2)),
        weighted_degrees_symmetric_c_hat: reflection_symmetric(wdeg, &c_hat),
        central_charge: c_hat,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hodge::graded_subring;
    use crate::milnor::build_milnor_ring;
    use crate::poly::{central_charge, parse_polynomial, WeightSystem};
    use crate::scalar::rat;

    fn fermat(n: usize, d: u32) -> MilnorRing {
        let names: Vec<String> = (0..n).map(|i| format!("z{i}")).collect();
        let text: Vec<String> = names.iter().map(|v| format!("{v}^{d}")).collect();
        build_milnor_ring(&parse_polynomial(&text.join("+"), &names).unwrap(), &WeightSystem::homogeneous(n, d))
            .unwrap()
    }

    #[test]
    fn quintic_spectrum() {
        let r = fermat(5, 5);
        let s = monodromy_spectrum(&r);
        let zero = s.entries.iter().find(|e| e.monomial.is_one()).unwrap();
        assert_eq!((zero.exponent.clone(), zero.invariant), (int(0), true));
        let seven = s.entries.iter().find(|e| e.monomial.degree() == 7).unwrap();
        assert_eq!(seven.exponent, rat(7, 5));
        assert_eq!(seven.angle, rat(2, 5));
        assert!(!seven.invariant);
        assert_eq!(s.invariant_dim(), 204);
        assert!(s.symmetric_under_reflection(&central_charge(r.weights())));
    }

    #[test]
    fn duality_centers() {
        let q = spectrum_checks(&fermat(5, 5)).unwrap();
        assert_eq!(q.central_charge, int(3));
        assert!(q.exponents_symmetric_c_hat && q.exponents_symmetric_n_minus_2);
        assert_eq!((q.congruence_zero_mismatches, q.congruence_shifted_mismatches), (0, 0));

        let c = spectrum_checks(&fermat(1, 3)).unwrap();
        assert_eq!(c.central_charge, rat(1, 3));
        assert!(!c.exponents_symmetric_c_hat);
        assert!(c.exponents_symmetric_n_minus_2 && c.weighted_degrees_symmetric_c_hat);
        assert_eq!((c.congruence_zero_mismatches, c.congruence_shifted_mismatches), (1, 0));
    }

    #[test]
    fn invariance_sets() {
        for (n, total) in [(3usize, 2usize), (4, 21)] {
            let r = fermat(n, n as u32);
            let sub = graded_subring(&r).unwrap();
            let rep = invariance_realness_report(&r, &sub);
            assert!(rep.sets_equal);
            assert_eq!(rep.invariant_dim, total);
            assert_eq!(rep.congruence_violations, 0);
        }
    }
}
