//! Milnor rings of quasi-homogeneous polynomials, deformation classes,
//! moduli-number comparison and Steenbrink levels.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::ideal::{
    graded_dimensions, groebner_with_budget, normal_form, quotient_is_finite, standard_monomials, GroebnerBasis,
    MonomialOrder, OrderKind, QuotientBasis, DEFAULT_BUDGET,
};
use crate::poly::{is_quasi_homogeneous, weighted_degree, weighted_homogeneous_degree, Monomial, Polynomial, WeightSystem};
use crate::scalar::{binomial, Rational};

#[derive(Clone, Debug)]
pub struct MilnorOptions {
    pub order: OrderKind,
    pub budget: usize,
}

impl Default for MilnorOptions {
    fn default() -> Self {
        Self {
            order: OrderKind::GrevLex,
            budget: DEFAULT_BUDGET,
        }
    }
}

/// `R_f = ℚ[z]/⟨∂f/∂z_1, …, ∂f/∂z_N⟩` with its standard-monomial basis.
#[derive(Clone, Debug)]
pub struct MilnorRing {
    f: Polynomial,
    weights: WeightSystem,
    gb: GroebnerBasis,
    basis: QuotientBasis,
    graded_dims: BTreeMap<u64, usize>,
}

pub fn build_milnor_ring(f: &Polynomial, w: &WeightSystem) -> Result<MilnorRing> {
    build_milnor_ring_with(f, w, &MilnorOptions::default())
}

pub fn build_milnor_ring_with(f: &Polynomial, w: &WeightSystem, opts: &MilnorOptions) -> Result<MilnorRing> {
    if f.nvars() != w.nvars() {
        return Err(Error::InvalidInput("weight count differs from variable count".into()));
    }
    if !is_quasi_homogeneous(f, w) {
        return Err(Error::NotQuasiHomogeneous);
    }
    let n = f.nvars();
    let jacobian: Vec<Polynomial> = (0..n).map(|i| f.derivative(i)).filter(|p| !p.is_zero()).collect();
    if jacobian.is_empty() {
        return Err(Error::DegenerateSingularity);
    }
    let gb = groebner_with_budget(&jacobian, &MonomialOrder::new(opts.order, n), opts.budget)?;
    if !quotient_is_finite(&gb) {
        return Err(Error::DegenerateSingularity);
    }
    let basis = standard_monomials(&gb, None)?;
    if basis.is_empty() {
        return Err(Error::InvalidInput("the origin is not a critical point".into()));
    }
    let graded_dims = graded_dimensions(&basis);
    Ok(MilnorRing {
        f: f.clone(),
        weights: w.clone(),
        gb,
        basis,
        graded_dims,
    })
}

impl MilnorRing {
    pub fn f(&self) -> &Polynomial {
        &self.f
    }

    pub fn weights(&self) -> &WeightSystem {
        &self.weights
    }

    pub fn groebner_basis(&self) -> &GroebnerBasis {
        &self.gb
    }

    pub fn basis(&self) -> &QuotientBasis {
        &self.basis
    }

    /// Milnor number μ.
    pub fn mu(&self) -> usize {
        self.basis.len()
    }

    pub fn nvars(&self) -> usize {
        self.f.nvars()
    }

    /// Dimension `N − 2` of the projective hypersurface `{f = 0}`.
    pub fn hypersurface_dim(&self) -> i64 {
        self.nvars() as i64 - 2
    }

    pub fn is_homogeneous(&self) -> bool {
        self.weights.is_homogeneous() && self.f.is_homogeneous()
    }

    /// Homogeneous degree, when `f` is homogeneous.
    pub fn degree(&self) -> Option<u32> {
        self.is_homogeneous().then(|| self.weights.degree())
    }

    pub fn graded_dims(&self) -> &BTreeMap<u64, usize> {
        &self.graded_dims
    }

    pub fn graded_dim(&self, deg: u64) -> usize {
        self.graded_dims.get(&deg).copied().unwrap_or(0)
    }

    pub fn basis_in_degree(&self, deg: u64) -> Vec<Monomial> {
        self.basis.monomials().iter().filter(|m| m.degree() == deg).cloned().collect()
    }

    pub fn normal_form(&self, p: &Polynomial) -> Polynomial {
        normal_form(p, &self.gb)
    }

    /// Class of `a·b` in `R_f`.
    pub fn multiply(&self, a: &Polynomial, b: &Polynomial) -> Polynomial {
        self.normal_form(&(a * b))
    }

    /// Coordinates of `NF(p)` on the standard-monomial basis.
    pub fn coordinates(&self, p: &Polynomial) -> Vec<Rational> {
        let nf = self.normal_form(p);
        let mut v = vec![Rational::zero(); self.mu()];
        for (m, c) in nf.terms() {
            let i = self.basis.index_of(m).expect("normal form is supported on standard monomials");
            v[i] = c.clone();
        }
        v
    }

    /// Weighted degree of the socle, `Σ_i (1 − 2 q_i)`.
    pub fn socle_weighted_degree(&self) -> Rational {
        crate::poly::central_charge(&self.weights)
    }

    /// Flags the syntactic condition "f contains a monomial `z_i z_j`, i ≠ j".
    pub fn has_mixed_quadratic_monomial(&self) -> bool {
        self.f
            .monomials()
            .any(|m| m.degree() == 2 && m.exponents().iter().filter(|&&e| e == 1).count() == 2)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DeformationKind {
    Relevant,
    Marginal,
    Irrelevant,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeformationClass {
    pub kind: DeformationKind,
    /// Weight `1 − deg_w(φ)` of the deformation parameter.
    pub parameter_weight: Rational,
}

pub fn classify_deformation(phi: &Polynomial, w: &WeightSystem) -> Result<DeformationClass> {
    let deg = weighted_homogeneous_degree(phi, w).ok_or(Error::MixedDegree)?;
    let parameter_weight = Rational::one() - deg;
    let kind = if parameter_weight.is_positive() {
        DeformationKind::Relevant
    } else if parameter_weight.is_zero() {
        DeformationKind::Marginal
    } else {
        DeformationKind::Irrelevant
    };
    Ok(DeformationClass { kind, parameter_weight })
}

/// Comparison of `binom(n+1+d, d) − (n+2)^2` with `dim R_f^d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuliReport {
    pub n: u32,
    pub d: u32,
    pub formula: BigInt,
    pub marginal_dim: usize,
    pub matches: bool,
    /// Set for `(n, d) = (2, 4)`: quartic K3 surfaces.
    pub k3_exception: bool,
    /// Complex-manifold deformation dimension recorded for the K3 case.
    pub complex_deformation_dim: Option<u32>,
}

pub fn moduli_numbers(n: u32, d: u32, milnor: &MilnorRing) -> Result<ModuliReport> {
    if milnor.nvars() != n as usize + 2 || milnor.degree() != Some(d) {
        return Err(Error::InvalidInput(format!(
            "moduli comparison needs a degree-{d} homogeneous polynomial in {} variables",
            n + 2
        )));
    }
    let formula = binomial((n + 1 + d) as u64, d as u64) - BigInt::from((n as u64 + 2).pow(2));
    let marginal_dim = milnor.graded_dim(d as u64);
    let k3_exception = (n, d) == (2, 4);
    Ok(ModuliReport {
        n,
        d,
        matches: formula == BigInt::from(marginal_dim),
        formula,
        marginal_dim,
        k3_exception,
        complex_deformation_dim: k3_exception.then_some(20),
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SteenbrinkReport {
    /// `(A, h(A))` with `h(A) = (deg A + N)/d`, per basis monomial.
    pub levels: Vec<(Monomial, Rational)>,
    /// `dim W_{N−1}`: monomials with non-integral level.
    pub w_lower_dim: usize,
    /// `dim W_N / W_{N−1}`: monomials with integral level.
    pub w_graded_dim: usize,
}

pub fn steenbrink_levels(milnor: &MilnorRing) -> Result<SteenbrinkReport> {
    let d = milnor.degree().ok_or(Error::NotHomogeneous)?;
    let n = milnor.nvars() as i64;
    let levels: Vec<(Monomial, Rational)> = milnor
        .basis()
        .monomials()
        .iter()
        .map(|m| (m.clone(), Rational::new(BigInt::from(m.degree() as i64 + n), BigInt::from(d))))
        .collect();
    let w_graded_dim = levels.iter().filter(|(_, h)| h.is_integer()).count();
    Ok(SteenbrinkReport {
        w_lower_dim: levels.len() - w_graded_dim,
        w_graded_dim,
        levels,
    })
}

/// Weighted degree of every basis monomial; used by callers that grade by weight.
pub fn weighted_degrees(milnor: &MilnorRing) -> Vec<Rational> {
    milnor
        .basis()
        .monomials()
        .iter()
        .map(|m| weighted_degree(m, milnor.weights()))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_polynomial;
    use crate::scalar::{int, rat};

    fn fermat(nvars: usize, d: u32) -> MilnorRing {
        let names: Vec<String> = (0..nvars).map(|i| format!("z{i}")).collect();
        let text: Vec<String> = names.iter().map(|v| format!("{v}^{d}")).collect();
        let f = parse_polynomial(&text.join("+"), &names).unwrap();
        build_milnor_ring(&f, &WeightSystem::homogeneous(nvars, d)).unwrap()
    }

    #[test]
    fn fermat_milnor_numbers() {
        for d in 2..=5u32 {
            for n in 1..=5usize {
                if (d as usize - 1).pow(n as u32) > 1100 {
                    continue;
                }
                assert_eq!(fermat(n, d).mu(), (d as usize - 1).pow(n as u32), "d={d} n={n}");
            }
        }
    }

    #[test]
    fn morse_point() {
        let r = fermat(1, 2);
        assert_eq!(r.mu(), 1);
        assert!(r.basis().monomials()[0].is_one());
    }

    #[test]
    fn e7_milnor_number_by_enumeration() {
        // Brute-force oracle: count monomials x^a y^b, a,b < 10, whose class is
        // independent of the lower ones, using dimension of the span of normal forms.
        let v = ["x", "y"];
        let f = parse_polynomial("x^3 + x*y^3", &v).unwrap();
        let w = WeightSystem::new(vec![rat(1, 3), rat(2, 9)], 9).unwrap();
        let r = build_milnor_ring(&f, &w).unwrap();
        let mut rows = Vec::new();
        for a in 0..10u32 {
            for b in 0..10u32 {
                rows.push(r.coordinates(&Polynomial::monomial(Monomial::new(vec![a, b]))));
            }
        }
        let rank = crate::linalg::Matrix::from_rows(rows).rank();
        assert_eq!(rank, 7);
        assert_eq!(r.mu(), 7);
    }

    #[test]
    fn degenerate_and_non_quasi_homogeneous() {
        let v = ["x", "y", "z"];
        let f = parse_polynomial("x*y", &v).unwrap();
        assert_eq!(
            build_milnor_ring(&f, &WeightSystem::homogeneous(3, 2)).unwrap_err(),
            Error::DegenerateSingularity
        );
        let g = parse_polynomial("x^3 + y^2", &v[..2]).unwrap();
        assert_eq!(
            build_milnor_ring(&g, &WeightSystem::homogeneous(2, 3)).unwrap_err(),
            Error::NotQuasiHomogeneous
        );
    }

    #[test]
    fn deformation_classes() {
        let names: Vec<String> = (0..5).map(|i| format!("z{i}")).collect();
        let w = WeightSystem::homogeneous(5, 5);
        let c = |s: &str| classify_deformation(&parse_polynomial(s, &names).unwrap(), &w).unwrap();
        assert_eq!(c("z0*z1*z2*z3*z4").kind, DeformationKind::Marginal);
        assert_eq!(c("z0*z1*z2*z3*z4").parameter_weight, int(0));
        let rel = c("z0");
        assert_eq!((rel.kind, rel.parameter_weight), (DeformationKind::Relevant, rat(4, 5)));
        let irr = c("z0^6");
        assert_eq!((irr.kind, irr.parameter_weight), (DeformationKind::Irrelevant, rat(-1, 5)));
        assert_eq!(
            classify_deformation(&parse_polynomial("z0 + z1^2", &names).unwrap(), &w),
            Err(Error::MixedDegree)
        );
    }

    #[test]
    fn moduli_grid() {
        let q = moduli_numbers(3, 5, &fermat(5, 5)).unwrap();
        assert_eq!((q.formula.clone(), q.marginal_dim, q.matches), (BigInt::from(101), 101, true));
        let c = moduli_numbers(1, 3, &fermat(3, 3)).unwrap();
        assert_eq!((c.formula.clone(), c.marginal_dim, c.matches), (BigInt::from(1), 1, true));
        let k3 = moduli_numbers(2, 4, &fermat(4, 4)).unwrap();
        assert_eq!(k3.formula, BigInt::from(19));
        assert_eq!(k3.marginal_dim, 19);
        assert!(k3.k3_exception);
        assert_eq!(k3.complex_deformation_dim, Some(20));
        assert!(moduli_numbers(2, 5, &fermat(5, 5)).is_err());
    }

    #[test]
    fn steenbrink_examples() {
        let two_cubic = fermat(2, 3);
        let s = steenbrink_levels(&two_cubic).unwrap();
        let hs: Vec<Rational> = s.levels.iter().map(|(_, h)| h.clone()).collect();
        let mut sorted = hs.clone();
        sorted.sort();
        assert_eq!(sorted, vec![rat(2, 3), int(1), int(1), rat(4, 3)]);
        assert_eq!((s.w_lower_dim, s.w_graded_dim), (2, 2));

        let morse = steenbrink_levels(&fermat(1, 2)).unwrap();
        assert_eq!(morse.levels[0].1, rat(1, 2));
        assert_eq!((morse.w_lower_dim, morse.w_graded_dim), (1, 0));

        let quintic = steenbrink_levels(&fermat(5, 5)).unwrap();
        assert_eq!(quintic.w_graded_dim, 204);
    }

    #[test]
    fn mixed_quadratic_flag() {
        let v = ["x", "y"];
        let f = parse_polynomial("x*y", &v).unwrap();
        let r = build_milnor_ring(&f, &WeightSystem::homogeneous(2, 2)).unwrap();
        assert_eq!(r.mu(), 1);
        assert!(r.has_mixed_quadratic_monomial());
        assert!(!fermat(2, 2).has_mixed_quadratic_monomial());
    }
}
