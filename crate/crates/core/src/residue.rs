//! Grothendieck residue and the residue pairing on a Milnor ring.
//!
//! For a quasi-homogeneous isolated singularity the top weighted piece of
//! `R_f` is one-dimensional and spanned by the Hessian class, whose
//! unit-normalized residue equals μ. The exact residue of `g` is read off the
//! socle coordinate of `NF(g)`. Two independent numeric/separable oracles
//! live alongside for validation.

use std::f64::consts::PI;

use num_complex::Complex64;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::milnor::MilnorRing;
use crate::poly::{hessian_determinant, weighted_degree, Monomial, Polynomial};
use crate::scalar::{int, to_f64, Rational};

/// Residues are unit-normalized, i.e. carry the factor `(1/2πi)^N`. The
/// pairing `Res_f` used throughout the bridge constants is `(2πi)^N` times
/// the value returned here.
pub const NORMALIZATION: &str = "unit: (1/2πi)^N ∮ g dz/(f_1…f_N); Res_f = (2πi)^N × value";

#[derive(Clone, Debug)]
pub struct ResiduePairing {
    milnor: MilnorRing,
    hessian_class: Polynomial,
    socle: Monomial,
    hessian_socle_coeff: Rational,
}

impl ResiduePairing {
    pub fn new(milnor: MilnorRing) -> Result<Self> {
        let top = milnor.socle_weighted_degree();
        let w = milnor.weights().clone();
        let mut socle = None;
        for m in milnor.basis().monomials() {
            let wd = weighted_degree(m, &w);
            if wd > top {
                return Err(Error::Internal("standard monomial above the socle degree".into()));
            }
            if wd == top {
                if socle.is_some() {
                    return Err(Error::Internal("socle is not one-dimensional".into()));
                }
                socle = Some(m.clone());
            }
        }
        let socle = socle.ok_or_else(|| Error::Internal("no standard monomial in socle degree".into()))?;
        let hessian_class = milnor.normal_form(&hessian_determinant(milnor.f()));
        if hessian_class.len() != 1 {
            return Err(Error::ProportionalityViolation);
        }
        let hessian_socle_coeff = hessian_class.coeff(&socle);
        if hessian_socle_coeff.is_zero() {
            return Err(Error::ProportionalityViolation);
        }
        Ok(Self {
            milnor,
            hessian_class,
            socle,
            hessian_socle_coeff,
        })
    }

    pub fn milnor(&self) -> &MilnorRing {
        &self.milnor
    }

    pub fn hessian_class(&self) -> &Polynomial {
        &self.hessian_class
    }

    pub fn socle_monomial(&self) -> &Monomial {
        &self.socle
    }

    /// Total degree of the socle; `N(d−2)` for homogeneous `f`.
    pub fn socle_degree(&self) -> u64 {
        self.socle.degree()
    }

    pub fn normalization(&self) -> &'static str {
        NORMALIZATION
    }

    /// Unit-normalized residue of `g dz / (∂_1 f ⋯ ∂_N f)`.
    pub fn grothendieck_residue(&self, g: &Polynomial) -> Result<Rational> {
        let nf = self.milnor.normal_form(g);
        self.residue_of_normal_form(&nf)
    }

    fn residue_of_normal_form(&self, nf: &Polynomial) -> Result<Rational> {
        let top = self.milnor.socle_weighted_degree();
        let w = self.milnor.weights();
        let component = nf.filter_terms(|m| weighted_degree(m, w) == top);
        if component.monomials().any(|m| *m != self.socle) {
            return Err(Error::ProportionalityViolation);
        }
        let lambda = component.coeff(&self.socle) / &self.hessian_socle_coeff;
        Ok(lambda * int(self.milnor.mu() as i64))
    }

    pub fn residue_pairing(&self, a: &Polynomial, b: &Polynomial) -> Result<Rational> {
        let na = self.milnor.normal_form(a);
        let nb = self.milnor.normal_form(b);
        self.grothendieck_residue(&(&na * &nb))
    }

    /// Pairing of two monomials; skips the product normal form when the
    /// product is standard.
    pub fn monomial_pairing(&self, a: &Monomial, b: &Monomial) -> Result<Rational> {
        let ab = a.mul(b);
        if self.milnor.groebner_basis().is_standard(&ab) {
            return self.residue_of_normal_form(&Polynomial::monomial(ab));
        }
        self.grothendieck_residue(&Polynomial::monomial(ab))
    }

    pub fn gram_block(&self, deg_a: u64, deg_b: u64) -> Result<GramBlock> {
        let rows = self.milnor.basis_in_degree(deg_a);
        let cols = self.milnor.basis_in_degree(deg_b);
        let mut matrix = Matrix::zeros(rows.len(), cols.len());
        for (i, a) in rows.iter().enumerate() {
            for (j, b) in cols.iter().enumerate() {
                matrix.set(i, j, self.monomial_pairing(a, b)?);
            }
        }
        Ok(GramBlock {
            deg_a,
            deg_b,
            complementary: deg_a + deg_b == self.socle_degree(),
            rows,
            cols,
            matrix,
        })
    }
}

/// Residue pairing restricted to two graded pieces.
#[derive(Clone, Debug)]
pub struct GramBlock {
    pub deg_a: u64,
    pub deg_b: u64,
    /// `deg_a + deg_b` equals the socle degree.
    pub complementary: bool,
    pub rows: Vec<Monomial>,
    pub cols: Vec<Monomial>,
    pub matrix: Matrix,
}

impl GramBlock {
    pub fn is_nonsingular(&self) -> bool {
        self.matrix.is_nonsingular()
    }
}

#[derive(Clone, Copy, Debug)]
pub struct ContourEstimate {
    pub value: Complex64,
    /// `|value(M) − value(M/2)|`.
    pub error_estimate: f64,
}

pub const DEFAULT_CONTOUR_SAMPLES: usize = 4096;

/// Trapezoidal estimate of `(1/2πi) ∮_{|z|=r} g/f' dz`.
pub fn contour_residue_oracle_1d(f: &Polynomial, g: &Polynomial, radius: f64, samples: usize) -> Result<ContourEstimate> {
    if f.nvars() != 1 || g.nvars() != 1 {
        return Err(Error::InvalidInput("contour oracle needs univariate input".into()));
    }
    if samples < 2 {
        return Err(Error::InvalidInput("at least two samples required".into()));
    }
    let df = f.derivative(0);
    let rule = |m: usize| -> Complex64 {
        let mut acc = Complex64::zero();
        for k in 0..m {
            let z = Complex64::from_polar(radius, 2.0 * PI * k as f64 / m as f64);
            acc += eval_univariate(g, z) * z / eval_univariate(&df, z);
        }
        acc / m as f64
    };
    let value = rule(samples);
    let coarse = rule(samples / 2);
    Ok(ContourEstimate {
        value,
        error_estimate: (value - coarse).norm(),
    })
}

fn eval_univariate(p: &Polynomial, z: Complex64) -> Complex64 {
    p.terms()
        .map(|(m, c)| z.powu(m.exponents()[0]) * to_f64(c))
        .fold(Complex64::zero(), |a, b| a + b)
}

/// Exact residue of `z^α dz/(f_1'(z_1)⋯f_N'(z_N))` for `f = Σ c_i z_i^{d_i}`.
pub fn separable_residue_oracle(f: &Polynomial, g: &Monomial) -> Result<Rational> {
    let n = f.nvars();
    let mut parts: Vec<Option<(u32, Rational)>> = vec![None; n];
    for (m, c) in f.terms() {
        let v = m.pure_power_var().ok_or(Error::NotSeparable)?;
        if parts[v].is_some() {
            return Err(Error::NotSeparable);
        }
        parts[v] = Some((m.exponents()[v], c.clone()));
    }
    let mut acc = int(1);
    for (v, part) in parts.iter().enumerate() {
        let (d, c) = part.as_ref().ok_or(Error::NotSeparable)?;
        if *d < 2 {
            return Err(Error::NotSeparable);
        }
        if g.exponents()[v] != d - 2 {
            return Ok(Rational::zero());
        }
        acc /= c * int(*d as i64);
    }
    Ok(acc)
}
