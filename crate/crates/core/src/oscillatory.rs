//! Oscillatory integrals `∫ e^{−x^m} x^{k−1} dx` over the steepest-descent
//! contours of `f = x^m`, and the Gamma-factor reduction of oscillatory
//! integrals of holomorphic forms.
//!
//! The contour for thimble label `j` comes in from infinity along the ray
//! `arg x = 2πj/m` and leaves along `arg x = 2π(j+1)/m`; on both rays
//! `x^m` is real and positive, so
//!
//! ```text
//! I_j(k) = (e^{2πi(j+1)k/m} − e^{2πijk/m}) Γ(k/m) / m.
//! ```

use std::f64::consts::PI;

use num_complex::Complex64;
use statrs::function::gamma::gamma;

use crate::error::{Error, Result};

pub const DEFAULT_RADIUS: f64 = 12.0;
pub const DEFAULT_NODES: usize = 2000;
/// Relative agreement required between quadrature and closed form.
pub const QUADRATURE_TOL: f64 = 1e-6;
/// Realness and j-independence tolerance for the conjugate-pair ratios.
pub const REALNESS_TOL: f64 = 1e-8;
const PANEL_ORDER: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GammaFactor {
    pub nvars: u32,
    pub m: u32,
    pub k: u32,
    /// `Γ((N+k)/m) / 2^{(N+k)/m}`.
    pub value: f64,
}

pub fn gamma_factor(nvars: u32, m: u32, k: u32) -> Result<GammaFactor> {
    if m < 2 || nvars == 0 {
        return Err(Error::InvalidInput("gamma factor needs m >= 2 and N >= 1".into()));
    }
    let s = (nvars + k) as f64 / m as f64;
    Ok(GammaFactor {
        nvars,
        m,
        k,
        value: gamma(s) / 2f64.powf(s),
    })
}

fn check_mkj(m: u32, k: u32, j: u32) -> Result<()> {
    if m < 2 || k == 0 || k >= m || j >= m {
        return Err(Error::InvalidInput(format!(
            "need m >= 2, 1 <= k <= m-1, 0 <= j <= m-1 (got m={m}, k={k}, j={j})"
        )));
    }
    Ok(())
}

fn unit(theta: f64) -> Complex64 {
    Complex64::from_polar(1.0, theta)
}

pub fn oscillatory_closed_form(m: u32, k: u32, j: u32) -> Result<Complex64> {
    check_mkj(m, k, j)?;
    let (mf, kf, jf) = (m as f64, k as f64, j as f64);
    let phase = unit(2.0 * PI * (jf + 1.0) * kf / mf) - unit(2.0 * PI * jf * kf / mf);
    Ok(phase * gamma(kf / mf) / mf)
}

/// Gauss–Legendre nodes and weights on `[-1, 1]`.
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    let mut x = vec![0.0; n];
    let mut w = vec![0.0; n];
    for i in 0..n.div_ceil(2) {
        let mut z = (PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (mut p0, mut p1) = (1.0, z);
            for l in 2..=n {
                let p2 = ((2 * l - 1) as f64 * z * p1 - (l - 1) as f64 * p0) / l as f64;
                p0 = p1;
                p1 = p2;
            }
            let p = if n == 0 { 1.0 } else { p1 };
            let pm1 = if n == 1 { 1.0 } else { p0 };
            dp = n as f64 * (z * p - pm1) / (z * z - 1.0);
            let dz = p / dp;
            z -= dz;
            if dz.abs() < 1e-16 {
                break;
            }
        }
        x[i] = -z;
        x[n - 1 - i] = z;
        let wi = 2.0 / ((1.0 - z * z) * dp * dp);
        w[i] = wi;
        w[n - 1 - i] = wi;
    }
    (x, w)
}

/// Composite Gauss–Legendre over `[a, b]` with roughly `nodes` evaluations.
fn composite<F: Fn(f64) -> Complex64>(g: F, a: f64, b: f64, nodes: usize) -> Complex64 {
    let (x, w) = gauss_legendre(PANEL_ORDER);
    let panels = (nodes / PANEL_ORDER).max(1);
    let h = (b - a) / panels as f64;
    let mut acc = Complex64::new(0.0, 0.0);
    for p in 0..panels {
        let lo = a + p as f64 * h;
        for (xi, wi) in x.iter().zip(&w) {
            acc += g(lo + 0.5 * h * (xi + 1.0)) * (0.5 * h * wi);
        }
    }
    acc
}

#[derive(Clone, Copy, Debug)]
pub struct QuadratureOptions {
    pub radius: f64,
    /// Nodes per ray.
    pub nodes: usize,
}

impl Default for QuadratureOptions {
    fn default() -> Self {
        Self {
            radius: DEFAULT_RADIUS,
            nodes: DEFAULT_NODES,
        }
    }
}

#[derive(Clone, Copy, Debug)]
pub struct QuadratureValue {
    pub value: Complex64,
    /// `2 R^k e^{−R^m}`, bounding the two discarded ray tails up to a constant.
    pub truncation_bound: f64,
}

/// `∫ e^{−x^m} x^{k−1} dx` on the two-ray contour, truncated at radius `R`.
pub fn oscillatory_quadrature(m: u32, k: u32, j: u32, opts: &QuadratureOptions) -> Result<QuadratureValue> {
    check_mkj(m, k, j)?;
    let ray = |theta: f64| -> Complex64 {
        let dir = unit(theta);
        composite(
            |t| {
                let x = dir * t;
                (-x.powu(m)).exp() * x.powu(k - 1) * dir
            },
            0.0,
            opts.radius,
            opts.nodes,
        )
    };
    let theta_in = 2.0 * PI * j as f64 / m as f64;
    let theta_out = 2.0 * PI * (j + 1) as f64 / m as f64;
    // in along theta_in (R -> 0), out along theta_out (0 -> R)
    let value = ray(theta_out) - ray(theta_in);
    let r = opts.radius;
    Ok(QuadratureValue {
        value,
        truncation_bound: 2.0 * r.powi(k as i32) * (-r.powi(m as i32)).exp(),
    })
}

/// `∫ e^{−x^m} x^{k−1} dx` along the straight segment from `e^{2πij/m}` to `e^{2πi(j+1)/m}`.
pub fn straight_segment_integral(m: u32, k: u32, j: u32, nodes: usize) -> Result<Complex64> {
    check_mkj(m, k, j)?;
    let a = unit(2.0 * PI * j as f64 / m as f64);
    let b = unit(2.0 * PI * (j + 1) as f64 / m as f64);
    let dz = b - a;
    Ok(composite(
        |s| {
            let x = a + dz * s;
            (-x.powu(m)).exp() * x.powu(k - 1) * dz
        },
        0.0,
        1.0,
        nodes,
    ))
}

#[derive(Clone, Copy, Debug)]
pub struct ThimbleIntegral1D {
    pub m: u32,
    pub k: u32,
    pub j: u32,
    pub closed_form: Complex64,
    pub quadrature: Complex64,
    pub relative_error: f64,
    pub truncation_bound: f64,
}

pub fn thimble_integral(m: u32, k: u32, j: u32, opts: &QuadratureOptions) -> Result<ThimbleIntegral1D> {
    let closed_form = oscillatory_closed_form(m, k, j)?;
    let q = oscillatory_quadrature(m, k, j, opts)?;
    Ok(ThimbleIntegral1D {
        m,
        k,
        j,
        closed_form,
        quadrature: q.value,
        relative_error: (q.value - closed_form).norm() / closed_form.norm(),
        truncation_bound: q.truncation_bound,
    })
}

/// Relative residual of `I_j(k) = phase · 2^{k/m} · GammaFactor(1, m, k−1) / m`,
/// the one-variable reduction of the Gamma-factor formula.
pub fn gamma_factor_residual(m: u32, k: u32, j: u32) -> Result<f64> {
    let closed = oscillatory_closed_form(m, k, j)?;
    let g = gamma_factor(1, m, k - 1)?;
    let (mf, kf, jf) = (m as f64, k as f64, j as f64);
    let phase = unit(2.0 * PI * (jf + 1.0) * kf / mf) - unit(2.0 * PI * jf * kf / mf);
    let rebuilt = phase * g.value * 2f64.powf(kf / mf) / mf;
    Ok((closed - rebuilt).norm() / closed.norm())
}

#[derive(Clone, Debug)]
pub struct RealnessRow {
    pub k: u32,
    /// `conj(I_j(k)) / I_j(m−k)` for `j = 0..m−1`, from quadrature.
    pub ratios: Vec<Complex64>,
    /// `Γ(k/m) / Γ(1 − k/m)`.
    pub predicted: f64,
    /// `max_j |Im ρ_j| / |ρ_j|`.
    pub max_imag_rel: f64,
    /// `max_j |ρ_j − ρ_0| / |ρ_0|`.
    pub j_spread: f64,
    /// `max_j |ρ_j − predicted| / predicted`.
    pub prediction_error: f64,
    pub real: bool,
    pub positive: bool,
    pub j_independent: bool,
    pub matches_prediction: bool,
}

#[derive(Clone, Debug)]
pub struct RealnessReport {
    pub m: u32,
    pub rows: Vec<RealnessRow>,
    pub pass: bool,
}

pub fn realness_probe(m: u32, opts: &QuadratureOptions) -> Result<RealnessReport> {
    if m < 3 {
        return Err(Error::InvalidInput("realness probe needs m >= 3".into()));
    }
    let mut table = vec![vec![Complex64::new(0.0, 0.0); m as usize]; m as usize];
    for k in 1..m {
        for j in 0..m {
            table[k as usize][j as usize] = oscillatory_quadrature(m, k, j, opts)?.value;
        }
    }
    let mut rows = Vec::new();
    for k in 1..m {
        let ratios: Vec<Complex64> = (0..m as usize)
            .map(|j| table[k as usize][j].conj() / table[(m - k) as usize][j])
            .collect();
        let predicted = gamma(k as f64 / m as f64) / gamma(1.0 - k as f64 / m as f64);
        let max_imag_rel = ratios.iter().map(|r| r.im.abs() / r.norm()).fold(0.0, f64::max);
        let j_spread = ratios.iter().map(|r| (r - ratios[0]).norm() / ratios[0].norm()).fold(0.0, f64::max);
        let prediction_error = ratios.iter().map(|r| (r.re - predicted).abs() / predicted).fold(0.0, f64::max);
        rows.push(RealnessRow {
            k,
            real: max_imag_rel < REALNESS_TOL,
            positive: ratios.iter().all(|r| r.re > 0.0),
            j_independent: j_spread < REALNESS_TOL,
            matches_prediction: prediction_error < QUADRATURE_TOL,
            ratios,
            predicted,
            max_imag_rel,
            j_spread,
            prediction_error,
        });
    }
    let pass = rows
        .iter()
        .all(|r| r.real && r.positive && r.j_independent && r.matches_prediction);
    Ok(RealnessReport { m, rows, pass })
}
