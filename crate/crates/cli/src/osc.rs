use lgcy_core::oscillatory::{
    gamma_factor_residual, oscillatory_closed_form, realness_probe, straight_segment_integral, thimble_integral,
    QuadratureOptions, REALNESS_TOL,
};
use num_complex::Complex64;
use serde::Serialize;

use crate::report::Check;
use crate::{CliError, Options};

#[derive(Clone, Copy, Debug, Serialize)]
pub struct ComplexEcho {
    pub re: f64,
    pub im: f64,
}

impl From<Complex64> for ComplexEcho {
    fn from(z: Complex64) -> Self {
        Self { re: z.re, im: z.im }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct RealnessRowEcho {
    pub k: u32,
    pub ratios: Vec<ComplexEcho>,
    pub predicted: f64,
    pub max_imag_rel: f64,
    pub j_spread: f64,
    pub prediction_error: f64,
    pub real: bool,
    pub positive: bool,
    pub j_independent: bool,
    pub matches_prediction: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct OscillatoryReport {
    pub schema: &'static str,
    pub m: u32,
    pub k: u32,
    pub j: u32,
    pub radius: f64,
    pub nodes: usize,
    pub tol: f64,
    pub closed_form: ComplexEcho,
    pub quadrature: ComplexEcho,
    pub relative_error: f64,
    pub truncation_bound: f64,
    pub j_ratio_error: f64,
    pub gamma_factor_residual: f64,
    pub straight_segment: Option<ComplexEcho>,
    pub realness: Option<Vec<RealnessRowEcho>>,
    pub checks: Vec<Check>,
    pub pass: bool,
}

pub fn oscillatory_report(m: u32, k: u32, j: u32, opts: &Options) -> Result<OscillatoryReport, CliError> {
    let qopts = QuadratureOptions {
        radius: opts.radius,
        nodes: opts.nodes,
    };
    let t = thimble_integral(m, k, j, &qopts)?;
    let mut checks = vec![Check::new(
        "quadrature matches closed form",
        format!("< {:e}", opts.tol),
        format!("{:e}", t.relative_error),
        t.relative_error < opts.tol,
    )];

    let base = oscillatory_closed_form(m, k, 0)?;
    let phase = Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * (j * k) as f64 / m as f64);
    let j_ratio_error = (t.closed_form / base - phase).norm();
    checks.push(Check::new(
        "j-equivariance of the closed form",
        format!("< {REALNESS_TOL:e}"),
        format!("{j_ratio_error:e}"),
        j_ratio_error < REALNESS_TOL,
    ));

    let residual = gamma_factor_residual(m, k, j)?;
    checks.push(Check::new(
        "gamma factor reduction",
        format!("< {REALNESS_TOL:e}"),
        format!("{residual:e}"),
        residual < REALNESS_TOL,
    ));

    let straight_segment = if m == 2 {
        Some(straight_segment_integral(m, k, j, opts.nodes)?.into())
    } else {
        None
    };

    let realness = if m >= 3 {
        let r = realness_probe(m, &qopts)?;
        checks.push(Check::new(
            "realness probe",
            "real, positive, j-independent, equal to gamma ratio",
            format!("{}/{} rows", r.rows.iter().filter(|x| row_ok(x)).count(), r.rows.len()),
            r.pass,
        ));
        Some(
            r.rows
                .into_iter()
                .map(|x| RealnessRowEcho {
                    k: x.k,
                    ratios: x.ratios.into_iter().map(ComplexEcho::from).collect(),
                    predicted: x.predicted,
                    max_imag_rel: x.max_imag_rel,
                    j_spread: x.j_spread,
                    prediction_error: x.prediction_error,
                    real: x.real,
                    positive: x.positive,
                    j_independent: x.j_independent,
                    matches_prediction: x.matches_prediction,
                })
                .collect(),
        )
    } else {
        None
    };

    Ok(OscillatoryReport {
        schema: crate::report::SCHEMA,
        m,
        k,
        j,
        radius: opts.radius,
        nodes: opts.nodes,
        tol: opts.tol,
        closed_form: t.closed_form.into(),
        quadrature: t.quadrature.into(),
        relative_error: t.relative_error,
        truncation_bound: t.truncation_bound,
        j_ratio_error,
        gamma_factor_residual: residual,
        straight_segment,
        realness,
        pass: checks.iter().all(|c| c.pass),
        checks,
    })
}

fn row_ok(r: &lgcy_core::oscillatory::RealnessRow) -> bool {
    r.real && r.positive && r.j_independent && r.matches_prediction
}
