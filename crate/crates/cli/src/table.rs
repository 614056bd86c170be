use std::fmt::Write;

use crate::osc::OscillatoryReport;
use crate::report::{AnalysisReport, Check};
use crate::suite::SuiteSummary;

fn mark(pass: bool) -> &'static str {
    if pass {
        "PASS"
    } else {
        "FAIL"
    }
}

fn checks(out: &mut String, checks: &[Check]) {
    let width = checks.iter().map(|c| c.name.len()).max().unwrap_or(0);
    for c in checks {
        let _ = writeln!(
            out,
            "  {}  {:width$}  expected {}  got {}",
            mark(c.pass),
            c.name,
            c.expected,
            c.actual
        );
    }
}

pub(crate) fn analysis(r: &AnalysisReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "f = {}  ({} variables, degree {})", r.spec.f, r.spec.variables.len(), r.spec.degree);
    let dims: Vec<String> = r.milnor.graded_dims.iter().map(|g| format!("{}:{}", g.degree, g.dim)).collect();
    let _ = writeln!(out, "mu = {}  graded dims {}", r.milnor.mu, dims.join(" "));
    let _ = writeln!(out, "hessian residue = {}  ({})", r.residue.hessian_residue, r.residue.normalization);
    if let Some(m) = &r.moduli {
        let _ = writeln!(
            out,
            "moduli (n={}, d={}): formula {} marginal {}{}",
            m.n,
            m.d,
            m.formula,
            m.marginal_dim,
            m.annotation.as_ref().map(|a| format!("  [K3: {a}]")).unwrap_or_default()
        );
    }
    if let Some(h) = &r.hodge {
        let _ = writeln!(out, "hodge numbers {:?}", h.hodge_numbers);
        for b in &h.frobenius.blocks {
            let _ = writeln!(
                out,
                "  block ({},{}): scalar {}  r' power of i {}",
                b.a,
                b.b,
                b.scalar.as_deref().unwrap_or("-"),
                b.r_prime_power_of_i.map(|p| p.to_string()).unwrap_or("-".into())
            );
        }
    }
    let _ = writeln!(out, "monodromy invariant dim = {}", r.monodromy.invariant_dim);
    if let Some(s) = &r.steenbrink {
        let _ = writeln!(out, "steenbrink W dims ({}, {})", s.w_lower_dim, s.w_graded_dim);
    }
    let _ = writeln!(out, "checks:");
    checks(&mut out, &r.checks);
    let _ = writeln!(out, "overall {}", mark(r.pass));
    out
}

pub(crate) fn oscillatory(r: &OscillatoryReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "m={} k={} j={}  R={} nodes={}", r.m, r.k, r.j, r.radius, r.nodes);
    let _ = writeln!(out, "closed form  {:+.15e} {:+.15e}i", r.closed_form.re, r.closed_form.im);
    let _ = writeln!(out, "quadrature   {:+.15e} {:+.15e}i", r.quadrature.re, r.quadrature.im);
    let _ = writeln!(out, "relative error {:.3e}", r.relative_error);
    if let Some(s) = &r.straight_segment {
        let _ = writeln!(out, "straight segment {:+.15e} {:+.15e}i", s.re, s.im);
    }
    if let Some(rows) = &r.realness {
        for row in rows {
            let _ = writeln!(
                out,
                "  k={} rho={:.12} predicted={:.12}",
                row.k, row.ratios[0].re, row.predicted
            );
        }
    }
    checks(&mut out, &r.checks);
    let _ = writeln!(out, "overall {}", mark(r.pass));
    out
}

pub(crate) fn suite(s: &SuiteSummary) -> String {
    let mut out = String::new();
    for e in &s.entries {
        let _ = write!(out, "{:16} {}", e.status, e.spec);
        if let Some(l) = e.first_diff_line {
            let _ = write!(out, "  line {l}");
        }
        if let Some(d) = &e.detail {
            let _ = write!(out, "  {d}");
        }
        out.push('\n');
    }
    let _ = writeln!(out, "overall {}", mark(s.pass));
    out
}
