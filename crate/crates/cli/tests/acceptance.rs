//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Runs without the libtest harness so the lines always reach the console.
//! Criteria listed in `KNOWN_UNATTAINABLE` are computed exactly like the rest
//! and print FAIL; the run only errors if the set of failures differs.

use std::fs;
use std::path::{Path, PathBuf};
use std::time::Instant;

use lgcy_cli::{analyze, analyze_file, parse_spec, to_json, verify_suite, Options, SingularitySpec};
use lgcy_core::higgs::{higgs_matrices, potentiality_check, verify_higgs_structure, StencilStatus};
use lgcy_core::hodge::{c_a, graded_subring, verify_frobenius_isomorphism, FrobeniusOptions};
use lgcy_core::milnor::{build_milnor_ring, moduli_numbers, steenbrink_levels};
use lgcy_core::monodromy::monodromy_spectrum;
use lgcy_core::oscillatory::{oscillatory_quadrature, realness_probe, QuadratureOptions};
use lgcy_core::poly::{central_charge, hessian_determinant};
use lgcy_core::scalar::{int, rat, to_f64};
use lgcy_core::{
    parse_polynomial, GaussRational, MilnorRing, Monomial, Polynomial, Rational, ResiduePairing, WeightSystem,
};
use num_complex::Complex64;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const KNOWN_UNATTAINABLE: &[u8] = &[6, 7];

type Criterion = (u8, &'static str, fn() -> Outcome);

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

fn suite_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("suite")
}

fn suite_specs() -> Vec<(String, SingularitySpec)> {
    let mut out = Vec::new();
    let mut paths: Vec<PathBuf> = fs::read_dir(suite_dir())
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|x| x == "spec"))
        .collect();
    paths.sort();
    for p in paths {
        let name = p.file_stem().unwrap().to_string_lossy().into_owned();
        out.push((name, parse_spec(&fs::read_to_string(&p).unwrap()).unwrap()));
    }
    out
}

fn names(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("z{i}")).collect()
}

fn fermat_poly(n: usize, d: u32) -> Polynomial {
    let v = names(n);
    let text: Vec<String> = v.iter().map(|x| format!("{x}^{d}")).collect();
    parse_polynomial(&text.join("+"), &v).unwrap()
}

fn fermat(n: usize, d: u32) -> MilnorRing {
    build_milnor_ring(&fermat_poly(n, d), &WeightSystem::homogeneous(n, d)).unwrap()
}

fn ring_of(spec: &SingularitySpec) -> MilnorRing {
    build_milnor_ring(&spec.f, &spec.weights).unwrap()
}

// ---- independent oracles ----

/// Γ via upward shift and the Stirling series.
fn gamma_oracle(x: f64) -> f64 {
    let shift = 12;
    let z = x + shift as f64;
    let series = 1.0 / (12.0 * z) - 1.0 / (360.0 * z.powi(3)) + 1.0 / (1260.0 * z.powi(5))
        - 1.0 / (1680.0 * z.powi(7))
        + 1.0 / (1188.0 * z.powi(9));
    let ln_gamma_z = (z - 0.5) * z.ln() - z + 0.5 * (2.0 * std::f64::consts::PI).ln() + series;
    let mut denom = 1.0;
    for i in 0..shift {
        denom *= x + i as f64;
    }
    ln_gamma_z.exp() / denom
}

/// Residue of `z^α` for `Σ z_i^d`: nonzero only at the socle `α = (d−2, …, d−2)`.
fn fermat_residue_oracle(alpha: &Monomial, d: u32) -> Rational {
    if alpha.exponents().iter().all(|&e| e == d - 2) {
        rat(1, (d as i64).pow(alpha.nvars() as u32))
    } else {
        Rational::zero()
    }
}

/// Trapezoid rule for `(1/2πi) ∮ g/f' dz` on `|z| = 1`.
fn contour_oracle(f: &Polynomial, g: &Polynomial, samples: usize) -> Complex64 {
    let df = f.derivative(0);
    let eval = |p: &Polynomial, z: Complex64| {
        p.terms()
            .map(|(m, c)| z.powu(m.exponents()[0]) * to_f64(c))
            .sum::<Complex64>()
    };
    let mut acc = Complex64::zero();
    for s in 0..samples {
        let z = Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * s as f64 / samples as f64);
        acc += eval(g, z) * z / eval(&df, z);
    }
    acc / samples as f64
}

fn factorial(n: u32) -> i64 {
    (1..=n as i64).product()
}

/// `k_ab` evaluated from its closed form with machine integers.
fn k_ab_oracle(a: u32, b: u32) -> Rational {
    let (a_, b_) = (a as i64, b as i64);
    let e = (a_ * (a_ - 1) + b_ * (b_ - 1)) / 2 + b_ * b_;
    let sign = if e % 2 == 0 { 1 } else { -1 };
    rat(sign, factorial(a) * factorial(b))
}

fn i_power(p: i64) -> GaussRational {
    let (re, im) = [(1, 0), (0, 1), (-1, 0), (0, -1)][p.rem_euclid(4) as usize];
    GaussRational::new(int(re), int(im))
}

fn random_poly(rng: &mut ChaCha8Rng, nvars: usize, max_deg: u32, terms: usize) -> Polynomial {
    let mut p = Polynomial::zero(nvars);
    for _ in 0..terms {
        let mut e = vec![0u32; nvars];
        let deg = rng.random_range(0..=max_deg);
        for _ in 0..deg {
            e[rng.random_range(0..nvars)] += 1;
        }
        p.add_term(Monomial::new(e), rat(rng.random_range(-9..=9), rng.random_range(1..=5)));
    }
    p
}

// ---- criteria ----

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let r = analyze_file(&suite_dir().join("fermat_quintic.spec"), &Options::default(), false).unwrap();
    let secs = start.elapsed().as_secs_f64();
    let dim_at = |deg: u64| r.milnor.graded_dims.iter().find(|g| g.degree == deg).map_or(0, |g| g.dim);
    let dims = [dim_at(0), dim_at(5), dim_at(10), dim_at(15)];
    let hodge = r.hodge.as_ref().unwrap();
    let moduli = r.moduli.as_ref().unwrap();
    let inv = r.monodromy.invariance.as_ref().unwrap();
    let pass = r.milnor.mu == 1024
        && dims == [1, 101, 101, 1]
        && hodge.hodge_numbers == vec![1, 101, 101, 1]
        && moduli.formula == "101"
        && moduli.marginal_dim == 101
        && inv.invariant_dim == 204
        && inv.sets_equal
        && secs < 60.0;
    outcome(
        pass,
        format!(
            "mu={} dims(0,5,10,15)={:?} hodge={:?} moduli {}={} invariant={} sets_equal={} time={:.1}s",
            r.milnor.mu, dims, hodge.hodge_numbers, moduli.formula, moduli.marginal_dim, inv.invariant_dim,
            inv.sets_equal, secs
        ),
    )
}

fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn criterion_2() -> Outcome {
    let mut pass = true;
    let mut parts = Vec::new();
    for (n, d) in [(1u32, 3u32), (3, 5), (4, 6)] {
        let m = moduli_numbers(n, d, &fermat(n as usize + 2, d)).unwrap();
        let oracle = binomial((n + 1 + d) as u64, d as u64) - (n as u64 + 2).pow(2);
        let ok = m.matches && m.formula.to_string() == oracle.to_string() && !m.k3_exception;
        pass &= ok;
        parts.push(format!("({n},{d}) {}={}", m.formula, m.marginal_dim));
    }
    let k3 = moduli_numbers(2, 4, &fermat(4, 4)).unwrap();
    let ok = k3.k3_exception && k3.marginal_dim == 19 && k3.formula.to_string() == "19" && k3.complex_deformation_dim == Some(20);
    pass &= ok;
    parts.push(format!("(2,4) K3 {} vs complex {:?}", k3.marginal_dim, k3.complex_deformation_dim));
    outcome(pass, parts.join(", "))
}

fn criterion_3() -> Outcome {
    let mut pass = true;
    let mut parts = Vec::new();
    for (n, d) in [(3usize, 3u32), (4, 4), (5, 5)] {
        let r = ResiduePairing::new(fermat(n, d)).unwrap();
        let basis = r.milnor().basis().monomials().to_vec();
        let mut mismatches = 0usize;
        for a in &basis {
            for b in &basis {
                if r.monomial_pairing(a, b).unwrap() != fermat_residue_oracle(&a.mul(b), d) {
                    mismatches += 1;
                }
            }
        }
        pass &= mismatches == 0;
        parts.push(format!("N={n}: {} pairs, {mismatches} mismatches", basis.len() * basis.len()));
    }

    let mut rng = ChaCha8Rng::seed_from_u64(0x5EED);
    let mut worst = 0.0f64;
    for _ in 0..20 {
        let m = rng.random_range(2..=7u32);
        let c = rng.random_range(1..=6i64);
        let f = Polynomial::term(rat(c, 1), Monomial::new(vec![m]));
        let g = random_poly(&mut rng, 1, m + 1, 4);
        let r = ResiduePairing::new(build_milnor_ring(&f, &WeightSystem::homogeneous(1, m)).unwrap()).unwrap();
        let exact = to_f64(&r.grothendieck_residue(&g).unwrap());
        let numeric = contour_oracle(&f, &g, 4096);
        worst = worst.max((numeric - Complex64::new(exact, 0.0)).norm());
    }
    pass &= worst < 1e-9;
    parts.push(format!("contour max error {worst:.2e}"));

    let mut hess_ok = 0;
    let specs = suite_specs();
    for (_, spec) in &specs {
        let ring = ring_of(spec);
        let mu = int(ring.mu() as i64);
        let r = ResiduePairing::new(ring).unwrap();
        if r.grothendieck_residue(&hessian_determinant(&spec.f)).unwrap() == mu {
            hess_ok += 1;
        }
    }
    pass &= hess_ok == specs.len();
    parts.push(format!("Res(hess)=mu on {hess_ok}/{} suite specs", specs.len()));
    outcome(pass, parts.join("; "))
}

fn criterion_4() -> Outcome {
    let mut pass = true;
    let mut parts = Vec::new();
    for (n, d) in [(3usize, 3u32), (4, 4)] {
        let r = ResiduePairing::new(fermat(n, d)).unwrap();
        let basis = r.milnor().basis().monomials().to_vec();
        let mut violations = 0;
        for a in &basis {
            for b in &basis {
                let v = r.monomial_pairing(a, b).unwrap();
                if !v.is_zero() && a.degree() + b.degree() != r.socle_degree() {
                    violations += 1;
                }
            }
        }
        pass &= violations == 0;
        parts.push(format!("orthogonality N={n}: {violations} violations"));
    }
    for (n, d) in [(3usize, 3u32), (4, 4), (5, 5)] {
        let r = ResiduePairing::new(fermat(n, d)).unwrap();
        let top = r.socle_degree();
        let mut singular = 0;
        for deg in 0..=top {
            let g = r.gram_block(deg, top - deg).unwrap();
            if g.rows.len() != g.cols.len() || g.matrix.rank() != g.rows.len() {
                singular += 1;
            }
        }
        pass &= singular == 0;
        parts.push(format!("N={n}: {} blocks, {singular} singular", top + 1));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5EED + 4);
    let rings = [ResiduePairing::new(fermat(3, 3)).unwrap(), ResiduePairing::new(fermat(4, 4)).unwrap()];
    let (mut sym_bad, mut ann_bad) = (0, 0);
    for case in 0..200 {
        let r = &rings[case % 2];
        let n = r.milnor().nvars();
        let a = random_poly(&mut rng, n, 5, 4);
        let b = random_poly(&mut rng, n, 5, 4);
        if r.residue_pairing(&a, &b).unwrap() != r.residue_pairing(&b, &a).unwrap() {
            sym_bad += 1;
        }
        let h = random_poly(&mut rng, n, 3, 3);
        let i = rng.random_range(0..n);
        let in_ideal = &h * &r.milnor().f().derivative(i);
        if !r.residue_pairing(&a, &in_ideal).unwrap().is_zero() {
            ann_bad += 1;
        }
    }
    pass &= sym_bad == 0 && ann_bad == 0;
    parts.push(format!("symmetry 200 cases {sym_bad} bad, annihilation 200 cases {ann_bad} bad"));
    outcome(pass, parts.join("; "))
}

fn criterion_5() -> Outcome {
    let mut pass = true;
    let mut parts = Vec::new();
    for (n, d) in [(3usize, 3u32), (4, 4), (5, 5)] {
        let sub = graded_subring(&fermat(n, d)).unwrap();
        let rep = verify_frobenius_isomorphism(&sub, &FrobeniusOptions::default()).unwrap();
        let expect_exhaustive = n < 5;
        let mut scalars_ok = true;
        for b in &rep.blocks {
            let predicted = i_power(b.a as i64 - b.b as i64).scale(&k_ab_oracle(b.a as u32, b.b as u32));
            scalars_ok &= b.constant && b.scalar.as_ref() == Some(&predicted);
        }
        let ok = rep.pass
            && scalars_ok
            && rep.exhaustive == expect_exhaustive
            && (expect_exhaustive || (rep.triples_checked == 500 && rep.seed == 0x5EED));
        pass &= ok;
        parts.push(format!(
            "N={n}: {} triples ({}), blocks {}",
            rep.triples_checked,
            if rep.exhaustive { "exhaustive" } else { "seeded" },
            if scalars_ok { "= i^(a-b) k_ab" } else { "MISMATCH" }
        ));
    }
    let mut chain_ok = true;
    for n in 1..=8u32 {
        for a in 0..n {
            let lhs = -int(a as i64 + 1) * c_a(n, a + 1) / c_a(n, a);
            chain_ok &= lhs == int(if a % 2 == 0 { 1 } else { -1 });
        }
    }
    pass &= chain_ok;
    parts.push(format!("sign chain n<=8 {}", if chain_ok { "holds" } else { "broken" }));
    outcome(pass, parts.join("; "))
}

fn criterion_6() -> Outcome {
    let mut pass = true;
    let mut parts = Vec::new();
    let families: [(usize, u32, [&str; 2]); 3] = [
        (3, 3, ["z0*z1*z2", "z0^2*z1"]),
        (4, 4, ["z0*z1*z2*z3", "z0^2*z1^2"]),
        (5, 5, ["z0*z1*z2*z3*z4", "z0^3*z1*z2"]),
    ];
    for (n, d, dirs) in families {
        let f = fermat_poly(n, d);
        let v = names(n);
        let one = vec![parse_polynomial(dirs[0], &v).unwrap()];
        let mut structure_ok = true;
        for u in [rat(0, 1), rat(1, 10), rat(-1, 7)] {
            let h = higgs_matrices(&f, &one, &[u]).unwrap();
            let r = verify_higgs_structure(&h).unwrap();
            structure_ok &= r.pass && r.nilpotency == vec![n - 1];
        }
        pass &= structure_ok;

        let two: Vec<Polynomial> = dirs.iter().map(|s| parse_polynomial(s, &v).unwrap()).collect();
        let samples = vec![vec![rat(0, 1), rat(0, 1)], vec![rat(1, 10), rat(1, 7)], vec![rat(-1, 9), rat(1, 11)]];
        let pot = potentiality_check(&f, &two, &samples, &rat(1, 100)).unwrap();
        let status: Vec<&str> = pot
            .entries
            .iter()
            .map(|e| match e.status {
                StencilStatus::Pass => "pass",
                StencilStatus::Fail => "fail",
                StencilStatus::BasisJump => "basis-jump",
                StencilStatus::Vacuous => "vacuous",
                StencilStatus::Degenerate(_) => "degenerate",
            })
            .collect();
        pass &= pot.pass();
        parts.push(format!(
            "N={n}: structure {} at u=0,1/10,-1/7; stencils {:?}",
            if structure_ok { "exact" } else { "BROKEN" },
            status
        ));
    }
    outcome(pass, parts.join("; "))
}

fn criterion_7() -> Outcome {
    let mut congruence_bad = Vec::new();
    let mut duality_bad = Vec::new();
    let specs = suite_specs();
    for (name, spec) in &specs {
        let ring = ring_of(spec);
        let s = monodromy_spectrum(&ring);
        if let Some(d) = ring.degree() {
            let mismatch = s
                .entries
                .iter()
                .filter(|e| (e.monomial.degree() % d as u64 == 0) != e.invariant)
                .count();
            if mismatch > 0 {
                congruence_bad.push(format!("{name}({mismatch})"));
            }
        }
        if !s.symmetric_under_reflection(&central_charge(&spec.weights)) {
            duality_bad.push(name.clone());
        }
    }
    outcome(
        congruence_bad.is_empty() && duality_bad.is_empty(),
        format!(
            "{} suite specs; deg=0 mod d <=> invariant fails on {:?}; x -> c_hat - x symmetry fails on {:?}",
            specs.len(),
            congruence_bad,
            duality_bad
        ),
    )
}

fn criterion_8() -> Outcome {
    let opts = QuadratureOptions::default();
    let mut worst = 0.0f64;
    for m in 2..=7u32 {
        for k in 1..m {
            for j in 0..m {
                let (mf, kf, jf) = (m as f64, k as f64, j as f64);
                let tau = 2.0 * std::f64::consts::PI;
                let closed = (Complex64::from_polar(1.0, tau * (jf + 1.0) * kf / mf)
                    - Complex64::from_polar(1.0, tau * jf * kf / mf))
                    * gamma_oracle(kf / mf)
                    / mf;
                let q = oscillatory_quadrature(m, k, j, &opts).unwrap().value;
                worst = worst.max((q - closed).norm() / closed.norm());
            }
        }
    }
    let gauss = oscillatory_quadrature(2, 1, 0, &opts).unwrap().value;
    let sqrt_pi = std::f64::consts::PI.sqrt();
    let gauss_err = (gauss - Complex64::new(-sqrt_pi, 0.0)).norm();
    let mut realness_ok = true;
    let mut worst_imag = 0.0f64;
    let mut worst_spread = 0.0f64;
    let mut worst_pred = 0.0f64;
    for m in 3..=7u32 {
        let r = realness_probe(m, &opts).unwrap();
        for row in &r.rows {
            let predicted = gamma_oracle(row.k as f64 / m as f64) / gamma_oracle(1.0 - row.k as f64 / m as f64);
            for rho in &row.ratios {
                let imag = rho.im.abs() / rho.norm();
                let spread = (rho - row.ratios[0]).norm() / row.ratios[0].norm();
                let pred = (rho.re - predicted).abs() / predicted;
                worst_imag = worst_imag.max(imag);
                worst_spread = worst_spread.max(spread);
                worst_pred = worst_pred.max(pred);
                realness_ok &= imag < 1e-8 && rho.re > 0.0 && spread < 1e-8 && pred < 1e-6;
            }
        }
    }
    outcome(
        worst < 1e-6 && gauss_err < 1e-6 && realness_ok,
        format!(
            "max rel err {worst:.2e}; -sqrt(pi) err {gauss_err:.2e}; realness imag {worst_imag:.1e} spread {worst_spread:.1e} vs gamma ratio {worst_pred:.1e}"
        ),
    )
}

fn criterion_9() -> Outcome {
    let two = build_milnor_ring(
        &parse_polynomial("x^3+y^3", &["x", "y"]).unwrap(),
        &WeightSystem::homogeneous(2, 3),
    )
    .unwrap();
    let s2 = steenbrink_levels(&two).unwrap();
    let quintic = steenbrink_levels(&fermat(5, 5)).unwrap();
    let mut congruence_ok = true;
    let specs = suite_specs();
    let mut checked = 0;
    for (_, spec) in &specs {
        let ring = ring_of(spec);
        let Some(d) = ring.degree() else { continue };
        checked += 1;
        let n = ring.nvars() as u64;
        for (m, h) in steenbrink_levels(&ring).unwrap().levels {
            congruence_ok &= h.is_integer() == (m.degree() + n).is_multiple_of(d as u64);
        }
    }
    let pass = (s2.w_lower_dim, s2.w_graded_dim) == (2, 2) && quintic.w_graded_dim == 204 && congruence_ok;
    outcome(
        pass,
        format!(
            "x^3+y^3 W dims ({}, {}); quintic integral levels {}; congruence on {checked} homogeneous suite specs {}",
            s2.w_lower_dim,
            s2.w_graded_dim,
            quintic.w_graded_dim,
            if congruence_ok { "holds" } else { "fails" }
        ),
    )
}

fn criterion_10() -> Outcome {
    let opts = Options::default();
    let mut differing = Vec::new();
    let specs = suite_specs();
    for (name, spec) in &specs {
        let a = to_json(&analyze(spec, &opts, false).unwrap());
        let b = to_json(&analyze(spec, &opts, false).unwrap());
        if a != b {
            differing.push(name.clone());
        }
    }
    let summary = verify_suite(&suite_dir(), &opts, false).unwrap();
    let drift: Vec<String> = summary
        .entries
        .iter()
        .filter(|e| e.status != "match")
        .map(|e| format!("{}:{}", e.spec, e.status))
        .collect();
    outcome(
        differing.is_empty() && summary.pass,
        format!(
            "{} specs byte-identical across runs ({} differ); golden suite drift {:?}",
            specs.len() - differing.len(),
            differing.len(),
            drift
        ),
    )
}

fn main() {
    // Sanity: the oracle Gamma agrees with known values before it is trusted.
    assert!((gamma_oracle(0.5) - std::f64::consts::PI.sqrt()).abs() < 1e-13);
    assert!((gamma_oracle(1.0) - 1.0).abs() < 1e-13 && (gamma_oracle(4.0) - 6.0).abs() < 1e-12);

    let criteria: [Criterion; 10] = [
        (1, "Fermat quintic end-to-end", criterion_1),
        (2, "moduli grid", criterion_2),
        (3, "residue oracles", criterion_3),
        (4, "pairing structure", criterion_4),
        (5, "Frobenius bridge", criterion_5),
        (6, "Higgs structure and potentiality", criterion_6),
        (7, "monodromy spectrum", criterion_7),
        (8, "oscillatory integrals", criterion_8),
        (9, "Steenbrink levels", criterion_9),
        (10, "determinism and goldens", criterion_10),
    ];
    let mut failed = Vec::new();
    for (id, title, run) in criteria {
        let start = Instant::now();
        let o = run();
        let tag = match (o.pass, KNOWN_UNATTAINABLE.contains(&id)) {
            (true, _) => "PASS",
            (false, true) => "FAIL (known)",
            (false, false) => "FAIL",
        };
        println!(
            "criterion {id:>2} {tag}: {title} [{:.1}s] {}",
            start.elapsed().as_secs_f64(),
            o.detail
        );
        if !o.pass {
            failed.push(id);
        }
    }
    if failed != KNOWN_UNATTAINABLE {
        eprintln!("unexpected failure set {failed:?}, known unattainable {KNOWN_UNATTAINABLE:?}");
        std::process::exit(1);
    }
}
