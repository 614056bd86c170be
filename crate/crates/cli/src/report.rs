//! Full analysis pipeline and its serialized report.

use std::collections::BTreeMap;

use lgcy_core::higgs::{
    higgs_matrices_with, potentiality_check_with, transported_higgs_check, verify_higgs_structure, StencilStatus,
    DEFAULT_STEP,
};
use lgcy_core::hodge::{
    c_a, graded_subring, hodge_numbers, k_ab, k_n, verify_frobenius_isomorphism, FrobeniusOptions,
};
use lgcy_core::milnor::{
    build_milnor_ring_with, moduli_numbers, steenbrink_levels, DeformationKind, MilnorOptions,
};
use lgcy_core::monodromy::{invariance_realness_report, monodromy_spectrum, spectrum_checks};
use lgcy_core::oscillatory::gamma_factor;
use lgcy_core::poly::central_charge;
use lgcy_core::residue::NORMALIZATION;
use lgcy_core::scalar::{fmt_rational, rat};
use lgcy_core::{Error, GradedSubring, MilnorRing, Polynomial, Rational, ResiduePairing};
use serde::Serialize;

use crate::spec::SingularitySpec;
use crate::{CliError, Options};

pub const SCHEMA: &str = "lgcy-report/1";

fn q(r: &Rational) -> String {
    fmt_rational(r)
}

fn qs(v: &[Rational]) -> Vec<String> {
    v.iter().map(q).collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub expected: String,
    pub actual: String,
    pub pass: bool,
}

impl Check {
    pub(crate) fn new(name: impl Into<String>, expected: impl ToString, actual: impl ToString, pass: bool) -> Self {
        Self {
            name: name.into(),
            expected: expected.to_string(),
            actual: actual.to_string(),
            pass,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct DeformationEcho {
    pub polynomial: String,
    pub class: &'static str,
    pub parameter_weight: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct SpecEcho {
    pub variables: Vec<String>,
    pub degree: u32,
    pub f: String,
    pub weights: Vec<String>,
    pub deformations: Vec<DeformationEcho>,
    pub points: Vec<Vec<String>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Settings {
    pub order: String,
    pub budget: usize,
    pub seed: u64,
    pub triples: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct GradedDim {
    pub degree: u64,
    pub dim: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct MilnorSection {
    pub mu: usize,
    pub isolated: bool,
    pub groebner_basis_size: usize,
    pub graded_dims: Vec<GradedDim>,
    pub mixed_quadratic_monomial: bool,
    pub central_charge: String,
    pub socle_weighted_degree: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct GramBlockSummary {
    pub deg_a: u64,
    pub deg_b: u64,
    pub rows: usize,
    pub cols: usize,
    pub rank: usize,
    pub nonsingular: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct ResidueSection {
    pub normalization: &'static str,
    pub socle_monomial: String,
    pub hessian_class: String,
    pub hessian_residue: String,
    pub complementary_blocks: Option<Vec<GramBlockSummary>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ModuliSection {
    pub n: u32,
    pub d: u32,
    pub formula: String,
    pub marginal_dim: usize,
    pub matches: bool,
    pub k3_exception: bool,
    pub annotation: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct LevelEcho {
    pub a: usize,
    pub bidegree: [usize; 2],
    pub degree: u64,
    pub dim: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct ConstantsEcho {
    pub a: usize,
    pub b: usize,
    pub c_a: String,
    pub k_ab: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct BlockEcho {
    pub a: usize,
    pub b: usize,
    pub scalar: Option<String>,
    pub constant: bool,
    pub predicted: String,
    pub matches_prediction: bool,
    pub r_prime_scalar: Option<String>,
    pub r_prime_power_of_i: Option<u8>,
}

#[derive(Clone, Debug, Serialize)]
pub struct FrobeniusSection {
    pub exhaustive: bool,
    pub triples_checked: usize,
    pub seed: u64,
    pub frobenius_compatible: bool,
    pub grading_respected: bool,
    pub blocks: Vec<BlockEcho>,
    pub pass: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct HodgeSection {
    pub n: usize,
    pub levels: Vec<LevelEcho>,
    pub hodge_numbers: Vec<usize>,
    pub palindromic: bool,
    pub closure_products: usize,
    pub constants: Vec<ConstantsEcho>,
    pub k_lg: String,
    pub frobenius: FrobeniusSection,
    pub real_structure_transport: &'static str,
}

#[derive(Clone, Debug, Serialize)]
pub struct HiggsStructure {
    pub commuting: bool,
    pub level_raising: bool,
    pub nilpotency: Vec<usize>,
    pub nilpotency_bound: usize,
    pub eta_symmetric: bool,
    pub pass: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct HiggsMember {
    pub point: Vec<String>,
    pub status: String,
    pub structure: Option<HiggsStructure>,
}

#[derive(Clone, Debug, Serialize)]
pub struct TransportEcho {
    pub a: usize,
    pub ratio: String,
    pub expected: String,
    pub ok: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct PairEcho {
    pub i: usize,
    pub j: usize,
    pub vanishes: bool,
    pub max_entry: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct StencilEcho {
    pub point: Vec<String>,
    pub status: String,
    pub pairs: Vec<PairEcho>,
}

#[derive(Clone, Debug, Serialize)]
pub struct PotentialityEcho {
    pub step: String,
    pub stencils: Vec<StencilEcho>,
    pub pass: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct HiggsSection {
    pub directions: Vec<String>,
    pub members: Vec<HiggsMember>,
    pub transport: Vec<TransportEcho>,
    pub potentiality: PotentialityEcho,
}

#[derive(Clone, Debug, Serialize)]
pub struct ExponentEcho {
    pub exponent: String,
    pub angle: String,
    pub multiplicity: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct InvarianceEcho {
    pub invariant_dim: usize,
    pub subring_dim: usize,
    pub sets_equal: bool,
    pub congruence_violations: usize,
    pub realness: &'static str,
}

#[derive(Clone, Debug, Serialize)]
pub struct SpectrumChecksEcho {
    pub congruence_zero_mismatches: usize,
    pub congruence_shifted_mismatches: usize,
    pub exponents_symmetric_c_hat: bool,
    pub exponents_symmetric_n_minus_2: bool,
    pub weighted_degrees_symmetric_c_hat: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct MonodromySection {
    pub spectrum: Vec<ExponentEcho>,
    pub invariant_dim: usize,
    pub invariance: Option<InvarianceEcho>,
    pub checks: Option<SpectrumChecksEcho>,
}

#[derive(Clone, Debug, Serialize)]
pub struct LevelCount {
    pub level: String,
    pub multiplicity: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct SteenbrinkSection {
    pub levels: Vec<LevelCount>,
    pub w_lower_dim: usize,
    pub w_graded_dim: usize,
    pub congruence_holds: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct GammaEcho {
    pub k: u64,
    pub value: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct OscillatorySection {
    pub numeric: bool,
    pub gamma_factors: Vec<GammaEcho>,
}

#[derive(Clone, Debug, Serialize)]
pub struct AnalysisReport {
    pub schema: &'static str,
    pub spec: SpecEcho,
    pub settings: Settings,
    pub milnor: MilnorSection,
    pub residue: ResidueSection,
    pub moduli: Option<ModuliSection>,
    pub hodge: Option<HodgeSection>,
    pub higgs: Option<HiggsSection>,
    pub monodromy: MonodromySection,
    pub steenbrink: Option<SteenbrinkSection>,
    pub oscillatory: Option<OscillatorySection>,
    pub checks: Vec<Check>,
    pub pass: bool,
}

fn class_name(k: DeformationKind) -> &'static str {
    match k {
        DeformationKind::Relevant => "relevant",
        DeformationKind::Marginal => "marginal",
        DeformationKind::Irrelevant => "irrelevant",
    }
}

fn echo_spec(spec: &SingularitySpec) -> SpecEcho {
    SpecEcho {
        variables: spec.variables.clone(),
        degree: spec.degree,
        f: spec.render(&spec.f),
        weights: qs(spec.weights.weights()),
        deformations: spec
            .deformations
            .iter()
            .zip(&spec.deformation_classes)
            .map(|(p, c)| DeformationEcho {
                polynomial: spec.render(p),
                class: class_name(c.kind),
                parameter_weight: q(&c.parameter_weight),
            })
            .collect(),
        points: spec.points.iter().map(|p| qs(p)).collect(),
    }
}

fn milnor_section(spec: &SingularitySpec, ring: &MilnorRing) -> MilnorSection {
    MilnorSection {
        mu: ring.mu(),
        isolated: true,
        groebner_basis_size: ring.groebner_basis().generators().len(),
        graded_dims: ring
            .graded_dims()
            .iter()
            .map(|(&degree, &dim)| GradedDim { degree, dim })
            .collect(),
        mixed_quadratic_monomial: ring.has_mixed_quadratic_monomial(),
        central_charge: q(&central_charge(&spec.weights)),
        socle_weighted_degree: q(&ring.socle_weighted_degree()),
    }
}

fn residue_section(
    spec: &SingularitySpec,
    ring: &MilnorRing,
    pairing: &ResiduePairing,
    checks: &mut Vec<Check>,
) -> Result<ResidueSection, CliError> {
    let hess = lgcy_core::poly::hessian_determinant(ring.f());
    let value = pairing.grothendieck_residue(&hess)?;
    let mu = Rational::from_integer(ring.mu().into());
    checks.push(Check::new("hessian residue equals mu", q(&mu), q(&value), value == mu));
    let complementary_blocks = if ring.is_homogeneous() {
        let top = pairing.socle_degree();
        let mut blocks = Vec::new();
        for deg_a in 0..=top {
            let g = pairing.gram_block(deg_a, top - deg_a)?;
            let rank = g.matrix.rank();
            blocks.push(GramBlockSummary {
                deg_a,
                deg_b: top - deg_a,
                rows: g.rows.len(),
                cols: g.cols.len(),
                rank,
                nonsingular: g.rows.len() == g.cols.len() && rank == g.rows.len(),
            });
        }
        let good = blocks.iter().filter(|b| b.nonsingular).count();
        checks.push(Check::new(
            "complementary gram blocks nonsingular",
            blocks.len(),
            good,
            good == blocks.len(),
        ));
        Some(blocks)
    } else {
        None
    };
    Ok(ResidueSection {
        normalization: NORMALIZATION,
        socle_monomial: spec.render(&Polynomial::monomial(pairing.socle_monomial().clone())),
        hessian_class: spec.render(pairing.hessian_class()),
        hessian_residue: q(&value),
        complementary_blocks,
    })
}

fn moduli_section(ring: &MilnorRing, checks: &mut Vec<Check>) -> Result<Option<ModuliSection>, CliError> {
    let (Some(d), true) = (ring.degree(), ring.nvars() >= 3) else {
        return Ok(None);
    };
    let m = moduli_numbers(ring.nvars() as u32 - 2, d, ring)?;
    let annotation = m
        .complex_deformation_dim
        .map(|c| format!("{} vs complex {c}", m.marginal_dim));
    checks.push(Check::new(
        "moduli formula equals marginal dimension",
        &m.formula,
        m.marginal_dim,
        m.matches,
    ));
    Ok(Some(ModuliSection {
        n: m.n,
        d: m.d,
        formula: m.formula.to_string(),
        marginal_dim: m.marginal_dim,
        matches: m.matches,
        k3_exception: m.k3_exception,
        annotation,
    }))
}

fn hodge_section(sub: &GradedSubring, opts: &Options, checks: &mut Vec<Check>) -> Result<HodgeSection, CliError> {
    let n = sub.n();
    let hn = hodge_numbers(sub);
    checks.push(Check::new(
        "hodge numbers palindromic",
        "palindromic",
        format!("{:?}", hn.values),
        hn.is_palindromic(),
    ));
    let fr = verify_frobenius_isomorphism(
        sub,
        &FrobeniusOptions {
            seed: opts.seed,
            triples: opts.triples,
        },
    )?;
    checks.push(Check::new(
        "frobenius isomorphism",
        "compatible, graded, block scalars i^(a-b) k_ab",
        format!(
            "compatible={} graded={} blocks_ok={}",
            fr.frobenius_compatible,
            fr.grading_respected,
            fr.blocks.iter().all(|b| b.constant && b.matches_prediction)
        ),
        fr.pass,
    ));
    Ok(HodgeSection {
        n,
        levels: (0..=n)
            .map(|a| LevelEcho {
                a,
                bidegree: [n - a, a],
                degree: sub.degree() as u64 * a as u64,
                dim: sub.levels()[a].len(),
            })
            .collect(),
        palindromic: hn.is_palindromic(),
        hodge_numbers: hn.values,
        closure_products: sub.closure_products(),
        constants: (0..=n)
            .map(|a| ConstantsEcho {
                a,
                b: n - a,
                c_a: q(&c_a(n as u32, a as u32)),
                k_ab: q(&k_ab(a as u32, (n - a) as u32)),
            })
            .collect(),
        k_lg: k_n(n as u32 + 2).to_string(),
        frobenius: FrobeniusSection {
            exhaustive: fr.exhaustive,
            triples_checked: fr.triples_checked,
            seed: fr.seed,
            frobenius_compatible: fr.frobenius_compatible,
            grading_respected: fr.grading_respected,
            blocks: fr
                .blocks
                .iter()
                .map(|b| BlockEcho {
                    a: b.a,
                    b: b.b,
                    scalar: b.scalar.as_ref().map(|s| s.to_string()),
                    constant: b.constant,
                    predicted: b.predicted.to_string(),
                    matches_prediction: b.matches_prediction,
                    r_prime_scalar: b.r_prime_scalar.as_ref().map(|s| s.to_string()),
                    r_prime_power_of_i: b.r_prime_power_of_i,
                })
                .collect(),
            pass: fr.pass,
        },
        real_structure_transport: "unverified",
    })
}

fn stencil_status(s: &StencilStatus) -> String {
    match s {
        StencilStatus::Vacuous => "vacuous".into(),
        StencilStatus::Pass => "pass".into(),
        StencilStatus::Fail => "fail".into(),
        StencilStatus::BasisJump => "basis-jump".into(),
        StencilStatus::Degenerate(p) => format!("degenerate at [{p}]"),
    }
}

fn higgs_section(
    spec: &SingularitySpec,
    sub: &GradedSubring,
    mopts: &MilnorOptions,
    checks: &mut Vec<Check>,
) -> Result<Option<HiggsSection>, CliError> {
    let marginal: Vec<usize> = (0..spec.deformations.len())
        .filter(|&i| spec.deformation_classes[i].kind == DeformationKind::Marginal)
        .collect();
    if marginal.is_empty() {
        return Ok(None);
    }
    let dirs: Vec<Polynomial> = marginal.iter().map(|&i| spec.deformations[i].clone()).collect();
    let restrict = |u: &[Rational]| -> Vec<Rational> { marginal.iter().map(|&i| u[i].clone()).collect() };
    let mut points = vec![spec.origin()];
    points.extend(spec.points.iter().cloned());
    let bound = sub.n() + 1;

    let mut members = Vec::new();
    let mut transport = Vec::new();
    for (idx, u) in points.iter().enumerate() {
        let u = restrict(u);
        let label = format!("higgs structure at u=[{}]", lgcy_core::higgs::format_point(&u));
        match higgs_matrices_with(&spec.f, &dirs, &u, mopts) {
            Ok(h) => {
                let r = verify_higgs_structure(&h)?;
                checks.push(Check::new(
                    label,
                    format!("commuting, level-raising, nilpotent of index <= {bound}, eta-symmetric"),
                    format!(
                        "commuting={} level_raising={} nilpotency={:?} eta_symmetric={}",
                        r.commuting, r.level_raising, r.nilpotency, r.eta_symmetric
                    ),
                    r.pass,
                ));
                if idx == 0 {
                    let t = transported_higgs_check(sub, &h)?;
                    checks.push(Check::new(
                        "transport sign -(a+1)c_(a+1)/c_a = (-1)^a",
                        "all levels",
                        format!("{}/{}", t.levels.iter().filter(|l| l.ok).count(), t.levels.len()),
                        t.pass,
                    ));
                    transport = t
                        .levels
                        .iter()
                        .map(|l| TransportEcho {
                            a: l.a,
                            ratio: q(&l.ratio),
                            expected: q(&l.expected),
                            ok: l.ok,
                        })
                        .collect();
                }
                members.push(HiggsMember {
                    point: qs(&u),
                    status: "ok".into(),
                    structure: Some(HiggsStructure {
                        commuting: r.commuting,
                        level_raising: r.level_raising,
                        nilpotency: r.nilpotency,
                        nilpotency_bound: bound,
                        eta_symmetric: r.eta_symmetric,
                        pass: r.pass,
                    }),
                });
            }
            Err(Error::DegenerateMember(p)) => members.push(HiggsMember {
                point: qs(&u),
                status: format!("degenerate at [{p}]"),
                structure: None,
            }),
            Err(e) => return Err(e.into()),
        }
    }

    let samples: Vec<Vec<Rational>> = points.iter().map(|u| restrict(u)).collect();
    let step = rat(DEFAULT_STEP.0, DEFAULT_STEP.1);
    let pot = potentiality_check_with(&spec.f, &dirs, &samples, &step, mopts)?;
    let failing = pot.entries.iter().filter(|e| e.status == StencilStatus::Fail).count();
    checks.push(Check::new(
        "potentiality stencil antisymmetry vanishes",
        "0 failing stencils",
        format!("{failing} failing stencils"),
        pot.pass(),
    ));
    Ok(Some(HiggsSection {
        directions: dirs.iter().map(|p| spec.render(p)).collect(),
        members,
        transport,
        potentiality: PotentialityEcho {
            step: q(&pot.step),
            pass: pot.pass(),
            stencils: pot
                .entries
                .iter()
                .map(|e| StencilEcho {
                    point: qs(&e.point),
                    status: stencil_status(&e.status),
                    pairs: e
                        .pairs
                        .iter()
                        .map(|p| PairEcho {
                            i: p.i,
                            j: p.j,
                            vanishes: p.vanishes,
                            max_entry: q(&p.max_entry),
                        })
                        .collect(),
                })
                .collect(),
        },
    }))
}

fn monodromy_section(
    ring: &MilnorRing,
    sub: Option<&GradedSubring>,
    checks: &mut Vec<Check>,
) -> Result<MonodromySection, CliError> {
    let s = monodromy_spectrum(ring);
    let mut counts: BTreeMap<Rational, (Rational, usize)> = BTreeMap::new();
    for e in &s.entries {
        counts.entry(e.exponent.clone()).or_insert((e.angle.clone(), 0)).1 += 1;
    }
    let invariance = sub.map(|sub| {
        let r = invariance_realness_report(ring, sub);
        checks.push(Check::new(
            "invariant monomials equal graded subring basis",
            r.subring_dim,
            r.invariant_dim,
            r.sets_equal,
        ));
        InvarianceEcho {
            invariant_dim: r.invariant_dim,
            subring_dim: r.subring_dim,
            sets_equal: r.sets_equal,
            congruence_violations: r.congruence_violations,
            realness: r.realness,
        }
    });
    let spectrum_checks = if ring.is_homogeneous() {
        let c = spectrum_checks(ring)?;
        checks.push(Check::new(
            "invariance iff deg = -N mod d",
            0,
            c.congruence_shifted_mismatches,
            c.congruence_shifted_mismatches == 0,
        ));
        checks.push(Check::new(
            "exponents symmetric under x -> (N-2) - x",
            true,
            c.exponents_symmetric_n_minus_2,
            c.exponents_symmetric_n_minus_2,
        ));
        Some(SpectrumChecksEcho {
            congruence_zero_mismatches: c.congruence_zero_mismatches,
            congruence_shifted_mismatches: c.congruence_shifted_mismatches,
            exponents_symmetric_c_hat: c.exponents_symmetric_c_hat,
            exponents_symmetric_n_minus_2: c.exponents_symmetric_n_minus_2,
            weighted_degrees_symmetric_c_hat: c.weighted_degrees_symmetric_c_hat,
        })
    } else {
        None
    };
    Ok(MonodromySection {
        spectrum: counts
            .into_iter()
            .map(|(e, (angle, multiplicity))| ExponentEcho {
                exponent: q(&e),
                angle: q(&angle),
                multiplicity,
            })
            .collect(),
        invariant_dim: s.invariant_dim(),
        invariance,
        checks: spectrum_checks,
    })
}

fn steenbrink_section(ring: &MilnorRing, checks: &mut Vec<Check>) -> Result<Option<SteenbrinkSection>, CliError> {
    let Some(d) = ring.degree() else {
        return Ok(None);
    };
    let s = steenbrink_levels(ring)?;
    let n = ring.nvars() as u64;
    let congruence_holds = s
        .levels
        .iter()
        .all(|(m, h)| h.is_integer() == (m.degree() + n).is_multiple_of(d as u64));
    checks.push(Check::new(
        "integral level iff deg = -N mod d",
        true,
        congruence_holds,
        congruence_holds,
    ));
    let mut counts: BTreeMap<Rational, usize> = BTreeMap::new();
    for (_, h) in &s.levels {
        *counts.entry(h.clone()).or_default() += 1;
    }
    Ok(Some(SteenbrinkSection {
        levels: counts
            .into_iter()
            .map(|(h, multiplicity)| LevelCount {
                level: q(&h),
                multiplicity,
            })
            .collect(),
        w_lower_dim: s.w_lower_dim,
        w_graded_dim: s.w_graded_dim,
        congruence_holds,
    }))
}

fn oscillatory_section(ring: &MilnorRing) -> Result<Option<OscillatorySection>, CliError> {
    let Some(d) = ring.degree() else {
        return Ok(None);
    };
    let mut gamma_factors = Vec::new();
    for &k in ring.graded_dims().keys() {
        let g = gamma_factor(ring.nvars() as u32, d, k as u32)?;
        gamma_factors.push(GammaEcho { k, value: g.value });
    }
    Ok(Some(OscillatorySection {
        numeric: true,
        gamma_factors,
    }))
}

pub fn analyze(spec: &SingularitySpec, opts: &Options, oscillatory: bool) -> Result<AnalysisReport, CliError> {
    let mopts = MilnorOptions {
        order: opts.order,
        budget: opts.budget,
    };
    let ring = build_milnor_ring_with(&spec.f, &spec.weights, &mopts)?;
    let mut checks = Vec::new();
    let pairing = ResiduePairing::new(ring.clone())?;
    let residue = residue_section(spec, &ring, &pairing, &mut checks)?;
    let moduli = moduli_section(&ring, &mut checks)?;
    let sub = match graded_subring(&ring) {
        Ok(s) => Some(s),
        Err(Error::NotCalabiYau { .. }) | Err(Error::NotHomogeneous) => None,
        Err(e) => return Err(e.into()),
    };
    let hodge = sub.as_ref().map(|s| hodge_section(s, opts, &mut checks)).transpose()?;
    let higgs = match &sub {
        Some(s) => higgs_section(spec, s, &mopts, &mut checks)?,
        None => None,
    };
    let monodromy = monodromy_section(&ring, sub.as_ref(), &mut checks)?;
    let steenbrink = steenbrink_section(&ring, &mut checks)?;
    let oscillatory = if oscillatory { oscillatory_section(&ring)? } else { None };
    let pass = checks.iter().all(|c| c.pass);
    Ok(AnalysisReport {
        schema: SCHEMA,
        spec: echo_spec(spec),
        settings: Settings {
            order: opts.order.to_string(),
            budget: opts.budget,
            seed: opts.seed,
            triples: opts.triples,
        },
        milnor: milnor_section(spec, &ring),
        residue,
        moduli,
        hodge,
        higgs,
        monodromy,
        steenbrink,
        oscillatory,
        checks,
        pass,
    })
}
