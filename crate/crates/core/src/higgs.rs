//! Higgs fields of marginal deformation families: multiplication by the
//! deformation directions on the graded subring of `R_{f_u}`.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::hodge::{c_a, graded_subring, subring_gram, GradedSubring};
use crate::linalg::Matrix;
use crate::milnor::{build_milnor_ring_with, classify_deformation, DeformationKind, MilnorOptions};
use crate::poly::{Polynomial, WeightSystem};
use crate::scalar::{fmt_rational, int, sign_pow, Rational};

#[derive(Clone, Debug)]
pub struct HiggsField {
    base: Polynomial,
    directions: Vec<Polynomial>,
    point: Vec<Rational>,
    subring: GradedSubring,
    matrices: Vec<Matrix>,
}

impl HiggsField {
    pub fn base(&self) -> &Polynomial {
        &self.base
    }

    pub fn directions(&self) -> &[Polynomial] {
        &self.directions
    }

    pub fn point(&self) -> &[Rational] {
        &self.point
    }

    /// Graded subring of the deformed ring `R_{f_u}`.
    pub fn subring(&self) -> &GradedSubring {
        &self.subring
    }

    /// `C_i` on the flattened subring basis; column `j` holds the coordinates
    /// of `φ_i · e_j`.
    pub fn matrices(&self) -> &[Matrix] {
        &self.matrices
    }

    /// Block of `C_i` from level `a` to level `a + 1`.
    pub fn block(&self, i: usize, a: usize) -> Matrix {
        let (_, off) = self.subring.flat_basis();
        let c = &self.matrices[i];
        let rows = off[a + 2] - off[a + 1];
        let cols = off[a + 1] - off[a];
        let mut m = Matrix::zeros(rows, cols);
        for r in 0..rows {
            for col in 0..cols {
                m.set(r, col, c.get(off[a + 1] + r, off[a] + col).clone());
            }
        }
        m
    }
}

pub fn format_point(u: &[Rational]) -> String {
    u.iter().map(fmt_rational).collect::<Vec<_>>().join(",")
}

/// `f + Σ u_i φ_i`.
pub fn deformed(f: &Polynomial, directions: &[Polynomial], u: &[Rational]) -> Polynomial {
    directions
        .iter()
        .zip(u)
        .fold(f.clone(), |acc, (phi, ui)| &acc + &phi.scale(ui))
}

pub fn higgs_matrices(f: &Polynomial, directions: &[Polynomial], u: &[Rational]) -> Result<HiggsField> {
    higgs_matrices_with(f, directions, u, &MilnorOptions::default())
}

pub fn higgs_matrices_with(
    f: &Polynomial,
    directions: &[Polynomial],
    u: &[Rational],
    opts: &MilnorOptions,
) -> Result<HiggsField> {
    if directions.len() != u.len() {
        return Err(Error::InvalidInput("point dimension differs from the number of directions".into()));
    }
    let n_vars = f.nvars();
    let d = f
        .total_degree()
        .filter(|_| f.is_homogeneous())
        .ok_or(Error::NotHomogeneous)? as u32;
    let w = WeightSystem::homogeneous(n_vars, d);
    for (i, phi) in directions.iter().enumerate() {
        match classify_deformation(phi, &w) {
            Ok(c) if c.kind == DeformationKind::Marginal => {}
            _ => return Err(Error::NotMarginal(i)),
        }
    }
    let fu = deformed(f, directions, u);
    let ring = match build_milnor_ring_with(&fu, &w, opts) {
        Ok(r) => r,
        Err(Error::DegenerateSingularity) | Err(Error::NotQuasiHomogeneous) => {
            return Err(Error::DegenerateMember(format_point(u)))
        }
        Err(e) => return Err(e),
    };
    if ring.mu() != (d as usize - 1).pow(n_vars as u32) {
        return Err(Error::DegenerateMember(format_point(u)));
    }
    let subring = graded_subring(&ring)?;
    let (flat, off) = subring.flat_basis();
    let top = subring.n();
    let mut matrices = Vec::with_capacity(directions.len());
    for phi in directions {
        let mut c = Matrix::zeros(flat.len(), flat.len());
        for a in 0..=top {
            for (j, e) in subring.levels()[a].iter().enumerate() {
                let prod = ring.normal_form(&phi.mul_monomial(e));
                if a == top {
                    if !prod.is_zero() {
                        return Err(Error::Internal("top level not annihilated by a marginal direction".into()));
                    }
                    continue;
                }
                for (m, coef) in prod.terms() {
                    let r = subring.levels()[a + 1]
                        .binary_search(m)
                        .map_err(|_| Error::Internal("product left the next level".into()))?;
                    c.set(off[a + 1] + r, off[a] + j, coef.clone());
                }
            }
        }
        matrices.push(c);
    }
    Ok(HiggsField {
        base: f.clone(),
        directions: directions.to_vec(),
        point: u.to_vec(),
        subring,
        matrices,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HiggsReport {
    pub commuting: bool,
    pub level_raising: bool,
    /// Smallest `k` with `C_i^k = 0`, per direction.
    pub nilpotency: Vec<usize>,
    /// Every index is at most `n + 1`.
    pub nilpotency_bounded: bool,
    /// `Res(C_i A, B) = Res(A, C_i B)` on the whole subring basis.
    pub eta_symmetric: bool,
    pub pass: bool,
}

pub fn verify_higgs_structure(h: &HiggsField) -> Result<HiggsReport> {
    let cs = h.matrices();
    let mut commuting = true;
    for i in 0..cs.len() {
        for j in (i + 1)..cs.len() {
            commuting &= cs[i].commutator(&cs[j]).is_zero();
        }
    }
    let (_, off) = h.subring.flat_basis();
    let level_of = |idx: usize| off.iter().rposition(|&o| o <= idx).unwrap();
    let level_raising = cs.iter().all(|c| {
        (0..c.rows()).all(|r| (0..c.cols()).all(|col| c.get(r, col).is_zero() || level_of(r) == level_of(col) + 1))
    });
    let n = h.subring.n();
    let dim = h.subring.dim();
    let nilpotency: Vec<usize> = cs
        .iter()
        .map(|c| c.nilpotency_index(dim + 1).expect("level-raising maps are nilpotent"))
        .collect();
    let nilpotency_bounded = nilpotency.iter().all(|&k| k <= n + 1);
    let g = subring_gram(&h.subring)?;
    let eta_symmetric = cs.iter().all(|c| {
        let ct = transpose(c);
        &ct * &g == &g * c
    });
    Ok(HiggsReport {
        pass: commuting && level_raising && nilpotency_bounded && eta_symmetric,
        commuting,
        level_raising,
        nilpotency,
        nilpotency_bounded,
        eta_symmetric,
    })
}

fn transpose(m: &Matrix) -> Matrix {
    let mut t = Matrix::zeros(m.cols(), m.rows());
    for r in 0..m.rows() {
        for c in 0..m.cols() {
            t.set(c, r, m.get(r, c).clone());
        }
    }
    t
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransportLevel {
    pub a: usize,
    /// `−(a+1) c_{a+1} / c_a`.
    pub ratio: Rational,
    /// `(−1)^a`.
    pub expected: Rational,
    pub ok: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransportReport {
    pub levels: Vec<TransportLevel>,
    pub pass: bool,
}

/// Checks the sign relating `C_i` in the `r` frame to multiplication in the
/// `r′ = c_a^{-1} r` frame.
pub fn transported_higgs_check(sub: &GradedSubring, h: &HiggsField) -> Result<TransportReport> {
    if h.point().iter().any(|x| !x.is_zero()) {
        return Err(Error::InvalidInput("transport check is defined at u = 0".into()));
    }
    let n = sub.n() as u32;
    let levels: Vec<TransportLevel> = (0..n)
        .map(|a| {
            let ratio = -int(a as i64 + 1) * c_a(n, a + 1) / c_a(n, a);
            let expected = int(sign_pow(a as i64));
            TransportLevel {
                a: a as usize,
                ok: ratio == expected,
                ratio,
                expected,
            }
        })
        .collect();
    Ok(TransportReport {
        pass: levels.iter().all(|l| l.ok),
        levels,
    })
}

/// The level-`a` block of direction `i` as seen in the `r′` frame: `(−1)^a` times
/// the multiplication block.
pub fn transported_block(h: &HiggsField, i: usize, a: usize) -> Matrix {
    h.block(i, a).scale(&int(sign_pow(a as i64)))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StencilStatus {
    /// Fewer than two directions.
    Vacuous,
    /// All antisymmetrized differences vanish.
    Pass,
    /// Some antisymmetrized difference is nonzero.
    Fail,
    /// Standard monomials differ between stencil points.
    BasisJump,
    /// A stencil point lies on the discriminant.
    Degenerate(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairDifference {
    pub i: usize,
    pub j: usize,
    /// `Δ_i C_j − Δ_j C_i` vanishes.
    pub vanishes: bool,
    /// Largest entry of the antisymmetrized difference in absolute value.
    pub max_entry: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StencilEntry {
    pub point: Vec<Rational>,
    pub status: StencilStatus,
    pub pairs: Vec<PairDifference>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PotentialityReport {
    pub step: Rational,
    pub entries: Vec<StencilEntry>,
}

impl PotentialityReport {
    /// No stencil failed; skipped (basis jump / degenerate) stencils do not count as failures.
    pub fn pass(&self) -> bool {
        self.entries.iter().all(|e| e.status != StencilStatus::Fail)
    }
}

pub const DEFAULT_STEP: (i64, i64) = (1, 100);

/// Symmetric divided differences `Δ_i C_j(u) = (C_j(u + h e_i) − C_j(u − h e_i)) / 2h`
/// in the standard-monomial frame.
pub fn potentiality_check(
    f: &Polynomial,
    directions: &[Polynomial],
    samples: &[Vec<Rational>],
    step: &Rational,
) -> Result<PotentialityReport> {
    potentiality_check_with(f, directions, samples, step, &MilnorOptions::default())
}

pub fn potentiality_check_with(
    f: &Polynomial,
    directions: &[Polynomial],
    samples: &[Vec<Rational>],
    step: &Rational,
    opts: &MilnorOptions,
) -> Result<PotentialityReport> {
    if step.is_zero() {
        return Err(Error::InvalidInput("stencil step must be nonzero".into()));
    }
    let m = directions.len();
    let mut entries = Vec::new();
    for u in samples {
        if u.len() != m {
            return Err(Error::InvalidInput("point dimension differs from the number of directions".into()));
        }
        if m < 2 {
            entries.push(StencilEntry {
                point: u.clone(),
                status: StencilStatus::Vacuous,
                pairs: Vec::new(),
            });
            continue;
        }
        entries.push(stencil_at(f, directions, u, step, opts)?);
    }
    Ok(PotentialityReport {
        step: step.clone(),
        entries,
    })
}

fn stencil_at(
    f: &Polynomial,
    directions: &[Polynomial],
    u: &[Rational],
    step: &Rational,
    opts: &MilnorOptions,
) -> Result<StencilEntry> {
    let m = directions.len();
    // plus/minus fields along each coordinate direction
    let mut fields: Vec<(HiggsField, HiggsField)> = Vec::with_capacity(m);
    for i in 0..m {
        let mut up = u.to_vec();
        let mut down = u.to_vec();
        up[i] += step;
        down[i] -= step;
        let hp = higgs_matrices_with(f, directions, &up, opts);
        let hm = higgs_matrices_with(f, directions, &down, opts);
        match (hp, hm) {
            (Ok(a), Ok(b)) => fields.push((a, b)),
            (Err(Error::DegenerateMember(p)), _) | (_, Err(Error::DegenerateMember(p))) => {
                return Ok(StencilEntry {
                    point: u.to_vec(),
                    status: StencilStatus::Degenerate(p),
                    pairs: Vec::new(),
                })
            }
            (Err(e), _) | (_, Err(e)) => return Err(e),
        }
    }
    let reference = fields[0].0.subring().flat_basis().0;
    let same_basis = fields
        .iter()
        .all(|(a, b)| a.subring().flat_basis().0 == reference && b.subring().flat_basis().0 == reference);
    if !same_basis {
        return Ok(StencilEntry {
            point: u.to_vec(),
            status: StencilStatus::BasisJump,
            pairs: Vec::new(),
        });
    }
    let two_h = step * int(2);
    let delta = |i: usize, j: usize| -> Matrix {
        let (plus, minus) = &fields[i];
        (&plus.matrices()[j] - &minus.matrices()[j]).scale(&(Rational::from_integer(1.into()) / &two_h))
    };
    let mut pairs = Vec::new();
    for i in 0..m {
        for j in (i + 1)..m {
            let diff = &delta(i, j) - &delta(j, i);
            let mut max_entry = Rational::zero();
            for r in 0..diff.rows() {
                for c in 0..diff.cols() {
                    let v = num_traits::Signed::abs(diff.get(r, c));
                    if v > max_entry {
                        max_entry = v;
                    }
                }
            }
            pairs.push(PairDifference {
                i,
                j,
                vanishes: diff.is_zero(),
                max_entry,
            });
        }
    }
    let status = if pairs.iter().all(|p| p.vanishes) {
        StencilStatus::Pass
    } else {
        StencilStatus::Fail
    };
    Ok(StencilEntry {
        point: u.to_vec(),
        status,
        pairs,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{parse_polynomial, Monomial};
    use crate::scalar::rat;

    fn cubic() -> (Polynomial, Vec<Polynomial>) {
        let v = ["x", "y", "z"];
        (
            parse_polynomial("x^3+y^3+z^3", &v).unwrap(),
            vec![parse_polynomial("x*y*z", &v).unwrap()],
        )
    }

    #[test]
    fn cubic_at_origin() {
        let (f, dirs) = cubic();
        let h = higgs_matrices(&f, &dirs, &[int(0)]).unwrap();
        let c = &h.matrices()[0];
        assert_eq!((c.rows(), c.cols()), (2, 2));
        assert_eq!(c.get(1, 0), &int(1));
        assert!(c.get(0, 0).is_zero() && c.get(0, 1).is_zero() && c.get(1, 1).is_zero());
        let rep = verify_higgs_structure(&h).unwrap();
        assert!(rep.pass);
        assert_eq!(rep.nilpotency, vec![2]);
    }

    #[test]
    fn cubic_deformed_and_degenerate() {
        let (f, dirs) = cubic();
        let h = higgs_matrices(&f, &dirs, &[rat(1, 10)]).unwrap();
        assert!(verify_higgs_structure(&h).unwrap().pass);
        // Hesse pencil x^3+y^3+z^3 + u xyz is singular at u = -3
        assert_eq!(
            higgs_matrices(&f, &dirs, &[int(-3)]).unwrap_err(),
            Error::DegenerateMember("-3".into())
        );
    }

    #[test]
    fn rejects_non_marginal() {
        let (f, _) = cubic();
        let v = ["x", "y", "z"];
        let dirs = vec![parse_polynomial("x*y", &v).unwrap()];
        assert_eq!(higgs_matrices(&f, &dirs, &[int(0)]).unwrap_err(), Error::NotMarginal(0));
    }

    #[test]
    fn transport_signs() {
        let (f, dirs) = cubic();
        let h = higgs_matrices(&f, &dirs, &[int(0)]).unwrap();
        let rep = transported_higgs_check(h.subring(), &h).unwrap();
        assert!(rep.pass);
        assert_eq!(rep.levels.len(), 1);
        assert_eq!(transported_block(&h, 0, 0), h.block(0, 0));
        let h2 = higgs_matrices(&f, &dirs, &[int(1)]).unwrap();
        assert!(transported_higgs_check(h2.subring(), &h2).is_err());
    }

    #[test]
    fn vacuous_potentiality() {
        let (f, dirs) = cubic();
        let rep = potentiality_check(&f, &dirs, &[vec![int(0)], vec![rat(1, 2)]], &rat(1, 100)).unwrap();
        assert!(rep.entries.iter().all(|e| e.status == StencilStatus::Vacuous));
        assert!(rep.pass());
    }

    #[test]
    fn quartic_block_is_coordinate_vector() {
        let v = ["a", "b", "c", "d"];
        let f = parse_polynomial("a^4+b^4+c^4+d^4", &v).unwrap();
        let phi = parse_polynomial("a*b*c*d", &v).unwrap();
        let h = higgs_matrices(&f, &[phi], &[int(0)]).unwrap();
        let blk = h.block(0, 0);
        let lvl1 = &h.subring().levels()[1];
        let idx = lvl1.binary_search(&Monomial::new(vec![1, 1, 1, 1])).unwrap();
        for r in 0..blk.rows() {
            assert_eq!(blk.get(r, 0), &int((r == idx) as i64));
        }
        let rep = verify_higgs_structure(&h).unwrap();
        assert_eq!(rep.nilpotency, vec![3]);
    }
}
