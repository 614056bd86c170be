//! The graded subring `⊕_a R_f^{d·a}` of a Calabi–Yau Milnor ring, the
//! constants relating residues of rational forms to Hodge pieces, and an exact
//! verifier for the Frobenius-algebra transport.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::milnor::MilnorRing;
use crate::poly::{Monomial, Polynomial};
use crate::residue::ResiduePairing;
use crate::scalar::{factorial, sign_pow, GaussRational, Rational};

pub const DEFAULT_SEED: u64 = 0x5EED;
pub const DEFAULT_TRIPLES: usize = 500;
/// Levels larger than this switch the Frobenius check to sampled triples.
pub const EXHAUSTIVE_LEVEL_LIMIT: usize = 30;

#[derive(Clone, Debug)]
pub struct GradedSubring {
    pairing: ResiduePairing,
    degree: u32,
    levels: Vec<Vec<Monomial>>,
    closure_products: usize,
}

/// Extracts the levels `R_f^{d·a}`, `a = 0..=N−2`, and checks closure under
/// multiplication.
pub fn graded_subring(milnor: &MilnorRing) -> Result<GradedSubring> {
    let d = milnor.degree().ok_or(Error::NotHomogeneous)?;
    if d as usize != milnor.nvars() {
        return Err(Error::NotCalabiYau {
            degree: d,
            nvars: milnor.nvars(),
        });
    }
    let n = milnor.nvars() - 2;
    let levels: Vec<Vec<Monomial>> = (0..=n).map(|a| milnor.basis_in_degree((d as usize * a) as u64)).collect();
    let pairing = ResiduePairing::new(milnor.clone())?;
    let mut sub = GradedSubring {
        pairing,
        degree: d,
        levels,
        closure_products: 0,
    };
    sub.closure_products = sub.check_closure()?;
    Ok(sub)
}

impl GradedSubring {
    pub fn milnor(&self) -> &MilnorRing {
        self.pairing.milnor()
    }

    pub fn pairing(&self) -> &ResiduePairing {
        &self.pairing
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    /// Hypersurface dimension `n = N − 2`.
    pub fn n(&self) -> usize {
        self.levels.len() - 1
    }

    pub fn levels(&self) -> &[Vec<Monomial>] {
        &self.levels
    }

    pub fn level_dims(&self) -> Vec<usize> {
        self.levels.iter().map(Vec::len).collect()
    }

    pub fn dim(&self) -> usize {
        self.levels.iter().map(Vec::len).sum()
    }

    /// Hodge bigrade `(n − a, a)` of level `a`.
    pub fn bigrade(&self, a: usize) -> (usize, usize) {
        (self.n() - a, a)
    }

    /// Flattened basis in level order, with the offset of every level.
    pub fn flat_basis(&self) -> (Vec<Monomial>, Vec<usize>) {
        let mut offsets = Vec::with_capacity(self.levels.len() + 1);
        let mut out = Vec::new();
        for lvl in &self.levels {
            offsets.push(out.len());
            out.extend(lvl.iter().cloned());
        }
        offsets.push(out.len());
        (out, offsets)
    }

    pub fn closure_products(&self) -> usize {
        self.closure_products
    }

    fn level_degree(&self, a: usize) -> u64 {
        self.degree as u64 * a as u64
    }

    fn check_level(&self, a: usize, p: &Polynomial) -> Result<()> {
        let deg = self.level_degree(a);
        if p.monomials().any(|m| m.degree() != deg) {
            return Err(Error::InvalidInput(format!("element is not in level {a}")));
        }
        Ok(())
    }

    // Every product landing at or below the top level must normal-reduce into
    // the span of the target level. Products above the top level have degree
    // past the socle, where no standard monomial exists.
    fn check_closure(&self) -> Result<usize> {
        let n = self.n();
        let mut seen: HashMap<Monomial, ()> = HashMap::new();
        for a in 0..=n {
            for b in a..=(n - a) {
                let target = self.level_degree(a + b);
                for x in &self.levels[a] {
                    for y in &self.levels[b] {
                        let m = x.mul(y);
                        if seen.insert(m.clone(), ()).is_some() {
                            continue;
                        }
                        let nf = self.milnor().normal_form(&Polynomial::monomial(m));
                        if nf.monomials().any(|t| t.degree() != target) {
                            return Err(Error::Internal("graded subring not closed under multiplication".into()));
                        }
                    }
                }
            }
        }
        for deg in (self.pairing.socle_degree() + 1)..=(self.level_degree(2 * n)) {
            if self.milnor().graded_dim(deg) != 0 {
                return Err(Error::Internal("standard monomials above the socle".into()));
            }
        }
        Ok(seen.len())
    }

    /// Class `[AB]` in level `a + b`, or zero past the top level.
    pub fn yukawa_product(&self, a: usize, x: &Polynomial, b: usize, y: &Polynomial) -> Result<(usize, Polynomial)> {
        self.check_level(a, x)?;
        self.check_level(b, y)?;
        let prod = self.milnor().multiply(x, y);
        if a + b > self.n() {
            if !prod.is_zero() {
                return Err(Error::Internal("product past the top level is not in the ideal".into()));
            }
            return Ok((a + b, prod));
        }
        self.check_level(a + b, &prod)?;
        Ok((a + b, prod))
    }

    /// `i^{a−b} · k_ab · Res(A, B)` for `a + b = n`, zero otherwise.
    pub fn cy_pairing(&self, a: usize, x: &Polynomial, b: usize, y: &Polynomial) -> Result<GaussRational> {
        self.check_level(a, x)?;
        self.check_level(b, y)?;
        if a + b != self.n() {
            return Ok(GaussRational::zero());
        }
        let res = self.pairing.residue_pairing(x, y)?;
        let k = k_ab(a as u32, b as u32);
        Ok(GaussRational::i_pow(a as i64 - b as i64).scale(&(k * res)))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HodgeNumbers {
    /// `h^{n−a,a}_prim` for `a = 0..=n`.
    pub values: Vec<usize>,
}

impl HodgeNumbers {
    pub fn is_palindromic(&self) -> bool {
        self.values.iter().eq(self.values.iter().rev())
    }

    pub fn total(&self) -> usize {
        self.values.iter().sum()
    }
}

pub fn hodge_numbers(sub: &GradedSubring) -> HodgeNumbers {
    HodgeNumbers {
        values: sub.level_dims(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BridgeConstants {
    pub c_a: Rational,
    pub k_ab: Rational,
    pub k_n: GaussRational,
}

/// `c_a = (−1)^{n + a(a+1)/2} / a!`.
pub fn c_a(n: u32, a: u32) -> Rational {
    let e = n as i64 + (a as i64 * (a as i64 + 1)) / 2;
    Rational::new(BigInt::from(sign_pow(e)), factorial(a))
}

/// `k_ab = (−1)^{(a(a−1) + b(b−1))/2 + b²} / (a! b!)`.
pub fn k_ab(a: u32, b: u32) -> Rational {
    let (a_, b_) = (a as i64, b as i64);
    let e = (a_ * (a_ - 1) + b_ * (b_ - 1)) / 2 + b_ * b_;
    Rational::new(BigInt::from(sign_pow(e)), factorial(a) * factorial(b))
}

/// `k_n = (−1)^{n(n−1)/2} iⁿ / 2ⁿ`.
pub fn k_n(n: u32) -> GaussRational {
    let n_ = n as i64;
    let sign = sign_pow(n_ * (n_ - 1) / 2);
    let scale = Rational::new(BigInt::from(sign), BigInt::from(2).pow(n));
    GaussRational::i_pow(n_).scale(&scale)
}

pub fn bridge_constants(n: u32, a: u32, b: u32) -> BridgeConstants {
    BridgeConstants {
        c_a: c_a(n, a),
        k_ab: k_ab(a, b),
        k_n: k_n(n),
    }
}

/// Transport scalar of one bidegree block `(a, b)` with `a + b = n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockScalar {
    pub a: usize,
    pub b: usize,
    /// Solved ratio `η^CY / Res` in the `r` frame; `None` if the block is empty or all-zero.
    pub scalar: Option<GaussRational>,
    /// The ratio is the same for every basis pair and `η^CY` vanishes where `Res` does.
    pub constant: bool,
    /// `i^{a−b} k_ab` from the closed form.
    pub predicted: GaussRational,
    pub matches_prediction: bool,
    /// `scalar / (c_a c_b)`, the ratio in the normalized `r′ = c_a^{-1} r` frame.
    pub r_prime_scalar: Option<GaussRational>,
    /// `p` with `r_prime_scalar = i^p`, when it is a unit power of `i`.
    pub r_prime_power_of_i: Option<u8>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrobeniusReport {
    pub exhaustive: bool,
    pub triples_checked: usize,
    pub seed: u64,
    /// `Res(A*B, C) = Res(A, B*C)` on every checked triple.
    pub frobenius_compatible: bool,
    /// Every checked product landed in the expected level.
    pub grading_respected: bool,
    pub blocks: Vec<BlockScalar>,
    /// `k_N` with `N = n + 2`, the LG pairing constant.
    pub k_lg: GaussRational,
    pub pass: bool,
}

#[derive(Clone, Copy, Debug)]
pub struct FrobeniusOptions {
    pub seed: u64,
    pub triples: usize,
}

impl Default for FrobeniusOptions {
    fn default() -> Self {
        Self {
            seed: DEFAULT_SEED,
            triples: DEFAULT_TRIPLES,
        }
    }
}

pub fn verify_frobenius_isomorphism(sub: &GradedSubring, opts: &FrobeniusOptions) -> Result<FrobeniusReport> {
    let n = sub.n();
    let (flat, offsets) = sub.flat_basis();
    let level_of = |idx: usize| offsets.iter().rposition(|&o| o <= idx).unwrap().min(n);
    let exhaustive = sub.level_dims().iter().all(|&d| d <= EXHAUSTIVE_LEVEL_LIMIT);

    let triples: Vec<(usize, usize, usize)> = if exhaustive {
        let dim = flat.len();
        (0..dim)
            .flat_map(|i| (0..dim).flat_map(move |j| (0..dim).map(move |k| (i, j, k))))
            .collect()
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
        (0..opts.triples)
            .map(|_| {
                (
                    rng.random_range(0..flat.len()),
                    rng.random_range(0..flat.len()),
                    rng.random_range(0..flat.len()),
                )
            })
            .collect()
    };

    let mut frobenius_compatible = true;
    let mut grading_respected = true;
    let pairing = sub.pairing();
    for &(i, j, k) in &triples {
        let (la, lb, lc) = (level_of(i), level_of(j), level_of(k));
        let (x, y, z) = (
            Polynomial::monomial(flat[i].clone()),
            Polynomial::monomial(flat[j].clone()),
            Polynomial::monomial(flat[k].clone()),
        );
        let xy = sub.yukawa_product(la, &x, lb, &y);
        let yz = sub.yukawa_product(lb, &y, lc, &z);
        let (Ok((_, xy)), Ok((_, yz))) = (xy, yz) else {
            grading_respected = false;
            continue;
        };
        let left = pairing.residue_pairing(&xy, &z)?;
        let right = pairing.residue_pairing(&x, &yz)?;
        if left != right {
            frobenius_compatible = false;
        }
    }

    let mut blocks = Vec::new();
    for a in 0..=n {
        let b = n - a;
        blocks.push(block_scalar(sub, a, b)?);
    }
    let pass = frobenius_compatible
        && grading_respected
        && blocks.iter().all(|blk| blk.constant && blk.matches_prediction);
    Ok(FrobeniusReport {
        exhaustive,
        triples_checked: triples.len(),
        seed: opts.seed,
        frobenius_compatible,
        grading_respected,
        blocks,
        k_lg: k_n(n as u32 + 2),
        pass,
    })
}

fn block_scalar(sub: &GradedSubring, a: usize, b: usize) -> Result<BlockScalar> {
    let n = sub.n() as u32;
    let mut scalar: Option<GaussRational> = None;
    let mut constant = true;
    for x in &sub.levels()[a] {
        for y in &sub.levels()[b] {
            let (px, py) = (Polynomial::monomial(x.clone()), Polynomial::monomial(y.clone()));
            let res = sub.pairing().monomial_pairing(x, y)?;
            let cy = sub.cy_pairing(a, &px, b, &py)?;
            if res.is_zero() {
                constant &= cy.is_zero();
                continue;
            }
            let ratio = cy.scale(&(Rational::one() / res));
            match &scalar {
                None => scalar = Some(ratio),
                Some(s) => constant &= *s == ratio,
            }
        }
    }
    let predicted = GaussRational::i_pow(a as i64 - b as i64).scale(&k_ab(a as u32, b as u32));
    let r_prime_scalar = scalar
        .as_ref()
        .map(|s| s.scale(&(Rational::one() / (c_a(n, a as u32) * c_a(n, b as u32)))));
    let r_prime_power_of_i = r_prime_scalar
        .as_ref()
        .and_then(GaussRational::as_i_power_times_positive)
        .and_then(|(p, r)| r.is_one().then_some(p));
    Ok(BlockScalar {
        a,
        b,
        matches_prediction: scalar.as_ref() == Some(&predicted),
        scalar,
        constant,
        predicted,
        r_prime_scalar,
        r_prime_power_of_i,
    })
}

/// Gram matrix of the residue pairing on the flattened subring basis.
pub fn subring_gram(sub: &GradedSubring) -> Result<Matrix> {
    let (flat, offsets) = sub.flat_basis();
    let n = sub.n();
    let mut g = Matrix::zeros(flat.len(), flat.len());
    for a in 0..=n {
        let b = n - a;
        for (i, x) in sub.levels()[a].iter().enumerate() {
            for (j, y) in sub.levels()[b].iter().enumerate() {
                g.set(offsets[a] + i, offsets[b] + j, sub.pairing().monomial_pairing(x, y)?);
            }
        }
    }
    Ok(g)
}
