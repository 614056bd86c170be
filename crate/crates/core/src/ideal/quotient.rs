use std::collections::BTreeMap;

use super::groebner::GroebnerBasis;
use crate::error::{Error, Result};
use crate::poly::Monomial;

/// Standard monomials of a quotient ring, ascending in graded reverse
/// lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientBasis {
    monomials: Vec<Monomial>,
    finite: bool,
}

impl QuotientBasis {
    pub fn monomials(&self) -> &[Monomial] {
        &self.monomials
    }

    pub fn is_finite(&self) -> bool {
        self.finite
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn index_of(&self, m: &Monomial) -> Option<usize> {
        self.monomials.binary_search(m).ok()
    }
}

/// True iff every variable has a pure power among the leading monomials.
pub fn quotient_is_finite(gb: &GroebnerBasis) -> bool {
    let mut covered = vec![false; gb.nvars()];
    for m in gb.leading_monomials() {
        if let Some(v) = m.pure_power_var() {
            covered[v] = true;
        }
        if m.is_one() {
            return true;
        }
    }
    covered.iter().all(|&c| c)
}

pub fn standard_monomials(gb: &GroebnerBasis, degree_cap: Option<u64>) -> Result<QuotientBasis> {
    let finite = quotient_is_finite(gb);
    if !finite && degree_cap.is_none() {
        return Err(Error::InfiniteQuotient);
    }
    let lms = gb.leading_monomials();
    let n = gb.nvars();
    let mut out = Vec::new();
    let mut exps = vec![0u32; n];
    enumerate(0, 0, degree_cap, lms, &mut exps, &mut out);
    out.sort();
    Ok(QuotientBasis { monomials: out, finite })
}

// Walks exponent vectors variable by variable; divisibility is monotone in
// each exponent, so the first divisible value ends the loop.
fn enumerate(var: usize, deg: u64, cap: Option<u64>, lms: &[Monomial], exps: &mut Vec<u32>, out: &mut Vec<Monomial>) {
    if var == exps.len() {
        out.push(Monomial::new(exps.clone()));
        return;
    }
    let mut e = 0u32;
    loop {
        if cap.is_some_and(|c| deg + e as u64 > c) {
            break;
        }
        exps[var] = e;
        let partial = Monomial::new(exps.clone());
        if lms.iter().any(|l| l.divides(&partial)) {
            break;
        }
        enumerate(var + 1, deg + e as u64, cap, lms, exps, out);
        e += 1;
    }
    exps[var] = 0;
}

/// Count of standard monomials per total degree.
pub fn graded_dimensions(qb: &QuotientBasis) -> BTreeMap<u64, usize> {
    let mut dims = BTreeMap::new();
    for m in qb.monomials() {
        *dims.entry(m.degree()).or_insert(0) += 1;
    }
    dims
}
