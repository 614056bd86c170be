//! Buchberger's algorithm over ℚ with the normal selection strategy and both
//! of Buchberger's pair-elimination criteria.

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashSet};

use num_traits::{One, Zero};

use super::order::MonomialOrder;
use crate::error::{Error, Result};
use crate::poly::{Monomial, Polynomial};
use crate::scalar::Rational;

pub const DEFAULT_BUDGET: usize = 200_000;

/// Polynomial as a term list sorted ascending in a fixed monomial order;
/// the leading term is the last entry.
#[derive(Clone, Debug)]
pub(crate) struct OrderedPoly {
    terms: Vec<(Monomial, Rational)>,
}

impl OrderedPoly {
    pub(crate) fn from_poly(p: &Polynomial, order: &MonomialOrder) -> Self {
        let mut terms: Vec<(Monomial, Rational)> = p.terms().map(|(m, c)| (m.clone(), c.clone())).collect();
        terms.sort_by(|a, b| order.cmp(&a.0, &b.0));
        Self { terms }
    }

    pub(crate) fn to_poly(&self, nvars: usize) -> Polynomial {
        Polynomial::from_terms(nvars, self.terms.iter().cloned())
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn lead(&self) -> &(Monomial, Rational) {
        self.terms.last().expect("nonzero polynomial")
    }

    fn lm(&self) -> &Monomial {
        &self.lead().0
    }

    fn make_monic(&mut self) {
        let lc = self.lead().1.clone();
        if !lc.is_one() {
            for t in &mut self.terms {
                t.1 /= &lc;
            }
        }
    }

    /// `self - c * shift * g`, with every product term kept in order.
    fn sub_scaled(&self, c: &Rational, shift: &Monomial, g: &OrderedPoly, order: &MonomialOrder) -> OrderedPoly {
        let mut out = Vec::with_capacity(self.terms.len() + g.terms.len());
        let mut a = self.terms.iter().peekable();
        let mut b = g.terms.iter().map(|(m, gc)| (m.mul(shift), gc)).peekable();
        loop {
            let ord = match (a.peek(), b.peek()) {
                (None, None) => break,
                (Some(_), None) => Ordering::Less,
                (None, Some(_)) => Ordering::Greater,
                (Some(x), Some(y)) => order.cmp(&x.0, &y.0),
            };
            match ord {
                Ordering::Less => out.push(a.next().unwrap().clone()),
                Ordering::Greater => {
                    let (m, gc) = b.next().unwrap();
                    out.push((m, -(c * gc)));
                }
                Ordering::Equal => {
                    let (m, ac) = a.next().unwrap();
                    let (_, gc) = b.next().unwrap();
                    let v = ac - c * gc;
                    if !v.is_zero() {
                        out.push((m.clone(), v));
                    }
                }
            }
        }
        OrderedPoly { terms: out }
    }
}

/// Full reduction of `p` by a set of monic polynomials with leading monomials `lms`.
pub(crate) fn reduce_full(p: OrderedPoly, basis: &[OrderedPoly], lms: &[Monomial], order: &MonomialOrder) -> OrderedPoly {
    let mut work = p;
    let mut rem: Vec<(Monomial, Rational)> = Vec::new();
    while let Some((m, c)) = work.terms.last() {
        let hit = lms.iter().position(|l| l.divides(m));
        match hit {
            Some(i) => {
                let shift = lms[i].div_into(m).expect("divides");
                let c = c.clone();
                work = work.sub_scaled(&c, &shift, &basis[i], order);
            }
            None => rem.push(work.terms.pop().unwrap()),
        }
    }
    rem.reverse();
    OrderedPoly { terms: rem }
}

/// Reduced Gröbner basis: monic, auto-reduced, sorted ascending by leading monomial.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    nvars: usize,
    order: MonomialOrder,
    source: Vec<Polynomial>,
    basis: Vec<OrderedPoly>,
    lms: Vec<Monomial>,
    generators: Vec<Polynomial>,
    reductions: usize,
}

impl GroebnerBasis {
    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn leading_monomials(&self) -> &[Monomial] {
        &self.lms
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn source(&self) -> &[Polynomial] {
        &self.source
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// Number of S-pair reductions Buchberger performed.
    pub fn reductions(&self) -> usize {
        self.reductions
    }

    pub fn is_standard(&self, m: &Monomial) -> bool {
        !self.lms.iter().any(|l| l.divides(m))
    }

    /// Checks that every S-polynomial of the basis reduces to zero.
    pub fn satisfies_buchberger_criterion(&self) -> bool {
        for i in 0..self.basis.len() {
            for j in (i + 1)..self.basis.len() {
                let s = s_polynomial(&self.basis[i], &self.basis[j], &self.order);
                if !reduce_full(s, &self.basis, &self.lms, &self.order).is_zero() {
                    return false;
                }
            }
        }
        true
    }

    /// True when no term of any generator is divisible by another generator's leading monomial.
    pub fn is_auto_reduced(&self) -> bool {
        self.basis.iter().enumerate().all(|(i, g)| {
            g.terms
                .iter()
                .all(|(m, _)| self.lms.iter().enumerate().all(|(j, l)| j == i || !l.divides(m)))
        })
    }
}

fn s_polynomial(f: &OrderedPoly, g: &OrderedPoly, order: &MonomialOrder) -> OrderedPoly {
    let l = f.lm().lcm(g.lm());
    let sf = f.lm().div_into(&l).unwrap();
    let sg = g.lm().div_into(&l).unwrap();
    // both monic: s = sf*f - sg*g
    let zero = OrderedPoly { terms: Vec::new() };
    let a = zero.sub_scaled(&-Rational::one(), &sf, f, order);
    a.sub_scaled(&Rational::one(), &sg, g, order)
}

pub fn groebner(generators: &[Polynomial], order: &MonomialOrder) -> Result<GroebnerBasis> {
    groebner_with_budget(generators, order, DEFAULT_BUDGET)
}

pub fn groebner_with_budget(generators: &[Polynomial], order: &MonomialOrder, budget: usize) -> Result<GroebnerBasis> {
    let nvars = generators
        .first()
        .map(Polynomial::nvars)
        .ok_or_else(|| Error::InvalidInput("empty generator list".into()))?;
    if generators.iter().any(|g| g.nvars() != nvars) || order.nvars() != nvars {
        return Err(Error::InvalidInput("variable counts disagree".into()));
    }

    let mut basis: Vec<OrderedPoly> = Vec::new();
    let mut lms: Vec<Monomial> = Vec::new();
    let mut pending: BTreeSet<(Vec<i64>, usize, usize)> = BTreeSet::new();
    let mut pending_set: HashSet<(usize, usize)> = HashSet::new();
    let mut reductions = 0usize;

    let add = |p: OrderedPoly,
                   basis: &mut Vec<OrderedPoly>,
                   lms: &mut Vec<Monomial>,
                   pending: &mut BTreeSet<(Vec<i64>, usize, usize)>,
                   pending_set: &mut HashSet<(usize, usize)>| {
        let k = basis.len();
        for (i, lm) in lms.iter().enumerate() {
            let l = lm.lcm(p.lm());
            pending.insert((order.sort_key(&l), i, k));
            pending_set.insert((i, k));
        }
        lms.push(p.lm().clone());
        basis.push(p);
    };

    for g in generators {
        let mut p = reduce_full(OrderedPoly::from_poly(g, order), &basis, &lms, order);
        if !p.is_zero() {
            p.make_monic();
            add(p, &mut basis, &mut lms, &mut pending, &mut pending_set);
        }
    }

    while let Some(entry) = pending.pop_first() {
        let (_, i, j) = entry;
        pending_set.remove(&(i, j));
        if lms[i].coprime(&lms[j]) {
            continue;
        }
        let l = lms[i].lcm(&lms[j]);
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && lms[k].divides(&l)
                && !pending_set.contains(&(i.min(k), i.max(k)))
                && !pending_set.contains(&(j.min(k), j.max(k)))
        });
        if chain {
            continue;
        }
        reductions += 1;
        if reductions > budget {
            return Err(Error::BudgetExceeded { budget });
        }
        let s = s_polynomial(&basis[i], &basis[j], order);
        let mut r = reduce_full(s, &basis, &lms, order);
        if !r.is_zero() {
            r.make_monic();
            add(r, &mut basis, &mut lms, &mut pending, &mut pending_set);
        }
    }

    // minimal basis, then tail-reduce each element against the others
    let mut idx: Vec<usize> = (0..basis.len()).collect();
    idx.sort_by(|&a, &b| order.cmp(&lms[a], &lms[b]).then(a.cmp(&b)));
    let mut kept: Vec<usize> = Vec::new();
    for i in idx {
        if !kept.iter().any(|&k| lms[k].divides(&lms[i])) {
            kept.push(i);
        }
    }
    let min_basis: Vec<OrderedPoly> = kept.iter().map(|&i| basis[i].clone()).collect();
    let min_lms: Vec<Monomial> = kept.iter().map(|&i| lms[i].clone()).collect();
    let mut reduced = Vec::with_capacity(min_basis.len());
    for (i, g) in min_basis.iter().enumerate() {
        let others: Vec<OrderedPoly> = min_basis
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, h)| h.clone())
            .collect();
        let other_lms: Vec<Monomial> = min_lms
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, m)| m.clone())
            .collect();
        let mut tail = g.clone();
        let lead = tail.terms.pop().unwrap();
        let mut r = reduce_full(tail, &others, &other_lms, order);
        r.terms.push(lead);
        reduced.push(r);
    }

    let generators_out = reduced.iter().map(|g| g.to_poly(nvars)).collect();
    Ok(GroebnerBasis {
        nvars,
        order: order.clone(),
        source: generators.to_vec(),
        lms: min_lms,
        basis: reduced,
        generators: generators_out,
        reductions,
    })
}

/// Remainder of `p` on full reduction by the basis.
pub fn normal_form(p: &Polynomial, gb: &GroebnerBasis) -> Polynomial {
    assert_eq!(p.nvars(), gb.nvars, "variable count mismatch");
    if gb.basis.is_empty() {
        return p.clone();
    }
    let op = OrderedPoly::from_poly(p, &gb.order);
    reduce_full(op, &gb.basis, &gb.lms, &gb.order).to_poly(gb.nvars)
}

/// True when `p` lies in the ideal.
pub fn ideal_contains(gb: &GroebnerBasis, p: &Polynomial) -> bool {
    normal_form(p, gb).is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::OrderKind;
    use crate::poly::parse_polynomial;

    fn polys(src: &[&str], vars: &[&str]) -> Vec<Polynomial> {
        src.iter().map(|s| parse_polynomial(s, vars).unwrap()).collect()
    }

    const Q5: [&str; 5] = ["z0", "z1", "z2", "z3", "z4"];

    #[test]
    fn fermat_quintic_jacobian_is_already_a_basis() {
        let gens = polys(&["5*z0^4", "5*z1^4", "5*z2^4", "5*z3^4", "5*z4^4"], &Q5);
        let gb = groebner(&gens, &MonomialOrder::grevlex(5)).unwrap();
        let mut got: Vec<String> = gb.generators().iter().map(|g| g.to_string()).collect();
        got.sort();
        assert_eq!(got, vec!["z0^4", "z1^4", "z2^4", "z3^4", "z4^4"]);
        assert!(gb.satisfies_buchberger_criterion());
    }

    #[test]
    fn single_linear_generator() {
        let gb = groebner(&polys(&["x"], &["x"]), &MonomialOrder::grevlex(1)).unwrap();
        assert_eq!(gb.generators().len(), 1);
        assert_eq!(gb.generators()[0].to_string(), "z0");
    }

    #[test]
    fn normal_forms_in_fermat_rings() {
        let gens = polys(&["5*z0^4", "5*z1^4", "5*z2^4", "5*z3^4", "5*z4^4"], &Q5);
        let gb = groebner(&gens, &MonomialOrder::grevlex(5)).unwrap();
        let p = |s: &str| parse_polynomial(s, &Q5).unwrap();
        assert!(normal_form(&p("z0^4"), &gb).is_zero());
        assert_eq!(normal_form(&p("z0^3"), &gb), p("z0^3"));

        let v = ["x", "y"];
        let gb2 = groebner(&polys(&["3*x^2", "3*y^2"], &v), &MonomialOrder::grevlex(2)).unwrap();
        assert!(normal_form(&parse_polynomial("x^2*y^2", &v).unwrap(), &gb2).is_zero());
    }

    #[test]
    fn textbook_basis() {
        // <x^2 - y, x^3 - x> under lex x > y: reduced basis {x*y - x, x^2 - y, y^2 - y}
        let v = ["x", "y"];
        let gb = groebner(&polys(&["x^2 - y", "x^3 - x"], &v), &MonomialOrder::new(OrderKind::Lex, 2)).unwrap();
        let mut got: Vec<String> = gb.generators().iter().map(|g| g.to_string_with(&["x".into(), "y".into()])).collect();
        got.sort();
        assert_eq!(got, vec!["x*y - x", "x^2 - y", "y^2 - y"]);
        assert!(gb.satisfies_buchberger_criterion());
        assert!(gb.is_auto_reduced());
    }

    #[test]
    fn budget_is_enforced() {
        let v = ["x", "y", "z"];
        let gens = polys(&["x^3 + y^3 + x*y*z", "x^2*y - z^3", "x*z^2 - y^2"], &v);
        let err = groebner_with_budget(&gens, &MonomialOrder::grevlex(3), 1).unwrap_err();
        assert_eq!(err, Error::BudgetExceeded { budget: 1 });
    }

    #[test]
    fn rejects_empty_input() {
        assert!(groebner(&[], &MonomialOrder::grevlex(1)).is_err());
    }
}
