use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::poly::Monomial;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OrderKind {
    GrevLex,
    GrLex,
    Lex,
}

/// A monomial order together with a variable priority permutation:
/// `priority[0]` is the most significant variable.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonomialOrder {
    kind: OrderKind,
    priority: Vec<usize>,
}

impl MonomialOrder {
    pub fn new(kind: OrderKind, nvars: usize) -> Self {
        Self {
            kind,
            priority: (0..nvars).collect(),
        }
    }

    pub fn grevlex(nvars: usize) -> Self {
        Self::new(OrderKind::GrevLex, nvars)
    }

    /// Panics unless `priority` is a permutation of `0..len`.
    pub fn with_priority(kind: OrderKind, priority: Vec<usize>) -> Self {
        let mut seen = vec![false; priority.len()];
        for &p in &priority {
            assert!(p < seen.len() && !seen[p], "priority must be a permutation");
            seen[p] = true;
        }
        Self { kind, priority }
    }

    pub fn kind(&self) -> OrderKind {
        self.kind
    }

    pub fn nvars(&self) -> usize {
        self.priority.len()
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let (ea, eb) = (a.exponents(), b.exponents());
        let lex = || {
            for &v in &self.priority {
                if ea[v] != eb[v] {
                    return ea[v].cmp(&eb[v]);
                }
            }
            Ordering::Equal
        };
        match self.kind {
            OrderKind::Lex => lex(),
            OrderKind::GrLex => a.degree().cmp(&b.degree()).then_with(lex),
            OrderKind::GrevLex => a.degree().cmp(&b.degree()).then_with(|| {
                for &v in self.priority.iter().rev() {
                    if ea[v] != eb[v] {
                        return eb[v].cmp(&ea[v]);
                    }
                }
                Ordering::Equal
            }),
        }
    }

    /// A key whose lexicographic order coincides with this monomial order.
    pub(crate) fn sort_key(&self, m: &Monomial) -> Vec<i64> {
        let e = m.exponents();
        let mut key = Vec::with_capacity(e.len() + 1);
        match self.kind {
            OrderKind::Lex => key.extend(self.priority.iter().map(|&v| e[v] as i64)),
            OrderKind::GrLex => {
                key.push(m.degree() as i64);
                key.extend(self.priority.iter().map(|&v| e[v] as i64));
            }
            OrderKind::GrevLex => {
                key.push(m.degree() as i64);
                key.extend(self.priority.iter().rev().map(|&v| -(e[v] as i64)));
            }
        }
        key
    }
}

impl fmt::Display for OrderKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OrderKind::GrevLex => "grevlex",
            OrderKind::GrLex => "grlex",
            OrderKind::Lex => "lex",
        })
    }
}

impl FromStr for OrderKind {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "grevlex" => Ok(OrderKind::GrevLex),
            "grlex" | "deglex" => Ok(OrderKind::GrLex),
            "lex" => Ok(OrderKind::Lex),
            other => Err(format!("unknown monomial order '{other}'")),
        }
    }
}
