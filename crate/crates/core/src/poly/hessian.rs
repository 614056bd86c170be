use std::collections::HashMap;

use super::Polynomial;

/// Determinant of the matrix of second partial derivatives.
///
/// Laplace expansion along rows, memoized on the set of remaining columns,
/// so the cost is `O(N 2^N)` polynomial products.
pub fn hessian_determinant(f: &Polynomial) -> Polynomial {
    let n = f.nvars();
    if n == 0 {
        return Polynomial::one(0);
    }
    let first: Vec<Polynomial> = (0..n).map(|i| f.derivative(i)).collect();
    let h: Vec<Vec<Polynomial>> = (0..n)
        .map(|i| (0..n).map(|j| first[i].derivative(j)).collect())
        .collect();
    determinant(&h)
}

pub fn determinant(m: &[Vec<Polynomial>]) -> Polynomial {
    let n = m.len();
    let nvars = m.first().map(|r| r[0].nvars()).unwrap_or(0);
    let mut memo: HashMap<u64, Polynomial> = HashMap::new();
    minor(m, 0, (1u64 << n) - 1, nvars, &mut memo)
}

// Determinant of rows row..n restricted to the columns in `cols`.
fn minor(m: &[Vec<Polynomial>], row: usize, cols: u64, nvars: usize, memo: &mut HashMap<u64, Polynomial>) -> Polynomial {
    if row == m.len() {
        return Polynomial::one(nvars);
    }
    if let Some(p) = memo.get(&cols) {
        return p.clone();
    }
    let mut acc = Polynomial::zero(nvars);
    let mut sign_neg = false;
    for c in 0..m.len() {
        if cols & (1 << c) == 0 {
            continue;
        }
        if !m[row][c].is_zero() {
            let sub = minor(m, row + 1, cols & !(1 << c), nvars, memo);
            let t = &m[row][c] * &sub;
            acc = if sign_neg { &acc - &t } else { &acc + &t };
        }
        sign_neg = !sign_neg;
    }
    memo.insert(cols, acc.clone());
    acc
}
